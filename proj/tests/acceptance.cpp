// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Run through ctest or directly; the large-dataset speedup check
// (criterion 8) needs data/mushroom.dat, see tools/fetch_mushroom.sh.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "grecon/errors.hpp"
#include "grecon/grecon2.hpp"
#include "grecon/grecon3.hpp"
#include "grecon/io.hpp"
#include "grecon/oracle.hpp"
#include "grecon/synthetic.hpp"

#include "fixtures.hpp"

using namespace grecon;

namespace {

double now_ms() {
    using namespace std::chrono;
    return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

int failures = 0;

void criterion(int id, const std::string& name, const std::function<std::string()>& body) {
    try {
        std::string detail = body();
        std::cout << "criterion " << id << ": PASS — " << name;
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << '\n';
    } catch (const std::exception& e) {
        ++failures;
        std::cout << "criterion " << id << ": FAIL — " << name << ": " << e.what() << '\n';
    }
}

ConceptStream stream_of(const BooleanMatrix& I) {
    return canonical_stream(enumerate_concepts(I));
}

// The shared random corpus: 210 matrices, m and n in 4..12, three densities.
struct Instance {
    BooleanMatrix matrix;
    std::uint64_t seed;
};

std::vector<Instance> corpus() {
    std::vector<Instance> out;
    for (std::uint64_t seed = 0; seed < 210; ++seed) {
        std::size_t m = 4 + std::size_t(seed % 9);
        std::size_t n = 4 + std::size_t((seed * 5) % 9);
        double density = (seed % 3 == 0) ? 0.2 : (seed % 3 == 1 ? 0.35 : 0.5);
        out.push_back({random_matrix(seed * 31 + 17, m, n, density), seed});
    }
    return out;
}

void check_exactness(const BooleanMatrix& I, const Factorization& f, double eps,
                     const std::string& ctx) {
    BooleanMatrix product =
        bool_product(f.object_factor_matrix(I.rows()), f.factor_attribute_matrix(I.cols()));
    expect(leq(product, I), ctx + ": product not from-below");
    expect(f.covered() + f.error == f.total_ones, ctx + ": coverage accounting broken");
    if (eps == 1.0) {
        expect(f.error == 0, ctx + ": nonzero error at full coverage");
        expect(product == I, ctx + ": product differs from the input at full coverage");
    }
}

std::string fmt_ms(double ms) {
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(ms < 10 ? 3 : 0);
    s << ms << " ms";
    return s.str();
}

}  // namespace

int main() {
    criterion(1, "covers table and cell lists of the worked 3x4 example", [] {
        auto concepts = fixtures::tiny3x4_concepts();
        BooleanMatrix I = fixtures::tiny3x4();
        double best = -1;
        for (int rep = 0; rep < 3; ++rep) {
            double t0 = now_ms();
            Grecon2State state(I, concepts);
            double elapsed = now_ms() - t0;
            if (best < 0 || elapsed < best) best = elapsed;
            expect(state.covers() == std::vector<std::int64_t>{3, 3, 0, 2, 4},
                   "covers mismatch");
            expect(state.cell(0, 2) == std::vector<std::uint32_t>{0, 1, 4},
                   "cell (0,c) list mismatch");
        }
        expect(best < 1.0, "state construction took " + fmt_ms(best));
        return "covers [3,3,0,2,4], cell (0,c) {0,1,4}, " + fmt_ms(best);
    });

    criterion(2, "5x6 block example: product of the given factors equals the input", [] {
        BooleanMatrix product = bool_product(fixtures::blocks_A(), fixtures::blocks_B());
        expect(product == fixtures::blocks5x6(), "product mismatch");
        expect(residual_error(fixtures::blocks5x6(), product) == 0, "nonzero residual");
        return std::string{};
    });

    criterion(3, "closed-form coverage after one and two factors", [] {
        auto c1 = fixtures::wide_c1();
        auto c2 = fixtures::wide_c2();
        auto c3 = fixtures::wide_c3();
        expect(second_factor_coverage(c2, c1) == 8, "coverage of the overlap concept != 8");
        expect(second_factor_coverage(c3, c1) == 4, "coverage of the column concept != 4");

        BooleanMatrix live = fixtures::wide5x7();
        for (const FormalConcept& f : {c1, c2})
            f.extent.for_each([&](std::size_t i) { live.clear_in_row(i, f.intent); });
        std::int64_t truth = 0;
        c3.extent.for_each(
            [&](std::size_t i) { truth += std::int64_t(live.row(i).and_count(c3.intent)); });
        expect(third_factor_coverage(c3, c1, c2) == truth,
               "inclusion-exclusion differs from the brute-force live count");
        return "8, 4, and inclusion-exclusion = " + std::to_string(truth);
    });

    criterion(4, "three-way equivalence on 210 random matrices, eps in {0.75, 1.0}", [] {
        double t0 = now_ms();
        int checked = 0;
        for (const Instance& inst : corpus()) {
            const BooleanMatrix& I = inst.matrix;
            for (double eps : {0.75, 1.0}) {
                Factorization reference = naive_grecon(I, eps);
                Factorization g2 = grecon2_factorize(I, stream_of(I), eps);
                expect(g2.factors == reference.factors && g2.new_coverage == reference.new_coverage,
                       "grecon2 diverges from the reference on seed " +
                           std::to_string(inst.seed));
                for (std::size_t threshold : {std::size_t(0), std::size_t(100)}) {
                    Factorization g3 = grecon3_factorize(I, stream_of(I), eps, threshold);
                    expect(g3.factors == reference.factors &&
                               g3.new_coverage == reference.new_coverage,
                           "grecon3 (threshold " + std::to_string(threshold) +
                               ") diverges on seed " + std::to_string(inst.seed));
                }
                ++checked;
            }
        }
        double elapsed = now_ms() - t0;
        expect(checked == 420, "instance count off");
        expect(elapsed < 60000.0, "suite exceeded 60 s: " + fmt_ms(elapsed));
        return "420 runs, " + fmt_ms(elapsed);
    });

    criterion(5, "enumeration equals the subset-scan oracle on 100+ random matrices", [] {
        auto by_intent = [](std::vector<FormalConcept> v) {
            std::sort(v.begin(), v.end(), [](const FormalConcept& a, const FormalConcept& b) {
                return a.intent.sequence_less(b.intent);
            });
            return v;
        };
        int checked = 0;
        for (std::uint64_t seed = 0; seed < 110; ++seed) {
            std::size_t m = 1 + std::size_t(seed % 15);
            std::size_t n = 1 + std::size_t((seed * 7) % 15);
            double density = (seed % 3 == 0) ? 0.2 : (seed % 3 == 1 ? 0.35 : 0.5);
            BooleanMatrix I = random_matrix(seed, m, n, density);
            expect(by_intent(enumerate_concepts(I)) == by_intent(brute_force_concepts(I)),
                   "mismatch on seed " + std::to_string(seed));
            ++checked;
        }
        expect(enumerate_concepts(fixtures::tiny3x4()).size() == 5,
               "3x4 example must have exactly 5 concepts");
        return std::to_string(checked) + " matrices, n <= 15";
    });

    criterion(6, "from-below everywhere, exact at eps = 1, coverage sums to the ones count", [] {
        for (const Instance& inst : corpus()) {
            const BooleanMatrix& I = inst.matrix;
            std::string ctx = "seed " + std::to_string(inst.seed);
            for (double eps : {0.75, 1.0}) {
                check_exactness(I, naive_grecon(I, eps), eps, ctx + " naive");
                check_exactness(I, grecon2_factorize(I, stream_of(I), eps), eps, ctx + " g2");
                check_exactness(I, grecon3_factorize(I, stream_of(I), eps), eps, ctx + " g3");
            }
        }
        return "420 runs x 3 algorithms";
    });

    criterion(7, "grecon3 appends never exceed grecon2's, strictly fewer past 3 factors", [] {
        int strict = 0;
        for (const Instance& inst : corpus()) {
            const BooleanMatrix& I = inst.matrix;
            Factorization g2 = grecon2_factorize(I, stream_of(I), 1.0);
            Factorization g3 = grecon3_factorize(I, stream_of(I), 1.0);
            expect(g3.cell_appends <= g2.cell_appends,
                   "more appends than the dense baseline on seed " + std::to_string(inst.seed));
            if (g3.k() >= 4) {
                expect(g3.cell_appends < g2.cell_appends,
                       "no strict saving with k >= 4 on seed " + std::to_string(inst.seed));
                ++strict;
            }
        }
        expect(strict > 0, "corpus produced no factorization with k >= 4");
        return std::to_string(strict) + " matrices with k >= 4, all strictly cheaper";
    });

    criterion(8, "mushroom end-to-end: grecon3 within 2/3 of grecon2 wall time at eps = 1", [] {
        std::string path = DATA_DIR "/mushroom.dat";
        if (const char* env = std::getenv("BMF_MUSHROOM")) path = env;
        if (!std::filesystem::exists(path))
            throw Failure(path + " not found; run tools/fetch_mushroom.sh (needs network)");

        BooleanMatrix I = load_fimi(path, 1, 119);
        expect(I.rows() == 8124 && I.cols() == 119,
               "expected 8124x119, got " + std::to_string(I.rows()) + "x" +
                   std::to_string(I.cols()));

        // Enumeration sanity on a brute-forceable column subsample.
        {
            BooleanMatrix sub(400, 14);
            for (std::size_t i = 0; i < sub.rows(); ++i)
                for (std::size_t j = 0; j < sub.cols(); ++j)
                    if (I.test(i, j)) sub.set(i, j);
            auto by_intent = [](std::vector<FormalConcept> v) {
                std::sort(v.begin(), v.end(), [](const FormalConcept& a, const FormalConcept& b) {
                    return a.intent.sequence_less(b.intent);
                });
                return v;
            };
            expect(by_intent(enumerate_concepts(sub)) == by_intent(brute_force_concepts(sub)),
                   "enumeration disagrees with the subset-scan oracle on a subsample");
        }

        auto timed = [&](auto&& factorize) {
            double best = -1;
            std::size_t concepts_seen = 0;
            for (int rep = 0; rep < 2; ++rep) {
                double t0 = now_ms();
                std::vector<FormalConcept> concepts = enumerate_concepts(I);
                concepts_seen = concepts.size();
                Factorization f = factorize(canonical_stream(std::move(concepts)));
                double elapsed = now_ms() - t0;
                expect(f.error == 0, "nonzero error");
                if (best < 0 || elapsed < best) best = elapsed;
            }
            return std::pair<double, std::size_t>(best, concepts_seen);
        };

        auto [t2, count2] = timed([&](ConceptStream s) {
            return grecon2_factorize(I, std::move(s), 1.0);
        });
        auto [t3, count3] = timed([&](ConceptStream s) {
            return grecon3_factorize(I, std::move(s), 1.0);
        });

        expect(t2 < 120000.0, "grecon2 run exceeded 120 s: " + fmt_ms(t2));
        expect(t3 < 120000.0, "grecon3 run exceeded 120 s: " + fmt_ms(t3));
        expect(t3 <= (2.0 / 3.0) * t2, "grecon3 " + fmt_ms(t3) + " vs grecon2 " + fmt_ms(t2) +
                                           ": speedup below 1.5x");
        return "grecon2 " + fmt_ms(t2) + ", grecon3 " + fmt_ms(t3) + ", " +
               std::to_string(count2) + " concepts";
    });

    criterion(9, "approximate mode returns the minimal qualifying prefix", [] {
        for (const Instance& inst : corpus()) {
            const BooleanMatrix& I = inst.matrix;
            for (double eps : {0.75, 0.8, 0.85, 0.9, 0.95}) {
                Factorization f = grecon3_factorize(I, stream_of(I), eps);
                expect(coverage_reached(f.covered(), f.total_ones, eps),
                       "coverage ratio below target on seed " + std::to_string(inst.seed));
                if (f.k() > 0) {
                    std::uint64_t without = f.covered() - f.new_coverage.back();
                    expect(!coverage_reached(without, f.total_ones, eps),
                           "prefix not minimal on seed " + std::to_string(inst.seed));
                }
            }
        }
        return "210 matrices x 5 targets";
    });

    criterion(10, "absolute timing tables replaced by relative counters and speedup", [] {
        // Wall-clock tables from a 188 GB benchmark machine are not
        // reproducible here by design; criteria 7 and 8 carry the comparison
        // instead. Nothing to execute.
        return "policy: covered by criteria 7 and 8";
    });

    std::cout << (failures == 0 ? "acceptance: all criteria passed\n"
                                : "acceptance: " + std::to_string(failures) + " criterion(s) failed\n");
    return failures;
}
