#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "grecon/errors.hpp"
#include "grecon/grecon2.hpp"
#include "grecon/grecon3.hpp"
#include "grecon/grecond.hpp"
#include "grecon/io.hpp"
#include "grecon/oracle.hpp"
#include "grecon/synthetic.hpp"

using json = nlohmann::ordered_json;
using namespace grecon;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitIncomplete = 3;

double now_ms() {
    using namespace std::chrono;
    return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

struct InputOptions {
    std::string path;
    std::string format = "fimi";
    int index_base = 1;
    std::size_t n_cols = 0;
};

void add_input_flags(CLI::App* cmd, InputOptions& in, bool required = true) {
    auto* opt = cmd->add_option("--input", in.path, "dataset file");
    if (required) opt->required();
    cmd->add_option("--format", in.format, "input format")
        ->check(CLI::IsMember({"fimi", "dense"}))
        ->capture_default_str();
    cmd->add_option("--index-base", in.index_base, "fimi item id base")
        ->check(CLI::IsMember({0, 1}))
        ->capture_default_str();
    cmd->add_option("--n-cols", in.n_cols,
                    "declared attribute count (fimi only; >= highest item index)");
}

BooleanMatrix load_input(const InputOptions& in) {
    if (in.format == "dense") return load_dense(in.path);
    return load_fimi(in.path, in.index_base, in.n_cols);
}

struct AlgoResult {
    Factorization factorization;
    std::optional<std::size_t> concept_count;
    double enumeration_ms = 0.0;
    double factorization_ms = 0.0;
};

AlgoResult run_algorithm(const std::string& algorithm, const BooleanMatrix& I, double epsilon,
                         std::size_t small_threshold) {
    AlgoResult out;
    if (algorithm == "grecond") {
        double t0 = now_ms();
        out.factorization = grecond_factorize(I, epsilon);
        out.factorization_ms = now_ms() - t0;
        out.factorization.wall_ms = out.factorization_ms;
        return out;
    }

    double t0 = now_ms();
    std::vector<FormalConcept> concepts = enumerate_concepts(I);
    out.concept_count = concepts.size();
    ConceptStream stream = canonical_stream(std::move(concepts));
    out.enumeration_ms = now_ms() - t0;

    double t1 = now_ms();
    if (algorithm == "grecon2")
        out.factorization = grecon2_factorize(I, std::move(stream), epsilon);
    else if (algorithm == "grecon3")
        out.factorization = grecon3_factorize(I, std::move(stream), epsilon, small_threshold);
    else  // naive: reference implementation, exposed for debugging
        out.factorization = naive_grecon(I, epsilon);
    out.factorization_ms = now_ms() - t1;
    out.factorization.wall_ms = out.enumeration_ms + out.factorization_ms;
    return out;
}

int cmd_factorize(const InputOptions& in, const std::string& algorithm, double epsilon,
                  std::size_t small_threshold, const std::string& output,
                  const std::string& output_format) {
    BooleanMatrix I = load_input(in);
    AlgoResult r = run_algorithm(algorithm, I, epsilon, small_threshold);
    const Factorization& f = r.factorization;

    if (!output.empty()) {
        write_factorization(f,
                            output_format == "text" ? FactorizationFormat::text
                                                    : FactorizationFormat::json,
                            output);
    }

    json summary;
    summary["command"] = "factorize";
    summary["input"] = in.path;
    summary["format"] = in.format;
    summary["algorithm"] = algorithm;
    summary["epsilon"] = epsilon;
    summary["small_threshold"] = small_threshold;
    summary["rows"] = I.rows();
    summary["cols"] = I.cols();
    summary["ones"] = I.ones_count();
    summary["density_percent"] = 100.0 * I.density();
    if (r.concept_count)
        summary["concept_count"] = *r.concept_count;
    else
        summary["concept_count"] = nullptr;
    summary["k"] = f.k();
    summary["error"] = f.error;
    summary["total_ones"] = f.total_ones;
    summary["coverage_ratio"] = f.coverage_ratio();
    summary["coverage_per_factor"] = f.new_coverage;
    summary["cell_appends"] = f.cell_appends;
    summary["peak_live_slots"] = f.stats.peak_live_slots;
    summary["peak_cell_entries"] = f.stats.peak_cell_entries;
    summary["enumeration_ms"] = r.enumeration_ms;
    summary["factorization_ms"] = r.factorization_ms;
    summary["total_ms"] = r.enumeration_ms + r.factorization_ms;
    std::cout << summary.dump(2) << '\n';
    return 0;
}

int cmd_concepts(const InputOptions& in, const std::string& dump) {
    BooleanMatrix I = load_input(in);
    double t0 = now_ms();
    std::vector<FormalConcept> concepts = enumerate_concepts(I);
    double elapsed = now_ms() - t0;

    if (!dump.empty()) {
        std::ofstream out(dump);
        if (!out) throw IoError("cannot open for writing: " + dump);
        write_concepts(canonical_order(concepts, /*drop_zero_size=*/false), out);
    }

    json summary;
    summary["command"] = "concepts";
    summary["input"] = in.path;
    summary["rows"] = I.rows();
    summary["cols"] = I.cols();
    summary["ones"] = I.ones_count();
    summary["density_percent"] = 100.0 * I.density();
    summary["concept_count"] = concepts.size();
    summary["enumeration_ms"] = elapsed;
    if (!dump.empty()) summary["dump"] = dump;
    std::cout << summary.dump(2) << '\n';
    return 0;
}

int cmd_bench(const InputOptions& in, bool synthetic, std::size_t rows, std::size_t cols,
              double density, std::vector<std::string> algorithms, std::vector<double> epsilons,
              int runs, std::size_t small_threshold, const std::string& output) {
    BooleanMatrix I;
    std::string dataset_name;
    if (synthetic) {
        std::uint64_t seed = 1;
        if (const char* env = std::getenv("BMF_SEED")) seed = std::strtoull(env, nullptr, 10);
        I = random_matrix(seed, rows, cols, density);
        std::ostringstream name;
        name << "synthetic-" << rows << "x" << cols << "-d" << density << "-seed" << seed;
        dataset_name = name.str();
    } else {
        if (in.path.empty())
            throw CLI::ValidationError("bench", "either --input or --synthetic is required");
        I = load_input(in);
        dataset_name = in.path;
    }

    json out;
    out["command"] = "bench";
    out["dataset"] = dataset_name;
    out["rows"] = I.rows();
    out["cols"] = I.cols();
    out["ones"] = I.ones_count();
    out["density_percent"] = 100.0 * I.density();
    out["runs"] = runs;
    out["algorithms"] = algorithms;
    out["epsilons"] = epsilons;
    auto results = json::array();

    // One row per (algorithm, epsilon): minimum over `runs` end-to-end
    // executions, concept enumeration inside the timed section for the
    // stream-driven algorithms. Runs execute sequentially; nothing else runs
    // during a timed section.
    for (const std::string& algorithm : algorithms) {
        for (double eps : epsilons) {
            double best_ms = -1.0;
            AlgoResult last;
            for (int r = 0; r < runs; ++r) {
                double t0 = now_ms();
                last = run_algorithm(algorithm, I, eps, small_threshold);
                double elapsed = now_ms() - t0;
                if (best_ms < 0 || elapsed < best_ms) best_ms = elapsed;
            }
            const Factorization& f = last.factorization;
            json row;
            row["algorithm"] = algorithm;
            row["epsilon"] = eps;
            row["min_ms"] = best_ms;
            row["k"] = f.k();
            row["error"] = f.error;
            row["coverage_ratio"] = f.coverage_ratio();
            row["cell_appends"] = f.cell_appends;
            row["peak_live_slots"] = f.stats.peak_live_slots;
            row["peak_cell_entries"] = f.stats.peak_cell_entries;
            row["coverage_per_factor"] = f.new_coverage;
            results.push_back(std::move(row));
        }
    }
    out["results"] = std::move(results);

    std::cout << dataset_name << "  (" << I.rows() << "x" << I.cols() << ", " << std::fixed
              << std::setprecision(2) << 100.0 * I.density() << "% dense, min of " << runs
              << " runs, ms)\n";
    std::cout << std::left << std::setw(10) << "algorithm";
    for (double eps : epsilons)
        std::cout << std::right << std::setw(12) << std::setprecision(2) << eps;
    std::cout << '\n';
    std::size_t idx = 0;
    for (const std::string& algorithm : algorithms) {
        std::cout << std::left << std::setw(10) << algorithm;
        for (std::size_t e = 0; e < epsilons.size(); ++e, ++idx)
            std::cout << std::right << std::setw(12) << std::fixed << std::setprecision(1)
                      << out["results"][idx]["min_ms"].get<double>();
        std::cout << '\n';
    }

    if (!output.empty()) {
        std::ofstream file(output);
        if (!file) throw IoError("cannot open for writing: " + output);
        file << out.dump(2) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boolean matrix factorization from formal concepts (GreCon family)"};
    app.require_subcommand(1);

    // factorize
    auto* fac = app.add_subcommand("factorize", "decompose a binary matrix into factor concepts");
    InputOptions fac_in;
    add_input_flags(fac, fac_in);
    std::string algorithm = "grecon3";
    double epsilon = 1.0;
    std::size_t small_threshold = 100;
    std::string output;
    std::string output_format = "json";
    fac->add_option("--algorithm", algorithm, "factorization algorithm")
        ->check(CLI::IsMember({"grecond", "grecon2", "grecon3", "naive"}))
        ->capture_default_str();
    fac->add_option("--epsilon", epsilon, "fraction of ones to cover")
        ->check(CLI::Range(std::nextafter(0.0, 1.0), 1.0))
        ->capture_default_str();
    fac->add_option("--small-threshold", small_threshold,
                    "extents below this size are initialized en bloc (grecon3)")
        ->capture_default_str();
    fac->add_option("--output", output, "write the factorization to this file");
    fac->add_option("--output-format", output_format, "factorization file format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    // concepts
    auto* con = app.add_subcommand("concepts", "enumerate and count formal concepts");
    InputOptions con_in;
    add_input_flags(con, con_in);
    std::string dump;
    con->add_option("--dump", dump, "write one 'extent | intent' line per concept");

    // bench
    auto* ben = app.add_subcommand("bench", "timing table over algorithms and epsilons");
    InputOptions ben_in;
    add_input_flags(ben, ben_in, /*required=*/false);
    bool synthetic = false;
    std::size_t rows = 2000, cols = 120;
    double density = 0.4;
    std::vector<std::string> algorithms = {"grecond", "grecon2", "grecon3"};
    std::vector<double> epsilons = {0.75, 0.8, 0.85, 0.9, 0.95, 1.0};
    int runs = 5;
    std::size_t ben_small_threshold = 100;
    std::string ben_output;
    ben->add_flag("--synthetic", synthetic, "generate a random matrix (seed from BMF_SEED)");
    ben->add_option("--rows", rows, "synthetic rows")->capture_default_str();
    ben->add_option("--cols", cols, "synthetic columns")->capture_default_str();
    ben->add_option("--density", density, "synthetic density")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    ben->add_option("--algorithms", algorithms, "algorithms to time")
        ->delimiter(',')
        ->check(CLI::IsMember({"grecond", "grecon2", "grecon3", "naive"}))
        ->capture_default_str();
    ben->add_option("--epsilons", epsilons, "coverage targets")
        ->delimiter(',')
        ->capture_default_str();
    ben->add_option("--runs", runs, "repetitions per cell; the minimum is reported")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    ben->add_option("--small-threshold", ben_small_threshold, "grecon3 small-concept bound")
        ->capture_default_str();
    ben->add_option("--output", ben_output, "write machine-readable results to this file");

    try {
        app.parse(argc, argv);
        if (*fac)
            return cmd_factorize(fac_in, algorithm, epsilon, small_threshold, output,
                                 output_format);
        if (*con) return cmd_concepts(con_in, dump);
        return cmd_bench(ben_in, synthetic, rows, cols, density, algorithms, epsilons, runs,
                         ben_small_threshold, ben_output);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const IncompleteStreamError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIncomplete;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
