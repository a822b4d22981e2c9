#include "grecon/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "grecon/errors.hpp"

namespace grecon {

namespace {

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open for reading: " + path);
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    return out;
}

void print_indices(const Bitset& bits, std::ostream& out) {
    bool first = true;
    bits.for_each([&](std::size_t i) {
        if (!first) out << ' ';
        out << i;
        first = false;
    });
}

}  // namespace

DatasetMeta dataset_meta(std::string name, const BooleanMatrix& I) {
    DatasetMeta meta;
    meta.name = std::move(name);
    meta.objects = I.rows();
    meta.attributes = I.cols();
    meta.ones = I.ones_count();
    meta.density_percent = 100.0 * I.density();
    return meta;
}

BooleanMatrix read_fimi(std::istream& in, int index_base, std::size_t n_cols) {
    if (index_base != 0 && index_base != 1)
        throw std::invalid_argument("read_fimi: index_base must be 0 or 1");

    std::vector<std::vector<std::size_t>> transactions;
    std::size_t max_attr = 0;
    bool any_attr = false;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        std::vector<std::size_t> items;
        const char* p = line.data();
        const char* end = p + line.size();
        while (p != end) {
            if (*p == ' ' || *p == '\t') {
                ++p;
                continue;
            }
            std::uint64_t id = 0;
            auto [next, ec] = std::from_chars(p, end, id);
            if (ec != std::errc() || (next != end && *next != ' ' && *next != '\t'))
                throw IoError("fimi: non-integer token at line " + std::to_string(line_no));
            p = next;
            if (index_base == 1 && id == 0)
                throw IoError("fimi: item id 0 in a 1-based file at line " +
                              std::to_string(line_no));
            std::size_t attr = std::size_t(id) - std::size_t(index_base);
            items.push_back(attr);
            max_attr = std::max(max_attr, attr);
            any_attr = true;
        }
        transactions.push_back(std::move(items));
    }
    if (transactions.empty()) throw IoError("fimi: empty file");

    std::size_t needed = any_attr ? max_attr + 1 : 0;
    if (n_cols == 0)
        n_cols = needed;
    else if (n_cols < needed)
        throw IoError("fimi: declared column count " + std::to_string(n_cols) +
                      " below highest item index " + std::to_string(needed));

    BooleanMatrix I(transactions.size(), n_cols);
    for (std::size_t i = 0; i < transactions.size(); ++i)
        for (std::size_t attr : transactions[i]) I.set(i, attr);
    return I;
}

BooleanMatrix load_fimi(const std::string& path, int index_base, std::size_t n_cols) {
    auto in = open_input(path);
    return read_fimi(in, index_base, n_cols);
}

BooleanMatrix read_dense(std::istream& in) {
    std::vector<std::string> rows;
    std::string line;
    while (std::getline(in, line)) {
        line = strip_cr(line);
        std::string symbols;
        for (char ch : line) {
            if (ch == ' ' || ch == '\t' || ch == ',') continue;
            if (ch != '0' && ch != '1')
                throw IoError(std::string("dense: unexpected character '") + ch + "' at row " +
                              std::to_string(rows.size() + 1));
            symbols.push_back(ch);
        }
        if (symbols.empty() && in.peek() == std::char_traits<char>::eof())
            break;  // trailing newline
        rows.push_back(std::move(symbols));
    }
    if (rows.empty()) throw IoError("dense: empty file");

    std::size_t n = rows.front().size();
    if (n == 0) throw IoError("dense: empty first row");
    BooleanMatrix I(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != n)
            throw IoError("dense: ragged row " + std::to_string(i + 1) + " (expected " +
                          std::to_string(n) + " symbols, got " + std::to_string(rows[i].size()) +
                          ")");
        for (std::size_t j = 0; j < n; ++j)
            if (rows[i][j] == '1') I.set(i, j);
    }
    return I;
}

BooleanMatrix load_dense(const std::string& path) {
    auto in = open_input(path);
    return read_dense(in);
}

void write_dense(const BooleanMatrix& I, std::ostream& out) {
    for (std::size_t i = 0; i < I.rows(); ++i) {
        for (std::size_t j = 0; j < I.cols(); ++j) out << (I.test(i, j) ? '1' : '0');
        out << '\n';
    }
}

void write_dense(const BooleanMatrix& I, const std::string& path) {
    auto out = open_output(path);
    write_dense(I, out);
    if (!out) throw IoError("dense: write failed: " + path);
}

void write_concepts(const std::vector<FormalConcept>& concepts, std::ostream& out) {
    for (const FormalConcept& c : concepts) {
        print_indices(c.extent, out);
        out << " | ";
        print_indices(c.intent, out);
        out << '\n';
    }
}

void write_factorization(const Factorization& F, FactorizationFormat format, std::ostream& out) {
    if (format == FactorizationFormat::text) {
        for (const FormalConcept& c : F.factors) {
            print_indices(c.extent, out);
            out << " | ";
            print_indices(c.intent, out);
            out << '\n';
        }
        return;
    }

    nlohmann::ordered_json j;
    j["k"] = F.k();
    j["error"] = F.error;
    j["total_ones"] = F.total_ones;
    j["coverage_per_factor"] = F.new_coverage;
    auto arr = nlohmann::ordered_json::array();
    for (const FormalConcept& c : F.factors) {
        nlohmann::ordered_json f;
        f["extent"] = c.extent.to_indices();
        f["intent"] = c.intent.to_indices();
        arr.push_back(std::move(f));
    }
    j["factors"] = std::move(arr);
    j["wall_ms"] = F.wall_ms;
    j["cell_appends"] = F.cell_appends;
    out << j.dump(2) << '\n';
}

void write_factorization(const Factorization& F, FactorizationFormat format,
                         const std::string& path) {
    auto out = open_output(path);
    write_factorization(F, format, out);
    if (!out) throw IoError("factorization: write failed: " + path);
}

}  // namespace grecon
