#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "grecon/factorization.hpp"

namespace grecon {

struct DatasetMeta {
    std::string name;
    std::size_t objects = 0;
    std::size_t attributes = 0;
    std::uint64_t ones = 0;
    double density_percent = 0.0;
    std::optional<std::uint64_t> expected_concepts;
};

DatasetMeta dataset_meta(std::string name, const BooleanMatrix& I);

/// FIMI transaction format: one object per line, whitespace-separated item
/// ids. Ids are 1-based by default (the repository convention); pass
/// index_base = 0 for 0-based files. n_cols may declare more attributes than
/// the highest id present (for datasets whose trailing attributes never
/// occur); declaring fewer is an error. Empty lines are all-zero rows.
BooleanMatrix read_fimi(std::istream& in, int index_base = 1, std::size_t n_cols = 0);
BooleanMatrix load_fimi(const std::string& path, int index_base = 1, std::size_t n_cols = 0);

/// Dense format: one row per line of 0/1 characters, optionally separated by
/// spaces, tabs or commas. Rows must all have the same length.
BooleanMatrix read_dense(std::istream& in);
BooleanMatrix load_dense(const std::string& path);

void write_dense(const BooleanMatrix& I, std::ostream& out);
void write_dense(const BooleanMatrix& I, const std::string& path);

enum class FactorizationFormat { text, json };

/// text: one factor per line, "extent | intent", ascending space-separated
/// indices. json: the fixed field set {k, error, total_ones,
/// coverage_per_factor, factors, wall_ms, cell_appends} in that order.
void write_factorization(const Factorization& F, FactorizationFormat format, std::ostream& out);
void write_factorization(const Factorization& F, FactorizationFormat format,
                         const std::string& path);

/// Concept dump: one concept per line, same "extent | intent" layout.
void write_concepts(const std::vector<FormalConcept>& concepts, std::ostream& out);

}  // namespace grecon
