#pragma once

#include "grecon/factorization.hpp"

namespace grecon {

/// Reference enumeration by scanning all 2^n attribute subsets and closing
/// each one. Deliberately shares nothing with the Close-by-One path; used to
/// cross-check it. Refuses n > 20.
std::vector<FormalConcept> brute_force_concepts(const BooleanMatrix& I);

/// The original greedy strategy: every step recomputes, for every concept,
/// how many still-uncovered ones it covers against a working copy of the
/// matrix, then picks the argmax under the canonical tie-break (earliest in
/// canonical order wins). Slow on purpose; it is the ground truth the
/// incremental algorithms are tested against.
Factorization naive_grecon(const BooleanMatrix& I, double epsilon);

}  // namespace grecon
