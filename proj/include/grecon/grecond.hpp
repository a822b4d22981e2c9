#pragma once

#include "grecon/factorization.hpp"

namespace grecon {

/// On-demand baseline: grows each factor attribute by attribute, always
/// adding the attribute whose closed rectangle covers the most
/// still-uncovered ones (ties to the lowest attribute index), until no
/// addition improves. It never enumerates the concept lattice, so it explores
/// only a fraction of the candidates the GreCon family sees.
Factorization grecond_factorize(const BooleanMatrix& I, double epsilon);

}  // namespace grecon
