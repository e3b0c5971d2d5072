#pragma once

#include "sublat/lattice/basis.hpp"

namespace sublat::lattice {

/// Square of the center density, (lambda_1^2)^n / (4^n det G), exact.
mpq_class center_density_squared(const LatticeBasis& b);
mpq_class center_density_squared(const GramMatrix& g);

double center_density(const LatticeBasis& b);
double center_density(const GramMatrix& g);

/// sqrt(q) as a double, for q > 0 of any magnitude representable in double.
double sqrt_to_double(const mpq_class& q);

}  // namespace sublat::lattice
