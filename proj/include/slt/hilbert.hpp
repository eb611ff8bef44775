#pragma once

#include "slt/grid.hpp"
#include "slt/problem.hpp"

namespace slt {

/// Weighted inner product r12 * integral_left(y z) + r34 * integral_right(y z),
/// by composite Simpson per side. Throws GridMismatch on non-conforming grids.
double inner_product(const GridFunction& y, const GridFunction& z, const ValidatedSpec& spec);

/// sqrt(<y, y>).
double weighted_norm(const GridFunction& y, const ValidatedSpec& spec);

/// Numerical defect of operator symmetry <Ay,z> - <y,Az> where y, z are
/// manufactured through the resolvent at lambda0: y = Solve(f1, lambda0),
/// z = Solve(f2, lambda0), so Ay = lambda0*y - f1 holds exactly and the
/// defect reduces to |<y,f2> - <f1,z>|.
/// Throws SingularResolvent if lambda0 is too close to an eigenvalue.
double symmetry_defect(const GridFunction& f1, const GridFunction& f2, double lambda0,
                       const ValidatedSpec& spec);

}  // namespace slt
