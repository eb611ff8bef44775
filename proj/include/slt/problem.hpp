#pragma once

#include <numbers>
#include <string>
#include <vector>

#include "slt/errors.hpp"

namespace slt {

enum class Side { Left, Right };

/// Coefficient matrix of the two interface conditions at the inner point c.
/// Row one holds a1..a4, row two b1..b4, in the column order of
///   a1*y'(c-) + a2*y(c-) + a3*y'(c+) + a4*y(c+) = 0.
struct TransmissionMatrix {
  double a1, a2, a3, a4;
  double b1, b2, b3, b4;
};

/// The six 2x2 column minors of a TransmissionMatrix, r_ij = col_i x col_j.
struct Minors {
  double r12, r13, r14, r23, r24, r34;

  /// r12*r34 - r13*r24 + r14*r23; identically zero for minors of any real
  /// 2x4 matrix, so a nonzero value measures rounding in the minor
  /// computation itself.
  double pluecker_defect() const { return r12 * r34 - r13 * r24 + r14 * r23; }

  /// Magnitude of the largest product appearing in the relation; the
  /// natural scale for pluecker_defect.
  double pluecker_scale() const;
};

Minors minors(const TransmissionMatrix& t);

struct BoundaryAngles {
  double alpha = 0.0;
  double beta = 0.0;
};

/// Piecewise-polynomial potential; one coefficient list per side, ascending
/// powers of x. Each side's polynomial extends continuously to the interface.
struct Potential {
  std::vector<double> left{0.0};
  std::vector<double> right{0.0};

  double eval(Side s, double x) const;
  bool is_zero() const;
};

struct ProblemSpec {
  double a = -std::numbers::pi;
  double b = std::numbers::pi;
  double c = 0.0;
  BoundaryAngles angles;
  Potential q;
  TransmissionMatrix t{0, -1, 0, 1, 1, 0, -1, 0};
};

struct ValidationIssue {
  Errc code;
  std::string message;
};

/// All violated invariants of `spec`; empty result means valid.
std::vector<ValidationIssue> check(const ProblemSpec& spec);

/// A problem instance whose invariants have been checked once, with cached
/// minors. Immutable; safe to share across threads.
class ValidatedSpec {
public:
  const ProblemSpec& spec() const noexcept { return spec_; }
  const Minors& m() const noexcept { return m_; }

  double a() const noexcept { return spec_.a; }
  double b() const noexcept { return spec_.b; }
  double c() const noexcept { return spec_.c; }
  double alpha() const noexcept { return spec_.angles.alpha; }
  double beta() const noexcept { return spec_.angles.beta; }
  double q(Side s, double x) const { return spec_.q.eval(s, x); }

  /// Side endpoints in ascending order: Left = [a, c], Right = [c, b].
  double side_lo(Side s) const noexcept { return s == Side::Left ? spec_.a : spec_.c; }
  double side_hi(Side s) const noexcept { return s == Side::Left ? spec_.c : spec_.b; }
  double side_mid(Side s) const noexcept { return 0.5 * (side_lo(s) + side_hi(s)); }

private:
  friend ValidatedSpec validate(const ProblemSpec&);
  ValidatedSpec(ProblemSpec s, Minors m) : spec_(std::move(s)), m_(m) {}

  ProblemSpec spec_;
  Minors m_;
};

/// Throws Error(code of the first issue) with a message listing every
/// violated invariant. Idempotent: re-validating an accepted spec accepts.
ValidatedSpec validate(const ProblemSpec& spec);

}  // namespace slt
