#pragma once

#include "slt/ode.hpp"
#include "slt/problem.hpp"

namespace slt {

enum class SolKind { Phi, Chi };

/// A fundamental solution assembled across both sides via the interface
/// transfer maps. Phi satisfies the left boundary condition exactly by its
/// initial data; Chi the right one.
struct FundamentalSolution {
  SolKind kind;
  double lambda;
  double interface_x;
  SolutionPiece left, right;
  StatePair trace_cm, trace_cp;  // one-sided traces at the interface

  /// Interface-condition residuals evaluated literally on the traces,
  /// a1*dy(c-)+a2*y(c-)+a3*dy(c+)+a4*y(c+) and the b-row analogue. These
  /// vanish (to integration accuracy) whenever the transfer maps and the
  /// literal conditions describe the same coupling, in particular for
  /// matrices with r13 = r24 and r12 = r34.
  double gamma1_residual, gamma2_residual;

  /// Dense evaluation; x must not hit the interface.
  StatePair eval(double x) const;
};

/// Map the (y, dy) trace at c- to the trace at c+:
///   y(c+)  =  (r23*y + r24*dy) / r12
///   dy(c+) = -(r13*y + r14*dy) / r12
StatePair transfer_left_to_right(const StatePair& at_cm, const Minors& m);
StatePair transfer_left_to_right(const StatePair& at_cm, const TransmissionMatrix& t);

/// Inverse map, c+ to c-:
///   y(c-)  = -(r14*y + r24*dy) / r34
///   dy(c-) =  (r13*y + r23*dy) / r34
StatePair transfer_right_to_left(const StatePair& at_cp, const Minors& m);
StatePair transfer_right_to_left(const StatePair& at_cp, const TransmissionMatrix& t);

/// Build phi: left piece from (sin(alpha), -cos(alpha)) at a, crossed to the
/// right side through the transfer map.
FundamentalSolution build_phi(double lambda, const ValidatedSpec& spec,
                              const IntegrateOptions& opt = {});

/// Build chi: right piece integrated backward from (-sin(beta), cos(beta))
/// at b, crossed to the left side through the inverse transfer map.
FundamentalSolution build_chi(double lambda, const ValidatedSpec& spec,
                              const IntegrateOptions& opt = {});

/// W(phi, chi; x) = phi*chi' - phi'*chi, evaluated from dense output.
/// Throws InterfacePoint at x = c; both solutions must share lambda.
double wronskian(const FundamentalSolution& phi, const FundamentalSolution& chi, double x);

struct CharacteristicValue {
  double lambda;
  double omega;               // r34 * w1
  double w1, w2;              // per-side Wronskians at the side midpoints
  double consistency_defect;  // |r34*w1 - r12*w2|
};

/// The characteristic function omega(lambda) = r34*W(phi1,chi1) = r12*W(phi2,chi2),
/// whose zeros are the eigenvalues.
CharacteristicValue characteristic(double lambda, const ValidatedSpec& spec, double tol = 1e-12);

/// Same, reusing already-built solutions (midpoint Wronskians via dense output).
CharacteristicValue characteristic_from(const FundamentalSolution& phi,
                                        const FundamentalSolution& chi,
                                        const ValidatedSpec& spec);

}  // namespace slt
