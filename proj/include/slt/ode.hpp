#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "slt/problem.hpp"

namespace slt {

/// Solution value and first derivative at one point.
struct StatePair {
  double y = 0.0;
  double dy = 0.0;
};

struct IntegrateOptions {
  /// Mixed absolute/relative local error target per step.
  double tol = 1e-10;
  /// Abscissae the stepper must land on exactly (sorted or not; filtered to
  /// the integration span). Dense evaluation at these points is then exact.
  std::vector<double> mandatory_nodes{};
};

/// One side's solution of -y'' + q y = lambda y with dense output.
/// Steps carry interpolation coefficients; evaluation at stored nodes
/// reproduces the stepper states exactly.
class SolutionPiece {
public:
  Side side() const noexcept { return side_; }
  double lambda() const noexcept { return lambda_; }

  /// Ascending extent covered by the piece.
  double x_lo() const noexcept { return x_lo_; }
  double x_hi() const noexcept { return x_hi_; }

  std::span<const double> nodes() const noexcept { return nodes_; }
  StatePair at_node(std::size_t i) const;

  /// Dense evaluation anywhere in [x_lo, x_hi].
  StatePair eval(double x) const;

  /// Endpoint states.
  StatePair front() const { return at_node(0); }
  StatePair back() const { return at_node(nodes_.size() - 1); }

  struct Step {
    double x0, h;                 // span [x0, x0+h]; ascending after finalize
    std::array<double, 5> ry;     // dense coefficients, y component
    std::array<double, 5> rdy;    // dense coefficients, dy component
  };

private:
  friend SolutionPiece integrate(Side, double, double, StatePair, const ValidatedSpec&,
                                 const IntegrateOptions&);
  Side side_ = Side::Left;
  double lambda_ = 0.0;
  double x_lo_ = 0.0, x_hi_ = 0.0;
  std::vector<Step> steps_;     // ascending in x after finalize
  std::vector<double> nodes_;   // ascending step boundaries
  std::size_t locate(double x) const;
};

/// Integrate the initial-value problem on one side, from `from` (one of the
/// side's endpoints) toward the other endpoint, with adaptive embedded
/// Runge-Kutta 5(4) steps and dense output.
/// Throws StepSizeUnderflow or NonFiniteState on failure.
SolutionPiece integrate(Side side, double lambda, double from, StatePair initial,
                        const ValidatedSpec& spec, const IntegrateOptions& opt = {});

}  // namespace slt
