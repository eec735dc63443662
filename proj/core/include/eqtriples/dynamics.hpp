#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "eqtriples/triples.hpp"

namespace eqtriples {

using Vec3 = std::array<double, 3>;

// Parameters of the cubic three-cell system
//   ẋᵢ = xᵢ(λ − xᵢ² + b·xᵢ₊₁² + c·xᵢ₋₁²),  indices mod 3.
// The interesting regime has b ≠ c and bc < 0; the defaults give a saddle
// chain with an attracting connection cycle.
struct GHParams {
  double lambda = 1.0;
  double b = 0.1;
  double c = -3.0;
};

Vec3 gh_rhs(const Vec3& x, const GHParams& p);

struct LabeledPoint {
  Vec3 point{};
  std::string label;  // "origin", "+x1", "-x1", ..., "-x3"
};

// The origin plus, for lambda > 0, the six axis equilibria (±√λ)eⱼ.
std::vector<LabeledPoint> gh_equilibria(const GHParams& p);

// Eigenvalues of the linearization at an equilibrium of gh_rhs (the
// Jacobian is diagonal there).  At an axis equilibrium the order is
// (radial, then the two transverse coordinates ascending), with direction
// labels; at the origin it is (x1, x2, x3).  domain_error if the point is
// not an equilibrium.
struct Eigenvalues {
  std::array<double, 3> values{};
  std::array<std::string, 3> directions{};
};
Eigenvalues linearize_eigenvalues(const GHParams& p, const Vec3& equilibrium);

// Fixed-step classical 4th-order integration; deterministic.  On a
// non-finite state the trajectory is truncated at the last finite sample
// with `truncated` set and a diagnostic reason.
struct Trajectory {
  std::vector<double> times;
  std::vector<Vec3> states;
  double step = 0.0;
  bool truncated = false;
  std::string truncation_reason;
};
Trajectory integrate(const GHParams& p, const Vec3& x0, double dt, double t_max);

// One maximal run of consecutive samples inside the eps-ball of one
// equilibrium.  `complete` is false only for a visit still in progress at
// the end of the trajectory.
struct Visit {
  std::string label;
  Vec3 equilibrium{};
  std::size_t first_sample = 0;
  std::size_t last_sample = 0;
  double enter_time = 0.0;
  double exit_time = 0.0;
  double dwell = 0.0;
  double min_distance = 0.0;
  bool complete = false;
};

// status: "ok" (≥ 3 visits), "no_cycle" (fewer), or "invalid_eps" (visit
// balls of radius eps are not pairwise disjoint: 2·eps exceeds the minimal
// distance between the given equilibria).
//
// approaches_cycle is the operational attractivity check: somewhere in the
// complete visits, four consecutive dwell times strictly increase — three
// increases in a row, which necessarily reach past the first full cycle.
//
// bounded reports the trap-region check max‖x‖² ≤ max(λ, ‖x₀‖²) (λ read
// off the equilibria) up to a 1e-9 margin.
struct CycleReport {
  std::string status;
  std::vector<Visit> visits;
  bool approaches_cycle = false;
  bool bounded = false;
  double max_norm_squared = 0.0;
  double eps = 0.0;
};
CycleReport detect_cycle(const Trajectory& traj, const std::vector<LabeledPoint>& equilibria,
                         double eps = 1e-3);

// The action of a degree-6 block-preserving permutation on R³ through
// signed coordinates: 0-based point 2a is +eₐ₊₁ and point 2a+1 is −eₐ₊₁.
// domain_error if sigma does not preserve the sign pairs {2a, 2a+1}.
Vec3 signed_axis_action(const Permutation& sigma, const Vec3& x);

// Read the symmetry triple out of a detected cycle, inside a degree-6
// signed-coordinate group G (the wreath catalog groups on 6 points):
//   K = elements fixing every sample strictly between the last two complete
//       visits, to within tol;
//   H = elements fixing the earlier visit's equilibrium;
//   g = the canonically least element mapping the later visit's equilibrium
//       onto the earlier one's.
// Any element whose largest deviation lands in the ambiguity band
// [tol, 100·tol) makes the answer tolerance-dependent: domain_error
// "tolerance too coarse".  domain_error also when fewer than two complete
// visits exist or the fixers fail to close under composition.
HomoclinicTriple extract_triple(const CycleReport& report, const Group& G,
                                const Trajectory& traj, double tol = 1e-6);

} // namespace eqtriples
