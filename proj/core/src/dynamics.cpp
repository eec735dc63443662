#include "eqtriples/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eqtriples/error.hpp"

namespace eqtriples {

namespace {

double dist(const Vec3& a, const Vec3& b) {
  const double d0 = a[0] - b[0], d1 = a[1] - b[1], d2 = a[2] - b[2];
  return std::sqrt(d0 * d0 + d1 * d1 + d2 * d2);
}

double norm_squared(const Vec3& a) { return a[0] * a[0] + a[1] * a[1] + a[2] * a[2]; }

bool finite(const Vec3& a) {
  return std::isfinite(a[0]) && std::isfinite(a[1]) && std::isfinite(a[2]);
}

} // namespace

Vec3 gh_rhs(const Vec3& x, const GHParams& p) {
  Vec3 f;
  for (int i = 0; i < 3; ++i) {
    const double xi = x[static_cast<std::size_t>(i)];
    const double xn = x[static_cast<std::size_t>((i + 1) % 3)];
    const double xp = x[static_cast<std::size_t>((i + 2) % 3)];
    f[static_cast<std::size_t>(i)] = xi * (p.lambda - xi * xi + p.b * xn * xn + p.c * xp * xp);
  }
  return f;
}

std::vector<LabeledPoint> gh_equilibria(const GHParams& p) {
  std::vector<LabeledPoint> out;
  out.push_back({{0.0, 0.0, 0.0}, "origin"});
  if (p.lambda <= 0) return out;
  const double s = std::sqrt(p.lambda);
  for (int axis = 0; axis < 3; ++axis) {
    for (double sign : {+1.0, -1.0}) {
      Vec3 q{0.0, 0.0, 0.0};
      q[static_cast<std::size_t>(axis)] = sign * s;
      out.push_back({q, (sign > 0 ? "+" : "-") + std::string("x") + std::to_string(axis + 1)});
    }
  }
  return out;
}

namespace {

// analytic Jacobian of gh_rhs
std::array<Vec3, 3> gh_jacobian(const GHParams& p, const Vec3& x) {
  std::array<Vec3, 3> J{};
  for (int i = 0; i < 3; ++i) {
    const auto ii = static_cast<std::size_t>(i);
    const auto in = static_cast<std::size_t>((i + 1) % 3);
    const auto ip = static_cast<std::size_t>((i + 2) % 3);
    J[ii][ii] = p.lambda - 3.0 * x[ii] * x[ii] + p.b * x[in] * x[in] + p.c * x[ip] * x[ip];
    J[ii][in] = 2.0 * p.b * x[ii] * x[in];
    J[ii][ip] = 2.0 * p.c * x[ii] * x[ip];
  }
  return J;
}

} // namespace

Eigenvalues linearize_eigenvalues(const GHParams& p, const Vec3& equilibrium) {
  const Vec3 f = gh_rhs(equilibrium, p);
  if (std::max({std::abs(f[0]), std::abs(f[1]), std::abs(f[2])}) > 1e-9)
    throw domain_error("linearize_eigenvalues: the point is not an equilibrium");
  const std::array<Vec3, 3> J = gh_jacobian(p, equilibrium);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && std::abs(J[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) > 1e-12)
        throw internal_error("Jacobian is not diagonal at an equilibrium of this system");

  int axis = -1;
  for (int i = 0; i < 3; ++i)
    if (std::abs(equilibrium[static_cast<std::size_t>(i)]) > 1e-9) {
      if (axis != -1) throw domain_error("linearize_eigenvalues: not an axis equilibrium");
      axis = i;
    }

  Eigenvalues out;
  if (axis == -1) {  // origin
    for (std::size_t i = 0; i < 3; ++i) {
      out.values[i] = J[i][i];
      out.directions[i] = "x" + std::to_string(i + 1);
    }
    return out;
  }
  const auto a = static_cast<std::size_t>(axis);
  out.values[0] = J[a][a];
  out.directions[0] = "radial";
  std::size_t slot = 1;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i == a) continue;
    out.values[slot] = J[i][i];
    out.directions[slot] = "x" + std::to_string(i + 1);
    ++slot;
  }
  return out;
}

Trajectory integrate(const GHParams& p, const Vec3& x0, double dt, double t_max) {
  if (!(dt > 0.0)) throw domain_error("integrate: dt must be positive");
  if (!(t_max > 0.0)) throw domain_error("integrate: t_max must be positive");
  const long long steps = std::llround(t_max / dt);
  if (steps > 50'000'000) throw resource_error("integrate: too many steps requested");

  Trajectory traj;
  traj.step = dt;
  traj.times.reserve(static_cast<std::size_t>(steps) + 1);
  traj.states.reserve(static_cast<std::size_t>(steps) + 1);
  Vec3 x = x0;
  traj.times.push_back(0.0);
  traj.states.push_back(x);
  for (long long n = 1; n <= steps; ++n) {
    const Vec3 k1 = gh_rhs(x, p);
    Vec3 y;
    for (int i = 0; i < 3; ++i)
      y[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] + 0.5 * dt * k1[static_cast<std::size_t>(i)];
    const Vec3 k2 = gh_rhs(y, p);
    for (int i = 0; i < 3; ++i)
      y[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] + 0.5 * dt * k2[static_cast<std::size_t>(i)];
    const Vec3 k3 = gh_rhs(y, p);
    for (int i = 0; i < 3; ++i)
      y[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] + dt * k3[static_cast<std::size_t>(i)];
    const Vec3 k4 = gh_rhs(y, p);
    for (int i = 0; i < 3; ++i) {
      const auto ii = static_cast<std::size_t>(i);
      x[ii] += dt / 6.0 * (k1[ii] + 2.0 * k2[ii] + 2.0 * k3[ii] + k4[ii]);
    }
    if (!finite(x)) {
      traj.truncated = true;
      traj.truncation_reason = "non-finite state after t = " +
                               std::to_string(static_cast<double>(n - 1) * dt) +
                               " (trajectory blow-up)";
      break;
    }
    traj.times.push_back(static_cast<double>(n) * dt);
    traj.states.push_back(x);
  }
  return traj;
}

CycleReport detect_cycle(const Trajectory& traj, const std::vector<LabeledPoint>& equilibria,
                         double eps) {
  if (!(eps > 0.0)) throw domain_error("detect_cycle: eps must be positive");
  if (traj.states.empty()) throw domain_error("detect_cycle: empty trajectory");
  if (equilibria.empty()) throw domain_error("detect_cycle: no equilibria given");

  CycleReport report;
  report.eps = eps;

  double min_pair = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < equilibria.size(); ++i)
    for (std::size_t j = i + 1; j < equilibria.size(); ++j)
      min_pair = std::min(min_pair, dist(equilibria[i].point, equilibria[j].point));
  if (2.0 * eps > min_pair) {
    report.status = "invalid_eps";
    return report;
  }

  // trap-region check: max‖x‖² against max(λ, ‖x₀‖²), λ read off the
  // farthest equilibrium
  double lambda_bound = 0.0;
  for (const LabeledPoint& q : equilibria) lambda_bound = std::max(lambda_bound, norm_squared(q.point));
  double max_n2 = 0.0;
  for (const Vec3& x : traj.states) max_n2 = std::max(max_n2, norm_squared(x));
  report.max_norm_squared = max_n2;
  report.bounded = max_n2 <= std::max(lambda_bound, norm_squared(traj.states.front())) + 1e-9;

  for (std::size_t s = 0; s < traj.states.size(); ++s) {
    int near = -1;
    double d = 0.0;
    for (std::size_t q = 0; q < equilibria.size(); ++q) {
      d = dist(traj.states[s], equilibria[q].point);
      if (d < eps) {
        near = static_cast<int>(q);
        break;  // balls are disjoint: at most one can match
      }
    }
    if (near == -1) continue;
    const LabeledPoint& eq = equilibria[static_cast<std::size_t>(near)];
    if (!report.visits.empty() && report.visits.back().label == eq.label &&
        report.visits.back().last_sample == s - 1) {
      Visit& v = report.visits.back();
      v.last_sample = s;
      v.min_distance = std::min(v.min_distance, d);
    } else {
      Visit v;
      v.label = eq.label;
      v.equilibrium = eq.point;
      v.first_sample = v.last_sample = s;
      v.min_distance = d;
      report.visits.push_back(std::move(v));
    }
  }

  const std::size_t last_index = traj.states.size() - 1;
  for (Visit& v : report.visits) {
    v.enter_time = traj.times[v.first_sample];
    v.exit_time = traj.times[v.last_sample];
    v.dwell = v.exit_time - v.enter_time;
    v.complete = v.last_sample != last_index;
  }

  std::vector<double> dwells;
  for (const Visit& v : report.visits)
    if (v.complete) dwells.push_back(v.dwell);
  for (std::size_t j = 0; j + 3 < dwells.size(); ++j) {
    if (dwells[j] < dwells[j + 1] && dwells[j + 1] < dwells[j + 2] &&
        dwells[j + 2] < dwells[j + 3]) {
      report.approaches_cycle = true;
      break;
    }
  }

  report.status = report.visits.size() < 3 ? "no_cycle" : "ok";
  return report;
}

Vec3 signed_axis_action(const Permutation& sigma, const Vec3& x) {
  if (sigma.degree() != 6)
    throw domain_error("signed_axis_action: need a degree-6 permutation");
  for (int pt = 0; pt < 6; ++pt)
    if (sigma(pt ^ 1) != (sigma(pt) ^ 1))
      throw domain_error("signed_axis_action: permutation does not preserve the sign pairs");
  Vec3 y{0.0, 0.0, 0.0};
  for (int a = 0; a < 3; ++a) {
    const int q = sigma(2 * a);
    y[static_cast<std::size_t>(q / 2)] = (q % 2 == 0 ? 1.0 : -1.0) * x[static_cast<std::size_t>(a)];
  }
  return y;
}

HomoclinicTriple extract_triple(const CycleReport& report, const Group& G,
                                const Trajectory& traj, double tol) {
  if (!(tol > 0.0)) throw domain_error("extract_triple: tol must be positive");
  if (G.degree() != 6) throw domain_error("extract_triple: need a degree-6 group");

  std::vector<const Visit*> complete;
  for (const Visit& v : report.visits)
    if (v.complete) complete.push_back(&v);
  if (complete.size() < 2)
    throw domain_error("extract_triple: need at least two complete visits");
  const Visit& from = *complete[complete.size() - 2];
  const Visit& to = *complete[complete.size() - 1];
  if (to.first_sample <= from.last_sample + 1)
    throw domain_error("extract_triple: no samples between the last two visits");

  auto deviation_on = [&](const Permutation& sigma, const Vec3& x) {
    const Vec3 y = signed_axis_action(sigma, x);
    return std::max({std::abs(y[0] - x[0]), std::abs(y[1] - x[1]), std::abs(y[2] - x[2])});
  };

  std::vector<ElementIndex> k_members, h_members;
  for (ElementIndex a = 0; a < G.order(); ++a) {
    const Permutation& sigma = G.element(a);
    double dev = 0.0;
    for (std::size_t s = from.last_sample + 1; s < to.first_sample; ++s)
      dev = std::max(dev, deviation_on(sigma, traj.states[s]));
    if (dev < tol) {
      k_members.push_back(a);
    } else if (dev < 100.0 * tol) {
      throw domain_error("extract_triple: tolerance too coarse — element " +
                         sigma.cycle_string() + " deviates by " + std::to_string(dev) +
                         ", inside [tol, 100*tol)");
    }

    const Vec3 img = signed_axis_action(sigma, from.equilibrium);
    const double hdev =
        std::max({std::abs(img[0] - from.equilibrium[0]), std::abs(img[1] - from.equilibrium[1]),
                  std::abs(img[2] - from.equilibrium[2])});
    if (hdev < tol) {
      h_members.push_back(a);
    } else if (hdev < 100.0 * tol) {
      throw domain_error("extract_triple: tolerance too coarse — isotropy of " + from.label +
                         " is ambiguous for " + sigma.cycle_string());
    }
  }

  const Subgroup K = generate_subgroup(G, k_members);
  if (K.members() != k_members)
    throw domain_error(
        "extract_triple: tolerance too coarse — the sample fixers do not form a subgroup");
  const Subgroup H = generate_subgroup(G, h_members);
  if (H.members() != h_members)
    throw domain_error(
        "extract_triple: tolerance too coarse — the equilibrium fixers do not form a subgroup");

  ElementIndex g = G.order();
  for (ElementIndex a = 0; a < G.order(); ++a) {
    const Vec3 img = signed_axis_action(G.element(a), to.equilibrium);
    const double gdev =
        std::max({std::abs(img[0] - from.equilibrium[0]), std::abs(img[1] - from.equilibrium[1]),
                  std::abs(img[2] - from.equilibrium[2])});
    if (gdev < tol) {
      g = a;
      break;  // elements are canonically ordered: first hit is least
    }
  }
  if (g == G.order())
    throw domain_error("extract_triple: no group element maps " + to.label + " onto " +
                       from.label);
  return make_triple(G, K, g, H);
}

} // namespace eqtriples
