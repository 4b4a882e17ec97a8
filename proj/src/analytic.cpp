#include "graphstate/analytic.hpp"

#include <array>
#include <cmath>
#include <set>
#include <stdexcept>

namespace graphstate {

namespace {

using c64 = std::complex<double>;

struct AxisFrame {
  Axis pinned;
  Axis a;  // sigma_a sigma_pinned = -i sigma_b
  Axis b;
};

AxisFrame frame_of(SetId s) {
  switch (s) {
    case SetId::U: return {Axis::X, Axis::Y, Axis::Z};
    case SetId::V: return {Axis::Y, Axis::Z, Axis::X};
    case SetId::W: return {Axis::Z, Axis::X, Axis::Y};
  }
  throw std::invalid_argument("bad set id");
}

double bloch_component(const BlochAngles& ang, Axis ax) {
  switch (ax) {
    case Axis::X: return std::cos(ang.alpha) * std::sin(ang.theta);
    case Axis::Y: return std::sin(ang.alpha) * std::sin(ang.theta);
    case Axis::Z: return std::cos(ang.theta);
  }
  return 0.0;
}

double pinned_component(const GraphSpec& g, const InitParams& params,
                        const std::string& y) {
  return bloch_component(params.at(y), pinned_axis(g.set_of(y)));
}

c64 neighbor_factor(double phi, double m) {
  return {std::cos(phi), std::sin(phi) * m};
}

std::array<SetId, 2> other_sets(SetId s) {
  switch (s) {
    case SetId::U: return {SetId::V, SetId::W};
    case SetId::V: return {SetId::U, SetId::W};
    case SetId::W: return {SetId::U, SetId::V};
  }
  throw std::invalid_argument("bad set id");
}

// a = <B>_0 - i <A>_0 of one vertex, the pair-level local coefficient.
c64 pair_local(const AxisFrame& f, const BlochAngles& ang) {
  return {bloch_component(ang, f.b), -bloch_component(ang, f.a)};
}

double& spin_slot(MeanSpin& m, Axis ax) {
  switch (ax) {
    case Axis::X: return m.x;
    case Axis::Y: return m.y;
    case Axis::Z: return m.z;
  }
  return m.x;
}

}  // namespace

Axis pinned_axis(SetId s) { return frame_of(s).pinned; }

std::complex<double> local_coefficient(const GraphSpec& g,
                                       const InitParams& params,
                                       const std::string& x) {
  const AxisFrame f = frame_of(g.set_of(x));
  const BlochAngles& ang = params.at(x);
  c64 coeff{bloch_component(ang, f.a), bloch_component(ang, f.b)};
  for (SetId target : other_sets(g.set_of(x)))
    for (const auto& y : g.neighbors(x, target))
      coeff *= neighbor_factor(g.coupling_angle(x, y),
                               pinned_component(g, params, y));
  return coeff;
}

MeanSpin mean_spin_analytic(const GraphSpec& g, const InitParams& params,
                            const std::string& x) {
  const AxisFrame f = frame_of(g.set_of(x));
  const c64 coeff = local_coefficient(g, params, x);
  MeanSpin out;
  spin_slot(out, f.pinned) = bloch_component(params.at(x), f.pinned);
  spin_slot(out, f.a) = coeff.real();
  spin_slot(out, f.b) = coeff.imag();
  return out;
}

double entanglement_distance_analytic(const GraphSpec& g,
                                      const InitParams& params,
                                      const std::string& x) {
  const MeanSpin m = mean_spin_analytic(g, params, x);
  return 1.0 - m.x * m.x - m.y * m.y - m.z * m.z;
}

double entanglement_distance_uniform(SetId set, std::size_t deg_first,
                                     std::size_t deg_second, double theta,
                                     double alpha, double phi) {
  const AxisFrame f = frame_of(set);
  const BlochAngles ang{theta, alpha};
  const double a0 = bloch_component(ang, f.a);
  const double b0 = bloch_component(ang, f.b);
  const double c2 = std::cos(phi) * std::cos(phi);
  const double s2 = std::sin(phi) * std::sin(phi);

  const auto others = other_sets(set);
  double shrink = 1.0;
  const std::size_t degs[2] = {deg_first, deg_second};
  for (int i = 0; i < 2; ++i) {
    const double m = bloch_component(ang, pinned_axis(others[i]));
    const double factor = c2 + s2 * m * m;
    for (std::size_t k = 0; k < degs[i]; ++k) shrink *= factor;
  }
  return (a0 * a0 + b0 * b0) * (1.0 - shrink);
}

PairCoefficients pair_coefficients(const GraphSpec& g,
                                   const InitParams& params,
                                   const std::string& x1,
                                   const std::string& x2) {
  if (x1 == x2)
    throw std::invalid_argument("pair coefficients require distinct vertices");
  const SetId s = g.set_of(x1);
  if (g.set_of(x2) != s)
    throw std::invalid_argument("no closed form in source; use simulator");

  const AxisFrame f = frame_of(s);
  PairCoefficients out;
  out.local1 = pair_local(f, params.at(x1));
  out.local2 = pair_local(f, params.at(x2));

  for (SetId target : other_sets(s)) {
    auto n1_list = g.neighbors(x1, target);
    auto n2_list = g.neighbors(x2, target);
    std::set<std::string> n1(n1_list.begin(), n1_list.end());
    std::set<std::string> n2(n2_list.begin(), n2_list.end());
    for (const auto& y : g.vertices(target)) {
      const bool in1 = n1.count(y) != 0, in2 = n2.count(y) != 0;
      if (!in1 && !in2) continue;
      const double m = pinned_component(g, params, y);
      if (in1 && in2) {
        const double p1 = g.coupling_angle(x1, y);
        const double p2 = g.coupling_angle(x2, y);
        out.z1 *= neighbor_factor(p1 + p2, m);
        out.z2 *= neighbor_factor(p1 - p2, m);
      } else if (in1) {
        const c64 fac = neighbor_factor(g.coupling_angle(x1, y), m);
        out.z1 *= fac;
        out.z2 *= fac;
      } else {
        const c64 fac = neighbor_factor(g.coupling_angle(x2, y), m);
        out.z1 *= fac;
        out.z2 *= std::conj(fac);
      }
    }
  }
  return out;
}

bool correlator_axes_covered(SetId pair_set, Axis a1, Axis a2) {
  const AxisFrame f = frame_of(pair_set);
  if (a1 == a2) return true;
  return a1 == f.a && a2 == f.b;
}

double correlator_analytic(const GraphSpec& g, const InitParams& params,
                           const std::string& x1, const std::string& x2,
                           Axis a1, Axis a2) {
  if (x1 == x2)
    throw std::invalid_argument("correlator requires distinct vertices");
  const SetId s = g.set_of(x1);
  if (g.set_of(x2) != s || !correlator_axes_covered(s, a1, a2))
    throw std::invalid_argument("no closed form in source; use simulator");

  const AxisFrame f = frame_of(s);
  if (a1 == f.pinned)
    return bloch_component(params.at(x1), f.pinned) *
           bloch_component(params.at(x2), f.pinned);

  const PairCoefficients pc = pair_coefficients(g, params, x1, x2);
  const c64 same = pc.z1 * pc.local1 * pc.local2;
  const c64 mixed = pc.z2 * pc.local1 * std::conj(pc.local2);
  if (a1 == f.a && a2 == f.a) return 0.5 * (-same + mixed).real();
  if (a1 == f.b && a2 == f.b) return 0.5 * (same + mixed).real();
  return -0.5 * (same + mixed).imag();  // ordered mixed pair (A, B)
}

PairCoefficients uniform_pair_coefficients(
    SetId pair_set, const NeighborhoodStats& stats_first,
    const NeighborhoodStats& stats_second, const BlochAngles& u_params,
    const BlochAngles& v_params, const BlochAngles& w_params, double phi) {
  const AxisFrame f = frame_of(pair_set);
  auto params_of = [&](SetId s) -> const BlochAngles& {
    switch (s) {
      case SetId::U: return u_params;
      case SetId::V: return v_params;
      default: return w_params;
    }
  };

  PairCoefficients out;
  out.local1 = pair_local(f, params_of(pair_set));
  out.local2 = out.local1;

  const auto others = other_sets(pair_set);
  const NeighborhoodStats* stats[2] = {&stats_first, &stats_second};
  for (int i = 0; i < 2; ++i) {
    const double m =
        bloch_component(params_of(others[i]), pinned_axis(others[i]));
    const c64 single = neighbor_factor(phi, m);
    const c64 doubled = neighbor_factor(2.0 * phi, m);
    for (std::size_t k = 0; k < stats[i]->symmetric_difference; ++k)
      out.z1 *= single;
    for (std::size_t k = 0; k < stats[i]->common; ++k) out.z1 *= doubled;
    for (std::size_t k = 0; k < stats[i]->exclusive_first; ++k)
      out.z2 *= single;
    for (std::size_t k = 0; k < stats[i]->exclusive_second; ++k)
      out.z2 *= std::conj(single);
  }
  return out;
}

}  // namespace graphstate
