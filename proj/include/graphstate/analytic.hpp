#pragma once

#include <complex>

#include "graphstate/graph.hpp"
#include "graphstate/statevector.hpp"

namespace graphstate {

// Every coupling acting on a vertex applies the same Pauli on that vertex's
// side: X for U, Y for V, Z for W. That "pinned" component of the Bloch
// vector is therefore gate-invariant, and the other two components close over
// products of per-neighbor factors f(phi) = cos(phi) + i m sin(phi), where m
// is the neighbor's pinned component in the initial state.

Axis pinned_axis(SetId s);

struct MeanSpin {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

// Packs the two non-pinned mean-spin components of one vertex: with ordered
// non-pinned axes (A, B) chosen so that sigma_A sigma_pinned = -i sigma_B
// (U -> (y,z), V -> (z,x), W -> (x,y)), the value is
//   (<A>_0 + i <B>_0) * prod_neighbors f(phi_xy)
// and <sigma_A> = Re, <sigma_B> = Im of it.
std::complex<double> local_coefficient(const GraphSpec& g,
                                       const InitParams& params,
                                       const std::string& x);

MeanSpin mean_spin_analytic(const GraphSpec& g, const InitParams& params,
                            const std::string& x);

double entanglement_distance_analytic(const GraphSpec& g,
                                      const InitParams& params,
                                      const std::string& x);

// Closed form for a vertex of `set` when every vertex carries the same
// (theta, alpha) and every arc the same weight phi. deg_first / deg_second are
// the vertex's neighbor counts toward the two other sets in (U, V, W) order:
// (|N_V|, |N_W|) for U, (|N_U|, |N_W|) for V, (|N_U|, |N_V|) for W.
double entanglement_distance_uniform(SetId set, std::size_t deg_first,
                                     std::size_t deg_second, double theta,
                                     double alpha, double phi);

// Pair-level coefficients for a same-set vertex pair. local1/local2 follow
// the convention a = <B>_0 - i <A>_0 with (A, B) ordered as above.
// z1 takes f(phi_1y + phi_2y) over common neighbors and f(phi) over exclusive
// ones; z2 conjugates the exclusive-to-x2 factors and uses f(phi_1y - phi_2y)
// over common neighbors.
struct PairCoefficients {
  std::complex<double> z1{1.0, 0.0};
  std::complex<double> z2{1.0, 0.0};
  std::complex<double> local1{0.0, 0.0};
  std::complex<double> local2{0.0, 0.0};
};

PairCoefficients pair_coefficients(const GraphSpec& g, const InitParams& params,
                                   const std::string& x1,
                                   const std::string& x2);

// Two-point correlator <sigma_a1(x1) sigma_a2(x2)> for a same-set pair.
// Covered axis pairs per set: the pinned pair (XX on U, YY on V, ZZ on W),
// both non-pinned equal pairs, and the ordered mixed pair (A, B):
// YZ on U, ZX on V, XY on W. Anything else throws.
double correlator_analytic(const GraphSpec& g, const InitParams& params,
                           const std::string& x1, const std::string& x2,
                           Axis a1, Axis a2);

bool correlator_axes_covered(SetId pair_set, Axis a1, Axis a2);

// Degree-resolved pair coefficients when each set carries one (theta, alpha)
// and every arc the same weight phi. stats_first / stats_second are the pair's
// neighborhood stats toward the two other sets in (U, V, W) order. Exclusive
// counts contribute f(phi)^k (conjugated for x2's exclusives in z2), common
// counts f(2 phi)^k in z1 and nothing in z2.
PairCoefficients uniform_pair_coefficients(SetId pair_set,
                                           const NeighborhoodStats& stats_first,
                                           const NeighborhoodStats& stats_second,
                                           const BlochAngles& u_params,
                                           const BlochAngles& v_params,
                                           const BlochAngles& w_params,
                                           double phi);

}  // namespace graphstate
