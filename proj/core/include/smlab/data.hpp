#pragma once

#include "smlab/field.hpp"
#include "smlab/lp.hpp"
#include "smlab/rng.hpp"

namespace smlab {
namespace data {

/// A e^{-|x-x0|^2/(2 sigma^2)} e^{i p.x}.
ComplexField gaussian(const GridSpec& g, double amplitude, double sigma, double x0, double y0, double px = 0.0,
                      double py = 0.0);

/// Closed-form free evolution of the unit-amplitude Gaussian (centered patch
/// of the plane solution; valid while mass stays away from the boundary):
/// u(t,x) = sigma^2/(2a) exp(-|x-x0|^2/(4a)), a = sigma^2/2 + i t.
ComplexField gaussian_free_evolution(const GridSpec& g, double sigma, double x0, double y0, double t);

/// Random field with prescribed L^2 norm per dyadic band (zero outside).
/// Fourier coefficients are keyed by (seed, mode), so the field is
/// deterministic under reordering.
ComplexField random_band_field(const GridSpec& g, int j, const DyadicRange& range, const CounterRng& rng,
                               std::uint64_t tag, double l2_norm);

/// Random field with unit-variance coefficients on every lattice mode.
ComplexField random_full_field(const GridSpec& g, const CounterRng& rng, std::uint64_t tag);

/// eps * sum_{|j| <= J} 2^j psi-shaped bumps: equal L^2 mass per band
/// (truncation of data with finite Besov norm but divergent mass).
ComplexField dyadic_sum(const GridSpec& g, const DyadicRange& range, const CounterRng& rng, double eps, int J);

/// Directed band-limited wave packet: P_j [G_sigma(x-x0) e^{i xi.x}] with
/// |xi| = 2.0 * 2^j at angle theta (plateau of band j).
ComplexField band_packet(const GridSpec& g, int j, const DyadicRange& range, double theta, double x0, double y0,
                         double sigma);

/// Tangent pair (h1, h2) at Q with per-band L^2 norms prescribed by
/// norms[j - j_lo] on bands j_lo..j_hi, mean-zero.
std::pair<RealField, RealField> tangent_band_pair(const GridSpec& g, int j_lo, int j_hi, const DyadicRange& range,
                                                  const CounterRng& rng, const std::vector<double>& norms);

}  // namespace data
}  // namespace smlab
