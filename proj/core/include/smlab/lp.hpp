#pragma once

#include <limits>
#include <vector>

#include "smlab/field.hpp"

namespace smlab {

/// Radial profile phi with phi = 1 for r <= 1.2, phi = 0 for r >= 1.8 and a
/// C^inf monotone transition in between (so phi = 1 on |xi| <= 1 and 0 on
/// |xi| >= 2 hold with margin). The band function psi(r) = phi(r/2) - phi(r)
/// then has a plateau psi = 1 on [1.8, 2.4], which makes single-band fields
/// placed there exact eigenvectors of lp_project.
struct BumpProfile {
    static constexpr double r_lo = 1.2;
    static constexpr double r_hi = 1.8;
    static constexpr double support_hi = 3.6;  // sup |xi|/2^j over supp psi(2^{-j} .)

    static double phi(double r);
    static double psi(double r) { return phi(r / 2.0) - phi(r); }
};

/// Representable dyadic bands on a grid: j_min anchored at the lowest
/// nonzero lattice frequency, j_max the smallest j whose low-pass
/// phi(2^{-(j+1)} xi) is identically 1 on the lattice (full coverage of the
/// corner modes; 2^{j_max} stays <= Nyquist).
struct DyadicRange {
    int j_min = 0;
    int j_max = 0;

    bool contains(int j) const { return j >= j_min && j <= j_max; }
    int count() const { return j_max - j_min + 1; }
};

DyadicRange dyadic_range(const GridSpec& g);

/// Band projection P_j: multiplier psi(2^{-j} |xi|). j must lie in range.
ComplexField lp_project(const ComplexField& f, int j, const DyadicRange& range);

/// Low-pass P_{<=j}: multiplier phi(2^{-(j+1)} |xi|), so that
/// lp_low(f, j) + sum_{j' > j} lp_project(f, j') reconstructs f.
ComplexField lp_low(const ComplexField& f, int j, const DyadicRange& range);

/// Besov indices: s smoothness, p summability over bands (inf allowed),
/// q spatial Lebesgue exponent (inf allowed).
struct BesovParams {
    double s = 0.0;
    double p = 2.0;
    double q = 2.0;
    static constexpr double inf = std::numeric_limits<double>::infinity();
};

struct BesovResult {
    double value = 0.0;
    std::vector<double> band_norms;  // ||P_j f||_{L^q}, j = j_min..j_max
    double low_tail_l2 = 0.0;        // ||P_{<= j_min - 1} f||_{L^2} (mean included)
    bool tail_warning = false;       // low tail mass > 1e-10 of total
};

BesovResult besov_norm(const ComplexField& f, const BesovParams& params, const DyadicRange& range);

/// Per-band majorant v_k = sup_j 2^{-delta |k-j|} 2^{j sigma} b_j.
struct Envelope {
    double delta = 0.25;
    int sigma = 0;
    int j_min = 0;                 // band index of values[0]
    std::vector<double> values;
};

Envelope frequency_envelope(const std::vector<double>& band_norms, int j_min, double delta, int sigma);

/// ||f||_{L^4} / (2^{j/2} ||f||_{L^2}) for a band-j field. Zero field rejected.
double bernstein_ratio(const ComplexField& f, int j);

}  // namespace smlab
