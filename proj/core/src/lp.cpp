#include "smlab/lp.hpp"

#include <algorithm>
#include <cmath>

#include "smlab/fft.hpp"

namespace smlab {

namespace {

// C^inf step: 0 at t<=0, 1 at t>=1, strictly monotone in between.
double smoothstep_inf(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / t);
    const double b = std::exp(-1.0 / (1.0 - t));
    return a / (a + b);
}

}  // namespace

double BumpProfile::phi(double r) {
    if (r <= r_lo) return 1.0;
    if (r >= r_hi) return 0.0;
    return 1.0 - smoothstep_inf((r - r_lo) / (r_hi - r_lo));
}

DyadicRange dyadic_range(const GridSpec& g) {
    const double pi = 3.14159265358979323846;
    const double k_low = 2.0 * pi / g.length;
    const double k_corner = std::sqrt(2.0) * g.nyquist();
    DyadicRange r;
    r.j_min = static_cast<int>(std::ceil(std::log2(k_low) - 1e-12));
    // smallest j with 1.2 * 2^{j+1} >= k_corner, i.e. phi(2^{-(j+1)} xi) = 1 on the lattice
    r.j_max = static_cast<int>(std::ceil(std::log2(k_corner / BumpProfile::r_lo) - 1e-12)) - 1;
    if (r.j_max < r.j_min) throw std::invalid_argument("dyadic_range: grid too small for any band");
    return r;
}

ComplexField lp_project(const ComplexField& f, int j, const DyadicRange& range) {
    if (!range.contains(j)) throw std::out_of_range("lp_project: band index outside DyadicRange");
    const double scale = std::ldexp(1.0, -j);  // 2^{-j}
    return spectral::fourier_multiplier(f, [scale](double k1, double k2) {
        return cplx(BumpProfile::psi(scale * std::sqrt(k1 * k1 + k2 * k2)), 0.0);
    });
}

ComplexField lp_low(const ComplexField& f, int j, const DyadicRange& range) {
    if (j < range.j_min - 1 || j > range.j_max) throw std::out_of_range("lp_low: band index outside DyadicRange");
    const double scale = std::ldexp(1.0, -(j + 1));
    return spectral::fourier_multiplier(f, [scale](double k1, double k2) {
        return cplx(BumpProfile::phi(scale * std::sqrt(k1 * k1 + k2 * k2)), 0.0);
    });
}

BesovResult besov_norm(const ComplexField& f, const BesovParams& params, const DyadicRange& range) {
    if (!(params.q >= 1.0)) throw std::invalid_argument("besov_norm: q must be in [1, inf]");
    if (!(params.p >= 1.0)) throw std::invalid_argument("besov_norm: p must be in [1, inf]");
    BesovResult res;
    res.band_norms.reserve(range.count());
    double acc = 0.0;
    double sup = 0.0;
    for (int j = range.j_min; j <= range.j_max; ++j) {
        const ComplexField pj = lp_project(f, j, range);
        double nq;
        if (std::isinf(params.q))
            nq = norm_linf(pj);
        else if (params.q == 2.0)
            nq = norm_l2(pj);
        else
            nq = norm_lq(pj, params.q);
        res.band_norms.push_back(nq);
        const double weighted = std::pow(2.0, static_cast<double>(j) * params.s) * nq;
        if (std::isinf(params.p))
            sup = std::max(sup, weighted);
        else
            acc += std::pow(weighted, params.p);
    }
    res.value = std::isinf(params.p) ? sup : std::pow(acc, 1.0 / params.p);

    const ComplexField low = lp_low(f, range.j_min - 1, range);
    res.low_tail_l2 = norm_l2(low);
    const double total = norm_l2(f);
    res.tail_warning = (total > 0.0) && (res.low_tail_l2 > 1e-10 * total) ? true : false;
    return res;
}

Envelope frequency_envelope(const std::vector<double>& band_norms, int j_min, double delta, int sigma) {
    if (!(delta > 0.0)) throw std::invalid_argument("frequency_envelope: delta must be positive");
    Envelope env;
    env.delta = delta;
    env.sigma = sigma;
    env.j_min = j_min;
    env.values.assign(band_norms.size(), 0.0);
    for (std::size_t k = 0; k < band_norms.size(); ++k) {
        double v = 0.0;
        for (std::size_t j = 0; j < band_norms.size(); ++j) {
            const double dist = std::abs(static_cast<double>(k) - static_cast<double>(j));
            const double jj = static_cast<double>(j_min) + static_cast<double>(j);
            v = std::max(v, std::pow(2.0, -delta * dist + sigma * jj) * band_norms[j]);
        }
        env.values[k] = v;
    }
    return env;
}

double bernstein_ratio(const ComplexField& f, int j) {
    const double n2 = norm_l2(f);
    if (n2 <= 0.0) throw std::invalid_argument("bernstein_ratio: zero field");
    return norm_l4(f) / (std::pow(2.0, 0.5 * j) * n2);
}

}  // namespace smlab
