#include "smlab/data.hpp"

#include <cmath>

#include "smlab/fft.hpp"

namespace smlab {
namespace data {

ComplexField gaussian(const GridSpec& g, double amplitude, double sigma, double x0, double y0, double px, double py) {
    ComplexField f(g);
    for (std::size_t i1 = 0; i1 < g.n; ++i1) {
        const double x = static_cast<double>(i1) * g.spacing;
        for (std::size_t i2 = 0; i2 < g.n; ++i2) {
            const double y = static_cast<double>(i2) * g.spacing;
            const double r2 = (x - x0) * (x - x0) + (y - y0) * (y - y0);
            const double phase = px * x + py * y;
            f(i1, i2) = amplitude * std::exp(-r2 / (2.0 * sigma * sigma)) * cplx(std::cos(phase), std::sin(phase));
        }
    }
    return f;
}

ComplexField gaussian_free_evolution(const GridSpec& g, double sigma, double x0, double y0, double t) {
    ComplexField f(g);
    const cplx a(sigma * sigma / 2.0, t);
    const cplx pref = cplx(sigma * sigma, 0.0) / (2.0 * a);
    for (std::size_t i1 = 0; i1 < g.n; ++i1) {
        const double x = static_cast<double>(i1) * g.spacing;
        for (std::size_t i2 = 0; i2 < g.n; ++i2) {
            const double y = static_cast<double>(i2) * g.spacing;
            const double r2 = (x - x0) * (x - x0) + (y - y0) * (y - y0);
            f(i1, i2) = pref * std::exp(-r2 / (4.0 * a));
        }
    }
    return f;
}

ComplexField random_band_field(const GridSpec& g, int j, const DyadicRange& range, const CounterRng& rng,
                               std::uint64_t tag, double l2_norm) {
    std::vector<cplx> hat(g.size(), cplx(0.0, 0.0));
    const double scale = std::ldexp(1.0, -j);
    for (std::size_t i1 = 0; i1 < g.n; ++i1) {
        const double k1 = g.wavenumber(i1);
        for (std::size_t i2 = 0; i2 < g.n; ++i2) {
            const double k2 = g.wavenumber(i2);
            const double w = BumpProfile::psi(scale * std::sqrt(k1 * k1 + k2 * k2));
            if (w > 0.0)
                hat[i1 * g.n + i2] = w * cplx(rng.normal(tag, i1 * g.n + i2, 0), rng.normal(tag, i1 * g.n + i2, 1));
        }
    }
    ComplexField f = spectral::backward(g, hat);
    const double n2 = norm_l2(f);
    if (n2 > 0.0) f = cplx(l2_norm / n2, 0.0) * f;
    // keep it an exact band-j field after rescaling
    return lp_project(f, j, range);
}

ComplexField random_full_field(const GridSpec& g, const CounterRng& rng, std::uint64_t tag) {
    ComplexField f(g);
    for (std::size_t i = 0; i < g.size(); ++i) f.values[i] = cplx(rng.normal(tag, i, 0), rng.normal(tag, i, 1));
    return f;
}

ComplexField dyadic_sum(const GridSpec& g, const DyadicRange& range, const CounterRng& rng, double eps, int J) {
    ComplexField acc(g);
    int used = 0;
    for (int j = -J; j <= J; ++j) {
        if (!range.contains(j)) continue;
        ComplexField piece = random_band_field(g, j, range, rng, 1000 + static_cast<std::uint64_t>(j + 64), 1.0);
        acc = acc + piece;
        ++used;
    }
    if (used == 0) throw std::invalid_argument("dyadic_sum: no representable band in |j| <= J");
    return cplx(eps, 0.0) * acc;
}

ComplexField band_packet(const GridSpec& g, int j, const DyadicRange& range, double theta, double x0, double y0,
                         double sigma) {
    const double kmag = 2.0 * std::ldexp(1.0, j);
    ComplexField f = gaussian(g, 1.0, sigma, x0, y0, kmag * std::cos(theta), kmag * std::sin(theta));
    return lp_project(f, j, range);
}

std::pair<RealField, RealField> tangent_band_pair(const GridSpec& g, int j_lo, int j_hi, const DyadicRange& range,
                                                  const CounterRng& rng, const std::vector<double>& norms) {
    RealField h1(g), h2(g);
    for (int j = j_lo; j <= j_hi; ++j) {
        if (!range.contains(j)) throw std::out_of_range("tangent_band_pair: band outside range");
        const double target = norms[static_cast<std::size_t>(j - j_lo)];
        ComplexField b1 = random_band_field(g, j, range, rng, 2000 + 2 * static_cast<std::uint64_t>(j + 64), 1.0);
        ComplexField b2 = random_band_field(g, j, range, rng, 2001 + 2 * static_cast<std::uint64_t>(j + 64), 1.0);
        // real parts stay band-limited (annulus is symmetric); rescale each to the exact target
        RealField r1(g), r2(g);
        for (std::size_t i = 0; i < g.size(); ++i) {
            r1.values[i] = b1.values[i].real();
            r2.values[i] = b2.values[i].real();
        }
        const double n1 = norm_l2(r1), n2 = norm_l2(r2);
        for (std::size_t i = 0; i < g.size(); ++i) {
            h1.values[i] += r1.values[i] * (n1 > 0.0 ? target / n1 : 0.0);
            h2.values[i] += r2.values[i] * (n2 > 0.0 ? target / n2 : 0.0);
        }
    }
    return {h1, h2};
}

}  // namespace data
}  // namespace smlab
