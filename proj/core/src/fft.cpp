#include "smlab/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <map>
#include <mutex>

namespace smlab {

double norm_l2(const ComplexField& f) {
    double s = 0.0;
    for (const auto& z : f.values) s += std::norm(z);
    return std::sqrt(s) * f.grid.spacing;
}

double norm_l4(const ComplexField& f) {
    double s = 0.0;
    for (const auto& z : f.values) {
        const double a = std::norm(z);
        s += a * a;
    }
    const double h2 = f.grid.spacing * f.grid.spacing;
    return std::pow(s * h2, 0.25);
}

double norm_linf(const ComplexField& f) {
    double m = 0.0;
    for (const auto& z : f.values) m = std::max(m, std::abs(z));
    return m;
}

double norm_lq(const ComplexField& f, double q) {
    double s = 0.0;
    for (const auto& z : f.values) s += std::pow(std::abs(z), q);
    const double h2 = f.grid.spacing * f.grid.spacing;
    return std::pow(s * h2, 1.0 / q);
}

double norm_l2(const RealField& f) {
    double s = 0.0;
    for (double x : f.values) s += x * x;
    return std::sqrt(s) * f.grid.spacing;
}

cplx inner_l2(const ComplexField& f, const ComplexField& g) {
    cplx s(0.0, 0.0);
    for (std::size_t i = 0; i < f.values.size(); ++i) s += f.values[i] * std::conj(g.values[i]);
    return s * (f.grid.spacing * f.grid.spacing);
}

ComplexField operator+(const ComplexField& a, const ComplexField& b) {
    ComplexField r = a;
    for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] += b.values[i];
    return r;
}

ComplexField operator-(const ComplexField& a, const ComplexField& b) {
    ComplexField r = a;
    for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] -= b.values[i];
    return r;
}

ComplexField operator*(cplx s, const ComplexField& a) {
    ComplexField r = a;
    for (auto& z : r.values) z *= s;
    return r;
}

namespace spectral {

namespace {

// One forward and one backward in-place plan per grid size. FFTW_ESTIMATE
// keeps plan selection (and thus roundoff) reproducible.
struct Plans {
    fftw_plan fwd;
    fftw_plan bwd;
};

Plans& plans_for(std::size_t n) {
    static std::map<std::size_t, Plans> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<cplx> buf(n * n);
    auto* p = reinterpret_cast<fftw_complex*>(buf.data());
    Plans pl;
    pl.fwd = fftw_plan_dft_2d(static_cast<int>(n), static_cast<int>(n), p, p, FFTW_FORWARD, FFTW_ESTIMATE);
    pl.bwd = fftw_plan_dft_2d(static_cast<int>(n), static_cast<int>(n), p, p, FFTW_BACKWARD, FFTW_ESTIMATE);
    return cache.emplace(n, pl).first->second;
}

void run(fftw_plan plan, std::vector<cplx>& data) {
    auto* p = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(plan, p, p);
}

}  // namespace

std::vector<cplx> forward(const ComplexField& f) {
    std::vector<cplx> hat = f.values;
    run(plans_for(f.grid.n).fwd, hat);
    return hat;
}

ComplexField backward(const GridSpec& g, const std::vector<cplx>& hat) {
    ComplexField out(g);
    out.values = hat;
    run(plans_for(g.n).bwd, out.values);
    const double inv = 1.0 / static_cast<double>(g.size());
    for (auto& z : out.values) z *= inv;
    return out;
}

ComplexField fourier_multiplier(const ComplexField& f, const std::function<cplx(double, double)>& m) {
    const GridSpec& g = f.grid;
    std::vector<cplx> hat = forward(f);
    for (std::size_t i1 = 0; i1 < g.n; ++i1) {
        const double k1 = g.wavenumber(i1);
        for (std::size_t i2 = 0; i2 < g.n; ++i2) {
            const cplx mv = m(k1, g.wavenumber(i2));
            if (!std::isfinite(mv.real()) || !std::isfinite(mv.imag()))
                throw std::domain_error("fourier_multiplier: non-finite multiplier value");
            hat[i1 * g.n + i2] *= mv;
        }
    }
    return backward(g, hat);
}

ComplexField laplacian(const ComplexField& f) {
    return fourier_multiplier(f, [](double k1, double k2) { return cplx(-(k1 * k1 + k2 * k2), 0.0); });
}

ComplexField derivative(const ComplexField& f, int axis) {
    if (axis != 1 && axis != 2) throw std::invalid_argument("derivative: axis must be 1 or 2");
    const double kny = f.grid.nyquist();
    return fourier_multiplier(f, [axis, kny](double k1, double k2) {
        const double k = (axis == 1) ? k1 : k2;
        if (k <= -kny) return cplx(0.0, 0.0);  // odd multiplier: zero the Nyquist line
        return cplx(0.0, k);
    });
}

ComplexField free_schrodinger(const ComplexField& f, double t) {
    return fourier_multiplier(f, [t](double k1, double k2) {
        const double w = t * (k1 * k1 + k2 * k2);
        return cplx(std::cos(w), -std::sin(w));
    });
}

ComplexField heat_semigroup(const ComplexField& f, double s) {
    if (s < 0.0) throw std::invalid_argument("heat_semigroup: s must be nonnegative");
    return fourier_multiplier(f, [s](double k1, double k2) { return cplx(std::exp(-s * (k1 * k1 + k2 * k2)), 0.0); });
}

ComplexField dealias_23(const ComplexField& f) {
    const GridSpec& g = f.grid;
    const long n = static_cast<long>(g.n);
    const long cut = n / 3;
    std::vector<cplx> hat = forward(f);
    for (std::size_t i1 = 0; i1 < g.n; ++i1) {
        const long m1 = (i1 < g.n / 2) ? static_cast<long>(i1) : static_cast<long>(i1) - n;
        for (std::size_t i2 = 0; i2 < g.n; ++i2) {
            const long m2 = (i2 < g.n / 2) ? static_cast<long>(i2) : static_cast<long>(i2) - n;
            if (std::labs(m1) > cut || std::labs(m2) > cut) hat[i1 * g.n + i2] = cplx(0.0, 0.0);
        }
    }
    return backward(g, hat);
}

namespace {

// Componentwise real multiplier application for 3-vector fields.
template <typename MulFn>
Vec3Field apply_real_multiplier(const Vec3Field& f, MulFn&& m) {
    const GridSpec& g = f.grid;
    Vec3Field out(g);
    for (int c = 0; c < 3; ++c) {
        ComplexField tmp(g);
        for (std::size_t i = 0; i < g.size(); ++i) tmp.values[i] = cplx(f.comp[c][i], 0.0);
        std::vector<cplx> hat = forward(tmp);
        for (std::size_t i1 = 0; i1 < g.n; ++i1) {
            const double k1 = g.wavenumber(i1);
            for (std::size_t i2 = 0; i2 < g.n; ++i2)
                hat[i1 * g.n + i2] *= m(k1, g.wavenumber(i2));
        }
        ComplexField back = backward(g, hat);
        for (std::size_t i = 0; i < g.size(); ++i) out.comp[c][i] = back.values[i].real();
    }
    return out;
}

}  // namespace

Vec3Field laplacian(const Vec3Field& f) {
    return apply_real_multiplier(f, [](double k1, double k2) { return cplx(-(k1 * k1 + k2 * k2), 0.0); });
}

Vec3Field derivative(const Vec3Field& f, int axis) {
    if (axis != 1 && axis != 2) throw std::invalid_argument("derivative: axis must be 1 or 2");
    const double kny = f.grid.nyquist();
    return apply_real_multiplier(f, [axis, kny](double k1, double k2) {
        const double k = (axis == 1) ? k1 : k2;
        if (k <= -kny) return cplx(0.0, 0.0);
        return cplx(0.0, k);
    });
}

Vec3Field heat_semigroup(const Vec3Field& f, double s) {
    if (s < 0.0) throw std::invalid_argument("heat_semigroup: s must be nonnegative");
    return apply_real_multiplier(f, [s](double k1, double k2) { return cplx(std::exp(-s * (k1 * k1 + k2 * k2)), 0.0); });
}

Vec3Field etd1_apply(const Vec3Field& z, const Vec3Field& nonlin, double ds) {
    const GridSpec& g = z.grid;
    Vec3Field out(g);
    for (int c = 0; c < 3; ++c) {
        ComplexField a(g), b(g);
        for (std::size_t i = 0; i < g.size(); ++i) {
            a.values[i] = cplx(z.comp[c][i], 0.0);
            b.values[i] = cplx(nonlin.comp[c][i], 0.0);
        }
        std::vector<cplx> ha = forward(a);
        std::vector<cplx> hb = forward(b);
        for (std::size_t i1 = 0; i1 < g.n; ++i1) {
            const double k1 = g.wavenumber(i1);
            for (std::size_t i2 = 0; i2 < g.n; ++i2) {
                const double k2 = g.wavenumber(i2);
                const double lam = -(k1 * k1 + k2 * k2);
                const double e = std::exp(ds * lam);
                const double phi1 = (std::abs(lam) > 1e-14) ? (e - 1.0) / (ds * lam) : 1.0;
                ha[i1 * g.n + i2] = e * ha[i1 * g.n + i2] + ds * phi1 * hb[i1 * g.n + i2];
            }
        }
        ComplexField back = backward(g, ha);
        for (std::size_t i = 0; i < g.size(); ++i) out.comp[c][i] = back.values[i].real();
    }
    return out;
}

}  // namespace spectral
}  // namespace smlab
