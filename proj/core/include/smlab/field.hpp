#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "smlab/grid.hpp"

namespace smlab {

using cplx = std::complex<double>;

/// Complex scalar samples on a grid, row-major: index = i1*n + i2.
struct ComplexField {
    GridSpec grid;
    std::vector<cplx> values;

    ComplexField() = default;
    explicit ComplexField(const GridSpec& g) : grid(g), values(g.size(), cplx(0.0, 0.0)) {}

    cplx& operator()(std::size_t i1, std::size_t i2) { return values[i1 * grid.n + i2]; }
    const cplx& operator()(std::size_t i1, std::size_t i2) const { return values[i1 * grid.n + i2]; }
};

struct RealField {
    GridSpec grid;
    std::vector<double> values;

    RealField() = default;
    explicit RealField(const GridSpec& g) : grid(g), values(g.size(), 0.0) {}

    double& operator()(std::size_t i1, std::size_t i2) { return values[i1 * grid.n + i2]; }
    const double& operator()(std::size_t i1, std::size_t i2) const { return values[i1 * grid.n + i2]; }
};

/// Three real components per site; used for sphere-valued maps and frames.
struct Vec3Field {
    GridSpec grid;
    std::array<std::vector<double>, 3> comp;

    Vec3Field() = default;
    explicit Vec3Field(const GridSpec& g) : grid(g) {
        for (auto& c : comp) c.assign(g.size(), 0.0);
    }
};

inline bool all_finite(const ComplexField& f) {
    for (const auto& z : f.values)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

inline bool all_finite(const Vec3Field& f) {
    for (const auto& c : f.comp)
        for (double x : c)
            if (!std::isfinite(x)) return false;
    return true;
}

// Discrete Lebesgue norms as Riemann sums (sum * spacing^2).
double norm_l2(const ComplexField& f);
double norm_l4(const ComplexField& f);
double norm_linf(const ComplexField& f);
double norm_lq(const ComplexField& f, double q);  // q in [1, inf); use norm_linf for q = inf
double norm_l2(const RealField& f);
cplx inner_l2(const ComplexField& f, const ComplexField& g);  // int f * conj(g)

ComplexField operator+(const ComplexField& a, const ComplexField& b);
ComplexField operator-(const ComplexField& a, const ComplexField& b);
ComplexField operator*(cplx s, const ComplexField& a);

}  // namespace smlab
