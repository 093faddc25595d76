#pragma once

#include <functional>

#include "smlab/field.hpp"

namespace smlab {

/// Forward/backward transforms and Fourier-multiplier operators on a grid.
/// Plans are cached per grid size and created with FFTW_ESTIMATE so results
/// are bit-reproducible across runs.
namespace spectral {

/// hat(f) with the unnormalized forward DFT; inverse divides by n^2.
std::vector<cplx> forward(const ComplexField& f);
ComplexField backward(const GridSpec& g, const std::vector<cplx>& hat);

/// F^{-1}( m(xi1, xi2) * F(f) ). Throws if the multiplier produces a
/// non-finite value on the lattice.
ComplexField fourier_multiplier(const ComplexField& f, const std::function<cplx(double, double)>& m);

/// Multiplier -|xi|^2.
ComplexField laplacian(const ComplexField& f);

/// Spectral d/dx_axis (axis 1 or 2). Odd multiplier: Nyquist row/column zeroed.
ComplexField derivative(const ComplexField& f, int axis);

/// e^{it Delta}: multiplier e^{-i t |xi|^2}. Unitary on L^2.
ComplexField free_schrodinger(const ComplexField& f, double t);

/// e^{s Delta}: multiplier e^{-s |xi|^2}, s >= 0 (negative s rejected).
ComplexField heat_semigroup(const ComplexField& f, double s);

/// 2/3-rule: zero modes with |m_axis| > n/3 (applied to both axes).
ComplexField dealias_23(const ComplexField& f);

// Vec3Field counterparts (componentwise, real fields).
Vec3Field laplacian(const Vec3Field& f);
Vec3Field derivative(const Vec3Field& f, int axis);
Vec3Field heat_semigroup(const Vec3Field& f, double s);

/// One ETD step for d_s z = Delta z + N: e^{ds L} z + ds * phi1(ds L) N.
Vec3Field etd1_apply(const Vec3Field& z, const Vec3Field& nonlin, double ds);

}  // namespace spectral
}  // namespace smlab
