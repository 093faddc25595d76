#pragma once

#include <optional>
#include <vector>

#include "smlab/field.hpp"

namespace smlab {

/// i u_t + Delta u = mu |u|^2 u on the torus.
struct NlsConfig {
    int mu = 1;            // +1 defocusing, -1 focusing
    double dt = 1e-3;
    double t_end = 1.0;
    std::size_t sample_stride = 10;  // record every k-th step (plus t=0 and t_end)
    bool dealias = true;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<ComplexField> states;
    std::vector<double> mass;         // int |u|^2 per sample
    std::vector<double> hamiltonian;  // int (|grad u|^2 + mu |u|^4 / 2) per sample
    bool blow_up = false;             // NaN detected; trajectory truncated at last finite sample
};

/// One Strang step: half free flow, exact pointwise phase rotation
/// u -> u e^{-i mu |u|^2 dt}, half free flow. Mass-conserving to roundoff.
/// dt may be negative (exact inverse of the forward step up to dealiasing).
ComplexField nls_step(const ComplexField& u, double dt, int mu, bool dealias = true);

double nls_mass(const ComplexField& u);
double nls_hamiltonian(const ComplexField& u, int mu);

Trajectory nls_evolve(const ComplexField& u0, const NlsConfig& cfg);

/// w(t) = e^{-it Delta} u(t) per sample; converges (weakly) to the scattering
/// profile for small data.
std::vector<ComplexField> scattering_profile(const Trajectory& traj);

}  // namespace smlab
