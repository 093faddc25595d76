#include "smlab/nls.hpp"

#include <cmath>

#include "smlab/fft.hpp"

namespace smlab {

ComplexField nls_step(const ComplexField& u, double dt, int mu, bool dealias) {
    ComplexField v = spectral::free_schrodinger(u, dt / 2.0);
    for (auto& z : v.values) {
        const double phase = -static_cast<double>(mu) * std::norm(z) * dt;
        z *= cplx(std::cos(phase), std::sin(phase));
    }
    if (dealias) v = spectral::dealias_23(v);
    return spectral::free_schrodinger(v, dt / 2.0);
}

double nls_mass(const ComplexField& u) {
    double s = 0.0;
    for (const auto& z : u.values) s += std::norm(z);
    return s * u.grid.spacing * u.grid.spacing;
}

double nls_hamiltonian(const ComplexField& u, int mu) {
    const ComplexField ux = spectral::derivative(u, 1);
    const ComplexField uy = spectral::derivative(u, 2);
    double s = 0.0;
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        const double g2 = std::norm(ux.values[i]) + std::norm(uy.values[i]);
        const double a2 = std::norm(u.values[i]);
        s += g2 + 0.5 * static_cast<double>(mu) * a2 * a2;
    }
    return s * u.grid.spacing * u.grid.spacing;
}

Trajectory nls_evolve(const ComplexField& u0, const NlsConfig& cfg) {
    if (!(cfg.dt > 0.0)) throw std::invalid_argument("nls_evolve: dt must be positive");
    if (cfg.mu != 1 && cfg.mu != -1) throw std::invalid_argument("nls_evolve: mu must be +1 or -1");
    Trajectory traj;
    auto record = [&](double t, const ComplexField& u) {
        traj.times.push_back(t);
        traj.states.push_back(u);
        traj.mass.push_back(nls_mass(u));
        traj.hamiltonian.push_back(nls_hamiltonian(u, cfg.mu));
    };
    ComplexField u = cfg.dealias ? spectral::dealias_23(u0) : u0;
    record(0.0, u);
    const std::size_t nsteps = static_cast<std::size_t>(std::llround(cfg.t_end / cfg.dt));
    for (std::size_t k = 1; k <= nsteps; ++k) {
        u = nls_step(u, cfg.dt, cfg.mu, cfg.dealias);
        const double t = static_cast<double>(k) * cfg.dt;
        if (k % cfg.sample_stride == 0 || k == nsteps) {
            if (!all_finite(u)) {
                traj.blow_up = true;
                return traj;
            }
            record(t, u);
        }
    }
    return traj;
}

std::vector<ComplexField> scattering_profile(const Trajectory& traj) {
    if (traj.states.empty()) throw std::invalid_argument("scattering_profile: empty trajectory");
    std::vector<ComplexField> out;
    out.reserve(traj.states.size());
    for (std::size_t i = 0; i < traj.states.size(); ++i)
        out.push_back(spectral::free_schrodinger(traj.states[i], -traj.times[i]));
    return out;
}

}  // namespace smlab
