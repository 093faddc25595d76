#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace smlab {

/// Periodic square grid [0,L)^2 with n sites per side and its wavenumber
/// lattice xi = (2*pi/L) * m, m in {-n/2, ..., n/2-1} (FFT storage order).
struct GridSpec {
    std::size_t n = 0;
    double length = 0.0;
    double spacing = 0.0;

    std::size_t size() const { return n * n; }

    /// Wavenumber of FFT-ordered index i along one axis.
    double wavenumber(std::size_t i) const {
        const long m = (i < n / 2) ? static_cast<long>(i) : static_cast<long>(i) - static_cast<long>(n);
        return 2.0 * 3.14159265358979323846 * static_cast<double>(m) / length;
    }

    /// Largest wavenumber component (Nyquist), pi*n/L.
    double nyquist() const { return 3.14159265358979323846 * static_cast<double>(n) / length; }

    bool operator==(const GridSpec& o) const { return n == o.n && length == o.length; }
};

/// Rejects non-power-of-two n (n >= 16) and non-positive length.
GridSpec make_grid(std::size_t n, double length);

}  // namespace smlab
