#include "smlab/grid.hpp"

namespace smlab {

static bool power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

GridSpec make_grid(std::size_t n, double length) {
    if (!power_of_two(n) || n < 16)
        throw std::invalid_argument("make_grid: n must be a power of two, n >= 16");
    if (!(length > 0.0))
        throw std::invalid_argument("make_grid: length must be positive");
    GridSpec g;
    g.n = n;
    g.length = length;
    g.spacing = length / static_cast<double>(n);
    return g;
}

}  // namespace smlab
