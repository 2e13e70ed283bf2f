#include <cmath>
#include <stdexcept>

#include "tuza/extremal.hpp"

namespace tuza {

double chernoff_tail(std::size_t n, double p, double x, Tail side) {
    if (x < 0.0) throw std::invalid_argument("deviation must be nonnegative");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability must lie in [0,1]");
    if (x == 0.0) return 1.0;
    const double mu = static_cast<double>(n) * p;
    if (side == Tail::upper) return std::exp(-x * x / (2.0 * (mu + x / 3.0)));
    if (mu == 0.0) return 0.0;
    return std::exp(-x * x / (2.0 * mu));
}

}  // namespace tuza
