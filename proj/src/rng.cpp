#include "csra/rng.hpp"

#include <cmath>

namespace csra {

std::uint64_t SplitMix64::poisson(double mean) {
    const double threshold = std::exp(-mean);
    std::uint64_t count = 0;
    double product = real();
    while (product > threshold) {
        ++count;
        product *= real();
    }
    return count;
}

} // namespace csra
