#ifndef HOFNET_STATS_HPP
#define HOFNET_STATS_HPP

#include <span>

namespace hofnet {

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    int points = 0;
};

/// Ordinary least squares y = a + b x. Throws EstimationError on fewer than
/// two points or zero variance in x. A perfectly flat exact fit reports
/// r_squared = 1.
LinearFit linear_fit(std::span<const double> x, std::span<const double> y);

} // namespace hofnet

#endif
