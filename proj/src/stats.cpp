#include "hofnet/stats.hpp"

#include <cmath>

#include "hofnet/errors.hpp"

namespace hofnet {

LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw EstimationError("linear_fit: size mismatch");
    const std::size_t n = x.size();
    if (n < 2)
        throw EstimationError("linear_fit: need at least two points");

    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) { mx += x[i]; my += y[i]; }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx <= 0.0)
        throw EstimationError("linear_fit: no variance in x");

    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.points = static_cast<int>(n);
    if (syy <= 0.0) {
        fit.r_squared = 1.0; // exact horizontal line
    } else {
        fit.r_squared = (sxy * sxy) / (sxx * syy);
    }
    return fit;
}

} // namespace hofnet
