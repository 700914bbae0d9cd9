#ifndef HOFNET_GDD_HPP
#define HOFNET_GDD_HPP

#include <gmpxx.h>
#include <map>
#include <vector>

#include "hofnet/complex.hpp"

namespace hofnet {

struct DegreePoint {
    mpz_class degree;
    mpz_class count;
    double probability = 0.0;
};

/// Distribution of generalized degrees of the l-faces of a complex. Points are
/// sorted by degree; probabilities are exact count ratios rounded to double.
struct DegreeDistribution {
    int l = 0;
    std::vector<DegreePoint> points;

    static DegreeDistribution from_counts(int l, const std::map<mpz_class, mpz_class>& counts);
    mpz_class total_count() const;
};

/// Histogram of generalized degrees over all l-faces, 1 <= l <= K-1.
DegreeDistribution empirical_gdd(const PureComplex& c, int l);

enum class GammaMethod { ClosedForm, LeastSquares };

struct GammaEstimate {
    double gamma = 0.0;
    GammaMethod method = GammaMethod::LeastSquares;
    int points_used = 0;
};

/// Least-squares slope of log P(k) against log k over all support points;
/// gamma is the negated slope. Throws EstimationError on fewer than 2 points.
GammaEstimate fit_power_law(const DegreeDistribution& d);

} // namespace hofnet

#endif
