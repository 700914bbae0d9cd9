#include "hofnet/gdd.hpp"

#include <cmath>
#include <stdexcept>

#include "hofnet/errors.hpp"
#include "hofnet/stats.hpp"

namespace hofnet {

namespace {

// log of a positive mpz without overflow: val = mant * 2^exp, mant in [0.5, 1)
double log_mpz(const mpz_class& v) {
    signed long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

} // namespace

DegreeDistribution DegreeDistribution::from_counts(
    int l, const std::map<mpz_class, mpz_class>& counts) {
    DegreeDistribution d;
    d.l = l;
    mpz_class total = 0;
    for (const auto& [k, c] : counts) {
        if (c < 0) throw std::invalid_argument("DegreeDistribution: negative count");
        if (c > 0) total += c;
    }
    if (total == 0) throw std::invalid_argument("DegreeDistribution: empty distribution");
    for (const auto& [k, c] : counts) {
        if (c == 0) continue;
        mpq_class p(c, total);
        p.canonicalize();
        d.points.push_back({k, c, p.get_d()});
    }
    return d;
}

mpz_class DegreeDistribution::total_count() const {
    mpz_class total = 0;
    for (const auto& pt : points) total += pt.count;
    return total;
}

DegreeDistribution empirical_gdd(const PureComplex& c, int l) {
    if (l < 1 || l > c.dimension() - 1)
        throw std::domain_error("empirical_gdd: l must be in 1..K-1");
    std::map<mpz_class, mpz_class> hist;
    for (const auto& [face, deg] : face_census(c, l))
        hist[mpz_class(static_cast<unsigned long>(deg))] += 1;
    return DegreeDistribution::from_counts(l, hist);
}

GammaEstimate fit_power_law(const DegreeDistribution& d) {
    std::vector<double> xs, ys;
    for (const auto& pt : d.points) {
        if (pt.probability <= 0.0) continue;
        xs.push_back(log_mpz(pt.degree));
        ys.push_back(std::log(pt.probability));
    }
    if (xs.size() < 2)
        throw EstimationError("fit_power_law: need at least two support points");
    const LinearFit fit = linear_fit(xs, ys);
    return {-fit.slope, GammaMethod::LeastSquares, fit.points};
}

} // namespace hofnet
