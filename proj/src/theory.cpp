#include "hofnet/theory.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hofnet/generator.hpp"

namespace hofnet {

namespace {

mpz_class mpz_binomial(unsigned long n, unsigned long k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

double log_mpz(const mpz_class& v) {
    signed long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

void check_theory_domain(int K, int m) {
    if (K < 3)
        throw std::domain_error(
            "theory: K must be >= 3 (for K =  2 the 1-dimensional distribution is the "
            "two-point law on {1, m+2}; for K = 1 there is no l in 1..K-1)");
    if (m < 0) throw std::domain_error("theory: m must be >= 0");
}

} // namespace

TheoryTable::TheoryTable(int K, int m, int t) : K_(K), m_(m), t_(t) {
    check_theory_domain(K, m);
    if (t < 0) throw std::domain_error("theory: t must be >= 0");
    S_ = compute_S(K, m);

    // y_[l][r] for l in 1..K (index 0 unused), r in 0..K-l
    y_.assign(K + 1, {});
    for (int l = 1; l <= K; ++l) y_[l].assign(K - l + 1, mpz_class(0));
    for (int l = 1; l < K; ++l)
        y_[l][0] = mpz_binomial(K + 1, l + 1);
    y_[K][0] = 1;

    mpz_class s_pow = 1; // S^tt after the update below
    for (int tt = 1; tt <= t_; ++tt) {
        const mpz_class s_prev = s_pow;
        s_pow *= static_cast<unsigned long>(S_);
        auto prev = y_;
        y_[K][0] = s_pow;
        for (int l = 1; l < K; ++l) {
            for (int r = 1; r <= K - l; ++r)
                y_[l][r] = (l + 1) * prev[l][r] + (l + 2) * prev[l + 1][r - 1];
            // r = 0 through both routes; they must agree exactly.
            mpz_class direct = (l + 1) * prev[l][0] +
                               mpz_class(m) * (K + 1) * s_prev * mpz_binomial(K, l);
            mpz_class complement = mpz_binomial(K + 1, l + 1) * s_pow;
            mpz_class weight = 1;
            for (int j = 1; j <= K - l; ++j) {
                weight *= (m + 1);
                complement -= weight * y_[l][j];
            }
            if (direct != complement)
                throw std::logic_error("TheoryTable: the two r=0 evaluations disagree at t=" +
                                       std::to_string(tt) + ", l=" + std::to_string(l));
            y_[l][0] = direct;
        }
    }
    facet_count_ = s_pow;
}

const mpz_class& TheoryTable::count(int l, int r) const {
    if (l < 1 || l > K_ || r < 0 || r > K_ - l)
        throw std::domain_error("TheoryTable::count: (l, r) out of range");
    return y_[l][r];
}

std::map<mpz_class, mpz_class> TheoryTable::counts_by_degree(int l) const {
    if (l < 1 || l > K_) throw std::domain_error("counts_by_degree: l out of range");
    std::map<mpz_class, mpz_class> out;
    mpz_class degree = 1;
    for (int r = 0; r <= K_ - l; ++r) {
        if (y_[l][r] > 0) out[degree] += y_[l][r];
        degree *= (m_ + 1);
    }
    return out;
}

double growth_factor(int K, int m, int l, int r) {
    check_theory_domain(K, m);
    if (m < 1) throw std::domain_error("growth_factor: m must be >= 1");
    if (l < 1 || l > K || r < 0 || r > K - l)
        throw std::domain_error("growth_factor: (l, r) out of range");
    const double S = static_cast<double>(compute_S(K, m));
    double c = 1.0;
    // walk the chain down to the c_{l+r, 0} anchor
    for (int i = l; i < l + r; ++i) c *= (i + 2) / (S - i - 1);
    const int anchor = l + r;
    if (anchor < K)
        c *= static_cast<double>(binomial(K + 1, anchor + 1)) * m * (anchor + 1) /
             (S - anchor - 1);
    return c;
}

double ratio_C_l(int K, int m, int l) {
    check_theory_domain(K, m);
    if (l < 1 || l > K - 1)
        throw std::domain_error("ratio_C_l: l must be in 1..K-1");
    const double S = static_cast<double>(compute_S(K, m));
    return (S - l - 2) * (l + 1) / (static_cast<double>(K - l) * (l + 2));
}

GammaEstimate gamma_closed_form(int K, int m, int l) {
    check_theory_domain(K, m);
    if (m < 1)
        throw std::domain_error("gamma_closed_form: undefined for m = 0 (log(m+1) = 0)");
    if (l < 1 || l > K - 1)
        throw std::domain_error("gamma_closed_form: l must be in 1..K-1");
    const std::uint64_t S = compute_S(K, m);
    const mpz_class bin = mpz_binomial(static_cast<unsigned long>(S - l - 2),
                                       static_cast<unsigned long>(K - l));
    const double log_arg = std::log(static_cast<double>(l + 1)) -
                           std::log(static_cast<double>(K + 1)) + log_mpz(bin);
    const double gamma = log_arg / ((K - l) * std::log(static_cast<double>(m + 1)));
    return {gamma, GammaMethod::ClosedForm, 2};
}

DegreeDistribution theory_distribution(int K, int m, int t, int l) {
    const TheoryTable table(K, m, t);
    if (l < 1 || l > K - 1)
        throw std::domain_error("theory_distribution: l must be in 1..K-1");
    return DegreeDistribution::from_counts(l, table.counts_by_degree(l));
}

} // namespace hofnet
