#ifndef HOFNET_THEORY_HPP
#define HOFNET_THEORY_HPP

#include <gmpxx.h>
#include <map>
#include <vector>

#include "hofnet/gdd.hpp"

namespace hofnet {

/// Exact census of l-faces by generalized-degree class. Y(l, r) is the number
/// of l-faces whose generalized degree is (m+1)^r after t iterations, computed
/// by the recurrence
///   Y(l, t, r) = (l+1) Y(l, t-1, r) + (l+2) Y(l+1, t-1, r-1)    for r >= 1,
/// with the r = 0 row evaluated through both of its closed forms
/// (the m(K+1)C(K,l)S^{t-1} increment and the sum-rule complement), which must
/// agree exactly. Only defined for K >= 3; see the K = 2 two-point note.
class TheoryTable {
public:
    TheoryTable(int K, int m, int t);

    int K() const { return K_; }
    int m() const { return m_; }
    int t() const { return t_; }
    std::uint64_t S() const { return S_; }

    /// Y(l, r) for 1 <= l <= K, 0 <= r <= K - l.
    const mpz_class& count(int l, int r) const;

    /// S^t, the number of facets.
    const mpz_class& facet_count() const { return facet_count_; }

    /// Counts keyed by actual degree value (m+1)^r; classes with the same
    /// degree are merged (they all collapse onto degree 1 when m = 0).
    std::map<mpz_class, mpz_class> counts_by_degree(int l) const;

private:
    int K_, m_, t_;
    std::uint64_t S_;
    mpz_class facet_count_;
    std::vector<std::vector<mpz_class>> y_; // y_[l][r], l in 1..K
};

inline TheoryTable y_table(int K, int m, int t) { return TheoryTable(K, m, t); }

/// Asymptotic growth factor c_{l,r} with Y(l, t, r) ~ c_{l,r} S^t:
/// c_{K,0} = 1, c_{l,0} = C(K+1, l+1) m (l+1) / (S-l-1), and the chain
/// c_{l,r} = (l+2)/(S-l-1) c_{l+1,r-1}. Requires K >= 3, m >= 1.
double growth_factor(int K, int m, int l, int r);

/// Limiting ratio between consecutive degree classes:
/// C_l = (S-l-2)(l+1) / ((K-l)(l+2)), for 1 <= l <= K-1.
double ratio_C_l(int K, int m, int l);

/// Closed-form two-point estimate of the power-law exponent:
/// gamma = log((l+1)/(K+1) C(S-l-2, K-l)) / ((K-l) log(m+1)).
/// The binomial is computed exactly and taken to log space. Requires m >= 1.
GammaEstimate gamma_closed_form(int K, int m, int l);

/// Distribution over degree values for the l-faces at iteration t, from the
/// exact table.
DegreeDistribution theory_distribution(int K, int m, int t, int l);

} // namespace hofnet

#endif
