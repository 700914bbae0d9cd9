#ifndef HOFNET_COMPLEX_HPP
#define HOFNET_COMPLEX_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "hofnet/simplex.hpp"
#include "hofnet/skeleton.hpp"

namespace hofnet {

/// Parameters of the iterative construction. Generation itself is fully
/// deterministic; the seed only feeds the stochastic analysis (CBB trials).
struct GeneratorParams {
    int k = 2;
    int m = 1;
    int t = 1;
    std::uint64_t seed = 0;

    bool operator==(const GeneratorParams&) const = default;
};

/// A pure K-dimensional simplicial complex given by its facet list (all of
/// dimension exactly K) plus the 1-skeleton of their downward closure.
/// Facets are kept canonically sorted. Immutable after construction.
class PureComplex {
public:
    PureComplex(int dimension, GeneratorParams params, Skeleton skeleton,
                std::vector<Simplex> facets);

    int dimension() const { return k_; }
    const GeneratorParams& params() const { return params_; }
    const Skeleton& skeleton() const { return skeleton_; }
    const std::vector<Simplex>& facets() const { return facets_; }

    bool operator==(const PureComplex&) const = default;

private:
    int k_;
    GeneratorParams params_;
    Skeleton skeleton_;
    std::vector<Simplex> facets_;
};

/// Map from every l-face of the complex to its generalized degree (the number
/// of facets containing it).
using FaceCensus = std::unordered_map<Simplex, std::uint64_t, SimplexHash>;

FaceCensus face_census(const PureComplex& c, int l);

/// All l-simplices of the complex (deduplicated union of facet faces), sorted.
std::vector<Simplex> enumerate_l_faces(const PureComplex& c, int l);

/// Number of facets containing face f. Throws std::domain_error if f is not a
/// face of any facet.
std::uint64_t generalized_degree(const PureComplex& c, const Simplex& f);

} // namespace hofnet

#endif
