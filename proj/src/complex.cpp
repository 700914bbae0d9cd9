#include "hofnet/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace hofnet {

PureComplex::PureComplex(int dimension, GeneratorParams params, Skeleton skeleton,
                         std::vector<Simplex> facets)
    : k_(dimension), params_(std::move(params)), skeleton_(std::move(skeleton)),
      facets_(std::move(facets)) {
    if (k_ < 0) throw std::invalid_argument("PureComplex: negative dimension");
    if (facets_.empty()) throw std::invalid_argument("PureComplex: no facets");
    std::sort(facets_.begin(), facets_.end());
    facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());

    // Every facet must be a (K+1)-clique of the skeleton; every skeleton edge
    // must lie in at least one facet (purity).
    for (const Simplex& f : facets_) {
        if (f.dimension() != k_)
            throw std::invalid_argument("PureComplex: facet of wrong dimension");
        const auto& vs = f.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (vs[i] >= skeleton_.node_count())
                throw std::invalid_argument("PureComplex: facet vertex out of range");
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (!skeleton_.has_edge(vs[i], vs[j]))
                    throw std::invalid_argument("PureComplex: facet is not a clique");
        }
    }
    if (k_ >= 1) {
        FaceCensus edge_census;
        for (const Simplex& f : facets_)
            for (const Simplex& e : faces(f, 1))
                ++edge_census[e];
        for (auto [u, v] : skeleton_.edges())
            if (!edge_census.count(Simplex({u, v})))
                throw std::invalid_argument("PureComplex: skeleton edge outside all facets");
    }
}

FaceCensus face_census(const PureComplex& c, int l) {
    if (l < 0 || l > c.dimension())
        throw std::domain_error("face_census: l out of range");
    FaceCensus census;
    census.reserve(c.facets().size() * face_count_within(l, c.dimension()));
    for (const Simplex& f : c.facets())
        for (Simplex& face : faces(f, l))
            ++census[std::move(face)];
    return census;
}

std::vector<Simplex> enumerate_l_faces(const PureComplex& c, int l) {
    auto census = face_census(c, l);
    std::vector<Simplex> out;
    out.reserve(census.size());
    for (auto& [s, cnt] : census) out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t generalized_degree(const PureComplex& c, const Simplex& f) {
    if (f.dimension() >= c.dimension())
        throw std::domain_error("generalized_degree: face dimension must be < K");
    std::uint64_t count = 0;
    for (const Simplex& facet : c.facets())
        if (facet.contains(f)) ++count;
    if (count == 0)
        throw std::domain_error("generalized_degree: not a face of any facet");
    return count;
}

} // namespace hofnet
