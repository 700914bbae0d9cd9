#include "hofnet/generator.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "hofnet/errors.hpp"

namespace hofnet {

std::uint64_t compute_S(int K, int m) {
    if (K < 1) throw std::domain_error("compute_S: K must be >= 1");
    if (m < 0) throw std::domain_error("compute_S: m must be >= 0");
    if (K == 1) return static_cast<std::uint64_t>(m) + 2;
    if (K == 2) return 3ull * static_cast<std::uint64_t>(m) + 4;
    return (static_cast<std::uint64_t>(m) + 1) * (static_cast<std::uint64_t>(K) + 1);
}

mpz_class predicted_facets(const GeneratorParams& p) {
    if (p.t < 0) throw std::domain_error("predicted_facets: t must be >= 0");
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), compute_S(p.k, p.m), static_cast<unsigned long>(p.t));
    return out;
}

namespace {

inline std::uint64_t edge_key(NodeId u, NodeId v) {
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

} // namespace

PureComplex iterate_once(const PureComplex& c, int m) {
    if (m < 0) throw std::domain_error("iterate_once: m must be >= 0");
    const int K = c.dimension();
    const Skeleton& g = c.skeleton();
    const std::uint32_t birth = [&] {
        std::uint32_t latest = 0;
        for (const NodeRole& r : g.roles()) latest = std::max(latest, r.birth_time);
        return latest + 1;
    }();

    std::vector<NodeRole> roles = g.roles();
    NodeId next_id = static_cast<NodeId>(g.node_count());

    // Midpoints, one per current edge, ids in sorted-edge order.
    const auto old_edges = g.edges(); // already sorted (u < v)
    std::unordered_map<std::uint64_t, NodeId> midpoint;
    midpoint.reserve(old_edges.size() * 2);
    for (auto [u, v] : old_edges) {
        midpoint.emplace(edge_key(u, v), next_id++);
        roles.push_back({NodeKind::Midpoint, birth});
    }
    auto mid_of = [&](NodeId u, NodeId v) {
        if (u > v) std::swap(u, v);
        return midpoint.at(edge_key(u, v));
    };

    std::vector<std::pair<NodeId, NodeId>> new_edges;
    new_edges.reserve(old_edges.size() * 4);
    for (auto [u, v] : old_edges) {
        NodeId w = mid_of(u, v);
        new_edges.emplace_back(u, w);
        new_edges.emplace_back(v, w);
    }

    // Bottoms per (facet, vertex): the K midpoints adjacent to the vertex,
    // pairwise connected. Deduplicated as vertex sets before multipliers are
    // attached (the two per-vertex bottoms of a K=1 facet coincide).
    std::vector<Simplex> new_facets;
    std::vector<std::vector<NodeId>> bottoms;
    bottoms.reserve(c.facets().size() * (K + 1));
    for (const Simplex& facet : c.facets()) {
        const auto& vs = facet.vertices();
        for (NodeId v : vs) {
            std::vector<NodeId> bottom;
            bottom.reserve(K);
            for (NodeId x : vs)
                if (x != v) bottom.push_back(mid_of(v, x));
            std::sort(bottom.begin(), bottom.end());
            for (std::size_t i = 0; i < bottom.size(); ++i)
                for (std::size_t j = i + 1; j < bottom.size(); ++j)
                    new_edges.emplace_back(bottom[i], bottom[j]);
            std::vector<NodeId> vertex_facet = bottom;
            vertex_facet.push_back(v);
            new_facets.emplace_back(std::move(vertex_facet));
            bottoms.push_back(std::move(bottom));
        }
        if (K == 2) {
            // the three midpoints of a triangle form a facet of their own
            std::vector<NodeId> central = {mid_of(vs[0], vs[1]), mid_of(vs[0], vs[2]),
                                           mid_of(vs[1], vs[2])};
            new_facets.emplace_back(std::move(central));
        }
    }
    std::sort(bottoms.begin(), bottoms.end());
    bottoms.erase(std::unique(bottoms.begin(), bottoms.end()), bottoms.end());

    // Multipliers: m fresh nodes per distinct bottom, ids in sorted-bottom order.
    for (const auto& bottom : bottoms) {
        for (int j = 0; j < m; ++j) {
            NodeId w = next_id++;
            roles.push_back({NodeKind::Multiplier, birth});
            std::vector<NodeId> facet = bottom;
            facet.push_back(w);
            for (NodeId x : bottom) new_edges.emplace_back(x, w);
            new_facets.emplace_back(std::move(facet));
        }
    }

    Skeleton skeleton(next_id, std::move(new_edges), std::move(roles));
    return PureComplex(K, c.params(), std::move(skeleton), std::move(new_facets));
}

PureComplex generate(const GeneratorParams& p, std::uint64_t facet_cap) {
    if (p.k < 1) throw std::domain_error("generate: K must be >= 1");
    if (p.m < 0) throw std::domain_error("generate: m must be >= 0");
    if (p.t < 0) throw std::domain_error("generate: t must be >= 0");

    const mpz_class predicted = predicted_facets(p);
    if (predicted > facet_cap)
        throw SizeCapError("generate: predicted facet count " + predicted.get_str() +
                           " exceeds cap " + std::to_string(facet_cap));

    const NodeId n0 = static_cast<NodeId>(p.k) + 1;
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::vector<NodeId> all(n0);
    for (NodeId i = 0; i < n0; ++i) all[i] = i;
    for (NodeId i = 0; i < n0; ++i)
        for (NodeId j = i + 1; j < n0; ++j) edges.emplace_back(i, j);

    PureComplex c(p.k, p,
                  Skeleton(n0, std::move(edges), std::vector<NodeRole>(n0, NodeRole{})),
                  {Simplex(all)});
    for (int it = 0; it < p.t; ++it) c = iterate_once(c, p.m);
    return c;
}

} // namespace hofnet
