#include "hofnet/cliques.hpp"

#include <algorithm>
#include <stdexcept>

namespace hofnet {

namespace {

// Bron-Kerbosch with pivot selection over sorted candidate vectors.
class BronKerbosch {
public:
    explicit BronKerbosch(const Skeleton& g) : g_(g) {}

    std::vector<std::vector<NodeId>> run() {
        std::vector<NodeId> p(g_.node_count());
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<NodeId>(i);
        std::vector<NodeId> r, x;
        expand(r, p, x);
        std::sort(out_.begin(), out_.end());
        return std::move(out_);
    }

private:
    static std::vector<NodeId> intersect(const std::vector<NodeId>& a,
                                         std::span<const NodeId> b) {
        std::vector<NodeId> out;
        out.reserve(std::min(a.size(), b.size()));
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(out));
        return out;
    }

    void expand(std::vector<NodeId>& r, const std::vector<NodeId>& p,
                const std::vector<NodeId>& x) {
        if (p.empty() && x.empty()) {
            out_.push_back(r);
            return;
        }
        // pivot: vertex of P union X with most neighbors in P
        NodeId pivot = 0;
        std::size_t best = 0;
        bool have = false;
        for (const auto* set : {&p, &x}) {
            for (NodeId u : *set) {
                std::size_t cnt = intersect(p, g_.neighbors(u)).size();
                if (!have || cnt > best) { pivot = u; best = cnt; have = true; }
            }
        }
        auto piv_nb = g_.neighbors(pivot);
        std::vector<NodeId> candidates;
        for (NodeId v : p)
            if (!std::binary_search(piv_nb.begin(), piv_nb.end(), v))
                candidates.push_back(v);

        std::vector<NodeId> p_cur = p, x_cur = x;
        for (NodeId v : candidates) {
            auto nb = g_.neighbors(v);
            r.push_back(v);
            std::vector<NodeId> p_next = intersect(p_cur, nb);
            std::vector<NodeId> x_next = intersect(x_cur, nb);
            expand(r, p_next, x_next);
            r.pop_back();
            p_cur.erase(std::find(p_cur.begin(), p_cur.end(), v));
            x_cur.insert(std::lower_bound(x_cur.begin(), x_cur.end(), v), v);
        }
    }

    const Skeleton& g_;
    std::vector<std::vector<NodeId>> out_;
};

} // namespace

std::vector<std::vector<NodeId>> maximal_cliques(const Skeleton& g) {
    return BronKerbosch(g).run();
}

std::vector<Simplex> cliques_of_size(const Skeleton& g, int size) {
    if (size < 1) throw std::domain_error("cliques_of_size: size must be >= 1");
    std::vector<Simplex> out;
    for (const auto& mc : maximal_cliques(g)) {
        if (static_cast<int>(mc.size()) < size) continue;
        for (Simplex& s : faces(Simplex(mc), size - 1))
            out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool verify_facets_match_cliques(const PureComplex& c) {
    auto cliques = cliques_of_size(c.skeleton(), c.dimension() + 1);
    return cliques == c.facets();
}

} // namespace hofnet
