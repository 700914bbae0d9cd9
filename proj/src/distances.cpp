#include "hofnet/distances.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include "hofnet/parallel.hpp"

namespace hofnet {

namespace {
constexpr std::uint16_t kUnset = std::numeric_limits<std::uint16_t>::max();
}

DistanceMatrix all_pairs_distances(const Skeleton& g, int threads) {
    const std::size_t n = g.node_count();
    if (n == 0) throw std::invalid_argument("all_pairs_distances: empty graph");
    DistanceMatrix dm(n);

    std::vector<int> ecc(n, 0);
    std::vector<char> bad(n, 0);
    parallel_for(n, threads, [&](std::size_t s) {
        auto dist = dm.row(static_cast<NodeId>(s));
        std::fill(dist.begin(), dist.end(), kUnset);
        dist[s] = 0;
        std::vector<NodeId> frontier{static_cast<NodeId>(s)}, next;
        std::uint16_t level = 0;
        std::size_t reached = 1;
        while (!frontier.empty()) {
            ++level;
            next.clear();
            for (NodeId u : frontier) {
                for (NodeId v : g.neighbors(u)) {
                    if (dist[v] == kUnset) {
                        dist[v] = level;
                        next.push_back(v);
                        ++reached;
                    }
                }
            }
            frontier.swap(next);
        }
        if (reached != n) bad[s] = 1;
        ecc[s] = level - 1;
    });

    if (std::find(bad.begin(), bad.end(), 1) != bad.end())
        throw std::invalid_argument("all_pairs_distances: graph is disconnected");
    dm.set_diameter(n == 1 ? 0 : *std::max_element(ecc.begin(), ecc.end()));
    return dm;
}

} // namespace hofnet
