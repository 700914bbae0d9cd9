#ifndef HOFNET_DISTANCES_HPP
#define HOFNET_DISTANCES_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "hofnet/skeleton.hpp"

namespace hofnet {

/// Exact all-pairs hop distances of a connected graph, as a dense n x n
/// matrix of uint16 (generated networks have tiny diameters).
class DistanceMatrix {
public:
    explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, 0) {}

    std::size_t size() const { return n_; }
    std::uint16_t operator()(NodeId u, NodeId v) const { return d_[u * n_ + v]; }
    std::span<const std::uint16_t> row(NodeId u) const { return {d_.data() + u * n_, n_}; }
    std::span<std::uint16_t> row(NodeId u) { return {d_.data() + u * n_, n_}; }
    int diameter() const { return diameter_; }
    void set_diameter(int d) { diameter_ = d; }

private:
    std::size_t n_;
    std::vector<std::uint16_t> d_;
    int diameter_ = 0;
};

/// BFS from every node, fanned out across threads (0 = all available).
/// Throws std::invalid_argument if g is disconnected.
DistanceMatrix all_pairs_distances(const Skeleton& g, int threads = 0);

} // namespace hofnet

#endif
