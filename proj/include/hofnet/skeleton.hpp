#ifndef HOFNET_SKELETON_HPP
#define HOFNET_SKELETON_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hofnet/simplex.hpp"

namespace hofnet {

enum class NodeKind : std::uint8_t { Original, Midpoint, Multiplier };

struct NodeRole {
    NodeKind kind = NodeKind::Original;
    std::uint32_t birth_time = 0; // iteration at which the node appeared

    bool operator==(const NodeRole&) const = default;
};

const char* to_string(NodeKind kind);
NodeKind node_kind_from_string(const std::string& s);

/// Undirected simple graph over dense node ids, stored as CSR with sorted
/// neighbor lists. Immutable after construction.
class Skeleton {
public:
    Skeleton(std::size_t node_count,
             std::vector<std::pair<NodeId, NodeId>> edges,
             std::vector<NodeRole> roles);

    std::size_t node_count() const { return roles_.size(); }
    std::size_t edge_count() const { return adj_.size() / 2; }
    std::span<const NodeId> neighbors(NodeId u) const {
        return {adj_.data() + offsets_[u], adj_.data() + offsets_[u + 1]};
    }
    std::size_t degree(NodeId u) const { return offsets_[u + 1] - offsets_[u]; }
    bool has_edge(NodeId u, NodeId v) const;
    const std::vector<NodeRole>& roles() const { return roles_; }
    const NodeRole& role(NodeId u) const { return roles_[u]; }

    /// Edge list as sorted (u, v) pairs with u < v.
    std::vector<std::pair<NodeId, NodeId>> edges() const;

    bool operator==(const Skeleton&) const = default;

private:
    std::vector<std::size_t> offsets_;
    std::vector<NodeId> adj_;
    std::vector<NodeRole> roles_;
};

} // namespace hofnet

#endif
