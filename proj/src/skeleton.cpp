#include "hofnet/skeleton.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hofnet {

const char* to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::Original: return "original";
        case NodeKind::Midpoint: return "midpoint";
        case NodeKind::Multiplier: return "multiplier";
    }
    return "?";
}

NodeKind node_kind_from_string(const std::string& s) {
    if (s == "original") return NodeKind::Original;
    if (s == "midpoint") return NodeKind::Midpoint;
    if (s == "multiplier") return NodeKind::Multiplier;
    throw std::invalid_argument("unknown node role: " + s);
}

Skeleton::Skeleton(std::size_t node_count,
                   std::vector<std::pair<NodeId, NodeId>> edges,
                   std::vector<NodeRole> roles)
    : roles_(std::move(roles)) {
    if (roles_.size() != node_count)
        throw std::invalid_argument("Skeleton: roles size mismatch");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("Skeleton: self loop");
        if (u >= node_count || v >= node_count)
            throw std::invalid_argument("Skeleton: node id out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::vector<std::size_t> deg(node_count, 0);
    for (auto [u, v] : edges) { ++deg[u]; ++deg[v]; }
    offsets_.assign(node_count + 1, 0);
    for (std::size_t i = 0; i < node_count; ++i) offsets_[i + 1] = offsets_[i] + deg[i];
    adj_.resize(offsets_[node_count]);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (auto [u, v] : edges) {
        adj_[cursor[u]++] = v;
        adj_[cursor[v]++] = u;
    }
    for (std::size_t i = 0; i < node_count; ++i)
        std::sort(adj_.begin() + offsets_[i], adj_.begin() + offsets_[i + 1]);
}

bool Skeleton::has_edge(NodeId u, NodeId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<NodeId, NodeId>> Skeleton::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(edge_count());
    for (NodeId u = 0; u < node_count(); ++u)
        for (NodeId v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

} // namespace hofnet
