#include "hofnet/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace hofnet {

Simplex::Simplex(std::vector<NodeId> vertices) : verts_(std::move(vertices)) {
    std::sort(verts_.begin(), verts_.end());
    if (std::adjacent_find(verts_.begin(), verts_.end()) != verts_.end())
        throw std::invalid_argument("Simplex: duplicate vertex");
    if (verts_.empty())
        throw std::invalid_argument("Simplex: empty vertex set");
}

bool Simplex::contains(const Simplex& face) const {
    return std::includes(verts_.begin(), verts_.end(),
                         face.verts_.begin(), face.verts_.end());
}

std::size_t SimplexHash::operator()(const Simplex& s) const {
    // FNV-1a over the vertex ids
    std::uint64_t h = 1469598103934665603ull;
    for (NodeId v : s.vertices()) {
        h ^= v;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > static_cast<unsigned __int128>(UINT64_MAX))
            throw std::overflow_error("binomial: value exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t face_count_within(int d, int f) {
    if (d < 0 || f < 0 || d > f)
        throw std::domain_error("face_count_within: requires 0 <= d <= f");
    return binomial(static_cast<std::uint64_t>(f) + 1, static_cast<std::uint64_t>(d) + 1);
}

std::vector<Simplex> faces(const Simplex& s, int l) {
    if (l < 0 || l > s.dimension())
        throw std::domain_error("faces: l out of range");
    const auto& v = s.vertices();
    const std::size_t n = v.size();
    const std::size_t k = static_cast<std::size_t>(l) + 1;
    std::vector<Simplex> out;
    out.reserve(face_count_within(l, s.dimension()));

    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::vector<NodeId> sub(k);
        for (std::size_t i = 0; i < k; ++i) sub[i] = v[idx[i]];
        out.emplace_back(std::move(sub));
        // next combination
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

} // namespace hofnet
