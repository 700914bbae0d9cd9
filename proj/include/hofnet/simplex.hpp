#ifndef HOFNET_SIMPLEX_HPP
#define HOFNET_SIMPLEX_HPP

#include <compare>
#include <cstdint>
#include <vector>

namespace hofnet {

using NodeId = std::uint32_t;

/// A simplex as a strictly sorted vertex set. Dimension = |vertices| - 1.
class Simplex {
public:
    Simplex() = default;
    explicit Simplex(std::vector<NodeId> vertices);

    int dimension() const { return static_cast<int>(verts_.size()) - 1; }
    const std::vector<NodeId>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }

    /// Subset test against another (sorted) simplex.
    bool contains(const Simplex& face) const;

    auto operator<=>(const Simplex&) const = default;

private:
    std::vector<NodeId> verts_;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const;
};

/// C(n, k) in 64 bits; throws std::overflow_error if the value does not fit.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Number of d-faces within a single f-simplex: C(f+1, d+1). Requires 0 <= d <= f.
std::uint64_t face_count_within(int d, int f);

/// All l-dimensional faces of s, i.e. the (l+1)-subsets of its vertices.
std::vector<Simplex> faces(const Simplex& s, int l);

} // namespace hofnet

#endif
