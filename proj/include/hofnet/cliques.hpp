#ifndef HOFNET_CLIQUES_HPP
#define HOFNET_CLIQUES_HPP

#include <vector>

#include "hofnet/complex.hpp"
#include "hofnet/skeleton.hpp"

namespace hofnet {

/// All maximal cliques of g (Bron-Kerbosch with pivoting), each as a sorted
/// vertex set, returned in sorted order. Intended for small instances
/// (up to ~10^4 nodes); runtime grows with the clique structure.
std::vector<std::vector<NodeId>> maximal_cliques(const Skeleton& g);

/// All cliques of exactly `size` vertices, deduplicated and sorted.
std::vector<Simplex> cliques_of_size(const Skeleton& g, int size);

/// True iff the (K+1)-cliques of the skeleton coincide with the facet set.
bool verify_facets_match_cliques(const PureComplex& c);

} // namespace hofnet

#endif
