#ifndef HOFNET_GENERATOR_HPP
#define HOFNET_GENERATOR_HPP

#include <cstdint>
#include <gmpxx.h>

#include "hofnet/complex.hpp"

namespace hofnet {

inline constexpr std::uint64_t kDefaultFacetCap = 1'000'000;

/// Per-iteration facet multiplication factor:
///   m+2 for K=1, 3m+4 for K=2, (m+1)(K+1) for K > 2.
std::uint64_t compute_S(int K, int m);

/// Facet count after t iterations: S^t (exact, arbitrary width).
mpz_class predicted_facets(const GeneratorParams& p);

/// One refinement step: subdivide every edge at a fresh midpoint, form the
/// per-(facet, vertex) bottoms, attach m multiplier nodes per distinct bottom,
/// and rebuild the facet set.
PureComplex iterate_once(const PureComplex& c, int m);

/// Build the full complex for the given parameters. Node ids follow creation
/// order: originals 0..K, then per iteration midpoints in sorted-edge order
/// followed by multipliers in sorted-bottom order. Throws SizeCapError if the
/// predicted facet count exceeds facet_cap.
PureComplex generate(const GeneratorParams& p, std::uint64_t facet_cap = kDefaultFacetCap);

} // namespace hofnet

#endif
