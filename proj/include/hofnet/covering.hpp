#ifndef HOFNET_COVERING_HPP
#define HOFNET_COVERING_HPP

#include <string>
#include <vector>

#include "hofnet/complex.hpp"
#include "hofnet/distances.hpp"
#include "hofnet/rng.hpp"
#include "hofnet/skeleton.hpp"

namespace hofnet {

enum class CoverMethod { CBB, OBCA };

const char* to_string(CoverMethod m);
CoverMethod cover_method_from_string(const std::string& s);

/// Compact-box-burning: grow boxes from random seeds so that all pairwise
/// distances inside a box stay below l_B. Boxes partition the node set.
std::vector<std::vector<NodeId>> cbb_boxes(const DistanceMatrix& dm, int l_B,
                                           SplitMix64& rng);
std::size_t cbb_cover(const DistanceMatrix& dm, int l_B, SplitMix64& rng);

/// Overlapping box covering: one candidate ball of radius r_B per node; a box
/// is kept only while it covers some node no other remaining box covers
/// (ascending size pass, then a descending redundancy prune). Deterministic.
std::vector<std::vector<NodeId>> obca_boxes(const DistanceMatrix& dm, int r_B);
std::size_t obca_cover(const DistanceMatrix& dm, int r_B);

struct CoverSample {
    int box_size = 0;      // l_B (OBCA radii reported as l_B = 2 r_B + 1)
    double mean_boxes = 0; // mean N_B over trials
    double std_boxes = 0;  // sample standard deviation
    int trials = 0;
};

struct BoxCoveringResult {
    CoverMethod method = CoverMethod::CBB;
    std::vector<CoverSample> samples;
};

struct DimensionEstimate {
    double d_b = 0.0;
    double r_squared = 0.0;
    int points_used = 0;
};

/// Sweeps all admissible box sizes (CBB: l_B = 1..diameter+1; OBCA:
/// r_B = 0..ceil(diameter/2)), averages N_B over `trials` runs (OBCA is
/// deterministic, trials collapse to 1), and fits log N_B against log l_B by
/// least squares over the points with mean N_B > 1. d_B is the negated slope.
/// CBB trial i draws from an independent stream derived from (seed, i), so
/// results are reproducible bit-for-bit and independent of thread scheduling.
std::pair<BoxCoveringResult, DimensionEstimate>
box_dimension(const Skeleton& g, CoverMethod method, int trials,
              std::uint64_t seed, int threads = 0);

/// Similarity dimension log2(S) from the construction parameters.
double similarity_dimension(const GeneratorParams& p);

} // namespace hofnet

#endif
