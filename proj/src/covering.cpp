#include "hofnet/covering.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hofnet/errors.hpp"
#include "hofnet/generator.hpp"
#include "hofnet/parallel.hpp"
#include "hofnet/stats.hpp"

namespace hofnet {

const char* to_string(CoverMethod m) {
    return m == CoverMethod::CBB ? "cbb" : "obca";
}

CoverMethod cover_method_from_string(const std::string& s) {
    if (s == "cbb" || s == "CBB") return CoverMethod::CBB;
    if (s == "obca" || s == "OBCA") return CoverMethod::OBCA;
    throw std::invalid_argument("unknown covering method: " + s);
}

std::vector<std::vector<NodeId>> cbb_boxes(const DistanceMatrix& dm, int l_B,
                                           SplitMix64& rng) {
    if (l_B < 1) throw std::domain_error("cbb_boxes: l_B must be >= 1");
    const std::size_t n = dm.size();
    std::vector<char> covered(n, 0);
    std::size_t num_covered = 0;
    std::vector<std::vector<NodeId>> boxes;
    std::vector<NodeId> cand;
    cand.reserve(n);

    while (num_covered < n) {
        cand.clear();
        for (NodeId u = 0; u < n; ++u)
            if (!covered[u]) cand.push_back(u);
        std::vector<NodeId> box;
        while (!cand.empty()) {
            const std::size_t pick = rng.below(cand.size());
            const NodeId p = cand[pick];
            box.push_back(p);
            auto drow = dm.row(p);
            std::size_t w = 0;
            for (NodeId q : cand)
                if (q != p && drow[q] < l_B) cand[w++] = q;
            cand.resize(w);
        }
        std::sort(box.begin(), box.end());
        for (NodeId u : box) covered[u] = 1;
        num_covered += box.size();
        boxes.push_back(std::move(box));
    }
    return boxes;
}

std::size_t cbb_cover(const DistanceMatrix& dm, int l_B, SplitMix64& rng) {
    return cbb_boxes(dm, l_B, rng).size();
}

std::vector<std::vector<NodeId>> obca_boxes(const DistanceMatrix& dm, int r_B) {
    if (r_B < 0) throw std::domain_error("obca_boxes: r_B must be >= 0");
    const std::size_t n = dm.size();
    std::vector<std::vector<NodeId>> ball(n);
    std::vector<std::uint32_t> coverage(n, 0);
    for (NodeId i = 0; i < n; ++i) {
        auto drow = dm.row(i);
        for (NodeId j = 0; j < n; ++j)
            if (drow[j] <= r_B) ball[i].push_back(j);
        for (NodeId j : ball[i]) ++coverage[j];
    }

    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        if (ball[a].size() != ball[b].size()) return ball[a].size() < ball[b].size();
        return a < b;
    });

    auto redundant = [&](NodeId i) {
        for (NodeId v : ball[i])
            if (coverage[v] < 2) return false;
        return true;
    };
    auto drop = [&](NodeId i) {
        for (NodeId v : ball[i]) --coverage[v];
    };

    // Ascending pass: a box survives only if some node is covered by it alone.
    std::vector<NodeId> kept;
    for (NodeId i : order) {
        if (redundant(i)) drop(i);
        else kept.push_back(i);
    }
    // Descending prune over the survivors.
    std::vector<char> selected(n, 0);
    for (NodeId i : kept) selected[i] = 1;
    for (auto it = kept.rbegin(); it != kept.rend(); ++it) {
        if (redundant(*it)) {
            drop(*it);
            selected[*it] = 0;
        }
    }

    std::vector<std::vector<NodeId>> boxes;
    for (NodeId i : kept)
        if (selected[i]) boxes.push_back(ball[i]);
    return boxes;
}

std::size_t obca_cover(const DistanceMatrix& dm, int r_B) {
    return obca_boxes(dm, r_B).size();
}

std::pair<BoxCoveringResult, DimensionEstimate>
box_dimension(const Skeleton& g, CoverMethod method, int trials,
              std::uint64_t seed, int threads) {
    if (trials < 1) throw std::domain_error("box_dimension: trials must be >= 1");
    if (g.node_count() < 3)
        throw std::domain_error("box_dimension: need a connected graph with n >= 3");
    const DistanceMatrix dm = all_pairs_distances(g, threads);
    const int diam = dm.diameter();

    BoxCoveringResult result;
    result.method = method;

    if (method == CoverMethod::CBB) {
        const int nsizes = diam + 1;
        std::vector<std::vector<std::uint64_t>> counts(
            trials, std::vector<std::uint64_t>(nsizes, 0));
        parallel_for(static_cast<std::size_t>(trials), threads, [&](std::size_t tr) {
            SplitMix64 rng(derive_stream(seed, tr));
            for (int l = 1; l <= nsizes; ++l)
                counts[tr][l - 1] = cbb_cover(dm, l, rng);
        });
        for (int l = 1; l <= nsizes; ++l) {
            std::uint64_t sum = 0;
            for (int tr = 0; tr < trials; ++tr) sum += counts[tr][l - 1];
            const double mean = static_cast<double>(sum) / trials;
            double var = 0.0;
            for (int tr = 0; tr < trials; ++tr) {
                const double d = static_cast<double>(counts[tr][l - 1]) - mean;
                var += d * d;
            }
            const double sd = trials > 1 ? std::sqrt(var / (trials - 1)) : 0.0;
            result.samples.push_back({l, mean, sd, trials});
        }
    } else {
        const int rmax = (diam + 1) / 2; // ceil(diam / 2)
        for (int r = 0; r <= rmax; ++r) {
            const double nb = static_cast<double>(obca_cover(dm, r));
            result.samples.push_back({2 * r + 1, nb, 0.0, 1});
        }
    }

    std::vector<double> xs, ys;
    for (const CoverSample& s : result.samples) {
        if (s.mean_boxes > 1.0) {
            xs.push_back(std::log(static_cast<double>(s.box_size)));
            ys.push_back(std::log(s.mean_boxes));
        }
    }
    if (xs.size() < 2)
        throw EstimationError("box_dimension: fewer than two usable box sizes");
    const LinearFit fit = linear_fit(xs, ys);
    return {std::move(result), DimensionEstimate{-fit.slope, fit.r_squared, fit.points}};
}

double similarity_dimension(const GeneratorParams& p) {
    return std::log2(static_cast<double>(compute_S(p.k, p.m)));
}

} // namespace hofnet
