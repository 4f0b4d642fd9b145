#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "perclab/graph.hpp"
#include "perclab/rng.hpp"

namespace perclab {

// One point of {0,1}^E: bit i is the state of edge i.
class Configuration {
public:
    Configuration() = default;
    explicit Configuration(std::int64_t bit_count)
        : bits_(static_cast<std::size_t>((bit_count + 63) / 64), 0), size_(bit_count) {}

    std::int64_t size() const { return size_; }
    bool get(std::int64_t i) const {
        return (bits_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1ull;
    }
    void set(std::int64_t i, bool value) {
        std::uint64_t mask = 1ull << (i & 63);
        if (value)
            bits_[static_cast<std::size_t>(i >> 6)] |= mask;
        else
            bits_[static_cast<std::size_t>(i >> 6)] &= ~mask;
    }
    std::int64_t count() const {
        std::int64_t c = 0;
        for (std::uint64_t w : bits_) c += __builtin_popcountll(w);
        return c;
    }

private:
    std::vector<std::uint64_t> bits_;
    std::int64_t size_ = 0;
};

struct ComponentStats {
    std::int32_t l1 = 0;           // largest component order
    std::int32_t l2 = 0;           // second largest; 0 when only one component
    std::int64_t boundary_l1 = 0;  // ambient edges leaving the (tie-broken) largest component
    std::int32_t isolated = 0;     // vertices with no open incident edge
    std::int32_t num_components = 0;
};

Configuration sample_configuration(const Graph& g, double p, Rng& rng);

// Union-find over the open edges. When several components tie for largest,
// the one whose union-find root has the smallest index is C1.
ComponentStats component_stats(const Graph& g, const Configuration& x);

// Conditional statistics per open-edge count from R random edge-insertion
// orders, with everything needed to binomially mix to any p afterwards.
// All accumulators are integers, so results are bit-identical for a given
// (seed, R) regardless of the parallel schedule.
struct SweepCurve {
    std::string graph_id;
    std::int32_t n = 0;
    std::int64_t m = 0;
    std::int32_t replicates = 0;
    std::uint64_t master_seed = 0;
    std::vector<double> c_values;
    std::vector<std::int64_t> c_cutoffs;        // ceil(c*n) per c
    std::vector<std::int64_t> l2_thresholds;    // absolute vertex counts

    // index m' = 0..m
    std::vector<std::uint64_t> sum_l1, sum_l1_sq, sum_l2, sum_boundary;
    std::vector<std::vector<std::uint32_t>> ge_counts;     // [c][m'], nondecreasing in m'
    std::vector<std::vector<std::uint32_t>> l2_ge_counts;  // [t][m']

    double mean_l1(std::int64_t mprime) const {
        return static_cast<double>(sum_l1[static_cast<std::size_t>(mprime)]) / replicates;
    }
};

struct SweepOptions {
    std::vector<double> c_values;
    std::vector<std::int64_t> l2_thresholds;
    int workers = 0;
};

SweepCurve newman_ziff_sweep(const Graph& g, std::int32_t replicates,
                             std::uint64_t master_seed, const SweepOptions& options = {});

struct SmoothedPoint {
    double p = 0.0;
    double mean_l1 = 0.0;
    double var_l1 = 0.0;
    double mean_l2 = 0.0;
    double mean_boundary_l1 = 0.0;
    std::vector<double> prob_ge;     // aligned with curve.c_values
    std::vector<double> prob_l2_ge;  // aligned with curve.l2_thresholds
};

// Binomial(m, p) mixing of the conditional statistics; the variance combines
// within- and between-m' parts by the law of total variance.
std::vector<SmoothedPoint> smooth_to_p(const SweepCurve& curve, std::span<const double> p_grid);

// ceil(c*n) with a guard against float droop for rational c.
std::int64_t giant_cutoff(double c, std::int64_t n);

}  // namespace perclab
