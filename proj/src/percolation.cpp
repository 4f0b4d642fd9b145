#include "perclab/percolation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "perclab/parallel.hpp"
#include "perclab/stats.hpp"
#include "perclab/union_find.hpp"

namespace perclab {

std::int64_t giant_cutoff(double c, std::int64_t n) {
    return static_cast<std::int64_t>(std::ceil(c * static_cast<double>(n) - 1e-9));
}

Configuration sample_configuration(const Graph& g, double p, Rng& rng) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("sample_configuration: p outside [0,1]");
    Configuration x(g.edge_count());
    for (std::int64_t i = 0; i < g.edge_count(); ++i) x.set(i, rng.bernoulli(p));
    return x;
}

ComponentStats component_stats(const Graph& g, const Configuration& x) {
    if (x.size() != g.edge_count())
        throw std::invalid_argument("component_stats: configuration length mismatch");
    const std::int32_t n = g.vertex_count();
    UnionFind uf(n);
    std::vector<char> touched(static_cast<std::size_t>(n), 0);
    for (std::int64_t i = 0; i < g.edge_count(); ++i) {
        if (!x.get(i)) continue;
        auto [u, v] = g.edge(i);
        uf.unite(u, v);
        touched[static_cast<std::size_t>(u)] = 1;
        touched[static_cast<std::size_t>(v)] = 1;
    }

    ComponentStats stats;
    stats.num_components = uf.components();
    std::int32_t best_root = -1;
    for (std::int32_t v = 0; v < n; ++v) {
        if (uf.find(v) != v) continue;
        std::int32_t s = uf.size_of_root(v);
        if (s > stats.l1 || (s == stats.l1 && (best_root < 0 || v < best_root))) {
            if (s > stats.l1) stats.l2 = stats.l1;
            stats.l1 = s;
            best_root = v;
        } else if (s > stats.l2) {
            stats.l2 = s;
        }
        if (!touched[static_cast<std::size_t>(v)]) ++stats.isolated;
    }
    for (auto [u, v] : g.edges()) {
        bool bu = uf.find(u) == best_root;
        bool bv = uf.find(v) == best_root;
        if (bu != bv) ++stats.boundary_l1;
    }
    return stats;
}

namespace {

// Union-find with the extra bookkeeping the sweep needs: per-root ambient
// volume, internal ambient edge count, and an intrusive member list so merges
// can scan the smaller side. ∂(C) = vol(C) - 2*internal(C).
struct NZState {
    const Graph& g;
    std::vector<std::int32_t> parent, size, next_member, tail;
    std::vector<std::int64_t> volume, internal_edges;
    std::multiset<std::int32_t> sizes;
    std::int32_t best_root = 0;

    explicit NZState(const Graph& graph) : g(graph) { reset(); }

    void reset() {
        const std::int32_t n = g.vertex_count();
        parent.resize(static_cast<std::size_t>(n));
        std::iota(parent.begin(), parent.end(), 0);
        size.assign(static_cast<std::size_t>(n), 1);
        next_member.assign(static_cast<std::size_t>(n), -1);
        tail.resize(static_cast<std::size_t>(n));
        std::iota(tail.begin(), tail.end(), 0);
        volume.resize(static_cast<std::size_t>(n));
        internal_edges.assign(static_cast<std::size_t>(n), 0);
        for (std::int32_t v = 0; v < n; ++v)
            volume[static_cast<std::size_t>(v)] = g.degree(v);
        sizes.clear();
        for (std::int32_t v = 0; v < n; ++v) sizes.insert(1);
        best_root = 0;
    }

    std::int32_t find(std::int32_t x) {
        std::int32_t root = x;
        while (parent[static_cast<std::size_t>(root)] != root)
            root = parent[static_cast<std::size_t>(root)];
        while (parent[static_cast<std::size_t>(x)] != root) {
            std::int32_t nxt = parent[static_cast<std::size_t>(x)];
            parent[static_cast<std::size_t>(x)] = root;
            x = nxt;
        }
        return root;
    }

    void insert_edge(std::int64_t edge_index) {
        auto [eu, ev] = g.edge(edge_index);
        std::int32_t ru = find(eu), rv = find(ev);
        if (ru == rv) return;  // already internal: counted when the roots merged
        std::int32_t big = ru, small = rv;
        if (size[static_cast<std::size_t>(big)] < size[static_cast<std::size_t>(small)] ||
            (size[static_cast<std::size_t>(big)] == size[static_cast<std::size_t>(small)] &&
             small < big))
            std::swap(big, small);

        // Ambient edges between the two sides become internal now; count them
        // from the smaller side.
        std::int64_t cross = 0;
        for (std::int32_t v = small; v != -1; v = next_member[static_cast<std::size_t>(v)])
            for (auto [w, e] : g.neighbors(v)) {
                (void)e;
                if (find(w) == big) ++cross;
            }

        sizes.erase(sizes.find(size[static_cast<std::size_t>(big)]));
        sizes.erase(sizes.find(size[static_cast<std::size_t>(small)]));
        parent[static_cast<std::size_t>(small)] = big;
        size[static_cast<std::size_t>(big)] += size[static_cast<std::size_t>(small)];
        volume[static_cast<std::size_t>(big)] += volume[static_cast<std::size_t>(small)];
        internal_edges[static_cast<std::size_t>(big)] +=
            internal_edges[static_cast<std::size_t>(small)] + cross;
        next_member[static_cast<std::size_t>(tail[static_cast<std::size_t>(big)])] = small;
        tail[static_cast<std::size_t>(big)] = tail[static_cast<std::size_t>(small)];
        sizes.insert(size[static_cast<std::size_t>(big)]);

        std::int32_t best_size = size[static_cast<std::size_t>(best_root)];
        if (size[static_cast<std::size_t>(big)] > best_size ||
            (size[static_cast<std::size_t>(big)] == best_size && big < best_root))
            best_root = big;
    }

    std::int32_t l1() const { return *sizes.rbegin(); }
    std::int32_t l2() const {
        if (sizes.size() < 2) return 0;
        auto it = sizes.rbegin();
        ++it;
        return *it;
    }
    std::int64_t boundary_l1() const {
        return volume[static_cast<std::size_t>(best_root)] -
               2 * internal_edges[static_cast<std::size_t>(best_root)];
    }
};

struct ThreadAcc {
    std::vector<std::uint64_t> sum_l1, sum_l1_sq, sum_l2, sum_boundary;
    std::vector<std::vector<std::uint32_t>> ge_hist;  // crossing-step histogram per c
    std::vector<std::vector<std::uint32_t>> l2_cnt;

    ThreadAcc(std::int64_t m, std::size_t n_c, std::size_t n_t) {
        const std::size_t steps = static_cast<std::size_t>(m) + 1;
        sum_l1.assign(steps, 0);
        sum_l1_sq.assign(steps, 0);
        sum_l2.assign(steps, 0);
        sum_boundary.assign(steps, 0);
        ge_hist.assign(n_c, std::vector<std::uint32_t>(steps + 1, 0));  // +1: never crossed
        l2_cnt.assign(n_t, std::vector<std::uint32_t>(steps, 0));
    }
};

}  // namespace

SweepCurve newman_ziff_sweep(const Graph& g, std::int32_t replicates,
                             std::uint64_t master_seed, const SweepOptions& options) {
    if (replicates < 1) throw std::invalid_argument("newman_ziff_sweep: replicates must be >= 1");
    const std::int64_t m = g.edge_count();
    const std::int32_t n = g.vertex_count();

    SweepCurve curve;
    curve.graph_id = g.id();
    curve.n = n;
    curve.m = m;
    curve.replicates = replicates;
    curve.master_seed = master_seed;
    curve.c_values = options.c_values;
    for (double c : options.c_values) curve.c_cutoffs.push_back(giant_cutoff(c, n));
    curve.l2_thresholds = options.l2_thresholds;

    const int workers = resolve_workers(options.workers);
    std::vector<ThreadAcc> accs;
    const int used_workers = std::max(1, std::min<int>(workers, replicates));
    accs.reserve(static_cast<std::size_t>(used_workers));
    for (int w = 0; w < used_workers; ++w)
        accs.emplace_back(m, options.c_values.size(), options.l2_thresholds.size());

    struct Workspace {
        NZState state;
        std::vector<std::int64_t> perm;
        std::vector<char> crossed;
        explicit Workspace(const Graph& graph) : state(graph) {
            perm.resize(static_cast<std::size_t>(graph.edge_count()));
        }
    };
    std::vector<Workspace> spaces;
    spaces.reserve(static_cast<std::size_t>(used_workers));
    for (int w = 0; w < used_workers; ++w) spaces.emplace_back(g);

    parallel_for(replicates, used_workers, [&](int w, std::int64_t r) {
        Workspace& ws = spaces[static_cast<std::size_t>(w)];
        ThreadAcc& acc = accs[static_cast<std::size_t>(w)];
        Rng rng(substream_seed(master_seed, static_cast<std::uint64_t>(r)));
        std::iota(ws.perm.begin(), ws.perm.end(), 0);
        rng.shuffle(ws.perm);
        ws.state.reset();
        ws.crossed.assign(curve.c_cutoffs.size(), 0);

        auto record = [&](std::int64_t step) {
            const std::size_t s = static_cast<std::size_t>(step);
            const std::uint64_t l1 = static_cast<std::uint64_t>(ws.state.l1());
            acc.sum_l1[s] += l1;
            acc.sum_l1_sq[s] += l1 * l1;
            acc.sum_l2[s] += static_cast<std::uint64_t>(ws.state.l2());
            acc.sum_boundary[s] += static_cast<std::uint64_t>(ws.state.boundary_l1());
            for (std::size_t ci = 0; ci < curve.c_cutoffs.size(); ++ci) {
                if (!ws.crossed[ci] &&
                    static_cast<std::int64_t>(l1) >= curve.c_cutoffs[ci]) {
                    ws.crossed[ci] = 1;
                    ++acc.ge_hist[ci][s];
                }
            }
            for (std::size_t ti = 0; ti < curve.l2_thresholds.size(); ++ti)
                if (ws.state.l2() >= curve.l2_thresholds[ti]) ++acc.l2_cnt[ti][s];
        };

        record(0);
        for (std::int64_t step = 1; step <= m; ++step) {
            ws.state.insert_edge(ws.perm[static_cast<std::size_t>(step - 1)]);
            record(step);
        }
    });

    const std::size_t steps = static_cast<std::size_t>(m) + 1;
    curve.sum_l1.assign(steps, 0);
    curve.sum_l1_sq.assign(steps, 0);
    curve.sum_l2.assign(steps, 0);
    curve.sum_boundary.assign(steps, 0);
    curve.ge_counts.assign(curve.c_cutoffs.size(), std::vector<std::uint32_t>(steps, 0));
    curve.l2_ge_counts.assign(curve.l2_thresholds.size(),
                              std::vector<std::uint32_t>(steps, 0));
    for (const ThreadAcc& acc : accs) {
        for (std::size_t s = 0; s < steps; ++s) {
            curve.sum_l1[s] += acc.sum_l1[s];
            curve.sum_l1_sq[s] += acc.sum_l1_sq[s];
            curve.sum_l2[s] += acc.sum_l2[s];
            curve.sum_boundary[s] += acc.sum_boundary[s];
        }
        for (std::size_t ci = 0; ci < curve.ge_counts.size(); ++ci)
            for (std::size_t s = 0; s < steps; ++s) curve.ge_counts[ci][s] += acc.ge_hist[ci][s];
        for (std::size_t ti = 0; ti < curve.l2_ge_counts.size(); ++ti)
            for (std::size_t s = 0; s < steps; ++s) curve.l2_ge_counts[ti][s] += acc.l2_cnt[ti][s];
    }
    // Crossing histograms -> cumulative "has crossed by m'" counts.
    for (std::size_t ci = 0; ci < curve.ge_counts.size(); ++ci)
        for (std::size_t s = 1; s < steps; ++s) curve.ge_counts[ci][s] += curve.ge_counts[ci][s - 1];
    return curve;
}

std::vector<SmoothedPoint> smooth_to_p(const SweepCurve& curve, std::span<const double> p_grid) {
    const std::int64_t m = curve.m;
    const double r = static_cast<double>(curve.replicates);
    std::vector<SmoothedPoint> out;
    out.reserve(p_grid.size());
    for (double p : p_grid) {
        if (p < 0.0 || p > 1.0) throw std::invalid_argument("smooth_to_p: grid value outside [0,1]");
        std::vector<double> w = binomial_weights(m, p);
        SmoothedPoint pt;
        pt.p = p;
        double mean = 0.0, within = 0.0, mean_sq_cond = 0.0;
        for (std::int64_t k = 0; k <= m; ++k) {
            const std::size_t s = static_cast<std::size_t>(k);
            if (w[s] == 0.0) continue;
            const double mu_k = static_cast<double>(curve.sum_l1[s]) / r;
            mean += w[s] * mu_k;
            mean_sq_cond += w[s] * mu_k * mu_k;
            if (curve.replicates > 1) {
                const double ss = static_cast<double>(curve.sum_l1_sq[s]);
                const double var_k =
                    std::max(0.0, (ss - r * mu_k * mu_k) / (r - 1.0));
                within += w[s] * var_k;
            }
            pt.mean_l2 += w[s] * static_cast<double>(curve.sum_l2[s]) / r;
            pt.mean_boundary_l1 += w[s] * static_cast<double>(curve.sum_boundary[s]) / r;
        }
        pt.mean_l1 = mean;
        pt.var_l1 = within + std::max(0.0, mean_sq_cond - mean * mean);
        pt.prob_ge.resize(curve.ge_counts.size(), 0.0);
        for (std::size_t ci = 0; ci < curve.ge_counts.size(); ++ci) {
            double acc = 0.0;
            for (std::int64_t k = 0; k <= m; ++k)
                acc += w[static_cast<std::size_t>(k)] *
                       static_cast<double>(curve.ge_counts[ci][static_cast<std::size_t>(k)]);
            pt.prob_ge[ci] = acc / r;
        }
        pt.prob_l2_ge.resize(curve.l2_ge_counts.size(), 0.0);
        for (std::size_t ti = 0; ti < curve.l2_ge_counts.size(); ++ti) {
            double acc = 0.0;
            for (std::int64_t k = 0; k <= m; ++k)
                acc += w[static_cast<std::size_t>(k)] *
                       static_cast<double>(curve.l2_ge_counts[ti][static_cast<std::size_t>(k)]);
            pt.prob_l2_ge[ti] = acc / r;
        }
        out.push_back(std::move(pt));
    }
    return out;
}

}  // namespace perclab
