#include "perclab/isoperimetry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "perclab/rng.hpp"
#include "perclab/union_find.hpp"

namespace perclab {

Ratio subset_ratio(const Graph& g, const std::vector<std::int32_t>& subset) {
    if (subset.empty()) throw std::invalid_argument("subset_ratio: empty subset");
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
    for (std::int32_t v : subset) in[static_cast<std::size_t>(v)] = 1;
    std::int64_t boundary = 0;
    for (auto [u, v] : g.edges())
        if (in[static_cast<std::size_t>(u)] != in[static_cast<std::size_t>(v)]) ++boundary;
    return Ratio(boundary, static_cast<std::int64_t>(subset.size()));
}

namespace {

struct ExactSearch {
    const Graph& g;
    std::int32_t smax;
    std::vector<char> in_a;
    std::vector<char> decided;
    std::vector<std::int32_t> members;
    std::int64_t boundary = 0;
    Ratio best{1, 1};
    bool have_best = false;
    std::vector<std::int32_t> best_witness;

    explicit ExactSearch(const Graph& graph)
        : g(graph),
          smax(graph.vertex_count() / 2),
          in_a(static_cast<std::size_t>(graph.vertex_count()), 0),
          decided(static_cast<std::size_t>(graph.vertex_count()), 0) {}

    void consider_leaf() {
        if (members.empty()) return;
        Ratio ratio(boundary, static_cast<std::int64_t>(members.size()));
        if (!have_best || ratio < best || (ratio == best && members < best_witness)) {
            best = ratio;
            best_witness = members;
            have_best = true;
        }
    }

    // Any completion keeps the decided-A/decided-out edges in the cut, so its
    // ratio is at least boundary/smax.
    bool prunable() const {
        return have_best &&
               static_cast<__int128>(boundary) * best.den >
                   static_cast<__int128>(best.num) * smax;
    }

    void recurse(std::int32_t v) {
        if (prunable()) return;
        if (v == g.vertex_count()) {
            consider_leaf();
            return;
        }
        decided[static_cast<std::size_t>(v)] = 1;

        if (static_cast<std::int32_t>(members.size()) < smax) {
            std::int64_t delta = 0;
            for (auto [w, e] : g.neighbors(v)) {
                (void)e;
                if (decided[static_cast<std::size_t>(w)])
                    delta += in_a[static_cast<std::size_t>(w)] ? -1 : +1;
            }
            in_a[static_cast<std::size_t>(v)] = 1;
            members.push_back(v);
            boundary += delta;
            recurse(v + 1);
            boundary -= delta;
            members.pop_back();
            in_a[static_cast<std::size_t>(v)] = 0;
        }

        std::int64_t delta = 0;
        for (auto [w, e] : g.neighbors(v)) {
            (void)e;
            if (decided[static_cast<std::size_t>(w)] && in_a[static_cast<std::size_t>(w)]) ++delta;
        }
        boundary += delta;
        recurse(v + 1);
        boundary -= delta;

        decided[static_cast<std::size_t>(v)] = 0;
    }
};

}  // namespace

CheegerCertificate cheeger_exact(const Graph& g, std::int32_t exact_limit) {
    if (g.vertex_count() < 2)
        throw std::invalid_argument("cheeger_exact: need at least 2 vertices");
    if (g.vertex_count() > exact_limit)
        throw std::invalid_argument("cheeger_exact: n=" + std::to_string(g.vertex_count()) +
                                    " exceeds exact limit " + std::to_string(exact_limit));
    ExactSearch search(g);
    search.recurse(0);

    CheegerCertificate cert;
    cert.lower_method = LowerMethod::exact;
    cert.upper_bound = search.best;
    cert.lower_bound_rational = search.best;
    cert.lower_bound = search.best.value();
    cert.witness = search.best_witness;
    cert.connected = g.is_connected();
    return cert;
}

SpectralBound cheeger_spectral_lower(const Graph& g, double rel_tol) {
    const std::int32_t n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("cheeger_spectral_lower: need at least 2 vertices");
    if (!g.is_connected()) return {0.0, false};

    const double shift = 2.0 * g.max_degree() + 1.0;
    std::vector<double> x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
    Rng rng(0x5eedbeefull);
    for (double& xi : x) xi = rng.next_double() - 0.5;

    auto project_and_normalize = [n](std::vector<double>& v) {
        double mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
        for (double& vi : v) vi -= mean;
        double norm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
        if (norm == 0.0) {
            v[0] = 1.0;
            v[1] = -1.0;
            for (std::size_t i = 2; i < v.size(); ++i) v[i] = 0.0;
            norm = std::sqrt(2.0);
        }
        for (double& vi : v) vi /= norm;
    };
    auto apply_shifted = [&g, shift](const std::vector<double>& src, std::vector<double>& dst) {
        for (std::int32_t v = 0; v < g.vertex_count(); ++v) {
            double acc = (shift - g.degree(v)) * src[static_cast<std::size_t>(v)];
            for (auto [w, e] : g.neighbors(v)) {
                (void)e;
                acc += src[static_cast<std::size_t>(w)];
            }
            dst[static_cast<std::size_t>(v)] = acc;
        }
    };

    project_and_normalize(x);
    double theta = 0.0;
    for (int iter = 0; iter < 200000; ++iter) {
        apply_shifted(x, y);
        double next_theta = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
        std::swap(x, y);
        project_and_normalize(x);
        if (iter > 0 && std::abs(next_theta - theta) <= rel_tol * std::max(1.0, std::abs(next_theta))) {
            theta = next_theta;
            break;
        }
        theta = next_theta;
    }
    // Residual certifies how far theta can sit from the nearby eigenvalue of
    // the shifted operator; subtracting it keeps the bound on the safe side.
    apply_shifted(x, y);
    double residual_sq = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double r = y[i] - theta * x[i];
        residual_sq += r * r;
    }
    const double lambda2 = shift - theta - std::sqrt(residual_sq);
    return {std::max(0.0, lambda2 / 2.0), true};
}

namespace {

struct Descent {
    const Graph& g;
    std::vector<char> in_a;
    std::int64_t boundary = 0;
    std::int64_t size = 0;
    std::int32_t smax;

    explicit Descent(const Graph& graph)
        : g(graph),
          in_a(static_cast<std::size_t>(graph.vertex_count()), 0),
          smax(graph.vertex_count() / 2) {}

    std::int64_t neighbors_in_a(std::int32_t v) const {
        std::int64_t c = 0;
        for (auto [w, e] : g.neighbors(v)) {
            (void)e;
            c += in_a[static_cast<std::size_t>(w)];
        }
        return c;
    }

    void set_subset(const std::vector<std::int32_t>& subset) {
        std::fill(in_a.begin(), in_a.end(), 0);
        for (std::int32_t v : subset) in_a[static_cast<std::size_t>(v)] = 1;
        size = static_cast<std::int64_t>(subset.size());
        boundary = 0;
        for (auto [u, v] : g.edges())
            if (in_a[static_cast<std::size_t>(u)] != in_a[static_cast<std::size_t>(v)]) ++boundary;
    }

    // Candidate boundary after a single move; does not commit.
    std::int64_t boundary_after_add(std::int32_t v) const {
        return boundary + g.degree(v) - 2 * neighbors_in_a(v);
    }
    std::int64_t boundary_after_remove(std::int32_t v) const {
        return boundary - g.degree(v) + 2 * neighbors_in_a(v);
    }

    bool improve_once() {
        const std::int32_t n = g.vertex_count();
        bool found = false;
        std::int64_t best_b = 0, best_s = 1;
        int best_kind = -1;
        std::int32_t best_u = -1, best_v = -1;

        auto better = [&](std::int64_t b, std::int64_t s) {
            // b/s < current ratio, and among candidates the smallest ratio wins.
            if (static_cast<__int128>(b) * size >= static_cast<__int128>(boundary) * s)
                return false;
            if (!found) return true;
            return static_cast<__int128>(b) * best_s < static_cast<__int128>(best_b) * s;
        };

        if (size + 1 <= smax) {
            for (std::int32_t v = 0; v < n; ++v) {
                if (in_a[static_cast<std::size_t>(v)]) continue;
                std::int64_t b = boundary_after_add(v);
                if (better(b, size + 1)) {
                    found = true; best_b = b; best_s = size + 1;
                    best_kind = 0; best_u = v; best_v = -1;
                }
            }
        }
        if (size >= 2) {
            for (std::int32_t v = 0; v < n; ++v) {
                if (!in_a[static_cast<std::size_t>(v)]) continue;
                std::int64_t b = boundary_after_remove(v);
                if (better(b, size - 1)) {
                    found = true; best_b = b; best_s = size - 1;
                    best_kind = 1; best_u = v; best_v = -1;
                }
            }
        }
        for (std::int32_t u = 0; u < n; ++u) {
            if (!in_a[static_cast<std::size_t>(u)]) continue;
            std::int64_t b_mid = boundary_after_remove(u);
            for (std::int32_t v = 0; v < n; ++v) {
                if (in_a[static_cast<std::size_t>(v)] || v == u) continue;
                std::int64_t adj = 0;
                for (auto [w, e] : g.neighbors(v)) {
                    (void)e;
                    if (w == u) { adj = 1; break; }
                }
                // add v against A \ {u}: u no longer counts as an in-A neighbor
                std::int64_t b = b_mid + g.degree(v) - 2 * (neighbors_in_a(v) - adj * in_a[static_cast<std::size_t>(u)]);
                if (better(b, size)) {
                    found = true; best_b = b; best_s = size;
                    best_kind = 2; best_u = u; best_v = v;
                }
            }
        }
        if (!found) return false;
        if (best_kind == 0) {
            in_a[static_cast<std::size_t>(best_u)] = 1;
        } else if (best_kind == 1) {
            in_a[static_cast<std::size_t>(best_u)] = 0;
        } else {
            in_a[static_cast<std::size_t>(best_u)] = 0;
            in_a[static_cast<std::size_t>(best_v)] = 1;
        }
        boundary = best_b;
        size = best_s;
        return true;
    }

    std::vector<std::int32_t> current_subset() const {
        std::vector<std::int32_t> subset;
        for (std::int32_t v = 0; v < g.vertex_count(); ++v)
            if (in_a[static_cast<std::size_t>(v)]) subset.push_back(v);
        return subset;
    }
};

}  // namespace

CheegerCertificate cheeger_local_upper(const Graph& g, std::int32_t restarts,
                                       std::uint64_t seed) {
    if (g.vertex_count() < 2)
        throw std::invalid_argument("cheeger_local_upper: need at least 2 vertices");
    if (restarts < 1) throw std::invalid_argument("cheeger_local_upper: restarts must be >= 1");

    const std::int32_t n = g.vertex_count();
    const std::int32_t smax = n / 2;
    bool have_best = false;
    Ratio best{1, 1};
    std::vector<std::int32_t> best_witness;

    std::vector<std::int32_t> order(static_cast<std::size_t>(n));
    for (std::int32_t r = 0; r < restarts; ++r) {
        Rng rng(substream_seed(seed, static_cast<std::uint64_t>(r)));
        std::iota(order.begin(), order.end(), 0);
        rng.shuffle(order);
        std::int32_t s = 1 + static_cast<std::int32_t>(rng.next_below(static_cast<std::uint64_t>(smax)));
        std::vector<std::int32_t> start(order.begin(), order.begin() + s);

        Descent descent(g);
        descent.set_subset(start);
        while (descent.improve_once()) {}

        Ratio ratio(descent.boundary, descent.size);
        // Seed-order tie-break keeps concurrent restarts schedule-independent.
        if (!have_best || ratio < best) {
            best = ratio;
            best_witness = descent.current_subset();
            have_best = true;
        }
    }

    CheegerCertificate cert;
    cert.lower_method = LowerMethod::spectral;
    SpectralBound lb = cheeger_spectral_lower(g);
    cert.lower_bound = lb.value;
    cert.connected = lb.connected;
    cert.upper_bound = best;
    cert.witness = best_witness;
    return cert;
}

}  // namespace perclab
