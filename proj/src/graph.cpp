#include "perclab/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "perclab/rng.hpp"
#include "perclab/union_find.hpp"

namespace perclab {

Graph::Graph(std::int32_t n, std::vector<std::pair<std::int32_t, std::int32_t>> edges,
             std::string id)
    : n_(n), edges_(std::move(edges)), id_(std::move(id)) {
    if (n_ <= 0) throw std::invalid_argument("Graph: vertex count must be positive");
    std::vector<std::pair<std::int32_t, std::int32_t>> seen;
    seen.reserve(edges_.size());
    for (auto [u, v] : edges_) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        seen.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::invalid_argument("Graph: parallel edge");

    std::vector<std::int32_t> deg(static_cast<std::size_t>(n_), 0);
    for (auto [u, v] : edges_) {
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (std::int32_t v = 0; v < n_; ++v)
        offsets_[static_cast<std::size_t>(v) + 1] =
            offsets_[static_cast<std::size_t>(v)] + static_cast<std::size_t>(deg[static_cast<std::size_t>(v)]);
    adj_.resize(offsets_.back());
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto [u, v] = edges_[i];
        adj_[cursor[static_cast<std::size_t>(u)]++] = {v, static_cast<std::int32_t>(i)};
        adj_[cursor[static_cast<std::size_t>(v)]++] = {u, static_cast<std::int32_t>(i)};
    }
    max_degree_ = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> visited(static_cast<std::size_t>(n_), 0);
    std::deque<std::int32_t> queue{0};
    visited[0] = 1;
    std::int32_t reached = 1;
    while (!queue.empty()) {
        std::int32_t v = queue.front();
        queue.pop_front();
        for (auto [w, e] : neighbors(v)) {
            (void)e;
            if (!visited[static_cast<std::size_t>(w)]) {
                visited[static_cast<std::size_t>(w)] = 1;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    return reached == n_;
}

GraphSpec GraphSpec::parse(const std::string& text) {
    GraphSpec spec;
    auto pos = text.find(':');
    const std::string kind = text.substr(0, pos);
    std::string rest = pos == std::string::npos ? "" : text.substr(pos + 1);
    auto next_int = [&rest](const char* what) {
        auto colon = rest.find(':');
        std::string tok = rest.substr(0, colon);
        rest = colon == std::string::npos ? "" : rest.substr(colon + 1);
        try {
            return static_cast<std::int64_t>(std::stoll(tok));
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("GraphSpec: bad ") + what + " in '" + tok + "'");
        }
    };
    if (kind == "regular") {
        spec.kind = Kind::regular;
        spec.degree = next_int("degree");
        spec.n = next_int("n");
    } else if (kind == "margulis") {
        spec.kind = Kind::margulis;
        spec.side = next_int("side");
    } else if (kind == "cycle") {
        spec.kind = Kind::cycle;
        spec.n = next_int("n");
    } else if (kind == "complete") {
        spec.kind = Kind::complete;
        spec.n = next_int("n");
    } else if (kind == "path") {
        spec.kind = Kind::path;
        spec.n = next_int("n");
    } else if (kind == "file") {
        spec.kind = Kind::file;
        spec.path = rest;
        if (spec.path.empty()) throw std::invalid_argument("GraphSpec: file path missing");
    } else {
        throw std::invalid_argument("GraphSpec: unknown kind '" + kind + "'");
    }
    return spec;
}

std::string GraphSpec::id() const {
    switch (kind) {
        case Kind::regular:
            return "regular(d=" + std::to_string(degree) + ",n=" + std::to_string(n) +
                   ",seed=" + std::to_string(seed) + ")";
        case Kind::margulis:
            return "margulis(m=" + std::to_string(side) + ")";
        case Kind::cycle: return "cycle(" + std::to_string(n) + ")";
        case Kind::complete: return "complete(" + std::to_string(n) + ")";
        case Kind::path: return "path(" + std::to_string(n) + ")";
        case Kind::file: return "file:" + path;
    }
    return "invalid";
}

namespace {

Graph build_regular(const GraphSpec& spec, int retry_budget) {
    const std::int64_t d = spec.degree, n = spec.n;
    if (d < 3) throw std::invalid_argument("regular: degree must be at least 3");
    if (d >= n) throw std::invalid_argument("regular: degree must be smaller than n");
    if ((d * n) % 2 != 0) throw std::invalid_argument("regular: d*n must be even");

    Rng rng(substream_seed(spec.seed, 0x7e67));
    std::vector<std::int32_t> stubs(static_cast<std::size_t>(d * n));
    for (std::int64_t v = 0; v < n; ++v)
        for (std::int64_t k = 0; k < d; ++k)
            stubs[static_cast<std::size_t>(v * d + k)] = static_cast<std::int32_t>(v);

    std::vector<std::pair<std::int32_t, std::int32_t>> edges;
    std::vector<std::pair<std::int32_t, std::int32_t>> sorted;
    for (int attempt = 0; attempt < retry_budget; ++attempt) {
        rng.shuffle(stubs);
        edges.clear();
        bool simple = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            if (stubs[i] == stubs[i + 1]) { simple = false; break; }
            edges.emplace_back(stubs[i], stubs[i + 1]);
        }
        if (!simple) continue;
        sorted.clear();
        for (auto [u, v] : edges) sorted.emplace_back(std::min(u, v), std::max(u, v));
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
        return Graph(static_cast<std::int32_t>(n), std::move(edges), spec.id());
    }
    throw std::runtime_error("regular: configuration model rejected " +
                             std::to_string(retry_budget) +
                             " pairings without producing a simple graph");
}

Graph build_margulis(const GraphSpec& spec) {
    const std::int64_t m = spec.side;
    if (m < 2) throw std::invalid_argument("margulis: side must be at least 2");
    if (m * m > std::numeric_limits<std::int32_t>::max())
        throw std::invalid_argument("margulis: side too large");
    auto vid = [m](std::int64_t x, std::int64_t y) {
        return static_cast<std::int32_t>(x * m + y);
    };
    std::vector<std::pair<std::int32_t, std::int32_t>> edges;
    for (std::int64_t x = 0; x < m; ++x) {
        for (std::int64_t y = 0; y < m; ++y) {
            const std::int32_t v = vid(x, y);
            const std::int32_t targets[4] = {vid((x + y) % m, y), vid(x, (y + x) % m),
                                             vid((x + 1) % m, y), vid(x, (y + 1) % m)};
            for (std::int32_t t : targets) {
                if (t == v) continue;  // fixed points of the generator maps
                edges.emplace_back(std::min(v, t), std::max(v, t));
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(static_cast<std::int32_t>(m * m), std::move(edges), spec.id());
}

}  // namespace

Graph build_graph(const GraphSpec& spec, int retry_budget) {
    using Kind = GraphSpec::Kind;
    switch (spec.kind) {
        case Kind::regular: return build_regular(spec, retry_budget);
        case Kind::margulis: return build_margulis(spec);
        case Kind::cycle: {
            if (spec.n < 3) throw std::invalid_argument("cycle: n must be at least 3");
            std::vector<std::pair<std::int32_t, std::int32_t>> edges;
            for (std::int64_t v = 0; v < spec.n; ++v)
                edges.emplace_back(static_cast<std::int32_t>(v),
                                   static_cast<std::int32_t>((v + 1) % spec.n));
            return Graph(static_cast<std::int32_t>(spec.n), std::move(edges), spec.id());
        }
        case Kind::complete: {
            if (spec.n < 2) throw std::invalid_argument("complete: n must be at least 2");
            std::vector<std::pair<std::int32_t, std::int32_t>> edges;
            for (std::int64_t u = 0; u < spec.n; ++u)
                for (std::int64_t v = u + 1; v < spec.n; ++v)
                    edges.emplace_back(static_cast<std::int32_t>(u), static_cast<std::int32_t>(v));
            return Graph(static_cast<std::int32_t>(spec.n), std::move(edges), spec.id());
        }
        case Kind::path: {
            if (spec.n < 2) throw std::invalid_argument("path: n must be at least 2");
            std::vector<std::pair<std::int32_t, std::int32_t>> edges;
            for (std::int64_t v = 0; v + 1 < spec.n; ++v)
                edges.emplace_back(static_cast<std::int32_t>(v), static_cast<std::int32_t>(v + 1));
            return Graph(static_cast<std::int32_t>(spec.n), std::move(edges), spec.id());
        }
        case Kind::file: return read_graph_file(spec.path);
    }
    throw std::invalid_argument("build_graph: invalid spec");
}

std::optional<std::int32_t> girth(const Graph& g) {
    const std::int32_t n = g.vertex_count();
    std::int32_t best = std::numeric_limits<std::int32_t>::max();
    std::vector<std::int32_t> dist(static_cast<std::size_t>(n));
    std::vector<std::int32_t> parent_edge(static_cast<std::size_t>(n));
    std::deque<std::int32_t> queue;
    for (std::int32_t s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        dist[static_cast<std::size_t>(s)] = 0;
        parent_edge[static_cast<std::size_t>(s)] = -1;
        queue.push_back(s);
        while (!queue.empty()) {
            std::int32_t v = queue.front();
            queue.pop_front();
            // Cycles through s longer than the current best cannot improve it.
            if (2 * dist[static_cast<std::size_t>(v)] >= best) break;
            for (auto [w, e] : g.neighbors(v)) {
                if (e == parent_edge[static_cast<std::size_t>(v)]) continue;
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                    parent_edge[static_cast<std::size_t>(w)] = e;
                    queue.push_back(w);
                } else {
                    best = std::min(best, dist[static_cast<std::size_t>(v)] +
                                              dist[static_cast<std::size_t>(w)] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<std::int32_t>::max()) return std::nullopt;
    return best;
}

namespace {

// Connected-subset enumeration: the pivot is the first extension vertex;
// branching on exclude/include counts every connected superset exactly once.
void count_connected_rec(const Graph& g, std::vector<std::int32_t>& members,
                         std::vector<std::int32_t>& extension, std::vector<char>& in_set,
                         std::vector<char>& forbidden, std::int32_t target,
                         std::int64_t& count) {
    if (static_cast<std::int32_t>(members.size()) == target) {
        ++count;
        return;
    }
    if (extension.empty()) return;

    const std::int32_t pivot = extension.back();
    extension.pop_back();

    // Branch 1: pivot excluded for the rest of this subtree.
    forbidden[static_cast<std::size_t>(pivot)] = 1;
    count_connected_rec(g, members, extension, in_set, forbidden, target, count);
    forbidden[static_cast<std::size_t>(pivot)] = 0;

    // Branch 2: pivot included; extension grows by its fresh neighbors.
    members.push_back(pivot);
    in_set[static_cast<std::size_t>(pivot)] = 1;
    const std::size_t ext_mark = extension.size();
    std::vector<std::int32_t> added;
    for (auto [w, e] : g.neighbors(pivot)) {
        (void)e;
        if (in_set[static_cast<std::size_t>(w)] || forbidden[static_cast<std::size_t>(w)]) continue;
        bool queued = false;
        for (std::size_t i = 0; i < extension.size(); ++i)
            if (extension[i] == w) { queued = true; break; }
        if (!queued) {
            extension.push_back(w);
            added.push_back(w);
        }
    }
    count_connected_rec(g, members, extension, in_set, forbidden, target, count);
    extension.resize(ext_mark);
    (void)added;
    in_set[static_cast<std::size_t>(pivot)] = 0;
    members.pop_back();
}

}  // namespace

std::int64_t connected_subset_count(const Graph& g, std::int32_t v, std::int32_t r,
                                    std::int32_t max_r) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("connected_subset_count: vertex out of range");
    if (r < 1 || r > g.vertex_count())
        throw std::invalid_argument("connected_subset_count: r out of range");
    if (r > max_r)
        throw std::invalid_argument("connected_subset_count: r exceeds enumeration budget (" +
                                    std::to_string(max_r) + ")");
    std::vector<std::int32_t> members{v};
    std::vector<char> in_set(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<char> forbidden(static_cast<std::size_t>(g.vertex_count()), 0);
    in_set[static_cast<std::size_t>(v)] = 1;
    std::vector<std::int32_t> extension;
    for (auto [w, e] : g.neighbors(v)) {
        (void)e;
        extension.push_back(w);
    }
    std::sort(extension.begin(), extension.end());
    extension.erase(std::unique(extension.begin(), extension.end()), extension.end());
    std::int64_t count = 0;
    count_connected_rec(g, members, extension, in_set, forbidden, r, count);
    return count;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("graph file: cannot open '" + path + "'");
    std::string line;
    std::int64_t n = -1, m = -1;
    std::vector<std::pair<std::int32_t, std::int32_t>> edges;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ss(line);
        if (n < 0) {
            if (!(ss >> n >> m) || n <= 0 || m < 0)
                throw std::runtime_error("graph file: bad header line '" + line + "'");
            edges.reserve(static_cast<std::size_t>(m));
        } else {
            std::int64_t u, v;
            if (!(ss >> u >> v))
                throw std::runtime_error("graph file: bad edge line '" + line + "'");
            edges.emplace_back(static_cast<std::int32_t>(u), static_cast<std::int32_t>(v));
        }
    }
    if (n < 0) throw std::runtime_error("graph file: missing header");
    if (static_cast<std::int64_t>(edges.size()) != m)
        throw std::runtime_error("graph file: expected " + std::to_string(m) + " edges, found " +
                                 std::to_string(edges.size()));
    return Graph(static_cast<std::int32_t>(n), std::move(edges), "file:" + path);
}

std::string graph_to_text(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

void write_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("graph file: cannot write '" + path + "'");
    out << graph_to_text(g);
}

Graph make_petersen() {
    std::vector<std::pair<std::int32_t, std::int32_t>> edges;
    for (std::int32_t i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
    for (std::int32_t i = 0; i < 5; ++i) edges.emplace_back(i, i + 5);
    for (std::int32_t i = 0; i < 5; ++i) edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    return Graph(10, std::move(edges), "petersen");
}

}  // namespace perclab
