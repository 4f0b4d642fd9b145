#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace perclab {

// Immutable bounded-degree simple graph. The edge list order is fixed at
// construction and edge index i is a stable identity: percolation bits,
// influence operators and the exploration order are all keyed on it.
class Graph {
public:
    struct AdjEntry {
        std::int32_t neighbor;
        std::int32_t edge;
    };

    // Validates: endpoints in range, no self-loops, no parallel edges.
    Graph(std::int32_t n, std::vector<std::pair<std::int32_t, std::int32_t>> edges,
          std::string id);

    std::int32_t vertex_count() const { return n_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }
    const std::vector<std::pair<std::int32_t, std::int32_t>>& edges() const { return edges_; }
    std::pair<std::int32_t, std::int32_t> edge(std::int64_t i) const {
        return edges_[static_cast<std::size_t>(i)];
    }

    std::span<const AdjEntry> neighbors(std::int32_t v) const {
        return {adj_.data() + offsets_[static_cast<std::size_t>(v)],
                adj_.data() + offsets_[static_cast<std::size_t>(v) + 1]};
    }
    std::int32_t degree(std::int32_t v) const {
        return static_cast<std::int32_t>(offsets_[static_cast<std::size_t>(v) + 1] -
                                         offsets_[static_cast<std::size_t>(v)]);
    }
    std::int32_t max_degree() const { return max_degree_; }
    bool is_connected() const;
    const std::string& id() const { return id_; }

private:
    std::int32_t n_;
    std::vector<std::pair<std::int32_t, std::int32_t>> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<AdjEntry> adj_;
    std::int32_t max_degree_;
    std::string id_;
};

struct GraphSpec {
    enum class Kind { regular, margulis, cycle, complete, path, file };

    Kind kind = Kind::cycle;
    std::int64_t degree = 0;     // regular
    std::int64_t n = 0;          // regular/cycle/complete/path
    std::int64_t side = 0;       // margulis: vertices = side^2
    std::string path;            // file
    std::uint64_t seed = 0;

    // "regular:3:1000", "margulis:8", "cycle:6", "complete:4", "path:5",
    // "file:/path/to.edges"
    static GraphSpec parse(const std::string& text);
    std::string id() const;
};

// Deterministic given (kind, parameters, seed). regular uses the
// configuration model resampled until simple; margulis is the expander on
// Z_m x Z_m with duplicate edges collapsed and self-loops dropped.
Graph build_graph(const GraphSpec& spec, int retry_budget = 1000);

// Shortest cycle length via per-vertex BFS; nullopt for forests.
std::optional<std::int32_t> girth(const Graph& g);

// Exact count of size-r connected vertex subsets containing v.
// Exponential enumeration; refuses r beyond max_r.
std::int64_t connected_subset_count(const Graph& g, std::int32_t v, std::int32_t r,
                                    std::int32_t max_r = 12);

// Edge-list text format: "n m" then one "u v" line per edge index, '#'
// comments and blank lines ignored.
Graph read_graph_file(const std::string& path);
std::string graph_to_text(const Graph& g);
void write_graph_file(const Graph& g, const std::string& path);

// The 3-regular Petersen graph (girth 5); a standard fixture.
Graph make_petersen();

}  // namespace perclab
