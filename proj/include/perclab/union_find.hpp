#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace perclab {

// Disjoint sets with union by size and path compression. When two roots
// have equal size the smaller index wins, so root identities (used as the
// largest-component tie-break) are reproducible.
class UnionFind {
public:
    UnionFind() = default;
    explicit UnionFind(std::int32_t n) { reset(n); }

    void reset(std::int32_t n) {
        parent_.resize(static_cast<std::size_t>(n));
        size_.assign(static_cast<std::size_t>(n), 1);
        std::iota(parent_.begin(), parent_.end(), 0);
        components_ = n;
    }

    std::int32_t find(std::int32_t x) {
        std::int32_t root = x;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[x] != root) {
            std::int32_t next = parent_[x];
            parent_[x] = root;
            x = next;
        }
        return root;
    }

    // Returns the surviving root (unchanged root if already joined).
    std::int32_t unite(std::int32_t a, std::int32_t b) {
        std::int32_t ra = find(a), rb = find(b);
        if (ra == rb) return ra;
        if (size_[ra] < size_[rb] || (size_[ra] == size_[rb] && rb < ra)) std::swap(ra, rb);
        parent_[rb] = ra;
        size_[ra] += size_[rb];
        --components_;
        return ra;
    }

    bool connected(std::int32_t a, std::int32_t b) { return find(a) == find(b); }
    std::int32_t component_size(std::int32_t x) { return size_[static_cast<std::size_t>(find(x))]; }
    std::int32_t size_of_root(std::int32_t root) const { return size_[static_cast<std::size_t>(root)]; }
    std::int32_t components() const { return components_; }
    std::int32_t count() const { return static_cast<std::int32_t>(parent_.size()); }

private:
    std::vector<std::int32_t> parent_;
    std::vector<std::int32_t> size_;
    std::int32_t components_ = 0;
};

}  // namespace perclab
