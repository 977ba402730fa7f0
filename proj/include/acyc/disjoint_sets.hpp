#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace acyc {

// Union-find with path halving and union by size.
class DisjointSets {
public:
    DisjointSets() = default;
    explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1), count_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // returns true if x and y were in different sets
    bool unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y) {
            return false;
        }
        if (size_[x] < size_[y]) {
            std::swap(x, y);
        }
        parent_[y] = x;
        size_[x] += size_[y];
        --count_;
        return true;
    }

    bool same(std::size_t x, std::size_t y) { return find(x) == find(y); }

    std::size_t size() const noexcept { return parent_.size(); }
    std::size_t set_count() const noexcept { return count_; }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
    std::size_t count_ = 0;
};

}  // namespace acyc
