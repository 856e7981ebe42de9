#include "finalg/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "finalg/error.hpp"

namespace finalg {

DisjointSet::DisjointSet(int n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSet::find(int x) {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

bool DisjointSet::unite(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    if (rank_[rx] < rank_[ry]) std::swap(rx, ry);
    parent_[ry] = rx;
    if (rank_[rx] == rank_[ry]) ++rank_[rx];
    return true;
}

Partition Partition::identity(int n) {
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    Partition p;
    p.label_ = std::move(labels);
    p.blocks_ = n;
    return p;
}

Partition Partition::full(int n) {
    Partition p;
    p.label_.assign(n, 0);
    p.blocks_ = n > 0 ? 1 : 0;
    return p;
}

Partition Partition::from_labels(const std::vector<int>& raw_labels) {
    Partition p;
    p.label_.assign(raw_labels.size(), -1);
    std::map<int, int> canon;
    for (std::size_t i = 0; i < raw_labels.size(); ++i) {
        auto [it, inserted] = canon.emplace(raw_labels[i], static_cast<int>(canon.size()));
        p.label_[i] = it->second;
    }
    p.blocks_ = static_cast<int>(canon.size());
    return p;
}

Partition Partition::from_disjoint_set(DisjointSet& ds) {
    std::vector<int> raw(ds.size());
    for (int i = 0; i < ds.size(); ++i) raw[i] = ds.find(i);
    return from_labels(raw);
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<int> raw(n, -1);
    int label = 0;
    for (const auto& block : blocks) {
        if (block.empty()) throw ArgumentError("partition block is empty");
        for (int e : block) {
            if (e < 0 || e >= n)
                throw ArgumentError("partition element " + std::to_string(e) + " out of range [0," +
                                    std::to_string(n) + ")");
            if (raw[e] != -1)
                throw ArgumentError("partition element " + std::to_string(e) + " listed twice");
            raw[e] = label;
        }
        ++label;
    }
    for (int e = 0; e < n; ++e)
        if (raw[e] == -1)
            throw ArgumentError("partition misses element " + std::to_string(e));
    return from_labels(raw);
}

std::vector<std::vector<int>> Partition::blocks() const {
    std::vector<std::vector<int>> out(blocks_);
    for (int e = 0; e < size(); ++e) out[label_[e]].push_back(e);
    return out;
}

bool Partition::refines(const Partition& coarser) const {
    if (coarser.size() != size()) throw ArgumentError("partition size mismatch");
    // Each of my blocks must sit inside one coarser block.
    std::vector<int> image(blocks_, -1);
    for (int e = 0; e < size(); ++e) {
        int mine = label_[e];
        if (image[mine] == -1)
            image[mine] = coarser.label_[e];
        else if (image[mine] != coarser.label_[e])
            return false;
    }
    return true;
}

Partition Partition::join(const Partition& other) const {
    if (other.size() != size()) throw ArgumentError("partition size mismatch");
    DisjointSet ds(size());
    // Link each block's elements to its first element, in both partitions.
    std::vector<int> first_mine(blocks_, -1), first_other(other.blocks_, -1);
    for (int e = 0; e < size(); ++e) {
        int& fm = first_mine[label_[e]];
        if (fm == -1) fm = e; else ds.unite(fm, e);
        int& fo = first_other[other.label_[e]];
        if (fo == -1) fo = e; else ds.unite(fo, e);
    }
    return from_disjoint_set(ds);
}

Partition Partition::meet(const Partition& other) const {
    if (other.size() != size()) throw ArgumentError("partition size mismatch");
    std::map<std::pair<int, int>, int> canon;
    std::vector<int> raw(size());
    for (int e = 0; e < size(); ++e) {
        auto [it, ins] = canon.emplace(std::make_pair(label_[e], other.label_[e]),
                                       static_cast<int>(canon.size()));
        raw[e] = it->second;
    }
    return from_labels(raw);
}

Partition Partition::restrict_to(const std::vector<int>& subset) const {
    std::vector<int> raw(subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i) {
        int e = subset[i];
        if (e < 0 || e >= size()) throw ArgumentError("restrict_to: element out of range");
        raw[i] = label_[e];
    }
    return from_labels(raw);
}

std::string Partition::to_block_string() const {
    std::string out;
    auto bs = blocks();
    for (std::size_t b = 0; b < bs.size(); ++b) {
        if (b) out += '|';
        for (std::size_t i = 0; i < bs[b].size(); ++i) {
            if (i) out += ',';
            out += std::to_string(bs[b][i]);
        }
    }
    return out;
}

bool Partition::sort_less(const Partition& a, const Partition& b) {
    if (a.blocks_ != b.blocks_) return a.blocks_ < b.blocks_;
    return a.label_ < b.label_;
}

}  // namespace finalg
