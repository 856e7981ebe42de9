#pragma once

#include <string>
#include <vector>

namespace finalg {

// Union-find over {0..n-1}, used by congruence generation and partition joins.
class DisjointSet {
public:
    explicit DisjointSet(int n);
    int find(int x);
    // Returns true when two distinct classes were merged.
    bool unite(int x, int y);
    int size() const { return static_cast<int>(parent_.size()); }

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
};

// Equivalence relation on {0..n-1} in canonical block-label form: labels are
// assigned in first-occurrence order, so two Partitions are equal exactly when
// they describe the same relation.
class Partition {
public:
    Partition() = default;
    static Partition identity(int n);
    static Partition full(int n);
    static Partition from_labels(const std::vector<int>& raw_labels);
    static Partition from_disjoint_set(DisjointSet& ds);
    // Blocks must cover {0..n-1} exactly once each.
    static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

    int size() const { return static_cast<int>(label_.size()); }
    int block_count() const { return blocks_; }
    int label_of(int e) const { return label_[e]; }
    bool same_block(int a, int b) const { return label_[a] == label_[b]; }
    const std::vector<int>& labels() const { return label_; }
    std::vector<std::vector<int>> blocks() const;

    bool is_identity() const { return blocks_ == size(); }
    bool is_full() const { return blocks_ <= 1; }

    // Lattice order: this refines coarser (this <= coarser).
    bool refines(const Partition& coarser) const;
    // Transitive closure of the union; for congruences this is the lattice join.
    Partition join(const Partition& other) const;
    Partition meet(const Partition& other) const;
    // Induced partition on a subset, indexed by position in `subset`.
    Partition restrict_to(const std::vector<int>& subset) const;

    // Block syntax: "0,1|2" (elements comma-separated, blocks bar-separated).
    std::string to_block_string() const;

    bool operator==(const Partition&) const = default;

    // Deterministic tie-break order: (block count, canonical label vector).
    static bool sort_less(const Partition& a, const Partition& b);

private:
    std::vector<int> label_;
    int blocks_ = 0;
};

}  // namespace finalg
