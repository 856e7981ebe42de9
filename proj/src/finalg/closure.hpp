#pragma once

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "finalg/algebra.hpp"
#include "finalg/witness.hpp"

namespace finalg {

// Product of same-signature algebras, run-length compressed so that wide
// powers (A^(A^n)) do not store one factor pointer per coordinate. Elements of
// the product are tuples of length width(); operations act coordinatewise
// through each factor's tables. Referenced algebras must outlive the context.
class ProductContext {
public:
    explicit ProductContext(std::vector<std::pair<const FiniteAlgebra*, long long>> segments);
    static ProductContext power_of(const FiniteAlgebra& a, long long copies);

    long long width() const { return width_; }
    const Signature& signature() const;
    const FiniteAlgebra& factor_at(long long coord) const;
    int segment_count() const { return static_cast<int>(segments_.size()); }
    const std::pair<const FiniteAlgebra*, long long>& segment(int i) const { return segments_[i]; }

    void apply(int op, const std::vector<const std::vector<Element>*>& args,
               std::vector<Element>& out) const;
    std::vector<Element> constant_tuple(int op) const;
    bool contains(const std::vector<Element>& tuple) const;

private:
    std::vector<std::pair<const FiniteAlgebra*, long long>> segments_;
    long long width_ = 0;
};

ProductContext concat(const ProductContext& left, const ProductContext& right);

struct VectorHash {
    std::size_t operator()(const std::vector<Element>& v) const {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (Element e : v) h = (h ^ static_cast<std::size_t>(e)) * 0x100000001b3ULL;
        return h;
    }
};

// Closure of a generator list inside a product. Generation is breadth-first,
// so each element's witness has minimal depth and reports are deterministic.
// Elements 0..generator_count-1 are the distinct generators in input order;
// nullary symbols are injected automatically.
class GeneratedSet {
public:
    int size() const { return static_cast<int>(elems_.size()); }
    const std::vector<std::vector<Element>>& elements() const { return elems_; }
    const std::vector<Element>& element(int i) const { return elems_[i]; }
    int generator_count() const { return gen_count_; }
    const std::vector<TermNode>& witnesses() const { return witness_; }
    std::optional<int> index_of(const std::vector<Element>& tuple) const;
    // original generator slot -> element index (slots may alias after dedup)
    const std::vector<int>& generator_index() const { return gen_index_; }

    friend GeneratedSet generate(const ProductContext& ctx,
                                 const std::vector<std::vector<Element>>& generators,
                                 const Limits& lim);

private:
    std::vector<std::vector<Element>> elems_;
    std::unordered_map<std::vector<Element>, int, VectorHash> index_;
    std::vector<TermNode> witness_;
    std::vector<int> gen_index_;
    int gen_count_ = 0;
};

GeneratedSet generate(const ProductContext& ctx,
                      const std::vector<std::vector<Element>>& generators,
                      const Limits& lim = Limits::defaults());

// Re-evaluate a witness over the context, substituting the set's generators.
std::vector<Element> eval_witness_in_context(const ProductContext& ctx, const GeneratedSet& gs,
                                             int element);

// Evaluate a witness arena node over an arbitrary context, with the given
// tuples substituted for the generator slots.
std::vector<Element> eval_term_tuples(const ProductContext& ctx,
                                      const std::vector<TermNode>& arena, int root,
                                      const std::vector<std::vector<Element>>& leaf_values);

// Every witness reproduces its element (exhaustive).
bool witnesses_sound(const ProductContext& ctx, const GeneratedSet& gs);

// The set is closed under every operation of the context (exhaustive).
bool is_closure_fixpoint(const ProductContext& ctx, const GeneratedSet& gs);

// The i-th n-ary projection as a function table over A^n (row-major argument
// index, first argument most significant).
std::vector<Element> projection_table(const FiniteAlgebra& a, int n, int i);

struct CloneTables {
    int rank = 0;
    long long width = 0;  // |A|^rank
    GeneratedSet set;     // tables of the n-ary term operations
};

// Clo_n(A): the subpower of A^(A^n) generated by the n projections. n = 0 is
// defined only when the signature has a nullary symbol.
CloneTables clone_table(const FiniteAlgebra& a, int n, const Limits& lim = Limits::defaults());

// Pol_1(A): the subpower of A^A generated by the identity map and all constant
// maps. Generator slot 0 is the identity; slot 1+c is the constant map c.
GeneratedSet unary_polynomials(const FiniteAlgebra& a, const Limits& lim = Limits::defaults());

// Materialize a closed element list of a product as a dense algebra whose
// universe is the element indices.
FiniteAlgebra materialize_subproduct(const ProductContext& ctx,
                                     const std::vector<std::vector<Element>>& elements,
                                     const std::string& name,
                                     const Limits& lim = Limits::defaults());

}  // namespace finalg
