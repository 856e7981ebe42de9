#include "finalg/closure.hpp"

#include <algorithm>

namespace finalg {

ProductContext::ProductContext(std::vector<std::pair<const FiniteAlgebra*, long long>> segments)
    : segments_(std::move(segments)) {
    if (segments_.empty()) throw ArgumentError("product context needs at least one factor");
    for (const auto& [alg, count] : segments_) {
        if (count < 1) throw ArgumentError("product segment with non-positive width");
        if (alg->signature() != segments_.front().first->signature())
            throw ArgumentError("signature mismatch across product factors");
        width_ += count;
    }
}

ProductContext ProductContext::power_of(const FiniteAlgebra& a, long long copies) {
    return ProductContext({{&a, copies}});
}

const Signature& ProductContext::signature() const { return segments_.front().first->signature(); }

const FiniteAlgebra& ProductContext::factor_at(long long coord) const {
    for (const auto& [alg, count] : segments_) {
        if (coord < count) return *alg;
        coord -= count;
    }
    throw ArgumentError("coordinate out of range");
}

void ProductContext::apply(int op, const std::vector<const std::vector<Element>*>& args,
                           std::vector<Element>& out) const {
    out.resize(width_);
    std::vector<Element> coord_args(args.size());
    long long c = 0;
    for (const auto& [alg, count] : segments_) {
        const Operation& table = alg->op(op);
        for (long long k = 0; k < count; ++k, ++c) {
            for (std::size_t i = 0; i < args.size(); ++i) coord_args[i] = (*args[i])[c];
            out[c] = table.apply_unchecked(coord_args);
        }
    }
}

std::vector<Element> ProductContext::constant_tuple(int op) const {
    std::vector<Element> out;
    out.reserve(width_);
    for (const auto& [alg, count] : segments_) {
        Element v = alg->op(op).table()[0];
        out.insert(out.end(), count, v);
    }
    return out;
}

bool ProductContext::contains(const std::vector<Element>& tuple) const {
    if (static_cast<long long>(tuple.size()) != width_) return false;
    long long c = 0;
    for (const auto& [alg, count] : segments_) {
        for (long long k = 0; k < count; ++k, ++c)
            if (tuple[c] < 0 || tuple[c] >= alg->size()) return false;
    }
    return true;
}

ProductContext concat(const ProductContext& left, const ProductContext& right) {
    std::vector<std::pair<const FiniteAlgebra*, long long>> segments;
    for (int i = 0; i < left.segment_count(); ++i) segments.push_back(left.segment(i));
    for (int i = 0; i < right.segment_count(); ++i) segments.push_back(right.segment(i));
    return ProductContext(std::move(segments));
}

std::optional<int> GeneratedSet::index_of(const std::vector<Element>& tuple) const {
    auto it = index_.find(tuple);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

GeneratedSet generate(const ProductContext& ctx,
                      const std::vector<std::vector<Element>>& generators, const Limits& lim) {
    GeneratedSet gs;
    auto add = [&](std::vector<Element>&& tuple, TermNode&& node) -> int {
        auto it = gs.index_.find(tuple);
        if (it != gs.index_.end()) return it->second;
        int id = static_cast<int>(gs.elems_.size());
        if (id >= lim.max_generated) throw_guard("max_generated", id + 1, lim.max_generated);
        gs.index_.emplace(tuple, id);
        gs.elems_.push_back(std::move(tuple));
        gs.witness_.push_back(std::move(node));
        return id;
    };

    for (std::size_t slot = 0; slot < generators.size(); ++slot) {
        if (!ctx.contains(generators[slot]))
            throw ArgumentError("generator " + std::to_string(slot) + " outside the product");
        std::vector<Element> tuple = generators[slot];
        TermNode leaf;
        leaf.var = static_cast<int>(slot);
        gs.gen_index_.push_back(add(std::move(tuple), std::move(leaf)));
    }
    gs.gen_count_ = static_cast<int>(gs.elems_.size());

    const Signature& sig = ctx.signature();
    for (int op = 0; op < sig.op_count(); ++op) {
        if (sig.arity(op) != 0) continue;
        TermNode node;
        node.op = op;
        add(ctx.constant_tuple(op), std::move(node));
    }

    // Round-based closure: at each round, apply operations to argument tuples
    // that use at least one element discovered in the previous round.
    std::size_t old_start = 0;
    while (old_start < gs.elems_.size()) {
        std::size_t round_end = gs.elems_.size();
        std::vector<Element> result;
        for (int op = 0; op < sig.op_count(); ++op) {
            int r = sig.arity(op);
            if (r == 0) continue;
            std::vector<const std::vector<Element>*> args(r);
            std::vector<int> ids(r);
            // Enumerate tuples with at least one coordinate in
            // [old_start, round_end): positions before `first_new` take old
            // elements, `first_new` takes new, later positions take any.
            for (int first_new = 0; first_new < r; ++first_new) {
                std::vector<std::size_t> lo(r, 0), hi(r, round_end);
                for (int i = 0; i < first_new; ++i) hi[i] = old_start;
                lo[first_new] = old_start;
                if (lo[first_new] >= hi[first_new]) continue;
                bool feasible = true;
                for (int i = 0; i < r; ++i)
                    if (lo[i] >= hi[i]) feasible = false;
                if (!feasible) continue;
                std::vector<std::size_t> pos(lo);
                while (true) {
                    for (int i = 0; i < r; ++i) {
                        ids[i] = static_cast<int>(pos[i]);
                        args[i] = &gs.elems_[pos[i]];
                    }
                    ctx.apply(op, args, result);
                    if (gs.index_.find(result) == gs.index_.end()) {
                        TermNode node;
                        node.op = op;
                        node.children.assign(ids.begin(), ids.end());
                        std::vector<Element> copy = result;
                        add(std::move(copy), std::move(node));
                    }
                    int i = r - 1;
                    for (; i >= 0; --i) {
                        if (++pos[i] < hi[i]) break;
                        pos[i] = lo[i];
                    }
                    if (i < 0) break;
                }
            }
        }
        old_start = round_end;
    }
    return gs;
}

std::vector<Element> eval_witness_in_context(const ProductContext& ctx, const GeneratedSet& gs,
                                             int element) {
    const auto& arena = gs.witnesses();
    std::vector<std::vector<Element>> memo(element + 1);
    std::vector<const std::vector<Element>*> args;
    std::vector<Element> out;
    for (int id = 0; id <= element; ++id) {
        const TermNode& node = arena[id];
        if (node.op < 0) {
            memo[id] = gs.element(gs.generator_index()[node.var]);
        } else if (node.children.empty()) {
            memo[id] = ctx.constant_tuple(node.op);
        } else {
            args.clear();
            for (int child : node.children) args.push_back(&memo[child]);
            ctx.apply(node.op, args, out);
            memo[id] = out;
        }
    }
    return memo[element];
}

std::vector<Element> eval_term_tuples(const ProductContext& ctx,
                                      const std::vector<TermNode>& arena, int root,
                                      const std::vector<std::vector<Element>>& leaf_values) {
    std::vector<std::vector<Element>> memo(root + 1);
    std::vector<const std::vector<Element>*> args;
    std::vector<Element> out;
    for (int id = 0; id <= root; ++id) {
        const TermNode& node = arena[id];
        if (node.op < 0) {
            memo[id] = leaf_values.at(node.var);
        } else if (node.children.empty()) {
            memo[id] = ctx.constant_tuple(node.op);
        } else {
            args.clear();
            for (int child : node.children) args.push_back(&memo[child]);
            ctx.apply(node.op, args, out);
            memo[id] = out;
        }
    }
    return memo[root];
}

bool witnesses_sound(const ProductContext& ctx, const GeneratedSet& gs) {
    for (int i = 0; i < gs.size(); ++i)
        if (eval_witness_in_context(ctx, gs, i) != gs.element(i)) return false;
    return true;
}

bool is_closure_fixpoint(const ProductContext& ctx, const GeneratedSet& gs) {
    const Signature& sig = ctx.signature();
    std::vector<Element> result;
    for (int op = 0; op < sig.op_count(); ++op) {
        int r = sig.arity(op);
        if (r == 0) {
            if (!gs.index_of(ctx.constant_tuple(op))) return false;
            continue;
        }
        std::vector<int> pos(r, 0);
        std::vector<const std::vector<Element>*> args(r);
        if (gs.size() == 0) continue;
        while (true) {
            for (int i = 0; i < r; ++i) args[i] = &gs.element(pos[i]);
            ctx.apply(op, args, result);
            if (!gs.index_of(result)) return false;
            int i = r - 1;
            for (; i >= 0; --i) {
                if (++pos[i] < gs.size()) break;
                pos[i] = 0;
            }
            if (i < 0) break;
        }
    }
    return true;
}

std::vector<Element> projection_table(const FiniteAlgebra& a, int n, int i) {
    long long width = 1;
    for (int k = 0; k < n; ++k) width *= a.size();
    std::vector<Element> table(width);
    // argument index is row-major with the first argument most significant
    long long period = 1;
    for (int k = i + 1; k < n; ++k) period *= a.size();
    for (long long idx = 0; idx < width; ++idx)
        table[idx] = static_cast<Element>((idx / period) % a.size());
    return table;
}

CloneTables clone_table(const FiniteAlgebra& a, int n, const Limits& lim) {
    if (n < 0) throw ArgumentError("clone rank must be nonnegative");
    if (n == 0 && !a.signature().has_nullary())
        throw ArgumentError("Clo_0 requires a nullary symbol in the signature");
    long long width = 1;
    for (int k = 0; k < n; ++k) {
        width *= a.size();
        if (width > lim.max_power_width) throw_guard("max_power_width", width, lim.max_power_width);
    }
    ProductContext ctx = ProductContext::power_of(a, width);
    std::vector<std::vector<Element>> gens;
    for (int i = 0; i < n; ++i) gens.push_back(projection_table(a, n, i));
    CloneTables result;
    result.rank = n;
    result.width = width;
    result.set = generate(ctx, gens, lim);
    return result;
}

GeneratedSet unary_polynomials(const FiniteAlgebra& a, const Limits& lim) {
    if (a.size() > lim.max_unary_base) throw_guard("max_unary_base", a.size(), lim.max_unary_base);
    ProductContext ctx = ProductContext::power_of(a, a.size());
    std::vector<std::vector<Element>> gens;
    gens.push_back(projection_table(a, 1, 0));  // identity map
    for (Element c = 0; c < a.size(); ++c)
        gens.push_back(std::vector<Element>(a.size(), c));
    return generate(ctx, gens, lim);
}

FiniteAlgebra materialize_subproduct(const ProductContext& ctx,
                                     const std::vector<std::vector<Element>>& elements,
                                     const std::string& name, const Limits& lim) {
    if (elements.empty()) throw ArgumentError("cannot materialize an empty universe");
    std::unordered_map<std::vector<Element>, int, VectorHash> index;
    for (std::size_t i = 0; i < elements.size(); ++i)
        index.emplace(elements[i], static_cast<int>(i));
    int n = static_cast<int>(elements.size());
    const Signature& sig = ctx.signature();
    std::vector<Operation> ops;
    std::vector<Element> result;
    for (int op = 0; op < sig.op_count(); ++op) {
        int r = sig.arity(op);
        long long entries = table_size(n, r, lim);
        std::vector<Element> table(entries);
        std::vector<Element> argidx(r, 0);
        std::vector<const std::vector<Element>*> args(r);
        long long idx = 0;
        do {
            for (int i = 0; i < r; ++i) args[i] = &elements[argidx[i]];
            if (r == 0) {
                result = ctx.constant_tuple(op);
            } else {
                ctx.apply(op, args, result);
            }
            auto it = index.find(result);
            if (it == index.end())
                throw ArgumentError("element list is not closed under operation " + sig.name(op));
            table[idx++] = it->second;
        } while (r > 0 && [&] {
            for (int i = r - 1; i >= 0; --i) {
                if (++argidx[i] < n) return true;
                argidx[i] = 0;
            }
            return false;
        }());
        ops.emplace_back(n, r, std::move(table));
    }
    return FiniteAlgebra(name, n, sig, std::move(ops));
}

}  // namespace finalg
