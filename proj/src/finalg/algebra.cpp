#include "finalg/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace finalg {

namespace {

std::string tuple_str(std::span<const Element> args) {
    std::string s = "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(args[i]);
    }
    return s + ")";
}

// Odometer over {0..base-1}^width; returns false when it wraps around.
bool next_tuple(std::vector<Element>& t, int base) {
    for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
        if (++t[i] < base) return true;
        t[i] = 0;
    }
    return false;
}

}  // namespace

Signature::Signature(std::vector<OpSymbol> symbols) : symbols_(std::move(symbols)) {
    std::set<std::string> seen;
    for (const auto& s : symbols_) {
        if (s.arity < 0) throw ArgumentError("operation " + s.name + " has negative arity");
        if (s.name.empty()) throw ArgumentError("operation with empty name");
        if (s.name.find_first_of(" \t\r\n#()") != std::string::npos)
            throw ArgumentError("operation name '" + s.name + "' contains a reserved character");
        if (!seen.insert(s.name).second)
            throw ArgumentError("duplicate operation name '" + s.name + "'");
    }
}

std::optional<int> Signature::index_of(std::string_view name) const {
    for (int i = 0; i < op_count(); ++i)
        if (symbols_[i].name == name) return i;
    return std::nullopt;
}

bool Signature::has_nullary() const {
    for (const auto& s : symbols_)
        if (s.arity == 0) return true;
    return false;
}

long long table_size(int universe_size, int arity, const Limits& lim) {
    long long n = 1;
    for (int i = 0; i < arity; ++i) {
        n *= universe_size;
        if (n > lim.max_dense_entries)
            throw_guard("max_dense_entries", n, lim.max_dense_entries);
    }
    return n;
}

Operation::Operation(int universe_size, int arity, std::vector<Element> table)
    : size_(universe_size), arity_(arity), table_(std::move(table)) {
    if (universe_size < 1) throw ArgumentError("operation over empty universe");
    if (arity < 0) throw ArgumentError("negative arity");
    long long expect = 1;
    for (int i = 0; i < arity; ++i) expect *= universe_size;
    if (static_cast<long long>(table_.size()) != expect)
        throw ArgumentError("operation table has " + std::to_string(table_.size()) +
                            " entries, expected " + std::to_string(expect));
    for (Element v : table_)
        if (v < 0 || v >= universe_size)
            throw ArgumentError("table entry " + std::to_string(v) + " outside universe of size " +
                                std::to_string(universe_size));
}

Element Operation::apply(std::span<const Element> args) const {
    if (static_cast<int>(args.size()) != arity_)
        throw ArgumentError("operation of arity " + std::to_string(arity_) + " applied to " +
                            std::to_string(args.size()) + " arguments");
    for (Element a : args)
        if (a < 0 || a >= size_)
            throw ArgumentError("argument " + std::to_string(a) + " outside universe of size " +
                                std::to_string(size_));
    return apply_unchecked(args);
}

FiniteAlgebra::FiniteAlgebra(std::string name, int size, Signature sig, std::vector<Operation> ops)
    : name_(std::move(name)), size_(size), sig_(std::move(sig)), ops_(std::move(ops)) {
    if (size_ < 1) throw ArgumentError("algebra must have at least one element");
    if (static_cast<int>(ops_.size()) != sig_.op_count())
        throw ArgumentError("operation count does not match signature");
    for (int i = 0; i < sig_.op_count(); ++i) {
        if (ops_[i].arity() != sig_.arity(i))
            throw ArgumentError("operation " + sig_.name(i) + " arity mismatch");
        if (ops_[i].universe_size() != size_)
            throw ArgumentError("operation " + sig_.name(i) + " universe mismatch");
    }
}

Element FiniteAlgebra::eval(int op, std::span<const Element> args) const {
    if (op < 0 || op >= op_count()) throw ArgumentError("operation index out of range");
    return ops_[op].apply(args);
}

bool FiniteAlgebra::is_idempotent() const {
    for (int i = 0; i < op_count(); ++i) {
        int r = sig_.arity(i);
        if (r == 0) {
            if (size_ > 1) return false;
            continue;
        }
        for (Element x = 0; x < size_; ++x) {
            std::vector<Element> args(r, x);
            if (ops_[i].apply_unchecked(args) != x) return false;
        }
    }
    return true;
}

FiniteAlgebra FiniteAlgebra::renamed(std::string new_name) const {
    return FiniteAlgebra(std::move(new_name), size_, sig_, ops_);
}

bool Homomorphism::is_surjective(int target_size) const {
    std::vector<bool> hit(target_size, false);
    for (Element v : map) hit[v] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool Homomorphism::is_bijective(int target_size) const {
    return static_cast<int>(map.size()) == target_size && is_surjective(target_size);
}

bool is_homomorphism(const FiniteAlgebra& source, const FiniteAlgebra& target,
                     const std::vector<Element>& map, std::string* violation) {
    if (source.signature() != target.signature()) throw ArgumentError("signature mismatch");
    if (static_cast<int>(map.size()) != source.size())
        throw ArgumentError("homomorphism map has wrong length");
    for (Element v : map)
        if (v < 0 || v >= target.size()) throw ArgumentError("homomorphism value out of range");
    for (int op = 0; op < source.op_count(); ++op) {
        int r = source.signature().arity(op);
        std::vector<Element> args(r, 0), mapped(r, 0);
        do {
            for (int i = 0; i < r; ++i) mapped[i] = map[args[i]];
            if (map[source.op(op).apply_unchecked(args)] != target.op(op).apply_unchecked(mapped)) {
                if (violation)
                    *violation = "operation " + source.signature().name(op) + " at " + tuple_str(args);
                return false;
            }
        } while (r > 0 && next_tuple(args, source.size()));
    }
    return true;
}

Homomorphism make_checked_homomorphism(const FiniteAlgebra& source, const FiniteAlgebra& target,
                                       std::vector<Element> map) {
    std::string why;
    if (!is_homomorphism(source, target, map, &why))
        throw ArgumentError("not a homomorphism: " + why);
    return Homomorphism{std::move(map)};
}

FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b, const Limits& lim) {
    if (a.signature() != b.signature()) throw ArgumentError("signature mismatch in product");
    long long size = static_cast<long long>(a.size()) * b.size();
    if (size > lim.max_dense_entries) throw_guard("max_dense_entries", size, lim.max_dense_entries);
    int n = static_cast<int>(size);
    std::vector<Operation> ops;
    for (int op = 0; op < a.op_count(); ++op) {
        int r = a.signature().arity(op);
        long long entries = table_size(n, r, lim);
        std::vector<Element> table(entries);
        std::vector<Element> args(r, 0), la(r), lb(r);
        long long idx = 0;
        do {
            for (int i = 0; i < r; ++i) {
                la[i] = args[i] / b.size();
                lb[i] = args[i] % b.size();
            }
            table[idx++] = a.op(op).apply_unchecked(la) * b.size() + b.op(op).apply_unchecked(lb);
        } while (r > 0 && next_tuple(args, n));
        ops.emplace_back(n, r, std::move(table));
    }
    return FiniteAlgebra(a.name() + "x" + b.name(), n, a.signature(), std::move(ops));
}

std::optional<CongruenceViolation> find_congruence_violation(const FiniteAlgebra& a,
                                                             const Partition& p) {
    if (p.size() != a.size()) throw ArgumentError("partition size mismatch");
    // rep[e]: first element of e's block. f respects p iff f(args) stays in the
    // block of f(rep(args)) for every tuple; single-substitution compatibility
    // follows by induction along coordinates.
    std::vector<Element> rep(p.block_count(), -1);
    for (Element e = 0; e < a.size(); ++e)
        if (rep[p.label_of(e)] == -1) rep[p.label_of(e)] = e;
    for (int op = 0; op < a.op_count(); ++op) {
        int r = a.signature().arity(op);
        if (r == 0) continue;
        std::vector<Element> args(r, 0), reps(r);
        do {
            for (int i = 0; i < r; ++i) reps[i] = rep[p.label_of(args[i])];
            Element va = a.op(op).apply_unchecked(args);
            Element vb = a.op(op).apply_unchecked(reps);
            if (!p.same_block(va, vb))
                return CongruenceViolation{op, args, reps, va, vb};
        } while (next_tuple(args, a.size()));
    }
    return std::nullopt;
}

bool is_congruence(const FiniteAlgebra& a, const Partition& p) {
    return !find_congruence_violation(a, p).has_value();
}

QuotientResult quotient_by(const FiniteAlgebra& a, const Partition& theta, const Limits& lim) {
    if (auto v = find_congruence_violation(a, theta)) {
        throw ArgumentError("not a congruence: operation " + a.signature().name(v->op) + " maps " +
                            tuple_str(v->args_a) + " ~ " + tuple_str(v->args_b) + " to unrelated " +
                            std::to_string(v->value_a) + ", " + std::to_string(v->value_b));
    }
    int n = theta.block_count();
    std::vector<Element> rep(n, -1);
    for (Element e = 0; e < a.size(); ++e)
        if (rep[theta.label_of(e)] == -1) rep[theta.label_of(e)] = e;

    std::vector<Operation> ops;
    for (int op = 0; op < a.op_count(); ++op) {
        int r = a.signature().arity(op);
        long long entries = table_size(n, r, lim);
        std::vector<Element> table(entries);
        std::vector<Element> args(r, 0), reps(r);
        long long idx = 0;
        do {
            for (int i = 0; i < r; ++i) reps[i] = rep[args[i]];
            table[idx++] = theta.label_of(a.op(op).apply_unchecked(reps));
        } while (r > 0 && next_tuple(args, n));
        ops.emplace_back(n, r, std::move(table));
    }
    FiniteAlgebra q(a.name() + "/theta", n, a.signature(), std::move(ops));
    Homomorphism proj = make_checked_homomorphism(a, q, theta.labels());
    return QuotientResult{std::move(q), std::move(proj)};
}

FiniteAlgebra matrix_power(const FiniteAlgebra& a, int d, const Limits& lim) {
    if (d < 1) throw ArgumentError("matrix power requires d >= 1");
    long long size = 1;
    for (int i = 0; i < d; ++i) {
        size *= a.size();
        if (size > lim.max_dense_entries)
            throw_guard("max_dense_entries", size, lim.max_dense_entries);
    }
    int n = static_cast<int>(size);

    std::vector<OpSymbol> symbols = a.signature().symbols();
    for (const auto& s : symbols)
        if (s.name == "shift" || s.name == "diag")
            throw ArgumentError("matrix power reserves operation names 'shift' and 'diag'");
    symbols.push_back({"shift", 1});
    symbols.push_back({"diag", d});

    auto decode = [&](Element e, std::vector<Element>& out) {
        for (int i = d - 1; i >= 0; --i) {
            out[i] = e % a.size();
            e /= a.size();
        }
    };
    auto encode = [&](const std::vector<Element>& coords) {
        Element e = 0;
        for (int i = 0; i < d; ++i) e = e * a.size() + coords[i];
        return e;
    };

    std::vector<Operation> ops;
    std::vector<std::vector<Element>> dec;  // per-argument coordinate scratch
    // base operations, coordinatewise
    for (int op = 0; op < a.op_count(); ++op) {
        int r = a.signature().arity(op);
        long long entries = table_size(n, r, lim);
        std::vector<Element> table(entries);
        std::vector<Element> args(r, 0), coords(d), argcoord(r);
        dec.assign(r, std::vector<Element>(d));
        long long idx = 0;
        do {
            for (int i = 0; i < r; ++i) decode(args[i], dec[i]);
            for (int c = 0; c < d; ++c) {
                for (int i = 0; i < r; ++i) argcoord[i] = dec[i][c];
                coords[c] = a.op(op).apply_unchecked(argcoord);
            }
            table[idx++] = encode(coords);
        } while (r > 0 && next_tuple(args, n));
        ops.emplace_back(n, r, std::move(table));
    }
    {  // shift: (x0..x_{d-1}) -> (x1..x_{d-1},x0)
        std::vector<Element> table(n), coords(d), shifted(d);
        for (Element e = 0; e < n; ++e) {
            decode(e, coords);
            for (int i = 0; i < d; ++i) shifted[i] = coords[(i + 1) % d];
            table[e] = encode(shifted);
        }
        ops.emplace_back(n, 1, std::move(table));
    }
    {  // diag: (x^0,..,x^{d-1}) -> (x^0_0, x^1_1, .., x^{d-1}_{d-1})
        long long entries = table_size(n, d, lim);
        std::vector<Element> table(entries);
        std::vector<Element> args(d, 0), coords(d), scratch(d);
        long long idx = 0;
        do {
            for (int i = 0; i < d; ++i) {
                decode(args[i], scratch);
                coords[i] = scratch[i];
            }
            table[idx++] = encode(coords);
        } while (next_tuple(args, n));
        ops.emplace_back(n, d, std::move(table));
    }
    return FiniteAlgebra(a.name() + "^[" + std::to_string(d) + "]", n, Signature(symbols),
                         std::move(ops));
}

namespace {

// Per-element fingerprint preserved by isomorphisms.
std::vector<long long> iso_key(const FiniteAlgebra& alg, Element e) {
    std::vector<long long> key;
    for (int op = 0; op < alg.op_count(); ++op) {
        const auto& table = alg.op(op).table();
        key.push_back(std::count(table.begin(), table.end(), e));
        int r = alg.signature().arity(op);
        if (r == 0) {
            key.push_back(table[0] == e ? 1 : 0);
        } else {
            std::vector<Element> diag(r, e);
            key.push_back(alg.op(op).apply_unchecked(diag) == e ? 1 : 0);
        }
    }
    return key;
}

struct IsoSearch {
    const FiniteAlgebra& a;
    const FiniteAlgebra& b;
    std::vector<std::vector<Element>> candidates;  // per a-element
    std::vector<Element> order;                    // a-elements, most constrained first
    std::vector<Element> map;                      // a -> b or -1
    std::vector<bool> used;                        // b side

    bool consistent(Element just_assigned) const {
        std::vector<Element> assigned;
        for (Element e = 0; e < a.size(); ++e)
            if (map[e] != -1) assigned.push_back(e);
        for (int op = 0; op < a.op_count(); ++op) {
            int r = a.signature().arity(op);
            if (r == 0) {
                Element ca = a.op(op).table()[0];
                if (map[ca] != -1 && map[ca] != b.op(op).table()[0]) return false;
                continue;
            }
            std::vector<int> pos(r, 0);
            std::vector<Element> args(r), mapped(r);
            bool done = false;
            while (!done) {
                bool touches = false;
                for (int i = 0; i < r; ++i) {
                    args[i] = assigned[pos[i]];
                    if (args[i] == just_assigned) touches = true;
                }
                if (touches) {
                    Element fa = a.op(op).apply_unchecked(args);
                    if (map[fa] != -1) {
                        for (int i = 0; i < r; ++i) mapped[i] = map[args[i]];
                        if (b.op(op).apply_unchecked(mapped) != map[fa]) return false;
                    }
                }
                int i = r - 1;
                for (; i >= 0; --i) {
                    if (++pos[i] < static_cast<int>(assigned.size())) break;
                    pos[i] = 0;
                }
                if (i < 0) done = true;
            }
        }
        return true;
    }

    bool run(std::size_t depth) {
        if (depth == order.size()) return true;
        Element e = order[depth];
        for (Element cand : candidates[e]) {
            if (used[cand]) continue;
            map[e] = cand;
            used[cand] = true;
            if (consistent(e) && run(depth + 1)) return true;
            map[e] = -1;
            used[cand] = false;
        }
        return false;
    }
};

}  // namespace

std::optional<Homomorphism> is_isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                          const Limits& lim) {
    if (a.signature() != b.signature()) throw ArgumentError("signature mismatch");
    if (a.size() != b.size()) return std::nullopt;
    if (a.size() > lim.max_iso_universe)
        throw_guard("max_iso_universe", a.size(), lim.max_iso_universe);

    std::vector<std::vector<long long>> keys_b(b.size());
    for (Element e = 0; e < b.size(); ++e) keys_b[e] = iso_key(b, e);

    IsoSearch search{a, b, {}, {}, std::vector<Element>(a.size(), -1),
                     std::vector<bool>(b.size(), false)};
    search.candidates.resize(a.size());
    for (Element e = 0; e < a.size(); ++e) {
        auto key = iso_key(a, e);
        for (Element f = 0; f < b.size(); ++f)
            if (keys_b[f] == key) search.candidates[e].push_back(f);
        if (search.candidates[e].empty()) return std::nullopt;
    }
    search.order.resize(a.size());
    std::iota(search.order.begin(), search.order.end(), 0);
    std::stable_sort(search.order.begin(), search.order.end(), [&](Element x, Element y) {
        return search.candidates[x].size() < search.candidates[y].size();
    });

    if (!search.run(0)) return std::nullopt;
    // Exhaustive re-check: the incremental pruning defers constraints whose
    // result element was unassigned at the time.
    if (!is_homomorphism(a, b, search.map)) return std::nullopt;
    return Homomorphism{std::move(search.map)};
}

namespace {

// Extend gen images to a full map by closing under operations; nullopt when the
// extension is inconsistent or does not stay a function.
std::optional<std::vector<Element>> extend_hom(const FiniteAlgebra& b, const FiniteAlgebra& a,
                                               const std::vector<Element>& gens,
                                               const std::vector<Element>& images) {
    std::vector<Element> map(b.size(), -1);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (map[gens[i]] != -1 && map[gens[i]] != images[i]) return std::nullopt;
        map[gens[i]] = images[i];
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int op = 0; op < b.op_count(); ++op) {
            int r = b.signature().arity(op);
            if (r == 0) {
                Element cb = b.op(op).table()[0], ca = a.op(op).table()[0];
                if (map[cb] == -1) {
                    map[cb] = ca;
                    changed = true;
                } else if (map[cb] != ca) {
                    return std::nullopt;
                }
                continue;
            }
            std::vector<Element> args(r, 0), mapped(r);
            do {
                bool all_mapped = true;
                for (int i = 0; i < r; ++i) {
                    if (map[args[i]] == -1) {
                        all_mapped = false;
                        break;
                    }
                    mapped[i] = map[args[i]];
                }
                if (!all_mapped) continue;
                Element fb = b.op(op).apply_unchecked(args);
                Element fa = a.op(op).apply_unchecked(mapped);
                if (map[fb] == -1) {
                    map[fb] = fa;
                    changed = true;
                } else if (map[fb] != fa) {
                    return std::nullopt;
                }
            } while (next_tuple(args, b.size()));
        }
    }
    for (Element e = 0; e < b.size(); ++e)
        if (map[e] == -1) return std::nullopt;  // gens did not generate b
    return map;
}

}  // namespace

std::optional<Homomorphism> find_surjective_hom(const FiniteAlgebra& b, const FiniteAlgebra& a,
                                                const Limits& lim) {
    if (a.signature() != b.signature()) throw ArgumentError("signature mismatch");
    (void)lim;
    std::vector<Element> gens = greedy_generating_set(b);
    if (gens.empty()) {
        // constants generate b; the extension is unique if it exists
        auto map = extend_hom(b, a, {}, {});
        if (map && Homomorphism{*map}.is_surjective(a.size()) && is_homomorphism(b, a, *map))
            return Homomorphism{std::move(*map)};
        return std::nullopt;
    }
    std::vector<Element> images(gens.size(), 0);
    do {
        auto map = extend_hom(b, a, gens, images);
        if (map && Homomorphism{*map}.is_surjective(a.size()) && is_homomorphism(b, a, *map))
            return Homomorphism{std::move(*map)};
    } while (next_tuple(images, a.size()));
    return std::nullopt;
}

std::vector<Element> subuniverse_of(const FiniteAlgebra& a, const std::vector<Element>& gens) {
    std::vector<bool> in(a.size(), false);
    std::vector<Element> members;
    auto add = [&](Element e) {
        if (!in[e]) {
            in[e] = true;
            members.push_back(e);
        }
    };
    for (Element g : gens) {
        if (g < 0 || g >= a.size()) throw ArgumentError("generator out of range");
        add(g);
    }
    for (int op = 0; op < a.op_count(); ++op)
        if (a.signature().arity(op) == 0) add(a.op(op).table()[0]);

    std::size_t frontier = 0;
    while (frontier < members.size()) {
        std::size_t upto = members.size();
        for (int op = 0; op < a.op_count(); ++op) {
            int r = a.signature().arity(op);
            if (r == 0) continue;
            std::vector<int> pos(r, 0);
            std::vector<Element> args(r);
            bool done = upto == 0;
            while (!done) {
                bool fresh = false;
                for (int i = 0; i < r; ++i) {
                    args[i] = members[pos[i]];
                    if (pos[i] >= static_cast<int>(frontier)) fresh = true;
                }
                if (fresh || frontier == 0) add(a.op(op).apply_unchecked(args));
                int i = r - 1;
                for (; i >= 0; --i) {
                    if (++pos[i] < static_cast<int>(upto)) break;
                    pos[i] = 0;
                }
                if (i < 0) done = true;
            }
        }
        frontier = upto;
    }
    std::sort(members.begin(), members.end());
    return members;
}

std::vector<Element> greedy_generating_set(const FiniteAlgebra& a) {
    std::vector<Element> gens;
    std::vector<Element> closed = subuniverse_of(a, gens);
    while (static_cast<int>(closed.size()) < a.size()) {
        Element next = 0;
        std::vector<bool> in(a.size(), false);
        for (Element e : closed) in[e] = true;
        while (in[next]) ++next;
        gens.push_back(next);
        closed = subuniverse_of(a, gens);
    }
    return gens;
}

int min_generating_size(const FiniteAlgebra& a, const Limits& lim) {
    (void)lim;
    int n = a.size();
    for (int k = 0; k <= n; ++k) {
        std::vector<int> combo(k);
        std::iota(combo.begin(), combo.end(), 0);
        while (true) {
            std::vector<Element> gens(combo.begin(), combo.end());
            if (static_cast<int>(subuniverse_of(a, gens).size()) == n) return k;
            // next k-combination of {0..n-1}
            int i = k - 1;
            while (i >= 0 && combo[i] == n - k + i) --i;
            if (i < 0) break;
            ++combo[i];
            for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    return n;  // unreachable: the whole universe always generates
}

}  // namespace finalg
