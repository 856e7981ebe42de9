#include "finalg/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "finalg/termcond.hpp"

namespace finalg {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int parse_int_token(const std::vector<std::string>& tokens, std::size_t& pos,
                    const char* what) {
    if (pos >= tokens.size())
        throw ArgumentError(std::string("catalog spec: missing ") + what);
    try {
        return std::stoi(tokens[pos++]);
    } catch (...) {
        throw ArgumentError(std::string("catalog spec: ") + what + " must be an integer, got '" +
                            tokens[pos - 1] + "'");
    }
}

CatalogSpec parse_spec_at(const std::vector<std::string>& tokens, std::size_t& pos) {
    if (pos >= tokens.size()) throw ArgumentError("catalog spec: missing kind");
    std::string kind = tokens[pos++];
    CatalogSpec spec;
    if (kind == "set") {
        spec.kind = CatalogSpec::Kind::set;
        spec.param = parse_int_token(tokens, pos, "size");
    } else if (kind == "pointed_set") {
        spec.kind = CatalogSpec::Kind::pointed_set;
        spec.param = parse_int_token(tokens, pos, "size");
    } else if (kind == "vector_space") {
        spec.kind = CatalogSpec::Kind::vector_space;
        spec.param = parse_int_token(tokens, pos, "prime");
    } else if (kind == "affine_space") {
        spec.kind = CatalogSpec::Kind::affine_space;
        spec.param = parse_int_token(tokens, pos, "prime");
    } else if (kind == "semilattice") {
        spec.kind = CatalogSpec::Kind::semilattice;
        spec.param = parse_int_token(tokens, pos, "chain length");
    } else if (kind == "matrix_power") {
        spec.kind = CatalogSpec::Kind::matrix_power;
        spec.power = parse_int_token(tokens, pos, "exponent d");
        spec.inner = std::make_shared<CatalogSpec>(parse_spec_at(tokens, pos));
    } else if (kind == "semiprojection") {
        spec.kind = CatalogSpec::Kind::semiprojection;
        spec.power = parse_int_token(tokens, pos, "semiprojection rank m");
        if (pos >= tokens.size())
            throw ArgumentError("catalog spec: missing semiprojection variant");
        spec.variant = tokens[pos++];
        if (spec.variant != "projection" && spec.variant != "shifted")
            throw ArgumentError("catalog spec: variant must be 'projection' or 'shifted'");
        spec.inner = std::make_shared<CatalogSpec>(parse_spec_at(tokens, pos));
    } else {
        throw ArgumentError("catalog spec: unknown kind '" + kind + "'");
    }
    return spec;
}

}  // namespace

CatalogSpec parse_catalog_spec(const std::vector<std::string>& tokens) {
    std::size_t pos = 0;
    CatalogSpec spec = parse_spec_at(tokens, pos);
    if (pos != tokens.size())
        throw ArgumentError("catalog spec: trailing tokens after a complete spec");
    return spec;
}

FiniteAlgebra build(const CatalogSpec& spec, const Limits& lim) {
    switch (spec.kind) {
        case CatalogSpec::Kind::set: {
            if (spec.param < 1) throw ArgumentError("set size must be >= 1");
            return FiniteAlgebra("set" + std::to_string(spec.param), spec.param, Signature(std::vector<OpSymbol>{}), {});
        }
        case CatalogSpec::Kind::pointed_set: {
            if (spec.param < 1) throw ArgumentError("pointed set size must be >= 1");
            return FiniteAlgebra("pointed_set" + std::to_string(spec.param), spec.param,
                                 Signature({{"0", 0}}), {Operation(spec.param, 0, {0})});
        }
        case CatalogSpec::Kind::vector_space: {
            int p = spec.param;
            if (!is_prime(p)) throw ArgumentError(std::to_string(p) + " is not prime");
            std::vector<OpSymbol> symbols{{"+", 2}, {"0", 0}};
            std::vector<Element> add(static_cast<std::size_t>(p) * p);
            for (Element x = 0; x < p; ++x)
                for (Element y = 0; y < p; ++y) add[x * p + y] = (x + y) % p;
            std::vector<Operation> ops{Operation(p, 2, std::move(add)), Operation(p, 0, {0})};
            for (int s = 2; s < p; ++s) {
                symbols.push_back({"s" + std::to_string(s), 1});
                std::vector<Element> mul(p);
                for (Element x = 0; x < p; ++x) mul[x] = (s * x) % p;
                ops.emplace_back(p, 1, std::move(mul));
            }
            return FiniteAlgebra("vector_space" + std::to_string(p), p, Signature(symbols),
                                 std::move(ops));
        }
        case CatalogSpec::Kind::affine_space: {
            int p = spec.param;
            if (!is_prime(p)) throw ArgumentError(std::to_string(p) + " is not prime");
            std::vector<Element> mal(static_cast<std::size_t>(p) * p * p);
            for (Element x = 0; x < p; ++x)
                for (Element y = 0; y < p; ++y)
                    for (Element z = 0; z < p; ++z)
                        mal[(x * p + y) * p + z] = ((x - y + z) % p + p) % p;
            return FiniteAlgebra("affine_space" + std::to_string(p), p, Signature({{"mal", 3}}),
                                 {Operation(p, 3, std::move(mal))});
        }
        case CatalogSpec::Kind::semilattice: {
            int k = spec.param;
            if (k < 1) throw ArgumentError("semilattice chain length must be >= 1");
            std::vector<Element> meet(static_cast<std::size_t>(k) * k);
            for (Element x = 0; x < k; ++x)
                for (Element y = 0; y < k; ++y) meet[x * k + y] = std::min(x, y);
            return FiniteAlgebra("semilattice" + std::to_string(k), k, Signature({{"meet", 2}}),
                                 {Operation(k, 2, std::move(meet))});
        }
        case CatalogSpec::Kind::matrix_power:
            if (!spec.inner) throw ArgumentError("matrix power needs a base spec");
            return matrix_power(build(*spec.inner, lim), spec.power, lim);
        case CatalogSpec::Kind::semiprojection:
            if (!spec.inner) throw ArgumentError("semiprojection expansion needs a base spec");
            return build_semiprojection_expansion(build(*spec.inner, lim), spec.power,
                                                  spec.variant, lim);
    }
    throw ArgumentError("unknown catalog kind");
}

FiniteAlgebra build_semiprojection_expansion(const FiniteAlgebra& base, int m,
                                             const std::string& variant, const Limits& lim) {
    if (m < 1) throw ArgumentError("semiprojection rank m must be >= 1");
    bool shifted = variant == "shifted";
    if (!shifted && variant != "projection")
        throw ArgumentError("semiprojection variant must be 'projection' or 'shifted'");
    if (shifted && base.size() < m + 1)
        throw ArgumentError("shifted semiprojection needs |A| >= " + std::to_string(m + 1) +
                            "; on smaller universes the identities force the projection");
    if (base.signature().index_of("s"))
        throw ArgumentError("base signature already uses the name 's'");

    int n = base.size();
    int arity = m + 1;
    long long entries = table_size(n, arity, lim);
    std::vector<Element> table(entries);
    std::vector<Element> args(arity, 0);
    long long idx = 0;
    while (true) {
        bool repeat = false;
        for (int i = 0; i < arity && !repeat; ++i)
            for (int j = i + 1; j < arity; ++j)
                if (args[i] == args[j]) {
                    repeat = true;
                    break;
                }
        table[idx++] = (repeat || !shifted) ? args[0] : args[1];
        int i = arity - 1;
        for (; i >= 0; --i) {
            if (++args[i] < n) break;
            args[i] = 0;
        }
        if (i < 0) break;
    }
    std::vector<OpSymbol> symbols = base.signature().symbols();
    symbols.push_back({"s", arity});
    std::vector<Operation> ops;
    for (int op = 0; op < base.op_count(); ++op) ops.push_back(base.op(op));
    ops.emplace_back(n, arity, std::move(table));
    return FiniteAlgebra(base.name() + "_s" + std::to_string(m) + (shifted ? "shifted" : "proj"),
                         n, Signature(symbols), std::move(ops));
}

long long clone_count_formula(CloneCase c, int d, int n, CloneFormulaParams params) {
    if (d < 1 || n < 1) throw ArgumentError("clone count formula needs d >= 1 and n >= 1");
    auto ipow = [](long long base, int exp) {
        long long r = 1;
        for (int i = 0; i < exp; ++i) r *= base;
        return r;
    };
    switch (c) {
        case CloneCase::i:
            return ipow(static_cast<long long>(n) * d, d);
        case CloneCase::ii:
            return ipow(static_cast<long long>(n) * d + 1, d);
        case CloneCase::iii:
            if (params.universe < 1 || params.ideal < 1)
                throw ArgumentError("case iii needs |A| and |L|");
            return ipow(params.universe, d * (n - 1)) * params.ideal;
    }
    throw ArgumentError("unknown clone case");
}

std::string to_string(ClassifyResult::Verdict v) {
    switch (v) {
        case ClassifyResult::Verdict::sets: return "sets";
        case ClassifyResult::Verdict::pointed_sets: return "pointed_sets";
        case ClassifyResult::Verdict::vector_space: return "vector_space";
        case ClassifyResult::Verdict::affine_space: return "affine_space";
        case ClassifyResult::Verdict::unclassified: return "unclassified";
    }
    return "unclassified";
}

namespace {

// The Maltsev-term table, if the clone has one: generate the pairs
// (t(x,x,y), t(y,x,x)) over all ternary terms t inside A^(A^2) x A^(A^2) and
// look for the element (y, y); the witness term is then re-evaluated over
// A^(A^3) to recover its ternary table.
std::optional<std::vector<Element>> maltsev_term_table(const FiniteAlgebra& a, const Limits& lim) {
    long long l2 = static_cast<long long>(a.size()) * a.size();
    ProductContext ctx({{&a, l2}, {&a, l2}});
    auto cat = [&](std::vector<Element> left, const std::vector<Element>& right) {
        left.insert(left.end(), right.begin(), right.end());
        return left;
    };
    std::vector<Element> p0 = projection_table(a, 2, 0);
    std::vector<Element> p1 = projection_table(a, 2, 1);
    std::vector<std::vector<Element>> gens{cat(p0, p1), cat(p0, p0), cat(p1, p0)};
    GeneratedSet gs = generate(ctx, gens, lim);
    auto hit = gs.index_of(cat(p1, p1));
    if (!hit) return std::nullopt;

    long long l3 = l2 * a.size();
    ProductContext ctx3 = ProductContext::power_of(a, l3);
    std::vector<std::vector<Element>> leaves{projection_table(a, 3, 0), projection_table(a, 3, 1),
                                             projection_table(a, 3, 2)};
    return eval_term_tuples(ctx3, gs.witnesses(), *hit, leaves);
}

bool is_projection_table(const std::vector<Element>& table, int size, int arity, int which) {
    long long period = 1;
    for (int k = which + 1; k < arity; ++k) period *= size;
    for (long long idx = 0; idx < static_cast<long long>(table.size()); ++idx)
        if (table[idx] != static_cast<Element>((idx / period) % size)) return false;
    return true;
}

bool is_any_projection(const std::vector<Element>& table, int size, int arity) {
    for (int i = 0; i < arity; ++i)
        if (is_projection_table(table, size, arity, i)) return true;
    return false;
}

bool is_constant_table(const std::vector<Element>& table, Element value) {
    return std::all_of(table.begin(), table.end(), [&](Element v) { return v == value; });
}

}  // namespace

bool has_maltsev_term(const FiniteAlgebra& a, const Limits& lim) {
    return maltsev_term_table(a, lim).has_value();
}

std::optional<int> find_maltsev_in_clone3(const CloneTables& clo3, int universe_size) {
    const int q = universe_size;
    auto at = [&](const std::vector<Element>& t, Element x, Element y, Element z) {
        return t[(static_cast<long long>(x) * q + y) * q + z];
    };
    for (int i = 0; i < clo3.set.size(); ++i) {
        const auto& t = clo3.set.element(i);
        bool ok = true;
        for (Element x = 0; x < q && ok; ++x)
            for (Element y = 0; y < q; ++y)
                if (at(t, x, x, y) != y || at(t, y, x, x) != y) {
                    ok = false;
                    break;
                }
        if (ok) return i;
    }
    return std::nullopt;
}

ClassifyResult classify(const FiniteAlgebra& a, int arity_bound, const Limits& lim) {
    if (a.size() > lim.max_classify_universe)
        throw_guard("max_classify_universe", a.size(), lim.max_classify_universe);
    ClassifyResult result;
    result.verified_to_arity = arity_bound;

    // (a)/(b): a basic operation is itself a term operation, so the sets and
    // pointed-sets verdicts can be read off the fundamental tables exactly.
    bool all_projections = true;
    bool pointed_shape = true;  // projections plus one fixed constant
    Element constant_value = -1;
    bool has_nullary = a.signature().has_nullary();
    for (int op = 0; op < a.op_count() && pointed_shape; ++op) {
        const auto& table = a.op(op).table();
        int r = a.signature().arity(op);
        if (r > 0 && is_any_projection(table, a.size(), r)) continue;
        all_projections = false;
        Element v = table[0];
        if (!is_constant_table(table, v)) {
            pointed_shape = false;
            break;
        }
        if (constant_value == -1)
            constant_value = v;
        else if (constant_value != v)
            pointed_shape = false;
    }
    if (all_projections && !has_nullary) {
        result.verdict = ClassifyResult::Verdict::sets;
        return result;
    }
    if (pointed_shape && constant_value != -1) {
        result.verdict = ClassifyResult::Verdict::pointed_sets;
        result.constant_realization = has_nullary ? "nullary" : "unary_term";
        return result;
    }

    // (c): Maltsev term + abelian -> try to reconstruct the module structure.
    auto maltsev = maltsev_term_table(a, lim);
    if (!maltsev || !is_abelian(a, lim).abelian) return result;  // (d)

    Element zero = 0;
    if (has_nullary) {
        for (int op = 0; op < a.op_count(); ++op)
            if (a.signature().arity(op) == 0) {
                zero = a.op(op).table()[0];
                break;
            }
        result.constant_realization = "nullary";
    } else {
        CloneTables clo1 = clone_table(a, 1, lim);
        for (int i = 0; i < clo1.set.size(); ++i)
            if (is_constant_table(clo1.set.element(i), clo1.set.element(i)[0])) {
                zero = clo1.set.element(i)[0];
                result.constant_realization = "unary_term";
                break;
            }
    }
    bool has_constant = !result.constant_realization.empty();

    const int q = a.size();
    auto m3 = [&](Element x, Element y, Element z) {
        return (*maltsev)[(static_cast<long long>(x) * q + y) * q + z];
    };
    std::vector<Element> add(static_cast<std::size_t>(q) * q);
    for (Element x = 0; x < q; ++x)
        for (Element y = 0; y < q; ++y) add[x * q + y] = m3(x, zero, y);
    auto plus = [&](Element x, Element y) { return add[x * q + y]; };

    // abelian group axioms for (A, +, zero)
    for (Element x = 0; x < q; ++x) {
        if (plus(x, zero) != x || plus(zero, x) != x) return result;
        bool has_inverse = false;
        for (Element y = 0; y < q; ++y)
            if (plus(x, y) == zero) has_inverse = true;
        if (!has_inverse) return result;
        for (Element y = 0; y < q; ++y) {
            if (plus(x, y) != plus(y, x)) return result;
            for (Element z = 0; z < q; ++z)
                if (plus(plus(x, y), z) != plus(x, plus(y, z))) return result;
        }
    }

    // scalars: unary polynomials fixing zero
    GeneratedSet pol1 = unary_polynomials(a, lim);
    std::set<std::vector<Element>> scalars;
    for (int i = 0; i < pol1.size(); ++i)
        if (pol1.element(i)[zero] == zero) scalars.insert(pol1.element(i));
    std::vector<Element> id_map = projection_table(a, 1, 0);
    std::vector<Element> zero_map(q, zero);
    if (!scalars.count(id_map) || !scalars.count(zero_map)) return result;

    // field checks: closure under composition and pointwise sum, additivity,
    // commutative composition, inverses for the nonzero scalars
    for (const auto& s : scalars) {
        for (Element x = 0; x < q; ++x)
            for (Element y = 0; y < q; ++y)
                if (s[plus(x, y)] != plus(s[x], s[y])) return result;
        for (const auto& t : scalars) {
            std::vector<Element> comp(q), sum(q);
            for (Element x = 0; x < q; ++x) {
                comp[x] = s[t[x]];
                sum[x] = plus(s[x], t[x]);
            }
            if (!scalars.count(comp) || !scalars.count(sum)) return result;
            std::vector<Element> comp_rev(q);
            for (Element x = 0; x < q; ++x) comp_rev[x] = t[s[x]];
            if (comp != comp_rev) return result;
        }
        if (s != zero_map) {
            bool invertible = false;
            for (const auto& t : scalars) {
                std::vector<Element> comp(q);
                for (Element x = 0; x < q; ++x) comp[x] = s[t[x]];
                if (comp == id_map) invertible = true;
            }
            if (!invertible) return result;
        }
    }

    bool affine_branch = !has_constant;
    if (affine_branch && !a.is_idempotent()) return result;

    // the clone must equal the linear (resp. affine) combination clone
    std::vector<std::vector<Element>> scalar_list(scalars.begin(), scalars.end());
    for (int n = 1; n <= arity_bound; ++n) {
        long long width = 1;
        for (int i = 0; i < n; ++i) width *= q;
        std::set<std::vector<Element>> combos;
        std::vector<int> pick(n, 0);
        while (true) {
            // sum_i s_i(x_i), with sum of scalars = id in the affine branch
            bool admit = true;
            if (affine_branch) {
                std::vector<Element> total = zero_map;
                for (int i = 0; i < n; ++i)
                    for (Element x = 0; x < q; ++x)
                        total[x] = plus(total[x], scalar_list[pick[i]][x]);
                admit = (total == id_map);
            }
            if (admit) {
                std::vector<Element> table(width);
                for (long long idx = 0; idx < width; ++idx) {
                    Element acc = zero;
                    long long rest = idx;
                    for (int i = n - 1; i >= 0; --i) {
                        Element xi = static_cast<Element>(rest % q);
                        rest /= q;
                        acc = plus(acc, scalar_list[pick[i]][xi]);
                    }
                    table[idx] = acc;
                }
                combos.insert(std::move(table));
            }
            int i = n - 1;
            for (; i >= 0; --i) {
                if (++pick[i] < static_cast<int>(scalar_list.size())) break;
                pick[i] = 0;
            }
            if (i < 0) break;
        }
        CloneTables clo = clone_table(a, n, lim);
        std::set<std::vector<Element>> actual(clo.set.elements().begin(),
                                              clo.set.elements().end());
        if (combos != actual) return result;
    }

    result.verdict = affine_branch ? ClassifyResult::Verdict::affine_space
                                   : ClassifyResult::Verdict::vector_space;
    result.field_size = static_cast<int>(scalars.size());
    ScalarStructure structure;
    structure.zero = zero;
    structure.add_table = add;
    structure.scalar_maps = scalar_list;
    result.scalars = std::move(structure);
    return result;
}

SmallfreeReport verify_smallfree(int n, const Limits& lim) {
    if (n < 1 || n > 3) throw ArgumentError("smallfree verification supports n in {1,2,3}");
    int m = n;
    SmallfreeReport report;
    report.n = n;

    CatalogSpec base;
    base.kind = CatalogSpec::Kind::set;
    base.param = n + 1;
    FiniteAlgebra b = build_semiprojection_expansion(build(base, lim), m, "projection", lim);
    FiniteAlgebra a = build_semiprojection_expansion(build(base, lim), m, "shifted", lim);

    // (a) on every universe of size <= m, the identities admit only the first
    // projection: every (m+1)-tuple over k <= m values repeats an entry, so the
    // table is forced entrywise; small candidate spaces are also enumerated
    // literally as a cross-check.
    report.forced_projection = true;
    for (int k = 1; k <= m; ++k) {
        long long cells = 1;
        for (int i = 0; i <= m; ++i) cells *= k;
        // forced-entry route
        {
            std::vector<Element> args(m + 1, 0);
            long long idx = 0;
            bool all_forced_to_first = true;
            while (true) {
                bool repeat = false;
                for (int i = 0; i <= m && !repeat; ++i)
                    for (int j = i + 1; j <= m; ++j)
                        if (args[i] == args[j]) {
                            repeat = true;
                            break;
                        }
                if (!repeat) all_forced_to_first = false;  // a free cell would exist
                ++idx;
                int i = m;
                for (; i >= 0; --i) {
                    if (++args[i] < k) break;
                    args[i] = 0;
                }
                if (i < 0) break;
            }
            (void)idx;
            if (!all_forced_to_first) report.forced_projection = false;
        }
        // literal filter when the candidate space is small
        double space = std::pow(static_cast<double>(k), static_cast<double>(cells));
        long long checked = 1;
        if (space <= 4096.0) {
            checked = 0;
            std::vector<Element> table(cells, 0);
            long long satisfying = 0;
            bool all_projection = true;
            while (true) {
                ++checked;
                bool ok = true;
                std::vector<Element> args(m + 1, 0);
                long long idx = 0;
                while (ok) {
                    bool repeat = false;
                    for (int i = 0; i <= m && !repeat; ++i)
                        for (int j = i + 1; j <= m; ++j)
                            if (args[i] == args[j]) {
                                repeat = true;
                                break;
                            }
                    if (repeat && table[idx] != args[0]) ok = false;
                    ++idx;
                    int i = m;
                    for (; i >= 0; --i) {
                        if (++args[i] < k) break;
                        args[i] = 0;
                    }
                    if (i < 0) break;
                }
                if (ok) {
                    ++satisfying;
                    if (!is_projection_table(table, k, m + 1, 0)) all_projection = false;
                }
                int i = static_cast<int>(cells) - 1;
                for (; i >= 0; --i) {
                    if (++table[i] < k) break;
                    table[i] = 0;
                }
                if (i < 0) break;
            }
            if (satisfying != 1 || !all_projection) report.forced_projection = false;
        }
        report.forced_counts.emplace_back(k, checked);
    }

    auto hom = find_surjective_hom(b, a, lim);
    report.no_surjection = !hom.has_value();
    long long maps = 1;
    for (std::size_t i = 0; i < greedy_generating_set(b).size(); ++i) maps *= a.size();
    report.maps_searched = maps;
    report.b_min_generating = min_generating_size(b, lim);
    report.pass = report.forced_projection && report.no_surjection;
    return report;
}

}  // namespace finalg
