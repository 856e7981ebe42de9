#include "finalg/freevar.hpp"

#include <algorithm>
#include <map>

namespace finalg {

FreeAlgebra free_algebra(const FiniteAlgebra& a, int rank, const Limits& lim) {
    if (rank < 0) throw ArgumentError("free algebra rank must be nonnegative");
    FreeAlgebra f;
    f.rank = rank;
    if (rank == 0 && !a.signature().has_nullary()) {
        f.empty = true;
        f.width = 1;
        return f;
    }
    CloneTables clo = clone_table(a, rank, lim);
    f.width = clo.width;
    ProductContext ctx = ProductContext::power_of(a, clo.width);
    f.algebra = materialize_subproduct(ctx, clo.set.elements(),
                                       "F(" + a.name() + "," + std::to_string(rank) + ")", lim);
    f.generators = clo.set.generator_index();
    f.tables = std::move(clo.set);
    return f;
}

MembershipResult variety_membership(const FiniteAlgebra& b, const FiniteAlgebra& a,
                                    const Limits& lim) {
    if (a.signature() != b.signature()) throw ArgumentError("signature mismatch");
    int n = b.size();
    long long width = 1;
    for (int i = 0; i < n; ++i) {
        width *= a.size();
        if (width > lim.max_power_width) throw_guard("max_power_width", width, lim.max_power_width);
    }
    ProductContext tables = ProductContext::power_of(a, width);
    ProductContext member = ProductContext::power_of(b, 1);
    ProductContext ctx = concat(tables, member);

    std::vector<std::vector<Element>> gens;
    for (Element bi = 0; bi < n; ++bi) {
        std::vector<Element> g = projection_table(a, n, bi);
        g.push_back(bi);
        gens.push_back(std::move(g));
    }
    GeneratedSet gs = generate(ctx, gens, lim);

    // functional iff no two elements share the table part with different b-part
    std::map<std::vector<Element>, int> first_by_table;
    for (int i = 0; i < gs.size(); ++i) {
        std::vector<Element> table(gs.element(i).begin(), gs.element(i).end() - 1);
        auto [it, inserted] = first_by_table.emplace(std::move(table), i);
        if (!inserted) {
            int j = it->second;
            IdentityWitness w;
            w.arena = gs.witnesses();
            w.lhs = j;
            w.rhs = i;
            w.variable_count = n;
            w.assignment.resize(n);
            for (Element bi = 0; bi < n; ++bi) w.assignment[bi] = bi;
            w.value_lhs = gs.element(j).back();
            w.value_rhs = gs.element(i).back();
            return MembershipResult{false, std::move(w)};
        }
    }
    return MembershipResult{true, std::nullopt};
}

FreenessResult is_free_in(const FiniteAlgebra& b, const FiniteAlgebra& a, const Limits& lim) {
    MembershipResult member = variety_membership(b, a, lim);
    if (!member.member) {
        const auto& w = *member.witness;
        throw PreconditionError(
            "not a member of the variety: identity " +
            term_to_string(w.arena, w.lhs, a.signature()) + " = " +
            term_to_string(w.arena, w.rhs, a.signature()) + " fails in the candidate");
    }
    for (int k = 0; k <= b.size(); ++k) {
        FreeAlgebra f = free_algebra(a, k, lim);
        if (f.empty) continue;
        if (f.algebra->size() != b.size()) continue;
        if (auto iso = is_isomorphic(b, *f.algebra, lim))
            return FreenessResult{k, std::move(iso)};
    }
    return FreenessResult{std::nullopt, std::nullopt};
}

SpectrumReport g_spectrum(const FiniteAlgebra& a, int n, const Limits& lim) {
    FreeAlgebra f = free_algebra(a, n, lim);
    if (f.empty) throw ArgumentError("spectrum at rank 0 needs a nullary symbol");
    std::vector<Partition> lattice = all_congruences(*f.algebra, lim);

    SpectrumReport report;
    report.n = n;
    std::vector<std::pair<FiniteAlgebra, int>> types;  // representative, count
    for (const auto& theta : lattice) {
        FiniteAlgebra q = quotient_by(*f.algebra, theta, lim).algebra;
        bool found = false;
        for (auto& [rep, count] : types) {
            if (rep.size() == q.size() && is_isomorphic(q, rep, lim)) {
                ++count;
                found = true;
                break;
            }
        }
        if (!found) types.emplace_back(std::move(q), 1);
    }
    std::stable_sort(types.begin(), types.end(),
                     [](const auto& x, const auto& y) { return x.first.size() < y.first.size(); });
    report.g = static_cast<int>(types.size());
    for (auto& [rep, count] : types) {
        SpectrumType t{rep.renamed("member" + std::to_string(rep.size())), rep.size(), count,
                       std::nullopt, 0};
        t.free_rank = is_free_in(rep, a, lim).rank;
        t.min_generating = min_generating_size(rep, lim);
        report.types.push_back(std::move(t));
    }
    return report;
}

CollapseKernels kernels_of_variable_collapse(const FiniteAlgebra& a, int m, const Limits& lim) {
    if (m < 1) throw ArgumentError("collapse kernels need m >= 1");
    bool pointed = a.signature().has_nullary();
    FreeAlgebra fm = free_algebra(a, m, lim);
    FreeAlgebra target = free_algebra(a, pointed ? 1 : 2, lim);
    if (fm.empty || !target.algebra)
        throw ArgumentError("free algebras of the required ranks are empty");

    const FiniteAlgebra& dom = *fm.algebra;
    const FiniteAlgebra& cod = *target.algebra;

    // images of the m generators under each collapse map
    std::vector<std::vector<Element>> gen_images;
    if (pointed) {
        Element zero = -1;
        for (int op = 0; op < cod.op_count(); ++op)
            if (cod.signature().arity(op) == 0) {
                zero = cod.op(op).table()[0];
                break;
            }
        Element x = target.generators[0];
        std::vector<Element> m1(m, x), m2(m, zero), m3(m, x);
        m1[0] = zero;  // x1 -> 0, rest -> x
        m2[0] = x;     // x1 -> x, rest -> 0
        gen_images = {m1, m2, m3};
    } else {
        Element y = target.generators[0], z = target.generators[1];
        for (int i = 0; i < m; ++i) {
            std::vector<Element> img(m, z);
            img[i] = y;
            gen_images.push_back(std::move(img));
        }
    }

    CollapseKernels result{pointed, m >= 2, dom, cod, {}, {}, false};
    for (const auto& images : gen_images) {
        // evaluate each element's witness term at the substituted generators
        std::vector<Element> map(dom.size());
        for (int e = 0; e < dom.size(); ++e)
            map[e] = eval_term(fm.tables.witnesses(), e, cod, images);
        Homomorphism h = make_checked_homomorphism(dom, cod, std::move(map));
        result.kernels.push_back(h.kernel());
        result.maps.push_back(std::move(h));
    }
    result.pairwise_distinct = true;
    for (std::size_t i = 0; i < result.kernels.size() && result.pairwise_distinct; ++i)
        for (std::size_t j = i + 1; j < result.kernels.size(); ++j)
            if (result.kernels[i] == result.kernels[j]) {
                result.pairwise_distinct = false;
                break;
            }
    return result;
}

FreelyReport verify_lemma_freely(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                 const Limits& lim) {
    if (!a.signature().has_nullary())
        throw PreconditionError("the lemma needs a nullary symbol in the signature");
    MembershipResult member = variety_membership(b, a, lim);
    if (!member.member) throw PreconditionError("b is not in the variety of the generator");

    FreeAlgebra f1 = free_algebra(a, 1, lim);
    FreelyReport report;
    report.f1_simple = is_simple(*f1.algebra);
    if (!report.f1_simple) throw PreconditionError("F_V(1) is not simple");

    Element zero = -1;
    for (int op = 0; op < b.op_count(); ++op)
        if (b.signature().arity(op) == 0) {
            zero = b.op(op).table()[0];
            break;
        }
    report.pass = true;
    ProductContext ctx = ProductContext::power_of(b, 1);
    for (Element e = 0; e < b.size(); ++e) {
        if (e == zero) continue;
        GeneratedSet sub = generate(ctx, {{e}}, lim);
        FiniteAlgebra sg = materialize_subproduct(ctx, sub.elements(),
                                                  "Sg{" + std::to_string(e) + "}", lim);
        bool iso = is_isomorphic(sg, *f1.algebra, lim).has_value();
        report.per_element.emplace_back(e, iso);
        ++report.checked;
        if (!iso) report.pass = false;
    }
    return report;
}

}  // namespace finalg
