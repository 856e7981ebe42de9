#include "finalg/termcond.hpp"

namespace finalg {

namespace {

// Slot meanings for the A^4 matrix closure.
struct MatrixSlots {
    std::vector<std::pair<Element, Element>> row_slots;  // (a, b) per x-generator
    std::vector<std::pair<Element, Element>> col_slots;  // (u, v) per y-generator
    int row_count() const { return static_cast<int>(row_slots.size()); }
};

TermConditionWitness matrix_witness(const GeneratedSet& gs, int element,
                                    const std::vector<std::pair<Element, Element>>& slot_ab,
                                    const std::vector<bool>& slot_is_row) {
    TermConditionWitness w;
    w.arena = gs.witnesses();
    w.root = element;
    int slots = static_cast<int>(slot_ab.size());
    w.assign_au.resize(slots);
    w.assign_av.resize(slots);
    w.assign_bu.resize(slots);
    w.assign_bv.resize(slots);
    for (int s = 0; s < slots; ++s) {
        auto [first, second] = slot_ab[s];
        if (slot_is_row[s]) {
            // row slot carries (a, b): a on the a-rows, b on the b-rows
            w.assign_au[s] = first;
            w.assign_av[s] = first;
            w.assign_bu[s] = second;
            w.assign_bv[s] = second;
        } else {
            // column slot carries (u, v)
            w.assign_au[s] = first;
            w.assign_av[s] = second;
            w.assign_bu[s] = first;
            w.assign_bv[s] = second;
        }
    }
    const auto& e = gs.element(element);
    w.value_au = e[0];
    w.value_av = e[1];
    w.value_bu = e[2];
    w.value_bv = e[3];
    return w;
}

}  // namespace

AbelianResult is_abelian_matrix_method(const FiniteAlgebra& a, const Limits& lim) {
    long long full = static_cast<long long>(a.size()) * a.size() * a.size() * a.size();
    if (full > lim.max_generated) throw_guard("max_generated", full, lim.max_generated);

    ProductContext ctx = ProductContext::power_of(a, 4);
    std::vector<std::vector<Element>> gens;
    std::vector<std::pair<Element, Element>> slot_ab;
    std::vector<bool> slot_is_row;
    for (Element x = 0; x < a.size(); ++x)
        for (Element y = 0; y < a.size(); ++y) {
            gens.push_back({x, x, y, y});
            slot_ab.emplace_back(x, y);
            slot_is_row.push_back(true);
        }
    for (Element u = 0; u < a.size(); ++u)
        for (Element v = 0; v < a.size(); ++v) {
            gens.push_back({u, v, u, v});
            slot_ab.emplace_back(u, v);
            slot_is_row.push_back(false);
        }
    GeneratedSet gs = generate(ctx, gens, lim);
    for (int i = 0; i < gs.size(); ++i) {
        const auto& e = gs.element(i);
        if (e[0] == e[1] && e[2] != e[3]) {
            AbelianResult r;
            r.abelian = false;
            r.witness = matrix_witness(gs, i, slot_ab, slot_is_row);
            return r;
        }
    }
    return AbelianResult{true, std::nullopt};
}

AbelianResult is_abelian(const FiniteAlgebra& a, const Limits& lim) {
    if (a.size() > lim.max_abelian_universe)
        throw_guard("max_abelian_universe", a.size(), lim.max_abelian_universe);

    FiniteAlgebra square = product(a, a, lim);
    std::vector<std::pair<Element, Element>> diag_pairs;
    Element first_diag = 0;  // (0,0)
    for (Element x = 1; x < a.size(); ++x)
        diag_pairs.emplace_back(first_diag, x * a.size() + x);
    Partition delta = diag_pairs.empty() ? Partition::identity(1) : cg_pairs(square, diag_pairs);

    bool abelian = true;
    if (a.size() > 1) {
        int diag_label = delta.label_of(first_diag);
        for (Element p = 0; p < square.size() && abelian; ++p) {
            bool is_diag = (p / a.size()) == (p % a.size());
            if (!is_diag && delta.label_of(p) == diag_label) abelian = false;
        }
    }
    AbelianResult r;
    r.abelian = abelian;
    if (!abelian) {
        long long fourth = static_cast<long long>(a.size()) * a.size() * a.size() * a.size();
        if (fourth <= lim.max_generated) r.witness = is_abelian_matrix_method(a, lim).witness;
    }
    return r;
}

StrongAbelianResult is_strongly_abelian_congruence(const FiniteAlgebra& a, const Partition& theta,
                                                   const Limits& lim) {
    if (theta.size() != a.size()) throw ArgumentError("partition size mismatch");
    if (auto v = find_congruence_violation(a, theta))
        throw ArgumentError("theta is not a congruence (operation " +
                            a.signature().name(v->op) + " violates compatibility)");

    ProductContext ctx = ProductContext::power_of(a, 6);
    std::vector<std::vector<Element>> gens;
    struct SlotMeaning {
        bool is_row;          // (a,b,c) triple vs (u,v) pair
        Element a, b, c;      // row values
        Element u, v;         // column values
    };
    std::vector<SlotMeaning> slots;
    auto block_list = theta.blocks();
    for (const auto& block : block_list) {
        for (Element x : block)
            for (Element y : block)
                for (Element z : block) {
                    gens.push_back({x, y, z, x, y, z});
                    slots.push_back({true, x, y, z, 0, 0});
                }
        for (Element u : block)
            for (Element v : block) {
                gens.push_back({u, u, u, v, v, v});
                slots.push_back({false, 0, 0, 0, u, v});
            }
    }
    GeneratedSet gs = generate(ctx, gens, lim);
    for (int i = 0; i < gs.size(); ++i) {
        const auto& e = gs.element(i);
        if (e[0] == e[4] && e[2] != e[5]) {
            StrongTermConditionWitness w;
            w.arena = gs.witnesses();
            w.root = i;
            int n = static_cast<int>(slots.size());
            w.assign_au.resize(n);
            w.assign_bu.resize(n);
            w.assign_cu.resize(n);
            w.assign_av.resize(n);
            w.assign_bv.resize(n);
            w.assign_cv.resize(n);
            for (int s = 0; s < n; ++s) {
                const auto& m = slots[s];
                if (m.is_row) {
                    w.assign_au[s] = m.a;
                    w.assign_bu[s] = m.b;
                    w.assign_cu[s] = m.c;
                    w.assign_av[s] = m.a;
                    w.assign_bv[s] = m.b;
                    w.assign_cv[s] = m.c;
                } else {
                    w.assign_au[s] = m.u;
                    w.assign_bu[s] = m.u;
                    w.assign_cu[s] = m.u;
                    w.assign_av[s] = m.v;
                    w.assign_bv[s] = m.v;
                    w.assign_cv[s] = m.v;
                }
            }
            w.value_au = e[0];
            w.value_bu = e[1];
            w.value_cu = e[2];
            w.value_av = e[3];
            w.value_bv = e[4];
            w.value_cv = e[5];
            return StrongAbelianResult{false, std::move(w)};
        }
    }
    return StrongAbelianResult{true, std::nullopt};
}

bool is_strongly_abelian_algebra(const FiniteAlgebra& a, const Limits& lim) {
    for (const auto& theta : all_congruences(a, lim))
        if (!is_strongly_abelian_congruence(a, theta, lim).holds) return false;
    return true;
}

InjectiveResult nonconstant_unaries_injective(const FiniteAlgebra& a, const Limits& lim) {
    GeneratedSet pol1 = unary_polynomials(a, lim);
    for (int i = 0; i < pol1.size(); ++i) {
        const auto& table = pol1.element(i);
        bool constant = true;
        for (Element x = 1; x < a.size(); ++x)
            if (table[x] != table[0]) {
                constant = false;
                break;
            }
        if (constant) continue;
        // noninjective?
        for (Element x = 0; x < a.size(); ++x)
            for (Element y = x + 1; y < a.size(); ++y)
                if (table[x] == table[y]) {
                    UnaryPolyWitness w;
                    w.arena = pol1.witnesses();
                    w.root = i;
                    w.table = table;
                    w.equal_a = x;
                    w.equal_b = y;
                    for (Element c = 0; c < a.size(); ++c)
                        for (Element d = c + 1; d < a.size(); ++d)
                            if (table[c] != table[d]) {
                                w.differ_c = c;
                                w.differ_d = d;
                                goto found;
                            }
                found:
                    return InjectiveResult{false, std::move(w)};
                }
    }
    return InjectiveResult{true, std::nullopt};
}

}  // namespace finalg
