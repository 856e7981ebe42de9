#include "finalg/report.hpp"

#include <chrono>

#include "finalg/textio.hpp"

namespace finalg::report {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json signature_json(const Signature& sig) {
    json out = json::array();
    for (const auto& s : sig.symbols()) out.push_back({{"name", s.name}, {"arity", s.arity}});
    return out;
}

json term_condition_witness_json(const TermConditionWitness& w, const Signature& sig,
                                 const std::string& role) {
    return json{{"kind", "term_condition_failure"},
                {"algebra", role},
                {"term", term_to_string(w.arena, w.root, sig)},
                {"assignments",
                 {{"au", w.assign_au}, {"av", w.assign_av}, {"bu", w.assign_bu}, {"bv", w.assign_bv}}},
                {"values",
                 {{"au", w.value_au}, {"av", w.value_av}, {"bu", w.value_bu}, {"bv", w.value_bv}}}};
}

json strong_witness_json(const StrongTermConditionWitness& w, const Signature& sig,
                         const std::string& role) {
    return json{{"kind", "strong_term_condition_failure"},
                {"algebra", role},
                {"term", term_to_string(w.arena, w.root, sig)},
                {"assignments",
                 {{"au", w.assign_au},
                  {"bu", w.assign_bu},
                  {"cu", w.assign_cu},
                  {"av", w.assign_av},
                  {"bv", w.assign_bv},
                  {"cv", w.assign_cv}}},
                {"values",
                 {{"au", w.value_au},
                  {"bu", w.value_bu},
                  {"cu", w.value_cu},
                  {"av", w.value_av},
                  {"bv", w.value_bv},
                  {"cv", w.value_cv}}}};
}

json property_p_witness_json(const PropertyPWitness& w, const Signature& sig,
                             const std::string& role, Element zero) {
    return json{{"kind", "property_p_failure"},
                {"algebra", role},
                {"zero", zero},
                {"term", term_to_string(w.arena, w.root, sig)},
                {"assignment_zero", w.assign_zero},
                {"assignment_s", w.assign_s},
                {"value_zero", w.value_zero},
                {"value_s", w.value_s}};
}

json independence_witness_json(const IndependenceWitness& w, const Signature& sig,
                               const std::string& s_role, const std::string& f2_role,
                               const std::vector<int>& f2_generators) {
    return json{{"kind", "independence_failure"},
                {"s", s_role},
                {"f2", f2_role},
                {"f2_generators", f2_generators},
                {"term", term_to_string(w.arena, w.root, sig)},
                {"arity", w.arity},
                {"position", w.position},
                {"pattern_w", w.pattern_w},
                {"pattern_z", w.pattern_z},
                {"f2_value_w", w.f2_value_w},
                {"f2_value_z", w.f2_value_z},
                {"s_args_a", w.s_args_a},
                {"s_args_b", w.s_args_b},
                {"s_value_a", w.s_value_a},
                {"s_value_b", w.s_value_b}};
}

json hom_witness_json(const Homomorphism& h, const std::string& source_role,
                      const std::string& target_role, std::vector<std::string> properties) {
    return json{{"kind", "homomorphism"},
                {"source", source_role},
                {"target", target_role},
                {"map", h.map},
                {"properties", properties}};
}

json identity_witness_json(const IdentityWitness& w, const Signature& sig,
                           const std::string& generator_role, const std::string& member_role) {
    return json{{"kind", "identity_failure"},
                {"generator", generator_role},
                {"member", member_role},
                {"lhs", term_to_string(w.arena, w.lhs, sig)},
                {"rhs", term_to_string(w.arena, w.rhs, sig)},
                {"variable_count", w.variable_count},
                {"assignment", w.assignment},
                {"value_lhs", w.value_lhs},
                {"value_rhs", w.value_rhs}};
}

json unary_witness_json(const UnaryPolyWitness& w, const FiniteAlgebra& a,
                        const std::string& role) {
    json generators = json::array();
    generators.push_back("x");
    for (Element c = 0; c < a.size(); ++c) generators.push_back(c);
    return json{{"kind", "unary_noninjective"},
                {"algebra", role},
                {"term", term_to_string(w.arena, w.root, a.signature())},
                {"generators", generators},
                {"table", w.table},
                {"equal", {w.equal_a, w.equal_b}},
                {"differ", {w.differ_c, w.differ_d}}};
}

json order_pairs_json(const BinaryRelation& r) {
    json out = json::array();
    for (auto [i, j] : r.pairs()) out.push_back({i, j});
    return out;
}

struct Builder {
    json doc;
    Clock::time_point start = Clock::now();

    explicit Builder(const std::string& command) {
        doc["command"] = command;
        doc["inputs"] = json::object();
        doc["algebras"] = json::object();
        doc["verdicts"] = json::object();
        doc["witnesses"] = json::array();
    }

    void algebra(const std::string& role, const FiniteAlgebra& a) {
        doc["algebras"][role] = print_algebra(a);
    }

    json finish() {
        doc["timings"] = {{"total_ms", ms_since(start)}};
        return std::move(doc);
    }
};

}  // namespace

json info(const FiniteAlgebra& a, const Limits& lim) {
    Builder b("info");
    b.algebra("A", a);
    b.doc["verdicts"] = {{"name", a.name()},
                         {"size", a.size()},
                         {"signature", signature_json(a.signature())},
                         {"idempotent", a.is_idempotent()},
                         {"simple", is_simple(a)}};
    (void)lim;
    return b.finish();
}

json con(const FiniteAlgebra& a, const std::string& mode, const Limits& lim) {
    Builder b("con");
    b.algebra("A", a);
    b.doc["inputs"]["mode"] = mode;
    auto lattice = all_congruences(a, lim);
    json list = json::array();
    for (const auto& p : lattice) list.push_back(p.to_block_string());
    b.doc["verdicts"]["count"] = lattice.size();
    b.doc["verdicts"]["congruences"] = list;
    if (mode == "coatoms" || mode == "atoms") {
        json extreme = json::array();
        for (const auto& p : (mode == "coatoms" ? coatoms(lattice) : atoms(lattice)))
            extreme.push_back(p.to_block_string());
        b.doc["verdicts"][mode] = extreme;
    } else if (mode == "sdmeet") {
        auto failure = sd_meet_failure(lattice);
        b.doc["verdicts"]["sd_meet_failure_found"] = failure.has_value();
        if (failure)
            b.doc["verdicts"]["sd_meet_failure"] = {{"alpha", failure->alpha.to_block_string()},
                                                    {"beta", failure->beta.to_block_string()},
                                                    {"gamma", failure->gamma.to_block_string()}};
    }
    return b.finish();
}

json abelian(const FiniteAlgebra& a, const Limits& lim) {
    Builder b("abelian");
    b.algebra("A", a);
    AbelianResult r = is_abelian(a, lim);
    b.doc["verdicts"]["abelian"] = r.abelian;
    if (r.witness)
        b.doc["witnesses"].push_back(term_condition_witness_json(*r.witness, a.signature(), "A"));
    return b.finish();
}

json strongly_abelian(const FiniteAlgebra& a, const Partition& theta, const Limits& lim) {
    Builder b("strongly-abelian");
    b.algebra("A", a);
    b.doc["inputs"]["theta"] = theta.to_block_string();
    StrongAbelianResult r = is_strongly_abelian_congruence(a, theta, lim);
    b.doc["verdicts"]["strongly_abelian"] = r.holds;
    if (r.witness)
        b.doc["witnesses"].push_back(strong_witness_json(*r.witness, a.signature(), "A"));
    return b.finish();
}

namespace {

json obstruction_impl(const char* command, const FiniteAlgebra& a, const Partition& theta,
                      int arity_bound, const Limits& lim) {
    Builder b(command);
    b.algebra("A", a);
    b.doc["inputs"]["theta"] = theta.to_block_string();
    b.doc["inputs"]["arity_bound"] = arity_bound;

    ObstructionReport r = verify_affine_obstruction(a, a, theta, arity_bound, lim);
    b.algebra("S", r.construction.s);

    b.doc["verdicts"]["hypotheses"] = {{"theta_nontrivial", r.theta_nontrivial},
                                       {"theta_strongly_abelian", r.theta_strongly_abelian},
                                       {"a_abelian", r.a_abelian},
                                       {"all_hold", r.hypotheses_hold}};
    b.doc["verdicts"]["construction"] = {{"graph_size", r.construction.graph.algebra.size()},
                                         {"s_size", r.construction.s.size()},
                                         {"zero", r.construction.zero},
                                         {"d_is_delta_class", r.construction.d_is_delta_class},
                                         {"delta", r.construction.delta.to_block_string()}};
    b.doc["verdicts"]["items"] = {{"item1_nontrivial", r.item1},
                                  {"item2_zero_subuniverse", r.item2},
                                  {"item3_property_p", r.item3.holds},
                                  {"item4_independence", r.item4.holds},
                                  {"item4_arity_bound", r.item4.arity_bound}};
    if (r.item5) {
        const OrderQuotient& o = *r.item5;
        b.algebra("S_mod_sigma", o.s_mod_sigma);
        b.doc["verdicts"]["item5"] = {{"sigma", o.sigma.to_block_string()},
                                      {"sigma_is_congruence", o.sigma_is_congruence},
                                      {"order_reflexive", o.order_reflexive},
                                      {"order_transitive", o.order_transitive},
                                      {"order_antisymmetric", o.order_antisymmetric},
                                      {"order_compatible", o.order_compatible},
                                      {"zero_least", o.zero_least},
                                      {"zero_class", o.zero_class},
                                      {"order_pairs", order_pairs_json(o.order)},
                                      {"requotient_item1", o.q_item1},
                                      {"requotient_item2", o.q_item2},
                                      {"requotient_item3_property_p", o.q_item3.holds}};
    }
    b.doc["verdicts"]["affine_obstruction_verified"] = r.hypotheses_hold && r.all_items_pass;
    b.doc["verdicts"]["all_items_pass"] = r.all_items_pass;

    if (r.strong_witness)
        b.doc["witnesses"].push_back(strong_witness_json(*r.strong_witness, a.signature(), "A"));
    if (r.abelian_witness)
        b.doc["witnesses"].push_back(
            term_condition_witness_json(*r.abelian_witness, a.signature(), "A"));
    if (r.item3.witness)
        b.doc["witnesses"].push_back(property_p_witness_json(
            *r.item3.witness, r.construction.s.signature(), "S", r.construction.zero));
    if (r.item4.witness) {
        FreeAlgebra f2 = free_algebra(a, 2, lim);
        b.algebra("F2", *f2.algebra);
        b.doc["witnesses"].push_back(independence_witness_json(
            *r.item4.witness, a.signature(), "S", "F2", f2.generators));
    }
    return b.finish();
}

}  // namespace

json obstruction(const FiniteAlgebra& a, const Partition& theta, int arity_bound,
                 const Limits& lim) {
    return obstruction_impl("obstruction", a, theta, arity_bound, lim);
}

json free_report(const FiniteAlgebra& generator, int n, const Limits& lim) {
    Builder b("free");
    b.algebra("generator", generator);
    b.doc["inputs"]["n"] = n;
    FreeAlgebra f = free_algebra(generator, n, lim);
    b.doc["verdicts"]["empty"] = f.empty;
    if (f.empty) {
        b.doc["verdicts"]["size"] = 0;
        return b.finish();
    }
    b.algebra("F", *f.algebra);
    b.doc["verdicts"]["size"] = f.algebra->size();
    json elements = json::array();
    for (int i = 0; i < f.tables.size(); ++i)
        elements.push_back(term_to_string(f.tables.witnesses(), i, generator.signature()));
    b.doc["verdicts"]["elements"] = elements;
    b.doc["verdicts"]["generators"] = f.generators;
    return b.finish();
}

json member(const FiniteAlgebra& candidate, const FiniteAlgebra& generator, const Limits& lim) {
    Builder b("member");
    b.algebra("member", candidate);
    b.algebra("generator", generator);
    MembershipResult r = variety_membership(candidate, generator, lim);
    b.doc["verdicts"]["member"] = r.member;
    if (r.witness)
        b.doc["witnesses"].push_back(
            identity_witness_json(*r.witness, generator.signature(), "generator", "member"));
    return b.finish();
}

json is_free(const FiniteAlgebra& candidate, const FiniteAlgebra& generator, const Limits& lim) {
    Builder b("is-free");
    b.algebra("member", candidate);
    b.algebra("generator", generator);
    FreenessResult r = is_free_in(candidate, generator, lim);
    b.doc["verdicts"]["free"] = r.rank.has_value();
    if (r.rank) {
        b.doc["verdicts"]["rank"] = *r.rank;
        FreeAlgebra f = free_algebra(generator, *r.rank, lim);
        b.algebra("F", *f.algebra);
        b.doc["witnesses"].push_back(
            hom_witness_json(*r.iso, "member", "F", {"homomorphism", "bijective"}));
    }
    return b.finish();
}

json spectrum(const FiniteAlgebra& generator, int n, const Limits& lim) {
    Builder b("spectrum");
    b.algebra("generator", generator);
    b.doc["inputs"]["n"] = n;
    SpectrumReport r = g_spectrum(generator, n, lim);
    b.doc["verdicts"]["g"] = r.g;
    json types = json::array();
    for (const auto& t : r.types) {
        json entry = {{"size", t.size},
                      {"congruence_count", t.congruence_count},
                      {"min_generating", t.min_generating}};
        entry["free_rank"] = t.free_rank ? json(*t.free_rank) : json(nullptr);
        entry["algebra"] = print_algebra(t.algebra);
        types.push_back(std::move(entry));
    }
    b.doc["verdicts"]["types"] = types;
    return b.finish();
}

json clone(const FiniteAlgebra& generator, int n, bool count_only, const Limits& lim) {
    Builder b("clone");
    b.algebra("generator", generator);
    b.doc["inputs"]["n"] = n;
    b.doc["inputs"]["count_only"] = count_only;
    CloneTables clo = clone_table(generator, n, lim);
    b.doc["verdicts"]["count"] = clo.set.size();
    if (!count_only) {
        json elements = json::array();
        for (int i = 0; i < clo.set.size(); ++i) {
            elements.push_back(
                {{"term", term_to_string(clo.set.witnesses(), i, generator.signature())},
                 {"table", clo.set.element(i)}});
        }
        b.doc["verdicts"]["elements"] = elements;
    }
    return b.finish();
}

json classify_report(const FiniteAlgebra& a, int arity_bound, const Limits& lim) {
    Builder b("classify");
    b.algebra("A", a);
    b.doc["inputs"]["arity_bound"] = arity_bound;
    ClassifyResult r = classify(a, arity_bound, lim);
    b.doc["verdicts"]["verdict"] = to_string(r.verdict);
    b.doc["verdicts"]["verified_to_arity"] = r.verified_to_arity;
    if (r.field_size > 0) b.doc["verdicts"]["field_size"] = r.field_size;
    if (!r.constant_realization.empty())
        b.doc["verdicts"]["constant_realization"] = r.constant_realization;
    if (r.scalars) {
        b.doc["verdicts"]["module"] = {{"zero", r.scalars->zero},
                                       {"add_table", r.scalars->add_table},
                                       {"scalar_maps", r.scalars->scalar_maps}};
    }
    return b.finish();
}

json verify_3coatoms(const FiniteAlgebra& generator, int m, const Limits& lim) {
    Builder b("verify-3coatoms");
    b.algebra("generator", generator);
    b.doc["inputs"]["m"] = m;
    if (!generator.signature().has_nullary())
        throw PreconditionError("the lemma needs a nullary symbol in the signature");
    if (m < 2) throw ArgumentError("the coatom claim concerns m > 1");
    FreeAlgebra f0 = free_algebra(generator, 0, lim);
    FreeAlgebra f1 = free_algebra(generator, 1, lim);
    FreeAlgebra fm = free_algebra(generator, m, lim);
    bool f0_singleton = !f0.empty && f0.algebra->size() == 1;
    bool f1_simple = is_simple(*f1.algebra);
    auto lattice = all_congruences(*fm.algebra, lim);
    int n_coatoms = static_cast<int>(coatoms(lattice).size());
    b.algebra("F_m", *fm.algebra);
    b.doc["verdicts"] = {{"f0_size", f0.empty ? 0 : f0.algebra->size()},
                         {"item1_f0_singleton", f0_singleton},
                         {"item2_f1_simple", f1_simple},
                         {"fm_size", fm.algebra->size()},
                         {"coatom_count", n_coatoms},
                         {"item3_three_coatoms", n_coatoms >= 3},
                         {"pass", f0_singleton && f1_simple && n_coatoms >= 3}};
    return b.finish();
}

json verify_freely(const FiniteAlgebra& generator, const FiniteAlgebra& member_algebra,
                   const Limits& lim) {
    Builder b("verify-freely");
    b.algebra("generator", generator);
    b.algebra("member", member_algebra);
    FreelyReport r = verify_lemma_freely(generator, member_algebra, lim);
    json per_element = json::array();
    for (auto [e, ok] : r.per_element) per_element.push_back({{"element", e}, {"iso_f1", ok}});
    b.doc["verdicts"] = {{"f1_simple", r.f1_simple},
                         {"nonzero_checked", r.checked},
                         {"per_element", per_element},
                         {"pass", r.pass}};
    return b.finish();
}

json verify_abelian_scaffold(const FiniteAlgebra& generator, const Limits& lim) {
    Builder b("verify-abelian-scaffold");
    b.algebra("generator", generator);
    ScaffoldReport r = verify_lemma_abelian_scaffold(generator, lim);
    b.doc["verdicts"]["degenerate_trivial_f"] = r.degenerate_trivial_f;
    b.doc["verdicts"]["f_size"] = r.f_size;
    if (!r.degenerate_trivial_f) {
        b.doc["verdicts"]["a_prime_size"] = r.a_prime_size;
        b.doc["verdicts"]["eta1"] = r.eta1.to_block_string();
        b.doc["verdicts"]["eta1_is_principal"] = r.eta1_is_principal;
        b.doc["verdicts"]["mu"] = r.mu.to_block_string();
        b.doc["verdicts"]["coatom_count"] = r.coatom_count;
        b.doc["verdicts"]["has_3_coatoms"] = r.has_3_coatoms;
        b.doc["verdicts"]["sd_failure_at_eta1_over_mu"] = r.sd_failure_at_eta1_over_mu;
        if (r.sd_failure)
            b.doc["verdicts"]["sd_failure"] = {{"alpha", r.sd_failure->alpha.to_block_string()},
                                               {"beta", r.sd_failure->beta.to_block_string()},
                                               {"gamma", r.sd_failure->gamma.to_block_string()}};
        b.doc["verdicts"]["f_abelian"] = r.f_abelian;
    }
    b.doc["verdicts"]["pass"] = r.pass;
    return b.finish();
}

json verify_injective(const FiniteAlgebra& a, const Limits& lim) {
    Builder b("verify-injective");
    b.algebra("A", a);
    InjectiveResult r = nonconstant_unaries_injective(a, lim);
    b.doc["verdicts"]["nonconstant_unaries_injective"] = r.holds;
    if (r.witness) b.doc["witnesses"].push_back(unary_witness_json(*r.witness, a, "A"));
    return b.finish();
}

json verify_smallfree_report(int n, const Limits& lim) {
    Builder b("verify-smallfree");
    b.doc["inputs"]["n"] = n;
    SmallfreeReport r = verify_smallfree(n, lim);

    CatalogSpec base;
    base.kind = CatalogSpec::Kind::set;
    base.param = n + 1;
    FiniteAlgebra balg = build_semiprojection_expansion(build(base, lim), n, "projection", lim);
    FiniteAlgebra aalg = build_semiprojection_expansion(build(base, lim), n, "shifted", lim);
    b.algebra("B", balg);
    b.algebra("A", aalg);

    json forced = json::array();
    for (auto [k, checked] : r.forced_counts)
        forced.push_back({{"size", k}, {"candidates_checked", checked}});
    b.doc["verdicts"] = {{"forced_projection", r.forced_projection},
                         {"forced_counts", forced},
                         {"no_surjection", r.no_surjection},
                         {"maps_searched", r.maps_searched},
                         {"b_min_generating", r.b_min_generating},
                         {"pass", r.pass}};
    if (r.no_surjection)
        b.doc["witnesses"].push_back(
            json{{"kind", "exhaustive_no_surjection"}, {"source", "B"}, {"target", "A"}});
    return b.finish();
}

}  // namespace finalg::report
