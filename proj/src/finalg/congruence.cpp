#include "finalg/congruence.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace finalg {

Partition cg_pairs(const FiniteAlgebra& a,
                   const std::vector<std::pair<Element, Element>>& pairs) {
    const int n = a.size();
    DisjointSet ds(n);
    std::deque<std::pair<Element, Element>> queue;
    for (auto [x, y] : pairs) {
        if (x < 0 || x >= n || y < 0 || y >= n)
            throw ArgumentError("congruence generator pair out of range");
        queue.emplace_back(x, y);
    }

    while (!queue.empty()) {
        auto [x, y] = queue.front();
        queue.pop_front();
        if (!ds.unite(x, y)) continue;
        // Push the pair through every translation f(c_1,..,x,..,c_r).
        for (int op = 0; op < a.op_count(); ++op) {
            int r = a.signature().arity(op);
            if (r == 0) continue;
            std::vector<Element> args(r, 0);
            for (int slot = 0; slot < r; ++slot) {
                std::fill(args.begin(), args.end(), 0);
                // iterate constants over the remaining r-1 positions
                while (true) {
                    args[slot] = x;
                    Element tx = a.op(op).apply_unchecked(args);
                    args[slot] = y;
                    Element ty = a.op(op).apply_unchecked(args);
                    if (ds.find(tx) != ds.find(ty)) queue.emplace_back(tx, ty);
                    int i = r - 1;
                    for (; i >= 0; --i) {
                        if (i == slot) continue;
                        if (++args[i] < n) break;
                        args[i] = 0;
                    }
                    if (i < 0) break;
                }
            }
        }
    }
    Partition result = Partition::from_disjoint_set(ds);
    if (!is_congruence(a, result))
        throw std::logic_error("cg_pairs produced an incompatible partition");
    return result;
}

std::vector<Partition> all_congruences(const FiniteAlgebra& a, const Limits& lim) {
    if (a.size() > lim.max_con_universe)
        throw_guard("max_con_universe", a.size(), lim.max_con_universe);

    std::set<std::vector<int>> seen;
    std::vector<Partition> found;
    auto add = [&](Partition p) {
        if (seen.insert(p.labels()).second) found.push_back(std::move(p));
    };

    add(Partition::identity(a.size()));
    for (Element x = 0; x < a.size(); ++x)
        for (Element y = x + 1; y < a.size(); ++y) add(cg_pairs(a, {{x, y}}));

    // close under pairwise join (joins of congruences are congruences)
    for (std::size_t i = 0; i < found.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) add(found[i].join(found[j]));

    std::sort(found.begin(), found.end(), Partition::sort_less);
    return found;
}

namespace {

std::vector<Partition> covers_of_extreme(const std::vector<Partition>& lattice, bool top) {
    std::vector<Partition> out;
    for (const auto& p : lattice) {
        if (top ? p.is_full() : p.is_identity()) continue;
        bool extreme_neighbor = true;
        for (const auto& q : lattice) {
            if (q == p || (top ? q.is_full() : q.is_identity())) continue;
            bool strictly_between = top ? (p.refines(q) && !q.refines(p))
                                        : (q.refines(p) && !p.refines(q));
            if (strictly_between) {
                extreme_neighbor = false;
                break;
            }
        }
        if (extreme_neighbor) out.push_back(p);
    }
    return out;
}

}  // namespace

std::vector<Partition> coatoms(const std::vector<Partition>& lattice) {
    return covers_of_extreme(lattice, true);
}

std::vector<Partition> atoms(const std::vector<Partition>& lattice) {
    return covers_of_extreme(lattice, false);
}

bool is_simple(const FiniteAlgebra& a) {
    if (a.size() < 2) return false;
    for (Element x = 0; x < a.size(); ++x)
        for (Element y = x + 1; y < a.size(); ++y)
            if (!cg_pairs(a, {{x, y}}).is_full()) return false;
    return true;
}

std::optional<SdMeetFailure> sd_meet_failure(const std::vector<Partition>& lattice) {
    for (const auto& gamma : lattice) {
        if (gamma.is_identity()) continue;
        for (const auto& alpha : lattice) {
            if (!alpha.meet(gamma).is_identity()) continue;
            for (const auto& beta : lattice) {
                if (!beta.meet(gamma).is_identity()) continue;
                if (alpha.join(beta).meet(gamma) == gamma)
                    return SdMeetFailure{alpha, beta, gamma};
            }
        }
    }
    return std::nullopt;
}

Partition maximal_below(const std::vector<Partition>& lattice, const Partition& theta) {
    if (theta.is_identity())
        throw ArgumentError("maximal_below requires theta strictly above the identity");
    std::vector<Partition> below;
    for (const auto& p : lattice)
        if (p.refines(theta) && p != theta) below.push_back(p);
    if (below.empty())
        throw ArgumentError("maximal_below: theta has no congruence strictly below it");
    std::vector<Partition> maximal;
    for (const auto& mu : below) {
        bool covered = false;
        for (const auto& nu : below)
            if (mu.refines(nu) && mu != nu) {
                covered = true;
                break;
            }
        if (!covered) maximal.push_back(mu);
    }
    std::sort(maximal.begin(), maximal.end(), Partition::sort_less);
    return maximal.front();
}

}  // namespace finalg
