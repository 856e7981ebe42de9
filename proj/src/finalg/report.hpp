#pragma once

#include <string>

#include "json.hpp"

#include "finalg/catalog.hpp"
#include "finalg/freevar.hpp"
#include "finalg/obstruction.hpp"
#include "finalg/termcond.hpp"

// Structured command reports. Every report carries the participating algebras
// as file-format text under "algebras" (keyed by role), so emitted witnesses
// can be replayed from the report alone. Key order is insertion order and
// fixed per command.
namespace finalg::report {

using json = nlohmann::ordered_json;

json info(const FiniteAlgebra& a, const Limits& lim = Limits::defaults());
json con(const FiniteAlgebra& a, const std::string& mode, const Limits& lim = Limits::defaults());
json abelian(const FiniteAlgebra& a, const Limits& lim = Limits::defaults());
json strongly_abelian(const FiniteAlgebra& a, const Partition& theta,
                      const Limits& lim = Limits::defaults());
json obstruction(const FiniteAlgebra& a, const Partition& theta, int arity_bound,
                 const Limits& lim = Limits::defaults());
json free_report(const FiniteAlgebra& generator, int n, const Limits& lim = Limits::defaults());
json member(const FiniteAlgebra& candidate, const FiniteAlgebra& generator,
            const Limits& lim = Limits::defaults());
json is_free(const FiniteAlgebra& candidate, const FiniteAlgebra& generator,
             const Limits& lim = Limits::defaults());
json spectrum(const FiniteAlgebra& generator, int n, const Limits& lim = Limits::defaults());
json clone(const FiniteAlgebra& generator, int n, bool count_only,
           const Limits& lim = Limits::defaults());
json classify_report(const FiniteAlgebra& a, int arity_bound,
                     const Limits& lim = Limits::defaults());
json verify_3coatoms(const FiniteAlgebra& generator, int m,
                     const Limits& lim = Limits::defaults());
json verify_freely(const FiniteAlgebra& generator, const FiniteAlgebra& member_algebra,
                   const Limits& lim = Limits::defaults());
json verify_abelian_scaffold(const FiniteAlgebra& generator,
                             const Limits& lim = Limits::defaults());
json verify_injective(const FiniteAlgebra& a, const Limits& lim = Limits::defaults());
json verify_smallfree_report(int n, const Limits& lim = Limits::defaults());

}  // namespace finalg::report
