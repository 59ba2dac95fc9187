#pragma once

/// Named verification suites over the whole library.
///
/// Each suite returns a flat list of (label, passed) pairs; labels are
/// stable identifiers such as "E:h_h[m=4]" and are safe to parse or diff
/// across runs. Suites never throw on a failed identity, only on misuse
/// (unknown suite name, invalid level r).

#include <string>
#include <utility>
#include <vector>

namespace smalltl {

using CheckList = std::vector<std::pair<std::string, bool>>;

/// Quantum integer, brace and factorial identities in both rings, plus
/// specialization and pole behaviour of the evaluation map.
CheckList scalar_checks(int r);

/// Diagram-level checks: Catalan dimensions, parse round trips, snake
/// identities, loop evaluation, Temperley-Lieb relations, rotation and
/// partial-trace bookkeeping.
CheckList tangle_checks(int r);

/// Generic-ring idempotent suite: idempotence, annihilation, absorption
/// and the four partial-trace formulas for f_m, g_m and h_m.
CheckList jw_generic_checks(int r);

/// Root-ring suite: pole boundary of f_m, termwise specialization, the
/// closed recursions for g_r..g_{2r-2} and f_{2r-1}, ambidexterity of
/// f_{r-1}, and the projection/injection pair p_m, i_m.
CheckList jw_root_checks(int r);

/// Registry of suite names accepted by run_suite, in execution order of
/// "all": scalars, tangles, jw-generic, jw-root, uq, appendix, functor,
/// extended.
const std::vector<std::string>& verify_suite_names();

/// Runs one named suite ("all" concatenates every registered suite).
/// The seed feeds the randomized functoriality samples of the functor
/// suite; every other suite is deterministic. Throws IndexOutOfRange on
/// an unknown suite name or an invalid level.
CheckList run_suite(const std::string& name, int r, unsigned seed = 20240229);

}  // namespace smalltl
