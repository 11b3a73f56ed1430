#ifndef WTURAN_ORACLE_HPP
#define WTURAN_ORACLE_HPP

#include <cstdint>

#include "wturan/extremal.hpp"
#include "wturan/pattern.hpp"
#include "wturan/weighted_graph.hpp"

namespace wturan {

struct OracleOptions {
    int threads = 1;
    // Replaces both search caps when positive. Exhaustive search above the
    // defaults can take a very long time; callers opt in explicitly.
    int max_n_override = 0;
};

struct OracleResult {
    Rational best_value;
    SimpleGraph witness;
    std::uint64_t explored = 0; // search nodes; stable only for single-thread runs
    ForbiddenPattern pattern;
    ObjectiveKind objective;
};

/// Exact maximum of the chosen objective over all pattern-free edge subsets
/// of K_n: depth-first over candidate edges in fixed lexicographic order,
/// include branch first, pruning subtrees whose remaining edge weight cannot
/// beat the incumbent. Pattern containment is tested incrementally through
/// the newly included edge only. Ties are resolved toward the witness whose
/// edge-indicator vector is lexicographically largest in candidate order,
/// which makes the result independent of thread count.
/// Caps: n <= 8 for clique patterns, n <= 7 for general ones (TooLargeError).
OracleResult brute_force_ex(const WeightVector& w, const ForbiddenPattern& pattern,
                            ObjectiveKind objective, const OracleOptions& options = {});

struct CertifyReport {
    OracleResult sum_oracle;
    OracleResult product_oracle;
    Rational sum_formula;
    Rational product_formula;
    bool leading_term = false; // formulas are leading terms (general pattern)
    bool sum_pass = false;
    bool product_pass = false;

    bool pass() const { return sum_pass && product_pass; }
};

/// Runs the oracle for both objectives and compares against the partition
/// formulas: exact equality for cliques, oracle >= leading term for general
/// patterns (which then require chromatic number >= 3).
CertifyReport certify(const WeightVector& w, const ForbiddenPattern& pattern,
                      const OracleOptions& options = {});

} // namespace wturan

#endif
