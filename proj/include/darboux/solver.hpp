#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "darboux/unipoly.hpp"

namespace darboux {

class NotSymmetric : public std::runtime_error {
public:
    explicit NotSymmetric(const std::string& what) : std::runtime_error(what) {}
};

// Finite polynomial system over Q in the listed unknowns. Symbols outside the
// unknown list are carried as free parameters of the coefficient ring. The
// unknown order is the elimination order: unknowns.front() ranks highest and
// is eliminated first.
struct ConstraintSystem {
    std::vector<std::string> unknowns;
    std::vector<Poly> equations;

    // normalized insertion: primitive form, zero and duplicate equations dropped
    void add(const Poly& eq);
};

// One solution branch. Assignments map unknowns to rational constants or to
// expressions in the remaining free symbols (and the adjoined root, if any).
struct SolutionBranch {
    std::map<std::string, Poly> assignment;
    std::vector<std::string> free_unknowns;
    // adjoined algebraic coordinate: the unknown keeps its own name as the
    // root symbol, pinned by the defining polynomial
    std::optional<std::pair<std::string, UniPoly>> defining;
    std::vector<Poly> assumptions;  // non-vanishing conditions taken en route
    bool complete = true;
    std::vector<Poly> residual;  // leftover equations when incomplete

    bool is_rational_point() const;
};

struct SolveOptions {
    int max_unknowns = 8;
    long budget = 200000;  // reduction steps before the resultant fallback
};

// Complete over Q: every rational solution of the system lies in some branch;
// branches with one non-rational coordinate carry its defining polynomial.
// Positive-dimensional solution sets come out as branches with expression
// assignments over the free unknowns. Every complete branch substitutes to
// zero in the original system.
std::vector<SolutionBranch> solve(const ConstraintSystem& cs, const SolveOptions& opts = {});

// Substitutes the branch assignment (and reduces modulo the defining
// polynomial when present).
Poly apply_branch(const Poly& p, const SolutionBranch& b);

// Composition: child was solved over base's free unknowns.
SolutionBranch compose_branches(const SolutionBranch& base, const SolutionBranch& child);

struct RefineResult {
    std::vector<SolutionBranch> branches;
    bool closed = true;  // false when some branch had to be abandoned
};

// Incremental solving: feed the first violated constraints to solve(),
// substitute, iterate until every constraint vanishes on every branch.
RefineResult refine_solve(const std::vector<Poly>& constraints,
                          const std::vector<std::string>& unknowns, long budget);

// Rewrites a polynomial that is symmetric in the family symbols as a
// polynomial in their power sums prefix1..prefixN. Throws NotSymmetric.
Poly symmetric_to_power_sums(const Poly& p, const std::vector<std::string>& family,
                             const std::string& new_prefix);

ConstraintSystem power_sum_reduce(const ConstraintSystem& cs,
                                  const std::vector<std::string>& family,
                                  const std::string& new_prefix);

// e_1..e_n written in the power-sum symbols prefix1..prefixN (Newton).
std::vector<Poly> elementary_from_power_sums(std::size_t n, const std::string& prefix);

// Exhaustive scan over rationals p/q, |p| <= box, 1 <= q <= den_bound, for
// systems with at most three unknowns. Test oracle for solve().
std::vector<std::map<std::string, Rational>> brute_force_oracle(const ConstraintSystem& cs,
                                                                long box, long den_bound);

}  // namespace darboux
