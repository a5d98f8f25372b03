#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "darboux/series.hpp"
#include "darboux/solver.hpp"
#include "darboux/system.hpp"

namespace darboux {

class DepthInsufficient : public std::runtime_error {
public:
    explicit DepthInsufficient(const std::string& what) : std::runtime_error(what) {}
};

// The polynomial factor mu(x) of the curve representation, given by its zeros.
struct MuFactor {
    struct Zero {
        Poly location;  // rational constant or symbol
        int multiplicity = 1;
    };
    std::vector<Zero> zeros;  // empty: mu is the constant 1

    bool is_constant() const { return zeros.empty(); }
    Poly to_poly(const std::string& var) const;
};

// One residue constraint: the coefficient of y^y_power * x^exponent in the
// series representation of the curve, which must vanish.
struct ResidueConstraint {
    int y_power;
    Rational exponent;
    Poly coeff;
};

// Invariant-curve candidate assembled from a multiset of Puiseux series at
// infinity: F is the polynomial part of mu * prod (y - y_j), the residue
// constraints are the non-polynomial coefficients.
struct CurveCandidate {
    std::vector<std::pair<PuiseuxSeries, int>> series_multiset;
    MuFactor mu;
    Poly F;
    std::vector<ResidueConstraint> residue_constraints;
    int N = 0;  // degree in y
};

// Assembles the candidate; the truncation certificate requires every residue
// coefficient down to exponent -constraint_count to be exact, otherwise
// DepthInsufficient is thrown (re-expand deeper and retry).
CurveCandidate assemble_candidate(const PlanarSystem& sys,
                                  const std::vector<std::pair<PuiseuxSeries, int>>& series,
                                  const MuFactor& mu, int constraint_count);

// Explicit cofactor from the series representation (projection formula).
Poly cofactor_from_series(const PlanarSystem& sys, const CurveCandidate& candidate);

// Independent route: (P F_x + Q F_y) / F, or nullopt when F is not invariant.
std::optional<Poly> cofactor_by_division(const PlanarSystem& sys, const Poly& F);

struct VerifyOutcome {
    bool ok;
    Poly residue;  // P F_x + Q F_y - lambda F when not ok
};
VerifyOutcome verify_invariant(const PlanarSystem& sys, const Poly& F, const Poly& lambda);
// Same check modulo a defining polynomial for an adjoined root.
VerifyOutcome verify_invariant_mod(const PlanarSystem& sys, const Poly& F, const Poly& lambda,
                                   const UniPoly& defining);

struct Unbounded {
    std::string reason;
};
// Cap on the number of curves with F_y != 0 from the count of distinct
// Puiseux series at infinity; Unbounded when a series family exists.
std::variant<int, Unbounded> curve_count_bound(const PlanarSystem& sys,
                                               DependentVar dependent = DependentVar::Y);

// Searches integer vectors d in [-bound, bound]^K \ {0} with
// d1*l1 + ... + dK*lK = 0; first hit in lexicographic order.
std::optional<std::vector<long>> rational_integral_obstruction(const std::vector<Poly>& cofactors,
                                                               long bound = 10);

// Curves of the form F = x - x0 (Remark-1 scan): parameter-free path.
struct XOnlyCurve {
    Rational x0;
    Poly F;
    Poly cofactor;
};
std::vector<XOnlyCurve> x_only_curves(const PlanarSystem& sys);

}  // namespace darboux
