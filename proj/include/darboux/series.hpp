#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "darboux/system.hpp"
#include "darboux/unipoly.hpp"
#include "darboux/xseries.hpp"

namespace darboux {

// One dominant balance of the ODE under y ~ c * x^p: an edge of the Newton
// polygon together with the polynomial whose non-zero roots are the
// admissible leading coefficients.
struct Balance {
    ExpansionPoint point;
    Rational exponent;                        // p, lowest terms
    UniPoly lead_poly;                        // in the symbol "c", constant term non-zero
    std::vector<std::size_t> dominant_terms;  // indices into ode_terms(E)
    Rational weight;                          // extremal weight value at p
};

struct BalanceScan {
    std::vector<Balance> balances;
    // true when some exponent admits an arbitrary leading coefficient
    // (a one-parameter family of series already at leading order)
    bool free_family = false;
    std::vector<Rational> free_family_exponents;
};

// Monomial decomposition of E used by the weight scan: x^q1 * dep^q2 * dep'^q3
// with a polynomial coefficient in the remaining symbols.
struct OdeTerm {
    int q1, q2, q3;
    Poly coeff;
};
std::vector<OdeTerm> ode_terms(const ImplicitODE& ode);

// Newton polygon scan. For Infinity the extremal weight is maximal, for a
// finite point (after shifting the independent variable) minimal. With
// negative_only set, only balances with p < 0 are returned (Lemma-1 service).
BalanceScan dominant_balances(const ImplicitODE& ode, const ExpansionPoint& point,
                              bool negative_only = false);

// Affine indicial function A(s) = first + second * s of the linearized
// recurrence along the balance with leading coefficient c0.
std::pair<Poly, Poly> indicial_function(const ImplicitODE& ode, const Balance& b, const Poly& c0);

// Orders l (series numbering of the Puiseux form) at which the recurrence
// coefficient vanishes, i.e. where a coefficient is free. Union over the
// rational roots of the leading-coefficient polynomial.
std::vector<Rational> fuchs_indices(const ImplicitODE& ode, const Balance& b);

// Truncated Puiseux series solution. At Infinity the exponents descend from
// leading_exponent in steps of 1/n0; at a finite point they ascend.
struct PuiseuxSeries {
    ExpansionPoint point;
    int n0 = 1;
    Rational leading_exponent;
    std::vector<Poly> coeffs;  // index l = 0..depth
    int depth = 0;
    std::vector<Rational> fuchs_indices;
    std::vector<std::string> free_symbols;
    std::vector<Poly> compatibility_conditions;
    // records A*c + B emitted when a recurrence coefficient depends on
    // parameters; the caller resolves them as case splits
    std::vector<Poly> determining_constraints;
    std::vector<Poly> assumptions;
    std::optional<std::pair<std::string, UniPoly>> defining;  // adjoined leading coeff

    bool ascending() const { return !point.is_infinity(); }
    Rational exponent_at(int l) const;
    // series as a truncation-tracked object; the unknown tail starts right
    // below (resp. above) the last computed order
    XSeries to_xseries() const;
    // polynomial part: monomials with integer exponent >= 0, as a Poly in var
    Poly polynomial_part(const std::string& var) const;
};

struct NoSeries {
    std::string reason;
};
using ExpandResult = std::variant<PuiseuxSeries, NoSeries>;

struct ExpandOptions {
    int depth = 16;
    std::string free_prefix = "c";
    std::string branch_prefix = "u";
};

// Order-by-order undetermined coefficients along a balance. leading is either
// an exact rational root of b.lead_poly or the name of a fresh symbol to
// adjoin (its defining relation is recorded on the series).
ExpandResult expand_series(const ImplicitODE& ode, const Balance& b,
                           const std::variant<Rational, std::string>& leading,
                           const ExpandOptions& opts = {});

// Exact residual E(x, s(x), s'(x)) of the truncated series, no truncation.
XSeries series_residual(const PuiseuxSeries& s, const ImplicitODE& ode);
// Highest surviving exponent of the residual (nullopt when identically zero).
std::optional<Rational> residual_order(const PuiseuxSeries& s, const ImplicitODE& ode);

// Substitute the series prefix into E with truncation tracking.
XSeries eval_ode(const ImplicitODE& ode, const XSeries& y);

// Finite expansion points admitting series with negative leading exponent.
// x0_vanishing is a polynomial in the fresh symbol "x0": the zero polynomial
// means the balance exists for all but finitely many x0 (subject to the
// recorded nonvanishing coefficients), otherwise x0 must be a root of it.
struct NegativePointBalance {
    UniPoly x0_vanishing;
    std::vector<Poly> nonvanishing;  // leading data assumed non-zero
    Balance balance;
};
std::vector<NegativePointBalance> finite_point_negative_series(const PlanarSystem& sys);

}  // namespace darboux
