#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "darboux/curve.hpp"

namespace darboux {

class WindowError : public std::runtime_error {
public:
    explicit WindowError(const std::string& what) : std::runtime_error(what) {}
};

// Lienard system x_t = y, y_t = -f(x) y - g(x) in the degree window
// deg f < deg g < 2 deg f + 1. Leading coefficients must be non-zero
// rationals; parameters may appear in the lower coefficients.
class LienardSystem {
public:
    LienardSystem(UniPoly f, UniPoly g);

    const UniPoly& f() const { return f_; }
    const UniPoly& g() const { return g_; }
    int m() const { return f_.degree(); }
    int n() const { return g_.degree(); }
    Rational f0() const { return f_.lead().constant_value(); }
    Rational g0() const { return g_.lead().constant_value(); }

    PlanarSystem to_planar() const;

private:
    UniPoly f_, g_;
};

// q(x) by the coefficient recurrence: q0 = -f0/(m+1), no constant term.
UniPoly q_polynomial(const LienardSystem& sys);

// p(x) = positive-degree part of the type-(II) series (leading -g0/f0);
// the returned series carries the constant term and the decaying tail.
std::pair<UniPoly, PuiseuxSeries> p_polynomial(const LienardSystem& sys, int tail_depth = 8);

struct LienardStructure {
    UniPoly q;
    UniPoly p;
    // normalized vanishing condition for the type-(I) series to exist;
    // the zero polynomial when trivially satisfied
    Poly compatibility;
    PuiseuxSeries series_I;   // free coefficient at the Fuchs index m+1
    PuiseuxSeries series_II;  // uniquely determined
    std::string free_symbol;  // name of the arbitrary coefficient of (I)
};

LienardStructure lienard_structure(const LienardSystem& sys, int depth_I, int depth_II);

// Transformed system s_t = z + q(s), z_t = -(q_s + f)(z + q) - g.
PlanarSystem transform_system(const LienardSystem& sys);
// G(s, z) = F(s, z + q(s)).
Poly pull_back(const LienardSystem& sys, const Poly& F);

// Substituting F = x - x0 into the invariance equation forces every
// y-coefficient of P to vanish at x0; for Lienard systems the y^1 coefficient
// is the constant 1, which is the recorded contradiction.
struct XOnlyCertificate {
    std::vector<Poly> conditions;  // y-coefficients of P at the symbolic x0
    bool contradictory = false;
};
XOnlyCertificate no_x_only_curves(const LienardSystem& sys);

struct LienardCurve {
    Poly F;         // leading graded-lex coefficient normalized to 1
    Poly cofactor;  // -N f - (N-k) q_x - k p_x under the same conditions
    int k = 0;
    int N = 1;
    SolutionBranch conditions;
    bool verified = false;
};

struct ClassifyOptions {
    int max_N = 0;                       // 0: use m + 2
    std::vector<std::string> unknowns;   // parameter symbols to solve for
    long budget = 200000;
    int extra_constraints = 0;
};

struct ClassifyResult {
    std::vector<LienardCurve> curves;
    std::vector<int> unexplored_N;  // N values not closed within the budget
    XOnlyCertificate x_only;
};

// Full classification of irreducible invariant algebraic curves: the k = 0
// branch (series (I) terminating, first degree in y) and the k = 1 branches
// with one type-(II) series and N-1 distinct type-(I) series.
ClassifyResult classify(const LienardSystem& sys, const ClassifyOptions& opts = {});

// Change of variables x -> X(x + x0), y -> Y y, t -> T t taking the general
// quartic family f = zeta x^2 + beta x + alpha, g = eps x^4 + xi x^3 + e x^2
// + sigma x + delta to its normalized form zeta = 3, eps = -3, beta = 0.
struct QuarticNormalization {
    Rational X, Y, T, x0;
    UniPoly f, g;  // transformed polynomials, verified by substitution
};
QuarticNormalization normalize_quartic(const UniPoly& f, const UniPoly& g);

}  // namespace darboux
