#pragma once

#include <optional>
#include <string>
#include <variant>

#include "darboux/poly.hpp"

namespace darboux {

// Planar polynomial vector field x_t = P(x,y), y_t = Q(x,y).
class PlanarSystem {
public:
    PlanarSystem(Poly P, Poly Q, std::string xname = "x", std::string yname = "y");

    const Poly& P() const { return p_; }
    const Poly& Q() const { return q_; }
    const std::string& xvar() const { return x_; }
    const std::string& yvar() const { return y_; }

    // max(deg P, deg Q) in the dynamical variables
    int degree() const;

    // true: checked coprime; false: checked, common factor found (construction
    // throws in that case); nullopt: parameters prevented the check
    std::optional<bool> coprime_checked() const { return coprime_; }

private:
    Poly p_, q_;
    std::string x_, y_;
    std::optional<bool> coprime_;
};

struct ExpansionPoint {
    enum class Kind { Finite, Infinity };
    Kind kind = Kind::Infinity;
    Poly location;  // rational constant or symbol, Finite only

    static ExpansionPoint infinity() { return {}; }
    static ExpansionPoint finite(Poly x0) { return {Kind::Finite, std::move(x0)}; }
    bool is_infinity() const { return kind == Kind::Infinity; }
};

enum class DependentVar { Y, X };

// First-order algebraic ODE E(x, y, y') = 0 satisfied by the foliation.
struct ImplicitODE {
    Poly E;
    std::string indep;
    std::string dep;
    std::string deriv;  // name of the derivative symbol, dep + "'"

    int deg_dep() const { return std::max(E.degree(dep), 0); }
    int deg_deriv() const { return std::max(E.degree(deriv), 0); }
};

// E = P*y' - Q when y is dependent, E = Q*x' - P when the roles are swapped.
ImplicitODE ode_from_system(const PlanarSystem& sys, DependentVar dependent = DependentVar::Y);

}  // namespace darboux
