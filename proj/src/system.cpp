#include "darboux/system.hpp"

#include <algorithm>

namespace darboux {

PlanarSystem::PlanarSystem(Poly P, Poly Q, std::string xname, std::string yname)
    : p_(std::move(P)), q_(std::move(Q)), x_(std::move(xname)), y_(std::move(yname)) {
    if (p_.is_zero() && q_.is_zero()) throw std::invalid_argument("zero vector field");
    bool parameter_free = true;
    for (const Poly* w : {&p_, &q_}) {
        for (const auto& v : w->vars()) {
            if (v != x_ && v != y_ && w->depends_on(v)) parameter_free = false;
        }
    }
    if (parameter_free && !p_.is_zero() && !q_.is_zero()) {
        Poly g = gcd_bivariate(p_, q_, x_, y_);
        if (g.total_degree() > 0)
            throw std::invalid_argument("P and Q share the non-constant factor " + g.str());
        coprime_ = true;
    }
}

int PlanarSystem::degree() const {
    auto deg_xy = [&](const Poly& w) {
        int d = -1;
        for (const auto& [e, c] : w.terms()) {
            int t = 0;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (w.vars()[i] == x_ || w.vars()[i] == y_) t += e[i];
            }
            d = std::max(d, t);
        }
        return d;
    };
    return std::max(deg_xy(p_), deg_xy(q_));
}

ImplicitODE ode_from_system(const PlanarSystem& sys, DependentVar dependent) {
    if (dependent == DependentVar::Y) {
        const std::string dv = sys.yvar() + "'";
        Poly yp = Poly::variable(dv, {dv});
        return ImplicitODE{sys.P() * yp - sys.Q(), sys.xvar(), sys.yvar(), dv};
    }
    const std::string dv = sys.xvar() + "'";
    Poly xp = Poly::variable(dv, {dv});
    return ImplicitODE{sys.Q() * xp - sys.P(), sys.yvar(), sys.xvar(), dv};
}

}  // namespace darboux
