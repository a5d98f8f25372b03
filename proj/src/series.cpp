#include "darboux/series.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace darboux {

namespace {

// shift the independent variable for finite expansion points
ImplicitODE localized(const ImplicitODE& ode, const ExpansionPoint& pt) {
    if (pt.is_infinity()) return ode;
    Poly shifted = Poly::variable(ode.indep, {ode.indep}) + pt.location;
    return ImplicitODE{ode.E.substitute(ode.indep, shifted), ode.indep, ode.dep, ode.deriv};
}

Rational weight_at(const OdeTerm& t, const Rational& p) {
    return Rational(t.q1 - t.q3) + p * Rational(t.q2 + t.q3);
}

Rational rat_pow(const Rational& base, int e) {
    return e == 0 ? Rational(1) : base.pow(e);
}

int denominator_as_int(const Rational& p) {
    Integer d = p.den();
    if (d > 1024) throw std::invalid_argument("balance exponent denominator too large");
    return static_cast<int>(d);
}

}  // namespace

std::vector<OdeTerm> ode_terms(const ImplicitODE& ode) {
    const auto& vars = ode.E.vars();
    int ix = -1, iy = -1, id = -1;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] == ode.indep) ix = static_cast<int>(i);
        if (vars[i] == ode.dep) iy = static_cast<int>(i);
        if (vars[i] == ode.deriv) id = static_cast<int>(i);
    }
    std::map<std::tuple<int, int, int>, Poly> groups;
    for (const auto& [e, c] : ode.E.terms()) {
        const int q1 = ix >= 0 ? e[static_cast<std::size_t>(ix)] : 0;
        const int q2 = iy >= 0 ? e[static_cast<std::size_t>(iy)] : 0;
        const int q3 = id >= 0 ? e[static_cast<std::size_t>(id)] : 0;
        Poly::Exps rest = e;
        if (ix >= 0) rest[static_cast<std::size_t>(ix)] = 0;
        if (iy >= 0) rest[static_cast<std::size_t>(iy)] = 0;
        if (id >= 0) rest[static_cast<std::size_t>(id)] = 0;
        Poly mono = Poly::monomial(vars, rest, c);
        auto [it, fresh] = groups.emplace(std::make_tuple(q1, q2, q3), mono);
        if (!fresh) it->second = it->second + mono;
    }
    std::vector<OdeTerm> out;
    out.reserve(groups.size());
    for (auto& [k, coeff] : groups) {
        if (coeff.is_zero()) continue;
        out.push_back({std::get<0>(k), std::get<1>(k), std::get<2>(k), std::move(coeff)});
    }
    return out;
}

BalanceScan dominant_balances(const ImplicitODE& ode, const ExpansionPoint& point,
                              bool negative_only) {
    if (ode.E.is_zero()) throw std::invalid_argument("zero ODE");
    const ImplicitODE local = localized(ode, point);
    const auto terms = ode_terms(local);
    const bool maximize = point.is_infinity();

    std::set<Rational> candidates;
    // tie of two distinct affine weight functions
    for (std::size_t i = 0; i < terms.size(); ++i) {
        for (std::size_t j = i + 1; j < terms.size(); ++j) {
            const int ai = terms[i].q1 - terms[i].q3, bi = terms[i].q2 + terms[i].q3;
            const int aj = terms[j].q1 - terms[j].q3, bj = terms[j].q2 + terms[j].q3;
            if (bi == bj) continue;
            candidates.insert(Rational(aj - ai, bi - bj));
        }
    }
    // a single weight class can cancel on its own when its p-polynomial has
    // rational roots (c then stays arbitrary at leading order)
    std::map<std::pair<int, int>, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < terms.size(); ++i)
        classes[{terms[i].q1 - terms[i].q3, terms[i].q2 + terms[i].q3}].push_back(i);
    for (const auto& [ab, idx] : classes) {
        int kmin = terms[idx.front()].q3;
        for (auto i : idx) kmin = std::min(kmin, terms[i].q3);
        if (kmin >= 1) candidates.insert(Rational(0));
        std::vector<Poly> psi;
        for (auto i : idx) {
            const int k = terms[i].q3 - kmin;
            if (static_cast<int>(psi.size()) <= k) psi.resize(static_cast<std::size_t>(k) + 1);
            psi[static_cast<std::size_t>(k)] = psi[static_cast<std::size_t>(k)] + terms[i].coeff;
        }
        UniPoly psi_p("p", psi);
        if (psi_p.degree() >= 1 && psi_p.is_rational()) {
            for (const auto& r : rational_roots(psi_p)) candidates.insert(r.root);
        }
    }

    BalanceScan scan;
    for (const Rational& p : candidates) {
        if (negative_only && p.sign() >= 0) continue;
        // extremal weight and the set of terms attaining it
        std::optional<Rational> best;
        for (const auto& t : terms) {
            const Rational w = weight_at(t, p);
            if (!best || (maximize ? w > *best : w < *best)) best = w;
        }
        std::vector<std::size_t> dom;
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (weight_at(terms[i], p) == *best) dom.push_back(i);
        }
        // leading-coefficient polynomial in c
        std::vector<Poly> phi;
        for (auto i : dom) {
            const auto& t = terms[i];
            const int b = t.q2 + t.q3;
            Poly contrib = t.coeff.scaled(rat_pow(p, t.q3));
            if (static_cast<int>(phi.size()) <= b) phi.resize(static_cast<std::size_t>(b) + 1);
            phi[static_cast<std::size_t>(b)] = phi[static_cast<std::size_t>(b)] + contrib;
        }
        std::size_t v = 0;
        while (v < phi.size() && phi[v].is_zero()) ++v;
        if (v == phi.size()) {
            // every dominant contribution vanished at this p: c is arbitrary
            scan.free_family = true;
            scan.free_family_exponents.push_back(p);
            continue;
        }
        std::vector<Poly> stripped(phi.begin() + static_cast<std::ptrdiff_t>(v), phi.end());
        UniPoly lead("c", stripped);
        if (lead.degree() < 1) continue;  // no cancellation with c != 0
        scan.balances.push_back(Balance{point, p, lead, dom, *best});
    }

    std::sort(scan.balances.begin(), scan.balances.end(), [&](const Balance& a, const Balance& b) {
        return maximize ? a.exponent > b.exponent : a.exponent < b.exponent;
    });
    return scan;
}

std::pair<Poly, Poly> indicial_function(const ImplicitODE& ode, const Balance& b, const Poly& c0) {
    const ImplicitODE local = localized(ode, b.point);
    const auto terms = ode_terms(local);
    const Rational p = b.exponent;
    const int d = b.point.is_infinity() ? -1 : 1;  // exponent step direction
    Poly first, second;
    for (auto i : b.dominant_terms) {
        const auto& t = terms.at(i);
        const int bt = t.q2 + t.q3;
        if (bt < 1) continue;
        Poly base = t.coeff * c0.pow(static_cast<unsigned>(bt - 1));
        if (t.q2 > 0) first = first + base.scaled(Rational(t.q2) * rat_pow(p, t.q3));
        if (t.q3 > 0) {
            first = first + base.scaled(Rational(t.q3) * rat_pow(p, t.q3 - 1) * p);
            second = second + base.scaled(Rational(t.q3) * rat_pow(p, t.q3 - 1) * Rational(d));
        }
    }
    return {first, second};
}

std::vector<Rational> fuchs_indices(const ImplicitODE& ode, const Balance& b) {
    std::vector<Rational> out;
    const int n0 = denominator_as_int(b.exponent);
    auto collect = [&](const Poly& c0) {
        auto [a0, a1] = indicial_function(ode, b, c0);
        if (a1.is_zero()) return;
        if (!a0.is_constant() || !a1.is_constant()) return;  // parameter-dependent
        const Rational s = -a0.constant_value() / a1.constant_value();
        if (s.sign() > 0) out.push_back(s * Rational(n0));
    };
    if (b.lead_poly.is_rational()) {
        for (const auto& r : rational_roots(b.lead_poly)) {
            if (!r.root.is_zero()) collect(Poly(r.root));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Rational PuiseuxSeries::exponent_at(int l) const {
    const int d = ascending() ? 1 : -1;
    return leading_exponent + Rational(d * l, n0);
}

XSeries PuiseuxSeries::to_xseries() const {
    XSeries s;
    for (int l = 0; l <= depth; ++l) {
        const Poly& c = coeffs[static_cast<std::size_t>(l)];
        if (!c.is_zero()) s.add_term(exponent_at(l), c);
    }
    const Rational step(1, n0);
    if (ascending()) {
        s.mark_unknown_high(exponent_at(depth) + step);
    } else {
        s.mark_unknown_low(exponent_at(depth) - step);
    }
    return s;
}

Poly PuiseuxSeries::polynomial_part(const std::string& var) const {
    Poly acc;
    Poly xv = Poly::variable(var, {var});
    for (int l = 0; l <= depth; ++l) {
        const Rational e = exponent_at(l);
        if (!e.is_integer() || e.sign() < 0) continue;
        const Poly& c = coeffs[static_cast<std::size_t>(l)];
        if (c.is_zero()) continue;
        acc = acc + c * xv.pow(static_cast<unsigned>(e.num().convert_to<long>()));
    }
    return acc;
}

XSeries eval_ode(const ImplicitODE& ode, const XSeries& y) {
    const auto terms = ode_terms(ode);
    const XSeries yp = y.derivative();
    std::vector<XSeries> py(static_cast<std::size_t>(ode.deg_dep()) + 1);
    std::vector<XSeries> pyp(static_cast<std::size_t>(ode.deg_deriv()) + 1);
    py[0] = XSeries(Poly(Rational(1)));
    for (std::size_t k = 1; k < py.size(); ++k) py[k] = py[k - 1] * y;
    pyp[0] = XSeries(Poly(Rational(1)));
    for (std::size_t k = 1; k < pyp.size(); ++k) pyp[k] = pyp[k - 1] * yp;

    XSeries acc;
    for (const auto& t : terms) {
        XSeries w = py[static_cast<std::size_t>(t.q2)] * pyp[static_cast<std::size_t>(t.q3)];
        w = w.scaled(t.coeff).shifted(Rational(t.q1));
        acc = acc + w;
    }
    return acc;
}

ExpandResult expand_series(const ImplicitODE& ode, const Balance& b,
                           const std::variant<Rational, std::string>& leading,
                           const ExpandOptions& opts) {
    const ImplicitODE local = localized(ode, b.point);
    const Rational p = b.exponent;
    const int n0 = denominator_as_int(p);
    const int d = b.point.is_infinity() ? -1 : 1;
    const Rational step(1, n0);

    PuiseuxSeries s;
    s.point = b.point;
    s.n0 = n0;
    s.leading_exponent = p;
    s.depth = opts.depth;

    Poly c0;
    if (std::holds_alternative<Rational>(leading)) {
        const Rational& r = std::get<Rational>(leading);
        if (r.is_zero()) return NoSeries{"zero leading coefficient"};
        if (!b.lead_poly.eval(Poly(r)).is_zero())
            return NoSeries{"leading coefficient is not a root of the balance polynomial"};
        c0 = Poly(r);
    } else {
        const std::string& th = std::get<std::string>(leading);
        c0 = Poly::variable(th);
        s.defining = {th, UniPoly::from_poly(b.lead_poly.eval(c0), th)};
    }

    auto [a0, a1] = indicial_function(ode, b, c0);
    if (a0.is_zero() && a1.is_zero()) return NoSeries{"degenerate indicial function"};

    auto fresh_name = [&](const std::string& prefix, int l) {
        std::string name = prefix + std::to_string(l);
        auto used = [&](const std::string& n) {
            const auto& vs = local.E.vars();
            return std::find(vs.begin(), vs.end(), n) != vs.end();
        };
        while (used(name)) name += "_";
        return name;
    };

    XSeries y = XSeries::monomial(p, c0);
    if (d < 0) {
        y.mark_unknown_low(p + Rational(d * (opts.depth + 1), n0));
    } else {
        y.mark_unknown_high(p + Rational(d * (opts.depth + 1), n0));
    }
    s.coeffs.push_back(c0);

    for (int l = 1; l <= opts.depth; ++l) {
        const Rational target = b.weight + Rational(d * l, n0);
        const XSeries r = eval_ode(local, y);
        const Poly bl = r.coeff(target);
        const Poly aval = a0 + a1.scaled(Rational(l, n0));

        Poly cl;
        if (aval.is_zero()) {
            // Fuchs index: the coefficient is free, the order's constant term
            // must vanish for the series to exist
            const std::string name = fresh_name(opts.free_prefix, l);
            cl = Poly::variable(name);
            s.free_symbols.push_back(name);
            s.fuchs_indices.push_back(Rational(l));
            if (!bl.is_zero()) s.compatibility_conditions.push_back(bl.primitive());
        } else if (aval.is_constant()) {
            cl = bl.scaled(-aval.constant_value().inverse());
        } else {
            // parameter-dependent recurrence coefficient: emit the linear
            // determining equation and keep the coefficient symbolic
            const std::string name = fresh_name(opts.branch_prefix, l);
            cl = Poly::variable(name);
            s.free_symbols.push_back(name);
            s.determining_constraints.push_back(aval * cl + bl);
            s.assumptions.push_back(aval);
        }
        s.coeffs.push_back(cl);
        if (!cl.is_zero()) y.add_term(p + Rational(d * l, n0), cl);
    }
    return s;
}

XSeries series_residual(const PuiseuxSeries& s, const ImplicitODE& ode) {
    const ImplicitODE local = localized(ode, s.point);
    XSeries y;
    for (int l = 0; l <= s.depth; ++l) {
        const Poly& c = s.coeffs[static_cast<std::size_t>(l)];
        if (!c.is_zero()) y.add_term(s.exponent_at(l), c);
    }
    return eval_ode(local, y);
}

std::optional<Rational> residual_order(const PuiseuxSeries& s, const ImplicitODE& ode) {
    const XSeries r = series_residual(s, ode);
    if (r.terms().empty()) return std::nullopt;
    return r.terms().rbegin()->first;
}

std::vector<NegativePointBalance> finite_point_negative_series(const PlanarSystem& sys) {
    const ImplicitODE ode = ode_from_system(sys, DependentVar::Y);
    std::string x0 = "x0";
    {
        const auto& vs = ode.E.vars();
        while (std::find(vs.begin(), vs.end(), x0) != vs.end()) x0 += "_";
    }
    std::vector<NegativePointBalance> out;

    // generic finite point: expand around a symbolic x0
    const ExpansionPoint generic = ExpansionPoint::finite(Poly::variable(x0));
    BalanceScan scan = dominant_balances(ode, generic, /*negative_only=*/true);
    for (const auto& b : scan.balances) {
        NegativePointBalance rec{UniPoly(x0), {}, b};
        rec.nonvanishing.push_back(b.lead_poly.lead().primitive());
        rec.nonvanishing.push_back(b.lead_poly.coeff(0).primitive());
        out.push_back(std::move(rec));
    }

    // special points: the polygon can change where a shifted coefficient
    // vanishes; scan the rational candidates
    const ImplicitODE shifted = localized(ode, generic);
    std::set<Rational> specials;
    for (const auto& t : ode_terms(shifted)) {
        if (!t.coeff.depends_on(x0)) continue;
        UniPoly u = UniPoly::from_poly(t.coeff, x0);
        if (!u.is_rational()) continue;  // parameter coefficients: left to the caller
        for (const auto& r : rational_roots(u)) specials.insert(r.root);
    }
    for (const Rational& r : specials) {
        BalanceScan at = dominant_balances(ode, ExpansionPoint::finite(Poly(r)), true);
        for (const auto& b : at.balances) {
            const bool generic_too =
                std::any_of(out.begin(), out.end(), [&](const NegativePointBalance& g) {
                    return g.x0_vanishing.is_zero() && g.balance.exponent == b.exponent;
                });
            if (generic_too) continue;
            std::vector<Poly> xp = {Poly(-r), Poly(Rational(1))};
            out.push_back(NegativePointBalance{UniPoly(x0, xp), {}, b});
        }
    }
    return out;
}

}  // namespace darboux
