#include "darboux/curve.hpp"

#include <algorithm>
#include <cassert>

namespace darboux {

namespace {

// exact Laurent view of a polynomial with respect to one variable
XSeries xseries_from_poly(const Poly& p, const std::string& var) {
    XSeries out;
    UniPoly u = UniPoly::from_poly(p, var);
    for (int k = 0; k <= u.degree(); ++k) {
        if (!u.coeff(k).is_zero()) out.add_term(Rational(k), u.coeff(k));
    }
    return out;
}

// {p / x^(m+1)}+ : keep the monomials with x-degree >= m+1, shifted down
Poly poly_shift_down(const Poly& p, const std::string& var, int shift) {
    Poly acc;
    UniPoly u = UniPoly::from_poly(p, var);
    Poly xv = Poly::variable(var, {var});
    for (int k = shift; k <= u.degree(); ++k) {
        if (u.coeff(k).is_zero()) continue;
        acc = acc + u.coeff(k) * xv.pow(static_cast<unsigned>(k - shift));
    }
    return acc;
}

}  // namespace

Poly MuFactor::to_poly(const std::string& var) const {
    Poly acc(Rational(1));
    Poly xv = Poly::variable(var, {var});
    for (const auto& z : zeros) {
        acc = acc * (xv - z.location).pow(static_cast<unsigned>(z.multiplicity));
    }
    return acc;
}

CurveCandidate assemble_candidate(const PlanarSystem& sys,
                                  const std::vector<std::pair<PuiseuxSeries, int>>& series,
                                  const MuFactor& mu, int constraint_count) {
    if (series.empty()) throw std::invalid_argument("assemble_candidate: no series");
    for (const auto& [s, mult] : series) {
        if (!s.point.is_infinity())
            throw std::invalid_argument("assemble_candidate: mixed expansion points");
        if (mult < 1) throw std::invalid_argument("assemble_candidate: non-positive multiplicity");
    }

    // W(x, y) = mu(x) * prod_j (y - y_j)^mult as y-power -> x-series
    std::vector<XSeries> w;
    w.push_back(xseries_from_poly(mu.to_poly(sys.xvar()), sys.xvar()));
    for (const auto& [s, mult] : series) {
        const XSeries ys = s.to_xseries();
        for (int k = 0; k < mult; ++k) {
            std::vector<XSeries> nw(w.size() + 1);
            for (std::size_t d = 0; d < w.size(); ++d) {
                nw[d + 1] = nw[d + 1] + w[d];          // y * w[d]
                nw[d] = nw[d] - w[d] * ys;             // (-y_j) * w[d]
            }
            w = std::move(nw);
        }
    }

    CurveCandidate cand;
    cand.series_multiset = series;
    cand.mu = mu;
    cand.N = static_cast<int>(w.size()) - 1;

    const Rational floor_needed(-constraint_count);
    Poly xv = Poly::variable(sys.xvar(), {sys.xvar()});
    Poly yv = Poly::variable(sys.yvar(), {sys.yvar()});
    std::vector<ResidueConstraint> residues;
    Poly F;
    for (std::size_t d = 0; d < w.size(); ++d) {
        const XSeries& row = w[d];
        if (auto ul = row.unknown_low(); ul && *ul >= floor_needed) {
            throw DepthInsufficient("series too shallow: trusted above x^" + ul->str() +
                                    ", need residues down to x^" + floor_needed.str());
        }
        for (const auto& [e, c] : row.terms()) {
            if (e.is_integer() && e.sign() >= 0) {
                F = F + c * xv.pow(static_cast<unsigned>(e.num().convert_to<long>())) *
                            yv.pow(static_cast<unsigned>(d));
            } else if (e >= floor_needed) {
                residues.push_back({static_cast<int>(d), e, c.primitive()});
            }
        }
    }
    std::sort(residues.begin(), residues.end(), [](const ResidueConstraint& a, const ResidueConstraint& b) {
        if (a.exponent != b.exponent) return b.exponent < a.exponent;
        return b.y_power < a.y_power;
    });
    cand.F = F;
    cand.residue_constraints = std::move(residues);
    return cand;
}

Poly cofactor_from_series(const PlanarSystem& sys, const CurveCandidate& candidate) {
    const std::string& x = sys.xvar();
    const std::string& y = sys.yvar();
    const int deg_px = sys.P().degree(x);
    const int dy = std::max(sys.P().degree(y), sys.Q().degree(y));

    // mu part: P * sum_m sum_l nu_l x_l^m / x^{m+1}, projected
    Poly lambda;
    for (const auto& z : candidate.mu.zeros) {
        Poly xpow(Rational(1));
        for (int m = 0; m < deg_px; ++m) {
            lambda = lambda + poly_shift_down(sys.P(), x, m + 1) * xpow.scaled(Rational(z.multiplicity));
            xpow = xpow * z.location;
        }
    }

    // series part: sum_j sum_m (Q - P y_j') y_j^m / y^{m+1}, projected
    auto pco = sys.P().uni_coeffs(y);
    auto qco = sys.Q().uni_coeffs(y);
    std::vector<XSeries> out(static_cast<std::size_t>(std::max(dy, 1)));
    for (const auto& [s, mult] : candidate.series_multiset) {
        const XSeries ys = s.to_xseries();
        const XSeries ysx = ys.derivative();
        std::vector<XSeries> phi(static_cast<std::size_t>(dy) + 1);
        for (int d = 0; d <= dy; ++d) {
            XSeries acc;
            if (d < static_cast<int>(qco.size()))
                acc = acc + xseries_from_poly(qco[static_cast<std::size_t>(d)], x);
            if (d < static_cast<int>(pco.size()))
                acc = acc - xseries_from_poly(pco[static_cast<std::size_t>(d)], x) * ysx;
            phi[static_cast<std::size_t>(d)] = std::move(acc);
        }
        XSeries ypow(Poly(Rational(1)));
        for (int m = 0; m < dy; ++m) {
            // contribution to y^{d-m-1} for every d >= m+1
            for (int d = m + 1; d <= dy; ++d) {
                XSeries t = phi[static_cast<std::size_t>(d)] * ypow;
                for (int k = 0; k < mult; ++k)
                    out[static_cast<std::size_t>(d - m - 1)] =
                        out[static_cast<std::size_t>(d - m - 1)] + t;
            }
            ypow = ypow * ys;
        }
    }

    Poly xv = Poly::variable(x, {x});
    Poly yv = Poly::variable(y, {y});
    for (std::size_t d = 0; d < out.size(); ++d) {
        if (auto ul = out[d].unknown_low(); ul && *ul >= Rational(0)) {
            throw DepthInsufficient("cofactor projection needs deeper series (trusted above x^" +
                                    ul->str() + ")");
        }
        for (const auto& [e, c] : out[d].terms()) {
            if (!e.is_integer() || e.sign() < 0) continue;
            lambda = lambda + c * xv.pow(static_cast<unsigned>(e.num().convert_to<long>())) *
                                  yv.pow(static_cast<unsigned>(d));
        }
    }
    return lambda;
}

std::optional<Poly> cofactor_by_division(const PlanarSystem& sys, const Poly& F) {
    if (F.is_constant()) throw std::invalid_argument("cofactor_by_division: constant F");
    Poly num = sys.P() * F.derivative(sys.xvar()) + sys.Q() * F.derivative(sys.yvar());
    if (num.is_zero()) return Poly();
    return num.divide_exact(F);
}

VerifyOutcome verify_invariant(const PlanarSystem& sys, const Poly& F, const Poly& lambda) {
    if (F.is_constant()) throw std::invalid_argument("verify_invariant: constant F");
    Poly residue =
        sys.P() * F.derivative(sys.xvar()) + sys.Q() * F.derivative(sys.yvar()) - lambda * F;
    return {residue.is_zero(), residue};
}

VerifyOutcome verify_invariant_mod(const PlanarSystem& sys, const Poly& F, const Poly& lambda,
                                   const UniPoly& defining) {
    if (F.is_constant()) throw std::invalid_argument("verify_invariant: constant F");
    Poly residue =
        sys.P() * F.derivative(sys.xvar()) + sys.Q() * F.derivative(sys.yvar()) - lambda * F;
    residue = reduce_mod(residue, defining);
    return {residue.is_zero(), residue};
}

std::variant<int, Unbounded> curve_count_bound(const PlanarSystem& sys, DependentVar dependent) {
    const ImplicitODE ode = ode_from_system(sys, dependent);
    BalanceScan scan = dominant_balances(ode, ExpansionPoint::infinity());
    if (scan.free_family) return Unbounded{"a leading coefficient is arbitrary"};

    int count = 0;
    for (const auto& b : scan.balances) {
        if (!b.lead_poly.is_rational())
            throw std::invalid_argument("curve_count_bound: parametric leading data");
        int accounted = 0;
        for (const auto& r : rational_roots(b.lead_poly)) {
            accounted += r.multiplicity;
            auto [a0, a1] = indicial_function(ode, b, Poly(r.root));
            if (a1.is_zero()) {
                count += r.multiplicity;
                continue;
            }
            if (!a0.is_constant() || !a1.is_constant())
                return Unbounded{"parameter-dependent recurrence coefficient"};
            const Rational s = -a0.constant_value() / a1.constant_value();
            const Rational fuchs = s * Rational(b.exponent.den());
            if (s.sign() <= 0 || !fuchs.is_integer()) {
                count += r.multiplicity;
                continue;
            }
            // expand to the Fuchs order and look at the compatibility term
            const int depth = static_cast<int>(fuchs.num().convert_to<long>());
            auto res = expand_series(ode, b, r.root, {.depth = depth});
            if (std::holds_alternative<NoSeries>(res)) continue;
            const auto& ser = std::get<PuiseuxSeries>(res);
            if (ser.compatibility_conditions.empty())
                return Unbounded{"arbitrary coefficient at a Fuchs index"};
            const Poly& compat = ser.compatibility_conditions.front();
            if (compat.is_constant()) {
                // non-zero constant: the series does not exist, count nothing
                continue;
            }
            return Unbounded{"parameter-dependent compatibility condition"};
        }
        // conjugate (non-rational) leading coefficients, counted by degree
        const int leftover = squarefree_part(b.lead_poly).degree() > 0
                                 ? b.lead_poly.degree() - accounted
                                 : 0;
        if (leftover > 0) {
            Poly c0 = Poly::variable("c", {"c"});
            auto [a0, a1] = indicial_function(ode, b, c0);
            if (!a1.is_zero()) return Unbounded{"undetermined Fuchs data at non-rational leading coefficients"};
            count += leftover;
        }
    }
    return count;
}

std::optional<std::vector<long>> rational_integral_obstruction(const std::vector<Poly>& cofactors,
                                                               long bound) {
    const std::size_t k = cofactors.size();
    if (k == 0) throw std::invalid_argument("rational_integral_obstruction: empty list");

    // magnitude-ordered component values: 0, 1, -1, 2, -2, ...
    std::vector<long> order;
    order.push_back(0);
    for (long v = 1; v <= bound; ++v) {
        order.push_back(v);
        order.push_back(-v);
    }

    std::vector<std::size_t> idx(k, 0);
    std::vector<long> d(k, 0);
    for (;;) {
        bool all_zero = true;
        for (std::size_t i = 0; i < k; ++i) {
            d[i] = order[idx[i]];
            if (d[i] != 0) all_zero = false;
        }
        if (!all_zero) {
            Poly acc;
            for (std::size_t i = 0; i < k; ++i) acc = acc + cofactors[i].scaled(Rational(d[i]));
            if (acc.is_zero()) return d;
        }
        std::size_t i = k;
        while (i-- > 0) {
            if (++idx[i] < order.size()) break;
            idx[i] = 0;
            if (i == 0) return std::nullopt;
        }
        if (idx[0] == 0 && i == static_cast<std::size_t>(-1)) return std::nullopt;
    }
}

std::vector<XOnlyCurve> x_only_curves(const PlanarSystem& sys) {
    std::vector<XOnlyCurve> out;
    auto coeffs = sys.P().uni_coeffs(sys.yvar());
    UniPoly g(sys.xvar());
    bool first = true;
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        UniPoly u = UniPoly::from_poly(c, sys.xvar());
        if (!u.is_rational()) return {};  // parametric: left to the solver-driven path
        g = first ? u : uni_gcd(g, u);
        first = false;
    }
    if (first || g.degree() < 1) return {};
    Poly xv = Poly::variable(sys.xvar(), {sys.xvar()});
    for (const auto& r : rational_roots(g)) {
        Poly F = xv - Poly(r.root);
        auto lambda = sys.P().divide_exact(F);
        if (!lambda) continue;
        out.push_back({r.root, F, *lambda});
    }
    return out;
}

}  // namespace darboux
