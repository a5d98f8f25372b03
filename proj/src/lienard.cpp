#include "darboux/lienard.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <future>

namespace darboux {

namespace {

int env_threads() {
    const char* v = std::getenv("DARBOUX_THREADS");
    if (!v) return 1;
    const int n = std::atoi(v);
    return n < 1 ? 1 : (n > 16 ? 16 : n);
}

}  // namespace

LienardSystem::LienardSystem(UniPoly f, UniPoly g) : f_(std::move(f)), g_(std::move(g)) {
    if (f_.var() != "x" || g_.var() != "x")
        throw std::invalid_argument("Lienard polynomials must be given in x");
    if (f_.is_zero() || g_.is_zero()) throw WindowError("f and g must be non-zero");
    const int m = f_.degree(), n = g_.degree();
    if (!(m >= 1 && m < n && n < 2 * m + 1))
        throw WindowError("supported degree window is deg f < deg g < 2 deg f + 1 "
                          "(deg g <= deg f is the Odani regime and is not handled here)");
    if (!f_.lead().is_constant() || f_.lead().is_zero() || !g_.lead().is_constant() ||
        g_.lead().is_zero())
        throw WindowError("leading coefficients of f and g must be non-zero rationals");
}

PlanarSystem LienardSystem::to_planar() const {
    Poly fp = f_.to_poly(), gp = g_.to_poly();
    auto vars = Poly::merged_vars(fp, gp);
    if (std::find(vars.begin(), vars.end(), "y") == vars.end())
        vars.insert(vars.begin() + 1, "y");
    Poly y = Poly::variable("y", vars);
    return PlanarSystem(y, -(fp * y) - gp);
}

UniPoly q_polynomial(const LienardSystem& sys) {
    const int m = sys.m(), n = sys.n();
    const Rational f0 = sys.f0();
    auto fco = [&](int j) { return j >= 0 && j <= m ? sys.f().coeff(m - j) : Poly(); };
    auto gco = [&](int j) { return j >= 0 && j <= n ? sys.g().coeff(n - j) : Poly(); };

    std::vector<Poly> q(static_cast<std::size_t>(m) + 1);
    q[0] = Poly(-f0 / Rational(m + 1));
    for (int l = 1; l <= m; ++l) {
        Poly acc;
        for (int k = 0; k <= l - 1; ++k) acc = acc + q[static_cast<std::size_t>(k)] * fco(l - k);
        for (int k = 1; k <= l - 1; ++k)
            acc = acc + (q[static_cast<std::size_t>(k)] * q[static_cast<std::size_t>(l - k)])
                            .scaled(Rational(m + 1 - k));
        acc = acc + gco(n + l - (2 * m + 1));
        q[static_cast<std::size_t>(l)] = acc.scaled(Rational(m + 1) / (Rational(m - l + 1) * f0));
    }
    std::vector<Poly> coeffs(static_cast<std::size_t>(m) + 2);
    for (int l = 0; l <= m; ++l) coeffs[static_cast<std::size_t>(m + 1 - l)] = q[static_cast<std::size_t>(l)];
    return UniPoly("x", std::move(coeffs));
}

namespace {

// balances of the Lienard ODE at infinity, identified by exponent
std::pair<Balance, Balance> lienard_balances(const LienardSystem& sys, const ImplicitODE& ode) {
    BalanceScan scan = dominant_balances(ode, ExpansionPoint::infinity());
    std::optional<Balance> bi, bii;
    for (const auto& b : scan.balances) {
        if (b.exponent == Rational(sys.m() + 1)) bi = b;
        if (b.exponent == Rational(sys.n() - sys.m())) bii = b;
    }
    if (!bi || !bii) throw std::logic_error("Lienard balances not found");
    return {*bi, *bii};
}

}  // namespace

std::pair<UniPoly, PuiseuxSeries> p_polynomial(const LienardSystem& sys, int tail_depth) {
    const ImplicitODE ode = ode_from_system(sys.to_planar());
    auto [bi, bii] = lienard_balances(sys, ode);
    const int nm = sys.n() - sys.m();
    auto res = expand_series(ode, bii, -sys.g0() / sys.f0(),
                             {.depth = nm + tail_depth, .free_prefix = "a"});
    if (!std::holds_alternative<PuiseuxSeries>(res))
        throw std::logic_error("type-(II) series failed to expand");
    const auto& s = std::get<PuiseuxSeries>(res);
    std::vector<Poly> coeffs(static_cast<std::size_t>(nm) + 1);
    for (int l = 0; l < nm; ++l) coeffs[static_cast<std::size_t>(nm - l)] = s.coeffs[static_cast<std::size_t>(l)];
    return {UniPoly("x", std::move(coeffs)), s};
}

LienardStructure lienard_structure(const LienardSystem& sys, int depth_I, int depth_II) {
    const ImplicitODE ode = ode_from_system(sys.to_planar());
    auto [bi, bii] = lienard_balances(sys, ode);
    depth_I = std::max(depth_I, sys.m() + 2);
    depth_II = std::max(depth_II, sys.n() - sys.m() + 1);

    LienardStructure st;
    st.q = q_polynomial(sys);

    auto ri = expand_series(ode, bi, -sys.f0() / Rational(sys.m() + 1), {.depth = depth_I});
    if (!std::holds_alternative<PuiseuxSeries>(ri))
        throw std::logic_error("type-(I) series failed to expand");
    st.series_I = std::get<PuiseuxSeries>(ri);
    if (st.series_I.free_symbols.empty())
        throw std::logic_error("type-(I) series lost its arbitrary coefficient");
    st.free_symbol = st.series_I.free_symbols.front();
    st.compatibility = st.series_I.compatibility_conditions.empty()
                           ? Poly()
                           : st.series_I.compatibility_conditions.front();

    auto rii = expand_series(ode, bii, -sys.g0() / sys.f0(), {.depth = depth_II, .free_prefix = "a"});
    if (!std::holds_alternative<PuiseuxSeries>(rii))
        throw std::logic_error("type-(II) series failed to expand");
    st.series_II = std::get<PuiseuxSeries>(rii);
    const int nm = sys.n() - sys.m();
    std::vector<Poly> pc(static_cast<std::size_t>(nm) + 1);
    for (int l = 0; l < nm; ++l) pc[static_cast<std::size_t>(nm - l)] = st.series_II.coeffs[static_cast<std::size_t>(l)];
    st.p = UniPoly("x", std::move(pc));
    return st;
}

PlanarSystem transform_system(const LienardSystem& sys) {
    UniPoly q = q_polynomial(sys);
    Poly qs = q.to_poly().renamed({{"x", "s"}});
    Poly qd = q.derivative().to_poly().renamed({{"x", "s"}});
    Poly fs = sys.f().to_poly().renamed({{"x", "s"}});
    Poly gs = sys.g().to_poly().renamed({{"x", "s"}});
    Poly z = Poly::variable("z", {"s", "z"});
    Poly P = z + qs;
    Poly Q = -(qd + fs) * (z + qs) - gs;
    return PlanarSystem(P, Q, "s", "z");
}

Poly pull_back(const LienardSystem& sys, const Poly& F) {
    UniPoly q = q_polynomial(sys);
    Poly G = F.substitute("y", Poly::variable("z", {"z"}) + q.to_poly());
    return G.renamed({{"x", "s"}});
}

XOnlyCertificate no_x_only_curves(const LienardSystem& sys) {
    // F = x - x0 forces P = lambda (x - x0), so every y-coefficient of P must
    // vanish at x0; for x_t = y the y^1 coefficient is 1
    PlanarSystem planar = sys.to_planar();
    XOnlyCertificate cert;
    Poly x0 = Poly::variable("x0", {"x0"});
    for (const auto& c : planar.P().uni_coeffs("y")) cert.conditions.push_back(c.substitute("x", x0));
    for (const auto& c : cert.conditions) {
        if (c.is_constant() && !c.is_zero()) cert.contradictory = true;
    }
    return cert;
}

// ---------------------------------------------------------------------------
// classification
// ---------------------------------------------------------------------------

namespace {

struct Phase {
    int k = 0;
    int N = 1;
    Poly F;                          // generic candidate polynomial
    Poly cofactor;                   // closed form, generic
    std::vector<Poly> constraints;   // ordered necessary conditions
    std::vector<std::string> unknowns;
    std::vector<std::string> power_sum_symbols;  // C1.. for N-1 >= 1
    bool closed = true;
};

struct PhaseOutcome {
    std::vector<LienardCurve> curves;
    bool closed = true;
};

// verification with residue-driven refinement: when the invariance residue of
// a family branch is non-zero, its coefficients are new necessary conditions
PhaseOutcome run_phase(const PlanarSystem& planar, const Phase& ph, long budget) {
    PhaseOutcome out;
    out.closed = ph.closed;
    RefineResult rr = refine_solve(ph.constraints, ph.unknowns, budget);
    if (!rr.closed) out.closed = false;

    std::vector<std::pair<SolutionBranch, int>> work;
    for (auto& b : rr.branches) work.emplace_back(std::move(b), 0);

    while (!work.empty()) {
        auto [br, round] = work.back();
        work.pop_back();

        // pairwise-distinct type-(I) coefficients (irreducibility)
        if (static_cast<int>(ph.power_sum_symbols.size()) >= 2) {
            const std::size_t r = ph.power_sum_symbols.size();
            auto elem = elementary_from_power_sums(r, "C");
            std::vector<Poly> tc(r + 1);
            tc[r] = Poly(Rational(1));
            for (std::size_t i = 1; i <= r; ++i) {
                Poly ei = apply_branch(elem[i], br);
                tc[r - i] = (i % 2 == 1) ? -ei : ei;
            }
            UniPoly t("c", tc);
            Poly disc = resultant(t, t.derivative());
            disc = apply_branch(disc, br);
            if (disc.is_zero()) continue;  // repeated series: reducible candidate
            if (!disc.is_constant()) br.assumptions.push_back(disc.primitive());
        }

        Poly F = apply_branch(ph.F, br);
        Poly lam = apply_branch(ph.cofactor, br);
        PlanarSystem sysb(apply_branch(planar.P(), br), apply_branch(planar.Q(), br),
                          planar.xvar(), planar.yvar());
        if (F.degree(planar.yvar()) != ph.N) continue;  // degenerated candidate
        VerifyOutcome v = br.defining ? verify_invariant_mod(sysb, F, lam, br.defining->second)
                                      : verify_invariant(sysb, F, lam);
        if (!v.ok) {
            if (round >= 3) {
                out.closed = false;
                continue;
            }
            // the (x,y)-coefficients of the residue are further necessary
            // conditions on the parameters
            std::vector<Poly> more;
            for (const auto& coefy : v.residue.uni_coeffs(planar.yvar())) {
                for (const auto& cc : coefy.uni_coeffs(planar.xvar())) {
                    if (!cc.is_zero()) more.push_back(cc.primitive());
                }
            }
            RefineResult sub = refine_solve(more, br.free_unknowns, budget);
            if (!sub.closed) out.closed = false;
            for (auto& ch : sub.branches) {
                if (br.defining && ch.defining) {
                    out.closed = false;
                    continue;
                }
                work.emplace_back(compose_branches(br, ch), round + 1);
            }
            continue;
        }

        LienardCurve curve;
        curve.F = F.normalized_leading();
        curve.cofactor = lam;
        curve.k = ph.k;
        curve.N = ph.N;
        curve.conditions = br;
        curve.verified = true;
        out.curves.push_back(std::move(curve));
    }
    return out;
}

// reducibility probe of a concrete branch curve against earlier curves
bool reducible_against(const LienardCurve& cand, const std::vector<LienardCurve>& earlier) {
    if (cand.conditions.defining) return false;  // adjoined-root branches: structural checks only
    for (const auto& old : earlier) {
        Poly fold = apply_branch(old.F, cand.conditions);
        if (fold.is_constant()) continue;
        bool still_free = false;
        for (const auto& u : cand.conditions.free_unknowns) {
            if (fold.depends_on(u)) still_free = false;
        }
        (void)still_free;
        auto q = cand.F.divide_exact(fold.normalized_leading());
        if (q) return true;  // equal curve or a proper factor
    }
    return false;
}

}  // namespace

ClassifyResult classify(const LienardSystem& sys, const ClassifyOptions& opts) {
    const int m = sys.m(), n = sys.n();
    const int max_n = opts.max_N > 0 ? opts.max_N : m + 2;
    PlanarSystem planar = sys.to_planar();

    ClassifyResult result;
    result.x_only = no_x_only_curves(sys);

    auto count_for = [&](int N) { return N * (m + 2) + 5 + opts.extra_constraints; };
    // deep enough that the N-fold product is still certified at the lowest
    // residue exponent
    const int depth_I = count_for(max_n) + max_n * (m + 1) + 6;
    const int depth_II = count_for(max_n) + max_n * (m + 1) + 6;
    LienardStructure st = lienard_structure(sys, depth_I, depth_II);

    const Poly fX = sys.f().to_poly();
    const Poly qx = st.q.derivative().to_poly();
    const Poly px = st.p.derivative().to_poly();
    auto closed_cofactor = [&](int N, int k) {
        return -(fX.scaled(Rational(N))) - qx.scaled(Rational(N - k)) - px.scaled(Rational(k));
    };

    auto build_phase = [&](int N, int k) {
        Phase ph;
        ph.k = k;
        ph.N = N;
        std::vector<std::pair<PuiseuxSeries, int>> parts;
        std::vector<std::string> family;
        if (k == 1) parts.emplace_back(st.series_II, 1);
        const int copies = N - k;
        for (int j = 1; j <= copies; ++j) {
            PuiseuxSeries s = st.series_I;
            if (copies > 1 || k == 0) {
                // distinct arbitrary constants per copy
                const std::string nm_old = st.free_symbol;
                const std::string nm_new =
                    copies > 1 ? st.free_symbol + "_" + std::to_string(j) : st.free_symbol;
                if (nm_new != nm_old) {
                    std::map<std::string, std::string> ren{{nm_old, nm_new}};
                    for (auto& c : s.coeffs) c = c.renamed(ren);
                    s.free_symbols = {nm_new};
                }
                family.push_back(nm_new);
            } else {
                family.push_back(st.free_symbol);
            }
            parts.emplace_back(std::move(s), 1);
        }

        CurveCandidate cand = assemble_candidate(planar, parts, MuFactor{}, count_for(N));
        ph.F = cand.F;
        ph.cofactor = closed_cofactor(N, k);

        // series (I) must exist wherever it is used
        if (copies > 0 && !st.compatibility.is_zero()) ph.constraints.push_back(st.compatibility);
        for (const auto& rc : cand.residue_constraints) ph.constraints.push_back(rc.coeff);

        ph.unknowns = opts.unknowns;
        if (!family.empty()) {
            // symmetric in the arbitrary constants: switch to power sums
            if (family.size() >= 2) {
                std::vector<Poly> reduced;
                for (auto& c : ph.constraints)
                    reduced.push_back(symmetric_to_power_sums(c, family, "C"));
                ph.constraints = std::move(reduced);
                ph.F = symmetric_to_power_sums(ph.F, family, "C");
                for (std::size_t i = 1; i <= family.size(); ++i) {
                    ph.unknowns.push_back("C" + std::to_string(i));
                    ph.power_sum_symbols.push_back("C" + std::to_string(i));
                }
            } else {
                ph.unknowns.push_back(family.front());
            }
        }
        return ph;
    };

    // k=1, N=1: the type-(II) series terminates
    // k=0 (N=1 by the first-degree lemma): the type-(I) series terminates
    std::vector<Phase> phases;
    phases.push_back(build_phase(1, 1));
    phases.push_back(build_phase(1, 0));
    for (int N = 2; N <= max_n; ++N) phases.push_back(build_phase(N, 1));

    std::vector<PhaseOutcome> outcomes(phases.size());
    const int threads = env_threads();
    if (threads > 1) {
        std::vector<std::future<PhaseOutcome>> futs;
        for (const auto& ph : phases)
            futs.push_back(std::async(std::launch::async,
                                      [&planar, &ph, &opts] { return run_phase(planar, ph, opts.budget); }));
        for (std::size_t i = 0; i < futs.size(); ++i) outcomes[i] = futs[i].get();
    } else {
        for (std::size_t i = 0; i < phases.size(); ++i)
            outcomes[i] = run_phase(planar, phases[i], opts.budget);
    }

    for (std::size_t i = 0; i < phases.size(); ++i) {
        if (!outcomes[i].closed) result.unexplored_N.push_back(phases[i].N);
        for (auto& c : outcomes[i].curves) {
            if (reducible_against(c, result.curves)) continue;
            result.curves.push_back(std::move(c));
        }
    }

    // fixed parameters: the two-curve theorem applies literally
    if (opts.unknowns.empty() && result.curves.size() > 2)
        throw std::logic_error("more than two curves for a fixed Lienard system");
    return result;
}

QuarticNormalization normalize_quartic(const UniPoly& f, const UniPoly& g) {
    if (f.var() != "x" || g.var() != "x") throw std::invalid_argument("expected polynomials in x");
    if (f.degree() != 2 || g.degree() != 4)
        throw std::invalid_argument("normalize_quartic expects deg f = 2, deg g = 4");
    if (!f.coeff(2).is_constant() || !f.coeff(1).is_constant() || !g.coeff(4).is_constant())
        throw std::invalid_argument("zeta, beta and epsilon must be rational");
    const Rational zeta = f.coeff(2).constant_value();
    const Rational beta = f.coeff(1).constant_value();
    const Rational eps = g.coeff(4).constant_value();
    if (zeta.is_zero() || eps.is_zero()) throw std::invalid_argument("zeta and epsilon must be non-zero");

    QuarticNormalization out;
    out.X = Rational(-3) * eps / (zeta * zeta);
    out.T = zeta.pow(3) / (Rational(3) * eps * eps);
    out.Y = out.X / out.T;
    out.x0 = beta * zeta / (Rational(6) * eps);

    Poly xv = Poly::variable("x", {"x"});
    Poly sub = (xv + Poly(out.x0)).scaled(out.X);
    Poly ft = f.to_poly().substitute("x", sub).scaled(out.T);
    Poly gt = g.to_poly().substitute("x", sub).scaled(out.T / out.Y);
    out.f = UniPoly::from_poly(ft, "x");
    out.g = UniPoly::from_poly(gt, "x");
    if (out.f.coeff(2) != Poly(Rational(3)) || !out.f.coeff(1).is_zero() ||
        out.g.coeff(4) != Poly(Rational(-3)))
        throw std::logic_error("quartic normalization failed verification");
    return out;
}

}  // namespace darboux
