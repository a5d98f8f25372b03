#include "darboux/solver.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>

namespace darboux {

namespace {

bool contains(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

std::vector<std::string> used_unknowns(const Poly& p, const std::vector<std::string>& unknowns) {
    std::vector<std::string> out;
    for (const auto& u : unknowns) {
        if (p.depends_on(u)) out.push_back(u);
    }
    return out;
}

bool contains_poly(const std::vector<Poly>& v, const Poly& p) {
    const Poly n = p.primitive();
    return std::any_of(v.begin(), v.end(), [&](const Poly& q) { return q == n; });
}

}  // namespace

void ConstraintSystem::add(const Poly& eq) {
    if (eq.is_zero()) return;
    Poly n = eq.primitive();
    for (const auto& e : equations) {
        if (e == n) return;
    }
    equations.push_back(std::move(n));
}

bool SolutionBranch::is_rational_point() const {
    if (defining || !free_unknowns.empty()) return false;
    for (const auto& [u, v] : assignment) {
        if (!v.is_constant()) return false;
    }
    return true;
}

Poly apply_branch(const Poly& p, const SolutionBranch& b) {
    Poly out = p;
    for (const auto& [u, v] : b.assignment) out = out.substitute(u, v);
    if (b.defining) out = reduce_mod(out, b.defining->second);
    return out;
}

// ---------------------------------------------------------------------------
// lex Groebner machinery over Q(params)[unknowns]
// ---------------------------------------------------------------------------

namespace {

using Exps = std::vector<int>;

bool lex_less(const Exps& a, const Exps& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

struct GPoly {
    // terms sorted lex-descending in the unknown exponents
    std::vector<std::pair<Exps, Poly>> t;

    bool is_zero() const { return t.empty(); }
    const Exps& lexp() const { return t.front().first; }
    const Poly& lcoeff() const { return t.front().second; }
};

struct GContext {
    long budget = 0;
    long steps = 0;
    std::vector<Poly> assumptions;
};

void sort_terms(GPoly& g) {
    std::sort(g.t.begin(), g.t.end(),
              [](const auto& a, const auto& b) { return lex_less(b.first, a.first); });
}

GPoly to_gpoly(const Poly& p, const std::vector<std::string>& unknowns) {
    std::map<Exps, Poly> acc;
    const auto& vars = p.vars();
    std::vector<int> upos(vars.size(), -1);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        auto it = std::find(unknowns.begin(), unknowns.end(), vars[i]);
        if (it != unknowns.end()) upos[i] = static_cast<int>(it - unknowns.begin());
    }
    for (const auto& [e, c] : p.terms()) {
        Exps u(unknowns.size(), 0);
        Poly::Exps rest = e;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (upos[i] >= 0) {
                u[static_cast<std::size_t>(upos[i])] = e[i];
                rest[i] = 0;
            }
        }
        Poly mono = Poly::monomial(vars, rest, c);
        auto [it, fresh] = acc.emplace(std::move(u), mono);
        if (!fresh) it->second = it->second + mono;
    }
    GPoly g;
    for (const auto& [e, c] : acc) {
        if (!c.is_zero()) g.t.emplace_back(e, c);
    }
    sort_terms(g);
    return g;
}

Poly from_gpoly(const GPoly& g, const std::vector<std::string>& unknowns) {
    Poly acc;
    for (const auto& [e, c] : g.t) {
        Poly m = c;
        for (std::size_t i = 0; i < unknowns.size(); ++i) {
            if (e[i] > 0) m = m * Poly::variable(unknowns[i]).pow(static_cast<unsigned>(e[i]));
        }
        acc = acc + m;
    }
    return acc;
}

// rational gcd of two rationals (as content bookkeeping)
Rational rat_gcd(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    return Rational(gcd_int(a.num() * b.den(), b.num() * a.den()), a.den() * b.den());
}

GPoly normalize(GPoly g) {
    Rational content(0);
    for (const auto& [e, c] : g.t) content = rat_gcd(content, c.content());
    if (content.is_zero()) return g;
    if (!g.t.empty() && g.lcoeff().leading_coeff().sign() < 0) content = -content;
    for (auto& [e, c] : g.t) c = c.scaled(content.inverse());
    return g;
}

// ca * a - cb * x^shift * b
GPoly gsub(const GPoly& a, const GPoly& b, const Exps& shift, const Poly& ca, const Poly& cb) {
    std::map<Exps, Poly> acc;
    for (const auto& [e, c] : a.t) {
        auto [it, fresh] = acc.emplace(e, c * ca);
        if (!fresh) it->second = it->second + c * ca;
    }
    for (const auto& [e, c] : b.t) {
        Exps s = e;
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += shift[i];
        Poly v = c * cb;
        auto [it, fresh] = acc.emplace(std::move(s), -v);
        if (!fresh) it->second = it->second - v;
    }
    GPoly r;
    for (const auto& [e, c] : acc) {
        if (!c.is_zero()) r.t.emplace_back(e, c);
    }
    sort_terms(r);
    return r;
}

bool divides(const Exps& a, const Exps& b) {  // x^a | x^b
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

// full (pseudo-)reduction of f by the basis
GPoly reduce(GPoly f, const std::vector<GPoly>& basis, GContext& ctx) {
    GPoly tail;
    while (!f.is_zero()) {
        ++ctx.steps;
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            if (!divides(g.lexp(), f.lexp())) continue;
            Exps shift(f.lexp().size());
            for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = f.lexp()[i] - g.lexp()[i];
            if (g.lcoeff().is_constant()) {
                Poly factor = f.lcoeff().scaled(g.lcoeff().constant_value().inverse());
                f = gsub(f, g, shift, Poly(Rational(1)), factor);
            } else {
                // pseudo-step: multiply through by the leading coefficient;
                // spurious extra zeros are filtered by the final substitution
                // check on every branch
                if (!contains_poly(ctx.assumptions, g.lcoeff()))
                    ctx.assumptions.push_back(g.lcoeff().primitive());
                for (auto& [e, c] : tail.t) c = c * g.lcoeff();
                f = gsub(f, g, shift, g.lcoeff(), f.lcoeff());
            }
            reduced = true;
            break;
        }
        if (!reduced) {
            tail.t.push_back(f.t.front());
            f.t.erase(f.t.begin());
        }
    }
    return normalize(std::move(tail));
}

// Buchberger completion to a lex basis within the step budget.
bool buchberger(std::vector<GPoly>& basis, GContext& ctx) {
    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);
    }
    while (!pairs.empty()) {
        if (ctx.steps > ctx.budget) return false;
        auto [i, j] = pairs.front();
        pairs.pop_front();
        const GPoly &f = basis[i], &g = basis[j];
        if (f.is_zero() || g.is_zero()) continue;
        bool coprime = true;
        Exps lcm(f.lexp().size());
        for (std::size_t k = 0; k < lcm.size(); ++k) {
            lcm[k] = std::max(f.lexp()[k], g.lexp()[k]);
            if (f.lexp()[k] > 0 && g.lexp()[k] > 0) coprime = false;
        }
        if (coprime) continue;
        Exps sf(lcm.size()), sg(lcm.size());
        for (std::size_t k = 0; k < lcm.size(); ++k) {
            sf[k] = lcm[k] - f.lexp()[k];
            sg[k] = lcm[k] - g.lexp()[k];
        }
        GPoly shifted_f;
        shifted_f.t = f.t;
        for (auto& [e, c] : shifted_f.t) {
            for (std::size_t k = 0; k < e.size(); ++k) e[k] += sf[k];
        }
        GPoly sp = gsub(shifted_f, g, sg, g.lcoeff(), f.lcoeff());
        sp = reduce(normalize(std::move(sp)), basis, ctx);
        if (sp.is_zero()) continue;
        basis.push_back(sp);
        for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        GPoly f = std::move(basis[i]);
        basis[i] = GPoly{};
        basis[i] = reduce(std::move(f), basis, ctx);
    }
    basis.erase(std::remove_if(basis.begin(), basis.end(), [](const GPoly& g) { return g.is_zero(); }),
                basis.end());
    std::sort(basis.begin(), basis.end(),
              [](const GPoly& a, const GPoly& b) { return lex_less(a.lexp(), b.lexp()); });
    return true;
}

// ---------------------------------------------------------------------------
// branch extraction from the (partial) triangular set
// ---------------------------------------------------------------------------

struct Extraction {
    std::vector<std::string> unknowns;
    std::vector<Poly> original;
    std::vector<SolutionBranch> out;
};

bool only_tail_vars(const Poly& p, const std::vector<std::string>& unknowns, std::size_t level) {
    for (std::size_t i = 0; i < level; ++i) {
        if (p.depends_on(unknowns[i])) return false;
    }
    return true;
}

void extract_level(Extraction& ex, std::vector<Poly> eqs, std::size_t level, SolutionBranch branch,
                   std::vector<std::string> order);

void finish_branch(Extraction& ex, const std::vector<Poly>& eqs, SolutionBranch branch,
                   const std::vector<std::string>& order) {
    for (std::size_t i = order.size(); i-- > 0;) {
        Poly v = branch.assignment.at(order[i]);
        for (std::size_t j = i + 1; j < order.size(); ++j)
            v = v.substitute(order[j], branch.assignment.at(order[j]));
        if (branch.defining) v = reduce_mod(v, branch.defining->second);
        branch.assignment[order[i]] = v;
    }
    for (const auto& u : ex.unknowns) {
        if (!branch.assignment.count(u) && (!branch.defining || branch.defining->first != u))
            branch.free_unknowns.push_back(u);
    }
    std::vector<Poly> leftovers;
    for (const auto& e : ex.original) {
        Poly r = apply_branch(e, branch);
        if (!r.is_zero() && !contains_poly(leftovers, r)) leftovers.push_back(r.primitive());
    }
    for (const auto& e : eqs) {
        Poly r = apply_branch(e, branch);
        if (!r.is_zero() && !contains_poly(leftovers, r)) leftovers.push_back(r.primitive());
    }
    if (!leftovers.empty()) {
        branch.complete = false;
        branch.residual = std::move(leftovers);
    }
    ex.out.push_back(std::move(branch));
}

void extract_level(Extraction& ex, std::vector<Poly> eqs, std::size_t level, SolutionBranch branch,
                   std::vector<std::string> order) {
    std::vector<Poly> live;
    for (const auto& e : eqs) {
        Poly r = branch.defining ? reduce_mod(e, branch.defining->second) : e;
        if (r.is_zero()) continue;
        if (used_unknowns(r, ex.unknowns).empty()) return;  // inconsistent branch
        live.push_back(r.primitive());
    }
    if (level == 0) {
        finish_branch(ex, live, std::move(branch), order);
        return;
    }
    const std::size_t idx = level - 1;
    const std::string& u = ex.unknowns[idx];

    bool appears = std::any_of(live.begin(), live.end(),
                               [&](const Poly& e) { return e.depends_on(u); });
    if (!appears) {
        extract_level(ex, std::move(live), idx, std::move(branch), std::move(order));
        return;
    }

    // a linear equation in u with rational coefficient pins u exactly
    for (const auto& e : live) {
        if (e.degree(u) != 1) continue;
        Poly cu = e.coeff_of(u, 1);
        if (!cu.is_constant() || cu.is_zero()) continue;
        Poly rest = (e - e.coeff_of(u, 1) * Poly::variable(u)).substitute(u, Poly(Rational(0)));
        Poly val = rest.scaled(-cu.constant_value().inverse());
        std::vector<Poly> next;
        for (const auto& q : live) next.push_back(q.substitute(u, val));
        branch.assignment[u] = val;
        order.push_back(u);
        extract_level(ex, std::move(next), idx, std::move(branch), std::move(order));
        return;
    }

    std::vector<Poly> rational_univars;
    for (const auto& e : live) {
        if (!e.depends_on(u) || !only_tail_vars(e, ex.unknowns, idx)) continue;
        if (UniPoly::from_poly(e, u).is_rational()) rational_univars.push_back(e);
    }
    if (!rational_univars.empty()) {
        UniPoly h = UniPoly::from_poly(rational_univars.front(), u);
        for (std::size_t i = 1; i < rational_univars.size(); ++i)
            h = uni_gcd(h, UniPoly::from_poly(rational_univars[i], u));
        if (h.degree() == 0) return;  // no common root
        auto roots = rational_roots(h);
        UniPoly rest = h;
        for (const auto& r : roots) {
            for (int k = 0; k < r.multiplicity; ++k) {
                std::vector<Rational> lin{-r.root, Rational(1)};
                rest = uni_divmod(rest, UniPoly::from_rationals(u, lin)).first;
            }
            SolutionBranch child = branch;
            std::vector<std::string> child_order = order;
            std::vector<Poly> next;
            for (const auto& q : live) next.push_back(q.substitute(u, Poly(r.root)));
            child.assignment[u] = Poly(r.root);
            child_order.push_back(u);
            extract_level(ex, std::move(next), idx, std::move(child), std::move(child_order));
        }
        if (rest.degree() >= 1) {
            if (branch.defining) {
                // two simultaneously irrational coordinates: report the pair
                SolutionBranch child = branch;
                child.complete = false;
                child.residual.push_back(rest.to_poly().primitive());
                for (std::size_t i = 0; i < idx; ++i) child.free_unknowns.push_back(ex.unknowns[i]);
                ex.out.push_back(std::move(child));
                return;
            }
            UniPoly def = UniPoly::from_poly(squarefree_part(rest).to_poly().primitive(), u);
            SolutionBranch child = branch;
            child.defining = {u, def};
            std::vector<Poly> next;
            for (const auto& q : live) next.push_back(reduce_mod(q, def));
            extract_level(ex, std::move(next), idx, std::move(child), order);
        }
        return;
    }

    // stuck on this coordinate: report partial triangular data
    branch.complete = false;
    branch.residual = live;
    for (std::size_t i = 0; i < idx; ++i) branch.free_unknowns.push_back(ex.unknowns[i]);
    finish_branch(ex, {}, std::move(branch), order);
}

std::vector<Poly> eliminate_by_resultants(const std::vector<Poly>& eqs, const std::string& u) {
    std::vector<Poly> with_u, without;
    for (const auto& e : eqs) (e.depends_on(u) ? with_u : without).push_back(e);
    for (std::size_t i = 0; i < with_u.size(); ++i) {
        for (std::size_t j = i + 1; j < with_u.size(); ++j) {
            Poly r = resultant(UniPoly::from_poly(with_u[i], u), UniPoly::from_poly(with_u[j], u));
            if (!r.is_zero()) without.push_back(r.primitive());
        }
    }
    std::sort(without.begin(), without.end(),
              [](const Poly& a, const Poly& b) { return a.str() < b.str(); });
    without.erase(std::unique(without.begin(), without.end()), without.end());
    return without;
}

}  // namespace

std::vector<SolutionBranch> solve(const ConstraintSystem& cs, const SolveOptions& opts) {
    if (static_cast<int>(cs.unknowns.size()) > opts.max_unknowns)
        throw std::invalid_argument("solve: too many unknowns");
    ScopedDegreeCap cap(std::max(degree_cap(), 512));

    std::vector<Poly> eqs;
    for (const auto& e : cs.equations) {
        if (e.is_zero()) continue;
        if (used_unknowns(e, cs.unknowns).empty()) return {};  // unsatisfiable for generic parameters
        eqs.push_back(e.primitive());
    }
    if (eqs.empty()) {
        SolutionBranch all_free;
        all_free.free_unknowns = cs.unknowns;
        return {all_free};
    }

    GContext ctx;
    ctx.budget = opts.budget;
    std::vector<GPoly> basis;
    for (const auto& e : eqs) {
        GPoly g = reduce(normalize(to_gpoly(e, cs.unknowns)), basis, ctx);
        if (!g.is_zero()) basis.push_back(g);
    }
    const bool completed = buchberger(basis, ctx);

    std::vector<Poly> tri;
    if (completed) {
        for (const auto& g : basis) tri.push_back(from_gpoly(g, cs.unknowns).primitive());
    } else {
        tri = eqs;
        std::vector<Poly> layer = eqs;
        for (const auto& un : cs.unknowns) {
            layer = eliminate_by_resultants(layer, un);
            for (const auto& e : layer) {
                if (!e.is_zero() && !e.is_constant() && !contains_poly(tri, e)) tri.push_back(e);
            }
            if (layer.empty()) break;
        }
    }

    Extraction ex;
    ex.unknowns = cs.unknowns;
    ex.original = eqs;
    SolutionBranch root;
    root.assumptions = ctx.assumptions;
    extract_level(ex, tri, cs.unknowns.size(), std::move(root), {});

    std::stable_sort(ex.out.begin(), ex.out.end(),
                     [](const SolutionBranch& a, const SolutionBranch& b) {
                         return a.is_rational_point() && !b.is_rational_point();
                     });
    return ex.out;
}

SolutionBranch compose_branches(const SolutionBranch& base, const SolutionBranch& child) {
    SolutionBranch out;
    out.defining = base.defining ? base.defining : child.defining;
    for (const auto& [u, v] : base.assignment) out.assignment[u] = apply_branch(v, child);
    for (const auto& [u, v] : child.assignment) out.assignment[u] = v;
    out.free_unknowns = child.free_unknowns;
    out.assumptions = base.assumptions;
    out.assumptions.insert(out.assumptions.end(), child.assumptions.begin(),
                           child.assumptions.end());
    out.complete = base.complete && child.complete;
    return out;
}

RefineResult refine_solve(const std::vector<Poly>& constraints,
                          const std::vector<std::string>& unknowns, long budget) {
    RefineResult result;
    SolutionBranch start;
    start.free_unknowns = unknowns;
    std::vector<SolutionBranch> work{start};
    int rounds = 0;
    while (!work.empty()) {
        if (++rounds > 24) {
            result.closed = false;
            break;
        }
        std::vector<SolutionBranch> next;
        for (auto& br : work) {
            std::vector<Poly> violated;
            for (const auto& c : constraints) {
                Poly r = apply_branch(c, br);
                if (!r.is_zero()) violated.push_back(r.primitive());
                if (violated.size() >= 4) break;
            }
            if (violated.empty()) {
                result.branches.push_back(std::move(br));
                continue;
            }
            ConstraintSystem cs;
            cs.unknowns = br.free_unknowns;
            bool feasible = !br.free_unknowns.empty();
            for (const auto& v : violated) {
                bool uses = std::any_of(cs.unknowns.begin(), cs.unknowns.end(),
                                        [&](const std::string& u) { return v.depends_on(u); });
                if (!uses) {
                    feasible = false;  // pure parameter condition: dead generically
                    break;
                }
                cs.add(v);
            }
            if (!feasible) continue;
            for (auto& ch : solve(cs, {.budget = budget})) {
                if (!ch.complete) {
                    result.closed = false;
                    continue;
                }
                if (br.defining && ch.defining) {
                    result.closed = false;  // two adjoined roots: unresolved pair
                    continue;
                }
                next.push_back(compose_branches(br, ch));
            }
        }
        work = std::move(next);
    }
    return result;
}

// ---------------------------------------------------------------------------
// power sums
// ---------------------------------------------------------------------------

namespace {

std::vector<Poly> elementary_polys(const std::vector<std::string>& family) {
    std::vector<Poly> e(family.size() + 1);
    e[0] = Poly(Rational(1));
    for (const auto& v : family) {
        Poly var = Poly::variable(v);
        for (std::size_t k = family.size(); k >= 1; --k) {
            if (!e[k - 1].is_zero()) e[k] = e[k] + e[k - 1] * var;
        }
    }
    return e;
}

}  // namespace

std::vector<Poly> elementary_from_power_sums(std::size_t n, const std::string& prefix) {
    std::vector<Poly> C(n + 1);
    for (std::size_t i = 1; i <= n; ++i) C[i] = Poly::variable(prefix + std::to_string(i));
    std::vector<Poly> e(n + 1);
    e[0] = Poly(Rational(1));
    for (std::size_t k = 1; k <= n; ++k) {
        Poly acc;
        for (std::size_t i = 1; i <= k; ++i) {
            Poly t = e[k - i] * C[i];
            acc = (i % 2 == 1) ? acc + t : acc - t;
        }
        e[k] = acc.scaled(Rational(1, static_cast<long>(k)));
    }
    return e;
}

namespace {

Poly symmetric_to_power_sums(const Poly& p, const std::vector<std::string>& family,
                             const std::string& new_prefix) {
    if (family.empty()) return p;
    const std::size_t n = family.size();

    if (n >= 2) {
        std::vector<std::pair<std::size_t, std::size_t>> swaps{{0, n - 1}, {0, 1}};
        if (n >= 3) swaps.push_back({1, 2});
        for (auto [i, j] : swaps) {
            if (i == j) continue;
            std::map<std::string, std::string> m{{family[i], family[j]}, {family[j], family[i]}};
            if (p.renamed(m) != p)
                throw NotSymmetric("not symmetric in " + family[i] + ", " + family[j]);
        }
    }

    const std::vector<Poly> elem = elementary_polys(family);
    const std::vector<Poly> elem_ps = elementary_from_power_sums(n, new_prefix);

    Poly rest = p;
    Poly out;
    int guard = 0;
    while (true) {
        if (++guard > 100000) throw std::runtime_error("power-sum reduction did not terminate");
        std::vector<int> lambda(n, 0);
        bool found = false;
        for (const auto& [exps, c] : rest.terms()) {
            std::vector<int> ex(n, 0);
            int fam_deg = 0;
            for (std::size_t i = 0; i < rest.vars().size(); ++i) {
                auto f = std::find(family.begin(), family.end(), rest.vars()[i]);
                if (f != family.end()) {
                    ex[static_cast<std::size_t>(f - family.begin())] = exps[i];
                    fam_deg += exps[i];
                }
            }
            if (fam_deg == 0) continue;
            if (!found || std::lexicographical_compare(lambda.begin(), lambda.end(), ex.begin(), ex.end())) {
                lambda = ex;
                found = true;
            }
        }
        if (!found) break;
        std::vector<int> sorted = lambda;
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        if (sorted != lambda) throw NotSymmetric("leading family exponent is not sorted");

        Poly coeff = rest;
        for (std::size_t i = 0; i < n; ++i) coeff = coeff.coeff_of(family[i], lambda[i]);

        Poly prod_fam(Rational(1)), prod_ps(Rational(1));
        for (std::size_t i = 0; i < n; ++i) {
            const int mult = lambda[i] - (i + 1 < n ? lambda[i + 1] : 0);
            if (mult <= 0) continue;
            prod_fam = prod_fam * elem[i + 1].pow(static_cast<unsigned>(mult));
            prod_ps = prod_ps * elem_ps[i + 1].pow(static_cast<unsigned>(mult));
        }
        rest = rest - coeff * prod_fam;
        out = out + coeff * prod_ps;
    }
    return out + rest;
}

ConstraintSystem power_sum_reduce(const ConstraintSystem& cs, const std::vector<std::string>& family,
                                  const std::string& new_prefix) {
    ConstraintSystem out;
    for (const auto& u : cs.unknowns) {
        if (!contains(family, u)) out.unknowns.push_back(u);
    }
    for (std::size_t i = 1; i <= family.size(); ++i)
        out.unknowns.push_back(new_prefix + std::to_string(i));
    for (const auto& e : cs.equations) out.add(symmetric_to_power_sums(e, family, new_prefix));
    return out;
}

// ---------------------------------------------------------------------------
// brute-force oracle
// ---------------------------------------------------------------------------

std::vector<std::map<std::string, Rational>> brute_force_oracle(const ConstraintSystem& cs,
                                                                long box, long den_bound) {
    if (cs.unknowns.size() > 3) throw std::invalid_argument("brute_force_oracle: > 3 unknowns");
    std::set<Rational> values;
    for (long q = 1; q <= den_bound; ++q) {
        for (long p = -box; p <= box; ++p) values.insert(Rational(p, q));
    }
    std::vector<Rational> vals(values.begin(), values.end());
    std::vector<std::map<std::string, Rational>> out;
    const std::size_t n = cs.unknowns.size();
    if (n == 0) return out;
    std::vector<std::size_t> idx(n, 0);
    for (;;) {
        std::map<std::string, Rational> a;
        for (std::size_t i = 0; i < n; ++i) a[cs.unknowns[i]] = vals[idx[i]];
        bool ok = true;
        for (const auto& e : cs.equations) {
            if (!e.eval_partial(a).is_zero()) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(a);
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (++idx[i] < vals.size()) break;
            idx[i] = 0;
        }
        if (i == n) break;
    }
    return out;
}

}  // namespace darboux
