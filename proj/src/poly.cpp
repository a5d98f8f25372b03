#include "darboux/poly.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>

namespace darboux {

namespace {
thread_local int g_degree_cap = 64;
}

int degree_cap() { return g_degree_cap; }
void set_degree_cap(int cap) { g_degree_cap = cap; }

bool Poly::GrlexLess::operator()(const Exps& a, const Exps& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    // ties: the later (higher-ranked) variable decides
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

Poly::Poly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Exps{}, c);
}

Poly Poly::constant(const Rational& c, std::vector<std::string> vars) {
    Poly p;
    p.vars_ = std::move(vars);
    if (!c.is_zero()) p.terms_.emplace(Exps(p.vars_.size(), 0), c);
    return p;
}

Poly Poly::variable(const std::string& name) { return variable(name, {name}); }

Poly Poly::variable(const std::string& name, std::vector<std::string> vars) {
    Poly p;
    p.vars_ = std::move(vars);
    auto it = std::find(p.vars_.begin(), p.vars_.end(), name);
    if (it == p.vars_.end()) throw std::invalid_argument("variable not in context: " + name);
    Exps e(p.vars_.size(), 0);
    e[static_cast<std::size_t>(it - p.vars_.begin())] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

Poly Poly::monomial(std::vector<std::string> vars, Exps exps, const Rational& coeff) {
    if (vars.size() != exps.size()) throw std::invalid_argument("monomial: arity mismatch");
    Poly p;
    p.vars_ = std::move(vars);
    if (!coeff.is_zero()) {
        check_cap(exps);
        p.terms_.emplace(std::move(exps), coeff);
    }
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exps& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

Rational Poly::constant_term() const {
    Exps zero(vars_.size(), 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::degree(const std::string& var) const {
    if (terms_.empty()) return -1;
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return 0;
    const std::size_t i = static_cast<std::size_t>(it - vars_.begin());
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    const Exps& e = terms_.rbegin()->first;  // grlex leading term has max degree
    return std::accumulate(e.begin(), e.end(), 0);
}

Poly Poly::with_vars(const std::vector<std::string>& vars) const {
    if (vars == vars_) return *this;
    std::vector<int> pos(vars_.size(), -1);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), vars_[i]);
        if (it == vars.end()) throw std::invalid_argument("with_vars: missing " + vars_[i]);
        pos[i] = static_cast<int>(it - vars.begin());
    }
    Poly p;
    p.vars_ = vars;
    for (const auto& [e, c] : terms_) {
        Exps ne(vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[static_cast<std::size_t>(pos[i])] = e[i];
        p.terms_.emplace(std::move(ne), c);
    }
    return p;
}

std::vector<std::string> Poly::merged_vars(const Poly& a, const Poly& b) {
    if (a.vars_ == b.vars_) return a.vars_;
    std::vector<std::string> m = a.vars_;
    for (const auto& v : b.vars_) {
        if (std::find(m.begin(), m.end(), v) == m.end()) m.push_back(v);
    }
    return m;
}

void Poly::insert_term(const Exps& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Poly::check_cap(const Exps& e) {
    const int cap = degree_cap();
    for (int k : e) {
        if (k > cap) throw DegreeCapError("per-variable degree cap " + std::to_string(cap) + " exceeded");
        if (k < 0) throw std::invalid_argument("negative exponent in polynomial term");
    }
}

Poly Poly::operator-() const {
    Poly p;
    p.vars_ = vars_;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

Poly operator+(const Poly& a, const Poly& b) {
    auto vars = Poly::merged_vars(a, b);
    Poly x = a.with_vars(vars);
    Poly y = b.with_vars(vars);
    for (const auto& [e, c] : y.terms_) x.insert_term(e, c);
    return x;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    auto vars = Poly::merged_vars(a, b);
    Poly x = a.with_vars(vars);
    Poly y = b.with_vars(vars);
    Poly r;
    r.vars_ = vars;
    Poly::Exps e(vars.size(), 0);
    for (const auto& [ea, ca] : x.terms_) {
        for (const auto& [eb, cb] : y.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            Poly::check_cap(e);
            r.insert_term(e, ca * cb);
        }
    }
    return r;
}

Poly Poly::scaled(const Rational& c) const {
    Poly p;
    p.vars_ = vars_;
    if (c.is_zero()) return p;
    for (const auto& [e, k] : terms_) p.terms_.emplace(e, k * c);
    return p;
}

Poly Poly::pow(unsigned e) const {
    Poly r = Poly::constant(Rational(1), vars_);
    Poly base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

Poly pow(const Poly& p, unsigned e) { return p.pow(e); }

bool operator==(const Poly& a, const Poly& b) {
    auto vars = Poly::merged_vars(a, b);
    Poly x = a.with_vars(vars);
    Poly y = b.with_vars(vars);
    return x.terms_ == y.terms_;
}

Poly Poly::derivative(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return Poly::constant(Rational(0), vars_);
    const std::size_t i = static_cast<std::size_t>(it - vars_.begin());
    Poly p;
    p.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exps ne = e;
        ne[i] -= 1;
        p.insert_term(ne, c * Rational(e[i]));
    }
    return p;
}

Poly Poly::substitute(const std::string& var, const Poly& value) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return *this;
    const std::size_t i = static_cast<std::size_t>(it - vars_.begin());

    // group by exponent of var, then Horner from the top power down
    std::map<int, Poly> groups;
    for (const auto& [e, c] : terms_) {
        Exps ne = e;
        ne[i] = 0;
        auto [git, fresh] = groups.emplace(e[i], Poly());
        if (fresh) git->second.vars_ = vars_;
        git->second.insert_term(ne, c);
    }
    if (groups.empty()) return Poly::constant(Rational(0), vars_);
    Poly acc;
    int prev = -1;
    for (auto git = groups.rbegin(); git != groups.rend(); ++git) {
        if (prev < 0) {
            acc = git->second;
        } else {
            for (int k = 0; k < prev - git->first; ++k) acc = acc * value;
            acc = acc + git->second;
        }
        prev = git->first;
    }
    for (int k = 0; k < prev; ++k) acc = acc * value;
    return acc;
}

Poly Poly::renamed(const std::map<std::string, std::string>& names) const {
    Poly p = *this;
    for (auto& v : p.vars_) {
        auto it = names.find(v);
        if (it != names.end()) v = it->second;
    }
    // positions (and with them the term order) are unchanged, only a clash
    // would invalidate the map
    std::vector<std::string> uniq = p.vars_;
    std::sort(uniq.begin(), uniq.end());
    if (std::adjacent_find(uniq.begin(), uniq.end()) != uniq.end())
        throw std::invalid_argument("renamed: name clash");
    return p;
}

Poly Poly::eval_partial(const std::map<std::string, Rational>& values) const {
    Poly p = *this;
    for (const auto& [v, r] : values) p = p.substitute(v, Poly(r));
    return p;
}

Rational Poly::eval(const std::map<std::string, Rational>& values) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = values.find(vars_[i]);
            if (it == values.end()) throw std::invalid_argument("eval: missing value for " + vars_[i]);
            t *= it->second.pow(e[i]);
        }
        acc += t;
    }
    return acc;
}

Poly Poly::coeff_of(const std::string& var, int k) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) {
        if (k == 0) return *this;
        return Poly::constant(Rational(0), vars_);
    }
    const std::size_t i = static_cast<std::size_t>(it - vars_.begin());
    Poly p;
    p.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[i] != k) continue;
        Exps ne = e;
        ne[i] = 0;
        p.terms_.emplace(std::move(ne), c);
    }
    return p;
}

std::vector<Poly> Poly::uni_coeffs(const std::string& var) const {
    const int d = std::max(degree(var), 0);
    std::vector<Poly> out;
    out.reserve(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) out.push_back(coeff_of(var, k));
    return out;
}

Rational Poly::content() const {
    Integer n(0), d(1);
    for (const auto& [e, c] : terms_) {
        n = gcd_int(n, c.num());
        d = lcm_int(d, c.den());
    }
    if (n == 0) return Rational(0);
    return Rational(n, d);
}

Poly Poly::primitive() const {
    if (terms_.empty()) return *this;
    Rational c = content();
    if (terms_.rbegin()->second.sign() < 0) c = -c;
    return scaled(c.inverse());
}

Poly Poly::normalized_leading() const {
    if (terms_.empty()) return *this;
    return scaled(leading_coeff().inverse());
}

std::pair<Poly::Exps, Rational> Poly::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
    return *terms_.rbegin();
}

Rational Poly::leading_coeff() const { return leading_term().second; }

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
    if (d.is_zero()) throw ArithmeticError("polynomial division by zero");
    auto vars = merged_vars(*this, d);
    Poly rem = with_vars(vars);
    Poly den = d.with_vars(vars);
    Poly q;
    q.vars_ = vars;
    const auto& [de, dc] = den.leading_term();
    while (!rem.is_zero()) {
        const auto& [re, rc] = rem.leading_term();
        Exps qe(vars.size());
        for (std::size_t i = 0; i < qe.size(); ++i) {
            qe[i] = re[i] - de[i];
            if (qe[i] < 0) return std::nullopt;
        }
        Poly t = Poly::monomial(vars, qe, rc / dc);
        q.insert_term(qe, rc / dc);
        rem = rem - t * den;
        if (!rem.is_zero()) {
            // leading terms must strictly descend, otherwise d cannot divide
            if (!GrlexLess{}(rem.leading_term().first, re)) return std::nullopt;
        }
    }
    return q;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool neg = c.sign() < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        const Rational a = c.abs();
        const bool is_const_term = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
        bool printed = false;
        if (!a.is_one() || is_const_term) {
            os << a.str();
            printed = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            printed = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

namespace {

// univariate view over Q used by the bivariate gcd below
using QVec = std::vector<Rational>;  // coefficient of x^i at index i

QVec qvec_trim(QVec v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
    return v;
}

QVec qvec_rem(QVec a, const QVec& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        a = qvec_trim(std::move(a));
    }
    return a;
}

QVec qvec_gcd(QVec a, QVec b) {
    a = qvec_trim(std::move(a));
    b = qvec_trim(std::move(b));
    while (!b.empty()) {
        QVec r = qvec_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

}  // namespace

Poly gcd_bivariate(const Poly& a, const Poly& b, const std::string& x, const std::string& y) {
    for (const Poly* p : {&a, &b}) {
        for (const auto& v : p->vars()) {
            if (v != x && v != y && p->depends_on(v))
                throw std::invalid_argument("gcd_bivariate: parameter symbols present");
        }
    }
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();

    // treat both as polynomials in y over Q[x]; pseudo-remainder Euclid with
    // content stripping keeps everything in Q[x][y]
    auto content_x = [&](const Poly& p) -> Poly {
        auto cs = p.uni_coeffs(y);
        QVec g;
        for (const auto& c : cs) {
            auto u = c.uni_coeffs(x);
            QVec q;
            for (const auto& t : u) q.push_back(t.constant_value());
            g = qvec_gcd(std::move(g), qvec_trim(std::move(q)));
        }
        Poly out = Poly::constant(Rational(0), p.vars());
        Poly xv = Poly::variable(x, {x});
        for (std::size_t i = 0; i < g.size(); ++i)
            out = out + xv.pow(static_cast<unsigned>(i)).scaled(g[i]);
        return out;
    };
    auto primitive_part = [&](const Poly& p) -> Poly {
        Poly c = content_x(p);
        auto q = p.divide_exact(c);
        return q ? q->primitive() : p.primitive();
    };

    if (!a.depends_on(y) && !b.depends_on(y)) {
        auto ua = a.uni_coeffs(x), ub = b.uni_coeffs(x);
        QVec qa, qb;
        for (const auto& t : ua) qa.push_back(t.constant_value());
        for (const auto& t : ub) qb.push_back(t.constant_value());
        QVec g = qvec_gcd(std::move(qa), std::move(qb));
        Poly out = Poly::constant(Rational(0), {x});
        Poly xv = Poly::variable(x, {x});
        for (std::size_t i = 0; i < g.size(); ++i)
            out = out + xv.pow(static_cast<unsigned>(i)).scaled(g[i]);
        return out.primitive();
    }

    Poly u = primitive_part(a), v = primitive_part(b);
    if (u.degree(y) < v.degree(y)) std::swap(u, v);
    while (!v.is_zero() && v.depends_on(y)) {
        // pseudo-remainder of u by v in y
        Poly r = u;
        const int dv = v.degree(y);
        const Poly lv = v.coeff_of(y, dv);
        while (!r.is_zero() && r.degree(y) >= dv) {
            const int dr = r.degree(y);
            const Poly lr = r.coeff_of(y, dr);
            Poly shift = Poly::variable(y, r.vars()).pow(static_cast<unsigned>(dr - dv));
            r = r * lv - v * lr * shift;
        }
        u = v;
        v = r.is_zero() ? r : primitive_part(r);
    }
    if (v.is_zero()) return primitive_part(u);
    // y-degree dropped to zero with a nonzero remainder: contents were already
    // stripped, so the gcd is constant
    return Poly::constant(Rational(1), a.vars());
}

}  // namespace darboux
