#include "darboux/unipoly.hpp"

#include <algorithm>
#include <cassert>

namespace darboux {

UniPoly::UniPoly(std::string var, std::vector<Poly> coeffs)
    : var_(std::move(var)), c_(std::move(coeffs)) {
    trim();
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::from_poly(const Poly& p, const std::string& var) {
    return UniPoly(var, p.uni_coeffs(var));
}

UniPoly UniPoly::from_rationals(const std::string& var, const std::vector<Rational>& coeffs) {
    std::vector<Poly> c;
    c.reserve(coeffs.size());
    for (const auto& r : coeffs) c.emplace_back(r);
    return UniPoly(var, std::move(c));
}

const Poly& UniPoly::coeff(int i) const {
    static const Poly zero;
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<std::size_t>(i)];
}

const Poly& UniPoly::lead() const {
    if (c_.empty()) throw std::logic_error("lead of zero polynomial");
    return c_.back();
}

bool UniPoly::is_rational() const {
    return std::all_of(c_.begin(), c_.end(), [](const Poly& p) { return p.is_constant(); });
}

std::vector<Rational> UniPoly::rational_coeffs() const {
    std::vector<Rational> out;
    out.reserve(c_.size());
    for (const auto& p : c_) out.push_back(p.constant_value());
    return out;
}

Poly UniPoly::to_poly() const {
    Poly acc;
    Poly xv = Poly::variable(var_, {var_});
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        acc = acc + c_[i] * xv.pow(static_cast<unsigned>(i));
    }
    if (acc.is_zero()) acc = Poly::constant(Rational(0), {var_});
    return acc;
}

UniPoly UniPoly::derivative() const {
    std::vector<Poly> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i].scaled(Rational(static_cast<long>(i))));
    return UniPoly(var_, std::move(d));
}

Poly UniPoly::eval(const Poly& value) const {
    Poly acc;
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = acc * value + c_[i];
    }
    return acc;
}

Rational UniPoly::eval_rational(const Rational& value) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = acc * value + c_[i].constant_value();
    }
    return acc;
}

UniPoly UniPoly::scaled(const Rational& k) const {
    std::vector<Poly> c;
    c.reserve(c_.size());
    for (const auto& p : c_) c.push_back(p.scaled(k));
    return UniPoly(var_, std::move(c));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Poly> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] = c[i] + a.c_[i];
        if (i < b.c_.size()) c[i] = c[i] + b.c_[i];
    }
    return UniPoly(a.var_, std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + b.scaled(Rational(-1)); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.var_);
    std::vector<Poly> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return UniPoly(a.var_, std::move(c));
}

bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] != b.c_[i]) return false;
    }
    return true;
}

Poly bareiss_determinant(std::vector<std::vector<Poly>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Poly(Rational(1));
    int sign = 1;
    Poly prev(Rational(1));
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (m[i][i].is_zero()) {
            std::size_t piv = i + 1;
            while (piv < n && m[piv][i].is_zero()) ++piv;
            if (piv == n) return Poly();  // singular
            std::swap(m[i], m[piv]);
            sign = -sign;
        }
        for (std::size_t r = i + 1; r < n; ++r) {
            for (std::size_t c = i + 1; c < n; ++c) {
                Poly num = m[i][i] * m[r][c] - m[r][i] * m[i][c];
                auto q = num.divide_exact(prev);
                assert(q && "Bareiss division must be exact");
                m[r][c] = *q;
            }
            m[r][i] = Poly();
        }
        prev = m[i][i];
    }
    Poly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

Poly resultant(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("resultant of zero polynomial");
    if (a.var() != b.var()) throw std::invalid_argument("resultant: variable mismatch");
    const int da = a.degree(), db = b.degree();
    if (da == 0 && db == 0) return Poly(Rational(1));
    const std::size_t n = static_cast<std::size_t>(da + db);
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (int r = 0; r < db; ++r) {
        for (int k = 0; k <= da; ++k) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = a.coeff(da - k);
    }
    for (int r = 0; r < da; ++r) {
        for (int k = 0; k <= db; ++k)
            m[static_cast<std::size_t>(db + r)][static_cast<std::size_t>(r + k)] = b.coeff(db - k);
    }
    return bareiss_determinant(std::move(m));
}

std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw ArithmeticError("univariate division by zero");
    if (!a.is_rational() || !b.is_rational())
        throw std::invalid_argument("uni_divmod requires rational coefficients");
    std::vector<Rational> r = a.rational_coeffs();
    const std::vector<Rational> d = b.rational_coeffs();
    std::vector<Rational> q;
    if (r.size() >= d.size()) q.assign(r.size() - d.size() + 1, Rational(0));
    while (r.size() >= d.size() && !r.empty()) {
        Rational f = r.back() / d.back();
        const std::size_t off = r.size() - d.size();
        q[off] = f;
        for (std::size_t i = 0; i < d.size(); ++i) r[off + i] -= f * d[i];
        while (!r.empty() && r.back().is_zero()) r.pop_back();
    }
    return {UniPoly::from_rationals(a.var(), q), UniPoly::from_rationals(a.var(), r)};
}

UniPoly uni_gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly u = a, v = b;
    while (!v.is_zero()) {
        UniPoly r = uni_divmod(u, v).second;
        u = v;
        v = r;
    }
    if (!u.is_zero()) u = u.scaled(u.lead().constant_value().inverse());
    return u;
}

UniPoly squarefree_part(const UniPoly& p) {
    UniPoly g = uni_gcd(p, p.derivative());
    if (g.degree() <= 0) {
        UniPoly out = p;
        return out.scaled(p.lead().constant_value().inverse());
    }
    auto [q, r] = uni_divmod(p, g);
    assert(r.is_zero());
    return q.scaled(q.lead().constant_value().inverse());
}

namespace {

// ---- exact real root isolation over Q (parameter-free) ----

using QVec = std::vector<Rational>;

Rational qeval(const QVec& p, const Rational& x) {
    Rational acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

int sign_variations(const std::vector<QVec>& chain, const Rational& x) {
    int prev = 0, var = 0;
    for (const auto& p : chain) {
        const int s = qeval(p, x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

std::vector<QVec> sturm_chain(const QVec& p) {
    auto trim = [](QVec v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
        return v;
    };
    auto rem = [&](QVec a, const QVec& b) {
        while (a.size() >= b.size() && !a.empty()) {
            Rational f = a.back() / b.back();
            const std::size_t off = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
            a = trim(std::move(a));
        }
        return a;
    };
    std::vector<QVec> chain;
    chain.push_back(p);
    QVec d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
    d = trim(std::move(d));
    if (d.empty()) return chain;
    chain.push_back(d);
    for (;;) {
        QVec r = rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

// Rational with the smallest denominator in the closed interval [lo, hi].
Rational simplest_in(const Rational& lo, const Rational& hi) {
    if (hi < lo) return simplest_in(hi, lo);
    if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
    if (hi.sign() < 0) return -simplest_in(-hi, -lo);
    const Integer fl = lo.floor();
    if (lo.is_integer()) return lo;
    const Integer fl1 = fl + 1;
    if (Rational(fl1) <= hi) return Rational(fl1);
    const Rational f = simplest_in((hi - Rational(fl)).inverse(), (lo - Rational(fl)).inverse());
    return Rational(fl) + f.inverse();
}

void isolate(const std::vector<QVec>& chain, const QVec& s, const Rational& lo, const Rational& hi,
             int count, const Rational& width_goal, std::vector<Rational>& exact_hits,
             std::vector<std::pair<Rational, Rational>>& intervals) {
    if (count <= 0) return;
    if (count == 1 && hi - lo < width_goal) {
        intervals.emplace_back(lo, hi);
        return;
    }
    const Rational mid = (lo + hi) / Rational(2);
    if (qeval(s, mid).is_zero()) {
        exact_hits.push_back(mid);
        return;  // caller deflates and restarts
    }
    const int left = sign_variations(chain, lo) - sign_variations(chain, mid);
    isolate(chain, s, lo, mid, left, width_goal, exact_hits, intervals);
    if (!exact_hits.empty()) return;
    isolate(chain, s, mid, hi, count - left, width_goal, exact_hits, intervals);
}

// Rational roots of a squarefree rational-coefficient vector.
std::vector<Rational> squarefree_rational_roots(const QVec& s) {
    std::vector<Rational> roots;
    if (s.size() <= 1) return roots;
    QVec cur = s;
    for (;;) {
        if (cur.size() <= 1) break;
        if (cur.size() == 2) {  // linear: -c0/c1
            roots.push_back(-cur[0] / cur[1]);
            break;
        }
        // primitive integer form fixes the denominator bound of any rational root
        Integer den_lcm(1);
        for (const auto& c : cur) den_lcm = lcm_int(den_lcm, c.den());
        Integer content(0);
        for (const auto& c : cur) content = gcd_int(content, c.num() * (den_lcm / c.den()));
        const Integer lead_int = (cur.back().num() * (den_lcm / cur.back().den())) / content;
        const Integer lead_abs = abs(lead_int);
        const Rational vmax(lead_abs);
        const Rational width_goal = (Rational(4) * vmax * vmax + Rational(4)).inverse();

        Rational bound(1);
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            Rational m = (cur[i] / cur.back()).abs();
            if (m > bound) bound = m;
        }
        bound = bound + Rational(1);
        if (!qeval(cur, bound).is_zero() && !qeval(cur, -bound).is_zero()) {
            // bound is strict for all roots by the Cauchy estimate
        }

        auto chain = sturm_chain(cur);
        const int total = sign_variations(chain, -bound) - sign_variations(chain, bound);
        std::vector<Rational> hits;
        std::vector<std::pair<Rational, Rational>> intervals;
        isolate(chain, cur, -bound, bound, total, width_goal, hits, intervals);
        if (!hits.empty()) {
            const Rational r = hits.front();
            roots.push_back(r);
            // deflate and restart: cur /= (x - r)
            QVec next(cur.size() - 1);
            Rational carry = cur.back();
            for (std::size_t i = cur.size() - 1; i-- > 0;) {
                next[i] = carry;
                carry = cur[i] + carry * r;
            }
            assert(carry.is_zero());
            cur = std::move(next);
            continue;
        }
        for (const auto& [lo, hi] : intervals) {
            const Rational cand = simplest_in(lo, hi);
            if (qeval(cur, cand).is_zero()) {
                roots.push_back(cand);
                QVec next(cur.size() - 1);
                Rational carry = cur.back();
                for (std::size_t i = cur.size() - 1; i-- > 0;) {
                    next[i] = carry;
                    carry = cur[i] + carry * cand;
                }
                assert(carry.is_zero());
                cur = std::move(next);
                goto deflated;
            }
        }
        break;  // remaining roots are irrational
    deflated:;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace

std::vector<RootWithMult> rational_roots(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots of zero polynomial");
    if (!p.is_rational()) throw std::invalid_argument("rational_roots requires parameter-free input");
    QVec v = [&] {
        QVec out;
        for (const auto& r : p.rational_coeffs()) out.push_back(r);
        return out;
    }();

    std::vector<RootWithMult> out;
    // strip the root at zero first
    std::size_t zmult = 0;
    while (zmult < v.size() && v[zmult].is_zero()) ++zmult;
    if (zmult > 0) {
        v.erase(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(zmult));
        out.push_back({Rational(0), static_cast<int>(zmult)});
    }
    if (v.size() <= 1) {
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.root < b.root; });
        return out;
    }

    UniPoly stripped = UniPoly::from_rationals(p.var(), v);
    UniPoly sf = squarefree_part(stripped);
    QVec sfv;
    for (const auto& r : sf.rational_coeffs()) sfv.push_back(r);

    for (const auto& r : squarefree_rational_roots(sfv)) {
        // multiplicity by repeated deflation of the stripped polynomial
        QVec cur = v;
        int mult = 0;
        for (;;) {
            if (!qeval(cur, r).is_zero()) break;
            QVec next(cur.size() - 1);
            Rational carry = cur.back();
            for (std::size_t i = cur.size() - 1; i-- > 0;) {
                next[i] = carry;
                carry = cur[i] + carry * r;
            }
            cur = std::move(next);
            ++mult;
            if (cur.size() <= 1) break;
        }
        if (r.is_zero()) continue;  // already collected
        out.push_back({r, mult});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.root < b.root; });
    return out;
}

Poly reduce_mod(const Poly& p, const UniPoly& defining) {
    if (defining.degree() < 1) throw std::invalid_argument("reduce_mod: defining degree < 1");
    if (!defining.is_rational()) throw std::invalid_argument("reduce_mod: defining must be rational");
    const std::string& th = defining.var();
    const int dp = p.degree(th);
    const int dd = defining.degree();
    if (dp < dd) return p;

    // table of theta^k mod defining, rational coefficient vectors
    const std::vector<Rational> def = defining.rational_coeffs();
    std::vector<std::vector<Rational>> powtab;
    std::vector<Rational> cur(static_cast<std::size_t>(dd), Rational(0));
    cur[0] = Rational(1);
    powtab.push_back(cur);
    for (int k = 1; k <= dp; ++k) {
        std::vector<Rational> nxt(static_cast<std::size_t>(dd), Rational(0));
        for (int i = 0; i + 1 < dd; ++i) nxt[static_cast<std::size_t>(i + 1)] = cur[static_cast<std::size_t>(i)];
        const Rational top = cur[static_cast<std::size_t>(dd - 1)];
        if (!top.is_zero()) {
            const Rational f = top / def[static_cast<std::size_t>(dd)];
            for (int i = 0; i < dd; ++i) nxt[static_cast<std::size_t>(i)] -= f * def[static_cast<std::size_t>(i)];
        }
        powtab.push_back(nxt);
        cur = powtab.back();
    }

    Poly acc;
    Poly tv = Poly::variable(th, {th});
    for (int k = 0; k <= dp; ++k) {
        Poly ck = p.coeff_of(th, k);
        if (ck.is_zero()) continue;
        for (int i = 0; i < dd; ++i) {
            const Rational& w = powtab[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
            if (w.is_zero()) continue;
            acc = acc + ck.scaled(w) * tv.pow(static_cast<unsigned>(i));
        }
    }
    return acc.with_vars(Poly::merged_vars(acc, p));
}

}  // namespace darboux
