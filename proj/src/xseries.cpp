#include "darboux/xseries.hpp"

#include <sstream>

namespace darboux {

XSeries::XSeries(const Poly& constant) {
    if (!constant.is_zero()) t_.emplace(Rational(0), constant);
}

XSeries XSeries::monomial(const Rational& e, const Poly& c) {
    XSeries s;
    if (!c.is_zero()) s.t_.emplace(e, c);
    return s;
}

void XSeries::mark_unknown_low(const Rational& e) {
    if (!ul_ || *ul_ < e) ul_ = e;
    drop_untrusted();
}

void XSeries::mark_unknown_high(const Rational& e) {
    if (!uh_ || *uh_ > e) uh_ = e;
    drop_untrusted();
}

void XSeries::drop_untrusted() {
    if (ul_) {
        auto it = t_.begin();
        while (it != t_.end() && it->first <= *ul_) it = t_.erase(it);
    }
    if (uh_) {
        auto it = t_.lower_bound(*uh_);
        t_.erase(it, t_.end());
    }
    if (ul_ && uh_ && *uh_ <= *ul_) throw TruncationError("series truncated away entirely");
}

std::optional<Rational> XSeries::effective_high() const {
    std::optional<Rational> h;
    if (!t_.empty()) h = t_.rbegin()->first;
    if (ul_ && (!h || *ul_ > *h)) h = *ul_;
    // an unknown_high region is unbounded above only notionally; arithmetic
    // below never needs its supremum because mixing directions is rejected
    return h;
}

std::optional<Rational> XSeries::effective_low() const {
    std::optional<Rational> l;
    if (!t_.empty()) l = t_.begin()->first;
    if (uh_ && (!l || *uh_ < *l)) l = *uh_;
    return l;
}

bool XSeries::trusted(const Rational& e) const {
    if (ul_ && e <= *ul_) return false;
    if (uh_ && e >= *uh_) return false;
    return true;
}

Poly XSeries::coeff(const Rational& e) const {
    if (!trusted(e)) throw TruncationError("coefficient at x^" + e.str() + " lies in the truncated tail");
    auto it = t_.find(e);
    return it == t_.end() ? Poly() : it->second;
}

void XSeries::add_term(const Rational& e, const Poly& c) {
    if (c.is_zero() || !trusted(e)) return;
    auto [it, fresh] = t_.emplace(e, c);
    if (!fresh) {
        it->second = it->second + c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

XSeries XSeries::operator-() const {
    XSeries r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
}

XSeries operator+(const XSeries& a, const XSeries& b) {
    XSeries r = a;
    if (b.ul_) r.mark_unknown_low(*b.ul_);
    if (b.uh_) r.mark_unknown_high(*b.uh_);
    for (const auto& [e, c] : b.t_) r.add_term(e, c);
    return r;
}

XSeries operator-(const XSeries& a, const XSeries& b) { return a + (-b); }

XSeries operator*(const XSeries& a, const XSeries& b) {
    if ((a.ul_ && b.uh_) || (a.uh_ && b.ul_))
        throw TruncationError("mixing descending and ascending truncations");
    XSeries r;
    if (a.stored_zero() && a.is_exact()) return r;
    if (b.stored_zero() && b.is_exact()) return r;
    if (a.ul_ || b.ul_) {
        // unknown tail of one factor times the highest reachable exponent of
        // the other bounds where the product stops being trustworthy
        std::optional<Rational> m;
        if (a.ul_) {
            auto h = b.effective_high();
            if (h) m = *a.ul_ + *h;
        }
        if (b.ul_) {
            auto h = a.effective_high();
            if (h) {
                Rational v = *b.ul_ + *h;
                if (!m || v > *m) m = v;
            }
        }
        if (m) r.ul_ = *m;
    }
    if (a.uh_ || b.uh_) {
        std::optional<Rational> m;
        if (a.uh_) {
            auto l = b.effective_low();
            if (l) m = *a.uh_ + *l;
        }
        if (b.uh_) {
            auto l = a.effective_low();
            if (l) {
                Rational v = *b.uh_ + *l;
                if (!m || v < *m) m = v;
            }
        }
        if (m) r.uh_ = *m;
    }
    for (const auto& [ea, ca] : a.t_) {
        for (const auto& [eb, cb] : b.t_) {
            const Rational e = ea + eb;
            if (!r.trusted(e)) continue;
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

XSeries XSeries::scaled(const Poly& c) const {
    if (c.is_zero()) return XSeries();
    XSeries r;
    r.ul_ = ul_;
    r.uh_ = uh_;
    for (const auto& [e, k] : t_) r.t_.emplace(e, k * c);
    return r;
}

XSeries XSeries::shifted(const Rational& e) const {
    XSeries r;
    if (ul_) r.ul_ = *ul_ + e;
    if (uh_) r.uh_ = *uh_ + e;
    for (const auto& [k, c] : t_) r.t_.emplace(k + e, c);
    return r;
}

XSeries XSeries::pow(unsigned k) const {
    XSeries r(Poly(Rational(1)));
    XSeries base = *this;
    while (k > 0) {
        if (k & 1u) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

XSeries XSeries::derivative() const {
    XSeries r;
    if (ul_) r.ul_ = *ul_ - Rational(1);
    if (uh_) r.uh_ = *uh_ - Rational(1);
    for (const auto& [e, c] : t_) {
        if (e.is_zero()) continue;
        r.t_.emplace(e - Rational(1), c.scaled(e));
    }
    return r;
}

std::string XSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        if (!first) os << " + ";
        os << "(" << it->second.str() << ")*x^(" << it->first.str() << ")";
        first = false;
    }
    if (first) os << "0";
    if (ul_) os << " + O(x^" << ul_->str() << ")";
    if (uh_) os << " + O(x^" << uh_->str() << ")";
    return os.str();
}

}  // namespace darboux
