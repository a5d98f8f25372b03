#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace darboux {

using Integer = boost::multiprecision::mpz_int;

class ArithmeticError : public std::runtime_error {
public:
    explicit ArithmeticError(const std::string& what) : std::runtime_error(what) {}
};

// Exact rational number. Canonical form at all times: gcd(|num|, den) = 1,
// den > 0, zero stored as 0/1. GMP's mpq arithmetic preserves canonical
// inputs, so only the constructors have to normalize.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit by design
    Rational(const Integer& n) : q_(n) {}
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw ArithmeticError("rational with zero denominator");
        q_ = Mpq(num);
        q_ /= Mpq(den);  // mpq division canonicalizes sign and gcd
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    // Accepts "p", "p/q", optional leading '-'.
    static Rational from_string(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(Integer(s));
        return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    }

    Integer num() const { return numerator(q_); }
    Integer den() const { return denominator(q_); }

    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return den() == 1; }
    int sign() const { return q_ < 0 ? -1 : (q_ > 0 ? 1 : 0); }

    Rational operator-() const { return Rational(Mpq(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ArithmeticError("rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational inverse() const {
        if (is_zero()) throw ArithmeticError("inverse of zero");
        return Rational(den(), num());
    }

    Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Rational r(1), base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    // Largest integer <= *this.
    Integer floor() const {
        Integer q, r;
        divide_qr(num(), den(), q, r);
        if (r != 0 && num() < 0) --q;
        return q;
    }
    Integer ceil() const { return -((-*this).floor()); }

    std::string str() const {
        std::string s = num().str();
        if (den() != 1) s += "/" + den().str();
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    using Mpq = boost::multiprecision::mpq_rational;
    explicit Rational(Mpq q) : q_(std::move(q)) {}
    Mpq q_;
};

inline Integer gcd_int(const Integer& a, const Integer& b) { return gcd(a, b); }
inline Integer lcm_int(const Integer& a, const Integer& b) { return lcm(a, b); }

}  // namespace darboux
