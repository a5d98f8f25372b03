#pragma once

#include <map>
#include <optional>
#include <stdexcept>

#include "darboux/poly.hpp"

namespace darboux {

class TruncationError : public std::runtime_error {
public:
    explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

// Finite sum of coeff * x^e with rational exponents and polynomial
// coefficients, plus optional truncation markers. Exponents at or below
// unknown_low (resp. at or above unknown_high) are untrusted: they stand for
// the unknown tail of a truncated series. The markers propagate through
// arithmetic, so reads of trusted coefficients stay exact certificates.
class XSeries {
public:
    XSeries() = default;
    explicit XSeries(const Poly& constant);
    static XSeries monomial(const Rational& exponent, const Poly& coeff);

    bool stored_zero() const { return t_.empty(); }
    bool is_exact() const { return !ul_ && !uh_; }
    const std::map<Rational, Poly>& terms() const { return t_; }

    std::optional<Rational> unknown_low() const { return ul_; }
    std::optional<Rational> unknown_high() const { return uh_; }
    void mark_unknown_low(const Rational& e);
    void mark_unknown_high(const Rational& e);

    // Highest/lowest exponent that could carry a nonzero coefficient.
    std::optional<Rational> effective_high() const;
    std::optional<Rational> effective_low() const;

    // Trusted coefficient at e (zero if absent); throws in unknown regions.
    Poly coeff(const Rational& e) const;
    bool trusted(const Rational& e) const;

    void add_term(const Rational& e, const Poly& c);

    XSeries operator-() const;
    friend XSeries operator+(const XSeries& a, const XSeries& b);
    friend XSeries operator-(const XSeries& a, const XSeries& b);
    friend XSeries operator*(const XSeries& a, const XSeries& b);

    XSeries scaled(const Poly& c) const;
    XSeries shifted(const Rational& e) const;  // multiply by x^e
    XSeries pow(unsigned k) const;
    XSeries derivative() const;  // d/dx

    std::string str() const;

private:
    void drop_untrusted();

    std::map<Rational, Poly> t_;
    std::optional<Rational> ul_;  // unknown at exponents <= ul_
    std::optional<Rational> uh_;  // unknown at exponents >= uh_
};

}  // namespace darboux
