#pragma once

#include <string>
#include <utility>
#include <vector>

#include "darboux/poly.hpp"

namespace darboux {

// Dense univariate polynomial in a named symbol whose coefficients are
// polynomials in the remaining symbols (plain rationals in the
// parameter-free case).
class UniPoly {
public:
    explicit UniPoly(std::string var) : var_(std::move(var)) {}
    UniPoly(std::string var, std::vector<Poly> coeffs);

    static UniPoly from_poly(const Poly& p, const std::string& var);
    static UniPoly from_rationals(const std::string& var, const std::vector<Rational>& coeffs);

    const std::string& var() const { return var_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const Poly& coeff(int i) const;
    const Poly& lead() const;

    // True when every coefficient is a rational constant.
    bool is_rational() const;
    std::vector<Rational> rational_coeffs() const;

    Poly to_poly() const;
    UniPoly derivative() const;
    Poly eval(const Poly& value) const;
    Rational eval_rational(const Rational& value) const;

    UniPoly scaled(const Rational& c) const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b);

    std::string str() const { return to_poly().str(); }

private:
    void trim();

    std::string var_;
    std::vector<Poly> c_;  // coefficient of var^i at index i
};

// Determinant of the Sylvester matrix with a's coefficient rows first.
// res(x-1, x-2) = -1 under this convention.
Poly resultant(const UniPoly& a, const UniPoly& b);

// Fraction-free (Bareiss) determinant of a square polynomial matrix.
Poly bareiss_determinant(std::vector<std::vector<Poly>> m);

struct RootWithMult {
    Rational root;
    int multiplicity;
};

// All rational roots of a non-zero parameter-free polynomial, with
// multiplicities, in increasing root order. Complete: based on exact real
// root isolation (Sturm chains), not on divisor enumeration.
std::vector<RootWithMult> rational_roots(const UniPoly& p);

// Euclidean division over rational coefficients: a = q*b + r, deg r < deg b.
std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& a, const UniPoly& b);

// Monic gcd over rational coefficients.
UniPoly uni_gcd(const UniPoly& a, const UniPoly& b);

// p / gcd(p, p'), primitive with positive leading coefficient.
UniPoly squarefree_part(const UniPoly& p);

// Reduces every power theta^k (theta = defining.var()) modulo the defining
// polynomial, which must have rational coefficients and degree >= 1.
Poly reduce_mod(const Poly& p, const UniPoly& defining);

}  // namespace darboux
