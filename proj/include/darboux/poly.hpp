#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "darboux/rational.hpp"

namespace darboux {

class DegreeCapError : public std::runtime_error {
public:
    explicit DegreeCapError(const std::string& what) : std::runtime_error(what) {}
};

// Per-variable degree guard for runaway expansions. Thread-local knob; use
// ScopedDegreeCap around heavy eliminations.
int degree_cap();
void set_degree_cap(int cap);

class ScopedDegreeCap {
public:
    explicit ScopedDegreeCap(int cap) : old_(degree_cap()) { set_degree_cap(cap); }
    ~ScopedDegreeCap() { set_degree_cap(old_); }
    ScopedDegreeCap(const ScopedDegreeCap&) = delete;
    ScopedDegreeCap& operator=(const ScopedDegreeCap&) = delete;

private:
    int old_;
};

// Sparse multivariate polynomial over Q in an ordered list of named symbols.
// Term order is graded lex with later variables ranking higher, i.e. for the
// context (x, y, a) we have x < y < a. Values are immutable in spirit: every
// operation returns a fresh polynomial.
class Poly {
public:
    using Exps = std::vector<int>;

    struct GrlexLess {
        bool operator()(const Exps& a, const Exps& b) const;
    };

    using TermMap = std::map<Exps, Rational, GrlexLess>;

    Poly() = default;  // zero in the empty context
    explicit Poly(const Rational& c);

    static Poly constant(const Rational& c, std::vector<std::string> vars);
    static Poly variable(const std::string& name);
    static Poly variable(const std::string& name, std::vector<std::string> vars);
    static Poly monomial(std::vector<std::string> vars, Exps exps, const Rational& coeff);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant value of a constant polynomial (throws otherwise).
    Rational constant_value() const;
    // The constant coefficient (zero exponent vector), zero if absent.
    Rational constant_term() const;

    int degree(const std::string& var) const;  // -1 for the zero polynomial
    int total_degree() const;                  // -1 for the zero polynomial
    bool depends_on(const std::string& var) const { return degree(var) > 0; }

    // Context manipulation. with_vars extends/reorders to a superset.
    Poly with_vars(const std::vector<std::string>& vars) const;
    static std::vector<std::string> merged_vars(const Poly& a, const Poly& b);

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    Poly scaled(const Rational& c) const;
    friend Poly operator*(const Rational& c, const Poly& p) { return p.scaled(c); }
    friend Poly operator*(const Poly& p, const Rational& c) { return p.scaled(c); }

    Poly pow(unsigned e) const;

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative(const std::string& var) const;
    // Substitutes value for var; the result context is the union.
    Poly substitute(const std::string& var, const Poly& value) const;
    // Simultaneous variable renaming.
    Poly renamed(const std::map<std::string, std::string>& names) const;
    // Substitutes rational constants for the listed variables.
    Poly eval_partial(const std::map<std::string, Rational>& values) const;
    // Full evaluation; every variable of the context must be assigned.
    Rational eval(const std::map<std::string, Rational>& values) const;

    // Coefficient of var^k, with var's exponent zeroed in the result.
    Poly coeff_of(const std::string& var, int k) const;
    // Dense coefficient list 0..degree(var).
    std::vector<Poly> uni_coeffs(const std::string& var) const;

    // Positive gcd of all coefficients (0 for the zero polynomial).
    Rational content() const;
    // this / content, sign fixed so the grlex-leading coefficient is positive.
    Poly primitive() const;
    // this / leading coefficient (grlex-leading coefficient becomes 1).
    Poly normalized_leading() const;

    std::pair<Exps, Rational> leading_term() const;  // throws on zero
    Rational leading_coeff() const;

    // Exact division: returns q with *this == q * d, or nullopt.
    std::optional<Poly> divide_exact(const Poly& d) const;

    std::string str() const;

private:
    void insert_term(const Exps& e, const Rational& c);
    static void check_cap(const Exps& e);

    std::vector<std::string> vars_;
    TermMap terms_;

    friend class PolyBuilder;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

Poly pow(const Poly& p, unsigned e);

// Gcd of two parameter-free polynomials in the two given variables,
// primitive and sign-normalized. Constant gcd is returned as 1.
Poly gcd_bivariate(const Poly& a, const Poly& b, const std::string& x, const std::string& y);

}  // namespace darboux
