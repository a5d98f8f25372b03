#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "darboux/poly.hpp"

namespace darboux {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// Parses an arithmetic expression over the declared symbols with
// +, -, *, /, ^, integer literals and parentheses. '/' is restricted to
// division by a nonzero rational constant subexpression, '^' to non-negative
// integer exponents. The result is the canonical expanded form in the
// declared variable context; round-trips with Poly::str().
Poly parse_poly(const std::string& text, const std::vector<std::string>& variables);

}  // namespace darboux
