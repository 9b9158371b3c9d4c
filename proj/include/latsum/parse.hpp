#ifndef LATSUM_PARSE_HPP
#define LATSUM_PARSE_HPP

#include "latsum/laurent.hpp"

#include <stdexcept>
#include <string>

namespace latsum {

struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " at offset " + std::to_string(off)),
          offset(off) {}
};

/// Grammar: sum of terms; a term is '*'-separated factors, each an integer,
/// the generator symbol g (optionally g^int), a parenthesized integer
/// combination of generator powers, or var[^int].  Whitespace-insensitive.
/// Negative exponents are only allowed on the first torus_vars variables.
Laurent parse_poly(const std::string& text,
                   const std::vector<std::string>& varnames, const Fq& field,
                   std::size_t torus_vars);

/// Canonical form: terms in exponent order, coefficients as integers when
/// rational, otherwise as parenthesized g-polynomials.
std::string print_poly(const Laurent& f, const std::vector<std::string>& varnames,
                       const Fq& field);

} // namespace latsum

#endif
