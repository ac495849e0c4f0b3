#pragma once

#include <bsfan/dop.hpp>
#include <bsfan/order.hpp>
#include <bsfan/polynomial.hpp>
#include <bsfan/signature.hpp>

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bsfan {

/// Parse tree of the operator grammar:
///
///   expr  := term (('+' | '-') term)*
///   term  := unary (('*' | '/') unary)*
///   unary := '-' unary | power
///   power := atom ('^' INT)?
///   atom  := NUMBER | IDENT | '(' expr ')'
///
/// Multiplication is noncommutative and kept left to right.
struct Expr {
  enum class Kind { number, variable, add, sub, mul, div, neg, pow };

  Kind kind = Kind::number;
  Rational value = 0;
  std::string name;
  unsigned exponent = 0;
  std::size_t position = 0;
  std::vector<std::unique_ptr<Expr>> args;
};

/// Throws ParseError.
std::unique_ptr<Expr> parse_expression(std::string_view text);

/// Variables x1..xn, t1..tp, dx1..dxn, dt1..dtp and z (homogenized ring only).
/// Division is allowed by nonzero constants only.
DOp parse_operator(std::string_view text, RingSignature sig);

/// Commutative polynomial over the given variable names.
Polynomial parse_polynomial(std::string_view text, std::span<const std::string> names);

/// "x1", "dt2", ... for the variable layout of sig (z last).
std::vector<std::string> variable_names(RingSignature sig);

/// Canonical text: terms descending under ord (base0 when absent), no spaces,
/// coefficients in lowest terms, e.g. "x1*dx1+z" or "-3/4*x1^2". Zero prints "0".
std::string format_operator(const DOp& p, const std::optional<OrderDescriptor>& ord = std::nullopt);

/// Names "x1".."xn".
std::vector<std::string> x_names(int n);
/// Names "s1".."sp".
std::vector<std::string> s_names(int p);

}  // namespace bsfan
