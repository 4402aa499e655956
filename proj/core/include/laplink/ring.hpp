#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "laplink/errors.hpp"

namespace laplink {

using BigInt = boost::multiprecision::cpp_int;

/// Coefficient ring for a closed oriented surface of genus g:
/// Z[x1^{+-1}, y1^{+-1}, ..., xg^{+-1}, yg^{+-1}].
///
/// Variables are ordered x1, y1, x2, y2, ... and the order is shared by every
/// value built over the set. For g <= 2 the display names are x, y, u, v;
/// the indexed spellings are always accepted on input.
class VariableSet {
 public:
  VariableSet() = default;
  explicit VariableSet(int genus);

  int genus() const { return genus_; }
  int count() const { return 2 * genus_; }

  std::string name(int index) const;
  std::optional<int> index_of(std::string_view name) const;

  bool operator==(const VariableSet&) const = default;

 private:
  int genus_ = 0;
};

/// Element of the deck group of the universal abelian cover: an exponent
/// vector of length 2g, written multiplicatively. Componentwise addition is
/// the group law, the zero vector is the identity.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int var_count) : exp_(static_cast<size_t>(var_count), 0) {}
  static Monomial from_exponents(std::vector<std::int32_t> exps);

  int var_count() const { return static_cast<int>(exp_.size()); }
  std::int32_t exponent(int i) const { return exp_[static_cast<size_t>(i)]; }
  const std::vector<std::int32_t>& exponents() const { return exp_; }
  bool is_identity() const;

  Monomial operator*(const Monomial& other) const;  // exponent addition, overflow-checked
  Monomial inverse() const;
  Monomial pow(std::int32_t k) const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<std::int32_t> exp_;
};

/// Strict total order used for canonical rendering and leading terms:
/// total absolute degree ascending, then variable-major with the larger
/// |exponent| first and positive before negative. Renders the constant term
/// first, then x, x^-1, y, y^-1, ...
bool canonical_term_less(const Monomial& a, const Monomial& b);

/// Finite integer combination of monomials. Immutable value type; no stored
/// coefficient is zero and the empty term map is the zero polynomial.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(VariableSet vars) : vars_(vars) {}
  static LaurentPoly constant(VariableSet vars, BigInt c);
  static LaurentPoly term(VariableSet vars, Monomial m, BigInt c);

  const VariableSet& vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, BigInt>& terms() const { return terms_; }
  BigInt coeff(const Monomial& m) const;

  LaurentPoly operator+(const LaurentPoly& other) const;
  LaurentPoly operator-(const LaurentPoly& other) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& other) const;

  bool operator==(const LaurentPoly&) const = default;

  /// Replace every monomial by its inverse; a ring involution.
  LaurentPoly bar() const;

  /// Evaluation at all variables = 1: the sum of the coefficients.
  BigInt augment() const;

  /// Ring homomorphism sending variable i to images[i]; a monomial maps to
  /// the product of the variable images raised to its exponents.
  LaurentPoly substitute(std::span<const Monomial> images) const;

  /// Multiply by -1 if the coefficient of the leading canonical term is
  /// negative, so the result is a fixed representative of {p, -p}.
  LaurentPoly sign_normalized() const;

  /// Deterministic canonical rendering; parse() round-trips it.
  std::string str() const;

  /// Parse `term ((+|-) term)*` with term = `[int] (var^int)*`.
  static LaurentPoly parse(VariableSet vars, std::string_view text);

 private:
  VariableSet vars_;
  std::map<Monomial, BigInt> terms_;
};

std::string monomial_str(const VariableSet& vars, const Monomial& m);
Monomial parse_monomial(const VariableSet& vars, std::string_view text);

}  // namespace laplink
