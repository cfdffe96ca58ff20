#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace cellkit {

using Int = boost::multiprecision::cpp_int;

/// Exact integer-coefficient Laurent polynomial in the indeterminate v.
///
/// Terms are stored sparsely, ordered by ascending exponent, with no zero
/// coefficients; the zero polynomial has an empty term list. All operations
/// return normalized values.
class LaurentPoly {
public:
  using Term = std::pair<std::int32_t, Int>;  // (exponent, coefficient)

  LaurentPoly() = default;
  /// Builds sum of c*v^e from (e, c) pairs; repeated exponents accumulate.
  LaurentPoly(std::initializer_list<Term> terms);

  static LaurentPoly constant(Int c);
  static LaurentPoly monomial(Int c, std::int32_t exp);
  static LaurentPoly v_pow(std::int32_t exp);  // v^exp

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of v^exp (zero when absent).
  const Int& coeff(std::int32_t exp) const;
  std::int32_t min_exp() const;  // valuation; polynomial must be nonzero
  std::int32_t max_exp() const;  // degree;    polynomial must be nonzero
  const std::vector<Term>& terms() const { return terms_; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& g);
  LaurentPoly& operator-=(const LaurentPoly& g);
  friend LaurentPoly operator+(LaurentPoly f, const LaurentPoly& g) { return f += g; }
  friend LaurentPoly operator-(LaurentPoly f, const LaurentPoly& g) { return f -= g; }
  friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);

  /// this += v^shift * f
  void add_shifted(const LaurentPoly& f, std::int32_t shift);
  /// this -= f * g
  void sub_mul(const LaurentPoly& f, const LaurentPoly& g);

  /// Bar involution v -> v^{-1}.
  LaurentPoly bar() const;
  /// Multiplication by v^k.
  LaurentPoly shifted(std::int32_t k) const;

  bool operator==(const LaurentPoly&) const = default;

  /// Rendering with exponents descending, e.g. "v^2 - 3 + v^-2"; "0" for zero.
  std::string to_string() const;

  std::size_t hash() const;

private:
  std::vector<Term> terms_;

  void normalize();
};

/// The unique bar-invariant polynomial congruent to q modulo strictly
/// negative powers of v: for q = sum a_i v^i this is
/// a_0 + sum_{i>0} a_i (v^i + v^{-i}).
LaurentPoly symmetric_completion(const LaurentPoly& q);

}  // namespace cellkit
