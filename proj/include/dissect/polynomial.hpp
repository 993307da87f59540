#pragma once

#include <utility>
#include <vector>

#include "dissect/matrix.hpp"
#include "dissect/rational.hpp"

namespace dissect {

/// Univariate polynomial over the rationals, coefficients low to high,
/// no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Polynomial constant(const Rational& a) { return Polynomial({a}); }
  /// t - a
  static Polynomial linear_root(const Rational& a) { return Polynomial({-a, 1}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& s) const;
  bool operator==(const Polynomial& o) const = default;

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
  bool divides(const Polynomial& p) const;

  Polynomial derivative() const;
  Polynomial monic() const;
  Rational eval(const Rational& x) const;
  Matrix eval(const Matrix& m) const;

  std::string str() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

Polynomial gcd(const Polynomial& a, const Polynomial& b);

Polynomial char_poly(const Matrix& m);
Polynomial min_poly(const Matrix& m);

/// True iff gcd(p, p') is constant.
bool squarefree(const Polynomial& p);

/// Complete factorization over Q: p = unit * prod factors[i]^mult[i],
/// factors primitive over Z with positive leading coefficient.
struct Factorization {
  Rational unit;
  std::vector<std::pair<Polynomial, unsigned>> factors;
};
Factorization factor_rational(const Polynomial& p);

/// Endpoint for Sturm counting; +-infinity allowed.
struct ExtRational {
  enum Kind { NegInf, Finite, PosInf } kind = Finite;
  Rational value;
  static ExtRational neg_inf() { return {NegInf, 0}; }
  static ExtRational pos_inf() { return {PosInf, 0}; }
  static ExtRational at(const Rational& r) { return {Finite, r}; }
};

/// Number of real roots of a squarefree p in (a, b].
std::size_t sturm_count(const Polynomial& p, const ExtRational& a, const ExtRational& b);

/// Polynomial whose roots are the squares of the roots of p; degree preserved.
Polynomial root_square_poly(const Polynomial& p);

}  // namespace dissect
