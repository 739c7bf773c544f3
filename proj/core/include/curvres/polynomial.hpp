#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "curvres/semigroup.hpp"

namespace curvres {

// Exact rational coefficients.
using Rational = mpq_class;

// Exponent vector of a monomial in X_0, ..., X_{len-1}.
using Monomial = std::vector<int>;

long long total_degree(const Monomial& m);
bool mono_divides(const Monomial& a, const Monomial& b);   // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_quotient(const Monomial& a, const Monomial& b);  // a / b; requires b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

// Graded reverse lexicographic comparison with X_0 > X_1 > ... > X_{len-1}:
// compare total degree first, ties broken by the reverse lexicographic rule
// (more of the least significant variable means smaller).
bool degrevlex_less(const Monomial& a, const Monomial& b);

// Weighted degree sum e_i * m_i under the weighting X_i -> m_i.  The
// exponent vector length must be n + 1.
long long weighted_degree(const Monomial& mono, const ArithmeticSequence& seq);

// Sparse multivariate polynomial over Q.  The number of variables is fixed
// at construction; terms are kept in a map keyed by exponent vector with
// zero coefficients erased, so equality is termwise.
class Polynomial {
public:
  Polynomial() : nvars_(0) {}
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial zero(int nvars) { return Polynomial(nvars); }
  static Polynomial constant(int nvars, Rational c);
  static Polynomial variable(int nvars, int index, int power = 1);
  static Polynomial term(const Monomial& mono, Rational coeff);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  // Adds coeff * mono, merging with an existing term and dropping zeros.
  void add_term(const Monomial& mono, const Rational& coeff);

  // this * (coeff * mono).
  Polynomial times_term(const Monomial& mono, const Rational& coeff) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  int nvars_;
  std::map<Monomial, Rational> terms_;
};

// Sparse univariate polynomial in t, used as the image ring of the
// parametrization X_i -> t^{m_i}.
class UnivariatePolynomial {
public:
  UnivariatePolynomial() = default;

  bool is_zero() const { return terms_.empty(); }
  const std::map<long long, Rational>& terms() const { return terms_; }

  void add_term(long long degree, const Rational& coeff);

  UnivariatePolynomial& operator+=(const UnivariatePolynomial& rhs);
  UnivariatePolynomial& operator-=(const UnivariatePolynomial& rhs);
  friend UnivariatePolynomial operator+(UnivariatePolynomial lhs, const UnivariatePolynomial& rhs) {
    return lhs += rhs;
  }
  friend UnivariatePolynomial operator-(UnivariatePolynomial lhs, const UnivariatePolynomial& rhs) {
    return lhs -= rhs;
  }
  friend UnivariatePolynomial operator*(const UnivariatePolynomial& lhs,
                                        const UnivariatePolynomial& rhs);

  friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

private:
  std::map<long long, Rational> terms_;
};

// Substitutes X_i -> t^{m_i}.  A polynomial lies in the defining ideal of
// the monomial curve exactly when this evaluates to zero.
UnivariatePolynomial phi_evaluate(const Polynomial& p, const ArithmeticSequence& seq);

// The common weighted degree of all terms, or nullopt when the polynomial
// is not weighted homogeneous.  The zero polynomial is homogeneous of
// degree 0 by convention.
std::optional<long long> weighted_homogeneous_degree(const Polynomial& p,
                                                     const ArithmeticSequence& seq);

// Renders a polynomial as text: terms in ascending graded reverse
// lexicographic order, variables named X0..X{nvars-1} joined by '*' with
// '^' for exponents, e.g. "X4^2*X3 - X0^5".
std::string to_string(const Polynomial& p);
std::string to_string(const UnivariatePolynomial& p);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const UnivariatePolynomial& p);

}  // namespace curvres
