#include "curvres/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace curvres {

namespace {

void require_same_length(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("monomials live in different rings");
  }
}

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) {
    throw std::invalid_argument("polynomials live in different rings");
  }
}

}  // namespace

long long total_degree(const Monomial& m) {
  long long deg = 0;
  for (int e : m) deg += e;
  return deg;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  require_same_length(a, b);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  require_same_length(a, b);
  Monomial out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Monomial mono_quotient(const Monomial& a, const Monomial& b) {
  require_same_length(a, b);
  Monomial out(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (b[i] > a[i]) throw std::invalid_argument("monomial quotient is not a monomial");
    out[i] = a[i] - b[i];
  }
  return out;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  require_same_length(a, b);
  Monomial out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  require_same_length(a, b);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && b[i] > 0) return false;
  }
  return true;
}

bool degrevlex_less(const Monomial& a, const Monomial& b) {
  require_same_length(a, b);
  long long da = total_degree(a);
  long long db = total_degree(b);
  if (da != db) return da < db;
  // Reverse lexicographic tie-break: the monomial with the larger exponent
  // at the last differing position carries more of a less significant
  // variable, hence is smaller.
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

long long weighted_degree(const Monomial& mono, const ArithmeticSequence& seq) {
  if (static_cast<long long>(mono.size()) != seq.n() + 1) {
    throw std::invalid_argument("exponent vector length does not match n + 1 variables");
  }
  long long deg = 0;
  for (size_t i = 0; i < mono.size(); ++i) {
    deg += static_cast<long long>(mono[i]) * seq.generator(static_cast<long long>(i));
  }
  return deg;
}

Polynomial Polynomial::constant(int nvars, Rational c) {
  Polynomial p(nvars);
  c.canonicalize();
  p.add_term(Monomial(static_cast<size_t>(nvars), 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int index, int power) {
  if (index < 0 || index >= nvars) throw std::out_of_range("variable index out of range");
  if (power < 0) throw std::invalid_argument("variable power must be >= 0");
  Polynomial p(nvars);
  Monomial mono(static_cast<size_t>(nvars), 0);
  mono[static_cast<size_t>(index)] = power;
  p.add_term(mono, 1);
  return p;
}

Polynomial Polynomial::term(const Monomial& mono, Rational coeff) {
  Polynomial p(static_cast<int>(mono.size()));
  coeff.canonicalize();
  p.add_term(mono, coeff);
  return p;
}

void Polynomial::add_term(const Monomial& mono, const Rational& coeff) {
  if (static_cast<int>(mono.size()) != nvars_) {
    throw std::invalid_argument("exponent vector length does not match the ring");
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::times_term(const Monomial& mono, const Rational& coeff) const {
  Polynomial out(nvars_);
  if (coeff == 0) return out;
  for (const auto& [m, c] : terms_) {
    out.terms_.emplace(mono_mul(m, mono), c * coeff);
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_same_ring(*this, rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_same_ring(*this, rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  require_same_ring(lhs, rhs);
  Polynomial out(lhs.nvars());
  for (const auto& [m, c] : rhs.terms_) {
    out += lhs.times_term(m, c);
  }
  return out;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  Polynomial out(p.nvars());
  if (c == 0) return out;
  for (const auto& [m, pc] : p.terms_) out.terms_.emplace(m, c * pc);
  return out;
}

void UnivariatePolynomial::add_term(long long degree, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(degree, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

UnivariatePolynomial& UnivariatePolynomial::operator+=(const UnivariatePolynomial& rhs) {
  for (const auto& [deg, c] : rhs.terms_) add_term(deg, c);
  return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator-=(const UnivariatePolynomial& rhs) {
  for (const auto& [deg, c] : rhs.terms_) add_term(deg, -c);
  return *this;
}

UnivariatePolynomial operator*(const UnivariatePolynomial& lhs, const UnivariatePolynomial& rhs) {
  UnivariatePolynomial out;
  for (const auto& [da, ca] : lhs.terms_) {
    for (const auto& [db, cb] : rhs.terms_) {
      out.add_term(da + db, ca * cb);
    }
  }
  return out;
}

UnivariatePolynomial phi_evaluate(const Polynomial& p, const ArithmeticSequence& seq) {
  UnivariatePolynomial out;
  for (const auto& [mono, coeff] : p.terms()) {
    out.add_term(weighted_degree(mono, seq), coeff);
  }
  return out;
}

std::optional<long long> weighted_homogeneous_degree(const Polynomial& p,
                                                     const ArithmeticSequence& seq) {
  if (p.is_zero()) return 0;
  std::optional<long long> deg;
  for (const auto& [mono, coeff] : p.terms()) {
    long long w = weighted_degree(mono, seq);
    if (!deg) {
      deg = w;
    } else if (*deg != w) {
      return std::nullopt;
    }
  }
  return deg;
}

namespace {

std::string rational_string(const Rational& q) { return q.get_str(); }

// "X4^2*X3": factors sorted by descending exponent, ties by ascending index.
std::string monomial_string(const Monomial& mono) {
  std::vector<std::pair<int, int>> factors;  // (index, exponent)
  for (size_t i = 0; i < mono.size(); ++i) {
    if (mono[i] != 0) factors.emplace_back(static_cast<int>(i), mono[i]);
  }
  std::stable_sort(factors.begin(), factors.end(),
                   [](const auto& x, const auto& y) { return x.second > y.second; });
  std::ostringstream os;
  for (size_t k = 0; k < factors.size(); ++k) {
    if (k > 0) os << "*";
    os << "X" << factors[k].first;
    if (factors[k].second != 1) os << "^" << factors[k].second;
  }
  return os.str();
}

void append_term(std::ostringstream& os, bool first, const Rational& coeff,
                 const std::string& mono_text) {
  Rational mag = coeff < 0 ? Rational(-coeff) : coeff;
  if (first) {
    if (coeff < 0) os << "-";
  } else {
    os << (coeff < 0 ? " - " : " + ");
  }
  if (mono_text.empty()) {
    os << rational_string(mag);
  } else {
    if (mag != 1) os << rational_string(mag) << "*";
    os << mono_text;
  }
}

}  // namespace

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::vector<const Monomial*> order;
  order.reserve(p.term_count());
  for (const auto& [mono, coeff] : p.terms()) order.push_back(&mono);
  std::sort(order.begin(), order.end(),
            [](const Monomial* x, const Monomial* y) { return degrevlex_less(*x, *y); });
  std::ostringstream os;
  bool first = true;
  for (const Monomial* mono : order) {
    append_term(os, first, p.terms().at(*mono), monomial_string(*mono));
    first = false;
  }
  return os.str();
}

std::string to_string(const UnivariatePolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [deg, coeff] : p.terms()) {
    std::string mono_text;
    if (deg == 1) {
      mono_text = "t";
    } else if (deg != 0) {
      mono_text = "t^" + std::to_string(deg);
    }
    append_term(os, first, coeff, mono_text);
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

std::ostream& operator<<(std::ostream& os, const UnivariatePolynomial& p) {
  return os << to_string(p);
}

}  // namespace curvres
