#include "curvres/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace curvres {

namespace {

// Reachability table for the semigroup: table[s] == 1 iff s is a sum of
// generators.  Plain unbounded-knapsack DP.
std::vector<char> membership_table(const std::vector<long long>& gens, long long N) {
  std::vector<char> table(static_cast<size_t>(N) + 1, 0);
  table[0] = 1;
  for (long long s = 1; s <= N; ++s) {
    for (long long m : gens) {
      if (m <= s && table[static_cast<size_t>(s - m)]) {
        table[static_cast<size_t>(s)] = 1;
        break;
      }
    }
  }
  return table;
}

void require_raw_shape(const RawSequence& raw) {
  if (raw.empty()) {
    throw SequenceError(SequenceErrorKind::NonPositive, "sequence is empty");
  }
  for (size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] <= 0) {
      std::ostringstream msg;
      msg << "sequence entry " << raw[i] << " is not positive";
      throw SequenceError(SequenceErrorKind::NonPositive, msg.str());
    }
    if (i > 0 && raw[i] <= raw[i - 1]) {
      throw SequenceError(SequenceErrorKind::NotArithmetic,
                          "sequence is not strictly increasing");
    }
  }
}

}  // namespace

ArithmeticSequence ArithmeticSequence::validate(long long m0, long long d, long long n) {
  if (m0 <= 0 || d <= 0 || n <= 0) {
    std::ostringstream msg;
    msg << "m0, d, n must be positive (got m0=" << m0 << " d=" << d << " n=" << n << ")";
    throw SequenceError(SequenceErrorKind::NonPositive, msg.str());
  }
  if (std::gcd(m0, d) != 1) {
    std::ostringstream msg;
    msg << "gcd(m0, d) = " << std::gcd(m0, d) << " but m0 and d must be coprime";
    throw SequenceError(SequenceErrorKind::NotCoprime, msg.str());
  }
  if (m0 <= n) {
    std::ostringstream msg;
    msg << "m0 = " << m0 << " <= n = " << n
        << " gives a = 0 in m0 = a*n + b; the sequence is degenerate";
    throw SequenceError(SequenceErrorKind::DegenerateA, msg.str());
  }
  // Unique a >= 1, b in [1, n] with m0 = a*n + b.
  long long b = m0 % n;
  long long a = m0 / n;
  if (b == 0) {
    b = n;
    a -= 1;
  }
  return ArithmeticSequence(m0, d, n, a, b);
}

long long ArithmeticSequence::generator(long long i) const {
  if (i < 0 || i > n_) {
    std::ostringstream msg;
    msg << "generator index " << i << " outside [0, " << n_ << "]";
    throw std::out_of_range(msg.str());
  }
  return m0_ + i * d_;
}

std::vector<long long> ArithmeticSequence::generators() const {
  std::vector<long long> out;
  out.reserve(static_cast<size_t>(n_) + 1);
  for (long long i = 0; i <= n_; ++i) out.push_back(m0_ + i * d_);
  return out;
}

std::pair<RawSequence, long long> reduce_raw(const RawSequence& raw) {
  require_raw_shape(raw);
  long long g = 0;
  for (long long v : raw) g = std::gcd(g, v);
  RawSequence reduced;
  reduced.reserve(raw.size());
  for (long long v : raw) reduced.push_back(v / g);
  return {reduced, g};
}

bool is_arithmetic(const RawSequence& raw) {
  if (raw.size() < 2) return false;
  for (long long v : raw) {
    if (v <= 0) return false;
  }
  long long d = raw[1] - raw[0];
  if (d <= 0) return false;
  for (size_t i = 1; i + 1 < raw.size(); ++i) {
    if (raw[i + 1] - raw[i] != d) return false;
  }
  return true;
}

ArithmeticSequence sequence_from_raw(const RawSequence& raw) {
  require_raw_shape(raw);
  if (!is_arithmetic(raw)) {
    std::ostringstream msg;
    msg << "sequence";
    for (long long v : raw) msg << " " << v;
    msg << " is not an arithmetic progression";
    throw SequenceError(SequenceErrorKind::NotArithmetic, msg.str());
  }
  long long m0 = raw[0];
  long long d = raw[1] - raw[0];
  long long n = static_cast<long long>(raw.size()) - 1;
  return ArithmeticSequence::validate(m0, d, n);
}

bool is_member(const ArithmeticSequence& seq, long long s) {
  if (s < 0) return false;
  if (s == 0) return true;
  return membership_table(seq.generators(), s)[static_cast<size_t>(s)] != 0;
}

long long frobenius_bruteforce(const ArithmeticSequence& seq) {
  // gcd of the generators is 1 (gcd(m0, d) = 1), so everything past
  // m0 * m_n is a member; the largest gap lies below that bound.
  long long bound = seq.m0() * seq.generator(seq.n());
  auto table = membership_table(seq.generators(), bound);
  for (long long s = bound; s >= 0; --s) {
    if (!table[static_cast<size_t>(s)]) return s;
  }
  return -1;  // semigroup is all of N (m0 = 1)
}

std::vector<long long> gap_list(const ArithmeticSequence& seq) {
  long long bound = seq.m0() * seq.generator(seq.n());
  auto table = membership_table(seq.generators(), bound);
  std::vector<long long> gaps;
  for (long long s = 1; s <= bound; ++s) {
    if (!table[static_cast<size_t>(s)]) gaps.push_back(s);
  }
  return gaps;
}

SeriesCoefficients semigroup_series(const ArithmeticSequence& seq, long long N) {
  if (N < 0) throw std::out_of_range("series bound must be >= 0");
  auto table = membership_table(seq.generators(), N);
  SeriesCoefficients coeffs(static_cast<size_t>(N) + 1, 0);
  for (long long s = 0; s <= N; ++s) coeffs[static_cast<size_t>(s)] = table[static_cast<size_t>(s)];
  return coeffs;
}

bool minimally_generates(const ArithmeticSequence& seq) {
  auto gens = seq.generators();
  for (size_t k = 0; k < gens.size(); ++k) {
    std::vector<long long> others;
    for (size_t j = 0; j < gens.size(); ++j) {
      if (j != k) others.push_back(gens[j]);
    }
    if (membership_table(others, gens[k])[static_cast<size_t>(gens[k])]) return false;
  }
  return true;
}

}  // namespace curvres
