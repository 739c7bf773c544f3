#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace curvres {

// Raw strictly increasing list of positive integers, as read from user input.
using RawSequence = std::vector<long long>;

// Coefficients c[0..N] of a power series truncated at degree N.
using SeriesCoefficients = std::vector<long long>;

enum class SequenceErrorKind {
  NonPositive,    // some entry is <= 0
  NotCoprime,     // gcd(m0, d) > 1
  DegenerateA,    // m0 <= n, i.e. a = 0 in m0 = a*n + b
  NotArithmetic,  // consecutive differences are not constant (or not positive)
};

class SequenceError : public std::runtime_error {
public:
  SequenceError(SequenceErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  SequenceErrorKind kind() const { return kind_; }

private:
  SequenceErrorKind kind_;
};

// An arithmetic sequence m_i = m0 + i*d, i = 0..n, with gcd(m0, d) = 1 and
// m0 > n, together with the division m0 = a*n + b normalized so that
// b lies in [1, n] (hence a >= 1).  The entries generate the numerical
// semigroup whose invariants the rest of the library computes.
class ArithmeticSequence {
public:
  // Checks all constraints and derives (a, b).  Throws SequenceError on
  // invalid input; the DegenerateA message mentions "a = 0" so callers can
  // surface why m0 <= n is rejected.
  static ArithmeticSequence validate(long long m0, long long d, long long n);

  long long m0() const { return m0_; }
  long long d() const { return d_; }
  long long n() const { return n_; }
  long long a() const { return a_; }
  long long b() const { return b_; }

  // m_i = m0 + i*d for i in [0, n]; throws std::out_of_range otherwise.
  long long generator(long long i) const;

  // All n+1 generators m_0 < m_1 < ... < m_n.
  std::vector<long long> generators() const;

  friend bool operator==(const ArithmeticSequence&, const ArithmeticSequence&) = default;

private:
  ArithmeticSequence(long long m0, long long d, long long n, long long a, long long b)
      : m0_(m0), d_(d), n_(n), a_(a), b_(b) {}

  long long m0_;
  long long d_;
  long long n_;
  long long a_;
  long long b_;
};

// Divides every entry by g = gcd of all entries; returns (reduced, g).
// Requires a nonempty, strictly increasing, positive sequence.
std::pair<RawSequence, long long> reduce_raw(const RawSequence& raw);

// True when the entries form a strictly increasing arithmetic progression
// of positive integers (n = 0, a single entry, does not qualify).
bool is_arithmetic(const RawSequence& raw);

// Reads (m0, d, n) off a raw sequence and validates it.  Throws
// SequenceError(NotArithmetic) when the differences are not constant.
ArithmeticSequence sequence_from_raw(const RawSequence& raw);

// Membership of s in the numerical semigroup generated by the sequence,
// decided by dynamic programming over [0, s].
bool is_member(const ArithmeticSequence& seq, long long s);

// Largest integer not in the semigroup, found by scanning the DP table up
// to m0 * m_n (past the conductor for any coprime generating set).
long long frobenius_bruteforce(const ArithmeticSequence& seq);

// All gaps (positive non-members) in increasing order; its size is the genus.
std::vector<long long> gap_list(const ArithmeticSequence& seq);

// Indicator series of the semigroup: coefficient of t^s is 1 when s is a
// member and 0 otherwise, for s in [0, N].
SeriesCoefficients semigroup_series(const ArithmeticSequence& seq, long long N);

// True when no generator lies in the semigroup generated by the others.
bool minimally_generates(const ArithmeticSequence& seq);

}  // namespace curvres
