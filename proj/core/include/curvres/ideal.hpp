#pragma once

#include <array>
#include <vector>

#include "curvres/groebner.hpp"
#include "curvres/polynomial.hpp"
#include "curvres/semigroup.hpp"

namespace curvres {

// A 2-row matrix with polynomial entries, stored column-wise.
struct SymbolicMatrix2xN {
  std::vector<std::array<Polynomial, 2>> columns;

  int cols() const { return static_cast<int>(columns.size()); }

  // Determinant of the 2x2 submatrix on columns c1 < c2:
  // top[c1]*bottom[c2] - top[c2]*bottom[c1].
  Polynomial minor2(int c1, int c2) const;
};

// A = [ X_0 ... X_{n-1} ; X_1 ... X_n ]: column j holds (X_j, X_{j+1}).
SymbolicMatrix2xN matrix_A(const ArithmeticSequence& seq);

// B has first column (X_n^a, X_0^{a+d}) and then columns (X_j, X_{j+b})
// for j in [0, n-b], so it is 2 x (n-b+2).
SymbolicMatrix2xN matrix_B(const ArithmeticSequence& seq);

// All 2x2 minors of A, X_i*X_{j+1} - X_{i+1}*X_j, listed by (i, j)
// lexicographic for 0 <= i < j <= n-1.
std::vector<Polynomial> minors_A(const ArithmeticSequence& seq);

// Delta_i = X_n^a * X_i - X_0^{a+d} * X_{i-b}, defined for i in [b, n].
Polynomial delta(const ArithmeticSequence& seq, long long i);

// Weighted degree of Delta_i: m0*(a+d+1) + (i-b)*d.
long long delta_degree(const ArithmeticSequence& seq, long long i);

// Generators of the ideal I_i = I_2(A) + (Delta_b, ..., Delta_i).  For
// i = n this is the full defining ideal of the monomial curve.
struct GeneratorSet {
  ArithmeticSequence seq;
  long long ideal_index;            // the i of I_i, in [b, n]
  std::vector<Polynomial> minors;   // 2x2 minors of A
  std::vector<Polynomial> deltas;   // Delta_b, ..., Delta_i

  // Minors first, then deltas: the canonical listing order.
  std::vector<Polynomial> all() const;
  size_t size() const { return minors.size() + deltas.size(); }
};

GeneratorSet ideal_I(const ArithmeticSequence& seq, long long i);

// I_n, the defining ideal of the curve parametrized by X_i -> t^{m_i}.
GeneratorSet defining_ideal(const ArithmeticSequence& seq);

// X_0, ..., X_{n-1} as polynomials in n+1 variables; the successive
// quotients (I_{i-1} : Delta_i) equal this ideal.
std::vector<Polynomial> first_variables(const ArithmeticSequence& seq);

// Every generator of I_i maps to zero under X_i -> t^{m_i}.
bool verify_phi_vanishing(const ArithmeticSequence& seq, long long i);

// No generator of the defining ideal lies in the ideal generated by the
// remaining ones.
bool verify_minimal_generation(const ArithmeticSequence& seq,
                               const BuchbergerOptions& opts = {});

}  // namespace curvres
