#pragma once

#include <map>
#include <optional>
#include <string>

#include "curvres/resolution.hpp"
#include "curvres/semigroup.hpp"

namespace curvres {

// K-polynomial (numerator of the Hilbert series over the weighted free
// resolution): degree -> integer coefficient, zeros dropped.
using NumeratorPolynomial = std::map<long long, long long>;

// Alternating sum over the table: sum_j (-1)^j sum_{e in column j} t^e.
NumeratorPolynomial numerator(const GradedBettiTable& table);

// Power-series coefficients of numer / prod_i (1 - t^{m_i}) up to degree N,
// computed by sequential in-place convolution, one generator at a time.
SeriesCoefficients expand(const NumeratorPolynomial& numer, const ArithmeticSequence& seq,
                          long long N);

struct HilbertReport {
  ArithmeticSequence seq;
  long long bound;
  bool pass;
  std::optional<long long> first_mismatch;  // smallest disagreeing degree
};

// Compares the series computed from the closed-form Betti table against
// the 0/1 indicator series of the semigroup, degree by degree up to N.
// The table and the DP series know nothing about each other, which is what
// makes agreement evidence.
HilbertReport verify_hilbert(const ArithmeticSequence& seq, long long N);

// Same with the default bound N = (largest shift in the table) + m_n.
HilbertReport verify_hilbert(const ArithmeticSequence& seq);

// Verifies a caller-supplied table (not necessarily the computed one), so
// corrupted tables can be shown to fail.
HilbertReport verify_hilbert_table(const GradedBettiTable& table, long long N);

std::string to_json(const HilbertReport& report);
std::string render_text(const HilbertReport& report);

}  // namespace curvres
