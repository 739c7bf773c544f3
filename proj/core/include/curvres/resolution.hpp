#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "curvres/semigroup.hpp"

namespace curvres {

// Multiset of graded shifts: maps the shift value e of a summand R(-e) to
// its multiplicity.
using ShiftMultiset = std::map<long long, long long>;

// Total multiplicity of the multiset.
long long shift_count(const ShiftMultiset& shifts);

void add_shift(ShiftMultiset& shifts, long long value, long long multiplicity = 1);

// Multiset of sums of t distinct elements of {0, 1, ..., m-1}; it has
// C(m, t) entries counted with multiplicity.  Requires 1 <= t <= m.
ShiftMultiset sigma(long long m, long long t);

long long binomial(long long n, long long k);

// Shifts of the s-th module in the Eagon-Northcott complex resolving
// R/I_2(A): { s*m0 + k*d + r*d : k in [1, s-1], r in sigma(n, s) } for
// s in [2, n], and the empty multiset for s = n+1 (the complex has length
// n-1).  The parameter s is the homological degree plus one.
ShiftMultiset en_shifts(const ArithmeticSequence& seq, long long s);

// Shifts of the s-th module in the Koszul complex on X_0, ..., X_{n-1}:
// {0} for s = 0 and { s*m0 + r*d : r in sigma(n, s) } for s in [1, n].
ShiftMultiset koszul_shifts(const ArithmeticSequence& seq, long long s);

// Shifts of the building block L(s, k):
// { m0*(a+d+s+1) + k*d + r*d : r in sigma(n, s) }, for s in [1, n], k >= 0.
ShiftMultiset L_shifts(const ArithmeticSequence& seq, long long s, long long k);

// The Koszul module in degree s twisted by -delta_{i} has exactly the
// shifts of L(s, i-b); this identity glues the mapping cones together.
bool koszul_twist_identity(const ArithmeticSequence& seq, long long s, long long i);

// Graded Betti table of the minimal free resolution of R/I_i: column j
// lists the shifts of the j-th free module.
struct GradedBettiTable {
  ArithmeticSequence seq;
  long long ideal_index;               // the i of I_i
  std::vector<ShiftMultiset> columns;  // indexed by homological degree 0..n

  std::vector<long long> total() const;  // column cardinalities
  long long max_shift() const;
};

// The table for R/I_i, assembled column by column from the closed forms;
// no syzygy computation is involved.  Defaults to i = n.
GradedBettiTable minimal_table(const ArithmeticSequence& seq, long long i);
GradedBettiTable minimal_table(const ArithmeticSequence& seq);

// Checks the structural invariants of a table (column 0 = {0}, Euler
// characteristic zero, minimal shifts strictly increasing, and for the
// full ideal the closed-form totals).  Returns a description of the first
// violation, or nullopt when the table is sound.
std::optional<std::string> check_table(const GradedBettiTable& table);

// Total Betti numbers of R/P from the closed formula:
// beta_0 = 1 and beta_j = j*C(n, j+1) + extra, where extra counts the
// second block depending on whether j <= n-b+1.
std::vector<long long> total_betti(const ArithmeticSequence& seq);

// Cohen-Macaulay type: the rank of the last module, b-1 for b >= 2 and n
// for b = 1.  It is the unique c in [1, n] with c = m0 - 1 mod n.
long long cm_type(const ArithmeticSequence& seq);

// Type of R/I_i: n - 1 + b - i for i < n or b >= 2, and n when i = n, b = 1.
long long cm_type_of_Ii(const ArithmeticSequence& seq, long long i);

// Gorenstein exactly when the type is 1: n = 1, or b = 2.
bool is_gorenstein(const ArithmeticSequence& seq);

// Castelnuovo-Mumford regularity of R/P in the weighted grading, from the
// closed formula with two branches on b.
long long regularity_formula(const ArithmeticSequence& seq);

// Frobenius number of the semigroup from the closed formula:
// (a-1)*m0 + d*(m0-1) for b = 1 and a*m0 + d*(m0-1) for b >= 2.
long long frobenius_formula(const ArithmeticSequence& seq);

// The identity reg - g = sum(m_i) - (n-b)*d - n linking regularity to the
// Frobenius number g of the semigroup.
bool reg_frobenius_identity(const ArithmeticSequence& seq);

// Thrown by the duality check when the table is not Gorenstein (its last
// column does not have exactly one shift).
class NotGorensteinError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Self-duality of the resolution for Gorenstein tables: with D the unique
// shift in column n, checks beta_{j, delta} == beta_{n-j, D-delta} for all
// j and delta.
bool gorenstein_duality_check(const GradedBettiTable& table);

// Total Betti numbers of the curve defined by raw + j (entrywise), after
// dividing out the gcd; nullopt when the translated-and-reduced sequence
// is degenerate (its first entry is <= its index count).
std::optional<std::vector<long long>> betti_of_translate(const RawSequence& raw, long long j);

struct PeriodicityEntry {
  long long j;
  std::optional<std::vector<long long>> betti;  // nullopt: degenerate translate
};

struct PeriodicityReport {
  RawSequence sequence;
  long long jmin = 0;
  long long jmax = 0;
  long long period = 0;     // n*d
  long long threshold = 0;  // max(0, n*d - m0): periodicity holds past this
  std::vector<PeriodicityEntry> entries;
  long long compared = 0;   // pairs (j, j+period) with both sides defined
  std::vector<long long> mismatches;

  bool passed() const { return mismatches.empty(); }
};

// Tabulates the Betti numbers of all translates raw + j for j in
// [jmin, jmax] and compares each j against j + period.
PeriodicityReport periodicity_scan(const RawSequence& raw, long long jmin, long long jmax);

// One line per homological degree, e.g. "j=3: 58 60 62 98 100 102 104".
std::string render_text(const GradedBettiTable& table);

// Stable JSON with keys m0, d, n, a, b, columns, total; each column is
// {"j": ..., "shifts": {"<shift>": multiplicity, ...}}.
std::string to_json(const GradedBettiTable& table);

std::string render_text(const PeriodicityReport& report);
std::string to_json(const PeriodicityReport& report);

}  // namespace curvres
