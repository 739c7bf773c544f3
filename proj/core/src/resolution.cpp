#include "curvres/resolution.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace curvres {

namespace {

using ordered_json = nlohmann::ordered_json;

void merge_shifts(ShiftMultiset& into, const ShiftMultiset& from) {
  for (const auto& [value, mult] : from) add_shift(into, value, mult);
}

void require_range(long long value, long long lo, long long hi, const char* what) {
  if (value < lo || value > hi) {
    std::ostringstream msg;
    msg << what << " " << value << " outside [" << lo << ", " << hi << "]";
    throw std::out_of_range(msg.str());
  }
}

long long delta_shift(const ArithmeticSequence& seq, long long k) {
  // Weighted degree of Delta_{b+k}.
  return seq.m0() * (seq.a() + seq.d() + 1) + k * seq.d();
}

}  // namespace

long long shift_count(const ShiftMultiset& shifts) {
  long long count = 0;
  for (const auto& [value, mult] : shifts) count += mult;
  return count;
}

void add_shift(ShiftMultiset& shifts, long long value, long long multiplicity) {
  if (multiplicity == 0) return;
  auto [it, inserted] = shifts.emplace(value, multiplicity);
  if (!inserted) {
    it->second += multiplicity;
    if (it->second == 0) shifts.erase(it);
  }
}

ShiftMultiset sigma(long long m, long long t) {
  if (t < 1 || t > m) {
    std::ostringstream msg;
    msg << "sigma selection size " << t << " outside [1, " << m << "]";
    throw std::out_of_range(msg.str());
  }
  ShiftMultiset out;
  std::vector<long long> idx(static_cast<size_t>(t));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    long long sum = std::accumulate(idx.begin(), idx.end(), 0LL);
    add_shift(out, sum);
    // Advance to the next t-combination of {0, ..., m-1}.
    long long pos = t - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == m - t + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<size_t>(pos)];
    for (long long q = pos + 1; q < t; ++q) {
      idx[static_cast<size_t>(q)] = idx[static_cast<size_t>(q - 1)] + 1;
    }
  }
  return out;
}

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long result = 1;
  for (long long i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

ShiftMultiset en_shifts(const ArithmeticSequence& seq, long long s) {
  require_range(s, 2, seq.n() + 1, "Eagon-Northcott column");
  ShiftMultiset out;
  if (s == seq.n() + 1) return out;
  ShiftMultiset sums = sigma(seq.n(), s);
  for (long long k = 1; k <= s - 1; ++k) {
    for (const auto& [r, mult] : sums) {
      add_shift(out, s * seq.m0() + k * seq.d() + r * seq.d(), mult);
    }
  }
  return out;
}

ShiftMultiset koszul_shifts(const ArithmeticSequence& seq, long long s) {
  require_range(s, 0, seq.n(), "Koszul column");
  ShiftMultiset out;
  if (s == 0) {
    add_shift(out, 0);
    return out;
  }
  for (const auto& [r, mult] : sigma(seq.n(), s)) {
    add_shift(out, s * seq.m0() + r * seq.d(), mult);
  }
  return out;
}

ShiftMultiset L_shifts(const ArithmeticSequence& seq, long long s, long long k) {
  require_range(s, 1, seq.n(), "L block index");
  if (k < 0) throw std::out_of_range("L block twist must be >= 0");
  ShiftMultiset out;
  for (const auto& [r, mult] : sigma(seq.n(), s)) {
    add_shift(out, seq.m0() * (seq.a() + seq.d() + s + 1) + k * seq.d() + r * seq.d(), mult);
  }
  return out;
}

bool koszul_twist_identity(const ArithmeticSequence& seq, long long s, long long i) {
  require_range(s, 1, seq.n(), "Koszul column");
  require_range(i, seq.b(), seq.n(), "ideal index");
  ShiftMultiset twisted;
  for (const auto& [value, mult] : koszul_shifts(seq, s)) {
    add_shift(twisted, value + delta_shift(seq, i - seq.b()), mult);
  }
  return twisted == L_shifts(seq, s, i - seq.b());
}

std::vector<long long> GradedBettiTable::total() const {
  std::vector<long long> out;
  out.reserve(columns.size());
  for (const ShiftMultiset& col : columns) out.push_back(shift_count(col));
  return out;
}

long long GradedBettiTable::max_shift() const {
  long long best = 0;
  for (const ShiftMultiset& col : columns) {
    if (!col.empty()) best = std::max(best, col.rbegin()->first);
  }
  return best;
}

GradedBettiTable minimal_table(const ArithmeticSequence& seq, long long i) {
  require_range(i, seq.b(), seq.n(), "ideal index");
  long long n = seq.n();
  long long b = seq.b();
  GradedBettiTable table{seq, i, {}};
  table.columns.assign(static_cast<size_t>(n) + 1, {});

  add_shift(table.columns[0], 0);

  // Homological degree 1: minors of A and the adjoined Delta's.
  table.columns[1] = en_shifts(seq, 2);
  for (long long k = 0; k <= i - b; ++k) {
    add_shift(table.columns[1], delta_shift(seq, k));
  }

  // Higher degrees: the Eagon-Northcott layer plus one L block per
  // mapping-cone stage.  Which block parameters survive minimalization
  // depends on which side of i - b + 1 the degree falls.
  for (long long s = 2; s <= n; ++s) {
    ShiftMultiset col = en_shifts(seq, s + 1);
    if (s <= i - b + 1) {
      for (long long k = s - 1; k <= i - b; ++k) {
        merge_shifts(col, L_shifts(seq, s - 1, k));
      }
    } else {
      for (long long k = i - b + 1; k <= s - 1; ++k) {
        merge_shifts(col, L_shifts(seq, s, k));
      }
    }
    table.columns[static_cast<size_t>(s)] = std::move(col);
  }
  return table;
}

GradedBettiTable minimal_table(const ArithmeticSequence& seq) {
  return minimal_table(seq, seq.n());
}

std::optional<std::string> check_table(const GradedBettiTable& table) {
  long long n = table.seq.n();
  if (static_cast<long long>(table.columns.size()) != n + 1) {
    return "table must have n + 1 columns";
  }
  ShiftMultiset origin;
  add_shift(origin, 0);
  if (table.columns[0] != origin) return "column 0 must be exactly {0}";
  for (size_t j = 1; j < table.columns.size(); ++j) {
    if (table.columns[j].empty()) {
      return "column " + std::to_string(j) + " is empty";
    }
    for (const auto& [value, mult] : table.columns[j]) {
      if (value <= 0) return "column " + std::to_string(j) + " has a nonpositive shift";
      if (mult <= 0) return "column " + std::to_string(j) + " has a nonpositive multiplicity";
    }
  }
  long long euler = 0;
  long long sign = 1;
  for (const ShiftMultiset& col : table.columns) {
    euler += sign * shift_count(col);
    sign = -sign;
  }
  if (euler != 0) return "alternating sum of ranks is not zero";
  for (size_t j = 1; j < table.columns.size(); ++j) {
    if (table.columns[j].begin()->first <= table.columns[j - 1].begin()->first) {
      return "minimal shifts must strictly increase with the homological degree";
    }
  }
  if (table.ideal_index == n && table.total() != total_betti(table.seq)) {
    return "column cardinalities disagree with the closed-form Betti numbers";
  }
  return std::nullopt;
}

std::vector<long long> total_betti(const ArithmeticSequence& seq) {
  long long n = seq.n();
  long long b = seq.b();
  std::vector<long long> out;
  out.reserve(static_cast<size_t>(n) + 1);
  out.push_back(1);
  for (long long j = 1; j <= n; ++j) {
    long long value = j * binomial(n, j + 1);
    if (j <= n - b + 1) {
      value += (n - b + 2 - j) * binomial(n, j - 1);
    } else {
      value += (j - n + b - 1) * binomial(n, j);
    }
    out.push_back(value);
  }
  return out;
}

long long cm_type(const ArithmeticSequence& seq) {
  return seq.b() == 1 ? seq.n() : seq.b() - 1;
}

long long cm_type_of_Ii(const ArithmeticSequence& seq, long long i) {
  require_range(i, seq.b(), seq.n(), "ideal index");
  if (i == seq.n() && seq.b() == 1) return seq.n();
  return seq.n() - 1 + seq.b() - i;
}

bool is_gorenstein(const ArithmeticSequence& seq) {
  return seq.n() == 1 || seq.b() == 2;
}

long long regularity_formula(const ArithmeticSequence& seq) {
  long long n = seq.n();
  long long b = seq.b();
  long long base = n * (seq.m0() - 1);
  if (b == 1) {
    return binomial(n, 2) * seq.d() + seq.m0() * (seq.a() + seq.d()) + base;
  }
  return (binomial(n, 2) + b - 1) * seq.d() + seq.m0() * (seq.a() + seq.d() + 1) + base;
}

long long frobenius_formula(const ArithmeticSequence& seq) {
  long long factor = seq.b() == 1 ? seq.a() - 1 : seq.a();
  return factor * seq.m0() + seq.d() * (seq.m0() - 1);
}

bool reg_frobenius_identity(const ArithmeticSequence& seq) {
  long long sum = 0;
  for (long long m : seq.generators()) sum += m;
  long long rhs = sum - (seq.n() - seq.b()) * seq.d() - seq.n();
  return regularity_formula(seq) - frobenius_formula(seq) == rhs;
}

bool gorenstein_duality_check(const GradedBettiTable& table) {
  long long n = table.seq.n();
  const ShiftMultiset& last = table.columns[static_cast<size_t>(n)];
  if (shift_count(last) != 1) {
    std::ostringstream msg;
    msg << "last column has " << shift_count(last) << " shifts; a Gorenstein table has exactly 1";
    throw NotGorensteinError(msg.str());
  }
  long long top = last.begin()->first;
  for (long long j = 0; j <= n; ++j) {
    ShiftMultiset reflected;
    for (const auto& [value, mult] : table.columns[static_cast<size_t>(n - j)]) {
      add_shift(reflected, top - value, mult);
    }
    if (reflected != table.columns[static_cast<size_t>(j)]) return false;
  }
  return true;
}

std::optional<std::vector<long long>> betti_of_translate(const RawSequence& raw, long long j) {
  if (!is_arithmetic(raw)) {
    throw SequenceError(SequenceErrorKind::NotArithmetic,
                        "translation requires an arithmetic progression");
  }
  if (j < 0) throw std::out_of_range("translation offset must be >= 0");
  RawSequence translated;
  translated.reserve(raw.size());
  for (long long v : raw) translated.push_back(v + j);
  auto [reduced, gcd] = reduce_raw(translated);
  (void)gcd;
  try {
    return total_betti(sequence_from_raw(reduced));
  } catch (const SequenceError& err) {
    if (err.kind() == SequenceErrorKind::DegenerateA) return std::nullopt;
    throw;
  }
}

PeriodicityReport periodicity_scan(const RawSequence& raw, long long jmin, long long jmax) {
  if (!is_arithmetic(raw)) {
    throw SequenceError(SequenceErrorKind::NotArithmetic,
                        "periodicity scan requires an arithmetic progression");
  }
  if (jmin < 0 || jmax < jmin) throw std::out_of_range("scan range must satisfy 0 <= jmin <= jmax");
  PeriodicityReport report;
  report.sequence = raw;
  report.jmin = jmin;
  report.jmax = jmax;
  long long n = static_cast<long long>(raw.size()) - 1;
  long long d = raw[1] - raw[0];
  report.period = n * d;
  report.threshold = std::max(0LL, n * d - raw[0]);
  for (long long j = jmin; j <= jmax; ++j) {
    report.entries.push_back({j, betti_of_translate(raw, j)});
  }
  for (long long j = jmin; j + report.period <= jmax; ++j) {
    const auto& lhs = report.entries[static_cast<size_t>(j - jmin)].betti;
    const auto& rhs = report.entries[static_cast<size_t>(j - jmin + report.period)].betti;
    if (!lhs || !rhs) continue;
    ++report.compared;
    if (*lhs != *rhs) report.mismatches.push_back(j);
  }
  return report;
}

std::string render_text(const GradedBettiTable& table) {
  std::ostringstream os;
  for (size_t j = 0; j < table.columns.size(); ++j) {
    os << "j=" << j << ":";
    for (const auto& [value, mult] : table.columns[j]) {
      for (long long c = 0; c < mult; ++c) os << " " << value;
    }
    os << "\n";
  }
  return os.str();
}

std::string to_json(const GradedBettiTable& table) {
  ordered_json obj;
  obj["m0"] = table.seq.m0();
  obj["d"] = table.seq.d();
  obj["n"] = table.seq.n();
  obj["a"] = table.seq.a();
  obj["b"] = table.seq.b();
  ordered_json cols = ordered_json::array();
  for (size_t j = 0; j < table.columns.size(); ++j) {
    ordered_json entry;
    entry["j"] = j;
    ordered_json shifts = ordered_json::object();
    for (const auto& [value, mult] : table.columns[j]) {
      shifts[std::to_string(value)] = mult;
    }
    entry["shifts"] = shifts;
    cols.push_back(entry);
  }
  obj["columns"] = cols;
  obj["total"] = table.total();
  return obj.dump(2) + "\n";
}

std::string render_text(const PeriodicityReport& report) {
  std::ostringstream os;
  os << "sequence:";
  for (long long v : report.sequence) os << " " << v;
  os << "\n";
  long long degenerate = 0;
  for (const PeriodicityEntry& e : report.entries) {
    if (!e.betti) ++degenerate;
  }
  os << "period: " << report.period << "  threshold: " << report.threshold << "\n";
  os << "j range: [" << report.jmin << ", " << report.jmax << "]  compared pairs: "
     << report.compared << "  degenerate translates: " << degenerate << "\n";
  if (report.mismatches.empty()) {
    os << "status: PASS\n";
  } else {
    os << "mismatch at j =";
    for (long long j : report.mismatches) os << " " << j;
    os << "\nstatus: FAIL\n";
  }
  return os.str();
}

std::string to_json(const PeriodicityReport& report) {
  ordered_json obj;
  obj["sequence"] = report.sequence;
  obj["jmin"] = report.jmin;
  obj["jmax"] = report.jmax;
  obj["period"] = report.period;
  obj["threshold"] = report.threshold;
  obj["compared"] = report.compared;
  obj["status"] = report.mismatches.empty() ? "PASS" : "FAIL";
  obj["mismatches"] = report.mismatches;
  ordered_json entries = ordered_json::array();
  for (const PeriodicityEntry& e : report.entries) {
    ordered_json item;
    item["j"] = e.j;
    if (e.betti) {
      item["betti"] = *e.betti;
    } else {
      item["betti"] = nullptr;
    }
    entries.push_back(item);
  }
  obj["entries"] = entries;
  return obj.dump(2) + "\n";
}

}  // namespace curvres
