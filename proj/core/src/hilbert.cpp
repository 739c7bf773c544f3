#include "curvres/hilbert.hpp"

#include <sstream>

#include "json.hpp"

namespace curvres {

NumeratorPolynomial numerator(const GradedBettiTable& table) {
  NumeratorPolynomial out;
  long long sign = 1;
  for (const ShiftMultiset& col : table.columns) {
    for (const auto& [value, mult] : col) {
      auto [it, inserted] = out.emplace(value, sign * mult);
      if (!inserted) {
        it->second += sign * mult;
        if (it->second == 0) out.erase(it);
      }
    }
    sign = -sign;
  }
  return out;
}

SeriesCoefficients expand(const NumeratorPolynomial& numer, const ArithmeticSequence& seq,
                          long long N) {
  if (N < 0) throw std::out_of_range("series bound must be >= 0");
  SeriesCoefficients coeffs(static_cast<size_t>(N) + 1, 0);
  for (const auto& [degree, value] : numer) {
    if (degree < 0) throw std::out_of_range("numerator degrees must be >= 0");
    if (degree <= N) coeffs[static_cast<size_t>(degree)] = value;
  }
  // Multiplying by 1 / (1 - t^m) is a running sum with stride m.
  for (long long m : seq.generators()) {
    for (long long s = m; s <= N; ++s) {
      coeffs[static_cast<size_t>(s)] += coeffs[static_cast<size_t>(s - m)];
    }
  }
  return coeffs;
}

HilbertReport verify_hilbert_table(const GradedBettiTable& table, long long N) {
  SeriesCoefficients from_table = expand(numerator(table), table.seq, N);
  SeriesCoefficients from_semigroup = semigroup_series(table.seq, N);
  HilbertReport report{table.seq, N, true, std::nullopt};
  for (long long s = 0; s <= N; ++s) {
    if (from_table[static_cast<size_t>(s)] != from_semigroup[static_cast<size_t>(s)]) {
      report.pass = false;
      report.first_mismatch = s;
      break;
    }
  }
  return report;
}

HilbertReport verify_hilbert(const ArithmeticSequence& seq, long long N) {
  return verify_hilbert_table(minimal_table(seq), N);
}

HilbertReport verify_hilbert(const ArithmeticSequence& seq) {
  GradedBettiTable table = minimal_table(seq);
  return verify_hilbert_table(table, table.max_shift() + seq.generator(seq.n()));
}

std::string to_json(const HilbertReport& report) {
  nlohmann::ordered_json obj;
  nlohmann::ordered_json sequence;
  sequence["m0"] = report.seq.m0();
  sequence["d"] = report.seq.d();
  sequence["n"] = report.seq.n();
  obj["sequence"] = sequence;
  obj["bound"] = report.bound;
  obj["status"] = report.pass ? "PASS" : "FAIL";
  if (report.first_mismatch) {
    obj["first_mismatch"] = *report.first_mismatch;
  } else {
    obj["first_mismatch"] = nullptr;
  }
  return obj.dump(2) + "\n";
}

std::string render_text(const HilbertReport& report) {
  std::ostringstream os;
  os << "series comparison up to degree " << report.bound << ": ";
  if (report.pass) {
    os << "PASS\n";
  } else {
    os << "FAIL (first mismatch at degree " << *report.first_mismatch << ")\n";
  }
  return os.str();
}

}  // namespace curvres
