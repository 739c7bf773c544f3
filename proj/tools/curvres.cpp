// curvres: monomial-curve resolutions from arithmetic sequences.
//
// Subcommands construct the defining ideal and graded Betti table of the
// curve attached to (m0, m0+d, ..., m0+n*d), report numerical invariants,
// and run the verification suites (Hilbert series, colon lemma, phi
// vanishing, minimal generation, Gorenstein duality, periodicity).
//
// Exit codes: 0 success / verification PASS, 1 verification FAIL,
// 2 invalid input or usage error.

#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "curvres/groebner.hpp"
#include "curvres/hilbert.hpp"
#include "curvres/ideal.hpp"
#include "curvres/polynomial.hpp"
#include "curvres/resolution.hpp"
#include "curvres/semigroup.hpp"

namespace {

using curvres::ArithmeticSequence;
using ordered_json = nlohmann::ordered_json;

ordered_json sequence_json(const ArithmeticSequence& seq) {
  ordered_json obj;
  obj["m0"] = seq.m0();
  obj["d"] = seq.d();
  obj["n"] = seq.n();
  obj["a"] = seq.a();
  obj["b"] = seq.b();
  return obj;
}

void emit(const ordered_json& obj) { std::cout << obj.dump(2) << "\n"; }

int run_validate(long long m0, long long d, long long n, bool json) {
  auto seq = ArithmeticSequence::validate(m0, d, n);
  if (json) {
    ordered_json obj = sequence_json(seq);
    obj["generators"] = seq.generators();
    emit(obj);
    return 0;
  }
  std::cout << "valid arithmetic sequence:";
  for (long long m : seq.generators()) std::cout << " " << m;
  std::cout << "\n";
  std::cout << "m0 = " << seq.m0() << "  d = " << seq.d() << "  n = " << seq.n() << "\n";
  std::cout << "a = " << seq.a() << "  b = " << seq.b() << "  (m0 = a*n + b)\n";
  return 0;
}

int run_generators(long long m0, long long d, long long n, long long i, bool json) {
  auto seq = ArithmeticSequence::validate(m0, d, n);
  if (i < 0) i = seq.n();
  auto gens = curvres::ideal_I(seq, i);
  if (json) {
    ordered_json obj = sequence_json(seq);
    obj["i"] = gens.ideal_index;
    ordered_json minors = ordered_json::array();
    for (const auto& p : gens.minors) minors.push_back(curvres::to_string(p));
    ordered_json deltas = ordered_json::array();
    for (const auto& p : gens.deltas) deltas.push_back(curvres::to_string(p));
    obj["minors"] = minors;
    obj["deltas"] = deltas;
    obj["count"] = gens.size();
    emit(obj);
    return 0;
  }
  for (const auto& p : gens.all()) std::cout << curvres::to_string(p) << "\n";
  return 0;
}

int run_betti(long long m0, long long d, long long n, bool json) {
  auto seq = ArithmeticSequence::validate(m0, d, n);
  auto betti = curvres::total_betti(seq);
  if (json) {
    ordered_json obj = sequence_json(seq);
    obj["betti"] = betti;
    emit(obj);
    return 0;
  }
  for (size_t j = 0; j < betti.size(); ++j) {
    std::cout << (j ? " " : "") << betti[j];
  }
  std::cout << "\n";
  return 0;
}

int run_resolution(long long m0, long long d, long long n, long long i, bool json) {
  auto seq = ArithmeticSequence::validate(m0, d, n);
  if (i < 0) i = seq.n();
  auto table = curvres::minimal_table(seq, i);
  std::cout << (json ? curvres::to_json(table) : curvres::render_text(table));
  return 0;
}

int run_invariants(long long m0, long long d, long long n, bool json) {
  auto seq = ArithmeticSequence::validate(m0, d, n);
  long long frob = curvres::frobenius_formula(seq);
  long long brute = curvres::frobenius_bruteforce(seq);
  long long genus = static_cast<long long>(curvres::gap_list(seq).size());
  long long type = curvres::cm_type(seq);
  bool gorenstein = curvres::is_gorenstein(seq);
  long long reg = curvres::regularity_formula(seq);
  bool identity = curvres::reg_frobenius_identity(seq);
  if (json) {
    ordered_json obj = sequence_json(seq);
    obj["frobenius"] = frob;
    obj["frobenius_bruteforce"] = brute;
    obj["genus"] = genus;
    obj["cm_type"] = type;
    obj["gorenstein"] = gorenstein;
    obj["regularity"] = reg;
    obj["reg_identity"] = identity;
    emit(obj);
    return 0;
  }
  std::cout << "sequence:";
  for (long long m : seq.generators()) std::cout << " " << m;
  std::cout << "\n";
  std::cout << "a = " << seq.a() << "  b = " << seq.b() << "\n";
  std::cout << "frobenius (formula): " << frob << "\n";
  std::cout << "frobenius (brute force): " << brute << "\n";
  std::cout << "genus: " << genus << "\n";
  std::cout << "cm type: " << type << "\n";
  std::cout << "gorenstein: " << (gorenstein ? "yes" : "no") << "\n";
  std::cout << "regularity: " << reg << "\n";
  std::cout << "reg - g identity: " << (identity ? "holds" : "FAILS") << "\n";
  return 0;
}

int run_verify_hilbert(long long m0, long long d, long long n, long long bound, bool json) {
  auto seq = ArithmeticSequence::validate(m0, d, n);
  auto report = bound >= 0 ? curvres::verify_hilbert(seq, bound) : curvres::verify_hilbert(seq);
  std::cout << (json ? curvres::to_json(report) : curvres::render_text(report));
  return report.pass ? 0 : 1;
}

struct ColonStage {
  std::string name;
  bool pass = false;
};

// Runs the colon-ideal suite: the minors are saturated with respect to the
// first adjoined binomial, and each later binomial peels back to the ideal
// of the first n variables.
std::vector<ColonStage> colon_stages(const ArithmeticSequence& seq) {
  std::vector<ColonStage> stages;
  auto full = curvres::ideal_I(seq, seq.n());

  auto delta_b = curvres::delta(seq, seq.b());
  auto fixed = curvres::colon(full.minors, delta_b);
  stages.push_back({"colon of the 2x2 minors by Delta_" + std::to_string(seq.b()) +
                        " returns the minors",
                    curvres::ideals_equal(fixed, full.minors)});

  auto vars = curvres::first_variables(seq);
  auto x_n = curvres::Polynomial::variable(static_cast<int>(seq.n()) + 1,
                                           static_cast<int>(seq.n()));
  bool excluded = true;
  for (long long i = seq.b() + 1; i <= seq.n(); ++i) {
    auto prev = curvres::ideal_I(seq, i - 1);
    auto quotient = curvres::colon(prev.all(), curvres::delta(seq, i));
    stages.push_back({"colon of I_" + std::to_string(i - 1) + " by Delta_" + std::to_string(i) +
                          " is (X_0, ..., X_" + std::to_string(seq.n() - 1) + ")",
                      curvres::ideals_equal(quotient, vars)});
    if (curvres::is_member(x_n, quotient)) excluded = false;
  }
  if (seq.b() < seq.n()) {
    stages.push_back({"X_" + std::to_string(seq.n()) + " stays outside every colon", excluded});
  }
  return stages;
}

int run_verify_colon(long long m0, long long d, long long n, bool json) {
  auto seq = ArithmeticSequence::validate(m0, d, n);
  auto stages = colon_stages(seq);
  bool all = true;
  for (const auto& s : stages) all = all && s.pass;
  if (json) {
    ordered_json obj = sequence_json(seq);
    obj["check"] = "colon";
    ordered_json list = ordered_json::array();
    for (const auto& s : stages) {
      ordered_json item;
      item["name"] = s.name;
      item["pass"] = s.pass;
      list.push_back(item);
    }
    obj["stages"] = list;
    obj["status"] = all ? "PASS" : "FAIL";
    emit(obj);
  } else {
    for (const auto& s : stages) {
      std::cout << s.name << ": " << (s.pass ? "PASS" : "FAIL") << "\n";
    }
    std::cout << "status: " << (all ? "PASS" : "FAIL") << "\n";
  }
  return all ? 0 : 1;
}

int run_verify_phi(long long m0, long long d, long long n, bool json) {
  auto seq = ArithmeticSequence::validate(m0, d, n);
  bool all = true;
  std::vector<std::pair<long long, bool>> per_i;
  for (long long i = seq.b(); i <= seq.n(); ++i) {
    bool ok = curvres::verify_phi_vanishing(seq, i);
    per_i.emplace_back(i, ok);
    all = all && ok;
  }
  if (json) {
    ordered_json obj = sequence_json(seq);
    obj["check"] = "phi";
    ordered_json list = ordered_json::array();
    for (const auto& [i, ok] : per_i) {
      ordered_json item;
      item["i"] = i;
      item["pass"] = ok;
      list.push_back(item);
    }
    obj["per_i"] = list;
    obj["status"] = all ? "PASS" : "FAIL";
    emit(obj);
  } else {
    for (const auto& [i, ok] : per_i) {
      std::cout << "phi vanishes on I_" << i << ": " << (ok ? "PASS" : "FAIL") << "\n";
    }
    std::cout << "status: " << (all ? "PASS" : "FAIL") << "\n";
  }
  return all ? 0 : 1;
}

int run_verify_mingen(long long m0, long long d, long long n, bool json) {
  auto seq = ArithmeticSequence::validate(m0, d, n);
  long long count = curvres::ideal_I(seq, seq.n()).size();
  long long expected = curvres::binomial(seq.n(), 2) + seq.n() - seq.b() + 1;
  bool minimal = curvres::verify_minimal_generation(seq);
  bool all = minimal && count == expected && expected == curvres::total_betti(seq)[1];
  if (json) {
    ordered_json obj = sequence_json(seq);
    obj["check"] = "mingen";
    obj["count"] = count;
    obj["expected"] = expected;
    obj["minimal"] = minimal;
    obj["status"] = all ? "PASS" : "FAIL";
    emit(obj);
  } else {
    std::cout << "generators: " << count << "  expected: " << expected << "\n";
    std::cout << "no generator lies in the ideal of the others: " << (minimal ? "yes" : "NO")
              << "\n";
    std::cout << "status: " << (all ? "PASS" : "FAIL") << "\n";
  }
  return all ? 0 : 1;
}

int run_verify_duality(long long m0, long long d, long long n, bool json) {
  auto seq = ArithmeticSequence::validate(m0, d, n);
  if (!curvres::is_gorenstein(seq)) {
    std::cerr << "error: duality requires a Gorenstein sequence (n = 1 or b = 2); b = "
              << seq.b() << "\n";
    return 2;
  }
  auto table = curvres::minimal_table(seq);
  bool ok = curvres::gorenstein_duality_check(table);
  long long top = table.columns.back().begin()->first;
  if (json) {
    ordered_json obj = sequence_json(seq);
    obj["check"] = "duality";
    obj["top_shift"] = top;
    obj["status"] = ok ? "PASS" : "FAIL";
    emit(obj);
  } else {
    std::cout << "top shift: " << top << "\n";
    std::cout << "status: " << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

int run_scan(const std::vector<long long>& raw, long long jmin, long long jmax, bool json) {
  auto report = curvres::periodicity_scan(raw, jmin, jmax);
  std::cout << (json ? curvres::to_json(report) : curvres::render_text(report));
  return report.passed() ? 0 : 1;
}

int run_sweep(long long n_max, long long m0_max, long long d_max, const std::string& check,
              bool json) {
  struct Row {
    long long m0, d, n, b;
    bool pass;
    std::string reason;
  };
  std::vector<Row> rows;
  for (long long n = 1; n <= n_max; ++n) {
    for (long long m0 = n + 1; m0 <= m0_max; ++m0) {
      for (long long d = 1; d <= d_max; ++d) {
        if (std::gcd(m0, d) != 1) continue;
        auto seq = ArithmeticSequence::validate(m0, d, n);
        Row row{m0, d, n, seq.b(), true, ""};
        if (check == "hilbert" || check == "all") {
          if (!curvres::verify_hilbert(seq).pass) {
            row.pass = false;
            row.reason = "hilbert";
          }
        }
        if (row.pass && (check == "colon" || check == "all")) {
          for (const auto& stage : colon_stages(seq)) {
            if (!stage.pass) {
              row.pass = false;
              row.reason = "colon";
              break;
            }
          }
        }
        rows.push_back(std::move(row));
      }
    }
  }
  long long failed = 0;
  for (const auto& r : rows) {
    if (!r.pass) ++failed;
  }
  if (json) {
    ordered_json obj;
    obj["n_max"] = n_max;
    obj["m0_max"] = m0_max;
    obj["d_max"] = d_max;
    obj["check"] = check;
    ordered_json results = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json item;
      item["m0"] = r.m0;
      item["d"] = r.d;
      item["n"] = r.n;
      item["b"] = r.b;
      item["status"] = r.pass ? "PASS" : "FAIL";
      if (!r.pass) item["reason"] = r.reason;
      results.push_back(item);
    }
    obj["results"] = results;
    obj["checked"] = rows.size();
    obj["passed"] = rows.size() - failed;
    obj["failed"] = failed;
    emit(obj);
  } else {
    for (const auto& r : rows) {
      std::cout << "m0=" << r.m0 << " d=" << r.d << " n=" << r.n << " b=" << r.b << ": "
                << (r.pass ? "PASS" : "FAIL (" + r.reason + ")") << "\n";
    }
    std::cout << "checked: " << rows.size() << "  passed: " << (rows.size() - failed)
              << "  failed: " << failed << "\n";
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded Betti tables of monomial curves from arithmetic sequences"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit JSON instead of text");

  long long m0 = 0, d = 0, n = 0;
  long long ideal_index = -1;
  long long bound = -1;
  long long jmin = 0, jmax = 0;
  std::vector<long long> raw;
  long long n_max = 0, m0_max = 0, d_max = 0;
  std::string check;

  auto add_seq_options = [&](CLI::App* cmd) {
    cmd->add_option("--m0", m0, "first term of the sequence")->required();
    cmd->add_option("--d", d, "common difference")->required();
    cmd->add_option("--n", n, "number of steps (the sequence has n+1 terms)")->required();
    cmd->fallthrough();
  };

  int exit_code = 0;

  auto* validate = app.add_subcommand("validate", "derive (a, b) or report the violation");
  add_seq_options(validate);
  validate->callback([&] { exit_code = run_validate(m0, d, n, json); });

  auto* generators = app.add_subcommand("generators", "print the generators of I_i");
  add_seq_options(generators);
  generators->add_option("--i", ideal_index, "ideal index in [b, n] (default n)");
  generators->callback([&] { exit_code = run_generators(m0, d, n, ideal_index, json); });

  auto* betti = app.add_subcommand("betti", "total Betti numbers of R/P");
  add_seq_options(betti);
  betti->callback([&] { exit_code = run_betti(m0, d, n, json); });

  auto* resolution = app.add_subcommand("resolution", "graded Betti table of R/I_i");
  add_seq_options(resolution);
  resolution->add_option("--i", ideal_index, "ideal index in [b, n] (default n)");
  resolution->callback([&] { exit_code = run_resolution(m0, d, n, ideal_index, json); });

  auto* invariants = app.add_subcommand("invariants", "numerical invariants of the semigroup");
  add_seq_options(invariants);
  invariants->callback([&] { exit_code = run_invariants(m0, d, n, json); });

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);
  verify->fallthrough();
  {
    auto* vh = verify->add_subcommand("hilbert", "table series vs. semigroup series");
    add_seq_options(vh);
    vh->add_option("--bound", bound, "compare coefficients up to this degree");
    vh->callback([&] { exit_code = run_verify_hilbert(m0, d, n, bound, json); });

    auto* vc = verify->add_subcommand("colon", "colon-ideal lemma via the basis engine");
    add_seq_options(vc);
    vc->callback([&] { exit_code = run_verify_colon(m0, d, n, json); });

    auto* vp = verify->add_subcommand("phi", "generators vanish under the monomial map");
    add_seq_options(vp);
    vp->callback([&] { exit_code = run_verify_phi(m0, d, n, json); });

    auto* vm = verify->add_subcommand("mingen", "generator count and minimality");
    add_seq_options(vm);
    vm->callback([&] { exit_code = run_verify_mingen(m0, d, n, json); });

    auto* vd = verify->add_subcommand("duality", "self-duality of the Gorenstein table");
    add_seq_options(vd);
    vd->callback([&] { exit_code = run_verify_duality(m0, d, n, json); });
  }

  auto* scan = app.add_subcommand("scan-periodicity", "Betti numbers of translates");
  scan->add_option("--seq", raw, "comma-separated sequence, e.g. 11,13,15,17,19")
      ->required()
      ->delimiter(',');
  scan->add_option("--jmax", jmax, "largest translation offset")->required();
  scan->add_option("--jmin", jmin, "smallest translation offset (default 0)");
  scan->fallthrough();
  scan->callback([&] { exit_code = run_scan(raw, jmin, jmax, json); });

  auto* sweep = app.add_subcommand("sweep", "verify every valid sequence in a range");
  sweep->add_option("--n-max", n_max, "largest n")->required();
  sweep->add_option("--m0-max", m0_max, "largest m0")->required();
  sweep->add_option("--d-max", d_max, "largest d")->required();
  sweep->add_option("--check", check, "which suite to run")
      ->required()
      ->transform(CLI::IsMember({"hilbert", "colon", "all"}));
  sweep->fallthrough();
  sweep->callback([&] { exit_code = run_sweep(n_max, m0_max, d_max, check, json); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const curvres::SequenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const curvres::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
