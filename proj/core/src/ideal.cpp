#include "curvres/ideal.hpp"

#include <sstream>

namespace curvres {

namespace {

void require_ideal_index(const ArithmeticSequence& seq, long long i) {
  if (i < seq.b() || i > seq.n()) {
    std::ostringstream msg;
    msg << "ideal index " << i << " outside [b, n] = [" << seq.b() << ", " << seq.n() << "]";
    throw std::out_of_range(msg.str());
  }
}

}  // namespace

Polynomial SymbolicMatrix2xN::minor2(int c1, int c2) const {
  if (c1 < 0 || c2 <= c1 || c2 >= cols()) {
    throw std::out_of_range("minor column indices must satisfy 0 <= c1 < c2 < cols");
  }
  const auto& u = columns[static_cast<size_t>(c1)];
  const auto& v = columns[static_cast<size_t>(c2)];
  return u[0] * v[1] - v[0] * u[1];
}

SymbolicMatrix2xN matrix_A(const ArithmeticSequence& seq) {
  int nv = static_cast<int>(seq.n()) + 1;
  SymbolicMatrix2xN m;
  for (int j = 0; j < nv - 1; ++j) {
    m.columns.push_back({Polynomial::variable(nv, j), Polynomial::variable(nv, j + 1)});
  }
  return m;
}

SymbolicMatrix2xN matrix_B(const ArithmeticSequence& seq) {
  int nv = static_cast<int>(seq.n()) + 1;
  int n = static_cast<int>(seq.n());
  int b = static_cast<int>(seq.b());
  SymbolicMatrix2xN m;
  m.columns.push_back({Polynomial::variable(nv, n, static_cast<int>(seq.a())),
                       Polynomial::variable(nv, 0, static_cast<int>(seq.a() + seq.d()))});
  for (int j = 0; j + b <= n; ++j) {
    m.columns.push_back({Polynomial::variable(nv, j), Polynomial::variable(nv, j + b)});
  }
  return m;
}

std::vector<Polynomial> minors_A(const ArithmeticSequence& seq) {
  SymbolicMatrix2xN a = matrix_A(seq);
  std::vector<Polynomial> out;
  for (int i = 0; i + 1 < a.cols(); ++i) {
    for (int j = i + 1; j < a.cols(); ++j) {
      out.push_back(a.minor2(i, j));
    }
  }
  return out;
}

Polynomial delta(const ArithmeticSequence& seq, long long i) {
  require_ideal_index(seq, i);
  int nv = static_cast<int>(seq.n()) + 1;
  Monomial pos(static_cast<size_t>(nv), 0);
  pos[static_cast<size_t>(seq.n())] = static_cast<int>(seq.a());
  pos[static_cast<size_t>(i)] += 1;
  Monomial neg(static_cast<size_t>(nv), 0);
  neg[0] = static_cast<int>(seq.a() + seq.d());
  neg[static_cast<size_t>(i - seq.b())] += 1;
  Polynomial p(nv);
  p.add_term(pos, 1);
  p.add_term(neg, -1);
  return p;
}

long long delta_degree(const ArithmeticSequence& seq, long long i) {
  require_ideal_index(seq, i);
  return seq.m0() * (seq.a() + seq.d() + 1) + (i - seq.b()) * seq.d();
}

std::vector<Polynomial> GeneratorSet::all() const {
  std::vector<Polynomial> out = minors;
  out.insert(out.end(), deltas.begin(), deltas.end());
  return out;
}

GeneratorSet ideal_I(const ArithmeticSequence& seq, long long i) {
  require_ideal_index(seq, i);
  GeneratorSet set{seq, i, minors_A(seq), {}};
  for (long long k = seq.b(); k <= i; ++k) {
    set.deltas.push_back(delta(seq, k));
  }
  return set;
}

GeneratorSet defining_ideal(const ArithmeticSequence& seq) { return ideal_I(seq, seq.n()); }

std::vector<Polynomial> first_variables(const ArithmeticSequence& seq) {
  int nv = static_cast<int>(seq.n()) + 1;
  std::vector<Polynomial> out;
  for (int j = 0; j < nv - 1; ++j) {
    out.push_back(Polynomial::variable(nv, j));
  }
  return out;
}

bool verify_phi_vanishing(const ArithmeticSequence& seq, long long i) {
  for (const Polynomial& g : ideal_I(seq, i).all()) {
    if (!phi_evaluate(g, seq).is_zero()) return false;
  }
  return true;
}

bool verify_minimal_generation(const ArithmeticSequence& seq, const BuchbergerOptions& opts) {
  std::vector<Polynomial> gens = defining_ideal(seq).all();
  for (size_t k = 0; k < gens.size(); ++k) {
    std::vector<Polynomial> others;
    others.reserve(gens.size() - 1);
    for (size_t j = 0; j < gens.size(); ++j) {
      if (j != k) others.push_back(gens[j]);
    }
    if (is_member(gens[k], others, opts)) return false;
  }
  return true;
}

}  // namespace curvres
