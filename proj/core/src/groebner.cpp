#include "curvres/groebner.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

namespace curvres {

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
  if (kind_ == Kind::EliminationBlock) {
    size_t block = std::min(static_cast<size_t>(block_), a.size());
    long long da = 0;
    long long db = 0;
    for (size_t i = 0; i < block; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da < db;
  }
  return degrevlex_less(a, b);
}

std::pair<Monomial, Rational> leading_term(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) throw std::invalid_argument("leading term of the zero polynomial");
  const Monomial* best_mono = nullptr;
  const Rational* best_coeff = nullptr;
  for (const auto& [mono, coeff] : p.terms()) {
    if (!best_mono || order.less(*best_mono, mono)) {
      best_mono = &mono;
      best_coeff = &coeff;
    }
  }
  return {*best_mono, *best_coeff};
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  auto [fm, fc] = leading_term(f, order);
  auto [gm, gc] = leading_term(g, order);
  Monomial lcm = mono_lcm(fm, gm);
  Polynomial lhs = f.times_term(mono_quotient(lcm, fm), Rational(1) / fc);
  Polynomial rhs = g.times_term(mono_quotient(lcm, gm), Rational(1) / gc);
  return lhs - rhs;
}

namespace {

Polynomial make_monic(const Polynomial& p, const MonomialOrder& order) {
  auto [mono, coeff] = leading_term(p, order);
  if (coeff == 1) return p;
  return Rational(Rational(1) / coeff) * p;
}

// Full division remainder: repeatedly cancels the leading term against the
// first basis element whose leading term divides it, moving irreducible
// leading terms into the remainder.
Polynomial normal_form_impl(const Polynomial& p, const std::vector<Polynomial>& basis,
                            const MonomialOrder& order) {
  Polynomial remainder(p.nvars());
  Polynomial h = p;
  while (!h.is_zero()) {
    auto [hm, hc] = leading_term(h, order);
    bool divided = false;
    for (const Polynomial& g : basis) {
      auto [gm, gc] = leading_term(g, order);
      if (mono_divides(gm, hm)) {
        h -= g.times_term(mono_quotient(hm, gm), Rational(hc / gc));
        divided = true;
        break;
      }
    }
    if (!divided) {
      remainder.add_term(hm, hc);
      h.add_term(hm, -hc);
    }
  }
  return remainder;
}

}  // namespace

GroebnerBasis buchberger(std::vector<Polynomial> gens, const MonomialOrder& order,
                         const BuchbergerOptions& opts) {
  std::vector<Polynomial> basis;
  for (const Polynomial& g : gens) {
    if (!g.is_zero()) basis.push_back(make_monic(g, order));
  }

  // Work queue under the normal selection strategy.  Every index pair is
  // enqueued exactly once, so "not in unprocessed" means already handled,
  // which is what the chain criterion needs.
  std::set<std::tuple<long long, int, int>> queue;
  std::set<std::pair<int, int>> unprocessed;
  auto push_pair = [&](int i, int j) {
    Monomial lcm = mono_lcm(leading_term(basis[static_cast<size_t>(i)], order).first,
                            leading_term(basis[static_cast<size_t>(j)], order).first);
    queue.emplace(total_degree(lcm), i, j);
    unprocessed.emplace(i, j);
  };
  for (int j = 1; j < static_cast<int>(basis.size()); ++j) {
    for (int i = 0; i < j; ++i) push_pair(i, j);
  }

  long long processed = 0;
  while (!queue.empty()) {
    if (++processed > opts.max_pairs) {
      std::ostringstream msg;
      msg << "basis computation exceeded the cap of " << opts.max_pairs
          << " S-pairs (basis size " << basis.size() << ")";
      throw ResourceLimitError(msg.str());
    }
    auto [deg, i, j] = *queue.begin();
    queue.erase(queue.begin());
    unprocessed.erase({i, j});

    Monomial lt_i = leading_term(basis[static_cast<size_t>(i)], order).first;
    Monomial lt_j = leading_term(basis[static_cast<size_t>(j)], order).first;
    if (mono_coprime(lt_i, lt_j)) continue;

    Monomial lcm = mono_lcm(lt_i, lt_j);
    bool chained = false;
    for (int k = 0; k < static_cast<int>(basis.size()) && !chained; ++k) {
      if (k == i || k == j) continue;
      if (!mono_divides(leading_term(basis[static_cast<size_t>(k)], order).first, lcm)) continue;
      bool ik_done = unprocessed.count({std::min(i, k), std::max(i, k)}) == 0;
      bool jk_done = unprocessed.count({std::min(j, k), std::max(j, k)}) == 0;
      if (ik_done && jk_done) chained = true;
    }
    if (chained) continue;

    Polynomial s = s_polynomial(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)], order);
    Polynomial r = normal_form_impl(s, basis, order);
    if (!r.is_zero()) {
      basis.push_back(make_monic(r, order));
      int fresh = static_cast<int>(basis.size()) - 1;
      for (int k = 0; k < fresh; ++k) push_pair(k, fresh);
    }
  }

  // Minimize: scanning by ascending leading term, keep an element only when
  // no previously kept leading term divides its own.
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& x, const Polynomial& y) {
    return order.less(leading_term(x, order).first, leading_term(y, order).first);
  });
  std::vector<Polynomial> kept;
  for (const Polynomial& g : basis) {
    Monomial gm = leading_term(g, order).first;
    bool redundant = false;
    for (const Polynomial& h : kept) {
      if (mono_divides(leading_term(h, order).first, gm)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(g);
  }

  // Inter-reduce the tails.  Leading terms are pairwise indivisible, so the
  // normal form keeps each leading term and the elements stay monic.
  for (size_t t = 0; t < kept.size(); ++t) {
    std::vector<Polynomial> others;
    others.reserve(kept.size() - 1);
    for (size_t k = 0; k < kept.size(); ++k) {
      if (k != t) others.push_back(kept[k]);
    }
    kept[t] = normal_form_impl(kept[t], others, order);
  }

  return GroebnerBasis(std::move(kept), order);
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  return normal_form_impl(p, gb.generators(), gb.order());
}

bool is_member(const Polynomial& p, const std::vector<Polynomial>& gens,
               const BuchbergerOptions& opts) {
  auto gb = buchberger(gens, MonomialOrder::graded_revlex(), opts);
  return normal_form(p, gb).is_zero();
}

namespace {

// Exact division inside the principal ideal (f): every nonzero partial
// remainder keeps a leading term divisible by the leading term of f, so a
// failure here is an internal invariant violation, not bad input.
Polynomial exact_quotient(const Polynomial& p, const Polynomial& f) {
  MonomialOrder order = MonomialOrder::graded_revlex();
  auto [fm, fc] = leading_term(f, order);
  Polynomial quotient(p.nvars());
  Polynomial h = p;
  while (!h.is_zero()) {
    auto [hm, hc] = leading_term(h, order);
    if (!mono_divides(fm, hm)) {
      throw std::logic_error("division by the quotient divisor left a remainder");
    }
    Monomial t = mono_quotient(hm, fm);
    Rational c = hc / fc;
    quotient.add_term(t, c);
    h -= f.times_term(t, c);
  }
  return quotient;
}

}  // namespace

std::vector<Polynomial> colon(const std::vector<Polynomial>& gens, const Polynomial& f,
                              const BuchbergerOptions& opts) {
  if (f.is_zero()) throw std::invalid_argument("colon divisor must be nonzero");
  int nv = f.nvars();

  // Lift into the ring with a tag variable u in front: u eliminates first,
  // and (gens)*u + ((1-u)*f) meets the u-free subring in (gens) n (f).
  auto lift = [nv](const Polynomial& p, int u_power) {
    Polynomial out(nv + 1);
    for (const auto& [mono, coeff] : p.terms()) {
      Monomial e(static_cast<size_t>(nv) + 1, 0);
      e[0] = u_power;
      std::copy(mono.begin(), mono.end(), e.begin() + 1);
      out.add_term(e, coeff);
    }
    return out;
  };

  std::vector<Polynomial> lifted;
  for (const Polynomial& g : gens) {
    if (g.nvars() != nv) throw std::invalid_argument("generators live in different rings");
    if (!g.is_zero()) lifted.push_back(lift(g, 1));
  }
  lifted.push_back(lift(f, 0) - lift(f, 1));

  auto gb = buchberger(std::move(lifted), MonomialOrder::elimination_block(1), opts);

  std::vector<Polynomial> quotient;
  for (const Polynomial& g : gb.generators()) {
    bool u_free = true;
    for (const auto& [mono, coeff] : g.terms()) {
      if (mono[0] != 0) {
        u_free = false;
        break;
      }
    }
    if (!u_free) continue;
    Polynomial projected(nv);
    for (const auto& [mono, coeff] : g.terms()) {
      projected.add_term(Monomial(mono.begin() + 1, mono.end()), coeff);
    }
    quotient.push_back(exact_quotient(projected, f));
  }

  if (quotient.empty()) return {};
  return buchberger(std::move(quotient), MonomialOrder::graded_revlex(), opts).generators();
}

bool ideals_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                  const BuchbergerOptions& opts) {
  std::vector<Polynomial> fa;
  std::vector<Polynomial> fb;
  for (const Polynomial& g : a) {
    if (!g.is_zero()) fa.push_back(g);
  }
  for (const Polynomial& g : b) {
    if (!g.is_zero()) fb.push_back(g);
  }
  if (fa.empty() || fb.empty()) return fa.empty() && fb.empty();

  auto gb_a = buchberger(fa, MonomialOrder::graded_revlex(), opts);
  auto gb_b = buchberger(fb, MonomialOrder::graded_revlex(), opts);
  for (const Polynomial& g : fb) {
    if (!normal_form(g, gb_a).is_zero()) return false;
  }
  for (const Polynomial& g : fa) {
    if (!normal_form(g, gb_b).is_zero()) return false;
  }
  return true;
}

}  // namespace curvres
