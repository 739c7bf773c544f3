#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "curvres/polynomial.hpp"

namespace curvres {

// Thrown when a computation exceeds its configured work cap.  Distinct from
// input validation errors so callers can tell "too big" from "wrong".
class ResourceLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Total order on monomials of a fixed ring.
//
//  - graded_revlex: standard-degree reverse lexicographic with
//    X_0 > X_1 > ... > X_{nvars-1}.  The default everywhere.
//  - elimination_block(k): monomials are compared first by total degree in
//    the leading k variables, ties broken by graded revlex.  Any monomial
//    involving one of the first k variables beats any monomial that does
//    not, so those variables are eliminated first.
class MonomialOrder {
public:
  enum class Kind { GradedRevLex, EliminationBlock };

  static MonomialOrder graded_revlex() { return MonomialOrder(Kind::GradedRevLex, 0); }
  static MonomialOrder elimination_block(int block_size) {
    if (block_size <= 0) throw std::invalid_argument("elimination block must be positive");
    return MonomialOrder(Kind::EliminationBlock, block_size);
  }

  Kind kind() const { return kind_; }
  int block_size() const { return block_; }

  bool less(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
  MonomialOrder(Kind kind, int block) : kind_(kind), block_(block) {}

  Kind kind_;
  int block_;
};

// Leading term of a nonzero polynomial under the given order.
std::pair<Monomial, Rational> leading_term(const Polynomial& p, const MonomialOrder& order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

struct BuchbergerOptions {
  // Upper bound on S-pairs taken off the work queue before the computation
  // gives up with a ResourceLimitError.
  long long max_pairs = 1'000'000;
};

class GroebnerBasis;

// Buchberger's algorithm with the normal selection strategy (smallest total
// degree of the pair lcm first) and the coprimality and chain criteria.
// The result is the unique reduced basis: monic generators, no term of any
// generator divisible by the leading term of another, sorted by ascending
// leading term.
GroebnerBasis buchberger(std::vector<Polynomial> gens, const MonomialOrder& order,
                         const BuchbergerOptions& opts = {});

class GroebnerBasis {
public:
  const std::vector<Polynomial>& generators() const { return gens_; }
  const MonomialOrder& order() const { return order_; }

private:
  friend GroebnerBasis buchberger(std::vector<Polynomial>, const MonomialOrder&,
                                  const BuchbergerOptions&);

  GroebnerBasis(std::vector<Polynomial> gens, const MonomialOrder& order)
      : gens_(std::move(gens)), order_(order) {}

  std::vector<Polynomial> gens_;
  MonomialOrder order_;
};

// Remainder of p on division by the basis: no term of the result is
// divisible by any leading term.  Zero exactly when p lies in the ideal.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

// Ideal membership of p in (gens), via a graded revlex basis.
bool is_member(const Polynomial& p, const std::vector<Polynomial>& gens,
               const BuchbergerOptions& opts = {});

// Generators of the ideal quotient (gens) : f, computed by adjoining a tag
// variable u, intersecting (u*g_1, ..., u*g_r, (1-u)*f) with the u-free
// subring, and dividing the survivors exactly by f.  Returns the reduced
// graded revlex basis of the quotient; empty means the zero ideal.
std::vector<Polynomial> colon(const std::vector<Polynomial>& gens, const Polynomial& f,
                              const BuchbergerOptions& opts = {});

// Mutual containment of (a) and (b), checked by normal forms against the
// two reduced bases.
bool ideals_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                  const BuchbergerOptions& opts = {});

}  // namespace curvres
