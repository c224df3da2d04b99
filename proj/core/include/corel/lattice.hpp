#pragma once

// Finite posets that decompose as coproducts of lattices, viewed as
// categories: one object per element, one arrow per comparable pair.
// Pushouts are joins and pullbacks are meets, taken inside a summand;
// with the (identities, everything) factorisation system all parallel
// cospans collapse to a single corelation per summand.

#include <string>
#include <vector>

#include "corel/diagrams.hpp"

namespace corel {

class FiniteLattice {
 public:
  // Validates the poset axioms, that every connected component is a
  // lattice, and fills the meet/join tables (-1 across summands).
  static FiniteLattice from_leq(std::vector<std::vector<bool>> leq);

  static FiniteLattice chain(int k);
  static FiniteLattice diamond();  // bottom, two incomparable middles, top
  static FiniteLattice coproduct(const FiniteLattice& a, const FiniteLattice& b);

  int size() const { return n_; }
  bool leq(int a, int b) const { return leq_[a][b]; }
  int join(int a, int b) const { return join_[a][b]; }  // -1 when none
  int meet(int a, int b) const { return meet_[a][b]; }
  int component(int a) const { return comp_[a]; }
  int component_count() const { return comps_; }

  // |{c : a <= c and b <= c}|, the cospan hom count from a to b.
  int upper_bound_count(int a, int b) const;
  // |{c : c <= a and c <= b}|, the span hom count.
  int lower_bound_count(int a, int b) const;

  // Number of corelation classes from a to b: cospans a -> c <- b modulo
  // zigzags of mediators.  1 within a summand, 0 across.
  int corel_class_count(int a, int b) const;

 private:
  FiniteLattice() = default;

  int n_ = 0;
  int comps_ = 0;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<int>> join_;
  std::vector<std::vector<int>> meet_;
  std::vector<int> comp_;
};

}  // namespace corel
