#pragma once

// The prop of finite sets and partial functions, with its (partial
// surjection, injection) factorisation system and A = total injections.
// Equivalent to pointed sets: pushouts and pullbacks are the pointed ones,
// with an extra bottom node standing for "undefined".  Corelations are
// partial equivalence relations on the two boundaries.

#include <utility>
#include <vector>

#include "corel/diagrams.hpp"

namespace corel {

inline constexpr int kUndef = -1;

// A partial function between finite ordinals; kUndef marks missing values.
class PartialFn {
 public:
  PartialFn(int dom, int cod, std::vector<int> table);

  int dom() const { return dom_; }
  int cod() const { return cod_; }
  const std::vector<int>& table() const { return table_; }
  int operator()(int i) const { return table_[i]; }
  bool defined(int i) const { return table_[i] != kUndef; }

  bool total() const;
  bool injective() const;       // on the defined part
  bool surjective() const;      // defined image covers the codomain

  friend bool operator==(const PartialFn& a, const PartialFn& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.table_ == b.table_;
  }

 private:
  int dom_;
  int cod_;
  std::vector<int> table_;
};

// A partial equivalence relation on [n] ⊎ [m]: points outside the domain
// carry kUndef, assigned blocks are in first-occurrence normal form.
struct PartialPartition {
  int n = 0;
  int m = 0;
  std::vector<int> blocks;

  int block_count() const;

  friend bool operator==(const PartialPartition&, const PartialPartition&) = default;
};

PartialPartition normalize_partial_partition(int n, int m, const std::vector<int>& raw);

struct PartialFnEngine {
  using Morphism = PartialFn;
  using CorelForm = PartialPartition;

  std::string name() const { return "pf"; }

  PartialFn identity(int n) const;
  PartialFn compose(const PartialFn& f, const PartialFn& g) const;
  bool equal(const PartialFn& f, const PartialFn& g) const { return f == g; }

  bool is_in_E(const PartialFn& f) const { return f.surjective(); }
  bool is_in_M(const PartialFn& f) const { return f.total() && f.injective(); }
  bool is_in_A(const PartialFn& f) const { return f.total() && f.injective(); }

  // Partial surjection onto the defined image followed by a total
  // injection enumerating it in increasing order.
  std::pair<PartialFn, PartialFn> factor(const PartialFn& f) const;

  PartialFn tensor(const PartialFn& f, const PartialFn& g) const;

  Span<PartialFn> pullback(const Cospan<PartialFn>& c) const;
  Cospan<PartialFn> pushout(const Span<PartialFn>& s) const;

  PartialFn pushout_mediator(const Span<PartialFn>& s, const Cospan<PartialFn>& cocone) const;
  PartialFn pullback_mediator(const Cospan<PartialFn>& c, const Span<PartialFn>& cone) const;

  Cospan<PartialFn> canonical_cospan(const Cospan<PartialFn>& c) const;
  Span<PartialFn> canonical_span(const Span<PartialFn>& s) const;

  PartialPartition corel_canonical(const Cospan<PartialFn>& c) const;
  Cospan<PartialFn> corel_cospan(const PartialPartition& p) const;
};

// Direct PER composition: glue blocks along shared middle witnesses; a
// block whose witness leaves the other side's domain is erased entirely.
PartialPartition per_compose_direct(int n, int z, int m, const PartialPartition& e1,
                                    const PartialPartition& e2);

}  // namespace corel
