#pragma once

// The prop of finite sets and total functions, with its (surjection,
// injection) factorisation system and A = injections.  Pushouts are
// union-find quotients, pullbacks are fiber products, corelations are set
// partitions of the two boundaries and relations are subsets of their
// product.

#include <utility>
#include <vector>

#include "corel/diagrams.hpp"

namespace corel {

// A total function between finite ordinals, tabulated.
class FinFn {
 public:
  FinFn(int dom, int cod, std::vector<int> table);

  int dom() const { return dom_; }
  int cod() const { return cod_; }
  const std::vector<int>& table() const { return table_; }
  int operator()(int i) const { return table_[i]; }

  bool injective() const;
  bool surjective() const;

  friend bool operator==(const FinFn& a, const FinFn& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.table_ == b.table_;
  }

 private:
  int dom_;
  int cod_;
  std::vector<int> table_;
};

// A set partition of [n] ⊎ [m].  `blocks` assigns a block id to each of the
// n + m points; ids appear in order of first occurrence (a restricted
// growth string), which makes the representation unique per partition.
struct Partition {
  int n = 0;
  int m = 0;
  std::vector<int> blocks;

  int block_count() const;

  friend bool operator==(const Partition&, const Partition&) = default;
};

// Relabels arbitrary block ids into the first-occurrence normal form.
Partition normalize_partition(int n, int m, const std::vector<int>& raw);

// A binary relation between [n] and [m]: lexicographically sorted,
// deduplicated pairs.
struct RelationTable {
  int dom = 0;
  int cod = 0;
  std::vector<std::pair<int, int>> pairs;

  friend bool operator==(const RelationTable&, const RelationTable&) = default;
};

struct FinSetEngine {
  using Morphism = FinFn;
  using CorelForm = Partition;
  using RelForm = RelationTable;

  std::string name() const { return "finset"; }

  FinFn identity(int n) const;
  FinFn compose(const FinFn& f, const FinFn& g) const;  // f then g
  bool equal(const FinFn& f, const FinFn& g) const { return f == g; }

  bool is_in_E(const FinFn& f) const { return f.surjective(); }
  bool is_in_M(const FinFn& f) const { return f.injective(); }
  bool is_in_A(const FinFn& f) const { return f.injective(); }

  // Surjection-injection factorisation; the injection enumerates the image
  // in increasing value order.
  std::pair<FinFn, FinFn> factor(const FinFn& f) const;

  FinFn tensor(const FinFn& f, const FinFn& g) const;

  // Fiber product; apex points are the pairs (i, j) with f(i) = g(j) in
  // lexicographic order.
  Span<FinFn> pullback(const Cospan<FinFn>& c) const;
  // Union-find quotient of [n] ⊎ [m]; blocks numbered by least
  // representative.
  Cospan<FinFn> pushout(const Span<FinFn>& s) const;

  FinFn pushout_mediator(const Span<FinFn>& s, const Cospan<FinFn>& cocone) const;
  FinFn pullback_mediator(const Cospan<FinFn>& c, const Span<FinFn>& cone) const;

  // Unique representative of the iso class: apex points renamed by first
  // occurrence along the legs, unhit points pushed to the tail.
  Cospan<FinFn> canonical_cospan(const Cospan<FinFn>& c) const;
  // Unique representative: leg pairs sorted lexicographically.
  Span<FinFn> canonical_span(const Span<FinFn>& s) const;

  Partition corel_canonical(const Cospan<FinFn>& c) const;
  Cospan<FinFn> corel_cospan(const Partition& p) const;

  RelationTable rel_canonical(const Span<FinFn>& s) const;
  Span<FinFn> rel_span(const RelationTable& r) const;
};

struct FnClassification {
  bool injective = false;
  bool surjective = false;
};

FnClassification ff_classify(const FinFn& f);

// Composition of equivalence relations by gluing blocks along the shared
// middle boundary, bypassing cospans entirely.
Partition er_compose_direct(int n, int z, int m, const Partition& e1,
                            const Partition& e2);

}  // namespace corel
