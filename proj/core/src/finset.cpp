#include "corel/finset.hpp"

#include <algorithm>
#include <cassert>

#include "corel/union_find.hpp"

namespace corel {

FinFn::FinFn(int dom, int cod, std::vector<int> table)
    : dom_(dom), cod_(cod), table_(std::move(table)) {
  if (dom_ < 0 || cod_ < 0 || static_cast<int>(table_.size()) != dom_)
    throw DimensionError("function table length must equal the domain");
  for (int v : table_)
    if (v < 0 || v >= cod_)
      throw DimensionError("function table entry outside the codomain");
}

bool FinFn::injective() const {
  std::vector<bool> seen(cod_, false);
  for (int v : table_) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool FinFn::surjective() const {
  std::vector<bool> seen(cod_, false);
  int hit = 0;
  for (int v : table_)
    if (!seen[v]) {
      seen[v] = true;
      ++hit;
    }
  return hit == cod_;
}

FnClassification ff_classify(const FinFn& f) {
  return FnClassification{f.injective(), f.surjective()};
}

int Partition::block_count() const {
  int k = 0;
  for (int b : blocks) k = std::max(k, b + 1);
  return k;
}

Partition normalize_partition(int n, int m, const std::vector<int>& raw) {
  assert(static_cast<int>(raw.size()) == n + m);
  int top = 0;
  for (int v : raw) top = std::max(top, v + 1);
  std::vector<int> remap(top, -1);
  std::vector<int> out(raw.size());
  int next = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    int& slot = remap[raw[i]];
    if (slot < 0) slot = next++;
    out[i] = slot;
  }
  return Partition{n, m, std::move(out)};
}

FinFn FinSetEngine::identity(int n) const {
  std::vector<int> t(n);
  for (int i = 0; i < n; ++i) t[i] = i;
  return FinFn(n, n, std::move(t));
}

FinFn FinSetEngine::compose(const FinFn& f, const FinFn& g) const {
  if (f.cod() != g.dom())
    throw DimensionError("function composition: boundary mismatch");
  std::vector<int> t(f.dom());
  for (int i = 0; i < f.dom(); ++i) t[i] = g(f(i));
  return FinFn(f.dom(), g.cod(), std::move(t));
}

std::pair<FinFn, FinFn> FinSetEngine::factor(const FinFn& f) const {
  std::vector<int> image;
  std::vector<bool> seen(f.cod(), false);
  for (int v : f.table())
    if (!seen[v]) {
      seen[v] = true;
      image.push_back(v);
    }
  std::sort(image.begin(), image.end());
  std::vector<int> index(f.cod(), -1);
  for (std::size_t k = 0; k < image.size(); ++k) index[image[k]] = static_cast<int>(k);
  std::vector<int> etab(f.dom());
  for (int i = 0; i < f.dom(); ++i) etab[i] = index[f(i)];
  const int k = static_cast<int>(image.size());
  return {FinFn(f.dom(), k, std::move(etab)), FinFn(k, f.cod(), std::move(image))};
}

FinFn FinSetEngine::tensor(const FinFn& f, const FinFn& g) const {
  std::vector<int> t;
  t.reserve(f.dom() + g.dom());
  for (int v : f.table()) t.push_back(v);
  for (int v : g.table()) t.push_back(v + f.cod());
  return FinFn(f.dom() + g.dom(), f.cod() + g.cod(), std::move(t));
}

Span<FinFn> FinSetEngine::pullback(const Cospan<FinFn>& c) const {
  const FinFn& f = c.left;
  const FinFn& g = c.right;
  std::vector<int> p, q;
  for (int i = 0; i < f.dom(); ++i)
    for (int j = 0; j < g.dom(); ++j)
      if (f(i) == g(j)) {
        p.push_back(i);
        q.push_back(j);
      }
  const int apex = static_cast<int>(p.size());
  return Span<FinFn>(FinFn(apex, f.dom(), std::move(p)),
                     FinFn(apex, g.dom(), std::move(q)));
}

Cospan<FinFn> FinSetEngine::pushout(const Span<FinFn>& s) const {
  const FinFn& p = s.left;
  const FinFn& q = s.right;
  const int n = p.cod(), m = q.cod();
  UnionFind uf(n + m);
  for (int i = 0; i < s.apex(); ++i) uf.unite(p(i), n + q(i));
  std::vector<int> ids = uf.block_ids();
  int apex = 0;
  for (int b : ids) apex = std::max(apex, b + 1);
  std::vector<int> j1(ids.begin(), ids.begin() + n);
  std::vector<int> j2(ids.begin() + n, ids.end());
  return Cospan<FinFn>(FinFn(n, apex, std::move(j1)), FinFn(m, apex, std::move(j2)));
}

FinFn FinSetEngine::pushout_mediator(const Span<FinFn>& s,
                                     const Cospan<FinFn>& cocone) const {
  if (s.dom() != cocone.dom() || s.cod() != cocone.cod())
    throw DimensionError("pushout mediator: cocone boundaries do not match");
  Cospan<FinFn> po = pushout(s);
  // Every apex point of the pushout is hit by a boundary point, so the
  // mediator is read off directly from the cocone legs.
  std::vector<int> h(po.apex(), -1);
  for (int i = 0; i < po.left.dom(); ++i) h[po.left(i)] = cocone.left(i);
  for (int j = 0; j < po.right.dom(); ++j) h[po.right(j)] = cocone.right(j);
  assert(std::find(h.begin(), h.end(), -1) == h.end());
  return FinFn(po.apex(), cocone.apex(), std::move(h));
}

FinFn FinSetEngine::pullback_mediator(const Cospan<FinFn>& c,
                                      const Span<FinFn>& cone) const {
  if (c.dom() != cone.dom() || c.cod() != cone.cod())
    throw DimensionError("pullback mediator: cone boundaries do not match");
  Span<FinFn> pb = pullback(c);
  // pb pairs are in lexicographic order; index them for lookup.
  std::vector<std::vector<int>> at(c.left.dom(), std::vector<int>(c.right.dom(), -1));
  for (int t = 0; t < pb.apex(); ++t) at[pb.left(t)][pb.right(t)] = t;
  std::vector<int> u(cone.apex());
  for (int t = 0; t < cone.apex(); ++t) {
    const int idx = at[cone.left(t)][cone.right(t)];
    if (idx < 0)
      throw PreconditionError("pullback mediator: cone does not commute");
    u[t] = idx;
  }
  return FinFn(cone.apex(), pb.apex(), std::move(u));
}

Cospan<FinFn> FinSetEngine::canonical_cospan(const Cospan<FinFn>& c) const {
  const int apex = c.apex();
  std::vector<int> remap(apex, -1);
  int next = 0;
  for (int v : c.left.table())
    if (remap[v] < 0) remap[v] = next++;
  for (int v : c.right.table())
    if (remap[v] < 0) remap[v] = next++;
  for (int a = 0; a < apex; ++a)
    if (remap[a] < 0) remap[a] = next++;  // unhit apex points keep the tail
  std::vector<int> l(c.left.dom()), r(c.right.dom());
  for (int i = 0; i < c.left.dom(); ++i) l[i] = remap[c.left(i)];
  for (int j = 0; j < c.right.dom(); ++j) r[j] = remap[c.right(j)];
  return Cospan<FinFn>(FinFn(c.dom(), apex, std::move(l)),
                       FinFn(c.cod(), apex, std::move(r)));
}

Span<FinFn> FinSetEngine::canonical_span(const Span<FinFn>& s) const {
  std::vector<std::pair<int, int>> pairs(s.apex());
  for (int t = 0; t < s.apex(); ++t) pairs[t] = {s.left(t), s.right(t)};
  std::sort(pairs.begin(), pairs.end());
  std::vector<int> l(s.apex()), r(s.apex());
  for (int t = 0; t < s.apex(); ++t) {
    l[t] = pairs[t].first;
    r[t] = pairs[t].second;
  }
  return Span<FinFn>(FinFn(s.apex(), s.dom(), std::move(l)),
                     FinFn(s.apex(), s.cod(), std::move(r)));
}

Partition FinSetEngine::corel_canonical(const Cospan<FinFn>& c) const {
  // Two boundary points share a block iff they land on the same apex point;
  // unhit apex points contribute nothing.
  const int n = c.dom(), m = c.cod();
  std::vector<int> raw(n + m);
  for (int i = 0; i < n; ++i) raw[i] = c.left(i);
  for (int j = 0; j < m; ++j) raw[n + j] = c.right(j);
  return normalize_partition(n, m, raw);
}

Cospan<FinFn> FinSetEngine::corel_cospan(const Partition& p) const {
  const int k = p.block_count();
  std::vector<int> l(p.blocks.begin(), p.blocks.begin() + p.n);
  std::vector<int> r(p.blocks.begin() + p.n, p.blocks.end());
  return Cospan<FinFn>(FinFn(p.n, k, std::move(l)), FinFn(p.m, k, std::move(r)));
}

RelationTable FinSetEngine::rel_canonical(const Span<FinFn>& s) const {
  std::vector<std::pair<int, int>> pairs(s.apex());
  for (int t = 0; t < s.apex(); ++t) pairs[t] = {s.left(t), s.right(t)};
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return RelationTable{s.dom(), s.cod(), std::move(pairs)};
}

Span<FinFn> FinSetEngine::rel_span(const RelationTable& r) const {
  const int apex = static_cast<int>(r.pairs.size());
  std::vector<int> l(apex), rr(apex);
  for (int t = 0; t < apex; ++t) {
    l[t] = r.pairs[t].first;
    rr[t] = r.pairs[t].second;
  }
  return Span<FinFn>(FinFn(apex, r.dom, std::move(l)), FinFn(apex, r.cod, std::move(rr)));
}

Partition er_compose_direct(int n, int z, int m, const Partition& e1,
                            const Partition& e2) {
  if (e1.n != n || e1.m != z || e2.n != z || e2.m != m)
    throw DimensionError("equivalence relation composition: boundary mismatch");
  UnionFind uf(n + z + m);
  // Glue blocks of e1 on [n]⊎[z] and of e2 on [z]⊎[m] along the shared z.
  std::vector<int> rep1(e1.block_count(), -1);
  for (int i = 0; i < n + z; ++i) {
    int& r = rep1[e1.blocks[i]];
    if (r < 0)
      r = i;
    else
      uf.unite(r, i);
  }
  std::vector<int> rep2(e2.block_count(), -1);
  for (int i = 0; i < z + m; ++i) {
    const int node = n + i;  // e2's elements sit after [n]
    int& r = rep2[e2.blocks[i]];
    if (r < 0)
      r = node;
    else
      uf.unite(r, node);
  }
  std::vector<int> raw(n + m);
  for (int i = 0; i < n; ++i) raw[i] = uf.find(i);
  for (int j = 0; j < m; ++j) raw[n + j] = uf.find(n + z + j);
  // Raw ids may be sparse; renormalize over the restriction.
  std::vector<int> dense(raw);
  std::vector<int> remap(n + z + m, -1);
  int next = 0;
  for (int& v : dense) {
    if (remap[v] < 0) remap[v] = next++;
    v = remap[v];
  }
  return normalize_partition(n, m, dense);
}

}  // namespace corel
