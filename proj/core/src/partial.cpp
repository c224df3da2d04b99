#include "corel/partial.hpp"

#include <algorithm>
#include <cassert>

#include "corel/union_find.hpp"

namespace corel {

PartialFn::PartialFn(int dom, int cod, std::vector<int> table)
    : dom_(dom), cod_(cod), table_(std::move(table)) {
  if (dom_ < 0 || cod_ < 0 || static_cast<int>(table_.size()) != dom_)
    throw DimensionError("partial function table length must equal the domain");
  for (int v : table_)
    if (v != kUndef && (v < 0 || v >= cod_))
      throw DimensionError("partial function entry outside the codomain");
}

bool PartialFn::total() const {
  for (int v : table_)
    if (v == kUndef) return false;
  return true;
}

bool PartialFn::injective() const {
  std::vector<bool> seen(cod_, false);
  for (int v : table_) {
    if (v == kUndef) continue;
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool PartialFn::surjective() const {
  std::vector<bool> seen(cod_, false);
  int hit = 0;
  for (int v : table_)
    if (v != kUndef && !seen[v]) {
      seen[v] = true;
      ++hit;
    }
  return hit == cod_;
}

int PartialPartition::block_count() const {
  int k = 0;
  for (int b : blocks) k = std::max(k, b + 1);
  return k;
}

PartialPartition normalize_partial_partition(int n, int m, const std::vector<int>& raw) {
  assert(static_cast<int>(raw.size()) == n + m);
  int top = 0;
  for (int v : raw) top = std::max(top, v + 1);
  std::vector<int> remap(top, -1);
  std::vector<int> out(raw.size(), kUndef);
  int next = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == kUndef) continue;
    int& slot = remap[raw[i]];
    if (slot < 0) slot = next++;
    out[i] = slot;
  }
  return PartialPartition{n, m, std::move(out)};
}

PartialFn PartialFnEngine::identity(int n) const {
  std::vector<int> t(n);
  for (int i = 0; i < n; ++i) t[i] = i;
  return PartialFn(n, n, std::move(t));
}

PartialFn PartialFnEngine::compose(const PartialFn& f, const PartialFn& g) const {
  if (f.cod() != g.dom())
    throw DimensionError("partial function composition: boundary mismatch");
  std::vector<int> t(f.dom(), kUndef);
  for (int i = 0; i < f.dom(); ++i)
    if (f.defined(i)) t[i] = g(f(i));  // may itself be kUndef
  return PartialFn(f.dom(), g.cod(), std::move(t));
}

std::pair<PartialFn, PartialFn> PartialFnEngine::factor(const PartialFn& f) const {
  std::vector<int> image;
  std::vector<bool> seen(f.cod(), false);
  for (int v : f.table())
    if (v != kUndef && !seen[v]) {
      seen[v] = true;
      image.push_back(v);
    }
  std::sort(image.begin(), image.end());
  std::vector<int> index(f.cod(), kUndef);
  for (std::size_t k = 0; k < image.size(); ++k) index[image[k]] = static_cast<int>(k);
  std::vector<int> etab(f.dom(), kUndef);
  for (int i = 0; i < f.dom(); ++i)
    if (f.defined(i)) etab[i] = index[f(i)];
  const int k = static_cast<int>(image.size());
  return {PartialFn(f.dom(), k, std::move(etab)), PartialFn(k, f.cod(), std::move(image))};
}

PartialFn PartialFnEngine::tensor(const PartialFn& f, const PartialFn& g) const {
  std::vector<int> t;
  t.reserve(f.dom() + g.dom());
  for (int v : f.table()) t.push_back(v);
  for (int v : g.table()) t.push_back(v == kUndef ? kUndef : v + f.cod());
  return PartialFn(f.dom() + g.dom(), f.cod() + g.cod(), std::move(t));
}

Span<PartialFn> PartialFnEngine::pullback(const Cospan<PartialFn>& c) const {
  const PartialFn& f = c.left;
  const PartialFn& g = c.right;
  // Pointed fiber product: pairs over the extended domains (bottom added on
  // both sides) whose images agree, minus the basepoint pair.  Two points
  // that are both undefined match through bottom.
  std::vector<int> p, q;
  auto extended = [](const PartialFn& h, int x) {
    return x == kUndef ? kUndef : (h.defined(x) ? h(x) : kUndef);
  };
  for (int i = 0; i <= f.dom(); ++i)
    for (int j = 0; j <= g.dom(); ++j) {
      const int x = i == f.dom() ? kUndef : i;
      const int y = j == g.dom() ? kUndef : j;
      if (x == kUndef && y == kUndef) continue;  // the basepoint itself
      if (extended(f, x) != extended(g, y)) continue;
      p.push_back(x);
      q.push_back(y);
    }
  const int apex = static_cast<int>(p.size());
  return Span<PartialFn>(PartialFn(apex, f.dom(), std::move(p)),
                         PartialFn(apex, g.dom(), std::move(q)));
}

Cospan<PartialFn> PartialFnEngine::pushout(const Span<PartialFn>& s) const {
  const PartialFn& p = s.left;
  const PartialFn& q = s.right;
  const int n = p.cod(), m = q.cod();
  const int bottom = n + m;  // stands for "undefined" on both sides
  UnionFind uf(n + m + 1);
  for (int i = 0; i < s.apex(); ++i) {
    const int a = p.defined(i) ? p(i) : bottom;
    const int b = q.defined(i) ? n + q(i) : bottom;
    uf.unite(a, b);
  }
  const int broot = uf.find(bottom);
  std::vector<int> ids(n + m, kUndef);
  int next = 0;
  std::vector<int> remap(n + m + 1, -1);
  for (int x = 0; x < n + m; ++x) {
    const int r = uf.find(x);
    if (r == broot) continue;  // glued to bottom: undefined in the quotient
    if (remap[r] < 0) remap[r] = next++;
    ids[x] = remap[r];
  }
  std::vector<int> j1(ids.begin(), ids.begin() + n);
  std::vector<int> j2(ids.begin() + n, ids.end());
  return Cospan<PartialFn>(PartialFn(n, next, std::move(j1)),
                           PartialFn(m, next, std::move(j2)));
}

PartialFn PartialFnEngine::pushout_mediator(const Span<PartialFn>& s,
                                            const Cospan<PartialFn>& cocone) const {
  if (s.dom() != cocone.dom() || s.cod() != cocone.cod())
    throw DimensionError("pushout mediator: cocone boundaries do not match");
  Cospan<PartialFn> po = pushout(s);
  std::vector<int> h(po.apex(), kUndef);
  std::vector<bool> set(po.apex(), false);
  for (int i = 0; i < po.left.dom(); ++i)
    if (po.left.defined(i)) {
      h[po.left(i)] = cocone.left(i);
      set[po.left(i)] = true;
    }
  for (int j = 0; j < po.right.dom(); ++j)
    if (po.right.defined(j)) {
      h[po.right(j)] = cocone.right(j);
      set[po.right(j)] = true;
    }
  assert(std::find(set.begin(), set.end(), false) == set.end());
  return PartialFn(po.apex(), cocone.apex(), std::move(h));
}

PartialFn PartialFnEngine::pullback_mediator(const Cospan<PartialFn>& c,
                                             const Span<PartialFn>& cone) const {
  if (c.dom() != cone.dom() || c.cod() != cone.cod())
    throw DimensionError("pullback mediator: cone boundaries do not match");
  Span<PartialFn> pb = pullback(c);
  // Index apex points of the pullback by their (left, right) coordinates,
  // using dom/cod as the slot for "undefined".
  std::vector<std::vector<int>> at(c.left.dom() + 1, std::vector<int>(c.right.dom() + 1, -1));
  auto slot = [&](const PartialFn& leg, int t, int undef_slot) {
    return leg.defined(t) ? leg(t) : undef_slot;
  };
  for (int t = 0; t < pb.apex(); ++t)
    at[slot(pb.left, t, c.left.dom())][slot(pb.right, t, c.right.dom())] = t;
  std::vector<int> u(cone.apex(), kUndef);
  for (int t = 0; t < cone.apex(); ++t) {
    const int a = slot(cone.left, t, c.left.dom());
    const int b = slot(cone.right, t, c.right.dom());
    if (a == c.left.dom() && b == c.right.dom()) continue;  // maps to bottom
    const int idx = at[a][b];
    if (idx < 0)
      throw PreconditionError("pullback mediator: cone does not commute");
    u[t] = idx;
  }
  return PartialFn(cone.apex(), pb.apex(), std::move(u));
}

Cospan<PartialFn> PartialFnEngine::canonical_cospan(const Cospan<PartialFn>& c) const {
  const int apex = c.apex();
  std::vector<int> remap(apex, -1);
  int next = 0;
  for (int v : c.left.table())
    if (v != kUndef && remap[v] < 0) remap[v] = next++;
  for (int v : c.right.table())
    if (v != kUndef && remap[v] < 0) remap[v] = next++;
  for (int a = 0; a < apex; ++a)
    if (remap[a] < 0) remap[a] = next++;
  std::vector<int> l(c.left.dom(), kUndef), r(c.right.dom(), kUndef);
  for (int i = 0; i < c.left.dom(); ++i)
    if (c.left.defined(i)) l[i] = remap[c.left(i)];
  for (int j = 0; j < c.right.dom(); ++j)
    if (c.right.defined(j)) r[j] = remap[c.right(j)];
  return Cospan<PartialFn>(PartialFn(c.dom(), apex, std::move(l)),
                           PartialFn(c.cod(), apex, std::move(r)));
}

Span<PartialFn> PartialFnEngine::canonical_span(const Span<PartialFn>& s) const {
  // Sort leg pairs lexicographically with undefined coordinates last.
  auto key = [&](int t) {
    const int a = s.left.defined(t) ? s.left(t) : s.dom();
    const int b = s.right.defined(t) ? s.right(t) : s.cod();
    return std::pair<int, int>(a, b);
  };
  std::vector<int> order(s.apex());
  for (int t = 0; t < s.apex(); ++t) order[t] = t;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });
  std::vector<int> l(s.apex()), r(s.apex());
  for (int t = 0; t < s.apex(); ++t) {
    l[t] = s.left(order[t]);
    r[t] = s.right(order[t]);
  }
  return Span<PartialFn>(PartialFn(s.apex(), s.dom(), std::move(l)),
                         PartialFn(s.apex(), s.cod(), std::move(r)));
}

PartialPartition PartialFnEngine::corel_canonical(const Cospan<PartialFn>& c) const {
  const int n = c.dom(), m = c.cod();
  std::vector<int> raw(n + m, kUndef);
  for (int i = 0; i < n; ++i)
    if (c.left.defined(i)) raw[i] = c.left(i);
  for (int j = 0; j < m; ++j)
    if (c.right.defined(j)) raw[n + j] = c.right(j);
  return normalize_partial_partition(n, m, raw);
}

Cospan<PartialFn> PartialFnEngine::corel_cospan(const PartialPartition& p) const {
  const int k = p.block_count();
  std::vector<int> l(p.blocks.begin(), p.blocks.begin() + p.n);
  std::vector<int> r(p.blocks.begin() + p.n, p.blocks.end());
  return Cospan<PartialFn>(PartialFn(p.n, k, std::move(l)),
                           PartialFn(p.m, k, std::move(r)));
}

PartialPartition per_compose_direct(int n, int z, int m, const PartialPartition& e1,
                                    const PartialPartition& e2) {
  if (e1.n != n || e1.m != z || e2.n != z || e2.m != m)
    throw DimensionError("PER composition: boundary mismatch");
  const int bottom = n + z + m;
  UnionFind uf(n + z + m + 1);
  std::vector<int> rep1(e1.block_count(), -1);
  for (int i = 0; i < n + z; ++i) {
    if (e1.blocks[i] == kUndef) continue;
    int& r = rep1[e1.blocks[i]];
    if (r < 0)
      r = i;
    else
      uf.unite(r, i);
  }
  std::vector<int> rep2(e2.block_count(), -1);
  for (int i = 0; i < z + m; ++i) {
    if (e2.blocks[i] == kUndef) continue;
    const int node = n + i;
    int& r = rep2[e2.blocks[i]];
    if (r < 0)
      r = node;
    else
      uf.unite(r, node);
  }
  // A middle witness inside exactly one of the two domains kills its block.
  for (int j = 0; j < z; ++j) {
    const bool in1 = e1.blocks[n + j] != kUndef;
    const bool in2 = e2.blocks[j] != kUndef;
    if (in1 != in2) uf.unite(n + j, bottom);
  }
  const int broot = uf.find(bottom);
  std::vector<int> raw(n + m, kUndef);
  auto keep = [&](int node, bool in_domain) {
    if (!in_domain) return kUndef;
    const int r = uf.find(node);
    return r == broot ? kUndef : r;
  };
  for (int i = 0; i < n; ++i) raw[i] = keep(i, e1.blocks[i] != kUndef);
  for (int j = 0; j < m; ++j) raw[n + j] = keep(n + z + j, e2.blocks[z + j] != kUndef);
  return normalize_partial_partition(n, m, raw);
}

}  // namespace corel
