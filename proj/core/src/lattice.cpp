#include "corel/lattice.hpp"

#include "corel/union_find.hpp"

namespace corel {

FiniteLattice FiniteLattice::from_leq(std::vector<std::vector<bool>> leq) {
  FiniteLattice l;
  l.n_ = static_cast<int>(leq.size());
  for (const auto& row : leq)
    if (static_cast<int>(row.size()) != l.n_)
      throw PreconditionError("lattice: leq matrix must be square");
  const int n = l.n_;
  for (int a = 0; a < n; ++a)
    if (!leq[a][a]) throw PreconditionError("lattice: order must be reflexive");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a != b && leq[a][b] && leq[b][a])
        throw PreconditionError("lattice: order must be antisymmetric");
      for (int c = 0; c < n; ++c)
        if (leq[a][b] && leq[b][c] && !leq[a][c])
          throw PreconditionError("lattice: order must be transitive");
    }

  l.leq_ = std::move(leq);
  l.join_.assign(n, std::vector<int>(n, -1));
  l.meet_.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // least upper bound, when any upper bound exists
      int best = -1;
      for (int c = 0; c < n; ++c) {
        if (!l.leq_[a][c] || !l.leq_[b][c]) continue;
        if (best < 0 || l.leq_[c][best]) best = c;
      }
      if (best >= 0) {
        for (int c = 0; c < n; ++c)
          if (l.leq_[a][c] && l.leq_[b][c] && !l.leq_[best][c])
            throw PreconditionError("lattice: upper bounds without a least one");
        l.join_[a][b] = best;
      }
      int low = -1;
      for (int c = 0; c < n; ++c) {
        if (!l.leq_[c][a] || !l.leq_[c][b]) continue;
        if (low < 0 || l.leq_[low][c]) low = c;
      }
      if (low >= 0) {
        for (int c = 0; c < n; ++c)
          if (l.leq_[c][a] && l.leq_[c][b] && !l.leq_[c][low])
            throw PreconditionError("lattice: lower bounds without a greatest one");
        l.meet_[a][b] = low;
      }
      if ((l.join_[a][b] < 0) != (l.meet_[a][b] < 0))
        throw PreconditionError("lattice: join/meet existence must agree");
    }

  UnionFind uf(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (l.leq_[a][b]) uf.unite(a, b);
  l.comp_ = uf.block_ids();
  l.comps_ = 0;
  for (int c : l.comp_) l.comps_ = std::max(l.comps_, c + 1);
  // within a component every pair needs a join (each summand is a lattice)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (l.comp_[a] == l.comp_[b] && l.join_[a][b] < 0)
        throw PreconditionError("lattice: component is not a lattice");
      if (l.comp_[a] != l.comp_[b] && l.join_[a][b] >= 0)
        throw PreconditionError("lattice: join across components");
    }
  return l;
}

FiniteLattice FiniteLattice::chain(int k) {
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b) leq[a][b] = true;
  return from_leq(std::move(leq));
}

FiniteLattice FiniteLattice::diamond() {
  // 0 = bottom, 1 and 2 incomparable, 3 = top
  std::vector<std::vector<bool>> leq(4, std::vector<bool>(4, false));
  for (int a = 0; a < 4; ++a) leq[a][a] = true;
  leq[0][1] = leq[0][2] = leq[0][3] = true;
  leq[1][3] = leq[2][3] = true;
  return from_leq(std::move(leq));
}

FiniteLattice FiniteLattice::coproduct(const FiniteLattice& a, const FiniteLattice& b) {
  const int n = a.size() + b.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) leq[i][j] = a.leq(i, j);
  for (int i = 0; i < b.size(); ++i)
    for (int j = 0; j < b.size(); ++j) leq[a.size() + i][a.size() + j] = b.leq(i, j);
  return from_leq(std::move(leq));
}

int FiniteLattice::upper_bound_count(int a, int b) const {
  int k = 0;
  for (int c = 0; c < n_; ++c)
    if (leq_[a][c] && leq_[b][c]) ++k;
  return k;
}

int FiniteLattice::lower_bound_count(int a, int b) const {
  int k = 0;
  for (int c = 0; c < n_; ++c)
    if (leq_[c][a] && leq_[c][b]) ++k;
  return k;
}

int FiniteLattice::corel_class_count(int a, int b) const {
  // Candidate apexes, glued whenever a mediator (a comparable pair) links
  // them; class count = connected components of the candidate set.
  std::vector<int> cand;
  for (int c = 0; c < n_; ++c)
    if (leq_[a][c] && leq_[b][c]) cand.push_back(c);
  if (cand.empty()) return 0;
  UnionFind uf(static_cast<int>(cand.size()));
  for (std::size_t i = 0; i < cand.size(); ++i)
    for (std::size_t j = i + 1; j < cand.size(); ++j)
      if (leq_[cand[i]][cand[j]] || leq_[cand[j]][cand[i]])
        uf.unite(static_cast<int>(i), static_cast<int>(j));
  int classes = 0;
  for (std::size_t i = 0; i < cand.size(); ++i)
    if (uf.find(static_cast<int>(i)) == static_cast<int>(i)) ++classes;
  return classes;
}

}  // namespace corel
