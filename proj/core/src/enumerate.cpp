#include "corel/enumerate.hpp"

#include <algorithm>

namespace corel::enumerate {

std::vector<FinFn> all_fns(int n, int m) {
  std::vector<FinFn> out;
  if (n == 0) {
    out.emplace_back(0, m, std::vector<int>{});
    return out;
  }
  if (m == 0) return out;  // no functions from a nonempty set into 0
  std::vector<int> t(n, 0);
  while (true) {
    out.emplace_back(n, m, t);
    int i = n - 1;
    while (i >= 0 && t[i] == m - 1) t[i--] = 0;
    if (i < 0) break;
    ++t[i];
  }
  return out;
}

std::vector<FinFn> all_injections(int n, int m) {
  std::vector<FinFn> out;
  for (auto& f : all_fns(n, m))
    if (f.injective()) out.push_back(std::move(f));
  return out;
}

std::vector<PartialFn> all_partial_fns(int n, int m) {
  std::vector<PartialFn> out;
  std::vector<int> t(n, kUndef);
  if (n == 0) {
    out.emplace_back(0, m, std::vector<int>{});
    return out;
  }
  while (true) {
    out.emplace_back(n, m, t);
    int i = n - 1;
    while (i >= 0 && t[i] == m - 1) t[i--] = kUndef;
    if (i < 0) break;
    ++t[i];
  }
  return out;
}

namespace {
void rgs_rec(int k, int pos, int used, std::vector<int>& cur,
             std::vector<std::vector<int>>& out) {
  if (pos == k) {
    out.push_back(cur);
    return;
  }
  for (int b = 0; b <= used; ++b) {
    cur[pos] = b;
    rgs_rec(k, pos + 1, std::max(used, b + 1), cur, out);
  }
}

void partial_rgs_rec(int k, int pos, int used, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
  if (pos == k) {
    out.push_back(cur);
    return;
  }
  cur[pos] = kUndef;
  partial_rgs_rec(k, pos + 1, used, cur, out);
  for (int b = 0; b <= used; ++b) {
    cur[pos] = b;
    partial_rgs_rec(k, pos + 1, std::max(used, b + 1), cur, out);
  }
}
}  // namespace

std::vector<std::vector<int>> set_partitions(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k, 0);
  rgs_rec(k, 0, 0, cur, out);
  return out;
}

std::vector<std::vector<int>> partial_set_partitions(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k, kUndef);
  partial_rgs_rec(k, 0, 0, cur, out);
  return out;
}

std::vector<Matrix<std::int64_t>> all_fp_matrices(const FpField& f, int rows, int cols) {
  std::vector<Matrix<std::int64_t>> out;
  const int cells = rows * cols;
  Matrix<std::int64_t> m = mat_zero(f, rows, cols);
  std::vector<std::int64_t> t(cells, 0);
  while (true) {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = t[i * cols + j];
    out.push_back(m);
    int i = cells - 1;
    while (i >= 0 && t[i] == f.p - 1) t[i--] = 0;
    if (i < 0) break;
    ++t[i];
  }
  return out;
}

namespace {
// Fill the free entries of an echelon pattern given pivot columns.
void fill_free(const FpField& f, const std::vector<int>& pivots, int ambient,
               std::vector<Matrix<std::int64_t>>& out) {
  const int r = static_cast<int>(pivots.size());
  std::vector<bool> is_pivot(ambient, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::pair<int, int>> free_slots;
  for (int i = 0; i < r; ++i)
    for (int j = pivots[i] + 1; j < ambient; ++j)
      if (!is_pivot[j]) free_slots.emplace_back(i, j);
  std::vector<std::int64_t> vals(free_slots.size(), 0);
  while (true) {
    Matrix<std::int64_t> m = mat_zero(f, r, ambient);
    for (int i = 0; i < r; ++i) m.at(i, pivots[i]) = f.one();
    for (std::size_t k = 0; k < free_slots.size(); ++k)
      m.at(free_slots[k].first, free_slots[k].second) = vals[k];
    out.push_back(std::move(m));
    int i = static_cast<int>(vals.size()) - 1;
    while (i >= 0 && vals[i] == f.p - 1) vals[i--] = 0;
    if (i < 0) break;
    ++vals[i];
  }
}

void pivot_combos(int ambient, int r, int start, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == r) {
    out.push_back(cur);
    return;
  }
  for (int c = start; c < ambient; ++c) {
    cur.push_back(c);
    pivot_combos(ambient, r, c + 1, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Matrix<std::int64_t>> all_fp_subspace_bases(const FpField& f, int ambient) {
  std::vector<Matrix<std::int64_t>> out;
  for (int r = 0; r <= ambient; ++r) {
    std::vector<std::vector<int>> combos;
    std::vector<int> cur;
    pivot_combos(ambient, r, 0, cur, combos);
    for (const auto& piv : combos) fill_free(f, piv, ambient, out);
  }
  return out;
}

FinFn random_fn(Rng& rng, int n, int m) {
  if (n > 0 && m == 0) throw PreconditionError("no functions into the empty set");
  std::vector<int> t(n);
  for (int i = 0; i < n; ++i) t[i] = static_cast<int>(rng.below(m));
  return FinFn(n, m, std::move(t));
}

FinFn random_injection(Rng& rng, int n, int m) {
  if (n > m) throw PreconditionError("no injections when dom exceeds cod");
  std::vector<int> pool(m);
  for (int i = 0; i < m; ++i) pool[i] = i;
  std::vector<int> t(n);
  for (int i = 0; i < n; ++i) {
    const int k = static_cast<int>(rng.below(m - i));
    t[i] = pool[k];
    std::swap(pool[k], pool[m - i - 1]);
  }
  return FinFn(n, m, std::move(t));
}

PartialFn random_partial_fn(Rng& rng, int n, int m) {
  std::vector<int> t(n);
  for (int i = 0; i < n; ++i) {
    const auto v = rng.below(m + 1);
    t[i] = v == 0 ? kUndef : static_cast<int>(v - 1);
  }
  return PartialFn(n, m, std::move(t));
}

Matrix<mpq_class> random_q_matrix(Rng& rng, int rows, int cols, long lo, long hi) {
  Matrix<mpq_class> m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      long num = rng.range(lo, hi);
      long den = rng.below(4) == 0 ? 2 : 1;  // occasional halves
      m.at(i, j) = mpq_class(num, den);
      m.at(i, j).canonicalize();
    }
  return m;
}

ZMatrix random_z_matrix(Rng& rng, int rows, int cols, long lo, long hi) {
  ZMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rng.range(lo, hi);
  return m;
}

ZMatrix random_z_split_mono(Rng& rng, int rows, int cols) {
  if (cols > rows) throw PreconditionError("split mono needs dom <= cod");
  ZRing zr;
  ZMatrix u = mat_identity(zr, rows);
  // a few elementary row operations keep entries small and det = ±1
  if (rows > 1) {
    const int ops = 2 * rows + 2;
    for (int k = 0; k < ops; ++k) {
      const int i = static_cast<int>(rng.below(rows));
      int j = static_cast<int>(rng.below(rows));
      while (j == i) j = static_cast<int>(rng.below(rows));
      const long t = rng.range(-2, 2);
      for (int c = 0; c < rows; ++c) u.at(i, c) += t * u.at(j, c);
    }
  }
  return u.col_slice(0, cols);
}

}  // namespace corel::enumerate
