#include "corel/pid.hpp"

#include <algorithm>
#include <cassert>

namespace corel {

namespace {

mpz_class fdiv_q(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// row_i += t * row_j (and mirrored bookkeeping on u / uinv).
struct RowOps {
  ZMatrix* m;
  ZMatrix* u;     // left transform:  u * m0 = m
  ZMatrix* uinv;  // its inverse,     m0 = uinv * m

  void add(int i, int j, const mpz_class& t) {
    for (int c = 0; c < m->cols(); ++c) m->at(i, c) += t * m->at(j, c);
    if (u)
      for (int c = 0; c < u->cols(); ++c) u->at(i, c) += t * u->at(j, c);
    if (uinv)  // inverse op: col_j -= t * col_i
      for (int r = 0; r < uinv->rows(); ++r) uinv->at(r, j) -= t * uinv->at(r, i);
  }

  void swap(int i, int j) {
    for (int c = 0; c < m->cols(); ++c) std::swap(m->at(i, c), m->at(j, c));
    if (u)
      for (int c = 0; c < u->cols(); ++c) std::swap(u->at(i, c), u->at(j, c));
    if (uinv)
      for (int r = 0; r < uinv->rows(); ++r) std::swap(uinv->at(r, i), uinv->at(r, j));
  }

  void negate(int i) {
    for (int c = 0; c < m->cols(); ++c) m->at(i, c) = -m->at(i, c);
    if (u)
      for (int c = 0; c < u->cols(); ++c) u->at(i, c) = -u->at(i, c);
    if (uinv)
      for (int r = 0; r < uinv->rows(); ++r) uinv->at(r, i) = -uinv->at(r, i);
  }
};

struct ColOps {
  ZMatrix* m;
  ZMatrix* v;     // right transform: m0 * v = m
  ZMatrix* vinv;

  void add(int j, int k, const mpz_class& t) {  // col_j += t * col_k
    for (int r = 0; r < m->rows(); ++r) m->at(r, j) += t * m->at(r, k);
    if (v)
      for (int r = 0; r < v->rows(); ++r) v->at(r, j) += t * v->at(r, k);
    if (vinv)  // inverse op: row_k -= t * row_j
      for (int c = 0; c < vinv->cols(); ++c) vinv->at(k, c) -= t * vinv->at(j, c);
  }

  void swap(int j, int k) {
    for (int r = 0; r < m->rows(); ++r) std::swap(m->at(r, j), m->at(r, k));
    if (v)
      for (int r = 0; r < v->rows(); ++r) std::swap(v->at(r, j), v->at(r, k));
    if (vinv)
      for (int c = 0; c < vinv->cols(); ++c) std::swap(vinv->at(j, c), vinv->at(k, c));
  }

  void negate(int j) {
    for (int r = 0; r < m->rows(); ++r) m->at(r, j) = -m->at(r, j);
    if (v)
      for (int r = 0; r < v->rows(); ++r) v->at(r, j) = -v->at(r, j);
    if (vinv)
      for (int c = 0; c < vinv->cols(); ++c) vinv->at(j, c) = -vinv->at(j, c);
  }
};

}  // namespace

SnfDecomposition snf(const ZMatrix& m0) {
  ZRing zr;
  SnfDecomposition d;
  d.s = m0;
  d.u = mat_identity(zr, m0.rows());
  d.uinv = mat_identity(zr, m0.rows());
  d.v = mat_identity(zr, m0.cols());
  d.vinv = mat_identity(zr, m0.cols());
  ZMatrix& s = d.s;
  RowOps rows{&s, &d.u, &d.uinv};
  ColOps cols{&s, &d.v, &d.vinv};

  const int lim = std::min(s.rows(), s.cols());
  int t = 0;
  while (t < lim) {
    // locate the entry of least absolute value in the trailing block
    int pi = -1, pj = -1;
    for (int i = t; i < s.rows(); ++i)
      for (int j = t; j < s.cols(); ++j) {
        if (s.at(i, j) == 0) continue;
        if (pi < 0 || cmp(abs(s.at(i, j)), abs(s.at(pi, pj))) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // trailing block is zero
    if (pi != t) rows.swap(pi, t);
    if (pj != t) cols.swap(pj, t);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < s.rows(); ++i) {
        if (s.at(i, t) == 0) continue;
        mpz_class q = s.at(i, t) / s.at(t, t);  // truncated
        rows.add(i, t, -q);
        if (s.at(i, t) != 0) {
          rows.swap(i, t);  // remainder is strictly smaller
          clean = false;
        }
      }
      for (int j = t + 1; j < s.cols(); ++j) {
        if (s.at(t, j) == 0) continue;
        mpz_class q = s.at(t, j) / s.at(t, t);
        cols.add(j, t, -q);
        if (s.at(t, j) != 0) {
          cols.swap(j, t);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility sweep: fold any non-multiple into the pivot's row
      for (int i = t + 1; i < s.rows() && clean; ++i)
        for (int j = t + 1; j < s.cols() && clean; ++j)
          if (s.at(i, j) % s.at(t, t) != 0) {
            rows.add(t, i, 1);
            clean = false;
          }
    }
    if (s.at(t, t) < 0) rows.negate(t);
    ++t;
  }
  d.rank = 0;
  for (int i = 0; i < lim; ++i)
    if (s.at(i, i) != 0) ++d.rank;
  return d;
}

ZMatrix hnf_row(const ZMatrix& m0) {
  ZMatrix h = m0;
  RowOps rows{&h, nullptr, nullptr};
  int r = 0;
  for (int col = 0; col < h.cols() && r < h.rows(); ++col) {
    // euclidean reduction in this column below row r
    while (true) {
      int piv = -1;
      for (int i = r; i < h.rows(); ++i) {
        if (h.at(i, col) == 0) continue;
        if (piv < 0 || cmp(abs(h.at(i, col)), abs(h.at(piv, col))) < 0) piv = i;
      }
      if (piv < 0) break;
      if (piv != r) rows.swap(piv, r);
      bool done = true;
      for (int i = r + 1; i < h.rows(); ++i) {
        if (h.at(i, col) == 0) continue;
        mpz_class q = h.at(i, col) / h.at(r, col);
        rows.add(i, r, -q);
        if (h.at(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (r < h.rows() && h.at(r, col) != 0) {
      if (h.at(r, col) < 0) rows.negate(r);
      for (int i = 0; i < r; ++i) {
        mpz_class q = fdiv_q(h.at(i, col), h.at(r, col));
        if (q != 0) rows.add(i, r, -q);
      }
      ++r;
    }
  }
  return h;
}

mpz_class det_z(const ZMatrix& m0) {
  if (m0.rows() != m0.cols()) throw DimensionError("determinant of a non-square matrix");
  const int n = m0.rows();
  if (n == 0) return 1;
  ZMatrix a = m0;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        mpz_class num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = num / prev;  // exact by Bareiss
      }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

int rank_z(const ZMatrix& m) { return snf(m).rank; }

ZMatrix kernel_z(const ZMatrix& m) {
  auto d = snf(m);
  // columns of V past the rank map to zero
  auto raw = d.v.col_slice(d.rank, d.v.cols());
  // canonical column form via row HNF of the transpose
  auto h = hnf_row(raw.transpose());
  int nz = h.rows();
  while (nz > 0) {
    bool zero = true;
    for (int j = 0; j < h.cols(); ++j)
      if (h.at(nz - 1, j) != 0) zero = false;
    if (!zero) break;
    --nz;
  }
  return h.row_slice(0, nz).transpose();
}

std::optional<ZMatrix> solve_z_left(const ZMatrix& a, const ZMatrix& b) {
  // A * X = B via the Smith form: X = V * Y with S * Y = U * B.
  if (a.rows() != b.rows()) throw DimensionError("integer solve: shape mismatch");
  ZRing zr;
  auto d = snf(a);
  auto rhs = mat_mul(zr, d.u, b);
  ZMatrix y = mat_zero(zr, a.cols(), b.cols());
  const int lim = std::min(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      if (i < lim && d.s.at(i, i) != 0) {
        if (rhs.at(i, j) % d.s.at(i, i) != 0) return std::nullopt;
        y.at(i, j) = rhs.at(i, j) / d.s.at(i, i);
      } else if (rhs.at(i, j) != 0) {
        return std::nullopt;
      }
    }
  }
  return mat_mul(zr, d.v, y);
}

std::optional<ZMatrix> solve_z_right(const ZMatrix& a, const ZMatrix& b) {
  auto x = solve_z_left(a.transpose(), b.transpose());
  if (!x) return std::nullopt;
  return x->transpose();
}

bool is_epi_z(const ZMatrix& m) { return rank_z(m) == m.rows(); }

bool is_split_mono_z(const ZMatrix& m) {
  auto d = snf(m);
  if (d.rank != m.cols()) return false;
  for (int i = 0; i < d.rank; ++i)
    if (d.s.at(i, i) != 1) return false;
  return true;
}

std::pair<ZMatrix, ZMatrix> PidEngine::factor(const ZMatrix& f) const {
  auto d = snf(f);
  const int r = d.rank;
  // f = Uinv * S * Vinv; split S = [D_r 0; 0 0].
  ZMatrix mono = d.uinv.col_slice(0, r);
  ZMatrix diag = mat_zero(ring, r, r);
  for (int i = 0; i < r; ++i) diag.at(i, i) = d.s.at(i, i);
  ZMatrix epi = mat_mul(ring, diag, d.vinv.row_slice(0, r));
  return {std::move(epi), std::move(mono)};
}

Span<ZMatrix> PidEngine::pullback(const Cospan<ZMatrix>& c) const {
  auto joint = hstack(c.left, mat_neg(ring, c.right));
  auto k = kernel_z(joint);
  return Span<ZMatrix>(k.row_slice(0, c.dom()), k.row_slice(c.dom(), c.dom() + c.cod()));
}

Cospan<ZMatrix> PidEngine::pushout(const Span<ZMatrix>& s) const {
  // Transpose-dual of the pullback: kernel of the transposed stacked map.
  auto stacked = vstack(s.left, mat_neg(ring, s.right));
  auto c = kernel_z(stacked.transpose()).transpose();
  return Cospan<ZMatrix>(c.col_slice(0, s.dom()), c.col_slice(s.dom(), s.dom() + s.cod()));
}

ZMatrix PidEngine::pushout_mediator(const Span<ZMatrix>& s, const Cospan<ZMatrix>& cocone) const {
  if (s.dom() != cocone.dom() || s.cod() != cocone.cod())
    throw DimensionError("pushout mediator: cocone boundaries do not match");
  Cospan<ZMatrix> po = pushout(s);
  auto h = solve_z_right(hstack(po.left, po.right), hstack(cocone.left, cocone.right));
  if (!h) throw PreconditionError("pushout mediator: cocone does not commute integrally");
  return *h;
}

ZMatrix PidEngine::pullback_mediator(const Cospan<ZMatrix>& c, const Span<ZMatrix>& cone) const {
  if (c.dom() != cone.dom() || c.cod() != cone.cod())
    throw DimensionError("pullback mediator: cone boundaries do not match");
  Span<ZMatrix> pb = pullback(c);
  auto u = solve_z_left(vstack(pb.left, pb.right), vstack(cone.left, cone.right));
  if (!u) throw PreconditionError("pullback mediator: cone does not commute integrally");
  return *u;
}

Cospan<ZMatrix> PidEngine::canonical_cospan(const Cospan<ZMatrix>& c) const {
  auto h = hnf_row(hstack(c.left, c.right));
  return Cospan<ZMatrix>(h.col_slice(0, c.dom()), h.col_slice(c.dom(), c.dom() + c.cod()));
}

Span<ZMatrix> PidEngine::canonical_span(const Span<ZMatrix>& s) const {
  auto h = hnf_row(vstack(s.left, s.right).transpose()).transpose();
  return Span<ZMatrix>(h.row_slice(0, s.dom()), h.row_slice(s.dom(), s.dom() + s.cod()));
}

ZCorelForm PidEngine::corel_canonical(const Cospan<ZMatrix>& c) const {
  auto [epi, mono] = factor(hstack(c.left, c.right));
  (void)mono;
  return ZCorelForm{c.dom(), c.cod(), hnf_row(epi)};
}

Cospan<ZMatrix> PidEngine::corel_cospan(const ZCorelForm& k) const {
  return Cospan<ZMatrix>(k.mat.col_slice(0, k.dom), k.mat.col_slice(k.dom, k.dom + k.cod));
}

bool scalar_corel_equals_identity_z(const mpz_class& r) {
  PidEngine e;
  ZMatrix leg(1, 1);
  leg.at(0, 0) = r;
  auto c = e.corel_canonical(Cospan<ZMatrix>(leg, leg));
  auto id1 = e.corel_canonical(Cospan<ZMatrix>(e.identity(1), e.identity(1)));
  return c == id1;
}

}  // namespace corel
