#pragma once

// The abelian prop of finite-dimensional vector spaces over an exact field
// (rationals or a prime field).  Morphisms n -> m are m x n matrices;
// pullbacks are kernels of the joint map [f | -g], pushouts are cokernels
// of the stacked map, and the subcategory A is the whole category.
// Corelations are row spaces in reduced echelon form, relations are
// subspaces of the product of the two boundaries.

#include <utility>

#include "corel/matrix.hpp"
#include "corel/scalars.hpp"

namespace corel {

// A linear subspace of k^ambient, identified by the reduced-echelon basis
// of its row space; unique per subspace.
template <typename T>
struct Subspace {
  int ambient = 0;
  Matrix<T> basis;

  friend bool operator==(const Subspace&, const Subspace&) = default;
};

// Canonical jointly-epi cospan: full-row-rank RREF matrix [F | G] split at
// `dom` columns.
template <typename T>
struct LinCorelForm {
  int dom = 0;
  int cod = 0;
  Matrix<T> mat;

  friend bool operator==(const LinCorelForm&, const LinCorelForm&) = default;
};

// Canonical jointly-mono span: RREF basis of a subspace of k^(dom+cod).
template <typename T>
struct LinRelForm {
  int dom = 0;
  int cod = 0;
  Matrix<T> basis;

  friend bool operator==(const LinRelForm&, const LinRelForm&) = default;
};

template <typename F>
struct LinearEngine {
  using Field = F;
  using Scalar = typename F::Scalar;
  using Morphism = Matrix<Scalar>;
  using CorelForm = LinCorelForm<Scalar>;
  using RelForm = LinRelForm<Scalar>;

  F field;

  explicit LinearEngine(F f = F()) : field(std::move(f)) {}

  std::string name() const { return field.name() == "Q" ? "linq" : "linfp:" + fp_suffix(); }

  Morphism identity(int n) const { return mat_identity(field, n); }

  Morphism compose(const Morphism& f, const Morphism& g) const {
    if (f.cod() != g.dom())
      throw DimensionError("linear composition: boundary mismatch");
    return mat_mul(field, g, f);
  }

  bool equal(const Morphism& f, const Morphism& g) const { return f == g; }

  bool is_in_E(const Morphism& f) const { return mat_rank(field, f) == f.rows(); }
  bool is_in_M(const Morphism& f) const { return mat_rank(field, f) == f.cols(); }
  bool is_in_A(const Morphism&) const { return true; }

  // f = m . e with m the canonical column-space basis and e the coordinates
  // of f in that basis.
  std::pair<Morphism, Morphism> factor(const Morphism& f) const {
    Morphism m = row_space_basis(field, f.transpose()).transpose();
    auto e = solve_left(field, m, f);
    if (!e) throw PreconditionError("factorisation: coordinate solve failed");
    return {std::move(*e), std::move(m)};
  }

  Morphism tensor(const Morphism& f, const Morphism& g) const {
    return mat_direct_sum(field, f, g);
  }

  // Kernel of [f | -g]; the kernel basis blocks are the two projections.
  Span<Morphism> pullback(const Cospan<Morphism>& c) const {
    auto joint = hstack(c.left, mat_neg(field, c.right));
    auto k = kernel_basis(field, joint);
    return Span<Morphism>(k.row_slice(0, c.dom()), k.row_slice(c.dom(), c.dom() + c.cod()));
  }

  // Cokernel of the stacked map [p ; -q], as a full-row-rank annihilator.
  Cospan<Morphism> pushout(const Span<Morphism>& s) const {
    auto stacked = vstack(s.left, mat_neg(field, s.right));
    auto c = kernel_basis(field, stacked.transpose()).transpose();
    return Cospan<Morphism>(c.col_slice(0, s.dom()), c.col_slice(s.dom(), s.dom() + s.cod()));
  }

  Morphism pushout_mediator(const Span<Morphism>& s, const Cospan<Morphism>& cocone) const {
    if (s.dom() != cocone.dom() || s.cod() != cocone.cod())
      throw DimensionError("pushout mediator: cocone boundaries do not match");
    Cospan<Morphism> po = pushout(s);
    auto h = solve_right(field, hstack(po.left, po.right), hstack(cocone.left, cocone.right));
    if (!h) throw PreconditionError("pushout mediator: cocone does not commute");
    return *h;
  }

  Morphism pullback_mediator(const Cospan<Morphism>& c, const Span<Morphism>& cone) const {
    if (c.dom() != cone.dom() || c.cod() != cone.cod())
      throw DimensionError("pullback mediator: cone boundaries do not match");
    Span<Morphism> pb = pullback(c);
    auto u = solve_left(field, vstack(pb.left, pb.right), vstack(cone.left, cone.right));
    if (!u) throw PreconditionError("pullback mediator: cone does not commute");
    return *u;
  }

  // RREF of [F | G] keeping zero rows: unique representative of the apex
  // iso class.
  Cospan<Morphism> canonical_cospan(const Cospan<Morphism>& c) const {
    auto r = rref(field, hstack(c.left, c.right));
    return Cospan<Morphism>(r.mat.col_slice(0, c.dom()),
                            r.mat.col_slice(c.dom(), c.dom() + c.cod()));
  }

  // Column-reduced pairing keeping zero columns.
  Span<Morphism> canonical_span(const Span<Morphism>& s) const {
    auto p = vstack(s.left, s.right);
    auto r = rref(field, p.transpose());
    auto canon = r.mat.transpose();
    return Span<Morphism>(canon.row_slice(0, s.dom()),
                          canon.row_slice(s.dom(), s.dom() + s.cod()));
  }

  CorelForm corel_canonical(const Cospan<Morphism>& c) const {
    return CorelForm{c.dom(), c.cod(), row_space_basis(field, hstack(c.left, c.right))};
  }

  Cospan<Morphism> corel_cospan(const CorelForm& k) const {
    return Cospan<Morphism>(k.mat.col_slice(0, k.dom), k.mat.col_slice(k.dom, k.dom + k.cod));
  }

  RelForm rel_canonical(const Span<Morphism>& s) const {
    auto sub = subspace_of_span(s);
    return RelForm{s.dom(), s.cod(), std::move(sub.basis)};
  }

  Span<Morphism> rel_span(const RelForm& r) const {
    auto k = r.basis.transpose();
    return Span<Morphism>(k.row_slice(0, r.dom), k.row_slice(r.dom, r.dom + r.cod));
  }

  // The column space of the stacked pairing, as a subspace of k^(n+m).
  Subspace<Scalar> subspace_of_span(const Span<Morphism>& s) const {
    auto pairing = vstack(s.left, s.right);
    return Subspace<Scalar>{s.dom() + s.cod(),
                            row_space_basis(field, pairing.transpose())};
  }

 private:
  std::string fp_suffix() const {
    auto n = field.name();  // "Fp" prints as "F<p>"
    return n.substr(1);
  }
};

using LinQEngine = LinearEngine<QField>;
using LinFpEngine = LinearEngine<FpField>;

// Relational composition of subspaces: eliminate the shared middle
// coordinates by solving for the witnesses.
template <typename F>
LinRelForm<typename F::Scalar> compose_subspace_direct(const F& field, int n, int z, int m,
                                                       const LinRelForm<typename F::Scalar>& v,
                                                       const LinRelForm<typename F::Scalar>& w) {
  if (v.dom != n || v.cod != z || w.dom != z || w.cod != m)
    throw DimensionError("subspace composition: boundary mismatch");
  const auto& A = v.basis;  // dv x (n+z)
  const auto& B = w.basis;  // dw x (z+m)
  auto az = A.col_slice(n, n + z);
  auto bz = B.col_slice(0, z);
  // Pairs of coefficient rows (a, b) with a.A_z = b.B_z.
  auto nullspace = kernel_basis(field, vstack(az, mat_neg(field, bz)).transpose()).transpose();
  auto an = A.col_slice(0, n);
  auto bm = B.col_slice(z, z + m);
  auto lift = mat_direct_sum(field, an, bm);  // (dv+dw) x (n+m)
  auto rows = mat_mul(field, nullspace, lift);
  return LinRelForm<typename F::Scalar>{n, m, row_space_basis(field, rows)};
}

// The isomorphism between corelations and relations in the abelian case:
// a corelation maps to the jointly-mono part of its pullback span, a
// relation to the jointly-epi part of its pushout cospan.  Note the sign
// twist: the pullback uses the joint map [f | -g], so over fields of
// characteristic two the two directions read the same matrix.
template <typename F>
LinRelForm<typename F::Scalar> corel_to_rel(const LinearEngine<F>& e,
                                            const LinCorelForm<typename F::Scalar>& c) {
  return e.rel_canonical(e.pullback(e.corel_cospan(c)));
}

template <typename F>
LinCorelForm<typename F::Scalar> rel_to_corel(const LinearEngine<F>& e,
                                              const LinRelForm<typename F::Scalar>& r) {
  return e.corel_canonical(e.pushout(e.rel_span(r)));
}

// The canonical corelation of the cospan 1 --r--> 1 <--r-- 1 equals the
// identity corelation exactly when r is invertible in the scalar domain.
bool scalar_corel_equals_identity_q(const mpq_class& r);

}  // namespace corel
