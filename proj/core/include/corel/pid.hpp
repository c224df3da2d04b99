#pragma once

// Free finitely generated modules over the integers.  Morphisms n -> m are
// m x n integer matrices.  The factorisation system is (epi, split mono):
// epis are the full-rank-by-rows maps (right-cancellable among free
// modules), split monos are recognised through the Smith normal form.
// Pullbacks are saturated integer kernels; pushouts are obtained from
// pullbacks by transposition (self-duality).  Corelations are row Hermite
// normal forms.

#include <utility>

#include "corel/matrix.hpp"
#include "corel/scalars.hpp"

namespace corel {

using ZMatrix = Matrix<mpz_class>;

// U * M * V = S with U, V unimodular and S diagonal with the divisibility
// chain d1 | d2 | ... and nonnegative entries.  The inverses are tracked
// during the reduction so callers can split M = Uinv * S * Vinv.
struct SnfDecomposition {
  ZMatrix u, uinv;
  ZMatrix s;
  ZMatrix v, vinv;
  int rank = 0;
};

SnfDecomposition snf(const ZMatrix& m);

// Unique representative of the left-GL(Z) orbit: row echelon, positive
// pivots, entries above each pivot reduced into [0, pivot), zero rows at
// the bottom.
ZMatrix hnf_row(const ZMatrix& m);

// Exact integer determinant (Bareiss fraction-free elimination).
mpz_class det_z(const ZMatrix& m);

int rank_z(const ZMatrix& m);

// Columns form a basis of the (saturated) integer kernel lattice,
// canonicalised by column Hermite form.
ZMatrix kernel_z(const ZMatrix& m);

// Solve A * X = B exactly over the integers; nullopt when no integral
// solution exists.
std::optional<ZMatrix> solve_z_left(const ZMatrix& a, const ZMatrix& b);
std::optional<ZMatrix> solve_z_right(const ZMatrix& a, const ZMatrix& b);

bool is_epi_z(const ZMatrix& m);
bool is_split_mono_z(const ZMatrix& m);

struct ZCorelForm {
  int dom = 0;
  int cod = 0;
  ZMatrix mat;  // full row rank, row Hermite normal form

  friend bool operator==(const ZCorelForm&, const ZCorelForm&) = default;
};

struct PidEngine {
  using Morphism = ZMatrix;
  using CorelForm = ZCorelForm;

  ZRing ring;

  std::string name() const { return "z"; }

  ZMatrix identity(int n) const { return mat_identity(ring, n); }

  ZMatrix compose(const ZMatrix& f, const ZMatrix& g) const {
    if (f.cod() != g.dom())
      throw DimensionError("integer composition: boundary mismatch");
    return mat_mul(ring, g, f);
  }

  bool equal(const ZMatrix& f, const ZMatrix& g) const { return f == g; }

  bool is_in_E(const ZMatrix& f) const { return is_epi_z(f); }
  bool is_in_M(const ZMatrix& f) const { return is_split_mono_z(f); }
  bool is_in_A(const ZMatrix& f) const { return is_split_mono_z(f); }

  // (epi, split mono) factorisation through the Smith normal form.
  std::pair<ZMatrix, ZMatrix> factor(const ZMatrix& f) const;

  ZMatrix tensor(const ZMatrix& f, const ZMatrix& g) const {
    return mat_direct_sum(ring, f, g);
  }

  Span<ZMatrix> pullback(const Cospan<ZMatrix>& c) const;
  Cospan<ZMatrix> pushout(const Span<ZMatrix>& s) const;

  ZMatrix pushout_mediator(const Span<ZMatrix>& s, const Cospan<ZMatrix>& cocone) const;
  ZMatrix pullback_mediator(const Cospan<ZMatrix>& c, const Span<ZMatrix>& cone) const;

  Cospan<ZMatrix> canonical_cospan(const Cospan<ZMatrix>& c) const;
  Span<ZMatrix> canonical_span(const Span<ZMatrix>& s) const;

  ZCorelForm corel_canonical(const Cospan<ZMatrix>& c) const;
  Cospan<ZMatrix> corel_cospan(const ZCorelForm& k) const;
};

// Whether the cospan 1 --r--> 1 <--r-- 1 collapses to the identity
// corelation over the integers (true exactly for units).
bool scalar_corel_equals_identity_z(const mpz_class& r);

}  // namespace corel
