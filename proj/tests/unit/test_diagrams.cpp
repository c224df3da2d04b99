#include <doctest.h>

#include "corel/enumerate.hpp"
#include "corel/finset.hpp"
#include "corel/linear.hpp"
#include "corel/verify.hpp"

using namespace corel;

namespace {

const FinSetEngine fin;
const LinQEngine lq;

FinFn fn(int n, int m, std::vector<int> t) { return FinFn(n, m, std::move(t)); }

Matrix<mpq_class> qm(int rows, int cols, std::vector<long> entries) {
  Matrix<mpq_class> m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = entries[i * cols + j];
  return m;
}

// Brute-force relational composition: (i,k) related iff a middle witness
// exists.
RelationTable exists_compose(const RelationTable& r, const RelationTable& s) {
  RelationTable out{r.dom, s.cod, {}};
  for (int i = 0; i < r.dom; ++i)
    for (int k = 0; k < s.cod; ++k) {
      bool found = false;
      for (int j = 0; j < r.cod && !found; ++j)
        found = std::count(r.pairs.begin(), r.pairs.end(), std::make_pair(i, j)) &&
                std::count(s.pairs.begin(), s.pairs.end(), std::make_pair(j, k));
      if (found) out.pairs.emplace_back(i, k);
    }
  return out;
}

std::vector<RelationTable> all_relations(int n, int m) {
  std::vector<std::pair<int, int>> universe;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) universe.emplace_back(i, j);
  std::vector<RelationTable> out;
  for (long long mask = 0; mask < (1LL << universe.size()); ++mask) {
    RelationTable r{n, m, {}};
    for (std::size_t b = 0; b < universe.size(); ++b)
      if (mask & (1LL << b)) r.pairs.push_back(universe[b]);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

TEST_CASE("cospan composition through pushouts") {
  SUBCASE("disjoint apexes stack") {
    Cospan<FinFn> unit(fn(0, 1, {}), fn(0, 1, {}));
    auto c = compose_cospan(fin, unit, unit);
    CHECK(c.apex() == 2);
    CHECK(c.dom() == 0);
    CHECK(c.cod() == 0);
  }
  SUBCASE("identities are neutral") {
    Cospan<FinFn> id1(fin.identity(1), fin.identity(1));
    CHECK(equal_cospan(fin, compose_cospan(fin, id1, id1), id1));
  }
  SUBCASE("one identification in the middle") {
    Cospan<FinFn> c1(fn(1, 2, {0}), fn(1, 2, {1}));
    auto c = compose_cospan(fin, c1, c1);
    CHECK(c.apex() == 3);
    // same iso class as legs [0], [2] over apex 3 ...
    CHECK(equal_cospan(fin, c, Cospan<FinFn>(fn(1, 3, {0}), fn(1, 3, {2}))));
    // ... whose normal form renames hit apex points first
    CHECK(c.left == fn(1, 3, {0}));
    CHECK(c.right == fn(1, 3, {1}));
  }
  SUBCASE("boundary mismatch throws") {
    Cospan<FinFn> a(fin.identity(1), fin.identity(1));
    Cospan<FinFn> b(fin.identity(2), fin.identity(2));
    CHECK_THROWS_AS(compose_cospan(fin, a, b), DimensionError);
  }
}

TEST_CASE("span composition through pullbacks") {
  SUBCASE("identities are neutral") {
    Span<FinFn> id1(fin.identity(1), fin.identity(1));
    CHECK(equal_span(fin, compose_span(fin, id1, id1), id1));
  }
  SUBCASE("fiber product composition") {
    Span<FinFn> s1(fn(1, 2, {0}), fn(1, 2, {1}));
    Span<FinFn> s2(fn(1, 2, {1}), fn(1, 2, {0}));
    auto s = compose_span(fin, s1, s2);
    CHECK(s.apex() == 1);
    CHECK(s.left == fn(1, 2, {0}));
    CHECK(s.right == fn(1, 2, {0}));
  }
  SUBCASE("rational scalars multiply along the kernel") {
    Span<Matrix<mpq_class>> s1(qm(1, 1, {2}), qm(1, 1, {1}));
    Span<Matrix<mpq_class>> s2(qm(1, 1, {1}), qm(1, 1, {3}));
    auto s = compose_span(lq, s1, s2);
    CHECK(equal_span(lq, s, Span<Matrix<mpq_class>>(qm(1, 1, {2}), qm(1, 1, {3}))));
  }
}

TEST_CASE("gamma takes cospans to corelations") {
  SUBCASE("the two degenerate unit cospans agree") {
    auto a = gamma(fin, Cospan<FinFn>(fn(0, 1, {}), fn(0, 1, {})));
    auto b = gamma(fin, Cospan<FinFn>(fn(0, 0, {}), fn(0, 0, {})));
    CHECK(a == b);
    CHECK(a.form == Partition{0, 0, {}});
  }
  SUBCASE("identity cospan") {
    CHECK(gamma(fin, Cospan<FinFn>(fin.identity(1), fin.identity(1))).form ==
          Partition{1, 1, {0, 0}});
  }
  SUBCASE("image factorisation of the copairing") {
    auto g = gamma(fin, Cospan<FinFn>(fin.identity(2), fn(1, 2, {0})));
    CHECK(g.form == Partition{2, 1, {0, 1, 0}});
  }
}

TEST_CASE("pi takes spans to corelations") {
  SUBCASE("empty apex separates the boundaries") {
    auto p = pi(fin, Span<FinFn>(fn(0, 1, {}), fn(0, 1, {})));
    CHECK(p.form == Partition{1, 1, {0, 1}});
  }
  SUBCASE("identity span gives the identity corelation") {
    CHECK(pi(fin, Span<FinFn>(fin.identity(1), fin.identity(1))) == identity_corel(fin, 1));
  }
  SUBCASE("pushout along an injection") {
    auto p = pi(fin, Span<FinFn>(fin.identity(1), fn(1, 2, {1})));
    // the pushout cospan is 1 -> 2 <- 2 with legs [0] and [1, 0]
    CHECK(p == gamma(fin, Cospan<FinFn>(fn(1, 2, {0}), fn(2, 2, {1, 0}))));
    CHECK(p.form == Partition{1, 2, {0, 1, 0}});
  }
  SUBCASE("legs outside the subcategory are rejected") {
    CHECK_THROWS_AS(pi(fin, Span<FinFn>(fn(2, 1, {0, 0}), fn(2, 2, {0, 1}))),
                    PreconditionError);
  }
}

TEST_CASE("rho takes spans to relations") {
  SUBCASE("jointly mono span is kept as is") {
    auto r = rho(fin, Span<FinFn>(fn(1, 2, {0}), fn(1, 2, {0})));
    CHECK(r.form == RelationTable{2, 2, {{0, 0}}});
  }
  SUBCASE("duplicate witnesses collapse") {
    auto r = rho(fin, Span<FinFn>(fn(2, 1, {0, 0}), fn(2, 1, {0, 0})));
    CHECK(r.form == RelationTable{1, 1, {{0, 0}}});
  }
  SUBCASE("rational pairing through the subspace form") {
    auto r = rho(lq, Span<Matrix<mpq_class>>(qm(1, 2, {1, 0}), qm(1, 2, {1, 1})));
    CHECK(r.form.basis.rows() ==
          mat_rank(QField{}, vstack(qm(1, 2, {1, 0}), qm(1, 2, {1, 1}))));
  }
}

TEST_CASE("corelation composition") {
  SUBCASE("identity is neutral") {
    auto a = gamma(fin, Cospan<FinFn>(fn(1, 2, {0}), fn(1, 2, {1})));
    CHECK(compose_corel(fin, identity_corel(fin, 1), a) == a);
    CHECK(compose_corel(fin, a, identity_corel(fin, 1)) == a);
  }
  SUBCASE("connected then disconnected stays disconnected") {
    Corelation<FinSetEngine> joined{1, 1, Partition{1, 1, {0, 0}}};
    Corelation<FinSetEngine> split{1, 1, Partition{1, 1, {0, 1}}};
    CHECK(compose_corel(fin, joined, split) == split);
  }
  SUBCASE("gamma is functorial on sampled cospans") {
    enumerate::Rng rng(13);
    for (int it = 0; it < 200; ++it) {
      const int n = static_cast<int>(rng.below(3));
      const int z = static_cast<int>(rng.below(3));
      const int m = static_cast<int>(rng.below(3));
      const int a1 = 1 + static_cast<int>(rng.below(3));
      const int a2 = 1 + static_cast<int>(rng.below(3));
      Cospan<FinFn> c1(enumerate::random_fn(rng, n, a1), enumerate::random_fn(rng, z, a1));
      Cospan<FinFn> c2(enumerate::random_fn(rng, z, a2), enumerate::random_fn(rng, m, a2));
      CHECK(gamma(fin, compose_cospan(fin, c1, c2)) ==
            compose_corel(fin, gamma(fin, c1), gamma(fin, c2)));
    }
  }
}

TEST_CASE("relation composition matches the witness-search oracle") {
  for (int n = 0; n <= 2; ++n)
    for (int z = 0; z <= 2; ++z)
      for (int m = 0; m <= 2; ++m)
        for (const auto& r : all_relations(n, z))
          for (const auto& s : all_relations(z, m)) {
            Relation<FinSetEngine> a{n, z, r}, b{z, m, s};
            CHECK(compose_rel(fin, a, b).form == exists_compose(r, s));
          }
}

TEST_CASE("tensor of diagrams") {
  SUBCASE("the empty corelation is the unit") {
    auto a = gamma(fin, Cospan<FinFn>(fn(2, 1, {0, 0}), fn(1, 1, {0})));
    auto unit = identity_corel(fin, 0);
    CHECK(tensor_corel(fin, a, unit) == a);
    CHECK(tensor_corel(fin, unit, a) == a);
  }
  SUBCASE("partitions shift blockwise") {
    auto id1 = identity_corel(fin, 1);
    CHECK(tensor_corel(fin, id1, id1).form == Partition{2, 2, {0, 1, 0, 1}});
  }
  SUBCASE("block diagonal of identity subspaces") {
    auto id1 = identity_rel(lq, 1);
    auto t = tensor_rel(lq, id1, id1);
    CHECK(t == identity_rel(lq, 2));
  }
}

TEST_CASE("dagger reverses boundaries") {
  auto a = gamma(fin, Cospan<FinFn>(fin.identity(2), fn(1, 2, {0})));
  auto d = dagger_corel(fin, a);
  CHECK(d.dom == 1);
  CHECK(d.cod == 2);
  CHECK(dagger_corel(fin, d) == a);
}

TEST_CASE("zigzag evaluation") {
  SUBCASE("the empty zigzag is the identity") {
    Zigzag<FinFn> z(2);
    CHECK(equal_cospan(fin, zigzag_to_cospan(fin, z),
                       Cospan<FinFn>(fin.identity(2), fin.identity(2))));
    CHECK(equal_span(fin, zigzag_to_span(fin, z),
                     Span<FinFn>(fin.identity(2), fin.identity(2))));
  }
  SUBCASE("a single forward step embeds") {
    auto f = fn(1, 2, {1});
    auto z = Zigzag<FinFn>::make(fin, 1, {{Dir::fwd, f}});
    CHECK(equal_cospan(fin, zigzag_to_cospan(fin, z), Cospan<FinFn>(f, fin.identity(2))));
    CHECK(equal_span(fin, zigzag_to_span(fin, z), Span<FinFn>(fin.identity(1), f)));
  }
  SUBCASE("forward then backward") {
    auto f = fn(1, 2, {0});
    auto g = fn(1, 2, {1});
    auto z = Zigzag<FinFn>::make(fin, 1, {{Dir::fwd, f}, {Dir::bwd, g}});
    CHECK(equal_cospan(fin, zigzag_to_cospan(fin, z), Cospan<FinFn>(f, g)));
    CHECK(equal_span(fin, zigzag_to_span(fin, z), fin.pullback(Cospan<FinFn>(f, g))));
  }
  SUBCASE("steps must chain") {
    CHECK_THROWS_AS(Zigzag<FinFn>::make(fin, 2, {{Dir::fwd, fn(1, 2, {1})}}), DimensionError);
  }
  SUBCASE("directions must alternate") {
    auto f = fn(1, 2, {1});
    auto g = fn(2, 3, {0, 2});
    CHECK_THROWS_AS(Zigzag<FinFn>::make(fin, 1, {{Dir::fwd, f}, {Dir::fwd, g}}),
                    PreconditionError);
  }
  SUBCASE("identity steps are rejected") {
    CHECK_THROWS_AS(Zigzag<FinFn>::make(fin, 2, {{Dir::fwd, fin.identity(2)}}),
                    PreconditionError);
  }
  SUBCASE("steps outside the subcategory are rejected") {
    auto collapse = fn(2, 1, {0, 0});
    auto z = Zigzag<FinFn>::make(fin, 2, {{Dir::fwd, collapse}});
    CHECK_THROWS_AS(zigzag_to_cospan(fin, z), PreconditionError);
    CHECK_THROWS_AS(zigzag_to_span(fin, z), PreconditionError);
  }
}

TEST_CASE("square commutativity on every small injection") {
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      for (const auto& f : enumerate::all_injections(n, m)) {
        CHECK(pi(fin, Span<FinFn>(fin.identity(n), f)) ==
              gamma(fin, Cospan<FinFn>(f, fin.identity(m))));
        CHECK(pi(fin, Span<FinFn>(f, fin.identity(n))) ==
              gamma(fin, Cospan<FinFn>(fin.identity(m), f)));
      }
}

TEST_CASE("every corelation is hit by gamma") {
  for (const auto& blocks : enumerate::set_partitions(4)) {
    Corelation<FinSetEngine> c{2, 2, Partition{2, 2, blocks}};
    CHECK(gamma(fin, fin.corel_cospan(c.form)) == c);
  }
}

namespace {
template <typename E>
void check_subcategory_axioms(const E& e) {
  for (int n = 0; n <= 3; ++n) {
    auto id = e.identity(n);
    CHECK(e.is_in_E(id));
    CHECK(e.is_in_M(id));
    CHECK(e.is_in_A(id));
  }
}
}  // namespace

TEST_CASE("identities live in every subcategory and M sits inside A") {
  check_subcategory_axioms(fin);
  check_subcategory_axioms(PartialFnEngine{});
  check_subcategory_axioms(lq);
  check_subcategory_axioms(LinFpEngine{FpField(3)});
  check_subcategory_axioms(PidEngine{});
  // M is contained in A on the finite engines, exhaustively
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      for (const auto& f : enumerate::all_fns(n, m))
        if (fin.is_in_M(f)) CHECK(fin.is_in_A(f));
  PartialFnEngine pfe;
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m)
      for (const auto& f : enumerate::all_partial_fns(n, m))
        if (pfe.is_in_M(f)) CHECK(pfe.is_in_A(f));
}
