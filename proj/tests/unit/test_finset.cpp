#include <doctest.h>

#include <algorithm>
#include <set>

#include "corel/enumerate.hpp"
#include "corel/finset.hpp"
#include "corel/verify.hpp"

using namespace corel;

namespace {

const FinSetEngine eng;

FinFn fn(int n, int m, std::vector<int> t) { return FinFn(n, m, std::move(t)); }

// Independent quotient oracle: repeated sweeps over the seed pairs until a
// fixpoint, no union-find.
std::vector<int> closure_blocks(int size, const std::vector<std::pair<int, int>>& seeds) {
  std::vector<int> id(size);
  for (int i = 0; i < size; ++i) id[i] = i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : seeds) {
      const int lo = std::min(id[a], id[b]);
      for (int i = 0; i < size; ++i)
        if (id[i] == id[a] || id[i] == id[b])
          if (id[i] != lo) {
            id[i] = lo;
            changed = true;
          }
    }
  }
  // renumber by least representative
  std::vector<int> remap(size, -1);
  int next = 0;
  std::vector<int> out(size);
  for (int i = 0; i < size; ++i) {
    if (remap[id[i]] < 0) remap[id[i]] = next++;
    out[i] = remap[id[i]];
  }
  return out;
}

}  // namespace

TEST_CASE("classification flags") {
  CHECK(ff_classify(eng.identity(2)).injective);
  CHECK(ff_classify(eng.identity(2)).surjective);
  auto collapse = ff_classify(fn(2, 1, {0, 0}));
  CHECK_FALSE(collapse.injective);
  CHECK(collapse.surjective);
  auto point = ff_classify(fn(1, 2, {1}));
  CHECK(point.injective);
  CHECK_FALSE(point.surjective);
}

TEST_CASE("surjection-injection factorisation") {
  SUBCASE("collapse onto one point") {
    auto [e, m] = eng.factor(fn(2, 2, {0, 0}));
    CHECK(e == fn(2, 1, {0, 0}));
    CHECK(m == fn(1, 2, {0}));
  }
  SUBCASE("identity splits trivially") {
    auto [e, m] = eng.factor(eng.identity(3));
    CHECK(e == eng.identity(3));
    CHECK(m == eng.identity(3));
  }
  SUBCASE("image enumerated in increasing order") {
    auto [e, m] = eng.factor(fn(2, 3, {2, 0}));
    CHECK(e == fn(2, 2, {1, 0}));
    CHECK(m == fn(2, 3, {0, 2}));
  }
  SUBCASE("recomposition is exact for every table up to 4x4") {
    for (int n = 0; n <= 4; ++n)
      for (int m = 0; m <= 4; ++m)
        for (const auto& f : enumerate::all_fns(n, m)) {
          auto [e, mm] = eng.factor(f);
          CHECK(eng.compose(e, mm) == f);
          CHECK(e.surjective());
          CHECK(mm.injective());
        }
  }
}

TEST_CASE("fiber-product pullback") {
  SUBCASE("pairs enumerated lexicographically") {
    auto s = eng.pullback(Cospan<FinFn>(fn(2, 1, {0, 0}), fn(2, 1, {0, 0})));
    CHECK(s.apex() == 4);
    CHECK(s.left == fn(4, 2, {0, 0, 1, 1}));
    CHECK(s.right == fn(4, 2, {0, 1, 0, 1}));
  }
  SUBCASE("pullback along the identity recovers the other leg") {
    auto g = fn(3, 2, {1, 0, 1});
    auto s = eng.pullback(Cospan<FinFn>(eng.identity(2), g));
    CHECK(s.apex() == 3);
    for (int t = 0; t < 3; ++t) CHECK(s.left(t) == g(s.right(t)));
  }
  SUBCASE("disjoint images give the empty apex") {
    auto s = eng.pullback(Cospan<FinFn>(fn(1, 2, {0}), fn(1, 2, {1})));
    CHECK(s.apex() == 0);
  }
}

TEST_CASE("union-find pushout") {
  SUBCASE("empty apex gives the coproduct") {
    auto c = eng.pushout(Span<FinFn>(fn(0, 2, {}), fn(0, 3, {})));
    CHECK(c.apex() == 5);
    CHECK(c.left == fn(2, 5, {0, 1}));
    CHECK(c.right == fn(3, 5, {2, 3, 4}));
  }
  SUBCASE("one identification") {
    auto c = eng.pushout(Span<FinFn>(fn(1, 2, {0}), fn(1, 2, {1})));
    CHECK(c.apex() == 3);
    auto oracle = closure_blocks(4, {{0, 2 + 1}});
    CHECK(c.left.table() == std::vector<int>(oracle.begin(), oracle.begin() + 2));
    CHECK(c.right.table() == std::vector<int>(oracle.begin() + 2, oracle.end()));
  }
  SUBCASE("the 2<-3->2 span collapses to a point") {
    auto c = eng.pushout(Span<FinFn>(fn(3, 2, {0, 0, 1}), fn(3, 2, {0, 1, 1})));
    CHECK(c.apex() == 1);
    CHECK(c.left == fn(2, 1, {0, 0}));
    CHECK(c.right == fn(2, 1, {0, 0}));
  }
  SUBCASE("blocks agree with the closure oracle on every small span") {
    for (int z = 0; z <= 3; ++z)
      for (int n = 0; n <= 2; ++n)
        for (int m = 0; m <= 2; ++m)
          for (const auto& p : enumerate::all_fns(z, n))
            for (const auto& q : enumerate::all_fns(z, m)) {
              auto c = eng.pushout(Span<FinFn>(p, q));
              std::vector<std::pair<int, int>> seeds;
              for (int t = 0; t < z; ++t) seeds.emplace_back(p(t), n + q(t));
              auto oracle = closure_blocks(n + m, seeds);
              std::vector<int> got(c.left.table());
              got.insert(got.end(), c.right.table().begin(), c.right.table().end());
              CHECK(got == oracle);
            }
  }
}

TEST_CASE("pushout universal property: legs commute, mediator unique") {
  for (int z = 0; z <= 2; ++z)
    for (int n = 0; n <= 2; ++n)
      for (int m = 0; m <= 2; ++m)
        for (const auto& p : enumerate::all_fns(z, n))
          for (const auto& q : enumerate::all_fns(z, m)) {
            Span<FinFn> s(p, q);
            auto po = eng.pushout(s);
            CHECK(eng.compose(p, po.left) == eng.compose(q, po.right));
            for (int w = 0; w <= 2; ++w)
              for (const auto& u : enumerate::all_fns(n, w))
                for (const auto& v : enumerate::all_fns(m, w)) {
                  if (!(eng.compose(p, u) == eng.compose(q, v))) continue;
                  auto h = eng.pushout_mediator(s, Cospan<FinFn>(u, v));
                  CHECK(eng.compose(po.left, h) == u);
                  CHECK(eng.compose(po.right, h) == v);
                  int commuting = 0;
                  for (const auto& cand : enumerate::all_fns(po.apex(), w))
                    if (eng.compose(po.left, cand) == u && eng.compose(po.right, cand) == v)
                      ++commuting;
                  CHECK(commuting == 1);
                }
          }
}

TEST_CASE("pullback universal property: legs commute, mediator unique") {
  for (int a = 0; a <= 2; ++a)
    for (int n = 0; n <= 2; ++n)
      for (int m = 0; m <= 2; ++m)
        for (const auto& f : enumerate::all_fns(n, a))
          for (const auto& g : enumerate::all_fns(m, a)) {
            Cospan<FinFn> c(f, g);
            auto pb = eng.pullback(c);
            CHECK(eng.compose(pb.left, f) == eng.compose(pb.right, g));
            for (int w = 0; w <= 2; ++w)
              for (const auto& u : enumerate::all_fns(w, n))
                for (const auto& v : enumerate::all_fns(w, m)) {
                  if (!(eng.compose(u, f) == eng.compose(v, g))) continue;
                  auto h = eng.pullback_mediator(c, Span<FinFn>(u, v));
                  CHECK(eng.compose(h, pb.left) == u);
                  CHECK(eng.compose(h, pb.right) == v);
                  int commuting = 0;
                  for (const auto& cand : enumerate::all_fns(w, pb.apex()))
                    if (eng.compose(cand, pb.left) == u && eng.compose(cand, pb.right) == v)
                      ++commuting;
                  CHECK(commuting == 1);
                }
          }
}

TEST_CASE("injections are stable under pullback") {
  for (int a = 0; a <= 3; ++a)
    for (int n = 0; n <= 3; ++n)
      for (int m = 0; m <= 3; ++m)
        for (const auto& f : enumerate::all_injections(n, a))
          for (const auto& g : enumerate::all_injections(m, a)) {
            auto s = eng.pullback(Cospan<FinFn>(f, g));
            CHECK(s.left.injective());
            CHECK(s.right.injective());
          }
}

TEST_CASE("pushout of pullback of an injection cospan mediates injectively") {
  for (int a = 0; a <= 3; ++a)
    for (int n = 0; n <= 3; ++n)
      for (int m = 0; m <= 3; ++m)
        for (const auto& f : enumerate::all_injections(n, a))
          for (const auto& g : enumerate::all_injections(m, a)) {
            Cospan<FinFn> c(f, g);
            auto h = eng.pushout_mediator(eng.pullback(c), c);
            CHECK(h.injective());
          }
}

TEST_CASE("direct equivalence-relation composition") {
  SUBCASE("identity is neutral") {
    Partition id1{1, 1, {0, 0}};
    Partition split{1, 1, {0, 1}};
    CHECK(er_compose_direct(1, 1, 1, id1, split) == split);
    CHECK(er_compose_direct(1, 1, 1, split, id1) == split);
  }
  SUBCASE("all-singletons compose to all-singletons") {
    Partition s1{2, 2, {0, 1, 2, 3}};
    CHECK(er_compose_direct(2, 2, 2, s1, s1) == s1);
  }
  SUBCASE("chase through the middle witness") {
    Partition e1{1, 1, {0, 0}};
    Partition e2{1, 1, {0, 0}};
    CHECK(er_compose_direct(1, 1, 1, e1, e2) == Partition{1, 1, {0, 0}});
  }
  SUBCASE("matches the closure oracle exhaustively") {
    for (int n = 0; n <= 3; ++n)
      for (int z = 0; z <= 3; ++z)
        for (int m = 0; m <= 3; ++m)
          for (const auto& b1 : enumerate::set_partitions(n + z))
            for (const auto& b2 : enumerate::set_partitions(z + m)) {
              Partition e1{n, z, b1}, e2{z, m, b2};
              std::vector<std::pair<int, int>> seeds;
              std::vector<int> rep1(n + z, -1), rep2(z + m, -1);
              for (int i = 0; i < n + z; ++i) {
                if (rep1[b1[i]] < 0)
                  rep1[b1[i]] = i;
                else
                  seeds.emplace_back(rep1[b1[i]], i);
              }
              for (int i = 0; i < z + m; ++i) {
                if (rep2[b2[i]] < 0)
                  rep2[b2[i]] = n + i;
                else
                  seeds.emplace_back(rep2[b2[i]], n + i);
              }
              auto closed = closure_blocks(n + z + m, seeds);
              std::vector<int> restricted(closed.begin(), closed.begin() + n);
              restricted.insert(restricted.end(), closed.begin() + n + z, closed.end());
              CHECK(er_compose_direct(n, z, m, e1, e2) ==
                    normalize_partition(n, m, restricted));
            }
  }
}

TEST_CASE("corelation canonical form") {
  SUBCASE("identity cospan") {
    auto p = eng.corel_canonical(Cospan<FinFn>(eng.identity(1), eng.identity(1)));
    CHECK(p == Partition{1, 1, {0, 0}});
  }
  SUBCASE("collapsing leg") {
    auto p = eng.corel_canonical(Cospan<FinFn>(eng.identity(2), fn(1, 2, {0})));
    CHECK(p == Partition{2, 1, {0, 1, 0}});
  }
  SUBCASE("unhit apex points vanish") {
    auto p = eng.corel_canonical(Cospan<FinFn>(fn(0, 1, {}), fn(0, 1, {})));
    CHECK(p == Partition{0, 0, {}});
  }
  SUBCASE("hom(1,1) has exactly Bell(2) members") {
    std::set<std::vector<int>> seen;
    for (int a = 0; a <= 2; ++a)
      for (const auto& f : enumerate::all_fns(1, a))
        for (const auto& g : enumerate::all_fns(1, a))
          seen.insert(eng.corel_canonical(Cospan<FinFn>(f, g)).blocks);
    CHECK(seen.size() == 2);
  }
}

TEST_CASE("relation canonical form") {
  SUBCASE("identity span gives the diagonal") {
    auto r = eng.rel_canonical(Span<FinFn>(eng.identity(2), eng.identity(2)));
    CHECK(r == RelationTable{2, 2, {{0, 0}, {1, 1}}});
  }
  SUBCASE("full span gives the full relation") {
    auto s = eng.pullback(Cospan<FinFn>(fn(2, 1, {0, 0}), fn(2, 1, {0, 0})));
    auto r = eng.rel_canonical(s);
    CHECK(r == RelationTable{2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}});
  }
  SUBCASE("duplicate pairs collapse") {
    auto r = eng.rel_canonical(Span<FinFn>(fn(2, 1, {0, 0}), fn(2, 1, {0, 0})));
    CHECK(r == RelationTable{1, 1, {{0, 0}}});
  }
  SUBCASE("empty apex gives the empty relation") {
    auto r = eng.rel_canonical(Span<FinFn>(fn(0, 2, {}), fn(0, 2, {})));
    CHECK(r == RelationTable{2, 2, {}});
  }
}

TEST_CASE("tensor shifts indices") {
  CHECK(eng.tensor(eng.identity(1), eng.identity(1)) == eng.identity(2));
  CHECK(eng.tensor(fn(1, 1, {0}), fn(1, 1, {0})) == fn(2, 2, {0, 1}));
  for (const auto& f : enumerate::all_fns(2, 2))
    for (const auto& g : enumerate::all_fns(2, 1)) {
      auto t = eng.tensor(f, g);
      CHECK(ff_classify(t).injective == (f.injective() && g.injective()));
      CHECK(ff_classify(t).surjective == (f.surjective() && g.surjective()));
    }
}

TEST_CASE("partition normal form is a restricted growth string") {
  for (const auto& blocks : enumerate::set_partitions(5)) {
    int seen = 0;
    for (int b : blocks) {
      CHECK(b <= seen);
      seen = std::max(seen, b + 1);
    }
    CHECK(normalize_partition(2, 3, blocks).blocks == blocks);
  }
}

TEST_CASE("table validation rejects out-of-range entries") {
  CHECK_THROWS_AS(FinFn(2, 1, {0, 1}), DimensionError);
  CHECK_THROWS_AS(FinFn(2, 2, {0}), DimensionError);
  CHECK_THROWS_AS(FinFn(1, 0, {0}), DimensionError);
}
