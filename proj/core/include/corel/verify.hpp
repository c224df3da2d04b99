#pragma once

// Executable checks for the universal-construction claims: each suite
// sweeps an exhaustive or seeded-random instance set for one law and
// reports pass/fail with the minimal counterexample in enumeration order.
//
// The pushout property itself quantifies over all cocones and cannot be
// enumerated; coverage is indirect, through the square-commutativity and
// presentation-equation suites.  Every report run states this.
//
// Suites are deterministic given (engine, bound, seed); apart from the
// elapsed-time stamp, reports reproduce byte for byte.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "corel/diagrams.hpp"
#include "corel/enumerate.hpp"
#include "corel/json_io.hpp"
#include "corel/lattice.hpp"

namespace corel::verify {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEEULL;

// --- independent counting oracles ----------------------------------------

// Bell numbers B(0..upto) via the Bell triangle.
std::vector<long long> bell_numbers(int upto);

// Number of partial set partitions of [k]: sum of C(k,j) * B(j).
long long partial_partition_count(int k);

// Number of subspaces of GF(p)^ambient: sum of Gaussian binomials.
long long fp_subspace_count(std::int64_t p, int ambient);

// --- reports ---------------------------------------------------------------

struct Failure {
  std::string input;
  std::string expected;
  std::string got;
};

struct SuiteReport {
  std::string suite;
  std::string engine;
  std::string params;
  bool expected_fail = false;
  std::size_t instances = 0;
  std::size_t failure_count = 0;
  std::vector<Failure> witnesses;  // first few, enumeration order
  double elapsed_ms = 0.0;

  bool passed() const { return failure_count == 0; }
  // A suite is in order when it passes, unless it documents a known
  // non-example, in which case passing would be the bug.
  bool ok() const { return passed() != expected_fail; }
};

class Recorder {
 public:
  explicit Recorder(SuiteReport& rep) : rep_(rep) {}

  void instance() { ++rep_.instances; }

  // The witness thunk runs only on failure; keep instance encoding lazy so
  // exhaustive sweeps stay cheap.
  template <typename MakeFailure>
  void check(bool good, MakeFailure&& mk) {
    ++rep_.instances;
    if (good) return;
    ++rep_.failure_count;
    if (rep_.witnesses.size() < kMaxWitnesses) rep_.witnesses.push_back(mk());
  }

 private:
  static constexpr std::size_t kMaxWitnesses = 5;
  SuiteReport& rep_;
};

template <typename Fn>
SuiteReport timed_suite(std::string suite, std::string engine, std::string params,
                        bool expected_fail, Fn&& body) {
  SuiteReport rep;
  rep.suite = std::move(suite);
  rep.engine = std::move(engine);
  rep.params = std::move(params);
  rep.expected_fail = expected_fail;
  const auto t0 = std::chrono::steady_clock::now();
  Recorder rec(rep);
  body(rec);
  const auto t1 = std::chrono::steady_clock::now();
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return rep;
}

struct SuiteConfig {
  int bound = 2;
  int samples = 100;
  std::uint64_t seed = kDefaultSeed;

  std::string params_finite() const { return "bound=" + std::to_string(bound); }
  std::string params_sampled() const {
    return "bound=" + std::to_string(bound) + " samples=" + std::to_string(samples) +
           " seed=" + std::to_string(seed);
  }
};

enum class Subcat { M, A, All };
enum class Direction { primal, dual };

std::string subcat_name(Subcat s);
std::string direction_name(Direction d);

// --- per-engine instance sources -------------------------------------------

// Exhaustive sweeps refuse to start when the estimated instance count gets
// out of desk range; callers are told to lower the bound instead of hanging.
inline constexpr double kMaxSweep = 2.0e7;

inline void guard_sweep(double estimated) {
  if (estimated > kMaxSweep)
    throw PreconditionError(
        "exhaustive sweep would visit about " + std::to_string(estimated) +
        " instances; lower --bound (or use a sampled engine)");
}

template <typename E>
struct Source;

template <>
struct Source<FinSetEngine> {
  static constexpr bool finite = true;
  static double hom_size(const FinSetEngine&, int n, int m) {
    if (n == 0) return 1.0;
    if (m == 0) return 0.0;
    return std::pow(static_cast<double>(m), n);
  }
  static std::vector<FinFn> hom(const FinSetEngine&, int n, int m) {
    return enumerate::all_fns(n, m);
  }
  static bool feasible(Subcat s, int dom, int cod) {
    if (s == Subcat::All) return dom == 0 || cod > 0;
    return dom <= cod;
  }
  static FinFn sample_hom_in(const FinSetEngine&, enumerate::Rng& rng, Subcat s, int dom,
                             int cod) {
    return s == Subcat::All ? enumerate::random_fn(rng, dom, cod)
                            : enumerate::random_injection(rng, dom, cod);
  }
};

template <>
struct Source<PartialFnEngine> {
  static constexpr bool finite = true;
  static double hom_size(const PartialFnEngine&, int n, int m) {
    return std::pow(static_cast<double>(m) + 1.0, n);
  }
  static std::vector<PartialFn> hom(const PartialFnEngine&, int n, int m) {
    return enumerate::all_partial_fns(n, m);
  }
  static bool feasible(Subcat s, int dom, int cod) {
    return s == Subcat::All || dom <= cod;
  }
  static PartialFn sample_hom_in(const PartialFnEngine&, enumerate::Rng& rng, Subcat s,
                                 int dom, int cod) {
    if (s == Subcat::All) return enumerate::random_partial_fn(rng, dom, cod);
    return PartialFn(dom, cod, enumerate::random_injection(rng, dom, cod).table());
  }
};

template <>
struct Source<LinFpEngine> {
  static constexpr bool finite = true;
  static double hom_size(const LinFpEngine& e, int n, int m) {
    return std::pow(static_cast<double>(e.field.p), static_cast<double>(n) * m);
  }
  static std::vector<Matrix<std::int64_t>> hom(const LinFpEngine& e, int n, int m) {
    guard_sweep(hom_size(e, n, m));
    return enumerate::all_fp_matrices(e.field, m, n);
  }
  static bool feasible(Subcat s, int dom, int cod) {
    return s == Subcat::All || s == Subcat::A || dom <= cod;
  }
  static Matrix<std::int64_t> sample_hom_in(const LinFpEngine& e, enumerate::Rng& rng,
                                            Subcat s, int dom, int cod) {
    while (true) {
      Matrix<std::int64_t> m = mat_zero(e.field, cod, dom);
      for (int i = 0; i < cod; ++i)
        for (int j = 0; j < dom; ++j)
          m.at(i, j) = static_cast<std::int64_t>(rng.below(e.field.p));
      if (s != Subcat::M || mat_rank(e.field, m) == dom) return m;
    }
  }
};

template <>
struct Source<LinQEngine> {
  static constexpr bool finite = false;
  static bool feasible(Subcat s, int dom, int cod) {
    return s == Subcat::All || s == Subcat::A || dom <= cod;
  }
  static Matrix<mpq_class> sample_hom_in(const LinQEngine&, enumerate::Rng& rng, Subcat s,
                                         int dom, int cod) {
    QField f;
    while (true) {
      auto m = enumerate::random_q_matrix(rng, cod, dom, -3, 3);
      if (s != Subcat::M || mat_rank(f, m) == dom) return m;
    }
  }
};

template <>
struct Source<PidEngine> {
  static constexpr bool finite = false;
  static bool feasible(Subcat s, int dom, int cod) {
    return s == Subcat::All || dom <= cod;
  }
  static ZMatrix sample_hom_in(const PidEngine&, enumerate::Rng& rng, Subcat s, int dom,
                               int cod) {
    if (s == Subcat::All) return enumerate::random_z_matrix(rng, cod, dom, -3, 3);
    return enumerate::random_z_split_mono(rng, cod, dom);
  }
};

// --- shared enumeration helpers ---------------------------------------------

template <typename E>
bool in_subcat(const E& e, Subcat s, const typename E::Morphism& f) {
  switch (s) {
    case Subcat::M:
      return e.is_in_M(f);
    case Subcat::A:
      return e.is_in_A(f);
    case Subcat::All:
      return true;
  }
  return false;
}

template <typename E>
std::vector<typename E::Morphism> subcat_hom(const E& e, Subcat s, int n, int m) {
  std::vector<typename E::Morphism> out;
  for (auto& f : Source<E>::hom(e, n, m))
    if (in_subcat(e, s, f)) out.push_back(std::move(f));
  return out;
}

template <typename E>
double est_cospan_sweep(const E& e, int bound) {
  double total = 0;
  for (int n = 0; n <= bound; ++n)
    for (int m = 0; m <= bound; ++m)
      for (int a = 0; a <= bound; ++a)
        total += Source<E>::hom_size(e, n, a) * Source<E>::hom_size(e, m, a);
  return total;
}

template <typename E>
double est_span_sweep(const E& e, int bound) {
  double total = 0;
  for (int n = 0; n <= bound; ++n)
    for (int m = 0; m <= bound; ++m)
      for (int z = 0; z <= bound; ++z)
        total += Source<E>::hom_size(e, z, n) * Source<E>::hom_size(e, z, m);
  return total;
}

// Visit cospans (f : n -> a, g : m -> a) with legs in the subcategory,
// ordered by total size, then (n, m, a), then table order.  The first
// failing instance under this order is the minimal witness.
template <typename E, typename Fn>
void for_each_cospan(const E& e, Subcat s, int bound, Fn&& fn) {
  guard_sweep(est_cospan_sweep(e, bound));
  for (int total = 0; total <= 3 * bound; ++total)
    for (int n = 0; n <= bound; ++n)
      for (int m = 0; m <= bound && n + m <= total; ++m) {
        const int a = total - n - m;
        if (a < 0 || a > bound) continue;
        auto fs = subcat_hom(e, s, n, a);
        auto gs = subcat_hom(e, s, m, a);
        for (const auto& f : fs)
          for (const auto& g : gs)
            fn(Cospan<typename E::Morphism>(f, g));
      }
}

// Spans (p : z -> n, q : z -> m), same ordering with the apex last.
template <typename E, typename Fn>
void for_each_span(const E& e, Subcat s, int bound, Fn&& fn) {
  guard_sweep(est_span_sweep(e, bound));
  for (int total = 0; total <= 3 * bound; ++total)
    for (int n = 0; n <= bound; ++n)
      for (int m = 0; m <= bound && n + m <= total; ++m) {
        const int z = total - n - m;
        if (z < 0 || z > bound) continue;
        auto ps = subcat_hom(e, s, z, n);
        auto qs = subcat_hom(e, s, z, m);
        for (const auto& p : ps)
          for (const auto& q : qs)
            fn(Span<typename E::Morphism>(p, q));
      }
}

template <typename E>
Cospan<typename E::Morphism> sample_cospan(const E& e, enumerate::Rng& rng, Subcat s,
                                           int bound) {
  while (true) {
    const int n = static_cast<int>(rng.below(bound + 1));
    const int m = static_cast<int>(rng.below(bound + 1));
    const int a = static_cast<int>(rng.below(bound + 1));
    if (!Source<E>::feasible(s, n, a) || !Source<E>::feasible(s, m, a)) continue;
    return Cospan<typename E::Morphism>(Source<E>::sample_hom_in(e, rng, s, n, a),
                                        Source<E>::sample_hom_in(e, rng, s, m, a));
  }
}

template <typename E>
Span<typename E::Morphism> sample_span(const E& e, enumerate::Rng& rng, Subcat s, int bound) {
  while (true) {
    const int n = static_cast<int>(rng.below(bound + 1));
    const int m = static_cast<int>(rng.below(bound + 1));
    const int z = static_cast<int>(rng.below(bound + 1));
    if (!Source<E>::feasible(s, z, n) || !Source<E>::feasible(s, z, m)) continue;
    return Span<typename E::Morphism>(Source<E>::sample_hom_in(e, rng, s, z, n),
                                      Source<E>::sample_hom_in(e, rng, s, z, m));
  }
}

// All corelations n -> m for the finite engines, via their canonical forms.
std::vector<Corelation<FinSetEngine>> all_corels(const FinSetEngine& e, int n, int m);
std::vector<Corelation<PartialFnEngine>> all_corels(const PartialFnEngine& e, int n, int m);
std::vector<Corelation<LinFpEngine>> all_corels(const LinFpEngine& e, int n, int m);

// Floating-point corelation counts, for sweep-size guards only.
double est_corel_count(const FinSetEngine& e, int ambient);
double est_corel_count(const PartialFnEngine& e, int ambient);
double est_corel_count(const LinFpEngine& e, int ambient);

// A corelation sampled as the image of a random cospan.
template <typename E>
Corelation<E> random_corel(const E& e, enumerate::Rng& rng, int n, int m) {
  const int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n + m + 2)));
  return gamma(e, Cospan<typename E::Morphism>(
                      Source<E>::sample_hom_in(e, rng, Subcat::All, n, a),
                      Source<E>::sample_hom_in(e, rng, Subcat::All, m, a)));
}

// --- suites -------------------------------------------------------------------

// pi(id, f) = gamma(f, id) and pi(f, id) = gamma(id, f) for f in A.
template <typename E>
SuiteReport suite_square_commutes(const E& e, const SuiteConfig& cfg) {
  const bool finite = Source<E>::finite;
  return timed_suite(
      "square-commutes", e.name(),
      finite ? cfg.params_finite() : cfg.params_sampled(), false, [&](Recorder& rec) {
        auto check = [&](const typename E::Morphism& f) {
          // one instance per morphism covering both squares
          auto lhs1 = pi(e, Span<typename E::Morphism>(e.identity(f.dom()), f));
          auto rhs1 = gamma(e, Cospan<typename E::Morphism>(f, e.identity(f.cod())));
          auto lhs2 = pi(e, Span<typename E::Morphism>(f, e.identity(f.dom())));
          auto rhs2 = gamma(e, Cospan<typename E::Morphism>(e.identity(f.cod()), f));
          rec.check(lhs1 == rhs1 && lhs2 == rhs2, [&] {
            const bool first = !(lhs1 == rhs1);
            return Failure{io::encode(e, f).dump(),
                           io::encode(e, first ? rhs1.form : rhs2.form).dump(),
                           io::encode(e, first ? lhs1.form : lhs2.form).dump()};
          });
        };
        if constexpr (Source<E>::finite) {
          for (int n = 0; n <= cfg.bound; ++n)
            for (int m = 0; m <= cfg.bound; ++m)
              for (const auto& f : subcat_hom(e, Subcat::A, n, m)) check(f);
        } else {
          enumerate::Rng rng(cfg.seed);
          for (int k = 0; k < cfg.samples; ++k) {
            int n = static_cast<int>(rng.below(cfg.bound + 1));
            int m = static_cast<int>(rng.below(cfg.bound + 1));
            if (!Source<E>::feasible(Subcat::A, n, m)) {
              if (n > m) std::swap(n, m);
              if (!Source<E>::feasible(Subcat::A, n, m)) continue;
            }
            check(Source<E>::sample_hom_in(e, rng, Subcat::A, n, m));
          }
        }
      });
}

// gamma and pi preserve composition.  The pi half needs the engine's
// mediator condition; engines where that condition has a counterexample run
// this suite as expected-fail.
template <typename E>
SuiteReport suite_functoriality(const E& e, const SuiteConfig& cfg, bool expected_fail = false) {
  const bool finite = Source<E>::finite;
  return timed_suite(
      "functoriality", e.name(),
      finite ? cfg.params_finite() : cfg.params_sampled(), expected_fail, [&](Recorder& rec) {
        auto check_cospans = [&](const Cospan<typename E::Morphism>& c1,
                                 const Cospan<typename E::Morphism>& c2) {
          auto lhs = gamma(e, compose_cospan(e, c1, c2));
          auto rhs = compose_corel(e, gamma(e, c1), gamma(e, c2));
          rec.check(lhs == rhs, [&] {
            return Failure{io::encode_cospan(e, c1).dump() + " ; " + io::encode_cospan(e, c2).dump(),
                           io::encode(e, rhs.form).dump(),
                           io::encode(e, lhs.form).dump()};
          });
        };
        auto check_spans = [&](const Span<typename E::Morphism>& s1,
                               const Span<typename E::Morphism>& s2) {
          auto lhs = pi(e, compose_span(e, s1, s2));
          auto rhs = compose_corel(e, pi(e, s1), pi(e, s2));
          rec.check(lhs == rhs, [&] {
            return Failure{io::encode_span(e, s1).dump() + " ; " + io::encode_span(e, s2).dump(),
                           io::encode(e, rhs.form).dump(),
                           io::encode(e, lhs.form).dump()};
          });
        };
        if constexpr (Source<E>::finite) {
          const int b = cfg.bound;
          double est = 0;
          for (int n = 0; n <= b; ++n)
            for (int m = 0; m <= b; ++m)
              for (int k = 0; k <= b; ++k)
                for (int a1 = 0; a1 <= b; ++a1)
                  for (int a2 = 0; a2 <= b; ++a2)
                    est += Source<E>::hom_size(e, n, a1) * Source<E>::hom_size(e, m, a1) *
                           Source<E>::hom_size(e, m, a2) * Source<E>::hom_size(e, k, a2);
          guard_sweep(2 * est);  // the span half is at most as large
          for (int n = 0; n <= b; ++n)
            for (int m = 0; m <= b; ++m)
              for (int k = 0; k <= b; ++k) {
                for (int a1 = 0; a1 <= b; ++a1)
                  for (int a2 = 0; a2 <= b; ++a2) {
                    auto f1 = Source<E>::hom(e, n, a1);
                    auto g1 = Source<E>::hom(e, m, a1);
                    auto f2 = Source<E>::hom(e, m, a2);
                    auto g2 = Source<E>::hom(e, k, a2);
                    for (const auto& f : f1)
                      for (const auto& g : g1)
                        for (const auto& h : f2)
                          for (const auto& i : g2)
                            check_cospans(Cospan<typename E::Morphism>(f, g),
                                          Cospan<typename E::Morphism>(h, i));
                  }
                for (int z1 = 0; z1 <= b; ++z1)
                  for (int z2 = 0; z2 <= b; ++z2) {
                    auto p1 = subcat_hom(e, Subcat::A, z1, n);
                    auto q1 = subcat_hom(e, Subcat::A, z1, m);
                    auto p2 = subcat_hom(e, Subcat::A, z2, m);
                    auto q2 = subcat_hom(e, Subcat::A, z2, k);
                    for (const auto& p : p1)
                      for (const auto& q : q1)
                        for (const auto& r : p2)
                          for (const auto& t : q2)
                            check_spans(Span<typename E::Morphism>(p, q),
                                        Span<typename E::Morphism>(r, t));
                  }
              }
        } else {
          enumerate::Rng rng(cfg.seed);
          for (int it = 0; it < cfg.samples; ++it) {
            auto c1 = sample_cospan(e, rng, Subcat::All, cfg.bound);
            auto f2 = Source<E>::sample_hom_in(e, rng, Subcat::All, c1.cod(),
                                               static_cast<int>(rng.below(cfg.bound + 1)));
            auto g2 = Source<E>::sample_hom_in(
                e, rng, Subcat::All, static_cast<int>(rng.below(cfg.bound + 1)), f2.cod());
            check_cospans(c1, Cospan<typename E::Morphism>(f2, g2));

            auto s1 = sample_span(e, rng, Subcat::A, cfg.bound);
            int k = static_cast<int>(rng.below(cfg.bound + 1));
            int z2 = static_cast<int>(rng.below(cfg.bound + 1));
            if (!Source<E>::feasible(Subcat::A, z2, s1.cod()) ||
                !Source<E>::feasible(Subcat::A, z2, k)) {
              z2 = 0;  // the empty apex is always feasible
            }
            check_spans(s1, Span<typename E::Morphism>(
                                Source<E>::sample_hom_in(e, rng, Subcat::A, z2, s1.cod()),
                                Source<E>::sample_hom_in(e, rng, Subcat::A, z2, k)));
          }
        }
      });
}

// Mediator membership for the chosen candidate subcategory: pushout of
// pullback lands in M (primal), pullback of pushout lands in E (dual).
template <typename E>
SuiteReport suite_assumption(const E& e, Subcat sub, Direction dir, const SuiteConfig& cfg,
                             bool expected_fail) {
  const bool finite = Source<E>::finite;
  std::string params = (finite ? cfg.params_finite() : cfg.params_sampled()) +
                       " subcat=" + subcat_name(sub) + " direction=" + direction_name(dir);
  return timed_suite(
      "assumption", e.name(), std::move(params), expected_fail, [&](Recorder& rec) {
        auto check_primal = [&](const Cospan<typename E::Morphism>& c) {
          auto s = e.pullback(c);
          auto med = e.pushout_mediator(s, c);
          rec.check(e.is_in_M(med), [&] {
            return Failure{io::encode_cospan(e, c).dump(),
                           "mediator in M",
                           io::encode(e, med).dump()};
          });
        };
        auto check_dual = [&](const Span<typename E::Morphism>& s) {
          auto c = e.pushout(s);
          auto med = e.pullback_mediator(c, s);
          rec.check(e.is_in_E(med), [&] {
            return Failure{io::encode_span(e, s).dump(),
                           "mediator in E",
                           io::encode(e, med).dump()};
          });
        };
        if constexpr (Source<E>::finite) {
          if (dir == Direction::primal)
            for_each_cospan(e, sub, cfg.bound, check_primal);
          else
            for_each_span(e, sub, cfg.bound, check_dual);
        } else {
          enumerate::Rng rng(cfg.seed);
          for (int it = 0; it < cfg.samples; ++it) {
            if (dir == Direction::primal)
              check_primal(sample_cospan(e, rng, sub, cfg.bound));
            else
              check_dual(sample_span(e, rng, sub, cfg.bound));
          }
        }
      });
}

// The two presentation equations: an A-cospan equals the pi-image of its
// pullback span, and the pushout of any span equals the composite of its
// two generator corelations.  The first equation needs the mediator
// condition, so the same expected-fail escape applies.
template <typename E>
SuiteReport suite_presentation(const E& e, const SuiteConfig& cfg, bool expected_fail = false) {
  const bool finite = Source<E>::finite;
  return timed_suite(
      "presentation", e.name(),
      finite ? cfg.params_finite() : cfg.params_sampled(), expected_fail, [&](Recorder& rec) {
        auto check_pullback_eq = [&](const Cospan<typename E::Morphism>& c) {
          auto lhs = gamma(e, c);
          auto s = e.pullback(c);
          if (!e.is_in_A(s.left) || !e.is_in_A(s.right)) {
            rec.check(false, [&] {
              return Failure{io::encode_cospan(e, c).dump(),
                             "pullback legs stay in A",
                             io::encode_span(e, s).dump()};
            });
            return;
          }
          auto rhs = pi(e, s);
          rec.check(lhs == rhs, [&] {
            return Failure{io::encode_cospan(e, c).dump(),
                           io::encode(e, lhs.form).dump(),
                           io::encode(e, rhs.form).dump()};
          });
        };
        auto check_pushout_eq = [&](const Span<typename E::Morphism>& s) {
          auto lhs = gamma(e, e.pushout(s));
          auto left = gamma(e, Cospan<typename E::Morphism>(e.identity(s.dom()), s.left));
          auto right = gamma(e, Cospan<typename E::Morphism>(s.right, e.identity(s.cod())));
          auto rhs = compose_corel(e, left, right);
          rec.check(lhs == rhs, [&] {
            return Failure{io::encode_span(e, s).dump(),
                           io::encode(e, lhs.form).dump(),
                           io::encode(e, rhs.form).dump()};
          });
        };
        if constexpr (Source<E>::finite) {
          for_each_cospan(e, Subcat::A, cfg.bound, check_pullback_eq);
          for_each_span(e, Subcat::All, cfg.bound, check_pushout_eq);
        } else {
          enumerate::Rng rng(cfg.seed);
          for (int it = 0; it < cfg.samples; ++it) {
            check_pullback_eq(sample_cospan(e, rng, Subcat::A, cfg.bound));
            check_pushout_eq(sample_span(e, rng, Subcat::All, cfg.bound));
          }
        }
        if constexpr (std::same_as<E, LinQEngine>) {
          // scalar squares: r -> <- r equals the identity pullback square
          // for every nonzero rational scalar
          for (long r = -5; r <= 5; ++r) {
            if (r == 0) continue;
            Matrix<mpq_class> leg(1, 1);
            leg.at(0, 0) = r;
            auto lhs = gamma(e, Cospan<Matrix<mpq_class>>(leg, leg));
            auto rhs = pi(e, Span<Matrix<mpq_class>>(e.identity(1), e.identity(1)));
            rec.check(lhs == rhs, [&] {
              return Failure{"scalar square r=" + std::to_string(r),
                             io::encode(e, rhs.form).dump(), io::encode(e, lhs.form).dump()};
            });
          }
        }
      });
}

// Tensor strictness of gamma and pi, and closure of E/M/A under tensor.
template <typename E>
SuiteReport suite_monoidal(const E& e, const SuiteConfig& cfg) {
  const bool finite = Source<E>::finite;
  return timed_suite(
      "monoidal", e.name(), finite ? cfg.params_finite() : cfg.params_sampled(), false,
      [&](Recorder& rec) {
        auto check_gamma = [&](const Cospan<typename E::Morphism>& c1,
                               const Cospan<typename E::Morphism>& c2) {
          auto lhs = gamma(e, tensor_cospan(e, c1, c2));
          auto rhs = tensor_corel(e, gamma(e, c1), gamma(e, c2));
          rec.check(lhs == rhs, [&] {
            return Failure{io::encode_cospan(e, c1).dump() + " (x) " + io::encode_cospan(e, c2).dump(),
                           io::encode(e, rhs.form).dump(),
                           io::encode(e, lhs.form).dump()};
          });
        };
        auto check_pi = [&](const Span<typename E::Morphism>& s1,
                            const Span<typename E::Morphism>& s2) {
          auto lhs = pi(e, tensor_span(e, s1, s2));
          auto rhs = tensor_corel(e, pi(e, s1), pi(e, s2));
          rec.check(lhs == rhs, [&] {
            return Failure{io::encode_span(e, s1).dump() + " (x) " + io::encode_span(e, s2).dump(),
                           io::encode(e, rhs.form).dump(),
                           io::encode(e, lhs.form).dump()};
          });
        };
        auto check_closure = [&](const typename E::Morphism& f, const typename E::Morphism& g) {
          auto t = e.tensor(f, g);
          bool good = (!e.is_in_M(f) || !e.is_in_M(g) || e.is_in_M(t)) &&
                      (!e.is_in_A(f) || !e.is_in_A(g) || e.is_in_A(t)) &&
                      (!e.is_in_E(f) || !e.is_in_E(g) || e.is_in_E(t));
          rec.check(good, [&] {
            return Failure{io::encode(e, f).dump() + " (x) " + io::encode(e, g).dump(),
                           "subcategory closed under tensor",
                           io::encode(e, t).dump()};
          });
        };
        if constexpr (Source<E>::finite) {
          std::vector<Cospan<typename E::Morphism>> cospans;
          for_each_cospan(e, Subcat::All, cfg.bound,
                          [&](const Cospan<typename E::Morphism>& c) { cospans.push_back(c); });
          guard_sweep(static_cast<double>(cospans.size()) * cospans.size());
          for (const auto& c1 : cospans)
            for (const auto& c2 : cospans) check_gamma(c1, c2);
          std::vector<Span<typename E::Morphism>> spans;
          for_each_span(e, Subcat::A, cfg.bound,
                        [&](const Span<typename E::Morphism>& s) { spans.push_back(s); });
          for (const auto& s1 : spans)
            for (const auto& s2 : spans) check_pi(s1, s2);
          std::vector<typename E::Morphism> morphs;
          for (int n = 0; n <= cfg.bound; ++n)
            for (int m = 0; m <= cfg.bound; ++m)
              for (auto& f : Source<E>::hom(e, n, m)) morphs.push_back(std::move(f));
          for (const auto& f : morphs)
            for (const auto& g : morphs) check_closure(f, g);
        } else {
          enumerate::Rng rng(cfg.seed);
          for (int it = 0; it < cfg.samples; ++it) {
            check_gamma(sample_cospan(e, rng, Subcat::All, cfg.bound),
                        sample_cospan(e, rng, Subcat::All, cfg.bound));
            check_pi(sample_span(e, rng, Subcat::A, cfg.bound),
                     sample_span(e, rng, Subcat::A, cfg.bound));
            check_closure(
                Source<E>::sample_hom_in(e, rng, Subcat::A, 1,
                                         1 + static_cast<int>(rng.below(cfg.bound))),
                Source<E>::sample_hom_in(e, rng, Subcat::A, 1,
                                         1 + static_cast<int>(rng.below(cfg.bound))));
          }
        }
      });
}

// Associativity of corelation (and, where present, relation) composition.
template <typename E>
SuiteReport suite_associativity(const E& e, const SuiteConfig& cfg) {
  const bool finite = Source<E>::finite;
  return timed_suite(
      "associativity", e.name(),
      finite ? cfg.params_finite() : cfg.params_sampled(), false, [&](Recorder& rec) {
        auto check_corel = [&](const Corelation<E>& a, const Corelation<E>& b,
                               const Corelation<E>& c) {
          auto lhs = compose_corel(e, compose_corel(e, a, b), c);
          auto rhs = compose_corel(e, a, compose_corel(e, b, c));
          rec.check(lhs == rhs, [&] {
          return Failure{io::encode(e, a.form).dump() + " ; " + io::encode(e, b.form).dump() +
                        " ; " + io::encode(e, c.form).dump(), io::encode(e, lhs.form).dump(), io::encode(e, rhs.form).dump()};
        });
        };
        if constexpr (Source<E>::finite) {
          const int b = std::min(cfg.bound, 2);
          double est = 0;
          for (int n = 0; n <= b; ++n)
            for (int z1 = 0; z1 <= b; ++z1)
              for (int z2 = 0; z2 <= b; ++z2)
                for (int m = 0; m <= b; ++m)
                  est += est_corel_count(e, n + z1) * est_corel_count(e, z1 + z2) *
                         est_corel_count(e, z2 + m);
          guard_sweep(est);
          for (int n = 0; n <= b; ++n)
            for (int z1 = 0; z1 <= b; ++z1)
              for (int z2 = 0; z2 <= b; ++z2)
                for (int m = 0; m <= b; ++m) {
                  auto xs = all_corels(e, n, z1);
                  auto ys = all_corels(e, z1, z2);
                  auto zs = all_corels(e, z2, m);
                  for (const auto& x : xs)
                    for (const auto& y : ys)
                      for (const auto& zc : zs) check_corel(x, y, zc);
                }
        } else {
          enumerate::Rng rng(cfg.seed);
          for (int it = 0; it < cfg.samples; ++it) {
            const int n = static_cast<int>(rng.below(cfg.bound + 1));
            const int z1 = static_cast<int>(rng.below(cfg.bound + 1));
            const int z2 = static_cast<int>(rng.below(cfg.bound + 1));
            const int m = static_cast<int>(rng.below(cfg.bound + 1));
            auto a = random_corel(e, rng, n, z1);
            auto b = random_corel(e, rng, z1, z2);
            auto c = random_corel(e, rng, z2, m);
            check_corel(a, b, c);
          }
        }
      });
}

// --- non-template suites (implemented in verify.cpp) -------------------------

SuiteReport suite_er_iso(const SuiteConfig& cfg);
SuiteReport suite_per_iso(const SuiteConfig& cfg);
SuiteReport suite_abelian_iso_fp(const LinFpEngine& e, const SuiteConfig& cfg);
SuiteReport suite_abelian_iso_q(const SuiteConfig& cfg);
SuiteReport suite_iso_factorisation_finset(const SuiteConfig& cfg);
SuiteReport suite_iso_factorisation_fp(const LinFpEngine& e, const SuiteConfig& cfg);
SuiteReport suite_lattice(const FiniteLattice& l, const std::string& label);
SuiteReport suite_scalar_dichotomy(long lo, long hi);

// --- runner --------------------------------------------------------------------

struct RunOptions {
  std::string engine = "finset";  // finset | pf | linq | linfp:<p> | z
  Subcat subcat = Subcat::A;
  Direction direction = Direction::primal;
  int bound = -1;     // -1 = per-suite default
  int samples = -1;
  std::uint64_t seed = kDefaultSeed;
  std::string lattice;  // builtin name or JSON file for the lattice suite
};

// The fixed battery behind `verify all`; bounds follow the acceptance
// criteria and complete in well under a minute.
std::vector<SuiteReport> run_battery(std::uint64_t seed);

// Run one named suite with explicit options.  Throws ParseError for an
// unknown suite name.
std::vector<SuiteReport> run_suite(const std::string& name, const RunOptions& opts);

std::vector<std::string> suite_names();

const char* coverage_note();

nlohmann::json reports_to_json(const std::vector<SuiteReport>& reps, std::uint64_t seed);
std::string reports_to_text(const std::vector<SuiteReport>& reps, std::uint64_t seed);
bool all_ok(const std::vector<SuiteReport>& reps);

// Builtin lattices by name ("chain2", "diamond", "coproduct2") or a JSON
// file path ({"size":k,"leq":[[...]]}).
FiniteLattice named_lattice(const std::string& name_or_path);

}  // namespace corel::verify
