#pragma once

// Exhaustive enumerators for the finite engines and seeded random sources
// for the infinite ones.  Enumeration orders are fixed (lexicographic or
// first-occurrence) so that suite reports and minimal witnesses are
// reproducible byte for byte.

#include <cstdint>
#include <vector>

#include "corel/finset.hpp"
#include "corel/linear.hpp"
#include "corel/partial.hpp"
#include "corel/pid.hpp"

namespace corel::enumerate {

// splitmix64: tiny, deterministic across platforms, good enough for
// sampling desk-scale instances.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform-ish in [0, k); k > 0
  std::uint64_t below(std::uint64_t k) { return next() % k; }

  // uniform-ish in [lo, hi]
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

// All functions [n] -> [m], tables in lexicographic order.
std::vector<FinFn> all_fns(int n, int m);
std::vector<FinFn> all_injections(int n, int m);

// All partial functions [n] -> [m]; per slot, undefined sorts before 0..m-1.
std::vector<PartialFn> all_partial_fns(int n, int m);

// All set partitions of [k] as restricted growth strings, lexicographic.
std::vector<std::vector<int>> set_partitions(int k);

// Partial set partitions of [k] (kUndef allowed), same order discipline.
std::vector<std::vector<int>> partial_set_partitions(int k);

// All rows x cols matrices over GF(p), entries in lexicographic order.
std::vector<Matrix<std::int64_t>> all_fp_matrices(const FpField& f, int rows, int cols);

// All reduced-echelon bases (one per subspace of k^ambient), ordered by
// rank then pivot choice then free entries.
std::vector<Matrix<std::int64_t>> all_fp_subspace_bases(const FpField& f, int ambient);

FinFn random_fn(Rng& rng, int n, int m);
FinFn random_injection(Rng& rng, int n, int m);  // requires n <= m
PartialFn random_partial_fn(Rng& rng, int n, int m);

Matrix<mpq_class> random_q_matrix(Rng& rng, int rows, int cols, long lo, long hi);
ZMatrix random_z_matrix(Rng& rng, int rows, int cols, long lo, long hi);

// A random split mono cols -> rows (columns of a random unimodular matrix).
ZMatrix random_z_split_mono(Rng& rng, int rows, int cols);

}  // namespace corel::enumerate
