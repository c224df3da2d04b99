#pragma once

// Exact scalar domains: arbitrary-precision rationals, prime fields with a
// runtime modulus, and arbitrary-precision integers.  Field/ring contexts
// carry the operations so that residues stay plain machine integers and the
// matrix algorithms can be written once against the context interface.

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "corel/diagrams.hpp"

namespace corel {

bool is_prime(std::int64_t p);

struct QField {
  using Scalar = mpq_class;

  std::string name() const { return "Q"; }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_long(long v) const { return Scalar(v); }

  Scalar add(const Scalar& a, const Scalar& b) const { return Scalar(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return Scalar(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return Scalar(a * b); }
  Scalar neg(const Scalar& a) const { return Scalar(-a); }
  Scalar div(const Scalar& a, const Scalar& b) const {
    if (b == 0) throw PreconditionError("rational division by zero");
    return Scalar(a / b);
  }
  Scalar inv(const Scalar& a) const { return div(one(), a); }

  bool is_zero(const Scalar& a) const { return a == 0; }
  bool eq(const Scalar& a, const Scalar& b) const { return a == b; }

  std::string to_string(const Scalar& a) const { return a.get_str(); }
  Scalar parse(const std::string& text) const;
};

// GF(p) for a prime modulus fixed at construction; residues live in [0, p).
struct FpField {
  using Scalar = std::int64_t;

  explicit FpField(std::int64_t prime);

  std::int64_t p;

  std::string name() const { return "F" + std::to_string(p); }

  Scalar zero() const { return 0; }
  Scalar one() const { return 1; }
  Scalar from_long(long v) const {
    Scalar r = static_cast<Scalar>(v % p);
    return r < 0 ? r + p : r;
  }

  Scalar add(Scalar a, Scalar b) const { return (a + b) % p; }
  Scalar sub(Scalar a, Scalar b) const { return ((a - b) % p + p) % p; }
  Scalar mul(Scalar a, Scalar b) const { return (a * b) % p; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p - a; }
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }

  bool is_zero(Scalar a) const { return a == 0; }
  bool eq(Scalar a, Scalar b) const { return a == b; }

  std::string to_string(Scalar a) const { return std::to_string(a); }
  Scalar parse(const std::string& text) const;
};

struct ZRing {
  using Scalar = mpz_class;

  std::string name() const { return "Z"; }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_long(long v) const { return Scalar(v); }

  Scalar add(const Scalar& a, const Scalar& b) const { return Scalar(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return Scalar(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return Scalar(a * b); }
  Scalar neg(const Scalar& a) const { return Scalar(-a); }

  bool is_zero(const Scalar& a) const { return a == 0; }
  bool eq(const Scalar& a, const Scalar& b) const { return a == b; }

  std::string to_string(const Scalar& a) const { return a.get_str(); }
  Scalar parse(const std::string& text) const;
};

}  // namespace corel
