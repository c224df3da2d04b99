#include "corel/scalars.hpp"

namespace corel {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

mpq_class QField::parse(const std::string& text) const {
  mpq_class v;
  if (v.set_str(text, 10) != 0)
    throw ParseError("not a rational: '" + text + "'");
  if (v.get_den() == 0) throw ParseError("rational with zero denominator: '" + text + "'");
  v.canonicalize();
  return v;
}

FpField::FpField(std::int64_t prime) : p(prime) {
  if (!is_prime(p))
    throw PreconditionError("GF(p) modulus must be prime, got " + std::to_string(prime));
}

std::int64_t FpField::inv(Scalar a) const {
  if (a == 0) throw PreconditionError("inverse of zero in GF(p)");
  // extended euclid
  std::int64_t r0 = p, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  return ((t0 % p) + p) % p;
}

std::int64_t FpField::parse(const std::string& text) const {
  mpz_class v;
  if (v.set_str(text, 10) != 0)
    throw ParseError("not an integer: '" + text + "'");
  mpz_class r = v % p;
  if (r < 0) r += p;
  return r.get_si();
}

mpz_class ZRing::parse(const std::string& text) const {
  mpz_class v;
  if (v.set_str(text, 10) != 0)
    throw ParseError("not an integer: '" + text + "'");
  return v;
}

}  // namespace corel
