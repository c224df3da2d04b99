#include "corel/linear.hpp"

namespace corel {

bool scalar_corel_equals_identity_q(const mpq_class& r) {
  LinQEngine e;
  Matrix<mpq_class> leg(1, 1);
  leg.at(0, 0) = r;
  auto c = e.corel_canonical(Cospan<Matrix<mpq_class>>(leg, leg));
  auto id1 = e.corel_canonical(Cospan<Matrix<mpq_class>>(e.identity(1), e.identity(1)));
  return c == id1;
}

}  // namespace corel
