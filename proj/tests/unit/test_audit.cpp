#include "doctest.h"
#include "ogq/audit.hpp"
#include "ogq/rational.hpp"

TEST_CASE("floating-point audit sees inexact arithmetic") {
  ogq::audit::begin();
  CHECK_FALSE(ogq::audit::floating_point_touched());
  volatile long double one = 1, three = 3;
  volatile long double q = one / three;
  (void)q;
  CHECK(ogq::audit::floating_point_touched());
  ogq::audit::begin();
  CHECK(ogq::Rat(mpz_class(1), mpz_class(3)) * ogq::Rat(3) == ogq::Rat(1));
  CHECK_FALSE(ogq::audit::floating_point_touched());
}
