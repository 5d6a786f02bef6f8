#pragma once

// Reference values frozen from mpmath; see make_fixtures.py.

namespace oracle {

struct FunctionFixture {
  double nu, x, j, y, dj, dy;
};

struct ZeroFixture {
  int kind;  // 0 = j, 1 = y, 2 = jp, 3 = yp
  double nu;
  int s;
  double value;
};

#include "mp_fixtures.inc"

}  // namespace oracle
