#include <string>

#include "doctest.h"
#include "homjet/error.hpp"
#include "homjet/lie.hpp"
#include "homjet/rng.hpp"

using namespace homjet;

namespace {

Vec basis_vec(int n, int i, Scalar c = Scalar(1)) {
  Vec v(static_cast<size_t>(n));
  v[size_t(i)] = c;
  return v;
}

// so(3) with the cyclic bracket [e1,e2]=e3 and so on.
LieAlgebraData so3() {
  LieAlgebraData g(3, 1);
  g.set_bracket(0, 1, basis_vec(3, 2));
  g.set_bracket(1, 2, basis_vec(3, 0));
  g.set_bracket(2, 0, basis_vec(3, 1));
  return g;
}

}  // namespace

TEST_CASE("antisymmetry is structural") {
  LieAlgebraData g = so3();
  CHECK(g.bracket_basis(1, 0) == basis_vec(3, 2, Scalar(-1)));
  CHECK(is_zero_vec(g.bracket_basis(1, 1)));
}

TEST_CASE("bracket extends bilinearly and matches ad") {
  DetRng rng(31);
  LieAlgebraData g = so3();
  Vec x = rng.vector(3), y = rng.vector(3), z = rng.vector(3);
  CHECK(g.bracket(x + y, z) == g.bracket(x, z) + g.bracket(y, z));
  CHECK(g.bracket(x, y) == g.ad(x).apply(y));
  CHECK(is_zero_vec(g.bracket(x, x)));
  // cross product rule: [x, y] for so(3) in this basis
  Vec e1 = basis_vec(3, 0), e2 = basis_vec(3, 1);
  CHECK(g.bracket(e1, e2) == basis_vec(3, 2));
}

TEST_CASE("validate accepts so(3) and pinpoints a broken triple") {
  LieAlgebraData g = so3();
  CHECK_NOTHROW(g.validate());

  LieAlgebraData bad(4, 1);
  bad.set_bracket(0, 1, basis_vec(4, 2));
  bad.set_bracket(1, 2, basis_vec(4, 0));
  bad.set_bracket(2, 0, basis_vec(4, 1));
  bad.set_bracket(0, 3, basis_vec(4, 1));  // spoils Jacobi starting at (0,2,3)
  try {
    bad.validate();
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("(0, 2, 3)") != std::string::npos);
    CHECK(e.kind() == ErrorKind::validation);
  }
}

TEST_CASE("killing form of so(3) is -2 times the identity") {
  LieAlgebraData g = so3();
  ExactMatrix k = g.killing_form();
  CHECK(k == Scalar(-2) * ExactMatrix::identity(3));
}

TEST_CASE("killing form vanishes for an abelian algebra") {
  LieAlgebraData g(4, 1);
  CHECK_NOTHROW(g.validate());
  CHECK(g.killing_form().is_zero());
}

TEST_CASE("killing form of a direct sum is block diagonal") {
  LieAlgebraData g(6, 1);
  // two commuting so(3) blocks
  g.set_bracket(0, 1, basis_vec(6, 2));
  g.set_bracket(1, 2, basis_vec(6, 0));
  g.set_bracket(2, 0, basis_vec(6, 1));
  g.set_bracket(3, 4, basis_vec(6, 5));
  g.set_bracket(4, 5, basis_vec(6, 3));
  g.set_bracket(5, 3, basis_vec(6, 4));
  CHECK_NOTHROW(g.validate());
  ExactMatrix k = g.killing_form();
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      if (i == j)
        CHECK(k.at(i, j) == Scalar(-2));
      else
        CHECK(k.at(i, j).is_zero());
    }
}

TEST_CASE("brackets may carry irrational coefficients") {
  LieAlgebraData g(3, 2);
  Scalar r2 = Scalar::sqrt_of(2);
  Vec v(3);
  v[2] = r2;
  g.set_bracket(0, 1, v);
  CHECK(g.bracket_basis(1, 0)[2] == Scalar() - r2);
  CHECK_NOTHROW(g.validate());  // nilpotent: single nonzero bracket
  Vec w = g.bracket(basis_vec(3, 0), basis_vec(3, 1));
  CHECK(w[2] == r2);
}
