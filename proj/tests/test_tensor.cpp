#include "doctest.h"
#include "homjet/rng.hpp"
#include "homjet/tensor.hpp"

using namespace homjet;

namespace {

CovariantTensor random_tensor(DetRng& rng, int dim, int valence) {
  CovariantTensor t(dim, valence);
  for (size_t i = 0; i < t.size(); ++i) t.flat(i) = Scalar(rng.rational());
  return t;
}

ExactMatrix random_skew_adjoint(DetRng& rng, const ExactMatrix& g) {
  int n = g.rows();
  ExactMatrix s(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      s.at(i, j) = Scalar(rng.rational());
      s.at(j, i) = -s.at(i, j);
    }
  return inverse(g) * s;
}

const ExactMatrix g_pd{{Scalar(2), Scalar(1), Scalar(0)},
                       {Scalar(1), Scalar(2), Scalar(0)},
                       {Scalar(0), Scalar(0), Scalar(1)}};

} // namespace

TEST_CASE("so_action on a covector matches the hand value") {
  // a = delta_12 - delta_21 sends dual(e1) to -dual(e2)
  ExactMatrix a(3, 3);
  a.at(0, 1) = Scalar(1);
  a.at(1, 0) = Scalar(-1);
  CovariantTensor t(3, 1);
  t.at({0}) = Scalar(1);
  CovariantTensor r = so_action(a, t);
  CHECK(r.at({0}) == Scalar(0));
  CHECK(r.at({1}) == Scalar(-1));
  CHECK(r.at({2}) == Scalar(0));
}

TEST_CASE("symmetrize is an idempotent projection") {
  DetRng rng(11);
  CovariantTensor t = random_tensor(rng, 3, 4);
  std::vector<int> slots{0, 1, 3};
  CovariantTensor s = symmetrize(t, slots);
  CHECK(is_symmetric_in(s, slots));
  CHECK(symmetrize(s, slots) == s);
  CHECK(!(s == t));
}

TEST_CASE("so_action is a derivation for tensor products") {
  DetRng rng(12);
  ExactMatrix a = random_skew_adjoint(rng, ExactMatrix::identity(3));
  CovariantTensor t = random_tensor(rng, 3, 1);
  CovariantTensor s = random_tensor(rng, 3, 2);
  CovariantTensor lhs = so_action(a, tensor_product(t, s));
  CovariantTensor rhs = tensor_product(so_action(a, t), s) + tensor_product(t, so_action(a, s));
  CHECK(lhs == rhs);
}

TEST_CASE("so_action is linear and respects commutators") {
  DetRng rng(13);
  ExactMatrix a = random_skew_adjoint(rng, g_pd);
  ExactMatrix b = random_skew_adjoint(rng, g_pd);
  CovariantTensor t = random_tensor(rng, 3, 3);
  CHECK(so_action(a + b, t) == so_action(a, t) + so_action(b, t));
  CovariantTensor lhs = so_action(commutator(a, b), t);
  CovariantTensor rhs = so_action(a, so_action(b, t)) - so_action(b, so_action(a, t));
  CHECK(lhs == rhs);
}

TEST_CASE("skew-adjoint endomorphisms annihilate the metric") {
  DetRng rng(14);
  ExactMatrix a = random_skew_adjoint(rng, g_pd);
  REQUIRE(is_skew_adjoint(a, g_pd));
  CHECK(so_action(a, metric_as_tensor(g_pd)).is_zero());
  ExactMatrix not_skew = ExactMatrix::identity(3);
  CHECK(!is_skew_adjoint(not_skew, g_pd));
  CHECK(!so_action(not_skew, metric_as_tensor(g_pd)).is_zero());
}

TEST_CASE("metric_embed of the unit scalar is the metric") {
  CovariantTensor one(3, 0);
  one.flat(0) = Scalar(1);
  CovariantTensor e = metric_embed(one, g_pd, 0);
  CHECK(e == metric_as_tensor(g_pd));
}

TEST_CASE("metric_embed diagonal normalization") {
  DetRng rng(15);
  const int n = 3, k = 2;
  // symmetric in first k slots, two trailing slots
  CovariantTensor t = symmetrize(random_tensor(rng, n, k + 2), {0, 1});
  CovariantTensor e = metric_embed(t, g_pd, k);
  CHECK(is_symmetric_in(e, {0, 1, 2, 3}));
  for (int trial = 0; trial < 3; ++trial) {
    Vec xi = rng.vector(n), x = rng.vector(n), y = rng.vector(n);
    Scalar xx = eval_tensor(metric_as_tensor(g_pd), {xi, xi});
    Scalar lhs = eval_tensor(e, {xi, xi, xi, xi, x, y});
    Scalar rhs = xx * eval_tensor(t, {xi, xi, x, y});
    CHECK(lhs == rhs);
    // double embed picks up <xi,xi>^2
    CovariantTensor e2 = metric_embed(e, g_pd, k + 2);
    Scalar lhs2 = eval_tensor(e2, {xi, xi, xi, xi, xi, xi, x, y});
    CHECK(lhs2 == xx * xx * eval_tensor(t, {xi, xi, x, y}));
  }
}

TEST_CASE("metric_embed commutes with so_action of skew-adjoint maps") {
  DetRng rng(16);
  const int n = 3, k = 1;
  ExactMatrix a = random_skew_adjoint(rng, g_pd);
  CovariantTensor t = random_tensor(rng, n, k + 2);  // k=1: single sym slot, no constraint
  CHECK(so_action(a, metric_embed(t, g_pd, k)) == metric_embed(so_action(a, t), g_pd, k));
}

TEST_CASE("solve_tensor_combination finds exact coefficients") {
  DetRng rng(17);
  CovariantTensor b0 = random_tensor(rng, 3, 2);
  CovariantTensor b1 = random_tensor(rng, 3, 2);
  CovariantTensor target = Scalar(Rational(2, 3)) * b0 - Scalar(5) * b1;
  auto r = solve_tensor_combination(target, {b0, b1});
  REQUIRE(r.coeffs.has_value());
  CHECK(r.unique);
  CHECK((*r.coeffs)[0] == Scalar(Rational(2, 3)));
  CHECK((*r.coeffs)[1] == Scalar(-5));

  CovariantTensor outside = random_tensor(rng, 3, 2);
  auto r2 = solve_tensor_combination(outside, {b0});
  CHECK(!r2.coeffs.has_value());
}
