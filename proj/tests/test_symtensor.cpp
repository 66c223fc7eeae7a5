#include <algorithm>

#include "doctest.h"
#include "homjet/rng.hpp"
#include "homjet/symtensor.hpp"

using namespace homjet;

namespace {

SymPairTensor random_sym(DetRng& rng, int dim, int a) {
  SymPairTensor t(dim, a);
  for (size_t i = 0; i < t.size(); ++i) t.flat(i) = Scalar(rng.rational());
  return t;
}

ExactMatrix random_matrix(DetRng& rng, int n) {
  ExactMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = Scalar(rng.rational());
  return a;
}

}  // namespace

TEST_CASE("multiset ranking is a lexicographic bijection") {
  const int n = 4, k = 3;
  size_t count = multiset_count(n, k);
  CHECK(count == 20);  // C(6,3)
  std::vector<int> prev;
  for (size_t r = 0; r < count; ++r) {
    std::vector<int> m = multiset_unrank(r, k, n);
    CHECK(std::is_sorted(m.begin(), m.end()));
    CHECK(multiset_rank(m, n) == r);
    if (r > 0) CHECK(std::lexicographical_compare(prev.begin(), prev.end(), m.begin(), m.end()));
    prev = m;
  }
  CHECK(multiset_orderings({0, 0, 1}) == Rational(3));
  CHECK(multiset_orderings({0, 1, 2}) == Rational(6));
  CHECK(multiset_orderings({2, 2, 2}) == Rational(1));
}

TEST_CASE("compressed round trip through the dense form") {
  DetRng rng(21);
  SymPairTensor t = random_sym(rng, 3, 2);
  CovariantTensor d = sym_to_dense(t);
  CHECK(is_symmetric_in(d, {0, 1}));
  CHECK(is_symmetric_in(d, {2, 3}));
  CHECK(sym_from_dense(d, 2) == t);
}

TEST_CASE("so_action agrees with the dense action") {
  DetRng rng(22);
  const int n = 3, a = 3;
  SymPairTensor t = random_sym(rng, n, a);
  ExactMatrix mat = random_matrix(rng, n);
  SymPairTensor lhs = so_action_sym(mat, t);
  SymPairTensor rhs = sym_from_dense(so_action(mat, sym_to_dense(t)), a);
  CHECK(lhs == rhs);
}

TEST_CASE("derivative step matches building the dense slot and symmetrizing") {
  DetRng rng(23);
  const int n = 3, a = 2;
  SymPairTensor t = random_sym(rng, n, a);
  std::vector<ExactMatrix> alphas;
  for (int m = 0; m < n; ++m) alphas.push_back(random_matrix(rng, n));

  CovariantTensor td = sym_to_dense(t);
  CovariantTensor u(n, a + 3);
  size_t block = td.size();
  for (int m = 0; m < n; ++m) {
    CovariantTensor pm = so_action(alphas[size_t(m)], td);
    for (size_t r = 0; r < block; ++r) u.flat(size_t(m) * block + r) = pm.flat(r);
  }
  std::vector<int> lead(size_t(a) + 1);
  for (int i = 0; i <= a; ++i) lead[size_t(i)] = i;
  CovariantTensor s = symmetrize(u, lead);

  CHECK(sym_derivative(t, alphas) == sym_from_dense(s, a + 1));
}

TEST_CASE("metric embedding agrees with the dense embedding") {
  DetRng rng(24);
  const int n = 3, a = 2;
  SymPairTensor t = random_sym(rng, n, a);
  ExactMatrix g{{Scalar(2), Scalar(1), Scalar(0)},
                {Scalar(1), Scalar(2), Scalar(0)},
                {Scalar(0), Scalar(0), Scalar(1)}};
  SymPairTensor lhs = embed_sym(t, g);
  SymPairTensor rhs = sym_from_dense(metric_embed(sym_to_dense(t), g, a), a + 2);
  CHECK(lhs == rhs);

  for (int trial = 0; trial < 3; ++trial) {
    Vec xi = rng.vector(n), x = rng.vector(n), y = rng.vector(n);
    Scalar xx;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) xx += xi[size_t(i)] * g.at(i, j) * xi[size_t(j)];
    CHECK(eval_sym(lhs, xi, x, y) == xx * eval_sym(t, xi, x, y));
  }
}

TEST_CASE("diagonal form matches full dense evaluation") {
  DetRng rng(25);
  const int n = 3, a = 3;
  SymPairTensor t = random_sym(rng, n, a);
  CovariantTensor d = sym_to_dense(t);
  for (int trial = 0; trial < 3; ++trial) {
    Vec xi = rng.vector(n), x = rng.vector(n), y = rng.vector(n);
    ExactMatrix j = diagonal_form(t, xi);
    CHECK(j.is_symmetric());
    Scalar direct = eval_tensor(d, {xi, xi, xi, x, y});
    CHECK(eval_sym(t, xi, x, y) == direct);
    Scalar via_matrix;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) via_matrix += x[size_t(u)] * j.at(u, v) * y[size_t(v)];
    CHECK(via_matrix == direct);
  }
}

TEST_CASE("linear operations on compressed tensors") {
  DetRng rng(26);
  SymPairTensor t = random_sym(rng, 3, 2);
  SymPairTensor s = random_sym(rng, 3, 2);
  CHECK(sym_to_dense(t + s) == sym_to_dense(t) + sym_to_dense(s));
  CHECK((t - t).is_zero());
  CHECK(sym_to_dense(Scalar(3) * t) == Scalar(3) * sym_to_dense(t));
  Vec f = t.flatten();
  CHECK(f.size() == t.size());
  CHECK(f[0] == t.flat(0));
}
