#include "doctest.h"
#include "homjet/error.hpp"
#include "homjet/stabilizer.hpp"

using namespace homjet;

namespace {

Vec basis_vec(int n, int i) {
  Vec v(static_cast<size_t>(n));
  v[size_t(i)] = Scalar(1);
  return v;
}

LieAlgebraData so3() {
  LieAlgebraData g(3, 1);
  g.set_bracket(0, 1, basis_vec(3, 2));
  g.set_bracket(1, 2, basis_vec(3, 0));
  g.set_bracket(2, 0, basis_vec(3, 1));
  return g;
}

ReductiveSpace flat_torus(int n) {
  LieAlgebraData g(n, 1);
  std::vector<int> m;
  for (int i = 0; i < n; ++i) m.push_back(i);
  return ReductiveSpace::create(g, {}, m, ExactMatrix::identity(n));
}

ReductiveSpace round_sphere2() {
  return ReductiveSpace::create(so3(), {2}, {0, 1}, ExactMatrix::identity(2));
}

ReductiveSpace biinvariant_su2() {
  return ReductiveSpace::create(so3(), {}, {0, 1, 2}, ExactMatrix::identity(3));
}

ReductiveSpace berger(long stretch) {
  ExactMatrix g = ExactMatrix::identity(3);
  g.at(0, 0) = Scalar(stretch);
  return ReductiveSpace::create(so3(), {}, {0, 1, 2}, g);
}

Vec flatten_matrix(const ExactMatrix& m) {
  Vec v;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

int span_rank(const std::vector<ExactMatrix>& ms) {
  std::vector<Vec> rows;
  for (const ExactMatrix& m : ms) rows.push_back(flatten_matrix(m));
  return rank_of_vectors(rows);
}

}  // namespace

TEST_CASE("metric skew endomorphisms: count and independence") {
  CHECK(so_basis(ExactMatrix::identity(2)).size() == 1);
  CHECK(so_basis(ExactMatrix::identity(6)).size() == 15);
  CHECK(so_basis(ExactMatrix::identity(7)).size() == 21);

  ExactMatrix g(2, 2);  // non-diagonal positive definite metric
  g.at(0, 0) = Scalar(2);
  g.at(0, 1) = Scalar(1);
  g.at(1, 0) = Scalar(1);
  g.at(1, 1) = Scalar(3);
  std::vector<ExactMatrix> b = so_basis(g);
  REQUIRE(b.size() == 1);
  CHECK(is_skew_adjoint(b[0], g));

  std::vector<ExactMatrix> b6 = so_basis(ExactMatrix::identity(6));
  CHECK(span_rank(b6) == 15);
}

TEST_CASE("matrix span membership helpers") {
  ExactMatrix a = ExactMatrix::identity(2);
  ExactMatrix b(2, 2);
  b.at(0, 1) = Scalar(1);
  ExactMatrix c = Scalar(3) * a + Scalar(-2) * b;
  CHECK(matrix_in_span({a, b}, c));
  ExactMatrix d(2, 2);
  d.at(1, 0) = Scalar(1);
  CHECK_FALSE(matrix_in_span({a, b}, d));
  CHECK(matrix_in_span({a, b}, ExactMatrix(2, 2)));  // zero matrix
  CHECK(same_matrix_span({a, b}, {c, b}));
  CHECK_FALSE(same_matrix_span({a, b}, {a, d}));
}

TEST_CASE("flat torus: every jet stabilizer is the full skew algebra") {
  ReductiveSpace s = flat_torus(4);
  std::vector<ExactMatrix> g0 = g_k(s, 0);
  CHECK(g0.size() == 6);
  CHECK(same_matrix_span(g0, so_basis(s.metric())));
  CHECK(same_matrix_span(g_k(s, 2), g0));

  StabilizerChain chain = singer_invariant(s);
  CHECK(chain.singer == 0);
  REQUIRE(chain.levels.size() == 3);  // orders 0, 1, 2
  for (size_t i = 0; i < chain.levels.size(); ++i) {
    CHECK(chain.levels[i].order == int(i));
    CHECK(chain.levels[i].dim() == 6);
  }
}

TEST_CASE("bi-invariant su(2): constant curvature keeps all of so(3)") {
  ReductiveSpace s = biinvariant_su2();
  std::vector<ExactMatrix> g0 = g_k(s, 0);
  CHECK(g0.size() == 3);
  CHECK(same_matrix_span(g0, so_basis(s.metric())));
  StabilizerChain chain = singer_invariant(s);
  CHECK(chain.singer == 0);
  CHECK(chain.levels.back().dim() == 3);
}

TEST_CASE("round two-sphere: stabilizer equals the isotropy image") {
  ReductiveSpace s = round_sphere2();
  std::vector<ExactMatrix> g0 = g_k(s, 0);
  REQUIRE(g0.size() == 1);
  std::vector<ExactMatrix> iso = isotropy_image(s);
  REQUIRE(iso.size() == 1);
  CHECK(same_matrix_span(g0, iso));
  CHECK(singer_invariant(s).singer == 0);
}

TEST_CASE("berger metric: stabilizer is the rotation fixing the stretched axis") {
  ReductiveSpace s = berger(4);
  std::vector<ExactMatrix> g0 = g_k(s, 0);
  REQUIRE(g0.size() == 1);

  // ad(e0) preserves the metric and all brackets, so it must survive every level
  ExactMatrix rot(3, 3);
  rot.at(2, 1) = Scalar(1);
  rot.at(1, 2) = Scalar(-1);
  CHECK(matrix_in_span(g0, rot));

  StabilizerChain chain = singer_invariant(s);
  CHECK(chain.singer == 0);
  for (const StabilizerChain::Level& lvl : chain.levels) {
    CHECK(lvl.dim() == 1);
    CHECK(matrix_in_span(lvl.basis, rot));
  }
}

TEST_CASE("stabilizer dimensions never grow along the chain") {
  for (const ReductiveSpace& s : {berger(4), round_sphere2(), flat_torus(3)}) {
    StabilizerChain chain = singer_invariant(s);
    for (size_t i = 1; i < chain.levels.size(); ++i)
      CHECK(chain.levels[i].dim() <= chain.levels[i - 1].dim());
    CHECK(chain.levels.back().dim() ==
          chain.levels[size_t(chain.singer)].dim());
  }
}

TEST_CASE("jet stabilizers are closed under the matrix bracket") {
  ReductiveSpace s = flat_torus(4);
  std::vector<ExactMatrix> g0 = g_k(s, 0);  // all of so(4)
  for (const ExactMatrix& a : g0)
    for (const ExactMatrix& b : g0) CHECK(matrix_in_span(g0, commutator(a, b)));

  std::vector<ExactMatrix> gb = g_k(berger(4), 1);
  for (const ExactMatrix& a : gb)
    for (const ExactMatrix& b : gb) CHECK(matrix_in_span(gb, commutator(a, b)));
}

TEST_CASE("symmetrized jets determine the same stabilizers") {
  for (const ReductiveSpace& s : {berger(4), round_sphere2(), biinvariant_su2(), flat_torus(3)}) {
    for (int k = 0; k <= 1; ++k) CHECK(same_matrix_span(g_k(s, k), g_k_symmetrized(s, k)));
  }
}
