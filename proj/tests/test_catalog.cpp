#include "doctest.h"
#include "homjet/catalog.hpp"
#include "homjet/error.hpp"
#include "homjet/jacobi.hpp"
#include "homjet/stabilizer.hpp"

using namespace homjet;

namespace {

Vec basis_vec(int n, int i) {
  Vec v(static_cast<size_t>(n));
  v[size_t(i)] = Scalar(1);
  return v;
}

Scalar sec(const ReductiveSpace& s, int i, int j) {
  int n = s.dim();
  return eval_tensor(s.curvature(),
                     {basis_vec(n, i), basis_vec(n, j), basis_vec(n, j), basis_vec(n, i)});
}

}  // namespace

TEST_CASE("flag space construction") {
  ReductiveSpace s = build_m6();
  CHECK(s.dim() == 6);
  CHECK(s.h_indices().size() == 2);
  CHECK(s.has_zero_u());
  // the E basis is orthonormal for the chosen normal metric
  CHECK(s.metric() == ExactMatrix::identity(6));

  const LieAlgebraData& g = s.algebra();
  CHECK(g.dim() == 8);
  CHECK(g.field_d() == 2);
  // root-space brackets: basis order H1 H2 E1..E6
  CHECK(g.bracket_basis(2, 5) == basis_vec(8, 0));               // [E1,E4] = H1
  CHECK(g.bracket_basis(0, 2) == Scalar(2) * basis_vec(8, 5));   // [H1,E1] = 2 E4
  Scalar inv_sqrt2(Rational(0), Rational(1, 2), 2);
  Vec e12 = g.bracket_basis(2, 3);                               // [E1,E2] = -E3/sqrt(2)
  CHECK(e12 == Scalar(-1) * inv_sqrt2 * basis_vec(8, 4));
}

TEST_CASE("flag space curvature and invariants") {
  ReductiveSpace s = build_m6();
  // normal metric: K(x,y) = 1/4 |[x,y]_m|^2 when the h part vanishes
  Scalar half(Rational(1, 2));
  CHECK(sec(s, 0, 1) == Scalar(Rational(1, 8)));  // [E1,E2] = -E3/sqrt(2), pure m
  // pure h bracket: K(E1,E4) = |H1|^2 in the ambient bi-invariant form = 2
  CHECK(sec(s, 0, 3) == Scalar(2));
  CHECK(s.einstein_factor() == Scalar(Rational(5, 2)));

  StabilizerChain chain = singer_invariant(s);
  CHECK(chain.singer == 1);
  CHECK(chain.levels[0].dim() == 3);
  CHECK(chain.levels[1].dim() == 2);
  CHECK(same_matrix_span(g_k(s, 1), isotropy_image(s)));
}

TEST_CASE("flag space order-4 relation with pinned coefficients") {
  ReductiveSpace s = build_m6();
  auto best = min_relation_order(s, 4);
  REQUIRE(best);
  CHECK(best->first == 4);
  CHECK(best->second.minimal);
  CHECK(best->second.coefficients.at(3) == Scalar(Rational(-5, 8)));
  CHECK(best->second.coefficients.at(1) == Scalar(Rational(-1, 16)));
  CHECK(scale_invariant_signature(best->second, s.algebra().field_d()) == Scalar(4));
}

TEST_CASE("berger space construction and invariants") {
  ReductiveSpace s = build_v1();
  CHECK(s.dim() == 7);
  CHECK(s.h_indices().size() == 3);
  CHECK(s.has_zero_u());
  CHECK(s.algebra().dim() == 10);
  CHECK(s.einstein_factor() == Scalar(Rational(27, 20)));

  StabilizerChain chain = singer_invariant(s);
  CHECK(chain.singer == 0);
  CHECK(chain.levels[0].dim() == 3);
  CHECK(same_matrix_span(g_k(s, 0), isotropy_image(s)));
}

TEST_CASE("berger space order-2 relation") {
  ReductiveSpace s = build_v1();
  auto best = min_relation_order(s, 3);
  REQUIRE(best);
  CHECK(best->first == 2);
  CHECK(best->second.minimal);
  CHECK(best->second.coefficients.at(1) == Scalar(Rational(-1, 10)));
}

TEST_CASE("wilking space at the standard parameter") {
  ReductiveSpace s = build_v3(Scalar(Rational(3, 2)));
  CHECK(s.dim() == 7);
  CHECK(s.h_indices().size() == 4);
  CHECK(s.has_zero_u());
  CHECK(s.algebra().dim() == 11);
  // c = 3/2 is the balanced point: a multiple of the product Killing form
  CHECK(s.einstein_factor() == Scalar(Rational(27, 5)));

  StabilizerChain chain = singer_invariant(s);
  CHECK(chain.singer == 0);
  CHECK(chain.levels[0].dim() == 4);
  CHECK(same_matrix_span(g_k(s, 0), isotropy_image(s)));

  auto best = min_relation_order(s, 3);
  REQUIRE(best);
  CHECK(best->first == 2);
  CHECK(best->second.minimal);
  CHECK(best->second.coefficients.at(1) == Scalar(Rational(-2, 5)));
}

TEST_CASE("wilking space away from the standard parameter") {
  ReductiveSpace s = build_v3(Scalar(1));
  CHECK(s.dim() == 7);
  CHECK(!s.einstein_factor());
  CHECK(!find_relation(s, 2));
  CHECK(singer_invariant(s).singer == 0);
  CHECK_THROWS_AS(build_v3(Scalar(0)), ValidationError);
  CHECK_THROWS_AS(build_v3(Scalar(-1)), ValidationError);
}

TEST_CASE("relation coefficients scale inversely with the metric") {
  ReductiveSpace s = scale_metric(build_v3(Scalar(Rational(3, 2))), Scalar(2));
  auto rel = find_relation(s, 2);
  REQUIRE(rel);
  CHECK(rel->coefficients.at(1) == Scalar(Rational(-1, 5)));
  // stabilizer data is scale invariant
  StabilizerChain chain = singer_invariant(s);
  CHECK(chain.singer == 0);
  CHECK(chain.levels[0].dim() == 4);
}

TEST_CASE("kaplan group construction") {
  ReductiveSpace s = build_kaplan();
  CHECK(s.dim() == 6);
  CHECK(s.h_indices().empty());
  CHECK(!s.has_zero_u());
  CHECK(s.metric() == ExactMatrix::identity(6));

  const LieAlgebraData& g = s.algebra();
  // two-step bracket table from the Clifford action, center = span(e4, e5)
  CHECK(g.bracket_basis(0, 1) == Scalar(-1) * basis_vec(6, 4));
  CHECK(g.bracket_basis(0, 2) == Scalar(-1) * basis_vec(6, 5));
  CHECK(g.bracket_basis(0, 3) == Vec(6));
  CHECK(g.bracket_basis(1, 2) == Vec(6));
  CHECK(g.bracket_basis(1, 3) == Scalar(-1) * basis_vec(6, 5));
  CHECK(g.bracket_basis(2, 3) == basis_vec(6, 4));
  for (int z = 4; z < 6; ++z)
    for (int i = 0; i < 6; ++i) CHECK(g.bracket_basis(z, i) == Vec(6));
}

TEST_CASE("kaplan curvature matches the two-step formulas") {
  ReductiveSpace s = build_kaplan();
  // K(x,y) = -3/4 |[x,y]|^2 for x,y horizontal
  CHECK(sec(s, 0, 1) == Scalar(Rational(-3, 4)));
  CHECK(sec(s, 0, 3) == Scalar(0));
  // K(x,z) = 1/4 |J_z x|^2 for z central
  CHECK(sec(s, 0, 4) == Scalar(Rational(1, 4)));
  // central plane is flat
  CHECK(sec(s, 4, 5) == Scalar(0));
  CHECK(!s.einstein_factor());
}

TEST_CASE("kaplan stabilizer chain and absent relation") {
  ReductiveSpace s = build_kaplan();
  StabilizerChain chain = singer_invariant(s);
  CHECK(chain.singer == 1);
  CHECK(chain.levels[0].dim() == 5);
  CHECK(chain.levels[1].dim() == 4);

  // the jets need the central-projection form, which no metric power spans
  CHECK(!min_relation_order(s, 3));
}

TEST_CASE("catalog listing") {
  const std::vector<CatalogEntry>& list = catalog_list();
  CHECK(list.size() == 6);
  bool seen_v3 = false;
  for (const CatalogEntry& e : list) {
    CHECK(!e.id.empty());
    CHECK(!e.description.empty());
    if (e.id == "v3") {
      seen_v3 = true;
      CHECK(e.parameter == "c=3/2");
      CHECK(e.expected.singer == 0);
      CHECK(e.expected.relation_order == 2);
    }
    if (e.id == "kaplan-n6") CHECK(e.expected.relation_order == -1);
  }
  CHECK(seen_v3);
}

TEST_CASE("build by identifier") {
  CHECK(build_by_id("m6", std::nullopt).dim() == 6);
  CHECK(build_by_id("flat-torus-5", std::nullopt).dim() == 5);
  CHECK(build_by_id("bi-invariant-su2", std::nullopt).dim() == 3);
  CHECK(build_by_id("v3", Scalar(Rational(3, 2))).einstein_factor().has_value());

  CHECK_THROWS_AS(build_by_id("flat-torus-", std::nullopt), ValidationError);
  CHECK_THROWS_AS(build_by_id("flat-torus-1", std::nullopt), ValidationError);
  CHECK_THROWS_AS(build_by_id("flat-torus-99999", std::nullopt), ValidationError);
  CHECK_THROWS_AS(build_by_id("nope", std::nullopt), ValidationError);
  // the parameter belongs to v3 alone
  CHECK_THROWS_AS(build_by_id("m6", Scalar(1)), ValidationError);
}

TEST_CASE("metric scaling guards and covariance") {
  ReductiveSpace torus = build_flat_torus(3);
  CHECK_THROWS_AS(scale_metric(torus, Scalar(0)), ValidationError);
  CHECK_THROWS_AS(scale_metric(torus, Scalar(-2)), ValidationError);
  ReductiveSpace doubled = scale_metric(torus, Scalar(2));
  CHECK(doubled.metric() == Scalar(2) * ExactMatrix::identity(3));
  CHECK_THROWS_AS(build_flat_torus(1), ValidationError);
}
