#include "homjet/catalog.hpp"

#include <cstdlib>

#include "homjet/error.hpp"
#include "homjet/lie.hpp"

namespace homjet {

namespace {

// Complex matrices as real/imaginary pairs; enough arithmetic to take
// commutators of explicit algebra models.
struct Cx {
  ExactMatrix re, im;
  explicit Cx(int n) : re(n, n), im(n, n) {}
};

Cx cx_mul(const Cx& x, const Cx& y) {
  Cx out(x.re.rows());
  out.re = x.re * y.re - x.im * y.im;
  out.im = x.re * y.im + x.im * y.re;
  return out;
}

Cx cx_commutator(const Cx& x, const Cx& y) {
  Cx a = cx_mul(x, y);
  Cx b = cx_mul(y, x);
  Cx out(x.re.rows());
  out.re = a.re - b.re;
  out.im = a.im - b.im;
  return out;
}

Vec flatten_mat(const ExactMatrix& m) {
  Vec v;
  v.reserve(size_t(m.rows()) * size_t(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

Vec cx_flatten(const Cx& x) {
  Vec v = flatten_mat(x.re);
  Vec w = flatten_mat(x.im);
  v.insert(v.end(), w.begin(), w.end());
  return v;
}

// -Re tr(xy): the invariant inner product on anti-Hermitian matrices.
Scalar neg_trace_product(const Cx& x, const Cx& y) {
  int n = x.re.rows();
  Scalar t;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      t += x.re.at(i, k) * y.re.at(k, i) - x.im.at(i, k) * y.im.at(k, i);
  return -t;
}

ExactMatrix basis_columns(const std::vector<Vec>& flats) {
  ExactMatrix b(int(flats[0].size()), int(flats.size()));
  for (size_t j = 0; j < flats.size(); ++j) b.set_col(int(j), flats[j]);
  return b;
}

Vec expand_in(const ExactMatrix& basis_cols, const Vec& target) {
  LinearSolve ls = solve_linear(basis_cols, target);
  check_internal(ls.unique(), "expansion in matrix basis is not unique");
  return *ls.solution;
}

// Structure constants of an independent list of matrices closed under the
// commutator.
LieAlgebraData algebra_from_matrices(const std::vector<Cx>& basis, unsigned long d) {
  std::vector<Vec> flats;
  for (const Cx& b : basis) flats.push_back(cx_flatten(b));
  ExactMatrix cols = basis_columns(flats);
  int n = int(basis.size());
  LieAlgebraData g(n, d);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      g.set_bracket(i, j, expand_in(cols, cx_flatten(cx_commutator(basis[i], basis[j]))));
  g.validate();
  return g;
}

// Rewrites structure constants in the basis given by the listed coordinate
// vectors.
LieAlgebraData change_basis(const LieAlgebraData& g, const std::vector<Vec>& new_basis) {
  int n = g.dim();
  check_internal(int(new_basis.size()) == n, "adapted basis has wrong size");
  ExactMatrix cols = basis_columns(new_basis);
  LieAlgebraData out(n, g.field_d());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      out.set_bracket(
          i, j, expand_in(cols, g.bracket(new_basis[size_t(i)], new_basis[size_t(j)])));
  out.validate();
  return out;
}

ExactMatrix pull_back_form(const ExactMatrix& q, const std::vector<Vec>& basis) {
  int n = int(basis.size());
  ExactMatrix out(n, n);
  for (int i = 0; i < n; ++i) {
    Vec qx = q.apply(basis[size_t(i)]);
    for (int j = 0; j < n; ++j) {
      Scalar s;
      for (size_t a = 0; a < qx.size(); ++a)
        if (!qx[a].is_zero()) s += qx[a] * basis[size_t(j)][a];
      out.at(i, j) = s;
    }
  }
  return out;
}

// Builds the reductive space whose isotropy is spanned by h_coords and whose
// complement is the orthocomplement under the ad-invariant form.
ReductiveSpace adapted_space(const LieAlgebraData& ambient, const std::vector<Vec>& h_coords,
                             const ExactMatrix& invariant_form) {
  ExactMatrix rows(int(h_coords.size()), ambient.dim());
  for (size_t i = 0; i < h_coords.size(); ++i) rows.set_row(int(i), invariant_form.apply(h_coords[i]));
  std::vector<Vec> basis = h_coords;
  for (Vec& v : kernel(rows)) basis.push_back(std::move(v));
  check_internal(int(basis.size()) == ambient.dim(), "adapted basis does not span");

  LieAlgebraData adapted = change_basis(ambient, basis);
  ExactMatrix gram = pull_back_form(invariant_form, basis);
  int hn = int(h_coords.size());
  int mn = ambient.dim() - hn;
  ExactMatrix metric(mn, mn);
  for (int i = 0; i < mn; ++i)
    for (int j = 0; j < mn; ++j) metric.at(i, j) = gram.at(hn + i, hn + j);
  std::vector<int> h_idx, m_idx;
  for (int i = 0; i < hn; ++i) h_idx.push_back(i);
  for (int i = 0; i < mn; ++i) m_idx.push_back(hn + i);
  return ReductiveSpace::create(adapted, h_idx, m_idx, metric);
}

// Quaternion product on the basis 1, i, j, k.
struct QTerm {
  int sign;
  int idx;
};

QTerm quat_mul(int a, int b) {
  static const int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  return {sgn[a][b], idx[a][b]};
}

}  // namespace

ReductiveSpace build_m6() {
  const Scalar r(Rational(0), Rational(1, 2), 2);  // 1/sqrt(2)
  std::vector<Cx> b(8, Cx(3));
  // diagonal torus
  b[0].im.at(0, 0) = Scalar(1);
  b[0].im.at(1, 1) = Scalar(-1);
  b[1].im.at(1, 1) = Scalar(1);
  b[1].im.at(2, 2) = Scalar(-1);
  // root directions, orthonormal under -tr
  b[2].re.at(0, 1) = r;
  b[2].re.at(1, 0) = -r;
  b[3].re.at(0, 2) = r;
  b[3].re.at(2, 0) = -r;
  b[4].re.at(1, 2) = r;
  b[4].re.at(2, 1) = -r;
  b[5].im.at(0, 1) = r;
  b[5].im.at(1, 0) = r;
  b[6].im.at(0, 2) = -r;
  b[6].im.at(2, 0) = -r;
  b[7].im.at(1, 2) = r;
  b[7].im.at(2, 1) = r;
  LieAlgebraData su3 = algebra_from_matrices(b, 2);
  ExactMatrix metric(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) metric.at(i, j) = neg_trace_product(b[size_t(2 + i)], b[size_t(2 + j)]);
  return ReductiveSpace::create(su3, {0, 1}, {2, 3, 4, 5, 6, 7}, metric);
}

ReductiveSpace build_v1() {
  // traceless symmetric 3x3 model space for the irreducible so(3) action
  std::vector<ExactMatrix> s(5, ExactMatrix(3, 3));
  s[0].at(0, 0) = Scalar(1);
  s[0].at(1, 1) = Scalar(-1);
  s[1].at(0, 0) = Scalar(1);
  s[1].at(1, 1) = Scalar(1);
  s[1].at(2, 2) = Scalar(-2);
  s[2].at(0, 1) = Scalar(1);
  s[2].at(1, 0) = Scalar(1);
  s[3].at(0, 2) = Scalar(1);
  s[3].at(2, 0) = Scalar(1);
  s[4].at(1, 2) = Scalar(1);
  s[4].at(2, 1) = Scalar(1);

  ExactMatrix q(5, 5);  // Gram of tr(XY) on the model space
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      ExactMatrix p = s[size_t(i)] * s[size_t(j)];
      Scalar t;
      for (int a = 0; a < 3; ++a) t += p.at(a, a);
      q.at(i, j) = t;
    }
  ExactMatrix qinv = inverse(q);

  std::vector<Cx> basis;  // skew endomorphisms of the model space
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      ExactMatrix e(5, 5);
      e.at(i, j) = Scalar(1);
      e.at(j, i) = Scalar(-1);
      Cx a(5);
      a.re = qinv * e;
      basis.push_back(std::move(a));
    }
  LieAlgebraData so5 = algebra_from_matrices(basis, 1);

  ExactMatrix form(10, 10);
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j)
      form.at(i, j) = neg_trace_product(basis[size_t(i)], basis[size_t(j)]);

  // irreducible so(3): commutator action on the model space
  std::vector<Vec> s_flats;
  for (const ExactMatrix& m : s) s_flats.push_back(flatten_mat(m));
  ExactMatrix s_cols = basis_columns(s_flats);
  std::vector<Vec> b_flats;
  for (const Cx& m : basis) b_flats.push_back(cx_flatten(m));
  ExactMatrix b_cols = basis_columns(b_flats);

  const int rot[3][2] = {{1, 2}, {2, 0}, {0, 1}};
  std::vector<Vec> h_coords;
  for (int k = 0; k < 3; ++k) {
    ExactMatrix l(3, 3);
    l.at(rot[k][1], rot[k][0]) = Scalar(1);
    l.at(rot[k][0], rot[k][1]) = Scalar(-1);
    Cx rho(5);
    for (int col = 0; col < 5; ++col)
      rho.re.set_col(col, expand_in(s_cols, flatten_mat(commutator(l, s[size_t(col)]))));
    h_coords.push_back(expand_in(b_cols, cx_flatten(rho)));
  }
  return adapted_space(so5, h_coords, form);
}

ReductiveSpace build_v3(const Scalar& c) {
  if (!(c > Scalar(0))) throw ValidationError("wilking parameter c must be positive");

  // ambient so(3) + su(3) as block-diagonal 6x6 matrices
  std::vector<Cx> basis(11, Cx(6));
  const int rot[3][2] = {{1, 2}, {2, 0}, {0, 1}};
  for (int k = 0; k < 3; ++k) {
    basis[size_t(k)].re.at(rot[k][1], rot[k][0]) = Scalar(1);
    basis[size_t(k)].re.at(rot[k][0], rot[k][1]) = Scalar(-1);
  }
  const int off = 3;
  const int pair[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (int p = 0; p < 3; ++p) {
    Cx& re = basis[size_t(3 + 2 * p)];
    re.re.at(off + pair[p][0], off + pair[p][1]) = Scalar(1);
    re.re.at(off + pair[p][1], off + pair[p][0]) = Scalar(-1);
    Cx& im = basis[size_t(4 + 2 * p)];
    im.im.at(off + pair[p][0], off + pair[p][1]) = Scalar(1);
    im.im.at(off + pair[p][1], off + pair[p][0]) = Scalar(1);
  }
  basis[9].im.at(off + 0, off + 0) = Scalar(1);
  basis[9].im.at(off + 1, off + 1) = Scalar(-1);
  basis[10].im.at(off + 0, off + 0) = Scalar(1);
  basis[10].im.at(off + 1, off + 1) = Scalar(1);
  basis[10].im.at(off + 2, off + 2) = Scalar(-2);

  LieAlgebraData ambient = algebra_from_matrices(basis, 1);

  // metric from the factor Killing forms, normalized so that c = 3/2 gives a
  // multiple of the bi-invariant form of the product (the standard metric,
  // which is Einstein and carries the order-2 relation): the su(3) block is
  // -K/12 = -tr/2, and the so(3) block carries c/18 so the labels match the
  // convention where the su(2) sitting inside su(3) has 3/2 times the Killing
  // form of the so(3) factor
  ExactMatrix killing = ambient.killing_form();
  ExactMatrix form(11, 11);
  const Scalar so3_scale = -c / Scalar(18);
  const Scalar su3_scale = Scalar(Rational(-1, 12));
  for (int i = 0; i < 11; ++i)
    for (int j = 0; j < 11; ++j) {
      bool a = i < 3, b = j < 3;
      if (a != b)
        check_internal(killing.at(i, j).is_zero(), "killing form mixes the factors");
      else
        form.at(i, j) = (a ? so3_scale : su3_scale) * killing.at(i, j);
    }

  // u(2) embedded by the adjoint action on su(2) and the determinant-corrected
  // inclusion into su(3)
  std::vector<Cx> u2(4, Cx(2));
  u2[0].im.at(0, 0) = Scalar(1);
  u2[0].im.at(1, 1) = Scalar(-1);
  u2[1].re.at(0, 1) = Scalar(1);
  u2[1].re.at(1, 0) = Scalar(-1);
  u2[2].im.at(0, 1) = Scalar(1);
  u2[2].im.at(1, 0) = Scalar(1);
  u2[3].im.at(0, 0) = Scalar(1);
  u2[3].im.at(1, 1) = Scalar(1);

  std::vector<Vec> su2_flats = {cx_flatten(u2[0]), cx_flatten(u2[1]), cx_flatten(u2[2])};
  ExactMatrix su2_cols = basis_columns(su2_flats);
  std::vector<Vec> amb_flats;
  for (const Cx& m : basis) amb_flats.push_back(cx_flatten(m));
  ExactMatrix amb_cols = basis_columns(amb_flats);

  std::vector<Vec> h_coords;
  for (int k = 0; k < 4; ++k) {
    Cx block(6);
    for (int col = 0; col < 3; ++col) {
      Vec ad = expand_in(su2_cols, cx_flatten(cx_commutator(u2[size_t(k)], u2[size_t(col)])));
      for (int row = 0; row < 3; ++row) block.re.at(row, col) = ad[size_t(row)];
    }
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        block.re.at(off + a, off + b) = u2[size_t(k)].re.at(a, b);
        block.im.at(off + a, off + b) = u2[size_t(k)].im.at(a, b);
      }
    block.re.at(5, 5) = -(u2[size_t(k)].re.at(0, 0) + u2[size_t(k)].re.at(1, 1));
    block.im.at(5, 5) = -(u2[size_t(k)].im.at(0, 0) + u2[size_t(k)].im.at(1, 1));
    h_coords.push_back(expand_in(amb_cols, cx_flatten(block)));
  }
  return adapted_space(ambient, h_coords, form);
}

ReductiveSpace build_kaplan() {
  // two-step bracket on quaternions plus center, from the Clifford action
  // c . a = a * c^{-1}: <[a,b], c> = <a * c^{-1}, b> = -<a * c, b>
  LieAlgebraData g(6, 1);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      Vec v(static_cast<size_t>(6));
      for (int c = 1; c <= 2; ++c) {
        QTerm t = quat_mul(a, c);
        if (t.idx == b) v[size_t(3 + c)] = Scalar(-t.sign);
      }
      g.set_bracket(a, b, v);
    }
  g.validate();
  return ReductiveSpace::create(g, {}, {0, 1, 2, 3, 4, 5}, ExactMatrix::identity(6));
}

ReductiveSpace build_flat_torus(int n) {
  if (n < 2) throw ValidationError("flat torus needs dimension >= 2");
  LieAlgebraData g(n, 1);
  std::vector<int> m;
  for (int i = 0; i < n; ++i) m.push_back(i);
  return ReductiveSpace::create(g, {}, m, ExactMatrix::identity(n));
}

ReductiveSpace build_biinvariant_su2() {
  LieAlgebraData g(3, 1);
  Vec e0(static_cast<size_t>(3)), e1(static_cast<size_t>(3)), e2(static_cast<size_t>(3));
  e0[0] = Scalar(1);
  e1[1] = Scalar(1);
  e2[2] = Scalar(1);
  g.set_bracket(0, 1, e2);
  g.set_bracket(1, 2, e0);
  g.set_bracket(2, 0, e1);
  return ReductiveSpace::create(g, {}, {0, 1, 2}, ExactMatrix::identity(3));
}

const std::vector<CatalogEntry>& catalog_list() {
  static const std::vector<CatalogEntry> entries = {
      {"m6", "flag space SU(3)/T^2, normal metric with orthonormal root basis", "6", "",
       {1, {3, 2, 2}, 4}},
      {"v1", "Berger space SO(5)/SO(3), irreducible embedding, normal trace metric", "7", "",
       {0, {3, 3}, 2}},
      {"v3", "Wilking space (SO(3)xSU(3))/U(2), scaled product Killing metric", "7", "c=3/2",
       {0, {4, 4}, 2}},
      {"kaplan-n6", "Kaplan H-type nilpotent group, quaternions with 2-dim center", "6", "",
       {1, {5, 4, 4}, -1}},
      {"flat-torus-n", "abelian group with identity metric", "n", "n>=2", {0, {}, 0}},
      {"bi-invariant-su2", "SU(2) with the bi-invariant round metric", "3", "", {0, {3, 3}, 0}},
  };
  return entries;
}

ReductiveSpace build_by_id(const std::string& id, const std::optional<Scalar>& wilking_c) {
  if (wilking_c && id != "v3")
    throw ValidationError("parameter c only applies to v3, not '" + id + "'");
  if (wilking_c && id != "v3") throw ValidationError("parameter c only applies to v3");
  if (id == "m6") return build_m6();
  if (id == "v1") return build_v1();
  if (id == "v3") return build_v3(wilking_c ? *wilking_c : Scalar(Rational(3, 2)));
  if (id == "kaplan-n6") return build_kaplan();
  if (id == "bi-invariant-su2") return build_biinvariant_su2();
  const std::string prefix = "flat-torus-";
  if (id.size() > prefix.size() && id.compare(0, prefix.size(), prefix) == 0) {
    std::string tail = id.substr(prefix.size());
    if (tail.size() <= 4 && tail.find_first_not_of("0123456789") == std::string::npos)
      return build_flat_torus(std::atoi(tail.c_str()));
  }
  throw ValidationError("unknown space id '" + id +
                        "' (try m6, v1, v3, kaplan-n6, bi-invariant-su2, flat-torus-<n>)");
}

ReductiveSpace scale_metric(const ReductiveSpace& s, const Scalar& lambda) {
  if (!(lambda > Scalar(0))) throw ValidationError("metric scale must be positive");
  return ReductiveSpace::create(s.algebra(), s.h_indices(), s.m_indices(), lambda * s.metric());
}

}  // namespace homjet
