#include "homjet/homogeneous.hpp"

#include <algorithm>
#include <string>

#include "homjet/error.hpp"

namespace homjet {

namespace {

Vec lift(const std::vector<int>& idx, const Vec& x, int full_dim) {
  Vec out(static_cast<size_t>(full_dim));
  for (size_t i = 0; i < idx.size(); ++i) out[size_t(idx[i])] = x[i];
  return out;
}

Vec restrict_to(const std::vector<int>& idx, const Vec& full) {
  Vec out(idx.size());
  for (size_t i = 0; i < idx.size(); ++i) out[i] = full[size_t(idx[i])];
  return out;
}

bool supported_on(const Vec& full, const std::vector<int>& idx) {
  std::vector<bool> in(full.size(), false);
  for (int i : idx) in[size_t(i)] = true;
  for (size_t k = 0; k < full.size(); ++k)
    if (!in[k] && !full[k].is_zero()) return false;
  return true;
}

Scalar pairing(const ExactMatrix& g, const Vec& x, const Vec& y) {
  Scalar acc;
  for (int i = 0; i < g.rows(); ++i) {
    if (x[size_t(i)].is_zero()) continue;
    for (int j = 0; j < g.cols(); ++j) {
      if (g.at(i, j).is_zero() || y[size_t(j)].is_zero()) continue;
      acc += x[size_t(i)] * g.at(i, j) * y[size_t(j)];
    }
  }
  return acc;
}

}  // namespace

ReductiveSpace ReductiveSpace::create(LieAlgebraData algebra, std::vector<int> h_idx,
                                      std::vector<int> m_idx, ExactMatrix metric) {
  int full = algebra.dim();
  std::vector<bool> seen(size_t(full), false);
  for (int i : h_idx) {
    if (i < 0 || i >= full) throw ValidationError("isotropy index out of range");
    if (seen[size_t(i)]) throw ValidationError("duplicate basis index in the split");
    seen[size_t(i)] = true;
  }
  for (int i : m_idx) {
    if (i < 0 || i >= full) throw ValidationError("tangent index out of range");
    if (seen[size_t(i)]) throw ValidationError("duplicate basis index in the split");
    seen[size_t(i)] = true;
  }
  if (int(h_idx.size() + m_idx.size()) != full)
    throw ValidationError("basis split must cover the whole algebra");
  int n = int(m_idx.size());
  if (n < 1) throw ValidationError("tangent space must have positive dimension");
  if (metric.rows() != n || metric.cols() != n)
    throw ValidationError("metric size does not match the tangent dimension");
  if (!metric.is_symmetric()) throw ValidationError("metric must be symmetric");
  if (!is_positive_definite(metric)) throw ValidationError("metric must be positive definite");

  for (size_t a = 0; a < h_idx.size(); ++a)
    for (size_t b = a + 1; b < h_idx.size(); ++b)
      if (!supported_on(algebra.bracket_basis(h_idx[a], h_idx[b]), h_idx))
        throw ValidationError("isotropy is not a subalgebra: [h" + std::to_string(a) + ", h" +
                              std::to_string(b) + "] leaves it");
  for (size_t a = 0; a < h_idx.size(); ++a)
    for (size_t i = 0; i < m_idx.size(); ++i)
      if (!supported_on(algebra.bracket_basis(h_idx[a], m_idx[i]), m_idx))
        throw ValidationError("split is not reductive: [h" + std::to_string(a) + ", m" +
                              std::to_string(i) + "] has an isotropy part");

  ReductiveSpace s;
  s.m_alg = std::move(algebra);
  s.m_h = std::move(h_idx);
  s.m_m = std::move(m_idx);
  s.m_metric = std::move(metric);
  s.m_metric_inv = inverse(s.m_metric);

  s.m_isotropy.reserve(s.m_h.size());
  for (size_t a = 0; a < s.m_h.size(); ++a) {
    ExactMatrix rho(n, n);
    for (int j = 0; j < n; ++j) {
      Vec col = restrict_to(s.m_m, s.m_alg.bracket_basis(s.m_h[a], s.m_m[size_t(j)]));
      rho.set_col(j, col);
    }
    if (!is_skew_adjoint(rho, s.m_metric))
      throw ValidationError("metric is not invariant under isotropy element h" +
                            std::to_string(a));
    s.m_isotropy.push_back(std::move(rho));
  }

  // alpha(e_i): columns 1/2 [e_i, e_j]_m + U(e_i, e_j) with U solved from the
  // metric: 2 <U(x,y), z> = <[z,x]_m, y> + <x, [z,y]_m>
  s.m_alpha.reserve(size_t(n));
  Scalar half(Rational(1, 2));
  std::vector<std::vector<Vec>> bm(static_cast<size_t>(n), std::vector<Vec>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      bm[size_t(i)][size_t(j)] =
          restrict_to(s.m_m, s.m_alg.bracket_basis(s.m_m[size_t(i)], s.m_m[size_t(j)]));
  for (int i = 0; i < n; ++i) {
    ExactMatrix a(n, n);
    for (int j = 0; j < n; ++j) {
      Vec ei(static_cast<size_t>(n)), ej(static_cast<size_t>(n));
      ei[size_t(i)] = Scalar(1);
      ej[size_t(j)] = Scalar(1);
      Vec w(static_cast<size_t>(n));
      for (int k = 0; k < n; ++k)
        w[size_t(k)] = pairing(s.m_metric, bm[size_t(k)][size_t(i)], ej) +
                       pairing(s.m_metric, ei, bm[size_t(k)][size_t(j)]);
      Vec u = s.m_metric_inv.apply(w);
      Vec col = half * bm[size_t(i)][size_t(j)] + half * u;
      a.set_col(j, col);
    }
    check_internal(is_skew_adjoint(a, s.m_metric),
                   "connection operator is not metric skew-adjoint");
    s.m_alpha.push_back(std::move(a));
  }
  return s;
}

Vec ReductiveSpace::bracket_m(const Vec& x, const Vec& y) const {
  Vec full = m_alg.bracket(lift(m_m, x, m_alg.dim()), lift(m_m, y, m_alg.dim()));
  return restrict_to(m_m, full);
}

Vec ReductiveSpace::bracket_h(const Vec& x, const Vec& y) const {
  Vec full = m_alg.bracket(lift(m_m, x, m_alg.dim()), lift(m_m, y, m_alg.dim()));
  return restrict_to(m_h, full);
}

ExactMatrix ReductiveSpace::connection_operator(const Vec& x) const {
  ExactMatrix a(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    if (!x[size_t(i)].is_zero()) a = a + x[size_t(i)] * m_alpha[size_t(i)];
  return a;
}

bool ReductiveSpace::has_zero_u() const {
  int n = dim();
  for (int i = 0; i < n; ++i) {
    Vec ei(static_cast<size_t>(n));
    ei[size_t(i)] = Scalar(1);
    for (int j = 0; j < n; ++j) {
      Vec ej(static_cast<size_t>(n));
      ej[size_t(j)] = Scalar(1);
      Vec u = m_alpha[size_t(i)].apply(ej) - Scalar(Rational(1, 2)) * bracket_m(ei, ej);
      if (!is_zero_vec(u)) return false;
    }
  }
  return true;
}

const CovariantTensor& ReductiveSpace::curvature_derivative(int j) const {
  check_internal(j >= 0, "derivative order must be non-negative");
  int n = dim();
  if (m_jets.empty()) {
    CovariantTensor r(n, 4);
    for (int a = 0; a < n; ++a) {
      Vec ea(static_cast<size_t>(n));
      ea[size_t(a)] = Scalar(1);
      for (int b = a + 1; b < n; ++b) {
        Vec eb(static_cast<size_t>(n));
        eb[size_t(b)] = Scalar(1);
        ExactMatrix op = commutator(m_alpha[size_t(a)], m_alpha[size_t(b)]) -
                         connection_operator(bracket_m(ea, eb));
        Vec hpart = bracket_h(ea, eb);
        for (size_t c = 0; c < m_h.size(); ++c)
          if (!hpart[c].is_zero()) op = op - hpart[c] * m_isotropy[c];
        ExactMatrix lowered = m_metric * op;  // lowered.at(l,k) = <op e_k, e_l>
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            r.at({a, b, k, l}) = lowered.at(l, k);
            r.at({b, a, k, l}) = -lowered.at(l, k);
          }
      }
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            const Scalar& v = r.at({a, b, k, l});
            check_internal(v == -r.at({a, b, l, k}), "curvature pair antisymmetry fails");
            check_internal(v == r.at({k, l, a, b}), "curvature pair exchange fails");
            Scalar cyc = v + r.at({b, k, a, l}) + r.at({k, a, b, l});
            check_internal(cyc.is_zero(), "algebraic Bianchi identity fails");
          }
    m_jets.push_back(std::move(r));
  }
  while (int(m_jets.size()) <= j) {
    const CovariantTensor& prev = m_jets.back();
    CovariantTensor next(n, prev.valence() + 1);
    size_t block = prev.size();
    for (int m = 0; m < n; ++m) {
      CovariantTensor pm = so_action(m_alpha[size_t(m)], prev);
      for (size_t r = 0; r < block; ++r) next.flat(size_t(m) * block + r) = pm.flat(r);
    }
    if (next.valence() == 5) {
      // differential Bianchi identity
      MultiIndex mi(n, 5);
      do {
        int a = mi.idx[0], b = mi.idx[1], c = mi.idx[2], k = mi.idx[3], l = mi.idx[4];
        Scalar cyc = next.at({a, b, c, k, l}) + next.at({b, c, a, k, l}) +
                     next.at({c, a, b, k, l});
        check_internal(cyc.is_zero(), "differential Bianchi identity fails");
      } while (mi.advance());
    }
    for (const ExactMatrix& rho : m_isotropy)
      check_internal(so_action(rho, next).is_zero(),
                     "curvature derivative is not isotropy invariant");
    m_jets.push_back(std::move(next));
  }
  return m_jets[size_t(j)];
}

CurvatureJet ReductiveSpace::nabla_jet(int k) const {
  check_internal(k >= 0, "jet order must be non-negative");
  CurvatureJet jet;
  jet.order = k;
  for (int j = 0; j <= k; ++j) jet.tensors.push_back(curvature_derivative(j));
  return jet;
}

ExactMatrix ReductiveSpace::ricci() const {
  const CovariantTensor& r = curvature();
  int n = dim();
  ExactMatrix ric(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Scalar acc;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          const Scalar& gi = m_metric_inv.at(a, b);
          if (gi.is_zero()) continue;
          const Scalar& rv = r.at({a, i, j, b});
          if (rv.is_zero()) continue;
          acc += gi * rv;
        }
      ric.at(i, j) = acc;
      ric.at(j, i) = acc;
    }
  return ric;
}

std::optional<Scalar> ReductiveSpace::einstein_factor() const {
  ExactMatrix ric = ricci();
  Scalar lambda = ric.at(0, 0) / m_metric.at(0, 0);
  if (ric == lambda * m_metric) return lambda;
  return std::nullopt;
}

}  // namespace homjet
