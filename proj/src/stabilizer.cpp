#include "homjet/stabilizer.hpp"

#include <algorithm>

#include "homjet/error.hpp"
#include "homjet/jacobi.hpp"

namespace homjet {

namespace {

Vec flatten_matrix(const ExactMatrix& m) {
  Vec v;
  v.reserve(size_t(m.rows()) * size_t(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

std::vector<ExactMatrix> combine(const std::vector<ExactMatrix>& basis,
                                 const std::vector<Vec>& coeffs) {
  std::vector<ExactMatrix> out;
  out.reserve(coeffs.size());
  for (const Vec& c : coeffs) {
    ExactMatrix m(basis[0].rows(), basis[0].cols());
    for (size_t j = 0; j < basis.size(); ++j)
      if (!c[j].is_zero()) m = m + c[j] * basis[j];
    out.push_back(std::move(m));
  }
  return out;
}

// Elements of the span annihilating one more tensor, dense form.
std::vector<ExactMatrix> refine(const std::vector<ExactMatrix>& basis,
                                const CovariantTensor& jet) {
  if (basis.empty()) return {};
  std::vector<Vec> cols;
  cols.reserve(basis.size());
  for (const ExactMatrix& b : basis) {
    CovariantTensor act = so_action(b, jet);
    Vec col;
    col.reserve(act.size());
    for (size_t i = 0; i < act.size(); ++i) col.push_back(act.flat(i));
    cols.push_back(std::move(col));
  }
  ExactMatrix m(int(cols[0].size()), int(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) m.set_col(int(j), cols[j]);
  return combine(basis, kernel(m));
}

// Same, against a compressed symmetrized jet.
std::vector<ExactMatrix> refine_sym(const std::vector<ExactMatrix>& basis,
                                    const SymPairTensor& jet) {
  if (basis.empty()) return {};
  std::vector<Vec> cols;
  cols.reserve(basis.size());
  for (const ExactMatrix& b : basis) cols.push_back(so_action_sym(b, jet).flatten());
  ExactMatrix m(int(cols[0].size()), int(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) m.set_col(int(j), cols[j]);
  return combine(basis, kernel(m));
}

}  // namespace

std::vector<ExactMatrix> so_basis(const ExactMatrix& metric) {
  check_internal(metric.rows() == metric.cols(), "metric must be square");
  ExactMatrix inv = inverse(metric);
  int n = metric.rows();
  std::vector<ExactMatrix> out;
  out.reserve(size_t(n) * size_t(n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      ExactMatrix e(n, n);
      e.at(i, j) = Scalar(1);
      e.at(j, i) = Scalar(-1);
      ExactMatrix a = inv * e;
      check_internal(is_skew_adjoint(a, metric), "so basis element not skew-adjoint");
      out.push_back(std::move(a));
    }
  return out;
}

std::vector<ExactMatrix> g_k(const ReductiveSpace& s, int k) {
  check_internal(k >= 0, "stabilizer order must be non-negative");
  std::vector<ExactMatrix> basis = so_basis(s.metric());
  for (int j = 0; j <= k; ++j) basis = refine(basis, s.curvature_derivative(j));
  for (const ExactMatrix& a : basis)
    for (int j = 0; j <= k; ++j)
      check_internal(so_action(a, s.curvature_derivative(j)).is_zero(),
                     "stabilizer basis element fails re-verification");
  return basis;
}

std::vector<ExactMatrix> g_k_symmetrized(const ReductiveSpace& s, int k) {
  check_internal(k >= 0, "stabilizer order must be non-negative");
  std::vector<SymJet> chain = sym_jet_chain(s, k);
  std::vector<ExactMatrix> basis = so_basis(s.metric());
  for (const SymJet& jet : chain) basis = refine_sym(basis, jet.tensor);
  for (const ExactMatrix& a : basis)
    for (const SymJet& jet : chain)
      check_internal(so_action_sym(a, jet.tensor).is_zero(),
                     "stabilizer basis element fails re-verification");
  return basis;
}

std::vector<ExactMatrix> isotropy_image(const ReductiveSpace& s) {
  return s.isotropy_actions();
}

StabilizerChain singer_invariant(const ReductiveSpace& s, std::optional<int> order_cap) {
  int n = s.dim();
  int cap = n * (n - 1) / 2 + 1;
  if (order_cap) cap = std::min(cap, *order_cap);
  StabilizerChain chain;
  chain.levels.push_back({0, refine(so_basis(s.metric()), s.curvature())});
  for (int k = 0;; ++k) {
    check_internal(k <= cap, "stabilizer chain failed to stabilize");
    std::vector<ExactMatrix> next =
        refine(chain.levels.back().basis, s.curvature_derivative(k + 1));
    bool stable = int(next.size()) == chain.levels.back().dim();
    chain.levels.push_back({k + 1, std::move(next)});
    if (stable) {
      chain.singer = k;
      break;
    }
  }
  // probe one more order past the stopping point
  const StabilizerChain::Level& last = chain.levels.back();
  std::vector<ExactMatrix> probe = refine(last.basis, s.curvature_derivative(last.order + 1));
  check_internal(int(probe.size()) == last.dim() &&
                     same_matrix_span(probe, chain.levels[size_t(chain.singer)].basis),
                 "stabilizer chain shrank after stabilizing");
  chain.levels.push_back({last.order + 1, std::move(probe)});
  return chain;
}

bool matrix_in_span(const std::vector<ExactMatrix>& span, const ExactMatrix& x) {
  std::vector<Vec> rows;
  rows.reserve(span.size());
  for (const ExactMatrix& m : span) rows.push_back(flatten_matrix(m));
  return in_span(rows, flatten_matrix(x));
}

bool same_matrix_span(const std::vector<ExactMatrix>& a, const std::vector<ExactMatrix>& b) {
  std::vector<Vec> ra, rb;
  ra.reserve(a.size());
  rb.reserve(b.size());
  for (const ExactMatrix& m : a) ra.push_back(flatten_matrix(m));
  for (const ExactMatrix& m : b) rb.push_back(flatten_matrix(m));
  return equal_span(ra, rb);
}

}  // namespace homjet
