#pragma once

#include <deque>
#include <optional>
#include <vector>

#include "homjet/lie.hpp"
#include "homjet/tensor.hpp"

namespace homjet {

// Jet of the curvature tensor at the base point: tensors[j] is the j-th
// covariant derivative, valence j+4, derivative slots first.
struct CurvatureJet {
  int order = 0;
  std::vector<CovariantTensor> tensors;
};

// Reductive homogeneous space: a Lie algebra with a basis split into an
// isotropy subalgebra (h_idx) and a complement (m_idx) modelling the tangent
// space, plus an invariant inner product on the complement.
class ReductiveSpace {
public:
  // Validates the split, closure and reductivity conditions, and the metric
  // (symmetric, positive definite, isotropy invariant); throws
  // ValidationError otherwise.
  static ReductiveSpace create(LieAlgebraData algebra, std::vector<int> h_idx,
                               std::vector<int> m_idx, ExactMatrix metric);

  int dim() const { return int(m_m.size()); }
  int isotropy_dim() const { return int(m_h.size()); }
  const LieAlgebraData& algebra() const { return m_alg; }
  const ExactMatrix& metric() const { return m_metric; }
  const ExactMatrix& metric_inverse() const { return m_metric_inv; }
  const std::vector<int>& h_indices() const { return m_h; }
  const std::vector<int>& m_indices() const { return m_m; }

  // brackets of tangent vectors (coordinates in the m basis), split by part
  Vec bracket_m(const Vec& x, const Vec& y) const;
  Vec bracket_h(const Vec& x, const Vec& y) const;  // coordinates in the h basis

  // Levi-Civita connection operator alpha(x)y = 1/2 [x,y]_m + U(x,y); each
  // alpha is skew-adjoint for the metric.
  const ExactMatrix& connection_operator(int i) const { return m_alpha[size_t(i)]; }
  ExactMatrix connection_operator(const Vec& x) const;
  const std::vector<ExactMatrix>& connection_operators() const { return m_alpha; }
  bool has_zero_u() const;  // U == 0, e.g. for normal metrics

  // linearized isotropy action on the tangent space, one matrix per h basis vector
  const ExactMatrix& isotropy_action(int a) const { return m_isotropy[size_t(a)]; }
  const std::vector<ExactMatrix>& isotropy_actions() const { return m_isotropy; }

  // Curvature R(x,y,z,w) = <R(x,y)z, w> with R(x,y) = [alpha(x), alpha(y)]
  // - alpha([x,y]_m) - isotropy([x,y]_h); all symmetries verified exactly.
  const CovariantTensor& curvature() const { return curvature_derivative(0); }

  // j-th covariant derivative of the curvature at the base point, cached.
  // Each new level is checked to be isotropy invariant; level 1 is checked
  // against the differential Bianchi identity.
  const CovariantTensor& curvature_derivative(int j) const;

  CurvatureJet nabla_jet(int k) const;

  ExactMatrix ricci() const;
  // Exact Einstein factor if Ric = lambda * g, otherwise nullopt.
  std::optional<Scalar> einstein_factor() const;

private:
  ReductiveSpace() = default;

  LieAlgebraData m_alg;
  std::vector<int> m_h, m_m;
  ExactMatrix m_metric, m_metric_inv;
  std::vector<ExactMatrix> m_alpha;
  std::vector<ExactMatrix> m_isotropy;
  mutable std::deque<CovariantTensor> m_jets;
};

}  // namespace homjet
