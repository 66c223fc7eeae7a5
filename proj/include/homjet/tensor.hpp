#pragma once

#include <vector>

#include "homjet/linalg.hpp"

namespace homjet {

/// Dense covariant tensor of rank `valence` on an n-dimensional space,
/// components in row-major slot order.
class CovariantTensor {
public:
  CovariantTensor() : m_dim(0), m_valence(0) {}
  CovariantTensor(int dim, int valence);

  int dim() const { return m_dim; }
  int valence() const { return m_valence; }
  size_t size() const { return m_comp.size(); }

  Scalar& flat(size_t i) { return m_comp[i]; }
  const Scalar& flat(size_t i) const { return m_comp[i]; }

  size_t flat_index(const std::vector<int>& idx) const;
  Scalar& at(const std::vector<int>& idx) { return m_comp[flat_index(idx)]; }
  const Scalar& at(const std::vector<int>& idx) const { return m_comp[flat_index(idx)]; }

  bool is_zero() const;

  friend CovariantTensor operator+(const CovariantTensor& x, const CovariantTensor& y);
  friend CovariantTensor operator-(const CovariantTensor& x, const CovariantTensor& y);
  friend CovariantTensor operator*(const Scalar& c, const CovariantTensor& t);
  friend bool operator==(const CovariantTensor& x, const CovariantTensor& y) {
    return x.m_dim == y.m_dim && x.m_valence == y.m_valence && x.m_comp == y.m_comp;
  }
  friend bool operator!=(const CovariantTensor& x, const CovariantTensor& y) { return !(x == y); }

private:
  int m_dim, m_valence;
  std::vector<Scalar> m_comp;
};

/// Odometer over all multi-indices of the given width.
struct MultiIndex {
  std::vector<int> idx;
  int dim;

  MultiIndex(int dim_, int width) : idx(width, 0), dim(dim_) {}
  bool advance() {
    for (int s = int(idx.size()) - 1; s >= 0; --s) {
      if (++idx[s] < dim) return true;
      idx[s] = 0;
    }
    return false;
  }
};

bool is_skew_adjoint(const ExactMatrix& a, const ExactMatrix& metric);

/// Average of t over all permutations of the listed slots (exact division).
CovariantTensor symmetrize(const CovariantTensor& t, const std::vector<int>& slots);

bool is_symmetric_in(const CovariantTensor& t, const std::vector<int>& slots);

/// Derivation action of an endomorphism on covariant tensors:
/// (a.t)(v_1..v_r) = -sum_i t(v_1, ..., a(v_i), ..., v_r).
CovariantTensor so_action(const ExactMatrix& a, const CovariantTensor& t);

/// For t symmetric in its first sym_prefix slots (trailing slots untouched),
/// the symmetrization of g (x) t over the first sym_prefix+2 slots. Normalized
/// so that embed(t)(xi..xi, rest) = <xi,xi> * t(xi..xi, rest).
CovariantTensor metric_embed(const CovariantTensor& t, const ExactMatrix& g, int sym_prefix);

CovariantTensor tensor_product(const CovariantTensor& x, const CovariantTensor& y);

CovariantTensor metric_as_tensor(const ExactMatrix& g);

/// Full contraction of t with one vector per slot.
Scalar eval_tensor(const CovariantTensor& t, const std::vector<Vec>& vectors);

Vec flatten(const CovariantTensor& t);

struct CombinationResult {
  std::optional<std::vector<Scalar>> coeffs;
  bool unique = false;  // true when the basis tensors are linearly independent
};

/// Exact coefficients expressing target in the span of basis, when possible.
CombinationResult solve_tensor_combination(const CovariantTensor& target,
                                           const std::vector<CovariantTensor>& basis);

} // namespace homjet
