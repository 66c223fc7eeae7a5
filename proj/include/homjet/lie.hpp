#pragma once

#include <vector>

#include "homjet/linalg.hpp"

namespace homjet {

// Finite-dimensional Lie algebra over Q(sqrt(d)) given by structure constants
// in a fixed basis: bracket_basis(i, j) holds [e_i, e_j] as a coefficient
// vector.  Antisymmetry is built in; validate() checks the Jacobi identity.
class LieAlgebraData {
public:
  LieAlgebraData() : m_dim(0), m_d(1) {}
  LieAlgebraData(int dim, unsigned long d);

  int dim() const { return m_dim; }
  unsigned long field_d() const { return m_d; }

  void set_bracket(int i, int j, const Vec& value);
  const Vec& bracket_basis(int i, int j) const;

  Vec bracket(const Vec& x, const Vec& y) const;
  ExactMatrix ad_basis(int i) const;  // matrix of y -> [e_i, y]
  ExactMatrix ad(const Vec& x) const;

  // Throws ValidationError naming the first basis triple where the Jacobi
  // identity fails.
  void validate() const;

  ExactMatrix killing_form() const;

private:
  int m_dim;
  unsigned long m_d;
  std::vector<Vec> m_c;
};

}  // namespace homjet
