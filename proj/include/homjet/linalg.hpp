#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "homjet/scalar.hpp"

namespace homjet {

using Vec = std::vector<Scalar>;

Vec operator+(const Vec& x, const Vec& y);
Vec operator-(const Vec& x, const Vec& y);
Vec operator*(const Scalar& c, const Vec& v);
bool is_zero_vec(const Vec& v);

/// Dense matrix over Q(sqrt(d)), row major.
class ExactMatrix {
public:
  ExactMatrix() : m_rows(0), m_cols(0) {}
  ExactMatrix(int rows, int cols) : m_rows(rows), m_cols(cols), m_e(size_t(rows) * cols) {}
  ExactMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static ExactMatrix identity(int n);

  int rows() const { return m_rows; }
  int cols() const { return m_cols; }

  Scalar& at(int i, int j) { return m_e[size_t(i) * m_cols + j]; }
  const Scalar& at(int i, int j) const { return m_e[size_t(i) * m_cols + j]; }

  ExactMatrix transpose() const;
  Vec apply(const Vec& v) const;
  Vec row(int i) const;
  Vec col(int j) const;
  void set_row(int i, const Vec& v);
  void set_col(int j, const Vec& v);

  bool is_zero() const;
  bool is_symmetric() const;
  bool is_antisymmetric() const;

  friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y);
  friend ExactMatrix operator+(const ExactMatrix& x, const ExactMatrix& y);
  friend ExactMatrix operator-(const ExactMatrix& x, const ExactMatrix& y);
  friend ExactMatrix operator*(const Scalar& c, const ExactMatrix& m);
  friend bool operator==(const ExactMatrix& x, const ExactMatrix& y) {
    return x.m_rows == y.m_rows && x.m_cols == y.m_cols && x.m_e == y.m_e;
  }
  friend bool operator!=(const ExactMatrix& x, const ExactMatrix& y) { return !(x == y); }

  friend ExactMatrix commutator(const ExactMatrix& x, const ExactMatrix& y);

private:
  int m_rows, m_cols;
  std::vector<Scalar> m_e;
};

ExactMatrix matrix_from_rows(const std::vector<Vec>& rows, int cols);

int rank(const ExactMatrix& m);

/// Kernel basis via fraction-free (Bareiss) elimination; each vector is
/// verified to satisfy m*v = 0, and rank + kernel size = cols.
std::vector<Vec> kernel(const ExactMatrix& m);

struct LinearSolve {
  std::optional<Vec> solution;  // one particular solution (free variables set to 0)
  std::vector<Vec> kernel;      // kernel basis of the coefficient matrix
  bool unique() const { return solution.has_value() && kernel.empty(); }
};

LinearSolve solve_linear(const ExactMatrix& a, const Vec& b);

Scalar determinant(const ExactMatrix& m);

ExactMatrix inverse(const ExactMatrix& m);

/// Exact Sylvester criterion: all leading principal minors positive.
bool is_positive_definite(const ExactMatrix& m);

int rank_of_vectors(const std::vector<Vec>& vs);
bool in_span(const std::vector<Vec>& span, const Vec& v);
bool equal_span(const std::vector<Vec>& a, const std::vector<Vec>& b);

} // namespace homjet
