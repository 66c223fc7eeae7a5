#include "homjet/linalg.hpp"

#include <utility>

namespace homjet {

Vec operator+(const Vec& x, const Vec& y) {
  check_internal(x.size() == y.size(), "vector size mismatch");
  Vec out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return out;
}

Vec operator-(const Vec& x, const Vec& y) {
  check_internal(x.size() == y.size(), "vector size mismatch");
  Vec out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
  return out;
}

Vec operator*(const Scalar& c, const Vec& v) {
  Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& e : v)
    if (!e.is_zero()) return false;
  return true;
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  m_rows = int(rows.size());
  m_cols = m_rows == 0 ? 0 : int(rows.begin()->size());
  m_e.reserve(size_t(m_rows) * m_cols);
  for (const auto& r : rows) {
    check_internal(int(r.size()) == m_cols, "ragged matrix initializer");
    for (const auto& e : r) m_e.push_back(e);
  }
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(m_cols, m_rows);
  for (int i = 0; i < m_rows; ++i)
    for (int j = 0; j < m_cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

Vec ExactMatrix::apply(const Vec& v) const {
  check_internal(int(v.size()) == m_cols, "matrix/vector size mismatch");
  Vec out(m_rows, Scalar(0));
  for (int i = 0; i < m_rows; ++i)
    for (int j = 0; j < m_cols; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
  return out;
}

Vec ExactMatrix::row(int i) const {
  Vec out(m_cols);
  for (int j = 0; j < m_cols; ++j) out[j] = at(i, j);
  return out;
}

Vec ExactMatrix::col(int j) const {
  Vec out(m_rows);
  for (int i = 0; i < m_rows; ++i) out[i] = at(i, j);
  return out;
}

void ExactMatrix::set_row(int i, const Vec& v) {
  check_internal(int(v.size()) == m_cols, "row size mismatch");
  for (int j = 0; j < m_cols; ++j) at(i, j) = v[j];
}

void ExactMatrix::set_col(int j, const Vec& v) {
  check_internal(int(v.size()) == m_rows, "column size mismatch");
  for (int i = 0; i < m_rows; ++i) at(i, j) = v[size_t(i)];
}

bool ExactMatrix::is_zero() const {
  for (const auto& e : m_e)
    if (!e.is_zero()) return false;
  return true;
}

bool ExactMatrix::is_symmetric() const {
  if (m_rows != m_cols) return false;
  for (int i = 0; i < m_rows; ++i)
    for (int j = i + 1; j < m_cols; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool ExactMatrix::is_antisymmetric() const {
  if (m_rows != m_cols) return false;
  for (int i = 0; i < m_rows; ++i)
    for (int j = i; j < m_cols; ++j)
      if (at(i, j) != -at(j, i)) return false;
  return true;
}

ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
  check_internal(x.m_cols == y.m_rows, "matrix product size mismatch");
  ExactMatrix out(x.m_rows, y.m_cols);
  for (int i = 0; i < x.m_rows; ++i)
    for (int k = 0; k < x.m_cols; ++k) {
      const Scalar& xe = x.at(i, k);
      if (xe.is_zero()) continue;
      for (int j = 0; j < y.m_cols; ++j)
        if (!y.at(k, j).is_zero()) out.at(i, j) += xe * y.at(k, j);
    }
  return out;
}

ExactMatrix operator+(const ExactMatrix& x, const ExactMatrix& y) {
  check_internal(x.m_rows == y.m_rows && x.m_cols == y.m_cols, "matrix sum size mismatch");
  ExactMatrix out = x;
  for (size_t i = 0; i < out.m_e.size(); ++i) out.m_e[i] += y.m_e[i];
  return out;
}

ExactMatrix operator-(const ExactMatrix& x, const ExactMatrix& y) {
  check_internal(x.m_rows == y.m_rows && x.m_cols == y.m_cols, "matrix difference size mismatch");
  ExactMatrix out = x;
  for (size_t i = 0; i < out.m_e.size(); ++i) out.m_e[i] -= y.m_e[i];
  return out;
}

ExactMatrix operator*(const Scalar& c, const ExactMatrix& m) {
  ExactMatrix out = m;
  for (auto& e : out.m_e) e *= c;
  return out;
}

ExactMatrix commutator(const ExactMatrix& x, const ExactMatrix& y) { return x * y - y * x; }

ExactMatrix matrix_from_rows(const std::vector<Vec>& rows, int cols) {
  ExactMatrix m(int(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) m.set_row(int(i), rows[i]);
  return m;
}

namespace {

struct Echelon {
  ExactMatrix m;
  std::vector<std::pair<int, int>> pivots;  // (row, col), increasing in both
  int swaps = 0;
  Rational scale = 1;  // product of the row scalings applied up front
};

// Fraction-free forward elimination. Rows are first scaled to clear
// denominators, then the Bareiss two-term update keeps every intermediate
// entry a subdeterminant of the scaled matrix, which bounds growth.
Echelon eliminate(ExactMatrix work) {
  Echelon e{std::move(work), {}, 0, Rational(1)};
  ExactMatrix& m = e.m;
  for (int i = 0; i < m.rows(); ++i) {
    mpz_class l(1);
    for (int j = 0; j < m.cols(); ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).rat_part().get_den().get_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).irr_part().get_den().get_mpz_t());
    }
    if (l != 1) {
      Scalar f{Rational(l)};
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) *= f;
      e.scale *= Rational(l);
    }
  }
  Scalar prev(1);
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
      ++e.swaps;
    }
    for (int i = r + 1; i < m.rows(); ++i) {
      for (int j = c + 1; j < m.cols(); ++j)
        m.at(i, j) = (m.at(i, j) * m.at(r, c) - m.at(i, c) * m.at(r, j)) / prev;
      m.at(i, c) = Scalar(0);
    }
    prev = m.at(r, c);
    e.pivots.emplace_back(r, c);
    ++r;
  }
  return e;
}

// Kernel of the matrix the echelon came from, restricted to its first
// `cols` columns (used to ignore an augmented right-hand side).
std::vector<Vec> kernel_from_echelon(const Echelon& e, int cols) {
  std::vector<std::pair<int, int>> pivots;
  std::vector<bool> is_pivot(cols, false);
  for (auto [r, c] : e.pivots)
    if (c < cols) {
      pivots.emplace_back(r, c);
      is_pivot[c] = true;
    }
  std::vector<Vec> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols, Scalar(0));
    v[f] = Scalar(1);
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      auto [r, c] = *it;
      Scalar s(0);
      for (int j = c + 1; j < cols; ++j)
        if (!e.m.at(r, j).is_zero() && !v[j].is_zero()) s += e.m.at(r, j) * v[j];
      v[c] = -s / e.m.at(r, c);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace

int rank(const ExactMatrix& m) { return int(eliminate(m).pivots.size()); }

std::vector<Vec> kernel(const ExactMatrix& m) {
  Echelon e = eliminate(m);
  std::vector<Vec> basis = kernel_from_echelon(e, m.cols());
  check_internal(int(e.pivots.size() + basis.size()) == m.cols(),
                 "rank-nullity mismatch in kernel computation");
  for (const Vec& v : basis)
    check_internal(is_zero_vec(m.apply(v)), "kernel vector fails m*v = 0");
  return basis;
}

LinearSolve solve_linear(const ExactMatrix& a, const Vec& b) {
  check_internal(int(b.size()) == a.rows(), "solve_linear size mismatch");
  ExactMatrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  Echelon e = eliminate(std::move(aug));
  LinearSolve out;
  out.kernel = kernel_from_echelon(e, a.cols());
  bool consistent = true;
  for (auto [r, c] : e.pivots)
    if (c == a.cols()) consistent = false;
  if (consistent) {
    Vec v(a.cols(), Scalar(0));
    for (auto it = e.pivots.rbegin(); it != e.pivots.rend(); ++it) {
      auto [r, c] = *it;
      Scalar s = e.m.at(r, a.cols());
      for (int j = c + 1; j < a.cols(); ++j)
        if (!e.m.at(r, j).is_zero() && !v[j].is_zero()) s -= e.m.at(r, j) * v[j];
      v[c] = s / e.m.at(r, c);
    }
    check_internal(a.apply(v) == b, "solve_linear: residual is nonzero");
    out.solution = std::move(v);
  }
  for (const Vec& v : out.kernel)
    check_internal(is_zero_vec(a.apply(v)), "solve_linear: kernel vector fails a*v = 0");
  return out;
}

Scalar determinant(const ExactMatrix& m) {
  check_internal(m.rows() == m.cols(), "determinant of non-square matrix");
  if (m.rows() == 0) return Scalar(1);
  Echelon e = eliminate(m);
  if (int(e.pivots.size()) < m.rows()) return Scalar(0);
  Scalar det = e.m.at(m.rows() - 1, m.cols() - 1);
  if (e.swaps % 2) det = -det;
  return det / Scalar(e.scale);
}

ExactMatrix inverse(const ExactMatrix& m) {
  check_internal(m.rows() == m.cols(), "inverse of non-square matrix");
  int n = m.rows();
  ExactMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Scalar(1);
  }
  Echelon e = eliminate(std::move(aug));
  int r = 0;
  for (auto [row, col] : e.pivots)
    if (col < n) ++r;
  check_internal(r == n, "inverse of singular matrix");
  ExactMatrix inv(n, n);
  for (int k = 0; k < n; ++k) {
    Vec v(n, Scalar(0));
    for (auto it = e.pivots.rbegin(); it != e.pivots.rend(); ++it) {
      auto [row, c] = *it;
      if (c >= n) continue;
      Scalar s = e.m.at(row, n + k);
      for (int j = c + 1; j < n; ++j)
        if (!e.m.at(row, j).is_zero() && !v[j].is_zero()) s -= e.m.at(row, j) * v[j];
      v[c] = s / e.m.at(row, c);
    }
    for (int i = 0; i < n; ++i) inv.at(i, k) = v[i];
  }
  check_internal(m * inv == ExactMatrix::identity(n), "inverse verification failed");
  return inv;
}

bool is_positive_definite(const ExactMatrix& m) {
  if (m.rows() != m.cols() || !m.is_symmetric()) return false;
  for (int k = 1; k <= m.rows(); ++k) {
    ExactMatrix sub(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(i, j);
    if (determinant(sub).sign() <= 0) return false;
  }
  return true;
}

int rank_of_vectors(const std::vector<Vec>& vs) {
  if (vs.empty()) return 0;
  return rank(matrix_from_rows(vs, int(vs[0].size())));
}

bool in_span(const std::vector<Vec>& span, const Vec& v) {
  if (is_zero_vec(v)) return true;
  std::vector<Vec> all = span;
  all.push_back(v);
  return rank_of_vectors(all) == rank_of_vectors(span);
}

bool equal_span(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  int ra = rank_of_vectors(a), rb = rank_of_vectors(b);
  if (ra != rb) return false;
  std::vector<Vec> all = a;
  all.insert(all.end(), b.begin(), b.end());
  return rank_of_vectors(all) == ra;
}

} // namespace homjet
