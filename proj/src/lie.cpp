#include "homjet/lie.hpp"

#include <string>

#include "homjet/error.hpp"

namespace homjet {

LieAlgebraData::LieAlgebraData(int dim, unsigned long d) : m_dim(dim), m_d(d) {
  check_internal(dim >= 1, "algebra dimension must be positive");
  require_valid_discriminant(d);
  m_c.assign(size_t(dim) * size_t(dim), Vec(size_t(dim)));
}

void LieAlgebraData::set_bracket(int i, int j, const Vec& value) {
  check_internal(i >= 0 && i < m_dim && j >= 0 && j < m_dim, "basis index out of range");
  check_internal(int(value.size()) == m_dim, "bracket coefficient size mismatch");
  if (i == j) {
    check_internal(is_zero_vec(value), "bracket of a basis vector with itself must vanish");
    return;
  }
  m_c[size_t(i) * size_t(m_dim) + size_t(j)] = value;
  Vec neg(static_cast<size_t>(m_dim));
  for (int k = 0; k < m_dim; ++k) neg[size_t(k)] = -value[size_t(k)];
  m_c[size_t(j) * size_t(m_dim) + size_t(i)] = neg;
}

const Vec& LieAlgebraData::bracket_basis(int i, int j) const {
  check_internal(i >= 0 && i < m_dim && j >= 0 && j < m_dim, "basis index out of range");
  return m_c[size_t(i) * size_t(m_dim) + size_t(j)];
}

Vec LieAlgebraData::bracket(const Vec& x, const Vec& y) const {
  check_internal(int(x.size()) == m_dim && int(y.size()) == m_dim, "vector size mismatch");
  Vec out(static_cast<size_t>(m_dim));
  for (int i = 0; i < m_dim; ++i) {
    if (x[size_t(i)].is_zero()) continue;
    for (int j = 0; j < m_dim; ++j) {
      if (y[size_t(j)].is_zero() || i == j) continue;
      const Vec& c = m_c[size_t(i) * size_t(m_dim) + size_t(j)];
      Scalar f = x[size_t(i)] * y[size_t(j)];
      for (int k = 0; k < m_dim; ++k)
        if (!c[size_t(k)].is_zero()) out[size_t(k)] += f * c[size_t(k)];
    }
  }
  return out;
}

ExactMatrix LieAlgebraData::ad_basis(int i) const {
  ExactMatrix m(m_dim, m_dim);
  for (int j = 0; j < m_dim; ++j) {
    const Vec& c = bracket_basis(i, j);
    for (int k = 0; k < m_dim; ++k) m.at(k, j) = c[size_t(k)];
  }
  return m;
}

ExactMatrix LieAlgebraData::ad(const Vec& x) const {
  ExactMatrix m(m_dim, m_dim);
  for (int i = 0; i < m_dim; ++i)
    if (!x[size_t(i)].is_zero()) m = m + x[size_t(i)] * ad_basis(i);
  return m;
}

void LieAlgebraData::validate() const {
  for (int i = 0; i < m_dim; ++i)
    for (int j = i + 1; j < m_dim; ++j)
      for (int k = j + 1; k < m_dim; ++k) {
        Vec ei(static_cast<size_t>(m_dim)), ej(static_cast<size_t>(m_dim)), ek(static_cast<size_t>(m_dim));
        ei[size_t(i)] = Scalar(1);
        ej[size_t(j)] = Scalar(1);
        ek[size_t(k)] = Scalar(1);
        Vec cycle = bracket(ei, bracket(ej, ek)) + bracket(ej, bracket(ek, ei)) +
                    bracket(ek, bracket(ei, ej));
        if (!is_zero_vec(cycle))
          throw ValidationError("Jacobi identity fails on basis triple (" + std::to_string(i) +
                                ", " + std::to_string(j) + ", " + std::to_string(k) + ")");
      }
}

ExactMatrix LieAlgebraData::killing_form() const {
  std::vector<ExactMatrix> ads;
  ads.reserve(size_t(m_dim));
  for (int i = 0; i < m_dim; ++i) ads.push_back(ad_basis(i));
  ExactMatrix k(m_dim, m_dim);
  for (int i = 0; i < m_dim; ++i)
    for (int j = i; j < m_dim; ++j) {
      Scalar tr;
      for (int a = 0; a < m_dim; ++a)
        for (int b = 0; b < m_dim; ++b) {
          const Scalar& x = ads[size_t(i)].at(a, b);
          if (x.is_zero()) continue;
          tr += x * ads[size_t(j)].at(b, a);
        }
      k.at(i, j) = tr;
      k.at(j, i) = tr;
    }
  return k;
}

}  // namespace homjet
