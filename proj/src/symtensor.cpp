#include "homjet/symtensor.hpp"

#include <algorithm>

#include "homjet/error.hpp"

namespace homjet {

namespace {

size_t binom(size_t n, size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  size_t r = 1;
  for (size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Sorted multisets of size k over {lo..dim-1}.
size_t count_from(int dim, int k, int lo) {
  return binom(size_t(dim - lo) + k - 1, size_t(k));
}

bool advance_multiset(std::vector<int>& m, int dim) {
  int k = int(m.size());
  for (int p = k - 1; p >= 0; --p) {
    if (m[p] + 1 < dim) {
      int v = m[p] + 1;
      for (int q = p; q < k; ++q) m[q] = v;
      return true;
    }
  }
  return false;
}

std::vector<std::vector<std::pair<int, Scalar>>> sparse_cols(const ExactMatrix& a) {
  std::vector<std::vector<std::pair<int, Scalar>>> cols(a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!a.at(i, j).is_zero()) cols[j].emplace_back(i, a.at(i, j));
  return cols;
}

}  // namespace

size_t multiset_count(int dim, int k) { return binom(size_t(dim) + k - 1, size_t(k)); }

size_t multiset_rank(const std::vector<int>& sorted, int dim) {
  size_t r = 0;
  int lo = 0;
  int k = int(sorted.size());
  for (int p = 0; p < k; ++p) {
    check_internal(sorted[p] >= lo && sorted[p] < dim, "multiset entry out of order or range");
    for (int c = lo; c < sorted[p]; ++c) r += count_from(dim, k - 1 - p, c);
    lo = sorted[p];
  }
  return r;
}

std::vector<int> multiset_unrank(size_t rank, int k, int dim) {
  std::vector<int> m(size_t(k), 0);
  int lo = 0;
  for (int p = 0; p < k; ++p) {
    int c = lo;
    for (;;) {
      size_t block = count_from(dim, k - 1 - p, c);
      if (rank < block) break;
      rank -= block;
      ++c;
      check_internal(c < dim, "multiset rank out of range");
    }
    m[size_t(p)] = c;
    lo = c;
  }
  check_internal(rank == 0, "multiset rank out of range");
  return m;
}

Rational multiset_orderings(const std::vector<int>& sorted) {
  Rational r(1);
  size_t run = 1;
  for (size_t p = 1; p <= sorted.size(); ++p) {
    r *= long(p);
    if (p < sorted.size() && sorted[p] == sorted[p - 1]) {
      ++run;
      r /= long(run);
    } else {
      run = 1;
    }
  }
  // r = p!/(prod of run factorials) accumulated incrementally
  return r;
}

SymPairTensor::SymPairTensor(int dim, int sym_valence) : m_dim(dim), m_sym(sym_valence) {
  check_internal(dim >= 1 && sym_valence >= 0, "bad tensor shape");
  m_sym_count = multiset_count(dim, sym_valence);
  m_data.assign(m_sym_count * pair_count(), Scalar());
}

size_t SymPairTensor::pair_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  check_internal(u >= 0 && v < m_dim, "pair index out of range");
  return size_t(u) * (2 * m_dim - u + 1) / 2 + size_t(v - u);
}

Scalar& SymPairTensor::at(const std::vector<int>& multiset, int u, int v) {
  std::vector<int> m = multiset;
  std::sort(m.begin(), m.end());
  check_internal(int(m.size()) == m_sym, "multiset size mismatch");
  return m_data[multiset_rank(m, m_dim) * pair_count() + pair_index(u, v)];
}

const Scalar& SymPairTensor::at(const std::vector<int>& multiset, int u, int v) const {
  return const_cast<SymPairTensor*>(this)->at(multiset, u, v);
}

bool SymPairTensor::is_zero() const {
  for (const Scalar& s : m_data)
    if (!s.is_zero()) return false;
  return true;
}

SymPairTensor SymPairTensor::operator+(const SymPairTensor& o) const {
  check_internal(m_dim == o.m_dim && m_sym == o.m_sym, "shape mismatch");
  SymPairTensor r = *this;
  for (size_t i = 0; i < m_data.size(); ++i) r.m_data[i] += o.m_data[i];
  return r;
}

SymPairTensor SymPairTensor::operator-(const SymPairTensor& o) const {
  check_internal(m_dim == o.m_dim && m_sym == o.m_sym, "shape mismatch");
  SymPairTensor r = *this;
  for (size_t i = 0; i < m_data.size(); ++i) r.m_data[i] -= o.m_data[i];
  return r;
}

bool SymPairTensor::operator==(const SymPairTensor& o) const {
  return m_dim == o.m_dim && m_sym == o.m_sym && m_data == o.m_data;
}

SymPairTensor operator*(const Scalar& c, const SymPairTensor& t) {
  SymPairTensor r = t;
  for (size_t i = 0; i < r.size(); ++i) r.flat(i) = c * r.flat(i);
  return r;
}

SymPairTensor so_action_sym(const ExactMatrix& a, const SymPairTensor& t) {
  int n = t.dim();
  check_internal(a.rows() == n && a.cols() == n, "endomorphism dimension mismatch");
  auto cols = sparse_cols(a);
  SymPairTensor out(n, t.sym_valence());
  std::vector<int> m(size_t(t.sym_valence()), 0);
  size_t mi = 0;
  do {
    for (int u = 0; u < n; ++u) {
      for (int v = u; v < n; ++v) {
        Scalar acc;
        // leading block: replace each distinct value once per occurrence
        for (size_t p = 0; p < m.size(); ++p) {
          if (p > 0 && m[p] == m[p - 1]) continue;
          long mult = 1;
          for (size_t q = p + 1; q < m.size() && m[q] == m[p]; ++q) ++mult;
          if (cols[m[p]].empty()) continue;
          std::vector<int> rep = m;
          for (const auto& [c, av] : cols[m[p]]) {
            rep[p] = c;
            std::vector<int> srt = rep;
            std::sort(srt.begin(), srt.end());
            acc += Scalar(Rational(mult)) * av * t.at(srt, u, v);
          }
        }
        for (const auto& [c, av] : cols[u]) acc += av * t.at(m, c, v);
        for (const auto& [c, av] : cols[v]) acc += av * t.at(m, u, c);
        if (!acc.is_zero()) out.flat(mi * out.pair_count() + out.pair_index(u, v)) = -acc;
      }
    }
    ++mi;
  } while (advance_multiset(m, n));
  return out;
}

SymPairTensor sym_derivative(const SymPairTensor& t,
                             const std::vector<ExactMatrix>& dir_action) {
  int n = t.dim();
  check_internal(int(dir_action.size()) == n, "need one action per direction");
  std::vector<SymPairTensor> deriv;
  deriv.reserve(size_t(n));
  for (int m = 0; m < n; ++m) deriv.push_back(so_action_sym(dir_action[size_t(m)], t));

  int a = t.sym_valence();
  SymPairTensor out(n, a + 1);
  Scalar avg(Rational(1, a + 1));
  std::vector<int> m(size_t(a) + 1, 0);
  size_t mi = 0;
  do {
    for (size_t p = 0; p < m.size(); ++p) {
      if (p > 0 && m[p] == m[p - 1]) continue;
      long mult = 1;
      for (size_t q = p + 1; q < m.size() && m[q] == m[p]; ++q) ++mult;
      std::vector<int> sub = m;
      sub.erase(sub.begin() + long(p));
      const SymPairTensor& d = deriv[size_t(m[p])];
      size_t row = multiset_rank(sub, n) * t.pair_count();
      size_t orow = mi * out.pair_count();
      Scalar w = Scalar(Rational(mult)) * avg;
      for (size_t pi = 0; pi < t.pair_count(); ++pi) {
        const Scalar& dv = d.flat(row + pi);
        if (!dv.is_zero()) out.flat(orow + pi) += w * dv;
      }
    }
    ++mi;
  } while (advance_multiset(m, n));
  return out;
}

SymPairTensor embed_sym(const SymPairTensor& t, const ExactMatrix& g) {
  int n = t.dim();
  check_internal(g.rows() == n && g.cols() == n, "metric dimension mismatch");
  int a = t.sym_valence();
  SymPairTensor out(n, a + 2);
  Scalar norm(Rational(2, long(a + 1) * (a + 2)));
  std::vector<int> m(size_t(a) + 2, 0);
  size_t mi = 0;
  do {
    // unordered pairs of distinct positions, grouped by values
    for (size_t p = 0; p < m.size(); ++p) {
      if (p > 0 && m[p] == m[p - 1]) continue;
      long mu = 1;
      for (size_t q = p + 1; q < m.size() && m[q] == m[p]; ++q) ++mu;
      for (size_t q = p; q < m.size(); ++q) {
        if (q > p && m[q] == m[q - 1]) continue;
        long w;
        if (q == p) {
          if (mu < 2) continue;
          w = mu * (mu - 1) / 2;
        } else {
          long nu = 1;
          for (size_t r = q + 1; r < m.size() && m[r] == m[q]; ++r) ++nu;
          w = mu * nu;
        }
        const Scalar& gv = g.at(m[p], m[q]);
        if (gv.is_zero()) continue;
        std::vector<int> sub = m;
        sub.erase(sub.begin() + long(q));
        sub.erase(sub.begin() + long(p));
        size_t row = multiset_rank(sub, n) * t.pair_count();
        size_t orow = mi * out.pair_count();
        Scalar c = norm * Scalar(Rational(w)) * gv;
        for (size_t pi = 0; pi < t.pair_count(); ++pi) {
          const Scalar& tv = t.flat(row + pi);
          if (!tv.is_zero()) out.flat(orow + pi) += c * tv;
        }
      }
    }
    ++mi;
  } while (advance_multiset(m, n));
  return out;
}

ExactMatrix diagonal_form(const SymPairTensor& t, const Vec& xi) {
  int n = t.dim();
  check_internal(int(xi.size()) == n, "vector dimension mismatch");
  ExactMatrix out(n, n);
  std::vector<int> m(size_t(t.sym_valence()), 0);
  size_t mi = 0;
  do {
    Scalar w(multiset_orderings(m));
    for (int v : m) w = w * xi[size_t(v)];
    if (!w.is_zero()) {
      size_t row = mi * t.pair_count();
      for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v) {
          const Scalar& tv = t.flat(row + t.pair_index(u, v));
          if (tv.is_zero()) continue;
          out.at(u, v) += w * tv;
          if (u != v) out.at(v, u) += w * tv;
        }
    }
    ++mi;
  } while (advance_multiset(m, n));
  return out;
}

Scalar eval_sym(const SymPairTensor& t, const Vec& xi, const Vec& x, const Vec& y) {
  ExactMatrix d = diagonal_form(t, xi);
  Scalar acc;
  for (int u = 0; u < t.dim(); ++u) {
    if (x[size_t(u)].is_zero()) continue;
    for (int v = 0; v < t.dim(); ++v) {
      if (d.at(u, v).is_zero() || y[size_t(v)].is_zero()) continue;
      acc += x[size_t(u)] * d.at(u, v) * y[size_t(v)];
    }
  }
  return acc;
}

SymPairTensor sym_from_dense(const CovariantTensor& t, int sym_valence) {
  int n = t.dim();
  check_internal(t.valence() == sym_valence + 2, "valence mismatch");
  std::vector<int> lead(size_t(sym_valence), 0);
  for (int i = 0; i < sym_valence; ++i) lead[size_t(i)] = i;
  check_internal(is_symmetric_in(t, lead), "dense tensor not symmetric in leading block");
  check_internal(is_symmetric_in(t, {sym_valence, sym_valence + 1}),
                 "dense tensor not symmetric in trailing pair");
  SymPairTensor out(n, sym_valence);
  std::vector<int> m(size_t(sym_valence), 0);
  std::vector<int> idx(size_t(sym_valence) + 2);
  size_t mi = 0;
  do {
    std::copy(m.begin(), m.end(), idx.begin());
    for (int u = 0; u < n; ++u)
      for (int v = u; v < n; ++v) {
        idx[size_t(sym_valence)] = u;
        idx[size_t(sym_valence) + 1] = v;
        out.flat(mi * out.pair_count() + out.pair_index(u, v)) = t.at(idx);
      }
    ++mi;
  } while (advance_multiset(m, n));
  return out;
}

CovariantTensor sym_to_dense(const SymPairTensor& t) {
  int a = t.sym_valence();
  CovariantTensor out(t.dim(), a + 2);
  MultiIndex mi(t.dim(), a + 2);
  size_t j = 0;
  do {
    std::vector<int> lead(mi.idx.begin(), mi.idx.begin() + a);
    std::sort(lead.begin(), lead.end());
    out.flat(j) = t.at(lead, mi.idx[size_t(a)], mi.idx[size_t(a) + 1]);
    ++j;
  } while (mi.advance());
  return out;
}

}  // namespace homjet
