#include "homjet/tensor.hpp"

#include <algorithm>

namespace homjet {

namespace {

size_t pow_size(int dim, int valence) {
  size_t s = 1;
  for (int i = 0; i < valence; ++i) s *= size_t(dim);
  return s;
}

// Sparse row view of an endomorphism matrix: rows[r] = {(c, a[r][c]) != 0}.
std::vector<std::vector<std::pair<int, Scalar>>> sparse_rows(const ExactMatrix& a) {
  std::vector<std::vector<std::pair<int, Scalar>>> rows(a.rows());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      if (!a.at(r, c).is_zero()) rows[r].emplace_back(c, a.at(r, c));
  return rows;
}

} // namespace

CovariantTensor::CovariantTensor(int dim, int valence)
    : m_dim(dim), m_valence(valence), m_comp(pow_size(dim, valence)) {}

size_t CovariantTensor::flat_index(const std::vector<int>& idx) const {
  check_internal(int(idx.size()) == m_valence, "tensor index width mismatch");
  size_t f = 0;
  for (int i : idx) {
    check_internal(0 <= i && i < m_dim, "tensor index out of range");
    f = f * m_dim + size_t(i);
  }
  return f;
}

bool CovariantTensor::is_zero() const {
  for (const auto& e : m_comp)
    if (!e.is_zero()) return false;
  return true;
}

CovariantTensor operator+(const CovariantTensor& x, const CovariantTensor& y) {
  check_internal(x.m_dim == y.m_dim && x.m_valence == y.m_valence, "tensor sum shape mismatch");
  CovariantTensor out = x;
  for (size_t i = 0; i < out.m_comp.size(); ++i) out.m_comp[i] += y.m_comp[i];
  return out;
}

CovariantTensor operator-(const CovariantTensor& x, const CovariantTensor& y) {
  check_internal(x.m_dim == y.m_dim && x.m_valence == y.m_valence,
                 "tensor difference shape mismatch");
  CovariantTensor out = x;
  for (size_t i = 0; i < out.m_comp.size(); ++i) out.m_comp[i] -= y.m_comp[i];
  return out;
}

CovariantTensor operator*(const Scalar& c, const CovariantTensor& t) {
  CovariantTensor out = t;
  for (auto& e : out.m_comp) e *= c;
  return out;
}

bool is_skew_adjoint(const ExactMatrix& a, const ExactMatrix& metric) {
  return (metric * a).is_antisymmetric();
}

CovariantTensor symmetrize(const CovariantTensor& t, const std::vector<int>& slots) {
  const int k = int(slots.size());
  if (k <= 1) return t;
  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;
  CovariantTensor out(t.dim(), t.valence());
  long fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  const Scalar inv_count = Scalar(1) / Scalar(fact);
  MultiIndex mi(t.dim(), t.valence());
  std::vector<int> src(t.valence());
  do {
    Scalar sum(0);
    std::sort(perm.begin(), perm.end());
    do {
      src = mi.idx;
      for (int p = 0; p < k; ++p) src[slots[p]] = mi.idx[slots[perm[p]]];
      const Scalar& v = t.at(src);
      if (!v.is_zero()) sum += v;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!sum.is_zero()) out.at(mi.idx) = sum * inv_count;
  } while (mi.advance());
  return out;
}

bool is_symmetric_in(const CovariantTensor& t, const std::vector<int>& slots) {
  // Invariance under adjacent transpositions generates the full group.
  for (size_t a = 0; a + 1 < slots.size(); ++a) {
    MultiIndex mi(t.dim(), t.valence());
    std::vector<int> swapped(t.valence());
    do {
      swapped = mi.idx;
      std::swap(swapped[slots[a]], swapped[slots[a + 1]]);
      if (t.at(mi.idx) != t.at(swapped)) return false;
    } while (mi.advance());
  }
  return true;
}

CovariantTensor so_action(const ExactMatrix& a, const CovariantTensor& t) {
  check_internal(a.rows() == t.dim() && a.cols() == t.dim(), "so_action dimension mismatch");
  const int n = t.dim();
  const int r = t.valence();
  auto rows = sparse_rows(a);
  std::vector<size_t> stride(r, 1);
  for (int s = r - 2; s >= 0; --s) stride[s] = stride[s + 1] * size_t(n);
  CovariantTensor out(n, r);
  MultiIndex mi(n, r);
  size_t j = 0;
  do {
    const Scalar& v = t.flat(j);
    if (!v.is_zero()) {
      for (int s = 0; s < r; ++s) {
        for (const auto& [c, av] : rows[mi.idx[s]]) {
          size_t target = j + (size_t(c) - size_t(mi.idx[s])) * stride[s];
          out.flat(target) -= av * v;
        }
      }
    }
    ++j;
  } while (mi.advance());
  return out;
}

CovariantTensor metric_embed(const CovariantTensor& t, const ExactMatrix& g, int sym_prefix) {
  const int k = sym_prefix;
  const int trailing = t.valence() - k;
  check_internal(k >= 0 && trailing >= 0, "metric_embed bad prefix");
  check_internal(g.rows() == t.dim() || t.valence() == 0, "metric_embed dimension mismatch");
  const int n = g.rows();
  CovariantTensor out(n, t.valence() + 2);
  const Scalar weight = Scalar(Rational(2)) / Scalar(Rational(long(k + 1) * (k + 2)));
  MultiIndex mi(n, t.valence() + 2);
  std::vector<int> sub(t.valence());
  do {
    Scalar sum(0);
    for (int i = 0; i < k + 2; ++i)
      for (int j = i + 1; j < k + 2; ++j) {
        const Scalar& ge = g.at(mi.idx[i], mi.idx[j]);
        if (ge.is_zero()) continue;
        int p = 0;
        for (int s = 0; s < k + 2; ++s)
          if (s != i && s != j) sub[p++] = mi.idx[s];
        for (int s = 0; s < trailing; ++s) sub[p++] = mi.idx[k + 2 + s];
        const Scalar& tv = t.at(sub);
        if (!tv.is_zero()) sum += ge * tv;
      }
    if (!sum.is_zero()) out.at(mi.idx) = weight * sum;
  } while (mi.advance());
  return out;
}

CovariantTensor tensor_product(const CovariantTensor& x, const CovariantTensor& y) {
  check_internal(x.dim() == y.dim() || x.valence() == 0 || y.valence() == 0,
                 "tensor_product dimension mismatch");
  int n = x.valence() > 0 ? x.dim() : y.dim();
  CovariantTensor out(n, x.valence() + y.valence());
  size_t ys = y.size();
  for (size_t i = 0; i < x.size(); ++i) {
    if (x.flat(i).is_zero()) continue;
    for (size_t j = 0; j < ys; ++j)
      if (!y.flat(j).is_zero()) out.flat(i * ys + j) = x.flat(i) * y.flat(j);
  }
  return out;
}

CovariantTensor metric_as_tensor(const ExactMatrix& g) {
  CovariantTensor t(g.rows(), 2);
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) t.at({i, j}) = g.at(i, j);
  return t;
}

Scalar eval_tensor(const CovariantTensor& t, const std::vector<Vec>& vectors) {
  check_internal(int(vectors.size()) == t.valence(), "eval_tensor arity mismatch");
  Scalar total(0);
  MultiIndex mi(t.dim(), t.valence());
  size_t j = 0;
  do {
    const Scalar& v = t.flat(j);
    if (!v.is_zero()) {
      Scalar prod = v;
      for (int s = 0; s < t.valence() && !prod.is_zero(); ++s) prod *= vectors[s][mi.idx[s]];
      total += prod;
    }
    ++j;
  } while (mi.advance());
  return total;
}

Vec flatten(const CovariantTensor& t) {
  Vec v(t.size());
  for (size_t i = 0; i < t.size(); ++i) v[i] = t.flat(i);
  return v;
}

CombinationResult solve_tensor_combination(const CovariantTensor& target,
                                           const std::vector<CovariantTensor>& basis) {
  const size_t rows = target.size();
  ExactMatrix a(int(rows), int(basis.size()));
  for (size_t b = 0; b < basis.size(); ++b) {
    check_internal(basis[b].size() == rows, "combination basis shape mismatch");
    for (size_t i = 0; i < rows; ++i) a.at(int(i), int(b)) = basis[b].flat(i);
  }
  LinearSolve s = solve_linear(a, flatten(target));
  CombinationResult out;
  out.unique = s.kernel.empty();
  if (s.solution) out.coeffs = *s.solution;
  return out;
}

} // namespace homjet
