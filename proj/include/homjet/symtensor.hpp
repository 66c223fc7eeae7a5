#pragma once

#include <vector>

#include "homjet/linalg.hpp"
#include "homjet/tensor.hpp"

namespace homjet {

// Number of size-k multisets over an n-letter alphabet, i.e. C(n+k-1, k).
size_t multiset_count(int dim, int k);

// Rank of a sorted (non-decreasing) multiset in lexicographic order.
size_t multiset_rank(const std::vector<int>& sorted, int dim);
std::vector<int> multiset_unrank(size_t rank, int k, int dim);

// a! / prod(multiplicities!), the number of distinct orderings of the multiset.
Rational multiset_orderings(const std::vector<int>& sorted);

// Tensor on R^dim that is symmetric in `sym_valence` leading slots and in a
// trailing pair of slots, stored with one entry per (multiset, unordered pair).
class SymPairTensor {
public:
  SymPairTensor() : m_dim(0), m_sym(0) {}
  SymPairTensor(int dim, int sym_valence);

  int dim() const { return m_dim; }
  int sym_valence() const { return m_sym; }
  size_t sym_count() const { return m_sym_count; }
  size_t pair_count() const { return size_t(m_dim) * (m_dim + 1) / 2; }
  size_t size() const { return m_data.size(); }

  size_t pair_index(int u, int v) const;  // any order
  Scalar& at(const std::vector<int>& multiset, int u, int v);
  const Scalar& at(const std::vector<int>& multiset, int u, int v) const;
  Scalar& flat(size_t i) { return m_data[i]; }
  const Scalar& flat(size_t i) const { return m_data[i]; }

  bool is_zero() const;
  Vec flatten() const { return m_data; }

  SymPairTensor operator+(const SymPairTensor& o) const;
  SymPairTensor operator-(const SymPairTensor& o) const;
  bool operator==(const SymPairTensor& o) const;

private:
  int m_dim, m_sym;
  size_t m_sym_count = 0;
  std::vector<Scalar> m_data;
};

SymPairTensor operator*(const Scalar& c, const SymPairTensor& t);

// Natural so-action on every slot, matching so_action on the dense form.
SymPairTensor so_action_sym(const ExactMatrix& a, const SymPairTensor& t);

// One covariant-derivative step followed by symmetrization of the new slot
// into the leading block.  dir_action[m] acts on tensors contracted with e_m.
SymPairTensor sym_derivative(const SymPairTensor& t,
                             const std::vector<ExactMatrix>& dir_action);

// Symmetrized product with the metric on the leading block: two new leading
// slots, averaged over all placements of the metric pair.
SymPairTensor embed_sym(const SymPairTensor& t, const ExactMatrix& g);

// Contraction of all leading slots with xi; entries are the values of the
// trailing symmetric pair, as a matrix.
ExactMatrix diagonal_form(const SymPairTensor& t, const Vec& xi);

Scalar eval_sym(const SymPairTensor& t, const Vec& xi, const Vec& x, const Vec& y);

// Conversion to and from the dense form; from_dense checks the symmetries.
SymPairTensor sym_from_dense(const CovariantTensor& t, int sym_valence);
CovariantTensor sym_to_dense(const SymPairTensor& t);

}  // namespace homjet
