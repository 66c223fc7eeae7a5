#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "homjet/homogeneous.hpp"
#include "homjet/symtensor.hpp"

namespace homjet {

// Symmetrized curvature jet: the order-k covariant derivative with the k
// derivative slots and the two inner curvature slots fully symmetrized,
// stored compressed as Sym^{k+2} x Sym^2.
struct SymJet {
  int order = 0;
  SymPairTensor tensor;
};

// Value of (nabla^j R)(dirs; a, b, c, d) on explicit vectors, computed by the
// connection recursion without materializing any derivative tensor.  Serves
// as the independent oracle for the symmetrized pipeline at every order.
Scalar nabla_r_value(const ReductiveSpace& s, const std::vector<Vec>& dirs, const Vec& a,
                     const Vec& b, const Vec& c, const Vec& d);

// Jets of orders 0..k.  Every level is verified against nabla_r_value on
// five deterministic pseudo-random vector triples.
std::vector<SymJet> sym_jet_chain(const ReductiveSpace& s, int k);
SymJet sym_jet(const ReductiveSpace& s, int k);

// Linear relation expressing the jet of order k+1 through lower jets of the
// same parity, each carried up by metric embeddings:
//   jet(k+1) = sum over j in {k-1, k-3, ...} of c_j * embed^{(k+1-j)/2}(jet(j))
struct JacobiRelation {
  int order = 0;
  std::map<int, Scalar> coefficients;
  bool minimal = false;  // the embedded lower jets are linearly independent
};

std::optional<JacobiRelation> find_relation(const ReductiveSpace& s, int k);
std::optional<JacobiRelation> find_relation(const ReductiveSpace& s,
                                            const std::vector<SymJet>& chain, int k);

std::optional<std::pair<int, JacobiRelation>> min_relation_order(const ReductiveSpace& s,
                                                                 int k_max);

enum class OsculatingProbe { independent, dependent_for_all_samples };

// Tests exact linear independence of the operator family
//   { <xi,xi>^i * jet(k-1-2i)(xi, ..., xi; ., .) : i >= 0 }
// over rational sample directions; returns independent on the first witness.
OsculatingProbe osculating_probe(const ReductiveSpace& s, int k, int samples);

// For an order-4 relation: the ratio of the roots of x^2 - c3 x - c1,
// normalized to have magnitude >= 1.  Invariant under metric rescaling.
Scalar scale_invariant_signature(const JacobiRelation& rel, unsigned long field_d);

}  // namespace homjet
