#pragma once

#include <optional>
#include <vector>

#include "homjet/homogeneous.hpp"

namespace homjet {

// Basis of the metric skew-adjoint endomorphisms so(m, g): the n(n-1)/2
// matrices g^{-1} (E_ij - E_ji) for i < j.
std::vector<ExactMatrix> so_basis(const ExactMatrix& metric);

// Basis of the subalgebra annihilating the curvature derivatives up to order
// k under the tensor action; every returned element is re-verified exactly.
std::vector<ExactMatrix> g_k(const ReductiveSpace& s, int k);

// Same subspace computed from the symmetrized jets instead; exists to
// cross-check the two jet pipelines against each other.
std::vector<ExactMatrix> g_k_symmetrized(const ReductiveSpace& s, int k);

// Linearized isotropy action matrices, one per isotropy basis vector.
std::vector<ExactMatrix> isotropy_image(const ReductiveSpace& s);

struct StabilizerChain {
  struct Level {
    int order = 0;
    std::vector<ExactMatrix> basis;
    int dim() const { return int(basis.size()); }
  };
  std::vector<Level> levels;  // orders 0 .. singer+2
  int singer = 0;
};

// First order where the stabilizer chain stops shrinking, with the chain
// itself; stabilization is re-probed two orders past the stopping point.
// order_cap lowers the built-in search bound; exceeding it is an internal
// error, the chain never fails to stabilize below the default bound.
StabilizerChain singer_invariant(const ReductiveSpace& s,
                                 std::optional<int> order_cap = std::nullopt);

bool matrix_in_span(const std::vector<ExactMatrix>& span, const ExactMatrix& x);
bool same_matrix_span(const std::vector<ExactMatrix>& a, const std::vector<ExactMatrix>& b);

}  // namespace homjet
