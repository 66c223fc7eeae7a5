#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homjet/homogeneous.hpp"

namespace homjet {

// Invariants recorded with each built-in space; pinned by the regression suite.
struct ExpectedResults {
  int singer = -1;
  std::vector<int> stabilizer_dims;  // dims of g(0) .. g(singer + 1)
  int relation_order = -1;           // minimal linear relation order
};

struct CatalogEntry {
  std::string id;
  std::string description;
  std::string dim_label;  // dimension of m; "n" for the torus family
  std::string parameter;  // builder parameter, empty when none
  ExpectedResults expected;
};

// Flag space SU(3)/T^2 with the normal metric; basis scalars live in Q(sqrt(2)).
ReductiveSpace build_m6();

// Berger space: SO(5)/SO(3) with so(3) embedded irreducibly via its action on
// traceless symmetric 3x3 matrices, normal trace-form metric.
ReductiveSpace build_v1();

// Wilking space (SO(3) x SU(3))/U(2) with the product metric
// -(c/18)*K_so3 - (1/12)*K_su3; c = 3/2 is the bi-invariant normal metric.
ReductiveSpace build_v3(const Scalar& c);

// Kaplan H-type nilpotent group: quaternions plus a 2-dimensional center.
ReductiveSpace build_kaplan();

ReductiveSpace build_flat_torus(int n);
ReductiveSpace build_biinvariant_su2();

const std::vector<CatalogEntry>& catalog_list();

// Accepts m6, v1, v3, kaplan-n6, bi-invariant-su2, flat-torus-<n>.
// wilking_c overrides the default c = 3/2 and is only valid for v3.
ReductiveSpace build_by_id(const std::string& id,
                           const std::optional<Scalar>& wilking_c = std::nullopt);

// Same algebra and split with metric lambda * g; lambda must be positive.
ReductiveSpace scale_metric(const ReductiveSpace& s, const Scalar& lambda);

}  // namespace homjet
