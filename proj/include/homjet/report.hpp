#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homjet/jacobi.hpp"
#include "homjet/stabilizer.hpp"

namespace homjet {

enum class ReportFormat { text, machine };

// Shared header of every report: name, canonical-form checksum, dimensions.
struct SpaceIdentity {
  std::string name;
  std::string checksum;
  int dim = 0;
  int h_dim = 0;
  unsigned long field_d = 1;
};

SpaceIdentity identify(const ReductiveSpace& s, const std::string& name);

// Stabilizer chain with curvature diagnostics.  Dims are printed for orders
// 0 .. k_s + 1; timing appears only in text format.
std::string render_singer_report(const ReductiveSpace& s, const SpaceIdentity& id,
                                 const StabilizerChain& chain, ReportFormat format,
                                 std::optional<double> seconds);

// Relation search outcome for one order, or a scan up to an order bound.
struct JacobiOutcome {
  int requested_order = 0;    // the order examined (scan: the bound)
  bool scanned = false;       // true when the minimal order was searched
  std::optional<int> found_order;
  std::optional<JacobiRelation> relation;
  std::optional<bool> witness_independent;  // osculating probe outcome
  std::optional<Scalar> root_ratio;         // order-4 relations only
};

std::string render_jacobi_report(const SpaceIdentity& id, const JacobiOutcome& outcome,
                                 unsigned long field_d, ReportFormat format,
                                 std::optional<double> seconds);

// One line per check; ok is the conjunction.
struct ValidationOutcome {
  struct Check {
    std::string name;
    bool passed = false;
    std::string detail;  // failure text, empty when passed
  };
  std::vector<Check> checks;
  bool ok() const;
};

std::string render_validate_report(const SpaceIdentity& id, const ValidationOutcome& outcome,
                                   ReportFormat format);

std::string render_catalog_report(ReportFormat format);

}  // namespace homjet
