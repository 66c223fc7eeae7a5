#include "homjet/report.hpp"

#include <cstdio>
#include <sstream>

#include "homjet/catalog.hpp"
#include "homjet/spacefile.hpp"

namespace homjet {

namespace {

std::string matrix_entries(const ExactMatrix& m) {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) {
        if (!first) out << " ";
        out << "[" << i << "," << j << "]=" << m.at(i, j).str();
        first = false;
      }
  if (first) out << "0";
  return out.str();
}

std::string seconds_line(std::optional<double> seconds) {
  if (!seconds) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "elapsed: %.2fs\n", *seconds);
  return buf;
}

}  // namespace

SpaceIdentity identify(const ReductiveSpace& s, const std::string& name) {
  SpaceIdentity id;
  id.name = name;
  id.checksum = definition_checksum(definition_from_space(s, name));
  id.dim = s.dim();
  id.h_dim = static_cast<int>(s.h_indices().size());
  id.field_d = s.algebra().field_d();
  return id;
}

std::string render_singer_report(const ReductiveSpace& s, const SpaceIdentity& id,
                                 const StabilizerChain& chain, ReportFormat format,
                                 std::optional<double> seconds) {
  std::optional<Scalar> einstein = s.einstein_factor();
  int printed_levels = chain.singer + 2;  // orders 0 .. k_s + 1
  std::ostringstream out;
  if (format == ReportFormat::machine) {
    out << "space " << id.name << "\n";
    out << "checksum " << id.checksum << "\n";
    out << "dim " << id.dim << "\n";
    out << "h-dim " << id.h_dim << "\n";
    out << "field-d " << id.field_d << "\n";
    out << "einstein " << (einstein ? "yes" : "no") << "\n";
    if (einstein) out << "einstein-lambda " << einstein->str() << "\n";
    out << "singer " << chain.singer << "\n";
    out << "g-dims";
    for (int k = 0; k < printed_levels; ++k) out << " " << chain.levels[size_t(k)].dim();
    out << "\n";
    for (int k = 0; k < printed_levels; ++k)
      for (size_t b = 0; b < chain.levels[size_t(k)].basis.size(); ++b)
        out << "g" << k << "-basis " << matrix_entries(chain.levels[size_t(k)].basis[b]) << "\n";
    return out.str();
  }
  out << "space: " << id.name << "  (dim " << id.dim << ", isotropy dim " << id.h_dim
      << ", field d = " << id.field_d << ")\n";
  out << "checksum: " << id.checksum << "\n";
  if (einstein)
    out << "einstein: yes, lambda = " << einstein->str() << "\n";
  else
    out << "einstein: no\n";
  out << "singer invariant: " << chain.singer << "\n";
  out << "stabilizer chain:\n";
  for (int k = 0; k < printed_levels; ++k) {
    const auto& level = chain.levels[size_t(k)];
    out << "  g(" << k << "): dim " << level.dim() << "\n";
    for (const ExactMatrix& b : level.basis) out << "    " << matrix_entries(b) << "\n";
  }
  out << seconds_line(seconds);
  return out.str();
}

std::string render_jacobi_report(const SpaceIdentity& id, const JacobiOutcome& outcome,
                                 unsigned long field_d, ReportFormat format,
                                 std::optional<double> seconds) {
  std::ostringstream out;
  bool has_nonzero = false;
  if (outcome.relation)
    for (const auto& [j, c] : outcome.relation->coefficients)
      if (!c.is_zero()) has_nonzero = true;
  (void)field_d;
  if (format == ReportFormat::machine) {
    out << "space " << id.name << "\n";
    out << "checksum " << id.checksum << "\n";
    out << (outcome.scanned ? "scan-bound " : "order ") << outcome.requested_order << "\n";
    if (!outcome.found_order) {
      out << "relation none\n";
      return out.str();
    }
    out << "relation-order " << *outcome.found_order << "\n";
    out << "minimal " << (outcome.relation->minimal ? "yes" : "no") << "\n";
    for (auto it = outcome.relation->coefficients.rbegin();
         it != outcome.relation->coefficients.rend(); ++it)
      out << "c" << it->first << " " << it->second.str() << "\n";
    if (outcome.witness_independent)
      out << "osculating-witness " << (*outcome.witness_independent ? "yes" : "no") << "\n";
    if (outcome.root_ratio) out << "root-ratio " << outcome.root_ratio->str() << "\n";
    out << "scale-dependent " << (has_nonzero ? "yes" : "no") << "\n";
    return out.str();
  }
  out << "space: " << id.name << "  (dim " << id.dim << ", field d = " << id.field_d << ")\n";
  out << "checksum: " << id.checksum << "\n";
  if (outcome.scanned)
    out << "scanned orders 0 .. " << outcome.requested_order << "\n";
  else
    out << "examined order " << outcome.requested_order << "\n";
  if (!outcome.found_order) {
    out << "relation: none\n";
    out << seconds_line(seconds);
    return out.str();
  }
  out << "relation: order " << *outcome.found_order
      << (outcome.relation->minimal ? " (minimal: lower jets independent)" : " (not minimal)")
      << "\n";
  if (outcome.relation->coefficients.empty()) {
    out << "  jet(" << *outcome.found_order + 1 << ") = 0\n";
  } else {
    out << "  jet(" << *outcome.found_order + 1 << ") =";
    bool first = true;
    for (auto it = outcome.relation->coefficients.rbegin();
         it != outcome.relation->coefficients.rend(); ++it) {
      out << (first ? " " : " + ") << "(" << it->second.str() << ")*embed^"
          << (*outcome.found_order + 1 - it->first) / 2 << "(jet(" << it->first << "))";
      first = false;
    }
    out << "\n";
    for (auto it = outcome.relation->coefficients.rbegin();
         it != outcome.relation->coefficients.rend(); ++it)
      out << "  c" << it->first << " = " << it->second.str() << "\n";
  }
  if (outcome.witness_independent)
    out << "osculating witness: "
        << (*outcome.witness_independent ? "found (lower jets independent along a sample direction)"
                                         : "not found among the samples")
        << "\n";
  if (outcome.root_ratio) out << "root ratio: " << outcome.root_ratio->str() << "\n";
  if (has_nonzero)
    out << "note: coefficient values depend on the metric scale; rescaling g by t divides each "
           "c_j by t^((k+1-j)/2)\n";
  out << seconds_line(seconds);
  return out.str();
}

bool ValidationOutcome::ok() const {
  for (const Check& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string render_validate_report(const SpaceIdentity& id, const ValidationOutcome& outcome,
                                   ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::machine) {
    out << "space " << id.name << "\n";
    out << "checksum " << id.checksum << "\n";
    for (const auto& c : outcome.checks) {
      out << "check " << c.name << " " << (c.passed ? "ok" : "fail") << "\n";
      if (!c.passed && !c.detail.empty()) out << "detail " << c.detail << "\n";
    }
    out << "result " << (outcome.ok() ? "ok" : "fail") << "\n";
    return out.str();
  }
  out << "space: " << id.name << "  (dim " << id.dim << ", field d = " << id.field_d << ")\n";
  out << "checksum: " << id.checksum << "\n";
  for (const auto& c : outcome.checks) {
    out << (c.passed ? "  ok    " : "  FAIL  ") << c.name;
    if (!c.passed && !c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
  }
  out << (outcome.ok() ? "all checks passed\n" : "validation failed\n");
  return out.str();
}

std::string render_catalog_report(ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::machine) {
    for (const CatalogEntry& e : catalog_list())
      out << e.id << "\t" << e.dim_label << "\t" << (e.parameter.empty() ? "-" : e.parameter)
          << "\n";
    return out.str();
  }
  out << "built-in spaces:\n";
  for (const CatalogEntry& e : catalog_list()) {
    out << "  " << e.id;
    if (!e.parameter.empty()) out << " (" << e.parameter << ")";
    out << "  dim " << e.dim_label << "\n";
    out << "      " << e.description << "\n";
  }
  return out.str();
}

}  // namespace homjet
