#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homjet/homogeneous.hpp"

namespace homjet {

// One nonzero structure constant: [e_i, e_j] has component `value` on e_k,
// stored with i < j only.
struct BracketTerm {
  int i = 0;
  int j = 0;
  int k = 0;
  Scalar value;
};

// One nonzero lower-triangular metric entry (row >= col, indices follow the
// order of the m list).
struct MetricTerm {
  int row = 0;
  int col = 0;
  Scalar value;
};

// In-memory form of the line-oriented space definition text:
//   name <string>
//   d <squarefree field discriminant>
//   dim <algebra dimension>
//   h <indices...>            (may be empty)
//   m <indices...>
//   bracket <i> <j> <k> <scalar>
//   metric <row> <col> <scalar>
// Fixed field order, '#' starts a comment, scalars use the exact grammar.
struct SpaceDefinition {
  std::string name;
  unsigned long field_d = 1;
  int dim = 0;
  std::vector<int> h;
  std::vector<int> m;
  std::vector<BracketTerm> brackets;
  std::vector<MetricTerm> metric;
};

// Canonical text form; serialize(parse(t)) is a fixed point.
std::string serialize(const SpaceDefinition& def);

// Throws ParseError with "line N:" context on malformed input.
SpaceDefinition parse_definition(const std::string& text);

// Structure constants and metric exactly as written, no validation; the
// pieces feed both realize() and the per-check diagnostics of the CLI.
LieAlgebraData assemble_algebra(const SpaceDefinition& def);
ExactMatrix assemble_metric(const SpaceDefinition& def);

// Builds and validates the space described by the definition.
ReductiveSpace realize(const SpaceDefinition& def);

// Extracts the definition of an existing space (canonical term order).
SpaceDefinition definition_from_space(const ReductiveSpace& s, const std::string& name);

// FNV-1a 64-bit hash of a byte string, and the canonical-form checksum used
// to identify a space in reports (16 hex digits).
std::uint64_t fnv1a64(const std::string& bytes);
std::string definition_checksum(const SpaceDefinition& def);

}  // namespace homjet
