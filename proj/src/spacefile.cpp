#include "homjet/spacefile.hpp"

#include <algorithm>
#include <sstream>

#include "homjet/error.hpp"

namespace homjet {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

int parse_index(const Line& line, size_t pos, const char* what) {
  const std::string& t = line.tokens[pos];
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
    fail(line.number, std::string(what) + " must be a nonnegative integer, got '" + t + "'");
  if (t.size() > 6) fail(line.number, std::string(what) + " out of range: '" + t + "'");
  return std::atoi(t.c_str());
}

Scalar parse_value(const Line& line, size_t pos, unsigned long d) {
  try {
    return parse_scalar(line.tokens[pos], d);
  } catch (const ParseError& e) {
    fail(line.number, std::string("bad scalar '") + line.tokens[pos] + "': " + e.what());
  }
}

}  // namespace

std::string serialize(const SpaceDefinition& def) {
  std::ostringstream out;
  out << "# homjet space definition\n";
  out << "name " << def.name << "\n";
  out << "d " << def.field_d << "\n";
  out << "dim " << def.dim << "\n";
  out << "h";
  for (int i : def.h) out << " " << i;
  out << "\n";
  out << "m";
  for (int i : def.m) out << " " << i;
  out << "\n";
  std::vector<BracketTerm> brackets = def.brackets;
  std::sort(brackets.begin(), brackets.end(), [](const BracketTerm& a, const BracketTerm& b) {
    return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
  });
  for (const BracketTerm& t : brackets)
    out << "bracket " << t.i << " " << t.j << " " << t.k << " " << t.value.str() << "\n";
  std::vector<MetricTerm> metric = def.metric;
  std::sort(metric.begin(), metric.end(), [](const MetricTerm& a, const MetricTerm& b) {
    return std::tie(a.row, a.col) < std::tie(b.row, b.col);
  });
  for (const MetricTerm& t : metric)
    out << "metric " << t.row << " " << t.col << " " << t.value.str() << "\n";
  return out.str();
}

SpaceDefinition parse_definition(const std::string& text) {
  std::vector<Line> lines = tokenize(text);
  size_t at = 0;
  auto next = [&](const char* field) -> const Line& {
    if (at >= lines.size())
      throw ParseError("line " + std::to_string(lines.empty() ? 1 : lines.back().number) +
                       ": unexpected end of file, expected field '" + field + "'");
    return lines[at];
  };
  auto expect = [&](const char* field, size_t min_tokens) -> const Line& {
    const Line& line = next(field);
    if (line.tokens[0] != field)
      fail(line.number, "expected field '" + std::string(field) + "', got '" + line.tokens[0] +
                            "' (fields are ordered: name, d, dim, h, m, bracket..., metric...)");
    if (line.tokens.size() < min_tokens)
      fail(line.number, "field '" + std::string(field) + "' needs at least " +
                            std::to_string(min_tokens - 1) + " value(s)");
    ++at;
    return line;
  };

  SpaceDefinition def;
  {
    const Line& line = expect("name", 2);
    for (size_t i = 1; i < line.tokens.size(); ++i) {
      if (i > 1) def.name += " ";
      def.name += line.tokens[i];
    }
  }
  {
    const Line& line = expect("d", 2);
    if (line.tokens.size() != 2) fail(line.number, "field 'd' takes exactly one value");
    def.field_d = static_cast<unsigned long>(parse_index(line, 1, "d"));
    if (def.field_d == 0) fail(line.number, "d must be positive");
  }
  {
    const Line& line = expect("dim", 2);
    if (line.tokens.size() != 2) fail(line.number, "field 'dim' takes exactly one value");
    def.dim = parse_index(line, 1, "dim");
    if (def.dim <= 0) fail(line.number, "dim must be positive");
  }
  {
    const Line& line = expect("h", 1);
    for (size_t i = 1; i < line.tokens.size(); ++i) {
      int v = parse_index(line, i, "h index");
      if (v >= def.dim) fail(line.number, "h index " + std::to_string(v) + " exceeds dim");
      def.h.push_back(v);
    }
  }
  {
    const Line& line = expect("m", 2);
    for (size_t i = 1; i < line.tokens.size(); ++i) {
      int v = parse_index(line, i, "m index");
      if (v >= def.dim) fail(line.number, "m index " + std::to_string(v) + " exceeds dim");
      def.m.push_back(v);
    }
  }
  while (at < lines.size() && lines[at].tokens[0] == "bracket") {
    const Line& line = lines[at++];
    if (line.tokens.size() != 5)
      fail(line.number, "bracket takes four values: i j k scalar");
    BracketTerm t;
    t.i = parse_index(line, 1, "bracket i");
    t.j = parse_index(line, 2, "bracket j");
    t.k = parse_index(line, 3, "bracket k");
    if (t.i >= t.j) fail(line.number, "bracket requires i < j (antisymmetry fills the rest)");
    if (t.j >= def.dim || t.k >= def.dim) fail(line.number, "bracket index exceeds dim");
    t.value = parse_value(line, 4, def.field_d);
    for (const BracketTerm& prev : def.brackets)
      if (prev.i == t.i && prev.j == t.j && prev.k == t.k)
        fail(line.number, "duplicate bracket entry");
    def.brackets.push_back(std::move(t));
  }
  while (at < lines.size() && lines[at].tokens[0] == "metric") {
    const Line& line = lines[at++];
    if (line.tokens.size() != 4) fail(line.number, "metric takes three values: row col scalar");
    MetricTerm t;
    t.row = parse_index(line, 1, "metric row");
    t.col = parse_index(line, 2, "metric col");
    int n = static_cast<int>(def.m.size());
    if (t.row >= n || t.col >= n)
      fail(line.number, "metric index exceeds the m dimension " + std::to_string(n));
    if (t.col > t.row) fail(line.number, "metric is stored lower-triangular: row >= col");
    t.value = parse_value(line, 3, def.field_d);
    for (const MetricTerm& prev : def.metric)
      if (prev.row == t.row && prev.col == t.col) fail(line.number, "duplicate metric entry");
    def.metric.push_back(std::move(t));
  }
  if (at < lines.size())
    fail(lines[at].number, "unexpected field '" + lines[at].tokens[0] + "'");
  if (def.metric.empty()) throw ParseError("definition has no metric entries");
  return def;
}

LieAlgebraData assemble_algebra(const SpaceDefinition& def) {
  LieAlgebraData g(def.dim, def.field_d);
  for (int i = 0; i < def.dim; ++i)
    for (int j = i + 1; j < def.dim; ++j) {
      Vec v(static_cast<size_t>(def.dim));
      bool any = false;
      for (const BracketTerm& t : def.brackets)
        if (t.i == i && t.j == j) {
          v[size_t(t.k)] = t.value;
          any = true;
        }
      if (any) g.set_bracket(i, j, v);
    }
  return g;
}

ExactMatrix assemble_metric(const SpaceDefinition& def) {
  int n = static_cast<int>(def.m.size());
  ExactMatrix metric(n, n);
  for (const MetricTerm& t : def.metric) {
    metric.at(t.row, t.col) = t.value;
    metric.at(t.col, t.row) = t.value;
  }
  return metric;
}

ReductiveSpace realize(const SpaceDefinition& def) {
  LieAlgebraData g = assemble_algebra(def);
  g.validate();
  return ReductiveSpace::create(g, def.h, def.m, assemble_metric(def));
}

SpaceDefinition definition_from_space(const ReductiveSpace& s, const std::string& name) {
  SpaceDefinition def;
  def.name = name;
  const LieAlgebraData& g = s.algebra();
  def.field_d = g.field_d();
  def.dim = g.dim();
  def.h = s.h_indices();
  def.m = s.m_indices();
  for (int i = 0; i < def.dim; ++i)
    for (int j = i + 1; j < def.dim; ++j) {
      Vec v = g.bracket_basis(i, j);
      for (int k = 0; k < def.dim; ++k)
        if (!v[size_t(k)].is_zero()) def.brackets.push_back({i, j, k, v[size_t(k)]});
    }
  int n = s.dim();
  for (int row = 0; row < n; ++row)
    for (int col = 0; col <= row; ++col)
      if (!s.metric().at(row, col).is_zero())
        def.metric.push_back({row, col, s.metric().at(row, col)});
  return def;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string definition_checksum(const SpaceDefinition& def) {
  std::uint64_t hash = fnv1a64(serialize(def));
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[size_t(i)] = digits[hash & 0xf];
    hash >>= 4;
  }
  return out;
}

}  // namespace homjet
