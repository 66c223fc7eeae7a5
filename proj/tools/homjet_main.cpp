#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "homjet/catalog.hpp"
#include "homjet/error.hpp"
#include "homjet/jacobi.hpp"
#include "homjet/report.hpp"
#include "homjet/spacefile.hpp"
#include "homjet/stabilizer.hpp"

namespace homjet {
namespace {

struct CommandLine {
  std::string command;
  std::vector<std::string> positional;
  ReportFormat format = ReportFormat::text;
  std::optional<Rational> metric_scale;
  std::optional<Scalar> wilking_c;
  std::optional<int> max_order;
  std::optional<int> order;
  std::optional<int> scan;
};

int parse_count(const std::string& flag, const std::string& text) {
  if (text.empty() || text.size() > 3) throw ValidationError(flag + " expects a small order");
  for (char c : text)
    if (c < '0' || c > '9') throw ValidationError(flag + " expects a nonnegative integer");
  return std::stoi(text);
}

const std::string& positional(const CommandLine& cl, size_t at, const char* what) {
  if (cl.positional.size() <= at) throw ValidationError(std::string("missing ") + what);
  return cl.positional[at];
}

// A space reference is a definition file when it exists on disk, otherwise a
// catalog identifier.  The metric scale applies to the extracted definition,
// so every later computation sees the rescaled metric.
struct ResolvedSpace {
  SpaceDefinition def;
  std::string name;
};

ResolvedSpace resolve_space(const CommandLine& cl, const std::string& ref) {
  ResolvedSpace r;
  if (std::filesystem::exists(ref)) {
    if (cl.wilking_c) throw ValidationError("--wilking-c applies to the catalog id v3 only");
    std::ifstream in(ref, std::ios::binary);
    if (!in) throw ValidationError("cannot read file: " + ref);
    std::stringstream buf;
    buf << in.rdbuf();
    r.def = parse_definition(buf.str());
    r.name = r.def.name;
  } else {
    if (ref.find('/') != std::string::npos) throw ValidationError("file not found: " + ref);
    r.def = definition_from_space(build_by_id(ref, cl.wilking_c), ref);
    r.name = ref;
  }
  if (cl.metric_scale) {
    if (sgn(*cl.metric_scale) <= 0) throw ValidationError("--metric-scale must be positive");
    for (MetricTerm& t : r.def.metric) t.value = Scalar(*cl.metric_scale) * t.value;
  }
  return r;
}

double elapsed_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_singer(const CommandLine& cl) {
  ResolvedSpace r = resolve_space(cl, positional(cl, 0, "space"));
  ReductiveSpace s = realize(r.def);
  auto t0 = std::chrono::steady_clock::now();
  StabilizerChain chain = singer_invariant(s, cl.max_order);
  std::cout << render_singer_report(s, identify(s, r.name), chain, cl.format, elapsed_since(t0));
  return 0;
}

int cmd_jacobi(const CommandLine& cl) {
  if (cl.order.has_value() == cl.scan.has_value())
    throw ValidationError("jacobi needs exactly one of --order or --scan");
  ResolvedSpace r = resolve_space(cl, positional(cl, 0, "space"));
  ReductiveSpace s = realize(r.def);
  auto t0 = std::chrono::steady_clock::now();
  JacobiOutcome out;
  if (cl.scan) {
    out.requested_order = *cl.scan;
    out.scanned = true;
    if (auto hit = min_relation_order(s, *cl.scan)) {
      out.found_order = hit->first;
      out.relation = hit->second;
    }
  } else {
    out.requested_order = *cl.order;
    if (auto rel = find_relation(s, *cl.order)) {
      out.found_order = *cl.order;
      out.relation = *rel;
    }
  }
  if (out.relation) {
    if (!out.relation->coefficients.empty())
      out.witness_independent =
          osculating_probe(s, *out.found_order, 5) == OsculatingProbe::independent;
    if (out.relation->order == 4 && out.relation->coefficients.count(3) &&
        out.relation->coefficients.count(1)) {
      try {
        out.root_ratio = scale_invariant_signature(*out.relation, s.algebra().field_d());
      } catch (const ValidationError&) {
        // ratio leaves the scalar field; simply omit it
      }
    }
  }
  std::cout << render_jacobi_report(identify(s, r.name), out, s.algebra().field_d(), cl.format,
                                    elapsed_since(t0));
  return 0;
}

// Runs every structural check on the raw definition, then the differential
// ones on the constructed space.  Later checks assume earlier ones, so the
// battery stops at the first layer that fails.
ValidationOutcome run_battery(const SpaceDefinition& def, std::optional<ReductiveSpace>& space) {
  ValidationOutcome out;
  auto add = [&out](const char* name, const std::string& detail) {
    out.checks.push_back({name, detail.empty(), detail});
  };

  {
    std::string detail;
    std::vector<int> seen(static_cast<size_t>(def.dim), 0);
    for (int i : def.h) ++seen[size_t(i)];
    for (int i : def.m) ++seen[size_t(i)];
    for (int i = 0; i < def.dim && detail.empty(); ++i)
      if (seen[size_t(i)] != 1)
        detail = "basis index " + std::to_string(i) +
                 (seen[size_t(i)] ? " listed more than once" : " in neither h nor m");
    add("basis-partition", detail);
    if (!out.ok()) return out;
  }

  LieAlgebraData g = assemble_algebra(def);
  {
    std::string detail;
    try {
      g.validate();
    } catch (const Error& e) {
      detail = e.what();
    }
    add("jacobi-identity", detail);
  }
  {
    std::string detail;
    for (size_t p = 0; p < def.h.size() && detail.empty(); ++p)
      for (size_t q = p + 1; q < def.h.size() && detail.empty(); ++q) {
        const Vec& v = g.bracket_basis(def.h[p], def.h[q]);
        for (int u : def.m)
          if (!v[size_t(u)].is_zero()) {
            detail = "[e" + std::to_string(def.h[p]) + ", e" + std::to_string(def.h[q]) +
                     "] has a component on e" + std::to_string(u);
            break;
          }
      }
    add("isotropy-subalgebra", detail);
  }
  {
    std::string detail;
    for (size_t p = 0; p < def.h.size() && detail.empty(); ++p)
      for (int u : def.m) {
        const Vec& v = g.bracket_basis(def.h[p], u);
        for (int b : def.h)
          if (!v[size_t(b)].is_zero()) {
            detail = "[e" + std::to_string(def.h[p]) + ", e" + std::to_string(u) +
                     "] has a component on e" + std::to_string(b);
            break;
          }
        if (!detail.empty()) break;
      }
    add("reductive-complement", detail);
  }
  ExactMatrix metric = assemble_metric(def);
  {
    // symmetric Gaussian elimination: positive definite iff every pivot is
    std::string detail;
    ExactMatrix mat = metric;
    int n = mat.rows();
    for (int k = 0; k < n && detail.empty(); ++k) {
      if (mat.at(k, k).sign() <= 0) {
        detail = "leading minor " + std::to_string(k + 1) + " is not positive";
        break;
      }
      for (int i = k + 1; i < n; ++i) {
        Scalar f = mat.at(i, k) / mat.at(k, k);
        if (f.is_zero()) continue;
        for (int j = k; j < n; ++j) mat.at(i, j) -= f * mat.at(k, j);
      }
    }
    add("metric-positive", detail);
  }
  {
    std::string detail;
    std::vector<int> pos(static_cast<size_t>(def.dim), -1);
    for (size_t p = 0; p < def.m.size(); ++p) pos[size_t(def.m[p])] = int(p);
    for (int a : def.h) {
      for (size_t pu = 0; pu < def.m.size() && detail.empty(); ++pu)
        for (size_t pv = pu; pv < def.m.size() && detail.empty(); ++pv) {
          const Vec& bu = g.bracket_basis(a, def.m[pu]);
          const Vec& bv = g.bracket_basis(a, def.m[pv]);
          Scalar sum(0);
          for (size_t pw = 0; pw < def.m.size(); ++pw) {
            const Scalar& xw = bu[size_t(def.m[pw])];
            const Scalar& yw = bv[size_t(def.m[pw])];
            if (!xw.is_zero()) sum += xw * metric.at(int(pw), int(pv));
            if (!yw.is_zero()) sum += yw * metric.at(int(pw), int(pu));
          }
          if (!sum.is_zero())
            detail = "ad(e" + std::to_string(a) + ") is not skew for the pair (e" +
                     std::to_string(def.m[pu]) + ", e" + std::to_string(def.m[pv]) + ")";
        }
      if (!detail.empty()) break;
    }
    add("ad-invariance", detail);
  }
  if (!out.ok()) return out;

  try {
    space = realize(def);
  } catch (const Error& e) {
    add("space-construction", e.what());
    return out;
  }
  const ReductiveSpace& s = *space;
  int n = s.dim();
  const CovariantTensor& curv = s.curvature();
  {
    std::string detail;
    for (MultiIndex mi(n, 4); detail.empty();) {
      const auto& ix = mi.idx;
      const Scalar& v = curv.at(ix);
      if (v != -curv.at({ix[1], ix[0], ix[2], ix[3]}) ||
          v != -curv.at({ix[0], ix[1], ix[3], ix[2]}) ||
          v != curv.at({ix[2], ix[3], ix[0], ix[1]}))
        detail = "symmetry fails at (" + std::to_string(ix[0]) + "," + std::to_string(ix[1]) +
                 "," + std::to_string(ix[2]) + "," + std::to_string(ix[3]) + ")";
      if (!mi.advance()) break;
    }
    add("curvature-symmetries", detail);
  }
  {
    std::string detail;
    for (MultiIndex mi(n, 4); detail.empty();) {
      const auto& ix = mi.idx;
      Scalar sum = curv.at(ix) + curv.at({ix[1], ix[2], ix[0], ix[3]}) +
                   curv.at({ix[2], ix[0], ix[1], ix[3]});
      if (!sum.is_zero())
        detail = "cyclic sum fails at (" + std::to_string(ix[0]) + "," + std::to_string(ix[1]) +
                 "," + std::to_string(ix[2]) + "," + std::to_string(ix[3]) + ")";
      if (!mi.advance()) break;
    }
    add("bianchi-first", detail);
  }
  const CovariantTensor& curv1 = s.curvature_derivative(1);
  {
    std::string detail;
    for (MultiIndex mi(n, 5); detail.empty();) {
      const auto& ix = mi.idx;
      Scalar sum = curv1.at(ix) + curv1.at({ix[1], ix[2], ix[0], ix[3], ix[4]}) +
                   curv1.at({ix[2], ix[0], ix[1], ix[3], ix[4]});
      if (!sum.is_zero())
        detail = "differential cyclic sum fails at (" + std::to_string(ix[0]) + "," +
                 std::to_string(ix[1]) + "," + std::to_string(ix[2]) + ")";
      if (!mi.advance()) break;
    }
    add("bianchi-second", detail);
  }
  {
    std::string detail;
    for (size_t a = 0; a < def.h.size() && detail.empty(); ++a)
      for (int j = 0; j <= 1 && detail.empty(); ++j)
        if (!so_action(s.isotropy_action(int(a)), s.curvature_derivative(j)).is_zero())
          detail = "isotropy generator e" + std::to_string(def.h[a]) +
                   " does not annihilate the order-" + std::to_string(j) + " jet";
    add("jet-isotropy-invariance", detail);
  }
  return out;
}

int cmd_validate(const CommandLine& cl) {
  ResolvedSpace r = resolve_space(cl, positional(cl, 0, "space"));
  std::optional<ReductiveSpace> space;
  ValidationOutcome outcome = run_battery(r.def, space);
  SpaceIdentity id;
  if (space) {
    id = identify(*space, r.name);
  } else {
    id.name = r.name;
    id.checksum = definition_checksum(r.def);
    id.dim = int(r.def.m.size());
    id.h_dim = int(r.def.h.size());
    id.field_d = r.def.field_d;
  }
  std::cout << render_validate_report(id, outcome, cl.format);
  return outcome.ok() ? 0 : 1;
}

int cmd_export(const CommandLine& cl) {
  const std::string& ref = positional(cl, 0, "catalog id");
  const std::string& path = positional(cl, 1, "output path");
  ResolvedSpace r = resolve_space(cl, ref);
  std::ofstream outf(path, std::ios::binary);
  if (!outf) throw ValidationError("cannot write file: " + path);
  outf << serialize(r.def);
  outf.flush();
  if (!outf) throw ValidationError("write failed: " + path);
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"homjet: exact curvature jets, stabilizer chains, and Jacobi relations"};
  app.require_subcommand(1);

  std::string space_ref, export_path, format = "text";
  std::string metric_scale, wilking_c, max_order, order, scan;

  auto add_common = [&](CLI::App* sub, bool takes_space) {
    if (takes_space)
      sub->add_option("space", space_ref, "catalog identifier or definition file path")
          ->required();
    sub->add_option("--format", format, "report style: text or machine");
    sub->add_option("--metric-scale", metric_scale, "rescale the metric by a positive rational");
    sub->add_option("--wilking-c", wilking_c, "parameter c of the v3 family (default 3/2)");
  };
  add_common(app.add_subcommand("catalog", "list the built-in spaces"), false);
  CLI::App* singer = app.add_subcommand("singer", "stabilizer chain and Singer invariant");
  add_common(singer, true);
  singer->add_option("--max-order", max_order, "cap the stabilizer chain search");
  CLI::App* jacobi = app.add_subcommand("jacobi", "linear Jacobi relation search");
  add_common(jacobi, true);
  jacobi->add_option("--order", order, "examine exactly this order");
  jacobi->add_option("--scan", scan, "search for the minimal order up to this bound");
  add_common(app.add_subcommand("validate", "run the invariant battery"), true);
  CLI::App* exp = app.add_subcommand("export", "write a catalog space as a definition file");
  add_common(exp, true);
  exp->add_option("path", export_path, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    throw ValidationError(e.what());
  }

  CommandLine cl;
  cl.command = app.get_subcommands().front()->get_name();
  if (!space_ref.empty()) cl.positional.push_back(space_ref);
  if (!export_path.empty()) cl.positional.push_back(export_path);
  if (format == "text")
    cl.format = ReportFormat::text;
  else if (format == "machine")
    cl.format = ReportFormat::machine;
  else
    throw ValidationError("--format expects text or machine");
  if (!metric_scale.empty()) cl.metric_scale = parse_rational(metric_scale);
  if (!wilking_c.empty()) cl.wilking_c = Scalar(parse_rational(wilking_c));
  if (!max_order.empty()) cl.max_order = parse_count("--max-order", max_order);
  if (!order.empty()) cl.order = parse_count("--order", order);
  if (!scan.empty()) cl.scan = parse_count("--scan", scan);

  if (cl.command == "catalog") {
    std::cout << render_catalog_report(cl.format);
    return 0;
  }
  if (cl.command == "singer") return cmd_singer(cl);
  if (cl.command == "jacobi") return cmd_jacobi(cl);
  if (cl.command == "validate") return cmd_validate(cl);
  return cmd_export(cl);
}

}  // namespace
}  // namespace homjet

int main(int argc, char** argv) {
  try {
    return homjet::run(argc, argv);
  } catch (const homjet::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
