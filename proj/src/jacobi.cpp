#include "homjet/jacobi.hpp"

#include <map>
#include <string>

#include "homjet/error.hpp"
#include "homjet/rng.hpp"

namespace homjet {

namespace {

std::string vec_key(const Vec& v) {
  std::string k;
  for (const Scalar& s : v) {
    k += s.str();
    k += ',';
  }
  return k;
}

struct DerivativeEvaluator {
  const ReductiveSpace& s;
  std::map<std::string, Scalar> memo;
  std::map<std::string, ExactMatrix> ops;

  explicit DerivativeEvaluator(const ReductiveSpace& space) : s(space) {}

  const ExactMatrix& alpha_of(const Vec& x) {
    std::string k = vec_key(x);
    auto it = ops.find(k);
    if (it == ops.end()) it = ops.emplace(k, s.connection_operator(x)).first;
    return it->second;
  }

  Scalar eval(const std::vector<Vec>& args) {
    if (args.size() == 4) return eval_tensor(s.curvature(), args);
    std::string key = std::to_string(args.size());
    for (const Vec& v : args) {
      key += '|';
      key += vec_key(v);
    }
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const ExactMatrix& a = alpha_of(args[0]);
    std::vector<Vec> rest(args.begin() + 1, args.end());
    Scalar acc;
    for (size_t t = 0; t < rest.size(); ++t) {
      Vec saved = rest[t];
      rest[t] = a.apply(saved);
      acc -= eval(rest);
      rest[t] = saved;
    }
    memo.emplace(std::move(key), acc);
    return acc;
  }
};

void check_diagonal(const ReductiveSpace& s, DerivativeEvaluator& oracle, const SymJet& jet) {
  int n = s.dim();
  DetRng rng(uint64_t(97 + jet.order));
  for (int trial = 0; trial < 5; ++trial) {
    Vec xi = rng.vector(n), x = rng.vector(n), y = rng.vector(n);
    std::vector<Vec> args(size_t(jet.order), xi);
    args.push_back(x);
    args.push_back(xi);
    args.push_back(xi);
    args.push_back(y);
    check_internal(eval_sym(jet.tensor, xi, x, y) == oracle.eval(args),
                   "symmetrized jet fails its diagonal cross-check");
  }
}

std::vector<int> relation_orders(int k) {
  std::vector<int> orders;
  for (int j = k - 1; j >= 0; j -= 2) orders.push_back(j);
  return orders;
}

SymPairTensor iterated_embed(const SymPairTensor& t, const ExactMatrix& g, int times) {
  SymPairTensor out = t;
  for (int i = 0; i < times; ++i) out = embed_sym(out, g);
  return out;
}

Vec sample_direction(int n, int sample) {
  // rational point construction: (2u, 1 - <u,u>) over pseudo-random rational u
  DetRng rng(uint64_t(7040 + sample));
  Vec u = rng.vector(n - 1);
  Vec xi(static_cast<size_t>(n));
  Scalar uu;
  for (int i = 0; i < n - 1; ++i) {
    xi[size_t(i)] = Scalar(2) * u[size_t(i)];
    uu += u[size_t(i)] * u[size_t(i)];
  }
  xi[size_t(n - 1)] = Scalar(1) - uu;
  return xi;
}

Scalar metric_square(const ExactMatrix& g, const Vec& xi) {
  Scalar acc;
  for (int i = 0; i < g.rows(); ++i) {
    if (xi[size_t(i)].is_zero()) continue;
    for (int j = 0; j < g.cols(); ++j) {
      if (g.at(i, j).is_zero() || xi[size_t(j)].is_zero()) continue;
      acc += xi[size_t(i)] * g.at(i, j) * xi[size_t(j)];
    }
  }
  return acc;
}

}  // namespace

Scalar nabla_r_value(const ReductiveSpace& s, const std::vector<Vec>& dirs, const Vec& a,
                     const Vec& b, const Vec& c, const Vec& d) {
  DerivativeEvaluator ev(s);
  std::vector<Vec> args = dirs;
  args.push_back(a);
  args.push_back(b);
  args.push_back(c);
  args.push_back(d);
  return ev.eval(args);
}

std::vector<SymJet> sym_jet_chain(const ReductiveSpace& s, int k) {
  check_internal(k >= 0, "jet order must be non-negative");
  int n = s.dim();
  const CovariantTensor& r = s.curvature();
  CovariantTensor d0(n, 4);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          d0.at({a, b, x, y}) =
              Scalar(Rational(1, 2)) * (r.at({x, a, b, y}) + r.at({x, b, a, y}));

  std::vector<SymJet> chain;
  chain.push_back({0, sym_from_dense(d0, 2)});
  for (int j = 1; j <= k; ++j)
    chain.push_back({j, sym_derivative(chain.back().tensor, s.connection_operators())});

  DerivativeEvaluator oracle(s);
  for (const SymJet& jet : chain) check_diagonal(s, oracle, jet);
  return chain;
}

SymJet sym_jet(const ReductiveSpace& s, int k) { return sym_jet_chain(s, k).back(); }

std::optional<JacobiRelation> find_relation(const ReductiveSpace& s,
                                            const std::vector<SymJet>& chain, int k) {
  check_internal(k >= 0, "relation order must be non-negative");
  check_internal(int(chain.size()) > k + 1, "jet chain too short for this order");
  const SymPairTensor& target = chain[size_t(k) + 1].tensor;
  std::vector<int> orders = relation_orders(k);
  std::vector<SymPairTensor> embedded;
  embedded.reserve(orders.size());
  for (int j : orders)
    embedded.push_back(iterated_embed(chain[size_t(j)].tensor, s.metric(), (k + 1 - j) / 2));

  Vec b = target.flatten();
  ExactMatrix a(int(b.size()), int(embedded.size()));
  for (size_t c = 0; c < embedded.size(); ++c) a.set_col(int(c), embedded[c].flatten());
  LinearSolve sol = solve_linear(a, b);
  if (!sol.solution.has_value()) return std::nullopt;

  JacobiRelation rel;
  rel.order = k;
  for (size_t c = 0; c < orders.size(); ++c) rel.coefficients[orders[c]] = (*sol.solution)[c];
  rel.minimal = sol.kernel.empty();

  SymPairTensor recombined(target.dim(), target.sym_valence());
  for (size_t c = 0; c < embedded.size(); ++c)
    recombined = recombined + rel.coefficients[orders[c]] * embedded[c];
  check_internal(recombined == target, "relation fails exact re-verification");
  return rel;
}

std::optional<JacobiRelation> find_relation(const ReductiveSpace& s, int k) {
  return find_relation(s, sym_jet_chain(s, k + 1), k);
}

std::optional<std::pair<int, JacobiRelation>> min_relation_order(const ReductiveSpace& s,
                                                                 int k_max) {
  std::vector<SymJet> chain = sym_jet_chain(s, k_max + 1);
  for (int k = 0; k <= k_max; ++k) {
    auto rel = find_relation(s, chain, k);
    if (rel.has_value()) return std::make_pair(k, *rel);
  }
  return std::nullopt;
}

OsculatingProbe osculating_probe(const ReductiveSpace& s, int k, int samples) {
  std::vector<SymJet> chain = sym_jet_chain(s, k + 1);
  if (!find_relation(s, chain, k).has_value())
    throw ValidationError("no linear relation of order " + std::to_string(k) +
                          " for this space");
  std::vector<int> orders = relation_orders(k);
  if (orders.empty()) return OsculatingProbe::dependent_for_all_samples;
  int n = s.dim();
  for (int sample = 0; sample < samples; ++sample) {
    Vec xi = sample_direction(n, sample);
    Scalar xx = metric_square(s.metric(), xi);
    std::vector<Vec> rows;
    Scalar power(1);
    for (size_t i = 0; i < orders.size(); ++i) {
      ExactMatrix op = diagonal_form(chain[size_t(orders[i])].tensor, xi);
      Vec row;
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) row.push_back(power * op.at(u, v));
      rows.push_back(std::move(row));
      power = power * xx;
    }
    if (rank_of_vectors(rows) == int(orders.size())) return OsculatingProbe::independent;
  }
  return OsculatingProbe::dependent_for_all_samples;
}

Scalar scale_invariant_signature(const JacobiRelation& rel, unsigned long field_d) {
  if (rel.order != 4 || rel.coefficients.count(3) == 0 || rel.coefficients.count(1) == 0)
    throw ValidationError("signature requires an order-4 relation");
  const Scalar& c3 = rel.coefficients.at(3);
  const Scalar& c1 = rel.coefficients.at(1);
  if (c1.is_zero()) throw ValidationError("signature unsupported: a root is zero");
  Scalar disc = c3 * c3 + Scalar(4) * c1;
  if (disc.sign() < 0) throw ValidationError("signature unsupported: roots are not real");
  std::optional<Scalar> sq = sqrt_in_field(disc, field_d);
  if (!sq.has_value())
    throw ValidationError("signature unsupported: root ratio leaves the scalar field");
  Scalar half(Rational(1, 2));
  Scalar r1 = (c3 + *sq) * half;
  Scalar r2 = (c3 - *sq) * half;
  if (r1.is_zero() || r2.is_zero())
    throw ValidationError("signature unsupported: a root is zero");
  Scalar q = r1 / r2;
  if (q >= Scalar(1) || q <= Scalar(-1)) return q;
  return q.inverse();
}

}  // namespace homjet
