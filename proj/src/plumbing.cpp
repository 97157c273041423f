#include <kirby/plumbing.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace kirby {

namespace {

using Index = Eigen::Index;

Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

bool parse_integer(const std::string& token, Integer& out) {
  const std::size_t start = !token.empty() && (token[0] == '-' || token[0] == '+') ? 1 : 0;
  if (token.size() == start || token.find_first_not_of("0123456789", start) != std::string::npos)
    return false;
  out = Integer(token[0] == '+' ? token.substr(1) : token);
  return true;
}

}  // namespace

PlumbingGraph::PlumbingGraph(std::vector<PlumbingVertex> vertices,
                             std::vector<std::pair<std::string, std::string>> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::set<std::string> labels;
  for (const auto& v : vertices_)
    if (!labels.insert(v.label).second)
      throw Error(ErrorKind::Domain, "duplicate plumbing vertex '" + v.label + "'");
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& [a, b] : edges_) {
    if (!labels.count(a) || !labels.count(b))
      throw Error(ErrorKind::Domain, "edge " + a + " - " + b + " names an unknown vertex");
    if (a == b) throw Error(ErrorKind::Domain, "plumbing graph has a loop at '" + a + "'");
    if (!seen.insert(std::minmax(a, b)).second)
      throw Error(ErrorKind::Domain, "plumbing graph has a repeated edge " + a + " - " + b);
  }
}

PlumbingGraph PlumbingGraph::chain(const std::vector<Integer>& weights) {
  std::vector<PlumbingVertex> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    vertices.push_back({"k" + std::to_string(i + 1), weights[i]});
    if (i > 0) edges.emplace_back(vertices[i - 1].label, vertices[i].label);
  }
  return PlumbingGraph(std::move(vertices), std::move(edges));
}

PlumbingGraph disjoint_union(const PlumbingGraph& a, const PlumbingGraph& b) {
  auto vertices = a.vertices();
  vertices.insert(vertices.end(), b.vertices().begin(), b.vertices().end());
  auto edges = a.edges();
  edges.insert(edges.end(), b.edges().begin(), b.edges().end());
  return PlumbingGraph(std::move(vertices), std::move(edges));
}

PlumbingGraph parse_plumbing(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<PlumbingVertex> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  bool saw_chain = false;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) -> Error {
    return Error(ErrorKind::Format, "plumbing line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    if (saw_chain) throw fail("nothing may follow a chain line");

    if (tok[0] == "chain") {
      if (!vertices.empty()) throw fail("chain cannot be mixed with vertex lines");
      std::vector<Integer> weights;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        Integer w;
        if (!parse_integer(tok[i], w)) throw fail("expected an integer weight, got '" + tok[i] + "'");
        weights.push_back(w);
      }
      vertices = PlumbingGraph::chain(weights).vertices();
      for (std::size_t i = 1; i < vertices.size(); ++i)
        edges.emplace_back(vertices[i - 1].label, vertices[i].label);
      saw_chain = true;
    } else if (tok[0] == "vertex") {
      Integer w;
      if (tok.size() != 3 || !parse_integer(tok[2], w)) throw fail("expected 'vertex LABEL WEIGHT'");
      vertices.push_back({tok[1], w});
    } else if (tok[0] == "edge") {
      if (tok.size() != 3) throw fail("expected 'edge LABEL LABEL'");
      edges.emplace_back(tok[1], tok[2]);
    } else {
      throw fail("unknown directive '" + tok[0] + "'");
    }
  }
  try {
    return PlumbingGraph(std::move(vertices), std::move(edges));
  } catch (const Error& e) {
    throw Error(ErrorKind::Format, e.what());
  }
}

HandleDecomposition from_plumbing(const PlumbingGraph& g) {
  HandleDecomposition out;
  for (const auto& v : g.vertices()) out.add_two_handle({v.label, ExtInt(v.weight), KnotTag::Unknot});
  for (const auto& [a, b] : g.edges())
    out.set_linking(out.index_of_two(a), out.index_of_two(b), ExtInt(1));
  return out;
}

std::vector<Integer> c_p_weights(int p) {
  if (p < 2) throw Error(ErrorKind::Domain, "C_p needs p >= 2, got " + std::to_string(p));
  std::vector<Integer> weights(static_cast<std::size_t>(p - 1), Integer(-2));
  weights.front() = -(p + 2);
  return weights;
}

HandleDecomposition c_p(int p) {
  const auto weights = c_p_weights(p);
  const Integer pp(p);
  if (!(lens_space_of_chain(weights) == LensSpace(pp * pp, pp - 1)))
    throw Error(ErrorKind::Internal, "C_" + std::to_string(p) + " boundary is not L(p^2, p-1)");
  return from_plumbing(PlumbingGraph::chain(weights));
}

HandleDecomposition b_p(int p) {
  if (p < 2) throw Error(ErrorKind::Domain, "B_p needs p >= 2, got " + std::to_string(p));
  HandleDecomposition out;
  const Index d = out.add_one_handle("d1");
  const Index k = out.add_two_handle({"k1", ExtInt::unknown(), KnotTag::Unknown});
  out.set_incidence(d, k, Integer(p));
  return out;
}

Integer mod_inverse(const Integer& a, const Integer& m) {
  Integer old_r = mod(a, m), r = m;
  Integer old_s = 1, s = 0;
  while (r != 0) {
    Integer q = old_r / r;
    Integer t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw Error(ErrorKind::Domain, "no inverse of " + a.str() + " mod " + m.str());
  return mod(old_s, m);
}

LensSpace::LensSpace(const Integer& p, const Integer& q) : p_(p) {
  if (p < 2 || q <= 0 || q >= p || gcd(p, q) != 1)
    throw Error(ErrorKind::Domain, "L(" + p.str() + "," + q.str() +
                                       ") needs p >= 2, 0 < q < p and gcd(p, q) = 1");
  const Integer inv = mod_inverse(q, p);
  q_ = std::min({Integer(q), Integer(p - q), inv, Integer(p - inv)});
}

std::string LensSpace::to_string() const { return "L(" + p_.str() + "," + q_.str() + ")"; }

bool lens_equivalent(const LensSpace& a, const LensSpace& b) {
  if (a.p() != b.p()) return false;
  const Integer& p = a.p();
  const Integer inv = mod_inverse(a.q(), p);
  for (const Integer& c : {Integer(a.q()), Integer(p - a.q()), inv, Integer(p - inv)})
    if (c == b.q()) return true;
  return false;
}

LensSpace lens_space_of_chain(const std::vector<Integer>& weights) {
  if (weights.empty()) throw Error(ErrorKind::Domain, "lens space of an empty chain");
  std::vector<Integer> coeffs;
  for (const Integer& w : weights) {
    if (w > -2)
      throw Error(ErrorKind::Domain, "chain weight " + w.str() + " is not <= -2");
    coeffs.push_back(-w);
  }
  const auto [p, q] = evaluate_hj(coeffs);
  return LensSpace(p, q);
}

std::optional<std::vector<Integer>> linear_chain_weights(const HandleDecomposition& x) {
  const Index n = static_cast<Index>(x.two_handle_count());
  if (!x.one_handles().empty() || n == 0 || !all_known(x.linking())) return std::nullopt;
  const IntMatrix l = to_int_matrix(x.linking());
  std::vector<std::vector<Index>> adj(static_cast<std::size_t>(n));
  std::size_t edges = 0;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      if (l(i, j) == 0) continue;
      if (abs(l(i, j)) != 1) return std::nullopt;
      adj[i].push_back(j);
      adj[j].push_back(i);
      ++edges;
    }
  if (edges != static_cast<std::size_t>(n - 1)) return std::nullopt;
  Index start = -1;
  for (Index i = 0; i < n; ++i) {
    if (adj[i].size() > 2) return std::nullopt;
    if (adj[i].size() <= 1 && start < 0) start = i;
  }
  if (start < 0) return std::nullopt;
  std::vector<Integer> weights;
  Index prev = -1, cur = start;
  while (cur >= 0) {
    weights.push_back(l(cur, cur));
    Index next = -1;
    for (Index nb : adj[cur])
      if (nb != prev) next = nb;
    prev = cur;
    cur = next;
  }
  if (static_cast<Index>(weights.size()) != n) return std::nullopt;  // disconnected
  return weights;
}

}  // namespace kirby
