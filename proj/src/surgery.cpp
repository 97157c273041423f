#include <kirby/surgery.hpp>

#include <kirby/plumbing.hpp>

#include <algorithm>
#include <functional>
#include <future>
#include <numeric>

namespace kirby {

namespace {

using Index = Eigen::Index;

[[noreturn]] void violation(const std::string& what) {
  throw Error(ErrorKind::ShapeViolation, what);
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

IntMatrix submatrix(const HandleDecomposition& x, const std::vector<Index>& idx) {
  const auto n = static_cast<Index>(idx.size());
  IntMatrix out(n, n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const ExtInt& v = x.linking()(idx[a], idx[b]);
      if (v.is_unknown()) throw Error(ErrorKind::UnknownEntries, "submatrix has Unknown entries");
      out(a, b) = v.value();
    }
  return out;
}

bool runs_over_one_handles(const HandleDecomposition& x, Index k) {
  for (Index d = 0; d < x.incidence().rows(); ++d)
    if (x.incidence()(d, k) != 0) return true;
  return false;
}

// Checks that `a` links chain[end] with |lk| = 1 and every other chain handle
// with lk = 0, all certainly.
bool valid_attachment(const HandleDecomposition& x, const std::vector<Index>& chain, Index a,
                      ChainEnd end) {
  const std::size_t linked = end == ChainEnd::First ? 0 : chain.size() - 1;
  for (std::size_t c = 0; c < chain.size(); ++c) {
    const ExtInt& lk = x.linking()(a, chain[c]);
    if (c == linked) {
      if (!(lk.is(1) || lk.is(-1))) return false;
    } else if (!lk.is_zero()) {
      return false;
    }
  }
  return true;
}

std::string counts_text(std::size_t h0, std::size_t h1, std::size_t h2, std::size_t h3,
                        std::size_t h4) {
  return HandleCounts{h0, h1, h2, h3, h4}.to_string();
}

void check_host(const HandleDecomposition& host) {
  if (host.h0() != 1) violation("host must have exactly one 0-handle");
  if (!host.one_handles().empty()) violation("host must have no 1-handles");
}

}  // namespace

void validate(const Figure6Shape& s) {
  if (s.p < 2) violation("C_p needs p >= 2");
  check_host(s.host);
  const auto& x = s.host;
  if (s.chain.size() != static_cast<std::size_t>(s.p - 1))
    violation("chain must have p-1 = " + std::to_string(s.p - 1) + " handles");
  std::vector<Index> idx;
  for (const auto& label : s.chain) {
    auto i = x.find_two(label);
    if (!i) violation("chain handle '" + label + "' is not a 2-handle of the host");
    if (std::find(idx.begin(), idx.end(), *i) != idx.end())
      violation("chain handle '" + label + "' is repeated");
    idx.push_back(*i);
  }
  const auto a = x.find_two(s.attachment);
  if (!a) violation("attachment '" + s.attachment + "' is not a 2-handle of the host");
  if (std::find(idx.begin(), idx.end(), *a) != idx.end())
    violation("attachment '" + s.attachment + "' is part of the chain");

  const auto weights = c_p_weights(s.p);
  for (std::size_t c = 0; c < idx.size(); ++c) {
    const Index i = idx[c];
    if (!x.framing(i).is(weights[c]))
      violation("chain handle '" + s.chain[c] + "' must have framing " + weights[c].str() +
                ", has " + x.framing(i).to_string());
    if (x.knot(i) != KnotTag::Unknot) violation("chain handle '" + s.chain[c] + "' is not a certified unknot");
    if (runs_over_one_handles(x, i)) violation("chain handle '" + s.chain[c] + "' runs over a 1-handle");
    for (std::size_t d = c + 1; d < idx.size(); ++d) {
      const ExtInt& lk = x.linking()(i, idx[d]);
      if (!lk.is(d == c + 1 ? 1 : 0))
        violation("chain handles '" + s.chain[c] + "' and '" + s.chain[d] + "' have linking " +
                  lk.to_string() + ", C_p needs " + (d == c + 1 ? "1" : "0"));
    }
  }
  if (!valid_attachment(x, idx, *a, s.end))
    violation("attachment '" + s.attachment + "' must link the " +
              (s.end == ChainEnd::First ? "first" : "last") +
              " chain handle once and no other chain handle");
}

void validate(const Figure8Shape& s) {
  check_host(s.host);
  const auto& x = s.host;
  const auto c = x.find_two(s.cusp);
  if (!c) violation("cusp '" + s.cusp + "' is not a 2-handle of the host");
  const auto a = x.find_two(s.attachment);
  if (!a) violation("attachment '" + s.attachment + "' is not a 2-handle of the host");
  if (*a == *c) violation("attachment and cusp must differ");
  if (!x.framing(*c).is_zero()) violation("cusp framing must be 0, is " + x.framing(*c).to_string());
  if (x.knot(*c) != KnotTag::RightTrefoil) violation("cusp must be a certified right trefoil");
  const ExtInt& lk = x.linking()(*c, *a);
  if (!(lk.is(1) || lk.is(-1)))
    violation("attachment must link the cusp once, linking is " + lk.to_string());
}

std::vector<Figure6Shape> find_cp_chains(const HandleDecomposition& x, int p) {
  std::vector<Figure6Shape> out;
  if (p < 2) throw Error(ErrorKind::Domain, "C_p needs p >= 2");
  if (x.h0() != 1 || !x.one_handles().empty()) return out;
  const auto weights = c_p_weights(p);
  const Index n = static_cast<Index>(x.two_handle_count());
  std::vector<Index> chain;

  std::function<void()> extend = [&] {
    if (chain.size() == weights.size()) {
      const std::vector<ChainEnd> ends =
          chain.size() == 1 ? std::vector<ChainEnd>{ChainEnd::Last}
                            : std::vector<ChainEnd>{ChainEnd::First, ChainEnd::Last};
      for (Index a = 0; a < n; ++a) {
        if (std::find(chain.begin(), chain.end(), a) != chain.end()) continue;
        for (ChainEnd end : ends) {
          if (!valid_attachment(x, chain, a, end)) continue;
          Figure6Shape shape{x, {}, x.two_handle_labels()[a], p, end};
          for (Index i : chain) shape.chain.push_back(x.two_handle_labels()[i]);
          out.push_back(std::move(shape));
        }
      }
      return;
    }
    const Integer& w = weights[chain.size()];
    for (Index v = 0; v < n; ++v) {
      if (std::find(chain.begin(), chain.end(), v) != chain.end()) continue;
      if (!x.framing(v).is(w) || x.knot(v) != KnotTag::Unknot || runs_over_one_handles(x, v)) continue;
      bool fits = true;
      for (std::size_t c = 0; c < chain.size() && fits; ++c)
        fits = x.linking()(chain[c], v).is(c + 1 == chain.size() ? 1 : 0);
      if (!fits) continue;
      chain.push_back(v);
      extend();
      chain.pop_back();
    }
  };
  extend();
  return out;
}

std::vector<Figure8Shape> find_cusps(const HandleDecomposition& x) {
  std::vector<Figure8Shape> out;
  if (x.h0() != 1 || !x.one_handles().empty()) return out;
  const Index n = static_cast<Index>(x.two_handle_count());
  for (Index c = 0; c < n; ++c) {
    if (!x.framing(c).is_zero() || x.knot(c) != KnotTag::RightTrefoil) continue;
    for (Index a = 0; a < n; ++a) {
      if (a == c) continue;
      const ExtInt& lk = x.linking()(c, a);
      if (lk.is(1) || lk.is(-1))
        out.push_back({x, x.two_handle_labels()[c], x.two_handle_labels()[a], false});
    }
  }
  return out;
}

SurgeryResult rational_blowdown(const Figure6Shape& shape) {
  validate(shape);
  const int p = shape.p;
  const HandleDecomposition& host = shape.host;
  const HandleCounts before = counts(host);
  const std::size_t h2 = before.h2 - static_cast<std::size_t>(p - 1) - 1;

  Certificate cert;
  cert.construction = "rational blow-down of C_" + std::to_string(p) + " = [" +
                      join(shape.chain) + "] with attachment " + shape.attachment;

  std::vector<Index> chain_idx;
  for (const auto& label : shape.chain) chain_idx.push_back(host.index_of_two(label));
  const IntMatrix chain_form = submatrix(host, chain_idx);
  cert.expect("C_p chain |det| = p^2", std::to_string(p * p), abs(determinant(chain_form)).str(),
              Basis::Published);
  const Inertia chain_inertia = signature(chain_form);
  cert.expect("C_p chain negative definite", std::to_string(p - 1),
              std::to_string(chain_inertia.negative), Basis::Derived);

  // Handles other than the attachment that link the chain get re-routed
  // through B_p; the text does not determine how.
  std::vector<std::string> rerouted;
  for (Index k = 0; k < static_cast<Index>(host.two_handle_count()); ++k) {
    const std::string& label = host.two_handle_labels()[k];
    if (label == shape.attachment ||
        std::find(chain_idx.begin(), chain_idx.end(), k) != chain_idx.end())
      continue;
    for (Index c : chain_idx)
      if (!host.linking()(k, c).is_zero()) {
        rerouted.push_back(label);
        break;
      }
  }

  HandleDecomposition x = host;
  for (const auto& label : shape.chain) x.remove_two_handle(x.index_of_two(label));
  cert.move("remove C_" + std::to_string(p) + " handles " + join(shape.chain));

  const std::string dotted = x.fresh_one_label();
  const Index d = x.add_one_handle(dotted);
  const std::string ball_handle = x.fresh_two_label();
  const Index b = x.add_two_handle({ball_handle, ExtInt::unknown(), KnotTag::Unknown});
  x.set_incidence(d, b, Integer(p));
  const Index a = x.index_of_two(shape.attachment);
  x.set_linking(a, b, ExtInt::unknown());
  cert.move("glue B_" + std::to_string(p) + ": dotted circle " + dotted + ", 2-handle " +
            ball_handle + " running over it " + std::to_string(p) + " times");
  for (const auto& label : rerouted) {
    const Index k = x.index_of_two(label);
    x.mark_unknown(k);
    x.set_knot(k, KnotTag::Unknown);
    cert.move("re-route " + label + " through B_" + std::to_string(p) + " (linking data Unknown)");
  }

  x.set_incidence(d, a, Integer(1));
  x.mark_unknown(a);
  x.set_knot(a, KnotTag::Unknown);
  cert.move("slide " + shape.attachment + " to a meridian of " + dotted);
  cert.expect("H1 after gluing B_p", "0", homology_h1(x).to_string(), Basis::Derived);

  x = cancel_12(x, dotted, shape.attachment);
  cert.move("cancel " + dotted + " against meridian " + shape.attachment + "; " + ball_handle +
            " slid off it " + std::to_string(p) + " times");
  x.rename_two_handle(x.index_of_two(ball_handle), shape.attachment);
  cert.move("rename " + ball_handle + " -> " + shape.attachment);

  cert.counts = counts(x);
  cert.chi = euler_characteristic(x);
  cert.expect("counts (1, 0, h2+1, h3, h4) with h2 = " + std::to_string(h2),
              counts_text(1, 0, h2 + 1, before.h3, before.h4), cert.counts.to_string(),
              Basis::Published);
  cert.expect("euler characteristic drop = p-1", p - 1,
              before.euler_characteristic() - cert.chi, Basis::Derived);
  cert.expect("H1 after cancellation", "0", homology_h1(x).to_string(), Basis::Published);
  cert.expect("surviving framing is Unknown", "?", x.framing(x.index_of_two(shape.attachment)).to_string(),
              Basis::Derived);
  return {std::move(x), std::move(cert)};
}

SurgeryResult log_transform(const Figure8Shape& shape, int p) {
  if (p < 2) throw Error(ErrorKind::Domain, "logarithmic transform needs multiplicity >= 2");
  validate(shape);
  const HandleCounts before = counts(shape.host);
  const std::size_t h2 = before.h2 - 2;

  Certificate cert;
  cert.construction = "logarithmic transform of multiplicity " + std::to_string(p) +
                      " in the cusp neighborhood " + shape.cusp + " (attachment " +
                      shape.attachment + ")";
  cert.conjectural = shape.conjectural;

  HandleDecomposition x = shape.host;
  std::vector<std::string> exceptional;
  for (int i = 0; i < p - 1; ++i) {
    x = blow_up(x, Sign::Minus);
    exceptional.push_back(x.two_handle_labels().back());
    cert.move("blow up: (-1)-framed unknot " + exceptional.back());
  }
  std::vector<Index> ex_idx;
  for (const auto& e : exceptional) ex_idx.push_back(x.index_of_two(e));
  const Inertia blowup_inertia = signature(submatrix(x, ex_idx));

  // Assemble u1 = F - 2e1 - e2 - ... - e(p-1) and ui = e(i-1) - e(i).
  for (std::size_t i = 0; i < exceptional.size(); ++i) {
    const int times = i == 0 ? 2 : 1;
    for (int t = 0; t < times; ++t) x = handle_slide(x, shape.cusp, exceptional[i], Sign::Minus);
    cert.move("slide " + shape.cusp + " over " + exceptional[i] + " (sign -) x" + std::to_string(times));
  }
  for (std::size_t i = 0; i + 1 < exceptional.size(); ++i) {
    x = handle_slide(x, exceptional[i], exceptional[i + 1], Sign::Minus);
    cert.move("slide " + exceptional[i] + " over " + exceptional[i + 1] + " (sign -)");
  }
  std::vector<std::string> chain = {shape.cusp};
  chain.insert(chain.end(), exceptional.begin(), exceptional.end() - 1);
  // The assembled spheres form the plumbing C_p; its handles are unknots.
  for (const auto& label : chain) x.set_knot(x.index_of_two(label), KnotTag::Unknot);
  cert.move("certify chain [" + join(chain) + "] as the unknotted plumbing C_" + std::to_string(p));

  Figure6Shape assembled{x, chain, shape.attachment, p, ChainEnd::First};
  const auto found = find_cp_chains(x, p);
  const bool located = std::any_of(found.begin(), found.end(), [&](const Figure6Shape& s) {
    return s.chain == assembled.chain && s.attachment == assembled.attachment &&
           (s.end == assembled.end || p == 2);
  });
  if (!located)
    throw Error(ErrorKind::Internal, "assembled chain [" + join(chain) +
                                         "] is not recognized as C_" + std::to_string(p));
  cert.expect("assembled chain found by C_p search", "found", "found", Basis::Derived);

  std::vector<Index> chain_idx;
  for (const auto& label : chain) chain_idx.push_back(x.index_of_two(label));
  const IntMatrix chain_form = submatrix(x, chain_idx);
  std::vector<Integer> chain_weights;
  for (Index i = 0; i < chain_form.rows(); ++i) chain_weights.push_back(chain_form(i, i));
  const Integer pp(p);
  cert.expect("chain boundary", LensSpace(pp * pp, pp - 1).to_string(),
              lens_space_of_chain(chain_weights).to_string(), Basis::Published);
  const long long sigma_blowups = blowup_inertia.signature();
  const long long sigma_removed = -signature(chain_form).signature();
  cert.expect("signature change from blow-ups", -(p - 1), sigma_blowups, Basis::Derived);
  cert.expect("signature change from removing C_p", p - 1, sigma_removed, Basis::Derived);
  cert.expect("signature changes cancel", 0, sigma_blowups + sigma_removed, Basis::Derived);

  SurgeryResult blown = rational_blowdown(assembled);
  cert.absorb(blown.certificate);

  cert.counts = counts(blown.result);
  cert.chi = euler_characteristic(blown.result);
  cert.expect("counts (1, 0, h2+2, h3, h4) with h2 = " + std::to_string(h2),
              counts_text(1, 0, h2 + 2, before.h3, before.h4), cert.counts.to_string(),
              Basis::Published);
  cert.expect("euler characteristic preserved", before.euler_characteristic(), cert.chi,
              Basis::Derived);
  return {std::move(blown.result), std::move(cert)};
}

Figure8Shape elliptic_en_p(int n, int p, bool allow_conjectural) {
  if (n < 1) throw Error(ErrorKind::Domain, "E(n)_p needs n >= 1, got " + std::to_string(n));
  if (p < 2) throw Error(ErrorKind::Domain, "E(n)_p needs p >= 2, got " + std::to_string(p));
  const bool proved = p >= 2 && p <= 4;
  if (!proved && !allow_conjectural)
    throw Error(ErrorKind::Domain, "E(n)_" + std::to_string(p) +
                                       " is only modelled as a conjectural shape");

  HandleDecomposition x;
  const Index cusp = x.add_two_handle({"cusp", ExtInt(0), KnotTag::RightTrefoil});
  const Index att = x.add_two_handle({"att", ExtInt::unknown(), KnotTag::Unknown});
  x.set_linking(cusp, att, ExtInt(1));
  const int others = 12 * n - 2;
  for (int k = 1; k <= others; ++k) {
    const Index i = x.add_two_handle({"k" + std::to_string(k), ExtInt::unknown(), KnotTag::Unknown});
    x.mark_unknown(i);
  }
  x = add_three_handles(x, 2);
  x = add_four_handle(x);
  return {std::move(x), "cusp", "att", !proved};
}

bool is_proved_pair(int p, int q) {
  return (p == 2 && q == 3) || (p == 2 && q == 5) || (p == 3 && q == 4) || (p == 4 && q == 5);
}

Certificate verify_main_theorem(int n, int p, int q, bool allow_unsupported) {
  const bool proved = is_proved_pair(p, q);
  if (!proved) {
    if (!allow_unsupported)
      throw Error(ErrorKind::UnsupportedPair,
                  "(p, q) = (" + std::to_string(p) + ", " + std::to_string(q) +
                      ") is not one of (2,3), (2,5), (3,4), (4,5)");
    if (p < 2 || q < 2 || std::gcd(p, q) != 1)
      throw Error(ErrorKind::Domain, "multiplicities must be coprime and >= 2");
  }
  if (n < 1) throw Error(ErrorKind::Domain, "n must be >= 1");

  const Figure8Shape host = elliptic_en_p(n, p, allow_unsupported);
  const std::string name = "E(" + std::to_string(n) + ")_{" + std::to_string(p) + "," +
                           std::to_string(q) + "}";

  Certificate cert;
  cert.construction = name + ": model of E(" + std::to_string(n) + ")_" + std::to_string(p) +
                      " with a cusp neighborhood, then a logarithmic transform of multiplicity " +
                      std::to_string(q) + " realized as " + std::to_string(q - 1) +
                      " blow-ups and a rational blow-down of C_" + std::to_string(q);
  cert.conjectural = !proved || host.conjectural;
  cert.move("load E(" + std::to_string(n) + ")_" + std::to_string(p) + " model");

  const int twelve_n = 12 * n;
  cert.expect("input counts", counts_text(1, 0, static_cast<std::size_t>(twelve_n), 2, 1),
              counts(host.host).to_string(), Basis::Derived);
  cert.expect("input euler characteristic", twelve_n, euler_characteristic(host.host),
              Basis::Published);
  cert.expect("cusp neighborhood", "0-framed right-trefoil",
              host.host.framing(host.host.index_of_two(host.cusp)).to_string() + "-framed " +
                  to_string(host.host.knot(host.host.index_of_two(host.cusp))),
              Basis::Published);

  const SurgeryResult out = log_transform(host, q);
  cert.absorb(out.certificate);
  cert.counts = counts(out.result);
  cert.chi = euler_characteristic(out.result);
  cert.expect("final counts", counts_text(1, 0, static_cast<std::size_t>(twelve_n), 2, 1),
              cert.counts.to_string(), Basis::Published);
  cert.expect("final euler characteristic", twelve_n, cert.chi, Basis::Derived);
  cert.expect("final H1", "0", homology_h1(out.result).to_string(), Basis::Published);
  return cert;
}

std::vector<Certificate> verify_all_proved(int max_n) {
  static const int pairs[][2] = {{2, 3}, {2, 5}, {3, 4}, {4, 5}};
  std::vector<std::future<Certificate>> jobs;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& pq : pairs)
      jobs.push_back(std::async(std::launch::async, verify_main_theorem, n, pq[0], pq[1], false));
  std::vector<Certificate> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace kirby
