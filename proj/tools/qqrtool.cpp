// qqrtool: command-line front end for the QQR/LQR experiments.

#include <cmath>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qqr/bounds.hpp"
#include "qqr/families.hpp"
#include "qqr/zeta.hpp"
#include "report.hpp"

using namespace qqr;
using qqrtool::json;
using qqrtool::RunReport;

namespace {

struct Globals {
  std::uint64_t seed = 1;
  unsigned threads = 0;
  double tol = 1e-6;
  std::size_t cap = 26;
  std::string json_path;
  bool csv = false;
};

EnumerationOptions enum_opts(const Globals& g) { return {g.cap, g.threads}; }

SearchOptions search_opts(const Globals& g) {
  SearchOptions o;
  o.seed = g.seed;
  o.threads = g.threads;
  return o;
}

std::string str(double x, int prec = 6) {
  std::ostringstream o;
  o.precision(prec);
  o << x;
  return o.str();
}

std::string fixed(double x, int digits) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(digits) << x;
  return o.str();
}

// "+ 7/3" or "- 41/3"
std::string signed_term(const Rational& a) {
  return a < 0 ? "- " + to_fraction_string(-a) : "+ " + to_fraction_string(a);
}

std::string code_params(std::size_t n, std::size_t k, std::optional<std::size_t> d) {
  return "[" + std::to_string(n) + "," + std::to_string(k) + (d ? "," + std::to_string(*d) : std::string()) + "]";
}

Subset random_nonempty(const Prime& p, std::mt19937_64& rng) {
  Subset s(p);
  while (s.empty()) {
    for (std::uint64_t a = 0; a < p.value(); ++a)
      if (rng() & 1U) s.insert(a);
  }
  return s;
}

// ---------------------------------------------------------------------------
// qqr

struct QqrArgs {
  std::uint64_t p = 0;
  bool spectrum = false;
  bool dual_check = false;
  bool zeta = false;
  bool extended = false;
};

void cmd_qqr(const QqrArgs& a, const Globals& g, RunReport& rep) {
  const Prime p(a.p);
  rep.set_p(a.p);
  auto& res = rep.results();
  const LinearCode code = a.extended ? build_extended_qqr(p) : build_qqr(p);
  const std::string name = a.extended ? "C'" : "C_NQ";
  const bool enumerable = code.dimension() <= g.cap;

  std::optional<WeightDistribution> dist;
  std::optional<std::size_t> d;
  if (enumerable) {
    dist = weight_distribution(code, enum_opts(g));
    d = dist->min_nonzero_weight();
  }
  res["code"] = name;
  res["n"] = code.length();
  res["k"] = code.dimension();
  res["expected_k"] = a.extended ? p.value() : expected_qqr_dimension(p);
  res["d"] = d ? json(*d) : json(nullptr);
  std::cout << name << " for p = " << p.value() << ": " << code_params(code.length(), code.dimension(), d) << '\n';
  if (!enumerable) std::cout << "k = " << code.dimension() << " exceeds --cap " << g.cap << "; d not computed\n";

  if (!a.extended) {
    rep.check("dimension formula", code.dimension() == expected_qqr_dimension(p),
              "k = " + std::to_string(code.dimension()));
  }

  if (a.spectrum) {
    if (!dist) throw std::invalid_argument("--spectrum needs k <= cap (k = " + std::to_string(code.dimension()) + ")");
    res["distribution"] = qqrtool::to_json(*dist);
    std::cout << "weight distribution:\n";
    qqrtool::print_distribution(std::cout, *dist, g.csv);
    if (a.extended) {
      const auto base = weight_distribution(build_qqr(p), enum_opts(g));
      const bool sym = *dist == base + base.reversed();
      res["equals_a_plus_reversed"] = sym;
      res["formally_self_dual"] = macwilliams(*dist, code.length(), code.dimension()) == *dist;
      rep.verdict("Conjecture 4.2: A' = A + reverse(A)", sym);
      rep.verdict("formally self-dual", res["formally_self_dual"].get<bool>());
    }
  }

  if (a.dual_check) {
    const LinearCode cd = dual(code);
    if (p.value() % 4 == 3 && !a.extended) {
      const bool sd = code == cd;
      res["self_dual"] = sd;
      rep.verdict("Conjecture 3.2: self-dual", sd);
    } else {
      const auto si = sum_and_intersection(code, cd);
      res["intersection_dimension"] = si.intersection.dimension();
      res["sum_dimension"] = si.sum.dimension();
      rep.verdict("Conjecture 3.2: C cap C^perp = {0}", si.intersection.dimension() == 0);
      rep.verdict("Conjecture 3.2: C + C^perp = F^n", si.sum.dimension() == code.length());
    }
  }

  if (a.zeta) {
    if (!dist) throw std::invalid_argument("--zeta needs k <= cap");
    const auto z = zeta_report(*dist, code.length(), code.dimension(), 2, g.tol);
    res["zeta"] = qqrtool::to_json(z);
    qqrtool::print_zeta(std::cout, z);
    rep.verdict("Riemann hypothesis", z.rh_holds,
                std::to_string(z.on_circle_count) + " of " + std::to_string(z.zeros.size()) + " zeros on the circle");
  }
}

// ---------------------------------------------------------------------------
// lqr

struct LqrArgs {
  std::uint64_t p = 0;
  std::string subset;
  bool bar = false;
  bool structure = false;
  std::uint64_t pairs = 1000;
};

void cmd_lqr(const LqrArgs& a, const Globals& g, RunReport& rep) {
  const Prime p(a.p);
  rep.set_p(a.p);
  auto& res = rep.results();
  const LqrCode lqr = build_lqr(p);
  res["length"] = lqr.length();
  res["linear"] = lqr.is_linear();
  std::cout << "LQR code for p = " << p.value() << ": length " << lqr.length() << ", "
            << (lqr.is_linear() ? "linear" : "nonlinear") << '\n';
  if (p.value() <= 20) {
    const auto size = lqr.enumerate_size();
    res["size"] = size;
    std::cout << "|C| = " << size << '\n';
    const std::uint64_t expected = std::uint64_t{1} << (lqr.is_linear() ? p.value() - 1 : p.value());
    rep.check("|C| = 2^" + std::string(lqr.is_linear() ? "(p-1)" : "p"), size == expected);
  }

  if (!a.subset.empty()) {
    const auto s = Subset::parse(p, a.subset);
    const auto c = lqr.codeword(s);
    res["subset"] = qqrtool::to_json(s);
    res["codeword"] = c.to_string();
    res["weight"] = c.count();
    res["weight_formula"] = lqr.weight_formula(s);
    std::cout << "S = " << s.to_string() << "\nc_S = " << c.to_tuple() << "\nweight " << c.count() << '\n';
    rep.check("Lemma 5.4 weight formula", static_cast<std::int64_t>(c.count()) == lqr.weight_formula(s),
              "formula gives " + std::to_string(lqr.weight_formula(s)));
  }

  if (a.bar) {
    const auto r = lqr_bar_report(p, enum_opts(g), search_opts(g));
    res["bar"] = {{"dimension", r.dimension},         {"min_distance", r.min_distance},
                  {"max_point_count", r.max_point_count}, {"d_p", r.d_p},
                  {"predicted", r.predicted},         {"union_is_span", r.union_is_span}};
    std::cout << "C-bar: " << code_params(4 * p.value(), r.dimension, r.min_distance) << ", max |X_S| = "
              << r.max_point_count << ", d_p = " << r.d_p << ", min(d_p, 2p) = " << r.predicted << '\n';
    rep.check("C-bar dimension p + 1", r.dimension == p.value() + 1);
    rep.check("C-bar = C u V", r.union_is_span);
    rep.check("d(C-bar) >= min(d_p, 2p)", r.at_least_predicted);
    rep.verdict("d(C-bar) = min(d_p, 2p)", r.equals_predicted);
  }

  if (a.structure) {
    const auto r = lqr_structure_report(p, a.pairs, g.seed, enum_opts(g));
    res["structure"] = {{"size", r.size},
                        {"addition_law_holds", r.addition_law_holds},
                        {"v_equals_c", r.v_equals_c},
                        {"doubled_distribution_matches",
                         r.doubled_distribution_matches ? json(*r.doubled_distribution_matches) : json(nullptr)}};
    rep.check("c_S1 + c_S2 = v_{S1 delta S2}", r.addition_law_holds, std::to_string(a.pairs) + " sampled pairs");
    if (lqr.is_linear()) {
      rep.check("Lemma 5.2: v_S = c_S", r.v_equals_c);
      rep.check("Lemma 5.2: A^C_2w = A^NQ_w", r.doubled_distribution_matches.value_or(false));
    }
  }
}

// ---------------------------------------------------------------------------
// curve

struct CurveArgs {
  std::uint64_t p = 0;
  std::string subset;
  bool search = false;
  std::string strategy = "exhaustive";
  std::uint64_t budget = 100000;
  std::optional<std::uint64_t> moebius;
  bool voloch = false;
  std::optional<std::uint64_t> ell;
};

void print_search(const SearchResult& r) {
  const double p = static_cast<double>(r.p.value());
  std::cout << "max |X_S| = " << r.best_total << " at S = " << r.best.to_string() << " (" << qqr::to_string(r.strategy)
            << ", " << r.samples << " subsets, seed " << r.seed << ")\n";
  std::cout << "best/p = " << str(r.best_total / p, 5) << "   vs";
  for (double c : {1.39, 1.5, 1.57, 1.62, 5.0 / 3.0, 1.77}) {
    std::cout << "  " << str(c, 4) << (r.best_total > c * p ? "<" : ">=");
  }
  std::cout << '\n';
}

void cmd_curve(const CurveArgs& a, const Globals& g, RunReport& rep) {
  const Prime p(a.p);
  rep.set_p(a.p);
  auto& res = rep.results();
  bool did = false;
  if (!a.subset.empty()) {
    did = true;
    const auto s = Subset::parse(p, a.subset);
    const auto c = point_count(s);
    res["subset"] = qqrtool::to_json(s);
    res["char_sum"] = c.char_sum;
    res["affine"] = c.affine;
    res["at_infinity"] = c.at_infinity;
    res["total"] = c.total;
    res["genus"] = c.genus;
    std::cout << "S = " << s.to_string() << ", |S| = " << s.size() << ", genus " << c.genus << '\n'
              << "char_sum " << c.char_sum << "\naffine " << c.affine << " + " << c.at_infinity
              << " at infinity = total " << c.total << '\n';
    rep.check("total even (Cor 3.5)", c.total % 2 == 0);
    rep.check("total <= 2p + 2", c.total <= 2 * static_cast<std::int64_t>(p.value()) + 2);
    if (a.moebius) {
      const auto m = moebius_reduce(s, *a.moebius);
      res["moebius"] = {{"reduced", qqrtool::to_json(m.reduced)},
                        {"leading", m.leading},
                        {"scale", m.scale},
                        {"twist_corrected", m.twist_corrected},
                        {"total", m.reduced_total}};
      std::cout << "Moebius at a = " << *a.moebius << ": S' = " << m.reduced.to_string() << ", c = " << m.leading
                << ", u = " << m.scale << (m.twist_corrected ? " (twist corrected)" : "") << ", total "
                << m.reduced_total << '\n';
      rep.check("Moebius reduction preserves the count", m.reduced_total == c.total);
    }
  }
  if (a.search) {
    did = true;
    SearchOptions o = search_opts(g);
    o.strategy = parse_strategy(a.strategy);
    o.budget = a.budget;
    const auto r = max_point_count_search(p, o);
    res["search"] = qqrtool::to_json(r);
    print_search(r);
  }
  if (a.voloch) {
    did = true;
    const auto v = voloch_q_count(p);
    res["voloch"] = {{"total", v.total}, {"a", to_fraction_string(v.a)}};
    std::cout << "|X_Q| = " << v.total << " = 3p/2 " << signed_term(v.a) << '\n';
    rep.check("a in [-1/2, 5/2]", v.a >= Rational(-1, 2) && v.a <= Rational(5, 2));
  }
  if (a.ell) {
    did = true;
    const auto r = ell_power_construction(p, *a.ell);
    res["ell_power"] = {{"ell", *a.ell},
                        {"powers", qqrtool::to_json(r.powers)},
                        {"roots_of_unity", r.roots_of_unity},
                        {"condition_holds", r.condition_holds},
                        {"total", r.total},
                        {"a", to_fraction_string(r.a)}};
    std::cout << "P_" << *a.ell << " has " << r.powers.size() << " elements, splitting condition "
              << (r.condition_holds ? "holds" : "fails") << ", |X| = " << r.total << " = (2 - 1/" << *a.ell << ")p "
              << signed_term(r.a) << '\n';
    rep.verdict("splitting condition", r.condition_holds);
  }
  if (!did) throw std::invalid_argument("curve: give --subset, --search, --voloch or --ell");
}

// ---------------------------------------------------------------------------
// zeta

struct ZetaArgs {
  std::optional<std::uint64_t> p;
  bool extended = false;
  std::string distribution;
  std::optional<std::size_t> k;
  unsigned q = 2;
};

void cmd_zeta(const ZetaArgs& a, const Globals& g, RunReport& rep) {
  WeightDistribution w;
  std::size_t n = 0;
  std::size_t k = 0;
  if (a.p) {
    const Prime p(*a.p);
    rep.set_p(*a.p);
    const LinearCode c = a.extended ? build_extended_qqr(p) : build_qqr(p);
    w = weight_distribution(c, enum_opts(g));
    n = c.length();
    k = c.dimension();
  } else {
    if (a.distribution.empty() || !a.k) throw std::invalid_argument("zeta: give --p, or --distribution with --k");
    w = WeightDistribution::parse(a.distribution);
    n = w.length();
    k = *a.k;
  }
  const auto z = zeta_report(w, n, k, a.q, g.tol);
  rep.results()["zeta"] = qqrtool::to_json(z);
  rep.results()["distribution"] = qqrtool::to_json(w);
  std::cout << code_params(n, k, z.d) << " code, dual distance " << z.d_dual << '\n';
  qqrtool::print_zeta(std::cout, z);
  rep.check("P(1) = 1", z.poly(Rational(1)) == 1);
  rep.verdict("Riemann hypothesis", z.rh_holds);
}

// ---------------------------------------------------------------------------
// bounds

struct BoundsArgs {
  bool constants = false;
  std::optional<double> rate;
  std::optional<double> entropy_at;
  unsigned q = 2;
  std::vector<std::size_t> volume;
  std::vector<std::size_t> gv_dim;
};

void cmd_bounds(const BoundsArgs& a, const Globals&, RunReport& rep) {
  auto& res = rep.results();
  const bool any = a.rate || a.entropy_at || !a.volume.empty() || !a.gv_dim.empty();
  if (a.constants || !any) {
    const auto k = bound_constants();
    res["constants"] = {{"gv_delta_half", k.gv_delta_half},         {"mrrw_delta_half", k.mrrw_delta_half},
                        {"mrrw_c_half", k.mrrw_c_half},             {"gv_c_half", k.gv_c_half},
                        {"gv_delta_quarter", k.gv_delta_quarter},   {"gv_c_quarter", k.gv_c_quarter},
                        {"mrrw_delta_quarter", k.mrrw_delta_quarter}, {"mrrw_c_quarter", k.mrrw_c_quarter}};
    std::cout << "rate  GV delta  MRRW delta  2(1-GV)  2(1-MRRW)\n";
    std::cout << "1/2   " << fixed(k.gv_delta_half, 6) << "  " << fixed(k.mrrw_delta_half, 6) << "    "
              << fixed(k.gv_c_half, 5) << "  " << fixed(k.mrrw_c_half, 5) << '\n';
    std::cout << "1/4   " << fixed(k.gv_delta_quarter, 6) << "  " << fixed(k.mrrw_delta_quarter, 6) << "    "
              << fixed(k.gv_c_quarter, 5) << "  " << fixed(k.mrrw_c_quarter, 5) << '\n';
  }
  if (a.rate) {
    const double g = gv_delta(*a.rate);
    const double m = mrrw_delta(*a.rate);
    res["rate"] = {{"rate", *a.rate}, {"gv_delta", g}, {"mrrw_delta", m}};
    std::cout << "R = " << *a.rate << ": GV delta " << str(g, 8) << ", MRRW delta " << str(m, 8) << '\n';
  }
  if (a.entropy_at) {
    const double h = entropy(a.q, *a.entropy_at);
    res["entropy"] = {{"q", a.q}, {"delta", *a.entropy_at}, {"value", h}};
    std::cout << "H_" << a.q << "(" << *a.entropy_at << ") = " << str(h, 10) << '\n';
  }
  if (!a.volume.empty()) {
    if (a.volume.size() != 2) throw std::invalid_argument("--volume takes n,r");
    const auto v = hamming_volume(a.volume[0], a.volume[1]);
    res["volume"] = {{"n", a.volume[0]}, {"r", a.volume[1]}, {"value", v.str()}};
    std::cout << "V(" << a.volume[0] << ", " << a.volume[1] << ") = " << v << '\n';
  }
  if (!a.gv_dim.empty()) {
    if (a.gv_dim.size() != 2) throw std::invalid_argument("--gv-dimension takes n,d");
    const double k = gv_dimension(a.gv_dim[0], a.gv_dim[1]);
    res["gv_dimension"] = {{"n", a.gv_dim[0]}, {"d", a.gv_dim[1]}, {"value", k}};
    std::cout << "GV guarantees k >= " << str(k, 8) << " for n = " << a.gv_dim[0] << ", d = " << a.gv_dim[1] << '\n';
  }
}

// ---------------------------------------------------------------------------
// search

struct SearchArgs {
  std::uint64_t p = 0;
  std::string strategy = "exhaustive";
  std::uint64_t budget = 100000;
  std::optional<double> c;
  std::optional<double> tau;
  std::uint64_t exhaustive_cap = 24;
};

void cmd_search(const SearchArgs& a, const Globals& g, RunReport& rep) {
  const Prime p(a.p);
  rep.set_p(a.p);
  SearchOptions o = search_opts(g);
  o.strategy = parse_strategy(a.strategy);
  o.budget = a.budget;
  o.exhaustive_cap = a.exhaustive_cap;
  auto& res = rep.results();
  const auto r = max_point_count_search(p, o);
  res["search"] = qqrtool::to_json(r);
  print_search(r);
  rep.check("best total is a point count", point_count(r.best).total == r.best_total);
  if (p.value() % 4 == 3) {
    rep.verdict("Cor 3.7: max > 5p/3 - 4", 3 * r.best_total > 5 * static_cast<std::int64_t>(p.value()) - 12,
                "witness " + r.best.to_string());
  }
  if (a.c) {
    const auto b = b_statement(p, *a.c, o);
    res["b_statement"] = {{"c", *a.c},
                          {"decided", b.decided},
                          {"holds_so_far", b.holds_so_far},
                          {"witness", b.witness ? qqrtool::to_json(*b.witness) : json(nullptr)},
                          {"max_seen", b.max_seen}};
    rep.verdict("B(" + str(*a.c) + ", p)", b.holds_so_far,
                b.decided ? "exhaustive" : "no counterexample within budget is not a proof");
  }
  if (a.tau) {
    const auto t = tarnanen_window(p, *a.tau, o);
    res["tarnanen"] = {{"tau", *a.tau},
                       {"exhaustive", t.exhaustive},
                       {"all_in_window", t.all_in_window},
                       {"checked", t.checked},
                       {"witness", t.witness ? qqrtool::to_json(*t.witness) : json(nullptr)},
                       {"witness_total", t.witness_total}};
    rep.verdict("0.42p < |X_S| < 1.42p for |S| <= tau p", t.all_in_window,
                t.witness ? "witness " + t.witness->to_string() + " with " + std::to_string(t.witness_total) + " points"
                          : std::to_string(t.checked) + " subsets");
  }
}

// ---------------------------------------------------------------------------
// verify

void cmd_verify(std::uint64_t pv, const Globals& g, RunReport& rep) {
  const Prime p(pv);
  rep.set_p(pv);
  auto& res = rep.results();
  const bool one_mod_four = pv % 4 == 1;
  const auto pp = static_cast<std::int64_t>(pv);

  const LinearCode c = build_qqr(p);
  rep.check("dimension formula", c.dimension() == expected_qqr_dimension(p),
            "[" + std::to_string(c.length()) + "," + std::to_string(c.dimension()) + "]");

  // Prop 3.4: three-way weight agreement
  {
    const QqrContext ctx(p);
    std::uint64_t n = 0;
    bool ok = true;
    bool even = true;
    std::string bad;
    auto visit = [&](const Subset& s) {
      const auto w = weight_agreement(ctx, s);
      ++n;
      if (!w.agree() && ok) {
        ok = false;
        bad = "S = " + s.to_string();
      }
      even = even && w.ring % 2 == 0;
    };
    if (pv <= 16) {
      for (std::uint64_t m = 1; m < (std::uint64_t{1} << pv); ++m) visit(Subset::from_mask(p, m));
    } else {
      std::mt19937_64 rng(g.seed);
      for (int i = 0; i < 10000; ++i) visit(random_nonempty(p, rng));
    }
    rep.check("Prop 3.4 three-way weight agreement", ok, ok ? std::to_string(n) + " subsets" : bad);
    rep.check("Cor 3.5 even weights", even);
  }

  // Conjecture 3.2 and the bounds that assume it
  const auto conj = conjecture_checks(p, enum_opts(g), search_opts(g));
  if (one_mod_four) {
    rep.verdict("Conjecture 3.2: C cap C^perp = {0}", conj.intersection_trivial);
    rep.verdict("Conjecture 3.2: C + C^perp = F^2p", conj.sum_full);
  } else {
    rep.verdict("Conjecture 3.2: self-dual", conj.self_dual);
  }
  res["k"] = c.dimension();
  res["d"] = conj.min_distance ? json(*conj.min_distance) : json(nullptr);
  if (conj.min_distance) {
    if (conj.upper_bound) {
      rep.verdict("Lemma 3.3: d <= 4[p/12] + 6", conj.upper_bound_holds,
                  "d = " + std::to_string(*conj.min_distance) + ", bound " + std::to_string(*conj.upper_bound));
    }
    if (conj.sqrt_bound_holds) rep.verdict("Remark 3.1: d >= sqrt(p)", conj.sqrt_bound_holds);
  } else {
    rep.skip("minimum distance", "k exceeds --cap");
  }

  // Conjecture 4.2
  if (one_mod_four) {
    if (c.dimension() + 1 <= g.cap) {
      const auto r = extended_qqr_report(p, enum_opts(g));
      rep.check("C' has dimension p", r.dimension_is_p);
      rep.verdict("Conjecture 4.2: A' = A + reverse(A)", r.equals_a_plus_reversed);
      rep.verdict("C' formally self-dual", r.formally_self_dual);
    } else {
      rep.skip("Conjecture 4.2", "k exceeds --cap");
    }
  }

  // LQR
  const LqrCode lqr = build_lqr(p);
  {
    std::mt19937_64 rng(g.seed ^ 0x9e3779b97f4a7c15ULL);
    bool weight_ok = true;
    for (int i = 0; i < 1000; ++i) {
      const auto s = random_nonempty(p, rng);
      weight_ok = weight_ok && static_cast<std::int64_t>(lqr.codeword(s).count()) == lqr.weight_formula(s);
    }
    rep.check(one_mod_four ? "Lemma 5.4 weight formula" : "Theorem 5.1: every c_S has weight 2p", weight_ok,
              "1000 sampled S");
  }
  if (pv <= 20) {
    const auto size = lqr.enumerate_size();
    rep.check(one_mod_four ? "|C| = 2^(p-1)" : "|C| = 2^p",
              size == (std::uint64_t{1} << (one_mod_four ? pv - 1 : pv)), std::to_string(size));
  }
  if (one_mod_four) {
    if (c.dimension() <= g.cap && pv <= 20) {
      const auto r = lqr_structure_report(p, 1000, g.seed, enum_opts(g));
      rep.check("Lemma 5.2: v_S = c_S, c_S1 + c_S2 = c_{S1 delta S2}", r.v_equals_c && r.addition_law_holds);
      rep.check("Lemma 5.2: A^C_2w = A^NQ_w", r.doubled_distribution_matches.value_or(false));
    }
  } else if (pv <= 20) {
    const auto r = lqr_bar_report(p, enum_opts(g), search_opts(g));
    rep.check("Lemma 5.3: C-bar has dimension p + 1", r.dimension == pv + 1);
    rep.check("C-bar = C u V", r.union_is_span);
    rep.check("Theorem 5.1: d(C-bar) >= min(d_p, 2p)", r.at_least_predicted,
              "d = " + std::to_string(r.min_distance) + ", min(d_p, 2p) = " + std::to_string(r.predicted));
    rep.verdict("Lemma 5.3: d(C-bar) = min(d_p, 2p)", r.equals_predicted);
  }

  // Cor 3.7
  {
    SearchOptions o = search_opts(g);
    if (pv > o.exhaustive_cap) o.strategy = Strategy::random;
    const auto r = max_point_count_search(p, o);
    res["search"] = qqrtool::to_json(r);
    std::cout << "Cor 3.7 witness: S = " << r.best.to_string() << ", |X_S| = " << r.best_total << " ("
              << qqr::to_string(r.strategy) << ")\n";
    if (!one_mod_four) {
      rep.verdict("Cor 3.7: max |X_S| > 5p/3 - 4", 3 * r.best_total > 5 * pp - 12,
                  "S = " + r.best.to_string() + ", |X_S| = " + std::to_string(r.best_total));
    }
    rep.check("B(2, p): |X_S| <= 2p + 2", r.best_total <= 2 * pp + 2);
  }

  // Voloch
  if (pv % 8 == 1 || pv % 8 == 3) {
    const auto v = voloch_q_count(p);
    res["voloch"] = {{"total", v.total}, {"a", to_fraction_string(v.a)}};
    rep.check("Voloch: |X_Q| = 3p/2 + a, a in [-1/2, 5/2]", v.a >= Rational(-1, 2) && v.a <= Rational(5, 2),
              "a = " + to_fraction_string(v.a));
  }
  if ((pv - 1) % 3 == 0) {
    const auto r = ell_power_construction(p, 3);
    rep.verdict("l = 3 splitting condition", r.condition_holds,
                "|X_P3| = " + std::to_string(r.total) + " = (5/3)p " + signed_term(r.a));
  }

  // Moebius reduction on a sample of even subsets
  {
    std::mt19937_64 rng(g.seed + 1);
    int tested = 0;
    for (int i = 0; i < 200 && tested < 50; ++i) {
      auto s = random_nonempty(p, rng);
      if (s.size() % 2) continue;
      moebius_reduce(s, s.elements().front());  // throws on disagreement
      ++tested;
    }
    rep.check("Moebius reduction preserves point counts", true, std::to_string(tested) + " subsets");
  }
}

std::vector<std::string> argv_vector(int argc, char** argv) { return {argv, argv + argc}; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-quadratic residue codes and hyperelliptic curves"};
  app.set_version_flag("--version", qqrtool::kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "RNG seed for sampling strategies");
  app.add_option("--threads", g.threads, "worker threads (0: one per core)");
  app.add_option("--tol", g.tol, "zero-on-circle tolerance")->check(CLI::PositiveNumber);
  app.add_option("--cap", g.cap, "largest dimension enumerated exhaustively");
  app.add_option("--json", g.json_path, "write the full report to this path");
  app.add_flag("--csv", g.csv, "print distributions as CSV");

  QqrArgs qa;
  auto* qqr_cmd = app.add_subcommand("qqr", "build C_NQ (or C' with --extended) and report on it");
  qqr_cmd->add_option("--p", qa.p, "odd prime")->required();
  qqr_cmd->add_flag("--spectrum", qa.spectrum, "weight distribution");
  qqr_cmd->add_flag("--dual-check", qa.dual_check, "Conjecture 3.2 rank checks");
  qqr_cmd->add_flag("--zeta", qa.zeta, "Duursma zeta polynomial and its zeros");
  qqr_cmd->add_flag("--extended", qa.extended, "use C' = C_NQ + all-ones (p = 1 mod 4)");

  LqrArgs la;
  auto* lqr_cmd = app.add_subcommand("lqr", "LQR code checks");
  lqr_cmd->add_option("--p", la.p, "odd prime")->required();
  lqr_cmd->add_option("--subset", la.subset, "print c_S, e.g. 1,2,3");
  lqr_cmd->add_flag("--bar", la.bar, "C-bar = C u V report (p = 3 mod 4)");
  lqr_cmd->add_flag("--structure", la.structure, "linearity and Lemma 5.2 checks");
  lqr_cmd->add_option("--pairs", la.pairs, "sampled pairs for the addition law");

  CurveArgs ca;
  auto* curve_cmd = app.add_subcommand("curve", "point counts of y^2 = f_S(x)");
  curve_cmd->add_option("--p", ca.p, "odd prime")->required();
  curve_cmd->add_option("--subset", ca.subset, "S, e.g. 1,2,3,4");
  curve_cmd->add_flag("--search", ca.search, "maximize |X_S| over S");
  curve_cmd->add_option("--strategy", ca.strategy, "exhaustive, random or greedy");
  curve_cmd->add_option("--budget", ca.budget, "evaluations for sampling strategies");
  curve_cmd->add_option("--moebius", ca.moebius, "reduce an even-degree model at this root");
  curve_cmd->add_flag("--voloch", ca.voloch, "|X_Q| for p = 1, 3 mod 8");
  curve_cmd->add_option("--ell", ca.ell, "l-th power construction");

  ZetaArgs za;
  auto* zeta_cmd = app.add_subcommand("zeta", "Duursma zeta polynomial of a weight distribution");
  zeta_cmd->add_option("--p", za.p, "use the QQR code for this prime");
  zeta_cmd->add_flag("--extended", za.extended, "use C' (p = 1 mod 4)");
  zeta_cmd->add_option("--distribution", za.distribution, "\"[a0, a1, ..., an]\"");
  zeta_cmd->add_option("--k", za.k, "dimension for --distribution");
  zeta_cmd->add_option("--q", za.q, "field size")->check(CLI::Range(2U, 1U << 20));

  BoundsArgs ba;
  auto* bounds_cmd = app.add_subcommand("bounds", "GV and MRRW asymptotics");
  bounds_cmd->add_flag("--constants", ba.constants, "table of the rate-1/2 and rate-1/4 constants");
  bounds_cmd->add_option("--rate", ba.rate, "GV and MRRW delta at this rate");
  bounds_cmd->add_option("--entropy", ba.entropy_at, "H_q(delta)");
  bounds_cmd->add_option("--q", ba.q, "alphabet size for --entropy");
  bounds_cmd->add_option("--volume", ba.volume, "V(n, r) as n,r")->delimiter(',');
  bounds_cmd->add_option("--gv-dimension", ba.gv_dim, "n - log2 V(n, d-1) as n,d")->delimiter(',');

  SearchArgs sa;
  auto* search_cmd = app.add_subcommand("search", "extremal point-count search");
  search_cmd->add_option("--p", sa.p, "odd prime")->required();
  search_cmd->add_option("--strategy", sa.strategy, "exhaustive, random or greedy");
  search_cmd->add_option("--budget", sa.budget, "evaluations for sampling strategies");
  search_cmd->add_option("--b", sa.c, "decide or refute B(c, p)");
  search_cmd->add_option("--tau", sa.tau, "Tarnanen window check for |S| <= tau p");
  search_cmd->add_option("--exhaustive-cap", sa.exhaustive_cap, "largest p searched exhaustively");

  std::uint64_t verify_p = 0;
  auto* verify_cmd = app.add_subcommand("verify", "replay every finite-p check for one prime");
  verify_cmd->add_option("--p", verify_p, "odd prime")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto* sub = app.get_subcommands().front();
  RunReport rep(sub->get_name(), argv_vector(argc, argv), g.seed);
  try {
    if (sub == qqr_cmd) cmd_qqr(qa, g, rep);
    else if (sub == lqr_cmd) cmd_lqr(la, g, rep);
    else if (sub == curve_cmd) cmd_curve(ca, g, rep);
    else if (sub == zeta_cmd) cmd_zeta(za, g, rep);
    else if (sub == bounds_cmd) cmd_bounds(ba, g, rep);
    else if (sub == search_cmd) cmd_search(sa, g, rep);
    else if (sub == verify_cmd) cmd_verify(verify_p, g, rep);
  } catch (const CrossCheckError& e) {
    std::cerr << "internal cross-check failed: " << e.what() << '\n';
    rep.check("internal cross-check", false, e.what());
    if (!g.json_path.empty()) rep.write(g.json_path);
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\nRun with --help for usage.\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  if (!rep.checks().empty()) {
    std::cout << "checks:\n";
    qqrtool::print_checks(std::cout, rep.checks());
  }
  if (!g.json_path.empty()) rep.write(g.json_path);
  return rep.any_failed() ? 1 : 0;
}
