// Command-line front end: group inspection, length tables, Poincare
// polynomials, (skew) Hasse algebra analysis, dual-reflection screening,
// the builtin D8 coaction model, and the regression corpus.
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "halg/coaction.hpp"
#include "halg/frobenius.hpp"
#include "halg/group_io.hpp"
#include "halg/screening.hpp"

using namespace halg;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";

struct Options {
  std::string group_spec;
  std::string gens;
  std::string format = "text";
  int max_size = 0;  // 0 = unlimited
  int order = 8;     // truncation degree N
  std::string q = "-1";
  std::string a = "2";
  unsigned seed = 1;
};

GeneratingSet resolve_gens(const FiniteGroup& g, const std::string& list) {
  std::vector<int> members;
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    int found = -1;
    for (int x = 0; x < g.order; ++x)
      if (g.label(x) == tok) found = x;
    if (found < 0) {
      try {
        size_t used = 0;
        const int idx = std::stoi(tok, &used);
        if (used == tok.size() && idx >= 0 && idx < g.order) found = idx;
      } catch (...) {
      }
    }
    if (found < 0) throw ParseError("unknown element label: " + tok);
    members.push_back(found);
  }
  return GeneratingSet::of(std::move(members));
}

std::string word_str(const FiniteGroup& g, const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string out;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) out += "*";
    out += g.label(word[i]);
  }
  return out;
}

json certificate_json(const CyclotomicCertificate& cert) {
  json factors = json::array();
  for (const auto& [n, mult] : cert.factors) factors.push_back({{"n", n}, {"multiplicity", mult}});
  return {{"scalar", rat_to_string(cert.scalar)}, {"factors", factors}};
}

void render_text(const json& doc, std::ostream& out) {
  // Flat, human-oriented rendering of the structured report.
  out << doc["tool"].get<std::string>() << " " << doc["version"].get<std::string>() << " — "
      << doc["command"].get<std::string>() << "\n";
  for (const auto& [k, v] : doc["config"].items()) out << "  " << k << ": " << v.dump() << "\n";
  if (doc.contains("checks")) {
    for (const auto& c : doc["checks"])
      out << (c["pass"].get<bool>() ? "[PASS] " : "[FAIL] ") << c["name"].get<std::string>()
          << (c.contains("detail") ? "  (" + c["detail"].get<std::string>() + ")" : "") << "\n";
    out << (doc["all_pass"].get<bool>() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
  }
  if (doc.contains("results")) out << doc["results"].dump(2) << "\n";
}

void emit(const json& doc, const Options& opt) {
  if (opt.format == "structured")
    std::cout << doc.dump(2) << "\n";
  else
    render_text(doc, std::cout);
}

json make_doc(const std::string& command, const Options& opt, json config) {
  config["seed"] = opt.seed;
  return {{"tool", "halg"}, {"version", kVersion}, {"command", command},
          {"config", std::move(config)}};
}

struct Checker {
  json checks = json::array();
  bool all_pass = true;

  void check(const std::string& name, bool pass, const std::string& detail = "") {
    json c = {{"name", name}, {"pass", pass}};
    if (!detail.empty()) c["detail"] = detail;
    checks.push_back(std::move(c));
    all_pass = all_pass && pass;
  }
  void finish(json& doc) {
    doc["checks"] = checks;
    doc["all_pass"] = all_pass;
  }
};

int run_group_info(const Options& opt) {
  FiniteGroup g = group_from_spec(opt.group_spec);
  json doc = make_doc("group-info", opt, {{"group", opt.group_spec}});
  json elems = json::array();
  for (int x = 0; x < g.order; ++x)
    elems.push_back({{"index", x}, {"label", g.label(x)}, {"order", element_order(g, x)},
                     {"inverse", g.inv(x)}});
  json center_labels = json::array();
  for (int x : center(g)) center_labels.push_back(g.label(x));
  doc["results"] = {{"order", g.order}, {"elements", elems}, {"center", center_labels}};
  emit(doc, opt);
  return 0;
}

int run_lengths(const Options& opt) {
  FiniteGroup g = group_from_spec(opt.group_spec);
  GeneratingSet re = resolve_gens(g, opt.gens);
  LengthTable lt = length_table(g, re);
  json doc = make_doc("lengths", opt, {{"group", opt.group_spec}, {"gens", opt.gens}});
  json rows = json::array();
  for (int x = 0; x < g.order; ++x)
    rows.push_back({{"label", g.label(x)}, {"length", lt.lengths[x]},
                    {"witness", word_str(g, witness_word(lt, x))}});
  doc["results"] = {{"max_length", lt.max_length()}, {"table", rows}};
  emit(doc, opt);
  return 0;
}

int run_poincare(const Options& opt) {
  FiniteGroup g = group_from_spec(opt.group_spec);
  GeneratingSet re = resolve_gens(g, opt.gens);
  LengthTable lt = length_table(g, re);
  IntSeries p = poincare_polynomial(lt);
  json doc = make_doc("poincare", opt, {{"group", opt.group_spec}, {"gens", opt.gens}});
  json res = {{"poincare", p.str()},
              {"palindrome", is_palindrome(p)},
              {"value_at_1", rat_to_string(p.eval(Rat(1)))}};
  if (auto m = unique_max(lt)) {
    res["top"] = g.label(*m);
    res["top_length"] = lt.lengths[*m];
  }
  if (auto cert = cyclotomic_factor(p))
    res["cyclotomic_certificate"] = certificate_json(*cert);
  else
    res["cyclotomic_certificate"] = nullptr;
  doc["results"] = res;
  emit(doc, opt);
  return 0;
}

int run_hasse(const Options& opt) {
  FiniteGroup g = group_from_spec(opt.group_spec);
  GeneratingSet re = resolve_gens(g, opt.gens);
  GradedAlgebraTable a = hasse_algebra(g, re);
  json doc = make_doc("hasse", opt, {{"group", opt.group_spec}, {"gens", opt.gens}});
  json entries = json::array();
  for (const auto& [key, val] : a.structure)
    entries.push_back({{"g", g.label(key.first)}, {"h", g.label(key.second)},
                       {"gh", g.label(g.mul(key.first, key.second))},
                       {"alpha", rat_to_string(val)}});
  doc["results"] = {{"dimension", g.order},
                    {"hilbert_series", hilbert_series(a).str()},
                    {"top", a.top ? json(g.label(*a.top)) : json(nullptr)},
                    {"associative", !check_associativity(a).has_value()},
                    {"nonzero_products", entries}};
  emit(doc, opt);
  return 0;
}

int run_frobenius(const Options& opt) {
  FiniteGroup g = group_from_spec(opt.group_spec);
  GeneratingSet re = resolve_gens(g, opt.gens);
  GradedAlgebraTable a = hasse_algebra(g, re);
  json doc = make_doc("frobenius", opt, {{"group", opt.group_spec}, {"gens", opt.gens}});
  json res = {{"frobenius", is_frobenius(a)}};
  if (is_frobenius(a)) {
    res["symmetric"] = is_symmetric_frobenius(a);
    res["top"] = g.label(*a.top);
    MonomialAutomorphism mu = nakayama(a);
    json perm = json::array();
    for (int x = 0; x < g.order; ++x)
      perm.push_back({{"from", g.label(x)}, {"to", g.label(mu.perm[x])},
                      {"scalar", rat_to_string(mu.scalars[x])}});
    res["nakayama"] = perm;
    res["conjugation_by_top"] = check_nakayama_is_conjugation(a);
    res["order_divides_factorial"] = nakayama_order_divides_factorial(a);
    json beta = json::array();
    for (const Rat& b : beta_scalars(a)) beta.push_back(rat_to_string(b));
    res["beta"] = beta;
  }
  doc["results"] = res;
  emit(doc, opt);
  return 0;
}

int run_screen(const Options& opt) {
  FiniteGroup g = group_from_spec(opt.group_spec);
  std::optional<int> cap;
  if (opt.max_size > 0) cap = opt.max_size;
  ScreenReport r = dual_reflection_screen(g, cap);
  json doc = make_doc("screen", opt, {{"group", opt.group_spec}, {"max_size", opt.max_size}});
  json buckets = json::array();
  for (const auto& b : r.candidates) {
    json sets = json::array();
    for (const auto& [re, m] : b.sets) {
      json labels = json::array();
      for (int x : re.members) labels.push_back(g.label(x));
      sets.push_back({{"gens", labels}, {"top", g.label(m)}});
    }
    buckets.push_back({{"poincare", b.poincare.str()},
                       {"certificate", certificate_json(b.certificate)},
                       {"top_length", b.top_length},
                       {"sets", sets}});
  }
  doc["results"] = {{"subsets_scanned", r.subsets_scanned},
                    {"candidate_sets", r.candidate_sets()},
                    {"candidates", buckets},
                    {"rejected", {{"not_generating", r.not_generating},
                                  {"not_palindrome", r.not_palindrome},
                                  {"no_unique_top", r.no_unique_top},
                                  {"not_cyclotomic", r.not_cyclotomic},
                                  {"wrong_value_at_one", r.wrong_value_at_one}}}};
  emit(doc, opt);
  return 0;
}

// Checklist mirroring the structure theory on the builtin D8 model.
void verify_d8_checks(Checker& ck, const Rat& q, const Rat& a, int order,
                      const std::string& tag = "") {
  CoactionModel m = d8_model(q, a);
  const FiniteGroup& g = m.group();
  LengthTable lt = length_table(g, m.degree_one_set());

  IntSeries inv = component_series(m, 0, order);
  bool inv_ok = true;
  for (int n = 0; n <= order; ++n) {
    const Rat expect = n % 2 ? Rat(0) : Rat((n / 2 + 1) * (n / 2 + 2) / 2);
    inv_ok = inv_ok && inv.coeff(n) == expect;
  }
  ck.check("invariant component series = 1/(1-t^2)^3" + tag, inv_ok);

  bool lowest_ok = true;
  try {
    auto low = lowest_generators(m, order);
    for (const auto& [x, lc] : low) lowest_ok = lowest_ok && lc.degree == lt.lengths[x];
    lowest_ok = lowest_ok && low.size() == static_cast<size_t>(g.order);
  } catch (const std::exception&) {
    lowest_ok = false;
  }
  ck.check("each A_g has 1-dim lowest component at degree l(g)" + tag, lowest_ok);

  bool cov_ok = true;
  try {
    IntSeries p = covariant_series(m, order);
    const IntSeries expect = poincare_polynomial(lt);
    Rat at_one(0);
    for (int n = 0; n <= order; ++n) {
      cov_ok = cov_ok && p.coeff(n) == expect.coeff(n);
      at_one += p.coeff(n);
    }
    cov_ok = cov_ok && at_one == g.order && expect.degree() == lt.max_length();
  } catch (const std::exception&) {
    cov_ok = false;
  }
  ck.check("covariant series = Poincare polynomial, p(1) = |G|" + tag, cov_ok);

  NormalityReport nr = check_fm_normal(m, order);
  ck.check("f_m is normal within the truncation" + tag, nr.normal && nr.mass == 7);
  ck.check("phi_m matches beta(g) f_{mgm^-1} with beta(m) = 1" + tag,
           nr.phi_matches && nr.beta.size() == 8 && nr.beta[7] == 1);

  bool decomp_ok = true;
  try {
    decomp_ok = product_decomposition_scalar(m, order) != 0;
  } catch (const std::exception&) {
    decomp_ok = false;
  }
  ck.check("f_m = c f_g1 f_g2 f_g3 with c != 0" + tag, decomp_ok);

  bool cova_ok = true;
  try {
    GradedAlgebraTable cov = covariant_algebra(m, order);
    cova_ok = !check_associativity(cov) && is_frobenius(cov) &&
              check_nakayama_is_conjugation(cov);
  } catch (const std::exception&) {
    cova_ok = false;
  }
  ck.check("projected covariant algebra is Frobenius" + tag, cova_ok);
}

int run_verify_d8(const Options& opt) {
  const Rat q = rat_from_string(opt.q);
  const Rat a = rat_from_string(opt.a);
  json doc = make_doc("verify-d8", opt,
                      {{"q", opt.q}, {"a", opt.a}, {"N", opt.order}});
  Checker ck;
  verify_d8_checks(ck, q, a, opt.order);
  ck.finish(doc);
  emit(doc, opt);
  return ck.all_pass ? 0 : 1;
}

// Seeded coboundary twist sweep used by the corpus command.
void twist_checks(Checker& ck, std::mt19937& rng, const FiniteGroup& g, const GeneratingSet& re,
                  const std::string& tag, int trials) {
  bool ok = true;
  for (int t = 0; t < trials && ok; ++t) {
    std::vector<Rat> w = {Rat(1)};
    for (int x = 1; x < g.order; ++x) {
      int num = static_cast<int>(rng() % 9) - 4;
      if (num == 0) num = 3;
      w.emplace_back(num, 1 + static_cast<int>(rng() % 4));
    }
    try {
      GradedAlgebraTable a = skew_hasse_from_weights(g, re, w);
      std::vector<Rat> beta = beta_scalars(a);  // throws on any formula mismatch
      ok = ok && is_frobenius(a) && beta[*a.top] == 1;
    } catch (const std::exception&) {
      ok = false;
    }
  }
  ck.check("coboundary twists stay Frobenius with consistent beta: " + tag, ok);
}

int run_corpus(const Options& opt) {
  json doc = make_doc("corpus", opt, json::object());
  Checker ck;
  std::mt19937 rng(opt.seed);

  {  // quaternion example
    FiniteGroup q8 = group_quaternion();
    GeneratingSet re = GeneratingSet::of({2, 4, 5});
    GradedAlgebraTable a = hasse_algebra(q8, re);
    ck.check("Q8 {i,j,-j}: Poincare (1+t)^3",
             hilbert_series(a).str() == "1+3t+3t^2+t^3");
    bool frob = is_frobenius(a) && !is_symmetric_frobenius(a);
    MonomialAutomorphism mu = nakayama(a);
    bool naka = mu.perm[2] == 2 && mu.perm[4] == 5 && mu.perm[5] == 4;
    for (int x = 0; x < 8; ++x) naka = naka && mu.perm[mu.perm[x]] == x;
    ck.check("Q8: non-symmetric Frobenius, Nakayama fixes x1, swaps x2/x3, order 2",
             frob && naka && check_nakayama_is_conjugation(a));
    twist_checks(ck, rng, q8, re, "Q8", 20);
  }
  {  // symmetric group example
    FiniteGroup s3 = group_symmetric(3);
    int x1 = -1, x2 = -1;
    for (int x = 0; x < 6; ++x) {
      if (s3.label(x) == "(12)") x1 = x;
      if (s3.label(x) == "(23)") x2 = x;
    }
    GeneratingSet re = GeneratingSet::of({x1, x2});
    GradedAlgebraTable a = hasse_algebra(s3, re);
    ck.check("S3 {(12),(23)}: Poincare 1+2t+2t^2+t^3",
             hilbert_series(a).str() == "1+2t+2t^2+t^3");
    MonomialAutomorphism mu = nakayama(a);
    ck.check("S3: non-symmetric Frobenius, Nakayama interchanges x1, x2",
             is_frobenius(a) && !is_symmetric_frobenius(a) && mu.perm[x1] == x2 &&
                 mu.perm[x2] == x1 && check_nakayama_is_conjugation(a));
    twist_checks(ck, rng, s3, re, "S3", 20);
  }
  for (int n = 3; n <= 8; ++n) {  // dihedral Coxeter family
    FiniteGroup g = group_dihedral(n);
    GeneratingSet re = GeneratingSet::of({n, n + 1});
    LengthTable lt = length_table(g, re);
    IntSeries p = poincare_polynomial(lt);
    GradedAlgebraTable a = hasse_algebra(g, re);
    const auto top = unique_max(lt);
    bool ok = top.has_value() && p.eval(Rat(1)) == 2 * n &&
              cyclotomic_factor(p).has_value() && is_frobenius(a) &&
              is_symmetric_frobenius(a) == (n % 2 == 0);
    if (n % 2 == 0) ok = ok && top == n / 2;  // rho^{n/2}
    ck.check("D" + std::to_string(2 * n) + " Coxeter: unique top, symmetric iff n even", ok);
  }
  for (const Rat& q : {Rat(-1), Rat(1)})  // D8 coaction model
    verify_d8_checks(ck, q, Rat(2), opt.order, q == 1 ? " (q=1)" : " (q=-1)");
  {  // quaternion screen
    ScreenReport r = dual_reflection_screen(group_quaternion());
    bool ok = r.subsets_scanned == 128 && r.candidates.size() == 1 &&
              r.candidates[0].poincare.str() == "1+3t+3t^2+t^3" &&
              r.candidates[0].certificate.factors ==
                  std::vector<std::pair<int, int>>{{2, 3}};
    ck.check("Q8 screen: unique surviving polynomial (1+t)^3 = Phi_2^3", ok);
  }

  ck.finish(doc);
  emit(doc, opt);
  return ck.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for lengths, Hasse algebras, and dual-reflection screening"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool needs_group, bool needs_gens) {
    auto* g = sub->add_option("--group", opt.group_spec, "group file or builtin:NAME");
    if (needs_group) g->required();
    if (needs_gens) sub->add_option("--gens", opt.gens, "comma-separated element labels")->required();
    sub->add_option("--format", opt.format, "text | structured")
        ->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--seed", opt.seed, "seed for randomized sweeps");
  };

  auto* info = app.add_subcommand("group-info", "validate and describe a group");
  add_common(info, true, false);
  auto* lengths = app.add_subcommand("lengths", "BFS length table and witnesses");
  add_common(lengths, true, true);
  auto* poincare = app.add_subcommand("poincare", "Poincare polynomial and certificate");
  add_common(poincare, true, true);
  auto* hasse = app.add_subcommand("hasse", "Hasse algebra structure");
  add_common(hasse, true, true);
  auto* frob = app.add_subcommand("frobenius", "Frobenius analysis and Nakayama data");
  add_common(frob, true, true);
  auto* screen = app.add_subcommand("screen", "dual-reflection candidate screen");
  add_common(screen, true, false);
  screen->add_option("--max-size", opt.max_size, "cap on generating-set size (0 = none)");
  auto* verify = app.add_subcommand("verify-d8", "verify the builtin D8 coaction model");
  add_common(verify, false, false);
  verify->add_option("--q", opt.q, "parameter q (1 or -1)");
  verify->add_option("--a", opt.a, "parameter a (nonzero rational)");
  verify->add_option("--N", opt.order, "truncation degree");
  auto* corpus = app.add_subcommand("corpus", "run the full example corpus");
  add_common(corpus, false, false);
  corpus->add_option("--N", opt.order, "truncation degree for the coaction model");

  CLI11_PARSE(app, argc, argv);

  try {
    if (info->parsed()) return run_group_info(opt);
    if (lengths->parsed()) return run_lengths(opt);
    if (poincare->parsed()) return run_poincare(opt);
    if (hasse->parsed()) return run_hasse(opt);
    if (frob->parsed()) return run_frobenius(opt);
    if (screen->parsed()) return run_screen(opt);
    if (verify->parsed()) return run_verify_d8(opt);
    if (corpus->parsed()) return run_corpus(opt);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {  // BadParameter, bad flags
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {  // validation and math-domain errors on inputs
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
