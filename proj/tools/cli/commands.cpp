#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include "dsl.hpp"
#include "mfcalc/bundle.hpp"
#include "mfcalc/error.hpp"
#include "mfcalc/json_io.hpp"
#include "mfcalc/selftest.hpp"
#include "mfcalc/spectral.hpp"
#include "mfcalc/suspension.hpp"
#include "mfcalc/torus.hpp"

namespace mfcalc::cli {

namespace {

struct Options {
  bool json = false;
  bool quiet = false;
};

std::string join(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

// w2 as true / false, or nullopt when it cannot be decided.
std::optional<bool> try_w2(const ManifoldExpr& m) {
  try {
    return w2_nonzero(m);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

json manifold_entry(const ManifoldExpr& m) {
  return {{"expr", m.to_string()}, {"manifold", to_json(m)}};
}

void emit(std::ostream& out, const Options& o, const json& j, const std::string& text) {
  if (o.json) {
    out << j.dump(2) << "\n";
  } else {
    out << text;
  }
}

int cmd_eval(const Options& o, const std::string& text, std::ostream& out) {
  const ManifoldExpr m = parse_expr(text);
  emit(out, o, manifold_entry(m), m.to_string() + "\n");
  return 0;
}

int cmd_homology(const Options& o, const std::string& text, std::ostream& out) {
  const ManifoldExpr m = parse_expr(text);
  const GradedGroup h = homology(m);
  const auto w2 = try_w2(m);
  const Integer chi = euler_characteristic(m);
  json j = manifold_entry(m);
  j["homology"] = to_json(h);
  j["poincare"] = to_json(poincare_polynomial(h));
  j["euler_characteristic"] = to_json(chi);
  j["w2_nonzero"] = w2 ? json(*w2) : json(nullptr);
  j["simply_connected"] = is_simply_connected(m);
  std::string text_out = h.to_string("H");
  if (!o.quiet) {
    text_out += "P_t = " + poincare_polynomial(h).to_string() + "\n";
    text_out += "chi = " + chi.get_str() + "\n";
    text_out += std::string("w2 = ") + (w2 ? (*w2 ? "nonzero" : "zero") : "undetermined") + "\n";
    text_out += std::string("simply connected = ") + (is_simply_connected(m) ? "yes" : "no") + "\n";
  }
  emit(out, o, j, text_out);
  return 0;
}

int cmd_suspend(const Options& o, int index, const std::string& text, std::ostream& out) {
  const ManifoldExpr n = parse_expr(text);
  const ManifoldExpr s = suspend(n, framing_index(index));
  json j = manifold_entry(s);
  j["input"] = n.to_string();
  j["index"] = index;
  emit(out, o, j, s.to_string() + "\n");
  return 0;
}

int cmd_pullback(const Options& o, const std::string& e_text, const std::string& b_text,
                 const std::string& n_text, std::ostream& out) {
  const ManifoldExpr e = parse_expr(e_text);
  const ManifoldExpr b = parse_expr(b_text);
  const ManifoldExpr n = parse_expr(n_text);
  const ManifoldExpr total = pullback_total(e, b, n);
  json j = manifold_entry(total);
  j["total_space"] = e.to_string();
  j["base"] = b.to_string();
  j["summand"] = n.to_string();
  j["epsilon"] = to_int(epsilon_of_base(b));
  emit(out, o, j, total.to_string() + "\n");
  return 0;
}

int cmd_classify6(const Options& o, const std::string& h2_text, int w2, int euler_eq,
                  std::ostream& out) {
  const FgAbGroup h2 = parse_group(h2_text);
  const Classification6 c = classify_6mfd_detailed(h2, w2 == 1, euler_eq == 1);
  json j = manifold_entry(c.total);
  j["quotient"] = manifold_entry(c.quotient);
  j["split_summand"] = c.split_summand.to_string();
  j["complement"] = c.complement.to_string();
  j["index"] = to_int(c.index);
  std::string text = c.total.to_string() + "\n";
  if (!o.quiet) {
    text += "quotient = " + c.quotient.to_string() + "\n";
    text += "complement = " + c.complement.to_string() + "\n";
    text += "index = " + std::to_string(to_int(c.index)) + "\n";
  }
  emit(out, o, j, text);
  return 0;
}

int cmd_qk(const Options& o, int k, bool oracle, bool tower, std::ostream& out) {
  const ManifoldExpr q = q_manifold(k);
  const IntPolynomial p = poincare_poly(q);
  json j = manifold_entry(q);
  j["k"] = k;
  j["poincare"] = to_json(p);
  std::string text = "Q_" + std::to_string(k) + " = " + q.to_string() + "\n";
  text += "P_t = " + p.to_string() + "\n";
  bool ok = true;
  if (oracle) {
    const SpectralReport r = spectral_e3_report(k);
    const bool pass = r.e3_poincare == p;
    ok = ok && pass;
    json degrees = json::array();
    for (const auto& d : r.degrees) {
      json torsion = json::array();
      for (const auto& t : d.e3_torsion) torsion.push_back(to_json(t));
      degrees.push_back({{"degree", d.degree},
                         {"e2_rank", d.e2_rank},
                         {"d2_rank", d.d2_out_rank},
                         {"e3_rank", d.e3_rank},
                         {"e3_torsion", torsion}});
    }
    j["oracle"] = {{"pass", pass},
                   {"poincare", to_json(r.e3_poincare)},
                   {"d2_squared_zero", r.d2_squared_zero},
                   {"torsion_free", r.torsion_free},
                   {"degrees", degrees}};
    text += std::string("oracle ") + (pass ? "PASS" : "FAIL");
    text += o.quiet ? "\n" : " (E_3 = " + r.e3_poincare.to_string() + ")\n";
  }
  if (tower) {
    const ManifoldExpr t = torus_tower(k);
    const bool pass = canonicalize(t) == canonicalize(q);
    ok = ok && pass;
    j["tower"] = {{"pass", pass}, {"expr", t.to_string()}};
    text += std::string("tower ") + (pass ? "PASS" : "FAIL") + "\n";
  }
  emit(out, o, j, text);
  return ok ? 0 : 1;
}

int cmd_pi1(const Options& o, int g, int index, std::ostream& out) {
  const GroupPresentation p = surface_pi1(g, framing_index(index));
  json j = to_json(p);
  j["genus"] = g;
  j["index"] = index;
  j["abelianization"] = to_json(abelianization(p));
  std::string text = p.to_string() + "\n";
  if (!o.quiet) text += "abelianization = " + abelianization(p).to_string() + "\n";
  emit(out, o, j, text);
  return 0;
}

int cmd_selftest(const Options& o, int max_k, std::ostream& out) {
  SelfTestOptions options;
  options.max_k = max_k;
  options.tower_max_k = std::min(max_k, options.tower_max_k);
  const auto results = run_selftest(options);
  json rows = json::array();
  std::ostringstream text;
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.passed;
    rows.push_back({{"id", r.id},
                    {"title", r.title},
                    {"passed", r.passed},
                    {"detail", r.detail},
                    {"seconds", r.seconds}});
    text << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  " << r.title;
    if (!o.quiet) text << "  [" << std::fixed << std::setprecision(2) << r.seconds << "s] " << r.detail;
    text << "\n";
  }
  emit(out, o, {{"passed", ok}, {"criteria", rows}}, text.str());
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Circle actions, suspensions and torus bundles on connected sums", "mfcalc"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Emit JSON");
  app.add_flag("--quiet", o.quiet, "Print only the primary result");

  std::function<int()> action;
  std::vector<std::string> expr_words;

  auto* eval = app.add_subcommand("eval", "Canonical form of a DSL expression");
  eval->add_option("expr", expr_words, "DSL expression")->required();
  eval->callback([&] { action = [&] { return cmd_eval(o, join(expr_words), out); }; });

  auto* hom = app.add_subcommand("homology", "Integral homology and invariants");
  hom->add_option("expr", expr_words, "DSL expression")->required();
  hom->callback([&] { action = [&] { return cmd_homology(o, join(expr_words), out); }; });

  int index = 0;
  auto* sus = app.add_subcommand("suspend", "Apply Sigma_i");
  sus->add_option("--i", index, "Framing index")->required()->check(CLI::IsMember({0, 1}));
  sus->add_option("expr", expr_words, "DSL expression")->required();
  sus->callback([&] { action = [&] { return cmd_suspend(o, index, join(expr_words), out); }; });

  std::string e_text, b_text, n_text;
  auto* pull = app.add_subcommand("pullback", "Total space of a pulled-back circle bundle");
  pull->add_option("E", e_text, "Total space")->required();
  pull->add_option("B", b_text, "Base")->required();
  pull->add_option("N", n_text, "Summand added to the base")->required();
  pull->callback([&] { action = [&] { return cmd_pullback(o, e_text, b_text, n_text, out); }; });

  std::string h2_text;
  int w2 = 0;
  int euler_eq = 0;
  auto* cls = app.add_subcommand("classify6", "6-manifold with a regular circle action");
  cls->add_option("--h2", h2_text, "H_2 of the quotient, e.g. \"Z^2 + Z/3 + Z/3\"")->required();
  cls->add_option("--w2", w2, "w2 of the quotient")->required()->check(CLI::IsMember({0, 1}));
  cls->add_option("--euler-eq-w2", euler_eq, "Euler class reduces to w2")
      ->required()
      ->check(CLI::IsMember({0, 1}));
  cls->callback([&] { action = [&] { return cmd_classify6(o, h2_text, w2, euler_eq, out); }; });

  int k = 1;
  bool oracle = false;
  bool tower = false;
  auto* qk = app.add_subcommand("qk", "Total space of the T^k bundle");
  qk->add_option("--k", k, "Rank of the torus")->required();
  qk->add_flag("--oracle", oracle, "Cross-check against the spectral sequence");
  qk->add_flag("--tower", tower, "Cross-check against the iterated circle bundles");
  qk->callback([&] { action = [&] { return cmd_qk(o, k, oracle, tower, out); }; });

  int genus = 0;
  auto* pi1 = app.add_subcommand("pi1-surface", "Fundamental group of Sigma_i of a surface");
  pi1->add_option("--g", genus, "Genus")->required();
  pi1->add_option("--i", index, "Framing index")->required()->check(CLI::IsMember({0, 1}));
  pi1->callback([&] { action = [&] { return cmd_pi1(o, genus, index, out); }; });

  int max_k = 12;
  auto* self = app.add_subcommand("selftest", "Run the acceptance suite");
  self->add_option("--max-k", max_k, "Largest k for the oracle checks")->check(CLI::Range(2, 20));
  self->callback([&] { action = [&] { return cmd_selftest(o, max_k, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace mfcalc::cli
