// Command-line front end: eval, check, conjugate, snapshot.

#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qloc/expr.hpp"
#include "qloc/suite.hpp"

#ifndef QLOC_DEFAULT_MANIFEST
#define QLOC_DEFAULT_MANIFEST "manifests/default.qlm"
#endif

using namespace qloc;

namespace {

std::string render(const NCElement& e, const std::string& format, const RenderOptions& opts,
                   const std::string& source, int order) {
  if (format == "latex") return e.latex(opts) + "\n";
  if (format == "json") {
    nlohmann::ordered_json j;
    j["expr"] = source;
    j["order"] = order;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [key, s] : e.terms()) {
      auto x = key.x();
      j["terms"].push_back({{"x", {x[0], x[1], x[2], x[3]}},
                            {"word", key.word().plain()},
                            {"scalar", s.plain()}});
    }
    j["plain"] = e.plain_inline(opts);
    return j.dump(2) + "\n";
  }
  return e.plain(opts) + "\n";
}

std::array<Rational, 4> parse_alpha(const std::string& text) {
  std::array<Rational, 4> out;
  std::stringstream ss(text);
  std::string item;
  int k = 0;
  while (std::getline(ss, item, ',')) {
    if (k == 4) throw CLI::ValidationError("--alpha", "expects four components");
    auto e = expr::parse(item);
    bool neg = e->kind == expr::Expr::Kind::neg;
    const expr::Expr& v = neg ? *e->args[0] : *e;
    if (v.kind != expr::Expr::Kind::number) {
      throw CLI::ValidationError("--alpha", "components must be rationals such as -1/2");
    }
    out[k++] = neg ? -v.value : v.value;
  }
  if (k != 4) throw CLI::ValidationError("--alpha", "expects four components");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal-form algebra of the localized Dirac electron"};
  app.require_subcommand(1);

  int order = expr::default_order();
  std::string format = "plain";
  bool alias = false;
  bool descending = false;

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression to normal form");
  std::string source;
  eval_cmd->add_option("expr", source, "Expression")->required();
  eval_cmd->add_option("--format", format)->check(CLI::IsMember({"plain", "latex", "json"}));
  eval_cmd->add_option("--order", order, "Truncation order for conj and lambda");
  eval_cmd->add_flag("--gamma5-alias", alias, "Print i g0 g1 g2 g3 as gamma5");

  auto* check_cmd = app.add_subcommand("check", "Run an identity manifest");
  std::string manifest = QLOC_DEFAULT_MANIFEST;
  std::string filter;
  std::string report_format = "text";
  int jobs = 1;
  bool controls = false;
  check_cmd->add_option("--manifest", manifest);
  check_cmd->add_option("--order", order);
  check_cmd->add_option("--filter", filter, "Only entries whose tag contains this text");
  check_cmd->add_option("--format", report_format)->check(CLI::IsMember({"text", "json", "md"}));
  check_cmd->add_option("--jobs", jobs)->check(CLI::Range(1, 256));
  check_cmd->add_flag("--negative-controls", controls,
                      "Run the perturbed copies instead; exit 0 iff every one fails");

  auto* conj_cmd = app.add_subcommand("conjugate", "Frame-shift an expression");
  std::string alpha;
  conj_cmd->add_option("expr", source)->required();
  conj_cmd->add_option("--order", order);
  conj_cmd->add_option("--alpha", alpha, "Rational values r0,r1,r2,r3 substituted for alpha");
  conj_cmd->add_option("--format", format)->check(CLI::IsMember({"plain", "latex", "json"}));

  auto* snap_cmd = app.add_subcommand("snapshot", "Write or compare golden renderings");
  std::vector<std::string> names;
  std::string out_dir;
  bool compare = false;
  snap_cmd->add_option("names", names, "Expressions such as Xh[0] or C[0]")->required();
  snap_cmd->add_option("--out", out_dir)->required();
  snap_cmd->add_option("--order", order);
  snap_cmd->add_flag("--check", compare, "Compare against existing files instead of writing");
  snap_cmd->add_flag("--descending", descending, "Reverse monomial order");

  CLI11_PARSE(app, argc, argv);
  RenderOptions opts;
  opts.gamma5_alias = alias;
  if (descending) opts.order = MonomialOrder::descending;

  try {
    if (*eval_cmd) {
      std::cout << render(expr::eval(source, {order}), format, opts, source, order);
      return 0;
    }
    if (*conj_cmd) {
      NCElement e = expr::eval(*expr::make_call("conj", {expr::parse(source)}), {order});
      if (!alpha.empty()) e = e.substitute_alpha(parse_alpha(alpha));
      std::cout << render(e, format, opts, source, order);
      return 0;
    }
    if (*check_cmd) {
      auto entries = suite::load_manifest(manifest);
      if (controls) {
        for (auto& e : entries) e = suite::negative_control(e);
      }
      suite::SuiteConfig cfg{order, filter, jobs};
      auto report = suite::run_suite(manifest, entries, cfg);
      if (report_format == "json") std::cout << report.json() << "\n";
      else if (report_format == "md") std::cout << report.markdown();
      else std::cout << report.text();
      if (controls) return report.passed == 0 && report.errors == 0 ? 0 : 1;
      return report.all_passed() ? 0 : 1;
    }
    if (*snap_cmd) {
      if (compare) {
        auto diff = suite::snapshot_diff(names, out_dir, opts, order);
        for (const auto& d : diff) std::cout << "differs: " << d << "\n";
        return diff.empty() ? 0 : 1;
      }
      for (const auto& p : suite::golden_snapshot(names, out_dir, opts, order)) {
        std::cout << p.string() << "\n";
      }
      return 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
