// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "adjoint_oracle.hpp"
#include "expr_corpus.hpp"
#include "qloc/expr.hpp"
#include "qloc/frames.hpp"
#include "qloc/observables.hpp"
#include "qloc/suite.hpp"
#include "test_support.hpp"

using namespace qloc;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = false;
  std::string detail;
};

const std::vector<suite::IdentityEntry>& manifest() {
  static const auto entries = suite::load_manifest(QLOC_DEFAULT_MANIFEST);
  return entries;
}

suite::IdentityReport run_filter(const std::string& filter) {
  suite::SuiteConfig cfg;
  cfg.filter = filter;
  return suite::run_suite("default", manifest(), cfg);
}

std::string totals(const suite::IdentityReport& r) {
  std::string s = std::to_string(r.passed) + " pass, " + std::to_string(r.failed) + " fail, " +
                  std::to_string(r.errors) + " error";
  for (const auto& e : r.entries) {
    if (e.status != suite::Status::pass) return s + "; first: " + e.name;
  }
  return s;
}

// Negative controls for every entry whose tag contains `filter`; returns how many still pass.
int surviving_controls(const std::string& filter, int* total) {
  int survived = 0;
  *total = 0;
  for (const auto& e : manifest()) {
    if (e.tag.find(filter) == std::string::npos) continue;
    ++*total;
    if (suite::run_entry(suite::negative_control(e), 3).status != suite::Status::fail) ++survived;
  }
  return survived;
}

// Elements with x-degree <= max_deg; term k carries word `word`, the rest random words.
// Coefficients stay linear in p with at most one power of 1/M^2, which keeps
// triple products of degree-3 elements affordable.
NCElement axiom_element(testing::Generator& gen, int word, int max_deg) {
  auto coefficient = [&] {
    Poly a = gen.poly(2, 1);
    Poly b = gen.uniform(0, 3) == 0 ? gen.poly(1, 1) : Poly();
    return Scalar(a, b, gen.uniform(0, 1));
  };
  NCElement out;
  for (int t = 0; t < 2; ++t) {
    XExponents e{};
    int deg = gen.uniform(0, max_deg);
    for (int d = 0; d < deg; ++d) e[gen.uniform(0, 3)] += 1;
    int w = t == 0 ? word : gen.uniform(0, 15);
    out += NCElement(NcKey(e, CliffordWord(static_cast<std::uint8_t>(w))), coefficient());
  }
  return out;
}

Outcome kernel_axioms() {
  testing::Generator gen(2026);
  std::array<int, 4> cases{};
  std::array<int, 4> bad{};
  std::array<bool, 16> seen{};
  auto note = [&](const NCElement& a) {
    for (const auto& [key, s] : a.terms()) seen[key.word().mask()] = true;
  };
  for (int k = 0; k < 1000; ++k) {
    const int kind = k % 4;
    bool ok = false;
    try {
      NCElement a = axiom_element(gen, (k / 4) % 16, kind == 3 ? 2 : 3);
      NCElement b = axiom_element(gen, (k / 4 + 5) % 16, kind == 3 ? 1 : 3);
      NCElement c = axiom_element(gen, (k / 4 + 11) % 16, 3);
      note(a);
      note(b);
      note(c);
      switch (kind) {
        case 0:
          ok = (a * b) * c == a * (b * c);
          break;
        case 1:
          ok = (bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b)))
                   .is_zero();
          break;
        case 2:
          ok = bracket(a, b * c) == bracket(a, b) * c + b * bracket(a, c);
          break;
        default:
          ok = adjoint(adjoint(c)) == c && adjoint(a * b) == adjoint(b) * adjoint(a);
          break;
      }
    } catch (const std::exception& ex) {
      std::cerr << "kernel case " << k << ": " << ex.what() << "\n";
    }
    ++cases[kind];
    if (!ok) ++bad[kind];
  }
  bool all_words = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  int total = cases[0] + cases[1] + cases[2] + cases[3];
  int failures = bad[0] + bad[1] + bad[2] + bad[3];
  const char* names[] = {"associativity", "Jacobi", "Leibniz", "adjoint"};
  std::string d = std::to_string(total) + " cases (";
  for (int k = 0; k < 4; ++k) {
    d += std::string(k ? ", " : "") + names[k] + " " + std::to_string(cases[k] - bad[k]) + "/" +
         std::to_string(cases[k]);
  }
  d += std::string("), all 16 words ") + (all_words ? "covered" : "NOT covered");
  return {failures == 0 && total >= 1000 && all_words, d};
}

Outcome section2() {
  auto r = run_filter("s2");
  return {r.all_passed() && r.passed >= 80, totals(r)};
}

Outcome spin_magnitude() {
  NCElement got = obs::pauli_square().times_right(Scalar::w_pow(-2));
  NCElement want(Scalar::rational(-3, 4) * Scalar::hbar(2));
  return {got == want, "W^mu W_mu / M^2 = " + got.plain_inline()};
}

Outcome sections34() {
  auto s3 = run_filter("s3");
  auto s4 = run_filter("s4");
  int n3 = 0;
  int n4 = 0;
  int alive = surviving_controls("s3", &n3) + surviving_controls("s4", &n4);
  return {s3.all_passed() && s4.all_passed() && alive == 0,
          "s3: " + totals(s3) + "; s4: " + totals(s4) + "; negative controls " +
              std::to_string(n3 + n4 - alive) + "/" + std::to_string(n3 + n4) + " fail"};
}

Outcome conformal() {
  auto r = run_filter("s5 conformal");
  return {r.all_passed() && r.passed > 0, totals(r)};
}

Outcome frame_laws() {
  std::vector<frames::FrameShift> checks = {
      frames::check_sign_convention(),      frames::check_mass_law(2),
      frames::check_position_law(3),        frames::check_tetrad_law(3),
      frames::check_clifford_preservation(3), frames::check_momentum_law(3),
      frames::metric_check(3),              frames::check_commutator_invariance(3),
      frames::reciprocity_check(3)};
  bool terminates = frames::adn(obs::mass(), 3).is_zero();
  auto suite_part = run_filter("s5 frames");
  std::string failed;
  for (const auto& c : checks) {
    if (!c.passed) failed += " " + c.name;
  }
  bool ok = failed.empty() && terminates && suite_part.all_passed();
  return {ok, std::to_string(checks.size()) + " frame checks" +
                  (failed.empty() ? std::string(" pass") : " failing:" + failed) +
                  ", ad^3(M) = 0: " + (terminates ? "yes" : "no") +
                  "; frames suite: " + totals(suite_part)};
}

Outcome coefficients() {
  auto m = frames::check_hermitian_mass();
  auto p = frames::check_hermitian_momentum();
  auto o = frames::check_ordering_immateriality();
  Scalar h2 = Scalar::hbar(2);
  bool cm = m.coefficients.count("alpha^2 M / P^2") &&
            m.coefficients.at("alpha^2 M / P^2") == Scalar::rational(3, 4) * h2;
  bool cp = p.coefficients.count("d d E . P / P^2") &&
            p.coefficients.at("d d E . P / P^2") == Scalar::rational(3, 32) * h2;
  auto show = [](const frames::FrameShift& f, const std::string& key) {
    return f.coefficients.count(key) ? NCElement(f.coefficients.at(key)).plain_inline()
                                     : std::string("missing");
  };
  return {m.passed && p.passed && o.passed && cm && cp,
          "mass coefficient " + show(m, "alpha^2 M / P^2") + ", momentum coefficient " +
              show(p, "d d E . P / P^2") + ", ordering immaterial: " + (o.passed ? "yes" : "no")};
}

Outcome polynomiality() {
  auto v = frames::vierbein_polynomiality(3);
  return {v.passed, "alpha-degree-3 part of e_mu^nu " + std::string(v.passed ? "is zero" : "nonzero")};
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome cli() {
  std::string cmd = std::string("\"") + QLOC_CLI + "\" check --order 3 > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  bool cli_ok = rc == 0;

  std::string first;
  int bad = corpus::round_trip_failures(500, 4242u, &first);

  std::vector<std::string> exprs;
  for (const auto& f : fs::directory_iterator(QLOC_GOLDEN_DIR)) {
    std::string text = read_file(f.path());
    exprs.push_back(text.substr(2, text.find('\n') - 2));
  }
  std::sort(exprs.begin(), exprs.end());
  fs::path tmp = fs::temp_directory_path() / "qloc_acceptance_golden";
  fs::remove_all(tmp);
  auto a = suite::golden_snapshot(exprs, tmp / "run1");
  auto b = suite::golden_snapshot(exprs, tmp / "run2");
  bool stable = a.size() == b.size() && !a.empty();
  for (std::size_t k = 0; stable && k < a.size(); ++k) stable = read_file(a[k]) == read_file(b[k]);
  bool committed = suite::snapshot_diff(exprs, QLOC_GOLDEN_DIR).empty();
  fs::remove_all(tmp);

  return {cli_ok && bad == 0 && stable && committed,
          "check --order 3 exit " + std::to_string(rc) + ", round trip 500 with " +
              std::to_string(bad) + " failures" + (first.empty() ? "" : " (" + first + ")") +
              ", " + std::to_string(exprs.size()) + " goldens " +
              (stable ? "stable" : "UNSTABLE") + (committed ? " and match" : " and DIFFER")};
}

Outcome adjoint_oracle() {
  auto r = testing::run_adjoint_oracle();
  std::string d = std::to_string(r.monomials) + " monomials, images " +
                  (r.images_match ? "consistent" : "unresolved") + ", X^dagger = X: " +
                  (r.hermitian_positions ? "yes" : "no");
  if (!r.failures.empty()) d += "; first failure: " + r.failures.front();
  return {r.ok(), d};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "kernel axioms", 60, kernel_axioms},
      {2, "section 2 identities", 60, section2},
      {3, "spin magnitude", 0, spin_magnitude},
      {4, "section 3/4 identities and negative controls", 0, sections34},
      {5, "conformal table", 0, conformal},
      {6, "frame laws at order 3", 300, frame_laws},
      {7, "hermitian coefficients and ordering", 0, coefficients},
      {8, "vierbein polynomiality", 0, polynomiality},
      {9, "CLI, round trip, goldens", 0, cli},
      {10, "adjoint oracle", 0, adjoint_oracle},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    double s = seconds_since(t0);
    if (c.limit_s > 0 && s > c.limit_s) {
      o.ok = false;
      o.detail += "; over the time limit";
    }
    if (!o.ok) ++failed;
    std::printf("criterion %2d %s  %s (%.2f s): %s\n", c.id, o.ok ? "PASS" : "FAIL", c.name, s,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
