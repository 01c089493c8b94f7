#include "qloc/suite.hpp"

#include <atomic>
#include <chrono>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace qloc::suite {

namespace {

std::string trim(const std::string& s, std::size_t* offset = nullptr) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    if (offset) *offset = s.size();
    return "";
  }
  std::size_t e = s.find_last_not_of(" \t\r");
  if (offset) *offset = b;
  return s.substr(b, e - b + 1);
}

expr::ExprPtr parse_part(const std::string& text, int line, std::size_t column0) {
  try {
    return expr::parse(text);
  } catch (const expr::ParseError& err) {
    int col = static_cast<int>(column0) + err.column();
    throw ManifestParseError(line, col, err.detail());
  }
}

bool is_zero_literal(const expr::Expr& e) {
  return e.kind == expr::Expr::Kind::number && e.value.is_zero();
}

}  // namespace

ManifestParseError::ManifestParseError(int line, int column, const std::string& what)
    : std::runtime_error("manifest line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

std::vector<IdentityEntry> parse_manifest(const std::string& text) {
  std::vector<IdentityEntry> out;
  std::set<std::string> names;
  std::istringstream in(text);
  std::string raw;
  std::string tag;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::size_t hash = raw.find('#');
    std::string content = hash == std::string::npos ? raw : raw.substr(0, hash);
    std::size_t lead = 0;
    std::string t = trim(content, &lead);
    if (t.empty()) continue;
    if (t.front() == '[') {
      if (t.back() != ']') throw ManifestParseError(line, static_cast<int>(lead + t.size()), "expected ']'");
      tag = trim(t.substr(1, t.size() - 2));
      continue;
    }
    std::size_t def = content.find(":=");
    if (def == std::string::npos) throw ManifestParseError(line, static_cast<int>(lead + 1), "expected ':='");
    std::size_t at = content.rfind('@');
    if (at == std::string::npos || at < def) {
      throw ManifestParseError(line, static_cast<int>(content.size() + 1), "expected '@ exact' or '@ order N'");
    }
    std::size_t eq = content.find("==", def);
    if (eq == std::string::npos || eq > at) {
      throw ManifestParseError(line, static_cast<int>(def + 3), "expected '=='");
    }
    IdentityEntry e;
    e.line = line;
    e.tag = tag;
    e.name = trim(content.substr(0, def));
    if (e.name.empty() || e.name.find_first_of(" \t") != std::string::npos) {
      throw ManifestParseError(line, static_cast<int>(lead + 1), "expected an entry name");
    }
    if (!names.insert(e.name).second) {
      throw ManifestParseError(line, static_cast<int>(lead + 1), "duplicate entry name '" + e.name + "'");
    }
    e.lhs = parse_part(content.substr(def + 2, eq - def - 2), line, def + 2);
    e.rhs = parse_part(content.substr(eq + 2, at - eq - 2), line, eq + 2);
    std::size_t spec_off = 0;
    std::string spec = trim(content.substr(at + 1), &spec_off);
    int spec_col = static_cast<int>(at + 2 + spec_off);
    if (spec == "exact") {
      e.mode = OrderMode::exact;
    } else if (spec == "order") {
      e.mode = OrderMode::config;
    } else if (spec.rfind("order", 0) == 0) {
      std::string n = trim(spec.substr(5));
      if (n.empty() || n.size() > 3 || n.find_first_not_of("0123456789") != std::string::npos) {
        throw ManifestParseError(line, spec_col + 5, "expected a natural number after 'order'");
      }
      e.mode = OrderMode::fixed;
      e.order = std::stoi(n);
    } else {
      throw ManifestParseError(line, spec_col, "expected 'exact' or 'order N'");
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<IdentityEntry> load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read manifest " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_manifest(ss.str());
}

IdentityEntry negative_control(const IdentityEntry& e) {
  using K = expr::Expr::Kind;
  IdentityEntry n = e;
  n.name = e.name + "~neg";
  if (!is_zero_literal(*e.rhs)) {
    n.rhs = expr::make_neg(e.rhs);
  } else if (e.lhs->kind == K::sum || e.lhs->kind == K::difference) {
    n.lhs = expr::make_binary(e.lhs->kind == K::sum ? K::difference : K::sum, e.lhs->args[0],
                              e.lhs->args[1]);
  } else if (e.lhs->kind == K::call && e.lhs->name == "comm") {
    n.lhs = expr::make_call("dot", e.lhs->args);
  } else {
    n.lhs = expr::make_binary(K::sum, e.lhs, expr::make_number(1));
  }
  return n;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::error:
      return "error";
  }
  return "error";
}

EntryResult run_entry(const IdentityEntry& e, int order) {
  EntryResult r;
  r.name = e.name;
  r.tag = e.tag;
  int n = e.mode == OrderMode::fixed ? e.order : order;
  r.order = e.mode == OrderMode::exact ? "exact" : std::to_string(n);
  auto start = std::chrono::steady_clock::now();
  try {
    expr::EvalConfig cfg{n};
    NCElement lhs = expr::eval(*e.lhs, cfg);
    NCElement residual = lhs - expr::eval(*e.rhs, cfg);
    if (e.mode != OrderMode::exact) residual = residual.alpha_truncate(n);
    r.status = residual.is_zero() ? Status::pass : Status::fail;
    r.residual = residual.is_zero() ? "0" : residual.plain_inline();
    if (lhs.size() == 1 && lhs.x_degree() == 0) {
      const auto& [key, s] = *lhs.terms().begin();
      if (key.word().is_identity() && s.is_momentum_free()) r.coefficient = s.plain();
    }
  } catch (const std::exception& ex) {
    r.status = Status::error;
    r.residual = ex.what();
  }
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

IdentityReport run_suite(const std::string& suite_name, const std::vector<IdentityEntry>& entries,
                         const SuiteConfig& config) {
  std::vector<const IdentityEntry*> selected;
  for (const auto& e : entries) {
    if (config.filter.empty() || e.tag.find(config.filter) != std::string::npos) selected.push_back(&e);
  }
  IdentityReport report;
  report.suite = suite_name;
  report.order = config.order;
  report.entries.resize(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < selected.size(); k = next++) {
      report.entries[k] = run_entry(*selected[k], config.order);
    }
  };
  int jobs = std::max(1, config.jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& r : report.entries) {
    if (r.status == Status::pass) ++report.passed;
    else if (r.status == Status::fail) ++report.failed;
    else ++report.errors;
  }
  return report;
}

std::string IdentityReport::json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["config"] = {{"order", order}};
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& r : entries) {
    nlohmann::ordered_json e;
    e["name"] = r.name;
    e["tag"] = r.tag;
    e["status"] = to_string(r.status);
    if (r.order == "exact") e["order"] = "exact";
    else e["order"] = std::stoi(r.order);
    e["residual"] = r.residual;
    e["ms"] = r.ms;
    if (r.coefficient) e["coefficients"] = {{r.name, *r.coefficient}};
    j["entries"].push_back(e);
  }
  j["totals"] = {{"entries", entries.size()}, {"pass", passed}, {"fail", failed}, {"error", errors}};
  return j.dump(2);
}

std::string IdentityReport::markdown() const {
  std::ostringstream o;
  o << "# " << suite << "\n\n";
  o << "order " << order << ": " << passed << " pass, " << failed << " fail, " << errors
    << " error\n\n";
  o << "| name | tag | status | order | residual |\n|---|---|---|---|---|\n";
  for (const auto& r : entries) {
    std::string res = r.residual.size() > 80 ? r.residual.substr(0, 77) + "..." : r.residual;
    if (r.coefficient) res = *r.coefficient;
    for (auto& c : res) {
      if (c == '|') c = '/';
    }
    o << "| " << r.name << " | " << r.tag << " | " << to_string(r.status) << " | " << r.order
      << " | `" << res << "` |\n";
  }
  return o.str();
}

std::string IdentityReport::text() const {
  std::ostringstream o;
  for (const auto& r : entries) {
    o << to_string(r.status) << "  " << r.name;
    if (r.coefficient) o << "  = " << *r.coefficient;
    if (r.status != Status::pass) o << "\n    " << r.residual;
    o << "\n";
  }
  o << passed << " pass, " << failed << " fail, " << errors << " error\n";
  return o.str();
}

std::string snapshot_file_name(const std::string& e) {
  std::string out;
  for (char c : e) {
    if (std::isalnum(static_cast<unsigned char>(c))) out += c;
    else if (!out.empty() && out.back() != '_') out += '_';
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out + ".txt";
}

std::string snapshot_content(const std::string& e, const RenderOptions& opts, int order) {
  return "# " + e + "\n" + expr::eval(e, {order}).plain(opts) + "\n";
}

std::vector<std::filesystem::path> golden_snapshot(const std::vector<std::string>& exprs,
                                                   const std::filesystem::path& dir,
                                                   const RenderOptions& opts, int order) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> out;
  for (const auto& e : exprs) {
    auto path = dir / snapshot_file_name(e);
    std::ofstream f(path, std::ios::binary);
    f << snapshot_content(e, opts, order);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    out.push_back(path);
  }
  return out;
}

std::vector<std::string> snapshot_diff(const std::vector<std::string>& exprs,
                                       const std::filesystem::path& dir,
                                       const RenderOptions& opts, int order) {
  std::vector<std::string> out;
  for (const auto& e : exprs) {
    std::ifstream f(dir / snapshot_file_name(e), std::ios::binary);
    std::stringstream ss;
    if (f) ss << f.rdbuf();
    if (!f || ss.str() != snapshot_content(e, opts, order)) out.push_back(e);
  }
  return out;
}

}  // namespace qloc::suite
