#include "wittkit/json_io.hpp"
#include "wittkit/lambda_ops.hpp"
#include "wittkit/suites.hpp"
#include "wittkit/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace wittkit;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::vector<Int> parse_pool(const std::string& text) {
  std::vector<Int> pool;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',' || ch == ' ') {
      if (!cur.empty()) pool.push_back(Int(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return pool;
}

void write_output(const std::string& payload, const std::string& json_path) {
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open " + json_path);
    out << payload;
  }
}

std::pair<std::string, std::string> split_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) return {spec, ""};
  return {spec.substr(0, colon), spec.substr(colon + 1)};
}

std::vector<int> parse_int_list(const std::string& text) {
  auto j = ordered_json::parse(text);
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array of integers");
  std::vector<int> out;
  for (const auto& v : j) out.push_back(v.get<int>());
  return out;
}

std::pair<int, int> parse_two_ints(const std::string& args, const std::string& what) {
  auto comma = args.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument(what + ": expected two comma-separated integers");
  return {std::stoi(args.substr(0, comma)), std::stoi(args.substr(comma + 1))};
}

ordered_json gw_report(const GWClass& x) {
  ordered_json out;
  out["gw"] = ordered_json::parse(gw_to_json(x));
  auto deg = witt_filtration_degree(x);
  if (deg.has_value()) {
    out["witt_filtration_degree"] = *deg;
  } else {
    out["witt_filtration_degree"] = "inf";
  }
  return out;
}

int cmd_eval_quad(const std::string& form_text, const std::string& spec,
                  const std::string& json_path) {
  auto [kind, args] = split_spec(spec);
  ordered_json out;
  out["invariant"] = spec;
  if (kind == "P" || kind == "Q") {
    auto [rn, d] = parse_two_ints(args, kind);
    DiagForm q = form_from_json(form_text);
    out["form"] = ordered_json::parse(form_to_json(q));
    GWClass val = kind == "P" ? P_rd(rn, d, q) : Q_nd(rn, d, q);
    out.update(gw_report(val));
    if (kind == "P" && q.dim() == rn) {
      out["cohomology"] = ordered_json::parse(coh_to_json(prd_class(rn, d, q)));
    }
  } else if (kind == "w") {
    int d = std::stoi(args);
    DiagForm q = form_from_json(form_text);
    out["form"] = ordered_json::parse(form_to_json(q));
    out["cohomology"] = ordered_json::parse(coh_to_json(w_d(q, d)));
  } else if (kind == "Pgamma" || kind == "Qgamma") {
    std::vector<int> gamma = parse_int_list(args);
    auto arr = ordered_json::parse(form_text);
    if (!arr.is_array()) throw std::invalid_argument("expected an array of forms");
    std::vector<DiagForm> qs;
    for (const auto& f : arr) qs.push_back(form_from_json(f.dump()));
    out["forms"] = arr;
    GWClass val = kind == "Pgamma" ? P_gamma(gamma, qs) : Q_gamma(gamma, qs);
    out.update(gw_report(val));
  } else {
    throw std::invalid_argument("unknown quadratic invariant: " + spec);
  }
  std::string payload = out.dump(2) + "\n";
  std::cout << payload;
  write_output(payload, json_path);
  return kExitOk;
}

SubsetF2 subset_from_indices(const std::vector<int>& idx) {
  SubsetF2 s;
  for (int i : idx) s = s | SubsetF2::singleton(i);
  return s;
}

int cmd_eval_herm(const std::string& algebra_text, const std::string& gens_text,
                  const std::string& spec, const std::string& json_path) {
  HermDiagForm h =
      herm_from_json("{\"algebra\":" + algebra_text + ",\"gens\":" + gens_text + "}");
  auto [kind, args] = split_spec(spec);
  ordered_json out;
  out["invariant"] = spec;
  out["input"] = ordered_json::parse(herm_to_json(h));
  if (kind == "Qherm") {
    auto [n, d] = parse_two_ints(args, kind);
    out.update(gw_report(Q_herm(n, d, h)));
  } else if (kind == "psi0") {
    auto mid = args.find("],[");
    if (mid == std::string::npos)
      throw std::invalid_argument("psi0: expected psi0:[J indices],[A indices]");
    SubsetF2 j_set = subset_from_indices(parse_int_list(args.substr(0, mid + 1)));
    SubsetF2 a_set = subset_from_indices(parse_int_list(args.substr(mid + 2)));
    out.update(gw_report(psi0_herm(h, j_set, a_set)));
  } else if (kind == "betahat") {
    int d = std::stoi(args);
    GWClass val = beta_hat({{GWClass::one(), d}}, h);
    out.update(gw_report(val));
    std::vector<std::pair<std::vector<ScaledPfisterTerm>, int>> unit;
    unit.emplace_back(std::vector<ScaledPfisterTerm>{ScaledPfisterTerm{}}, d);
    out["cohomology"] = ordered_json::parse(coh_to_json(extension_class(unit, h, d - 1)));
  } else {
    throw std::invalid_argument("unknown hermitian invariant: " + spec);
  }
  std::string payload = out.dump(2) + "\n";
  std::cout << payload;
  write_output(payload, json_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of quadratic and skew-hermitian quaternionic forms over Q"};
  app.set_version_flag("--version", wittkit::kVersion);
  app.require_subcommand(1);

  // suite
  auto* suite_cmd = app.add_subcommand("suite", "run a property-test suite");
  std::string suite_name;
  SuiteConfig cfg;
  long long trials = 0;
  std::uint64_t seed = 1;
  int max_set_size = 3;
  std::string pool_text, suite_json;
  bool exhaustive = false;
  suite_cmd->add_option("name", suite_name, "suite name (see --list)")->required();
  suite_cmd->add_option("--trials", trials, "number of trials (0: suite default)");
  suite_cmd->add_option("--seed", seed, "master seed");
  suite_cmd->add_option("--max-set-size", max_set_size, "bound on |X| in family suites");
  suite_cmd->add_option("--coeff-pool", pool_text, "comma-separated squarefree parts");
  suite_cmd->add_option("--json", suite_json, "write the JSON report to this path");
  suite_cmd->add_flag("--exhaustive", exhaustive, "exhaustive sweeps where supported");

  // eval-quad
  auto* quad_cmd = app.add_subcommand("eval-quad", "evaluate an invariant of a quadratic form");
  std::string form_text, quad_spec, quad_json;
  quad_cmd->add_option("--form", form_text, "form as a JSON array (or array of forms)")
      ->required();
  quad_cmd->add_option("--inv", quad_spec, "P:r,d | Q:n,d | w:d | Pgamma:[...] | Qgamma:[...]")
      ->required();
  quad_cmd->add_option("--json", quad_json, "write the JSON result to this path");

  // eval-herm
  auto* herm_cmd =
      app.add_subcommand("eval-herm", "evaluate an invariant of a skew-hermitian form");
  std::string algebra_text, gens_text, herm_spec, herm_json;
  herm_cmd->add_option("--algebra", algebra_text, "{\"a\":\"-1\",\"b\":\"-1\"}")->required();
  herm_cmd->add_option("--gens", gens_text, "[[\"1\",\"0\",\"0\"], ...] pure slots")->required();
  herm_cmd->add_option("--inv", herm_spec, "Qherm:n,d | psi0:[J],[A] | betahat:d")->required();
  herm_cmd->add_option("--json", herm_json, "write the JSON result to this path");

  // list
  auto* list_cmd = app.add_subcommand("list", "list the available suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (list_cmd->parsed()) {
      for (const auto& n : suite_names()) std::cout << n << "\n";
      return kExitOk;
    }
    if (suite_cmd->parsed()) {
      if (!is_suite_name(suite_name)) {
        std::cerr << "unknown suite: " << suite_name << "\n";
        return kExitUsage;
      }
      cfg.trials = trials;
      cfg.seed = seed;
      cfg.max_set_size = max_set_size;
      cfg.exhaustive = exhaustive;
      if (!pool_text.empty()) cfg.coeff_pool = parse_pool(pool_text);
      SuiteReport report = run_suite(suite_name, cfg);
      std::cout << report_summary(report) << "\n";
      write_output(report_to_json(report), suite_json);
      return report.passed() ? kExitOk : kExitViolation;
    }
    if (quad_cmd->parsed()) return cmd_eval_quad(form_text, quad_spec, quad_json);
    if (herm_cmd->parsed()) return cmd_eval_herm(algebra_text, gens_text, herm_spec, herm_json);
  } catch (const wittkit::property_violation& e) {
    std::cerr << "property violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
