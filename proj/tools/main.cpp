/*
   Copyright 2026 the intersective-polynomials authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "intersective/characterize.hpp"
#include "intersective/oracle.hpp"
#include "intersective/residues.hpp"
#include "intersective/solver.hpp"

namespace {

using intersective::arith::i64;
using intersective::arith::u64;
namespace characterize = intersective::characterize;
namespace oracle = intersective::oracle;
namespace residues = intersective::residues;
namespace solver = intersective::solver;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 10;     // valid input, negative verdict
constexpr int kExitDisagreement = 11;  // oracle and decision procedure differ
constexpr int kExitUsage = 2;

std::map<std::string, std::string> read_config(const std::string& path) {
  std::map<std::string, std::string> kv;
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config file not readable: " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line is not key=value: " + line);
    }
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t");
      const auto b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
    };
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

std::string set_to_string(const std::vector<u64>& values) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ", ";
    out << values[i];
  }
  out << '}';
  return out.str();
}

std::string describe_form(u64 n, u64 l, i64 k) {
  std::ostringstream out;
  out << "x_1^" << n;
  if (l > 1) out << " + ... + x_" << l << "^" << n;
  out << " - " << k;
  return out.str();
}

int run_decide(u64 n, i64 k, std::optional<u64> arity, bool json) {
  auto decision = characterize::decide(n, k, arity);
  if (json) {
    std::cout << nlohmann::json(decision) << "\n";
  } else if (decision.intersective) {
    std::cout << describe_form(n, decision.arity, k)
              << " is intersective (" << decision.branch << ")\n";
    for (const auto& w : decision.certificates) {
      std::cout << "  mod " << w.modulus << ": " << nlohmann::json(w) << "\n";
    }
  } else {
    const auto& f = *decision.failure;
    std::cout << describe_form(n, decision.arity, k)
              << " is not intersective: no roots modulo " << f.modulus
              << " (k = " << f.residue << ", "
              << (f.unit_restricted ? "unit-reachable" : "reachable") << " classes "
              << set_to_string(f.reachable) << ")\n";
  }
  return decision.intersective ? kExitOk : kExitNegative;
}

int run_witness(u64 n, i64 k, u64 m, std::optional<u64> arity) {
  const u64 l = arity.value_or(characterize::default_arity(n));
  auto w = solver::solvable_mod({n, l, k}, m);
  if (!w) {
    std::cout << "none\n";
    return kExitNegative;
  }
  std::cout << nlohmann::json(*w) << "\n";
  return kExitOk;
}

void print_table_md(const characterize::Table& table) {
  std::cout << "| m | condition for intersectivity of x_1^" << table.n
            << " + ... + x_m^" << table.n << " - k |\n";
  std::cout << "|---|---|\n";
  // Paper-style rows: consecutive arities with the same condition collapse
  // into an "A to B" range.
  std::size_t i = 0;
  while (i < table.rows.size()) {
    std::size_t j = i;
    while (j + 1 < table.rows.size() &&
           table.rows[j + 1].condition_modulus == table.rows[i].condition_modulus) {
      ++j;
    }
    const auto& row = table.rows[i];
    std::cout << "| " << row.arity;
    if (j > i) std::cout << " to " << table.rows[j].arity;
    std::cout << " | ";
    if (row.always_intersective) {
      std::cout << "always intersective for every integer k";
    } else if (row.nicely) {
      std::cout << "nicely solvable modulo " << row.condition_modulus;
    } else {
      std::cout << "solvable modulo " << row.condition_modulus;
    }
    std::cout << " |\n";
    i = j + 1;
  }
}

int run_table(u64 n, const std::string& format) {
  auto table = characterize::make_table(n);
  if (format == "md") {
    print_table_md(table);
  } else if (format == "csv") {
    std::cout << "arity,condition_modulus,nicely,always_intersective\n";
    for (const auto& row : table.rows) {
      std::cout << row.arity << ',' << row.condition_modulus << ','
                << (row.nicely ? "true" : "false") << ','
                << (row.always_intersective ? "true" : "false") << "\n";
    }
  } else if (format == "json") {
    std::cout << nlohmann::json(table) << "\n";
  } else {
    throw std::invalid_argument("unknown table format: " + format);
  }
  return kExitOk;
}

int run_residues(u64 n, u64 m, bool units) {
  auto set = residues::power_residues(n, m);
  std::vector<u64> values;
  for (u64 r = 0; r < m; ++r) {
    if (!set.contains(r)) continue;
    if (units) {
      if (!set.unit_flags_populated()) {
        throw std::invalid_argument("--units requires a prime-power modulus");
      }
      if (!set.unit_flag(r)) continue;
    }
    values.push_back(r);
  }
  std::cout << (units ? "unit " : "") << n << "th-power residues mod " << m << " ("
            << values.size() << "): " << set_to_string(values) << "\n";
  return kExitOk;
}

int run_oracle(u64 n, i64 k, std::optional<u64> arity, u64 bound) {
  const u64 l = arity.value_or(characterize::default_arity(n));
  auto report = oracle::compare({n, l, k}, bound);
  std::cout << nlohmann::json(report) << "\n";
  return report.agree ? kExitOk : kExitDisagreement;
}

int run_sweep(u64 n, const std::string& k_range, std::optional<u64> arity, u64 workers) {
  const auto dots = k_range.find("..");
  if (dots == std::string::npos) {
    throw std::invalid_argument("--k-range must look like A..B");
  }
  i64 lo = 0;
  i64 hi = 0;
  try {
    lo = std::stoll(k_range.substr(0, dots));
    hi = std::stoll(k_range.substr(dots + 2));
  } catch (const std::exception&) {
    throw std::invalid_argument("--k-range must look like A..B with integer endpoints");
  }
  if (lo > hi) throw std::invalid_argument("--k-range endpoints out of order");
  if (workers < 1) throw std::invalid_argument("--parallel must be at least 1");

  const std::size_t count = static_cast<std::size_t>(hi - lo + 1);
  std::vector<std::string> lines(count);
  auto work = [&](std::size_t start) {
    for (std::size_t i = start; i < count; i += workers) {
      auto decision = characterize::decide(n, lo + static_cast<i64>(i), arity);
      lines[i] = nlohmann::json(decision).dump();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (u64 w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  // Deterministic, k-ordered emission regardless of worker scheduling.
  for (const auto& line : lines) std::cout << line << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decision procedure for intersectivity of diagonal forms sum x_i^n - k"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "key=value config file (oracle_bound, sweep_parallel)");

  u64 n = 0;
  i64 k = 0;
  std::optional<u64> arity;
  bool json = false;
  u64 mod = 0;
  std::string format = "md";
  bool units = false;
  std::optional<u64> bound;
  std::string k_range;
  std::optional<u64> parallel;

  auto* decide = app.add_subcommand("decide", "decide intersectivity with certificates");
  decide->add_option("--n", n, "exponent")->required();
  decide->add_option("--k", k, "constant term")->required();
  decide->add_option("--arity", arity, "number of variables (default: smallest proven)");
  decide->add_flag("--json", json, "canonical JSON output");

  auto* witness = app.add_subcommand("witness", "solution of the form modulo one m");
  witness->add_option("--n", n, "exponent")->required();
  witness->add_option("--k", k, "constant term")->required();
  witness->add_option("--mod", mod, "modulus")->required();
  witness->add_option("--arity", arity, "number of variables");

  auto* table = app.add_subcommand("table", "per-arity intersectivity conditions");
  table->add_option("--n", n, "exponent")->required();
  table->add_option("--format", format, "md, csv or json")
      ->check(CLI::IsMember({"md", "csv", "json"}));

  auto* res = app.add_subcommand("residues", "n-th power residues modulo m");
  res->add_option("--n", n, "exponent")->required();
  res->add_option("--mod", mod, "modulus")->required();
  res->add_flag("--units", units, "restrict to powers of units (prime-power moduli)");

  auto* orc = app.add_subcommand("oracle", "compare decide against exhaustive enumeration");
  orc->add_option("--n", n, "exponent")->required();
  orc->add_option("--k", k, "constant term")->required();
  orc->add_option("--arity", arity, "number of variables");
  orc->add_option("--bound", bound, "largest modulus to enumerate");

  auto* sweep = app.add_subcommand("sweep", "batch decide over a k range, JSON lines");
  sweep->add_option("--n", n, "exponent")->required();
  sweep->add_option("--k-range", k_range, "inclusive range A..B")->required();
  sweep->add_option("--arity", arity, "number of variables");
  sweep->add_option("--parallel", parallel, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      return app.exit(e);  // --help and friends
    }
    app.exit(e);
    return kExitUsage;
  }

  try {
    std::map<std::string, std::string> config;
    if (!config_path.empty()) config = read_config(config_path);
    if (!bound && config.count("oracle_bound")) bound = std::stoull(config.at("oracle_bound"));
    if (!parallel && config.count("sweep_parallel")) {
      parallel = std::stoull(config.at("sweep_parallel"));
    }

    if (decide->parsed()) return run_decide(n, k, arity, json);
    if (witness->parsed()) return run_witness(n, k, mod, arity);
    if (table->parsed()) return run_table(n, format);
    if (res->parsed()) return run_residues(n, mod, units);
    if (orc->parsed()) return run_oracle(n, k, arity, bound.value_or(10000));
    if (sweep->parsed()) return run_sweep(n, k_range, arity, parallel.value_or(1));
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
