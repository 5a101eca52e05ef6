// Prints one PASS/FAIL line per acceptance criterion; exit status 0 only when all pass.

#include <chrono>
#include <cstring>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "polyherm/acceptance.hpp"
#include "polyherm/constructors.hpp"
#include "polyherm/error.hpp"
#include "support/process.hpp"

using namespace polyherm;
using polyherm::proc::run;

namespace {

const std::string kCli = POLYHERM_CLI;
constexpr double kSuiteBudgetSeconds = 300.0;

bool bit_equal(const TriPoly& a, const TriPoly& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& [ea, ca] = a.terms()[i];
    const auto& [eb, cb] = b.terms()[i];
    if (ea != eb || std::memcmp(&ca, &cb, sizeof(cplx)) != 0) return false;
  }
  return true;
}

void tally(SubCheck& s, bool ok, const std::string& what) {
  ++s.checks;
  if (!ok) {
    ++s.failures;
    if (s.first_error.empty()) s.first_error = what;
  }
}

SubCheck round_trip() {
  SubCheck s{"construct_round_trip"};
  struct Case {
    ParamSet p;
    std::string flags;
  };
  const Case cases[] = {
      {{1.37, -0.41, {0.3, -0.2}}, "--nu 1.37 --alpha -0.41 --xi-re 0.3 --xi-im -0.2"},
      {{-2.9, 3.3, {-0.7, 0.05}}, "--nu -2.9 --alpha 3.3 --xi-re -0.7 --xi-im 0.05"}};
  const std::pair<const char*, TriPoly (*)(const ParamSet&, int)> methods[] = {
      {"recurrence", build_recurrence},   {"operational", build_operational},
      {"rodrigues", build_rodrigues},     {"rodrigues2", build_rodrigues_second},
      {"hermite", build_explicit_hermite}, {"tensor", build_tensor}};
  for (const auto& c : cases) {
    for (int n : {0, 5, 20}) {
      for (const auto& [name, build] : methods) {
        const std::string args =
            " construct --method " + std::string(name) + " --n " + std::to_string(n) + " " + c.flags;
        const auto r = run(kCli + args);
        bool ok = r.exit_code == 0;
        if (ok) {
          try {
            ok = bit_equal(tripoly_from_json(parse_json(r.out)["terms"]),
                           substitute_xi(build(c.p, n), c.p.xi));
          } catch (const Error&) {
            ok = false;
          }
        }
        tally(s, ok, args);
      }
      const auto r = run(kCli + " construct --formal-xi --n " + std::to_string(n) + " " + c.flags);
      tally(s, r.exit_code == 0 && bit_equal(tripoly_from_json(parse_json(r.out)["terms"]),
                                             build_recurrence(c.p, n)),
            "formal xi");
    }
  }
  return s;
}

SubCheck exit_codes() {
  SubCheck s{"exit_codes"};
  struct Case {
    std::string args;
    int code;
    std::string error;
  };
  const Case cases[] = {
      {"construct --nu 1 --alpha 0 --n 3", 0, ""},
      {"construct --method hermite --alpha 0", 2, "AlphaZero"},
      {"construct --n 61", 2, "UsageError"},
      {"construct --method nonsense", 2, "UsageError"},
      {"frobnicate", 2, "UsageError"},
      {"verify --id nielsen --nu 1 --alpha 0.3 --n-max 10", 0, ""},
      {"verify --id pde --n-max 0", 0, ""},
      {"verify --id all --seed 7", 0, ""},
      {"gram --kind basic --nu 1 --alpha 0.2 --N 4", 0, ""},
      {"gram --kind basic --nu 1 --alpha 0.2 --N 4 --tol 1e-30", 1, ""},
      {"gram --kind basic --nu 1 --alpha 0.6 --N 4", 2, "RegimeViolation"},
      {"transform --kind wigner --alpha 0.6 --nu 1", 2, "RegimeViolation"},
      {"transform --kind real --alpha -0.5 --n 2", 2, "AlphaNotPositive"},
      {"transform --kind plane --nu 1 --alpha 0.2 --n 4 --z-re 1 --z-im 0.5 --check", 0, ""},
      {"transform --kind mehler --tau 2 --lambda-re 0.9 --x 1 --y 1 --k-trunc 10", 2,
       "TruncationInsufficient"},
      {"automorphic --kind eigen --alpha 1.2 --beta 0.3 --m 4 --n -1", 0, ""},
      {"automorphic --kind functional --alpha 0 --m 1", 2, "DomainError"},
      {"grid --n 1 --nu 1 --alpha 0 --nx 2 --ny 2", 0, ""},
  };
  for (const auto& c : cases) {
    const auto r = run(kCli + " " + c.args);
    bool ok = r.exit_code == c.code;
    if (ok && c.code == 2) {
      try {
        const Json j = parse_json(r.err);
        ok = j.at("error") == c.error && j.at("message").is_string();
      } catch (const std::exception&) {
        ok = false;
      }
    }
    tally(s, ok, c.args + " -> " + std::to_string(r.exit_code));
  }
  return s;
}

SubCheck determinism() {
  SubCheck s{"determinism"};
  const std::string cmds[] = {"verify --id all --seed 7", "construct --nu 0.7 --alpha 1.9 --n 12",
                              "grid --n 4 --nu 1.2 --alpha -0.3 --nx 5 --ny 4",
                              "automorphic --kind functional --alpha 1.1 --beta 0.2 --m 4 --n 2",
                              "suite --criteria 4 5"};
  for (const auto& c : cmds) {
    const auto a = run(kCli + " " + c);
    const auto b = run(kCli + " " + c);
    tally(s, !a.out.empty() && a.out == b.out && a.exit_code == b.exit_code, c);
  }
  const auto flag = run(kCli + " verify --id gf_double --seed 11");
  const auto env = run("POLYHERM_SEED=11 " + kCli + " verify --id gf_double --seed 3");
  tally(s, !flag.out.empty() && flag.out == env.out, "POLYHERM_SEED override");
  return s;
}

SubCheck suite_runtime(std::uint64_t seed, const std::vector<CriterionResult>& in_process,
                       double& seconds) {
  SubCheck s{"suite_end_to_end"};
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const auto r = run("POLYHERM_SEED=" + std::to_string(seed) + " " + kCli + " suite");
  seconds = std::chrono::duration<double>(Clock::now() - start).count();
  s.worst = seconds;
  s.tolerance = kSuiteBudgetSeconds;
  tally(s, seconds < kSuiteBudgetSeconds, "suite exceeded the time budget");
  try {
    const Json j = parse_json(r.out);
    const auto& crit = j.at("criteria");
    bool same = crit.size() == in_process.size();
    for (std::size_t i = 0; same && i < crit.size(); ++i) {
      same = crit[i].at("pass").get<bool>() == in_process[i].pass &&
             crit[i].at("criterion").get<int>() == in_process[i].id;
    }
    tally(s, same, "suite verdicts differ from the in-process run");
    const bool all = j.at("pass").get<bool>();
    tally(s, r.exit_code == (all ? 0 : 1), "suite exit code does not match its verdict");
  } catch (const std::exception& e) {
    tally(s, false, std::string("suite output unreadable: ") + e.what());
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = kDefaultSeed;
  std::string json_path;
  CLI::App app{"acceptance criteria"};
  app.add_option("--seed", seed);
  app.add_option("--json", json_path, "write the full reports here");
  CLI11_PARSE(app, argc, argv);
  if (const char* env = std::getenv("POLYHERM_SEED")) seed = std::stoull(env, nullptr, 0);

  std::vector<CriterionResult> results;
  bool all = true;
  for (int id = 1; id <= 6; ++id) {
    results.push_back(run_criterion(id, seed));
    all = all && results.back().pass;
    std::cout << summary_line(results.back()) << std::endl;
  }

  CriterionResult cli;
  cli.id = 7;
  cli.title = "CLI black-box";
  const auto start = std::chrono::steady_clock::now();
  double suite_seconds = 0.0;
  cli.subchecks = {round_trip(), exit_codes(), determinism(),
                   suite_runtime(seed, results, suite_seconds)};
  cli.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  cli.pass = true;
  for (const auto& s : cli.subchecks) cli.pass = cli.pass && s.failures == 0 && s.checks > 0;
  all = all && cli.pass;
  std::cout << summary_line(cli) << std::endl;
  for (const auto& s : cli.subchecks) {
    if (!s.first_error.empty()) std::cout << "  " << s.name << ": " << s.first_error << "\n";
  }
  for (const auto& r : results) {
    for (const auto& s : r.subchecks) {
      if (s.failures > 0 && !s.note.empty()) std::cout << "  " << s.name << ": " << s.note << "\n";
    }
  }

  if (!json_path.empty()) {
    Json arr = Json::array();
    for (const auto& r : results) arr.push_back(to_json(r, true));
    arr.push_back(to_json(cli, true));
    std::ofstream(json_path) << dump(Json{{"seed", seed}, {"pass", all}, {"criteria", arr}}) << "\n";
  }
  return all ? 0 : 1;
}
