// Copyright 2026 The Prudens Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// prudens: command-line front end.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prudens/dsl.h"
#include "prudens/fuzz.h"
#include "prudens/procedures.h"
#include "prudens/report.h"
#include "prudens/strategy_space.h"

namespace fs = std::filesystem;
using namespace prudens;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitViolation = 4;

struct Config {
  std::string command;
  std::vector<std::string> inputs;
  std::string format = "json";
  std::uint64_t seed = 1;
  int count = 100;
  int max_strategies = 0;  // 0: library default
  int jobs = 1;
  bool timings = false;
  bool in_place = false;
  bool no_reduced = false;
  bool no_shrink = false;
  std::string out_dir = ".";
};

std::string CorpusDir() {
  if (const char* env = std::getenv("PRUDENS_CORPUS"); env && *env) return env;
  return PRUDENS_DEFAULT_CORPUS;
}

// "@corpus" stands for every .seqgame file in the corpus directory.
std::vector<std::string> ExpandInputs(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& in : raw) {
    if (in != "@corpus") {
      out.push_back(in);
      continue;
    }
    std::vector<std::string> found;
    for (const auto& e : fs::directory_iterator(CorpusDir())) {
      if (e.path().extension() == ".seqgame") found.push_back(e.path().string());
    }
    std::sort(found.begin(), found.end());
    out.insert(out.end(), found.begin(), found.end());
  }
  return out;
}

std::size_t Cap(const Config& c) {
  return c.max_strategies > 0 ? static_cast<std::size_t>(c.max_strategies) : kDefaultStrategyCap;
}

std::string Stem(const std::string& path) { return fs::path(path).stem().string(); }

std::string WriteCounterexample(const Config& c, const std::string& name, const std::string& text) {
  fs::create_directories(c.out_dir);
  const fs::path p = fs::path(c.out_dir) / (name + ".counterexample.seqgame");
  std::ofstream(p) << text;
  return p.string();
}

void Emit(const Config& c, const Json& j, const std::string& table) {
  if (c.format == "table") {
    std::cout << table;
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

int RunFiles(const Config& c) {
  const auto files = ExpandInputs(c.inputs);
  if (files.empty()) {
    std::cerr << "prudens: no input files\n";
    return kExitUsage;
  }
  std::vector<std::pair<std::string, Game>> games;
  for (const auto& f : files) {
    try {
      games.emplace_back(f, LoadGameFile(f));
    } catch (const ParseError& e) {
      std::cerr << f << ":" << e.what() << "\n";
      return kExitParse;
    } catch (const std::exception& e) {
      std::cerr << f << ": " << e.what() << "\n";
      return kExitParse;
    }
  }

  if (c.command == "fmt") {
    for (const auto& [f, g] : games) {
      const std::string text = SerializeGame(g);
      if (c.in_place) {
        std::ofstream(f) << text;
      } else {
        std::cout << text;
      }
    }
    return kExitOk;
  }

  int status = kExitOk;
  Json results = Json::array();
  std::string table;
  for (const auto& [f, g] : games) {
    const auto t0 = std::chrono::steady_clock::now();
    auto shared = std::make_shared<const Game>(g);
    Json r;
    r["file"] = f;
    std::string text;
    try {
      const StrategySpace full = StrategySpace::Full(shared, Cap(c));
      r["game"] = GameToJson(full);
      if (c.command == "ia" || c.command == "pr-cnps" || c.command == "pr-cps") {
        ProcedureTrace t = c.command == "ia"        ? RunIteratedAdmissibility(full)
                           : c.command == "pr-cnps" ? PrudentRationalizabilityCnps(full)
                                                    : PrudentRationalizabilityCps(full);
        r["trace"] = TraceToJson(full, t);
        text = TraceTable(full, t);
      } else if (c.command == "verify") {
        const TheoremReport rep = VerifyTheorems(full);
        r["report"] = TheoremReportToJson(full, rep);
        text = TheoremTable(full, rep);
        if (!rep.ok()) {
          const Game small = ShrinkGame(g, [](const Game& x) {
            try {
              return !VerifyTheorems(StrategySpace::Full(std::make_shared<const Game>(x))).ok();
            } catch (const std::exception&) {
              return false;
            }
          });
          const std::string path = WriteCounterexample(c, Stem(f), SerializeGame(small));
          r["counterexample"] = path;
          std::cerr << f << ": theorem violation; counterexample written to " << path << "\n";
          status = kExitViolation;
        }
      } else if (c.command == "reduced") {
        const StrategySpace reduced = StrategySpace::Reduced(shared, Cap(c));
        const ReducedReport rep = VerifyReduced(full, reduced);
        r["reduced_game"] = GameToJson(reduced);
        r["report"] = TheoremReportToJson(reduced, rep.reduced);
        r["projections_match"] = rep.projections_match;
        if (rep.first_projection_mismatch) r["first_projection_mismatch"] = *rep.first_projection_mismatch;
        r["ok"] = rep.ok();
        text = TheoremTable(reduced, rep.reduced);
        text += std::string("projections onto the full space: ") + (rep.projections_match ? "match" : "MISMATCH") + "\n";
        if (!rep.ok()) {
          const Game small = ShrinkGame(g, [](const Game& x) {
            try {
              auto p = std::make_shared<const Game>(x);
              return !VerifyReduced(StrategySpace::Full(p), StrategySpace::Reduced(p)).ok();
            } catch (const std::exception&) {
              return false;
            }
          });
          const std::string path = WriteCounterexample(c, Stem(f), SerializeGame(small));
          r["counterexample"] = path;
          std::cerr << f << ": reduced-variant violation; counterexample written to " << path << "\n";
          status = kExitViolation;
        }
      }
    } catch (const SizeLimit& e) {
      std::cerr << f << ": " << e.what() << "\n";
      return kExitUsage;
    }
    if (c.timings) {
      r["elapsed_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
    table += "== " + f + "\n" + text;
    results.push_back(std::move(r));
  }
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = c.command;
  j["results"] = results;
  Emit(c, j, table);
  return status;
}

int RunFuzzCommand(const Config& c) {
  FuzzOptions o;
  o.seed = c.seed;
  o.count = c.count;
  o.jobs = std::max(1, c.jobs);
  o.reduced = !c.no_reduced;
  o.shrink = !c.no_shrink;
  if (c.max_strategies > 0) o.bounds.max_strategies = c.max_strategies;
  const auto t0 = std::chrono::steady_clock::now();
  const FuzzResult r = RunFuzz(o);
  Json j = FuzzResultToJson(r, o);
  if (c.timings) {
    j["elapsed_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
  std::ostringstream t;
  t << "games " << r.games << "\n"
    << "pr-cnps violations " << r.cnps_violations << "\n"
    << "pr-cps violations " << r.cps_violations << "\n"
    << "violations without a refutation " << r.unrefuted_violations << "\n"
    << "reduced failures " << r.reduced_failures << "\n"
    << "certificate failures " << r.certificate_failures << "\n"
    << "degree overflows " << r.degree_overflows << "\n"
    << "errors " << r.errors << "\n"
    << "fixpoint histogram";
  for (std::size_t n = 0; n < r.fixpoint_histogram.size(); ++n) t << " " << n << ":" << r.fixpoint_histogram[n];
  t << "\n";
  int status = kExitOk;
  if (!r.ok() && !r.failures.empty()) {
    const auto& f = r.failures.front();
    const std::string path = WriteCounterexample(
        c, "fuzz-" + std::to_string(c.seed) + "-" + std::to_string(f.outcome.index), f.shrunk_text);
    j["counterexample"] = path;
    t << "counterexample " << path << "\n";
    std::cerr << "fuzz: violation; counterexample written to " << path << "\n";
    status = kExitViolation;
  } else if (!r.ok()) {
    status = kExitViolation;
  }
  Emit(c, j, t.str());
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prudens: prudent rationalizability and iterated admissibility"};
  app.require_subcommand(1);
  Config c;

  auto common = [&c](CLI::App* sub, bool files) {
    if (files) sub->add_option("files", c.inputs, "game files (.seqgame), or @corpus")->required();
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--max-strategies", c.max_strategies, "strategy-count cap per player");
    sub->add_flag("--timings", c.timings, "include wall-clock timings (breaks byte-identity)");
    sub->add_option("--out-dir", c.out_dir, "where counterexamples are written");
  };
  for (const char* name : {"ia", "pr-cnps", "pr-cps", "verify", "reduced"}) {
    common(app.add_subcommand(name, std::string("run ") + name + " on game files"), true);
  }
  auto* fmt = app.add_subcommand("fmt", "print games in canonical form");
  fmt->add_option("files", c.inputs, "game files")->required();
  fmt->add_flag("--in-place,-i", c.in_place, "rewrite the files");
  auto* fuzz = app.add_subcommand("fuzz", "differential fuzz campaign over random games");
  common(fuzz, false);
  fuzz->add_option("--seed", c.seed, "campaign seed");
  fuzz->add_option("--count", c.count, "number of games")->check(CLI::NonNegativeNumber);
  fuzz->add_option("--jobs,-j", c.jobs, "worker threads");
  fuzz->add_flag("--no-reduced", c.no_reduced, "skip the reduced-strategy analogue");
  fuzz->add_flag("--no-shrink", c.no_shrink, "keep counterexamples unshrunk");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  c.command = app.get_subcommands().front()->get_name();
  try {
    return c.command == "fuzz" ? RunFuzzCommand(c) : RunFiles(c);
  } catch (const std::exception& e) {
    std::cerr << "prudens: " << e.what() << "\n";
    return 1;
  }
}
