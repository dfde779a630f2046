// Copyright 2026 The artcong Authors
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

// artcong command-line front end. Talks to the library only through the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <thread>

#include "artcong/artcong.h"

namespace {

constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string graph;
  std::string other;
  std::string word;
  std::string kind = "artin";
  std::string rep = "tits";
  std::string type;
  std::string suite = "all";
  std::string seed = "0xC0C0";
  std::string cache;
  unsigned pow = 1;
  std::uint64_t level = 0;
  std::uint64_t mod = 0;
  std::uint64_t cap = 10000000;
  std::uint64_t samples = 100;
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  int index = 0;
  int k = 0;
  int l = 0;
  int strands = 0;
  bool quiet = false;
  bool no_cache = false;
  bool numeric = false;
  bool big = false;
  bool timing = false;
  bool pretty = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using GraphPtr = std::unique_ptr<artcong_graph, decltype(&artcong_graph_free)>;
using SessionPtr = std::unique_ptr<artcong_session, decltype(&artcong_session_free)>;

struct ApiError {
  artcong_status status;
  std::string message;
};

void check(artcong_status st) {
  if (st != ARTCONG_OK) throw ApiError{st, artcong_last_error()};
}

// Takes ownership of a JSON string from the C API.
nlohmann::json take(char* raw) {
  std::unique_ptr<char, decltype(&artcong_string_free)> holder(raw, artcong_string_free);
  return nlohmann::json::parse(raw);
}

nlohmann::json call(const std::function<artcong_status(char**)>& fn) {
  char* out = nullptr;
  check(fn(&out));
  return take(out);
}

GraphPtr load(const std::string& spec, const char* flag) {
  if (spec.empty()) throw UsageError(std::string(flag) + " is required");
  artcong_graph* g = nullptr;
  check(artcong_graph_load(spec.c_str(), &g));
  return GraphPtr(g, artcong_graph_free);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

artcong_group_kind group_kind(const std::string& kind) {
  if (kind == "artin") return ARTCONG_ARTIN;
  if (kind == "coxeter") return ARTCONG_COXETER;
  throw UsageError("--kind must be artin or coxeter");
}

artcong_rep_kind rep_kind(const std::string& name) {
  if (name == "tits") return ARTCONG_REP_TITS;
  if (name == "burau") return ARTCONG_REP_BURAU;
  if (name == "sigma-tilde" || name == "sigma") return ARTCONG_REP_SIGMA_TILDE;
  throw UsageError("representation must be tits, burau or sigma-tilde");
}

std::uint64_t parse_seed(const std::string& text) {
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(text, &used, 16);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError("--seed expects a hexadecimal value, got '" + text + "'");
  }
}

SessionPtr make_session(const Options& o) {
  artcong_session* s = nullptr;
  check(artcong_session_create(&s));
  SessionPtr session(s, artcong_session_free);
  check(artcong_session_set_cap(s, o.cap));
  check(artcong_session_set_threads(s, o.threads));
  check(artcong_session_set_seed(s, parse_seed(o.seed)));
  check(artcong_session_set_samples(s, o.samples));
  check(artcong_session_set_big(s, o.big));
  check(artcong_session_set_timing(s, o.timing));
  check(artcong_session_set_cache(s, o.cache.c_str(), !o.no_cache));
  return session;
}

void summarize(const std::string& command, const nlohmann::json& j) {
  if (j.contains("suite")) {
    const auto& sum = j["summary"];
    std::cerr << "suite " << j["suite"].get<std::string>() << ": " << sum["pass"] << " pass, " << sum["fail"]
              << " fail, " << sum["probe"] << " probe\n";
    for (const auto& c : j["checks"]) {
      if (c["status"] == "fail") std::cerr << "  FAIL " << c["id"].get<std::string>() << "\n";
    }
  } else if (j.is_object() && j.contains("status") && j.contains("claim")) {
    std::cerr << command << ": " << j["status"].get<std::string>() << " (" << j["claim"].get<std::string>()
              << ")\n";
  } else {
    std::cerr << command << ": ok\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Congruence subgroups of Artin and Coxeter groups"};
  app.require_subcommand(1);
  Options o;

  app.add_option("--cap", o.cap, "Maximum closure size")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Sampling seed (hex)");
  app.add_option("--samples", o.samples, "Samples per sampling check");
  app.add_option("--threads", o.threads, "BFS worker threads")->check(CLI::PositiveNumber);
  app.add_option("--cache", o.cache, "Cache file (default $ARTCONG_CACHE or ./.artcong-cache.jsonl)");
  app.add_flag("--no-cache", o.no_cache, "Bypass the result cache");
  app.add_flag("--quiet,-q", o.quiet, "No summary on stderr");
  app.add_flag("--pretty", o.pretty, "Indent JSON output");

  std::string action;
  std::function<nlohmann::json()> run;
  std::string command;

  auto graph_opt = [&](CLI::App* sub) { sub->add_option("--graph,-g", o.graph, "Catalog name, @file, DSL, or A+B"); };
  auto sub = [&](CLI::App* parent, const std::string& name, const std::string& help,
                 std::function<nlohmann::json()> fn) {
    CLI::App* s = parent->add_subcommand(name, help);
    s->fallthrough();
    s->callback([&, name, parent, fn] {
      command = parent->get_name() + " " + name;
      run = fn;
    });
    return s;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    CLI::App* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
  };

  // graph
  CLI::App* graph = group("graph", "Coxeter graphs");
  graph_opt(sub(graph, "show", "Graph as JSON", [&] {
    auto g = load(o.graph, "--graph");
    return call([&](char** out) { return artcong_graph_json(g.get(), out); });
  }));
  graph_opt(sub(graph, "dsl", "Graph in the text DSL", [&] {
    auto g = load(o.graph, "--graph");
    return call([&](char** out) { return artcong_graph_dsl(g.get(), out); });
  }));
  graph_opt(sub(graph, "classify", "Small / right-angled / spherical / affine flags", [&] {
    auto g = load(o.graph, "--graph");
    return call([&](char** out) { return artcong_graph_classify(g.get(), out); });
  }));

  // rep
  CLI::App* rep = group("rep", "Representations");
  for (const char* name : {"tits", "burau", "sigma-tilde"}) {
    CLI::App* s = sub(rep, name, std::string("Evaluate the ") + name + " representation", [&, name] {
      auto g = load(o.graph, "--graph");
      const artcong_rep_kind kind = rep_kind(name);
      if (o.word.empty() && o.pow == 1 && o.mod == 0) {
        return call([&](char** out) { return artcong_rep_generators(g.get(), kind, o.numeric, out); });
      }
      return call([&](char** out) {
        return artcong_rep_eval(g.get(), kind, o.numeric, o.word.c_str(), o.pow, o.mod, out);
      });
    });
    graph_opt(s);
    s->add_option("--word,-w", o.word, "Word, e.g. \"1 2 -1\"");
    s->add_option("--pow", o.pow, "Raise the word to this power");
    s->add_option("--mod", o.mod, "Reduce modulo m")->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));
    s->add_flag("--numeric", o.numeric, "Floating-point arithmetic");
  }
  {
    CLI::App* s = sub(rep, "relations", "Check defining relations", [&] {
      auto g = load(o.graph, "--graph");
      return call([&](char** out) { return artcong_rep_relations(g.get(), rep_kind(o.rep), o.numeric, out); });
    });
    graph_opt(s);
    s->add_option("--rep", o.rep, "tits, burau or sigma-tilde");
    s->add_flag("--numeric", o.numeric, "Floating-point arithmetic");
  }
  graph_opt(sub(rep, "hecke", "K* identity and quadratic relation", [&] {
    auto g = load(o.graph, "--graph");
    return call([&](char** out) { return artcong_rep_hecke(g.get(), out); });
  }));
  graph_opt(sub(rep, "gram", "The 2B matrix", [&] {
    auto g = load(o.graph, "--graph");
    return call([&](char** out) { return artcong_rep_gram(g.get(), out); });
  }));
  {
    CLI::App* s = sub(rep, "braid", "Braid-group Burau matrix Z_i", [&] {
      return call([&](char** out) { return artcong_rep_braid(o.strands, o.index, out); });
    });
    s->add_option("--strands", o.strands, "Number of strands")->required();
    s->add_option("--index,-i", o.index, "Generator index")->required();
  }

  // word
  CLI::App* word = group("word", "Words and group elements");
  {
    CLI::App* s = sub(word, "parse", "Normalize a word", [&] {
      auto g = load(o.graph, "--graph");
      const bool artin = group_kind(o.kind) == ARTCONG_ARTIN;
      return call([&](char** out) { return artcong_word_parse(g.get(), o.word.c_str(), artin, o.pow, out); });
    });
    graph_opt(s);
    s->add_option("--word,-w", o.word, "Word")->required();
    s->add_option("--kind", o.kind, "artin or coxeter");
    s->add_option("--pow", o.pow, "Power");
  }
  graph_opt(sub(word, "enumerate", "Enumerate the Coxeter group by BFS", [&] {
    auto g = load(o.graph, "--graph");
    auto s = make_session(o);
    return call([&](char** out) { return artcong_group_enumerate(s.get(), g.get(), out); });
  }));
  graph_opt(sub(word, "longest", "Reduced word for the longest element", [&] {
    auto g = load(o.graph, "--graph");
    return call([&](char** out) { return artcong_group_longest(g.get(), out); });
  }));
  graph_opt(sub(word, "delta", "Garside element and center generator", [&] {
    auto g = load(o.graph, "--graph");
    return call([&](char** out) { return artcong_group_delta(g.get(), out); });
  }));

  // cong
  CLI::App* cong = group("cong", "Congruence subgroups");
  auto level_opt = [&](CLI::App* s) { s->add_option("--level,-m", o.level, "Level m")->required(); };
  {
    CLI::App* s = sub(cong, "member", "Is the word in the level-m subgroup?", [&] {
      auto g = load(o.graph, "--graph");
      return call([&](char** out) {
        return artcong_cong_member(g.get(), group_kind(o.kind), o.level, o.word.c_str(), o.pow, out);
      });
    });
    graph_opt(s);
    level_opt(s);
    s->add_option("--kind", o.kind, "artin or coxeter");
    s->add_option("--word,-w", o.word, "Word")->required();
    s->add_option("--pow", o.pow, "Power");
  }
  {
    CLI::App* s = sub(cong, "image-order", "Order of the image mod m", [&] {
      auto g = load(o.graph, "--graph");
      auto ss = make_session(o);
      return call([&](char** out) {
        return artcong_cong_image_order(ss.get(), g.get(), group_kind(o.kind), o.level, out);
      });
    });
    graph_opt(s);
    level_opt(s);
    s->add_option("--kind", o.kind, "artin or coxeter");
  }
  {
    CLI::App* s = sub(cong, "normal-closure", "Sample conjugates of a_i^m", [&] {
      auto g = load(o.graph, "--graph");
      auto ss = make_session(o);
      return call([&](char** out) { return artcong_cong_normal_closure(ss.get(), g.get(), o.level, out); });
    });
    graph_opt(s);
    level_opt(s);
  }
  graph_opt(sub(cong, "level2", "Level-2 quotient of a spherical graph", [&] {
    auto g = load(o.graph, "--graph");
    auto ss = make_session(o);
    return call([&](char** out) { return artcong_cong_level2(ss.get(), g.get(), out); });
  }));
  graph_opt(sub(cong, "level4", "Level-4 quotient of a right-angled graph", [&] {
    auto g = load(o.graph, "--graph");
    auto ss = make_session(o);
    return call([&](char** out) { return artcong_cong_level4(ss.get(), g.get(), out); });
  }));
  {
    CLI::App* s = sub(cong, "commutator", "Commutator matrix of a_k and a_l", [&] {
      auto g = load(o.graph, "--graph");
      return call([&](char** out) { return artcong_cong_commutator(g.get(), o.k, o.l, out); });
    });
    graph_opt(s);
    s->add_option("-k", o.k, "First vertex")->required();
    s->add_option("-l", o.l, "Second vertex")->required();
  }
  {
    CLI::App* s = sub(cong, "direct-sum", "Sampled check of (G x H)[m] = G[m] x H[m]", [&] {
      auto a = load(o.graph, "--graph");
      auto b = load(o.other, "--other");
      auto ss = make_session(o);
      return call([&](char** out) { return artcong_cong_direct_sum(ss.get(), a.get(), b.get(), o.level, out); });
    });
    graph_opt(s);
    s->add_option("--other", o.other, "Second graph");
    level_opt(s);
  }
  {
    CLI::App* s = sub(cong, "divisors", "Membership at every divisor of m", [&] {
      auto g = load(o.graph, "--graph");
      return call([&](char** out) { return artcong_cong_divisors(g.get(), o.word.c_str(), o.pow, o.level, out); });
    });
    graph_opt(s);
    level_opt(s);
    s->add_option("--word,-w", o.word, "Artin word")->required();
    s->add_option("--pow", o.pow, "Power");
  }
  {
    CLI::App* s = sub(cong, "odd-quotient", "Index check for A[k]/A[2k], k odd", [&] {
      auto g = load(o.graph, "--graph");
      auto ss = make_session(o);
      return call([&](char** out) { return artcong_cong_odd_quotient(ss.get(), g.get(), o.level, out); });
    });
    graph_opt(s);
    s->add_option("-k,--level", o.level, "Odd k >= 3")->required();
  }
  graph_opt(sub(cong, "conjecture", "Probe the level-2 conjecture", [&] {
    auto g = load(o.graph, "--graph");
    auto ss = make_session(o);
    return call([&](char** out) { return artcong_cong_conjecture(ss.get(), g.get(), out); });
  }));
  graph_opt(sub(cong, "center", "Image of the center generator", [&] {
    auto g = load(o.graph, "--graph");
    return call([&](char** out) { return artcong_cong_center(g.get(), out); });
  }));

  // roots
  CLI::App* roots = group("roots", "Root systems");
  graph_opt(sub(roots, "list", "Enumerate roots", [&] {
    auto g = load(o.graph, "--graph");
    return call([&](char** out) { return artcong_roots_enumerate(g.get(), out); });
  }));
  graph_opt(sub(roots, "s-theta", "Validated word for the highest-root reflection", [&] {
    auto g = load(o.graph, "--graph");
    return call([&](char** out) { return artcong_roots_s_theta(g.get(), out); });
  }));
  {
    CLI::App* s = sub(roots, "conjugator", "Shortest w with w(theta) = alpha_i", [&] {
      auto g = load(o.graph, "--graph");
      return call([&](char** out) { return artcong_roots_conjugator(g.get(), o.index, out); });
    });
    graph_opt(s);
    s->add_option("--index,-i", o.index, "Simple root index")->required();
  }

  // affine
  CLI::App* affine = group("affine", "Affine groups");
  {
    CLI::App* s = sub(affine, "translation", "Translation word for a simple coroot", [&] {
      auto g = load(o.graph, "--graph");
      return call([&](char** out) { return artcong_affine_translation(g.get(), o.index, out); });
    });
    graph_opt(s);
    s->add_option("--index,-i", o.index, "Simple root index")->required();
  }
  graph_opt(sub(affine, "translations", "All translations commute and are unipotent", [&] {
    auto g = load(o.graph, "--graph");
    return call([&](char** out) { return artcong_affine_translations(g.get(), out); });
  }));
  {
    CLI::App* s = sub(affine, "order", "Order of s0 s_theta mod m", [&] {
      auto g = load(o.graph, "--graph");
      return call([&](char** out) { return artcong_affine_order(g.get(), o.level, out); });
    });
    graph_opt(s);
    level_opt(s);
  }
  level_opt(sub(affine, "a1", "Generator of the ~A1 level-m subgroup", [&] {
    return call([&](char** out) { return artcong_affine_a1_level(o.level, out); });
  }));
  sub(affine, "central", "Central element display check", [&] {
    require(!o.type.empty(), "--type is required");
    return call([&](char** out) { return artcong_affine_central(o.type.c_str(), out); });
  })->add_option("--type", o.type, "~D<2n>, ~E7 or ~E8");

  // verify
  int suite_failed = 0;
  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->fallthrough();
  verify->add_option("--suite", o.suite, "relations, hecke, level2, level4, commutator, affine, conjecture, all");
  verify->add_flag("--big", o.big, "Include the E7 level-2 check");
  verify->add_flag("--timing", o.timing, "Record elapsed seconds per check");
  verify->callback([&] {
    command = "verify";
    run = [&] {
      auto ss = make_session(o);
      char* out = nullptr;
      check(artcong_run_suite(ss.get(), o.suite.c_str(), &out, &suite_failed));
      nlohmann::json j = take(out);
      if (!o.quiet) {
        const nlohmann::json w = call([&](char** o2) { return artcong_session_warnings(ss.get(), o2); });
        for (const auto& line : w) std::cerr << "warning: " << line.get<std::string>() << "\n";
      }
      return j;
    };
  });

  // cache
  CLI::App* cache = group("cache", "Image-order cache");
  sub(cache, "list", "Show cached entries", [&] {
    require(!o.no_cache, "cache list with --no-cache");
    auto ss = make_session(o);
    return call([&](char** out) { return artcong_cache_list(ss.get(), out); });
  });
  sub(cache, "clear", "Empty the cache file", [&] {
    require(!o.no_cache, "cache clear with --no-cache");
    auto ss = make_session(o);
    check(artcong_cache_clear(ss.get()));
    return nlohmann::json{{"cleared", true}};
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const nlohmann::json j = run();
    std::cout << (o.pretty ? j.dump(2) : j.dump()) << "\n";
    if (!o.quiet) summarize(command, j);
    return suite_failed ? kExitComputation : 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ApiError& e) {
    const nlohmann::json err = {{"error",
                                 {{"code", artcong_status_name(e.status)},
                                  {"status", static_cast<int>(e.status)},
                                  {"message", e.message}}}};
    std::cout << err.dump() << "\n";
    if (!o.quiet) std::cerr << command << ": " << artcong_status_name(e.status) << ": " << e.message << "\n";
    return kExitComputation;
  }
}
