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

#include "artcong/artcong.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "artcong/cache.hpp"
#include "artcong/congruence.hpp"
#include "artcong/engine.hpp"
#include "artcong/error.hpp"
#include "artcong/graph.hpp"
#include "artcong/representation.hpp"
#include "artcong/roots.hpp"
#include "artcong/suite.hpp"

using namespace artcong;

struct artcong_graph {
  CoxeterGraph g{1};
};

struct artcong_session {
  std::size_t cap = kDefaultCap;
  int threads = 1;
  SamplingOptions sampling;
  bool big = false;
  bool timing = false;
  bool cache_enabled = true;
  std::string cache_path;
  std::unique_ptr<JsonlCache> cache;

  JsonlCache* store() {
    if (!cache_enabled) return nullptr;
    if (!cache) cache = std::make_unique<JsonlCache>(resolve_cache_path(cache_path));
    return cache.get();
  }
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
artcong_status guard(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return ARTCONG_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return static_cast<artcong_status>(static_cast<int>(e.code()));
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return ARTCONG_E_SYNTAX;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return ARTCONG_E_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ARTCONG_E_INTERNAL;
  }
}

template <typename T>
T& deref(T* p) {
  if (!p) throw Error(ErrorCode::kInvalidArgument, "null argument");
  return *p;
}

void emit(char** out, const nlohmann::json& j) {
  const std::string s = j.dump();
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (!buf) throw std::bad_alloc();
  std::memcpy(buf, s.c_str(), s.size() + 1);
  deref(out) = buf;
}

std::string str(const char* s) {
  if (!s) throw Error(ErrorCode::kInvalidArgument, "null string argument");
  return s;
}

CoxeterGraph load_one(const std::string& spec) {
  if (!spec.empty() && spec[0] == '@') {
    std::ifstream in(spec.substr(1));
    if (!in) throw Error(ErrorCode::kIo, "cannot read graph file " + spec.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    return load_graph_text(ss.str());
  }
  if (spec.rfind("coxeter", 0) == 0 || (!spec.empty() && spec[0] == '{')) return load_graph_text(spec);
  return catalog_graph(spec);
}

CoxeterGraph load_spec(const std::string& spec) {
  if (spec.rfind("coxeter", 0) == 0 || (!spec.empty() && spec[0] == '{')) return load_one(spec);
  std::size_t start = 0;
  CoxeterGraph out{1};
  bool first = true;
  while (true) {
    const std::size_t plus = spec.find('+', start);
    const std::string part = spec.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    if (part.empty()) throw Error(ErrorCode::kSyntax, "empty component in graph '" + spec + "'");
    const CoxeterGraph g = load_one(part);
    out = first ? g : disjoint_union(out, g);
    first = false;
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return out;
}

RepresentationSpec rep_spec(const CoxeterGraph& g, artcong_rep_kind kind, int numeric) {
  RepresentationSpec spec = kind == ARTCONG_REP_TITS    ? RepresentationSpec::tits(g)
                            : kind == ARTCONG_REP_BURAU ? RepresentationSpec::burau(g)
                            : kind == ARTCONG_REP_SIGMA_TILDE
                                ? RepresentationSpec::sigma_tilde(g)
                                : throw Error(ErrorCode::kInvalidArgument, "unknown representation kind");
  return numeric ? spec.numeric() : spec;
}

const char* rep_name(artcong_rep_kind kind) {
  switch (kind) {
    case ARTCONG_REP_TITS: return "tits";
    case ARTCONG_REP_BURAU: return "burau";
    default: return "sigma-tilde";
  }
}

GroupKind group_kind(artcong_group_kind k) {
  if (k == ARTCONG_ARTIN) return GroupKind::kArtin;
  if (k == ARTCONG_COXETER) return GroupKind::kCoxeter;
  throw Error(ErrorCode::kInvalidArgument, "unknown group kind");
}

Word parse_with_pow(const CoxeterGraph& g, const char* text, WordMode mode, unsigned pow) {
  const Word w = parse_word(str(text), g, mode);
  return pow == 1 ? w : power(w, pow);
}

std::string graph_label(const CoxeterGraph& g) { return g.name().empty() ? serialize_graph(g) : g.name(); }

}  // namespace

extern "C" {

const char* artcong_version(void) { return kVersion; }

const char* artcong_last_error(void) { return g_last_error.c_str(); }

const char* artcong_status_name(artcong_status status) {
  if (status == ARTCONG_OK) return "OK";
  if (status >= ARTCONG_E_SYNTAX && status <= ARTCONG_E_IO) {
    return error_code_name(static_cast<ErrorCode>(static_cast<int>(status)));
  }
  return "Internal";
}

void artcong_string_free(char* s) { std::free(s); }

artcong_status artcong_graph_load(const char* spec, artcong_graph** out) {
  return guard([&] {
    auto g = std::make_unique<artcong_graph>();
    g->g = load_spec(str(spec));
    deref(out) = g.release();
  });
}

void artcong_graph_free(artcong_graph* g) { delete g; }

artcong_status artcong_graph_rank(const artcong_graph* g, int* out) {
  return guard([&] { deref(out) = deref(g).g.rank(); });
}

artcong_status artcong_graph_json(const artcong_graph* g, char** out) {
  return guard([&] { emit(out, graph_to_json(deref(g).g)); });
}

artcong_status artcong_graph_dsl(const artcong_graph* g, char** out) {
  return guard([&] { emit(out, serialize_graph(deref(g).g)); });
}

artcong_status artcong_graph_classify(const artcong_graph* g, char** out) {
  return guard([&] { emit(out, classification_to_json(classify(deref(g).g))); });
}

artcong_status artcong_graph_union(const artcong_graph* a, const artcong_graph* b, artcong_graph** out) {
  return guard([&] {
    auto g = std::make_unique<artcong_graph>();
    g->g = disjoint_union(deref(a).g, deref(b).g);
    deref(out) = g.release();
  });
}

artcong_status artcong_session_create(artcong_session** out) {
  return guard([&] { deref(out) = new artcong_session(); });
}

void artcong_session_free(artcong_session* s) { delete s; }

artcong_status artcong_session_set_cap(artcong_session* s, uint64_t cap) {
  return guard([&] {
    if (cap < 1) throw Error(ErrorCode::kInvalidArgument, "cap must be >= 1");
    deref(s).cap = cap;
  });
}

artcong_status artcong_session_set_threads(artcong_session* s, int threads) {
  return guard([&] {
    if (threads < 1) throw Error(ErrorCode::kInvalidArgument, "threads must be >= 1");
    deref(s).threads = threads;
  });
}

artcong_status artcong_session_set_seed(artcong_session* s, uint64_t seed) {
  return guard([&] { deref(s).sampling.seed = seed; });
}

artcong_status artcong_session_set_samples(artcong_session* s, uint64_t samples) {
  return guard([&] { deref(s).sampling.samples = samples; });
}

artcong_status artcong_session_set_big(artcong_session* s, int big) {
  return guard([&] { deref(s).big = big != 0; });
}

artcong_status artcong_session_set_timing(artcong_session* s, int timing) {
  return guard([&] { deref(s).timing = timing != 0; });
}

artcong_status artcong_session_set_cache(artcong_session* s, const char* path, int enabled) {
  return guard([&] {
    artcong_session& ss = deref(s);
    ss.cache_path = path ? path : "";
    ss.cache_enabled = enabled != 0;
    ss.cache.reset();
  });
}

artcong_status artcong_session_warnings(artcong_session* s, char** out) {
  return guard([&] {
    artcong_session& ss = deref(s);
    emit(out, ss.cache ? nlohmann::json(ss.cache->warnings()) : nlohmann::json::array());
  });
}

artcong_status artcong_rep_gram(const artcong_graph* g, char** out) {
  return guard([&] {
    const CoxeterGraph& gg = deref(g).g;
    nlohmann::json j = {{"graph", graph_label(gg)}};
    if (gg.is_small()) {
      j["arithmetic"] = "exact";
      j["gram"] = to_json(tits_gram(gg));
    } else {
      j["arithmetic"] = "numeric";
      j["gram"] = to_json(tits_gram_numeric(gg));
    }
    emit(out, j);
  });
}

artcong_status artcong_rep_generators(const artcong_graph* g, artcong_rep_kind kind, int numeric,
                                      char** out) {
  return guard([&] {
    const CoxeterGraph& gg = deref(g).g;
    const RepresentationSpec spec = rep_spec(gg, kind, numeric);
    const WordMode mode = kind == ARTCONG_REP_TITS ? WordMode::kCoxeter : WordMode::kArtin;
    nlohmann::json gens = nlohmann::json::array();
    for (int i = 1; i <= gg.rank(); ++i) {
      Word w;
      w.mode = mode;
      w.letters = {i};
      gens.push_back(evaluated_to_json(eval_word(spec, w)));
    }
    emit(out, {{"graph", graph_label(gg)}, {"kind", rep_name(kind)}, {"generators", gens}});
  });
}

artcong_status artcong_rep_eval(const artcong_graph* g, artcong_rep_kind kind, int numeric, const char* word,
                                unsigned pow, uint64_t mod, char** out) {
  return guard([&] {
    const CoxeterGraph& gg = deref(g).g;
    const RepresentationSpec spec = rep_spec(gg, kind, numeric);
    const WordMode mode = kind == ARTCONG_REP_TITS ? WordMode::kCoxeter : WordMode::kArtin;
    const Word w = parse_with_pow(gg, word, mode, pow);
    nlohmann::json j = {{"graph", graph_label(gg)},
                        {"kind", rep_name(kind)},
                        {"word", format_word(w, gg)},
                        {"length", w.length()}};
    if (mod > 0) {
      if (kind == ARTCONG_REP_BURAU || numeric) {
        throw Error(ErrorCode::kInvalidArgument, "--mod needs an integral representation (tits or sigma-tilde)");
      }
      const ResidueMatrix m = eval_word_mod(spec, w, mod);
      j["mod"] = mod;
      j["matrix"] = to_json(m);
      j["is_identity"] = m.is_identity();
    } else {
      const Evaluated e = eval_word(spec, w);
      j["matrix"] = evaluated_to_json(e);
      if (const auto* im = std::get_if<IntegerMatrix>(&e)) {
        j["is_identity"] = im->is_identity();
        if (gg.affine_vertex()) j["display_matrix"] = to_json(to_display_order(*im, gg));
      }
    }
    emit(out, j);
  });
}

artcong_status artcong_rep_relations(const artcong_graph* g, artcong_rep_kind kind, int numeric, char** out) {
  return guard([&] {
    const CoxeterGraph& gg = deref(g).g;
    nlohmann::json j = check_relations(rep_spec(gg, kind, numeric)).to_json();
    j["graph"] = graph_label(gg);
    j["kind"] = rep_name(kind);
    emit(out, j);
  });
}

artcong_status artcong_rep_hecke(const artcong_graph* g, char** out) {
  return guard([&] { emit(out, hecke_check(deref(g).g).to_json()); });
}

artcong_status artcong_rep_braid(int strands, int i, char** out) {
  return guard([&] {
    emit(out, {{"strands", strands}, {"index", i}, {"matrix", braid_Zi(strands, i).to_json()}});
  });
}

artcong_status artcong_word_parse(const artcong_graph* g, const char* word, int artin, unsigned pow, char** out) {
  return guard([&] {
    const CoxeterGraph& gg = deref(g).g;
    const Word w = parse_with_pow(gg, word, artin ? WordMode::kArtin : WordMode::kCoxeter, pow);
    emit(out, {{"word", format_word(w, gg)},
               {"letters", w.letters},
               {"length", w.length()},
               {"inverse", format_word(inverse(w), gg)}});
  });
}

artcong_status artcong_group_enumerate(artcong_session* s, const artcong_graph* g, char** out) {
  return guard([&] {
    const artcong_session& ss = deref(s);
    emit(out, enumerate_group(deref(g).g, ss.cap, ss.threads).to_json());
  });
}

artcong_status artcong_group_longest(const artcong_graph* g, char** out) {
  return guard([&] {
    const CoxeterGraph& gg = deref(g).g;
    const Word w = longest_element(gg);
    emit(out, {{"graph", graph_label(gg)}, {"word", format_word(w, gg)}, {"length", w.length()}});
  });
}

artcong_status artcong_group_delta(const artcong_graph* g, char** out) {
  return guard([&] {
    const CoxeterGraph& gg = deref(g).g;
    const GarsideDelta d = garside_delta(gg);
    emit(out, {{"graph", graph_label(gg)},
               {"delta", format_word(d.delta, gg)},
               {"center_generator", d.squared ? "Delta^2" : "Delta"},
               {"center_word", format_word(d.center_generator(), gg)}});
  });
}

artcong_status artcong_cong_member(const artcong_graph* g, artcong_group_kind kind, uint64_t level,
                                   const char* word, unsigned pow, char** out) {
  return guard([&] {
    const CoxeterGraph& gg = deref(g).g;
    const GroupKind k = group_kind(kind);
    const Word w = parse_with_pow(gg, word, k == GroupKind::kArtin ? WordMode::kArtin : WordMode::kCoxeter, pow);
    const bool in = member({gg, k, level}, w);
    emit(out, {{"graph", graph_label(gg)},
               {"kind", k == GroupKind::kArtin ? "artin" : "coxeter"},
               {"level", level},
               {"word", format_word(w, gg)},
               {"member", in}});
  });
}

artcong_status artcong_cong_image_order(artcong_session* s, const artcong_graph* g, artcong_group_kind kind,
                                        uint64_t level, char** out) {
  return guard([&] {
    artcong_session& ss = deref(s);
    const CoxeterGraph& gg = deref(g).g;
    const GroupKind k = group_kind(kind);
    const ImageSummary sum = image_summary({gg, k, level}, ss.cap, ss.threads, ss.store());
    emit(out, {{"graph", graph_label(gg)},
               {"kind", k == GroupKind::kArtin ? "artin" : "coxeter"},
               {"level", level},
               {"order", sum.order},
               {"abelian", sum.abelian}});
  });
}

artcong_status artcong_cong_normal_closure(artcong_session* s, const artcong_graph* g, uint64_t level,
                                           char** out) {
  return guard([&] { emit(out, verify_normal_closure(deref(g).g, level, deref(s).sampling).to_json()); });
}

artcong_status artcong_cong_level2(artcong_session* s, const artcong_graph* g, char** out) {
  return guard([&] {
    artcong_session& ss = deref(s);
    emit(out, verify_level2_spherical(deref(g).g, ss.cap, ss.threads, ss.store()).to_json());
  });
}

artcong_status artcong_cong_level4(artcong_session* s, const artcong_graph* g, char** out) {
  return guard([&] {
    artcong_session& ss = deref(s);
    emit(out, verify_level4_raag(deref(g).g, ss.cap, ss.threads, ss.store()).to_json());
  });
}

artcong_status artcong_cong_commutator(const artcong_graph* g, int k, int l, char** out) {
  return guard([&] {
    nlohmann::json j = commutator_matrix(deref(g).g, k, l).to_json();
    j["k"] = k;
    j["l"] = l;
    emit(out, j);
  });
}

artcong_status artcong_cong_direct_sum(artcong_session* s, const artcong_graph* a, const artcong_graph* b,
                                       uint64_t level, char** out) {
  return guard([&] { emit(out, verify_direct_sum(deref(a).g, deref(b).g, level, deref(s).sampling).to_json()); });
}

artcong_status artcong_cong_divisors(const artcong_graph* g, const char* word, unsigned pow, uint64_t level,
                                     char** out) {
  return guard([&] {
    const CoxeterGraph& gg = deref(g).g;
    emit(out, divisor_containment(gg, parse_with_pow(gg, word, WordMode::kArtin, pow), level).to_json());
  });
}

artcong_status artcong_cong_odd_quotient(artcong_session* s, const artcong_graph* g, uint64_t k, char** out) {
  return guard([&] {
    artcong_session& ss = deref(s);
    emit(out, oddk_quotient_check(deref(g).g, k, ss.cap, ss.threads, ss.store()).to_json());
  });
}

artcong_status artcong_cong_conjecture(artcong_session* s, const artcong_graph* g, char** out) {
  return guard([&] {
    artcong_session& ss = deref(s);
    emit(out, level2_conjecture_probe(deref(g).g, ss.cap, ss.threads, ss.store()).to_json());
  });
}

artcong_status artcong_cong_center(const artcong_graph* g, char** out) {
  return guard([&] { emit(out, center_image_check(deref(g).g).to_json()); });
}

artcong_status artcong_roots_enumerate(const artcong_graph* g, char** out) {
  return guard([&] { emit(out, enumerate_roots(deref(g).g).to_json()); });
}

artcong_status artcong_roots_s_theta(const artcong_graph* g, char** out) {
  return guard([&] {
    const CoxeterGraph& gg = deref(g).g;
    const Word w = s_theta_word(gg);
    emit(out, {{"graph", graph_label(gg)}, {"word", format_word(w, gg)}, {"validated", true}});
  });
}

artcong_status artcong_roots_conjugator(const artcong_graph* g, int i, char** out) {
  return guard([&] {
    const CoxeterGraph& gg = deref(g).g;
    emit(out, {{"graph", graph_label(gg)}, {"index", i}, {"word", format_word(find_conjugator(gg, i), gg)}});
  });
}

artcong_status artcong_affine_translation(const artcong_graph* g, int i, char** out) {
  return guard([&] {
    const CoxeterGraph& gg = deref(g).g;
    emit(out, translation_word(gg, i).to_json(gg));
  });
}

artcong_status artcong_affine_translations(const artcong_graph* g, char** out) {
  return guard([&] { emit(out, translations_commute(deref(g).g).to_json()); });
}

artcong_status artcong_affine_order(const artcong_graph* g, uint64_t level, char** out) {
  return guard([&] { emit(out, translation_order_check(deref(g).g, level).to_json()); });
}

artcong_status artcong_affine_a1_level(uint64_t level, char** out) {
  return guard([&] { emit(out, a1_tilde_level(level).to_json()); });
}

artcong_status artcong_affine_central(const char* type, char** out) {
  return guard([&] { emit(out, central_element_check(str(type)).to_json()); });
}

artcong_status artcong_run_suite(artcong_session* s, const char* name, char** out, int* failed) {
  return guard([&] {
    artcong_session& ss = deref(s);
    SuiteOptions opt;
    opt.cap = ss.cap;
    opt.threads = ss.threads;
    opt.sampling = ss.sampling;
    opt.big = ss.big;
    opt.timing = ss.timing;
    opt.store = ss.store();
    const SuiteResult r = run_suite(str(name), opt);
    emit(out, r.to_json(ss.timing));
    if (failed) *failed = r.failed() ? 1 : 0;
  });
}

artcong_status artcong_suite_names(char** out) {
  return guard([&] { emit(out, suite_names()); });
}

artcong_status artcong_cache_list(artcong_session* s, char** out) {
  return guard([&] {
    artcong_session& ss = deref(s);
    JsonlCache* c = ss.store();
    if (!c) throw Error(ErrorCode::kInvalidArgument, "cache is disabled");
    nlohmann::json entries = nlohmann::json::object();
    for (const auto& [k, v] : c->entries()) entries[k] = {{"order", v.order}, {"abelian", v.abelian}};
    emit(out, {{"path", c->path()}, {"version", kVersion}, {"entries", entries}});
  });
}

artcong_status artcong_cache_clear(artcong_session* s) {
  return guard([&] {
    artcong_session& ss = deref(s);
    JsonlCache* c = ss.store();
    if (!c) throw Error(ErrorCode::kInvalidArgument, "cache is disabled");
    c->clear();
  });
}

}  // extern "C"
