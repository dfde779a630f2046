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

#include "artcong/cache.hpp"

#include <cstdlib>
#include <fstream>

#include "artcong/error.hpp"

namespace artcong {

namespace {

const char* kind_tag(GroupKind k) { return k == GroupKind::kArtin ? "artin" : "coxeter"; }

std::string compose(const std::string& version, const std::string& graph, const std::string& kind,
                    std::uint64_t level, std::uint64_t cap) {
  return version + "|" + graph + "|" + kind + "|" + std::to_string(level) + "|" + std::to_string(cap);
}

}  // namespace

std::string resolve_cache_path(const std::string& explicit_path) {
  if (!explicit_path.empty()) return explicit_path;
  if (const char* env = std::getenv("ARTCONG_CACHE"); env && *env) return env;
  return kDefaultCachePath;
}

JsonlCache::JsonlCache(std::string path, std::string version)
    : path_(std::move(path)), version_(std::move(version)) {}

std::string JsonlCache::key(const CongruenceQuery& q, std::size_t cap, const std::string& version) {
  return compose(version, graph_hash(q.graph), kind_tag(q.kind), q.level, cap);
}

void JsonlCache::load() {
  if (loaded_) return;
  loaded_ = true;
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      const nlohmann::json j = nlohmann::json::parse(line);
      const std::string version = j.at("version").get<std::string>();
      if (version != version_) continue;
      const std::string k = compose(version, j.at("graph").get<std::string>(),
                                    j.at("kind").get<std::string>(), j.at("level").get<std::uint64_t>(),
                                    j.at("cap").get<std::uint64_t>());
      entries_[k] = ImageSummary{j.at("order").get<std::size_t>(), j.at("abelian").get<bool>(), false};
    } catch (const nlohmann::json::exception& e) {
      warnings_.push_back(path_ + ":" + std::to_string(lineno) + ": ignoring corrupt cache line (" +
                          e.what() + ")");
    }
  }
}

std::optional<ImageSummary> JsonlCache::get(const CongruenceQuery& q, std::size_t cap) {
  load();
  const auto it = entries_.find(key(q, cap, version_));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void JsonlCache::put(const CongruenceQuery& q, std::size_t cap, const ImageSummary& s) {
  load();
  const std::string k = key(q, cap, version_);
  if (entries_.count(k)) return;
  entries_[k] = ImageSummary{s.order, s.abelian, false};
  const nlohmann::json j = {{"version", version_},     {"graph", graph_hash(q.graph)},
                            {"kind", kind_tag(q.kind)}, {"level", q.level},
                            {"cap", cap},              {"order", s.order},
                            {"abelian", s.abelian}};
  std::ofstream out(path_, std::ios::app);
  if (!out) throw Error(ErrorCode::kIo, "cannot write cache file " + path_);
  out << j.dump() << '\n';
}

void JsonlCache::clear() {
  std::ofstream out(path_, std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write cache file " + path_);
  entries_.clear();
  warnings_.clear();
  loaded_ = true;
}

const std::map<std::string, ImageSummary>& JsonlCache::entries() {
  load();
  return entries_;
}

}  // namespace artcong
