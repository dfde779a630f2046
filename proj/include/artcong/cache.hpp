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

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "artcong/congruence.hpp"

namespace artcong {

inline constexpr const char* kVersion = "0.1.0";

/// Cache file used when neither --cache nor ARTCONG_CACHE is set.
inline constexpr const char* kDefaultCachePath = ".artcong-cache.jsonl";

/// Resolves the cache path: explicit argument, then ARTCONG_CACHE, then the default.
std::string resolve_cache_path(const std::string& explicit_path);

/// JSON-lines image-order cache. One object per line:
/// {"version","graph","kind","level","cap","order","abelian"}.
class JsonlCache : public ImageStore {
 public:
  explicit JsonlCache(std::string path, std::string version = kVersion);

  std::optional<ImageSummary> get(const CongruenceQuery& q, std::size_t cap) override;
  void put(const CongruenceQuery& q, std::size_t cap, const ImageSummary& s) override;
  void clear();

  const std::string& path() const { return path_; }
  /// Entries for the current version, keyed by their composite key.
  const std::map<std::string, ImageSummary>& entries();
  /// Problems seen while loading (corrupt lines), in file order.
  const std::vector<std::string>& warnings() const { return warnings_; }

  static std::string key(const CongruenceQuery& q, std::size_t cap, const std::string& version);

 private:
  void load();

  std::string path_;
  std::string version_;
  bool loaded_ = false;
  std::map<std::string, ImageSummary> entries_;
  std::vector<std::string> warnings_;
};

}  // namespace artcong
