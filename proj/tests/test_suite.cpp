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

#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "artcong/cache.hpp"
#include "artcong/error.hpp"
#include "artcong/suite.hpp"

using namespace artcong;

namespace {

std::string temp_path(const char* tag) {
  return std::string("/tmp/artcong_test_") + tag + "_" + std::to_string(::getpid()) + ".jsonl";
}

struct CountingStore : ImageStore {
  JsonlCache inner;
  int gets = 0;
  int hits = 0;
  explicit CountingStore(const std::string& p) : inner(p) {}
  std::optional<ImageSummary> get(const CongruenceQuery& q, std::size_t cap) override {
    ++gets;
    auto r = inner.get(q, cap);
    if (r) ++hits;
    return r;
  }
  void put(const CongruenceQuery& q, std::size_t cap, const ImageSummary& s) override { inner.put(q, cap, s); }
};

}  // namespace

TEST_CASE("cache round trip") {
  const std::string path = temp_path("roundtrip");
  std::remove(path.c_str());
  const CongruenceQuery q{catalog_graph("A3"), GroupKind::kArtin, 2};
  {
    JsonlCache c(path);
    CHECK_FALSE(c.get(q, kDefaultCap));
    const ImageSummary s = image_summary(q, kDefaultCap, 1, &c);
    CHECK(s.order == 24);
    CHECK_FALSE(s.cached);
  }
  {
    JsonlCache c(path);
    const ImageSummary s = image_summary(q, kDefaultCap, 1, &c);
    CHECK(s.order == 24);
    CHECK(s.cached);
    CHECK_FALSE(s.abelian);
    CHECK_FALSE(c.get(q, 1000));
    CHECK_FALSE(c.get({catalog_graph("A3"), GroupKind::kCoxeter, 2}, kDefaultCap));
  }
  {
    JsonlCache other_version(path, "0.0.0-test");
    CHECK_FALSE(other_version.get(q, kDefaultCap));
  }
  std::remove(path.c_str());
}

TEST_CASE("corrupt cache lines warn and recompute") {
  const std::string path = temp_path("corrupt");
  {
    std::ofstream out(path, std::ios::trunc);
    out << "{broken\n";
    out << R"({"version":"0.1.0","graph":"x"})" << "\n";
  }
  JsonlCache c(path);
  const ImageSummary s = image_summary({catalog_graph("A2"), GroupKind::kArtin, 2}, kDefaultCap, 1, &c);
  CHECK(s.order == 6);
  CHECK(c.warnings().size() == 2);
  c.clear();
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(content.empty());
  std::remove(path.c_str());
}

TEST_CASE("cache path resolution") {
  CHECK(resolve_cache_path("x.jsonl") == "x.jsonl");
  ::setenv("ARTCONG_CACHE", "/tmp/env.jsonl", 1);
  CHECK(resolve_cache_path("") == "/tmp/env.jsonl");
  ::unsetenv("ARTCONG_CACHE");
  CHECK(resolve_cache_path("") == kDefaultCachePath);
}

TEST_CASE("verifiers consult the store") {
  const std::string path = temp_path("store");
  std::remove(path.c_str());
  CountingStore store(path);
  CHECK(verify_level4_raag(infinity_path(3), kDefaultCap, 1, &store).status == Status::kPass);
  CHECK(store.hits == 0);
  CHECK(verify_level4_raag(infinity_path(3), kDefaultCap, 1, &store).status == Status::kPass);
  CHECK(store.hits == 2);
  std::remove(path.c_str());
}

TEST_CASE("test graphs") {
  CHECK(infinity_path(3).label(1, 2).is_infinite());
  CHECK(infinity_path(3).label(1, 3) == Label::finite(2));
  CHECK(infinity_cycle(4).label(1, 4).is_infinite());
  CHECK(infinity_cycle(2).label(1, 2).is_infinite());
  const CoxeterGraph star = infinity_star(3);
  CHECK(star.rank() == 4);
  CHECK(star.degree(1) == 3);
  CHECK(star.label(2, 3) == Label::finite(2));
}

TEST_CASE("catalog listing") {
  const auto names = catalog_names(8);
  auto has = [&](const char* n) { return std::find(names.begin(), names.end(), n) != names.end(); };
  CHECK(has("A8"));
  CHECK(has("E8"));
  CHECK(has("~E7"));
  CHECK(has("I2(8)"));
  CHECK(has("H4"));
  CHECK_FALSE(has("~E8"));
  CHECK_FALSE(has("A9"));
}

TEST_CASE("suites") {
  const SuiteResult c = run_suite("commutator");
  CHECK_FALSE(c.failed());
  CHECK(c.checks.size() == 4);
  const nlohmann::json j = c.to_json(false);
  CHECK(j["status"] == "pass");
  CHECK_FALSE(j["checks"][0].contains("elapsed"));
  CHECK(c.to_json(true)["checks"][0].contains("elapsed"));
  CHECK(run_suite("commutator").to_json(false) == j);
  for (const auto& check : j["checks"]) CHECK_FALSE(check["paper_ref"].get<std::string>().empty());

  const SuiteResult conj = run_suite("conjecture");
  CHECK_FALSE(conj.failed());
  for (const auto& check : conj.checks) CHECK(check.report.status == Status::kProbe);

  const SuiteResult affine = run_suite("affine");
  std::vector<std::string> failed;
  for (const auto& check : affine.checks) {
    if (check.report.failed()) failed.push_back(check.id);
  }
  CHECK(failed == std::vector<std::string>{"affine.s-theta.D4", "affine.s-theta.D5", "affine.s-theta.D6"});

  CHECK_THROWS_AS(run_suite("nope"), Error);
}
