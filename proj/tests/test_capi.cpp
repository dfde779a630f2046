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

#include <cstring>
#include <string>

#include <json.hpp>

#include "artcong/artcong.h"

namespace {

nlohmann::json take(char* s) {
  nlohmann::json j = nlohmann::json::parse(s);
  artcong_string_free(s);
  return j;
}

}  // namespace

TEST_CASE("C API graphs") {
  artcong_graph* g = nullptr;
  REQUIRE(artcong_graph_load("A2+~A1", &g) == ARTCONG_OK);
  int rank = 0;
  CHECK(artcong_graph_rank(g, &rank) == ARTCONG_OK);
  CHECK(rank == 4);
  char* out = nullptr;
  REQUIRE(artcong_graph_classify(g, &out) == ARTCONG_OK);
  CHECK(take(out)["components"].size() == 2);
  artcong_graph_free(g);

  CHECK(artcong_graph_load("Z9", &g) == ARTCONG_E_UNKNOWN_NAME);
  CHECK(std::strlen(artcong_last_error()) > 0);
  CHECK(std::string(artcong_status_name(ARTCONG_E_UNKNOWN_NAME)) == "UnknownName");
  CHECK(artcong_graph_load("@/nonexistent/file", &g) == ARTCONG_E_IO);
  CHECK(artcong_graph_load("coxeter n=2; m 1 2 = 1", &g) == ARTCONG_E_INVALID_LABEL);
  CHECK(artcong_graph_load(nullptr, &g) == ARTCONG_E_INVALID_ARGUMENT);
}

TEST_CASE("C API evaluation") {
  artcong_graph* g = nullptr;
  REQUIRE(artcong_graph_load("~A1", &g) == ARTCONG_OK);
  char* out = nullptr;
  REQUIRE(artcong_rep_eval(g, ARTCONG_REP_TITS, 0, "0 1", 1, 0, &out) == ARTCONG_OK);
  const nlohmann::json j = take(out);
  CHECK(j["display_matrix"] == nlohmann::json::parse("[[3,-2],[2,-1]]"));
  REQUIRE(artcong_rep_eval(g, ARTCONG_REP_TITS, 0, "0 1", 3, 3, &out) == ARTCONG_OK);
  CHECK(take(out)["is_identity"] == true);
  CHECK(artcong_rep_eval(g, ARTCONG_REP_TITS, 0, "1 -1", 1, 0, &out) == ARTCONG_E_INVERSE_IN_COXETER_MODE);
  CHECK(artcong_rep_eval(g, ARTCONG_REP_BURAU, 0, "1", 1, 5, &out) == ARTCONG_E_INVALID_ARGUMENT);
  artcong_graph_free(g);
}

TEST_CASE("C API session and congruence") {
  artcong_session* s = nullptr;
  REQUIRE(artcong_session_create(&s) == ARTCONG_OK);
  CHECK(artcong_session_set_cache(s, nullptr, 0) == ARTCONG_OK);
  CHECK(artcong_session_set_threads(s, 0) == ARTCONG_E_INVALID_ARGUMENT);
  artcong_graph* g = nullptr;
  REQUIRE(artcong_graph_load("A2", &g) == ARTCONG_OK);
  char* out = nullptr;
  REQUIRE(artcong_cong_image_order(s, g, ARTCONG_ARTIN, 2, &out) == ARTCONG_OK);
  CHECK(take(out)["order"] == 6);
  REQUIRE(artcong_session_set_cap(s, 3) == ARTCONG_OK);
  CHECK(artcong_cong_image_order(s, g, ARTCONG_ARTIN, 3, &out) == ARTCONG_E_CAP_EXCEEDED);
  CHECK(artcong_cache_clear(s) == ARTCONG_E_INVALID_ARGUMENT);
  int failed = -1;
  REQUIRE(artcong_run_suite(s, "commutator", &out, &failed) == ARTCONG_OK);
  CHECK(failed == 0);
  CHECK(take(out)["suite"] == "commutator");
  CHECK(artcong_run_suite(s, "bogus", &out, &failed) == ARTCONG_E_INVALID_ARGUMENT);
  artcong_graph_free(g);
  artcong_session_free(s);
}

TEST_CASE("C API roots") {
  artcong_graph* d4 = nullptr;
  REQUIRE(artcong_graph_load("D4", &d4) == ARTCONG_OK);
  char* out = nullptr;
  REQUIRE(artcong_roots_enumerate(d4, &out) == ARTCONG_OK);
  CHECK(take(out)["root_count"] == 24);
  CHECK(artcong_roots_s_theta(d4, &out) == ARTCONG_E_TABLE_INCONSISTENT);
  artcong_graph_free(d4);
  CHECK(artcong_affine_central("~E6", &out) == ARTCONG_E_UNKNOWN_TYPE);
  CHECK(artcong_affine_a1_level(2, &out) == ARTCONG_E_BAD_LEVEL);
  REQUIRE(artcong_affine_a1_level(6, &out) == ARTCONG_OK);
  CHECK(take(out)["exponent"] == 3);
}
