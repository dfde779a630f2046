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

#include <string>
#include <vector>

#include <json.hpp>

#include "artcong/congruence.hpp"
#include "artcong/report.hpp"

namespace artcong {

struct SuiteOptions {
  std::size_t cap = kDefaultCap;
  int threads = 1;
  SamplingOptions sampling;
  bool big = false;     // adds the E7 level-2 check
  bool timing = false;  // include per-check elapsed seconds in JSON
  ImageStore* store = nullptr;
};

struct SuiteCheck {
  std::string id;
  Report report;
  double elapsed = 0.0;
};

struct SuiteResult {
  std::string name;
  std::vector<SuiteCheck> checks;

  bool failed() const;
  nlohmann::json to_json(bool timing) const;
};

const std::vector<std::string>& suite_names();

/// Runs one named suite. Failures and thrown errors become fail reports.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt = {});

/// Catalog names of rank <= max_rank, spherical and affine.
std::vector<std::string> catalog_names(int max_rank);

/// Test graphs used by the suites.
CoxeterGraph infinity_path(int n);
CoxeterGraph infinity_cycle(int n);
CoxeterGraph infinity_star(int leaves);
CoxeterGraph label_pair(Label m);

/// Individual checks, shared with the acceptance binary.
Report relations_check(const CoxeterGraph& g);
Report hecke_check(const CoxeterGraph& g);
Report braid_cross_check(int max_strands);
Report specialization_check(const std::vector<CoxeterGraph>& graphs);
Report root_count_check(const CoxeterGraph& g);
Report s_theta_table_check(const CoxeterGraph& g);
Report a1_tilde_level_check(std::uint64_t m);
Report commutator_check(const CoxeterGraph& g);

}  // namespace artcong
