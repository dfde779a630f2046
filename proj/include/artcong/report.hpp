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

// Verification reports shared by the congruence and affine-roots modules.

#pragma once

#include <string>

#include <json.hpp>

namespace artcong {

enum class Status { kPass, kFail, kProbe };

const char* status_name(Status s);

struct Report {
  std::string claim;
  std::string paper_ref;
  Status status = Status::kPass;
  nlohmann::json data = nlohmann::json::object();

  bool failed() const { return status == Status::kFail; }
  nlohmann::json to_json() const;
};

}  // namespace artcong
