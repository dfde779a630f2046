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

// Words in Coxeter generators (involutions) or Artin generators (signed).

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "artcong/graph.hpp"

namespace artcong {

enum class WordMode { kCoxeter, kArtin };

struct Word {
  /// 1-based vertex indices; negative letters are inverses (artin only).
  std::vector<int> letters;
  WordMode mode = WordMode::kCoxeter;

  std::size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  friend bool operator==(const Word&, const Word&) = default;
};

/// Whitespace-separated signed integers. "0" names the affine vertex of a
/// tagged affine graph. Throws Syntax, BadIndex, InverseInCoxeterMode.
Word parse_word(std::string_view text, const CoxeterGraph& g, WordMode mode);
/// Renders the affine vertex as "0".
std::string format_word(const Word& w, const CoxeterGraph& g);

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word power(const Word& w, unsigned k);
/// Same letters, artin mode.
Word as_artin(const Word& w);

}  // namespace artcong
