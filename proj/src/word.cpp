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

#include "artcong/word.hpp"

#include <charconv>

#include "artcong/error.hpp"

namespace artcong {

Word parse_word(std::string_view text, const CoxeterGraph& g, WordMode mode) {
  Word w;
  w.mode = mode;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
                                 text[pos] == '\r' || text[pos] == ',')) {
      ++pos;
    }
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t' && text[end] != '\n' &&
           text[end] != '\r' && text[end] != ',') {
      ++end;
    }
    const std::string_view tok = text.substr(pos, end - pos);
    std::string_view digits = tok;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw Error(ErrorCode::kSyntax, "bad word letter '" + std::string(tok) + "'");
    }
    const bool negative = value < 0 || tok == "-0";
    int index = value < 0 ? -value : value;
    if (index == 0) {
      const auto affine = g.affine_vertex();
      if (!affine) {
        throw Error(ErrorCode::kBadIndex, "letter 0 needs an affine graph");
      }
      index = *affine;
    }
    if (index > g.rank()) {
      throw Error(ErrorCode::kBadIndex, "letter " + std::string(tok) + " exceeds rank " +
                                            std::to_string(g.rank()));
    }
    if (negative && mode == WordMode::kCoxeter) {
      throw Error(ErrorCode::kInverseInCoxeterMode,
                  "inverse letter '" + std::string(tok) + "' in a coxeter word");
    }
    w.letters.push_back(negative ? -index : index);
    pos = end;
  }
  return w;
}

std::string format_word(const Word& w, const CoxeterGraph& g) {
  const auto affine = g.affine_vertex();
  std::string out;
  for (int letter : w.letters) {
    if (!out.empty()) out += ' ';
    const int index = letter < 0 ? -letter : letter;
    if (letter < 0) out += '-';
    out += (affine && index == *affine) ? std::string("0") : std::to_string(index);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.mode = w.mode;
  out.letters.assign(w.letters.rbegin(), w.letters.rend());
  if (w.mode == WordMode::kArtin) {
    for (int& l : out.letters) l = -l;
  }
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  if (b.mode == WordMode::kArtin) out.mode = WordMode::kArtin;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

Word power(const Word& w, unsigned k) {
  Word out;
  out.mode = w.mode;
  out.letters.reserve(w.letters.size() * k);
  for (unsigned i = 0; i < k; ++i) out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
  return out;
}

Word as_artin(const Word& w) {
  Word out = w;
  out.mode = WordMode::kArtin;
  return out;
}

}  // namespace artcong
