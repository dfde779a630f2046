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

#include "artcong/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include "artcong/error.hpp"

namespace artcong {

std::string Label::to_string() const {
  return infinite_ ? std::string("inf") : std::to_string(value_);
}

CoxeterGraph::CoxeterGraph(int n) : n_(n) {
  if (n < 1) throw Error(ErrorCode::kRankOutOfRange, "graph needs at least one vertex");
  labels_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, Label::finite(2));
}

std::size_t CoxeterGraph::slot(int i, int j) const {
  if (i > j) std::swap(i, j);
  // pairs (i,j), i<j, laid out row by row
  const auto a = static_cast<std::size_t>(i - 1);
  const auto b = static_cast<std::size_t>(j - 1);
  return a * (2 * static_cast<std::size_t>(n_) - a - 1) / 2 + (b - a - 1);
}

Label CoxeterGraph::label(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "vertex pair (" + std::to_string(i) + "," + std::to_string(j) +
                    ") outside 1.." + std::to_string(n_));
  }
  if (i == j) return Label::finite(1);
  return labels_[slot(i, j)];
}

void CoxeterGraph::set_label(int i, int j, Label label) {
  if (i < 1 || j < 1 || i > n_ || j > n_) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "vertex pair (" + std::to_string(i) + "," + std::to_string(j) +
                    ") outside 1.." + std::to_string(n_));
  }
  if (i == j) throw Error(ErrorCode::kInvalidLabel, "diagonal labels are fixed at 1");
  if (label.is_finite() && label.value() < 2) {
    throw Error(ErrorCode::kInvalidLabel, "labels must be >= 2 or inf");
  }
  labels_[slot(i, j)] = label;
}

std::optional<int> CoxeterGraph::affine_vertex() const {
  if (!affine_base_) return std::nullopt;
  return n_;
}

bool CoxeterGraph::is_small() const {
  return std::all_of(labels_.begin(), labels_.end(), [](Label l) {
    return l.is_infinite() || l.value() == 2 || l.value() == 3;
  });
}

bool CoxeterGraph::is_right_angled() const {
  return std::all_of(labels_.begin(), labels_.end(),
                     [](Label l) { return l.is_infinite() || l.value() == 2; });
}

bool CoxeterGraph::is_crystallographic() const {
  return std::all_of(labels_.begin(), labels_.end(), [](Label l) {
    if (l.is_infinite()) return true;
    const unsigned v = l.value();
    return v == 2 || v == 3 || v == 4 || v == 6;
  });
}

int CoxeterGraph::degree(int v) const {
  int d = 0;
  for (int u = 1; u <= n_; ++u) {
    if (u != v && label(u, v) != Label::finite(2)) ++d;
  }
  return d;
}

std::vector<std::vector<int>> CoxeterGraph::components() const {
  std::vector<int> comp(n_ + 1, -1);
  std::vector<std::vector<int>> out;
  for (int s = 1; s <= n_; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int u = 1; u <= n_; ++u) {
        if (u != v && comp[u] < 0 && label(u, v) != Label::finite(2)) {
          comp[u] = id;
          stack.push_back(u);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

CoxeterGraph CoxeterGraph::induced(const std::vector<int>& vertices) const {
  CoxeterGraph g(static_cast<int>(vertices.size()));
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      g.set_label(static_cast<int>(a + 1), static_cast<int>(b + 1),
                  label(vertices[a], vertices[b]));
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// DSL

namespace {

struct Token {
  enum Kind { kWord, kInt, kEquals, kSemicolon, kEnd } kind;
  std::string text;
  int line;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == '=') {
      out.push_back({Token::kEquals, "=", line});
      ++i;
    } else if (c == ';') {
      out.push_back({Token::kSemicolon, ";", line});
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::kInt, std::string(text.substr(i, j - i)), line});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i + 1;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      out.push_back({Token::kWord, std::string(text.substr(i, j - i)), line});
      i = j;
    } else {
      throw Error(ErrorCode::kSyntax, "line " + std::to_string(line) +
                                          ": unexpected character '" + std::string(1, c) + "'");
    }
  }
  out.push_back({Token::kEnd, "", line});
  return out;
}

class DslParser {
 public:
  explicit DslParser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  CoxeterGraph parse() {
    expect_word("coxeter");
    expect_word("n");
    expect(Token::kEquals, "'='");
    const long n = expect_int();
    if (n < 1) fail("vertex count must be >= 1");
    CoxeterGraph g(static_cast<int>(n));
    std::map<std::pair<int, int>, Label> seen;
    end_statement();
    while (peek().kind != Token::kEnd) {
      if (peek().kind == Token::kSemicolon) {
        ++pos_;
        continue;
      }
      expect_word("m");
      const long i = expect_int();
      const long j = expect_int();
      expect(Token::kEquals, "'='");
      Label label = Label::finite(2);
      if (peek().kind == Token::kWord && peek().text == "inf") {
        ++pos_;
        label = Label::infinity();
      } else {
        const long v = expect_int();
        if (i == j) throw Error(ErrorCode::kInvalidLabel, "label given for diagonal pair");
        if (v < 2) {
          throw Error(ErrorCode::kInvalidLabel,
                      "line " + std::to_string(prev().line) + ": label " + std::to_string(v) +
                          " is below 2");
        }
        label = Label::finite(static_cast<unsigned>(v));
      }
      if (i == j) throw Error(ErrorCode::kInvalidLabel, "label given for diagonal pair");
      if (i < 1 || j < 1 || i > n || j > n) {
        throw Error(ErrorCode::kVertexOutOfRange,
                    "pair (" + std::to_string(i) + "," + std::to_string(j) + ") outside 1.." +
                        std::to_string(n));
      }
      const std::pair<int, int> key = std::minmax(static_cast<int>(i), static_cast<int>(j));
      if (auto it = seen.find(key); it != seen.end() && it->second != label) {
        throw Error(ErrorCode::kDuplicatePair, "conflicting labels for pair (" +
                                                   std::to_string(key.first) + "," +
                                                   std::to_string(key.second) + ")");
      }
      seen.insert_or_assign(key, label);
      g.set_label(key.first, key.second, label);
      end_statement();
    }
    return g;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& prev() const { return toks_[pos_ - 1]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::kSyntax, "line " + std::to_string(peek().line) + ": " + msg);
  }

  void expect(Token::Kind kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    ++pos_;
  }

  void expect_word(const char* word) {
    if (peek().kind != Token::kWord || peek().text != word) {
      fail(std::string("expected '") + word + "'");
    }
    ++pos_;
  }

  long expect_int() {
    if (peek().kind != Token::kInt) fail("expected an integer");
    long v = 0;
    const std::string& s = peek().text;
    const char* first = s.data() + (s[0] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) fail("malformed integer '" + s + "'");
    ++pos_;
    return v;
  }

  void end_statement() {
    if (peek().kind == Token::kSemicolon) {
      ++pos_;
    } else if (peek().kind != Token::kEnd) {
      fail("expected ';'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

CoxeterGraph parse_graph(std::string_view text) { return DslParser(tokenize(text)).parse(); }

std::string serialize_graph(const CoxeterGraph& g) {
  std::ostringstream os;
  os << "coxeter n=" << g.rank() << ";";
  for (int i = 1; i <= g.rank(); ++i) {
    for (int j = i + 1; j <= g.rank(); ++j) {
      const Label l = g.label(i, j);
      if (l != Label::finite(2)) os << " m " << i << ' ' << j << " = " << l.to_string() << ";";
    }
  }
  return os.str();
}

CoxeterGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw Error(ErrorCode::kSyntax, "graph JSON needs an integer field \"n\"");
  }
  const auto n = j["n"].get<long>();
  if (n < 1) throw Error(ErrorCode::kSyntax, "vertex count must be >= 1");
  CoxeterGraph g(static_cast<int>(n));
  std::map<std::pair<int, int>, Label> seen;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) throw Error(ErrorCode::kSyntax, "\"labels\" must be an array");
    for (const auto& e : j["labels"]) {
      if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        throw Error(ErrorCode::kSyntax, "label entries are [i, j, label]");
      }
      const long i = e[0].get<long>();
      const long k = e[1].get<long>();
      Label label = Label::finite(2);
      if (e[2].is_string() && e[2].get<std::string>() == "inf") {
        label = Label::infinity();
      } else if (e[2].is_number_integer()) {
        const long v = e[2].get<long>();
        if (v < 2) throw Error(ErrorCode::kInvalidLabel, "label below 2");
        label = Label::finite(static_cast<unsigned>(v));
      } else {
        throw Error(ErrorCode::kSyntax, "label must be an integer or \"inf\"");
      }
      if (i == k) throw Error(ErrorCode::kInvalidLabel, "label given for diagonal pair");
      if (i < 1 || k < 1 || i > n || k > n) {
        throw Error(ErrorCode::kVertexOutOfRange, "label pair outside vertex range");
      }
      const std::pair<int, int> key = std::minmax(static_cast<int>(i), static_cast<int>(k));
      if (auto it = seen.find(key); it != seen.end() && it->second != label) {
        throw Error(ErrorCode::kDuplicatePair, "conflicting labels for the same pair");
      }
      seen.insert_or_assign(key, label);
      g.set_label(key.first, key.second, label);
    }
  }
  if (j.contains("name") && j["name"].is_string()) g.set_name(j["name"].get<std::string>());
  return g;
}

nlohmann::json graph_to_json(const CoxeterGraph& g) {
  nlohmann::json labels = nlohmann::json::array();
  for (int i = 1; i <= g.rank(); ++i) {
    for (int j = i + 1; j <= g.rank(); ++j) {
      const Label l = g.label(i, j);
      if (l == Label::finite(2)) continue;
      if (l.is_infinite()) {
        labels.push_back({i, j, "inf"});
      } else {
        labels.push_back({i, j, l.value()});
      }
    }
  }
  nlohmann::json out{{"n", g.rank()}, {"labels", labels}};
  if (!g.name().empty()) out["name"] = g.name();
  return out;
}

CoxeterGraph load_graph_text(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kSyntax, std::string("graph JSON: ") + e.what());
    }
    return graph_from_json(j);
  }
  return parse_graph(text);
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

void chain(CoxeterGraph& g, int from, int to) {
  for (int i = from; i < to; ++i) g.set_label(i, i + 1, Label::finite(3));
}

CoxeterGraph spherical(char family, int n, int p = 0) {
  auto out_of_range = [&] {
    return Error(ErrorCode::kRankOutOfRange,
                 std::string("rank ") + std::to_string(n) + " invalid for type " + family);
  };
  switch (family) {
    case 'A': {
      if (n < 1) throw out_of_range();
      CoxeterGraph g(n);
      chain(g, 1, n);
      return g;
    }
    case 'B':
    case 'C': {
      if (n < 2) throw out_of_range();
      CoxeterGraph g(n);
      chain(g, 1, n - 1);
      g.set_label(n - 1, n, Label::finite(4));
      return g;
    }
    case 'D': {
      if (n < 4) throw out_of_range();
      CoxeterGraph g(n);
      chain(g, 1, n - 1);
      g.set_label(n - 2, n, Label::finite(3));
      return g;
    }
    case 'E': {
      if (n < 6 || n > 8) throw out_of_range();
      CoxeterGraph g(n);
      g.set_label(1, 3, Label::finite(3));
      chain(g, 3, n);
      g.set_label(2, 4, Label::finite(3));
      return g;
    }
    case 'F': {
      if (n != 4) throw out_of_range();
      CoxeterGraph g(4);
      g.set_label(1, 2, Label::finite(3));
      g.set_label(2, 3, Label::finite(4));
      g.set_label(3, 4, Label::finite(3));
      return g;
    }
    case 'G': {
      if (n != 2) throw out_of_range();
      CoxeterGraph g(2);
      g.set_label(1, 2, Label::finite(6));
      return g;
    }
    case 'H': {
      if (n != 3 && n != 4) throw out_of_range();
      CoxeterGraph g(n);
      g.set_label(1, 2, Label::finite(5));
      chain(g, 2, n);
      return g;
    }
    case 'I': {
      if (n != 2 || p < 3) {
        throw Error(ErrorCode::kRankOutOfRange, "I2(p) needs p >= 3");
      }
      CoxeterGraph g(2);
      g.set_label(1, 2, Label::finite(static_cast<unsigned>(p)));
      return g;
    }
    default:
      throw Error(ErrorCode::kUnknownName, std::string("unknown type letter ") + family);
  }
}

CoxeterGraph extend(const CoxeterGraph& base, std::initializer_list<std::pair<int, unsigned>> attach) {
  CoxeterGraph g(base.rank() + 1);
  for (int i = 1; i <= base.rank(); ++i) {
    for (int j = i + 1; j <= base.rank(); ++j) g.set_label(i, j, base.label(i, j));
  }
  for (auto [v, m] : attach) g.set_label(v, base.rank() + 1, Label::finite(m));
  return g;
}

CoxeterGraph affine(char family, int n) {
  auto out_of_range = [&] {
    return Error(ErrorCode::kRankOutOfRange,
                 std::string("rank ") + std::to_string(n) + " invalid for type ~" + family);
  };
  switch (family) {
    case 'A': {
      if (n < 1) throw out_of_range();
      if (n == 1) {
        CoxeterGraph g(2);
        g.set_label(1, 2, Label::infinity());
        return g;
      }
      return extend(spherical('A', n), {{1, 3}, {n, 3}});
    }
    case 'B':
      if (n < 3) throw out_of_range();
      return extend(spherical('B', n), {{2, 3}});
    case 'C':
      if (n < 2) throw out_of_range();
      return extend(spherical('C', n), {{1, 4}});
    case 'D':
      if (n < 4) throw out_of_range();
      return extend(spherical('D', n), {{2, 3}});
    case 'E':
      if (n == 6) return extend(spherical('E', 6), {{2, 3}});
      if (n == 7) return extend(spherical('E', 7), {{1, 3}});
      if (n == 8) return extend(spherical('E', 8), {{8, 3}});
      throw out_of_range();
    case 'F':
      if (n != 4) throw out_of_range();
      return extend(spherical('F', 4), {{1, 3}});
    case 'G':
      if (n != 2) throw out_of_range();
      return extend(spherical('G', 2), {{2, 3}});
    default:
      throw Error(ErrorCode::kUnknownName, std::string("unknown affine type letter ") + family);
  }
}

struct ParsedName {
  bool affine = false;
  char family = 0;
  int rank = 0;
  int dihedral = 0;  // p for I2(p)
};

ParsedName parse_name(std::string_view raw) {
  std::string s;
  for (char c : raw) {
    if (c != '_' && !std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  ParsedName out;
  std::size_t i = 0;
  if (i < s.size() && s[i] == '~') {
    out.affine = true;
    ++i;
  }
  if (i >= s.size() || !std::isalpha(static_cast<unsigned char>(s[i]))) {
    throw Error(ErrorCode::kUnknownName, "unknown catalog name '" + std::string(raw) + "'");
  }
  out.family = static_cast<char>(std::toupper(static_cast<unsigned char>(s[i++])));
  if (std::string_view("ABCDEFGHI").find(out.family) == std::string_view::npos) {
    throw Error(ErrorCode::kUnknownName, "unknown catalog name '" + std::string(raw) + "'");
  }
  auto read_int = [&](int& v) {
    const std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) {
      throw Error(ErrorCode::kUnknownName, "missing rank in '" + std::string(raw) + "'");
    }
    std::from_chars(s.data() + start, s.data() + i, v);
  };
  read_int(out.rank);
  if (out.family == 'I') {
    if (out.affine || i >= s.size() || s[i] != '(') {
      throw Error(ErrorCode::kUnknownName, "expected I2(p), got '" + std::string(raw) + "'");
    }
    ++i;
    read_int(out.dihedral);
    if (i >= s.size() || s[i] != ')') {
      throw Error(ErrorCode::kUnknownName, "expected I2(p), got '" + std::string(raw) + "'");
    }
    ++i;
  }
  if (i != s.size()) {
    throw Error(ErrorCode::kUnknownName, "unknown catalog name '" + std::string(raw) + "'");
  }
  return out;
}

std::string canonical_name(const ParsedName& p) {
  std::string s = p.affine ? "~" : "";
  s.push_back(p.family);
  s += std::to_string(p.rank);
  if (p.family == 'I') s += "(" + std::to_string(p.dihedral) + ")";
  return s;
}

}  // namespace

CoxeterGraph catalog_graph(std::string_view name) {
  const ParsedName p = parse_name(name);
  CoxeterGraph g = p.affine ? affine(p.family, p.rank) : spherical(p.family, p.rank, p.dihedral);
  g.set_name(canonical_name(p));
  if (p.affine) {
    ParsedName base = p;
    base.affine = false;
    g.set_affine_base(canonical_name(base));
  }
  return g;
}

// ---------------------------------------------------------------------------
// Classification

namespace {

// Candidate catalog names with exactly k vertices.
std::vector<std::string> spherical_candidates(int k, const CoxeterGraph& comp) {
  std::vector<std::string> out{"A" + std::to_string(k)};
  if (k >= 2) out.push_back("B" + std::to_string(k));
  if (k >= 4) out.push_back("D" + std::to_string(k));
  if (k >= 6 && k <= 8) out.push_back("E" + std::to_string(k));
  if (k == 4) out.push_back("F4");
  if (k == 3 || k == 4) out.push_back("H" + std::to_string(k));
  if (k == 2) {
    const Label l = comp.label(1, 2);
    if (l.is_finite() && l.value() >= 5) out.push_back("I2(" + std::to_string(l.value()) + ")");
  }
  return out;
}

std::vector<std::string> affine_candidates(int k) {
  const int r = k - 1;
  std::vector<std::string> out;
  if (r >= 1) out.push_back("~A" + std::to_string(r));
  if (r >= 3) out.push_back("~B" + std::to_string(r));
  if (r >= 2) out.push_back("~C" + std::to_string(r));
  if (r >= 4) out.push_back("~D" + std::to_string(r));
  if (r >= 6 && r <= 8) out.push_back("~E" + std::to_string(r));
  if (r == 4) out.push_back("~F4");
  if (r == 2) out.push_back("~G2");
  return out;
}

std::vector<Label> signature(const CoxeterGraph& g, int v) {
  std::vector<Label> sig;
  for (int u = 1; u <= g.rank(); ++u) {
    if (u != v && g.label(u, v) != Label::finite(2)) sig.push_back(g.label(u, v));
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

bool isomorphic(const CoxeterGraph& a, const CoxeterGraph& b) {
  const int n = a.rank();
  if (n != b.rank()) return false;
  std::vector<std::vector<Label>> sa(n + 1), sb(n + 1);
  for (int v = 1; v <= n; ++v) {
    sa[v] = signature(a, v);
    sb[v] = signature(b, v);
  }
  {
    auto x = std::vector(sa.begin() + 1, sa.end());
    auto y = std::vector(sb.begin() + 1, sb.end());
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  // BFS order on a so each new vertex (after the first) touches a mapped one.
  std::vector<int> order;
  {
    std::vector<bool> seen(n + 1, false);
    for (int s = 1; s <= n; ++s) {
      if (seen[s]) continue;
      seen[s] = true;
      order.push_back(s);
      for (std::size_t h = order.size() - 1; h < order.size(); ++h) {
        for (int u = 1; u <= n; ++u) {
          if (!seen[u] && a.label(order[h], u) != Label::finite(2)) {
            seen[u] = true;
            order.push_back(u);
          }
        }
      }
    }
  }
  std::vector<int> map(n + 1, 0);
  std::vector<bool> used(n + 1, false);
  std::function<bool(std::size_t)> extend_map = [&](std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    const int v = order[depth];
    for (int w = 1; w <= n; ++w) {
      if (used[w] || sa[v] != sb[w]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        ok = a.label(v, order[d]) == b.label(w, map[order[d]]);
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      if (extend_map(depth + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return extend_map(0);
}

}  // namespace

ClassificationReport classify(const CoxeterGraph& g) {
  ClassificationReport r;
  r.is_small = g.is_small();
  r.is_right_angled = g.is_right_angled();
  r.is_crystallographic = g.is_crystallographic();
  bool all_spherical = true;
  bool all_affine = true;
  for (const auto& verts : g.components()) {
    const CoxeterGraph comp = g.induced(verts);
    const int k = comp.rank();
    std::string type = "unrecognized";
    bool spherical_hit = false;
    for (const auto& name : spherical_candidates(k, comp)) {
      if (isomorphic(comp, catalog_graph(name))) {
        type = name;
        spherical_hit = true;
        break;
      }
    }
    bool affine_hit = false;
    if (!spherical_hit) {
      for (const auto& name : affine_candidates(k)) {
        if (isomorphic(comp, catalog_graph(name))) {
          type = name;
          affine_hit = true;
          break;
        }
      }
    }
    all_spherical = all_spherical && spherical_hit;
    all_affine = all_affine && affine_hit;
    r.components.push_back({verts, type});
  }
  r.is_spherical = all_spherical;
  r.is_affine = all_affine;
  return r;
}

nlohmann::json classification_to_json(const ClassificationReport& r) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : r.components) comps.push_back({{"vertices", c.vertices}, {"type", c.type}});
  return {{"is_small", r.is_small},
          {"is_right_angled", r.is_right_angled},
          {"is_crystallographic", r.is_crystallographic},
          {"is_spherical", r.is_spherical},
          {"is_affine", r.is_affine},
          {"components", comps}};
}

CoxeterGraph disjoint_union(const CoxeterGraph& a, const CoxeterGraph& b) {
  const int na = a.rank();
  CoxeterGraph g(na + b.rank());
  for (int i = 1; i <= na; ++i) {
    for (int j = i + 1; j <= na; ++j) g.set_label(i, j, a.label(i, j));
  }
  for (int i = 1; i <= b.rank(); ++i) {
    for (int j = i + 1; j <= b.rank(); ++j) g.set_label(na + i, na + j, b.label(i, j));
  }
  if (!a.name().empty() && !b.name().empty()) g.set_name(a.name() + "+" + b.name());
  return g;
}

std::string graph_hash(const CoxeterGraph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize_graph(g)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kSyntax: return "SyntaxError";
    case ErrorCode::kInvalidLabel: return "InvalidLabel";
    case ErrorCode::kDuplicatePair: return "DuplicatePair";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kUnknownName: return "UnknownName";
    case ErrorCode::kRankOutOfRange: return "RankOutOfRange";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNonUnitValue: return "NonUnitValue";
    case ErrorCode::kNotUnimodular: return "NotUnimodular";
    case ErrorCode::kBadModulus: return "BadModulus";
    case ErrorCode::kModulusMismatch: return "ModulusMismatch";
    case ErrorCode::kNotSmall: return "NotSmall";
    case ErrorCode::kBadIndex: return "BadIndex";
    case ErrorCode::kInverseInCoxeterMode: return "InverseInCoxeterMode";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kNotSpherical: return "NotSpherical";
    case ErrorCode::kNotConnected: return "NotConnected";
    case ErrorCode::kNotADE: return "NotADE";
    case ErrorCode::kTableInconsistent: return "TableInconsistent";
    case ErrorCode::kNotAffineADE: return "NotAffineADE";
    case ErrorCode::kHypothesisViolated: return "HypothesisViolated";
    case ErrorCode::kBadLevel: return "BadLevel";
    case ErrorCode::kUnknownType: return "UnknownType";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kIo: return "IoError";
  }
  return "UnknownError";
}

}  // namespace artcong
