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

// Coxeter graphs: construction, the text DSL and JSON mirror, the named
// catalog of spherical and affine types, and classification.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace artcong {

/// An edge label m(i,j). Infinity is a distinct state, never an integer.
class Label {
 public:
  static constexpr Label finite(unsigned value) { return Label(value, false); }
  static constexpr Label infinity() { return Label(0, true); }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }
  /// The finite value; 0 for infinity.
  constexpr unsigned value() const { return value_; }

  std::string to_string() const;

  friend constexpr bool operator==(Label, Label) = default;
  /// Orders finite labels numerically with infinity last.
  friend constexpr std::strong_ordering operator<=>(Label a, Label b) {
    if (a.infinite_ != b.infinite_) return a.infinite_ ? std::strong_ordering::greater
                                                       : std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }

 private:
  constexpr Label(unsigned value, bool infinite) : value_(value), infinite_(infinite) {}
  unsigned value_;
  bool infinite_;
};

/// A Coxeter graph on vertices 1..n. Labels are stored once per unordered
/// pair; absent edges carry label 2.
///
/// Graphs built from the affine catalog remember which spherical type they
/// extend. In that case the extra vertex s0 sits at index n (the last
/// vertex) and is rendered as "0" in words and reports.
class CoxeterGraph {
 public:
  explicit CoxeterGraph(int n);

  int rank() const { return n_; }

  /// Label of the pair (i, j), 1-based. The diagonal reports finite(1).
  Label label(int i, int j) const;
  void set_label(int i, int j, Label label);

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Spherical type extended by this affine catalog graph ("A2", "E7", ...).
  const std::optional<std::string>& affine_base() const { return affine_base_; }
  void set_affine_base(std::optional<std::string> base) { affine_base_ = std::move(base); }
  /// Index of s0 when the graph carries an affine tag.
  std::optional<int> affine_vertex() const;

  bool is_small() const;
  bool is_right_angled() const;
  bool is_crystallographic() const;

  /// Number of neighbours (pairs with label != 2).
  int degree(int v) const;
  /// Connected components as sorted 1-based vertex lists, ordered by their
  /// smallest vertex.
  std::vector<std::vector<int>> components() const;
  /// Subgraph on the given vertices, renumbered 1..k in the given order.
  CoxeterGraph induced(const std::vector<int>& vertices) const;

  /// Equality compares rank and labels only.
  friend bool operator==(const CoxeterGraph& a, const CoxeterGraph& b) {
    return a.n_ == b.n_ && a.labels_ == b.labels_;
  }

 private:
  std::size_t slot(int i, int j) const;

  int n_;
  std::vector<Label> labels_;
  std::string name_;
  std::optional<std::string> affine_base_;
};

struct ComponentType {
  std::vector<int> vertices;
  std::string type;  // catalog name, or "unrecognized"
  friend bool operator==(const ComponentType&, const ComponentType&) = default;
};

struct ClassificationReport {
  bool is_small = false;
  bool is_right_angled = false;
  bool is_crystallographic = false;
  bool is_spherical = false;
  bool is_affine = false;
  std::vector<ComponentType> components;
};

/// Parses the graph DSL: `coxeter n=<int>;` followed by `m <i> <j> = <label>;`
/// statements (label an integer >= 2 or `inf`), `#` starting a comment.
CoxeterGraph parse_graph(std::string_view text);
/// Inverse of parse_graph; emits only labels different from 2.
std::string serialize_graph(const CoxeterGraph& g);

CoxeterGraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const CoxeterGraph& g);

/// Accepts either the DSL or the JSON mirror.
CoxeterGraph load_graph_text(std::string_view text);

/// Named catalog: A_n, B_n, D_n, E6-E8, F4, H3, H4, I2(p) and the affine
/// types ~A_n, ~B_n, ~C_n, ~D_n, ~E6-~E8, ~F4, ~G2. Numbering is Bourbaki's.
CoxeterGraph catalog_graph(std::string_view name);

ClassificationReport classify(const CoxeterGraph& g);
nlohmann::json classification_to_json(const ClassificationReport& r);

CoxeterGraph disjoint_union(const CoxeterGraph& a, const CoxeterGraph& b);

/// Stable 64-bit hash of the canonical DSL form, as 16 hex digits.
std::string graph_hash(const CoxeterGraph& g);

}  // namespace artcong
