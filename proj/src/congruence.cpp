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

#include "artcong/congruence.hpp"

#include <algorithm>

#include "artcong/error.hpp"
#include "artcong/representation.hpp"

namespace artcong {

const char* status_name(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kProbe: return "probe";
  }
  return "fail";
}

nlohmann::json Report::to_json() const {
  return {{"claim", claim}, {"paper_ref", paper_ref}, {"status", status_name(status)}, {"data", data}};
}

namespace {

RepresentationSpec spec_for(const CongruenceQuery& q) {
  return q.kind == GroupKind::kArtin ? RepresentationSpec::sigma_tilde(q.graph)
                                     : RepresentationSpec::tits(q.graph);
}

const char* kind_name(GroupKind k) { return k == GroupKind::kArtin ? "artin" : "coxeter"; }

Word generator_power(int vertex, std::uint64_t m) {
  Word w;
  w.mode = WordMode::kArtin;
  w.letters.assign(m, vertex);
  return w;
}

Word conjugate(const Word& by, const Word& w) { return concat(concat(by, w), inverse(by)); }

// Random word, or with probability 1/2 a conjugate of a_i^m (a known level-m
// element).
Word sample_word(std::mt19937_64& rng, int n, std::size_t max_length, std::uint64_t m, int offset) {
  if (rng() % 2 == 0) return random_artin_word(rng, n, max_length, offset);
  const int v = offset + 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
  const Word u = random_artin_word(rng, n, max_length / 2, offset);
  return conjugate(u, generator_power(v, m));
}

Word shift(const Word& w, int offset) {
  Word out = w;
  for (int& l : out.letters) l = l < 0 ? l - offset : l + offset;
  return out;
}

void require_small(const CoxeterGraph& g) {
  if (!g.is_small()) throw Error(ErrorCode::kNotSmall, "congruence queries need a small graph");
}

std::vector<std::uint64_t> divisors_of(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 2; k <= m; ++k) {
    if (m % k == 0) out.push_back(k);
  }
  return out;
}

}  // namespace

Word random_artin_word(std::mt19937_64& rng, int n, std::size_t max_length, int offset) {
  Word w;
  w.mode = WordMode::kArtin;
  const std::size_t len = rng() % (max_length + 1);
  for (std::size_t i = 0; i < len; ++i) {
    const int v = offset + 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    w.letters.push_back(rng() % 2 == 0 ? v : -v);
  }
  return w;
}

bool member(const CongruenceQuery& q, const Word& w) {
  require_small(q.graph);
  return eval_word_mod(spec_for(q), w, q.level).is_identity();
}

nlohmann::json SubgroupImage::to_json() const {
  return {{"graph", serialize_graph(query.graph)},
          {"kind", kind_name(query.kind)},
          {"level", query.level},
          {"order", order},
          {"abelian", abelian}};
}

SubgroupImage image_order(const CongruenceQuery& q, std::size_t cap, int threads) {
  require_small(q.graph);
  if (q.level < 2) throw Error(ErrorCode::kBadModulus, "level must be >= 2");
  const auto gens = q.kind == GroupKind::kArtin ? sigma_tilde_generators(q.graph, false)
                                                : tits_generators(q.graph);
  SubgroupImage img;
  img.query = q;
  img.closure = close_under(q.graph.rank(), gens, {.modulus = q.level, .cap = cap, .threads = threads});
  img.order = img.closure.size();
  const RepresentationSpec spec = spec_for(q);
  std::vector<ResidueMatrix> images;
  for (int v = 1; v <= q.graph.rank(); ++v) {
    Word w;
    w.letters = {v};
    images.push_back(eval_word_mod(spec, w, q.level));
  }
  img.abelian = true;
  for (std::size_t i = 0; i < images.size() && img.abelian; ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      if (!(images[i] * images[j] == images[j] * images[i])) {
        img.abelian = false;
        break;
      }
    }
  }
  return img;
}

ImageSummary image_summary(const CongruenceQuery& q, std::size_t cap, int threads, ImageStore* store) {
  if (store) {
    if (auto hit = store->get(q, cap)) {
      hit->cached = true;
      return *hit;
    }
  }
  const SubgroupImage img = image_order(q, cap, threads);
  const ImageSummary s{img.order, img.abelian, false};
  if (store) store->put(q, cap, s);
  return s;
}

Report verify_normal_closure(const CoxeterGraph& g, std::uint64_t m, const SamplingOptions& opt) {
  require_small(g);
  if (m < 2) throw Error(ErrorCode::kBadLevel, "level must be >= 2");
  const bool raag = g.is_right_angled();
  Report r;
  r.claim = "conjugates of a_i^m lie in A[m]" + std::string(raag ? " and in A[2m]" : "");
  r.paper_ref = "normal closure of generator powers inside the principal congruence subgroup";
  std::mt19937_64 rng(opt.seed);
  const CongruenceQuery q{g, GroupKind::kArtin, m};
  const CongruenceQuery q2{g, GroupKind::kArtin, 2 * m};
  std::size_t checked = 0;
  nlohmann::json bad = nlohmann::json::array();
  for (std::size_t s = 0; s < opt.samples; ++s) {
    const Word u = random_artin_word(rng, g.rank(), opt.max_length);
    for (int v = 1; v <= g.rank(); ++v) {
      const Word w = conjugate(u, generator_power(v, m));
      ++checked;
      const bool ok = member(q, w) && (!raag || member(q2, w));
      if (!ok && bad.size() < 5) bad.push_back(format_word(w, g));
    }
  }
  r.status = bad.empty() ? Status::kPass : Status::kFail;
  r.data = {{"graph", serialize_graph(g)}, {"level", m},          {"right_angled", raag},
            {"samples", opt.samples},      {"checked", checked},  {"counterexamples", bad},
            {"seed", opt.seed},            {"method", "sampling"}};
  return r;
}

Report verify_level2_spherical(const CoxeterGraph& g, std::size_t cap, int threads,
    ImageStore* store) {
  const ClassificationReport cls = classify(g);
  if (!cls.is_spherical) throw Error(ErrorCode::kNotSpherical, "graph is not spherical");
  if (!g.is_small()) {
    throw Error(ErrorCode::kNotSmall, "unsupported: the level-2 check covers small spherical graphs");
  }
  Report r;
  r.claim = "|Im sigma_2| = |W| / |Z(W)| and Z(W) lifts into A[2]";
  r.paper_ref = "level-2 quotient theorem for spherical graphs";
  const GroupEnumeration e = enumerate_group(g, cap, threads);
  const ImageSummary img = image_summary({g, GroupKind::kArtin, 2}, cap, threads, store);
  const std::size_t center = e.center_words.size();
  const RepresentationSpec st = RepresentationSpec::sigma_tilde(g);
  bool center_dies = true;
  for (const Word& z : e.center_words) {
    if (!eval_word_mod(st, as_artin(z), 2).is_identity()) center_dies = false;
  }
  const bool orders = e.order % center == 0 && img.order == e.order / center;
  r.status = orders && center_dies ? Status::kPass : Status::kFail;
  nlohmann::json words = nlohmann::json::array();
  for (const Word& z : e.center_words) words.push_back(format_word(z, g));
  r.data = {{"graph", serialize_graph(g)},
            {"coxeter_order", e.order},
            {"center_order", center},
            {"expected", e.order / center},
            {"image_order", img.order},
            {"center_words", words},
            {"center_in_level2", center_dies}};
  return r;
}

Report verify_level4_raag(const CoxeterGraph& g, std::size_t cap, int threads,
    ImageStore* store) {
  if (!g.is_right_angled()) {
    throw Error(ErrorCode::kHypothesisViolated, "graph is not right-angled");
  }
  for (int v = 1; v <= g.rank(); ++v) {
    if (g.degree(v) == 0) {
      throw Error(ErrorCode::kHypothesisViolated,
                  "vertex " + std::to_string(v) + " has degree zero");
    }
  }
  Report r;
  r.claim = "|Im sigma_4| = 2^n, abelian, sigma_4(a_i)^2 = I, and A[2] = A";
  r.paper_ref = "level-4 quotient theorem for right-angled graphs";
  const ImageSummary img4 = image_summary({g, GroupKind::kArtin, 4}, cap, threads, store);
  const ImageSummary img2 = image_summary({g, GroupKind::kArtin, 2}, cap, threads, store);
  bool squares = true;
  const CongruenceQuery q4{g, GroupKind::kArtin, 4};
  for (int v = 1; v <= g.rank(); ++v) squares = squares && member(q4, generator_power(v, 2));
  const std::size_t expected = std::size_t{1} << g.rank();
  const bool ok = img4.order == expected && img4.abelian && squares && img2.order == 1;
  r.status = ok ? Status::kPass : Status::kFail;
  r.data = {{"graph", serialize_graph(g)},
            {"image_order_4", img4.order},
            {"expected", expected},
            {"abelian", img4.abelian},
            {"squares_in_level4", squares},
            {"image_order_2", img2.order}};
  return r;
}

nlohmann::json CommutatorResult::to_json() const {
  return {{"direct", artcong::to_json(direct)}, {"formula", artcong::to_json(formula)}, {"match", match}};
}

CommutatorResult commutator_matrix(const CoxeterGraph& g, int k, int l) {
  require_small(g);
  const int n = g.rank();
  if (k < 1 || l < 1 || k > n || l > n || k == l) {
    throw Error(ErrorCode::kBadIndex, "commutator needs two distinct vertices in 1.." + std::to_string(n));
  }
  CommutatorResult out;
  Word w;
  w.mode = WordMode::kArtin;
  w.letters = {k, l, -k, -l};
  out.direct = eval_word_exact(RepresentationSpec::sigma_tilde(g), w);

  const int kk = k - 1;
  const int ll = l - 1;
  const auto row_k = sigma_tilde_row(g, kk, false);
  const auto row_l = sigma_tilde_row(g, ll, false);
  const mpz_class a = row_k[ll];
  IntegerMatrix d = IntegerMatrix::identity(n);
  d(kk, kk) = a * a * a * a - a * a + 1;
  d(kk, ll) = a * a * a;
  d(ll, kk) = a * a * a;
  d(ll, ll) = a * a + 1;
  for (int j = 0; j < n; ++j) {
    if (j == kk || j == ll) continue;
    const mpz_class gamma = row_k[j] - row_l[j] * a;
    d(kk, j) = gamma * a * a + a * row_l[j];
    d(ll, j) = gamma * a;
  }
  out.formula = d;
  out.match = out.direct == out.formula;
  return out;
}

Report verify_direct_sum(const CoxeterGraph& g1, const CoxeterGraph& g2, std::uint64_t m,
                         const SamplingOptions& opt) {
  require_small(g1);
  require_small(g2);
  const CoxeterGraph u = disjoint_union(g1, g2);
  Report r;
  r.claim = "(G x H)[m] = G[m] x H[m]";
  r.paper_ref = "direct-sum identity for principal congruence subgroups";
  std::mt19937_64 rng(opt.seed);
  std::size_t in_both = 0;
  nlohmann::json bad = nlohmann::json::array();
  for (std::size_t s = 0; s < opt.samples; ++s) {
    const Word w1 = sample_word(rng, g1.rank(), opt.max_length, m, 0);
    const Word w2 = sample_word(rng, g2.rank(), opt.max_length, m, 0);
    const bool m1 = member({g1, GroupKind::kArtin, m}, w1);
    const bool m2 = member({g2, GroupKind::kArtin, m}, w2);
    const bool mu = member({u, GroupKind::kArtin, m}, concat(w1, shift(w2, g1.rank())));
    if (m1 && m2) ++in_both;
    if (mu != (m1 && m2) && bad.size() < 5) {
      bad.push_back({format_word(w1, g1), format_word(w2, g2)});
    }
  }
  r.status = bad.empty() ? Status::kPass : Status::kFail;
  r.data = {{"graphs", {serialize_graph(g1), serialize_graph(g2)}},
            {"level", m},
            {"samples", opt.samples},
            {"members_of_both", in_both},
            {"counterexamples", bad},
            {"seed", opt.seed},
            {"method", "sampling"}};
  return r;
}

Report divisor_containment(const CoxeterGraph& g, const Word& w, std::uint64_t m) {
  require_small(g);
  if (m < 2) throw Error(ErrorCode::kBadLevel, "level must be >= 2");
  Report r;
  r.claim = "G[m] <= G[k] for every divisor k of m";
  r.paper_ref = "divisor containment of principal congruence subgroups";
  const Word aw = as_artin(w);
  const bool top = member({g, GroupKind::kArtin, m}, aw);
  nlohmann::json levels = nlohmann::json::object();
  bool ok = true;
  for (std::uint64_t k : divisors_of(m)) {
    const bool in = member({g, GroupKind::kArtin, k}, aw);
    levels[std::to_string(k)] = in;
    if (top && !in) ok = false;
  }
  r.status = ok ? Status::kPass : Status::kFail;
  r.data = {{"graph", serialize_graph(g)}, {"word", format_word(aw, g)}, {"level", m},
            {"member", top},               {"levels", levels}};
  return r;
}

Report sample_divisor_containment(const CoxeterGraph& g, std::uint64_t m, const SamplingOptions& opt) {
  require_small(g);
  Report r;
  r.claim = "G[m] <= G[k] for every divisor k of m";
  r.paper_ref = "divisor containment of principal congruence subgroups";
  std::mt19937_64 rng(opt.seed);
  std::size_t members = 0;
  nlohmann::json bad = nlohmann::json::array();
  for (std::size_t s = 0; s < opt.samples; ++s) {
    Word w = sample_word(rng, g.rank(), opt.max_length, m, 0);
    if (rng() % 2 == 0) w = concat(w, sample_word(rng, g.rank(), opt.max_length, m, 0));
    const Report one = divisor_containment(g, w, m);
    if (one.data["member"].get<bool>()) ++members;
    if (one.failed() && bad.size() < 5) bad.push_back(format_word(w, g));
  }
  r.status = bad.empty() ? Status::kPass : Status::kFail;
  r.data = {{"graph", serialize_graph(g)}, {"level", m},  {"samples", opt.samples},
            {"members", members},          {"seed", opt.seed}, {"counterexamples", bad},
            {"method", "sampling"}};
  return r;
}

Report oddk_quotient_check(const CoxeterGraph& g, std::uint64_t k, std::size_t cap, int threads,
                           ImageStore* store) {
  if (k < 3 || k % 2 == 0) throw Error(ErrorCode::kBadLevel, "k must be odd and >= 3");
  require_small(g);
  Report r;
  r.claim = "A[k] / A[2k] is isomorphic to A / A[2] for odd k (index check)";
  r.paper_ref = "odd-level quotient proposition";
  const std::size_t o2k = image_summary({g, GroupKind::kArtin, 2 * k}, cap, threads, store).order;
  const std::size_t ok = image_summary({g, GroupKind::kArtin, k}, cap, threads, store).order;
  const std::size_t o2 = image_summary({g, GroupKind::kArtin, 2}, cap, threads, store).order;
  const bool pass = o2k % ok == 0 && o2k / ok == o2;
  r.status = pass ? Status::kPass : Status::kFail;
  r.data = {{"graph", serialize_graph(g)}, {"k", k},        {"order_2k", o2k},
            {"order_k", ok},               {"order_2", o2}, {"ratio", ok == 0 ? 0 : o2k / ok}};
  return r;
}

Report level2_conjecture_probe(const CoxeterGraph& g, std::size_t cap, int threads,
    ImageStore* store) {
  require_small(g);
  Report r;
  r.claim = "A[2] = ker(A -> W / W[2]) (conjecture; order comparison only)";
  r.paper_ref = "level-2 conjecture for non-spherical graphs";
  r.status = Status::kProbe;
  const std::size_t artin = image_summary({g, GroupKind::kArtin, 2}, cap, threads, store).order;
  const std::size_t coxeter = image_summary({g, GroupKind::kCoxeter, 2}, cap, threads, store).order;
  r.data = {{"graph", serialize_graph(g)},
            {"artin_image_order", artin},
            {"coxeter_image_order", coxeter},
            {"equal", artin == coxeter}};
  return r;
}

Report center_image_check(const CoxeterGraph& g) {
  const GarsideDelta d = garside_delta(g);
  const Word z = d.center_generator();
  const int n = g.rank();
  Report r;
  r.claim = std::string("sigma-tilde(") + (d.squared ? "Delta^2" : "Delta") +
            ") is +-I, and I when the vertex count is odd";
  r.paper_ref = "center of a spherical Artin group under the s=1, t=-1 specialization";
  int sign = 0;
  double deviation = 0.0;
  nlohmann::json matrix;
  if (g.is_small()) {
    const IntegerMatrix m = eval_word_exact(RepresentationSpec::sigma_tilde(g), z);
    if (m == IntegerMatrix::identity(n)) sign = 1;
    if (m == -IntegerMatrix::identity(n)) sign = -1;
    matrix = to_json(m);
  } else {
    const auto spec = RepresentationSpec::sigma_tilde(g).numeric(1e-9);
    const NumericMatrix m = std::get<NumericMatrix>(eval_word(spec, z));
    const NumericMatrix id = NumericMatrix::identity(n, 1e-9);
    const double dp = m.distance(id);
    const double dm = m.distance(-id);
    deviation = std::min(dp, dm);
    if (dp <= 1e-9) sign = 1;
    if (dm <= 1e-9) sign = -1;
    matrix = to_json(m);
  }
  const bool pass = sign != 0 && (n % 2 == 0 || sign == 1);
  r.status = pass ? Status::kPass : Status::kFail;
  r.data = {{"graph", serialize_graph(g)},
            {"generator", d.squared ? "Delta^2" : "Delta"},
            {"word_length", z.length()},
            {"sign", sign},
            {"arithmetic", g.is_small() ? "exact" : "numeric"},
            {"deviation", deviation},
            {"matrix", matrix}};
  return r;
}

}  // namespace artcong
