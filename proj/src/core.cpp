#include "spanoverlap/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace spanoverlap {

bool is_partial_overlap(const Span& a, const Span& b) {
  bool intersect = a.i <= b.j && b.i <= a.j;
  return intersect && !a.contains(b) && !b.contains(a);
}

std::vector<Span> enumerate_spans(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_spans: n must be >= 1");
  std::vector<Span> out;
  out.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) out.emplace_back(i, j);
  return out;
}

TokenRange Sentence::norm_range(const Span& span) const {
  if (!span.valid_for(size())) throw std::out_of_range("norm_range: span outside sentence");
  return {alignment[span.i - 1].begin, alignment[span.j - 1].end};
}

std::vector<std::string> Sentence::norm_slice(const Span& span) const {
  TokenRange r = norm_range(span);
  return {norm_tokens.begin() + r.begin, norm_tokens.begin() + r.end};
}

std::string Sentence::raw_text() const {
  std::string out;
  for (std::size_t k = 0; k < raw_tokens.size(); ++k) {
    if (k) out.push_back(' ');
    out.append(raw_tokens[k]);
  }
  return out;
}

LabeledTree LabeledTree::leaf(std::string label, std::string token, int position) {
  LabeledTree t;
  t.label_ = std::move(label);
  t.token_ = std::move(token);
  t.position_ = position;
  return t;
}

LabeledTree LabeledTree::node(std::string label, std::vector<LabeledTree> children) {
  if (children.empty()) throw std::invalid_argument("LabeledTree::node: no children");
  LabeledTree t;
  t.label_ = std::move(label);
  t.children_ = std::move(children);
  return t;
}

Span LabeledTree::span() const {
  if (is_leaf()) return {position_, position_};
  Span first = children_.front().span();
  Span last = children_.back().span();
  return {first.i, last.j};
}

int LabeledTree::leaf_count() const {
  if (is_leaf()) return 1;
  int count = 0;
  for (const auto& c : children_) count += c.leaf_count();
  return count;
}

std::vector<std::string> LabeledTree::leaf_tokens() const {
  std::vector<std::string> out;
  auto walk = [&](const LabeledTree& t, auto&& self) -> void {
    if (t.is_leaf()) {
      out.push_back(t.token_);
      return;
    }
    for (const auto& c : t.children_) self(c, self);
  };
  walk(*this, walk);
  return out;
}

void LabeledTree::renumber_leaves() {
  int next = 1;
  auto walk = [&](LabeledTree& t, auto&& self) -> void {
    if (t.is_leaf()) {
      t.position_ = next++;
      return;
    }
    for (auto& c : t.children_) self(c, self);
  };
  walk(*this, walk);
}

void LabeledTree::validate() const {
  int expected = 1;
  auto walk = [&](const LabeledTree& t, auto&& self) -> void {
    if (t.is_leaf()) {
      if (t.position_ != expected)
        throw std::runtime_error("LabeledTree: leaf positions not contiguous from 1");
      ++expected;
      return;
    }
    for (const auto& c : t.children_) self(c, self);
    Span s = t.span();
    if (s.i != t.children_.front().span().i || s.j != t.children_.back().span().j)
      throw std::runtime_error("LabeledTree: node span does not cover children");
  };
  walk(*this, walk);
}

bool LabeledTree::operator==(const LabeledTree& other) const {
  return label_ == other.label_ && token_ == other.token_ &&
         position_ == other.position_ && children_ == other.children_;
}

std::vector<SpanLabel> tree_to_spans(const LabeledTree& tree) {
  std::vector<SpanLabel> out;
  auto walk = [&](const LabeledTree& t, auto&& self) -> void {
    out.push_back({t.span(), t.label()});
    for (const auto& c : t.children()) self(c, self);
  };
  walk(tree, walk);
  return out;
}

std::set<Span> span_set(const LabeledTree& tree) {
  std::set<Span> out;
  for (const auto& sl : tree_to_spans(tree)) out.insert(sl.span);
  return out;
}

ScoreChart::ScoreChart(int n, double init) : n_(n) {
  if (n < 1) throw std::invalid_argument("ScoreChart: n must be >= 1");
  values_.assign(static_cast<std::size_t>(n) * (n + 1) / 2, init);
}

std::size_t ScoreChart::index(const Span& span) const {
  if (!span.valid_for(n_)) throw std::out_of_range("ScoreChart: span outside chart");
  std::size_t i = static_cast<std::size_t>(span.i);
  std::size_t row_start = (i - 1) * static_cast<std::size_t>(n_) - (i - 1) * (i - 2) / 2;
  return row_start + static_cast<std::size_t>(span.j - span.i);
}

}  // namespace spanoverlap
