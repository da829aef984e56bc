#ifndef SPANOVERLAP_CORE_HPP
#define SPANOVERLAP_CORE_HPP

#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace spanoverlap {

// A word sequence w^{i,j}. Indices are 1-based and inclusive everywhere
// in this codebase; token vectors stay 0-based, so w^{i,j} covers
// tokens[i-1 .. j-1].
struct Span {
  int i = 0;
  int j = 0;

  Span() = default;
  Span(int i_, int j_) : i(i_), j(j_) {}

  int width() const { return j - i + 1; }
  bool valid_for(int n) const { return 1 <= i && i <= j && j <= n; }
  bool contains(const Span& other) const { return i <= other.i && other.j <= j; }

  auto operator<=>(const Span&) const = default;
};

// true iff the spans intersect and neither contains the other, i.e. they
// cannot co-exist in one tree.
bool is_partial_overlap(const Span& a, const Span& b);

// All n(n+1)/2 spans ordered by i, then j. Throws on n < 1.
std::vector<Span> enumerate_spans(int n);

// Half-open range into a normalized token vector (0-based).
struct TokenRange {
  int begin = 0;
  int end = 0;
};

// A target sentence with its raw (treebank) tokens and the normalized
// view used for matching. The alignment maps each raw token to its
// range of normalized tokens; contraction expansion is the only step
// that makes a range wider than one token.
struct Sentence {
  std::string id;
  std::vector<std::string> raw_tokens;
  std::vector<std::string> norm_tokens;
  std::vector<TokenRange> alignment;

  int size() const { return static_cast<int>(raw_tokens.size()); }

  // Normalized token range covered by a raw-index span.
  TokenRange norm_range(const Span& span) const;
  std::vector<std::string> norm_slice(const Span& span) const;
  std::string raw_text() const;
};

// Constituency tree node. Leaves carry a token and its 1-based position;
// internal nodes carry >= 1 children. Gold trees may be n-ary, predicted
// trees are binary with empty labels.
class LabeledTree {
 public:
  LabeledTree() = default;

  static LabeledTree leaf(std::string label, std::string token, int position);
  static LabeledTree node(std::string label, std::vector<LabeledTree> children);

  bool is_leaf() const { return children_.empty(); }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }
  const std::string& token() const { return token_; }
  void set_token(std::string token) { token_ = std::move(token); }
  int position() const { return position_; }
  void set_position(int position) { position_ = position; }
  const std::vector<LabeledTree>& children() const { return children_; }
  std::vector<LabeledTree>& children() { return children_; }

  Span span() const;  // computed from leaf positions
  int leaf_count() const;
  std::vector<std::string> leaf_tokens() const;

  // Renumbers leaf positions left to right starting at 1.
  void renumber_leaves();

  // Checks the structural invariants (leaf xor children, positions 1..n
  // contiguous, parent spans cover children). Throws on violation.
  void validate() const;

  bool operator==(const LabeledTree& other) const;

 private:
  std::string label_;
  std::vector<LabeledTree> children_;
  std::string token_;
  int position_ = 0;
};

struct SpanLabel {
  Span span;
  std::string label;
  bool operator==(const SpanLabel&) const = default;
};

// One entry per tree node, including leaves and the root, in pre-order.
// Unary chains therefore repeat a span with different labels; callers
// that need set semantics use span_set().
std::vector<SpanLabel> tree_to_spans(const LabeledTree& tree);

std::set<Span> span_set(const LabeledTree& tree);

// Score value for every span of a length-n sentence, triangular storage.
class ScoreChart {
 public:
  ScoreChart() = default;
  explicit ScoreChart(int n, double init = 0.0);

  int n() const { return n_; }
  double at(const Span& span) const { return values_[index(span)]; }
  void set(const Span& span, double value) { values_[index(span)] = value; }
  std::size_t entry_count() const { return values_.size(); }

 private:
  std::size_t index(const Span& span) const;
  int n_ = 0;
  std::vector<double> values_;
};

}  // namespace spanoverlap

#endif
