#ifndef SPANOVERLAP_TREEBANK_HPP
#define SPANOVERLAP_TREEBANK_HPP

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "spanoverlap/core.hpp"

namespace spanoverlap {

class TreeParseError : public std::runtime_error {
 public:
  TreeParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " (offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

struct TreeParseOptions {
  // Recovery mode salvages the longest valid prefix of noisy input:
  // at end-of-input, open nodes are closed if they already hold a
  // complete child and dropped otherwise, and bare tokens mixed with
  // subtrees become unlabeled leaves instead of errors.
  bool recover = false;
  // Map -LRB-/-RRB- leaf tokens to literal parentheses in memory.
  bool decode_escapes = true;
};

// Parses one bracketed tree, e.g. "(S (NP (DT The) (NN value)) ...)".
// Leaf positions are numbered 1..n in text order. Empty labels are
// allowed (PTB files wrap trees as "( (S ...) )").
LabeledTree parse_bracketed(const std::string& text, const TreeParseOptions& options = {});

std::string serialize_bracketed(const LabeledTree& tree, bool encode_escapes = true);

// Cuts functional-tag suffixes at the first '-' or '=' (NP-SBJ -> NP).
// Labels that start with '-' (-NONE-, -LRB-) are kept whole.
std::string strip_functional_tag(const std::string& label);
void strip_functional_tags(LabeledTree& tree);

struct PunctuationSpec {
  // Primary signal: preterminal tag membership. Defaults cover the PTB
  // punctuation tags; -NONE- (traces) is dropped the same way.
  std::set<std::string> tags = {".", ",", ":", "``", "''", "-LRB-", "-RRB-",
                                "#", "$", "-NONE-", "PU", "PONCT"};
  // Fallback for corpora without reliable tags: a token consisting only
  // of punctuation characters is dropped.
  bool match_tokens = true;

  bool is_punctuation(const std::string& tag, const std::string& token) const;
};

struct StripResult {
  LabeledTree tree;
  std::vector<int> position_map;  // old 1-based position -> new position, 0 = removed
};

// Removes punctuation leaves, deletes emptied internal nodes and
// renumbers the remaining leaves. Returns nullopt when nothing is left.
std::optional<StripResult> strip_punctuation(const LabeledTree& tree, const PunctuationSpec& spec = {});

struct LabelMap {
  std::string language;
  std::map<std::string, std::string> merges;

  std::string apply(const std::string& label) const;
  static LabelMap identity();
  // Built-in merges for SPMRL annotation schemes that do not align with
  // the PTB's (French, Polish, Basque). Other codes get the identity map.
  static LabelMap for_language(const std::string& language);
};

LabeledTree normalize_labels(const LabeledTree& tree, const LabelMap& map);

struct Corpus {
  std::vector<std::pair<Sentence, LabeledTree>> sentences;
  std::string language;
  std::string split;
};

struct CorpusLoadOptions {
  bool multiline = false;       // trees separated by blank lines instead of one per line
  bool lenient = false;         // skip malformed trees with a warning instead of failing
  bool strip_function_tags = true;
  std::vector<std::string>* warnings = nullptr;
};

// Reads a bracketed treebank file. Sentence ids are the 0-based tree
// index; raw tokens come from the tree leaves.
Corpus load_corpus(const std::string& path, const CorpusLoadOptions& options = {});

}  // namespace spanoverlap

#endif
