#ifndef SPANOVERLAP_NORMALIZE_HPP
#define SPANOVERLAP_NORMALIZE_HPP

#include <memory>
#include <string>
#include <vector>

#include "spanoverlap/core.hpp"
#include "spanoverlap/stemmer.hpp"

namespace spanoverlap {

// Language rules for splitting contracted words the way the treebanks
// tokenize them ("didn't" -> "did n't", "l'homme" -> "l' homme").
class ContractionTable {
 public:
  // Built-in rules exist for English and French; other languages get an
  // empty table that passes everything through.
  static std::shared_ptr<const ContractionTable> for_language(const std::string& language);

  // Extra entries from a UTF-8 file, one per line: contraction<TAB>part1 part2.
  // Lines starting with '#' are comments.
  void load_file(const std::string& path);
  void add_entry(const std::string& contraction, const std::vector<std::string>& parts);

  // Splits one token; returns {token} when no rule applies. Case is
  // preserved by slicing the original token wherever possible.
  std::vector<std::string> expand(const std::string& token) const;

 private:
  std::map<std::string, std::vector<std::string>> entries_;  // lowercased key
  std::vector<std::string> suffixes_;   // English-style clitic suffixes
  std::vector<std::string> prefixes_;   // French-style elided prefixes (include the apostrophe)
  std::vector<std::string> keep_whole_; // exceptions like aujourd'hui

  friend class NormalizerBuilder;
  struct Builder;
};

enum class TokenizerMode { Whitespace, Character };

struct NormalizerConfig {
  std::string language = "en";
  std::string stemmer = "snowball_english";
  bool expand_contractions = true;
  bool case_fold = true;
  TokenizerMode tokenizer_mode = TokenizerMode::Whitespace;
  std::string contraction_file;  // optional extra entries

  // Per-language defaults: stemmer per the experiment setup, contraction
  // expansion only for English and French, character tokenization for
  // Chinese (LLM output is unsegmented).
  static NormalizerConfig for_language(const std::string& language);

  void validate() const;  // character mode forbids contraction expansion
};

// Binds a config to its stemmer and contraction table. Immutable and
// safe to share across threads.
class Normalizer {
 public:
  explicit Normalizer(NormalizerConfig config);

  const NormalizerConfig& config() const { return config_; }

  std::string stem_token(const std::string& token) const;
  std::vector<std::string> expand(const std::vector<std::string>& tokens) const;

  // Applies, in order: contraction expansion, case folding, stemming.
  // The alignment maps each raw index to its normalized token range.
  std::pair<std::vector<std::string>, std::vector<TokenRange>> normalize(
      const std::vector<std::string>& raw_tokens) const;

  // Tokenizes free text (whitespace or character mode) and normalizes.
  std::vector<std::string> normalize_text(const std::string& text) const;

  // Fills norm_tokens and alignment on a sentence in place.
  void apply(Sentence& sentence) const;

 private:
  NormalizerConfig config_;
  std::shared_ptr<const Stemmer> stemmer_;
  std::shared_ptr<const ContractionTable> contractions_;
};

// Spec-level convenience wrappers.
std::string stem(const std::string& token, const NormalizerConfig& config);
std::vector<std::string> expand_contractions(const std::vector<std::string>& tokens,
                                             const std::string& language);
std::pair<std::vector<std::string>, std::vector<TokenRange>> normalize_sentence(
    const std::vector<std::string>& raw_tokens, const NormalizerConfig& config);

}  // namespace spanoverlap

#endif
