#include "spanoverlap/treebank.hpp"

#include <fstream>
#include <sstream>

#include "spanoverlap/util.hpp"

namespace spanoverlap {

namespace {

struct PendingNode {
  std::string label;
  std::vector<LabeledTree> items;
  std::vector<char> bare;  // items[k] came from a bare token
  std::size_t first_bare_offset = 0;
  std::size_t open_offset = 0;
};

bool is_delim(char c) {
  return c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c));
}

std::string decode_leaf_token(const std::string& token, bool decode) {
  if (!decode) return token;
  if (token == "-LRB-") return "(";
  if (token == "-RRB-") return ")";
  return token;
}

std::string encode_leaf_token(const std::string& token, bool encode) {
  if (!encode) return token;
  if (token == "(") return "-LRB-";
  if (token == ")") return "-RRB-";
  return token;
}

// Closes a pending node into a tree. A single bare token makes a leaf
// (the preterminal and its token merge into one node).
LabeledTree finalize_node(PendingNode& node, bool recover, std::size_t close_offset) {
  if (node.items.empty())
    throw TreeParseError("empty node", close_offset);
  if (node.items.size() == 1 && node.bare[0]) {
    LabeledTree leaf = std::move(node.items[0]);
    leaf.set_label(node.label);
    return leaf;
  }
  bool any_bare = false;
  for (char b : node.bare) any_bare |= (b != 0);
  if (any_bare && !recover)
    throw TreeParseError("bare token outside a preterminal", node.first_bare_offset);
  return LabeledTree::node(node.label, std::move(node.items));
}

}  // namespace

LabeledTree parse_bracketed(const std::string& text, const TreeParseOptions& options) {
  std::vector<PendingNode> stack;
  std::optional<LabeledTree> root;
  std::size_t pos = 0;
  std::size_t last_token_offset = 0;
  const std::size_t size = text.size();

  while (pos < size) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (root.has_value()) {
      // Content after a complete tree: error in strict mode, ignored in recovery.
      if (options.recover) break;
      throw TreeParseError("trailing content after tree", pos);
    }
    if (c == '(') {
      PendingNode node;
      node.open_offset = pos;
      ++pos;
      std::size_t label_start = pos;
      while (pos < size && !is_delim(text[pos])) ++pos;
      node.label = text.substr(label_start, pos - label_start);
      stack.push_back(std::move(node));
      last_token_offset = label_start;
    } else if (c == ')') {
      if (stack.empty()) {
        if (options.recover) {
          ++pos;
          continue;
        }
        throw TreeParseError("unbalanced ')'", pos);
      }
      LabeledTree done = finalize_node(stack.back(), options.recover, pos);
      stack.pop_back();
      if (stack.empty()) {
        root = std::move(done);
      } else {
        stack.back().items.push_back(std::move(done));
        stack.back().bare.push_back(0);
      }
      ++pos;
    } else {
      std::size_t token_start = pos;
      while (pos < size && !is_delim(text[pos])) ++pos;
      std::string token = text.substr(token_start, pos - token_start);
      last_token_offset = token_start;
      if (stack.empty()) {
        if (options.recover) continue;  // leading junk before the first '('
        throw TreeParseError("token outside any tree", token_start);
      }
      PendingNode& top = stack.back();
      if (top.bare.empty() || top.first_bare_offset == 0) top.first_bare_offset = token_start;
      top.items.push_back(LabeledTree::leaf("", decode_leaf_token(token, options.decode_escapes), 0));
      top.bare.push_back(1);
    }
  }

  if (!root.has_value()) {
    if (!options.recover) {
      if (stack.empty()) throw TreeParseError("no tree found", last_token_offset);
      throw TreeParseError("unbalanced '(': input ended inside a node", last_token_offset);
    }
    // Recovery: unwind open nodes, dropping unattached bare tokens and
    // keeping nodes that still hold a complete child.
    std::optional<LabeledTree> carry;
    while (!stack.empty()) {
      PendingNode node = std::move(stack.back());
      stack.pop_back();
      std::vector<LabeledTree> kept;
      for (std::size_t k = 0; k < node.items.size(); ++k) {
        if (!node.bare[k]) kept.push_back(std::move(node.items[k]));
      }
      if (carry.has_value()) kept.push_back(std::move(*carry));
      if (kept.empty()) {
        carry.reset();
      } else if (kept.size() == 1 && kept[0].is_leaf() && kept[0].label().empty()) {
        LabeledTree leaf = std::move(kept[0]);
        leaf.set_label(node.label);
        carry = std::move(leaf);
      } else {
        carry = LabeledTree::node(node.label, std::move(kept));
      }
    }
    if (!carry.has_value()) throw TreeParseError("nothing salvageable", last_token_offset);
    root = std::move(*carry);
  }

  root->renumber_leaves();
  return std::move(*root);
}

std::string serialize_bracketed(const LabeledTree& tree, bool encode_escapes) {
  std::string out;
  auto walk = [&](const LabeledTree& t, auto&& self) -> void {
    out.push_back('(');
    out.append(t.label());
    if (t.is_leaf()) {
      out.push_back(' ');
      out.append(encode_leaf_token(t.token(), encode_escapes));
    } else {
      for (const auto& c : t.children()) {
        out.push_back(' ');
        self(c, self);
      }
    }
    out.push_back(')');
  };
  walk(tree, walk);
  return out;
}

std::string strip_functional_tag(const std::string& label) {
  if (label.empty() || label.front() == '-') return label;
  std::size_t cut = label.find_first_of("-=");
  if (cut == std::string::npos) return label;
  return label.substr(0, cut);
}

void strip_functional_tags(LabeledTree& tree) {
  tree.set_label(strip_functional_tag(tree.label()));
  for (auto& c : tree.children()) strip_functional_tags(c);
}

namespace {

bool all_punct_chars(const std::string& token) {
  static const std::set<std::string> punct_chars = [] {
    std::set<std::string> s;
    const std::string ascii = "!\"#$&'()*+,-./:;<=>?@[\\]^_`{|}~";
    for (char c : ascii) s.insert(std::string(1, c));
    for (const char* u : {"«", "»", "¿", "¡", "–", "—",
                          "‘", "’", "“", "”", "…", "。",
                          "，", "、", "；", "：", "？", "！",
                          "（", "）", "《", "》", "「", "」",
                          "『", "』", "【", "】", "·", "．",
                          "－", "―"})
      s.insert(u);
    return s;
  }();
  if (token.empty()) return false;
  for (const auto& ch : utf8_chars(token)) {
    if (!punct_chars.count(ch)) return false;
  }
  return true;
}

}  // namespace

bool PunctuationSpec::is_punctuation(const std::string& tag, const std::string& token) const {
  if (tags.count(tag)) return true;
  return match_tokens && all_punct_chars(token);
}

namespace {

std::optional<LabeledTree> strip_rec(const LabeledTree& tree, const PunctuationSpec& spec) {
  if (tree.is_leaf()) {
    if (spec.is_punctuation(tree.label(), tree.token())) return std::nullopt;
    return tree;
  }
  std::vector<LabeledTree> kept;
  for (const auto& c : tree.children()) {
    if (auto sub = strip_rec(c, spec)) kept.push_back(std::move(*sub));
  }
  if (kept.empty()) return std::nullopt;
  return LabeledTree::node(tree.label(), std::move(kept));
}

}  // namespace

std::optional<StripResult> strip_punctuation(const LabeledTree& tree, const PunctuationSpec& spec) {
  auto stripped = strip_rec(tree, spec);
  if (!stripped.has_value()) return std::nullopt;

  std::vector<int> position_map;
  int next = 1;
  auto walk = [&](const LabeledTree& t, auto&& self) -> void {
    if (t.is_leaf()) {
      position_map.push_back(spec.is_punctuation(t.label(), t.token()) ? 0 : next++);
      return;
    }
    for (const auto& c : t.children()) self(c, self);
  };
  walk(tree, walk);

  stripped->renumber_leaves();
  return StripResult{std::move(*stripped), std::move(position_map)};
}

std::string LabelMap::apply(const std::string& label) const {
  auto it = merges.find(label);
  return it == merges.end() ? label : it->second;
}

LabelMap LabelMap::identity() { return {}; }

LabelMap LabelMap::for_language(const std::string& language) {
  LabelMap map;
  map.language = language;
  if (language == "fr") {
    map.merges = {{"Srel", "S"}, {"Sint", "S"}, {"Ssub", "S"},
                  {"VPpart", "VP"}, {"VPinf", "VP"}};
  } else if (language == "pl") {
    map.merges = {{"zdanie", "S"}, {"fwe", "VP"}, {"fno", "NP"}};
  } else if (language == "eu") {
    map.merges = {{"SN", "NP"}, {"SP", "PP"}};
  }
  return map;
}

LabeledTree normalize_labels(const LabeledTree& tree, const LabelMap& map) {
  LabeledTree out = tree;
  auto walk = [&](LabeledTree& t, auto&& self) -> void {
    t.set_label(map.apply(t.label()));
    for (auto& c : t.children()) self(c, self);
  };
  walk(out, walk);
  return out;
}

Corpus load_corpus(const std::string& path, const CorpusLoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open treebank: " + path);
  std::stringstream buf;
  buf << in.rdbuf();

  std::vector<std::string> units;
  if (options.multiline) {
    std::string current;
    for (const auto& line : split_lines(buf.str())) {
      if (trim(line).empty()) {
        if (!trim(current).empty()) units.push_back(current);
        current.clear();
      } else {
        current += line;
        current.push_back('\n');
      }
    }
    if (!trim(current).empty()) units.push_back(current);
  } else {
    for (const auto& line : split_lines(buf.str())) {
      if (!trim(line).empty()) units.emplace_back(line);
    }
  }

  Corpus corpus;
  for (std::size_t k = 0; k < units.size(); ++k) {
    LabeledTree tree;
    try {
      tree = parse_bracketed(units[k]);
    } catch (const TreeParseError& e) {
      if (!options.lenient) {
        throw std::runtime_error(path + ":" + std::to_string(k + 1) + ": " + e.what());
      }
      if (options.warnings) {
        options.warnings->push_back(path + ":" + std::to_string(k + 1) + ": skipped: " + e.what());
      }
      continue;
    }
    if (options.strip_function_tags) strip_functional_tags(tree);

    Sentence sentence;
    sentence.id = std::to_string(corpus.sentences.size());
    sentence.raw_tokens = tree.leaf_tokens();
    sentence.norm_tokens = sentence.raw_tokens;
    sentence.alignment.resize(sentence.raw_tokens.size());
    for (int t = 0; t < sentence.size(); ++t) sentence.alignment[t] = {t, t + 1};
    corpus.sentences.emplace_back(std::move(sentence), std::move(tree));
  }
  if (corpus.sentences.empty()) {
    throw std::runtime_error("no trees parsed from " + path);
  }
  return corpus;
}

}  // namespace spanoverlap
