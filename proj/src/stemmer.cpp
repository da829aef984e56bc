#include "spanoverlap/stemmer.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "spanoverlap/util.hpp"

namespace spanoverlap {

namespace {

class IdentityStemmer : public Stemmer {
 public:
  std::string stem(std::string_view token) const override { return std::string(token); }
  std::string name() const override { return "identity"; }
};

// ---------------------------------------------------------------------------
// English (Porter2 / snowball "english")
// ---------------------------------------------------------------------------

bool en_is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

// First position after a non-vowel that follows a vowel, from `start`.
std::size_t region_after_vc(const std::string& w, std::size_t start) {
  for (std::size_t k = start; k + 1 < w.size(); ++k) {
    if (en_is_vowel(w[k]) && !en_is_vowel(w[k + 1])) return k + 2;
  }
  return w.size();
}

bool en_ends_double(const std::string& w) {
  static const std::string doubles = "bdfgmnprt";
  std::size_t n = w.size();
  return n >= 2 && w[n - 1] == w[n - 2] && doubles.find(w[n - 1]) != std::string::npos;
}

bool en_ends_short_syllable(const std::string& w) {
  std::size_t n = w.size();
  if (n == 2) return en_is_vowel(w[0]) && !en_is_vowel(w[1]);
  if (n < 3) return false;
  char c = w[n - 1];
  return !en_is_vowel(w[n - 3]) && en_is_vowel(w[n - 2]) && !en_is_vowel(c) &&
         c != 'w' && c != 'x' && c != 'Y';
}

class EnglishStemmer : public Stemmer {
 public:
  std::string name() const override { return "snowball_english"; }

  std::string stem(std::string_view token) const override {
    std::string w = utf8_lower(token);
    for (char c : w) {
      if (!(c >= 'a' && c <= 'z') && c != '\'') return w;  // not a plain word
    }
    if (w.size() <= 2) return w;
    if (auto ex = exception1(w)) return *ex;

    if (!w.empty() && w[0] == '\'') w.erase(0, 1);
    mark_consonant_y(w);
    std::size_t r1 = compute_r1(w);
    std::size_t r2 = region_after_vc(w, r1);

    step0(w);
    step1a(w);
    if (is_exception2(w)) return unmark(w);
    step1b(w, r1);
    step1c(w);
    step2(w, r1);
    step3(w, r1, r2);
    step4(w, r2);
    step5(w, r1, r2);
    std::string out = unmark(w);
    return out.empty() ? utf8_lower(token) : out;
  }

 private:
  static std::optional<std::string> exception1(const std::string& w) {
    static const std::map<std::string, std::string> special = {
        {"skis", "ski"},     {"skies", "sky"},   {"dying", "die"},
        {"lying", "lie"},    {"tying", "tie"},   {"idly", "idl"},
        {"gently", "gentl"}, {"ugly", "ugli"},   {"early", "earli"},
        {"only", "onli"},    {"singly", "singl"}};
    static const std::set<std::string> invariant = {"sky",    "news", "howe",
                                                    "atlas",  "cosmos", "bias",
                                                    "andes"};
    if (auto it = special.find(w); it != special.end()) return it->second;
    if (invariant.count(w)) return w;
    return std::nullopt;
  }

  static bool is_exception2(const std::string& w) {
    static const std::set<std::string> stop = {"inning",  "outing",  "canning",
                                               "herring", "earring", "proceed",
                                               "exceed",  "succeed"};
    return stop.count(w) != 0;
  }

  // Initial y, or y after a vowel, marks a consonant use: write it Y.
  static void mark_consonant_y(std::string& w) {
    if (!w.empty() && w[0] == 'y') w[0] = 'Y';
    for (std::size_t k = 1; k < w.size(); ++k) {
      if (w[k] == 'y' && en_is_vowel(w[k - 1])) w[k] = 'Y';
    }
  }

  static std::string unmark(std::string w) {
    std::replace(w.begin(), w.end(), 'Y', 'y');
    return w;
  }

  static std::size_t compute_r1(const std::string& w) {
    for (const char* p : {"gener", "commun", "arsen"}) {
      if (starts_with(w, p)) return std::string_view(p).size();
    }
    return region_after_vc(w, 0);
  }

  static bool replace_suffix(std::string& w, std::string_view suffix, std::string_view repl) {
    if (!ends_with(w, suffix)) return false;
    w.replace(w.size() - suffix.size(), suffix.size(), repl);
    return true;
  }

  static bool in_region(const std::string& w, std::size_t region, std::size_t suffix_len) {
    return w.size() - suffix_len >= region;
  }

  static void step0(std::string& w) {
    for (std::string_view s : {"'s'", "'s", "'"}) {
      if (ends_with(w, s)) {
        w.erase(w.size() - s.size());
        return;
      }
    }
  }

  static void step1a(std::string& w) {
    if (replace_suffix(w, "sses", "ss")) return;
    if (ends_with(w, "ied") || ends_with(w, "ies")) {
      // -> i after more than one letter, else -> ie (ties -> tie)
      w.erase(w.size() - 3);
      w.append(w.size() > 1 ? "i" : "ie");
      return;
    }
    if (ends_with(w, "us") || ends_with(w, "ss")) return;
    if (ends_with(w, "s")) {
      // delete if a vowel occurs before the immediately preceding letter
      for (std::size_t k = 0; k + 2 < w.size(); ++k) {
        if (en_is_vowel(w[k])) {
          w.pop_back();
          return;
        }
      }
    }
  }

  static void step1b(std::string& w, std::size_t r1) {
    if (ends_with(w, "eedly")) {
      if (in_region(w, r1, 5)) replace_suffix(w, "eedly", "ee");
      return;
    }
    if (ends_with(w, "eed")) {
      if (in_region(w, r1, 3)) replace_suffix(w, "eed", "ee");
      return;
    }
    std::size_t cut = 0;
    if (ends_with(w, "ingly") || ends_with(w, "edly")) cut = ends_with(w, "ingly") ? 5 : 4;
    else if (ends_with(w, "ing")) cut = 3;
    else if (ends_with(w, "ed")) cut = 2;
    if (cut == 0) return;
    std::string_view stem_part = std::string_view(w).substr(0, w.size() - cut);
    bool has_vowel = std::any_of(stem_part.begin(), stem_part.end(), en_is_vowel);
    if (!has_vowel) return;
    w.erase(w.size() - cut);
    if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
      w.push_back('e');
    } else if (en_ends_double(w)) {
      w.pop_back();
    } else if (en_ends_short_syllable(w) && r1 >= w.size()) {
      w.push_back('e');
    }
  }

  static void step1c(std::string& w) {
    std::size_t n = w.size();
    if (n < 3) return;
    char last = w[n - 1];
    if ((last == 'y' || last == 'Y') && !en_is_vowel(w[n - 2])) w[n - 1] = 'i';
  }

  static void step2(std::string& w, std::size_t r1) {
    struct Rule { std::string_view suffix; std::string_view repl; };
    static const Rule rules[] = {
        {"ization", "ize"}, {"ational", "ate"}, {"fulness", "ful"},
        {"ousness", "ous"}, {"iveness", "ive"}, {"tional", "tion"},
        {"biliti", "ble"},  {"lessli", "less"}, {"entli", "ent"},
        {"ation", "ate"},   {"alism", "al"},    {"aliti", "al"},
        {"ousli", "ous"},   {"iviti", "ive"},   {"fulli", "ful"},
        {"enci", "ence"},   {"anci", "ance"},   {"abli", "able"},
        {"izer", "ize"},    {"ator", "ate"},    {"alli", "al"},
        {"bli", "ble"}};
    for (const auto& rule : rules) {
      if (ends_with(w, rule.suffix)) {
        if (in_region(w, r1, rule.suffix.size())) replace_suffix(w, rule.suffix, rule.repl);
        return;
      }
    }
    if (ends_with(w, "ogi")) {
      if (in_region(w, r1, 3) && w.size() >= 4 && w[w.size() - 4] == 'l')
        replace_suffix(w, "ogi", "og");
      return;
    }
    if (ends_with(w, "li")) {
      static const std::string li_endings = "cdeghkmnrt";
      if (in_region(w, r1, 2) && w.size() >= 3 &&
          li_endings.find(w[w.size() - 3]) != std::string::npos)
        w.erase(w.size() - 2);
    }
  }

  static void step3(std::string& w, std::size_t r1, std::size_t r2) {
    struct Rule { std::string_view suffix; std::string_view repl; };
    static const Rule rules[] = {{"ational", "ate"}, {"tional", "tion"},
                                 {"alize", "al"},    {"icate", "ic"},
                                 {"iciti", "ic"},    {"ical", "ic"},
                                 {"ful", ""},        {"ness", ""}};
    if (ends_with(w, "ative")) {
      if (in_region(w, r1, 5) && in_region(w, r2, 5)) w.erase(w.size() - 5);
      return;
    }
    for (const auto& rule : rules) {
      if (ends_with(w, rule.suffix)) {
        if (in_region(w, r1, rule.suffix.size())) replace_suffix(w, rule.suffix, rule.repl);
        return;
      }
    }
  }

  static void step4(std::string& w, std::size_t r2) {
    static const std::string_view suffixes[] = {
        "ement", "ance", "ence", "able", "ible", "ment", "ant", "ent",
        "ism",   "ate",  "iti",  "ous",  "ive",  "ize",  "al",  "er", "ic"};
    if (ends_with(w, "ion")) {
      if (in_region(w, r2, 3) && w.size() >= 4 &&
          (w[w.size() - 4] == 's' || w[w.size() - 4] == 't'))
        w.erase(w.size() - 3);
      return;
    }
    for (std::string_view s : suffixes) {
      if (ends_with(w, s)) {
        if (in_region(w, r2, s.size())) w.erase(w.size() - s.size());
        return;
      }
    }
  }

  static void step5(std::string& w, std::size_t r1, std::size_t r2) {
    if (ends_with(w, "e")) {
      bool in_r2 = in_region(w, r2, 1);
      if (in_r2) {
        w.pop_back();
      } else if (in_region(w, r1, 1)) {
        std::string head = w.substr(0, w.size() - 1);
        if (!en_ends_short_syllable(head)) w.pop_back();
      }
      return;
    }
    if (ends_with(w, "l") && in_region(w, r2, 1) && w.size() >= 2 && w[w.size() - 2] == 'l')
      w.pop_back();
  }
};

// ---------------------------------------------------------------------------
// German and Swedish snowball variants, working on code points so the
// umlauts behave as single letters.
// ---------------------------------------------------------------------------

using CpWord = std::vector<std::uint32_t>;

CpWord to_cps(std::string_view text) {
  CpWord out;
  for (const auto& ch : utf8_chars(text)) {
    std::uint32_t cp = 0;
    unsigned char c0 = static_cast<unsigned char>(ch[0]);
    if (ch.size() == 1) cp = c0;
    else {
      cp = c0 & (0xFF >> (ch.size() + 1));
      for (std::size_t k = 1; k < ch.size(); ++k)
        cp = (cp << 6) | (static_cast<unsigned char>(ch[k]) & 0x3F);
    }
    out.push_back(cp);
  }
  return out;
}

std::string from_cps(const CpWord& w) {
  std::string out;
  for (std::uint32_t cp : w) {
    if (cp < 0x80) out.push_back(static_cast<char>(cp));
    else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

bool cp_ends_with(const CpWord& w, std::initializer_list<std::uint32_t> suffix) {
  if (w.size() < suffix.size()) return false;
  std::size_t off = w.size() - suffix.size();
  std::size_t k = 0;
  for (std::uint32_t cp : suffix) {
    if (w[off + k++] != cp) return false;
  }
  return true;
}

bool cp_ends_with_str(const CpWord& w, std::string_view ascii) {
  if (w.size() < ascii.size()) return false;
  std::size_t off = w.size() - ascii.size();
  for (std::size_t k = 0; k < ascii.size(); ++k) {
    if (w[off + k] != static_cast<unsigned char>(ascii[k])) return false;
  }
  return true;
}

class GermanStemmer : public Stemmer {
 public:
  std::string name() const override { return "snowball_german"; }

  std::string stem(std::string_view token) const override {
    CpWord w = to_cps(utf8_lower(token));
    if (w.empty()) return std::string(token);

    // ss for ß, and U/Y mark consonant use of u/y between vowels.
    CpWord expanded;
    for (std::uint32_t cp : w) {
      if (cp == 0xDF) { expanded.push_back('s'); expanded.push_back('s'); }
      else expanded.push_back(cp);
    }
    w = std::move(expanded);
    for (std::size_t k = 1; k + 1 < w.size(); ++k) {
      if (w[k] == 'u' && is_vowel(w[k - 1]) && is_vowel(w[k + 1])) w[k] = 'U';
      if (w[k] == 'y' && is_vowel(w[k - 1]) && is_vowel(w[k + 1])) w[k] = 'Y';
    }

    std::size_t r1 = region(w, 0);
    std::size_t r2 = region(w, r1);
    r1 = std::max<std::size_t>(r1, std::min<std::size_t>(3, w.size()));

    step1(w, r1);
    step2(w, r1);
    step3(w, r1, r2);

    // Unmark and strip umlauts.
    for (auto& cp : w) {
      if (cp == 'U') cp = 'u';
      else if (cp == 'Y') cp = 'y';
      else if (cp == 0xE4) cp = 'a';
      else if (cp == 0xF6) cp = 'o';
      else if (cp == 0xFC) cp = 'u';
    }
    std::string out = from_cps(w);
    return out.empty() ? utf8_lower(token) : out;
  }

 private:
  static bool is_vowel(std::uint32_t cp) {
    return cp == 'a' || cp == 'e' || cp == 'i' || cp == 'o' || cp == 'u' ||
           cp == 'y' || cp == 0xE4 || cp == 0xF6 || cp == 0xFC;
  }

  static std::size_t region(const CpWord& w, std::size_t start) {
    for (std::size_t k = start; k + 1 < w.size(); ++k) {
      if (is_vowel(w[k]) && !is_vowel(w[k + 1])) return k + 2;
    }
    return w.size();
  }

  static bool in_r(const CpWord& w, std::size_t r, std::size_t len) {
    return w.size() - len >= r;
  }

  static bool valid_s_ending(std::uint32_t cp) {
    return cp == 'b' || cp == 'd' || cp == 'f' || cp == 'g' || cp == 'h' ||
           cp == 'k' || cp == 'l' || cp == 'm' || cp == 'n' || cp == 'r' || cp == 't';
  }

  static bool valid_st_ending(std::uint32_t cp) {
    return valid_s_ending(cp) && cp != 'r';
  }

  static void step1(CpWord& w, std::size_t r1) {
    for (std::string_view s : {"ern", "em", "er"}) {
      if (cp_ends_with_str(w, s)) {
        if (in_r(w, r1, s.size())) w.resize(w.size() - s.size());
        return;
      }
    }
    for (std::string_view s : {"en", "es", "e"}) {
      if (cp_ends_with_str(w, s)) {
        if (in_r(w, r1, s.size())) {
          w.resize(w.size() - s.size());
          if (cp_ends_with_str(w, "niss")) w.pop_back();
        }
        return;
      }
    }
    if (cp_ends_with_str(w, "s") && w.size() >= 2 && valid_s_ending(w[w.size() - 2])) {
      if (in_r(w, r1, 1)) w.pop_back();
    }
  }

  static void step2(CpWord& w, std::size_t r1) {
    for (std::string_view s : {"est", "en", "er"}) {
      if (cp_ends_with_str(w, s)) {
        if (in_r(w, r1, s.size())) w.resize(w.size() - s.size());
        return;
      }
    }
    if (cp_ends_with_str(w, "st") && w.size() >= 6 && valid_st_ending(w[w.size() - 3])) {
      if (in_r(w, r1, 2)) w.resize(w.size() - 2);
    }
  }

  static void step3(CpWord& w, std::size_t r1, std::size_t r2) {
    for (std::string_view s : {"end", "ung"}) {
      if (cp_ends_with_str(w, s)) {
        if (in_r(w, r2, s.size())) {
          w.resize(w.size() - s.size());
          if (cp_ends_with_str(w, "ig") && in_r(w, r2, 2) &&
              !(w.size() >= 3 && w[w.size() - 3] == 'e'))
            w.resize(w.size() - 2);
        }
        return;
      }
    }
    for (std::string_view s : {"isch", "ig", "ik"}) {
      if (cp_ends_with_str(w, s)) {
        if (in_r(w, r2, s.size()) &&
            !(w.size() >= s.size() + 1 && w[w.size() - s.size() - 1] == 'e'))
          w.resize(w.size() - s.size());
        return;
      }
    }
    for (std::string_view s : {"lich", "heit"}) {
      if (cp_ends_with_str(w, s)) {
        if (in_r(w, r2, s.size())) {
          w.resize(w.size() - s.size());
          for (std::string_view p : {"er", "en"}) {
            if (cp_ends_with_str(w, p) && in_r(w, r1, p.size())) {
              w.resize(w.size() - p.size());
              break;
            }
          }
        }
        return;
      }
    }
    if (cp_ends_with_str(w, "keit")) {
      if (in_r(w, r2, 4)) {
        w.resize(w.size() - 4);
        for (std::string_view p : {"lich", "ig"}) {
          if (cp_ends_with_str(w, p) && in_r(w, r2, p.size())) {
            w.resize(w.size() - p.size());
            break;
          }
        }
      }
    }
  }
};

class SwedishStemmer : public Stemmer {
 public:
  std::string name() const override { return "snowball_swedish"; }

  std::string stem(std::string_view token) const override {
    CpWord w = to_cps(utf8_lower(token));
    if (w.empty()) return std::string(token);

    std::size_t r1 = region(w, 0);
    r1 = std::max<std::size_t>(r1, std::min<std::size_t>(3, w.size()));

    step1(w, r1);
    step2(w, r1);
    step3(w, r1);

    std::string out = from_cps(w);
    return out.empty() ? utf8_lower(token) : out;
  }

 private:
  static bool is_vowel(std::uint32_t cp) {
    return cp == 'a' || cp == 'e' || cp == 'i' || cp == 'o' || cp == 'u' ||
           cp == 'y' || cp == 0xE4 || cp == 0xE5 || cp == 0xF6;
  }

  static std::size_t region(const CpWord& w, std::size_t start) {
    for (std::size_t k = start; k + 1 < w.size(); ++k) {
      if (is_vowel(w[k]) && !is_vowel(w[k + 1])) return k + 2;
    }
    return w.size();
  }

  static bool in_r(const CpWord& w, std::size_t r, std::size_t len) {
    return w.size() - len >= r;
  }

  static bool valid_s_ending(std::uint32_t cp) {
    static const std::string endings = "bcdfghjklmnoprtvy";
    return cp < 0x80 && endings.find(static_cast<char>(cp)) != std::string::npos;
  }

  static void step1(CpWord& w, std::size_t r1) {
    static const std::string_view suffixes[] = {
        "heterna", "hetens", "anden", "heten", "heter", "arnas", "ernas",
        "ornas",   "arens",  "andet", "arna",  "erna",  "orna",  "ande",
        "arne",    "aste",   "aren",  "ades",  "erns",  "ade",   "are",
        "ern",     "ens",    "het",   "ast",   "ad",    "en",    "ar",
        "er",      "or",     "as",    "es",    "at",    "a",     "e"};
    for (std::string_view s : suffixes) {
      if (cp_ends_with_str(w, s)) {
        if (in_r(w, r1, s.size())) w.resize(w.size() - s.size());
        return;
      }
    }
    if (cp_ends_with_str(w, "s") && w.size() >= 2 && valid_s_ending(w[w.size() - 2])) {
      if (in_r(w, r1, 1)) w.pop_back();
    }
  }

  static void step2(CpWord& w, std::size_t r1) {
    for (std::string_view s : {"dd", "gd", "nn", "dt", "gt", "kt", "tt"}) {
      if (cp_ends_with_str(w, s) && in_r(w, r1, 2)) {
        w.pop_back();
        return;
      }
    }
  }

  static void step3(CpWord& w, std::size_t r1) {
    if (cp_ends_with(w, {'l', 0xF6, 's', 't'})) {
      if (in_r(w, r1, 4)) w.pop_back();
      return;
    }
    if (cp_ends_with_str(w, "fullt")) {
      if (in_r(w, r1, 5)) w.pop_back();
      return;
    }
    for (std::string_view s : {"lig", "els", "ig"}) {
      if (cp_ends_with_str(w, s)) {
        if (in_r(w, r1, s.size())) w.resize(w.size() - s.size());
        return;
      }
    }
  }
};

}  // namespace

std::shared_ptr<const Stemmer> make_stemmer(const std::string& name) {
  if (name == "identity") return std::make_shared<IdentityStemmer>();
  if (name == "snowball_english") return std::make_shared<EnglishStemmer>();
  if (name == "snowball_german") return std::make_shared<GermanStemmer>();
  if (name == "snowball_swedish") return std::make_shared<SwedishStemmer>();
  throw std::invalid_argument("unknown stemmer: " + name);
}

std::string default_stemmer_for(const std::string& language) {
  if (language == "en") return "snowball_english";
  if (language == "de") return "snowball_german";
  if (language == "sv") return "snowball_swedish";
  return "identity";
}

}  // namespace spanoverlap
