#ifndef SPANOVERLAP_STEMMER_HPP
#define SPANOVERLAP_STEMMER_HPP

#include <memory>
#include <string>
#include <string_view>

namespace spanoverlap {

// Suffix stemmer interface. Implementations lowercase their input and
// never return an empty token (they fall back to the lowercased input).
class Stemmer {
 public:
  virtual ~Stemmer() = default;
  virtual std::string stem(std::string_view token) const = 0;
  virtual std::string name() const = 0;
};

// Known names: "identity", "snowball_english", "snowball_german",
// "snowball_swedish". Throws on unknown names.
std::shared_ptr<const Stemmer> make_stemmer(const std::string& name);

// Default stemmer name per language code. Languages without a bundled
// algorithm (including zh/ko/he, which take no stemming) map to
// "identity".
std::string default_stemmer_for(const std::string& language);

}  // namespace spanoverlap

#endif
