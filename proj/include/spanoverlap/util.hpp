#ifndef SPANOVERLAP_UTIL_HPP
#define SPANOVERLAP_UTIL_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace spanoverlap {

// 64-bit FNV-1a. Stable across platforms; used for cache keys and the
// counter-based random streams, not for anything adversarial.
std::uint64_t fnv1a64(std::string_view data);
std::uint64_t fnv1a64(std::uint64_t seed, std::string_view data);

std::string to_hex(std::uint64_t value);

// splitmix64 finalizer; bijective on 64-bit words.
std::uint64_t mix64(std::uint64_t x);

// Uniform double in [0,1) from a 64-bit word (53-bit mantissa path).
double unit_double(std::uint64_t x);

std::vector<std::string> split_whitespace(std::string_view text);
std::vector<std::string> split_lines(std::string_view text);
std::string join(const std::vector<std::string>& tokens, std::string_view sep);
std::string_view trim(std::string_view text);

bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);

// UTF-8 decoding. Malformed bytes are passed through as single-byte
// code points so that normalization never throws on dirty LLM output.
std::vector<std::string> utf8_chars(std::string_view text);
std::size_t utf8_length(std::string_view text);

// Lowercases ASCII plus Latin-1 Supplement and Latin Extended-A, which
// covers the treebank languages written in Latin script.
std::string utf8_lower(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

// Runs fn(0..count-1) on up to `jobs` worker threads. jobs <= 1 runs inline.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace spanoverlap

#endif
