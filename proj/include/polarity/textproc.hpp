#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace polarity {

struct TextprocConfig {
  bool fold_diacritics = true;  // jardín -> jardin, applied before stemming
  bool stem = true;
  size_t min_count = 2;  // vocabulary frequency cutoff
};

// Unicode-lowercase, replace punctuation/symbols with spaces, keep digits,
// collapse whitespace, trim. Idempotent and total.
std::string normalize_text(std::string_view raw);

// á -> a, ü -> u, ñ -> n and friends; expects lowercased input.
std::string strip_diacritics(std::string_view text);

// normalize + split + (fold) + (stem); tokens keep their original order.
std::vector<std::string> tokenize(std::string_view raw,
                                  const TextprocConfig& cfg = {});

struct TokenizedDoc {
  size_t doc_id = 0;
  std::vector<uint32_t> tokens;  // vocabulary indices, original word order
};

class Vocabulary {
 public:
  Vocabulary() = default;
  Vocabulary(std::vector<std::string> tokens, std::vector<uint64_t> freqs);

  size_t size() const { return tokens_.size(); }
  const std::string& token(uint32_t i) const { return tokens_[i]; }
  uint64_t frequency(uint32_t i) const { return freqs_[i]; }
  std::optional<uint32_t> index(std::string_view token) const;

  const std::vector<std::string>& tokens() const { return tokens_; }
  const std::vector<uint64_t>& frequencies() const { return freqs_; }

 private:
  std::vector<std::string> tokens_;
  std::vector<uint64_t> freqs_;
  std::unordered_map<std::string, uint32_t> index_;
};

// Indices in descending corpus frequency, ties broken lexicographically.
// Throws std::runtime_error("empty vocabulary") if nothing survives.
Vocabulary build_vocabulary(const std::vector<std::vector<std::string>>& docs,
                            size_t min_count);

// Map token strings to indices; tokens outside the vocabulary are dropped.
std::vector<TokenizedDoc> index_documents(
    const Vocabulary& vocab, const std::vector<std::vector<std::string>>& docs);

std::vector<TokenizedDoc> filter_by_min_tokens(
    const std::vector<TokenizedDoc>& docs, size_t min_tokens);

// Cache format: one line per doc, "doc_id<TAB>i0 i1 i2 ...".
void write_token_cache(const std::string& path,
                       const std::vector<TokenizedDoc>& docs);
std::vector<TokenizedDoc> read_token_cache(const std::string& path);

}  // namespace polarity
