#include "polarity/textproc.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "polarity/stemmer.hpp"
#include "polarity/utf8.hpp"

namespace polarity {
namespace {

char32_t lower_cp(char32_t c) {
  if (c >= U'A' && c <= U'Z') return c + 32;
  // Latin-1 uppercase block, skipping the multiplication sign
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 32;
  return c;
}

bool is_token_cp(char32_t c) {
  if (c >= U'a' && c <= U'z') return true;
  if (c >= U'0' && c <= U'9') return true;
  // Latin-1 lowercase letters, skipping the division sign
  if (c >= 0xDF && c <= 0xFF && c != 0xF7) return true;
  return false;
}

char32_t fold_cp(char32_t c) {
  switch (c) {
    case 0xE0: case 0xE1: case 0xE2: case 0xE3: case 0xE4: case 0xE5:
      return U'a';
    case 0xE8: case 0xE9: case 0xEA: case 0xEB:
      return U'e';
    case 0xEC: case 0xED: case 0xEE: case 0xEF:
      return U'i';
    case 0xF2: case 0xF3: case 0xF4: case 0xF5: case 0xF6:
      return U'o';
    case 0xF9: case 0xFA: case 0xFB: case 0xFC:
      return U'u';
    case 0xF1: return U'n';
    case 0xE7: return U'c';
    case 0xFD: case 0xFF: return U'y';
    default: return c;
  }
}

}  // namespace

std::string normalize_text(std::string_view raw) {
  const std::u32string cps = utf8_decode(raw);
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (char32_t c : cps) {
    const char32_t lc = lower_cp(c);
    if (is_token_cp(lc)) {
      if (pending_space && !out.empty()) out.push_back(' ');
      pending_space = false;
      utf8_append(out, lc);
    } else {
      pending_space = true;
    }
  }
  return out;
}

std::string strip_diacritics(std::string_view text) {
  const std::u32string cps = utf8_decode(text);
  std::string out;
  out.reserve(text.size());
  for (char32_t c : cps) utf8_append(out, fold_cp(c));
  return out;
}

std::vector<std::string> tokenize(std::string_view raw,
                                  const TextprocConfig& cfg) {
  const std::string norm = normalize_text(raw);
  std::vector<std::string> tokens;
  size_t i = 0;
  while (i < norm.size()) {
    size_t j = norm.find(' ', i);
    if (j == std::string::npos) j = norm.size();
    std::string tok = norm.substr(i, j - i);
    if (cfg.fold_diacritics) tok = strip_diacritics(tok);
    if (cfg.stem) tok = spanish_stem(tok);
    if (!tok.empty()) tokens.push_back(std::move(tok));
    i = j + 1;
  }
  return tokens;
}

Vocabulary::Vocabulary(std::vector<std::string> tokens,
                       std::vector<uint64_t> freqs)
    : tokens_(std::move(tokens)), freqs_(std::move(freqs)) {
  index_.reserve(tokens_.size());
  for (uint32_t i = 0; i < tokens_.size(); ++i) index_[tokens_[i]] = i;
}

std::optional<uint32_t> Vocabulary::index(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vocabulary build_vocabulary(const std::vector<std::vector<std::string>>& docs,
                            size_t min_count) {
  std::unordered_map<std::string, uint64_t> counts;
  for (const auto& doc : docs)
    for (const auto& tok : doc) ++counts[tok];

  std::vector<std::pair<std::string, uint64_t>> kept;
  kept.reserve(counts.size());
  for (auto& [tok, n] : counts)
    if (n >= min_count) kept.emplace_back(tok, n);
  if (kept.empty()) throw std::runtime_error("empty vocabulary");

  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });

  std::vector<std::string> tokens;
  std::vector<uint64_t> freqs;
  tokens.reserve(kept.size());
  freqs.reserve(kept.size());
  for (auto& [tok, n] : kept) {
    tokens.push_back(std::move(tok));
    freqs.push_back(n);
  }
  return Vocabulary(std::move(tokens), std::move(freqs));
}

std::vector<TokenizedDoc> index_documents(
    const Vocabulary& vocab,
    const std::vector<std::vector<std::string>>& docs) {
  std::vector<TokenizedDoc> out;
  out.reserve(docs.size());
  for (size_t d = 0; d < docs.size(); ++d) {
    TokenizedDoc td;
    td.doc_id = d;
    td.tokens.reserve(docs[d].size());
    for (const auto& tok : docs[d])
      if (auto idx = vocab.index(tok)) td.tokens.push_back(*idx);
    out.push_back(std::move(td));
  }
  return out;
}

std::vector<TokenizedDoc> filter_by_min_tokens(
    const std::vector<TokenizedDoc>& docs, size_t min_tokens) {
  std::vector<TokenizedDoc> out;
  out.reserve(docs.size());
  for (const auto& d : docs)
    if (d.tokens.size() >= min_tokens) out.push_back(d);
  return out;
}

void write_token_cache(const std::string& path,
                       const std::vector<TokenizedDoc>& docs) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  for (const auto& d : docs) {
    f << d.doc_id << '\t';
    for (size_t i = 0; i < d.tokens.size(); ++i) {
      if (i) f << ' ';
      f << d.tokens[i];
    }
    f << '\n';
  }
}

std::vector<TokenizedDoc> read_token_cache(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open: " + path);
  std::vector<TokenizedDoc> out;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    const size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw std::runtime_error("malformed token cache line: " + line);
    TokenizedDoc d;
    d.doc_id = std::stoull(line.substr(0, tab));
    size_t i = tab + 1;
    while (i < line.size()) {
      size_t j = line.find(' ', i);
      if (j == std::string::npos) j = line.size();
      if (j > i)
        d.tokens.push_back(
            static_cast<uint32_t>(std::stoul(line.substr(i, j - i))));
      i = j + 1;
    }
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace polarity
