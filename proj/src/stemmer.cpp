#include "polarity/stemmer.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "polarity/utf8.hpp"

namespace polarity {
namespace {

using u32 = std::u32string;

constexpr char32_t A_ACUTE = U'á';
constexpr char32_t E_ACUTE = U'é';
constexpr char32_t I_ACUTE = U'í';
constexpr char32_t O_ACUTE = U'ó';
constexpr char32_t U_ACUTE = U'ú';
constexpr char32_t U_DIAER = U'ü';

bool is_vowel(char32_t c) {
  switch (c) {
    case U'a':
    case U'e':
    case U'i':
    case U'o':
    case U'u':
    case A_ACUTE:
    case E_ACUTE:
    case I_ACUTE:
    case O_ACUTE:
    case U_ACUTE:
    case U_DIAER:
      return true;
    default:
      return false;
  }
}

struct Suffix {
  u32 text;
  int action;
};

// Longest entry that is a suffix of w[left..end) (content match and fully
// inside the window). Returns index into table or -1. Snowball's among
// semantics: once the longest match is picked there is no backtracking.
int longest_suffix(const u32& w, size_t end, size_t left,
                   const std::vector<Suffix>& table) {
  int best = -1;
  size_t best_len = 0;
  for (size_t k = 0; k < table.size(); ++k) {
    const u32& s = table[k].text;
    if (s.size() < best_len || s.size() > end - left) continue;
    if (w.compare(end - s.size(), s.size(), s) == 0) {
      best = static_cast<int>(k);
      best_len = s.size();
    }
  }
  return best;
}

struct Regions {
  size_t pv, p1, p2;
};

Regions mark_regions(const u32& w) {
  const size_t n = w.size();
  Regions r{n, n, n};

  // RV
  size_t c = 0;
  if (n >= 1) {
    if (is_vowel(w[0])) {
      if (n >= 2 && !is_vowel(w[1])) {
        // vowel-consonant: after next vowel
        c = 2;
        while (c < n && !is_vowel(w[c])) ++c;
        if (c < n) r.pv = c + 1;
      } else if (n >= 2 && is_vowel(w[1])) {
        // vowel-vowel: after next consonant
        c = 2;
        while (c < n && is_vowel(w[c])) ++c;
        if (c < n) r.pv = c + 1;
      }
    } else {
      if (n >= 2 && !is_vowel(w[1])) {
        // consonant-consonant: after next vowel
        c = 2;
        while (c < n && !is_vowel(w[c])) ++c;
        if (c < n) r.pv = c + 1;
      } else if (n >= 3) {
        // consonant-vowel: after the third letter
        r.pv = 3;
      }
    }
  }

  // R1: after the first non-vowel following a vowel
  c = 0;
  while (c < n && !is_vowel(w[c])) ++c;
  while (c < n && is_vowel(w[c])) ++c;
  if (c < n) {
    r.p1 = c + 1;
    // R2: same again starting from R1
    c = r.p1;
    while (c < n && !is_vowel(w[c])) ++c;
    while (c < n && is_vowel(w[c])) ++c;
    if (c < n) r.p2 = c + 1;
  }
  return r;
}

const std::vector<Suffix>& pronouns() {
  static const std::vector<Suffix> t = {
      {U"me", 0},  {U"se", 0},  {U"sela", 0}, {U"selo", 0}, {U"selas", 0},
      {U"selos", 0}, {U"la", 0}, {U"le", 0},  {U"lo", 0},   {U"las", 0},
      {U"les", 0}, {U"los", 0}, {U"nos", 0}};
  return t;
}

// action: 1..5 replace ending+pronoun with unaccented ending, 6 delete
// pronoun, 7 'yendo' needs a preceding 'u'
const std::vector<Suffix>& pronoun_preceders() {
  static const std::vector<Suffix> t = {
      {U"ando", 6},          {U"iendo", 6}, {U"yendo", 7},
      {u32(U"ándo"), 2}, {u32(U"iéndo"), 1},
      {U"ar", 6},            {U"er", 6},    {U"ir", 6},
      {u32(U"ár"), 3},  {u32(U"ér"), 4}, {u32(U"ír"), 5}};
  return t;
}

const std::vector<Suffix>& standard_suffixes() {
  static const std::vector<Suffix> t = {
      {U"ica", 1},     {U"ancia", 2},   {U"encia", 5},  {U"adora", 2},
      {U"osa", 1},     {U"ista", 1},    {U"iva", 9},    {U"anza", 1},
      {u32(U"logía"), 3},          {U"idad", 8},   {U"able", 1},
      {U"ible", 1},    {U"ante", 2},    {U"mente", 7},  {U"amente", 6},
      {u32(U"ación"), 2},          {u32(U"ución"), 4},
      {U"ico", 1},     {U"ismo", 1},    {U"oso", 1},    {U"amiento", 1},
      {U"imiento", 1}, {U"ivo", 9},     {U"ador", 2},   {U"icas", 1},
      {U"ancias", 2},  {U"encias", 5},  {U"adoras", 2}, {U"osas", 1},
      {U"istas", 1},   {U"ivas", 9},    {U"anzas", 1},
      {u32(U"logías"), 3},         {U"idades", 8}, {U"ables", 1},
      {U"ibles", 1},   {U"aciones", 2}, {U"uciones", 4},{U"adores", 2},
      {U"antes", 2},   {U"icos", 1},    {U"ismos", 1},  {U"osos", 1},
      {U"amientos", 1},{U"imientos", 1},{U"ivos", 9}};
  return t;
}

// action 1 = 'iv' (may chain to 'at'), 0 = plain delete
const std::vector<Suffix>& amente_followups() {
  static const std::vector<Suffix> t = {
      {U"ic", 0}, {U"ad", 0}, {U"os", 0}, {U"iv", 1}};
  return t;
}

const std::vector<Suffix>& mente_followups() {
  static const std::vector<Suffix> t = {{U"able", 0}, {U"ible", 0}, {U"ante", 0}};
  return t;
}

const std::vector<Suffix>& idad_followups() {
  static const std::vector<Suffix> t = {{U"ic", 0}, {U"abil", 0}, {U"iv", 0}};
  return t;
}

const std::vector<Suffix>& y_verb_suffixes() {
  static const std::vector<Suffix> t = {
      {U"ya", 1},  {U"ye", 1},   {U"yan", 1},  {U"yen", 1}, {U"yeron", 1},
      {U"yendo", 1}, {U"yo", 1}, {U"yas", 1},  {U"yes", 1}, {U"yais", 1},
      {U"yamos", 1}, {u32(U"yó"), 1}};
  return t;
}

// action 1 = may absorb a preceding 'u' after 'g', 2 = plain delete
const std::vector<Suffix>& verb_suffixes() {
  static const std::vector<Suffix> t = {
      {U"aba", 2},    {U"ada", 2},    {U"ida", 2},    {U"ara", 2},
      {U"iera", 2},   {u32(U"ía"), 2},           {u32(U"aría"), 2},
      {u32(U"ería"), 2},         {u32(U"iría"), 2},
      {U"ad", 2},     {U"ed", 2},     {U"id", 2},     {U"ase", 2},
      {U"iese", 2},   {U"aste", 2},   {U"iste", 2},   {U"an", 2},
      {U"aban", 2},   {U"aran", 2},   {U"ieran", 2},  {u32(U"ían"), 2},
      {u32(U"arían"), 2},        {u32(U"erían"), 2},
      {u32(U"irían"), 2},        {U"en", 1},     {U"asen", 2},
      {U"iesen", 2},  {U"aron", 2},   {U"ieron", 2},  {u32(U"arán"), 2},
      {u32(U"erán"), 2},         {u32(U"irán"), 2},
      {U"ado", 2},    {U"ido", 2},    {U"ando", 2},   {U"iendo", 2},
      {U"ar", 2},     {U"er", 2},     {U"ir", 2},     {U"as", 2},
      {U"abas", 2},   {U"adas", 2},   {U"idas", 2},   {U"aras", 2},
      {U"ieras", 2},  {u32(U"ías"), 2},          {u32(U"arías"), 2},
      {u32(U"erías"), 2},        {u32(U"irías"), 2},
      {U"es", 1},     {U"ases", 2},   {U"ieses", 2},  {U"abais", 2},
      {U"arais", 2},  {U"ierais", 2}, {u32(U"íais"), 2},
      {u32(U"aríais"), 2},       {u32(U"eríais"), 2},
      {u32(U"iríais"), 2},       {U"aseis", 2},  {U"ieseis", 2},
      {U"asteis", 2}, {U"isteis", 2}, {u32(U"áis"), 2},
      {u32(U"éis"), 1},          {u32(U"aréis"), 2},
      {u32(U"eréis"), 2},        {u32(U"iréis"), 2},
      {U"ados", 2},   {U"idos", 2},   {U"amos", 2},   {u32(U"ábamos"), 2},
      {u32(U"áramos"), 2},       {u32(U"iéramos"), 2},
      {u32(U"íamos"), 2},        {u32(U"aríamos"), 2},
      {u32(U"eríamos"), 2},      {u32(U"iríamos"), 2},
      {U"emos", 1},   {U"aremos", 2}, {U"eremos", 2}, {U"iremos", 2},
      {u32(U"ásemos"), 2},       {u32(U"iésemos"), 2},
      {U"imos", 2},   {u32(U"arás"), 2},         {u32(U"erás"), 2},
      {u32(U"irás"), 2},         {u32(U"ís"), 2},
      {u32(U"ará"), 2},          {u32(U"erá"), 2},
      {u32(U"irá"), 2},          {u32(U"aré"), 2},
      {u32(U"eré"), 2},          {u32(U"iré"), 2},
      {u32(U"ió"), 2}};
  return t;
}

// action 1 = delete in RV, 2 = 'e'/'é' with possible gu -> g reduction
const std::vector<Suffix>& residual_suffixes() {
  static const std::vector<Suffix> t = {
      {U"a", 1},  {U"e", 2},  {U"o", 1},  {U"os", 1},
      {u32(U"á"), 1}, {u32(U"é"), 2},
      {u32(U"í"), 1}, {u32(U"ó"), 1}};
  return t;
}

bool attached_pronoun(u32& w, const Regions& r) {
  int pi = longest_suffix(w, w.size(), 0, pronouns());
  if (pi < 0) return false;
  const size_t pron_start = w.size() - pronouns()[pi].text.size();
  int gi = longest_suffix(w, pron_start, 0, pronoun_preceders());
  if (gi < 0) return false;
  const Suffix& g = pronoun_preceders()[gi];
  const size_t g_start = pron_start - g.text.size();
  if (g_start < r.pv) return false;
  switch (g.action) {
    case 1: w.replace(g_start, w.size() - g_start, U"iendo"); return true;
    case 2: w.replace(g_start, w.size() - g_start, U"ando"); return true;
    case 3: w.replace(g_start, w.size() - g_start, U"ar"); return true;
    case 4: w.replace(g_start, w.size() - g_start, U"er"); return true;
    case 5: w.replace(g_start, w.size() - g_start, U"ir"); return true;
    case 6: w.erase(pron_start); return true;
    case 7:
      // 'yendo' must follow a 'u' (the u itself may sit outside RV)
      if (g_start == 0 || w[g_start - 1] != U'u') return false;
      w.erase(pron_start);
      return true;
  }
  return false;
}

bool standard_suffix(u32& w, const Regions& r) {
  int si = longest_suffix(w, w.size(), 0, standard_suffixes());
  if (si < 0) return false;
  const Suffix& s = standard_suffixes()[si];
  const size_t start = w.size() - s.text.size();
  auto in_r1 = [&](size_t pos) { return pos >= r.p1; };
  auto in_r2 = [&](size_t pos) { return pos >= r.p2; };
  switch (s.action) {
    case 1:
      if (!in_r2(start)) return false;
      w.erase(start);
      return true;
    case 2: {
      if (!in_r2(start)) return false;
      w.erase(start);
      if (w.size() >= 2 && w.compare(w.size() - 2, 2, U"ic") == 0 &&
          in_r2(w.size() - 2))
        w.erase(w.size() - 2);
      return true;
    }
    case 3:
      if (!in_r2(start)) return false;
      w.replace(start, w.size() - start, U"log");
      return true;
    case 4:
      if (!in_r2(start)) return false;
      w.replace(start, w.size() - start, U"u");
      return true;
    case 5:
      if (!in_r2(start)) return false;
      w.replace(start, w.size() - start, U"ente");
      return true;
    case 6: {  // amente
      if (!in_r1(start)) return false;
      w.erase(start);
      int fi = longest_suffix(w, w.size(), 0, amente_followups());
      if (fi >= 0) {
        const Suffix& f = amente_followups()[fi];
        const size_t fstart = w.size() - f.text.size();
        if (in_r2(fstart)) {
          w.erase(fstart);
          if (f.action == 1 && w.size() >= 2 &&
              w.compare(w.size() - 2, 2, U"at") == 0 && in_r2(w.size() - 2))
            w.erase(w.size() - 2);
        }
      }
      return true;
    }
    case 7: {  // mente
      if (!in_r2(start)) return false;
      w.erase(start);
      int fi = longest_suffix(w, w.size(), 0, mente_followups());
      if (fi >= 0) {
        const size_t fstart = w.size() - mente_followups()[fi].text.size();
        if (in_r2(fstart)) w.erase(fstart);
      }
      return true;
    }
    case 8: {  // idad
      if (!in_r2(start)) return false;
      w.erase(start);
      int fi = longest_suffix(w, w.size(), 0, idad_followups());
      if (fi >= 0) {
        const size_t fstart = w.size() - idad_followups()[fi].text.size();
        if (in_r2(fstart)) w.erase(fstart);
      }
      return true;
    }
    case 9: {  // iva/ivo
      if (!in_r2(start)) return false;
      w.erase(start);
      if (w.size() >= 2 && w.compare(w.size() - 2, 2, U"at") == 0 &&
          in_r2(w.size() - 2))
        w.erase(w.size() - 2);
      return true;
    }
  }
  return false;
}

bool y_verb_suffix(u32& w, const Regions& r) {
  if (r.pv > w.size()) return false;
  int si = longest_suffix(w, w.size(), r.pv, y_verb_suffixes());
  if (si < 0) return false;
  const size_t start = w.size() - y_verb_suffixes()[si].text.size();
  if (start == 0 || w[start - 1] != U'u') return false;
  w.erase(start);
  return true;
}

bool verb_suffix(u32& w, const Regions& r) {
  if (r.pv > w.size()) return false;
  int si = longest_suffix(w, w.size(), r.pv, verb_suffixes());
  if (si < 0) return false;
  const Suffix& s = verb_suffixes()[si];
  size_t start = w.size() - s.text.size();
  if (s.action == 1 && start >= 2 && w[start - 1] == U'u' && w[start - 2] == U'g')
    --start;  // 'gu' before en/es/éis/emos: the u goes too
  w.erase(start);
  return true;
}

bool residual_suffix(u32& w, const Regions& r) {
  int si = longest_suffix(w, w.size(), 0, residual_suffixes());
  if (si < 0) return false;
  const Suffix& s = residual_suffixes()[si];
  const size_t start = w.size() - s.text.size();
  if (start < r.pv) return false;
  w.erase(start);
  if (s.action == 2 && w.size() >= 2 && w[w.size() - 1] == U'u' &&
      w[w.size() - 2] == U'g' && w.size() - 1 >= r.pv)
    w.erase(w.size() - 1);
  return true;
}

void postlude(u32& w) {
  for (auto& c : w) {
    switch (c) {
      case A_ACUTE: c = U'a'; break;
      case E_ACUTE: c = U'e'; break;
      case I_ACUTE: c = U'i'; break;
      case O_ACUTE: c = U'o'; break;
      case U_ACUTE: c = U'u'; break;
      default: break;
    }
  }
}

}  // namespace

std::string spanish_stem(std::string_view token_utf8) {
  u32 w = utf8_decode(token_utf8);
  if (w.empty()) return std::string();
  const Regions r = mark_regions(w);
  attached_pronoun(w, r);
  if (!standard_suffix(w, r) && !y_verb_suffix(w, r)) verb_suffix(w, r);
  residual_suffix(w, r);
  postlude(w);
  return utf8_encode(w);
}

}  // namespace polarity
