// Copyright 2026 The Kpaug Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kpaug/textnorm/normalizer.h"

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

namespace kpaug {
namespace {

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)); }
bool IsAlpha(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool IsDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }
bool IsAlnum(char c) { return std::isalnum(static_cast<unsigned char>(c)); }
bool IsHex(char c) { return std::isxdigit(static_cast<unsigned char>(c)); }

struct Piece {
  std::string text;
  bool marker = false;
};

// Cuts `text` at every special-marker occurrence.
std::vector<Piece> SplitAtMarkers(std::string_view text,
                                  const SpecialTokens& special) {
  std::vector<Piece> pieces;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t best = std::string_view::npos;
    size_t best_len = 0;
    for (const std::string* m :
         {&special.delimiter, &special.mask, &special.digit}) {
      if (m->empty()) continue;
      const size_t hit = text.find(*m, pos);
      if (hit < best || (hit == best && m->size() > best_len)) {
        best = hit;
        best_len = m->size();
      }
    }
    if (best == std::string_view::npos) {
      if (pos < text.size()) pieces.push_back({std::string(text.substr(pos))});
      break;
    }
    if (best > pos) pieces.push_back({std::string(text.substr(pos, best - pos))});
    pieces.push_back({std::string(text.substr(best, best_len)), true});
    pos = best + best_len;
  }
  return pieces;
}

// Control characters and backslash escapes become spaces.
std::string StripEscapes(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 0x20 || c == 0x7f) {
      out.push_back(' ');
      continue;
    }
    if (c == '\\' && i + 1 < s.size()) {
      const char next = s[i + 1];
      if (std::string_view("nrtfvab0").find(next) != std::string_view::npos) {
        out.push_back(' ');
        ++i;
        continue;
      }
      if (next == 'u' && i + 5 < s.size() && IsHex(s[i + 2]) &&
          IsHex(s[i + 3]) && IsHex(s[i + 4]) && IsHex(s[i + 5])) {
        out.push_back(' ');
        i += 5;
        continue;
      }
      if (next == 'x' && i + 3 < s.size() && IsHex(s[i + 2]) &&
          IsHex(s[i + 3])) {
        out.push_back(' ');
        i += 3;
        continue;
      }
    }
    out.push_back(static_cast<char>(c));
  }
  return out;
}

// Length of an HTML construct starting at s[i], or 0.
size_t MatchHtml(std::string_view s, size_t i) {
  if (s[i] == '<') {
    if (s.substr(i, 4) == "<!--") {
      const size_t close = s.find("-->", i + 4);
      if (close != std::string_view::npos) return close + 3 - i;
    }
    if (i + 1 >= s.size()) return 0;
    const char first = s[i + 1];
    if (!IsAlpha(first) && first != '/' && first != '!' && first != '?') {
      return 0;
    }
    for (size_t j = i + 1; j < s.size(); ++j) {
      if (s[j] == '<') return 0;
      if (s[j] == '>') return j + 1 - i;
    }
    return 0;
  }
  if (s[i] == '&') {
    size_t j = i + 1;
    if (j < s.size() && s[j] == '#') {
      ++j;
      const bool hex = j < s.size() && (s[j] == 'x' || s[j] == 'X');
      if (hex) ++j;
      const size_t digits_begin = j;
      while (j < s.size() && (hex ? IsHex(s[j]) : IsDigit(s[j]))) ++j;
      if (j > digits_begin && j < s.size() && s[j] == ';') return j + 1 - i;
      return 0;
    }
    const size_t name_begin = j;
    while (j < s.size() && IsAlnum(s[j]) && j - name_begin < 10) ++j;
    if (j - name_begin >= 2 && j < s.size() && s[j] == ';' &&
        IsAlpha(s[name_begin])) {
      return j + 1 - i;
    }
  }
  return 0;
}

std::string StripHtml(std::string text) {
  for (;;) {
    std::string out;
    out.reserve(text.size());
    bool changed = false;
    for (size_t i = 0; i < text.size();) {
      const size_t len = MatchHtml(text, i);
      if (len > 0) {
        out.push_back(' ');
        i += len;
        changed = true;
      } else {
        out.push_back(text[i++]);
      }
    }
    if (!changed) return out;
    text = std::move(out);
  }
}

bool LooksLikeUrl(std::string_view chunk) {
  if (chunk.find("://") != std::string_view::npos) return true;
  size_t b = 0;
  while (b < chunk.size() && IsAsciiPunct(chunk[b])) ++b;
  std::string head(chunk.substr(b, 4));
  for (char& c : head) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return head == "www." && chunk.size() > b + 4;
}

bool LooksLikeEmail(std::string_view chunk) {
  const size_t at = chunk.find('@');
  if (at == std::string_view::npos || at == 0) return false;
  if (!IsAlnum(chunk[at - 1])) return false;
  const size_t dot = chunk.find('.', at + 1);
  return dot != std::string_view::npos && dot > at + 1 &&
         dot + 1 < chunk.size() && IsAlnum(chunk[dot + 1]);
}

// Lowercases a marker-free piece and replaces its numeric core.
std::string NormalizeWordPiece(std::string_view piece,
                               const SpecialTokens& special) {
  std::string lower(piece);
  for (char& c : lower) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  size_t begin = 0;
  size_t end = lower.size();
  while (begin < end && IsAsciiPunct(lower[begin])) ++begin;
  while (end > begin && IsAsciiPunct(lower[end - 1])) --end;
  const bool numeric = std::any_of(lower.begin() + begin, lower.begin() + end,
                                   [](char c) { return IsDigit(c); });
  if (!numeric) return lower;
  return lower.substr(0, begin) + special.digit + lower.substr(end);
}

std::string NormalizeOnce(std::string_view raw, const SpecialTokens& special) {
  std::vector<Piece> pieces = SplitAtMarkers(raw, special);
  for (Piece& piece : pieces) {
    if (piece.marker) continue;
    for (char& c : piece.text) {
      c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    piece.text = StripHtml(StripEscapes(piece.text));
  }

  // Regroup into whitespace-delimited chunks; a chunk may span several
  // pieces when markers are glued to words.
  std::vector<std::vector<Piece>> chunks;
  bool open = false;
  for (const Piece& piece : pieces) {
    if (piece.marker) {
      if (!open) chunks.emplace_back();
      chunks.back().push_back(piece);
      open = true;
      continue;
    }
    const std::string& t = piece.text;
    size_t i = 0;
    while (i < t.size()) {
      if (IsSpace(t[i])) {
        open = false;
        ++i;
        continue;
      }
      size_t j = i;
      while (j < t.size() && !IsSpace(t[j])) ++j;
      if (!open) chunks.emplace_back();
      chunks.back().push_back({t.substr(i, j - i), false});
      open = j == t.size();
      i = j;
    }
  }

  std::string out;
  for (const std::vector<Piece>& chunk : chunks) {
    std::string whole;
    for (const Piece& p : chunk) whole += p.text;
    if (LooksLikeUrl(whole) || LooksLikeEmail(whole)) continue;
    std::string normalized;
    for (const Piece& p : chunk) {
      normalized += p.marker ? p.text : NormalizeWordPiece(p.text, special);
    }
    if (normalized.empty()) continue;
    if (!out.empty()) out.push_back(' ');
    out += normalized;
  }
  return out;
}

}  // namespace

std::string Normalize(std::string_view raw, const SpecialTokens& special) {
  // Dropping a chunk can fuse what was left around it into a new tag or URL,
  // so passes repeat until nothing changes.
  std::string current = NormalizeOnce(raw, special);
  for (;;) {
    std::string next = NormalizeOnce(current, special);
    if (next == current) return current;
    current = std::move(next);
  }
}

}  // namespace kpaug
