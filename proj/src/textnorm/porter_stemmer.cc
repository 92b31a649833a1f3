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

#include "kpaug/textnorm/porter_stemmer.h"

#include <algorithm>

#include "kpaug/textnorm/tokenizer.h"

namespace kpaug {
namespace {

// Working state for a single word. Indices are inclusive: the current stem
// is b_[0..k_], and j_ marks the end of the stem preceding a matched suffix.
class PorterStemmer {
 public:
  explicit PorterStemmer(std::string_view word)
      : b_(word), k_(static_cast<int>(word.size()) - 1) {}

  std::string Run() {
    if (k_ <= 1) return b_;
    Step1ab();
    if (k_ > 0) {
      Step1c();
      Step2();
      Step3();
      Step4();
      Step5();
    }
    return b_.substr(0, k_ + 1);
  }

 private:
  bool IsConsonant(int i) const {
    switch (b_[i]) {
      case 'a':
      case 'e':
      case 'i':
      case 'o':
      case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !IsConsonant(i - 1);
      default:
        return true;
    }
  }

  // Number of VC sequences in b_[0..j_].
  int Measure() const {
    int n = 0;
    int i = 0;
    for (;;) {
      if (i > j_) return n;
      if (!IsConsonant(i)) break;
      ++i;
    }
    ++i;
    for (;;) {
      for (;;) {
        if (i > j_) return n;
        if (IsConsonant(i)) break;
        ++i;
      }
      ++i;
      ++n;
      for (;;) {
        if (i > j_) return n;
        if (!IsConsonant(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool VowelInStem() const {
    for (int i = 0; i <= j_; ++i) {
      if (!IsConsonant(i)) return true;
    }
    return false;
  }

  bool DoubleConsonant(int j) const {
    if (j < 1) return false;
    if (b_[j] != b_[j - 1]) return false;
    return IsConsonant(j);
  }

  // consonant-vowel-consonant ending at i, where the last is not w, x or y.
  bool Cvc(int i) const {
    if (i < 2 || !IsConsonant(i) || IsConsonant(i - 1) ||
        !IsConsonant(i - 2)) {
      return false;
    }
    const char ch = b_[i];
    return ch != 'w' && ch != 'x' && ch != 'y';
  }

  bool Ends(std::string_view suffix) {
    const int length = static_cast<int>(suffix.size());
    if (length > k_ + 1) return false;
    if (std::string_view(b_).substr(k_ - length + 1, length) != suffix) {
      return false;
    }
    j_ = k_ - length;
    return true;
  }

  void SetTo(std::string_view s) {
    b_.replace(j_ + 1, b_.size() - (j_ + 1), s);
    k_ = j_ + static_cast<int>(s.size());
  }

  void ReplaceIfMeasured(std::string_view s) {
    if (Measure() > 0) SetTo(s);
  }

  void Truncate() { b_.resize(k_ + 1); }

  void Step1ab() {
    if (b_[k_] == 's') {
      if (Ends("sses")) {
        k_ -= 2;
      } else if (Ends("ies")) {
        SetTo("i");
      } else if (b_[k_ - 1] != 's') {
        --k_;
      }
    }
    Truncate();
    if (Ends("eed")) {
      if (Measure() > 0) --k_;
    } else if ((Ends("ed") || Ends("ing")) && VowelInStem()) {
      k_ = j_;
      Truncate();
      if (Ends("at")) {
        SetTo("ate");
      } else if (Ends("bl")) {
        SetTo("ble");
      } else if (Ends("iz")) {
        SetTo("ize");
      } else if (DoubleConsonant(k_)) {
        --k_;
        const char ch = b_[k_];
        if (ch == 'l' || ch == 's' || ch == 'z') ++k_;
      } else {
        j_ = k_;
        if (Measure() == 1 && Cvc(k_)) SetTo("e");
      }
    }
    Truncate();
  }

  void Step1c() {
    if (Ends("y") && VowelInStem()) b_[k_] = 'i';
  }

  void Step2() {
    switch (b_[k_ - 1]) {
      case 'a':
        if (Ends("ational")) { ReplaceIfMeasured("ate"); break; }
        if (Ends("tional")) { ReplaceIfMeasured("tion"); break; }
        break;
      case 'c':
        if (Ends("enci")) { ReplaceIfMeasured("ence"); break; }
        if (Ends("anci")) { ReplaceIfMeasured("ance"); break; }
        break;
      case 'e':
        if (Ends("izer")) { ReplaceIfMeasured("ize"); break; }
        break;
      case 'l':
        if (Ends("bli")) { ReplaceIfMeasured("ble"); break; }
        if (Ends("alli")) { ReplaceIfMeasured("al"); break; }
        if (Ends("entli")) { ReplaceIfMeasured("ent"); break; }
        if (Ends("eli")) { ReplaceIfMeasured("e"); break; }
        if (Ends("ousli")) { ReplaceIfMeasured("ous"); break; }
        break;
      case 'o':
        if (Ends("ization")) { ReplaceIfMeasured("ize"); break; }
        if (Ends("ation")) { ReplaceIfMeasured("ate"); break; }
        if (Ends("ator")) { ReplaceIfMeasured("ate"); break; }
        break;
      case 's':
        if (Ends("alism")) { ReplaceIfMeasured("al"); break; }
        if (Ends("iveness")) { ReplaceIfMeasured("ive"); break; }
        if (Ends("fulness")) { ReplaceIfMeasured("ful"); break; }
        if (Ends("ousness")) { ReplaceIfMeasured("ous"); break; }
        break;
      case 't':
        if (Ends("aliti")) { ReplaceIfMeasured("al"); break; }
        if (Ends("iviti")) { ReplaceIfMeasured("ive"); break; }
        if (Ends("biliti")) { ReplaceIfMeasured("ble"); break; }
        break;
      case 'g':
        if (Ends("logi")) { ReplaceIfMeasured("log"); break; }
        break;
    }
  }

  void Step3() {
    switch (b_[k_]) {
      case 'e':
        if (Ends("icate")) { ReplaceIfMeasured("ic"); break; }
        if (Ends("ative")) { ReplaceIfMeasured(""); break; }
        if (Ends("alize")) { ReplaceIfMeasured("al"); break; }
        break;
      case 'i':
        if (Ends("iciti")) { ReplaceIfMeasured("ic"); break; }
        break;
      case 'l':
        if (Ends("ical")) { ReplaceIfMeasured("ic"); break; }
        if (Ends("ful")) { ReplaceIfMeasured(""); break; }
        break;
      case 's':
        if (Ends("ness")) { ReplaceIfMeasured(""); break; }
        break;
    }
  }

  void Step4() {
    switch (b_[k_ - 1]) {
      case 'a':
        if (Ends("al")) break;
        return;
      case 'c':
        if (Ends("ance")) break;
        if (Ends("ence")) break;
        return;
      case 'e':
        if (Ends("er")) break;
        return;
      case 'i':
        if (Ends("ic")) break;
        return;
      case 'l':
        if (Ends("able")) break;
        if (Ends("ible")) break;
        return;
      case 'n':
        if (Ends("ant")) break;
        if (Ends("ement")) break;
        if (Ends("ment")) break;
        if (Ends("ent")) break;
        return;
      case 'o':
        if (Ends("ion") && j_ >= 0 && (b_[j_] == 's' || b_[j_] == 't')) break;
        if (Ends("ou")) break;
        return;
      case 's':
        if (Ends("ism")) break;
        return;
      case 't':
        if (Ends("ate")) break;
        if (Ends("iti")) break;
        return;
      case 'u':
        if (Ends("ous")) break;
        return;
      case 'v':
        if (Ends("ive")) break;
        return;
      case 'z':
        if (Ends("ize")) break;
        return;
      default:
        return;
    }
    if (Measure() > 1) {
      k_ = j_;
      Truncate();
    }
  }

  void Step5() {
    j_ = k_;
    if (b_[k_] == 'e') {
      const int m = Measure();
      if (m > 1 || (m == 1 && !Cvc(k_ - 1))) --k_;
    }
    // Measure() still spans the pre-'e'-removal stem here.
    if (b_[k_] == 'l' && DoubleConsonant(k_) && Measure() > 1) --k_;
    Truncate();
  }

  std::string b_;
  int k_;
  int j_ = 0;
};

bool IsLowerAlpha(std::string_view word) {
  return !word.empty() && std::all_of(word.begin(), word.end(), [](char c) {
    return c >= 'a' && c <= 'z';
  });
}

}  // namespace

std::string Stem(std::string_view word) {
  if (!IsLowerAlpha(word)) return std::string(word);
  return PorterStemmer(word).Run();
}

std::vector<std::string> StemTokens(std::span<const Token> tokens) {
  std::vector<std::string> stems;
  stems.reserve(tokens.size());
  for (const Token& token : tokens) {
    stems.push_back(token.kind == TokenKind::kWord ? Stem(token.surface)
                                                   : token.surface);
  }
  return stems;
}

std::string StemPhrase(std::string_view phrase, const SpecialTokens& special) {
  std::string out;
  for (const std::string& stem : StemTokens(Tokenize(phrase, special))) {
    if (!out.empty()) out.push_back(' ');
    out += stem;
  }
  return out;
}

}  // namespace kpaug
