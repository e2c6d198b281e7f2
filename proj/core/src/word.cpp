#include "stallings/word.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace stallings {

Word reduce_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int letter : w) {
    if (letter == 0) throw std::invalid_argument("word letter must be nonzero");
    if (!out.empty() && out.back() == -letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

Word concat_reduced(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return reduce_word(out);
}

Word conjugate_word(const Word& g, const Word& w) {
  return concat_reduced(concat_reduced(g, w), inverse_word(g));
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == -w[i + 1]) return false;
  }
  return std::find(w.begin(), w.end(), 0) == w.end();
}

Word parse_word(const std::string& text, int rank) {
  if (rank < 1 || rank > 26) {
    throw std::invalid_argument("rank must be between 1 and 26");
  }
  Word letters;
  letters.reserve(text.size());
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    int index;
    if (c >= 'a' && c <= 'z') {
      index = c - 'a' + 1;
    } else if (c >= 'A' && c <= 'Z') {
      index = -(c - 'A' + 1);
    } else {
      throw std::invalid_argument(std::string("invalid word character: ") + c);
    }
    if (std::abs(index) > rank) {
      throw std::invalid_argument(std::string("letter out of range for rank: ") + c);
    }
    letters.push_back(index);
  }
  return reduce_word(letters);
}

std::string word_to_string(const Word& w) {
  std::string out;
  out.reserve(w.size());
  for (int letter : w) {
    if (letter > 0 && letter <= 26) {
      out.push_back(static_cast<char>('a' + letter - 1));
    } else if (letter < 0 && letter >= -26) {
      out.push_back(static_cast<char>('A' - letter - 1));
    } else {
      throw std::invalid_argument("letter not representable in a..z alphabet");
    }
  }
  return out;
}

Word apply_substitution(const Word& w, const Substitution& s) {
  Word out;
  for (int letter : w) {
    int index = std::abs(letter);
    if (index < 1 || index > s.rank()) {
      throw std::invalid_argument("word letter outside substitution rank");
    }
    const Word& image = s.images[index - 1];
    if (letter > 0) {
      out.insert(out.end(), image.begin(), image.end());
    } else {
      Word inv = inverse_word(image);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return reduce_word(out);
}

std::vector<Word> apply_substitution(const std::vector<Word>& gens,
                                     const Substitution& s) {
  std::vector<Word> out;
  out.reserve(gens.size());
  for (const Word& g : gens) out.push_back(apply_substitution(g, s));
  return out;
}

Substitution compose(const Substitution& outer, const Substitution& inner) {
  Substitution result;
  result.images.reserve(inner.images.size());
  for (const Word& img : inner.images) {
    result.images.push_back(apply_substitution(img, outer));
  }
  return result;
}

Substitution identity_substitution(int rank) {
  Substitution s;
  for (int i = 1; i <= rank; ++i) s.images.push_back(Word{i});
  return s;
}

}  // namespace stallings
