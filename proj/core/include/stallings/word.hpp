#ifndef STALLINGS_WORD_HPP
#define STALLINGS_WORD_HPP

#include <string>
#include <vector>

namespace stallings {

// A word in a free group of rank r: a sequence of signed generator indices
// in {±1, ..., ±r}, negative meaning the inverse letter.  All words handed
// around by the library are freely reduced; the empty word is the identity.
using Word = std::vector<int>;

// Free reduction: repeatedly delete adjacent x·x⁻¹ factors.
Word reduce_word(const Word& w);

Word inverse_word(const Word& w);

// reduce(a·b)
Word concat_reduced(const Word& a, const Word& b);

// reduce(g·w·g⁻¹)
Word conjugate_word(const Word& g, const Word& w);

bool is_reduced(const Word& w);

// Letters: 'a'..'z' are generators 1..26, 'A'..'Z' their inverses.
// Only the first `rank` letters are admitted.  The result is freely reduced.
// Throws std::invalid_argument on a letter out of range.
Word parse_word(const std::string& text, int rank);

std::string word_to_string(const Word& w);

// Mapping of each generator 1..r to a word (a "realization" when the images
// form a basis).  images[i-1] is the image of generator i.
struct Substitution {
  std::vector<Word> images;

  int rank() const { return static_cast<int>(images.size()); }
};

// Letterwise image of w, freely reduced.  Generators of w must lie within
// the substitution's rank.
Word apply_substitution(const Word& w, const Substitution& s);
std::vector<Word> apply_substitution(const std::vector<Word>& gens,
                                     const Substitution& s);

// (outer ∘ inner): first apply inner, then outer.
Substitution compose(const Substitution& outer, const Substitution& inner);

Substitution identity_substitution(int rank);

}  // namespace stallings

#endif
