#pragma once

#include <string>
#include <vector>

#include "coverkit/perm.hpp"

namespace coverkit {

// A word over the generators of some presentation: +k is generator k
// (1-based), -k its inverse. Words are kept freely reduced.
using Word = std::vector<int>;

Word free_reduce(Word w);
Word invert_word(const Word& w);
Word concat(const Word& a, const Word& b);
Word cyclic_reduce(Word w);

// Evaluate a word against permutation images of the generators, folding the
// word product left to right. The degree argument covers the empty word.
Permutation evaluate_word(const Word& w, const std::vector<Permutation>& images, int degree);

struct FpGroup {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  int rank() const { return static_cast<int>(generators.size()); }
  void validate() const;
};

// Text form: "gens: a b; rels: a b A B, b b b". Generator names are
// lowercase identifiers; a token with its first letter upcased is the
// inverse. Relators are comma-separated.
FpGroup parse_fpgroup(const std::string& text);
std::string fpgroup_str(const FpGroup& g);

Word parse_word(const FpGroup& g, const std::string& text);
std::string word_str(const FpGroup& g, const Word& w);

}  // namespace coverkit
