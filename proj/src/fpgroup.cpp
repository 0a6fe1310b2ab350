#include "coverkit/fpgroup.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace coverkit {

Word free_reduce(Word w) {
  Word out;
  for (int letter : w) {
    if (letter == 0) throw Error("word: zero letter");
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

Word invert_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& letter : out) letter = -letter;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(std::move(out));
}

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  std::size_t i = 0, j = w.size();
  while (j - i >= 2 && w[i] == -w[j - 1]) {
    ++i;
    --j;
  }
  return Word(w.begin() + i, w.begin() + j);
}

Permutation evaluate_word(const Word& w, const std::vector<Permutation>& images, int degree) {
  Permutation acc = Permutation::identity(degree);
  for (int letter : w) {
    int k = letter > 0 ? letter : -letter;
    if (k < 1 || k > static_cast<int>(images.size()))
      throw Error("evaluate_word: letter " + std::to_string(letter) + " out of range");
    acc = letter > 0 ? acc * images[k - 1] : acc * images[k - 1].inverse();
  }
  return acc;
}

namespace {

bool valid_name(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::islower(static_cast<unsigned char>(c)) ||
           std::isdigit(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

void FpGroup::validate() const {
  std::set<std::string> seen;
  for (const auto& name : generators) {
    if (!valid_name(name))
      throw Error("FpGroup: bad generator name \"" + name + "\"");
    if (!seen.insert(name).second)
      throw Error("FpGroup: duplicate generator \"" + name + "\"");
  }
  for (const auto& r : relators) {
    for (int letter : r) {
      int k = letter > 0 ? letter : -letter;
      if (k < 1 || k > rank())
        throw Error("FpGroup: relator letter " + std::to_string(letter) + " out of range");
    }
    if (free_reduce(r) != r) throw Error("FpGroup: relator not freely reduced");
  }
}

namespace {

std::vector<std::string> split_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

int letter_of_token(const FpGroup& g, const std::string& tok) {
  bool inv = std::isupper(static_cast<unsigned char>(tok[0])) != 0;
  std::string name = tok;
  name[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(name[0])));
  for (std::size_t k = 0; k < g.generators.size(); ++k)
    if (g.generators[k] == name) return inv ? -(static_cast<int>(k) + 1) : static_cast<int>(k) + 1;
  throw Error("word: unknown generator \"" + tok + "\"");
}

}  // namespace

FpGroup parse_fpgroup(const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos) throw Error("parse_fpgroup: missing ';'");
  std::string gens_part = text.substr(0, semi);
  std::string rels_part = text.substr(semi + 1);

  auto expect_prefix = [](std::string& s, const std::string& prefix) {
    auto pos = s.find(prefix);
    if (pos == std::string::npos ||
        s.find_first_not_of(" \t\n") != pos)
      throw Error("parse_fpgroup: expected \"" + prefix + "\"");
    s = s.substr(pos + prefix.size());
  };
  expect_prefix(gens_part, "gens:");
  expect_prefix(rels_part, "rels:");

  FpGroup g;
  g.generators = split_tokens(gens_part);
  std::string piece;
  std::istringstream rs(rels_part);
  while (std::getline(rs, piece, ',')) {
    Word w;
    for (const auto& tok : split_tokens(piece)) w.push_back(letter_of_token(g, tok));
    if (!piece.empty() && !w.empty()) g.relators.push_back(free_reduce(std::move(w)));
  }
  g.validate();
  return g;
}

std::string fpgroup_str(const FpGroup& g) {
  std::ostringstream os;
  os << "gens:";
  for (const auto& name : g.generators) os << ' ' << name;
  os << "; rels:";
  for (std::size_t i = 0; i < g.relators.size(); ++i) {
    os << (i ? "," : "") << ' ' << word_str(g, g.relators[i]);
  }
  return os.str();
}

Word parse_word(const FpGroup& g, const std::string& text) {
  Word w;
  for (const auto& tok : split_tokens(text)) w.push_back(letter_of_token(g, tok));
  return free_reduce(std::move(w));
}

std::string word_str(const FpGroup& g, const Word& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    int k = w[i] > 0 ? w[i] : -w[i];
    std::string name = g.generators[k - 1];
    if (w[i] < 0) name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    os << name;
  }
  return os.str();
}

}  // namespace coverkit
