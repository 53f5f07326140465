#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "artin/presentation.hpp"
#include "artin/word.hpp"

namespace artin::testing {

inline Presentation pres(const std::string& text) { return parse_presentation(text); }

inline Presentation dihedral(int m) { return pres("gens: s t\nm s t " + std::to_string(m) + "\n"); }
inline Presentation triangle(int a, int b, int c) {
  return pres("gens: s t u\nm s t " + std::to_string(a) + "\nm t u " + std::to_string(b) + "\nm s u " +
              std::to_string(c) + "\n");
}
// m(a,b)=2, m(a,c)=3, m(b,c)=inf
inline Presentation sl_mixed() { return pres("gens: a b c\nm a b 2\nm a c 3\n"); }
// m(a,b)=3, m(a,c)=m(b,c)=inf
inline Presentation sl_free() { return pres("gens: a b c\nm a b 3\n"); }

inline std::vector<char> signed_letters(const Presentation& p) {
  std::vector<char> out;
  for (char g : p.generators()) {
    out.push_back(g);
    out.push_back(letter::inverse(g));
  }
  return out;
}

// Uniform freely reduced word of the given length.
inline Word random_reduced(std::mt19937_64& rng, const std::vector<char>& letters, std::size_t len) {
  std::string s;
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  while (s.size() < len) {
    char c = letters[pick(rng)];
    if (!s.empty() && s.back() == letter::inverse(c)) continue;
    s.push_back(c);
  }
  return unchecked_word(s);
}

// Visits every freely reduced word with length in [0, max_len].
inline void for_each_reduced(const std::vector<char>& letters, std::size_t max_len,
                             const std::function<void(const Word&)>& fn) {
  std::string cur;
  std::function<void()> rec = [&] {
    fn(unchecked_word(cur));
    if (cur.size() == max_len) return;
    for (char c : letters) {
      if (!cur.empty() && cur.back() == letter::inverse(c)) continue;
      cur.push_back(c);
      rec();
      cur.pop_back();
    }
  };
  rec();
}

}  // namespace artin::testing
