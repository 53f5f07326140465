#include "artin/word.hpp"

#include <algorithm>
#include <ostream>

#include "artin/error.hpp"
#include "artin/trace.hpp"

namespace artin {

Word::Word(std::string letters) : s_(std::move(letters)) {
  for (char c : s_) {
    if (!letter::valid(c)) throw ParseError(std::string("invalid letter '") + c + "' in word");
  }
}

Word Word::substr(std::size_t pos, std::size_t len) const { return Word(s_.substr(pos, len), Unchecked{}); }

Word Word::inverse() const {
  std::string r(s_.rbegin(), s_.rend());
  for (char& c : r) c = letter::inverse(c);
  return Word(std::move(r), Unchecked{});
}

GenSet Word::alphabet() const {
  GenSet s = 0;
  for (char c : s_) s |= gen_bit(letter::name(c));
  return s;
}

bool Word::is_positive() const { return std::all_of(s_.begin(), s_.end(), letter::positive); }

bool Word::is_negative() const {
  return std::none_of(s_.begin(), s_.end(), letter::positive);
}

bool Word::is_freely_reduced() const {
  for (std::size_t i = 0; i + 1 < s_.size(); ++i) {
    if (s_[i + 1] == letter::inverse(s_[i])) return false;
  }
  return true;
}

void Word::push_back(char c) {
  if (!letter::valid(c)) throw ParseError(std::string("invalid letter '") + c + "' in word");
  s_.push_back(c);
}

std::ostream& operator<<(std::ostream& out, const Word& w) { return out << w.str(); }

bool over(const Word& w, GenSet s) { return (w.alphabet() & ~s) == 0; }

void check_alphabet(const Presentation& p, const Word& w) {
  for (char c : w) {
    if (!p.contains(letter::name(c))) throw ParseError(std::string("letter '") + c + "' is not in the presentation");
  }
}

Word parse_word(const Presentation& p, std::string_view text) {
  Word w{std::string(text == "-" ? std::string_view{} : text)};
  check_alphabet(p, w);
  return w;
}

Word alternating(char x, char y, std::size_t j, Side side) {
  if (x == y) throw PreconditionError("alternating: x = y");
  std::string s(j, x);
  if (side == Side::Left) {
    for (std::size_t i = 1; i < j; i += 2) s[i] = y;
  } else {
    for (std::size_t i = 0; i < j; ++i) {
      if ((j - 1 - i) % 2 == 1) s[i] = y;
    }
  }
  return unchecked_word(std::move(s));
}

namespace {

// Longest factor of one sign with no two adjacent equal letters.
std::size_t longest_square_free(const Word& w, bool want_positive) {
  std::size_t best = 0, run = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (letter::positive(w[i]) != want_positive) {
      run = 0;
      continue;
    }
    run = (run > 0 && w[i - 1] != w[i]) ? run + 1 : 1;
    best = std::max(best, run);
  }
  return best;
}

}  // namespace

std::size_t p_tilde(const Word& w) { return longest_square_free(w, true); }
std::size_t n_tilde(const Word& w) { return longest_square_free(w, false); }

bool is_square_free(const Word& w) {
  if (!w.is_positive()) throw PreconditionError("is_square_free: word is not positive");
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == w[i + 1]) return false;
  }
  return true;
}

std::pair<Word, Trace> free_reduce(const Word& w) {
  Trace tr;
  tr.start = w;
  std::string stack;
  stack.reserve(w.size());
  for (char c : w) {
    if (!stack.empty() && stack.back() == letter::inverse(c)) {
      tr.moves.push_back(Move::remove(stack.size() - 1, stack.back()));
      stack.pop_back();
    } else {
      stack.push_back(c);
    }
  }
  tr.end = unchecked_word(stack);
  return {tr.end, std::move(tr)};
}

}  // namespace artin
