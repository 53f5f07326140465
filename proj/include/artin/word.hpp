#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "artin/presentation.hpp"

namespace artin {

// Letters are chars: lowercase is a generator, uppercase its inverse.
namespace letter {
inline constexpr bool positive(char c) { return c >= 'a' && c <= 'z'; }
inline constexpr char name(char c) { return positive(c) ? c : static_cast<char>(c - 'A' + 'a'); }
inline constexpr char inverse(char c) {
  return positive(c) ? static_cast<char>(c - 'a' + 'A') : static_cast<char>(c - 'A' + 'a');
}
inline constexpr int sign(char c) { return positive(c) ? 1 : -1; }
inline constexpr char with_sign(char g, int s) { return s > 0 ? name(g) : inverse(name(g)); }
inline constexpr bool valid(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
}  // namespace letter

class Word {
 public:
  Word() = default;
  // Throws ParseError on characters other than ASCII letters.
  explicit Word(std::string letters);
  explicit Word(const char* letters) : Word(std::string(letters)) {}

  std::size_t size() const { return s_.size(); }
  bool empty() const { return s_.empty(); }
  char operator[](std::size_t i) const { return s_[i]; }
  char front() const { return s_.front(); }
  char back() const { return s_.back(); }
  const std::string& str() const { return s_; }
  auto begin() const { return s_.begin(); }
  auto end() const { return s_.end(); }

  Word substr(std::size_t pos, std::size_t len = std::string::npos) const;
  Word inverse() const;
  GenSet alphabet() const;

  bool is_positive() const;
  bool is_negative() const;
  bool is_signed() const { return is_positive() || is_negative(); }
  bool is_unsigned() const { return !is_signed(); }
  bool is_freely_reduced() const;

  void push_back(char c);
  Word& operator+=(const Word& o) {
    s_ += o.s_;
    return *this;
  }
  friend Word operator+(Word a, const Word& b) { return a += b; }

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  struct Unchecked {};
  Word(std::string s, Unchecked) : s_(std::move(s)) {}
  friend Word unchecked_word(std::string s);
  std::string s_;
};

// Builds a word from a string already known to contain only letters.
inline Word unchecked_word(std::string s) { return Word(std::move(s), Word::Unchecked{}); }

std::ostream& operator<<(std::ostream& out, const Word& w);

// True when every letter of w belongs to s, up to sign.
bool over(const Word& w, GenSet s);
// Throws ParseError unless every letter is a generator of p or its inverse.
void check_alphabet(const Presentation& p, const Word& w);
Word parse_word(const Presentation& p, std::string_view text);

enum class Side { Left, Right };

// Left: [x,y,j> = xyx... starting with x.  Right: <y,x,j] = ...yx ending with x.
Word alternating(char x, char y, std::size_t j, Side side);

std::size_t p_tilde(const Word& w);
std::size_t n_tilde(const Word& w);
bool is_square_free(const Word& w);

struct Trace;
// Leftmost-first free reduction together with its type-0 moves.
std::pair<Word, Trace> free_reduce(const Word& w);

}  // namespace artin

template <>
struct std::hash<artin::Word> {
  std::size_t operator()(const artin::Word& w) const noexcept { return std::hash<std::string>{}(w.str()); }
};
