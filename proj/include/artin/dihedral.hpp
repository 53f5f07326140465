#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "artin/presentation.hpp"
#include "artin/trace.hpp"
#include "artin/word.hpp"

namespace artin {

// Two generators x, y with finite label m >= 2.
class DihedralContext {
 public:
  DihedralContext(char x, char y, int m);

  char x() const { return x_; }
  char y() const { return y_; }
  int m() const { return m_; }
  std::size_t um() const { return static_cast<std::size_t>(m_); }

  char other(char g) const { return letter::name(g) == x_ ? y_ : x_; }
  // The permutation induced by conjugation with Delta, applied letterwise (signs kept).
  char delta(char l) const;
  Word delta(const Word& w) const;
  Word delta_word() const { return alternating(x_, y_, um(), Side::Left); }
  bool covers(const Word& w) const { return over(w, gen_bit(x_) | gen_bit(y_)); }
  Presentation presentation() const;

 private:
  char x_, y_;
  int m_;
};

std::size_t p_value(const DihedralContext& ctx, const Word& w);
std::size_t n_value(const DihedralContext& ctx, const Word& w);
bool in_omega(const DihedralContext& ctx, const Word& w);

struct StarDecomposition {
  std::vector<Word> factors;
};

StarDecomposition star_decomposition(const DihedralContext& ctx, const Word& w);
std::size_t inversions(const StarDecomposition& sd);
std::vector<std::pair<Move, Word>> enumerate_2star_moves(const DihedralContext& ctx, const Word& w);

struct NormalWords {
  Word w1, w2;
  Trace trace;
};

NormalWords to_normal_words(const DihedralContext& ctx, const Word& w);
// 2-star trace between two Omega words of one element.
Trace connect(const DihedralContext& ctx, const Word& a, const Word& b);

bool is_geodesic(const DihedralContext& ctx, const Word& w);

// One way of reading an unsigned critical word.  With `positive_first` the word
// is [x,y,p> w' [z,t,q>^-1, otherwise [x,y,q>^-1 w' [z,t,p>.
struct UnsignedShape {
  bool positive_first;
  std::size_t p, q;
};

std::optional<UnsignedShape> unsigned_critical_shape(const DihedralContext& ctx, const Word& w);
bool is_unsigned_critical(const DihedralContext& ctx, const Word& w);
bool is_signed_critical(const DihedralContext& ctx, const Word& w);
bool is_critical(const DihedralContext& ctx, const Word& w);

Word tau(const DihedralContext& ctx, const Word& w);
Trace tau_trace(const DihedralContext& ctx, const Word& w);

std::pair<Word, Trace> reduce_dihedral(const DihedralContext& ctx, const Word& w);

}  // namespace artin
