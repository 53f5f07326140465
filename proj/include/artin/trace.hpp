#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "artin/presentation.hpp"
#include "artin/word.hpp"

namespace artin {

enum class MoveKind { Remove, Relation, SplitRight, SplitLeft };

const char* kind_tag(MoveKind k);  // "0", "1", "2r", "2l"

// One elementary transformation applied at `pos` of the pre-move word.
//
// Relation: the factor [x,y,m> becomes [y,x,m>, or [x,y,m>^-1 becomes [y,x,m>^-1.
// SplitRight / SplitLeft: with u = u1u2 = [x,y,m> and v = v1v2 = [y,x,m>,
// splits = {|u1|,|u2|,|v1|,|v2|}; SplitRight replaces v1^-1 u1 by v2 u2^-1,
// SplitLeft replaces v2 u2^-1 by v1^-1 u1.
// Remove: deletes the pair at pos, pos+1; x = y = its generator, m = 0.
struct Move {
  MoveKind kind = MoveKind::Remove;
  std::size_t pos = 0;
  char x = 0, y = 0;
  int m = 0;
  std::array<int, 4> splits{};
  bool star = false;

  static Move remove(std::size_t pos, char letter);
  static Move relation(std::size_t pos, char x, char y, int m);
  static Move split_right(std::size_t pos, char x, char y, int m, int u1, int v1);
  static Move split_left(std::size_t pos, char x, char y, int m, int u1, int v1);

  bool is_split() const { return kind == MoveKind::SplitRight || kind == MoveKind::SplitLeft; }
  // Length of the factor this move replaces and of its replacement.
  std::size_t before_length() const;
  std::size_t after_length() const;
  Move shifted(std::size_t offset) const;

  bool operator==(const Move&) const = default;
};

struct Trace {
  Word start;
  std::vector<Move> moves;
  Word end;

  bool operator==(const Trace&) const = default;
};

// Factor that mv expects at its position, and what it writes there.
Word move_preimage(const Move& mv);
Word move_image(const Move& mv);

Word apply_move(const Word& w, const Move& mv);

// Side conditions that make a split move (already legal on w) a 2-star move.
bool satisfies_star(const Word& w, const Move& mv);

// Formal inverse of a type 1 or type 2 move; throws for removals and for
// splits whose inverse would need an empty mandatory part.
Move inverse_move(const Move& mv);

struct VerifyReport {
  bool valid = true;
  std::optional<std::size_t> failing_index;
  std::string message;
  bool kinds_012 = true;
};

VerifyReport verify_trace(const Presentation& p, const Trace& tr);

// Move-wise reversal of a trace made of type 1 and type 2 moves.
Trace invert_trace(const Trace& tr);

struct InversionStats {
  std::size_t reversed = 0;
  std::size_t fallbacks = 0;
};

// Reverses a 2-star trace on a two-generator word, keeping every move
// 2-star; a step whose reversal loses the star property is recomputed.
Trace invert_2star_segment(const Presentation& p, const Trace& tr, InversionStats* stats = nullptr);

// Incremental builder: every applied move is checked, star flags are set
// from the actual context.
class Derivation {
 public:
  Derivation() = default;
  explicit Derivation(Word start) : start_(start), current_(std::move(start)) {}

  const Word& current() const { return current_; }
  const Word& start() const { return start_; }
  std::size_t size() const { return moves_.size(); }

  void apply(Move mv);
  // Replays seg with every position shifted by offset; seg.start must occur there.
  void splice(const Trace& seg, std::size_t offset);
  void free_reduce();

  Trace trace() const { return Trace{start_, moves_, current_}; }

 private:
  Word start_;
  Word current_;
  std::vector<Move> moves_;
};

std::string trace_to_json(const Trace& tr, int indent = -1);
// Throws ParseError on schema violations.
Trace trace_from_json(const std::string& text);

}  // namespace artin
