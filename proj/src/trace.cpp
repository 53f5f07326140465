#include "artin/trace.hpp"

#include <sstream>

#include "artin/dihedral.hpp"
#include "artin/error.hpp"

namespace artin {

const char* kind_tag(MoveKind k) {
  switch (k) {
    case MoveKind::Remove: return "0";
    case MoveKind::Relation: return "1";
    case MoveKind::SplitRight: return "2r";
    case MoveKind::SplitLeft: return "2l";
  }
  return "?";
}

Move Move::remove(std::size_t pos, char l) {
  Move mv;
  mv.kind = MoveKind::Remove;
  mv.pos = pos;
  mv.x = mv.y = letter::name(l);
  return mv;
}

Move Move::relation(std::size_t pos, char x, char y, int m) {
  Move mv;
  mv.kind = MoveKind::Relation;
  mv.pos = pos;
  mv.x = x;
  mv.y = y;
  mv.m = m;
  return mv;
}

Move Move::split_right(std::size_t pos, char x, char y, int m, int u1, int v1) {
  Move mv = relation(pos, x, y, m);
  mv.kind = MoveKind::SplitRight;
  mv.splits = {u1, m - u1, v1, m - v1};
  return mv;
}

Move Move::split_left(std::size_t pos, char x, char y, int m, int u1, int v1) {
  Move mv = split_right(pos, x, y, m, u1, v1);
  mv.kind = MoveKind::SplitLeft;
  return mv;
}

std::size_t Move::before_length() const {
  switch (kind) {
    case MoveKind::Remove: return 2;
    case MoveKind::Relation: return static_cast<std::size_t>(m);
    case MoveKind::SplitRight: return static_cast<std::size_t>(splits[2] + splits[0]);
    case MoveKind::SplitLeft: return static_cast<std::size_t>(splits[3] + splits[1]);
  }
  return 0;
}

std::size_t Move::after_length() const {
  switch (kind) {
    case MoveKind::Remove: return 0;
    case MoveKind::Relation: return static_cast<std::size_t>(m);
    case MoveKind::SplitRight: return static_cast<std::size_t>(splits[3] + splits[1]);
    case MoveKind::SplitLeft: return static_cast<std::size_t>(splits[2] + splits[0]);
  }
  return 0;
}

Move Move::shifted(std::size_t offset) const {
  Move mv = *this;
  mv.pos += offset;
  return mv;
}

namespace {

void check_relation_data(const Move& mv) {
  if (mv.x == mv.y || !letter::positive(mv.x) || !letter::positive(mv.y))
    throw IllegalMove("move cites an invalid generator pair");
  if (mv.m < 2) throw IllegalMove("move cites a label < 2");
  if (mv.is_split()) {
    auto [a, b, c, d] = mv.splits;
    if (a < 0 || b < 0 || c < 0 || d < 0 || a + b != mv.m || c + d != mv.m)
      throw IllegalMove("split lengths do not partition the relation sides");
    if (mv.kind == MoveKind::SplitRight && (a == 0 || c == 0))
      throw IllegalMove("2r move needs non-empty u1 and v1");
    if (mv.kind == MoveKind::SplitLeft && (b == 0 || d == 0))
      throw IllegalMove("2l move needs non-empty u2 and v2");
  }
}

struct Sides {
  Word u1, u2, v1, v2;
};

Sides sides_of(const Move& mv) {
  const auto m = static_cast<std::size_t>(mv.m);
  Word u = alternating(mv.x, mv.y, m, Side::Left);
  Word v = alternating(mv.y, mv.x, m, Side::Left);
  auto a = static_cast<std::size_t>(mv.splits[0]);
  auto c = static_cast<std::size_t>(mv.splits[2]);
  return {u.substr(0, a), u.substr(a), v.substr(0, c), v.substr(c)};
}

}  // namespace

Word move_preimage(const Move& mv) {
  if (mv.kind == MoveKind::Remove) throw IllegalMove("removal has no fixed preimage");
  check_relation_data(mv);
  if (mv.kind == MoveKind::Relation) return alternating(mv.x, mv.y, static_cast<std::size_t>(mv.m), Side::Left);
  Sides s = sides_of(mv);
  if (mv.kind == MoveKind::SplitRight) return s.v1.inverse() + s.u1;
  return s.v2 + s.u2.inverse();
}

Word move_image(const Move& mv) {
  if (mv.kind == MoveKind::Remove) return Word{};
  check_relation_data(mv);
  if (mv.kind == MoveKind::Relation) return alternating(mv.y, mv.x, static_cast<std::size_t>(mv.m), Side::Left);
  Sides s = sides_of(mv);
  if (mv.kind == MoveKind::SplitRight) return s.v2 + s.u2.inverse();
  return s.v1.inverse() + s.u1;
}

Word apply_move(const Word& w, const Move& mv) {
  const std::string& s = w.str();
  if (mv.kind == MoveKind::Remove) {
    if (mv.pos + 2 > s.size())
      throw IllegalMove("removal at " + std::to_string(mv.pos) + " runs past the end of the word");
    char a = s[mv.pos], b = s[mv.pos + 1];
    if (b != letter::inverse(a) || letter::name(a) != mv.x)
      throw IllegalMove("removal at " + std::to_string(mv.pos) + ": expected an inverse pair of " + mv.x +
                        ", found " + std::string{a, b});
    std::string r = s;
    r.erase(mv.pos, 2);
    return unchecked_word(std::move(r));
  }
  Word from = move_preimage(mv);
  Word to = move_image(mv);
  if (mv.pos + from.size() > s.size())
    throw IllegalMove("move at " + std::to_string(mv.pos) + " runs past the end of the word");
  std::string_view found(s.data() + mv.pos, from.size());
  if (mv.kind == MoveKind::Relation && found != from.str()) {
    // The relation also applies in inverse form.
    from = from.inverse();
    to = to.inverse();
  }
  if (found != from.str())
    throw IllegalMove(std::string(kind_tag(mv.kind)) + " move at " + std::to_string(mv.pos) + ": expected '" +
                      from.str() + "', found '" + std::string(found) + "'");
  std::string r = s;
  r.replace(mv.pos, from.size(), to.str());
  return unchecked_word(std::move(r));
}

bool satisfies_star(const Word& w, const Move& mv) {
  if (!mv.is_split()) return false;
  Sides s = sides_of(mv);
  const std::size_t len = mv.before_length();
  const bool has_w1 = mv.pos > 0;
  const bool has_w2 = mv.pos + len < w.size();
  const char last_w1 = has_w1 ? w[mv.pos - 1] : 0;
  const char first_w2 = has_w2 ? w[mv.pos + len] : 0;
  if (mv.kind == MoveKind::SplitRight) {
    if (!s.v2.empty() && has_w1 && s.v2.front() == letter::inverse(last_w1)) return false;
    if (!s.u2.empty() && has_w2 && s.u2.front() == first_w2) return false;
    return true;
  }
  if (!s.v1.empty() && has_w1 && s.v1.back() == last_w1) return false;
  if (!s.u1.empty() && has_w2 && s.u1.back() == letter::inverse(first_w2)) return false;
  return true;
}

Move inverse_move(const Move& mv) {
  Move r = mv;
  r.star = false;
  switch (mv.kind) {
    case MoveKind::Remove: throw PreconditionError("a removal has no inverse among the emitted move kinds");
    case MoveKind::Relation:
      std::swap(r.x, r.y);
      return r;
    case MoveKind::SplitRight:
      r.kind = MoveKind::SplitLeft;
      break;
    case MoveKind::SplitLeft:
      r.kind = MoveKind::SplitRight;
      break;
  }
  check_relation_data(r);
  return r;
}

VerifyReport verify_trace(const Presentation& p, const Trace& tr) {
  VerifyReport rep;
  auto fail = [&](std::optional<std::size_t> idx, std::string msg) {
    rep.valid = false;
    rep.failing_index = idx;
    rep.message = std::move(msg);
    return rep;
  };
  for (char c : tr.start) {
    if (!p.contains(letter::name(c))) return fail(std::nullopt, "start word uses a letter outside the presentation");
  }
  Word cur = tr.start;
  for (std::size_t i = 0; i < tr.moves.size(); ++i) {
    const Move& mv = tr.moves[i];
    try {
      if (mv.kind != MoveKind::Remove) {
        if (!p.contains(mv.x) || !p.contains(mv.y) || mv.x == mv.y)
          return fail(i, "move cites a pair outside the presentation");
        if (p.label(mv.x, mv.y) != mv.m)
          return fail(i, "move cites label " + std::to_string(mv.m) + " but the presentation has " +
                             std::to_string(p.label(mv.x, mv.y)));
      }
      if (mv.star && !mv.is_split()) return fail(i, "star flag on a move that is not of type 2");
      Word next = apply_move(cur, mv);
      if (mv.star && !satisfies_star(cur, mv)) return fail(i, "move is flagged 2-star but violates the side conditions");
      cur = std::move(next);
    } catch (const std::exception& e) {
      return fail(i, e.what());
    }
  }
  if (cur != tr.end) return fail(std::nullopt, "replay ends at '" + cur.str() + "', trace claims '" + tr.end.str() + "'");
  return rep;
}

Trace invert_trace(const Trace& tr) {
  Trace r;
  r.start = tr.end;
  r.end = tr.start;
  r.moves.reserve(tr.moves.size());
  for (auto it = tr.moves.rbegin(); it != tr.moves.rend(); ++it) r.moves.push_back(inverse_move(*it));
  Word cur = r.start;
  for (Move& mv : r.moves) {
    Word next = apply_move(cur, mv);
    mv.star = mv.is_split() && satisfies_star(cur, mv);
    cur = std::move(next);
  }
  if (cur != r.end) throw std::logic_error("invert_trace: reversal does not end at the original start");
  return r;
}

namespace {
thread_local int g_inversion_depth = 0;
}

Trace invert_2star_segment(const Presentation& p, const Trace& tr, InversionStats* stats) {
  // Intermediate words of the forward trace, so that each reversed step knows its target.
  std::vector<Word> words{tr.start};
  for (const Move& mv : tr.moves) {
    if (!mv.is_split() || !mv.star) throw PreconditionError("invert_2star_segment: every move must be 2-star");
    words.push_back(apply_move(words.back(), mv));
  }
  if (words.back() != tr.end) throw PreconditionError("invert_2star_segment: trace does not replay");

  Derivation d(tr.end);
  for (std::size_t k = tr.moves.size(); k-- > 0;) {
    const Word& target = words[k];
    bool done = false;
    try {
      Move r = inverse_move(tr.moves[k]);
      if (satisfies_star(d.current(), r) && apply_move(d.current(), r) == target) {
        d.apply(r);
        done = true;
        if (stats) ++stats->reversed;
      }
    } catch (const PreconditionError&) {
    } catch (const IllegalMove&) {
    }
    if (done) continue;
    if (g_inversion_depth > 0) throw std::logic_error("invert_2star_segment: nested fallback");
    const Move& mv = tr.moves[k];
    DihedralContext ctx(mv.x, mv.y, p.label(mv.x, mv.y));
    ++g_inversion_depth;
    Trace path;
    try {
      path = connect(ctx, d.current(), target);
    } catch (...) {
      --g_inversion_depth;
      throw;
    }
    --g_inversion_depth;
    d.splice(path, 0);
    if (stats) ++stats->fallbacks;
  }
  return d.trace();
}

void Derivation::apply(Move mv) {
  Word next = apply_move(current_, mv);
  mv.star = mv.is_split() && satisfies_star(current_, mv);
  current_ = std::move(next);
  moves_.push_back(mv);
}

void Derivation::splice(const Trace& seg, std::size_t offset) {
  if (offset + seg.start.size() > current_.size() ||
      current_.str().compare(offset, seg.start.size(), seg.start.str()) != 0)
    throw PreconditionError("splice: segment start '" + seg.start.str() + "' does not occur at offset " +
                            std::to_string(offset) + " of '" + current_.str() + "'");
  for (const Move& mv : seg.moves) apply(mv.shifted(offset));
}

void Derivation::free_reduce() {
  auto [w, tr] = artin::free_reduce(current_);
  moves_.insert(moves_.end(), tr.moves.begin(), tr.moves.end());
  current_ = std::move(w);
}

}  // namespace artin
