#include "artin/dihedral.hpp"

#include <algorithm>
#include <stdexcept>

#include "artin/error.hpp"

namespace artin {

DihedralContext::DihedralContext(char x, char y, int m) : x_(letter::name(x)), y_(letter::name(y)), m_(m) {
  if (x_ == y_) throw PreconditionError("dihedral context needs two distinct generators");
  if (m < 2) throw PreconditionError("dihedral context needs a finite label >= 2");
}

char DihedralContext::delta(char l) const {
  if (m_ % 2 == 0) return l;
  return letter::with_sign(other(l), letter::sign(l));
}

Word DihedralContext::delta(const Word& w) const {
  if (m_ % 2 == 0) return w;
  std::string s = w.str();
  for (char& c : s) c = delta(c);
  return unchecked_word(std::move(s));
}

Presentation DihedralContext::presentation() const {
  std::vector<char> g{std::min(x_, y_), std::max(x_, y_)};
  return Presentation(g, {{x_, y_, m_}});
}

std::size_t p_value(const DihedralContext& ctx, const Word& w) { return std::min(p_tilde(w), ctx.um()); }
std::size_t n_value(const DihedralContext& ctx, const Word& w) { return std::min(n_tilde(w), ctx.um()); }

bool in_omega(const DihedralContext& ctx, const Word& w) {
  return ctx.covers(w) && w.is_freely_reduced() && p_tilde(w) < ctx.um() && n_tilde(w) < ctx.um();
}

StarDecomposition star_decomposition(const DihedralContext& ctx, const Word& w) {
  if (w.empty() || !in_omega(ctx, w)) throw PreconditionError("star_decomposition: word must be a non-empty Omega word");
  StarDecomposition sd;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= w.size(); ++i) {
    bool cut = i == w.size() || letter::positive(w[i]) != letter::positive(w[i - 1]) || w[i] == w[i - 1];
    if (cut) {
      sd.factors.push_back(w.substr(start, i - start));
      start = i;
    }
  }
  return sd;
}

std::size_t inversions(const StarDecomposition& sd) {
  std::size_t negatives = 0, count = 0;
  for (const Word& f : sd.factors) {
    if (f.is_negative())
      ++negatives;
    else
      count += negatives;
  }
  return count;
}

namespace {

// The 2-star move replacing the adjacent star factors a (at pos) and b.
Move junction_move(const DihedralContext& ctx, std::size_t pos, const Word& a, const Word& b) {
  const int m = ctx.m();
  if (a.is_negative()) {
    char y = letter::name(a.back());
    char x = letter::name(b.front());
    return Move::split_right(pos, x, y, m, static_cast<int>(b.size()), static_cast<int>(a.size()));
  }
  char last_v2 = a.back();
  char last_u2 = letter::name(b.front());
  char x = (m % 2 == 1) ? last_u2 : last_v2;
  char y = (m % 2 == 1) ? last_v2 : last_u2;
  return Move::split_left(pos, x, y, m, m - static_cast<int>(b.size()), m - static_cast<int>(a.size()));
}

}  // namespace

std::vector<std::pair<Move, Word>> enumerate_2star_moves(const DihedralContext& ctx, const Word& w) {
  std::vector<std::pair<Move, Word>> out;
  if (w.empty()) return out;
  StarDecomposition sd = star_decomposition(ctx, w);
  std::size_t pos = 0;
  for (std::size_t i = 0; i + 1 < sd.factors.size(); ++i) {
    const Word& a = sd.factors[i];
    const Word& b = sd.factors[i + 1];
    if (a.is_positive() != b.is_positive()) {
      Move mv = junction_move(ctx, pos, a, b);
      if (satisfies_star(w, mv)) {
        mv.star = true;
        out.emplace_back(mv, apply_move(w, mv));
      }
    }
    pos += a.size();
  }
  return out;
}

NormalWords to_normal_words(const DihedralContext& ctx, const Word& w) {
  if (!in_omega(ctx, w)) throw PreconditionError("to_normal_words: word '" + w.str() + "' is not in Omega");
  Derivation d(w);
  while (!d.current().empty()) {
    StarDecomposition sd = star_decomposition(ctx, d.current());
    std::size_t pos = 0;
    bool moved = false;
    for (std::size_t i = 0; i + 1 < sd.factors.size(); ++i) {
      if (sd.factors[i].is_negative() && sd.factors[i + 1].is_positive()) {
        d.apply(junction_move(ctx, pos, sd.factors[i], sd.factors[i + 1]));
        moved = true;
        break;
      }
      pos += sd.factors[i].size();
    }
    if (!moved) break;
  }
  const Word& cur = d.current();
  std::size_t k = 0;
  while (k < cur.size() && letter::positive(cur[k])) ++k;
  return NormalWords{cur.substr(0, k), cur.substr(k).inverse(), d.trace()};
}

Trace connect(const DihedralContext& ctx, const Word& a, const Word& b) {
  NormalWords na = to_normal_words(ctx, a);
  NormalWords nb = to_normal_words(ctx, b);
  if (na.w1 != nb.w1 || na.w2 != nb.w2)
    throw PreconditionError("connect: '" + a.str() + "' and '" + b.str() + "' represent different elements");
  Derivation d(a);
  d.splice(na.trace, 0);
  d.splice(invert_2star_segment(ctx.presentation(), nb.trace), 0);
  return d.trace();
}

bool is_geodesic(const DihedralContext& ctx, const Word& w) {
  if (!w.is_freely_reduced()) throw PreconditionError("is_geodesic: word is not freely reduced");
  return p_value(ctx, w) + n_value(ctx, w) <= ctx.um();
}

namespace {

bool square_free_signed(const Word& w, std::size_t pos, std::size_t len, bool positive) {
  for (std::size_t i = pos; i < pos + len; ++i) {
    if (letter::positive(w[i]) != positive) return false;
    if (i > pos && w[i] == w[i - 1]) return false;
  }
  return true;
}

}  // namespace

std::optional<UnsignedShape> unsigned_critical_shape(const DihedralContext& ctx, const Word& w) {
  if (!ctx.covers(w) || !w.is_freely_reduced() || !w.is_unsigned()) return std::nullopt;
  const std::size_t p = p_value(ctx, w), q = n_value(ctx, w), n = w.size();
  if (p + q != ctx.um() || p == 0 || q == 0 || p + q > n) return std::nullopt;
  if (square_free_signed(w, 0, p, true) && square_free_signed(w, n - q, q, false)) return UnsignedShape{true, p, q};
  if (square_free_signed(w, 0, q, false) && square_free_signed(w, n - p, p, true)) return UnsignedShape{false, p, q};
  return std::nullopt;
}

bool is_unsigned_critical(const DihedralContext& ctx, const Word& w) {
  return unsigned_critical_shape(ctx, w).has_value();
}

namespace {

enum class SignedForm { None, Prefix, Suffix };

SignedForm signed_critical_form(const DihedralContext& ctx, const Word& w) {
  if (!ctx.covers(w) || w.empty() || !w.is_signed()) return SignedForm::None;
  const bool pos = w.is_positive();
  const std::size_t m = ctx.um(), n = w.size();
  const std::size_t metric = pos ? p_tilde(w) : n_tilde(w);
  if (metric != m) return SignedForm::None;
  auto capped = [&](const Word& v) { return std::min(pos ? p_tilde(v) : n_tilde(v), m); };
  if (square_free_signed(w, 0, m, pos) && capped(w.substr(m)) < m) return SignedForm::Prefix;
  if (square_free_signed(w, n - m, m, pos) && capped(w.substr(0, n - m)) < m) return SignedForm::Suffix;
  return SignedForm::None;
}

// Signed alternating word of length m whose last (or first) letter has name g.
Word block_ending(const DihedralContext& ctx, char g, bool positive) {
  Word a = alternating(g, ctx.other(g), ctx.um(), positive ? Side::Right : Side::Left);
  return positive ? a : a.inverse();
}

Word block_starting(const DihedralContext& ctx, char g, bool positive) {
  Word a = alternating(g, ctx.other(g), ctx.um(), positive ? Side::Left : Side::Right);
  return positive ? a : a.inverse();
}

// Type-1 move rewriting the signed alternating factor of length m at pos.
Move flip_at(const DihedralContext& ctx, const Word& w, std::size_t pos) {
  char first = w[pos];
  char x = letter::positive(first) ? first : letter::name(w[pos + ctx.um() - 1]);
  return Move::relation(pos, x, ctx.other(x), ctx.m());
}

}  // namespace

bool is_signed_critical(const DihedralContext& ctx, const Word& w) {
  return signed_critical_form(ctx, w) != SignedForm::None;
}

bool is_critical(const DihedralContext& ctx, const Word& w) {
  return is_signed_critical(ctx, w) || is_unsigned_critical(ctx, w);
}

Word tau(const DihedralContext& ctx, const Word& w) {
  const std::size_t n = w.size();
  if (auto shape = unsigned_critical_shape(ctx, w)) {
    const std::size_t p = shape->p, q = shape->q;
    if (shape->positive_first) {
      char x = w[0], y = ctx.other(x);
      char z = letter::name(w[n - 1]), t = ctx.other(z);
      Word mid = ctx.delta(w.substr(p, n - p - q));
      return alternating(y, x, q, Side::Right).inverse() + mid + alternating(t, z, p, Side::Right);
    }
    char y = letter::name(w[0]), x = ctx.other(y);
    char t = w[n - 1], z = ctx.other(t);
    Word mid = ctx.delta(w.substr(q, n - p - q));
    return alternating(x, y, p, Side::Left) + mid + alternating(z, t, q, Side::Left).inverse();
  }
  const std::size_t m = ctx.um();
  const bool pos = w.is_positive();
  switch (signed_critical_form(ctx, w)) {
    case SignedForm::Prefix:
      return ctx.delta(w.substr(m)) + block_ending(ctx, ctx.other(letter::name(w.back())), pos);
    case SignedForm::Suffix:
      return block_starting(ctx, ctx.other(letter::name(w.front())), pos) + ctx.delta(w.substr(0, n - m));
    case SignedForm::None: break;
  }
  throw PreconditionError("tau: '" + w.str() + "' is not a critical word");
}

Trace tau_trace(const DihedralContext& ctx, const Word& w) {
  const Word target = tau(ctx, w);
  if (is_unsigned_critical(ctx, w)) return connect(ctx, w, target);

  // Signed: move the Delta block across w' one letter at a time.
  const std::size_t m = ctx.um(), n = w.size();
  const bool prefix = signed_critical_form(ctx, w) == SignedForm::Prefix;
  Derivation d(w);
  if (prefix) {
    for (std::size_t b = 0; b + m < n; ++b) {
      if (letter::name(d.current()[b + m - 1]) == letter::name(d.current()[b + m])) d.apply(flip_at(ctx, d.current(), b));
      d.apply(flip_at(ctx, d.current(), b + 1));
    }
    if (d.current() != target) d.apply(flip_at(ctx, d.current(), n - m));
  } else {
    for (std::size_t b = n - m; b > 0; --b) {
      if (letter::name(d.current()[b]) == letter::name(d.current()[b - 1])) d.apply(flip_at(ctx, d.current(), b));
      d.apply(flip_at(ctx, d.current(), b - 1));
    }
    if (d.current() != target) d.apply(flip_at(ctx, d.current(), 0));
  }
  if (d.current() != target) throw std::logic_error("tau_trace: Delta shift did not reach tau(w)");
  return d.trace();
}

namespace {

// True once no extension of f to the right can be critical.
bool beyond_critical(const DihedralContext& ctx, const Word& f) {
  const std::size_t m = ctx.um();
  const std::size_t p = p_tilde(f), q = n_tilde(f);
  if (p > m || q > m) return true;
  return p > 0 && q > 0 && p + q > m;
}

}  // namespace

std::pair<Word, Trace> reduce_dihedral(const DihedralContext& ctx, const Word& w) {
  if (!ctx.covers(w)) throw PreconditionError("reduce_dihedral: word uses other generators");
  Derivation d(w);
  d.free_reduce();
  while (!is_geodesic(ctx, d.current())) {
    const Word& cur = d.current();
    const std::size_t n = cur.size();
    bool found = false;
    for (std::size_t i = 0; i < n && !found; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        Word f = cur.substr(i, j - i);
        if (beyond_critical(ctx, f)) break;
        if (!is_critical(ctx, f)) continue;
        Word t = tau(ctx, f);
        bool cancels = (i > 0 && t.front() == letter::inverse(cur[i - 1])) ||
                       (j < n && t.back() == letter::inverse(cur[j]));
        if (!cancels) continue;
        d.splice(tau_trace(ctx, f), i);
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("reduce_dihedral: non-geodesic word without a reducing critical factor");
    d.free_reduce();
  }
  return {d.current(), d.trace()};
}

}  // namespace artin
