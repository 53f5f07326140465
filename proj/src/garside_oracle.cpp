#include "artin/garside_oracle.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "artin/error.hpp"

namespace artin {

std::string GarsideElement::key() const {
  std::string s = std::to_string(k);
  s.push_back(':');
  for (auto [f, len] : simples) {
    s.push_back(f);
    s.push_back(static_cast<char>('0' + len));
  }
  return s;
}

void DihedralGarside::apply_delta(GarsideElement& g) const {
  if (ctx_.m() % 2 == 0) return;
  for (auto& s : g.simples) s.first = ctx_.other(s.first);
}

void DihedralGarside::multiply(GarsideElement& g, char l) const {
  const char e = letter::name(l);
  if (!letter::positive(l)) {
    // g e^-1 = Delta^(k-1) delta(S) (Delta e^-1), and Delta e^-1 is alternating of length m-1.
    g.k -= 1;
    apply_delta(g);
    Word rest = alternating(ctx_.other(e), e, ctx_.um() - 1, Side::Right);
    for (char c : rest) multiply(g, c);
    return;
  }
  if (!g.simples.empty()) {
    auto& [first, len] = g.simples.back();
    char last = (len % 2 == 1) ? first : ctx_.other(first);
    if (last != e) {
      if (len + 1 < ctx_.m()) {
        ++len;
        return;
      }
      // The last simple became Delta; move it to the front.
      g.simples.pop_back();
      g.k += 1;
      apply_delta(g);
      return;
    }
  }
  g.simples.emplace_back(e, 1);
}

GarsideElement DihedralGarside::of(const Word& w) const {
  GarsideElement g;
  for (char c : w) {
    if (letter::name(c) != ctx_.x() && letter::name(c) != ctx_.y())
      throw PreconditionError("garside oracle: letter outside the dihedral pair");
    multiply(g, c);
  }
  return g;
}

Word DihedralGarside::spell(const GarsideElement& g) const {
  if (g.k < 0) throw PreconditionError("spell: element is not positive");
  Word out;
  for (int i = 0; i < g.k; ++i) out += ctx_.delta_word();
  for (auto [f, len] : g.simples) out += alternating(f, ctx_.other(f), static_cast<std::size_t>(len), Side::Left);
  return out;
}

NormalPair left_normal_decomposition(const DihedralContext& ctx, const Word& w) {
  DihedralGarside gar(ctx);
  GarsideElement g = gar.of(w);
  if (g.positive()) return {gar.spell(g), Word{}};
  const int t = -g.k;
  GarsideElement a = g;
  a.k = 0;
  if (t % 2 == 1 && ctx.m() % 2 == 1) {
    for (auto& s : a.simples) s.first = ctx.other(s.first);
  }
  GarsideElement b;
  b.k = t;
  for (bool changed = true; changed;) {
    changed = false;
    for (char e : {ctx.x(), ctx.y()}) {
      GarsideElement a2 = a, b2 = b;
      gar.multiply(a2, letter::inverse(e));
      gar.multiply(b2, letter::inverse(e));
      if (!a2.positive() || !b2.positive()) continue;
      a = std::move(a2);
      b = std::move(b2);
      changed = true;
    }
  }
  return {gar.spell(a), gar.spell(b)};
}

bool equal(const DihedralContext& ctx, const Word& a, const Word& b) {
  DihedralGarside gar(ctx);
  return gar.of(a) == gar.of(b);
}

void CayleyBall::grow_to(int radius) {
  if (radius_ < 0) {
    GarsideElement one;
    dist_.emplace(one.key(), 0);
    frontier_ = {one};
    radius_ = 0;
  }
  const auto& ctx = garside_.context();
  const char letters[4] = {ctx.x(), letter::inverse(ctx.x()), ctx.y(), letter::inverse(ctx.y())};
  while (radius_ < radius) {
    std::vector<GarsideElement> next;
    for (const auto& g : frontier_) {
      for (char l : letters) {
        GarsideElement h = g;
        garside_.multiply(h, l);
        if (dist_.emplace(h.key(), radius_ + 1).second) next.push_back(std::move(h));
      }
    }
    frontier_ = std::move(next);
    ++radius_;
  }
}

std::optional<int> CayleyBall::distance_within(const GarsideElement& g, int radius) {
  grow_to(radius);
  auto it = dist_.find(g.key());
  if (it == dist_.end() || it->second > radius) return std::nullopt;
  return it->second;
}

int CayleyBall::distance(const Word& w, int radius_cap) {
  GarsideElement g = garside_.of(w);
  const int bound = std::min<int>(radius_cap, static_cast<int>(w.size()));
  if (auto d = distance_within(g, bound)) return *d;
  throw PreconditionError("geodesic_length_oracle: radius cap " + std::to_string(radius_cap) + " exceeded");
}

int geodesic_length_oracle(const DihedralContext& ctx, const Word& w, int radius_cap) {
  CayleyBall ball(ctx);
  return ball.distance(w, radius_cap);
}

std::vector<Word> type1_closure(const DihedralContext& ctx, const Word& w) {
  if (!w.is_positive()) throw PreconditionError("type1_closure: word must be positive");
  std::set<Word> seen{w};
  std::vector<Word> todo{w};
  const std::size_t m = ctx.um();
  while (!todo.empty()) {
    Word cur = std::move(todo.back());
    todo.pop_back();
    for (std::size_t i = 0; i + m <= cur.size(); ++i) {
      Word f = cur.substr(i, m);
      if (!is_square_free(f)) continue;
      std::string s = cur.str();
      s.replace(i, m, alternating(ctx.other(f[0]), f[0], m, Side::Left).str());
      Word next = unchecked_word(std::move(s));
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

bool detect_non_normal(const DihedralContext& ctx, const Word& w1, const Word& w2) {
  if (w1.empty() || w2.empty()) return false;
  bool last1[2] = {false, false}, last2[2] = {false, false};
  for (const Word& v : type1_closure(ctx, w1)) last1[v.back() == ctx.x() ? 0 : 1] = true;
  for (const Word& v : type1_closure(ctx, w2)) last2[v.back() == ctx.x() ? 0 : 1] = true;
  return (last1[0] && last2[0]) || (last1[1] && last2[1]);
}

Word gen_identity_word(const Presentation& p, std::uint64_t seed, int k, int c) {
  if (k < 0 || c < 0) throw PreconditionError("gen_identity_word: k and c must be non-negative");
  std::mt19937_64 rng(seed);
  const auto& gens = p.generators();
  std::vector<std::pair<char, char>> pairs;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!p.infinite(gens[i], gens[j])) pairs.emplace_back(gens[i], gens[j]);
    }
  }
  auto random_word = [&](int max_len) {
    std::uniform_int_distribution<int> len_d(0, max_len);
    std::uniform_int_distribution<std::size_t> gen_d(0, gens.size() - 1);
    std::bernoulli_distribution sign_d(0.5);
    std::string s;
    const int len = len_d(rng);
    while (static_cast<int>(s.size()) < len) {
      char l = letter::with_sign(gens[gen_d(rng)], sign_d(rng) ? 1 : -1);
      if (!s.empty() && s.back() == letter::inverse(l)) continue;
      s.push_back(l);
    }
    return unchecked_word(std::move(s));
  };
  if (k == 0 || gens.empty()) return Word{};
  if (pairs.empty()) {
    // No relators: a conjugator and its inverse, left unreduced.
    Word g = random_word(std::max(c, 1));
    if (g.empty()) g = unchecked_word(std::string(1, gens.front()));
    return g + g.inverse();
  }
  std::uniform_int_distribution<std::size_t> pair_d(0, pairs.size() - 1);
  std::bernoulli_distribution coin(0.5);
  Word product;
  for (int i = 0; i < k; ++i) {
    auto [x, y] = pairs[pair_d(rng)];
    if (coin(rng)) std::swap(x, y);
    const auto m = static_cast<std::size_t>(p.label(x, y));
    Word r = alternating(x, y, m, Side::Left) + alternating(y, x, m, Side::Left).inverse();
    if (coin(rng)) r = r.inverse();
    Word g = random_word(c);
    product += g + r + g.inverse();
  }
  return free_reduce(product).first;
}

}  // namespace artin
