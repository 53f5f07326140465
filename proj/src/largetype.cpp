#include "artin/largetype.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "artin/error.hpp"

namespace artin {

Word CriticalFactorization::source() const {
  Word out = alpha;
  if (direction == Direction::Rightward) {
    for (const Word& f : factors) out += f;
  } else {
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) out += *it;
  }
  return out + beta;
}

bool is_large_type(const Presentation& p) {
  const auto& g = p.generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (p.label(g[i], g[j]) == 2) return false;
    }
  }
  return true;
}

namespace {

// Generator pair of f, if f uses exactly two generators with a finite label >= 3.
std::optional<DihedralContext> pair_context(const Presentation& p, GenSet alpha) {
  if (std::popcount(alpha) != 2) return std::nullopt;
  char a = 0, b = 0;
  for (char g : p.generators()) {
    if (!gen_in(alpha, g)) continue;
    (a == 0 ? a : b) = g;
  }
  Label m = p.label(a, b);
  if (m == kInfinity || m < 3) return std::nullopt;
  return DihedralContext(a, b, m);
}

// Incremental necessary conditions for a factor being (or extending to) a critical word.
class FactorGuard {
 public:
  explicit FactorGuard(const Presentation& p) : p_(p) {}

  // Adds a letter at the right (or left) end; false once no critical word can contain the factor.
  bool add(char c, bool at_right) {
    if (len_ > 0) {
      char nb = at_right ? last_ : first_;
      if (nb == letter::inverse(c)) return false;
      const bool same_sign = letter::positive(nb) == letter::positive(c);
      const bool extends = same_sign && nb != c;
      std::size_t& run = at_right ? right_run_ : left_run_;
      run = extends ? run + 1 : 1;
    } else {
      right_run_ = left_run_ = 1;
    }
    if (at_right) {
      last_ = c;
      if (len_ == 0) first_ = c;
    } else {
      first_ = c;
      if (len_ == 0) last_ = c;
    }
    ++len_;
    alphabet_ |= gen_bit(letter::name(c));
    const int gens = std::popcount(alphabet_);
    if (gens > 2) return false;
    if (gens == 2) {
      if (!ctx_) {
        ctx_ = pair_context(p_, alphabet_);
        if (!ctx_) return false;
      }
      const std::size_t m = ctx_->um();
      const std::size_t run = at_right ? right_run_ : left_run_;
      if (letter::positive(c))
        pos_max_ = std::max(pos_max_, run);
      else
        neg_max_ = std::max(neg_max_, run);
      if (pos_max_ > m || neg_max_ > m) return false;
      if (pos_max_ > 0 && neg_max_ > 0 && pos_max_ + neg_max_ > m) return false;
    } else {
      if (letter::positive(c))
        pos_max_ = std::max<std::size_t>(pos_max_, 1);
      else
        neg_max_ = std::max<std::size_t>(neg_max_, 1);
    }
    return true;
  }

  // Cheap test before the full criticality check.
  bool may_be_critical() const {
    if (!ctx_) return false;
    const std::size_t m = ctx_->um();
    if (pos_max_ > 0 && neg_max_ > 0) return pos_max_ + neg_max_ == m;
    return pos_max_ == m || neg_max_ == m;
  }

  const std::optional<DihedralContext>& context() const { return ctx_; }

 private:
  const Presentation& p_;
  std::optional<DihedralContext> ctx_;
  GenSet alphabet_ = 0;
  std::size_t len_ = 0;
  std::size_t right_run_ = 0, left_run_ = 0;
  std::size_t pos_max_ = 0, neg_max_ = 0;
  char first_ = 0, last_ = 0;
};

}  // namespace

std::optional<DihedralContext> critical_context(const Presentation& p, const Word& f) {
  auto ctx = pair_context(p, f.alphabet());
  if (ctx && is_critical(*ctx, f)) return ctx;
  return std::nullopt;
}

std::vector<Word> tau_sequence(const Presentation& p, const std::vector<Word>& factors, Direction dir) {
  std::vector<Word> out;
  char s = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    Word f = factors[i];
    if (i > 0) f = dir == Direction::Rightward ? unchecked_word(std::string(1, s)) + f : f + unchecked_word(std::string(1, s));
    auto ctx = critical_context(p, f);
    if (!ctx) throw PreconditionError("tau_sequence: factor '" + f.str() + "' is not critical");
    Word t = tau(*ctx, f);
    const bool last = i + 1 == factors.size();
    if (dir == Direction::Rightward) {
      s = t.back();
      out.push_back(last ? t : t.substr(0, t.size() - 1));
    } else {
      s = t.front();
      out.push_back(last ? t : t.substr(1));
    }
  }
  return out;
}

namespace {

// Depth-first search over chains of critical factors.  `accept` sees the
// boundary position and the tau image of the latest (carried) factor.
class ChainSearch {
 public:
  using Accept = std::function<bool(std::size_t boundary, const Word& image)>;

  ChainSearch(const Presentation& p, const Word& w, Direction dir, Accept accept, bool memoize)
      : p_(p), w_(w), dir_(dir), accept_(std::move(accept)), memoize_(memoize) {}

  // Tries chains whose first factor ends at (rightward: starts at) `anchor`.
  bool run_from(std::size_t anchor) {
    chain_.clear();
    origin_ = anchor;
    return extend(anchor, 0);
  }

  CriticalFactorization result() const {
    CriticalFactorization cf;
    cf.direction = dir_;
    for (std::size_t i = 0; i < chain_.size(); ++i) {
      const Word& f = chain_[i];
      if (i == 0)
        cf.factors.push_back(f);
      else
        cf.factors.push_back(dir_ == Direction::Rightward ? f.substr(1) : f.substr(0, f.size() - 1));
    }
    if (dir_ == Direction::Rightward) {
      cf.alpha = w_.substr(0, origin_);
      cf.beta = w_.substr(boundary_);
    } else {
      cf.alpha = w_.substr(0, boundary_);
      cf.beta = w_.substr(origin_);
    }
    return cf;
  }

 private:
  bool extend(std::size_t j, char s) {
    const std::size_t n = w_.size();
    FactorGuard guard(p_);
    std::string f;
    if (s != 0) {
      guard.add(s, true);
      f.push_back(s);
    }
    if (dir_ == Direction::Rightward) {
      for (std::size_t k = j + 1; k <= n; ++k) {
        if (!guard.add(w_[k - 1], true)) break;
        f.push_back(w_[k - 1]);
        if (!guard.may_be_critical()) continue;
        Word fw = unchecked_word(f);
        if (!is_critical(*guard.context(), fw)) continue;
        if (visit(fw, k, *guard.context())) return true;
      }
    } else {
      for (std::size_t i = j; i-- > 0;) {
        if (!guard.add(w_[i], false)) break;
        f.insert(f.begin(), w_[i]);
        if (!guard.may_be_critical()) continue;
        Word fw = unchecked_word(f);
        if (!is_critical(*guard.context(), fw)) continue;
        if (visit(fw, i, *guard.context())) return true;
      }
    }
    return false;
  }

  bool visit(const Word& f, std::size_t boundary, const DihedralContext& ctx) {
    Word t = tau(ctx, f);
    chain_.push_back(f);
    boundary_ = boundary;
    if (accept_(boundary, t)) return true;
    const bool rightward = dir_ == Direction::Rightward;
    const bool room = rightward ? boundary < w_.size() : boundary > 0;
    if (room) {
      char carry = rightward ? t.back() : t.front();
      auto key = std::make_pair(boundary, carry);
      if (!memoize_ || !failed_.count(key)) {
        if (extend(boundary, carry)) return true;
        if (memoize_) failed_.insert(key);
      }
    }
    chain_.pop_back();
    return false;
  }

  const Presentation& p_;
  const Word& w_;
  Direction dir_;
  Accept accept_;
  bool memoize_;
  std::set<std::pair<std::size_t, char>> failed_;
  std::vector<Word> chain_;
  std::size_t origin_ = 0, boundary_ = 0;
};

}  // namespace

void for_each_critical_factorization(const Presentation& p, const Word& w, Direction dir, bool want_cancelling,
                                     const std::function<bool(const CriticalFactorization&)>& visit) {
  if (!w.is_freely_reduced()) throw PreconditionError("critical factorizations need a freely reduced word");
  const std::size_t n = w.size();
  bool stop = false;
  ChainSearch* self = nullptr;
  auto accept = [&](std::size_t boundary, const Word& image) {
    if (want_cancelling) {
      bool cancels = dir == Direction::Rightward ? (boundary < n && image.back() == letter::inverse(w[boundary]))
                                                 : (boundary > 0 && image.front() == letter::inverse(w[boundary - 1]));
      if (!cancels) return false;
    }
    stop = !visit(self->result());
    return stop;
  };
  // Memoized failures are only sound when acceptance depends on the state alone.
  ChainSearch search(p, w, dir, accept, false);
  self = &search;
  if (dir == Direction::Rightward) {
    for (std::size_t i = 0; i < n && !stop; ++i) search.run_from(i);
  } else {
    for (std::size_t j = 1; j <= n && !stop; ++j) search.run_from(j);
  }
}

std::optional<CriticalFactorization> find_cancelling_factorization(const Presentation& p, const Word& w, Direction dir,
                                                                   std::optional<std::size_t> end) {
  if (!w.is_freely_reduced()) throw PreconditionError("critical factorizations need a freely reduced word");
  const std::size_t n = w.size();
  auto accept = [&](std::size_t boundary, const Word& image) {
    if (end && boundary != *end) return false;
    if (dir == Direction::Rightward) return boundary < n && image.back() == letter::inverse(w[boundary]);
    return boundary > 0 && image.front() == letter::inverse(w[boundary - 1]);
  };
  ChainSearch search(p, w, dir, accept, true);
  if (dir == Direction::Rightward) {
    for (std::size_t i = 0; i < n; ++i) {
      if (search.run_from(i)) return search.result();
    }
  } else {
    for (std::size_t j = 1; j <= n; ++j) {
      if (search.run_from(j)) return search.result();
    }
  }
  return std::nullopt;
}

std::pair<Word, Trace> apply_critical_sequence(const Presentation& p, const Word& w, const CriticalFactorization& cf) {
  if (cf.factors.empty() || cf.source() != w)
    throw PreconditionError("apply_critical_sequence: factorization does not spell the word");
  Derivation d(w);
  const bool rightward = cf.direction == Direction::Rightward;
  std::size_t off = cf.alpha.size();
  if (!rightward) {
    for (std::size_t i = 1; i < cf.factors.size(); ++i) off += cf.factors[i].size();
  }
  char s = 0;
  for (std::size_t i = 0; i < cf.factors.size(); ++i) {
    Word f = cf.factors[i];
    if (i > 0) {
      Word carried = unchecked_word(std::string(1, s));
      if (rightward) {
        f = carried + f;
      } else {
        off -= cf.factors[i].size();
        f = f + carried;
      }
    }
    auto ctx = critical_context(p, f);
    if (!ctx) throw PreconditionError("apply_critical_sequence: factor '" + f.str() + "' is not critical");
    d.splice(tau_trace(*ctx, f), off);
    Word t = tau(*ctx, f);
    if (rightward) {
      s = t.back();
      off += f.size() - 1;
    } else {
      s = t.front();
    }
  }
  return {d.current(), d.trace()};
}

namespace {

void require_large(const Presentation& p, const char* op) {
  if (!is_large_type(p)) throw PreconditionError(std::string(op) + ": presentation is not of large type");
}

void reduce_in_place(const Presentation& p, Derivation& d) {
  d.free_reduce();
  while (auto cf = find_cancelling_factorization(p, d.current(), Direction::Rightward)) {
    auto [next, tr] = apply_critical_sequence(p, d.current(), *cf);
    d.splice(tr, 0);
    const std::size_t before = d.current().size();
    d.free_reduce();
    if (d.current().size() >= before) throw std::logic_error("reduce_to_geodesic: cancelling sequence did not shorten");
  }
}

// Improves a geodesic within [0, limit) to the shortlex least word reachable by
// leftward critical sequences.
void shortlex_in_place(const Presentation& p, Derivation& d, std::size_t offset, std::size_t length) {
  for (;;) {
    Word region = d.current().substr(offset, length);
    std::optional<CriticalFactorization> best;
    auto accept = [&](std::size_t boundary, const Word& image) {
      return p.letter_rank(image.front()) < p.letter_rank(region[boundary]);
    };
    ChainSearch search(p, region, Direction::Leftward, accept, true);
    for (std::size_t j = 1; j <= region.size() && !best; ++j) {
      if (search.run_from(j)) best = search.result();
    }
    if (!best) return;
    auto [next, tr] = apply_critical_sequence(p, region, *best);
    if (!p.shortlex_less(next.str(), region.str())) throw std::logic_error("shortlex_nf: leftward sequence did not improve");
    d.splice(tr, offset);
  }
}

}  // namespace

std::pair<Word, Trace> reduce_to_geodesic(const Presentation& p, const Word& w) {
  require_large(p, "reduce_to_geodesic");
  Derivation d(w);
  reduce_in_place(p, d);
  return {d.current(), d.trace()};
}

std::pair<Word, Trace> shortlex_nf(const Presentation& p, const Word& w) {
  require_large(p, "shortlex_nf");
  Derivation d(w);
  reduce_in_place(p, d);
  shortlex_in_place(p, d, 0, d.current().size());
  return {d.current(), d.trace()};
}

Trace connect_geodesics(const Presentation& p, const Word& a, const Word& b) {
  auto [na, ta] = shortlex_nf(p, a);
  auto [nb, tb] = shortlex_nf(p, b);
  if (na.size() != a.size() || nb.size() != b.size())
    throw PreconditionError("connect_geodesics: inputs must be geodesic");
  if (na != nb) throw ShortlexMismatch("connect_geodesics: normal forms differ ('" + na.str() + "' vs '" + nb.str() + "')");
  Derivation d(a);
  d.splice(ta, 0);
  d.splice(invert_trace(tb), 0);
  return d.trace();
}

namespace {

std::vector<char> signed_letters(const Presentation& p, GenSet s) {
  std::vector<char> out;
  for (char g : p.generators()) {
    if (!gen_in(s, g)) continue;
    out.push_back(g);
    out.push_back(letter::inverse(g));
  }
  return out;
}

// Some freely reduced x over `letters` with 2 <= |x| <= depth and |g x| < |g|.
bool shortening_extension_exists(const Presentation& p, const Word& r, const std::vector<char>& letters, int depth) {
  std::vector<Word> layer{Word{}};
  for (int len = 1; len <= depth; ++len) {
    std::vector<Word> next;
    for (const Word& x : layer) {
      for (char c : letters) {
        if (!x.empty() && x.back() == letter::inverse(c)) continue;
        Word y = x;
        y.push_back(c);
        next.push_back(y);
        if (len == 1) continue;
        Derivation probe(r + y);
        reduce_in_place(p, probe);
        if (probe.current().size() < r.size()) return true;
      }
    }
    layer = std::move(next);
  }
  return false;
}

}  // namespace

CosetResult min_coset_rep(const Presentation& p, const Word& w, GenSet s0, int plateau_depth) {
  require_large(p, "min_coset_rep");
  if ((s0 & ~p.generator_set()) != 0) throw PreconditionError("min_coset_rep: S0 is not a set of generators");
  Derivation d(w);
  reduce_in_place(p, d);
  const std::vector<char> letters = signed_letters(p, s0);
  // d.current() = r u, with u accumulated at the right.
  std::size_t r_len = d.current().size();
  for (bool descended = true; descended;) {
    descended = false;
    for (char a : letters) {
      const Word r = d.current().substr(0, r_len);
      if (r.empty()) break;
      if (r.back() == letter::inverse(a)) {
        --r_len;
        descended = true;
        break;
      }
      Word ra = r;
      ra.push_back(a);
      auto cf = find_cancelling_factorization(p, ra, Direction::Rightward, r.size());
      if (!cf) continue;
      cf->beta = Word{};
      auto [moved, tr] = apply_critical_sequence(p, r, *cf);
      if (moved.back() != letter::inverse(a)) throw std::logic_error("min_coset_rep: sequence did not expose the letter");
      d.splice(tr, 0);
      --r_len;
      descended = true;
      break;
    }
  }
  CosetResult res;
  const Word r = d.current().substr(0, r_len);
  if (plateau_depth >= 2 && !letters.empty() && shortening_extension_exists(p, r, letters, plateau_depth)) {
    res.status = CosetStatus::Indeterminate;
  }
  const std::size_t u_len = d.current().size() - r_len;
  shortlex_in_place(p, d, 0, r_len);
  shortlex_in_place(p, d, r_len, u_len);
  res.decomposition.v = d.current().substr(0, r_len);
  res.decomposition.u = d.current().substr(r_len);
  res.decomposition.trace = d.trace();
  return res;
}

CosetResult h_sharp_decompose(const Presentation& p, const Word& w, GenSet s0, GenSet s_prime, int plateau_depth) {
  require_large(p, "h_sharp_decompose");
  auto [g, tr] = reduce_to_geodesic(p, w);
  if (!over(g, s_prime)) throw NotInParabolic("h_sharp_decompose: geodesic '" + g.str() + "' leaves the parabolic on S'");
  CosetResult res = min_coset_rep(p, w, s0, plateau_depth);
  const auto& dec = res.decomposition;
  if (!over(dec.v, s_prime) || !over(dec.u, s_prime & s0))
    throw std::logic_error("h_sharp_decompose: transversal output leaves the expected alphabet");
  return res;
}

}  // namespace artin
