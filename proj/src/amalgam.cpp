#include "artin/amalgam.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "artin/error.hpp"

namespace artin {

const char* node_kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::Amalgam: return "AMALGAM";
    case NodeKind::Product: return "PRODUCT";
    case NodeKind::LeafAbelian: return "LEAF_ABELIAN";
    case NodeKind::LeafLarge: return "LEAF_LARGE";
  }
  return "?";
}

namespace {

DecompositionTree build(const Presentation& p, const DecomposeOptions& opt) {
  auto node = std::make_shared<DecompositionNode>();
  node->pres = p;
  node->gens = p.generator_set();
  const Kind kind = classify(p).kind;
  if (kind == Kind::OutOfScope) throw OutOfScope("presentation is not of sufficiently large type");
  if (kind == Kind::FreeAbelian) {
    node->kind = NodeKind::LeafAbelian;
    return node;
  }
  auto split = split_on_infinity(p);
  if (is_large_type(p) && !(opt.split_large && split)) {
    node->kind = NodeKind::LeafLarge;
    return node;
  }
  if (split) {
    node->kind = NodeKind::Amalgam;
    node->s1 = split->s1;
    node->s2 = split->s2;
    node->children = {build(parabolic(p, split->S1), opt), build(parabolic(p, split->S2), opt),
                      build(parabolic(p, split->S12), opt)};
    return node;
  }
  auto comps = coxeter_components(p);
  if (comps.size() < 2) throw Unsupported("connected Coxeter graph that is neither abelian nor large");
  node->kind = NodeKind::Product;
  for (GenSet c : comps) node->children.push_back(build(parabolic(p, c), opt));
  return node;
}

void describe_into(const DecompositionTree& t, std::ostringstream& out) {
  out << node_kind_name(t->kind) << '(' << genset_string(t->pres, t->gens);
  if (t->kind == NodeKind::Amalgam) out << "; " << t->s1 << t->s2;
  for (const auto& c : t->children) {
    out << ", ";
    describe_into(c, out);
  }
  out << ')';
}

Move shuffle_move(const Presentation& p, const Word& w, std::size_t i) {
  if (i + 1 >= w.size()) throw PreconditionError("shuffle_commuting: position out of range");
  const char a = w[i], b = w[i + 1];
  const char na = letter::name(a), nb = letter::name(b);
  if (na == nb || p.label(na, nb) != 2) throw PreconditionError("shuffle_commuting: letters do not commute");
  const bool pa = letter::positive(a), pb = letter::positive(b);
  if (pa && pb) return Move::relation(i, na, nb, 2);
  if (!pa && !pb) return Move::relation(i, nb, na, 2);
  if (pa) return Move::split_left(i, na, nb, 2, 1, 1);
  return Move::split_right(i, nb, na, 2, 1, 1);
}

// Stable bubble sort of the region at `off` by positional keys, using commuting swaps.
void shuffle_sort(const Presentation& p, Derivation& d, std::size_t off, std::vector<int> keys) {
  const std::size_t n = keys.size();
  for (std::size_t pass = 0; pass < n; ++pass) {
    bool swapped = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (keys[i] <= keys[i + 1]) continue;
      d.apply(shuffle_move(p, d.current(), off + i));
      std::swap(keys[i], keys[i + 1]);
      swapped = true;
    }
    if (!swapped) break;
  }
}

int component_of(const DecompositionNode& node, char c) {
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (gen_in(node.children[i]->gens, letter::name(c))) return static_cast<int>(i);
  }
  throw PreconditionError(std::string("letter outside the decomposition: ") + c);
}

void require_cover(const DecompositionNode& node, const Word& w) {
  if (!over(w, node.gens))
    throw PreconditionError("word '" + w.str() + "' is not over the node alphabet " + genset_string(node.pres, node.gens));
}

const DecompositionTree& side_child(const DecompositionNode& node, int side) {
  return node.children[side == 2 ? 1 : 0];
}

GenSet side_gens(const DecompositionNode& node, int side) { return side_child(node, side)->gens; }

// Repeatedly replaces an amalgam factor lying in the shared parabolic by its
// projection.  Returns the factorization of the final region.
std::vector<AlphabetFactor> pinch_reduce(const DecompositionNode& node, Derivation& d, std::size_t off,
                                         std::size_t& len) {
  const GenSet S1 = node.children[0]->gens, S2 = node.children[1]->gens, S12 = node.children[2]->gens;
  std::set<std::pair<int, Word>> refused;
  for (;;) {
    Word region = d.current().substr(off, len);
    auto fs = factorize_by_alphabet(region, S1, S2);
    if (fs.size() <= 1) return fs;
    std::size_t pos = off;
    bool pinched = false;
    for (const auto& f : fs) {
      if (!refused.count({f.side, f.word})) {
        Projection pr = hplus_project(side_child(node, f.side), f.word, S12);
        if (pr.in_parabolic) {
          d.splice(pr.trace, pos);
          len = len - f.word.size() + pr.word.size();
          pinched = true;
          break;
        }
        refused.insert({f.side, f.word});
      }
      pos += f.word.size();
    }
    if (!pinched) return fs;
  }
}

CosetResult split_leaf_abelian(const DecompositionNode& node, const Word& w, GenSet s0) {
  Derivation d(w);
  std::vector<int> keys;
  for (char c : w) keys.push_back((gen_in(s0, letter::name(c)) ? 64 : 0) + node.pres.index_of(letter::name(c)));
  shuffle_sort(node.pres, d, 0, keys);
  d.free_reduce();
  const Word& cur = d.current();
  std::size_t k = 0;
  while (k < cur.size() && !gen_in(s0, letter::name(cur[k]))) ++k;
  CosetResult res;
  res.decomposition = {cur.substr(0, k), cur.substr(k), d.trace()};
  return res;
}

CosetResult split_product(const DecompositionNode& node, const Word& w, GenSet s0, int depth) {
  Derivation d(w);
  std::vector<int> keys;
  for (char c : w) keys.push_back(component_of(node, c));
  shuffle_sort(node.pres, d, 0, keys);
  CosetResult res;
  // Component segments, then each split into v_i u_i.
  std::vector<std::pair<std::size_t, std::size_t>> parts;
  std::size_t off = 0;
  const std::size_t ncomp = node.children.size();
  for (std::size_t c = 0; c < ncomp; ++c) {
    std::size_t len = 0;
    while (off + len < d.current().size() && component_of(node, d.current()[off + len]) == static_cast<int>(c)) ++len;
    CosetResult sub = coset_split(node.children[c], d.current().substr(off, len), s0, depth);
    if (sub.status == CosetStatus::Indeterminate) res.status = CosetStatus::Indeterminate;
    d.splice(sub.decomposition.trace, off);
    parts.emplace_back(sub.decomposition.v.size(), sub.decomposition.u.size());
    off += sub.decomposition.v.size() + sub.decomposition.u.size();
  }
  keys.clear();
  for (std::size_t c = 0; c < ncomp; ++c) {
    keys.insert(keys.end(), parts[c].first, static_cast<int>(c));
    keys.insert(keys.end(), parts[c].second, static_cast<int>(ncomp + c));
  }
  shuffle_sort(node.pres, d, 0, keys);
  std::size_t vlen = 0;
  for (auto [v, u] : parts) vlen += v;
  res.decomposition = {d.current().substr(0, vlen), d.current().substr(vlen), d.trace()};
  return res;
}

CosetResult split_amalgam(const DecompositionNode& node, const Word& w, GenSet s0, int depth) {
  const GenSet S12 = node.children[2]->gens;
  CosetResult res;
  auto note = [&](const CosetResult& r) {
    if (r.status == CosetStatus::Indeterminate) res.status = CosetStatus::Indeterminate;
  };
  Derivation d(w);
  std::size_t len = w.size();
  auto fs = pinch_reduce(node, d, 0, len);

  // Transversal normal form t_1 ... t_k h, carrying the shared part to the right.
  struct Syllable {
    std::size_t len;
    int side;
  };
  std::vector<Syllable> sy;
  std::size_t off = 0;
  std::size_t carry = 0;
  if (fs.size() == 1 && fs[0].side == 0) {
    carry = fs[0].word.size();
  } else {
    for (const auto& f : fs) {
      const std::size_t xlen = carry + f.word.size();
      CosetResult r = coset_split(side_child(node, f.side), d.current().substr(off, xlen), S12, depth);
      note(r);
      d.splice(r.decomposition.trace, off);
      if (!r.decomposition.v.empty()) {
        sy.push_back({r.decomposition.v.size(), f.side});
        off += r.decomposition.v.size();
      }
      carry = r.decomposition.u.size();
    }
  }
  // d.current() = t_1 ... t_k h with |h| = carry.
  const bool has1 = gen_in(s0, node.s1), has2 = gen_in(s0, node.s2);
  auto prefix_len = [&](std::size_t k) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < k; ++i) s += sy[i].len;
    return s;
  };
  if (!has1 || !has2) {
    const int side = has2 ? 2 : 1;
    std::size_t k = sy.size();
    std::size_t xoff = prefix_len(k);
    if (k > 0 && sy[k - 1].side == side) {
      --k;
      xoff = prefix_len(k);
    }
    const std::size_t xlen = d.current().size() - xoff;
    CosetResult r = coset_split(side_child(node, side), d.current().substr(xoff, xlen), s0, depth);
    note(r);
    d.splice(r.decomposition.trace, xoff);
    const std::size_t vlen = xoff + r.decomposition.v.size();
    res.decomposition = {d.current().substr(0, vlen), d.current().substr(vlen), d.trace()};
    return res;
  }
  // Both endpoints of the infinite edge lie in S0: peel syllables from the right.
  std::size_t k = sy.size();
  std::size_t ulen = 0;
  for (;;) {
    const std::size_t xoff = k == 0 ? 0 : prefix_len(k - 1);
    const std::size_t xlen = d.current().size() - xoff - ulen;
    const Word x = d.current().substr(xoff, xlen);
    if (k == 0) {
      CosetResult r = coset_split(node.children[2], x, s0 & S12, depth);
      note(r);
      d.splice(r.decomposition.trace, xoff);
      const std::size_t vlen = r.decomposition.v.size();
      res.decomposition = {d.current().substr(0, vlen), d.current().substr(vlen), d.trace()};
      return res;
    }
    const int side = sy[k - 1].side;
    CosetResult r = coset_split(side_child(node, side), x, s0 & side_gens(node, side), depth);
    note(r);
    d.splice(r.decomposition.trace, xoff);
    Projection pr = hplus_project(side_child(node, side), r.decomposition.v, S12);
    if (!pr.in_parabolic) {
      const std::size_t vlen = xoff + r.decomposition.v.size();
      res.decomposition = {d.current().substr(0, vlen), d.current().substr(vlen), d.trace()};
      return res;
    }
    d.splice(pr.trace, xoff);
    ulen += r.decomposition.u.size();
    --k;
  }
}

IdentityResult identity_at(const DecompositionTree& tree, const Word& w);

IdentityResult leaf_identity(const Word& w, std::pair<Word, Trace> reduced, const char* reason) {
  IdentityResult res;
  res.trace = std::move(reduced.second);
  res.identity = reduced.first.empty();
  if (!res.identity) res.certificate = NotIdentityCertificate{reason, reduced.first, res.trace, {}};
  (void)w;
  return res;
}

IdentityResult identity_at(const DecompositionTree& tree, const Word& w) {
  const DecompositionNode& node = *tree;
  require_cover(node, w);
  switch (node.kind) {
    case NodeKind::LeafLarge:
      return leaf_identity(w, reduce_to_geodesic(node.pres, w), "large-type geodesic is non-empty");
    case NodeKind::LeafAbelian:
      return leaf_identity(w, reduce_abelian(node.pres, w), "exponent vector is non-zero");
    case NodeKind::Product: {
      Derivation d(w);
      std::vector<int> keys;
      for (char c : w) keys.push_back(component_of(node, c));
      shuffle_sort(node.pres, d, 0, keys);
      std::size_t off = 0;
      std::optional<NotIdentityCertificate> first_failure;
      for (std::size_t c = 0; c < node.children.size(); ++c) {
        std::size_t len = 0;
        while (off + len < d.current().size() && component_of(node, d.current()[off + len]) == static_cast<int>(c))
          ++len;
        IdentityResult sub = identity_at(node.children[c], d.current().substr(off, len));
        d.splice(sub.trace, off);
        if (!sub.identity && !first_failure)
          first_failure = NotIdentityCertificate{"component " + genset_string(node.pres, node.children[c]->gens) +
                                                     ": " + sub.certificate->reason,
                                                 Word{}, Trace{}, sub.certificate->factors};
        off += sub.trace.end.size();
      }
      IdentityResult res;
      res.trace = d.trace();
      res.identity = !first_failure;
      if (first_failure) {
        first_failure->residual = d.current();
        first_failure->trace = res.trace;
        res.certificate = std::move(first_failure);
      }
      return res;
    }
    case NodeKind::Amalgam: {
      Derivation d(w);
      std::size_t len = w.size();
      auto fs = pinch_reduce(node, d, 0, len);
      if (fs.size() >= 2) {
        IdentityResult res;
        res.trace = d.trace();
        res.certificate = NotIdentityCertificate{"reduced amalgam word with " + std::to_string(fs.size()) +
                                                     " syllables, none in the shared parabolic",
                                                 d.current(), res.trace, fs};
        return res;
      }
      const int side = fs.empty() ? 1 : (fs[0].side == 0 ? 1 : fs[0].side);
      IdentityResult sub = identity_at(side_child(node, side), d.current());
      d.splice(sub.trace, 0);
      IdentityResult res;
      res.identity = sub.identity;
      res.trace = d.trace();
      if (!sub.identity) {
        res.certificate = sub.certificate;
        res.certificate->residual = d.current();
        res.certificate->trace = res.trace;
      }
      return res;
    }
  }
  throw std::logic_error("unknown node kind");
}

}  // namespace

DecompositionTree decompose(const Presentation& p, DecomposeOptions options) { return build(p, options); }

std::string describe(const DecompositionTree& t) {
  std::ostringstream out;
  describe_into(t, out);
  return out.str();
}

std::pair<Word, Move> shuffle_commuting(const Presentation& p, const Word& w, std::size_t i) {
  Move mv = shuffle_move(p, w, i);
  return {apply_move(w, mv), mv};
}

std::pair<Word, Trace> reduce_abelian(const Presentation& p, const Word& w) {
  Derivation d(w);
  std::vector<int> keys;
  for (char c : w) {
    int idx = p.index_of(letter::name(c));
    if (idx < 0) throw PreconditionError(std::string("reduce_abelian: letter outside the presentation: ") + c);
    keys.push_back(idx);
  }
  shuffle_sort(p, d, 0, keys);
  d.free_reduce();
  return {d.current(), d.trace()};
}

std::vector<AlphabetFactor> factorize_by_alphabet(const Word& w, GenSet s1, GenSet s2) {
  std::vector<AlphabetFactor> out;
  const GenSet shared = s1 & s2;
  for (char c : w) {
    const char g = letter::name(c);
    int side;
    if (gen_in(shared, g))
      side = 0;
    else if (gen_in(s1, g))
      side = 1;
    else if (gen_in(s2, g))
      side = 2;
    else
      throw PreconditionError(std::string("factorize_by_alphabet: stray letter ") + c);
    if (out.empty() || (side != 0 && out.back().side != 0 && out.back().side != side)) {
      out.push_back({Word{}, side});
    } else if (side != 0 && out.back().side == 0) {
      out.back().side = side;
    }
    out.back().word.push_back(c);
  }
  return out;
}

Projection hplus_project(const DecompositionTree& tree, const Word& w, GenSet s0) {
  const DecompositionNode& node = *tree;
  require_cover(node, w);
  Projection pr;
  switch (node.kind) {
    case NodeKind::LeafLarge:
    case NodeKind::LeafAbelian: {
      auto [g, tr] = node.kind == NodeKind::LeafLarge ? reduce_to_geodesic(node.pres, w) : reduce_abelian(node.pres, w);
      pr.in_parabolic = over(g, s0);
      pr.word = g;
      pr.trace = std::move(tr);
      return pr;
    }
    case NodeKind::Product:
    case NodeKind::Amalgam: {
      CosetResult cs = coset_split(tree, w, s0);
      if (cs.status == CosetStatus::Indeterminate) throw Indeterminate("hplus_project: coset search indeterminate");
      pr.in_parabolic = cs.decomposition.v.empty();
      pr.word = pr.in_parabolic ? cs.decomposition.u : cs.decomposition.v + cs.decomposition.u;
      pr.trace = std::move(cs.decomposition.trace);
      return pr;
    }
  }
  throw std::logic_error("unknown node kind");
}

CosetResult coset_split(const DecompositionTree& tree, const Word& w, GenSet s0, int plateau_depth) {
  const DecompositionNode& node = *tree;
  require_cover(node, w);
  s0 &= node.gens;
  switch (node.kind) {
    case NodeKind::LeafLarge: return min_coset_rep(node.pres, w, s0, plateau_depth);
    case NodeKind::LeafAbelian: return split_leaf_abelian(node, w, s0);
    case NodeKind::Product: return split_product(node, w, s0, plateau_depth);
    case NodeKind::Amalgam: return split_amalgam(node, w, s0, plateau_depth);
  }
  throw std::logic_error("unknown node kind");
}

IdentityResult reduce_identity(const DecompositionTree& tree, const Word& w) { return identity_at(tree, w); }

IdentityResult reduce_identity(const Presentation& p, const Word& w, DecomposeOptions options) {
  check_alphabet(p, w);
  return identity_at(decompose(p, options), w);
}

Solution solve_word_problem(const Presentation& p, const Word& w, DecomposeOptions options) {
  IdentityResult r = reduce_identity(p, w, options);
  Solution s;
  s.answer = r.identity ? Answer::EqualOne : Answer::NotEqualOne;
  s.trace = std::move(r.trace);
  s.certificate = std::move(r.certificate);
  return s;
}

}  // namespace artin
