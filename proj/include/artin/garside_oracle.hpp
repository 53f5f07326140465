#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "artin/dihedral.hpp"
#include "artin/presentation.hpp"
#include "artin/word.hpp"

namespace artin {

// Element of a dihedral Artin group in left normal form
// Delta^k s_1 ... s_r, each s_i a proper simple given by first letter and length.
struct GarsideElement {
  int k = 0;
  std::vector<std::pair<char, int>> simples;

  bool positive() const { return k >= 0; }
  std::string key() const;
  bool operator==(const GarsideElement&) const = default;
};

class DihedralGarside {
 public:
  explicit DihedralGarside(const DihedralContext& ctx) : ctx_(ctx) {}

  const DihedralContext& context() const { return ctx_; }
  GarsideElement of(const Word& w) const;
  void multiply(GarsideElement& g, char letter) const;
  // Spelling of a positive element: Delta^k as [x,y,m> blocks, then the simples.
  Word spell(const GarsideElement& g) const;

 private:
  void apply_delta(GarsideElement& g) const;
  DihedralContext ctx_;
};

struct NormalPair {
  Word g1, g2;
};

NormalPair left_normal_decomposition(const DihedralContext& ctx, const Word& w);
bool equal(const DihedralContext& ctx, const Word& a, const Word& b);

// Ball in the Cayley graph around 1, grown lazily by BFS; caller-owned.
class CayleyBall {
 public:
  explicit CayleyBall(const DihedralContext& ctx) : garside_(ctx) {}

  // Distance from 1, exploring up to radius_cap; throws when the cap is reached first.
  int distance(const Word& w, int radius_cap);
  std::optional<int> distance_within(const GarsideElement& g, int radius);
  const DihedralGarside& garside() const { return garside_; }
  std::size_t size() const { return dist_.size(); }

 private:
  void grow_to(int radius);
  DihedralGarside garside_;
  std::unordered_map<std::string, int> dist_;
  std::vector<GarsideElement> frontier_;
  int radius_ = -1;
};

int geodesic_length_oracle(const DihedralContext& ctx, const Word& w, int radius_cap);

// True when some type-1 rewriting of w1 and of w2 share their last letter.
bool detect_non_normal(const DihedralContext& ctx, const Word& w1, const Word& w2);
// All positive words equal to w in the monoid (w must be positive).
std::vector<Word> type1_closure(const DihedralContext& ctx, const Word& w);

Word gen_identity_word(const Presentation& p, std::uint64_t seed, int k, int c);

}  // namespace artin
