#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "artin/largetype.hpp"
#include "artin/presentation.hpp"
#include "artin/trace.hpp"
#include "artin/word.hpp"

namespace artin {

enum class NodeKind { Amalgam, Product, LeafAbelian, LeafLarge };

const char* node_kind_name(NodeKind k);

struct DecompositionNode;
using DecompositionTree = std::shared_ptr<const DecompositionNode>;

// Amalgam children are {S1 side, S2 side, shared S12}; product children are
// the Coxeter components in generator order.
struct DecompositionNode {
  NodeKind kind = NodeKind::LeafAbelian;
  Presentation pres;
  GenSet gens = 0;
  char s1 = 0, s2 = 0;
  std::vector<DecompositionTree> children;
};

struct DecomposeOptions {
  // Split large presentations on infinite edges too, instead of keeping one large leaf.
  bool split_large = false;
};

DecompositionTree decompose(const Presentation& p, DecomposeOptions options = {});
std::string describe(const DecompositionTree& t);

std::pair<Word, Move> shuffle_commuting(const Presentation& p, const Word& w, std::size_t i);
std::pair<Word, Trace> reduce_abelian(const Presentation& p, const Word& w);

struct AlphabetFactor {
  Word word;
  // 1 or 2 for the side it needs, 0 when it only uses shared letters.
  int side = 0;
};

std::vector<AlphabetFactor> factorize_by_alphabet(const Word& w, GenSet s1, GenSet s2);

struct Projection {
  bool in_parabolic = false;
  Word word;
  Trace trace;
};

Projection hplus_project(const DecompositionTree& node, const Word& w, GenSet s0);
CosetResult coset_split(const DecompositionTree& node, const Word& w, GenSet s0,
                        int plateau_depth = kDefaultPlateauDepth);

struct NotIdentityCertificate {
  std::string reason;
  Word residual;
  Trace trace;  // from the input to `residual`
  std::vector<AlphabetFactor> factors;
};

struct IdentityResult {
  bool identity = false;
  Trace trace;  // to the empty word when identity
  std::optional<NotIdentityCertificate> certificate;
};

IdentityResult reduce_identity(const Presentation& p, const Word& w, DecomposeOptions options = {});
IdentityResult reduce_identity(const DecompositionTree& tree, const Word& w);

enum class Answer { EqualOne, NotEqualOne };

struct Solution {
  Answer answer = Answer::NotEqualOne;
  Trace trace;
  std::optional<NotIdentityCertificate> certificate;
};

Solution solve_word_problem(const Presentation& p, const Word& w, DecomposeOptions options = {});

}  // namespace artin
