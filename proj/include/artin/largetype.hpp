#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "artin/dihedral.hpp"
#include "artin/presentation.hpp"
#include "artin/trace.hpp"
#include "artin/word.hpp"

namespace artin {

enum class Direction { Rightward, Leftward };

// Rightward: source = alpha v1 ... vn beta.  Leftward: source = alpha vn ... v1 beta.
// factors[0] is v1; later factors are stored without the letter carried in from
// the previous critical factor.
struct CriticalFactorization {
  Direction direction = Direction::Rightward;
  Word alpha;
  std::vector<Word> factors;
  Word beta;

  Word source() const;
};

// Every label is >= 3 or infinite.
bool is_large_type(const Presentation& p);

// The dihedral parabolic in which f is critical, if any.
std::optional<DihedralContext> critical_context(const Presentation& p, const Word& f);

std::vector<Word> tau_sequence(const Presentation& p, const std::vector<Word>& factors, Direction dir);

// Visits critical factorizations of w in search order (leftmost, shortest
// first); the visitor returns false to stop.  With want_cancelling only those
// whose image cancels with beta (rightward) or alpha (leftward) are visited.
void for_each_critical_factorization(const Presentation& p, const Word& w, Direction dir, bool want_cancelling,
                                     const std::function<bool(const CriticalFactorization&)>& visit);

// The first cancelling factorization; `end` pins where the factor chain must stop.
std::optional<CriticalFactorization> find_cancelling_factorization(const Presentation& p, const Word& w,
                                                                   Direction dir,
                                                                   std::optional<std::size_t> end = std::nullopt);

std::pair<Word, Trace> apply_critical_sequence(const Presentation& p, const Word& w, const CriticalFactorization& cf);

std::pair<Word, Trace> reduce_to_geodesic(const Presentation& p, const Word& w);
std::pair<Word, Trace> shortlex_nf(const Presentation& p, const Word& w);

// Raised when two geodesics of one element reach different shortlex candidates.
class ShortlexMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Trace connect_geodesics(const Presentation& p, const Word& a, const Word& b);

struct TransversalDecomposition {
  Word v;
  Word u;
  Trace trace;
};

enum class CosetStatus { Ok, Indeterminate };

struct CosetResult {
  CosetStatus status = CosetStatus::Ok;
  TransversalDecomposition decomposition;
};

inline constexpr int kDefaultPlateauDepth = 3;

CosetResult min_coset_rep(const Presentation& p, const Word& w, GenSet s0, int plateau_depth = kDefaultPlateauDepth);

// Raised when the input element is not in the parabolic subgroup on S'.
class NotInParabolic : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

CosetResult h_sharp_decompose(const Presentation& p, const Word& w, GenSet s0, GenSet s_prime,
                              int plateau_depth = kDefaultPlateauDepth);

}  // namespace artin
