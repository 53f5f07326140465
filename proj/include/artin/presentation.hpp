#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace artin {

// Label 0 is reserved for infinity; finite labels are >= 2.
using Label = int;
inline constexpr Label kInfinity = 0;

// Subsets of generators as bitmasks over 'a'..'z'.
using GenSet = std::uint32_t;

inline constexpr GenSet gen_bit(char g) { return GenSet{1} << (g - 'a'); }
inline constexpr bool gen_in(GenSet s, char g) { return (s & gen_bit(g)) != 0; }

class Presentation {
 public:
  Presentation() = default;
  // Pairs not mentioned in `labels` get the label infinity.
  Presentation(std::vector<char> generators,
               const std::vector<std::tuple<char, char, Label>>& labels);

  const std::vector<char>& generators() const { return gens_; }
  std::size_t rank() const { return gens_.size(); }
  GenSet generator_set() const { return set_; }
  bool contains(char g) const;
  // Position of g in generator order, -1 if absent.
  int index_of(char g) const;

  Label label(char a, char b) const;
  bool infinite(char a, char b) const { return label(a, b) == kInfinity; }

  // Rank of a letter in the shortlex order a < A < b < B < ... (generator order).
  int letter_rank(char letter) const;
  bool shortlex_less(std::string_view a, std::string_view b) const;

  std::string to_text() const;
  bool operator==(const Presentation&) const = default;

 private:
  std::vector<char> gens_;
  GenSet set_ = 0;
  std::array<std::int8_t, 26> index_{};
  // Row-major by generator index.
  std::vector<Label> labels_;
};

enum class Kind { FreeAbelian, Large, DihedralSpherical, SufficientlyLarge, OutOfScope };

struct Classification {
  Kind kind;
  // Violating triple (s, t, u) with m(s,t)=2, m(s,u) finite >= 3, m(t,u) != inf.
  std::optional<std::array<char, 3>> witness;
};

const char* kind_name(Kind k);

Presentation parse_presentation(std::string_view text);
Classification classify(const Presentation& p);
Presentation parabolic(const Presentation& p, GenSet s0);
Presentation parabolic(const Presentation& p, std::string_view s0);
GenSet parse_genset(const Presentation& p, std::string_view letters);
std::string genset_string(const Presentation& p, GenSet s);

struct InfinitySplit {
  char s1, s2;
  GenSet S1, S2, S12;
  bool operator==(const InfinitySplit&) const = default;
};

std::optional<InfinitySplit> split_on_infinity(const Presentation& p);
std::vector<GenSet> coxeter_components(const Presentation& p);

}  // namespace artin
