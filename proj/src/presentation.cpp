#include "artin/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "artin/error.hpp"

namespace artin {

Presentation::Presentation(std::vector<char> generators,
                           const std::vector<std::tuple<char, char, Label>>& labels)
    : gens_(std::move(generators)) {
  index_.fill(-1);
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    char g = gens_[i];
    if (g < 'a' || g > 'z') throw PreconditionError(std::string("bad generator name '") + g + "'");
    if (index_[g - 'a'] >= 0) throw PreconditionError(std::string("duplicate generator ") + g);
    index_[g - 'a'] = static_cast<std::int8_t>(i);
    set_ |= gen_bit(g);
  }
  const std::size_t n = gens_.size();
  labels_.assign(n * n, kInfinity);
  std::vector<bool> seen(n * n, false);
  for (auto [a, b, m] : labels) {
    int i = index_of(a), j = index_of(b);
    if (i < 0 || j < 0) throw PreconditionError(std::string("unknown generator in label ") + a + b);
    if (i == j) throw PreconditionError(std::string("label on a single generator ") + a);
    if (m != kInfinity && m < 2) throw PreconditionError("label < 2");
    if (seen[i * n + j]) throw PreconditionError(std::string("duplicate label for ") + a + b);
    seen[i * n + j] = seen[j * n + i] = true;
    labels_[i * n + j] = labels_[j * n + i] = m;
  }
}

bool Presentation::contains(char g) const { return index_of(g) >= 0; }

int Presentation::index_of(char g) const {
  if (g < 'a' || g > 'z') return -1;
  return index_[g - 'a'];
}

Label Presentation::label(char a, char b) const {
  int i = index_of(a), j = index_of(b);
  if (i < 0 || j < 0 || i == j) throw PreconditionError(std::string("no label for pair ") + a + b);
  return labels_[i * gens_.size() + j];
}

int Presentation::letter_rank(char letter) const {
  char g = static_cast<char>(std::tolower(static_cast<unsigned char>(letter)));
  int i = index_of(g);
  if (i < 0) throw PreconditionError(std::string("letter not in presentation: ") + letter);
  return 2 * i + (letter == g ? 0 : 1);
}

bool Presentation::shortlex_less(std::string_view a, std::string_view b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return letter_rank(a[i]) < letter_rank(b[i]);
  }
  return false;
}

std::string Presentation::to_text() const {
  std::ostringstream out;
  out << "gens:";
  for (char g : gens_) out << ' ' << g;
  out << '\n';
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    for (std::size_t j = i + 1; j < gens_.size(); ++j) {
      Label m = labels_[i * gens_.size() + j];
      out << "m " << gens_[i] << ' ' << gens_[j] << ' ';
      if (m == kInfinity)
        out << "inf";
      else
        out << m;
      out << '\n';
    }
  }
  return out.str();
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::FreeAbelian: return "FREE_ABELIAN";
    case Kind::Large: return "LARGE";
    case Kind::DihedralSpherical: return "DIHEDRAL_SPHERICAL";
    case Kind::SufficientlyLarge: return "SUFFICIENTLY_LARGE";
    case Kind::OutOfScope: return "OUT_OF_SCOPE";
  }
  return "?";
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

bool single_generator_token(const std::string& t) {
  return t.size() == 1 && t[0] >= 'a' && t[0] <= 'z';
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  std::vector<char> gens;
  std::vector<std::tuple<char, char, Label>> labels;
  std::vector<std::pair<std::pair<char, char>, int>> label_lines;
  bool have_gens = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (!have_gens) {
      if (toks[0] != "gens:") throw ParseError("expected 'gens:' line", lineno);
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (!single_generator_token(toks[i]))
          throw ParseError("generator must be a single lowercase letter: '" + toks[i] + "'", lineno);
        char g = toks[i][0];
        if (std::find(gens.begin(), gens.end(), g) != gens.end())
          throw ParseError(std::string("duplicate generator ") + g, lineno);
        gens.push_back(g);
      }
      have_gens = true;
      continue;
    }
    if (toks[0] != "m" || toks.size() != 4) throw ParseError("malformed line: '" + line + "'", lineno);
    if (!single_generator_token(toks[1]) || !single_generator_token(toks[2]))
      throw ParseError("malformed generator in label line", lineno);
    char a = toks[1][0], b = toks[2][0];
    for (char g : {a, b}) {
      if (std::find(gens.begin(), gens.end(), g) == gens.end())
        throw ParseError(std::string("unknown generator ") + g, lineno);
    }
    if (a == b) throw ParseError("label on a single generator", lineno);
    Label m;
    if (toks[3] == "inf") {
      m = kInfinity;
    } else {
      std::size_t used = 0;
      long v = 0;
      try {
        v = std::stol(toks[3], &used);
      } catch (const std::exception&) {
        throw ParseError("malformed label '" + toks[3] + "'", lineno);
      }
      if (used != toks[3].size()) throw ParseError("malformed label '" + toks[3] + "'", lineno);
      if (v < 2) throw ParseError("label < 2", lineno);
      if (v > 1000000) throw ParseError("label too large", lineno);
      m = static_cast<Label>(v);
    }
    std::pair<char, char> key{std::min(a, b), std::max(a, b)};
    for (auto& [k, l] : label_lines) {
      if (k == key) throw ParseError(std::string("duplicate label line for ") + a + ' ' + b, lineno);
    }
    label_lines.push_back({key, lineno});
    labels.emplace_back(a, b, m);
  }
  if (!have_gens) throw ParseError("missing 'gens:' line", lineno);
  return Presentation(std::move(gens), labels);
}

Classification classify(const Presentation& p) {
  const auto& g = p.generators();
  const std::size_t n = g.size();
  bool all_two = true, all_large = true;
  int finite_pairs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Label m = p.label(g[i], g[j]);
      if (m != 2) all_two = false;
      if (m == 2) all_large = false;
      if (m != kInfinity) ++finite_pairs;
    }
  }
  if (all_two) return {Kind::FreeAbelian, std::nullopt};
  if (n == 2 && finite_pairs == 1) return {Kind::DihedralSpherical, std::nullopt};
  if (all_large) return {Kind::Large, std::nullopt};
  for (char s : g) {
    for (char t : g) {
      if (t == s || p.label(s, t) != 2) continue;
      for (char u : g) {
        if (u == s || u == t) continue;
        Label su = p.label(s, u);
        if (su == 2 || su == kInfinity) continue;
        if (p.label(t, u) != kInfinity) return {Kind::OutOfScope, std::array<char, 3>{s, t, u}};
      }
    }
  }
  return {Kind::SufficientlyLarge, std::nullopt};
}

Presentation parabolic(const Presentation& p, GenSet s0) {
  if ((s0 & ~p.generator_set()) != 0) throw PreconditionError("parabolic: unknown generator");
  std::vector<char> gens;
  for (char g : p.generators()) {
    if (gen_in(s0, g)) gens.push_back(g);
  }
  std::vector<std::tuple<char, char, Label>> labels;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      labels.emplace_back(gens[i], gens[j], p.label(gens[i], gens[j]));
    }
  }
  return Presentation(std::move(gens), labels);
}

GenSet parse_genset(const Presentation& p, std::string_view letters) {
  GenSet s = 0;
  for (char c : letters) {
    if (c == ',' || c == ' ') continue;
    if (!p.contains(c)) throw ParseError(std::string("unknown generator ") + c);
    s |= gen_bit(c);
  }
  return s;
}

Presentation parabolic(const Presentation& p, std::string_view s0) {
  GenSet s = 0;
  for (char c : s0) {
    if (!p.contains(c)) throw PreconditionError(std::string("parabolic: unknown generator ") + c);
    s |= gen_bit(c);
  }
  return parabolic(p, s);
}

std::string genset_string(const Presentation& p, GenSet s) {
  std::string out;
  for (char g : p.generators()) {
    if (gen_in(s, g)) out.push_back(g);
  }
  return out;
}

std::optional<InfinitySplit> split_on_infinity(const Presentation& p) {
  const auto& g = p.generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (!p.infinite(g[i], g[j])) continue;
      GenSet all = p.generator_set();
      GenSet a = gen_bit(g[i]), b = gen_bit(g[j]);
      return InfinitySplit{g[i], g[j], all & ~b, all & ~a, all & ~(a | b)};
    }
  }
  return std::nullopt;
}

std::vector<GenSet> coxeter_components(const Presentation& p) {
  const auto& g = p.generators();
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (p.infinite(g[i], g[j])) throw PreconditionError("coxeter_components: presentation has an infinite label");
    }
  }
  std::vector<int> comp(n, -1);
  std::vector<GenSet> out;
  for (std::size_t start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    int id = static_cast<int>(out.size());
    GenSet members = 0;
    std::vector<std::size_t> stack{start};
    comp[start] = id;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      members |= gen_bit(g[i]);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i && comp[j] < 0 && p.label(g[i], g[j]) >= 3) {
          comp[j] = id;
          stack.push_back(j);
        }
      }
    }
    out.push_back(members);
  }
  return out;
}

}  // namespace artin
