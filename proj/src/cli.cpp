#include "artin/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "artin/amalgam.hpp"
#include "artin/error.hpp"
#include "artin/garside_oracle.hpp"
#include "artin/largetype.hpp"
#include "artin/presentation.hpp"
#include "artin/trace.hpp"

namespace artin::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Presentation load(const std::string& path) { return parse_presentation(read_file(path)); }

json trace_json(const Trace& tr) { return json::parse(trace_to_json(tr)); }

// The group-theoretic engines used by reduce/nf need large type or free abelian.
enum class Engine { Large, Abelian };

Engine engine_for(const Presentation& p) {
  const Classification c = classify(p);
  if (c.kind == Kind::OutOfScope) throw OutOfScope("presentation is out of scope");
  if (c.kind == Kind::FreeAbelian) return Engine::Abelian;
  if (is_large_type(p)) return Engine::Large;
  throw OutOfScope(std::string("this subcommand needs a large-type or free abelian presentation, got ") +
                   kind_name(c.kind));
}

struct Args {
  std::string file;
  std::string word;
  std::string trace_file;
  std::string s0, sp;
  bool has_sp = false;
  bool json = false;
  bool split_large = false;
  int plateau_depth = kDefaultPlateauDepth;
  unsigned long long seed = 1;
  int k = 1, c = 0, count = 1;
};

int cmd_classify(const Args& a, std::ostream& out) {
  const Presentation p = load(a.file);
  const Classification c = classify(p);
  if (a.json) {
    json j{{"kind", kind_name(c.kind)}};
    if (c.witness) j["witness"] = std::string(c.witness->begin(), c.witness->end());
    out << j.dump() << '\n';
  } else {
    out << kind_name(c.kind);
    if (c.witness) out << ' ' << std::string(c.witness->begin(), c.witness->end());
    out << '\n';
  }
  return kOk;
}

int emit_rewrite(const Args& a, std::ostream& out, const char* field,
                 const std::function<std::pair<Word, Trace>(const Presentation&, const Word&, Engine)>& fn) {
  const Presentation p = load(a.file);
  const Word w = parse_word(p, a.word);
  const Engine e = engine_for(p);
  auto [g, tr] = fn(p, w, e);
  if (a.json) {
    out << json{{"input", w.str()}, {field, g.str()}, {"trace", trace_json(tr)}}.dump() << '\n';
  } else {
    out << g.str() << '\n';
  }
  return kOk;
}

int cmd_solve(const Args& a, std::ostream& out, bool always_trace) {
  const Presentation p = load(a.file);
  const Word w = parse_word(p, a.word);
  DecomposeOptions opt;
  opt.split_large = a.split_large;
  const Solution s = solve_word_problem(p, w, opt);
  const bool one = s.answer == Answer::EqualOne;
  if (always_trace) {
    out << trace_to_json(s.trace, 2) << '\n';
  } else if (a.json) {
    json j{{"answer", one ? "EQUAL_ONE" : "NOT_EQUAL_ONE"}, {"trace", trace_json(s.trace)}};
    if (s.certificate) {
      json factors = json::array();
      for (const auto& f : s.certificate->factors) factors.push_back({{"word", f.word.str()}, {"side", f.side}});
      j["certificate"] = {{"reason", s.certificate->reason}, {"residual", s.certificate->residual.str()},
                          {"factors", factors}};
    }
    out << j.dump() << '\n';
  } else {
    out << (one ? "EQUAL_ONE" : "NOT_EQUAL_ONE") << '\n';
    if (s.certificate) out << "reason: " << s.certificate->reason << '\n' << "residual: " << s.certificate->residual.str() << '\n';
  }
  return one ? kOk : kNotIdentity;
}

int cmd_hsharp(const Args& a, std::ostream& out) {
  const Presentation p = load(a.file);
  const Word w = parse_word(p, a.word);
  if (!is_large_type(p)) throw OutOfScope("hsharp needs a large-type presentation");
  const GenSet s0 = parse_genset(p, a.s0);
  const GenSet sp = a.has_sp ? parse_genset(p, a.sp) : p.generator_set();
  const CosetResult r = h_sharp_decompose(p, w, s0, sp, a.plateau_depth);
  if (r.status == CosetStatus::Indeterminate) throw Indeterminate("coset descent reached the plateau bound");
  const auto& d = r.decomposition;
  if (a.json) {
    out << json{{"v", d.v.str()}, {"u", d.u.str()}, {"trace", trace_json(d.trace)}}.dump() << '\n';
  } else {
    out << "v: " << d.v.str() << '\n' << "u: " << d.u.str() << '\n';
  }
  return kOk;
}

int cmd_gen_id(const Args& a, std::ostream& out) {
  const Presentation p = load(a.file);
  for (int i = 0; i < a.count; ++i) out << gen_identity_word(p, a.seed + i, a.k, a.c).str() << '\n';
  return kOk;
}

int cmd_verify(const Args& a, std::ostream& out) {
  const Presentation p = load(a.file);
  const Trace tr = trace_from_json(read_file(a.trace_file));
  const VerifyReport r = verify_trace(p, tr);
  if (a.json) {
    json j{{"valid", r.valid}};
    if (!r.valid) {
      if (r.failing_index) j["failing_index"] = *r.failing_index;
      j["message"] = r.message;
    }
    out << j.dump() << '\n';
  } else if (r.valid) {
    out << "VALID " << tr.moves.size() << " moves\n";
  } else {
    out << "INVALID at move " << (r.failing_index ? std::to_string(*r.failing_index) : std::string("end")) << ": " << r.message << '\n';
  }
  return r.valid ? kOk : kInvalidTrace;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Word problem solver for large and sufficiently large Artin-Tits groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Args a;
  app.add_flag("--json", a.json, "Emit JSON");

  auto file_opt = [&](CLI::App* sub) { sub->add_option("presentation", a.file, "Presentation file")->required(); };
  auto word_opt = [&](CLI::App* sub) { sub->add_option("word", a.word, "Word; '-' is the empty word")->required(); };

  auto* classify_cmd = app.add_subcommand("classify", "Classify a presentation");
  file_opt(classify_cmd);
  auto* reduce_cmd = app.add_subcommand("reduce", "Geodesic representative with a trace");
  file_opt(reduce_cmd);
  word_opt(reduce_cmd);
  auto* nf_cmd = app.add_subcommand("nf", "Shortlex normal form");
  file_opt(nf_cmd);
  word_opt(nf_cmd);
  auto* solve_cmd = app.add_subcommand("solve", "Decide whether a word is the identity");
  file_opt(solve_cmd);
  word_opt(solve_cmd);
  auto* trace_cmd = app.add_subcommand("trace", "Print the solver trace as JSON");
  file_opt(trace_cmd);
  word_opt(trace_cmd);
  for (auto* sub : {solve_cmd, trace_cmd})
    sub->add_flag("--split-large", a.split_large, "Split large presentations on infinite edges");
  auto* hsharp_cmd = app.add_subcommand("hsharp", "Transversal decomposition w = v u with u over S0");
  file_opt(hsharp_cmd);
  word_opt(hsharp_cmd);
  hsharp_cmd->add_option("--s0", a.s0, "Generators of the parabolic S0")->required();
  auto* sp_opt = hsharp_cmd->add_option("--sp", a.sp, "Generators of S' containing the element");
  hsharp_cmd->add_option("--plateau-depth", a.plateau_depth, "Plateau certificate depth")->check(CLI::NonNegativeNumber);
  auto* gen_cmd = app.add_subcommand("gen-id", "Generate identity words");
  file_opt(gen_cmd);
  gen_cmd->add_option("--seed", a.seed, "RNG seed");
  gen_cmd->add_option("--k", a.k, "Number of conjugated relators")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--c", a.c, "Maximum conjugator length")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--count", a.count, "Words to emit, seeds seed..seed+count-1")->check(CLI::PositiveNumber);
  auto* verify_cmd = app.add_subcommand("verify", "Replay and check a JSON trace");
  file_opt(verify_cmd);
  verify_cmd->add_option("trace", a.trace_file, "Trace JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  a.has_sp = sp_opt->count() > 0;

  try {
    if (*classify_cmd) return cmd_classify(a, out);
    if (*reduce_cmd)
      return emit_rewrite(a, out, "geodesic", [](const Presentation& p, const Word& w, Engine e) {
        return e == Engine::Large ? reduce_to_geodesic(p, w) : reduce_abelian(p, w);
      });
    if (*nf_cmd)
      return emit_rewrite(a, out, "normal_form", [](const Presentation& p, const Word& w, Engine e) {
        return e == Engine::Large ? shortlex_nf(p, w) : reduce_abelian(p, w);
      });
    if (*solve_cmd) return cmd_solve(a, out, false);
    if (*trace_cmd) return cmd_solve(a, out, true);
    if (*hsharp_cmd) return cmd_hsharp(a, out);
    if (*gen_cmd) return cmd_gen_id(a, out);
    if (*verify_cmd) return cmd_verify(a, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const OutOfScope& e) {
    err << "out of scope: " << e.what() << '\n';
    return kOutOfScope;
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.what() << '\n';
    return kOutOfScope;
  } catch (const Indeterminate& e) {
    err << "indeterminate: " << e.what() << '\n';
    return kIndeterminate;
  } catch (const NotInParabolic& e) {
    err << "not in parabolic: " << e.what() << '\n';
    return kNotIdentity;
  } catch (const PreconditionError& e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace artin::cli
