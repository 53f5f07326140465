#include <json.hpp>

#include "artin/error.hpp"
#include "artin/trace.hpp"

namespace artin {

using nlohmann::json;

std::string trace_to_json(const Trace& tr, int indent) {
  json moves = json::array();
  for (const Move& mv : tr.moves) {
    json j;
    j["kind"] = kind_tag(mv.kind);
    j["pos"] = mv.pos;
    j["pair"] = {std::string(1, mv.x), std::string(1, mv.y)};
    j["m"] = mv.m;
    if (mv.is_split()) j["splits"] = mv.splits;
    j["star"] = mv.star;
    moves.push_back(std::move(j));
  }
  json out;
  out["start"] = tr.start.str();
  out["end"] = tr.end.str();
  out["moves"] = std::move(moves);
  return out.dump(indent);
}

namespace {

char generator_field(const json& j) {
  if (!j.is_string()) throw ParseError("trace JSON: pair entries must be strings");
  auto s = j.get<std::string>();
  if (s.size() != 1 || s[0] < 'a' || s[0] > 'z') throw ParseError("trace JSON: bad generator '" + s + "'");
  return s[0];
}

}  // namespace

Trace trace_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("trace JSON: ") + e.what());
  }
  try {
    Trace tr;
    tr.start = Word(doc.at("start").get<std::string>());
    tr.end = Word(doc.at("end").get<std::string>());
    for (const json& j : doc.at("moves")) {
      Move mv;
      auto kind = j.at("kind").get<std::string>();
      if (kind == "0")
        mv.kind = MoveKind::Remove;
      else if (kind == "1")
        mv.kind = MoveKind::Relation;
      else if (kind == "2r")
        mv.kind = MoveKind::SplitRight;
      else if (kind == "2l")
        mv.kind = MoveKind::SplitLeft;
      else
        throw ParseError("trace JSON: unknown move kind '" + kind + "'");
      auto pos = j.at("pos").get<long long>();
      if (pos < 0) throw ParseError("trace JSON: negative position");
      mv.pos = static_cast<std::size_t>(pos);
      const json& pair = j.at("pair");
      if (!pair.is_array() || pair.size() != 2) throw ParseError("trace JSON: pair must have two entries");
      mv.x = generator_field(pair[0]);
      mv.y = generator_field(pair[1]);
      mv.m = j.at("m").get<int>();
      if (mv.is_split()) {
        mv.splits = j.at("splits").get<std::array<int, 4>>();
      } else if (j.contains("splits")) {
        throw ParseError("trace JSON: splits present on a move of kind " + kind);
      }
      mv.star = j.value("star", false);
      tr.moves.push_back(mv);
    }
    return tr;
  } catch (const json::exception& e) {
    throw ParseError(std::string("trace JSON: ") + e.what());
  }
}

}  // namespace artin
