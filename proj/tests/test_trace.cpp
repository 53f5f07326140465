#include <gtest/gtest.h>

#include <random>

#include "artin/dihedral.hpp"
#include "artin/error.hpp"
#include "artin/garside_oracle.hpp"
#include "artin/trace.hpp"
#include "support.hpp"

using namespace artin;
using namespace artin::testing;

TEST(ApplyMove, WorkedExamples) {
  // s^-1 t^-1 s -> t s^-1 t^-1
  EXPECT_EQ(apply_move(Word("STs"), Move::split_right(0, 's', 't', 3, 1, 2)).str(), "tST");
  // t^-1 s^-1 t^-1 s -> s^-1 t^-1
  EXPECT_EQ(apply_move(Word("TSTs"), Move::split_right(0, 's', 't', 3, 1, 3)).str(), "ST");
  EXPECT_EQ(apply_move(Word("sts"), Move::relation(0, 's', 't', 3)).str(), "tst");
  EXPECT_EQ(apply_move(Word("STS"), Move::relation(0, 's', 't', 3)).str(), "TST");
  EXPECT_EQ(apply_move(Word("tsSt"), Move::remove(1, 's')).str(), "tt");
}

TEST(ApplyMove, RejectsIllegalMoves) {
  EXPECT_THROW(apply_move(Word("sts"), Move::relation(1, 's', 't', 3)), IllegalMove);
  EXPECT_THROW(apply_move(Word("ss"), Move::remove(0, 's')), IllegalMove);
  // u1 empty is not a split move.
  EXPECT_THROW(apply_move(Word("STs"), Move::split_right(0, 's', 't', 3, 0, 2)), IllegalMove);
  try {
    apply_move(Word("tts"), Move::relation(0, 's', 't', 3));
  } catch (const IllegalMove& e) {
    EXPECT_NE(std::string(e.what()).find("expected"), std::string::npos);
  }
}

TEST(ApplyMove, InverseMoveRestoresWord) {
  // Exhaustive over relation instances with m <= 6.
  for (int m = 2; m <= 6; ++m) {
    for (auto [x, y] : {std::pair{'s', 't'}, std::pair{'t', 's'}}) {
      const Word u = alternating(x, y, m, Side::Left), v = alternating(y, x, m, Side::Left);
      for (const Word& w : {u, u.inverse()}) {
        Move mv = Move::relation(0, x, y, m);
        Word out = apply_move(w, mv);
        EXPECT_EQ(apply_move(out, inverse_move(mv)), w);
      }
      (void)v;
      // A 2r move has a 2l inverse only when u2 and v2 are non-empty.
      EXPECT_THROW(inverse_move(Move::split_right(0, x, y, m, m, 1)), IllegalMove);
      for (int u1 = 1; u1 < m; ++u1) {
        for (int v1 = 1; v1 < m; ++v1) {
          Move r = Move::split_right(0, x, y, m, u1, v1);
          Word pre = move_preimage(r);
          Word post = apply_move(pre, r);
          EXPECT_EQ(apply_move(post, inverse_move(r)), pre) << m << ' ' << u1 << ' ' << v1;
        }
      }
    }
  }
}

TEST(Verify, ValidAndTampered) {
  auto p = dihedral(3);
  Trace tr{Word("sS"), {Move::remove(0, 's')}, Word("")};
  EXPECT_TRUE(verify_trace(p, tr).valid);
  auto [w, t2] = free_reduce(Word("stTS"));
  ASSERT_EQ(t2.moves.size(), 2u);
  t2.moves[1].pos = 1;
  auto rep = verify_trace(p, t2);
  EXPECT_FALSE(rep.valid);
  ASSERT_TRUE(rep.failing_index);
  EXPECT_EQ(*rep.failing_index, 1u);
  Trace wrong_end{Word("sS"), {Move::remove(0, 's')}, Word("t")};
  EXPECT_FALSE(verify_trace(p, wrong_end).valid);
  Trace wrong_label{Word("sts"), {Move::relation(0, 's', 't', 4)}, Word("tst")};
  EXPECT_FALSE(verify_trace(p, wrong_label).valid);
}

TEST(Verify, FalseStarFlagIsRejected) {
  auto p = dihedral(4);
  // t^2 s t s^-1 t -> t^2 t^-1 s^-1 t s t t is type 2 but not 2-star.
  Move mv = Move::split_left(2, 't', 's', 4, 3, 2);
  Trace tr{Word("ttstSt"), {mv}, Word("ttTStstt")};
  EXPECT_TRUE(verify_trace(p, tr).valid);
  tr.moves[0].star = true;
  EXPECT_FALSE(verify_trace(p, tr).valid);
  Derivation d(Word("ttstSt"));
  d.apply(mv);
  EXPECT_FALSE(d.trace().moves[0].star);
}

TEST(Verify, ImpliesOracleEquality) {
  std::mt19937_64 rng(3);
  for (int m = 3; m <= 6; ++m) {
    DihedralContext ctx('s', 't', m);
    auto p = ctx.presentation();
    auto letters = signed_letters(p);
    for (int i = 0; i < 200; ++i) {
      Word w = random_reduced(rng, letters, 1 + rng() % 14);
      auto [g, tr] = reduce_dihedral(ctx, w);
      ASSERT_TRUE(verify_trace(p, tr).valid);
      EXPECT_TRUE(equal(ctx, tr.start, tr.end)) << w;
    }
  }
}

TEST(Json, RoundTrip) {
  DihedralContext ctx('s', 't', 4);
  auto [g, tr] = reduce_dihedral(ctx, Word("ststSTsTT"));
  Trace back = trace_from_json(trace_to_json(tr));
  EXPECT_EQ(back.start, tr.start);
  EXPECT_EQ(back.end, tr.end);
  ASSERT_EQ(back.moves.size(), tr.moves.size());
  for (std::size_t i = 0; i < tr.moves.size(); ++i) EXPECT_EQ(back.moves[i], tr.moves[i]);
  EXPECT_EQ(trace_to_json(back), trace_to_json(tr));
}

TEST(Json, SchemaShape) {
  Derivation d(Word("Ts"));
  d.apply(Move::split_right(0, 's', 't', 4, 1, 1));
  d.free_reduce();
  const std::string js = trace_to_json(d.trace());
  EXPECT_NE(js.find("\"kind\":\"2r\""), std::string::npos);
  EXPECT_NE(js.find("\"splits\":[1,3,1,3]"), std::string::npos);
  Trace rm{Word("sS"), {Move::remove(0, 's')}, Word("")};
  EXPECT_EQ(trace_to_json(rm).find("splits"), std::string::npos);
  EXPECT_THROW(trace_from_json("{\"start\":\"s\"}"), ParseError);
  EXPECT_THROW(trace_from_json("not json"), ParseError);
  EXPECT_THROW(trace_from_json(R"({"start":"s","end":"s","moves":[{"kind":"9","pos":0,"pair":["s","t"],"m":3}]})"),
               ParseError);
}

TEST(Invert2Star, EmptyAndSingleMove) {
  auto p = dihedral(4);
  Trace empty{Word("st"), {}, Word("st")};
  EXPECT_TRUE(invert_2star_segment(p, empty).moves.empty());
  DihedralContext ctx('s', 't', 4);
  auto moves = enumerate_2star_moves(ctx, Word("ttstSt"));
  ASSERT_FALSE(moves.empty());
  for (auto& [mv, out] : moves) {
    Trace tr{Word("ttstSt"), {mv}, out};
    InversionStats stats;
    Trace inv = invert_2star_segment(p, tr, &stats);
    EXPECT_TRUE(verify_trace(p, inv).valid);
    EXPECT_EQ(inv.end, tr.start);
    if (stats.fallbacks == 0) {
      ASSERT_EQ(inv.moves.size(), 1u);
      Move expect = inverse_move(mv);
      expect.star = inv.moves[0].star;
      EXPECT_EQ(inv.moves[0], expect);
      EXPECT_TRUE(inv.moves[0].star);
    }
  }
}

TEST(Invert2Star, RandomOmegaTraces) {
  std::mt19937_64 rng(5);
  InversionStats stats;
  for (int m = 3; m <= 5; ++m) {
    DihedralContext ctx('s', 't', m);
    auto p = ctx.presentation();
    auto letters = signed_letters(p);
    int done = 0;
    while (done < 100) {
      Word w = random_reduced(rng, letters, 2 + rng() % 10);
      if (!in_omega(ctx, w)) continue;
      Derivation d(w);
      for (int step = 0; step < 4; ++step) {
        auto mv = enumerate_2star_moves(ctx, d.current());
        if (mv.empty()) break;
        d.apply(mv[rng() % mv.size()].first);
      }
      Trace inv = invert_2star_segment(p, d.trace(), &stats);
      EXPECT_TRUE(verify_trace(p, inv).valid);
      EXPECT_EQ(inv.start, d.current());
      EXPECT_EQ(inv.end, w);
      for (const Move& mv : inv.moves) EXPECT_TRUE(mv.is_split() && mv.star);
      ++done;
    }
  }
  RecordProperty("fallbacks", static_cast<int>(stats.fallbacks));
}
