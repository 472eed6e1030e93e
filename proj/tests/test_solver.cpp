#include <set>

#include "doctest.h"
#include "penthex/solver.hpp"

using namespace penthex;

static BoundaryCode bc(std::initializer_list<int> v) { return BoundaryCode(std::vector<int>(v)); }

static std::vector<BoundaryCode> necklaces(int n) {
  std::vector<BoundaryCode> out;
  for (long mask = 0; mask < (1L << n); mask++) {
    std::vector<int> d(n);
    for (int i = 0; i < n; i++) d[i] = (mask >> i) & 1 ? 3 : 2;
    BoundaryCode c(std::move(d));
    if (canonical_rotation(c) == c) out.push_back(std::move(c));
  }
  return out;
}

TEST_CASE("decide basics") {
  Solver s;
  CHECK(s.decide(repeated(5, 2)).exists);
  CHECK_FALSE(s.decide(repeated(7, 2)).exists);
  CHECK(s.decide(bc({3, 2, 2, 2, 3, 2, 2, 2, 2})).exists);
  CHECK(s.decide(repeated(6, 2)).exists);
  CHECK_FALSE(s.decide(bc({2, 2})).exists);  // boundaries shorter than a face
  CHECK_FALSE(s.decide(bc({3, 3})).exists);
}

TEST_CASE("f5 above five needs conjecture mode") {
  Solver plain;
  CHECK_THROWS_AS(plain.decide(repeat_block({2, 3}, 5)), Error);
  SolverConfig cfg;
  cfg.conjecture_mode = true;
  cfg.want_witness = true;
  Solver s(cfg);
  Answer a = s.decide(repeat_block({2, 3}, 5));
  CHECK(a.exists);
  CHECK(a.stats.conditional);
  CHECK(a.stats.d_used == 10);
  REQUIRE(a.witness.has_value());
  REQUIRE(a.witness->size() == 1);
  CHECK((*a.witness)[0].boundary_code() == repeat_block({2, 3}, 5));
}

TEST_CASE("witness replay realizes the input code") {
  SolverConfig cfg;
  cfg.want_witness = true;
  Solver s(cfg);
  for (auto code : {bc({3, 2, 2, 2, 3, 2, 2, 2, 2}), repeated(6, 2),
                    bc({2, 2, 3, 2, 2, 3, 2, 2, 3}), repeated(5, 2)}) {
    Answer a = s.decide(code);
    if (!a.exists) continue;
    REQUIRE(a.witness.has_value());
    REQUIRE(a.witness->size() == 1);
    CHECK((*a.witness)[0].boundary_code() == code);
  }
}

TEST_CASE("test_recurse base cases") {
  Solver s;
  CHECK(s.test_recurse({}, 3).exists);               // empty list
  CHECK(s.test_recurse({repeated(6, 2)}, 3).exists); // hexagon, zero ops
  // a raw (2)^5 member is only handled by the top-level pentagon rule
  CHECK_FALSE(s.test_recurse({repeated(5, 2)}, 3).exists);
  // mixed-sign zero-sum lists fail the hexagonal check
  CHECK_FALSE(s.test_recurse({repeated(7, 2), repeated(5, 2)}, 3).exists);
}

TEST_CASE("trace for (2,3)^5 spends exactly six operations") {
  SolverConfig cfg;
  cfg.conjecture_mode = true;
  Solver s(cfg);
  Answer a = s.test_recurse({repeat_block({2, 3}, 5)}, 7);
  CHECK(a.exists);
  REQUIRE(a.trace.has_value());
  int ops = 0;
  for (const auto& step : a.trace->steps)
    ops += 1 + static_cast<int>(step.iv_removed.size());
  CHECK(ops == 6);  // f5 drops by one per operation, type IV removals included
  // every remaining member of the final snapshot is hexagonal
  for (const auto& m : a.trace->final_list()) CHECK(f5(m) == 0);
}

TEST_CASE("decide agrees with the oracle on small codes") {
  Solver s;
  SearchConfig scfg;
  HexMemo memo;
  int checked = 0;
  for (int n = 1; n <= 9; n++) {
    for (const auto& code : necklaces(n)) {
      int k = f5(code);
      if (k < 0 || k > 5) continue;
      bool solver_yes = s.decide(code).exists;
      bool oracle_yes = fill_exists(code, scfg, &memo);
      CHECK(solver_yes == oracle_yes);
      checked++;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("recursion depth stays within f5") {
  Solver s;
  for (int n = 5; n <= 9; n++) {
    for (const auto& code : necklaces(n)) {
      int k = f5(code);
      if (k < 0 || k > 5) continue;
      Answer a = s.decide(code);
      CHECK(a.stats.max_depth <= k);
    }
  }
}

TEST_CASE("decide is rotation-invariant") {
  Solver s;
  for (auto code : {bc({3, 2, 2, 2, 3, 2, 2, 2, 2}), bc({2, 2, 3, 2, 3, 2, 2, 3, 2}),
                    bc({3, 3, 2, 2, 2, 2, 2, 3, 2, 2})}) {
    bool base = s.decide(code).exists;
    for (int r = 1; r < code.size(); r++) CHECK(s.decide(rotated(code, r)).exists == base);
  }
}

TEST_CASE("determinism across repeated runs") {
  auto run = [](const BoundaryCode& code) {
    SolverConfig cfg;
    cfg.want_witness = true;
    Solver s(cfg);
    Answer a = s.decide(code);
    std::string sig = a.exists ? canonical_form((*a.witness)[0]) : "no";
    for (const auto& step : a.trace ? a.trace->steps : std::vector<TraceEntry>{})
      sig += "|" + format_op(step.op);
    return sig;
  };
  auto code = bc({2, 2, 3, 2, 2, 3, 2, 2, 3});
  CHECK(run(code) == run(code));
}

TEST_CASE("count_solutions matches oracle counting") {
  Solver s;
  for (int n = 1; n <= 8; n++) {
    for (const auto& code : necklaces(n)) {
      int k = f5(code);
      if (k < 0 || k > 5) continue;
      CHECK(s.count_solutions(code, 20) == count_distinct(code, 20));
    }
  }
  CHECK(s.count_solutions(repeated(6, 2), 10) == 1);
  CHECK(s.count_solutions(repeated(5, 2), 10) == 1);
}

TEST_CASE("build_witness replays a hand trace") {
  // single reverse step: hexagon base, type II x=4 cut
  OpTrace tr;
  tr.initial = {bc({3, 2, 2, 2, 3, 2, 2, 2, 2})};
  TraceEntry step;
  step.op = OpII{0, 0, 4};
  step.after = {repeated(6, 2)};
  tr.steps.push_back(step);
  PatchSet base{make_cycle(6)};
  auto ps = build_witness(tr, base);
  REQUIRE(ps.size() == 1);
  CHECK(ps[0].boundary_code() == tr.initial[0]);

  // the base must realize the final snapshot
  PatchSet wrong{make_cycle(5)};
  CHECK_THROWS_AS(build_witness(tr, wrong), Error);
}
