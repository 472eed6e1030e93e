#include <set>

#include "doctest.h"
#include "penthex/oracle.hpp"

using namespace penthex;

static BoundaryCode bc(std::initializer_list<int> v) { return BoundaryCode(std::vector<int>(v)); }

// all cyclic strings of length n over {2,3}, deduplicated by rotation
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

TEST_CASE("fill_search basics") {
  SearchConfig cfg;
  CHECK(fill_search(repeated(6, 2), cfg).size() == 1);
  CHECK(fill_search(repeated(5, 2), cfg).size() == 1);
  CHECK(fill_search(repeated(7, 2), cfg).empty());
  CHECK(fill_search(bc({3, 2, 2, 2, 3, 2, 2, 2, 2}), cfg).size() == 1);

  // hexagons-only search demands f5 = 0
  SearchConfig hexcfg;
  hexcfg.allow_pentagons = false;
  CHECK_THROWS_AS(fill_search(repeated(5, 2), hexcfg), Error);
}

TEST_CASE("the 7-hexagon flower is the unique filling of (2,2,3)^6") {
  BoundaryCode flower = repeat_block({2, 2, 3}, 6);
  CHECK(d2(flower) == 12);
  CHECK(d3(flower) == 6);
  CHECK(f5(flower) == 0);
  SearchConfig cfg;
  cfg.allow_pentagons = false;
  auto found = fill_search(flower, cfg);
  REQUIRE(found.size() == 1);
  CHECK(found[0].inner_faces().size() == 7);
  for (const auto& f : found[0].inner_faces()) CHECK(f.size() == 6);
}

TEST_CASE("exists_hex") {
  HexMemo memo;
  CHECK(exists_hex(repeated(6, 2), &memo));
  CHECK(exists_hex(repeat_block({2, 2, 3}, 6), &memo));
  CHECK_FALSE(exists_hex(repeat_block({2, 3}, 5), &memo));  // f5 = 6
  CHECK_FALSE(exists_hex(repeated(5, 2), &memo));           // f5 = 1
  // f5 = 0 but the forced lattice walk does not close
  BoundaryCode open = bc({3, 2, 2, 3, 2, 2, 2, 2, 2, 2});
  CHECK(f5(open) == 0);
  CHECK_FALSE(lattice_walk_closes(open));
  CHECK_FALSE(exists_hex(open, &memo));
  // memoized answers stay put
  CHECK(exists_hex(repeated(6, 2), &memo));
}

TEST_CASE("count_distinct examples") {
  CHECK(count_distinct(repeated(6, 2), 10) == 1);
  CHECK(count_distinct(repeated(5, 2), 10) == 1);
  CHECK(count_distinct(bc({3, 2, 2, 2, 3, 2, 2, 2, 2}), 10) == 1);
  // saturation clamps the answer
  CHECK(count_distinct(repeat_block({2, 3}, 5), 3) == 3);
}

TEST_CASE("soundness and dedup over all small codes") {
  SearchConfig cfg;
  cfg.witness_cap = 50;
  for (int n = 1; n <= 10; n++) {
    for (const auto& code : necklaces(n)) {
      int k = f5(code);
      if (k < 0 || k > 6) continue;
      auto found = fill_search(code, cfg);
      std::set<std::string> forms;
      std::set<int> sizes;
      for (const auto& p : found) {
        CHECK(p.boundary_code() == code);  // anchored index-wise
        CHECK(f5_patch(p) == k);
        CHECK(forms.insert(canonical_form(p)).second);  // pairwise inequivalent
        sizes.insert(static_cast<int>(p.inner_faces().size()));
      }
      // hexagonal fillings all share one size
      if (k == 0 && !found.empty()) CHECK(sizes.size() == 1);
    }
  }
}

TEST_CASE("quick rejections never veto a realizable code") {
  SearchConfig cfg;
  cfg.witness_cap = 1;
  for (int n = 5; n <= 11; n++) {
    for (const auto& code : necklaces(n)) {
      int k = f5(code);
      if (k < 0 || k > 6) continue;
      if (!fill_search(code, cfg).empty()) {
        CHECK_FALSE(obviously_unrealizable(code));
        if (k == 0) CHECK(lattice_walk_closes(code));
      }
    }
  }
}

TEST_CASE("lattice walk area matches hexagonal patch sizes") {
  // one hexagon
  CHECK(lattice_walk(repeated(6, 2)).area6 == 6);
  // the flower has seven
  CHECK(lattice_walk(repeat_block({2, 2, 3}, 6)).area6 == 42);
}

TEST_CASE("existence agrees with enumeration") {
  SearchConfig cfg;
  HexMemo memo;
  for (int n = 5; n <= 10; n++) {
    for (const auto& code : necklaces(n)) {
      int k = f5(code);
      if (k < 0 || k > 5) continue;
      bool via_exist = fill_exists(code, cfg, &memo);
      bool via_list = !fill_search(code, cfg).empty();
      CHECK(via_exist == via_list);
    }
  }
}
