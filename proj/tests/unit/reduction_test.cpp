#include <doctest.h>

#include "corpus.hpp"
#include "zzpers/reduction.hpp"

using namespace zzp;
using namespace zzp::testing;

TEST_SUITE("reduction") {
  TEST_CASE("boundary matrix of a triangle") {
    const std::vector<Simplex> adds{Simplex{0}, Simplex{1}, Simplex{2}, Simplex{0, 1}, Simplex{1, 2}, Simplex{0, 2},
                                    Simplex{0, 1, 2}};
    const BoundaryMatrix m = boundary_matrix(adds);
    REQUIRE(m.size() == 7);
    CHECK(m.columns[0].empty());
    CHECK(m.columns[3] == Column{0, 1});
    CHECK(m.columns[5] == Column{0, 2});
    CHECK(m.columns[6] == Column{3, 4, 5});
    CHECK(m.dims == std::vector<std::size_t>{0, 0, 0, 1, 1, 1, 2});
  }

  TEST_CASE("pairs of a filled triangle") {
    for (auto strategy : {ReductionStrategy::Standard, ReductionStrategy::Twist}) {
      const ReductionState st = reduce(filt("+0 +1 +2 +0,1 +1,2 +0,2 +0,1,2"), strategy);
      CHECK(st.pairs == std::vector<PersistencePair>{{1, 3}, {2, 4}, {5, 6}});
      CHECK(st.essentials == std::vector<std::size_t>{0});
      CHECK(st.low[5] == ReductionState::npos);
      CHECK(st.low[6] == 5);
    }
  }

  TEST_CASE("hollow triangle keeps its loop") {
    const ReductionState st = reduce(filt("+0 +1 +2 +0,1 +1,2 +0,2"));
    CHECK(st.essentials == std::vector<std::size_t>{0, 5});
  }

  TEST_CASE("strategies agree on random filtrations") {
    SplitMix64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
      const SimplicialComplex K = random_complex(rng);
      const auto events = random_updown(K, rng).events();
      const ZigzagFiltration up(std::vector<FiltrationEvent>(events.begin(), events.begin() + K.size()));
      const auto a = reduce(up, ReductionStrategy::Standard);
      const auto b = reduce(up, ReductionStrategy::Twist);
      CHECK(a.pairs == b.pairs);
      CHECK(a.essentials == b.essentials);
    }
  }

  TEST_CASE("malformed input") {
    CHECK(error_code([] { boundary_matrix(std::vector<Simplex>{Simplex{0, 1}}); }) == ErrorCode::InvalidInput);
    CHECK(error_code([] { boundary_matrix(std::vector<Simplex>{Simplex{0}, Simplex{0}}); }) == ErrorCode::InvalidInput);
    CHECK(error_code([] { reduce(filt("+0 -0")); }) == ErrorCode::InvalidInput);
    CHECK(error_code([] { reduce(ZigzagFiltration({add(Simplex{1})}, {Simplex{0}})); }) == ErrorCode::InvalidInput);
  }
}
