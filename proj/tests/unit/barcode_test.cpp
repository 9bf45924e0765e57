#include <doctest.h>

#include "corpus.hpp"
#include "zzpers/barcode.hpp"
#include "zzpers/pipeline.hpp"

using namespace zzp;
using namespace zzp::testing;

TEST_SUITE("barcode") {
  TEST_CASE("end types from arrows") {
    const std::vector<Arrow> arrows{Arrow::Forward, Arrow::Backward, Arrow::Forward};
    CHECK(classify_ends(0, 3, arrows) == std::pair{EndType::Closed, EndType::Closed});
    CHECK(classify_ends(1, 1, arrows) == std::pair{EndType::Closed, EndType::Closed});
    CHECK(classify_ends(2, 2, arrows) == std::pair{EndType::Open, EndType::Open});
    CHECK(classify_ends(0, 0, arrows) == std::pair{EndType::Closed, EndType::Open});
    CHECK(error_code([&] { classify_ends(2, 1, arrows); }) == ErrorCode::OutOfRange);
    CHECK(error_code([&] { classify_ends(1, 4, arrows); }) == ErrorCode::OutOfRange);
  }

  TEST_CASE("interval basics") {
    const Interval a = iv("oc", 2, 5, 1);
    CHECK(a.type_code() == "oc");
    CHECK(a.to_string() == "oc[2,5]_1");
    CHECK(a.length() == 4);
    CHECK(a.contains(5));
    CHECK_FALSE(a.contains(1));
  }

  TEST_CASE("queries") {
    const Barcode b = bar({iv("cc", 0, 3, 0), iv("co", 1, 1, 0), iv("cc", 2, 3, 1)}, 3);
    CHECK(b.rank_at(1, 0) == 2);
    CHECK(b.rank_at(2, 0) == 1);
    CHECK(b.rank_at(3, 1) == 1);
    CHECK(b.of_dimension(1).size() == 1);
    CHECK(b.of_dimension(2).size() == 0);
  }

  TEST_CASE("multiset comparison") {
    const Barcode a = bar({iv("cc", 0, 1, 0), iv("cc", 0, 1, 0)}, 2);
    const Barcode b = bar({iv("cc", 0, 1, 0), iv("co", 0, 1, 0)}, 2);
    const auto cmp = multiset_equal(a, b);
    CHECK_FALSE(cmp);
    CHECK(cmp.only_in_first == std::vector<Interval>{iv("cc", 0, 1, 0)});
    CHECK(cmp.only_in_second == std::vector<Interval>{iv("co", 0, 1, 0)});
    CHECK(multiset_equal(a, a));
    CHECK(error_code([&] { multiset_equal(a, bar({}, 3)); }) == ErrorCode::ContextMismatch);
    CHECK(error_code([&] { multiset_equal(a, bar({}, 2, BarcodeKind::Relative)); }) == ErrorCode::ContextMismatch);
  }

  TEST_CASE("arrows are recovered from end types") {
    for (const auto& f : random_corpus(30, 5)) {
      if (f.empty()) continue;
      CHECK(arrows_from_barcode(zigzag_barcode(f)) == f.arrows());
    }
    CHECK(error_code([] { arrows_from_barcode(bar({iv("cc", 1, 1, 0), iv("oc", 1, 2, 0)}, 2)); }) ==
          ErrorCode::Inconsistency);
  }
}
