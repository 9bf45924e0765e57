#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "corpus.hpp"
#include "zzpers/generate.hpp"
#include "zzpers/io.hpp"
#include "zzpers/pipeline.hpp"

using namespace zzp;
using namespace zzp::testing;

namespace {

std::optional<ErrorCode> parse_error(const std::string& text) {
  return error_code([&] { parse_filtration_string(text); });
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("names are interned in order of appearance") {
    const FiltrationFile file = parse_filtration_string(
        "zzfilt v1\n"
        "# a path\n"
        "a b\n"
        "a a   # second vertex\n"
        "a a b\n"
        "d b a\n");
    CHECK(file.filtration == filt("+0 +1 +0,1 -0,1"));
    CHECK(file.names.name(0) == "b");
    CHECK(file.names.name(1) == "a");
    CHECK(file.names.name(7) == "7");
    CHECK_FALSE(file.is_coarse());
  }

  TEST_CASE("initial complex and blocks") {
    const FiltrationFile file = parse_filtration_string(
        "zzfilt v1\n"
        "i 0\n"
        "i 1\n"
        "begin-a\n"
        "1 2\n"
        "0 1\n"
        "2\n"
        "end-a\n"
        "begin-d\n"
        "0 1\n"
        "1 2\n"
        "end-d\n"
        "d 2\n");
    CHECK(file.filtration.initial().size() == 2);
    CHECK(file.filtration.events() == filt("+2 +0,1 +1,2 -1,2 -0,1 -2").events());
    CHECK(file.is_coarse());
    CHECK(file.coarse_index == std::vector<std::size_t>{0, 3, 5, 6});
    CHECK(file.coarse_arrows == std::vector<Arrow>{Arrow::Forward, Arrow::Backward, Arrow::Backward});
  }

  TEST_CASE("malformed filtration files") {
    CHECK(parse_error("") == ErrorCode::InvalidInput);
    CHECK(parse_error("zzfilt v2\n") == ErrorCode::InvalidInput);
    CHECK(parse_error("zzfilt v1\nx 0\n") == ErrorCode::InvalidInput);
    CHECK(parse_error("zzfilt v1\na 0 0\n") == ErrorCode::InvalidInput);
    CHECK(parse_error("zzfilt v1\na\n") == ErrorCode::InvalidInput);
    CHECK(parse_error("zzfilt v1\na 0\ni 1\n") == ErrorCode::InvalidInput);
    CHECK(parse_error("zzfilt v1\nbegin-a\n0\n") == ErrorCode::InvalidInput);
    CHECK(parse_error("zzfilt v1\nbegin-a\nend-a\n") == ErrorCode::InvalidInput);
    CHECK(parse_error("zzfilt v1\nbegin-a\n0\nend-d\n") == ErrorCode::InvalidInput);
    try {
      parse_filtration_string("zzfilt v1\na 0\n\nfoo\n");
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
  }

  TEST_CASE("filtration round trip") {
    for (const auto& f : random_corpus(20, 17)) {
      const FiltrationFile back = parse_filtration_string(filtration_to_string(f));
      REQUIRE(back.filtration.size() == f.size());
      CHECK(back.filtration.initial().size() == f.initial().size());
      for (std::size_t i = 0; i < f.size(); ++i) {
        CHECK(back.filtration.direction(i) == f.direction(i));
        std::vector<std::string> want, got;
        for (Vertex v : f.simplex(i).vertices()) want.push_back(std::to_string(v));
        for (Vertex v : back.filtration.simplex(i).vertices()) got.push_back(back.names.name(v));
        std::sort(want.begin(), want.end());
        std::sort(got.begin(), got.end());
        CHECK(got == want);
      }
    }
  }

  TEST_CASE("coarsening") {
    const FiltrationFile file = parse_filtration_string(
        "zzfilt v1\nbegin-a\n0\n1\nend-a\nbegin-d\n1\nend-d\nbegin-d\n0\nend-d\n");
    const Barcode fine = zigzag_barcode(file.filtration);
    CHECK(multiset_equal(coarsen(fine, file), bar({iv("cc", 1, 2, 0), iv("cc", 1, 1, 0)}, 3)));
    const std::vector<std::size_t> idx{0, 1};
    CHECK(error_code([&] { coarsen(fine, idx, file.coarse_arrows); }) == ErrorCode::ContextMismatch);
  }

  TEST_CASE("barcode round trip") {
    const Barcode b = bar({iv("oo", 2, 6, 1), iv("cc", 1, 7, 0), iv("co", 0, 0, 2)}, 8, BarcodeKind::Relative);
    const std::string text = barcode_to_string(b);
    CHECK(text == "zzbar v1 m=8 kind=rel\n0 1 7 cc\n1 2 6 oo\n2 0 0 co\n");
    std::istringstream in(text);
    CHECK(multiset_equal(parse_barcode(in), b));
  }

  TEST_CASE("malformed barcode files") {
    auto err = [](const std::string& text) {
      return error_code([&] {
        std::istringstream in(text);
        parse_barcode(in);
      });
    };
    CHECK(err("zzbar v1 m=3\n") == ErrorCode::InvalidInput);
    CHECK(err("zzbar v1 m=3 kind=xyz\n") == ErrorCode::InvalidInput);
    CHECK(err("zzbar v1 m=3x kind=abs\n") == ErrorCode::InvalidInput);
    CHECK(err("zzbar v1 m=3 kind=abs\n0 2 1 cc\n") == ErrorCode::InvalidInput);
    CHECK(err("zzbar v1 m=3 kind=abs\n0 1 4 cc\n") == ErrorCode::InvalidInput);
    CHECK(err("zzbar v1 m=3 kind=abs\n0 1 2 cx\n") == ErrorCode::InvalidInput);
    CHECK(err("zzbar v1 m=3 kind=abs\n0 -1 2 cc\n") == ErrorCode::InvalidInput);
  }

  TEST_CASE("complex files") {
    VertexNames names;
    std::istringstream in("zzcplx v1\n# two triangles\nx y z\ny z w\n");
    const SimplicialComplex K = parse_complex(in, names);
    CHECK(K.size() == 4 + 5 + 2);
    CHECK(names.name(3) == "w");

    VertexNames off_names;
    std::istringstream off("OFF\n4 1 0\n0 0 0\n1 0 0\n0 1 0\n1 1 0\n4 0 1 3 2\n");
    const SimplicialComplex Q = parse_complex(off, off_names);
    CHECK(Q.count(2) == 2);
    CHECK(Q.count(1) == 5);
  }

  TEST_CASE("OFF parsing and writing") {
    const Mesh torus = torus_mesh(4, 5);
    std::stringstream buf;
    write_off(buf, torus);
    const Mesh back = parse_off(buf);
    CHECK(back.vertices == torus.vertices);
    CHECK(back.triangles == torus.triangles);

    auto err = [](const std::string& text) {
      return error_code([&] {
        std::istringstream in(text);
        parse_off(in);
      });
    };
    CHECK(err("PLY\n") == ErrorCode::InvalidInput);
    CHECK(err("OFF\n3 1 0\n0 0 0\n1 0 0\n") == ErrorCode::InvalidInput);
    CHECK(err("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 5\n") == ErrorCode::InvalidInput);
    CHECK(err("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 1\n") == ErrorCode::InvalidInput);
    CHECK(err("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n2 0 1\n") == ErrorCode::InvalidInput);
  }

  TEST_CASE("files on disk") {
    const auto dir = std::filesystem::temp_directory_path() / "zzpers_io_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "f.zzf").string();
    {
      std::ofstream out(path);
      write_filtration(out, filt("+0 +1 -1 -0"));
    }
    CHECK(read_filtration_file(path).filtration == filt("+0 +1 -1 -0"));
    CHECK(error_code([&] { read_filtration_file((dir / "missing").string()); }) == ErrorCode::InvalidInput);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("apex names") {
    VertexNames names;
    names.intern("a");
    names.assign(5, kApexName);
    CHECK(names.name(5) == "_omega");
    CHECK(names.name(3) == "3");
    CHECK(error_code([&] { names.assign(6, "a"); }) == ErrorCode::InvalidInput);
  }
}
