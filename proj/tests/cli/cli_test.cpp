#include <doctest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <set>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "zzpers/generate.hpp"
#include "zzpers/io.hpp"
#include "zzpers/oracle/oracle.hpp"

using namespace zzp;
using namespace zzp::testing;
namespace fs = std::filesystem;

namespace {

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() / ("zzp_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Scratch() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
  std::string file(const std::string& name, const std::string& text) const {
    const fs::path p = dir / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

int run(const std::string& args, const std::string& stdout_path = "/dev/null") {
  const std::string cmd = std::string(ZZP_BINARY) + " " + args + " > " + stdout_path + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Events as sets of vertex names, so files that intern names in a different
// order still compare equal.
std::vector<std::pair<Direction, std::set<std::string>>> named_events(const std::string& path) {
  const FiltrationFile file = read_filtration_file(path);
  std::vector<std::pair<Direction, std::set<std::string>>> out;
  for (const auto& e : file.filtration.events()) {
    std::set<std::string> names;
    for (Vertex v : e.simplex.vertices()) names.insert(file.names.name(v));
    out.emplace_back(e.direction, std::move(names));
  }
  return out;
}

const char* kTriangle = "zzfilt v1\na 0\na 1\na 2\na 0 1\na 1 2\na 0 2\nd 0 2\nd 1 2\nd 2\n";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("exit codes") {
    Scratch s;
    const std::string good = s.file("good.zzf", kTriangle);
    CHECK(run("validate " + good) == 0);
    CHECK(run("compute " + good) == 0);
    CHECK(run("--help") == 0);
    CHECK(run("") == 2);
    CHECK(run("compute") == 2);
    CHECK(run("compute " + s.path("missing.zzf")) == 2);
    CHECK(run("compute " + s.file("bad.zzf", "zzfilt v1\na 0 1\n")) == 2);
    CHECK(run("validate " + s.file("bad2.zzf", "zzfilt v1\na 0\nd 1\n")) == 2);
    CHECK(run("compute " + s.file("rep.zzf", "zzfilt v1\na 0\nd 0\na 0\n")) == 3);
    CHECK(run("compute " + s.file("garbage.zzf", "not a filtration\n")) == 2);

    const std::string rel = s.file("rel.zzb", "zzbar v1 m=2 kind=rel\n0 1 1 cc\n");
    CHECK(run("duality " + rel) == 2);
    const std::string abs = s.file("abs.zzb", "zzbar v1 m=2 kind=abs\n0 1 1 cc\n");
    CHECK(run("duality " + abs) == 0);
    CHECK(run("duality " + abs + " --m 3") == 2);
  }

  TEST_CASE("compute then duality matches the relative oracle") {
    Scratch s;
    const auto corpus = random_corpus(8, 77, false);
    for (std::size_t k = 0; k < corpus.size(); ++k) {
      const std::string in = s.file("f" + std::to_string(k) + ".zzf", filtration_to_string(corpus[k]));
      const std::string abs = s.path("abs.zzb"), rel = s.path("rel.zzb"), orel = s.path("orel.zzb");
      REQUIRE(run("compute " + in + " --out " + abs) == 0);
      REQUIRE(run("duality " + abs + " --m " + std::to_string(corpus[k].size()) + " --out " + rel) == 0);
      REQUIRE(run("oracle --relative " + in, orel) == 0);
      CHECK(multiset_equal(read_barcode_file(rel), read_barcode_file(orel)));
      CHECK(multiset_equal(read_barcode_file(abs), oracle::oracle_absolute(corpus[k])));
    }
  }

  TEST_CASE("generate is deterministic and valid") {
    Scratch s;
    std::ostringstream off;
    write_off(off, torus_mesh(6, 5));
    const std::string mesh = s.file("torus.off", off.str());
    const std::string args = "generate --mesh " + mesh + " --axis y --switches 40 --seed ";
    REQUIRE(run(args + "9", s.path("a.zzf")) == 0);
    REQUIRE(run(args + "9", s.path("b.zzf")) == 0);
    CHECK(slurp(s.path("a.zzf")) == slurp(s.path("b.zzf")));
    REQUIRE(run(args + "10", s.path("c.zzf")) == 0);
    CHECK(slurp(s.path("a.zzf")) != slurp(s.path("c.zzf")));
    CHECK(run("validate " + s.path("a.zzf")) == 0);
    CHECK(run("generate --mesh " + mesh + " --axis w") == 2);
  }

  TEST_CASE("convert without switches is the identity") {
    Scratch s;
    std::ostringstream off;
    write_off(off, torus_mesh(4, 3));
    const std::string mesh = s.file("torus.off", off.str());
    REQUIRE(run("generate --mesh " + mesh + " --switches 0", s.path("u.zzf")) == 0);
    REQUIRE(run("convert " + s.path("u.zzf") + " --to updown --out " + s.path("v.zzf")) == 0);
    CHECK(named_events(s.path("u.zzf")) == named_events(s.path("v.zzf")));

    REQUIRE(run("convert " + s.path("u.zzf") + " --to extended --out " + s.path("e.zzf")) == 0);
    const FiltrationFile e = read_filtration_file(s.path("e.zzf"));
    const FiltrationFile u = read_filtration_file(s.path("u.zzf"));
    CHECK(e.filtration.size() == u.filtration.size() + 1);
    CHECK(slurp(s.path("e.zzf")).find(std::string("a ") + kApexName + "\n") != std::string::npos);
  }

  TEST_CASE("manifold and bench") {
    Scratch s;
    std::ostringstream off;
    write_off(off, torus_mesh(4, 3));
    const std::string mesh = s.file("torus.off", off.str());
    REQUIRE(run("generate --mesh " + mesh + " --switches 20 --seed 3", s.path("g.zzf")) == 0);
    REQUIRE(run("manifold " + s.path("g.zzf") + " --complex " + mesh + " --p 2", s.path("top.zzb")) == 0);
    const Barcode top = read_barcode_file(s.path("top.zzb"));
    CHECK(top.kind == BarcodeKind::Relative);
    for (const Interval& x : top.intervals) CHECK(x.dim == 2);
    CHECK(run("manifold " + s.path("g.zzf") + " --complex " + mesh + " --p 2 --recover") == 0);

    REQUIRE(run("bench " + s.path("g.zzf") + " --repeat 2", s.path("b.csv")) == 0);
    const std::string csv = slurp(s.path("b.csv"));
    CHECK(csv.rfind("file,m,run,", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  }
}
