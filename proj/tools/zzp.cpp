// zzp: command-line front end for zigzag persistence of non-repetitive
// simplex-wise filtrations.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zzpers/duality.hpp"
#include "zzpers/error.hpp"
#include "zzpers/extended.hpp"
#include "zzpers/generate.hpp"
#include "zzpers/io.hpp"
#include "zzpers/manifold.hpp"
#include "zzpers/oracle/oracle.hpp"
#include "zzpers/pipeline.hpp"

namespace {

using namespace zzp;

// Writes to `path`, or stdout when it is empty.
void emit(const std::string& path, const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
  write(out);
  if (!out) throw Error(ErrorCode::InvalidInput, "failed writing " + path);
}

ReductionStrategy strategy_of(const std::string& name) {
  return name == "standard" ? ReductionStrategy::Standard : ReductionStrategy::Twist;
}

int cmd_validate(const std::string& path) {
  const FiltrationFile file = read_filtration_file(path);
  const ZigzagFiltration& f = file.filtration;
  const auto violations = validate(f);
  for (const Violation& v : violations) std::cerr << path << ": " << v.to_string() << '\n';
  if (!violations.empty()) return 2;
  const auto rep = find_repetition(f);
  std::cout << "valid m=" << f.size() << " simplices=" << total_complex(f).size()
            << " standardized=" << (is_standardized(f) ? "yes" : "no")
            << " non-repetitive=" << (rep ? "no" : "yes");
  if (file.is_coarse()) std::cout << " coarse-steps=" << file.coarse_arrows.size();
  std::cout << '\n';
  if (rep) {
    std::cout << "repetition:";
    for (Vertex v : rep->simplex.vertices()) std::cout << ' ' << file.names.name(v);
    std::cout << " deleted at " << rep->deleted_at << ", added again at " << rep->added_again_at << '\n';
  }
  return 0;
}

int cmd_compute(const std::string& path, const std::string& out, bool coarse, const std::string& strategy) {
  const FiltrationFile file = read_filtration_file(path);
  const PipelineResult r = zigzag_pipeline(file.filtration, nullptr, strategy_of(strategy));
  const Barcode b = coarse ? coarsen(r.barcode, file) : r.barcode;
  emit(out, [&](std::ostream& os) { write_barcode(os, b); });
  return 0;
}

int cmd_convert(const std::string& path, const std::string& to, const std::string& out) {
  FiltrationFile file = read_filtration_file(path);
  require_valid(file.filtration);
  const ZigzagFiltration standardized = standardize(file.filtration).filtration;
  const UpDown u = to_updown(standardized);
  if (to == "updown") {
    emit(out, [&](std::ostream& os) { write_filtration(os, u.filtration, file.names); });
    return 0;
  }
  const ExtendedFiltration e = build_extended(u.filtration);
  std::vector<FiltrationEvent> events;
  events.reserve(e.additions.size());
  for (const Simplex& s : e.additions) events.push_back(add(s));
  file.names.assign(e.apex, kApexName);
  emit(out, [&](std::ostream& os) { write_filtration(os, ZigzagFiltration(std::move(events)), file.names); });
  return 0;
}

int cmd_duality(const std::string& path, std::optional<std::size_t> m, const std::string& out) {
  const Barcode abs = read_barcode_file(path);
  if (abs.kind != BarcodeKind::Absolute) throw Error(ErrorCode::ContextMismatch, path + " is not an absolute barcode");
  if (m && *m != abs.m) {
    throw Error(ErrorCode::ContextMismatch,
                "--m " + std::to_string(*m) + " disagrees with m=" + std::to_string(abs.m) + " in " + path);
  }
  const Barcode rel = absolute_to_relative(abs);
  emit(out, [&](std::ostream& os) { write_barcode(os, rel); });
  return 0;
}

int cmd_manifold(const std::string& path, const std::string& complex_path, std::size_t p, bool recover,
                 const std::string& out) {
  FiltrationFile file = read_filtration_file(path);
  require_valid(file.filtration);
  const SimplicialComplex K = read_complex_file(complex_path, file.names);
  const Barcode b = recover ? manifold_absolute_barcode(file.filtration, K, p)
                            : relative_top_barcode(file.filtration, K, p);
  emit(out, [&](std::ostream& os) { write_barcode(os, b); });
  return 0;
}

int cmd_oracle(const std::string& path, bool relative, bool coarse, const std::string& out) {
  const FiltrationFile file = read_filtration_file(path);
  require_valid(file.filtration);
  Barcode b = relative ? oracle::oracle_relative(file.filtration) : oracle::oracle_absolute(file.filtration);
  if (coarse) b = coarsen(b, file);
  emit(out, [&](std::ostream& os) { write_barcode(os, b); });
  return 0;
}

int cmd_generate(const std::string& mesh_path, int axis, std::size_t switches, std::uint64_t seed,
                 std::optional<double> rips, const std::string& out) {
  GenerateOptions opt;
  opt.axis = axis;
  opt.switches = switches;
  opt.seed = seed;
  opt.rips_radius = rips;
  const GeneratedFiltration g = generate(read_off_file(mesh_path), opt);
  if (g.switches_applied < switches) {
    std::cerr << "note: only " << g.switches_applied << " outward switches were possible\n";
  }
  emit(out, [&](std::ostream& os) { write_filtration(os, g.filtration); });
  return 0;
}

int cmd_bench(const std::vector<std::string>& paths, std::size_t repeat, const std::string& strategy,
              const std::string& out) {
  std::vector<std::pair<std::string, ZigzagFiltration>> inputs;
  for (const std::string& p : paths) inputs.emplace_back(p, read_filtration_file(p).filtration);
  emit(out, [&](std::ostream& os) {
    os << "file,m,run,bars,validate_s,convert_s,reduce_s,remap_s,total_s\n";
    for (const auto& [path, f] : inputs) {
      for (std::size_t run = 0; run < repeat; ++run) {
        PhaseTimings t;
        const PipelineResult r = zigzag_pipeline(f, &t, strategy_of(strategy));
        os << path << ',' << f.size() << ',' << run << ',' << r.barcode.size() << ',' << t.validate << ','
           << t.convert << ',' << t.reduce << ',' << t.remap << ',' << t.total() << '\n';
        os.flush();
      }
    }
  });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zigzag persistence of non-repetitive filtrations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "zzp 0.1.0");

  const std::map<std::string, std::string> strategies{{"twist", "twist"}, {"standard", "standard"}};
  std::string input, out, strategy = "twist";

  auto* validate_cmd = app.add_subcommand("validate", "Check that a filtration is well formed");
  validate_cmd->add_option("filtration", input, "zzfilt file")->required();

  bool coarse = false;
  auto* compute_cmd = app.add_subcommand("compute", "Barcode of a non-repetitive filtration");
  compute_cmd->add_option("filtration", input, "zzfilt file")->required();
  compute_cmd->add_option("-o,--out", out, "barcode file (default stdout)");
  compute_cmd->add_flag("--coarse", coarse, "report indices of the coarse steps of block files");
  compute_cmd->add_option("--strategy", strategy, "column reduction")->transform(CLI::IsMember(strategies));

  std::string to;
  auto* convert_cmd = app.add_subcommand("convert", "Up-down form or coned extended filtration");
  convert_cmd->add_option("filtration", input, "zzfilt file")->required();
  convert_cmd->add_option("--to", to, "updown or extended")->required()->check(CLI::IsMember({"updown", "extended"}));
  convert_cmd->add_option("-o,--out", out, "output file (default stdout)");

  std::optional<std::size_t> m;
  auto* duality_cmd = app.add_subcommand("duality", "Relative barcode from an absolute one");
  duality_cmd->add_option("barcode", input, "zzbar file with kind=abs")->required();
  duality_cmd->add_option("--m", m, "filtration length, checked against the file");
  duality_cmd->add_option("-o,--out", out, "output file (default stdout)");

  std::string complex_path;
  std::size_t p = 2;
  bool recover = false;
  auto* manifold_cmd = app.add_subcommand("manifold", "Top relative barcode of a closed manifold via its dual graph");
  manifold_cmd->add_option("filtration", input, "zzfilt file")->required();
  manifold_cmd->add_option("--complex", complex_path, "zzcplx or OFF file of the manifold")->required();
  manifold_cmd->add_option("--p", p, "manifold dimension")->check(CLI::PositiveNumber);
  manifold_cmd->add_flag("--recover", recover, "recover the absolute barcode instead");
  manifold_cmd->add_option("-o,--out", out, "output file (default stdout)");

  bool relative = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force barcode for cross-checking small inputs");
  oracle_cmd->add_option("filtration", input, "zzfilt file")->required();
  oracle_cmd->add_flag("--relative", relative, "barcode of the pairs (K, K_i)");
  oracle_cmd->add_flag("--coarse", coarse, "report indices of the coarse steps of block files");
  oracle_cmd->add_option("-o,--out", out, "output file (default stdout)");

  std::string mesh, axis_name = "z";
  std::size_t switches = 0;
  std::uint64_t seed = 0;
  std::optional<double> rips;
  auto* generate_cmd = app.add_subcommand("generate", "Height-function filtration of a mesh with random switches");
  generate_cmd->add_option("--mesh", mesh, "OFF file")->required();
  generate_cmd->add_option("--axis", axis_name, "height axis")->check(CLI::IsMember({"x", "y", "z"}));
  generate_cmd->add_option("--switches", switches, "number of random outward switches");
  generate_cmd->add_option("--seed", seed, "seed of the switch sequence");
  generate_cmd->add_option("--rips-supplement", rips, "add the Rips 2-skeleton at this radius");
  generate_cmd->add_option("-o,--out", out, "output file (default stdout)");

  std::vector<std::string> bench_inputs;
  std::size_t repeat = 1;
  auto* bench_cmd = app.add_subcommand("bench", "Per-phase pipeline timings as CSV");
  bench_cmd->add_option("filtrations", bench_inputs, "zzfilt files")->required();
  bench_cmd->add_option("--repeat", repeat, "runs per file")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--strategy", strategy, "column reduction")->transform(CLI::IsMember(strategies));
  bench_cmd->add_option("-o,--out", out, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate_cmd) return cmd_validate(input);
    if (*compute_cmd) return cmd_compute(input, out, coarse, strategy);
    if (*convert_cmd) return cmd_convert(input, to, out);
    if (*duality_cmd) return cmd_duality(input, m, out);
    if (*manifold_cmd) return cmd_manifold(input, complex_path, p, recover, out);
    if (*oracle_cmd) return cmd_oracle(input, relative, coarse, out);
    if (*generate_cmd) {
      const int axis = axis_name == "x" ? 0 : axis_name == "y" ? 1 : 2;
      return cmd_generate(mesh, axis, switches, seed, rips, out);
    }
    if (*bench_cmd) return cmd_bench(bench_inputs, repeat, strategy, out);
  } catch (const Error& e) {
    std::cerr << "zzp: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "zzp: internal error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
