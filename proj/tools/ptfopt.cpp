// ptfopt: compute, search, and validate phase transfer functions of
// binary ring-coded illumination patterns.
//
// Exit codes: 0 success, 1 usage, 2 validation (bad inputs or files),
// 3 numerical.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ptfopt/criteria.hpp"
#include "ptfopt/errors.hpp"
#include "ptfopt/grid_formats.hpp"
#include "ptfopt/imaging.hpp"
#include "ptfopt/led_array.hpp"
#include "ptfopt/manifest.hpp"
#include "ptfopt/optics_config.hpp"
#include "ptfopt/ptf.hpp"
#include "ptfopt/radial_profile.hpp"
#include "ptfopt/ring_pattern.hpp"
#include "ptfopt/search.hpp"

namespace fs = std::filesystem;
using namespace ptfopt;

namespace {

struct CommonOpts {
  std::string config_path;
  double wavelength = 530e-9;
  double na = 0.75;
  double z = 0.5e-6;
  int grid = 256;
  double extent = 2.0;
  int samples = 8;
  std::string out = ".";
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--config", c.config_path,
                  "JSON config file with exactly wavelength_m, objective_na, "
                  "defocus_m, grid_size, freq_extent");
  cmd->add_option("--wavelength", c.wavelength, "illumination wavelength [m]");
  cmd->add_option("--na", c.na, "objective numerical aperture");
  cmd->add_option("--z", c.z, "defocus distance [m]");
  cmd->add_option("--grid", c.grid, "frequency grid samples per side (even)");
  cmd->add_option("--extent", c.extent, "frequency half-extent, NA-normalized");
  cmd->add_option("--samples-per-ring", c.samples, "radial samples per ring");
  cmd->add_option("--out", c.out, "output directory");
}

// Defaults, then the config file, then explicitly passed flags; the final
// combination is validated as a whole.
OpticsConfig resolve_config(const CLI::App* cmd, const CommonOpts& c) {
  OpticsConfig cfg;
  if (!c.config_path.empty()) {
    cfg = config_from_json_file(c.config_path);
  }
  if (cmd->count("--wavelength")) cfg.wavelength = c.wavelength;
  if (cmd->count("--na")) cfg.objective_na = c.na;
  if (cmd->count("--z")) cfg.defocus = c.z;
  if (cmd->count("--grid")) cfg.grid_size = c.grid;
  if (cmd->count("--extent")) cfg.freq_extent = c.extent;
  if (c.samples < 1) {
    throw validation_error("--samples-per-ring must be >= 1");
  }
  return make_config(cfg.wavelength, cfg.objective_na, cfg.defocus, cfg.grid_size,
                     cfg.freq_extent);
}

std::string out_path(const std::string& dir, const std::string& name) {
  return (fs::path(dir) / name).string();
}

void ensure_out_dir(const std::string& dir) {
  fs::create_directories(dir);
}

void emit_manifest(const OpticsConfig& cfg, const std::string& command,
                   std::vector<std::pair<std::string, std::string>> params,
                   const std::string& out_dir) {
  RunManifest m;
  m.config = cfg;
  m.command = command;
  m.parameters = std::move(params);
  m.output_dir = out_dir;
  write_manifest(m, out_path(out_dir, "manifest.json"));
}

GridSidecar sidecar_for(const OpticsConfig& cfg, double defocus_m,
                        const RingPattern& pattern) {
  GridSidecar s;
  s.grid_size = cfg.grid_size;
  s.freq_extent = cfg.freq_extent;
  s.defocus_m = defocus_m;
  s.pattern_mask = pattern.mask;
  s.bit_depth = pattern.bit_depth;
  return s;
}

std::string criteria_line(const CriteriaReport& r) {
  return "pattern " + std::to_string(r.mask) + " (bits=" + std::to_string(r.bit_depth) +
         "): cutoff=" + format_double(r.cutoff) +
         " crossings=" + std::to_string(r.zero_crossings) +
         " mean_abs=" + format_double(r.mean_abs);
}

// ---- subcommand bodies ----

struct PatternOpts {
  std::string pattern;
  int bits = 12;
  double amp_eps = 1e-3;
};

int run_ptf(const CLI::App* cmd, const CommonOpts& com, const PatternOpts& po) {
  const OpticsConfig cfg = resolve_config(cmd, com);
  const RingPattern pat = parse_pattern_spec(po.pattern, po.bits);
  const PTFGrid grid = pattern_ptf_direct(pat, cfg, com.samples);
  ensure_out_dir(com.out);
  const std::string stem = out_path(com.out, "ptf_" + std::to_string(pat.mask));
  write_grid(stem, grid.values, sidecar_for(cfg, cfg.defocus, pat));
  emit_manifest(cfg, "ptf",
                {{"pattern", std::to_string(pat.mask)},
                 {"bits", std::to_string(po.bits)},
                 {"samples_per_ring", std::to_string(com.samples)}},
                com.out);
  std::cout << "pattern " << pat.mask << ": PTF over " << grid.source_count
            << " source points -> " << stem << ".f32\n";
  return 0;
}

int run_profile(const CLI::App* cmd, const CommonOpts& com, const PatternOpts& po) {
  const OpticsConfig cfg = resolve_config(cmd, com);
  const RingPattern pat = parse_pattern_spec(po.pattern, po.bits);
  const PTFGrid grid = pattern_ptf_direct(pat, cfg, com.samples);
  const RadialProfile prof = profile_from_grid(grid.values, cfg);
  const CriteriaReport rep =
      evaluate_profile(prof, pat.mask, pat.bit_depth, po.amp_eps);
  ensure_out_dir(com.out);
  const std::string path =
      out_path(com.out, "profile_" + std::to_string(pat.mask) + ".csv");
  write_profile_csv(path, prof);
  emit_manifest(cfg, "profile",
                {{"pattern", std::to_string(pat.mask)},
                 {"bits", std::to_string(po.bits)},
                 {"samples_per_ring", std::to_string(com.samples)},
                 {"amp_eps", format_double(po.amp_eps)}},
                com.out);
  std::cout << criteria_line(rep) << "\n" << "wrote " << path << "\n";
  return 0;
}

struct ScanOpts {
  int bits = 12;
  double amp_eps = 1e-3;
  bool area_weighted = false;
};

int run_scan(const CLI::App* cmd, const CommonOpts& com, const ScanOpts& so) {
  const OpticsConfig cfg = resolve_config(cmd, com);
  ScanOptions opts;
  opts.amp_eps = so.amp_eps;
  opts.weighting = so.area_weighted ? MeanWeighting::area : MeanWeighting::uniform;
  const SearchResult res = exhaustive_scan(so.bits, cfg, com.samples, opts);

  ensure_out_dir(com.out);
  write_reports_csv(out_path(com.out, "scan_report.csv"), res.reports);
  write_reports_csv(out_path(com.out, "survivors.csv"), res.ranked);
  write_text_file(out_path(com.out, "optimal.txt"),
                  std::to_string(res.optimal) + "\n");
  emit_manifest(cfg, "scan",
                {{"bits", std::to_string(so.bits)},
                 {"samples_per_ring", std::to_string(com.samples)},
                 {"amp_eps", format_double(so.amp_eps)},
                 {"weighting", so.area_weighted ? "area" : "uniform"}},
                com.out);

  std::cout << "scanned " << res.reports.size() << " patterns (bits=" << so.bits
            << ", grid=" << cfg.grid_size << ")\n"
            << "stage 1 (cutoff >= " << format_double(res.stage1_threshold)
            << "): " << res.survivors_stage1.size() << "\n"
            << "stage 2 (zero crossings == 0): " << res.survivors_stage2.size()
            << "\n"
            << "optimal " << criteria_line(res.ranked.front()) << "\n";
  return 0;
}

struct CompareOpts {
  std::vector<std::string> masks;
  int bits = 12;
  double amp_eps = 1e-3;
};

int run_compare(const CLI::App* cmd, const CommonOpts& com, const CompareOpts& co) {
  const OpticsConfig cfg = resolve_config(cmd, com);
  std::vector<RingPattern> patterns;
  patterns.reserve(co.masks.size());
  for (const std::string& spec : co.masks) {
    patterns.push_back(parse_pattern_spec(spec, co.bits));
  }
  RingPtfCache cache(co.bits, cfg, com.samples);
  ScanOptions opts;
  opts.amp_eps = co.amp_eps;
  std::vector<RadialProfile> profiles;
  const std::vector<CriteriaReport> reports =
      compare_patterns(patterns, cache, opts, &profiles);

  ensure_out_dir(com.out);
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    write_profile_csv(
        out_path(com.out, "profile_" + std::to_string(patterns[i].mask) + ".csv"),
        profiles[i]);
  }
  write_reports_csv(out_path(com.out, "compare.csv"), reports);
  std::vector<std::pair<std::string, std::string>> params = {
      {"bits", std::to_string(co.bits)},
      {"samples_per_ring", std::to_string(com.samples)},
      {"amp_eps", format_double(co.amp_eps)}};
  std::string joined;
  for (const RingPattern& p : patterns) {
    if (!joined.empty()) joined += ' ';
    joined += std::to_string(p.mask);
  }
  params.emplace_back("masks", joined);
  emit_manifest(cfg, "compare", std::move(params), com.out);

  for (const CriteriaReport& r : reports) {
    std::cout << criteria_line(r) << "\n";
  }
  std::cout << "wrote " << out_path(com.out, "compare.csv") << " and "
            << reports.size() << " profile CSVs\n";
  return 0;
}

struct SimulateOpts {
  std::string object = "bead";
  std::string pattern;
  int bits = 12;
  unsigned seed = 12345;
};

int run_simulate(const CLI::App* cmd, const CommonOpts& com, const SimulateOpts& so) {
  OpticsConfig cfg = resolve_config(cmd, com);
  if (cfg.defocus == 0.0) {
    throw validation_error("simulate needs a nonzero defocus (--z)");
  }
  cfg.defocus = std::abs(cfg.defocus);
  const RingPattern pat = parse_pattern_spec(so.pattern, so.bits);

  TestObjectKind kind;
  if (so.object == "bead") {
    kind = TestObjectKind::bead;
  } else if (so.object == "bars") {
    kind = TestObjectKind::resolution_bars;
  } else if (so.object == "smooth") {
    kind = TestObjectKind::smooth_random;
  } else {
    throw usage_error("--object must be bead, bars, or smooth");
  }
  TestObjectParams tp;
  tp.seed = so.seed;
  const WeakObject obj = make_test_object(kind, tp, cfg);
  if (obj.weak_warning) {
    std::cout << "note: phase peak exceeds 0.5 rad; the weak-object model is "
                 "a first-order approximation there\n";
  }

  const PTFGrid ptf = pattern_ptf_direct(pat, cfg, com.samples);
  const IntensityStack stack =
      forward_intensity(obj, ptf, {cfg.defocus, 0.0, -cfg.defocus});

  ensure_out_dir(com.out);
  write_grid(out_path(com.out, "phase_truth"), obj.phase.values,
             sidecar_for(cfg, 0.0, pat));
  write_grid(out_path(com.out, "ptf"), ptf.values, sidecar_for(cfg, cfg.defocus, pat));
  const char* names[3] = {"intensity_plus", "intensity_zero", "intensity_minus"};
  for (int i = 0; i < 3; ++i) {
    write_grid(out_path(com.out, names[i]), stack.planes[i].intensity,
               sidecar_for(cfg, stack.planes[i].z, pat));
  }
  emit_manifest(cfg, "simulate",
                {{"object", so.object},
                 {"pattern", std::to_string(pat.mask)},
                 {"bits", std::to_string(so.bits)},
                 {"seed", std::to_string(so.seed)},
                 {"samples_per_ring", std::to_string(com.samples)}},
                com.out);
  std::cout << "simulated " << so.object << " under pattern " << pat.mask
            << " at z = +-" << format_double(cfg.defocus) << " m -> " << com.out
            << "\n";
  return 0;
}

struct ReconstructOpts {
  std::string in;
  std::string out;
  double beta = 0.0;
  double band_eps = 1e-3;
};

int run_reconstruct(const CLI::App* cmd, const ReconstructOpts& ro) {
  const RunManifest sim = read_manifest(out_path(ro.in, "manifest.json"));
  OpticsConfig cfg = sim.config;

  GridSidecar ptf_sc;
  Grid2D ptf_values = read_grid(out_path(ro.in, "ptf"), &ptf_sc);
  if (ptf_sc.grid_size != cfg.grid_size || ptf_sc.freq_extent != cfg.freq_extent) {
    throw validation_error("ptf sidecar disagrees with the manifest configuration");
  }
  if (!(ptf_sc.defocus_m > 0.0)) {
    throw validation_error("ptf sidecar must carry the positive-defocus plane");
  }
  cfg.defocus = ptf_sc.defocus_m;
  PTFGrid ptf;
  ptf.values = std::move(ptf_values);
  ptf.config = cfg;

  GridSidecar sc_plus, sc_minus;
  IntensityStack stack;
  stack.planes.push_back(
      {0.0, read_grid(out_path(ro.in, "intensity_plus"), &sc_plus)});
  stack.planes.back().z = sc_plus.defocus_m;
  stack.planes.push_back(
      {0.0, read_grid(out_path(ro.in, "intensity_minus"), &sc_minus)});
  stack.planes.back().z = sc_minus.defocus_m;

  std::optional<double> beta;
  if (cmd->count("--beta")) {
    beta = ro.beta;
  }
  const auto diff = difference_spectrum(stack);
  const PhaseField rec = reconstruct_phase(diff, ptf, beta);

  const std::string out_dir = ro.out.empty() ? out_path(ro.in, "recon") : ro.out;
  ensure_out_dir(out_dir);
  RingPattern pat;
  pat.bit_depth = ptf_sc.bit_depth;
  pat.mask = ptf_sc.pattern_mask;
  write_grid(out_path(out_dir, "phase_rec"), rec.values, sidecar_for(cfg, 0.0, pat));

  std::vector<std::pair<std::string, std::string>> params = {
      {"in", ro.in},
      {"beta", beta ? format_double(*beta) : std::string("default")},
      {"band_eps", format_double(ro.band_eps)}};
  emit_manifest(cfg, "reconstruct", std::move(params), out_dir);

  if (fs::exists(out_path(ro.in, "phase_truth.f32"))) {
    PhaseField truth;
    truth.values = read_grid(out_path(ro.in, "phase_truth"));
    truth.pixel_pitch = cfg.pixel_pitch();
    const double rmse = in_passband_rmse(rec, truth, ptf, ro.band_eps);
    double peak = 0.0;
    for (double v : truth.values.v) {
      peak = std::max(peak, std::abs(v));
    }
    std::string line = "round-trip RMSE = " + format_double(rmse) + " rad";
    if (peak > 0.0) {
      line += " (" + format_double(100.0 * rmse / peak) + "% of truth peak)";
    }
    std::cout << line << "\n";
    write_text_file(out_path(out_dir, "rmse.txt"), line + "\n");
  }
  std::cout << "wrote " << out_path(out_dir, "phase_rec.f32") << "\n";
  return 0;
}

struct LedMapOpts {
  std::string pattern;
  int extent = 15;
  double na_per_led = 1.0 / 7.0;
  double pitch = 1.25e-3;
};

int run_led_map(const CLI::App* cmd, const CommonOpts& com, const LedMapOpts& lo) {
  const OpticsConfig cfg = resolve_config(cmd, com);
  const LedArrayConfig led_cfg = make_led_config(lo.pitch, lo.extent, lo.na_per_led);
  const int bits = (lo.extent + 1) / 2;
  const RingPattern pat = parse_pattern_spec(lo.pattern, bits);
  const LedMask mask = ring_to_led_mask(pat, led_cfg);

  ensure_out_dir(com.out);
  write_text_file(out_path(com.out, "led_mask.txt"), led_ascii(mask));
  write_text_file(out_path(com.out, "led_mask.json"), led_json(mask, led_cfg));
  emit_manifest(cfg, "led-map",
                {{"pattern", std::to_string(pat.mask)},
                 {"bits", std::to_string(bits)},
                 {"used_extent", std::to_string(lo.extent)},
                 {"na_per_led", format_double(lo.na_per_led)},
                 {"pitch_m", format_double(lo.pitch)}},
                com.out);
  std::cout << "pattern " << pat.mask << " -> " << mask.count() << " LEDs on a "
            << lo.extent << "x" << lo.extent << " patch\n";
  return 0;
}

int run_verify(const std::vector<std::string>& paths) {
  int verified = 0;
  for (const std::string& raw : paths) {
    if (fs::is_directory(raw)) {
      std::vector<std::string> stems;
      for (const auto& entry : fs::directory_iterator(raw)) {
        if (entry.path().extension() == ".f32") {
          stems.push_back(entry.path().parent_path() /
                          entry.path().stem().string());
        }
      }
      std::sort(stems.begin(), stems.end());
      for (const std::string& stem : stems) {
        verify_grid_pair(stem);
        std::cout << "OK " << stem << "\n";
        ++verified;
      }
      const std::string manifest_path = out_path(raw, "manifest.json");
      if (fs::exists(manifest_path)) {
        read_manifest(manifest_path);
        std::cout << "OK " << manifest_path << "\n";
        ++verified;
      }
      if (stems.empty() && !fs::exists(manifest_path)) {
        throw validation_error("nothing to verify in " + raw);
      }
    } else {
      std::string stem = raw;
      const std::string ext = fs::path(raw).extension().string();
      if (ext == ".f32" || ext == ".json") {
        stem = raw.substr(0, raw.size() - ext.size());
      }
      verify_grid_pair(stem);
      std::cout << "OK " << stem << "\n";
      ++verified;
    }
  }
  std::cout << "verified " << verified << " artifact(s)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "phase transfer functions of binary ring-coded illumination: compute, "
      "search, simulate, reconstruct"};
  app.require_subcommand(1);

  CommonOpts com_ptf, com_profile, com_scan, com_compare, com_simulate, com_led;
  PatternOpts po_ptf, po_profile;
  ScanOpts so;
  CompareOpts co;
  SimulateOpts sim;
  ReconstructOpts ro;
  LedMapOpts lo;
  std::vector<std::string> verify_paths;

  CLI::App* c_ptf = app.add_subcommand("ptf", "compute a pattern's PTF grid");
  add_common(c_ptf, com_ptf);
  c_ptf->add_option("--pattern", po_ptf.pattern,
                    "pattern as decimal, 0b binary, or ring list (R11 or R7,R11)")
      ->required();
  c_ptf->add_option("--bits", po_ptf.bits, "pattern bit depth");

  CLI::App* c_profile =
      app.add_subcommand("profile", "radial PTF profile and criteria of a pattern");
  add_common(c_profile, com_profile);
  c_profile->add_option("--pattern", po_profile.pattern, "pattern spec")->required();
  c_profile->add_option("--bits", po_profile.bits, "pattern bit depth");
  c_profile->add_option("--amp-eps", po_profile.amp_eps,
                        "relative amplitude threshold for cutoff/crossings");

  CLI::App* c_scan =
      app.add_subcommand("scan", "score every pattern and apply the filter cascade");
  add_common(c_scan, com_scan);
  c_scan->add_option("--bits", so.bits, "pattern bit depth (2..20)");
  c_scan->add_option("--amp-eps", so.amp_eps, "relative amplitude threshold");
  c_scan->add_flag("--area-weighted", so.area_weighted,
                   "weight the passband mean by radius instead of uniformly");

  CLI::App* c_compare =
      app.add_subcommand("compare", "criteria and profiles for selected patterns");
  add_common(c_compare, com_compare);
  c_compare->add_option("--masks", co.masks, "pattern specs (space separated)")
      ->required()
      ->expected(-1);
  c_compare->add_option("--bits", co.bits, "pattern bit depth");
  c_compare->add_option("--amp-eps", co.amp_eps, "relative amplitude threshold");

  CLI::App* c_simulate = app.add_subcommand(
      "simulate", "defocused intensities of a synthetic phase object");
  add_common(c_simulate, com_simulate);
  c_simulate->add_option("--object", sim.object, "bead, bars, or smooth")
      ->check(CLI::IsMember({"bead", "bars", "smooth"}));
  c_simulate->add_option("--pattern", sim.pattern, "illumination pattern spec")
      ->required();
  c_simulate->add_option("--bits", sim.bits, "pattern bit depth");
  c_simulate->add_option("--seed", sim.seed, "random seed for the smooth object");

  CLI::App* c_reconstruct = app.add_subcommand(
      "reconstruct", "invert a simulated defocus pair back to phase");
  c_reconstruct->add_option("--in", ro.in, "simulate output directory")->required();
  c_reconstruct->add_option("--out", ro.out, "output directory (default <in>/recon)");
  c_reconstruct->add_option("--beta", ro.beta,
                            "Tikhonov strength (default 1e-3 * max|H|^2)");
  c_reconstruct->add_option("--band-eps", ro.band_eps,
                            "passband threshold for the RMSE report");

  CLI::App* c_led = app.add_subcommand(
      "led-map", "map a ring pattern onto the discrete LED board");
  add_common(c_led, com_led);
  c_led->add_option("--pattern", lo.pattern,
                    "pattern spec; bit depth is (used_extent+1)/2")
      ->required();
  c_led->add_option("--used-extent", lo.extent, "LEDs per side of the used patch (odd)");
  c_led->add_option("--na-per-led", lo.na_per_led, "illumination-NA step per LED");
  c_led->add_option("--pitch", lo.pitch, "board spacing [m]");

  CLI::App* c_verify = app.add_subcommand(
      "verify", "re-validate sidecar/payload consistency of written artifacts");
  c_verify
      ->add_option("paths", verify_paths,
                   "grid stems, .f32/.json files, or artifact directories")
      ->required()
      ->expected(-1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (c_ptf->parsed()) return run_ptf(c_ptf, com_ptf, po_ptf);
    if (c_profile->parsed()) return run_profile(c_profile, com_profile, po_profile);
    if (c_scan->parsed()) return run_scan(c_scan, com_scan, so);
    if (c_compare->parsed()) return run_compare(c_compare, com_compare, co);
    if (c_simulate->parsed()) return run_simulate(c_simulate, com_simulate, sim);
    if (c_reconstruct->parsed()) return run_reconstruct(c_reconstruct, ro);
    if (c_led->parsed()) return run_led_map(c_led, com_led, lo);
    if (c_verify->parsed()) return run_verify(verify_paths);
    throw usage_error("no subcommand given");
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const validation_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const numerical_error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
