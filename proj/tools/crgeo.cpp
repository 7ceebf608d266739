// Command-line front end: claim verification with reports, hypersurface and
// image-cloud sampling to CSV, and cluster-diameter tables at sphere points.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crgeo/construction.hpp"
#include "crgeo/hypersurface.hpp"
#include "crgeo/projective.hpp"
#include "crgeo/verify.hpp"

using namespace crgeo;
namespace cons = crgeo::construction;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitClaimFailure = 1;
constexpr int kExitUsage = 2;

bool write_file(const std::string& path, const std::string& content, std::string& err) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    err = "cannot open '" + path + "' for writing";
    return false;
  }
  out << content;
  out.flush();
  if (!out) {
    err = "error while writing '" + path + "'";
    return false;
  }
  return true;
}

std::vector<double> parse_radii(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    size_t pos = 0;
    double v = std::stod(item, &pos);
    if (pos != item.size() || !(v > 0.0))
      throw std::invalid_argument("radius list entries must be positive numbers");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty radius list");
  return out;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const std::vector<std::string>& tolerances, const std::string& radii,
               std::optional<std::string> only, uint64_t seed, int phases, std::size_t samples,
               std::size_t cloud, bool serial, const std::string& out_path,
               const std::string& json_path) {
  VerifyOptions opt;
  opt.seed = seed;
  opt.phases = phases;
  opt.sample_count = samples;
  opt.cloud_count = cloud;
  if (serial) opt.mode = ExecMode::serial;
  opt.only = std::move(only);
  try {
    if (!radii.empty()) opt.radii = parse_radii(radii);
    for (const auto& t : tolerances) {
      auto eq = t.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("--tolerance expects KEY=VALUE, got '" + t + "'");
      opt.set_tolerance(t.substr(0, eq), std::stod(t.substr(eq + 1)));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  Report report = run_verification(opt);
  std::string text = report_text(report);
  std::cout << text;
  std::string err;
  if (!out_path.empty() && !write_file(out_path, text, err)) {
    std::cerr << "error: " << err << "\n";
    return kExitUsage;
  }
  if (!json_path.empty() && !write_file(json_path, report_json(report), err)) {
    std::cerr << "error: " << err << "\n";
    return kExitUsage;
  }
  return report.all_pass() ? kExitPass : kExitClaimFailure;
}

// ---------------------------------------------------------------------------
// sample

struct StageSetup {
  std::string chart;
  HermPoly rho = HermPoly::zero(cons::zvars());
  Box4 box;
  std::size_t polish_axis = 3;
};

StageSetup stage_setup(const std::string& stage, std::string chart) {
  BlowupTower tower = cons::origin_tower();
  RealHypersurface m(cons::model_rho(), cons::kRoot);
  StageSetup s;
  if (stage == "m") {
    s.chart = cons::kRoot;
    s.rho = cons::model_rho();
    s.box.v = {Interval{-1.5, 1.5}, Interval{-1.5, 1.5}, Interval{-3.0, 3.0},
               Interval{-3.0, 3.0}};
    s.polish_axis = 3;
    return s;
  }
  const std::map<std::string, std::vector<std::string>> allowed{
      {"m1", {cons::kU1p, cons::kU1pp}}, {"m2", {cons::kU2p, cons::kU2pp}}};
  const auto& charts = allowed.at(stage);
  if (chart.empty()) chart = charts.front();
  if (std::find(charts.begin(), charts.end(), chart) == charts.end())
    throw std::invalid_argument("stage " + stage + " lives in charts " + charts[0] + ", " +
                                charts[1]);
  s.chart = chart;
  s.rho = proper_transform(m, tower, chart).total.rho;
  if (chart == cons::kU2pp) {
    s.box.v = {Interval{-2.0, 2.0}, Interval{-2.0, 2.0}, Interval{-1.5, 1.5},
               Interval{-1.5, 1.5}};
    s.polish_axis = 1;  // the defining function is quadratic in Im z1 there
  } else {
    s.box.v = {Interval{-1.5, 1.5}, Interval{-1.5, 1.5}, Interval{-3.0, 3.0},
               Interval{-3.0, 3.0}};
    s.polish_axis = 3;
  }
  return s;
}

std::string csv_row(const std::string& chart, const std::complex<double>& a,
                    const std::complex<double>& b, double residual, double levi) {
  return chart + "," + fmt_double(a.real()) + "," + fmt_double(a.imag()) + "," +
         fmt_double(b.real()) + "," + fmt_double(b.imag()) + "," + fmt_double(std::abs(a)) + "," +
         fmt_double(std::abs(b)) + "," + fmt_double(residual) + "," + fmt_double(levi);
}

int cmd_sample(const std::string& stage, const std::string& chart, std::size_t count,
               uint64_t seed, bool serial, const std::string& out_path) {
  ExecMode mode = serial ? ExecMode::serial : ExecMode::parallel;
  std::vector<std::string> rows;
  try {
    if (stage == "image") {
      // Images of sphere points under the affine form of the map; the
      // residual and Levi columns describe the source sphere point.
      auto [f1, f2] = cons::map_affine_literal();
      SurfaceEval sphere(cons::sphere_rho());
      auto pts = sample_unit_sphere(count, seed, mode);
      auto levis = levi_scan(sphere, pts, mode);
      for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<std::complex<double>> w{pts[i][0], pts[i][1]};
        std::complex<double> a = f1.eval(w);
        std::complex<double> b = f2.eval(w);
        rows.push_back(csv_row("image", a, b, std::abs(sphere.rho(pts[i])), levis[i]));
      }
    } else {
      StageSetup s = stage_setup(stage, chart);
      SurfaceEval surf(s.rho);
      ZeroSetOptions zopt;
      zopt.box = s.box;
      zopt.polish_axis = s.polish_axis;
      zopt.attempts = count * 8;
      zopt.seed = seed;
      auto samples = sample_zero_set(surf, zopt, mode);
      if (samples.size() > count) samples.resize(count);
      std::vector<C2> pts;
      pts.reserve(samples.size());
      for (const auto& q : samples) pts.push_back(q.z);
      auto levis = levi_scan(surf, pts, mode);
      for (std::size_t i = 0; i < samples.size(); ++i)
        rows.push_back(csv_row(s.chart, samples[i].z[0], samples[i].z[1], samples[i].residual,
                               levis[i]));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::sort(rows.begin(), rows.end());
  std::string csv = "chart,re_z1,im_z1,re_z2,im_z2,abs_z1,abs_z2,rho_residual,levi_value\n";
  for (const auto& r : rows) csv += r + "\n";
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    std::string err;
    if (!write_file(out_path, csv, err)) {
      std::cerr << "error: " << err << "\n";
      return kExitUsage;
    }
    std::cout << "wrote " << rows.size() << " rows to " << out_path << "\n";
  }
  return kExitPass;
}

// ---------------------------------------------------------------------------
// cluster

int cmd_cluster(const std::string& point, const std::string& radii_text, int phases,
                const std::string& out_path) {
  std::complex<double> w1, w2;
  std::optional<ProjectivePoint> known_target;
  if (point == "p+" || point == "p-") {
    w1 = 0.0;
    w2 = (point == "p+") ? 1.0 : -1.0;
    known_target = (point == "p+") ? ProjectivePoint::of(0, 1, 0) : ProjectivePoint::of(0, 0, 1);
  } else {
    std::vector<double> v;
    try {
      std::stringstream ss(point);
      std::string item;
      while (std::getline(ss, item, ',')) v.push_back(std::stod(item));
    } catch (const std::exception&) {
      v.clear();
    }
    if (v.size() != 4) {
      std::cerr << "error: --point expects p+, p-, or RE1,IM1,RE2,IM2\n";
      return kExitUsage;
    }
    w1 = {v[0], v[1]};
    w2 = {v[2], v[3]};
  }
  double sphere_res = std::abs(std::norm(w1) + std::norm(w2) - 1.0);
  if (sphere_res > 1e-9) {
    std::cerr << "error: point is not on the unit sphere (|rho| = " << fmt_double(sphere_res)
              << " > 1e-9)\n";
    return kExitUsage;
  }

  std::vector<double> radii{1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  try {
    if (!radii_text.empty()) radii = parse_radii(radii_text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  ProjectiveTriple fw = cons::map_w();

  // Tangent frame at the point: the complex tangent (-conj w2, conj w1), the
  // circle direction i*w, and their mixture.
  std::complex<double> iu(0.0, 1.0);
  std::array<std::complex<double>, 2> tc{-std::conj(w2), std::conj(w1)};
  std::array<std::complex<double>, 2> tr{iu * w1, iu * w2};

  auto image_of = [&](std::complex<double> a, std::complex<double> b) {
    double n = std::sqrt(std::norm(a) + std::norm(b));
    std::vector<std::complex<double>> w{a / n, b / n};
    return fw.eval(w);
  };

  // Reference image: the known limit value at p+-, else the image of the
  // point itself (the map is continuous off the two indeterminacy points).
  std::array<std::complex<double>, 3> ref{};
  if (known_target) {
    for (int k = 0; k < 3; ++k) ref[k] = known_target->h[k].to_complex();
  } else {
    ref = image_of(w1, w2);
  }
  std::size_t rk = 0;
  for (int k = 1; k < 3; ++k)
    if (std::abs(ref[k]) > std::abs(ref[rk])) rk = k;

  auto dist_to_ref = [&](const std::array<std::complex<double>, 3>& p) {
    if (std::abs(ref[rk]) == 0.0) return std::numeric_limits<double>::infinity();
    std::complex<double> pk = p[rk];
    if (std::abs(pk) == 0.0) return std::numeric_limits<double>::infinity();
    double d = 0.0;
    for (int k = 0; k < 3; ++k) {
      if (static_cast<std::size_t>(k) == rk) continue;
      d = std::max(d, std::abs(p[k] / pk - ref[k] / ref[rk]));
    }
    return d;
  };

  std::string out = "radius,cluster_diameter,max_distance_to_"
                    + std::string(known_target ? "limit" : "image") + "\n";
  for (double r : radii) {
    double dmax = 0.0;
    std::vector<std::array<std::complex<double>, 3>> images;
    for (int k = 0; k < phases; ++k) {
      std::complex<double> dir = std::polar(1.0, 2.0 * M_PI * k / phases);
      images.push_back(image_of(w1 + r * dir * tc[0], w2 + r * dir * tc[1]));
      images.push_back(image_of(w1 + r * (dir * tc[0] + tr[0]) / std::sqrt(2.0),
                                w2 + r * (dir * tc[1] + tr[1]) / std::sqrt(2.0)));
    }
    images.push_back(image_of(w1 + r * tr[0], w2 + r * tr[1]));
    double diam = 0.0;
    for (const auto& img : images) {
      double d = dist_to_ref(img);
      dmax = std::max(dmax, d);
    }
    // Diameter: max pairwise distance in the reference chart.
    std::vector<std::pair<std::complex<double>, std::complex<double>>> affine;
    for (const auto& img : images)
      if (std::abs(img[rk]) > 0.0) {
        std::size_t o1 = (rk + 1) % 3, o2 = (rk + 2) % 3;
        affine.push_back({img[o1] / img[rk], img[o2] / img[rk]});
      }
    for (std::size_t i = 0; i < affine.size(); ++i)
      for (std::size_t j = i + 1; j < affine.size(); ++j)
        diam = std::max(diam, std::max(std::abs(affine[i].first - affine[j].first),
                                       std::abs(affine[i].second - affine[j].second)));
    out += fmt_double(r) + "," + fmt_double(diam) + "," + fmt_double(dmax) + "\n";
  }

  if (out_path.empty()) {
    std::cout << out;
  } else {
    std::string err;
    if (!write_file(out_path, out, err)) {
      std::cerr << "error: " << err << "\n";
      return kExitUsage;
    }
    std::cout << "wrote cluster table to " << out_path << "\n";
  }
  return kExitPass;
}

// ---------------------------------------------------------------------------
// report

int cmd_report(const std::string& in_path) {
  std::ifstream in(in_path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open '" << in_path << "'\n";
    return kExitUsage;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    Report r = report_from_json(ss.str());
    std::cout << report_text(r);
    return r.all_pass() ? kExitPass : kExitClaimFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: cannot parse report: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact verification of a rational sphere map: blow-up towers, lifted maps, "
      "hypersurface transforms, and claim-by-claim reports"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run the claim-by-claim verification");
  std::string only_str, radii_str, out_path, json_path;
  std::vector<std::string> tolerances;
  uint64_t seed = VerifyOptions{}.seed;
  int phases = VerifyOptions{}.phases;
  std::size_t samples = VerifyOptions{}.sample_count;
  std::size_t cloud = VerifyOptions{}.cloud_count;
  bool serial = false;
  verify->add_option("--only", only_str, "claim-id prefix filter (e.g. ii.tower)");
  verify->add_option("--seed", seed, "base seed for all sampling substreams");
  verify->add_option("--tolerance", tolerances,
                     "KEY=VALUE with KEY in {residual, cluster, hausdorff, window}; repeatable");
  verify->add_option("--radii", radii_str, "comma-separated approach radii, decreasing");
  verify->add_option("--phases", phases, "phase-circle resolution");
  verify->add_option("--samples", samples, "sample count per sampling task");
  verify->add_option("--cloud", cloud, "image-cloud size");
  verify->add_option("--out", out_path, "also write the text report to this file");
  verify->add_option("--json", json_path, "write the JSON report to this file");
  verify->add_flag("--serial", serial, "run numeric kernels on the serial reference path");

  // sample
  auto* sample = app.add_subcommand("sample", "sample a hypersurface or the image cloud to CSV");
  std::string stage, chart, sample_out;
  std::size_t count = 1000;
  uint64_t sample_seed = 1729;
  bool sample_serial = false;
  sample->add_option("--stage", stage, "m | m1 | m2 | image")
      ->required()
      ->check(CLI::IsMember({"m", "m1", "m2", "image"}));
  sample->add_option("--chart", chart, "chart id for m1/m2 (e.g. U2p)");
  sample->add_option("--count", count, "number of rows requested");
  sample->add_option("--seed", sample_seed, "sampling seed");
  sample->add_option("--out", sample_out, "output CSV path (stdout when omitted)");
  sample->add_flag("--serial", sample_serial, "serial reference path");

  // cluster
  auto* cluster = app.add_subcommand("cluster", "cluster-diameter table at a sphere point");
  std::string point, cluster_radii, cluster_out;
  int cluster_phases = 72;
  cluster->add_option("--point", point, "p+ | p- | RE1,IM1,RE2,IM2 (must lie on the sphere)")
      ->required();
  cluster->add_option("--radii", cluster_radii, "comma-separated approach radii");
  cluster->add_option("--phases", cluster_phases, "phase-circle resolution");
  cluster->add_option("--out", cluster_out, "output path (stdout when omitted)");

  // report
  auto* report = app.add_subcommand("report", "pretty-print a stored JSON report");
  std::string in_path;
  report->add_option("--in", in_path, "JSON report written by verify --json")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (verify->parsed())
    return cmd_verify(tolerances, radii_str,
                      only_str.empty() ? std::nullopt : std::optional<std::string>(only_str), seed,
                      phases, samples, cloud, serial, out_path, json_path);
  if (sample->parsed()) return cmd_sample(stage, chart, count, sample_seed, sample_serial, sample_out);
  if (cluster->parsed()) return cmd_cluster(point, cluster_radii, cluster_phases, cluster_out);
  if (report->parsed()) return cmd_report(in_path);
  return kExitUsage;
}
