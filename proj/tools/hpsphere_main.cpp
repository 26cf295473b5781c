#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hpsphere/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot read spec file: " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

struct VerifyArgs {
  int n = 0;
  std::string family;
  int lambda = 0;
  double t = -1.0;
  int m1 = 0;
  int m2 = 0;
  std::string spec_path;
  int samples = 20;
  double step = 1e-2;
};

int run_verify(const VerifyArgs& args, std::uint64_t seed, const std::string& format,
               const std::string& out_path) {
  hpsphere::VerifyOptions options;
  options.samples = args.samples;
  options.curvature_step = args.step;
  options.seed = seed;
  if (args.t >= 0.0) options.t = args.t;

  hpsphere::VerificationReport report;
  if (!args.spec_path.empty()) {
    std::string warning;
    const hpsphere::BasePoint z = hpsphere::load_orbit_spec(read_file(args.spec_path), &warning);
    if (!warning.empty()) std::cerr << "warning: " << warning << "\n";
    std::ostringstream params;
    params << "rep=[";
    for (int alpha = 0; alpha < z.rep().block_count(); ++alpha)
      params << (alpha ? "," : "") << z.rep().block(alpha);
    params << "] lambda=" << z.weight();
    report = hpsphere::verify_base_point(z, options, "custom", params.str());
  } else {
    if (args.family.empty())
      throw std::invalid_argument("verify: either --family or --spec is required");
    const auto kind = hpsphere::family_kind_from_name(args.family);
    if (!kind) throw std::invalid_argument("verify: unknown family name: " + args.family);
    if (args.n < 1) throw std::invalid_argument("verify: --n must be at least 1");
    const hpsphere::FamilyDescriptor family =
        hpsphere::make_family(*kind, args.n, args.lambda, args.m1, args.m2);
    report = hpsphere::verify_family(family, options);
  }

  write_output(hpsphere::render(hpsphere::verification_document({report}), format), out_path);
  if (!report.pass) {
    std::cerr << "verification failed:";
    for (const std::string& f : report.failures) std::cerr << ' ' << f;
    std::cerr << "\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal homogeneous two-spheres in quaternionic projective space: "
               "classification tables and numeric verification"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::string out_path;
  std::uint64_t seed = 1;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "md"}))
      ->capture_default_str();
  app.add_option("--seed", seed, "Random seed for sampling")->capture_default_str();
  app.add_option("--out", out_path, "Write the report to FILE instead of standard output");

  int classify_n = 0;
  CLI::App* classify = app.add_subcommand("classify", "Enumerate the minimal families in HP^n");
  classify->add_option("--n", classify_n, "Ambient quaternionic projective dimension")
      ->required();

  VerifyArgs vargs;
  CLI::App* verify = app.add_subcommand("verify", "Verify a family or an orbit spec file");
  verify->add_option("--n", vargs.n, "Ambient quaternionic projective dimension");
  verify->add_option("--family", vargs.family,
                     "One of f-lambda, f-one, f-lambda-m-t, f-even-pair, f-odd-pair");
  verify->add_option("--lambda", vargs.lambda, "Weight parameter for f-lambda / f-lambda-m-t");
  verify->add_option("--t", vargs.t, "Parameter t in (0, pi/2) for f-lambda-m-t");
  verify->add_option("--m1", vargs.m1, "First block size for pair families");
  verify->add_option("--m2", vargs.m2, "Second block size for pair families");
  verify->add_option("--spec", vargs.spec_path, "Orbit spec JSON file");
  verify->add_option("--samples", vargs.samples, "Chart sample count")->capture_default_str();
  verify->add_option("--step", vargs.step, "Curvature stencil step")->capture_default_str();

  int n_max = 0;
  CLI::App* reptest = app.add_subcommand("rep-test", "Run the representation property suite");
  reptest->add_option("--n-max", n_max, "Largest representation degree")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      std::cout << app.help();
      return kExitOk;
    }
    std::cerr << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (classify->parsed()) {
      if (classify_n < 1) throw std::invalid_argument("classify: --n must be at least 1");
      write_output(hpsphere::render(hpsphere::classification_document(classify_n), format),
                   out_path);
      return kExitOk;
    }
    if (verify->parsed()) return run_verify(vargs, seed, format, out_path);
    if (reptest->parsed()) {
      if (n_max < 1) throw std::invalid_argument("rep-test: --n-max must be at least 1");
      const std::vector<hpsphere::RepCheck> checks = hpsphere::run_rep_suite(n_max, seed);
      write_output(hpsphere::render(hpsphere::reptest_document(checks), format), out_path);
      for (const hpsphere::RepCheck& c : checks)
        if (!c.pass) {
          std::cerr << "rep-test failed: " << c.name << " residual "
                    << hpsphere::format_number(c.max_residual) << "\n";
          return kExitVerificationFailed;
        }
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const hpsphere::DegenerateOrbit& e) {
    std::cerr << "verification failed: degenerate-orbit (" << e.what() << ")\n";
    return kExitVerificationFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
