#include "smithkit/cli.hpp"

#include <fstream>
#include <map>

#include "CLI11.hpp"
#include "smithkit/errors.hpp"
#include "smithkit/io.hpp"

namespace smithkit::cli {
namespace {

std::string one_line(std::string s) {
  for (char& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

struct Options {
  std::string format = "json";
  std::string output;

  std::string path;
  int ambient = 0;
  std::vector<int> degrees;
  int max_dim = 0, max_codim = 0, max_degree = 0;
  int n = 0;
  Count defi_x = 0, defi_square = 0;
};

io::Format format_of(const std::string& name) {
  static const std::map<std::string, io::Format> formats{
      {"json", io::Format::json}, {"table", io::Format::table}, {"csv", io::Format::csv}};
  return formats.at(name);
}

void list_violations(const std::vector<Violation>& violations, std::ostream& err) {
  for (const auto& v : violations) err << "violation: " << v.code << ": " << v.message << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Smith theory and Hilbert square deficiency calculator", "smithkit"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "table", "csv"}))
      ->capture_default_str();
  app.add_option("--output", opt.output, "Write the report to this file instead of standard output");

  auto* smith = app.add_subcommand("smith", "Smith sequence report of a simplicial involution");
  smith->add_option("complex", opt.path, "Complex JSON file")->required();

  auto* ci = app.add_subcommand("ci", "Invariants of a complete intersection");
  ci->add_option("--ambient", opt.ambient, "Ambient projective dimension N")->required();
  ci->add_option("--degrees", opt.degrees, "Comma-separated degrees; omit for a linear space")->delimiter(',');

  auto* check = app.add_subcommand("profile-check", "Validate a real variety profile");
  check->add_option("profile", opt.path, "Profile JSON file")->required();

  auto* defi = app.add_subcommand("deficiency", "Hilbert square deficiency and maximality verdict");
  defi->add_option("profile", opt.path, "Profile JSON file")->required();

  auto* classify = app.add_subcommand("classify", "Scan even-dimensional complete intersections");
  classify->add_option("--max-dim", opt.max_dim)->required();
  classify->add_option("--max-codim", opt.max_codim)->required();
  classify->add_option("--max-degree", opt.max_degree)->required();

  auto* fano = app.add_subcommand("fano", "Deficiency of the Fano variety of lines of a cubic");
  fano->add_option("--n", opt.n, "Dimension of the cubic")->required();
  fano->add_option("--defi-x", opt.defi_x, "Deficiency of the cubic")->required();
  fano->add_option("--defi-square", opt.defi_square, "Deficiency of its Hilbert square")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return exit_bad_input;
  }

  const io::Format format = format_of(opt.format);
  if (format == io::Format::csv && !classify->parsed()) {
    err << "error: csv output is only available for classify\n";
    return exit_bad_input;
  }

  std::string report;
  int status = exit_ok;
  try {
    if (smith->parsed()) {
      report = io::render(smith_report(io::parse_complex(io::read_file(opt.path))), format);
    } else if (ci->parsed()) {
      report = io::render(io::summarize(CompleteIntersection(opt.ambient, opt.degrees)), format);
    } else if (check->parsed()) {
      const RealVarietyProfile p = io::parse_profile(io::read_file(opt.path));
      io::ProfileCheck result{validate(p), {}};
      if (result.violations.empty() && p.flags.maximal) result.identities = betti_identities(p);
      list_violations(result.violations, err);
      if (!result.violations.empty()) status = exit_violations;
      report = io::render(result, format);
    } else if (defi->parsed()) {
      const RealVarietyProfile p = io::parse_profile(io::read_file(opt.path));
      const auto violations = validate(p);
      if (!violations.empty()) {
        list_violations(violations, err);
        return exit_violations;
      }
      report = io::render(maximality_verdict(p), format);
    } else if (classify->parsed()) {
      report = io::render(scan({opt.max_dim, opt.max_codim, opt.max_degree}), format);
    } else if (fano->parsed()) {
      report = io::render(io::FanoResult{opt.n, opt.defi_x, opt.defi_square,
                                         cubic_fano_deficiency(opt.n, opt.defi_x, opt.defi_square)},
                          format);
    }
  } catch (const ConsistencyError& e) {
    err << "violation: inconsistent: " << one_line(e.what()) << '\n';
    return exit_violations;
  } catch (const Error& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return exit_bad_input;
  }

  if (opt.output.empty()) {
    out << report;
  } else {
    std::ofstream file(opt.output, std::ios::binary);
    if (!(file << report)) {
      err << "error: cannot write " << opt.output << '\n';
      return exit_bad_input;
    }
  }
  return status;
}

}  // namespace smithkit::cli
