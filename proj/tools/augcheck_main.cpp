#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "augcheck/io.hpp"

namespace {

constexpr int kExitSimple = 0;
constexpr int kExitNotSimple = 1;
constexpr int kExitUndecidable = 2;
constexpr int kExitUsage = 10;
constexpr int kExitSizeBound = 11;
constexpr int kExitInternal = 12;

int exit_code_for(const augcheck::Error& e) {
  switch (e.code()) {
    case augcheck::Errc::SizeBound:
    case augcheck::Errc::BoundExceeded:
      return kExitSizeBound;
    case augcheck::Errc::Internal:
      return kExitInternal;
    default:
      return kExitUsage;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) augcheck::fail(augcheck::Errc::Parse, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

augcheck::Limits limits_from_env() {
  augcheck::Limits limits;
  if (const char* bound = std::getenv("AUGCHECK_SIZE_BOUND")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(bound, &end, 10);
    if (end && *end == '\0' && v > 0) limits.max_elements = static_cast<size_t>(v);
  }
  return limits;
}

int run_construct(const std::string& in_path, const std::string& out_path) {
  augcheck::ConstructResult built =
      augcheck::construct_from_structure(read_file(in_path), limits_from_env());
  augcheck::MonoidFile file =
      augcheck::MonoidFile::from_monoid(built.monoid, built.partial_with_sink);
  std::ofstream out(out_path);
  if (!out) augcheck::fail(augcheck::Errc::Parse, "cannot write '" + out_path + "'");
  out << file.serialize();
  std::cerr << "constructed " << built.kind << " monoid: " << built.monoid.size()
            << " elements on " << built.monoid.degree() << " points\n";
  return 0;
}

int run_check(const std::string& in_path, const std::string& field_spec, bool with_oracle,
              const std::string& format) {
  using namespace augcheck;
  FieldTag field = FieldTag::parse(field_spec);
  MonoidFile file = MonoidFile::parse(read_file(in_path));
  MonoidData monoid = file.to_monoid(limits_from_env());
  GreenData greens = green(monoid);
  CheckReport report = decide(monoid, greens, field);
  if (with_oracle && field.computable()) {
    report.oracle = oracle_simple(monoid, field);
    report.agreement = report.oracle->verdict == report.final;
  }
  std::cout << (format == "text" ? report_to_text(monoid, report)
                                 : report_to_json(monoid, report));
  switch (report.final) {
    case Verdict::Simple: return kExitSimple;
    case Verdict::NotSimple: return kExitNotSimple;
    case Verdict::Undecidable: return kExitUndecidable;
  }
  return kExitInternal;
}

int run_green(const std::string& in_path, const std::string& format) {
  using namespace augcheck;
  MonoidFile file = MonoidFile::parse(read_file(in_path));
  MonoidData monoid = file.to_monoid(limits_from_env());
  GreenData greens = green(monoid);
  std::cout << (format == "text" ? green_report_text(monoid, greens)
                                 : green_report_json(monoid, greens));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decide simplicity of the augmentation module of a transformation monoid"};
  app.require_subcommand(1);

  std::string structure_path, monoid_out;
  CLI::App* construct = app.add_subcommand("construct", "build a monoid file from a structure file");
  construct->add_option("structure", structure_path, "structure JSON file")->required();
  construct->add_option("output", monoid_out, "monoid JSON file to write")->required();

  std::string monoid_path, field_spec = "q", format = "json";
  bool with_oracle = false;
  CLI::App* check = app.add_subcommand("check", "run the simplicity checker");
  check->add_option("monoid", monoid_path, "monoid JSON file")->required();
  check->add_option("--field", field_spec, "field: gf:p, q, r or c")->capture_default_str();
  check->add_flag("--oracle", with_oracle, "also run the independent irreducibility oracle");
  check->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::string green_path, green_format = "json";
  CLI::App* greens = app.add_subcommand("green", "report the Green's relation structure");
  greens->add_option("monoid", green_path, "monoid JSON file")->required();
  greens->add_option("--format", green_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
    if (construct->parsed()) return run_construct(structure_path, monoid_out);
    if (check->parsed()) return run_check(monoid_path, field_spec, with_oracle, format);
    if (greens->parsed()) return run_green(green_path, green_format);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const augcheck::Error& e) {
    std::cerr << "error [" << augcheck::errc_name(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
