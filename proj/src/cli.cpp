#include "toriclog/cli.hpp"

#include <fstream>

#include <CLI11.hpp>

#include "toriclog/builtins.hpp"
#include "toriclog/error.hpp"
#include "toriclog/pipeline.hpp"

namespace toriclog {

namespace {

constexpr const char* kBuiltinPrefix = "builtin:";

bool is_builtin(const std::string& source) { return source.rfind(kBuiltinPrefix, 0) == 0; }
std::string builtin_name(const std::string& source) { return source.substr(std::string(kBuiltinPrefix).size()); }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verify logarithmic connections on equivariant bundles over smooth complete toric varieties"};
  app.require_subcommand(1);
  auto* verify = app.add_subcommand("verify", "Run the verification pipeline on a fan and a bundle");
  std::string fan_source, bundle_source, report_path, checks = "lemma1,cocycle,connection,prop3";
  bool list = false;
  verify->add_option("--fan", fan_source, "fan JSON path or builtin:NAME");
  verify->add_option("--bundle", bundle_source, "bundle JSON path or builtin:NAME");
  verify->add_option("--report", report_path, "write the JSON report here");
  verify->add_option("--checks", checks, "comma-separated check groups");
  verify->add_flag("--list-builtins", list, "list built-in fans and bundles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  if (list) {
    out << "fans:";
    for (const auto& f : builtin_fan_names()) out << " " << f;
    out << "\nbundles:\n";
    for (const auto& c : builtin_catalog()) out << "  " << c.fan << " " << c.bundle << "\n";
    out << "  <any fan> corrupted-cocycle\n";
    return 0;
  }
  if (fan_source.empty() || bundle_source.empty()) {
    err << "verify needs --fan and --bundle\n";
    return 2;
  }

  try {
    const PipelineOptions options = parse_check_groups(checks);
    const bool fan_builtin = is_builtin(fan_source);
    const std::string fan_name = fan_builtin ? builtin_name(fan_source) : "";
    const Fan fan = fan_builtin ? builtin_fan(fan_name) : fan_from_json(load_json_file(fan_source));
    const BundleSpec bundle = is_builtin(bundle_source)
                                  ? builtin_bundle(fan, fan_name, builtin_name(bundle_source))
                                  : bundle_from_json(load_json_file(bundle_source), fan);

    const VerificationReport report = run_pipeline(fan, bundle, options, fan_source, bundle_source);
    out << report.to_text();
    if (!report_path.empty()) {
      std::ofstream f(report_path);
      if (!f) {
        err << "cannot write " << report_path << "\n";
        return 7;
      }
      f << report.to_json().dump(2) << "\n";
    }
    return exit_code(report);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code(e.kind());
  }
}

}  // namespace toriclog
