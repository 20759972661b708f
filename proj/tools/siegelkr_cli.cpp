// Command line surface: enumeration of the mu-admissible set, stratum
// tables, dimension reports, verification suites, and figure export.
//
// Exit codes: 0 success, 1 usage error, 2 verification failure.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "siegelkr/admissible_set.hpp"
#include "siegelkr/reports.hpp"
#include "siegelkr/verify.hpp"

namespace {

int write_out(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return 1;
  }
  os << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorics of the Kottwitz-Rapoport and Ekedahl-Oort "
               "stratifications for GSp(2g)"};
  app.require_subcommand(1);

  int g = 2;
  std::string format;
  std::string out_path;
  std::string suite;
  int max_g_override = skr::kDefaultAdmBound;

  auto add_common = [&](CLI::App* cmd, bool with_format) {
    cmd->add_option("--g", g, "rank g (default 2)")->check(CLI::PositiveNumber);
    cmd->add_option("--out", out_path, "output path (default stdout)");
    cmd->add_option("--max-g-override", max_g_override,
                    "raise the enumeration rank bound");
    if (with_format) cmd->add_option("--format", format, "output format");
    return cmd;
  };

  CLI::App* adm = add_common(
      app.add_subcommand("adm", "enumerate Adm(mu) (json or dot)"), true);
  CLI::App* eo = add_common(
      app.add_subcommand("eo", "table of Ekedahl-Oort strata (tsv or json)"),
      true);
  CLI::App* strata = add_common(
      app.add_subcommand("strata",
                         "table of Kottwitz-Rapoport strata (tsv or json)"),
      true);
  CLI::App* prank0 = add_common(
      app.add_subcommand("prank0",
                         "p-rank 0 fiber statistics per sigma (tsv or json)"),
      true);
  CLI::App* dims = add_common(
      app.add_subcommand("dims", "dimension summary for rank g"), false);
  CLI::App* verify = add_common(
      app.add_subcommand("verify", "run a verification suite"), false);
  verify->add_option("--suite", suite,
                     "suite name (default: run all suites)");
  bool g_given_to_verify = false;
  verify->callback([&] { g_given_to_verify = verify->count("--g") > 0; });
  CLI::App* figure = add_common(
      app.add_subcommand("figure", "svg picture of the g=2 admissible set"),
      true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (adm->parsed()) {
      if (format.empty()) format = "json";
      if (format != "json" && format != "dot") {
        std::cerr << "error: adm supports --format json|dot\n";
        return 1;
      }
      skr::AdmissiblePoset poset = skr::enumerate_adm(g, max_g_override);
      return write_out(format == "json" ? skr::poset_to_json(poset)
                                        : skr::poset_dot(poset),
                       out_path);
    }
    if (eo->parsed()) {
      if (format.empty()) format = "tsv";
      if (format != "tsv" && format != "json") {
        std::cerr << "error: eo supports --format tsv|json\n";
        return 1;
      }
      return write_out(format == "tsv" ? skr::eo_table_tsv(g)
                                       : skr::eo_table_json(g),
                       out_path);
    }
    if (strata->parsed()) {
      if (format.empty()) format = "tsv";
      if (format != "tsv" && format != "json") {
        std::cerr << "error: strata supports --format tsv|json\n";
        return 1;
      }
      return write_out(format == "tsv"
                           ? skr::strata_table_tsv(g, max_g_override)
                           : skr::strata_table_json(g, max_g_override),
                       out_path);
    }
    if (prank0->parsed()) {
      if (format.empty()) format = "tsv";
      if (format != "tsv" && format != "json") {
        std::cerr << "error: prank0 supports --format tsv|json\n";
        return 1;
      }
      return write_out(format == "tsv" ? skr::prank0_table_tsv(g)
                                       : skr::prank0_table_json(g),
                       out_path);
    }
    if (dims->parsed()) {
      return write_out(skr::dims_line(g) + "\n", out_path);
    }
    if (figure->parsed()) {
      if (!format.empty() && format != "svg") {
        std::cerr << "error: figure supports --format svg only\n";
        return 1;
      }
      if (g != 2) {
        std::cerr << "error: figure is only available for g = 2\n";
        return 1;
      }
      return write_out(skr::figure_g2_svg(), out_path);
    }
    if (verify->parsed()) {
      std::vector<std::string> to_run;
      if (suite.empty()) {
        to_run = skr::suite_names();
      } else if (skr::is_suite(suite)) {
        to_run.push_back(suite);
      } else {
        std::cerr << "error: unknown suite '" << suite << "'; available:";
        for (const std::string& name : skr::suite_names())
          std::cerr << ' ' << name;
        std::cerr << '\n';
        return 1;
      }
      const bool run_all = suite.empty();
      bool all_pass = true;
      std::string report;
      for (const std::string& name : to_run) {
        int suite_g = g_given_to_verify ? g : skr::suite_default_g(name);
        skr::SuiteResult result;
        try {
          result = skr::run_suite(name, suite_g);
        } catch (const std::invalid_argument& e) {
          if (run_all) {
            // A suite that does not apply at this rank is skipped, not failed.
            std::cerr << "[SKIP] " << name << " (g=" << suite_g << ": "
                      << e.what() << ")\n";
            continue;
          }
          throw;
        }
        all_pass = all_pass && result.pass;
        report += skr::suite_report_json(result) + "\n";
        std::cerr << (result.pass ? "[PASS] " : "[FAIL] ") << name
                  << " (g=" << suite_g << ", checked " << result.checked
                  << ")\n";
      }
      int rc = write_out(report, out_path);
      if (rc != 0) return rc;
      return all_pass ? 0 : 2;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
