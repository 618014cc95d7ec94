// multbound: Schur multiplier oracle and bound verification for small p-groups.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "multbound/report.hpp"
#include "multbound/sweep.hpp"

using namespace multbound;

namespace {

constexpr int kInputError = 3;

void check_oracle_cap(std::size_t cap, bool allow_large) {
  if (cap > kDefaultOracleCap && !allow_large)
    throw CLI::ValidationError("--oracle-cap",
                               "caps above " + std::to_string(kDefaultOracleCap) +
                                   " need --allow-large-oracle (order 243 takes minutes)");
}

int write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    return kInputError;
  }
  out << text;
  return 0;
}

std::string summary_line(const SweepSummary& s) {
  std::ostringstream os;
  os << s.entries << " entries, " << s.rejected << " rejected, " << s.pass << " pass, " << s.fail << " fail, "
     << s.vacuous << " vacuous, " << s.skipped << " skipped, " << s.oracle_skipped << " without oracle";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur multipliers of small p-groups and checks of bounds on their order"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  SweepOptions opts;
  std::string families_arg;
  std::string format = "json";
  std::string out_path;
  bool reproducible = false;
  bool allow_large = false;

  auto* sweep = app.add_subcommand("sweep", "run every bound and property check over a corpus");
  sweep->add_option("--families", families_arg, "'all' or a comma-separated list of builtin families");
  sweep->add_option("--input", opts.inputs, "presentation files or family specs such as dihedral(16)");
  sweep->add_option("--max-order", opts.max_order, "largest builtin group order")->capture_default_str();
  sweep->add_option("--oracle-cap", opts.oracle_cap, "largest order handed to the multiplier oracle")
      ->capture_default_str();
  sweep->add_flag("--allow-large-oracle", allow_large, "permit an oracle cap above 128");
  sweep->add_option("--jobs", opts.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  sweep->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  sweep->add_option("--out", out_path, "output file (default stdout)");
  sweep->add_flag("--reproducible", reproducible, "omit the timestamp");

  std::string entry;
  std::size_t single_cap = kDefaultOracleCap;
  bool single_allow_large = false;
  auto* mult = app.add_subcommand("multiplier", "print M(G) for one entry");
  mult->add_option("entry", entry, "family spec or presentation file")->required();
  mult->add_option("--oracle-cap", single_cap, "largest order handed to the oracle")->capture_default_str();
  mult->add_flag("--allow-large-oracle", single_allow_large, "permit an oracle cap above 128");

  auto* bounds = app.add_subcommand("bounds", "print the bound report and property checks for one entry");
  bounds->add_option("entry", entry, "family spec or presentation file")->required();
  bounds->add_option("--oracle-cap", single_cap, "largest order handed to the oracle")->capture_default_str();
  bounds->add_flag("--allow-large-oracle", single_allow_large, "permit an oracle cap above 128");

  std::string check_path;
  auto* check = app.add_subcommand("check", "parse a presentation file and test its consistency");
  check->add_option("file", check_path, "presentation file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  try {
    if (*sweep) {
      check_oracle_cap(opts.oracle_cap, allow_large);
      if (!families_arg.empty()) {
        std::stringstream ss(families_arg);
        for (std::string f; std::getline(ss, f, ',');)
          if (!f.empty()) opts.families.push_back(f);
      }
      // With explicit inputs the builtin corpus is only added on request.
      opts.builtin = opts.inputs.empty() || !families_arg.empty();
      const SweepReport report = run_sweep(opts);
      const std::string text = format == "csv" ? report_csv(report) : report_json(report, reproducible);
      if (int rc = write_output(text, out_path)) return rc;
      std::cerr << summary_line(report.summary) << "\n";
      for (const auto& e : report.entries) {
        if (!e.ok()) std::cerr << e.id << ": " << e.status << (e.message.empty() ? "" : " (" + e.message + ")") << "\n";
        if (!e.report) continue;
        for (std::size_t i = 0; i < e.report->bounds.size(); ++i)
          if (e.report->verdicts[i] == Verdict::fail)
            std::cerr << e.id << ": bound " << e.report->bounds[i].name << " violated (m = "
                      << *e.report->log_multiplier() << ", exponent " << e.report->bounds[i].exponent.to_string()
                      << ")\n";
        for (const auto& p : e.properties)
          if (p.verdict == Verdict::fail)
            std::cerr << e.id << ": property " << p.name << " failed (" << p.lhs.to_string() << " vs "
                      << p.rhs.to_string() << (p.note.empty() ? "" : ", " + p.note) << ")\n";
      }
      return exit_code(report.summary);
    }

    if (*mult) {
      check_oracle_cap(single_cap, single_allow_large);
      const CorpusEntry e = load_entry(entry);
      const TableGroup g = materialize_table(e.presentation, kDefaultTableCap);
      const MultiplierResult m = multiplier_type(g, single_cap);
      std::cout << e.id << ": |G| = " << g.order() << ", M(G) = " << m.type.to_string() << " (order "
                << e.presentation.prime << "^" << m.log_order << ")\n";
      return 0;
    }

    if (*bounds) {
      check_oracle_cap(single_cap, single_allow_large);
      SweepOptions o;
      o.oracle_cap = single_cap;
      const EntryResult r = evaluate_entry(load_entry(entry), o);
      std::cout << entry_json(r) << "\n";
      if (!r.ok()) return kInputError;
      return exit_code(summarize({r}));
    }

    if (*check) {
      const PcPresentation pres = read_presentation_file(check_path);
      const ConsistencyResult c = consistency_check(pres);
      if (!c.consistent) {
        std::cout << check_path << ": inconsistent (overlap " << c.failing_test << ")\n";
        return kInputError;
      }
      std::cout << check_path << ": consistent, order " << pres.prime << "^" << pres.ngens << "\n";
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return 0;
}
