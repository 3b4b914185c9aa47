#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "emm/bridge.hpp"
#include "emm/correlators.hpp"
#include "emm/eo.hpp"
#include "emm/npoint.hpp"

namespace {

// Writes to `path` when given, stdout otherwise; a trailing newline is
// guaranteed either way. Returns 0, or 2 when the path cannot be opened.
int emit(const std::string& path, const std::string& text) {
  std::string body = text;
  if (body.empty() || body.back() != '\n') body += '\n';
  if (path.empty()) {
    std::cout << body;
    return 0;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot open output file: " << path << "\n";
    return 2;
  }
  out << body;
  return 0;
}

std::string lowercased(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

nlohmann::json table_record(int g, const std::vector<int>& a,
                            const std::string& value) {
  return nlohmann::json{{"g", g}, {"a", a}, {"value", value}};
}

std::string join_ints(const std::vector<int>& a, const char* sep) {
  std::string out;
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(a[i]);
  }
  return out;
}

std::vector<emm::Report> run_suites(const std::string& suite, int max) {
  std::vector<emm::Report> reports;
  const bool all = suite == "all";
  if (all || suite == "closed-forms") reports.push_back(emm::verify_closed_forms());
  if (all || suite == "main1") reports.push_back(emm::verify_main1(max));
  if (all || suite == "bridge") reports.push_back(emm::verify_bridge());
  if (all || suite == "structure") reports.push_back(emm::verify_structure(max));
  if (all || suite == "special-deformation")
    reports.push_back(emm::verify_special_deformation());
  return reports;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for the even-coupling matrix model"};
  app.require_subcommand(1);

  int genus = 0;
  std::vector<int> insertions;
  std::string format = "text";
  auto* correlator_cmd =
      app.add_subcommand("correlator", "print one correlator value");
  correlator_cmd->add_option("-g,--genus", genus, "genus")
      ->required()
      ->check(CLI::NonNegativeNumber);
  correlator_cmd
      ->add_option("-a,--insertions", insertions,
                   "half-degrees a1,a2,... of the insertions p_{2a}")
      ->required()
      ->delimiter(',');
  correlator_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  int table_genus = 0;
  int bound = 1;
  std::string table_format = "csv";
  std::string table_path;
  auto* table_cmd =
      app.add_subcommand("table", "export all correlators with sum(a) <= bound");
  table_cmd->add_option("-g,--genus", table_genus, "genus")
      ->required()
      ->check(CLI::NonNegativeNumber);
  table_cmd->add_option("--bound", bound, "max total degree sum(a)")
      ->required()
      ->check(CLI::PositiveNumber);
  table_cmd->add_option("--format", table_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  table_cmd->add_option("-o,--output", table_path, "output file (default stdout)");

  std::string suite;
  int max_complexity = 3;
  std::string verify_format = "text";
  std::string verify_path;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"closed-forms", "main1", "bridge", "structure",
                             "special-deformation", "all"}));
  verify_cmd->add_option("--max", max_complexity,
                         "complexity cap 2g-2+n for main1/structure")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("-o,--output", verify_path, "report file (default stdout)");

  std::string sequence_name;
  int count = 1;
  auto* sequences_cmd =
      app.add_subcommand("sequences", "print an integer sequence read off the correlators");
  sequences_cmd->add_option("name", sequence_name, "catalan, A001791 or A007946")
      ->required();
  sequences_cmd->add_option("count", count, "number of terms")
      ->required()
      ->check(CLI::PositiveNumber);

  int kmax = 4;
  std::string ladder_path;
  auto* ladders_cmd =
      app.add_subcommand("ladders", "export the times and Bergman coefficient ladders");
  ladders_cmd->add_option("--kmax", kmax, "largest ladder index")
      ->check(CLI::NonNegativeNumber);
  ladders_cmd->add_option("-o,--output", ladder_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*correlator_cmd) {
      std::string value = emm::correlator(genus, insertions).str();
      if (format == "json")
        return emit("", table_record(genus, insertions, value).dump(2));
      return emit("", value);
    }

    if (*table_cmd) {
      auto rows = emm::correlator_rows(table_genus, bound);
      if (table_format == "json") {
        nlohmann::json records = nlohmann::json::array();
        for (const auto& [a, value] : rows)
          records.push_back(table_record(table_genus, a, value.str()));
        return emit(table_path, records.dump(2));
      }
      std::string csv = "g,a,value\n";
      for (const auto& [a, value] : rows) {
        csv += std::to_string(table_genus) + "," + join_ints(a, " ") + "," +
               value.str() + "\n";
      }
      return emit(table_path, csv);
    }

    if (*verify_cmd) {
      auto reports = run_suites(suite, max_complexity);
      std::string rendered;
      if (verify_format == "json") {
        if (reports.size() == 1) {
          rendered = reports.front().to_json(2);
        } else {
          nlohmann::json arr = nlohmann::json::array();
          for (const auto& r : reports)
            arr.push_back(nlohmann::json::parse(r.to_json()));
          rendered = arr.dump(2);
        }
      } else {
        for (size_t i = 0; i < reports.size(); ++i) {
          if (i) rendered += "\n";
          rendered += reports[i].text();
        }
      }
      int rc = emit(verify_path, rendered);
      if (rc != 0) return rc;
      for (const auto& r : reports)
        if (!r.all_pass()) return 1;
      return 0;
    }

    if (*sequences_cmd) {
      auto terms = emm::sequence_terms(lowercased(sequence_name), count);
      std::string line;
      for (size_t i = 0; i < terms.size(); ++i) {
        if (i) line += " ";
        line += emm::to_string(terms[i]);
      }
      return emit("", line);
    }

    if (*ladders_cmd) return emit(ladder_path, emm::ladder_json(kmax));
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  return 0;
}
