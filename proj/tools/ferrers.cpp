// Command-line front end: the n <-> diagram bijection, rectangle counting,
// the prime-count bound, and the brute-force verification sweeps.
//
// Exit codes: 0 success/verified, 1 counterexample found, 2 usage error,
// 3 overflow, 4 environment or internal failure.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ferrers/bounds.hpp"
#include "ferrers/diagram.hpp"
#include "ferrers/errors.hpp"
#include "ferrers/primes.hpp"
#include "ferrers/render.hpp"

namespace {

bool write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    std::fflush(stdout);
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file: " << path << "\n";
    return false;
  }
  out << text;
  out.flush();
  if (!out) {
    std::cerr << "error: failed writing output file: " << path << "\n";
    return false;
  }
  return true;
}

std::vector<ferrers::u64> parse_rows(const std::string& text) {
  std::vector<ferrers::u64> rows;
  if (text.empty()) return rows;
  std::size_t pos = 0;
  for (;;) {
    std::size_t comma = text.find(',', pos);
    std::string tok = comma == std::string::npos
                          ? text.substr(pos)
                          : text.substr(pos, comma - pos);
    ferrers::u64 value = 0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || res.ec != std::errc() ||
        res.ptr != tok.data() + tok.size()) {
      throw ferrers::DomainError(
          "number: rows must be a comma-separated list of naturals");
    }
    rows.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return rows;
}

std::string factor_notation(const ferrers::Factorization& fac) {
  if (fac.terms.empty()) return "-";
  std::string out;
  for (const ferrers::FactorTerm& term : fac.terms) {
    if (!out.empty()) out += ' ';
    out += "p" + std::to_string(term.alpha);
    if (term.beta > 1) out += "^" + std::to_string(term.beta);
  }
  return out;
}

std::string table_text(ferrers::u64 n_max) {
  ferrers::PrimeTable& table = ferrers::shared_prime_table();
  const std::size_t digits = std::to_string(n_max).size();
  std::string out;
  for (ferrers::u64 n = 1; n <= n_max; ++n) {
    const std::string ns = std::to_string(n);
    out.append(digits - ns.size(), ' ');
    out += ns;
    out += "  ";
    out += factor_notation(table.factorize(n));
    out += '\n';
    const std::string art = ferrers::render(ferrers::to_diagram(n, table));
    std::size_t pos = 0;
    while (pos < art.size()) {
      const std::size_t nl = art.find('\n', pos);
      out.append(digits + 2, ' ');
      out.append(art, pos, nl - pos + 1);
      pos = nl + 1;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Ferrers diagrams of natural numbers: the prime-factorization "
      "bijection, the subfigure order, and prime-counting bounds."};
  app.require_subcommand(1);

  std::uint64_t diagram_n = 0;
  std::string diagram_format = "ascii";
  std::string number_rows;
  std::uint64_t factor_n = 0;
  double pi_x = 0.0;
  double bound_x = 0.0;
  std::uint64_t table_nmax = 0;
  std::uint64_t cs_i = 0;
  std::uint64_t cs_j = 0;
  std::uint64_t l1_max = 0;
  std::uint64_t l2_imax = 0;
  std::uint64_t l2_jmax = 0;
  std::uint64_t th_xmax = 0;
  unsigned th_jobs = 1;
  std::string th_csv_path;
  std::string out_path;

  auto add_output = [&out_path](CLI::App* cmd) {
    cmd->add_option("-o,--output", out_path,
                    "Write output to a file instead of standard output");
  };

  CLI::App* cmd_diagram =
      app.add_subcommand("diagram", "Print the Ferrers diagram of n");
  cmd_diagram->add_option("n", diagram_n, "Natural number, n >= 1")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_diagram
      ->add_option("--format", diagram_format, "Output format (default ascii)")
      ->check(CLI::IsMember({"ascii", "svg", "tikz", "json"}));
  add_output(cmd_diagram);

  CLI::App* cmd_number = app.add_subcommand(
      "number", "Map row lengths back to their natural number");
  cmd_number->add_option("rows", number_rows,
                         "Comma-separated row lengths, e.g. 3,1 (empty = 1)");
  add_output(cmd_number);

  CLI::App* cmd_factor =
      app.add_subcommand("factor", "Print the factorization of n in p-index notation");
  cmd_factor->add_option("n", factor_n, "Natural number, n >= 1")
      ->required()
      ->check(CLI::PositiveNumber);
  add_output(cmd_factor);

  CLI::App* cmd_pi =
      app.add_subcommand("pi", "Count primes <= x");
  cmd_pi->add_option("x", pi_x, "Real number, x >= 0")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_output(cmd_pi);

  CLI::App* cmd_bound = app.add_subcommand(
      "bound", "Report the prime-count lower bound and inequality chain at x");
  cmd_bound->add_option("x", bound_x, "Real number, x >= 2")->required();
  add_output(cmd_bound);

  CLI::App* cmd_table = app.add_subcommand(
      "table", "Print n, factorization, and diagram for every n <= n_max");
  cmd_table->add_option("n_max", table_nmax, "Natural number, n_max >= 1")
      ->required()
      ->check(CLI::PositiveNumber);
  add_output(cmd_table);

  CLI::App* cmd_count = app.add_subcommand(
      "count-subfigures", "Count distinct subfigures of the i x j rectangle");
  cmd_count->add_option("i", cs_i, "Rectangle height")->required();
  cmd_count->add_option("j", cs_j, "Rectangle width")->required();
  add_output(cmd_count);

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "Run a brute-force verification sweep");
  cmd_verify->require_subcommand(1);
  CLI::App* v_lemma1 = cmd_verify->add_subcommand(
      "lemma1", "Subfigure containment implies numeric order");
  v_lemma1->add_option("--max", l1_max, "Check all pairs in [1, N]^2")
      ->required()
      ->check(CLI::PositiveNumber);
  add_output(v_lemma1);
  CLI::App* v_lemma2 = cmd_verify->add_subcommand(
      "lemma2", "Rectangle subfigure counts equal C(i+j, j)");
  v_lemma2->add_option("--imax", l2_imax, "Largest rectangle height")
      ->required();
  v_lemma2->add_option("--jmax", l2_jmax, "Largest rectangle width")
      ->required();
  add_output(v_lemma2);
  CLI::App* v_theorem = cmd_verify->add_subcommand(
      "theorem", "Bound and inequality chain hold for every integer x");
  v_theorem->add_option("--xmax", th_xmax, "Check every integer x in [2, X]")
      ->required();
  v_theorem->add_option("--csv", th_csv_path, "Stream one CSV row per x to PATH");
  v_theorem->add_option("--jobs", th_jobs, "Worker threads (default 1)")
      ->check(CLI::PositiveNumber);
  add_output(v_theorem);

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
    if (*cmd_diagram) {
      ferrers::RenderSpec spec;
      spec.format = *ferrers::parse_render_format(diagram_format);
      std::string text = ferrers::render(ferrers::to_diagram(diagram_n), spec);
      if (!text.empty() && text.back() != '\n') text.push_back('\n');
      return write_output(out_path, text) ? 0 : 2;
    }
    if (*cmd_number) {
      ferrers::Partition d{parse_rows(number_rows)};
      std::string text = ferrers::to_string(ferrers::from_diagram(d)) + "\n";
      return write_output(out_path, text) ? 0 : 2;
    }
    if (*cmd_factor) {
      std::string text = factor_notation(ferrers::factorize(factor_n)) + "\n";
      return write_output(out_path, text) ? 0 : 2;
    }
    if (*cmd_pi) {
      std::string text = std::to_string(ferrers::prime_count(pi_x)) + "\n";
      return write_output(out_path, text) ? 0 : 2;
    }
    if (*cmd_bound) {
      std::string text = ferrers::to_json(ferrers::bound_report(bound_x)) + "\n";
      return write_output(out_path, text) ? 0 : 2;
    }
    if (*cmd_table) {
      return write_output(out_path, table_text(table_nmax)) ? 0 : 2;
    }
    if (*cmd_count) {
      std::string text =
          ferrers::to_string(ferrers::count_subfigures_rect({cs_i, cs_j})) +
          "\n";
      return write_output(out_path, text) ? 0 : 2;
    }
    if (*cmd_verify) {
      ferrers::VerificationReport report;
      if (*v_lemma1) {
        report = ferrers::verify_lemma1(l1_max);
      } else if (*v_lemma2) {
        report = ferrers::verify_lemma2(l2_imax, l2_jmax);
      } else {
        ferrers::TheoremSweepOptions options;
        options.x_max = th_xmax;
        options.jobs = th_jobs;
        std::ofstream csv;
        if (!th_csv_path.empty()) {
          csv.open(th_csv_path, std::ios::binary);
          if (!csv) {
            std::cerr << "error: cannot open CSV file: " << th_csv_path << "\n";
            return 2;
          }
          options.csv = &csv;
        }
        report = ferrers::verify_theorem(options);
      }
      if (!write_output(out_path, ferrers::to_json(report) + "\n")) return 2;
      return report.ok() ? 0 : 1;
    }
  } catch (const ferrers::OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ferrers::NotPrimeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ferrers::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
