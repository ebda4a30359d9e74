#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "commands.hpp"

namespace {

using gelfand::cli::RunConfig;

void add_common(CLI::App* sub, RunConfig& c, std::string& q0) {
  sub->add_option("--model", c.model,
                  "sn, isn, fstar, hecke, qrook or table:<path>")
      ->envname("GELFAND_MODEL");
  sub->add_option("--n", c.n, "degree")->envname("GELFAND_N");
  sub->add_option("--q0", q0, "specialization of q as P/Q")
      ->envname("GELFAND_Q0");
  sub->add_option("--format", c.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->envname("GELFAND_FORMAT");
  sub->add_option("--out", c.out, "output file, - for stdout")
      ->envname("GELFAND_OUT");
  sub->add_flag("--deep", c.deep, "raise the size limits")
      ->envname("GELFAND_DEEP");
  sub->add_option("--seed", c.seed, "seed for sampled checks")
      ->envname("GELFAND_SEED");
  sub->add_flag("--timing", c.timing, "record check timings in the report")
      ->envname("GELFAND_TIMING");
}

void write_output(RunConfig const& c, std::string const& text) {
  if (c.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) {
    throw gelfand::cli::CapacityError("cannot write " + c.out);
  }
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial Gelfand models: build, verify, decompose"};
  app.require_subcommand(1);
  RunConfig   c;
  std::string q0 = "2";
  auto*       build = app.add_subcommand("build", "export basis and matrices");
  auto*       verify = app.add_subcommand("verify", "run the invariant suite");
  auto*       decompose =
      app.add_subcommand("decompose", "sector characters of the sn-model");
  for (auto* sub : {build, verify, decompose}) {
    add_common(sub, c, q0);
  }
  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : gelfand::cli::kHypothesisFailure;
  }

  c.command = app.get_subcommands().front()->get_name();
  try {
    c.q0 = gelfand::Rational::parse(q0);
    gelfand::cli::Outcome out;
    if (c.command == "build") {
      out = gelfand::cli::cmd_build(c);
    } else if (c.command == "verify") {
      out = gelfand::cli::cmd_verify(c);
    } else {
      out = gelfand::cli::cmd_decompose(c);
    }
    bool csv = c.format == "csv" && !out.csv.empty();
    write_output(c, csv ? out.csv : out.report.dump(2) + "\n");
    if (out.exit_code == gelfand::cli::kHypothesisFailure) {
      std::cerr << "hypothesis failure: " << out.report.value("hypothesis", "")
                << ": " << out.report.value("detail", "") << "\n";
    }
    return out.exit_code;
  } catch (gelfand::cli::CapacityError const& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return gelfand::cli::kHypothesisFailure;
  } catch (std::invalid_argument const& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return gelfand::cli::kHypothesisFailure;
  }
}
