#ifndef GELFAND_TOOLS_COMMANDS_HPP_
#define GELFAND_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

#include "gelfand/io.hpp"
#include "gelfand/scalars.hpp"

namespace gelfand::cli {

enum ExitCode { kPass = 0, kVerificationFailure = 1, kHypothesisFailure = 2 };

struct RunConfig {
  std::string   command;
  std::string   model = "sn";
  std::size_t   n     = 3;
  Rational      q0    = Rational(2);
  std::string   out   = "-";
  std::string   format = "json";
  bool          deep   = false;
  bool          timing = false;
  std::uint64_t seed   = 0;
};

// Size limits; --deep moves each to its second value.
struct Caps {
  std::size_t build, build_deep, commutant, commutant_deep;
};
Caps caps_for(std::string const& model);

// Configuration outside the supported range (exit code 2).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Outcome {
  Json        report;
  std::string csv;  // filled by build when format is csv
  int         exit_code = kPass;
};

Outcome cmd_build(RunConfig const& config);
Outcome cmd_verify(RunConfig const& config);
Outcome cmd_decompose(RunConfig const& config);

}  // namespace gelfand::cli

#endif  // GELFAND_TOOLS_COMMANDS_HPP_
