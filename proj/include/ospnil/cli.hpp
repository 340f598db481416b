#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ospnil::cli {

enum class Command { Enumerate, Hasse, Order, Fiber, MaxDiag, Dims, Classify, Rep, Desing, Borel };
enum class Format { Json, Dot, Text };

enum ExitCode : int { Ok = 0, Usage = 2, Domain = 3 };

struct RunConfig {
  int m = 0;
  int n = 0;  // N = 2n
  Command command = Command::Enumerate;
  Format format = Format::Json;
  std::uint64_t seed = 0;
  std::uint64_t budget = 200000;

  std::string diagram;  // rep, order
  std::string other;    // order
  std::string lambda;   // fiber, maxdiag
  std::string label;    // fiber, maxdiag: "", "I" or "II"
  std::string mu;       // fiber, maxdiag
  std::string input;    // classify: file path, stdin when empty
  std::string graph = "delta";  // hasse: "gamma" or "delta"
  bool cover = false;   // borel
  bool kac = false;     // borel
  bool verify = false;  // dims
};

/// Seed from the OSPNIL_SEED environment variable, 0 when unset or malformed.
std::uint64_t default_seed();

/// Executes one command.  Output goes to `out`, diagnostics to `err`; `in` is read by
/// classify when no input file is given.  Returns an ExitCode.
int run(const RunConfig& config, std::istream* in, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs the command.
int main_entry(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ospnil::cli
