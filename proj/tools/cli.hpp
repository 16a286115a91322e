#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "mstv/graph.hpp"
#include "mstv/verifier.hpp"

namespace mstv::cli {

inline constexpr int kExitMinimal = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNotMinimal = 3;

enum class Command { Verify, Gen, Oracle };
enum class OutputFormat { Json, Text };
enum class TreeKind { Mst, Perturbed, Random };

struct RunConfig {
  Command command = Command::Verify;
  std::string graph_path;
  std::string tree_path;
  VerifyMode mode = VerifyMode::ClassicalOnly;
  std::uint64_t seed = 0;
  double delta = 0.01;
  OutputFormat output = OutputFormat::Json;
  std::size_t statevector_cap = std::size_t{1} << 22;

  // gen
  std::size_t n = 0;
  std::size_t m = 0;
  double weight_lo = 1.0;
  double weight_hi = 100.0;
  TreeKind tree_kind = TreeKind::Mst;
  std::string out_prefix;
};

// JSON report for one verification run; key order is fixed.
nlohmann::ordered_json verify_report(const Graph& g, const VerifyResult& result,
                                     std::uint64_t seed);

// Runs a command line (args excludes the program name). Returns the exit
// status: 0 minimal (or success), 3 not minimal, 1 error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mstv::cli
