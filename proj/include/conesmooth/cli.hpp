#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "conesmooth/linalg.hpp"

namespace conesmooth::cli {

enum class Command { SmoothEval, Core, CoreEstimate, Hausdorff, Verify, Bench, Figure };
enum class Format { Json, Csv };

std::string to_string(Command c);
Command command_from_string(const std::string& name);
std::string to_string(Format f);
Format format_from_string(const std::string& name);

struct RunConfig {
  Command command = Command::SmoothEval;
  std::string family;  // sublinear family name, or empty
  std::string cone;    // cone name, or empty
  std::size_t d = 0;   // 0 selects the family or cone default
  Vec weights;                 // weighted-inf-norm
  std::vector<Vec> vertices;   // polytope
  double beta = 1.0;
  std::string variant;
  std::optional<std::uint64_t> seed;
  Vec x;
  std::size_t n = 0;  // samples, rows or points; 0 selects the command default
  double eps = 1e-2;
  std::string surrogate = "both";
  std::string suite = "all";
  std::string figure;   // two-norm | exp-cone
  std::string bench = "minimax";
  int max_iter = 1000000;
  double radius = 0.0;  // 0 selects the command default
  Format format = Format::Json;
  std::string out;   // artifact path, stdout if empty
  std::string json;  // verify report path

  bool operator==(const RunConfig&) const = default;
};

nlohmann::json to_json(const RunConfig& c);
RunConfig config_from_json(const nlohmann::json& j);  // throws InvalidArgument

/// Throws InvalidArgument naming the first inconsistent field.
void validate(const RunConfig& c);

/// Seed from the config, else CONESMOOTH_SEED, else 7.
std::uint64_t effective_seed(const RunConfig& c);

/// Runs one command. Returns 0 on success, 2 on validation errors and 3 on
/// numerical failures (including failed verification checks).
int run(const RunConfig& c, std::ostream& out, std::ostream& err);

/// Parses flags, merges them over an optional --config file and runs.
int main_entry(int argc, char** argv);

}  // namespace conesmooth::cli
