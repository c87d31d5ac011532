#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "stubborn/io.hpp"
#include "stubborn/sos.hpp"

namespace stubborn::cli {

// A .poly path or an inline expression; params are name=value pairs.
struct InputSpec {
  std::string source;
  std::vector<std::string> vars;
  std::vector<std::string> params;
};

struct Input {
  std::string source;
  bool from_file = false;
  Polynomial poly;
  nlohmann::json echo;
};

Input load_input(const InputSpec& spec);

// Exact decimal, scientific or p/q notation.
mpq_class parse_number(const std::string& text);

nlohmann::json cmd_info(const Input& in);
nlohmann::json cmd_delta(const Input& in, const std::string& point, const std::string& variant);
nlohmann::json cmd_stubborn(const Input& in, const std::string& zeros, int jobs);
nlohmann::json cmd_sos(const Input& in, unsigned power, bool exact_first,
                       const SdpTolerances& tol);

struct ThresholdArgs {
  std::string family;
  unsigned power = 1;
  std::optional<std::string> lo, hi, tol;
};
nlohmann::json cmd_threshold(const ThresholdArgs& args, const SdpTolerances& tol);

struct Report {
  int exit_code = 0;
  nlohmann::json json;   // emitted on exit codes 0 and 2
  std::string message;   // error text for exit codes 1 and 2
};

// Builds the run report around fn and maps errors to exit codes; fn fills the
// echoed inputs and returns the results.
Report run(const std::string& command, const nlohmann::json& tolerances, bool timings,
           const std::function<nlohmann::json(nlohmann::json& inputs)>& fn);

nlohmann::json tolerances_json(const SdpTolerances& tol);
std::string version();

int log_level();  // STUBBORN_LOG: 0 quiet, 1 info, 2 trace

}  // namespace stubborn::cli
