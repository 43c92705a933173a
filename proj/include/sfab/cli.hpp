#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace sfab::cli {

using json = nlohmann::json;

// Everything a command needs; filled from --config, then from flags.
struct RunConfig {
  std::string type;
  int rank = 0;
  std::map<int, mpq_class> q;
  std::map<std::string, std::string> task;  // option name -> text
  std::string out_path;
  std::string format = "json";
  bool pretty = false;

  static RunConfig from_json(const json& j);  // throws ConfigError on unknown keys
  json to_json() const;
};

// Option names accepted in the "task" block.
const std::vector<std::string>& task_keys();

// Exit codes: 0 success, 1 a checked identity failed, 2 bad input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sfab::cli
