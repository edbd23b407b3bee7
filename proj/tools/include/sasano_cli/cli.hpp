#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sasano/json_io.hpp"

namespace sasano::cli {

enum ExitCode { Ok = 0, VerificationFailed = 1, UsageError = 2, ActionFailed = 3 };

struct Request {
  std::string command;  // classify construct verify transform expand report
  std::string system;
  std::string alphas;   // comma separated, last may be "auto"
  std::optional<std::string> word;
  std::optional<json> solution;
  std::string at = "inf";
  std::optional<long> order;
  bool numeric = true;
};

struct Response {
  int code = Ok;
  json body;
};

Params parse_alphas(System s, const std::string& text);
Request request_from_json(const json& j);
Response execute(const Request& r);

// Full command line, argv[0] excluded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sasano::cli
