#pragma once

#include <optional>
#include <string>

#include "json.hpp"

namespace mpendo {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Skip };

std::string to_string(Status s);

/// One line of a verification sweep.
struct Report {
  std::string check;
  Json params = Json::object();
  Status status = Status::Pass;
  Json details = Json::object();
  /// Always present when status is Fail.
  std::optional<Json> counterexample;

  static Report pass(std::string check, Json params, Json details = Json::object());
  static Report skip(std::string check, Json params, std::string reason);
  static Report fail(std::string check, Json params, Json counterexample, Json details = Json::object());

  Json to_json() const;
  /// Single-line human-readable form.
  std::string to_text() const;
};

} // namespace mpendo
