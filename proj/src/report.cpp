#include "mpendo/report.hpp"

namespace mpendo {

std::string to_string(Status s)
{
  switch (s) {
  case Status::Pass:
    return "PASS";
  case Status::Fail:
    return "FAIL";
  case Status::Skip:
    return "SKIP";
  }
  return "?";
}

Report Report::pass(std::string check, Json params, Json details)
{
  return {std::move(check), std::move(params), Status::Pass, std::move(details), std::nullopt};
}

Report Report::skip(std::string check, Json params, std::string reason)
{
  Json details = Json::object();
  details["reason"] = std::move(reason);
  return {std::move(check), std::move(params), Status::Skip, std::move(details), std::nullopt};
}

Report Report::fail(std::string check, Json params, Json counterexample, Json details)
{
  if (counterexample.is_null())
    counterexample = "unspecified";
  return {std::move(check), std::move(params), Status::Fail, std::move(details), std::move(counterexample)};
}

Json Report::to_json() const
{
  Json j = Json::object();
  j["check"] = check;
  j["params"] = params;
  j["status"] = to_string(status);
  j["details"] = details;
  if (counterexample)
    j["counterexample"] = *counterexample;
  return j;
}

std::string Report::to_text() const
{
  std::string out = to_string(status) + " " + check;
  for (const auto& [k, v] : params.items())
    out += " " + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
  if (!details.empty())
    out += " | " + details.dump();
  if (counterexample)
    out += " | counterexample: " + counterexample->dump();
  return out;
}

} // namespace mpendo
