#include "quandloid/caps.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "quandloid/error.hpp"

namespace quandloid {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfRangeEntry: return "OutOfRangeEntry";
    case ErrorCode::IdempotenceViolation: return "IdempotenceViolation";
    case ErrorCode::ColumnNotBijective: return "ColumnNotBijective";
    case ErrorCode::DistributivityViolation: return "DistributivityViolation";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::PartitionBoundViolation: return "PartitionBoundViolation";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::CrossingParity: return "CrossingParity";
    case ErrorCode::RoleConflict: return "RoleConflict";
    case ErrorCode::SignConflict: return "SignConflict";
    case ErrorCode::NotOpenComponent: return "NotOpenComponent";
    case ErrorCode::UnknownArc: return "UnknownArc";
    case ErrorCode::InvalidPosition: return "InvalidPosition";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::UnassignedGenerator: return "UnassignedGenerator";
    case ErrorCode::UnknownPinnedGenerator: return "UnknownPinnedGenerator";
    case ErrorCode::PinOutOfRange: return "PinOutOfRange";
    case ErrorCode::CountOverflow: return "CountOverflow";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::size_t parse_value(std::string_view key, std::string_view text, std::size_t hard_limit) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    throw Error(ErrorCode::InvalidArgument,
                "caps: bad value '" + std::string(text) + "' for " + std::string(key));
  }
  if (value > hard_limit) {
    throw Error(ErrorCode::InvalidArgument,
                "caps: " + std::string(key) + "=" + std::to_string(value) +
                    " exceeds hard limit " + std::to_string(hard_limit));
  }
  return value;
}

}  // namespace

Caps Caps::parse(std::string_view spec) {
  Caps caps;
  while (!spec.empty()) {
    auto comma = spec.find(',');
    auto item = trim(spec.substr(0, comma));
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::InvalidArgument, "caps: expected key=value, got '" + std::string(item) + "'");
    }
    auto key = trim(item.substr(0, eq));
    auto value = trim(item.substr(eq + 1));
    if (key == "group") {
      caps.group_order = parse_value(key, value, kHardGroupOrder);
    } else if (key == "census") {
      caps.census_order = parse_value(key, value, kHardCensusOrder);
    } else if (key == "arity") {
      caps.pointed_arity = parse_value(key, value, kHardPointedArity);
    } else {
      throw Error(ErrorCode::InvalidArgument, "caps: unknown key '" + std::string(key) + "'");
    }
  }
  return caps;
}

Caps Caps::from_environment() {
  const char* env = std::getenv("QUANDLOID_CAPS");
  return env ? parse(env) : Caps{};
}

}  // namespace quandloid
