#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bider/linalg.hpp"

namespace bider {

enum class Status { pass, fail, skipped };

std::string_view to_string(Status s);

struct CheckRecord {
  std::string suite;
  std::string identity;
  Status status = Status::pass;
  std::optional<std::string> witness;

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

/// Outcome of a command: free-form detail lines followed by a check table.
struct Report {
  std::string command;
  std::string subject;
  std::vector<std::string> details;
  std::vector<CheckRecord> checks;

  /// No check failed (skipped checks do not count against the report).
  bool passed() const;
  void add(std::string suite, std::string identity, bool ok, std::optional<std::string> witness = std::nullopt);
  void skip(std::string suite, std::string identity, std::string reason);

  friend bool operator==(const Report&, const Report&) = default;
};

std::string to_text(const Report& r);
nlohmann::json to_json(const Report& r);
/// Inverse of to_json; throws nlohmann::json::exception or std::invalid_argument
/// on a malformed document.
Report report_from_json(const nlohmann::json& j);

/// A named subspace as printed by `der` and `bider`.
struct SpaceEntry {
  std::string space;  // "der", "right", "left", "bider"
  std::size_t algebra_dim = 0;
  SubspaceBasis basis;

  friend bool operator==(const SpaceEntry&, const SpaceEntry&) = default;
};

struct SpaceReport {
  std::string command;
  std::string subject;
  std::vector<SpaceEntry> spaces;

  friend bool operator==(const SpaceReport&, const SpaceReport&) = default;
};

std::string to_text(const SpaceReport& r);
nlohmann::json to_json(const SpaceReport& r);
SpaceReport space_report_from_json(const nlohmann::json& j);

}  // namespace bider
