#include "bider/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bider/bilinear.hpp"
#include "bider/derivations.hpp"

namespace bider {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "FAIL";
    case Status::skipped: return "skip";
  }
  return "skip";
}

namespace {

Status parse_status(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "skipped") return Status::skipped;
  throw std::invalid_argument("unknown status '" + s + "'");
}

std::string json_status(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "skipped";
}

}  // namespace

bool Report::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const auto& c) { return c.status == Status::fail; });
}

void Report::add(std::string suite, std::string identity, bool ok, std::optional<std::string> witness) {
  checks.push_back({std::move(suite), std::move(identity), ok ? Status::pass : Status::fail,
                    ok ? std::nullopt : std::move(witness)});
}

void Report::skip(std::string suite, std::string identity, std::string reason) {
  checks.push_back({std::move(suite), std::move(identity), Status::skipped, std::move(reason)});
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << r.command << " " << r.subject << "\n";
  for (const auto& d : r.details) os << d << "\n";
  if (!r.checks.empty()) {
    std::size_t suite_w = 5, id_w = 8;
    for (const auto& c : r.checks) {
      suite_w = std::max(suite_w, c.suite.size());
      id_w = std::max(id_w, c.identity.size());
    }
    const auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size() + 2, ' '); };
    os << "\n" << pad("suite", suite_w) << pad("identity", id_w) << "status\n";
    for (const auto& c : r.checks) {
      os << pad(c.suite, suite_w) << pad(c.identity, id_w) << to_string(c.status);
      if (c.witness) os << "  (" << *c.witness << ")";
      os << "\n";
    }
    const auto failed = std::count_if(r.checks.begin(), r.checks.end(), [](const auto& c) { return c.status == Status::fail; });
    os << "\n" << r.checks.size() << " checks, " << failed << " failed\n";
  }
  os << "result: " << (r.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json j{{"suite", c.suite}, {"identity", c.identity}, {"status", json_status(c.status)}};
    if (c.witness) j["witness"] = *c.witness;
    checks.push_back(std::move(j));
  }
  return {{"command", r.command}, {"subject", r.subject}, {"details", r.details},
          {"checks", std::move(checks)}, {"passed", r.passed()}};
}

Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.subject = j.at("subject").get<std::string>();
  r.details = j.at("details").get<std::vector<std::string>>();
  for (const auto& c : j.at("checks")) {
    CheckRecord rec{c.at("suite").get<std::string>(), c.at("identity").get<std::string>(),
                    parse_status(c.at("status").get<std::string>()), std::nullopt};
    if (c.contains("witness")) rec.witness = c.at("witness").get<std::string>();
    r.checks.push_back(std::move(rec));
  }
  return r;
}

namespace {

void write_derivation(std::ostream& os, std::size_t n, const Vector& coords) {
  const Matrix m = matrix_from_coords(n, coords);
  for (std::size_t r = 0; r < n; ++r) {
    os << "  [";
    for (std::size_t c = 0; c < n; ++c) os << (c ? " " : "") << to_string(m(r, c));
    os << "]\n";
  }
}

void write_tensor(std::ostream& os, std::size_t n, const Vector& coords) {
  const BilinearTensor b = BilinearTensor::from_coords(n, coords);
  std::string line;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector v = b.value(i, j);
      if (is_zero(v)) continue;
      if (!line.empty()) line += ", ";
      line += "B(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ") = " + format_element(v);
    }
  os << "  " << line << "\n";
}

}  // namespace

std::string to_text(const SpaceReport& r) {
  std::ostringstream os;
  os << r.command << " " << r.subject << "\n";
  for (const auto& s : r.spaces) {
    os << s.space << " dim " << s.basis.dim() << "\n";
    for (std::size_t v = 0; v < s.basis.dim(); ++v) {
      os << "basis " << v + 1 << ":\n";
      if (s.space == "der") write_derivation(os, s.algebra_dim, s.basis.vectors[v]);
      else write_tensor(os, s.algebra_dim, s.basis.vectors[v]);
    }
  }
  return os.str();
}

nlohmann::json to_json(const SpaceReport& r) {
  nlohmann::json spaces = nlohmann::json::array();
  for (const auto& s : r.spaces) {
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& v : s.basis.vectors) {
      std::vector<std::string> coords;
      for (const auto& q : v) coords.push_back(to_string(q));
      basis.push_back(coords);
    }
    spaces.push_back({{"space", s.space}, {"algebra_dim", s.algebra_dim}, {"ambient_dim", s.basis.ambient_dim},
                      {"dim", s.basis.dim()}, {"basis", std::move(basis)}});
  }
  return {{"command", r.command}, {"subject", r.subject}, {"spaces", std::move(spaces)}};
}

SpaceReport space_report_from_json(const nlohmann::json& j) {
  SpaceReport r;
  r.command = j.at("command").get<std::string>();
  r.subject = j.at("subject").get<std::string>();
  for (const auto& s : j.at("spaces")) {
    SpaceEntry e;
    e.space = s.at("space").get<std::string>();
    e.algebra_dim = s.at("algebra_dim").get<std::size_t>();
    e.basis.ambient_dim = s.at("ambient_dim").get<std::size_t>();
    for (const auto& v : s.at("basis")) {
      Vector coords;
      for (const auto& q : v) coords.push_back(parse_rational(q.get<std::string>()));
      e.basis.vectors.push_back(std::move(coords));
    }
    r.spaces.push_back(std::move(e));
  }
  return r;
}

}  // namespace bider
