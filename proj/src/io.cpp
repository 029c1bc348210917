#include "bider/io.hpp"

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace bider {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

struct Line {
  std::size_t number;
  std::string text;  // comment stripped, trimmed
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view raw = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string t = trim(raw);
    if (!t.empty()) out.push_back({number, std::move(t)});
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

std::size_t parse_count(const std::string& token, std::size_t line, const char* what) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(line, std::string("expected a non-negative integer for ") + what + ", got '" + token + "'");
  }
  try {
    return std::stoul(token);
  } catch (const std::exception&) {
    throw ParseError(line, std::string(what) + " out of range: '" + token + "'");
  }
}

std::size_t parse_index(const std::string& token, std::size_t n, std::size_t line) {
  const std::size_t v = parse_count(token, line, "index");
  if (v < 1 || v > n) throw ParseError(line, "index " + token + " outside [1," + std::to_string(n) + "]");
  return v - 1;
}

Rational parse_value(const std::string& token, std::size_t line) {
  try {
    return parse_rational(token);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

// Headers come first; returns the first body line index.
struct Headers {
  std::vector<std::pair<std::string, std::string>> values;
  std::size_t body_start = 0;

  std::optional<std::string> get(const std::string& key) const {
    for (const auto& [k, v] : values)
      if (k == key) return v;
    return std::nullopt;
  }
};

Headers read_headers(const std::vector<Line>& lines, const std::set<std::string>& keys) {
  Headers h;
  std::size_t i = 0;
  for (; i < lines.size(); ++i) {
    const auto toks = tokens(lines[i].text);
    if (!keys.count(toks[0])) break;
    if (toks.size() != 2) throw ParseError(lines[i].number, "header '" + toks[0] + "' takes exactly one value");
    if (h.get(toks[0])) throw ParseError(lines[i].number, "duplicate header '" + toks[0] + "'");
    h.values.emplace_back(toks[0], toks[1]);
  }
  for (const auto& k : keys) {
    if (!h.get(k)) {
      const std::size_t where = i < lines.size() ? lines[i].number : 0;
      throw ParseError(where, "missing header '" + k + "' before body");
    }
  }
  h.body_start = i;
  return h;
}

void expect_equals(const std::vector<std::string>& toks, std::size_t eq_pos, std::size_t line) {
  if (toks.size() != eq_pos + 2 || toks[eq_pos] != "=") {
    throw ParseError(line, "expected '<indices> = <rational>'");
  }
}

}  // namespace

Algebra parse_algebra(std::string_view text) {
  const auto lines = content_lines(text);
  const Headers h = read_headers(lines, {"algebra", "dim", "kind"});
  const auto header_line = [&](const std::string& key) {
    for (const auto& l : lines)
      if (tokens(l.text)[0] == key) return l.number;
    return std::size_t{0};
  };
  const std::size_t n = parse_count(*h.get("dim"), header_line("dim"), "dim");
  if (n == 0) throw ParseError(header_line("dim"), "dim must be positive");
  const auto kind = parse_kind(*h.get("kind"));
  if (!kind) throw ParseError(header_line("kind"), "unknown kind '" + *h.get("kind") + "'");

  Algebra a = make_algebra(*h.get("algebra"), n, *kind);
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (std::size_t li = h.body_start; li < lines.size(); ++li) {
    const auto& line = lines[li];
    const auto toks = tokens(line.text);
    if (toks[0] != "c") throw ParseError(line.number, "unexpected line '" + line.text + "'");
    expect_equals(toks, 4, line.number);
    const std::size_t i = parse_index(toks[1], n, line.number);
    const std::size_t j = parse_index(toks[2], n, line.number);
    const std::size_t k = parse_index(toks[3], n, line.number);
    if (!seen.insert({i, j, k}).second) {
      throw ParseError(line.number, "duplicate entry c " + toks[1] + " " + toks[2] + " " + toks[3]);
    }
    a.product.at(i, j, k) = parse_value(toks[5], line.number);
  }
  return a;
}

std::string serialize_algebra(const Algebra& a) {
  std::ostringstream os;
  os << "algebra " << a.name << "\n"
     << "dim " << a.dim() << "\n"
     << "kind " << to_string(a.kind) << "\n";
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (a.constant(i, j, k) != 0)
          os << "c " << i + 1 << " " << j + 1 << " " << k + 1 << " = " << to_string(a.constant(i, j, k)) << "\n";
  return os.str();
}

namespace {

MultiIndex parse_multi_index(const std::string& token, std::size_t n, std::size_t line) {
  if (token.size() < 2 || token.front() != '(' || token.back() != ')') {
    throw ParseError(line, "expected exponent tuple '(a1,...,an)', got '" + token + "'");
  }
  std::vector<unsigned> e;
  std::string inner = token.substr(1, token.size() - 2);
  std::istringstream is(inner);
  for (std::string part; std::getline(is, part, ',');) {
    e.push_back(static_cast<unsigned>(parse_count(trim(part), line, "exponent")));
  }
  if (e.size() != n) {
    throw ParseError(line, "exponent tuple has " + std::to_string(e.size()) + " entries, expected " + std::to_string(n));
  }
  return MultiIndex(std::move(e));
}

template <Side S>
PolyMap<S> parse_poly_body(const std::vector<Line>& lines, std::size_t start, std::size_t n) {
  PolyMap<S> p(n);
  std::set<std::tuple<MultiIndex, std::size_t, std::size_t>> seen;
  for (std::size_t li = start; li < lines.size(); ++li) {
    const auto& line = lines[li];
    // Glue the parenthesized tuple into one token so spaces inside it are allowed.
    std::string text = line.text;
    const auto open = text.find('(');
    const auto close = text.find(')');
    if (open == std::string::npos || close == std::string::npos || close < open) {
      throw ParseError(line.number, "expected 'm (a1,...,an) r c = p/q'");
    }
    std::string tuple;
    for (char ch : text.substr(open, close - open + 1))
      if (ch != ' ' && ch != '\t') tuple += ch;
    const auto toks_rest = tokens(text.substr(close + 1));
    const auto head = tokens(text.substr(0, open));
    if (head.size() != 1 || head[0] != "m") throw ParseError(line.number, "unexpected line '" + line.text + "'");
    std::vector<std::string> toks{"m", tuple};
    toks.insert(toks.end(), toks_rest.begin(), toks_rest.end());
    expect_equals(toks, 4, line.number);
    const MultiIndex index = parse_multi_index(tuple, n, line.number);
    const std::size_t r = parse_index(toks[2], n, line.number);
    const std::size_t c = parse_index(toks[3], n, line.number);
    if (!seen.insert({index, r, c}).second) throw ParseError(line.number, "duplicate entry " + line.text.substr(0, line.text.find('=')));
    Matrix m(n, n);
    m(r, c) = parse_value(toks[5], line.number);
    p.add_term(index, m);
  }
  return p;
}

template <Side S>
std::string serialize_poly(const PolyMap<S>& p, const char* tag) {
  std::ostringstream os;
  os << "map " << tag << "\n" << "dim " << p.dim() << "\n";
  for (const auto& [index, m] : p.terms()) {
    std::string tuple = "(";
    for (std::size_t i = 0; i < index.size(); ++i) tuple += (i ? "," : "") + std::to_string(index[i]);
    tuple += ")";
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (m(r, c) != 0) os << "m " << tuple << " " << r + 1 << " " << c + 1 << " = " << to_string(m(r, c)) << "\n";
  }
  return os.str();
}

}  // namespace

MapData parse_map(std::string_view text) {
  const auto lines = content_lines(text);
  const Headers h = read_headers(lines, {"map", "dim"});
  std::size_t dim_line = 0, map_line = 0;
  for (const auto& l : lines) {
    const auto t = tokens(l.text)[0];
    if (t == "dim" && !dim_line) dim_line = l.number;
    if (t == "map" && !map_line) map_line = l.number;
  }
  const std::size_t n = parse_count(*h.get("dim"), dim_line, "dim");
  if (n == 0) throw ParseError(dim_line, "dim must be positive");
  const std::string type = *h.get("map");

  if (type == "bilinear") {
    BilinearTensor b(n);
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (std::size_t li = h.body_start; li < lines.size(); ++li) {
      const auto& line = lines[li];
      const auto toks = tokens(line.text);
      if (toks[0] != "t") throw ParseError(line.number, "unexpected line '" + line.text + "'");
      expect_equals(toks, 4, line.number);
      const std::size_t i = parse_index(toks[1], n, line.number);
      const std::size_t j = parse_index(toks[2], n, line.number);
      const std::size_t k = parse_index(toks[3], n, line.number);
      if (!seen.insert({i, j, k}).second) {
        throw ParseError(line.number, "duplicate entry t " + toks[1] + " " + toks[2] + " " + toks[3]);
      }
      b.at(i, j, k) = parse_value(toks[5], line.number);
    }
    return b;
  }
  if (type == "polyright") return parse_poly_body<Side::right>(lines, h.body_start, n);
  if (type == "polyleft") return parse_poly_body<Side::left>(lines, h.body_start, n);
  throw ParseError(map_line, "unknown map type '" + type + "'");
}

std::string serialize_map(const BilinearTensor& b) {
  std::ostringstream os;
  os << "map bilinear\n" << "dim " << b.dim() << "\n";
  const std::size_t n = b.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (b.at(i, j, k) != 0)
          os << "t " << i + 1 << " " << j + 1 << " " << k + 1 << " = " << to_string(b.at(i, j, k)) << "\n";
  return os.str();
}

std::string serialize_map(const PolyRightMap& p) { return serialize_poly(p, "polyright"); }
std::string serialize_map(const PolyLeftMap& p) { return serialize_poly(p, "polyleft"); }

std::string serialize_map(const MapData& m) {
  return std::visit([](const auto& v) { return serialize_map(v); }, m);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace bider
