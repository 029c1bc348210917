#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "bider/algebra.hpp"
#include "bider/bilinear.hpp"
#include "bider/poly.hpp"

namespace bider {

/// Malformed input. line() is 1-based; 0 means the problem is not tied to
/// one line (e.g. a header that never appears).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Algebra files:
//   algebra <name>
//   dim <n>
//   kind <lie|leibniz-left|leibniz-right|generic>
//   c i j k = p/q        (1-based, omitted constants are zero)
// `#` starts a comment. All three headers precede the body; duplicate
// headers and duplicate (i,j,k) entries are errors.
Algebra parse_algebra(std::string_view text);
std::string serialize_algebra(const Algebra& a);

// Map files:
//   map <bilinear|polyright|polyleft>
//   dim <n>
//   t i j k = p/q                 (bilinear: B(e_i,e_j) has e_k-coefficient p/q)
//   m (a1,...,an) r c = p/q       (poly: entry (r,c) of the coefficient of y^a, or x^a for polyleft)
using MapData = std::variant<BilinearTensor, PolyRightMap, PolyLeftMap>;

MapData parse_map(std::string_view text);
std::string serialize_map(const BilinearTensor& b);
std::string serialize_map(const PolyRightMap& p);
std::string serialize_map(const PolyLeftMap& p);
std::string serialize_map(const MapData& m);

/// Reads a whole file; throws std::runtime_error if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace bider
