#include "bider/algebra.hpp"

#include <charconv>
#include <stdexcept>

namespace bider {

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::lie: return "lie";
    case Kind::leibniz_left: return "leibniz-left";
    case Kind::leibniz_right: return "leibniz-right";
    case Kind::generic: return "generic";
  }
  return "generic";
}

std::optional<Kind> parse_kind(std::string_view text) {
  if (text == "lie") return Kind::lie;
  if (text == "leibniz-left") return Kind::leibniz_left;
  if (text == "leibniz-right") return Kind::leibniz_right;
  if (text == "generic") return Kind::generic;
  return std::nullopt;
}

Algebra make_algebra(std::string name, std::size_t dim, Kind kind) {
  return Algebra{std::move(name), kind, BilinearTensor(dim)};
}

bool same_structure(const Algebra& a, const Algebra& b) {
  return a.kind == b.kind && a.product == b.product;
}

Vector bracket(const Algebra& a, const Vector& x, const Vector& y) {
  return evaluate(a.product, x, y);
}

Matrix adjoint(const Algebra& a, const Vector& x) {
  const std::size_t n = a.dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector col = bracket(a, x, unit_vector(n, j));
    for (std::size_t k = 0; k < n; ++k) m(k, j) = col[k];
  }
  return m;
}

namespace {

using Triple = std::array<std::size_t, 3>;

// Products of basis vectors are read straight off the constants.
Vector basis_product(const Algebra& a, std::size_t i, std::size_t j) {
  return a.product.value(i, j);
}

Vector prod(const Algebra& a, const Vector& x, const Vector& y) {
  return bracket(a, x, y);
}

void check_antisymmetry(const Algebra& a, std::vector<IdentityFailure>& out) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Vector lhs = basis_product(a, i, j);
      const Vector rhs = Rational(-1) * basis_product(a, j, i);
      if (lhs != rhs) out.push_back({"antisymmetry", {i, j}, lhs, rhs});
    }
}

template <typename Identity>
void check_triples(const Algebra& a, const char* name, Identity identity, std::vector<IdentityFailure>& out) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto [lhs, rhs] = identity(unit_vector(n, i), unit_vector(n, j), unit_vector(n, k));
        if (lhs != rhs) out.push_back({name, {i, j, k}, std::move(lhs), std::move(rhs)});
      }
}

}  // namespace

KindCheck check_kind(const Algebra& a, Kind kind) {
  KindCheck report{kind, {}};
  switch (kind) {
    case Kind::generic:
      break;
    case Kind::lie:
      check_antisymmetry(a, report.failures);
      // [x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0
      check_triples(a, "jacobi", [&](const Vector& x, const Vector& y, const Vector& z) {
        Vector sum = prod(a, x, prod(a, y, z)) + prod(a, y, prod(a, z, x)) + prod(a, z, prod(a, x, y));
        return std::pair{std::move(sum), zero_vector(a.dim())};
      }, report.failures);
      break;
    case Kind::leibniz_left:
      // [x,[y,z]] = [[x,y],z] + [y,[x,z]]
      check_triples(a, "left-leibniz", [&](const Vector& x, const Vector& y, const Vector& z) {
        return std::pair{prod(a, x, prod(a, y, z)), prod(a, prod(a, x, y), z) + prod(a, y, prod(a, x, z))};
      }, report.failures);
      break;
    case Kind::leibniz_right:
      // [[x,y],z] = [[x,z],y] + [x,[y,z]]
      check_triples(a, "right-leibniz", [&](const Vector& x, const Vector& y, const Vector& z) {
        return std::pair{prod(a, prod(a, x, y), z), prod(a, prod(a, x, z), y) + prod(a, x, prod(a, y, z))};
      }, report.failures);
      break;
  }
  return report;
}

Algebra opposite(const Algebra& a) {
  constexpr std::string_view prefix = "opposite(";
  std::string name;
  if (a.name.starts_with(prefix) && a.name.ends_with(")")) {
    name = a.name.substr(prefix.size(), a.name.size() - prefix.size() - 1);
  } else {
    name = std::string(prefix) + a.name + ")";
  }
  Kind kind = a.kind;
  if (kind == Kind::leibniz_left) kind = Kind::leibniz_right;
  else if (kind == Kind::leibniz_right) kind = Kind::leibniz_left;
  return Algebra{std::move(name), kind, transpose(a.product)};
}

namespace {

void set_bracket(Algebra& a, std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
  a.product.at(i - 1, j - 1, k - 1) = v;
}

void set_lie_bracket(Algebra& a, std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
  set_bracket(a, i, j, k, v);
  set_bracket(a, j, i, k, -v);
}

std::optional<std::size_t> parse_abelian_dim(std::string_view name) {
  std::string_view digits;
  if (name.starts_with("abelian(") && name.ends_with(")")) {
    digits = name.substr(8, name.size() - 9);
  } else if (name.starts_with("abelian")) {
    digits = name.substr(7);
  } else {
    return std::nullopt;
  }
  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || n == 0) return std::nullopt;
  return n;
}

}  // namespace

Algebra builtin(std::string_view name) {
  if (auto n = parse_abelian_dim(name)) {
    return make_algebra("abelian(" + std::to_string(*n) + ")", *n, Kind::lie);
  }
  if (name == "L1") {
    return make_algebra("L1", 2, Kind::lie);
  }
  if (name == "L2") {
    Algebra a = make_algebra("L2", 2, Kind::lie);
    set_lie_bracket(a, 1, 2, 2, 1);
    return a;
  }
  if (name == "L3") {
    Algebra a = make_algebra("L3", 2, Kind::leibniz_left);
    set_bracket(a, 2, 2, 1, 1);
    return a;
  }
  if (name == "L4") {
    Algebra a = make_algebra("L4", 2, Kind::leibniz_left);
    set_bracket(a, 2, 1, 1, 1);
    set_bracket(a, 2, 2, 1, 1);
    return a;
  }
  if (name == "heisenberg3") {
    Algebra a = make_algebra("heisenberg3", 3, Kind::lie);
    set_lie_bracket(a, 1, 2, 3, 1);
    return a;
  }
  if (name == "sl2") {
    // basis (h, e, f)
    Algebra a = make_algebra("sl2", 3, Kind::lie);
    set_lie_bracket(a, 1, 2, 2, 2);
    set_lie_bracket(a, 1, 3, 3, -2);
    set_lie_bracket(a, 2, 3, 1, 1);
    return a;
  }
  throw std::invalid_argument("unknown built-in algebra: " + std::string(name));
}

std::vector<std::string> builtin_names() {
  return {"abelian(2)", "abelian(3)", "L1", "L2", "L3", "L4", "heisenberg3", "sl2"};
}

}  // namespace bider
