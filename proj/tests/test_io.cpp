#include <doctest.h>

#include "bider/io.hpp"
#include "bider/random.hpp"
#include "bider/suites.hpp"

using namespace bider;

namespace {

std::string data(const std::string& rel) { return read_file(std::string(BIDER_DATA_DIR) + "/" + rel); }

std::size_t error_line(const std::string& text) {
  try {
    parse_algebra(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("bundled algebra files match the builtins") {
  CHECK(same_structure(parse_algebra(data("algebras/heisenberg3.alg")), builtin("heisenberg3")));
  CHECK(parse_algebra(data("algebras/heisenberg3.alg")).kind == Kind::lie);
  for (const auto& name : {"sl2", "L1", "L2", "L3", "L4"}) {
    CAPTURE(name);
    const Algebra a = parse_algebra(data(std::string("algebras/") + name + ".alg"));
    CHECK(same_structure(a, builtin(name)));
    CHECK(a.kind == builtin(name).kind);
  }
  const Algebra g = parse_algebra(data("algebras/L4_generic.alg"));
  CHECK(g.kind == Kind::generic);
  CHECK(g.product == builtin("L4").product);
}

TEST_CASE("bundled map files match the example tensors") {
  CHECK(std::get<BilinearTensor>(parse_map(data("maps/heisenberg_B1.map"))) == heisenberg_b1());
  CHECK(std::get<BilinearTensor>(parse_map(data("maps/heisenberg_B2.map"))) == heisenberg_b2());
}

TEST_CASE("empty body is the abelian algebra") {
  const Algebra a = parse_algebra("algebra ab\ndim 3\nkind lie\n");
  CHECK(a.name == "ab");
  CHECK(same_structure(a, builtin("abelian(3)")));
}

TEST_CASE("comments and blank lines are ignored") {
  const Algebra a = parse_algebra("# leading\n\nalgebra x  # trailing\ndim 2\nkind generic\n\nc 1 1 2 = -3/6\n");
  CHECK(a.constant(0, 0, 1) == Rational(-1, 2));
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(error_line("algebra x\ndim 2\nkind lie\nc 1 2 1 = 1\nc 1 2 1 = 2\n") == 5);
  CHECK(error_line("algebra x\ndim two\nkind lie\n") == 2);
  CHECK(error_line("algebra x\ndim 2\nkind weird\n") == 3);
  CHECK(error_line("algebra x\ndim 2\nkind lie\nc 1 3 1 = 1\n") == 4);
  CHECK(error_line("algebra x\ndim 2\nkind lie\nc 1 2 1 = 0.5\n") == 4);
  CHECK(error_line("algebra x\ndim 2\nkind lie\nc 1 2 1 = 1/0\n") == 4);
  CHECK(error_line("algebra x\ndim 2\ndim 2\nkind lie\n") == 3);
  CHECK(error_line("algebra x\ndim 2\nkind lie\nc 1 2 = 1\n") == 4);
  CHECK(error_line("algebra x\ndim 2\nc 1 2 1 = 1\nkind lie\n") == 3);
  CHECK(error_line("algebra x\ndim 0\nkind lie\n") == 2);
  CHECK_THROWS_AS(parse_algebra(""), ParseError);

  try {
    parse_algebra("algebra x\ndim 2\nkind lie\nc 1 2 1 = 1\nc 1 2 1 = 2\n");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).rfind("line 5:", 0) == 0);
  }
}

TEST_CASE("map parse errors") {
  CHECK_THROWS_AS(parse_map("map bogus\ndim 2\n"), ParseError);
  CHECK_THROWS_AS(parse_map("map polyright\ndim 2\nm (1,0,0) 1 1 = 1\n"), ParseError);
  CHECK_THROWS_AS(parse_map("map bilinear\ndim 2\nt 1 1 1 = 1\nt 1 1 1 = 1\n"), ParseError);
  const MapData m = parse_map("map polyleft\ndim 2\nm ( 1, 2 ) 1 2 = 3\n");
  const auto& p = std::get<PolyLeftMap>(m);
  CHECK(p.coefficient(MultiIndex({1, 2}))(0, 1) == 3);
}

TEST_CASE("algebra round-trip property") {
  Sampler s(61);
  const Kind kinds[] = {Kind::lie, Kind::leibniz_left, Kind::leibniz_right, Kind::generic};
  for (int k = 0; k < 30; ++k) {
    const std::size_t n = static_cast<std::size_t>(s.integer(1, 4));
    Algebra a = make_algebra("rand" + std::to_string(k), n, kinds[s.integer(0, 3)]);
    a.product = s.tensor(n);
    const std::string text = serialize_algebra(a);
    const Algebra back = parse_algebra(text);
    CHECK(back.name == a.name);
    CHECK(back.kind == a.kind);
    CHECK(back.product == a.product);
    CHECK(serialize_algebra(back) == text);
  }
}

TEST_CASE("map round-trip property") {
  Sampler s(62);
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = static_cast<std::size_t>(s.integer(1, 3));
    const BilinearTensor t = s.tensor(n);
    CHECK(std::get<BilinearTensor>(parse_map(serialize_map(t))) == t);

    PolyRightMap r(n);
    PolyLeftMap l(n);
    for (int term = s.integer(0, 3); term > 0; --term) {
      r.add_term(s.multi_index(n, 3), s.matrix(n));
      l.add_term(s.multi_index(n, 3), s.matrix(n));
    }
    const std::string rt = serialize_map(r);
    CHECK(std::get<PolyRightMap>(parse_map(rt)) == r);
    CHECK(serialize_map(parse_map(rt)) == rt);
    CHECK(std::get<PolyLeftMap>(parse_map(serialize_map(l))) == l);
  }
}

TEST_CASE("read_file on a missing path") {
  CHECK_THROWS_AS(read_file("/nonexistent/nowhere.alg"), std::runtime_error);
}
