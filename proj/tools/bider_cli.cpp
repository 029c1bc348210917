// bider: derivations, biderivations and their brackets for algebras given by
// structure constants.
//
// Exit codes: 0 every requested check passed, 1 a check failed,
// 2 usage error or unreadable/malformed input.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <string>
#include <variant>

#include "bider/algebra.hpp"
#include "bider/biderivations.hpp"
#include "bider/brackets.hpp"
#include "bider/derivations.hpp"
#include "bider/io.hpp"
#include "bider/report.hpp"
#include "bider/suites.hpp"

namespace {

constexpr int kFailed = 1;
constexpr int kUsage = 2;

class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A file path, or the name of a built-in algebra when no such file exists.
bider::Algebra load_algebra(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    try {
      return bider::parse_algebra(bider::read_file(arg));
    } catch (const bider::ParseError& e) {
      throw InputError(arg + ": " + e.what());
    }
  }
  try {
    return bider::builtin(arg);
  } catch (const std::invalid_argument&) {
    throw InputError("no such file or built-in algebra: " + arg);
  }
}

bider::MapData load_map(const std::string& path) {
  try {
    return bider::parse_map(bider::read_file(path));
  } catch (const bider::ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw InputError(e.what());
  }
}

int emit(const bider::Report& r, bool json) {
  if (json) std::cout << bider::to_json(r).dump(2) << "\n";
  else std::cout << bider::to_text(r);
  return r.passed() ? 0 : kFailed;
}

int emit(const bider::SpaceReport& r, bool json) {
  if (json) std::cout << bider::to_json(r).dump(2) << "\n";
  else std::cout << bider::to_text(r);
  return 0;
}

bider::PolyRightMap as_right(const bider::MapData& m, const std::string& path) {
  if (const auto* t = std::get_if<bider::BilinearTensor>(&m)) return bider::right_from_tensor(*t);
  if (const auto* p = std::get_if<bider::PolyRightMap>(&m)) return *p;
  throw InputError(path + ": rhd needs a bilinear or polyright map");
}

bider::PolyLeftMap as_left(const bider::MapData& m, const std::string& path) {
  if (const auto* t = std::get_if<bider::BilinearTensor>(&m)) return bider::left_from_tensor(*t);
  if (const auto* p = std::get_if<bider::PolyLeftMap>(&m)) return *p;
  throw InputError(path + ": lhd needs a bilinear or polyleft map");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Derivations, biderivations and their Lie brackets over exact rationals"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Machine-readable JSON report");

  std::string algebra_arg;
  auto* check = app.add_subcommand("check", "Verify the identities of the declared algebra kind");
  check->add_option("algebra", algebra_arg, "Algebra file or built-in name")->required();

  auto* der = app.add_subcommand("der", "Dimension and canonical basis of Der(A)");
  der->add_option("algebra", algebra_arg, "Algebra file or built-in name")->required();

  std::string side = "both";
  auto* bider_cmd = app.add_subcommand("bider", "Dimension and canonical basis of a biderivation space");
  bider_cmd->add_option("algebra", algebra_arg, "Algebra file or built-in name")->required();
  bider_cmd->add_option("--side", side, "right, left or both (= BiDer)")
      ->check(CLI::IsMember({"right", "left", "both"}));

  std::string op;
  std::vector<std::string> map_files;
  std::string bracket_algebra;
  auto* bracket = app.add_subcommand("bracket", "Bracket of two maps, printed in map-file format");
  bracket->add_option("--op", op, "rhd or lhd")->required()->check(CLI::IsMember({"rhd", "lhd"}));
  bracket->add_option("maps", map_files, "Two map files")->required()->expected(2);
  bracket->add_option("--algebra", bracket_algebra, "Algebra file or built-in name")->required();

  std::uint64_t seed = 0;
  std::size_t samples = 25;
  auto* verify = app.add_subcommand("verify", "Run every identity suite on an algebra");
  verify->add_option("algebra", algebra_arg, "Algebra file or built-in name")->required();
  verify->add_option("--seed", seed, "Random seed");
  verify->add_option("--samples", samples, "Samples per property suite")->check(CLI::PositiveNumber);

  std::string example_name;
  auto* example = app.add_subcommand("example", "Reproduce a worked example");
  example->add_option("name", example_name, "Example name")->required()->check(CLI::IsMember({"heisenberg"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*check) return emit(bider::run_check(load_algebra(algebra_arg)), json);

    if (*der) {
      const bider::Algebra a = load_algebra(algebra_arg);
      return emit(bider::SpaceReport{"der", a.name, {{"der", a.dim(), bider::derivation_space(a)}}}, json);
    }

    if (*bider_cmd) {
      const bider::Algebra a = load_algebra(algebra_arg);
      bider::SpaceReport r{"bider", a.name + " --side " + side, {}};
      if (side == "right") r.spaces.push_back({"right", a.dim(), bider::right_bider_bilinear_space(a)});
      else if (side == "left") r.spaces.push_back({"left", a.dim(), bider::left_bider_bilinear_space(a)});
      else r.spaces.push_back({"bider", a.dim(), bider::bider_space(a)});
      return emit(r, json);
    }

    if (*bracket) {
      const bider::Algebra a = load_algebra(bracket_algebra);
      const bider::MapData m1 = load_map(map_files[0]);
      const bider::MapData m2 = load_map(map_files[1]);
      std::string out;
      if (op == "rhd") {
        const auto b1 = as_right(m1, map_files[0]);
        const auto b2 = as_right(m2, map_files[1]);
        if (b1.dim() != a.dim() || b2.dim() != a.dim()) throw InputError("map and algebra dimensions differ");
        for (const auto* b : {&b1, &b2}) {
          if (!bider::is_right_bider_poly(a, *b)) {
            std::cerr << "error: " << (b == &b1 ? map_files[0] : map_files[1]) << " is not a right biderivation of "
                      << a.name << "\n";
            return kFailed;
          }
        }
        out = bider::serialize_map(bider::rhd(b1, b2));
      } else {
        const auto b1 = as_left(m1, map_files[0]);
        const auto b2 = as_left(m2, map_files[1]);
        if (b1.dim() != a.dim() || b2.dim() != a.dim()) throw InputError("map and algebra dimensions differ");
        for (const auto* b : {&b1, &b2}) {
          if (!bider::is_left_bider_poly(a, *b)) {
            std::cerr << "error: " << (b == &b1 ? map_files[0] : map_files[1]) << " is not a left biderivation of "
                      << a.name << "\n";
            return kFailed;
          }
        }
        out = bider::serialize_map(bider::lhd(b1, b2));
      }
      if (json) std::cout << nlohmann::json{{"command", "bracket"}, {"op", op}, {"map", out}}.dump(2) << "\n";
      else std::cout << out;
      return 0;
    }

    if (*verify) return emit(bider::run_verify(load_algebra(algebra_arg), {seed, samples}), json);

    if (*example) return emit(bider::run_heisenberg_example(), json);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
