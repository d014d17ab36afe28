#include <doctest.h>

#include "supervar/detecting.hpp"
#include "supervar/json_io.hpp"

using namespace supervar;

TEST_CASE("algebra JSON round trip is exact") {
  for (auto a : {build(Family::GL, {2, 3}), build(Family::PSL, {2}),
                 build(Family::OSP, {3, 2}), build(Family::Q, {3})}) {
    auto text = algebra_to_json(a);
    auto back = algebra_from_json(text);
    CHECK(algebra_to_json(back) == text);
    CHECK(validate(back).ok());
    CHECK(back.name() == a.name());
  }
  // SUB algebras round-trip with their parent embedded.
  auto g = std::make_shared<const LieSuperalgebra>(build(Family::GL, {2, 2}));
  auto e = assemble_detecting(g, Detecting::E).first;
  auto text = algebra_to_json(e);
  auto back = algebra_from_json(text);
  CHECK(algebra_to_json(back) == text);
}

TEST_CASE("module JSON round trip is exact") {
  auto g = std::make_shared<const LieSuperalgebra>(build(Family::GL, {1, 1}));
  auto nat = natural_module(g);
  auto text = module_to_json(nat, "gl(1|1)");
  auto back = module_from_json(text, g);
  CHECK(module_to_json(back, "gl(1|1)") == text);
  CHECK(validate_module(back).ok());

  CHECK_THROWS_AS(module_from_json(R"json({"dim0":1,"dim1":0,
      "action":[[99,0,0,"1"]],"algebra_ref":"gl(1|1)"})json",
                                   g),
                  IoError);
}

TEST_CASE("algebra references resolve") {
  CHECK(resolve_algebra_ref("gl(2|3)")->name() == "gl(2|3)");
  CHECK(resolve_algebra_ref("psl(2|2)")->name() == "psl(2|2)");
  CHECK(resolve_algebra_ref("P(2)")->name() == "P(2)");
  CHECK(resolve_algebra_ref("Q(2)")->name() == "Q(2)");
  CHECK(resolve_algebra_ref("q(3)")->name() == "q(3)");
  auto e = resolve_algebra_ref("e(gl(2|2))");
  CHECK(e->family == Family::SUB);
  CHECK(e->dim_odd() == 2);
  auto f = resolve_algebra_ref("f(psl(2|2))");
  CHECK(f->dim_odd() == 4);
  CHECK_THROWS_AS(resolve_algebra_ref("zorp(1|1)"), IoError);
}
