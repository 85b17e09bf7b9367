#include "doctest.h"
#include "toric_cobordism/serialize.hpp"

using namespace tcob;

TEST_CASE("family round trip") {
  for (Ring ring : {Ring::Z, Ring::GF2}) {
    const auto fam = build_family(3, ring);
    const Json j = to_json(fam);
    const auto back = family_from_json(Json::parse(dump(j)));
    CHECK(to_json(back) == j);
    CHECK(back.full.chi == fam.full.chi);
    CHECK(back.h == fam.h);
    CHECK(back.phi == fam.phi);
    CHECK(validate(back.full).valid);
    CHECK(dump(to_json(back)) == dump(j));
  }
}

TEST_CASE("polytope round trip keeps the orientation") {
  const auto fam = build_family(2, Ring::Z);
  const auto& p = fam.boundary[0].polytope;
  const auto q = polytope_from_json(to_json(p));
  CHECK(q.all_vertex_facets() == p.all_vertex_facets());
  CHECK(q.facet_tags() == p.facet_tags());
  CHECK(q.frame() == p.frame());
  std::vector<std::size_t> id(p.facet_count());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  CHECK(isomorphism_orientation(p, q, id) == 1);
}

TEST_CASE("translations, matrices and homology tables") {
  const DeltaTranslation t{{1, 0, 2}, IntMatrix{{0, 1}, {1, 0}}};
  const auto back = translation_from_json(to_json(t));
  CHECK(back.phi == t.phi);
  CHECK(back.delta == t.delta);
  const HomologyTable h = {{0, 1, {}}, {1, 0, {Integer(2)}}, {2, 0, {}}};
  CHECK(homology_from_json(to_json(h)) == h);
  CHECK(to_json(h)[1]["torsion"] == Json::array({2}));
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(matrix_from_json(Json::parse("[[1, 2], [3]]")), FormatError);
  CHECK_THROWS_AS(family_from_json(Json::parse("{}")), FormatError);
  Json j = to_json(build_family(2, Ring::Z));
  j["r1"] = 0.5;
  CHECK_THROWS_AS(family_from_json(j), FormatError);
  j = to_json(build_family(2, Ring::Z));
  j["pair"]["vectors"]["99"] = {1, 0, 0};
  CHECK_THROWS_AS(family_from_json(j), FormatError);
}

TEST_CASE("dump is canonical") {
  const Json a = Json::parse(R"({"b": 1, "a": [1, 2]})");
  CHECK(dump(a) == "{\n  \"a\": [\n    1,\n    2\n  ],\n  \"b\": 1\n}\n");
}
