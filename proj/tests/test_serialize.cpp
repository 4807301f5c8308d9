#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "anndiff/rng.hpp"
#include "anndiff/serialize.hpp"

using namespace anndiff;

TEST_CASE("laurent series round trips through text exactly") {
  Rng rng(61);
  const LaurentSeries s = random_laurent(rng, -7, 5);
  const LaurentSeries back =
      laurent_from_json(parse_json(dump_json(laurent_to_json(s))));
  CHECK(back == s);
}

TEST_CASE("zero series convention") {
  const Json j = laurent_to_json(LaurentSeries());
  CHECK(j["n_min"] == 0);
  CHECK(j["n_max"] == 0);
  REQUIRE(j["coeffs"].size() == 1);
  CHECK(laurent_from_json(j).is_zero());
}

TEST_CASE("laurent schema violations raise io errors") {
  CHECK_THROWS_AS(laurent_from_json(parse_json(R"({"n_min": 0})")), io_error);
  CHECK_THROWS_AS(
      laurent_from_json(parse_json(R"({"n_min":0,"n_max":1,"coeffs":[[1,0]]})")),
      io_error);
  CHECK_THROWS_AS(parse_json("{not json"), io_error);
}

TEST_CASE("two-variable series round trip keeps the pole order") {
  Rng rng(62);
  const TwoVarSeries s = random_two_var(rng, 3, 4).with_pole_order(2);
  const TwoVarSeries back =
      two_var_from_json(parse_json(dump_json(two_var_to_json(s))));
  CHECK(back == s);
}

TEST_CASE("two-variable series tolerates extra keys and a missing pole") {
  Json j = two_var_to_json(TwoVarSeries(1, 1));
  j.erase("pole_order");
  CHECK(two_var_from_json(j).pole_order() == 0);
  j["report"] = Json{{"anything", 1}};
  CHECK_NOTHROW(two_var_from_json(j));
}

TEST_CASE("family samples round trip and default radii") {
  TwoVarSeries truth(1, 1);
  truth.set_coeff(1, 0, 1.0);
  truth.set_coeff(0, 1, 1.0);
  const FamilySamples fs = sample_family(truth, 1, 0.5, 0.1, 8, 16);
  const Json j = family_samples_to_json(fs);
  CHECK_FALSE(j.contains("c"));
  CHECK_FALSE(j.contains("c_prime"));
  const FamilySamples back = family_samples_from_json(j);
  CHECK(back.t_count() == 8);
  CHECK(back.zeta_count() == 16);
  CHECK(back.uniform_t());
  CHECK(back.c == 1.0);
  for (int l = 0; l < 8; ++l)
    for (int jx = 0; jx < 16; ++jx) CHECK(back.values[l][jx] == fs.values[l][jx]);
}

TEST_CASE("differential JSON validates the annulus") {
  const AnnulusKDifferential d{2, LaurentSeries::monomial(-1, Complex(0, 1)),
                               {0.1, 1.0}};
  const AnnulusKDifferential back =
      differential_from_json(parse_json(dump_json(differential_to_json(d))));
  CHECK(back.k == 2);
  CHECK(back.f == d.f);
  CHECK(back.annulus.r_inner == 0.1);
  Json bad = differential_to_json(d);
  bad["annulus"] = Json::array({1.0, 0.1});
  CHECK_THROWS_AS(differential_from_json(bad), io_error);
}

TEST_CASE("section documents carry kind tags") {
  Rng rng(63);
  const RelativeSection psi{2, random_two_var(rng, 2, 2)};
  const Json j = section_to_json(psi);
  CHECK(j["kind"] == "relative_section");
  CHECK(section_from_json(j).f == psi.f);
  const CanonicalForm Phi{1, random_two_var(rng, 2, 2)};
  const Json cj = canonical_to_json(Phi);
  CHECK(cj["kind"] == "canonical_form");
  CHECK(canonical_from_json(cj).F == Phi.F);
  // Mixing the tags is refused.
  CHECK_THROWS_AS(section_from_json(cj), io_error);
  CHECK_THROWS_AS(canonical_from_json(j), io_error);
}

TEST_CASE("file I/O round trip and missing files") {
  const char* path = "serialize_test_scratch.json";
  const Json j = laurent_to_json(LaurentSeries::monomial(3, Complex(1, -2)));
  save_json(path, j);
  CHECK(load_json(path) == j);
  std::remove(path);
  CHECK_THROWS_AS(load_json("does_not_exist_anywhere.json"), io_error);
}

TEST_CASE("dump is deterministic with a stable golden form") {
  const Json j = laurent_to_json(LaurentSeries::monomial(-2, Complex(1.5, -0.25)));
  const std::string text = dump_json(j);
  CHECK(text == dump_json(j));
  const std::string expected =
      "{\n"
      "  \"coeffs\": [\n"
      "    [\n"
      "      1.5,\n"
      "      -0.25\n"
      "    ]\n"
      "  ],\n"
      "  \"n_max\": -2,\n"
      "  \"n_min\": -2\n"
      "}\n";
  CHECK(text == expected);
}
