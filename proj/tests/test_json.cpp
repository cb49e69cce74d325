#include <doctest.h>

#include <string>

#include "errors.hpp"
#include "json_io.hpp"

using namespace kflag;

namespace {

std::string data_path(const std::string& name) {
  return std::string(KFLAG_DATA_DIR) + "/" + name;
}

ToricPolarization p1() { return ToricPolarization::make(1, {{0}, {1}}); }

void check_code(Errc want, const std::function<void()>& fn) {
  try {
    fn();
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == want);
  }
}

}  // namespace

TEST_CASE("floats are rendered at ten decimal places and round-trip") {
  CHECK(round10(0.46364760900080615) == 0.46364760900000002477);
  CHECK(float10(1.0471975511965976).dump() == "1.0471975512");
  CHECK(float10(0.8944271909999159).dump() == "0.894427191");
  CHECK(float10(0.0).dump() == "0.0");
  CHECK(float10(-0.5).dump() == "-0.5");
}

TEST_CASE("rationals travel as strings or integers") {
  CHECK(rational_json(Rational(3, 8)).dump() == "\"3/8\"");
  CHECK(rational_json(Rational(-4)).dump() == "\"-4\"");
  CHECK(rational_from_json(Json(7)) == Rational(7));
  CHECK(rational_from_json(Json("3/8")) == Rational(3, 8));
  CHECK(rational_from_json(Json("-22/7")) == Rational(-22, 7));
  CHECK(rational_from_json(rational_json(Rational(355, 113))) == Rational(355, 113));

  check_code(Errc::parse_error, [] { rational_from_json(Json("3/8/2")); });
  check_code(Errc::parse_error, [] { rational_from_json(Json("1/0")); });
  check_code(Errc::parse_error, [] { rational_from_json(Json(0.5)); });
  check_code(Errc::parse_error, [] { rational_from_json(Json::array()); });
}

TEST_CASE("polytope round trip") {
  ToricPolarization x = polytope_from_json(load_json_file(data_path("p2_o1.json")));
  CHECK(x.dim() == 2);
  CHECK(x.base_points().size() == 3);
  CHECK(polytope_json(x).dump() ==
        R"({"dim":2,"lattice_points":[[0,0],[0,1],[1,0]]})");

  check_code(Errc::parse_error, [] { polytope_from_json(parse_json_text("{\"dim\":1}")); });
  check_code(Errc::parse_error, [] { polytope_from_json(parse_json_text("[1,2]")); });
}

TEST_CASE("config round trip with sparse weights") {
  ToricPolarization x = p1();
  Json j = parse_json_text(
      R"({"exponent":2,"weights":[{"point":[0],"w":"-2"},{"point":[1],"w":1},{"point":[2],"w":"1"}]})");
  MonomialConfig c = config_from_json(x, j);
  CHECK(c.exponent == 2);
  CHECK(c.weights == Vec{Rational(-2), Rational(1), Rational(1)});

  // Unlisted points default to zero weight; the entry below forces balance.
  Json sparse = parse_json_text(
      R"({"exponent":1,"weights":[{"point":[0],"w":"0"}]})");
  CHECK(config_from_json(x, sparse).weights == Vec{Rational(0), Rational(0)});

  CHECK(config_json(x, c).dump() ==
        R"({"exponent":2,"weights":[{"point":[0],"w":"-2"},{"point":[1],"w":"1"},{"point":[2],"w":"1"}]})");

  check_code(Errc::invalid_argument, [&] {
    config_from_json(x, parse_json_text(
        R"({"exponent":1,"weights":[{"point":[5],"w":"1"}]})"));
  });
  check_code(Errc::invalid_argument, [&] {
    config_from_json(x, parse_json_text(
        R"({"exponent":1,"weights":[{"point":[0],"w":"1"},{"point":[0],"w":"-1"}]})"));
  });
  check_code(Errc::parse_error, [&] {
    config_from_json(x, parse_json_text(R"({"exponent":1})"));
  });
}

TEST_CASE("flag and subspace round trip") {
  WeightedFlag f = flag_from_json(load_json_file(data_path("flag_u.json")));
  CHECK(f.ambient() == 3);
  CHECK(f.steps().size() == 3);
  CHECK(f.steps()[0].weight == Rational(-1));
  CHECK(flag_from_json(flag_json(f)) == f);

  Subspace w = subspace_from_json(load_json_file(data_path("subspace_w.json")));
  CHECK(w.ambient() == 3);
  CHECK(w.dim() == 2);

  check_code(Errc::parse_error, [] { flag_from_json(parse_json_text("{}")); });
}

TEST_CASE("apartment point round trip") {
  ApartmentPoint p = apartment_point_from_json(load_json_file(data_path("apartment_p1.json")));
  CHECK(p.weights == std::vector<Rational>{Rational(1), Rational(-1)});
  Json j = apartment_point_json(p);
  ApartmentPoint q = apartment_point_from_json(j);
  CHECK(q.basis == p.basis);
  CHECK(q.weights == p.weights);
}

TEST_CASE("quadratic extension parsing validates d") {
  QuadExt a = quadext_from_json(parse_json_text(R"({"a":"0","b":"1","d":2})"));
  CHECK(a.d == 2);
  CHECK(floor_quad(a) == 1);
  check_code(Errc::invalid_argument,
             [] { quadext_from_json(parse_json_text(R"({"a":"0","b":"1","d":4})")); });
  check_code(Errc::invalid_argument,
             [] { quadext_from_json(parse_json_text(R"({"a":"0","b":"1","d":-2})")); });
  check_code(Errc::parse_error,
             [] { quadext_from_json(parse_json_text(R"({"a":"0","b":"1"})")); });
}

TEST_CASE("filtration specs parse and validate eagerly") {
  ToricPolarization x = p1();

  FiltrationSpec lin = filtration_from_json(x, load_json_file(data_path("linear_c1.json")));
  CHECK(lin.kind == FiltrationKind::linear_rational);
  CHECK(lin.left_bound == Rational(0));

  FiltrationSpec flr = filtration_from_json(x, load_json_file(data_path("floor_sqrt2.json")));
  CHECK(flr.kind == FiltrationKind::floor_quad);
  CHECK(raw_weights(x, flr, 2) == Vec{Rational(0), Rational(1), Rational(2)});

  FiltrationSpec tab =
      filtration_from_json(x, load_json_file(data_path("table_adversarial.json")));
  CHECK(tab.table.size() == 4);

  check_code(Errc::parse_error, [&] {
    filtration_from_json(x, parse_json_text(R"({"kind":"mystery"})"));
  });
  // Eager validation runs the level-1 row against the polytope.
  check_code(Errc::invalid_argument, [&] {
    filtration_from_json(x, parse_json_text(R"({"kind":"table","levels":[[0,1,1]]})"));
  });
  check_code(Errc::invalid_argument, [&] {
    filtration_from_json(
        x, parse_json_text(R"({"kind":"linear_rational","c":["-1"],"left_bound":"0"})"));
  });
}

TEST_CASE("cosine payloads prefer the exact rational cosine") {
  CosineTriple exact{Rational(1), Rational(2), Rational(2)};
  CHECK(cosine_json(exact).dump() ==
        R"({"cos":"1/2","radians":1.0471975512,"dot":"1","nu":"2","nv":"2"})");

  CosineTriple irr{Rational(2), Rational(8, 3), Rational(15, 8)};
  CHECK(cosine_json(irr).dump() ==
        R"({"cos":0.894427191,"radians":0.463647609,"dot":"2","nu":"8/3","nv":"15/8"})");

  DInfinityResult d;
  d.triple = irr;
  d.radians = d.triple.radians();
  d.stride = 1;
  CHECK(dinf_json(d).dump() ==
        R"({"cos":0.894427191,"radians":0.463647609,"dot":"2","nu":"8/3","nv":"15/8","stride":1})");
}

TEST_CASE("report payload is byte-stable") {
  ToricPolarization x = p1();
  MonomialConfig conic = MonomialConfig::make(x, 2, {Rational(-2), Rational(1), Rational(1)});
  InvariantReport rep = build_report(x, conic);
  CHECK(report_json(rep).dump() ==
        R"({"df_raw":"3/8","df_normalized":0.7745966692,"l2_norm_sq":"15/64",)"
        R"("level_r_norm_sq":"3/4","norm_convention":"l2_limit","almost_trivial":false,)"
        R"("a0":"2","a1":"1","b0":"1/2","b1":"-1/2","h_poly":["1","2"],)"
        R"("w_poly":["0","-1/2","1/2"],"tr2_poly":["0","3/2","5/2","2"],"fit_stride":1,)"
        R"("chow":[{"k":1,"value":"32/3"},{"k":2,"value":"316/15"},{"k":3,"value":"220/7"},)"
        R"({"k":4,"value":"376/9"},{"k":5,"value":"1720/33"}]})");

  MonomialConfig product = MonomialConfig::make(x, 1, {Rational(-1), Rational(1)});
  Json pj = report_json(build_report(x, product));
  CHECK(pj["chow_error"] == "ZeroB0");
  CHECK(!pj.contains("chow"));
}

TEST_CASE("file and text parse failures map to ParseError") {
  check_code(Errc::parse_error, [] { load_json_file("/nonexistent/file.json"); });
  check_code(Errc::parse_error, [] { parse_json_text("{broken"); });
  CHECK(parse_json_text("[1,2,3]").size() == 3);
}
