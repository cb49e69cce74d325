#include "json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace kflag {

namespace {

// json type/shape errors become ParseError; library errors pass through.
template <typename F>
auto guarded(F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse_error, e.what());
  }
}

Vec rational_row(const Json& j) {
  Vec row;
  for (const auto& v : j) row.push_back(rational_from_json(v));
  return row;
}

Json rational_row_json(const Vec& v) {
  Json out = Json::array();
  for (const Rational& r : v) out.push_back(rational_json(r));
  return out;
}

LatticePoint lattice_point(const Json& j) {
  LatticePoint p;
  for (const auto& v : j) p.push_back(v.get<long long>());
  return p;
}

Json poly_json(const FitPolynomial& fit) {
  Json out = Json::array();
  for (const Rational& c : fit.poly.coeffs) out.push_back(rational_json(c));
  return out;
}

}  // namespace

double round10(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10f", x);
  return std::strtod(buf, nullptr);
}

Json float10(double x) { return Json(round10(x)); }

Json rational_json(const Rational& r) { return Json(rational_str(r)); }

Rational rational_from_json(const Json& j) {
  return guarded([&]() -> Rational {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    fail(Errc::parse_error, "expected rational as \"p/q\" string or integer");
  });
}

ToricPolarization polytope_from_json(const Json& j) {
  return guarded([&] {
    const int dim = j.at("dim").get<int>();
    std::vector<LatticePoint> pts;
    for (const auto& p : j.at("lattice_points")) pts.push_back(lattice_point(p));
    return ToricPolarization::make(dim, std::move(pts));
  });
}

Json polytope_json(const ToricPolarization& x) {
  Json out;
  out["dim"] = x.dim();
  out["lattice_points"] = Json::array();
  for (const LatticePoint& p : x.base_points()) out["lattice_points"].push_back(p);
  return out;
}

MonomialConfig config_from_json(const ToricPolarization& x, const Json& j) {
  return guarded([&] {
    const int r = j.at("exponent").get<int>();
    require(r >= 1, Errc::invalid_argument, "config exponent must be positive");
    Vec weights(x.sections(r).size(), Rational(0));
    std::vector<char> seen(weights.size(), 0);
    for (const auto& entry : j.at("weights")) {
      const LatticePoint p = lattice_point(entry.at("point"));
      const int idx = x.section_index(r, p);
      require(idx >= 0, Errc::invalid_argument,
              "config weight on a point outside the dilated polytope");
      require(!seen[idx], Errc::invalid_argument, "duplicate config weight entry");
      seen[idx] = 1;
      weights[idx] = rational_from_json(entry.at("w"));
    }
    return MonomialConfig::make(x, r, std::move(weights));
  });
}

Json config_json(const ToricPolarization& x, const MonomialConfig& c) {
  Json out;
  out["exponent"] = c.exponent;
  out["weights"] = Json::array();
  const auto& pts = x.sections(c.exponent);
  for (size_t i = 0; i < pts.size(); ++i) {
    Json entry;
    entry["point"] = pts[i];
    entry["w"] = rational_json(c.weights[i]);
    out["weights"].push_back(std::move(entry));
  }
  return out;
}

WeightedFlag flag_from_json(const Json& j) {
  return guarded([&] {
    const int n = j.at("ambient_dim").get<int>();
    std::vector<FlagStep> steps;
    for (const auto& st : j.at("steps")) {
      Mat rows;
      for (const auto& row : st.at("basis")) rows.push_back(rational_row(row));
      steps.push_back({Subspace::span(rows, n), rational_from_json(st.at("weight"))});
    }
    return WeightedFlag::make(std::move(steps));
  });
}

Json flag_json(const WeightedFlag& f) {
  Json out;
  out["ambient_dim"] = f.ambient();
  out["steps"] = Json::array();
  for (const FlagStep& st : f.steps()) {
    Json step;
    step["basis"] = Json::array();
    for (const Vec& row : st.space.rows()) step["basis"].push_back(rational_row_json(row));
    step["weight"] = rational_json(st.weight);
    out["steps"].push_back(std::move(step));
  }
  return out;
}

ApartmentPoint apartment_point_from_json(const Json& j) {
  return guarded([&] {
    Mat basis;
    for (const auto& row : j.at("basis")) basis.push_back(rational_row(row));
    std::vector<Rational> weights;
    for (const auto& w : j.at("weights")) weights.push_back(rational_from_json(w));
    return ApartmentPoint::make(std::move(basis), std::move(weights));
  });
}

Json apartment_point_json(const ApartmentPoint& p) {
  Json out;
  out["basis"] = Json::array();
  for (const Vec& row : p.basis) out["basis"].push_back(rational_row_json(row));
  out["weights"] = Json::array();
  for (const Rational& w : p.weights) out["weights"].push_back(rational_json(w));
  return out;
}

Subspace subspace_from_json(const Json& j) {
  return guarded([&] {
    const int n = j.at("ambient_dim").get<int>();
    Mat rows;
    for (const auto& row : j.at("basis")) rows.push_back(rational_row(row));
    return Subspace::span(rows, n);
  });
}

QuadExt quadext_from_json(const Json& j) {
  return guarded([&] {
    return QuadExt::make(rational_from_json(j.at("a")), rational_from_json(j.at("b")),
                         j.at("d").get<long long>());
  });
}

FiltrationSpec filtration_from_json(const ToricPolarization& x, const Json& j) {
  return guarded([&] {
    FiltrationSpec f;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "linear_rational") {
      f.kind = FiltrationKind::linear_rational;
      f.linear_c = rational_row(j.at("c"));
    } else if (kind == "floor_quad") {
      f.kind = FiltrationKind::floor_quad;
      f.alpha = quadext_from_json(j.at("alpha"));
      for (const auto& v : j.at("direction")) f.direction.push_back(v.get<long long>());
    } else if (kind == "table") {
      f.kind = FiltrationKind::table;
      for (const auto& row : j.at("levels")) f.table.push_back(rational_row(row));
    } else {
      fail(Errc::parse_error, "unknown filtration kind: " + kind);
    }
    if (j.contains("left_bound")) f.left_bound = rational_from_json(j.at("left_bound"));
    // Shape checks against the polytope happen on use; validate eagerly for
    // the level-independent parts.
    raw_weights(x, f, 1);
    return f;
  });
}

Json cosine_json(const CosineTriple& t) {
  Json out;
  const auto exact = t.exact_cos();
  if (exact)
    out["cos"] = rational_json(*exact);
  else
    out["cos"] = float10(t.cos_value());
  out["radians"] = float10(t.radians());
  out["dot"] = rational_json(t.dot);
  out["nu"] = rational_json(t.nu);
  out["nv"] = rational_json(t.nv);
  return out;
}

Json report_json(const InvariantReport& rep) {
  Json out;
  out["df_raw"] = rational_json(rep.df_raw);
  out["df_normalized"] = float10(rep.df_normalized);
  out["l2_norm_sq"] = rational_json(rep.l2_norm_sq);
  out["level_r_norm_sq"] = rational_json(rep.level_r_norm_sq);
  out["norm_convention"] =
      rep.convention == NormConvention::l2_limit ? "l2_limit" : "level_r";
  out["almost_trivial"] = rep.almost_trivial;
  out["a0"] = rational_json(rep.a0);
  out["a1"] = rational_json(rep.a1);
  out["b0"] = rational_json(rep.b0);
  out["b1"] = rational_json(rep.b1);
  out["h_poly"] = poly_json(rep.polys.h);
  out["w_poly"] = poly_json(rep.polys.w);
  out["tr2_poly"] = poly_json(rep.polys.tr2);
  out["fit_stride"] = rep.polys.stride;
  if (rep.chow_defined) {
    out["chow"] = Json::array();
    for (const auto& [k, v] : rep.chow_values) {
      Json row;
      row["k"] = k;
      row["value"] = rational_json(v);
      out["chow"].push_back(std::move(row));
    }
  } else {
    out["chow_error"] = "ZeroB0";
  }
  return out;
}

Json dinf_json(const DInfinityResult& d) {
  Json out = cosine_json(d.triple);
  out["stride"] = d.stride;
  return out;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse_error, e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

}  // namespace kflag
