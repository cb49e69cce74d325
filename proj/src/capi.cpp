#include "kflag/kflag.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "filtration.hpp"
#include "flags.hpp"
#include "json_io.hpp"
#include "maps.hpp"
#include "testbed.hpp"

struct kf_polytope {
  kflag::ToricPolarization x;
};
struct kf_config {
  kflag::MonomialConfig c;
};
struct kf_flag {
  kflag::WeightedFlag f;
};
struct kf_filtration {
  kflag::FiltrationSpec f;
};

namespace {

using namespace kflag;

thread_local std::string g_last_error;

kf_status to_status(Errc c) {
  switch (c) {
    case Errc::none: return KF_OK;
    case Errc::parse_error: return KF_PARSE_ERROR;
    case Errc::invalid_argument: return KF_INVALID_ARGUMENT;
    case Errc::duplicate_abscissa: return KF_DUPLICATE_ABSCISSA;
    case Errc::unverified_fit: return KF_UNVERIFIED_FIT;
    case Errc::zero_vector: return KF_ZERO_VECTOR;
    case Errc::zero_weight_vector: return KF_ZERO_WEIGHT_VECTOR;
    case Errc::trivial_flag: return KF_TRIVIAL_FLAG;
    case Errc::almost_trivial: return KF_ALMOST_TRIVIAL;
    case Errc::almost_trivial_image: return KF_ALMOST_TRIVIAL_IMAGE;
    case Errc::zero_norm: return KF_ZERO_NORM;
    case Errc::fit_unstable: return KF_FIT_UNSTABLE;
    case Errc::zero_b0: return KF_ZERO_B0;
    case Errc::unreachable_point: return KF_UNREACHABLE_POINT;
    case Errc::internal: return KF_INTERNAL_ERROR;
  }
  return KF_INTERNAL_ERROR;
}

template <typename Fn>
kf_status guard(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return KF_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    g_last_error = std::string("InternalError: ") + e.what();
    return KF_INTERNAL_ERROR;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit_json(const Json& j, char** out) { *out = dup_string(j.dump()); }

FitOptions fit_options(const kf_options* o) {
  FitOptions f;
  if (o && o->k_max > 0) f.k_max = o->k_max;
  if (o && o->holdouts > 0) f.holdouts = o->holdouts;
  return f;
}

NormConvention convention(const kf_options* o) {
  return (o && o->norm_level_r) ? NormConvention::level_r : NormConvention::l2_limit;
}

bool tsv_mode(const kf_options* o) { return o && o->tsv; }

std::string float_str(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10f", round10(v));
  return buf;
}

std::vector<int> int_list(const int* data, size_t count) {
  require(data && count > 0, Errc::invalid_argument, "empty m list");
  std::vector<int> out(data, data + count);
  for (int m : out) require(m >= 1, Errc::invalid_argument, "m values must be >= 1");
  return out;
}

std::string report_tsv(const InvariantReport& rep) {
  std::ostringstream os;
  os << "k\th\tw\ttr2\tchow\n";
  for (int k = 1; k <= 5; ++k) {
    os << k << '\t' << rational_str(rep.polys.h.poly.eval(Rational(k))) << '\t'
       << rational_str(rep.polys.w.poly.eval(Rational(k))) << '\t'
       << rational_str(rep.polys.tr2.poly.eval(Rational(k))) << '\t';
    if (rep.chow_defined && k <= static_cast<int>(rep.chow_values.size()))
      os << rational_str(rep.chow_values[k - 1].second);
    else
      os << "NA";
    os << '\n';
  }
  return os.str();
}

}  // namespace

extern "C" {

kf_status kf_polytope_parse(const char* json, kf_polytope** out) {
  return guard([&] {
    require(json && out, Errc::invalid_argument, "null argument");
    *out = new kf_polytope{polytope_from_json(parse_json_text(json))};
  });
}

void kf_polytope_free(kf_polytope* x) { delete x; }

kf_status kf_config_parse(const kf_polytope* x, const char* json, kf_config** out) {
  return guard([&] {
    require(x && json && out, Errc::invalid_argument, "null argument");
    *out = new kf_config{config_from_json(x->x, parse_json_text(json))};
  });
}

void kf_config_free(kf_config* c) { delete c; }

kf_status kf_flag_parse(const char* json, kf_flag** out) {
  return guard([&] {
    require(json && out, Errc::invalid_argument, "null argument");
    *out = new kf_flag{flag_from_json(parse_json_text(json))};
  });
}

void kf_flag_free(kf_flag* f) { delete f; }

kf_status kf_filtration_parse(const kf_polytope* x, const char* json, kf_filtration** out) {
  return guard([&] {
    require(x && json && out, Errc::invalid_argument, "null argument");
    *out = new kf_filtration{filtration_from_json(x->x, parse_json_text(json))};
  });
}

void kf_filtration_free(kf_filtration* f) { delete f; }

kf_status kf_df(const kf_polytope* x, const kf_config* c, const kf_options* opts,
                char** out_json) {
  return guard([&] {
    require(x && c && out_json, Errc::invalid_argument, "null argument");
    NormConvention conv = convention(opts);
    ConfigPolys polys = weight_polynomials(x->x, c->c, fit_options(opts));
    DfResult r = df_classical(x->x, c->c, polys, conv);
    Json j;
    j["df_raw"] = rational_json(r.df_raw);
    j["df_normalized"] = float10(r.df_normalized);
    if (conv == NormConvention::l2_limit) {
      j["l2_norm_sq"] = rational_json(r.norm_sq);
    } else {
      j["level_r_norm_sq"] = rational_json(r.norm_sq);
      j["norm_convention"] = "level_r";
    }
    emit_json(j, out_json);
  });
}

kf_status kf_norm(const kf_polytope* x, const kf_config* c, const kf_options* opts,
                  char** out_json) {
  return guard([&] {
    require(x && c && out_json, Errc::invalid_argument, "null argument");
    ConfigPolys polys = weight_polynomials(x->x, c->c, fit_options(opts));
    Rational l2 = l2_norm_sq(x->x, polys, c->c.exponent);
    Rational lvl = level_r_norm_sq(x->x, c->c);
    Json j;
    j["l2_norm_sq"] = rational_json(l2);
    j["l2_norm"] = float10(std::sqrt(to_double(l2)));
    j["level_r_norm_sq"] = rational_json(lvl);
    j["level_r_norm"] = float10(std::sqrt(to_double(lvl)));
    j["almost_trivial"] = (l2 == 0);
    emit_json(j, out_json);
  });
}

kf_status kf_report(const kf_polytope* x, const kf_config* c, const kf_options* opts,
                    char** out) {
  return guard([&] {
    require(x && c && out, Errc::invalid_argument, "null argument");
    InvariantReport rep = build_report(x->x, c->c, convention(opts), fit_options(opts));
    if (tsv_mode(opts))
      *out = dup_string(report_tsv(rep));
    else
      emit_json(report_json(rep), out);
  });
}

kf_status kf_flag_distance(const kf_flag* f, const kf_flag* g, char** out_json) {
  return guard([&] {
    require(f && g && out_json, Errc::invalid_argument, "null argument");
    emit_json(cosine_json(flag_cosine(f->f, g->f)), out_json);
  });
}

kf_status kf_dinf(const kf_polytope* x, const kf_config* a, const kf_config* b,
                  const kf_options* opts, char** out_json) {
  return guard([&] {
    require(x && a && b && out_json, Errc::invalid_argument, "null argument");
    emit_json(dinf_json(d_infinity(x->x, a->c, b->c, fit_options(opts))), out_json);
  });
}

kf_status kf_segre(const char* point_json, int k, char** out_json) {
  return guard([&] {
    require(point_json && out_json, Errc::invalid_argument, "null argument");
    require(k >= 1, Errc::invalid_argument, "segre power must be >= 1");
    ApartmentPoint p = apartment_point_from_json(parse_json_text(point_json));
    SegreImage s = segre(p, k);
    Json idx = Json::array();
    for (const MultiIndex& mi : s.indices) idx.push_back(mi);
    Json j;
    j["indices"] = idx;
    j["point"] = apartment_point_json(s.point);
    emit_json(j, out_json);
  });
}

kf_status kf_retract(const kf_flag* f, const char* subspace_json, char** out_json) {
  return guard([&] {
    require(f && subspace_json && out_json, Errc::invalid_argument, "null argument");
    Subspace w = subspace_from_json(parse_json_text(subspace_json));
    emit_json(flag_json(retraction(f->f, w)), out_json);
  });
}

kf_status kf_iota(const kf_polytope* x, const kf_config* c, int k, char** out_json) {
  return guard([&] {
    require(x && c && out_json, Errc::invalid_argument, "null argument");
    require(k >= 1, Errc::invalid_argument, "iota power must be >= 1");
    emit_json(config_json(x->x, iota_config(x->x, c->c, k)), out_json);
  });
}

kf_status kf_filtration_norms(const kf_polytope* x, const kf_filtration* f,
                              const int* m_list, size_t m_count,
                              const kf_options* opts, char** out) {
  return guard([&] {
    require(x && f && out, Errc::invalid_argument, "null argument");
    std::vector<int> ms = int_list(m_list, m_count);
    int m_max = *std::max_element(ms.begin(), ms.end());
    FiltrationNorms table = filtration_l2(x->x, f->f, m_max, fit_options(opts));
    if (tsv_mode(opts)) {
      std::ostringstream os;
      os << "m\tl2_norm_sq\n";
      for (int m : ms)
        os << m << '\t' << rational_str(table.norm_sq[m - 1].second) << '\n';
      *out = dup_string(os.str());
      return;
    }
    Json rows = Json::array();
    for (int m : ms) {
      Json row;
      row["m"] = m;
      row["l2_norm_sq"] = rational_json(table.norm_sq[m - 1].second);
      rows.push_back(row);
    }
    Json j;
    j["norms"] = rows;
    j["extrapolated"] = float10(table.extrapolated);
    emit_json(j, out);
  });
}

kf_status kf_cauchy(const kf_polytope* x, const kf_filtration* f, int j,
                    const int* m_list, size_t m_count, const kf_options* opts,
                    char** out) {
  return guard([&] {
    require(x && f && out, Errc::invalid_argument, "null argument");
    require(j >= 2, Errc::invalid_argument, "cauchy ratio j must be >= 2");
    std::vector<int> ms = int_list(m_list, m_count);
    std::vector<CauchyRow> rows = cauchy_table(x->x, f->f, ms, j, fit_options(opts));
    if (tsv_mode(opts)) {
      std::ostringstream os;
      os << "m\tcos_num\tcos_den_sq\tradians\n";
      for (const CauchyRow& r : rows)
        os << r.m << '\t' << rational_str(r.d.triple.dot) << '\t'
           << rational_str(r.d.triple.nu * r.d.triple.nv) << '\t'
           << float_str(r.d.radians) << '\n';
      *out = dup_string(os.str());
      return;
    }
    Json arr = Json::array();
    for (const CauchyRow& r : rows) {
      Json row;
      row["m"] = r.m;
      Json d = dinf_json(r.d);
      for (auto it = d.begin(); it != d.end(); ++it) row[it.key()] = it.value();
      arr.push_back(row);
    }
    Json jj;
    jj["rows"] = arr;
    emit_json(jj, out);
  });
}

const char* kf_status_name(kf_status s) {
  return errc_name(static_cast<Errc>(static_cast<int>(s)));
}

int kf_exit_class(kf_status s) {
  switch (s) {
    case KF_OK:
      return 0;
    case KF_PARSE_ERROR:
    case KF_INVALID_ARGUMENT:
    case KF_DUPLICATE_ABSCISSA:
    case KF_ZERO_VECTOR:
    case KF_ZERO_WEIGHT_VECTOR:
    case KF_TRIVIAL_FLAG:
      return 2;
    default:
      return 3;
  }
}

const char* kf_last_error_message(void) { return g_last_error.c_str(); }

void kf_string_free(char* s) { std::free(s); }

const char* kf_version(void) { return "0.1.0"; }

}  // extern "C"
