// Command-line front end. All computation goes through the C API in
// kflag/kflag.h; this file only parses flags, loads input files, and prints
// the payload (or a machine-readable error object) to stdout.

#include <kflag/kflag.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using ordered_json = nlohmann::ordered_json;

using polytope_ptr = std::unique_ptr<kf_polytope, decltype(&kf_polytope_free)>;
using config_ptr = std::unique_ptr<kf_config, decltype(&kf_config_free)>;
using flag_ptr = std::unique_ptr<kf_flag, decltype(&kf_flag_free)>;
using filtration_ptr = std::unique_ptr<kf_filtration, decltype(&kf_filtration_free)>;

int fail_status(kf_status s) {
  ordered_json e;
  e["error"] = kf_status_name(s);
  e["message"] = kf_last_error_message();
  std::cout << e.dump() << "\n";
  return kf_exit_class(s);
}

int fail_input(const std::string& name, const std::string& message) {
  ordered_json e;
  e["error"] = name;
  e["message"] = message;
  std::cout << e.dump() << "\n";
  return 2;
}

bool read_file(const std::string& path, std::string* out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  *out = ss.str();
  return true;
}

int print_payload(char* payload) {
  std::cout << payload;
  size_t n = std::strlen(payload);
  if (n == 0 || payload[n - 1] != '\n') std::cout << "\n";
  kf_string_free(payload);
  return 0;
}

struct Args {
  std::string polytope, filtration, point, subspace;
  std::vector<std::string> configs;
  std::vector<std::string> flags;
  int k_max = 0;
  int holdout = 0;
  int k = 2;
  int j = 2;
  std::vector<int> m_list;
  std::string norm = "l2";
  std::string format = "json";
};

kf_options make_options(const Args& a) {
  kf_options o{};
  o.k_max = a.k_max;
  o.holdouts = a.holdout;
  o.norm_level_r = (a.norm == "level") ? 1 : 0;
  o.tsv = (a.format == "tsv") ? 1 : 0;
  return o;
}

int load_polytope(const Args& a, polytope_ptr* out) {
  std::string text;
  if (!read_file(a.polytope, &text))
    return fail_input("ParseError", "cannot open polytope file: " + a.polytope);
  kf_polytope* raw = nullptr;
  if (kf_status s = kf_polytope_parse(text.c_str(), &raw); s != KF_OK)
    return fail_status(s);
  out->reset(raw);
  return 0;
}

int load_config(const polytope_ptr& x, const std::string& path, config_ptr* out) {
  std::string text;
  if (!read_file(path, &text))
    return fail_input("ParseError", "cannot open config file: " + path);
  kf_config* raw = nullptr;
  if (kf_status s = kf_config_parse(x.get(), text.c_str(), &raw); s != KF_OK)
    return fail_status(s);
  out->reset(raw);
  return 0;
}

int load_flag(const std::string& path, flag_ptr* out) {
  std::string text;
  if (!read_file(path, &text))
    return fail_input("ParseError", "cannot open flag file: " + path);
  kf_flag* raw = nullptr;
  if (kf_status s = kf_flag_parse(text.c_str(), &raw); s != KF_OK)
    return fail_status(s);
  out->reset(raw);
  return 0;
}

int load_filtration(const polytope_ptr& x, const Args& a, filtration_ptr* out) {
  std::string text;
  if (!read_file(a.filtration, &text))
    return fail_input("ParseError", "cannot open filtration file: " + a.filtration);
  kf_filtration* raw = nullptr;
  if (kf_status s = kf_filtration_parse(x.get(), text.c_str(), &raw); s != KF_OK)
    return fail_status(s);
  out->reset(raw);
  return 0;
}

int run_df(const Args& a) {
  polytope_ptr x(nullptr, kf_polytope_free);
  config_ptr c(nullptr, kf_config_free);
  if (int rc = load_polytope(a, &x)) return rc;
  if (int rc = load_config(x, a.configs.at(0), &c)) return rc;
  kf_options opts = make_options(a);
  char* out = nullptr;
  if (kf_status s = kf_df(x.get(), c.get(), &opts, &out); s != KF_OK)
    return fail_status(s);
  return print_payload(out);
}

int run_norm(const Args& a) {
  polytope_ptr x(nullptr, kf_polytope_free);
  if (int rc = load_polytope(a, &x)) return rc;
  kf_options opts = make_options(a);
  char* out = nullptr;
  if (!a.filtration.empty()) {
    filtration_ptr f(nullptr, kf_filtration_free);
    if (int rc = load_filtration(x, a, &f)) return rc;
    std::vector<int> ms = a.m_list;
    if (ms.empty()) for (int m = 1; m <= 8; ++m) ms.push_back(m);
    if (kf_status s = kf_filtration_norms(x.get(), f.get(), ms.data(), ms.size(),
                                          &opts, &out);
        s != KF_OK)
      return fail_status(s);
    return print_payload(out);
  }
  if (a.configs.empty())
    return fail_input("InvalidArgument", "norm needs --config or --filtration");
  config_ptr c(nullptr, kf_config_free);
  if (int rc = load_config(x, a.configs.at(0), &c)) return rc;
  if (kf_status s = kf_norm(x.get(), c.get(), &opts, &out); s != KF_OK)
    return fail_status(s);
  return print_payload(out);
}

int run_dist(const Args& a) {
  flag_ptr f(nullptr, kf_flag_free), g(nullptr, kf_flag_free);
  if (int rc = load_flag(a.flags.at(0), &f)) return rc;
  if (int rc = load_flag(a.flags.at(1), &g)) return rc;
  char* out = nullptr;
  if (kf_status s = kf_flag_distance(f.get(), g.get(), &out); s != KF_OK)
    return fail_status(s);
  return print_payload(out);
}

int run_dinf(const Args& a) {
  polytope_ptr x(nullptr, kf_polytope_free);
  config_ptr ca(nullptr, kf_config_free), cb(nullptr, kf_config_free);
  if (int rc = load_polytope(a, &x)) return rc;
  if (int rc = load_config(x, a.configs.at(0), &ca)) return rc;
  if (int rc = load_config(x, a.configs.at(1), &cb)) return rc;
  kf_options opts = make_options(a);
  char* out = nullptr;
  if (kf_status s = kf_dinf(x.get(), ca.get(), cb.get(), &opts, &out); s != KF_OK)
    return fail_status(s);
  return print_payload(out);
}

int run_cauchy(const Args& a) {
  polytope_ptr x(nullptr, kf_polytope_free);
  filtration_ptr f(nullptr, kf_filtration_free);
  if (int rc = load_polytope(a, &x)) return rc;
  if (int rc = load_filtration(x, a, &f)) return rc;
  std::vector<int> ms = a.m_list;
  if (ms.empty()) for (int m = 1; m <= 6; ++m) ms.push_back(m);
  kf_options opts = make_options(a);
  char* out = nullptr;
  if (kf_status s = kf_cauchy(x.get(), f.get(), a.j, ms.data(), ms.size(), &opts, &out);
      s != KF_OK)
    return fail_status(s);
  return print_payload(out);
}

int run_segre(const Args& a) {
  std::string text;
  if (!read_file(a.point, &text))
    return fail_input("ParseError", "cannot open point file: " + a.point);
  char* out = nullptr;
  if (kf_status s = kf_segre(text.c_str(), a.k, &out); s != KF_OK)
    return fail_status(s);
  return print_payload(out);
}

int run_retract(const Args& a) {
  flag_ptr f(nullptr, kf_flag_free);
  if (int rc = load_flag(a.flags.at(0), &f)) return rc;
  std::string text;
  if (!read_file(a.subspace, &text))
    return fail_input("ParseError", "cannot open subspace file: " + a.subspace);
  char* out = nullptr;
  if (kf_status s = kf_retract(f.get(), text.c_str(), &out); s != KF_OK)
    return fail_status(s);
  return print_payload(out);
}

int run_iota(const Args& a) {
  polytope_ptr x(nullptr, kf_polytope_free);
  config_ptr c(nullptr, kf_config_free);
  if (int rc = load_polytope(a, &x)) return rc;
  if (int rc = load_config(x, a.configs.at(0), &c)) return rc;
  char* out = nullptr;
  if (kf_status s = kf_iota(x.get(), c.get(), a.k, &out); s != KF_OK)
    return fail_status(s);
  return print_payload(out);
}

int run_report(const Args& a) {
  polytope_ptr x(nullptr, kf_polytope_free);
  config_ptr c(nullptr, kf_config_free);
  if (int rc = load_polytope(a, &x)) return rc;
  if (int rc = load_config(x, a.configs.at(0), &c)) return rc;
  kf_options opts = make_options(a);
  char* out = nullptr;
  if (kf_status s = kf_report(x.get(), c.get(), &opts, &out); s != KF_OK)
    return fail_status(s);
  return print_payload(out);
}

void add_fit_flags(CLI::App* sub, Args* a) {
  sub->add_option("--k-max", a->k_max, "cap on fit sample levels");
  sub->add_option("--holdout", a->holdout, "holdout points per fit");
}

void add_format_flag(CLI::App* sub, Args* a) {
  sub->add_option("--format", a->format, "output format")
      ->check(CLI::IsMember({"json", "tsv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of test configurations on monomial testbeds"};
  app.require_subcommand(1);
  Args a;
  int rc = 0;

  CLI::App* df = app.add_subcommand("df", "Donaldson-Futaki invariant of a config");
  df->add_option("--polytope", a.polytope)->required();
  df->add_option("--config", a.configs)->required();
  df->add_option("--norm", a.norm)->check(CLI::IsMember({"l2", "level"}));
  add_fit_flags(df, &a);
  df->callback([&] { rc = run_df(a); });

  CLI::App* norm = app.add_subcommand("norm", "L2 norms of a config or filtration");
  norm->add_option("--polytope", a.polytope)->required();
  norm->add_option("--config", a.configs);
  norm->add_option("--filtration", a.filtration);
  norm->add_option("--m-list", a.m_list)->delimiter(',');
  add_fit_flags(norm, &a);
  add_format_flag(norm, &a);
  norm->callback([&] { rc = run_norm(a); });

  CLI::App* dist = app.add_subcommand("dist", "Tits distance between two flags");
  dist->add_option("--flag", a.flags)->required()->expected(2);
  dist->callback([&] { rc = run_dist(a); });

  CLI::App* dinf = app.add_subcommand("dinf", "limit pseudo-metric between configs");
  dinf->add_option("--polytope", a.polytope)->required();
  dinf->add_option("--config", a.configs)->required()->expected(2);
  add_fit_flags(dinf, &a);
  dinf->callback([&] { rc = run_dinf(a); });

  CLI::App* cauchy = app.add_subcommand("cauchy", "d_infinity(p_m, p_jm) table");
  cauchy->add_option("--polytope", a.polytope)->required();
  cauchy->add_option("--filtration", a.filtration)->required();
  cauchy->add_option("--j", a.j, "level ratio")->check(CLI::Range(2, 1000));
  cauchy->add_option("--m-list", a.m_list)->delimiter(',');
  add_fit_flags(cauchy, &a);
  add_format_flag(cauchy, &a);
  cauchy->callback([&] { rc = run_cauchy(a); });

  CLI::App* segre = app.add_subcommand("segre", "Segre power of an apartment point");
  segre->add_option("--point", a.point)->required();
  segre->add_option("--k", a.k, "power")->required();
  segre->callback([&] { rc = run_segre(a); });

  CLI::App* retract = app.add_subcommand("retract", "retraction of a flag onto a subspace");
  retract->add_option("--flag", a.flags)->required()->expected(1);
  retract->add_option("--subspace", a.subspace)->required();
  retract->callback([&] { rc = run_retract(a); });

  CLI::App* iota = app.add_subcommand("iota", "exponent-raising map on configs");
  iota->add_option("--polytope", a.polytope)->required();
  iota->add_option("--config", a.configs)->required();
  iota->add_option("--k", a.k, "power")->required();
  iota->callback([&] { rc = run_iota(a); });

  CLI::App* report = app.add_subcommand("report", "full invariant report");
  report->add_option("--polytope", a.polytope)->required();
  report->add_option("--config", a.configs)->required();
  report->add_option("--norm", a.norm)->check(CLI::IsMember({"l2", "level"}));
  add_fit_flags(report, &a);
  add_format_flag(report, &a);
  report->callback([&] { rc = run_report(a); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail_input("InvalidArgument", e.what());
  }
  return rc;
}
