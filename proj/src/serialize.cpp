#include "anndiff/serialize.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

namespace anndiff {

namespace {

[[noreturn]] void bad(const std::string& what) { throw io_error(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field: ") + key);
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field must be an integer: ") + key);
  return v.get<int>();
}

double num_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number()) bad(std::string("field must be a number: ") + key);
  return v.get<double>();
}

}  // namespace

Json complex_to_json(const Complex& c) { return Json::array({c.real(), c.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    bad("complex values are [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json laurent_to_json(const LaurentSeries& s) {
  Json coeffs = Json::array();
  int n_min = 0, n_max = 0;
  if (s.is_zero()) {
    coeffs.push_back(complex_to_json(Complex(0.0)));
  } else {
    n_min = s.n_min();
    n_max = s.n_max();
    for (const auto& c : s.dense()) coeffs.push_back(complex_to_json(c));
  }
  return Json{{"n_min", n_min}, {"n_max", n_max}, {"coeffs", coeffs}};
}

LaurentSeries laurent_from_json(const Json& j) {
  const int n_min = int_field(j, "n_min");
  const int n_max = int_field(j, "n_max");
  const Json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array()) bad("coeffs must be an array");
  if (n_max - n_min + 1 != static_cast<int>(coeffs.size()))
    bad("coeffs length must equal n_max - n_min + 1");
  std::vector<Complex> dense;
  dense.reserve(coeffs.size());
  for (const auto& c : coeffs) dense.push_back(complex_from_json(c));
  return LaurentSeries(n_min, std::move(dense));
}

Json differential_to_json(const AnnulusKDifferential& d) {
  return Json{{"k", d.k},
              {"f", laurent_to_json(d.f)},
              {"annulus", Json::array({d.annulus.r_inner, d.annulus.r_outer})}};
}

AnnulusKDifferential differential_from_json(const Json& j) {
  AnnulusKDifferential d;
  d.k = int_field(j, "k");
  d.f = laurent_from_json(field(j, "f"));
  const Json& a = field(j, "annulus");
  if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number())
    bad("annulus must be [r_inner, r_outer]");
  d.annulus = {a[0].get<double>(), a[1].get<double>()};
  try {
    d.validate();
  } catch (const std::exception& e) {
    bad(std::string("invalid differential: ") + e.what());
  }
  return d;
}

Json two_var_to_json(const TwoVarSeries& s) {
  Json rows = Json::array();
  for (int m = 0; m <= s.m_deg(); ++m) {
    Json row = Json::array();
    for (int n = 0; n <= s.n_deg(); ++n) row.push_back(complex_to_json(s.coeff(m, n)));
    rows.push_back(std::move(row));
  }
  return Json{{"m_deg", s.m_deg()},
              {"n_deg", s.n_deg()},
              {"pole_order", s.pole_order()},
              {"coeffs", rows}};
}

TwoVarSeries two_var_from_json(const Json& j) {
  const int m_deg = int_field(j, "m_deg");
  const int n_deg = int_field(j, "n_deg");
  const int pole = j.contains("pole_order") ? int_field(j, "pole_order") : 0;
  if (m_deg < 0 || n_deg < 0 || pole < 0) bad("bidegree and pole order must be >= 0");
  const Json& rows = field(j, "coeffs");
  if (!rows.is_array() || static_cast<int>(rows.size()) != m_deg + 1)
    bad("coeffs must hold m_deg + 1 rows");
  TwoVarSeries s(m_deg, n_deg, pole);
  for (int m = 0; m <= m_deg; ++m) {
    const Json& row = rows[static_cast<size_t>(m)];
    if (!row.is_array() || static_cast<int>(row.size()) != n_deg + 1)
      bad("each coeffs row must hold n_deg + 1 entries");
    for (int n = 0; n <= n_deg; ++n)
      s.set_coeff(m, n, complex_from_json(row[static_cast<size_t>(n)]));
  }
  return s;
}

Json family_samples_to_json(const FamilySamples& fs) {
  Json values = Json::array();
  for (const auto& row : fs.values) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(complex_to_json(v));
    values.push_back(std::move(r));
  }
  Json j{{"k", fs.k},          {"r_zeta", fs.r_zeta},
         {"rho_t", fs.rho_t},  {"t_count", fs.t_count()},
         {"zeta_count", fs.zeta_count()}, {"values", values}};
  if (fs.c != 1.0) j["c"] = fs.c;
  if (fs.c_prime != 1.0) j["c_prime"] = fs.c_prime;
  return j;
}

FamilySamples family_samples_from_json(const Json& j) {
  FamilySamples fs;
  fs.k = int_field(j, "k");
  fs.r_zeta = num_field(j, "r_zeta");
  fs.rho_t = num_field(j, "rho_t");
  fs.c = j.contains("c") ? num_field(j, "c") : 1.0;
  fs.c_prime = j.contains("c_prime") ? num_field(j, "c_prime") : 1.0;
  const int t_count = int_field(j, "t_count");
  const int zeta_count = int_field(j, "zeta_count");
  if (t_count < 1 || zeta_count < 1) bad("sample counts must be positive");
  const Json& values = field(j, "values");
  if (!values.is_array() || static_cast<int>(values.size()) != t_count)
    bad("values must hold t_count rows");
  for (int l = 0; l < t_count; ++l) {
    fs.t_values.push_back(
        std::polar(fs.rho_t, 2.0 * std::numbers::pi * l / t_count));
    const Json& row = values[static_cast<size_t>(l)];
    if (!row.is_array() || static_cast<int>(row.size()) != zeta_count)
      bad("each values row must hold zeta_count entries");
    std::vector<Complex> r;
    r.reserve(static_cast<size_t>(zeta_count));
    for (const auto& v : row) r.push_back(complex_from_json(v));
    fs.values.push_back(std::move(r));
  }
  try {
    fs.validate();
  } catch (const std::exception& e) {
    bad(std::string("invalid family samples: ") + e.what());
  }
  return fs;
}

Json section_to_json(const RelativeSection& s) {
  Json j = two_var_to_json(s.f);
  j["kind"] = "relative_section";
  j["k"] = s.k;
  return j;
}

RelativeSection section_from_json(const Json& j) {
  if (field(j, "kind").get<std::string>() != "relative_section")
    bad("kind must be relative_section");
  return {int_field(j, "k"), two_var_from_json(j)};
}

Json canonical_to_json(const CanonicalForm& s) {
  Json j = two_var_to_json(s.F);
  j["kind"] = "canonical_form";
  j["k"] = s.k;
  return j;
}

CanonicalForm canonical_from_json(const Json& j) {
  if (field(j, "kind").get<std::string>() != "canonical_form")
    bad("kind must be canonical_form");
  return {int_field(j, "k"), two_var_from_json(j)};
}

Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) bad("malformed JSON document");
  return j;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_json(text);
}

void save_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write " + path);
  out << dump_json(j);
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace anndiff
