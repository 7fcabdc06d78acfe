#include "spectral3/data.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace spectral3 {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& label,
                       const std::string& what) {
  throw std::runtime_error("forms file " + path +
                           (label.empty() ? "" : " [" + label + "]") + ": " +
                           what);
}

double parse_number(const nlohmann::json& v, const std::string& path,
                    const std::string& label, const std::string& field) {
  std::string s;
  if (v.is_string())
    s = v.get<std::string>();
  else if (v.is_number())
    return v.get<double>();
  else
    fail(path, label, "field '" + field + "' is not a number or string");
  try {
    std::size_t pos = 0;
    double out = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return out;
  } catch (const std::exception&) {
    fail(path, label, "field '" + field + "' is not a decimal number: " + s);
  }
}

SatakeLocal satake_from_eigenvalue(int64 p, double lambda) {
  SatakeLocal loc;
  loc.p = p;
  double half = 0.5 * lambda;
  if (std::abs(lambda) <= 2.0) {
    double s = std::sqrt(std::max(0.0, 1.0 - half * half));
    loc.alpha = cplx(half, s);
    loc.beta = cplx(half, -s);
  } else {
    double s = std::sqrt(half * half - 1.0);
    loc.alpha = cplx(half + (half > 0 ? s : -s), 0.0);
    loc.beta = 1.0 / loc.alpha;
  }
  return loc;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

FormsFile load_forms(const std::string& path) {
  std::ifstream is(path);
  if (!is) fail(path, "", "cannot open");
  nlohmann::json j;
  try {
    is >> j;
  } catch (const std::exception& e) {
    fail(path, "", std::string("JSON parse failure: ") + e.what());
  }
  if (!j.contains("schema_version") || !j["schema_version"].is_number_integer())
    fail(path, "", "missing integer schema_version");
  FormsFile out;
  out.schema_version = j["schema_version"].get<int>();
  if (out.schema_version != 1)
    fail(path, "",
         "unsupported schema version " + std::to_string(out.schema_version));
  if (!j.contains("forms") || !j["forms"].is_array())
    fail(path, "", "missing forms array");

  std::set<std::string> seen;
  for (const auto& rec : j["forms"]) {
    MaassFormData f;
    if (!rec.contains("label") || !rec["label"].is_string())
      fail(path, "", "record without string label");
    f.label = rec["label"].get<std::string>();
    if (!seen.insert(f.label).second) fail(path, f.label, "duplicate label");
    f.t = parse_number(rec.at("t"), path, f.label, "t");
    if (!(f.t > 0.0)) fail(path, f.label, "t must be strictly positive");
    std::string parity = rec.value("parity", "");
    if (parity == "even")
      f.parity = Parity::Even;
    else if (parity == "odd")
      f.parity = Parity::Odd;
    else
      fail(path, f.label, "parity must be \"even\" or \"odd\"");
    f.l_sym2_at_1 =
        parse_number(rec.at("l_sym2_at_1"), path, f.label, "l_sym2_at_1");
    const auto& primes = rec.at("primes");
    const auto& eigenvalues = rec.at("eigenvalues");
    if (!primes.is_array() || !eigenvalues.is_array() ||
        primes.size() != eigenvalues.size())
      fail(path, f.label, "eigenvalue count does not match prime list");
    int64 prev = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      int64 p = primes[i].get<int64>();
      if (p <= prev) fail(path, f.label, "primes must be strictly increasing");
      prev = p;
      double lambda =
          parse_number(eigenvalues[i], path, f.label, "eigenvalues");
      f.satake.push_back(satake_from_eigenvalue(p, lambda));
    }
    try {
      f.validate();
    } catch (const std::exception& e) {
      fail(path, f.label, e.what());
    }
    out.forms.push_back(std::move(f));
  }
  return out;
}

void save_forms(const FormsFile& file, const std::string& path) {
  nlohmann::json forms = nlohmann::json::array();
  for (const auto& f : file.forms) {
    nlohmann::json rec;
    rec["label"] = f.label;
    rec["t"] = fmt17(f.t);
    rec["parity"] = (f.parity == Parity::Even) ? "even" : "odd";
    rec["l_sym2_at_1"] = fmt17(f.l_sym2_at_1);
    nlohmann::json primes = nlohmann::json::array();
    nlohmann::json eigenvalues = nlohmann::json::array();
    for (const auto& loc : f.satake) {
      primes.push_back(loc.p);
      eigenvalues.push_back(fmt17((loc.alpha + loc.beta).real()));
    }
    rec["primes"] = primes;
    rec["eigenvalues"] = eigenvalues;
    forms.push_back(rec);
  }
  nlohmann::json j;
  j["schema_version"] = file.schema_version;
  j["forms"] = forms;
  std::ofstream os(path);
  if (!os) throw std::runtime_error("forms file " + path + ": cannot write");
  os << j.dump(2) << "\n";
}

FormsFile synth_forms(std::uint64_t seed, int count, double t_lo, double t_hi,
                      int64 prime_bound) {
  if (count < 1) throw std::invalid_argument("synth_forms: count must be >= 1");
  if (!(t_lo > 0.0) || !(t_hi >= t_lo))
    throw std::invalid_argument("synth_forms: need 0 < t_lo <= t_hi");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double pi = 3.14159265358979323846264338327950288;
  FormsFile out;
  for (int i = 0; i < count; ++i) {
    MaassFormData f;
    f.t = t_lo + (t_hi - t_lo) * unit(rng);
    f.parity = (i % 2 == 0) ? Parity::Even : Parity::Odd;
    f.l_sym2_at_1 = std::exp(std::log(0.5) + std::log(4.0) * unit(rng));
    std::ostringstream lab;
    lab << "synth." << seed << "." << i;
    f.label = lab.str();
    for (int64 p = 2; p <= prime_bound; ++p) {
      bool prime = true;
      for (int64 d = 2; d * d <= p; ++d)
        if (p % d == 0) { prime = false; break; }
      if (!prime) continue;
      double theta = pi * unit(rng);
      SatakeLocal loc;
      loc.p = p;
      loc.alpha = cplx(std::cos(theta), std::sin(theta));
      loc.beta = std::conj(loc.alpha);
      f.satake.push_back(loc);
    }
    out.forms.push_back(std::move(f));
  }
  return out;
}

std::string cache_dir() {
  const char* env = std::getenv("SPECTRAL3_CACHE_DIR");
  if (env && *env) return env;
  return "./.cache";
}

}  // namespace spectral3
