#include "gkpsim/runner.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "gkpsim/analytic.hpp"
#include "gkpsim/version.hpp"

namespace gkpsim {

namespace {

std::string fmt6(double v) {
  char buf[48];
  snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, sep))
    if (!item.empty()) parts.push_back(item);
  return parts;
}

void write_metadata(std::ostream& os, const RunConfig& c) {
  os << "# gkpsim " << kVersion << "\n";
  std::time_t now = std::time(nullptr);
  char buf[64];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  os << "# generated " << buf << "\n";
  os << "# seed=" << c.seed << " samples=" << c.samples
     << " method=" << c.method << " alpha_aux=" << fmt6(c.alpha_aux)
     << " alpha_logical=" << fmt6(c.alpha_logical)
     << " reduce_generators=" << (c.reduce_generators ? 1 : 0) << "\n";
}

RateResult analytic_rep3_rate(Scheme scheme, double sigma) {
  switch (scheme) {
    case Scheme::I: return scheme1_rep3_rate(sigma);
    case Scheme::II: return scheme2_rep3_rate(sigma);
    case Scheme::III: return scheme3_rep3_rate(sigma);
  }
  throw std::logic_error("unreachable");
}

}  // namespace

void RunConfig::validate() const {
  if (codes.empty()) throw std::invalid_argument("no code ids given");
  if (schemes.empty()) throw std::invalid_argument("no schemes given");
  if (sigmas.empty()) throw std::invalid_argument("no sigma values given");
  for (double s : sigmas)
    if (!(s > 0.0)) throw std::invalid_argument("sigma values must be > 0");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (method != "montecarlo" && method != "analytic")
    throw std::invalid_argument("method must be montecarlo or analytic");
}

std::vector<double> parse_sigma_spec(const std::string& spec) {
  std::vector<double> out;
  if (spec.find(':') != std::string::npos) {
    auto parts = split(spec, ':');
    if (parts.size() != 3)
      throw std::invalid_argument("sigma range must be start:stop:step");
    double start = std::stod(parts[0]), stop = std::stod(parts[1]),
           step = std::stod(parts[2]);
    if (!(step > 0.0)) throw std::invalid_argument("sigma step must be > 0");
    for (double s = start; s <= stop + 0.5 * step; s += step)
      out.push_back(std::round(s * 1e12) / 1e12);
  } else {
    for (const auto& p : split(spec, ',')) out.push_back(std::stod(p));
  }
  return out;
}

void apply_config_key(const std::string& key, const std::string& value,
                      RunConfig& config) {
  if (key == "code") {
    config.codes = split(value, ',');
  } else if (key == "scheme") {
    config.schemes.clear();
    for (const auto& s : split(value, ','))
      config.schemes.push_back(scheme_from_string(s));
  } else if (key == "sigma") {
    config.sigmas = parse_sigma_spec(value);
  } else if (key == "samples") {
    config.samples = std::stoull(value);
  } else if (key == "seed") {
    config.seed = std::stoull(value);
  } else if (key == "method") {
    config.method = value;
  } else if (key == "alpha-aux") {
    config.alpha_aux = std::stod(value);
  } else if (key == "alpha-logical") {
    config.alpha_logical = std::stod(value);
  } else if (key == "reduce-generators") {
    config.reduce_generators = value == "1" || value == "on" || value == "true";
  } else if (key == "threads") {
    config.threads = std::stoi(value);
  } else if (key == "target-rel-stderr") {
    config.target_rel_stderr = std::stod(value);
  } else if (key == "out") {
    config.out = value;
  } else {
    throw std::invalid_argument("unknown config key '" + key + "'");
  }
}

void apply_config_file(const std::string& path, RunConfig& config) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                  ": expected key=value");
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t\r"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
      return s;
    };
    apply_config_key(trim(line.substr(0, eq)), trim(line.substr(eq + 1)),
                     config);
  }
}

std::string format_csv_row(const ErrorRateEstimate& est,
                           const std::string& method) {
  std::ostringstream os;
  os << est.code << ',' << to_string(est.scheme) << ',' << fmt6(est.sigma)
     << ',' << est.samples << ',' << fmt6(est.p_emp) << ',' << fmt6(est.std_err)
     << ',' << est.seed << ',' << method << '\n';
  return os.str();
}

int run_config(const RunConfig& config, std::ostream& csv,
               std::ostream& diagnostics) {
  config.validate();
  write_metadata(csv, config);
  csv << "code,scheme,sigma,samples,p_emp,stderr,seed,method\n";
  EstimateOptions opts;
  opts.threads = config.threads;
  opts.target_rel_stderr = config.target_rel_stderr;
  int failures = 0;
  for (const std::string& id : config.codes) {
    for (Scheme scheme : config.schemes) {
      try {
        if (config.method == "analytic") {
          if (id != "rep3")
            throw std::invalid_argument(
                "analytic rates are available for rep3 only");
          for (double sigma : config.sigmas) {
            RateResult r = analytic_rep3_rate(scheme, sigma);
            if (r.warning)
              diagnostics << "warning: truncation error " << r.trunc_error
                          << " for sigma=" << sigma << "\n";
            ErrorRateEstimate est;
            est.code = id;
            est.scheme = scheme;
            est.sigma = sigma;
            est.samples = 0;
            est.p_emp = r.value;
            est.std_err = 0.0;
            est.seed = config.seed;
            csv << format_csv_row(est, "analytic");
          }
        } else {
          CodeSpec spec = parse_code_id(id, scheme);
          spec.aux_alpha = config.alpha_aux;
          spec.logical_alpha = config.alpha_logical;
          spec.reduce_generators = config.reduce_generators;
          CodeInstance code = build(spec);
          for (double sigma : config.sigmas) {
            ErrorRateEstimate est =
                estimate(code, sigma, config.samples, config.seed, opts);
            csv << format_csv_row(est, "montecarlo");
          }
        }
      } catch (const std::exception& e) {
        diagnostics << "error: code=" << id << " scheme=" << to_string(scheme)
                    << ": " << e.what() << "\n";
        ++failures;
      }
    }
  }
  return failures == 0 ? 0 : 1;
}

int squeeze_study(const std::string& code_id, Scheme scheme,
                  const std::vector<double>& alphas, double sigma, uint64_t m,
                  uint64_t seed, const EstimateOptions& opts, std::ostream& csv,
                  std::ostream& diagnostics) {
  if (scheme == Scheme::II) {
    diagnostics << "error: the squeeze study covers schemes I and III\n";
    return 1;
  }
  csv << "# gkpsim " << kVersion << " squeeze-study\n";
  csv << "code,scheme,sigma,alpha,samples,p_emp,stderr,ratio,seed,method\n";
  auto rate_at = [&](double alpha) {
    CodeSpec spec = parse_code_id(code_id, scheme);
    if (scheme == Scheme::I) {
      // squeeze every mode: the qubit lattice aspect 2 scales by alpha
      spec.logical_alpha = 2.0 * alpha;
      spec.aux_alpha = 0.0;  // follows the logical lattice
    } else {
      spec.aux_alpha = alpha;  // squeeze only the auxiliary modes
    }
    CodeInstance code = build(spec);
    return estimate(code, sigma, m, seed, opts);
  };
  try {
    ErrorRateEstimate base = rate_at(1.0);
    for (double alpha : alphas) {
      if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be > 0");
      ErrorRateEstimate est = alpha == 1.0 ? base : rate_at(alpha);
      double ratio = base.p_emp > 0.0
                         ? est.p_emp / base.p_emp
                         : std::numeric_limits<double>::quiet_NaN();
      std::ostringstream os;
      os << est.code << ',' << to_string(est.scheme) << ',' << fmt6(est.sigma)
         << ',' << fmt6(alpha) << ',' << est.samples << ',' << fmt6(est.p_emp)
         << ',' << fmt6(est.std_err) << ',' << fmt6(ratio) << ',' << est.seed
         << ",montecarlo\n";
      csv << os.str();
    }
  } catch (const std::exception& e) {
    diagnostics << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace gkpsim
