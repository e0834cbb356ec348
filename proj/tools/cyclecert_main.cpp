#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyclecert/enumerative.hpp"
#include "cyclecert/injectivity.hpp"
#include "cyclecert/strata_g1.hpp"
#include "cyclecert/twisted.hpp"

namespace cc = cyclecert;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Parses integer polynomials in x, e.g. "x^5+1", "x^5 - 3*x + 2".
std::vector<std::int64_t> parse_poly(const std::string& text) {
  std::vector<std::int64_t> coeffs;
  auto bump = [&](int deg, std::int64_t c) {
    if (deg >= static_cast<int>(coeffs.size())) coeffs.resize(deg + 1, 0);
    coeffs[deg] += c;
  };
  std::string s;
  for (char ch : text)
    if (!isspace(static_cast<unsigned char>(ch))) s += ch;
  std::size_t i = 0;
  while (i < s.size()) {
    std::int64_t sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    if (i >= s.size()) throw std::invalid_argument("polynomial: trailing operator");
    std::int64_t coef = 1;
    bool saw_digits = false;
    if (isdigit(static_cast<unsigned char>(s[i]))) {
      saw_digits = true;
      coef = 0;
      while (i < s.size() && isdigit(static_cast<unsigned char>(s[i])))
        coef = coef * 10 + (s[i++] - '0');
    }
    if (i < s.size() && s[i] == '*') ++i;
    int deg = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (i >= s.size() || !isdigit(static_cast<unsigned char>(s[i])))
          throw std::invalid_argument("polynomial: bad exponent");
        deg = 0;
        while (i < s.size() && isdigit(static_cast<unsigned char>(s[i])))
          deg = deg * 10 + (s[i++] - '0');
      }
    } else if (!saw_digits) {
      throw std::invalid_argument("polynomial: expected a term");
    }
    bump(deg, sign * coef);
  }
  if (coeffs.empty()) throw std::invalid_argument("polynomial: empty");
  return coeffs;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for divisor-class systems, enumerative degrees, "
               "genus-1 strata and twisted canonical divisors"};
  app.require_subcommand(1);

  int jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  std::uint64_t seed = 20240915ull;
  std::string out_path;
  app.add_option("--jobs", jobs, "worker threads for enumeration scans");
  app.add_option("--seed", seed, "seed for all sampling");
  app.add_option("--out", out_path, "write the machine-readable report here");

  // injectivity
  auto* inj = app.add_subcommand("injectivity", "kernel certificate for the boundary-class system");
  int g = 0, n = 0;
  std::string source = "displayed";
  inj->add_option("--g", g, "genus")->required();
  inj->add_option("--n", n, "number of marked points")->required();
  inj->add_option("--source", source, "displayed | table")->check(CLI::IsMember({"displayed", "table"}));

  // theta
  auto* theta = app.add_subcommand("theta", "symbolic degree of a product of theta classes");
  int theta_g = 0;
  std::vector<std::int64_t> mult;
  theta->add_option("--g", theta_g, "genus")->required();
  theta->add_option("--mult", mult, "multipliers, one per factor")->required()->expected(-1);

  // fiber
  auto* fiber = app.add_subcommand("fiber", "finite-map degree oracle on a genus-2 curve");
  std::int64_t fp = 7, d1 = 2, d2 = -1;
  int kmax = 4, samples = 12;
  std::string fpoly = "x^5+1";
  fiber->add_option("--p", fp, "characteristic");
  fiber->add_option("--f", fpoly, "monic degree-5 polynomial, e.g. x^5+1");
  fiber->add_option("--d1", d1, "first multiplier");
  fiber->add_option("--d2", d2, "second multiplier (must be +-1)");
  fiber->add_option("--kmax", kmax, "largest extension degree");
  fiber->add_option("--samples", samples, "number of sampled general targets");

  // strata
  auto* strata = app.add_subcommand("strata", "genus-1 stratum counting over a finite field");
  std::int64_t sp = 5, sa = -1, sb = 0;
  int sext = 1, fiber_j = 0;
  std::string signatures_json;
  strata->add_option("--p", sp, "characteristic");
  strata->add_option("--ext-degree", sext, "extension degree");
  strata->add_option("--a", sa, "curve coefficient a in y^2 = x^3 + a x + b");
  strata->add_option("--b", sb, "curve coefficient b");
  strata->add_option("--signatures", signatures_json, "JSON list of integer vectors")->required();
  strata->add_option("--fiber-j", fiber_j, "also report the forgetful-map multiplicity for this condition");

  // twist
  auto* twist = app.add_subcommand("twist", "twisted canonical divisor checks on a dual graph");
  std::string graph_file, graph_inline;
  twist->add_option("--file", graph_file, "graph JSON file");
  twist->add_option("--inline", graph_inline, "graph JSON given inline");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*inj) {
      if (g < 3 || n < g - 1) {
        std::cerr << "injectivity: requires g >= 3 and n >= g-1\n";
        return kExitUsage;
      }
      auto src = source == "displayed" ? cc::SystemSource::DisplayedEquations
                                       : cc::SystemSource::TableDerived;
      cc::KernelCertificate cert = cc::verify_injectivity(g, n, src);
      std::string json = cc::certificate_json(cert);
      write_output(out_path, json);
      std::cout << "g=" << g << " n=" << n << " source=" << source
                << " kernel_dim=" << cert.kernel_dim;
      if (!cert.swept.empty()) {
        std::cout << " (sweep:";
        for (const auto& s : cert.swept) std::cout << " " << s.value.str() << "->" << s.kernel_dim;
        std::cout << ")";
      }
      std::cout << " mismatches=" << cert.diff.mismatches.size() << "\n";
      return cert.kernel_dim == 0 ? kExitPass : kExitFail;
    }

    if (*theta) {
      cc::BigInt v = cc::theta_degree(theta_g, mult);
      std::cout << v.str() << "\n";
      write_output(out_path, v.str() + "\n");
      return kExitPass;
    }

    if (*fiber) {
      cc::HyperellipticCurveSpec spec{fp, parse_poly(fpoly)};
      cc::FiberReport rep = cc::verify_finite_degree(spec, d1, d2, samples, kmax, seed, jobs);
      write_output(out_path, cc::fiber_report_json(rep));
      std::cout << cc::fiber_report_table(rep);
      if (d1 != d2 && d1 != -d2) {
        bool ok = !rep.bound_violated && rep.n_general > 0 &&
                  rep.n_general_at_bound == rep.n_general;
        std::cout << (ok ? "ok: every general fiber tops out at the degree bound\n"
                         : "check failed\n");
        return ok ? kExitPass : kExitFail;
      }
      std::cout << (rep.contraction_observed ? "ok: contraction signature observed\n"
                                             : "check failed\n");
      return rep.contraction_observed ? kExitPass : kExitFail;
    }

    if (*strata) {
      nlohmann::json sigj = nlohmann::json::parse(signatures_json);
      std::vector<cc::Signature> sigs;
      for (const auto& s : sigj) sigs.push_back(s.get<cc::Signature>());
      if (sigs.empty()) {
        std::cerr << "strata: need at least one signature\n";
        return kExitUsage;
      }
      int nmarks = static_cast<int>(sigs[0].size()) + static_cast<int>(sigs.size()) - 1;
      cc::StrataQuery query = cc::StrataQuery::make(nmarks, sigs);
      cc::EllipticCurve curve = cc::EllipticCurve::over({sp, sa, sb}, sext);
      std::int64_t count = cc::count_x(curve, query);
      nlohmann::json rep;
      rep["query"] = query.str();
      rep["p"] = sp;
      rep["ext_degree"] = sext;
      rep["curve_points"] = cc::ec_enumerate(curve).size();
      rep["count"] = count;
      rep["gcd_one"] = query.gcd_one;
      rep["unit_last_tail"] = query.unit_last_tail;
      std::cout << query.str() << ": " << count << " tuples over F_" << sp;
      if (sext > 1) std::cout << "^" << sext;
      std::cout << "\n";
      if (fiber_j >= 1) {
        cc::FiberMultiplicity fm = cc::fiber_multiplicity(curve, query, fiber_j);
        rep["fiber_multiplicity"] = {{"j", fiber_j},
                                     {"generic", fm.generic},
                                     {"max", fm.max},
                                     {"min", fm.min},
                                     {"fibers", fm.n_fibers},
                                     {"excluded", fm.n_excluded}};
        std::cout << "forgetful-map multiplicity (condition " << fiber_j
                  << "): generic " << fm.generic << " over " << fm.n_fibers << " fibers\n";
      }
      write_output(out_path, rep.dump(2));
      return kExitPass;
    }

    if (*twist) {
      std::string text = graph_inline;
      if (!graph_file.empty()) {
        std::ifstream in(graph_file);
        if (!in) {
          std::cerr << "twist: cannot open " << graph_file << "\n";
          return kExitUsage;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
      }
      if (text.empty()) {
        std::cerr << "twist: provide --file or --inline\n";
        return kExitUsage;
      }
      cc::TwistInput in = cc::twist_input_from_json(text);
      cc::TwistReport rep = cc::run_twist_checks(
          in.graph, in.has_levels ? &in.levels : nullptr,
          in.has_residues ? &in.residues : nullptr, in.has_poles ? &in.poles : nullptr);
      std::string json = cc::twist_report_json(rep);
      write_output(out_path, json);
      std::cout << json << "\n";
      return rep.pass ? kExitPass : kExitFail;
    }
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
