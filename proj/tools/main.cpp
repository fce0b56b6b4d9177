// phi3 — command-line front door for the n^2+n+1 squarefree toolkit.
// Every subcommand emits machine-readable rows (CSV or JSON lines); exit codes:
// 0 success, 1 domain error, 2 time budget exceeded.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "phi3/asymptotic.hpp"
#include "phi3/census.hpp"
#include "phi3/expsums.hpp"
#include "phi3/forms.hpp"

using namespace phi3;

namespace {

struct Field {
  std::string key;
  std::string value;
  bool is_string = false;
};
using Row = std::vector<Field>;

std::string fmt_u64(u64 v) { return std::to_string(v); }
std::string fmt_i64(i64 v) { return std::to_string(v); }

std::string fmt_double(double v, int significant) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant, v);
  return buf;
}

Field num(const char* key, const std::string& v) { return {key, v, false}; }
Field str(const char* key, const std::string& v) { return {key, v, true}; }

void write_rows(std::ostream& os, const std::vector<Row>& rows, const std::string& format) {
  if (format == "csv") {
    if (rows.empty()) return;
    for (size_t i = 0; i < rows[0].size(); ++i) os << (i ? "," : "") << rows[0][i].key;
    os << "\n";
    for (const Row& row : rows) {
      for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i].value;
      os << "\n";
    }
  } else {  // json-lines
    for (const Row& row : rows) {
      os << "{";
      for (size_t i = 0; i < row.size(); ++i) {
        if (i) os << ",";
        os << "\"" << row[i].key << "\":";
        if (row[i].is_string)
          os << "\"" << row[i].value << "\"";
        else
          os << row[i].value;
      }
      os << "}\n";
    }
  }
}

const char* method_name(CensusMethod m) {
  switch (m) {
    case CensusMethod::oracle: return "oracle";
    case CensusMethod::sieve: return "sieve";
    default: return "decomposed";
  }
}

Row census_row(const CensusReport& rep) {
  Row row{num("X", fmt_u64(rep.X)), num("gamma", fmt_u64(rep.gamma)),
          str("method", method_name(rep.method))};
  row.push_back(num("z", rep.z ? fmt_u64(*rep.z) : ""));
  row.push_back(num("gamma1", rep.gamma1 ? fmt_i64(*rep.gamma1) : ""));
  row.push_back(num("gamma2", rep.gamma2 ? fmt_i64(*rep.gamma2) : ""));
  return row;
}

// JSON cannot carry empty numeric cells; drop them there.
std::vector<Row> strip_empty(std::vector<Row> rows) {
  for (Row& row : rows) {
    Row kept;
    for (Field& f : row)
      if (!f.value.empty()) kept.push_back(std::move(f));
    row = std::move(kept);
  }
  return rows;
}

std::vector<u64> make_grid(u64 lo, u64 hi, u64 points, bool logspace) {
  if (lo < 1 || hi < lo || points < 1) throw std::domain_error("scan: bad grid parameters");
  std::vector<u64> grid;
  if (points == 1) {
    grid.push_back(hi);
  } else {
    for (u64 i = 0; i < points; ++i) {
      double t = (double)i / (double)(points - 1);
      double x = logspace ? std::exp(std::log((double)lo) + t * (std::log((double)hi) - std::log((double)lo)))
                          : (double)lo + t * ((double)hi - (double)lo);
      u64 v = (u64)std::llround(x);
      v = std::max(lo, std::min(hi, v));
      if (grid.empty() || v > grid.back()) grid.push_back(v);
    }
    if (grid.back() != hi) grid.push_back(hi);
  }
  return grid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"squarefree values of n^2+n+1: census, congruence roots, exponential sums"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string format = "csv", output;
  unsigned threads = 1;
  double budget = 0.0;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json-lines"}));
  app.add_option("--output", output, "write rows to this file instead of stdout");
  app.add_option("--threads", threads, "worker pool size")->check(CLI::Range(1u, 1024u));
  app.add_option("--time-budget", budget, "seconds before oracle computations abort (0 = unlimited)")
      ->check(CLI::NonNegativeNumber);

  auto* cmd_gamma = app.add_subcommand("gamma", "exact count of n <= X with n^2+n+1 squarefree");
  u64 gx = 0, gz = 0;
  std::string method = "sieve";
  cmd_gamma->add_option("--x", gx, "upper limit X")->required()->check(CLI::PositiveNumber);
  cmd_gamma->add_option("--method", method, "oracle | sieve | decomp")
      ->check(CLI::IsMember({"oracle", "sieve", "decomp"}));
  auto* zopt = cmd_gamma->add_option("--z", gz, "decomposition cut (decomp only; default floor(X^{4/5}))");

  auto* cmd_lambda = app.add_subcommand("lambda", "number of roots of z^2+z+1 mod q");
  u64 lq = 0;
  cmd_lambda->add_option("--q", lq, "modulus")->required()->check(CLI::PositiveNumber);

  auto* cmd_roots = app.add_subcommand("roots", "roots of z^2+z+1 mod m, one row per root");
  u64 rmod = 0;
  cmd_roots->add_option("--mod", rmod, "modulus")->required()->check(CLI::PositiveNumber);

  auto* cmd_sigma = app.add_subcommand("sigma", "rigorous enclosure of the density constant");
  u64 pbound = 0;
  cmd_sigma->add_option("--prime-bound", pbound, "Euler product cutoff")->required()->check(CLI::PositiveNumber);

  auto* cmd_scan = app.add_subcommand("scan", "error-term rows E(X) = Gamma(X) - sigma*X over a grid");
  u64 xmin = 0, xmax = 0, npoints = 0, scan_pbound = 10000000;
  bool logspace = false;
  cmd_scan->add_option("--x-min", xmin)->required()->check(CLI::PositiveNumber);
  cmd_scan->add_option("--x-max", xmax)->required()->check(CLI::PositiveNumber);
  cmd_scan->add_option("--points", npoints)->required()->check(CLI::PositiveNumber);
  cmd_scan->add_flag("--log", logspace, "log-spaced grid");
  cmd_scan->add_option("--prime-bound", scan_pbound, "sigma enclosure cutoff");

  auto* cmd_corr = app.add_subcommand("correspondence", "representations x^2+xy+y^2 = n vs roots mod n");
  u64 cn = 0;
  bool check = false, list_reps = false;
  cmd_corr->add_option("--n", cn, "target n (n >= 7, not divisible by 3)")->required()->check(CLI::PositiveNumber);
  cmd_corr->add_flag("--check", check, "verify the section/retraction property per root");
  cmd_corr->add_flag("--list-reps", list_reps, "one row per representation instead of per root");

  auto* cmd_kloo = app.add_subcommand("kloosterman", "incomplete Kloosterman sum K(r,h) over [alpha, beta]");
  cmd_kloo->set_help_flag("--help", "print help");  // frees -h so --h can be the numerator flag
  i64 kr = 0, kh = 0;
  double kalpha = 0, kbeta = 0;
  cmd_kloo->add_option("--r", kr)->required();
  cmd_kloo->add_option("--h", kh)->required();
  cmd_kloo->add_option("--alpha", kalpha)->required();
  cmd_kloo->add_option("--beta", kbeta)->required();

  auto* cmd_theta = app.add_subcommand("theta", "Theta_m over the dyadic window [D, 2D)");
  u64 tm = 0, td = 0, tx = 0;
  std::string form = "direct";
  cmd_theta->add_option("--m", tm)->required()->check(CLI::PositiveNumber);
  cmd_theta->add_option("--d", td, "window start D")->required()->check(CLI::PositiveNumber);
  cmd_theta->add_option("--x", tx)->required()->check(CLI::PositiveNumber);
  cmd_theta->add_option("--form", form)->check(CLI::IsMember({"direct", "representation"}));

  auto* cmd_psi = app.add_subcommand("psi", "sawtooth psi(t) and its truncated Fourier series");
  double pt = 0;
  u64 pM = 0;
  cmd_psi->add_option("--t", pt)->required();
  auto* mopt = cmd_psi->add_option("--truncate", pM, "Fourier cutoff M >= 2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  std::ofstream file;
  if (!output.empty()) {
    file.open(output);
    if (!file) {
      std::cerr << "error: cannot open output file " << output << "\n";
      return 1;
    }
  }
  std::ostream& os = output.empty() ? std::cout : file;

  try {
    std::vector<Row> rows;

    if (cmd_gamma->parsed()) {
      CensusReport rep;
      if (method == "oracle") {
        if (*zopt) throw std::domain_error("gamma: --z applies to --method decomp only");
        rep = gamma_oracle(gx, budget);
      } else if (method == "sieve") {
        if (*zopt) throw std::domain_error("gamma: --z applies to --method decomp only");
        rep = gamma_sieve(gx, threads);
      } else {
        u64 z = *zopt ? gz : iroot((u128)gx * gx * gx * gx, 5);
        rep = gamma_decomposed(gx, z);
      }
      std::fprintf(stderr, "# elapsed %.3f s\n", rep.elapsed);
      rows.push_back(census_row(rep));
    } else if (cmd_lambda->parsed()) {
      rows.push_back({num("q", fmt_u64(lq)), num("lambda", fmt_u64(lambda(lq)))});
    } else if (cmd_roots->parsed()) {
      RootSet rs = roots_mod(rmod);
      for (u64 r : rs.roots)
        rows.push_back({num("modulus", fmt_u64(rmod)), num("root", fmt_u64(r))});
      if (rs.roots.empty() && format == "csv") os << "modulus,root\n";
    } else if (cmd_sigma->parsed()) {
      SigmaInterval s = sigma_euler(pbound);
      rows.push_back({num("prime_bound", fmt_u64(s.prime_bound)),
                      num("sigma_lo", fmt_double(s.lower, 17)),
                      num("sigma_hi", fmt_double(s.upper, 17)),
                      num("width", fmt_double(s.upper - s.lower, 6)),
                      num("midpoint", fmt_double(s.lower + (s.upper - s.lower) / 2, 17))});
    } else if (cmd_scan->parsed()) {
      auto grid = make_grid(xmin, xmax, npoints, logspace);
      SigmaInterval s = sigma_euler(scan_pbound);
      auto scan_rows = error_scan(grid, s, threads);
      for (const auto& r : scan_rows)
        rows.push_back({num("X", fmt_u64(r.X)), num("gamma", fmt_i64(r.gamma)),
                        num("sigma_lo", fmt_double(s.lower, 12)),
                        num("sigma_hi", fmt_double(s.upper, 12)),
                        num("E_mid", fmt_double(r.E, 6)),
                        num("E_over_X45", fmt_double(r.normalized, 6))});
    } else if (cmd_corr->parsed()) {
      if (cn % 3 == 0 || cn < 7)
        throw std::domain_error("correspondence: requires n >= 7 with 3 not dividing n");
      if (list_reps) {
        for (const auto& rep : enumerate_representations(cn))
          rows.push_back({num("n", fmt_u64(cn)), num("x", fmt_u64(rep.x)), num("y", fmt_i64(rep.y)),
                          num("z", fmt_u64(forward_map(rep)))});
      } else {
        auto fibers = fiber_statistics(cn);
        for (const auto& [root, size] : fibers) {
          Representation s = section(root, cn);
          Row row{num("n", fmt_u64(cn)), num("root", fmt_u64(root)), num("fiber", fmt_u64(size)),
                  num("x", fmt_u64(s.x)), num("y", fmt_i64(s.y))};
          if (check) {
            bool ok = forward_map(s) == root;
            row.push_back(num("retraction_ok", ok ? "1" : "0"));
            if (!ok) throw std::domain_error("correspondence: retraction check failed");
          }
          rows.push_back(row);
        }
      }
    } else if (cmd_kloo->parsed()) {
      cdouble v = kloosterman_incomplete(kr, kh, kalpha, kbeta);
      rows.push_back({num("r", fmt_i64(kr)), num("h", fmt_i64(kh)),
                      num("alpha", fmt_double(kalpha, 12)), num("beta", fmt_double(kbeta, 12)),
                      num("re", fmt_double(v.real(), 12)), num("im", fmt_double(v.imag(), 12)),
                      num("abs", fmt_double(std::abs(v), 12))});
    } else if (cmd_theta->parsed()) {
      cdouble v = form == "direct" ? theta_direct(tm, td, tx) : theta_representation(tm, td, tx);
      rows.push_back({num("m", fmt_u64(tm)), num("D", fmt_u64(td)), num("X", fmt_u64(tx)),
                      str("form", form), num("re", fmt_double(v.real(), 12)),
                      num("im", fmt_double(v.imag(), 12)), num("abs", fmt_double(std::abs(v), 12))});
    } else if (cmd_psi->parsed()) {
      Row row{num("t", fmt_double(pt, 12)), num("psi", fmt_double(psi(pt), 12))};
      if (*mopt) {
        double approx = psi_truncated(pt, pM);
        row.push_back(num("M", fmt_u64(pM)));
        row.push_back(num("psi_truncated", fmt_double(approx, 12)));
        row.push_back(num("deviation", fmt_double(std::fabs(approx - psi(pt)), 6)));
      }
      rows.push_back(row);
    }

    if (format != "csv") rows = strip_empty(rows);
    write_rows(os, rows, format);
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
