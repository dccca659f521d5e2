// Copyright 2026 The polybergman Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// polybergman command-line driver: kernel values, Berezin grids, truncated Toeplitz
// matrices, Q root scans and the bundled verification suites.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polybergman/berezin.hpp"
#include "polybergman/parse.hpp"
#include "polybergman/qanalysis.hpp"
#include "polybergman/report.hpp"
#include "polybergman/toeplitz.hpp"
#include "polybergman/verify.hpp"

namespace pb = polybergman;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

/// Bad user input discovered after parsing (domain violations, malformed symbols).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string path;
  std::string format;
};

void emit(const Output& out, const std::string& text) {
  if (out.path.empty() || out.path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(out.path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file '" + out.path + "'");
  f << text;
  if (!f) throw std::runtime_error("failed writing '" + out.path + "'");
}

std::string with_newline(std::string s) {
  if (s.empty() || s.back() != '\n') s += '\n';
  return s;
}

pb::DiskPoint disk_point(const std::string& text) {
  const pb::Complex z = pb::parse_complex(text);
  if (!(std::norm(z) < 1.0)) throw UsageError("point " + text + " is not inside the unit disk");
  return pb::DiskPoint(z);
}

pb::Polynomial symbol(const std::string& text) {
  try {
    return pb::parse_symbol(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

ordered_json complex_json(pb::Complex v) { return ordered_json::array({pb::format_double(v.real()), pb::format_double(v.imag())}); }

std::string complex_text(pb::Complex v) {
  if (v.imag() == 0.0) return pb::format_double(v.real());
  std::string s = pb::format_double(v.real());
  s += v.imag() < 0 ? "-" : "+";
  return s + pb::format_double(std::abs(v.imag())) + "i";
}

// ---------------------------------------------------------------- kernel

struct KernelArgs {
  int n = 2;
  std::string z = "0";
  std::string w = "0";
  bool normalized = false;
  bool exact = false;
  Output out{"", "text"};
};

int run_kernel(const KernelArgs& a) {
  const pb::SpaceOrder n(a.n);
  std::string text;
  if (a.exact) {
    if (a.normalized) throw UsageError("--exact and --normalized cannot be combined");
    const pb::ExactDiskPoint z(pb::parse_complex_exact(a.z));
    const pb::ExactDiskPoint w(pb::parse_complex_exact(a.w));
    const pb::ComplexRational v = pb::kernel_eval_exact(n, z, w);
    if (a.out.format == "json") {
      ordered_json j;
      j["n"] = a.n;
      j["z"] = a.z;
      j["w"] = a.w;
      j["value"] = ordered_json::array({pb::to_string(v.re), pb::to_string(v.im)});
      text = j.dump(2);
    } else {
      text = pb::to_string(v.re);
      if (sgn(v.im) != 0) text += (sgn(v.im) < 0 ? " - " : " + ") + pb::to_string(abs(v.im)) + " i";
    }
  } else {
    const pb::DiskPoint z = disk_point(a.z);
    const pb::DiskPoint w = disk_point(a.w);
    const pb::Complex v = a.normalized ? pb::normalized_kernel_eval(n, z, w) : pb::kernel_eval(n, z, w);
    if (a.out.format == "json") {
      ordered_json j;
      j["n"] = a.n;
      j["z"] = complex_json(z.value());
      j["w"] = complex_json(w.value());
      j["normalized"] = a.normalized;
      j["value"] = complex_json(v);
      text = j.dump(2);
    } else {
      text = complex_text(v);
    }
  }
  emit(a.out, with_newline(text));
  return kExitOk;
}

// ---------------------------------------------------------------- berezin

struct BerezinArgs {
  std::vector<int> orders;
  std::vector<double> alphas;
  std::string symbol;
  std::vector<std::string> points;
  double grid_radius = 0.9;
  int grid_rings = 0;
  int grid_spokes = 8;
  int radial = 0;
  int angular = 0;
  Output out{"", "json"};
};

std::vector<pb::DiskPoint> berezin_points(const BerezinArgs& a) {
  std::vector<pb::DiskPoint> pts;
  for (const auto& s : a.points) pts.push_back(disk_point(s));
  if (a.grid_rings > 0) {
    if (!(a.grid_radius > 0.0 && a.grid_radius < 1.0)) throw UsageError("--grid-radius must lie in (0, 1)");
    if (a.grid_spokes < 1) throw UsageError("--grid-spokes must be positive");
    pts.emplace_back(0.0, 0.0);
    for (int k = 1; k <= a.grid_rings; ++k) {
      const double r = a.grid_radius * k / a.grid_rings;
      for (int j = 0; j < a.grid_spokes; ++j) pts.emplace_back(std::polar(r, 2.0 * std::numbers::pi * j / a.grid_spokes));
    }
  }
  return pts;
}

int run_berezin(BerezinArgs a) {
  const pb::Polynomial f = symbol(a.symbol);
  const pb::Integrand integrand = [f](pb::Complex w) { return f.evaluate(w); };
  if (a.orders.empty() && a.alphas.empty()) a.orders.push_back(2);
  if ((a.radial > 0) != (a.angular > 0)) throw UsageError("--radial and --angular must be given together");
  const auto pts = berezin_points(a);

  std::vector<pb::BerezinGridRow> rows;
  for (const auto& z : pts) {
    const pb::DiskQuadratureRule rule = a.radial > 0 ? pb::build_rule(a.radial, a.angular) : pb::rule_for_point(z.abs());
    for (int n : a.orders) {
      rows.push_back({n, "B", z.value(), pb::symbol_berezin(pb::SpaceOrder(n), integrand, z, rule)});
    }
    for (double alpha : a.alphas) {
      rows.push_back({0, pb::format_double(alpha), z.value(), pb::weighted_berezin(pb::BerezinWeight(alpha), integrand, z, rule)});
    }
  }
  emit(a.out, a.out.format == "csv" ? pb::berezin_grid_csv(rows) : with_newline(pb::berezin_grid_json(rows)));
  return kExitOk;
}

// ---------------------------------------------------------------- toeplitz

struct ToeplitzArgs {
  int n = 2;
  int cap = 12;
  std::string symbol;
  std::string with;
  std::string op = "matrix";
  double tol = 1e-8;
  bool entries = false;
  Output out{"", "json"};
};

int run_toeplitz(const ToeplitzArgs& a) {
  const pb::SpaceOrder n(a.n);
  if (a.cap < 0) throw UsageError("--D must be nonnegative");
  if (!(a.tol > 0.0)) throw UsageError("--tol must be positive");
  const pb::Polynomial u = symbol(a.symbol);
  if (a.op != "matrix" && a.with.empty()) throw UsageError("--op " + a.op + " needs --with");
  const pb::Polynomial v = a.with.empty() ? pb::Polynomial() : symbol(a.with);

  const auto basis = pb::make_basis(n, a.cap);
  std::optional<pb::OperatorMatrix> m;
  int symbol_degree = u.degree();
  if (a.op == "matrix") {
    m = pb::toeplitz_matrix(basis, u);
  } else {
    symbol_degree += v.degree();
    const auto uv = pb::compressed_product(n, a.cap, u, v);
    if (a.op == "product") {
      m = uv;
    } else if (a.op == "commutator") {
      m = pb::subtract(uv, pb::compressed_product(n, a.cap, v, u));
    } else {
      m = pb::subtract(uv, pb::toeplitz_matrix(basis, u * v));
    }
  }

  const auto& values = m->values();
  if (a.out.format == "csv") {
    std::ostringstream os;
    os << "row,col,re,im\n";
    for (Eigen::Index i = 0; i < values.rows(); ++i) {
      for (Eigen::Index j = 0; j < values.cols(); ++j) {
        os << i << ',' << j << ',' << pb::format_double(values(i, j).real()) << ',' << pb::format_double(values(i, j).imag()) << '\n';
      }
    }
    emit(a.out, os.str());
    return kExitOk;
  }

  ordered_json j;
  j["n"] = a.n;
  j["D"] = a.cap;
  j["op"] = a.op;
  j["symbol"] = u.to_string();
  if (!a.with.empty()) j["with"] = v.to_string();
  j["dimension"] = basis->size();
  j["rank"] = pb::numerical_rank(*m, a.tol);
  const auto interior = pb::interior_indices(*basis, a.cap - symbol_degree);
  j["interior_dimension"] = interior.size();
  j["interior_rank"] = interior.empty() ? 0 : pb::numerical_rank(pb::principal_block(values, interior), a.tol);
  j["interior_exactly_zero"] = m->is_exact() && pb::block_is_exactly_zero(*m, interior);
  j["frobenius"] = pb::format_double(pb::frobenius_norm(*m));
  j["hermitian"] = m->is_exact() && m->gram() == m->gram().conjugate_transpose();
  if (a.entries) {
    ordered_json rows = ordered_json::array();
    for (Eigen::Index i = 0; i < values.rows(); ++i) {
      ordered_json row = ordered_json::array();
      for (Eigen::Index k = 0; k < values.cols(); ++k) row.push_back(complex_json(values(i, k)));
      rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
  }
  emit(a.out, with_newline(j.dump(2)));
  return kExitOk;
}

// ---------------------------------------------------------------- qscan

struct QScanArgs {
  int from = 2;
  int to = 100;
  bool certify = false;
  bool serial = false;
  long bits = 0;
  Output out{"", "json"};
};

int run_qscan(const QScanArgs& a) {
  if (a.from < 1 || a.to < a.from) throw UsageError("need 1 <= --from <= --to");
  pb::RootOptions options = pb::default_root_options();
  if (a.bits != 0) {
    if (a.bits < 53) throw UsageError("--bits must be at least 53");
    options.initial_bits = a.bits;
    options.max_bits = std::max(options.max_bits, a.bits);
  }
  const auto reports = a.serial ? pb::scan_Q_serial(a.from, a.to, options) : pb::scan_Q(a.from, a.to, options);
  emit(a.out, a.out.format == "csv" ? pb::qreports_csv(reports) : with_newline(pb::qreports_json(reports)));
  if (!a.certify) return kExitOk;
  int failures = 0;
  for (const auto& r : reports) {
    if (r.verdict != pb::Verdict::all_outside) {
      std::cerr << "n=" << r.n << ": " << pb::to_string(r.verdict) << (r.error.empty() ? "" : " (" + r.error + ")") << '\n';
      ++failures;
    }
  }
  return failures == 0 ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite = "core";
  bool timings = false;
  Output out{"", "text"};
};

int run_verify(const VerifyArgs& a) {
  const bool to_stdout = a.out.path.empty() || a.out.path == "-";
  auto line = [&a](const pb::CheckResult& r) {
    std::string s = std::string(r.passed ? "PASS " : "FAIL ") + r.name;
    if (a.timings) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " [%.2fs]", r.seconds);
      s += buf;
    }
    return s + ": " + r.detail + "\n";
  };
  const bool stream = to_stdout && a.out.format == "text";
  const auto results = pb::run_suite(a.suite, [&](const pb::CheckResult& r) {
    if (stream) {
      std::cout << line(r);
      std::cout.flush();
    }
  });
  int failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;

  if (a.out.format == "json") {
    ordered_json checks = ordered_json::array();
    for (const auto& r : results) {
      ordered_json c;
      c["name"] = r.name;
      c["passed"] = r.passed;
      c["detail"] = r.detail;
      if (a.timings) c["seconds"] = pb::format_double(r.seconds);
      checks.push_back(std::move(c));
    }
    ordered_json j;
    j["suite"] = a.suite;
    j["passed"] = results.size() - static_cast<std::size_t>(failed);
    j["failed"] = failed;
    j["checks"] = std::move(checks);
    emit(a.out, with_newline(j.dump(2)));
  } else {
    std::string summary = std::to_string(results.size() - static_cast<std::size_t>(failed)) + "/" +
                          std::to_string(results.size()) + " checks passed\n";
    if (stream) {
      std::cout << summary;
    } else {
      std::string all;
      for (const auto& r : results) all += line(r);
      emit(a.out, all + summary);
    }
  }
  return failed == 0 ? kExitOk : kExitFailed;
}

void add_output(CLI::App* cmd, Output& out, const std::vector<std::string>& formats) {
  cmd->add_option("--out", out.path, "Write the report to this file instead of stdout");
  cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polyanalytic Bergman space toolkit: kernels, Berezin transforms, Toeplitz matrices, Q root scans"};
  app.require_subcommand(1);

  KernelArgs kernel;
  auto* k = app.add_subcommand("kernel", "Evaluate the reproducing kernel K_z(w) of A^2_n");
  k->add_option("--n", kernel.n, "Polyanalytic order n >= 1")->capture_default_str();
  k->add_option("--z", kernel.z, "Kernel point z (e.g. 0.5, 0.3-0.2i, 1/4+1/4i)")->capture_default_str();
  k->add_option("--w", kernel.w, "Evaluation point w")->capture_default_str();
  k->add_flag("--normalized", kernel.normalized, "Evaluate k_z(w) = (1-|z|^2) K_z(w) / n");
  k->add_flag("--exact", kernel.exact, "Exact rational evaluation at rational points");
  add_output(k, kernel.out, {"text", "json"});

  BerezinArgs berezin;
  auto* b = app.add_subcommand("berezin", "Berezin transforms of a polynomial symbol on a grid");
  b->add_option("--symbol", berezin.symbol, "Symbol in z and zbar, e.g. '1 - z*zbar'")->required();
  b->add_option("--n", berezin.orders, "Polyanalytic transform B for these orders (default 2)")->delimiter(',');
  b->add_option("--alpha", berezin.alphas, "Weighted transforms B_alpha for these weights")->delimiter(',');
  b->add_option("--z", berezin.points, "Evaluation points")->delimiter(',');
  b->add_option("--grid-radius", berezin.grid_radius, "Outer radius of the polar grid")->capture_default_str();
  b->add_option("--grid-rings", berezin.grid_rings, "Number of rings (0: no grid)")->capture_default_str();
  b->add_option("--grid-spokes", berezin.grid_spokes, "Points per ring")->capture_default_str();
  b->add_option("--radial", berezin.radial, "Radial quadrature nodes (default: per-point rule)");
  b->add_option("--angular", berezin.angular, "Angular quadrature nodes (default: per-point rule)");
  add_output(b, berezin.out, {"json", "csv"});

  ToeplitzArgs toeplitz;
  auto* t = app.add_subcommand("toeplitz", "Truncated Toeplitz matrices, products and commutators");
  t->add_option("--symbol", toeplitz.symbol, "Symbol u in z and zbar")->required();
  t->add_option("--with", toeplitz.with, "Second symbol v for product/commutator/semicommutator");
  t->add_option("--op", toeplitz.op, "matrix: T_u; product: T_u T_v; commutator: [T_u, T_v]; semicommutator: T_u T_v - T_uv")
      ->check(CLI::IsMember({"matrix", "product", "commutator", "semicommutator"}))
      ->capture_default_str();
  t->add_option("--n", toeplitz.n, "Polyanalytic order")->capture_default_str();
  t->add_option("--D", toeplitz.cap, "Degree cap")->capture_default_str();
  t->add_option("--tol", toeplitz.tol, "Relative singular value threshold for ranks")->capture_default_str();
  t->add_flag("--entries", toeplitz.entries, "Include the matrix entries in the JSON report");
  add_output(t, toeplitz.out, {"json", "csv"});

  QScanArgs qscan;
  auto* q = app.add_subcommand("qscan", "Certified roots of Q(t) and their position relative to Omega_inf");
  q->add_option("--from", qscan.from, "First order n")->capture_default_str();
  q->add_option("--to", qscan.to, "Last order n")->capture_default_str();
  q->add_flag("--certify", qscan.certify, "Exit 1 unless every verdict is all_outside");
  q->add_flag("--serial", qscan.serial, "Use the single-threaded scan");
  q->add_option("--bits", qscan.bits, "Initial working precision in bits (default 100, env POLYBERGMAN_ROOT_BITS)");
  add_output(q, qscan.out, {"json", "csv"});

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run a bundled verification suite");
  v->add_option("--suite", verify.suite, "Suite name")->check(CLI::IsMember(pb::suite_names()))->capture_default_str();
  v->add_flag("--timings", verify.timings, "Report the time taken by each check");
  add_output(v, verify.out, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (k->parsed()) return run_kernel(kernel);
    if (b->parsed()) return run_berezin(berezin);
    if (t->parsed()) return run_toeplitz(toeplitz);
    if (q->parsed()) return run_qscan(qscan);
    if (v->parsed()) return run_verify(verify);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}
