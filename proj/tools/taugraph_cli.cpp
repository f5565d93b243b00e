// taugraph_cli: generate graph families, compute tau / Kirchhoff / spectra,
// reproduce the reference tables and run the invariant suites.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "taugraph/json_io.hpp"
#include "taugraph/taugraph.hpp"

namespace {

using namespace taugraph;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

struct GraphInput {
  std::string family;
  std::string input;
  std::size_t n = 0, m = 0, a = 0, b = 0, c = 0;
};

struct ComputeOptions {
  std::string method = "auto";
  std::size_t size_limit = kDenseSizeLimit;
  bool allow_large = false;
  bool normalized = false;
  std::size_t base = 0;
  std::uint64_t seed = 1;
  std::size_t probes = 64;
};

struct OutputOptions {
  std::string format = "text";
  std::string path;
};

void add_graph_options(CLI::App* cmd, GraphInput& in) {
  cmd->add_option("family", in.family, "hex | mm | tt | circle | complete | path")
      ->check(CLI::IsMember({"hex", "mm", "tt", "circle", "complete", "path"}));
  cmd->add_option("--n", in.n, "hex: n; circle/path: edge count; complete: vertex count");
  cmd->add_option("--m", in.m, "hex: m");
  cmd->add_option("--a", in.a, "mm/tt: a");
  cmd->add_option("--b", in.b, "mm/tt: b");
  cmd->add_option("--c", in.c, "tt: c");
}

void add_output_options(CLI::App* cmd, OutputOptions& out, std::vector<std::string> formats) {
  cmd->add_option("--format", out.format, "output format")->check(CLI::IsMember(std::move(formats)));
  cmd->add_option("-o,--output", out.path, "write the result to this file instead of stdout");
}

void add_compute_options(CLI::App* cmd, ComputeOptions& opt) {
  cmd->add_option("--method", opt.method, "auto | fixed_point | trace | special | analytic")
      ->check(CLI::IsMember({"auto", "fixed_point", "trace", "special", "analytic"}));
  cmd->add_option("--size-limit", opt.size_limit, "vertex cap for dense routes")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 40));
  cmd->add_flag("--allow-large", opt.allow_large, "enable iterative / stochastic routes above the size limit");
  cmd->add_option("--seed", opt.seed, "seed for stochastic probes");
  cmd->add_option("--probes", opt.probes, "Hutchinson probe count")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
}

MetrizedGraph family_graph(const GraphInput& in) {
  if (in.family == "hex") return hexagonal_torus({in.n, in.m});
  if (in.family == "mm") {
    if (in.a == 2 || in.b == 2) std::cerr << "warning: MM(a,b) is stated for a, b > 2\n";
    return mm_graph({in.a, in.b});
  }
  if (in.family == "tt") return tt_graph({in.a, in.b, in.c});
  if (in.family == "circle") return circle(in.n);
  if (in.family == "complete") return complete(in.n);
  if (in.family == "path") return path_graph(in.n);
  throw Error(ErrorCode::ParameterOutOfRange, "unknown family '" + in.family + "'");
}

MetrizedGraph resolve_graph(const GraphInput& in) {
  if (!in.input.empty() && !in.family.empty()) {
    throw Error(ErrorCode::ParameterOutOfRange, "give either a family or --input, not both");
  }
  if (!in.input.empty()) return read_edge_list_file(in.input);
  if (in.family.empty()) throw Error(ErrorCode::ParameterOutOfRange, "a family or --input is required");
  return family_graph(in);
}

void emit(const OutputOptions& out, const std::string& text) {
  if (out.path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out.path);
  if (!f) throw Error(ErrorCode::IoError, "cannot open '" + out.path + "' for writing");
  f << text;
  if (!f) throw Error(ErrorCode::IoError, "write to '" + out.path + "' failed");
}

std::string reciprocal_cell(double tau) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "1/%.5f", 1.0 / tau);
  return buf;
}

std::string decimal(double x, int digits = 12) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

TauMethod parse_method(const std::string& m) {
  if (m == "fixed_point") return TauMethod::FixedPoint;
  if (m == "trace") return TauMethod::Trace;
  if (m == "special") return TauMethod::Special;
  return TauMethod::Analytic;
}

TauResult scale_result(TauResult r, double factor) {
  r.tau *= factor;
  r.first_term *= factor;
  r.second_term *= factor;
  r.total_length *= factor;
  return r;
}

void progress(std::size_t done, std::size_t total) {
  if (done == total || done % 256 == 0) std::cerr << "\r  solves " << done << "/" << total << (done == total ? "\n" : "") << std::flush;
}

/// Picks and runs a tau route for g. `hex` is set when g is a generated H(n,m).
TauResult run_tau(const MetrizedGraph& g, std::optional<HexTorusSpec> hex, const ComputeOptions& opt) {
  if (opt.method == "analytic") {
    if (!hex) throw Error(ErrorCode::PreconditionNotMet, "the analytic route only covers generated hex tori");
    return scale_result(tau_hex_analytic(hex->n, hex->m), g.total_length());
  }
  const MetrizedGraph ag = make_adequate(g);
  const std::size_t v = ag.vertex_count();
  if (v <= opt.size_limit) {
    const TauMethod method = opt.method == "auto" ? TauMethod::Trace : parse_method(opt.method);
    return compute_tau(ag, method, opt.base);
  }
  if (opt.method == "auto" && hex) {
    return scale_result(tau_hex_analytic(hex->n, hex->m), g.total_length());
  }
  if (!opt.allow_large) {
    throw Error(ErrorCode::TooLargeForMethod,
                std::to_string(v) + " vertices exceed the dense limit " + std::to_string(opt.size_limit) +
                    "; raise --size-limit, pass --allow-large for the iterative routes, or use --method analytic for hex");
  }
  if (opt.method == "special") {
    LargeSpecialOptions lo;
    lo.probes = opt.probes;
    lo.seed = opt.seed;
    return tau_special_large(ag, lo);
  }
  if (opt.method == "fixed_point") {
    throw Error(ErrorCode::TooLargeForMethod, "fixed_point needs the dense pseudo-inverse; use trace or special");
  }
  std::cerr << "large route: one conjugate-gradient solve per vertex\n";
  return tau_trace_iterative(ag, {}, progress);
}

std::string tau_text(const TauResult& r) {
  std::ostringstream os;
  os << "tau          = " << decimal(r.tau) << "  (" << reciprocal_cell(r.tau) << ")\n"
     << "first_term   = " << decimal(r.first_term) << "\n"
     << "second_term  = " << decimal(r.second_term) << "\n"
     << "method       = " << to_string(r.method) << "\n"
     << "v, e, genus  = " << r.vertex_count << ", " << r.edge_count << ", " << r.genus << "\n"
     << "normalized   = " << (r.normalized() ? "true" : "false") << "\n"
     << "genus_resid  = " << decimal(r.diagnostics.genus_residual, 3) << "\n"
     << "bridges      = " << r.diagnostics.bridge_count << "\n";
  if (r.diagnostics.trace_ci_halfwidth) os << "tau_ci95     = +/-" << decimal(*r.diagnostics.trace_ci_halfwidth, 3) << "\n";
  if (!r.diagnostics.special_conditions_report.empty()) os << "special      = " << r.diagnostics.special_conditions_report << "\n";
  return os.str();
}

std::string tau_csv(const TauResult& r) {
  std::ostringstream os;
  os.precision(17);
  os << "tau,first_term,second_term,method,v,e,genus,normalized\n"
     << r.tau << "," << r.first_term << "," << r.second_term << "," << to_string(r.method) << "," << r.vertex_count
     << "," << r.edge_count << "," << r.genus << "," << (r.normalized() ? "true" : "false") << "\n";
  return os.str();
}

int cmd_generate(const GraphInput& in, const std::string& path) {
  if (in.family.empty()) throw Error(ErrorCode::ParameterOutOfRange, "generate needs a family");
  const MetrizedGraph g = family_graph(in);
  std::ostringstream summary;
  summary << "v=" << g.vertex_count() << " e=" << g.edge_count() << " genus=" << g.genus();
  std::vector<std::string> comments{in.family + " " + summary.str()};
  if (path.empty()) {
    write_edge_list(std::cout, g, comments);
    std::cerr << summary.str() << "\n";
  } else {
    write_edge_list_file(path, g, comments);
    std::cout << summary.str() << "\n";
  }
  return kExitOk;
}

int cmd_tau(const GraphInput& in, const ComputeOptions& opt, const OutputOptions& out) {
  MetrizedGraph g = resolve_graph(in);
  std::optional<HexTorusSpec> hex;
  if (in.family == "hex") hex = HexTorusSpec{in.n, in.m};
  if (opt.normalized) g = normalize(g);
  const TauResult r = run_tau(g, hex, opt);
  if (out.format == "json") emit(out, to_json(r).dump(2) + "\n");
  else if (out.format == "csv") emit(out, tau_csv(r));
  else emit(out, tau_text(r));
  return kExitOk;
}

int cmd_kirchhoff(const GraphInput& in, const ComputeOptions& opt, const OutputOptions& out) {
  MetrizedGraph g = resolve_graph(in);
  if (opt.normalized) g = normalize(g);
  const MetrizedGraph ag = make_adequate(g);
  if (ag.vertex_count() > opt.size_limit) {
    throw Error(ErrorCode::TooLargeForMethod, "Kirchhoff index uses the dense route; raise --size-limit");
  }
  const Analysis an = analyze(ag);
  const double kf = kirchhoff_index(an.pinv);
  if (out.format == "json") {
    Json j;
    j["kirchhoff_index"] = kf;
    j["trace_pinv"] = an.pinv.trace();
    j["v"] = ag.vertex_count();
    j["e"] = ag.edge_count();
    emit(out, j.dump(2) + "\n");
  } else if (out.format == "csv") {
    emit(out, "kirchhoff_index,trace_pinv,v,e\n" + decimal(kf, 17) + "," + decimal(an.pinv.trace(), 17) + "," +
                  std::to_string(ag.vertex_count()) + "," + std::to_string(ag.edge_count()) + "\n");
  } else {
    emit(out, "Kf = " + decimal(kf) + "\ntr(L+) = " + decimal(an.pinv.trace()) + "\n");
  }
  return kExitOk;
}

struct SpectrumOptions {
  std::string dump_laplacian, dump_pinv, matrix_format = "dense";
  bool analytic = false;
};

int cmd_spectrum(const GraphInput& in, const ComputeOptions& opt, const SpectrumOptions& so, const OutputOptions& out) {
  std::vector<double> values;
  if (so.analytic) {
    if (in.family != "hex") throw Error(ErrorCode::PreconditionNotMet, "--analytic needs the hex family");
    values = hex_eigenvalues(in.n, in.m).eigenvalues;
  } else {
    MetrizedGraph g = resolve_graph(in);
    if (opt.normalized) g = normalize(g);
    const DiscreteLaplacian lap(g);
    if (lap.dimension() > opt.size_limit) throw Error(ErrorCode::TooLargeForMethod, "spectrum uses a dense eigensolver");
    const Eigen::VectorXd ev = laplacian_spectrum(lap);
    values.assign(ev.data(), ev.data() + ev.size());
    auto open = [](const std::string& path) {
      std::ofstream f(path);
      if (!f) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
      return f;
    };
    if (!so.dump_laplacian.empty()) {
      auto f = open(so.dump_laplacian);
      if (so.matrix_format == "triplet") write_triplet_matrix(f, lap.sparse());
      else write_dense_matrix(f, lap.dense());
    }
    if (!so.dump_pinv.empty()) {
      auto f = open(so.dump_pinv);
      const PseudoInverse lp = pseudo_inverse(lap);
      if (so.matrix_format == "triplet") write_triplet_matrix(f, lp.entries().sparseView());
      else write_dense_matrix(f, lp.entries());
    }
  }
  std::ostringstream os;
  os.precision(17);
  if (out.format == "json") {
    Json j;
    j["eigenvalues"] = values;
    os << j.dump(2) << "\n";
  } else {
    if (out.format == "csv") os << "eigenvalue\n";
    for (double x : values) os << x << "\n";
  }
  emit(out, os.str());
  return kExitOk;
}

struct TableOptions {
  std::string family;
  std::vector<std::size_t> ns, ms, as, bs, cs;
  std::size_t tt_a = 13;
  bool diff = false;
};

struct Cell {
  std::size_t row = 0, col = 0;
  std::optional<double> tau;
  std::string status;  // "ok", "skipped: ..." or "error: ..."
  std::string method;
  std::optional<double> paper;
};

int cmd_table(TableOptions t, const ComputeOptions& opt, const OutputOptions& out) {
  const ReferenceTable* ref = nullptr;
  const std::vector<std::size_t>& rows = t.family == "hex" ? t.ns : t.family == "mm" ? t.as : t.bs;
  const std::vector<std::size_t>& cols = t.family == "hex" ? t.ms : t.family == "mm" ? t.bs : t.cs;
  if (rows.empty() || cols.empty()) throw Error(ErrorCode::ParameterOutOfRange, "table needs row and column lists");
  std::string row_name, col_name;
  if (t.family == "hex") {
    ref = &hex_reference_table();
    row_name = "n";
    col_name = "m";
  } else if (t.family == "mm") {
    ref = &mm_reference_table();
    row_name = "a";
    col_name = "b";
  } else {
    ref = tt_reference_table(t.tt_a);
    row_name = "b";
    col_name = "c";
  }
  std::vector<Cell> cells;
  for (std::size_t r : rows) {
    for (std::size_t c : cols) {
      Cell cell{r, c, std::nullopt, "ok", "", ref ? ref->lookup(r, c) : std::nullopt};
      std::cerr << "cell (" << r << "," << c << ")\n";
      try {
        TauResult res;
        if (t.family == "hex") {
          if (r < 1 || c < 1) throw Error(ErrorCode::ParameterOutOfRange, "hex table indices start at 1");
          const HexTorusSpec spec{r - 1, c - 1};
          ComputeOptions o = opt;
          if (o.method == "auto") o.method = "analytic";
          res = o.method == "analytic" ? tau_hex_analytic(spec.n, spec.m)
                                       : run_tau(normalize(hexagonal_torus(spec)), spec, o);
        } else if (t.family == "mm") {
          res = run_tau(normalize(mm_graph({r, c})), std::nullopt, opt);
        } else {
          res = run_tau(normalize(tt_graph({t.tt_a, r, c})), std::nullopt, opt);
        }
        cell.tau = res.tau;
        cell.method = to_string(res.method);
      } catch (const Error& e) {
        cell.status = (e.code() == ErrorCode::TooLargeForMethod ? "skipped: " : "error: ") + std::string(e.what());
      }
      cells.push_back(std::move(cell));
    }
  }

  bool mismatch = false;
  auto rel_err = [](const Cell& c) { return std::abs(1.0 / *c.tau - *c.paper) / *c.paper; };
  for (const Cell& c : cells) {
    if (t.diff && c.tau && c.paper && rel_err(c) > 5e-5) mismatch = true;
  }

  std::ostringstream os;
  if (out.format == "json") {
    Json j;
    j["family"] = t.family;
    if (t.family == "tt") j["a"] = t.tt_a;
    Json arr = Json::array();
    for (const Cell& c : cells) {
      Json x;
      x[row_name] = c.row;
      x[col_name] = c.col;
      x["status"] = c.status;
      x["tau"] = c.tau ? Json(*c.tau) : Json();
      x["cell"] = c.tau ? Json(reciprocal_cell(*c.tau)) : Json();
      x["method"] = c.method;
      if (t.diff) {
        x["paper"] = c.paper ? Json("1/" + decimal(*c.paper, 10)) : Json();
        x["rel_error"] = c.tau && c.paper ? Json(rel_err(c)) : Json();
      }
      arr.push_back(std::move(x));
    }
    j["cells"] = std::move(arr);
    os << j.dump(2) << "\n";
  } else if (out.format == "csv") {
    os << row_name << "," << col_name << ",tau,cell,method,status" << (t.diff ? ",paper,rel_error" : "") << "\n";
    os.precision(17);
    for (const Cell& c : cells) {
      os << c.row << "," << c.col << "," << (c.tau ? decimal(*c.tau, 17) : "") << ","
         << (c.tau ? reciprocal_cell(*c.tau) : "") << "," << c.method << "," << (c.status == "ok" ? "ok" : "skipped");
      if (t.diff) {
        os << "," << (c.paper ? decimal(*c.paper, 10) : "") << "," << (c.tau && c.paper ? decimal(rel_err(c), 3) : "");
      }
      os << "\n";
    }
  } else {
    auto pad = [](std::string s, std::size_t w) {
      if (s.size() < w) s.insert(0, w - s.size(), ' ');
      return s;
    };
    constexpr std::size_t w = 14;
    os << pad(row_name + "\\" + col_name, 8);
    for (std::size_t c : cols) os << pad(std::to_string(c), w);
    os << "\n";
    std::size_t k = 0;
    for (std::size_t r : rows) {
      os << pad(std::to_string(r), 8);
      for (std::size_t j = 0; j < cols.size(); ++j, ++k) {
        os << pad(cells[k].tau ? reciprocal_cell(*cells[k].tau) : "skipped", w);
      }
      os << "\n";
    }
    if (t.family == "hex") os << "(cell (n,m) is the normalized H(n-1,m-1))\n";
    for (const Cell& c : cells) {
      if (c.status != "ok") os << "(" << c.row << "," << c.col << ") " << c.status << "\n";
    }
    if (t.diff) {
      os << "diff against published values (tolerance 5e-5 relative):\n";
      for (const Cell& c : cells) {
        os << "  (" << c.row << "," << c.col << ") ";
        if (!c.paper) os << "no published value\n";
        else if (!c.tau) os << "published 1/" << decimal(*c.paper, 10) << ", not computed\n";
        else {
          const double e = rel_err(c);
          os << reciprocal_cell(*c.tau) << " vs 1/" << decimal(*c.paper, 10) << "  rel " << decimal(e, 3)
             << (e > 5e-5 ? "  MISMATCH" : "  ok") << "\n";
        }
      }
    }
  }
  emit(out, os.str());
  return mismatch ? kExitVerification : kExitOk;
}

int cmd_verify(std::vector<std::string> suites, const VerifyOptions& vo, bool verbose, const OutputOptions& out) {
  if (suites.empty()) suites = verify_suite_names();
  std::vector<SuiteReport> reports;
  for (const auto& s : suites) {
    std::cerr << "suite " << s << "\n";
    reports.push_back(run_verify_suite(s, vo));
  }
  bool ok = true;
  std::ostringstream os;
  if (out.format == "json") {
    Json j = Json::array();
    for (const auto& r : reports) {
      Json x;
      x["suite"] = r.suite;
      x["passed"] = r.passed();
      x["checks"] = r.checks.size();
      Json fails = Json::array();
      for (const auto& c : r.checks) {
        if (!c.passed || verbose) fails.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      }
      x["details"] = std::move(fails);
      j.push_back(std::move(x));
      ok = ok && r.passed();
    }
    os << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      ok = ok && r.passed();
      os << (r.passed() ? "[PASS] " : "[FAIL] ") << r.suite << ": " << (r.checks.size() - r.failures()) << "/"
         << r.checks.size() << " checks\n";
      for (const auto& c : r.checks) {
        if (!c.passed || verbose) os << "    " << (c.passed ? "ok   " : "FAIL ") << c.name << "  " << c.detail << "\n";
      }
    }
    if (!ok) os << "VerificationFailed\n";
  }
  emit(out, os.str());
  return ok ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tau constants, resistances and Kirchhoff indices of metrized graphs"};
  app.require_subcommand(1);
  std::string threads = "auto";
  app.add_option("--threads", threads, "worker threads (auto or a count; results do not depend on it)")
      ->check([](const std::string& s) -> std::string {
        if (s == "auto") return {};
        return s.find_first_not_of("0123456789") == std::string::npos && !s.empty() && std::stoul(s) > 0
                   ? std::string{}
                   : std::string{"expected 'auto' or a positive integer"};
      });

  GraphInput gen_in;
  std::string gen_out;
  auto* gen = app.add_subcommand("generate", "write a family as a CSV edge list");
  add_graph_options(gen, gen_in);
  gen->add_option("-o,--output", gen_out, "edge-list path (stdout when omitted)");

  GraphInput tau_in;
  ComputeOptions tau_opt;
  OutputOptions tau_out;
  auto* tau = app.add_subcommand("tau", "tau constant of a family or an edge-list file");
  add_graph_options(tau, tau_in);
  tau->add_option("--input", tau_in.input, "CSV edge-list file")->check(CLI::ExistingFile);
  tau->add_flag("--normalized", tau_opt.normalized, "scale to total length 1 first");
  tau->add_option("--base", tau_opt.base, "base vertex for fixed_point");
  add_compute_options(tau, tau_opt);
  add_output_options(tau, tau_out, {"text", "json", "csv"});

  GraphInput kf_in;
  ComputeOptions kf_opt;
  OutputOptions kf_out;
  auto* kf = app.add_subcommand("kirchhoff", "Kirchhoff index v tr(L+)");
  add_graph_options(kf, kf_in);
  kf->add_option("--input", kf_in.input, "CSV edge-list file")->check(CLI::ExistingFile);
  kf->add_flag("--normalized", kf_opt.normalized, "scale to total length 1 first");
  kf->add_option("--size-limit", kf_opt.size_limit, "vertex cap for the dense route")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 40));
  add_output_options(kf, kf_out, {"text", "json", "csv"});

  GraphInput sp_in;
  ComputeOptions sp_opt;
  SpectrumOptions sp_so;
  OutputOptions sp_out;
  auto* sp = app.add_subcommand("spectrum", "Laplacian eigenvalues, optional matrix dumps");
  add_graph_options(sp, sp_in);
  sp->add_option("--input", sp_in.input, "CSV edge-list file")->check(CLI::ExistingFile);
  sp->add_flag("--normalized", sp_opt.normalized, "scale to total length 1 first");
  sp->add_flag("--analytic", sp_so.analytic, "closed-form eigenvalues (hex only)");
  sp->add_option("--size-limit", sp_opt.size_limit, "vertex cap for the dense route")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 40));
  sp->add_option("--dump-laplacian", sp_so.dump_laplacian, "write L to this file");
  sp->add_option("--dump-pinv", sp_so.dump_pinv, "write L+ to this file");
  sp->add_option("--matrix-format", sp_so.matrix_format, "dense | triplet")->check(CLI::IsMember({"dense", "triplet"}));
  add_output_options(sp, sp_out, {"text", "json", "csv"});

  TableOptions tb;
  ComputeOptions tb_opt;
  OutputOptions tb_out;
  auto* table = app.add_subcommand("table", "reference tables; hex cells use (n,m) -> H(n-1,m-1)");
  table->add_option("family", tb.family, "hex | mm | tt")->required()->check(CLI::IsMember({"hex", "mm", "tt"}));
  table->add_option("--ns", tb.ns, "hex rows n")->delimiter(',');
  table->add_option("--ms", tb.ms, "hex columns m")->delimiter(',');
  table->add_option("--as", tb.as, "mm rows a")->delimiter(',');
  table->add_option("--bs", tb.bs, "mm columns b, tt rows b")->delimiter(',');
  table->add_option("--cs", tb.cs, "tt columns c")->delimiter(',');
  table->add_option("--a", tb.tt_a, "tt depth a");
  table->add_flag("--diff", tb.diff, "compare with the published values");
  add_compute_options(table, tb_opt);
  add_output_options(table, tb_out, {"text", "json", "csv"});

  std::vector<std::string> suites;
  VerifyOptions vo;
  bool verbose = false;
  OutputOptions vo_out;
  auto* verify = app.add_subcommand("verify", "run the invariant suites");
  verify->add_option("--suite", suites, "trig | bounds | genus | methods | subdivision | spectrum (repeatable)")
      ->check(CLI::IsMember(verify_suite_names()));
  verify->add_option("--n-max", vo.n_max, "largest n for the analytic sweeps")->check(CLI::Range(2, 500));
  verify->add_option("--seed", vo.seed, "seed for the random graph pool");
  verify->add_option("--random-graphs", vo.random_graphs, "random bridgeless graphs in the pool");
  verify->add_option("--max-vertices", vo.max_vertices, "vertex cap of random graphs")->check(CLI::Range(4, 200));
  verify->add_flag("-v,--verbose", verbose, "list passing checks too");
  add_output_options(verify, vo_out, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) return cmd_generate(gen_in, gen_out);
    if (*tau) return cmd_tau(tau_in, tau_opt, tau_out);
    if (*kf) return cmd_kirchhoff(kf_in, kf_opt, kf_out);
    if (*sp) return cmd_spectrum(sp_in, sp_opt, sp_so, sp_out);
    if (*table) return cmd_table(tb, tb_opt, tb_out);
    if (*verify) return cmd_verify(suites, vo, verbose, vo_out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::VerificationFailed ? kExitVerification : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
