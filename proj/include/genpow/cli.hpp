#pragma once

// Command-line front end. Exit codes: 0 success, 1 a reported check failed,
// 2 usage or input error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "genpow/constructions.hpp"
#include "genpow/enumeration.hpp"
#include "genpow/experiments.hpp"
#include "genpow/io.hpp"
#include "genpow/matrix_spectral.hpp"
#include "genpow/parity.hpp"
#include "genpow/tensor.hpp"

namespace genpow {

namespace cli {

enum ExitCode : int { ok = 0, check_failed = 1, usage_error = 2 };

struct CommonFlags {
  double tol = 1e-10;
  std::size_t max_iter = 1'000'000;
  std::string in;
  std::string out;
  std::string format = "text";
  bool big = false;
};

inline std::string read_file(const std::string& path) {
  if (path.empty()) throw std::invalid_argument("--in is required");
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline bool is_hypergraph_text(const std::string& text) {
  auto lines = detail::tokenize(text);
  return !lines.empty() && lines.front().tokens.front() == "hypergraph";
}

class Output {
public:
  Output(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::invalid_argument("cannot write " + path);
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

private:
  std::ofstream file_;
  std::ostream* out_;
};

inline void emit(const ExperimentReport& r, const CommonFlags& f, std::ostream& stdout_) {
  Output o(f.out, stdout_);
  if (f.format == "csv")
    write_csv(o.stream(), r);
  else
    write_text(o.stream(), r);
}

inline TensorKind tensor_kind(const std::string& op) {
  return op == "adjacency" ? TensorKind::adjacency : TensorKind::signless_laplacian;
}

inline MatrixKind matrix_kind(const std::string& op) {
  return op == "adjacency" ? MatrixKind::adjacency : MatrixKind::signless_laplacian;
}

inline std::vector<std::size_t> parse_k_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad --k-list entry '" + item + "'");
    out.push_back(std::stoul(item));
  }
  if (out.empty()) throw std::invalid_argument("--k-list is empty");
  return out;
}

} // namespace cli

// args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
  using namespace cli;
  CLI::App app{"Generalized power hypergraphs: construction, odd-bipartiteness and spectral radii", "genpow"};
  app.require_subcommand(1);

  CommonFlags f;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", f.tol, "Relative tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--max-iter", f.max_iter, "Iteration cap")->check(CLI::PositiveNumber);
    sub->add_option("--in", f.in, "Input file");
    sub->add_option("--out", f.out, "Output file (default: standard output)");
    sub->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"text", "csv"}));
    sub->add_flag("--big", f.big, "Allow n=8 enumeration");
  };
  const std::vector<std::string> operators{"adjacency", "signless-laplacian"};

  std::size_t k = 0, s = 0, d = 0, n = 0, u = 0, w = 0, limit_n_max = 40, converge_n_max = 50, nob_n_max = 7;
  std::string op = "adjacency", k_list = "4,6";

  auto* power = app.add_subcommand("power", "Build G^{k,s} from a graph file");
  add_common(power);
  power->add_option("--k", k, "Edge size")->required();
  power->add_option("--s", s, "Vertex block size (default k/2)");

  auto* spath = app.add_subcommand("spath", "Build an s-path");
  auto* scycle = app.add_subcommand("scycle", "Build an s-cycle");
  for (auto* sub : {spath, scycle}) {
    add_common(sub);
    sub->add_option("--k", k, "Edge size")->required();
    sub->add_option("--s", s, "Overlap")->required();
    sub->add_option("--d", d, "Length")->required();
  }

  auto* oddbip = app.add_subcommand("oddbip", "Decide odd-bipartiteness (bipartiteness for graph files)");
  add_common(oddbip);

  auto* rho = app.add_subcommand("rho", "Spectral radius of a hypergraph tensor or graph matrix");
  auto* bounds = app.add_subcommand("bounds", "Row-sum bounds on the spectral radius");
  for (auto* sub : {rho, bounds}) {
    add_common(sub);
    sub->add_option("--operator", op, "adjacency or signless-laplacian")->check(CLI::IsMember(operators));
  }

  auto* subdiv = app.add_subcommand("subdivide", "Subdivide the edge {u,w} of a graph");
  add_common(subdiv);
  subdiv->add_option("--u", u, "Endpoint")->required();
  subdiv->add_option("--w", w, "Endpoint")->required();

  auto* minrho = app.add_subcommand("minrho", "Minimum spectral radius over connected non-bipartite graphs");
  add_common(minrho);
  minrho->add_option("--n", n, "Order")->required();
  minrho->add_option("--operator", op, "adjacency or signless-laplacian")->check(CLI::IsMember(operators));

  auto* limits = app.add_subcommand("limitpoints", "Limit points alpha_n below sqrt(2+sqrt5)");
  auto* converge = app.add_subcommand("converge", "Convergence of rho(C_{2n+1}+e) to sqrt(2+sqrt5)");
  auto* nob = app.add_subcommand("verify-nob", "Check lift odd-bipartiteness against base bipartiteness");
  for (auto* sub : {limits, converge, nob}) add_common(sub);
  limits->add_option("--n-max", limit_n_max, "Largest n")->capture_default_str();
  converge->add_option("--n-max", converge_n_max, "Largest n")->capture_default_str();
  nob->add_option("--n-max", nob_n_max, "Largest order")->capture_default_str();
  nob->add_option("--k-list", k_list, "Comma-separated even k values");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return usage_error;
  }

  try {
    const MatrixOptions mopt{f.tol, f.max_iter};
    const PowerOptions popt{f.tol, f.max_iter, 1.0};

    if (power->parsed()) {
      auto g = parse_graph(read_file(f.in));
      auto gp = generalized_power(g, k, s == 0 ? k / 2 : s);
      Output(f.out, out).stream() << serialize_hypergraph(gp.hypergraph);
      return ok;
    }
    if (spath->parsed() || scycle->parsed()) {
      auto h = spath->parsed() ? s_path(k, s, d) : s_cycle(k, s, d);
      Output(f.out, out).stream() << serialize_hypergraph(h);
      return ok;
    }
    if (subdiv->parsed()) {
      auto g = parse_graph(read_file(f.in));
      Output(f.out, out).stream() << serialize_graph(subdivide(g, u, w));
      return ok;
    }
    if (oddbip->parsed()) {
      auto text = read_file(f.in);
      Output o(f.out, out);
      auto print_parts = [&](const Bipartition& b) {
        for (const auto* part : {&b.part_one, &b.part_two}) {
          for (std::size_t i = 0; i < part->size(); ++i) o.stream() << (i ? " " : "") << (*part)[i];
          o.stream() << '\n';
        }
      };
      if (is_hypergraph_text(text)) {
        auto b = odd_bipartition(parse_hypergraph(text));
        o.stream() << (b ? "odd-bipartite" : "non-odd-bipartite") << '\n';
        if (b) print_parts(*b);
      } else {
        auto b = is_bipartite(parse_graph(text));
        o.stream() << (b ? "bipartite" : "non-bipartite") << '\n';
        if (b) print_parts(*b);
      }
      return ok;
    }
    if (rho->parsed()) {
      auto text = read_file(f.in);
      double value = 0, lower = 0, upper = 0;
      std::size_t iterations = 0;
      bool converged = true;
      if (is_hypergraph_text(text)) {
        auto h = parse_hypergraph(text);
        if (is_connected(h)) {
          auto res = power_iteration_rho(ImplicitTensor::of(tensor_kind(op), h), popt);
          value = res.rho, lower = res.lower, upper = res.upper, iterations = res.iterations;
          converged = res.converged;
        } else {
          auto b = spectral_radius_bracket(h, tensor_kind(op), popt, &converged);
          value = 0.5 * (b.lower + b.upper), lower = b.lower, upper = b.upper;
        }
      } else {
        auto res = rho_matrix(parse_graph(text), matrix_kind(op), mopt);
        value = res.rho, lower = res.lower, upper = res.upper, iterations = res.iterations;
        converged = res.converged;
      }
      Output o(f.out, out);
      if (f.format == "csv") {
        o.stream() << "operator,rho,lower,upper,iterations,converged\n"
                   << op << ',' << format_number(value) << ',' << format_number(lower) << ','
                   << format_number(upper) << ',' << iterations << ',' << (converged ? "yes" : "no") << '\n';
      } else {
        o.stream() << "operator " << op << "\nrho " << format_number(value) << "\nbracket [" << format_number(lower)
                   << ", " << format_number(upper) << "]\niterations " << iterations << "\nconverged "
                   << (converged ? "yes" : "no") << '\n';
      }
      return converged ? ok : check_failed;
    }
    if (bounds->parsed()) {
      auto text = read_file(f.in);
      auto h = is_hypergraph_text(text) ? parse_hypergraph(text) : as_hypergraph(parse_graph(text));
      auto b = rho_bounds(ImplicitTensor::of(tensor_kind(op), h));
      Output o(f.out, out);
      if (f.format == "csv")
        o.stream() << "operator,min_row_sum,max_row_sum\n"
                   << op << ',' << format_number(b.lower) << ',' << format_number(b.upper) << '\n';
      else
        o.stream() << "operator " << op << "\nmin_row_sum " << format_number(b.lower) << "\nmax_row_sum "
                   << format_number(b.upper) << '\n';
      return ok;
    }

    ExperimentReport report;
    if (minrho->parsed())
      report = min_rho_report(n, matrix_kind(op), mopt, -1.0, f.big);
    else if (limits->parsed())
      report = limit_point_report(limit_n_max);
    else if (converge->parsed())
      report = convergence_report(converge_n_max, f.tol);
    else if (nob->parsed())
      report = verify_theorem_nob(nob_n_max, parse_k_list(k_list), f.big);
    emit(report, f, out);
    return report.passed() ? ok : check_failed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
}

inline int run_cli(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return run_cli(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

} // namespace genpow
