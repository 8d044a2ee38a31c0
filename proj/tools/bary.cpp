// Command-line surface for the refinement library: refine graphs, dump
// operators and spectra, measure gaps and convergence, classify topology.
#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "bary/baryop.hpp"
#include "bary/clique.hpp"
#include "bary/graph.hpp"
#include "bary/refine.hpp"
#include "bary/spectra.hpp"
#include "bary/stepfun.hpp"
#include "bary/topology.hpp"
#include "svg.hpp"

namespace {

using namespace bary;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSizeGuard = 3;

// Generator mini-language: K3, C12, P5, W6, star:n=5, cross:d=4,
// octahedron, icosahedron, ER:n=10,p=0.4,seed=7.
Graph parse_generator(const std::string& spec) {
  auto num = [&](std::size_t from) { return std::stoi(spec.substr(from)); };
  if (spec == "octahedron") return cross_polytope(2);
  if (spec == "icosahedron") return icosahedron();
  if (spec.rfind("cross:d=", 0) == 0) return cross_polytope(num(8));
  if (spec.rfind("star:n=", 0) == 0) return star_graph(num(7));
  if (spec.rfind("ER:", 0) == 0) {
    int n = -1;
    double p = -1;
    std::uint64_t seed = 0;
    std::stringstream ss(spec.substr(3));
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (part.rfind("n=", 0) == 0) n = std::stoi(part.substr(2));
      else if (part.rfind("p=", 0) == 0) p = std::stod(part.substr(2));
      else if (part.rfind("seed=", 0) == 0) seed = std::stoull(part.substr(5));
      else throw std::invalid_argument("bad ER parameter: " + part);
    }
    return erdos_renyi(n, p, seed);
  }
  if (spec.size() >= 2) {
    switch (spec[0]) {
      case 'K': return complete_graph(num(1));
      case 'C': return cycle_graph(num(1));
      case 'P': return path_graph(num(1));
      case 'W': return wheel_graph(num(1));
      default: break;
    }
  }
  throw std::invalid_argument("unknown generator spec: " + spec);
}

struct Input {
  std::string gen;
  std::string file;

  Graph load() const {
    if (!gen.empty()) return parse_generator(gen);
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open " + file);
    std::stringstream buf;
    buf << in.rdbuf();
    if (!file.ends_with(".json")) return from_text(buf.str());
    return from_json(buf.str());
  }

  void attach(CLI::App* cmd) {
    auto* g = cmd->add_option("--gen", gen, "generator spec (K3, C12, ...)");
    auto* f = cmd->add_option("--input", file, "graph file (text or .json)");
    g->excludes(f);
  }
};

RefineOptions refine_options(const std::string& cache, long long limit) {
  RefineOptions opt;
  if (!cache.empty())
    opt.cache_dir = cache;
  else if (const char* env = std::getenv("BARY_CACHE_DIR"))
    opt.cache_dir = env;
  if (limit > 0) opt.size_limit = limit;
  return opt;
}

void dump_spectrum_csv(std::ostream& os, const Spectrum& s) {
  os << "index,eigenvalue\n" << std::setprecision(17);
  for (std::size_t i = 0; i < s.values.size(); ++i)
    os << i << "," << s.values[i] << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Barycentric refinement toolkit"};
  app.require_subcommand(1);

  std::string cache, output, svg_path;
  long long limit = 0;
  app.add_option("--cache", cache, "refinement cache directory")
      ->envname("BARY_CACHE_DIR");
  app.add_option("--limit", limit, "size-guard override (vertex count)");

  Input in;

  auto* c_refine = app.add_subcommand("refine", "iterated refinement report");
  int m = 1;
  in.attach(c_refine);
  c_refine->add_option("-m", m, "refinement depth");
  c_refine->add_option("--output", output, "write G_m in graph text format");

  auto* c_spec = app.add_subcommand("spectrum", "eigenvalues and F_G");
  in.attach(c_spec);
  int spec_m = 0, grid = 0;
  std::string fn_csv;
  c_spec->add_option("-m", spec_m, "refine before solving");
  c_spec->add_option("--output", output, "CSV spectrum path (default stdout)");
  c_spec->add_option("--fn-csv", fn_csv, "also dump x,F(x) samples");
  c_spec->add_option("--grid", grid, "sample count for --fn-csv");
  c_spec->add_option("--svg", svg_path, "step plot; overlays the d=1 limit "
                                        "for clique number 2");

  auto* c_op = app.add_subcommand("operator", "dump or verify the operator");
  int trunc = 8;
  bool eigvec = false, as_json = false;
  std::string verify_spec;
  c_op->add_option("-N", trunc, "truncation order");
  c_op->add_flag("--eigenvectors", eigvec, "print left eigenvectors");
  c_op->add_flag("--json", as_json, "JSON array-of-rows output");
  c_op->add_option("--verify", verify_spec,
                   "check A v(G) = v(G_1) for a graph file or generator spec");

  auto* c_gaps = app.add_subcommand("gaps", "largest spectral jumps");
  in.attach(c_gaps);
  int gaps_m = 0, top = 8;
  c_gaps->add_option("-m", gaps_m, "refine before solving");
  c_gaps->add_option("--top", top, "how many jumps");

  auto* c_conv = app.add_subcommand("converge", "L1 distances along refinement");
  in.attach(c_conv);
  int depth = 4;
  c_conv->add_option("-M", depth, "deepest refinement");

  auto* c_cls = app.add_subcommand("classify", "topology verdicts");
  in.attach(c_cls);
  long long budget = 1000000;
  c_cls->add_option("--budget", budget, "search node budget");

  auto* c_inv = app.add_subcommand("invariants", "X_f(G) table");
  in.attach(c_inv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (*c_refine) {
    auto g = in.load();
    auto r = refine_iter(g, m, refine_options(cache, limit));
    if (!output.empty()) {
      std::ofstream out(output);
      out << to_text(r.graph);
    }
    auto v = clique_vector(r.graph);
    std::cout << "vertices " << r.graph.order() << "\n"
              << "clique_vector " << to_string(v) << "\n"
              << "euler_characteristic " << euler_characteristic(r.graph)
              << "\n";
    if (r.graph.order() <= 500)
      std::cout << "dimension " << dimension(r.graph).get_str() << "\n";
    return kExitOk;
  }

  if (*c_spec) {
    auto g = refine_iter(in.load(), spec_m, refine_options(cache, limit));
    auto s = eigenvalues(kirchhoff(g.graph));
    if (output.empty()) {
      dump_spectrum_csv(std::cout, s);
    } else {
      std::ofstream out(output);
      dump_spectrum_csv(out, s);
    }
    auto f = spectral_function(s);
    if (!fn_csv.empty()) {
      std::ofstream out(fn_csv);
      out << "x,F\n" << std::setprecision(17);
      int samples = grid > 0 ? grid : static_cast<int>(s.values.size());
      for (int i = 1; i <= samples; ++i) {
        double x = static_cast<double>(i) / samples;
        out << x << "," << f(x) << "\n";
      }
    }
    if (!svg_path.empty()) {
      SvgPlot plot(s.values.back());
      plot.add_step(f, "steelblue");
      if (clique_number(g.graph) == 2) plot.add_curve(limit_d1, "crimson");
      plot.write(svg_path);
    }
    return kExitOk;
  }

  if (*c_op) {
    if (!verify_spec.empty()) {
      Graph g;
      std::ifstream file(verify_spec);
      if (file) {
        std::stringstream buf;
        buf << file.rdbuf();
        g = from_text(buf.str());
      } else {
        g = parse_generator(verify_spec);
      }
      auto v = clique_vector(g);
      auto predicted = predict_clique_vector(v, 1);
      auto actual = clique_vector(barycentric(g).graph);
      bool ok = to_mpz(actual) ==
                predicted;
      std::cout << (ok ? "PASS" : "FAIL") << " A v(G) = v(G_1) for "
                << verify_spec << "\n";
      return ok ? kExitOk : kExitVerification;
    }
    auto a = barycentric_operator(trunc);
    std::cout << (as_json ? to_json(a) + "\n" : to_text(a));
    if (eigvec) {
      for (const auto& [lambda, f] : left_eigenvectors(a)) {
        std::cout << "lambda " << lambda.get_str() << " :";
        for (const auto& x : f) std::cout << " " << x.get_str();
        std::cout << "\n";
      }
    }
    return kExitOk;
  }

  if (*c_gaps) {
    auto g = refine_iter(in.load(), gaps_m, refine_options(cache, limit));
    auto s = eigenvalues(kirchhoff(g.graph));
    std::cout << "position,jump\n" << std::setprecision(8);
    for (const auto& gap : gaps(s, top))
      std::cout << gap.position << "," << gap.jump << "\n";
    return kExitOk;
  }

  if (*c_conv) {
    auto g = in.load();
    auto opt = refine_options(cache, limit);
    std::cout << "m,l1_distance,ratio\n";
    double prev = 0;
    StepFunction last;
    for (int k = 0; k <= depth; ++k) {
      auto gk = refine_iter(g, k, opt);
      auto f = spectral_function(eigenvalues(kirchhoff(gk.graph)));
      if (k > 0) {
        double d = l1_distance(last, f);
        std::cout << k << "," << std::setprecision(8) << d << ",";
        if (prev > 0) std::cout << d / prev;
        std::cout << "\n";
        prev = d;
      }
      last = f;
    }
    return kExitOk;
  }

  if (*c_cls) {
    auto g = in.load();
    auto c = classify(g, budget);
    const char* names[] = {"d-graph", "d-graph-with-boundary", "ball", "none"};
    std::cout << names[static_cast<int>(c.cls)];
    if (c.cls != GraphClass::none) std::cout << " d=" << c.d;
    if (c.certainty == Answer::inconclusive) std::cout << " (inconclusive)";
    std::cout << " nodes=" << c.budget_spent << "\n";
    auto contract = is_contractible(g, budget);
    std::cout << "contractible: "
              << (contract.yes() ? "yes"
                  : contract.no() ? "no"
                                  : "inconclusive");
    if (contract.yes()) {
      std::cout << " collapse order:";
      for (int v : contract.witness) std::cout << " " << v;
    }
    std::cout << "\n";
    return c.certainty == Answer::inconclusive ? kExitVerification : kExitOk;
  }

  if (*c_inv) {
    auto g = in.load();
    auto v = clique_vector(g);
    auto a = barycentric_operator(std::max<int>(3, static_cast<int>(v.size())));
    std::cout << "lambda,eigenvector,X\n";
    for (const auto& [lambda, f] : left_eigenvectors(a)) {
      std::cout << lambda.get_str() << ",(";
      for (std::size_t i = 0; i < f.size(); ++i)
        std::cout << (i ? " " : "") << f[i].get_str();
      std::cout << ")," << invariant(f, v).get_str() << "\n";
    }
    return kExitOk;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const bary::SizeLimitError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitSizeGuard;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  }
}
