#include "bary/refine.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <openssl/evp.h>

#include "bary/baryop.hpp"
#include "bary/topology.hpp"

namespace bary {

namespace {

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 0xf]);
  }
  return out;
}

std::string serialize_refined(const RefinedGraph& r) {
  std::ostringstream os;
  os << to_text(r.graph);
  for (std::size_t i = 0; i < r.source.size(); ++i) {
    os << "#src " << i;
    for (int v : r.source[i]) os << " " << v;
    os << "\n";
  }
  return os.str();
}

RefinedGraph parse_refined(const std::string& text) {
  RefinedGraph r;
  r.graph = from_text(text);
  r.source.resize(r.graph.order());
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.rfind("#src ", 0) != 0) continue;
    std::istringstream ls(line.substr(5));
    int i, v;
    ls >> i;
    while (ls >> v) r.source[i].push_back(v);
  }
  return r;
}

}  // namespace

RefinedGraph barycentric(const Graph& g) {
  if (g.empty()) throw std::invalid_argument("barycentric: empty graph");
  auto simplices = all_simplices(g);
  std::map<VertexSet, int> index;
  for (std::size_t i = 0; i < simplices.size(); ++i)
    index[simplices[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    const auto& s = simplices[i];
    if (s.size() < 2) continue;
    unsigned full = (1u << s.size()) - 1;
    for (unsigned mask = 1; mask < full; ++mask) {
      VertexSet sub;
      for (std::size_t b = 0; b < s.size(); ++b)
        if (mask & (1u << b)) sub.push_back(s[b]);
      edges.push_back({index[sub], static_cast<int>(i)});
    }
  }
  return {make_graph(static_cast<int>(simplices.size()), edges),
          std::move(simplices)};
}

RefinedGraph refine_iter(const Graph& g, int m, const RefineOptions& opt) {
  if (m < 0) throw std::invalid_argument("refine_iter: m >= 0 required");
  {
    auto predicted = predict_clique_vector(clique_vector(g), m);
    mpz_class total = 0;
    for (auto& x : predicted) total += x;
    if (total > static_cast<long>(opt.size_limit))
      throw SizeLimitError("refine_iter: predicted vertex count " +
                               total.get_str() + " exceeds limit " +
                               std::to_string(opt.size_limit),
                           total.get_str());
  }
  std::string hash;
  if (opt.cache_dir) {
    std::filesystem::create_directories(*opt.cache_dir);
    hash = sha256_hex(to_text(g));
  }
  auto cache_path = [&](int level) {
    return std::filesystem::path(*opt.cache_dir) /
           (hash + "." + std::to_string(level) + ".graph");
  };

  RefinedGraph current;
  current.graph = g;
  for (int v = 0; v < g.order(); ++v) current.source.push_back({v});
  int start = 0;
  if (opt.cache_dir) {
    for (int level = m; level >= 1; --level) {
      std::ifstream in(cache_path(level));
      if (!in) continue;
      std::stringstream buf;
      buf << in.rdbuf();
      current = parse_refined(buf.str());
      start = level;
      break;
    }
  }
  for (int level = start + 1; level <= m; ++level) {
    current = barycentric(current.graph);
    if (opt.cache_dir) {
      std::ofstream out(cache_path(level));
      out << serialize_refined(current);
    }
  }
  return current;
}

Graph graph_product(const Graph& g, const Graph& h) {
  if (g.empty() || h.empty())
    throw std::invalid_argument("graph_product: empty factor");
  auto sg = all_simplices(g);
  auto sh = all_simplices(h);
  auto contains = [](const VertexSet& big, const VertexSet& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  int nh = static_cast<int>(sh.size());
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < sg.size(); ++i)
    for (std::size_t j = 0; j < sh.size(); ++j)
      for (std::size_t u = 0; u < sg.size(); ++u)
        for (std::size_t v = 0; v < sh.size(); ++v) {
          if (i == u && j == v) continue;
          int a = static_cast<int>(i) * nh + static_cast<int>(j);
          int b = static_cast<int>(u) * nh + static_cast<int>(v);
          if (a >= b) continue;
          if ((contains(sg[u], sg[i]) && contains(sh[v], sh[j])) ||
              (contains(sg[i], sg[u]) && contains(sh[j], sh[v])))
            edges.push_back({a, b});
        }
  return make_graph(static_cast<int>(sg.size() * sh.size()), edges);
}

BoundaryResult boundary(const Graph& g, BoundaryMode mode, long long budget) {
  BoundaryResult out;
  VertexSet bnd;
  if (mode == BoundaryMode::euler) {
    for (int x = 0; x < g.order(); ++x)
      if (euler_characteristic(unit_sphere(g, x).graph) == 1) bnd.push_back(x);
  } else {
    int d = clique_number(g) - 1;
    TopologyBudget b(budget);
    for (int x = 0; x < g.order(); ++x) {
      auto v = is_sphere(unit_sphere(g, x).graph, d - 1, b);
      if (v.answer == Answer::inconclusive) out.conclusive = false;
      if (v.no()) bnd.push_back(x);
    }
  }
  auto sub = induced(g, bnd);
  out.graph = std::move(sub.graph);
  out.to_host = std::move(sub.to_host);
  return out;
}

std::vector<int> dimension_coloring(const RefinedGraph& g) {
  if (static_cast<int>(g.source.size()) != g.graph.order() ||
      std::any_of(g.source.begin(), g.source.end(),
                  [](const VertexSet& s) { return s.empty(); }))
    throw std::invalid_argument("dimension_coloring: missing simplex labels");
  std::vector<int> color;
  for (const auto& s : g.source)
    color.push_back(static_cast<int>(s.size()) - 1);
  return color;
}

}  // namespace bary
