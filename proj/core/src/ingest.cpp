#include "spreadkit/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>

#include "spreadkit/errors.hpp"
#include "spreadkit/rng.hpp"

namespace spreadkit {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw =
        eol == std::string_view::npos ? text.substr(pos) : text.substr(pos, eol - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      if (i > start) line.tokens.emplace_back(raw.substr(start, i - start));
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return lines;
}

long parse_int(const std::string& tok, int line) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("expected an integer, got '" + tok + "'", line);
  return value;
}

int parse_element(const std::string& tok, int line) {
  long value = parse_int(tok, line);
  if (value < 1 || value > kMaxGroundSize)
    throw ParseError("element " + std::to_string(value) + " out of [1,64]", line);
  return static_cast<int>(value);
}

// Bron-Kerbosch with pivoting over <=64-vertex graphs held as bitmasks.
void bron_kerbosch(std::uint64_t r, std::uint64_t p, std::uint64_t x,
                   const std::vector<std::uint64_t>& adj, std::vector<std::uint64_t>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  std::uint64_t px = p | x;
  int pivot = std::countr_zero(px);
  int best_cover = -1;
  for (std::uint64_t m = px; m; m &= m - 1) {
    int v = std::countr_zero(m);
    int cover = std::popcount(p & adj[static_cast<std::size_t>(v)]);
    if (cover > best_cover) {
      best_cover = cover;
      pivot = v;
    }
  }
  std::uint64_t candidates = p & ~adj[static_cast<std::size_t>(pivot)];
  for (std::uint64_t m = candidates; m; m &= m - 1) {
    int v = std::countr_zero(m);
    std::uint64_t vbit = std::uint64_t{1} << v;
    bron_kerbosch(r | vbit, p & adj[static_cast<std::size_t>(v)],
                  x & adj[static_cast<std::size_t>(v)], adj, out);
    p &= ~vbit;
    x |= vbit;
  }
}

}  // namespace

Graph Graph::make(int n_vertices, std::vector<std::pair<int, int>> edges) {
  if (n_vertices < 1 || n_vertices > kMaxGroundSize)
    throw std::invalid_argument("Graph: vertex count out of [1,64]");
  for (auto& [u, v] : edges) {
    if (u < 1 || v < 1 || u > n_vertices || v > n_vertices)
      throw std::invalid_argument("Graph: endpoint out of range");
    if (u == v) throw std::invalid_argument("Graph: self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph{n_vertices, std::move(edges)};
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n_vertices), 0);
  for (auto [u, v] : edges) {
    adj[static_cast<std::size_t>(u - 1)] |= std::uint64_t{1} << (v - 1);
    adj[static_cast<std::size_t>(v - 1)] |= std::uint64_t{1} << (u - 1);
  }
  return adj;
}

Complex parse_facets(std::string_view text) {
  const auto lines = tokenize(text);
  int declared_n = 0;
  std::vector<Face> facets;
  bool first = true;
  int max_elem = 0;
  for (const auto& line : lines) {
    if (first && line.tokens.size() == 2 && line.tokens[0] == "n") {
      long n = parse_int(line.tokens[1], line.number);
      if (n < 1 || n > kMaxGroundSize)
        throw ParseError("ground size " + std::to_string(n) + " out of [1,64]", line.number);
      declared_n = static_cast<int>(n);
      first = false;
      continue;
    }
    first = false;
    Face f;
    for (const auto& tok : line.tokens) {
      int e = parse_element(tok, line.number);
      if (f.contains(e))
        throw ParseError("repeated element " + std::to_string(e) + " in facet", line.number);
      f = f.with(e);
      max_elem = std::max(max_elem, e);
    }
    facets.push_back(f);
  }
  if (facets.empty()) throw ParseError("no facets in input", 0);
  if (declared_n > 0 && max_elem > declared_n)
    throw ParseError("element " + std::to_string(max_elem) + " exceeds declared ground size " +
                         std::to_string(declared_n),
                     0);
  int ground = declared_n > 0 ? declared_n : std::max(max_elem, 1);
  return Complex::from_facets(SetFamily(ground, std::move(facets)));
}

std::string to_facet_text(const Complex& cx) {
  std::ostringstream out;
  int max_elem = 0;
  for (Face f : cx.facets())
    if (!f.empty()) max_elem = std::max(max_elem, f.elements().back());
  if (cx.ground_n() != std::max(max_elem, 1)) out << "n " << cx.ground_n() << "\n";
  for (Face f : cx.facets()) {
    bool first = true;
    for (int e : f.elements()) {
      if (!first) out << ' ';
      out << e;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

Graph parse_graph(std::string_view text) {
  const auto lines = tokenize(text);
  int declared_n = 0;
  long declared_m = -1;
  std::vector<std::pair<int, int>> edges;
  bool first = true;
  int header_line = 0;
  int max_vertex = 0;
  for (const auto& line : lines) {
    if (first && line.tokens.size() == 3 && line.tokens[0] == "p") {
      long n = parse_int(line.tokens[1], line.number);
      declared_m = parse_int(line.tokens[2], line.number);
      if (n < 1 || n > kMaxGroundSize)
        throw ParseError("vertex count " + std::to_string(n) + " out of [1,64]", line.number);
      if (declared_m < 0) throw ParseError("negative edge count", line.number);
      declared_n = static_cast<int>(n);
      header_line = line.number;
      first = false;
      continue;
    }
    first = false;
    if (line.tokens.size() != 2)
      throw ParseError("expected an edge line 'u v'", line.number);
    int u = parse_element(line.tokens[0], line.number);
    int v = parse_element(line.tokens[1], line.number);
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line.number);
    if (u > v) std::swap(u, v);
    max_vertex = std::max(max_vertex, v);
    edges.emplace_back(u, v);
  }
  if (declared_n > 0 && max_vertex > declared_n)
    throw ParseError("vertex " + std::to_string(max_vertex) + " exceeds declared count " +
                         std::to_string(declared_n),
                     0);
  int n = declared_n > 0 ? declared_n : max_vertex;
  if (n == 0) throw ParseError("no vertices in input", 0);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (declared_m >= 0 && static_cast<long>(edges.size()) != declared_m)
    throw ParseError("header declares " + std::to_string(declared_m) + " edges, found " +
                         std::to_string(edges.size()) + " distinct",
                     header_line);
  return Graph::make(n, std::move(edges));
}

std::string to_graph_text(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.n_vertices << ' ' << g.edges.size() << '\n';
  for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
  return out.str();
}

Complex independence_complex(const Graph& g) {
  const int n = g.n_vertices;
  const auto adj = g.adjacency_masks();
  const std::uint64_t all = Face::universe(n).mask();
  std::vector<std::uint64_t> comp(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    comp[static_cast<std::size_t>(v)] =
        all & ~adj[static_cast<std::size_t>(v)] & ~(std::uint64_t{1} << v);

  std::vector<std::uint64_t> cliques;
  bron_kerbosch(0, all, 0, comp, cliques);
  std::vector<Face> facets;
  facets.reserve(cliques.size());
  for (std::uint64_t m : cliques) facets.push_back(Face::from_mask(m));
  return Complex::from_facets(SetFamily(n, std::move(facets)));
}

Complex gen_complete(int n) {
  if (n < 1 || n > kMaxGroundSize) throw std::invalid_argument("gen_complete: n out of [1,64]");
  return Complex::from_facets(SetFamily(n, {Face::universe(n)}));
}

Graph gen_gnp_graph(int n, double p, std::uint64_t seed) {
  if (n < 1 || n > kMaxGroundSize) throw std::invalid_argument("gen_gnp_graph: n out of [1,64]");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gen_gnp_graph: p out of [0,1]");
  Xoshiro256StarStar rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u < n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (rng.next_double() < p) edges.emplace_back(u, v);
  return Graph::make(n, std::move(edges));
}

Complex gen_gnp_complex(int n, double p, std::uint64_t seed) {
  return independence_complex(gen_gnp_graph(n, p, seed));
}

Complex gen_random_facets(const RandomFacetsParams& params, std::uint64_t seed) {
  const auto [n, count, smin, smax] = params;
  if (n < 1 || n > kMaxGroundSize)
    throw std::invalid_argument("gen_random_facets: ground size out of [1,64]");
  if (count < 1) throw std::invalid_argument("gen_random_facets: count must be >= 1");
  if (smin < 1 || smin > smax || smax > n)
    throw std::invalid_argument("gen_random_facets: bad size range");
  Xoshiro256StarStar rng(seed);
  std::vector<Face> facets;
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < count; ++i) {
    int s = smin + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(smax - smin + 1)));
    for (int j = 0; j < n; ++j) pool[static_cast<std::size_t>(j)] = j + 1;
    Face f;
    for (int j = 0; j < s; ++j) {  // partial Fisher-Yates
      auto pick = j + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - j)));
      std::swap(pool[static_cast<std::size_t>(j)], pool[static_cast<std::size_t>(pick)]);
      f = f.with(pool[static_cast<std::size_t>(j)]);
    }
    facets.push_back(f);
  }
  return Complex::from_facets(SetFamily(n, std::move(facets)));
}

}  // namespace spreadkit
