#include "entwit/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace entwit {

void Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("self-loop not allowed");
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("vertex out of range");
  adj_.set(u, v, true);
  adj_.set(v, u, true);
}

void Graph::toggle_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("self-loop not allowed");
  adj_.flip(u, v);
  adj_.flip(v, u);
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < n_; ++u)
    if (adj_.get(v, u)) out.push_back(u);
  return out;
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adj_.get(u, v)) out.emplace_back(u, v);
  return out;
}

bool Graph::connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u = 0; u < n_; ++u) {
      if (adj_.get(v, u) && !seen[u]) {
        seen[u] = 1;
        ++count;
        q.push(u);
      }
    }
  }
  return count == n_;
}

Graph chain_graph(int n) {
  if (n < 1) throw std::invalid_argument("chain needs n >= 1");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  g.set_family(Family::chain);
  return g;
}

Graph lattice_graph(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("lattice needs rows, cols >= 1");
  Graph g(rows * cols);
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
      if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
    }
  }
  g.set_family(Family::lattice);
  g.set_lattice_dims(rows, cols);
  return g;
}

Graph ring_graph(int n) {
  if (n < 3) throw std::invalid_argument("ring needs n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  g.set_family(Family::ring);
  return g;
}

Graph star_graph(int n) {
  if (n < 2) throw std::invalid_argument("star needs n >= 2");
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(0, i);
  g.set_family(Family::star);
  return g;
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete needs n >= 1");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  g.set_family(Family::complete);
  return g;
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);  // add_edge validates, dupes collapse
  return g;
}

namespace {

int parse_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw std::invalid_argument("bad integer in builder spec: '" + std::string(s) + "'");
  return v;
}

}  // namespace

Graph graph_from_builder(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("builder spec must look like 'chain:6' or 'lattice:5x5'");
  std::string_view kind(spec.data(), colon);
  std::string_view arg(spec.data() + colon + 1, spec.size() - colon - 1);
  if (kind == "chain") return chain_graph(parse_int(arg));
  if (kind == "ring") return ring_graph(parse_int(arg));
  if (kind == "star" || kind == "ghz") return star_graph(parse_int(arg));
  if (kind == "complete") return complete_graph(parse_int(arg));
  if (kind == "lattice") {
    auto x = arg.find('x');
    if (x == std::string_view::npos)
      throw std::invalid_argument("lattice spec must look like 'lattice:RxC'");
    return lattice_graph(parse_int(arg.substr(0, x)), parse_int(arg.substr(x + 1)));
  }
  throw std::invalid_argument("unknown builder '" + std::string(kind) + "'");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::custom: return "custom";
    case Family::chain: return "chain";
    case Family::lattice: return "lattice";
    case Family::ring: return "ring";
    case Family::star: return "star";
    case Family::complete: return "complete";
  }
  return "?";
}

std::vector<int> Coloring::assignment(int n) const {
  std::vector<int> a(n, -1);
  for (int l = 0; l < k(); ++l)
    for (int v : classes[l]) a[v] = l;
  return a;
}

namespace {

Coloring coloring_from_assignment(const std::vector<int>& color, int k) {
  Coloring c;
  c.classes.assign(k, {});
  for (int v = 0; v < static_cast<int>(color.size()); ++v)
    c.classes[color[v]].push_back(v);
  // Drop empty classes, then order by smallest member.
  std::erase_if(c.classes, [](const auto& cl) { return cl.empty(); });
  std::sort(c.classes.begin(), c.classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return c;
}

}  // namespace

std::optional<Coloring> two_coloring(const Graph& g) {
  const int n = g.n();
  std::vector<int> color(n, -1);
  for (int root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u = 0; u < n; ++u) {
        if (!g.has_edge(v, u)) continue;
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          q.push(u);
        } else if (color[u] == color[v]) {
          return std::nullopt;  // odd cycle
        }
      }
    }
  }
  int k = g.edges().empty() ? 1 : 2;
  return coloring_from_assignment(color, k);
}

namespace {

// Depth-first search for the lexicographically smallest proper coloring
// with at most k colors. The "at most one new color" cap is sound because
// relabelling colors by first appearance never increases the assignment.
bool color_dfs(const Graph& g, int v, int used, int k, std::vector<int>& color) {
  if (v == g.n()) return true;
  const int limit = std::min(used, k - 1);
  for (int c = 0; c <= limit; ++c) {
    bool ok = true;
    for (int u = 0; u < v; ++u) {
      if (color[u] == c && g.has_edge(u, v)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    color[v] = c;
    if (color_dfs(g, v + 1, std::max(used, c + 1), k, color)) return true;
    color[v] = -1;
  }
  return false;
}

}  // namespace

Coloring chromatic_coloring(const Graph& g) {
  const int n = g.n();
  if (n == 0) return Coloring{};

  // Greedy largest-degree-first upper bound.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> greedy(n, -1);
  int upper = 0;
  for (int v : order) {
    std::vector<char> taken(n, 0);
    for (int u = 0; u < n; ++u)
      if (greedy[u] >= 0 && g.has_edge(u, v)) taken[greedy[u]] = 1;
    int c = 0;
    while (taken[c]) ++c;
    greedy[v] = c;
    upper = std::max(upper, c + 1);
  }

  const int lower = g.edges().empty() ? 1 : 2;
  for (int k = lower; k <= upper; ++k) {
    std::vector<int> color(n, -1);
    if (color_dfs(g, 0, 0, k, color)) return coloring_from_assignment(color, k);
  }
  return coloring_from_assignment(greedy, upper);  // unreachable
}

bool is_independent_set(const Graph& g, const std::vector<int>& verts) {
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (g.has_edge(verts[i], verts[j])) return false;
  return true;
}

bool is_proper_coloring(const Graph& g, const Coloring& c) {
  std::vector<char> seen(g.n(), 0);
  for (const auto& cl : c.classes) {
    if (!is_independent_set(g, cl)) return false;
    for (int v : cl) {
      if (v < 0 || v >= g.n() || seen[v]) return false;
      seen[v] = 1;
    }
  }
  for (char s : seen)
    if (!s) return false;
  return true;
}

Graph local_complement(const Graph& g, int v) {
  if (v < 0 || v >= g.n()) throw std::out_of_range("vertex out of range");
  Graph out = g;
  auto nb = g.neighbors(v);
  for (size_t i = 0; i < nb.size(); ++i)
    for (size_t j = i + 1; j < nb.size(); ++j) out.toggle_edge(nb[i], nb[j]);
  out.set_family(Family::custom);
  return out;
}

SubgraphResult delete_vertices(const Graph& g, const std::vector<int>& drop) {
  std::vector<char> dropped(g.n(), 0);
  for (int v : drop) {
    if (v < 0 || v >= g.n()) throw std::out_of_range("vertex out of range");
    dropped[v] = 1;
  }
  SubgraphResult res;
  res.new_of_old.assign(g.n(), -1);
  for (int v = 0; v < g.n(); ++v) {
    if (!dropped[v]) {
      res.new_of_old[v] = static_cast<int>(res.old_of_new.size());
      res.old_of_new.push_back(v);
    }
  }
  Graph sub(static_cast<int>(res.old_of_new.size()));
  for (int i = 0; i < sub.n(); ++i)
    for (int j = i + 1; j < sub.n(); ++j)
      if (g.has_edge(res.old_of_new[i], res.old_of_new[j])) sub.add_edge(i, j);
  res.graph = std::move(sub);
  return res;
}

BitMatrix cross_submatrix(const Graph& g, const std::vector<int>& a) {
  std::vector<char> in_a(g.n(), 0);
  for (int v : a) {
    if (v < 0 || v >= g.n()) throw std::out_of_range("vertex out of range");
    in_a[v] = 1;
  }
  std::vector<int> rows_v, cols_v;
  for (int v = 0; v < g.n(); ++v) (in_a[v] ? rows_v : cols_v).push_back(v);
  // Rows follow ascending order of the vertices of `a`, not caller order.
  BitMatrix m(static_cast<int>(rows_v.size()), static_cast<int>(cols_v.size()));
  for (size_t r = 0; r < rows_v.size(); ++r)
    for (size_t c = 0; c < cols_v.size(); ++c)
      if (g.has_edge(rows_v[r], cols_v[c])) m.set(static_cast<int>(r), static_cast<int>(c), true);
  return m;
}

}  // namespace entwit
