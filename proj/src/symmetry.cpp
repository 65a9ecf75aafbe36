#include "pathsat/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace pathsat {

namespace {

VertexPermutation gn_map(int n, GnVertex (*rule)(GnVertex, int)) {
  if (n < 2) throw GraphError("G_n requires n >= 2");
  const int order = 8 * n;
  std::vector<Vertex> image(order);
  for (int idx = 0; idx < order; ++idx) image[idx] = gn_index(rule(gn_vertex(idx, n), n), n);
  return VertexPermutation(std::move(image));
}

GnVertex rule_f(GnVertex v, int) { return {v.a, v.b, v.j + 1}; }

GnVertex rule_p(GnVertex v, int) {
  if (v.j % 2 == 0) return {1 - v.a, v.b, -v.j - 1};
  return {1 - v.a, 1 - v.b, -v.j - 1};
}

GnVertex rule_p_inv(GnVertex v, int) {
  if (v.j % 2 == 0) return {1 - v.a, 1 - v.b, -v.j - 1};
  return {1 - v.a, v.b, -v.j - 1};
}

GnVertex rule_q(GnVertex v, int) { return {v.a, (v.a + v.b) & 1, -v.j + 2 * v.a}; }

bool in_a_set(GnVertex v, int n) {
  for (int t = 0; t < 2; ++t) {
    const GnVertex members[4] = {{0, 0, t}, {0, 1, t}, {1, 0, t + 1}, {1, 1, t + 1}};
    for (const GnVertex& m : members) {
      if (gn_normalize(m, n) == v) return true;
    }
  }
  return false;
}

}  // namespace

VertexPermutation auto_f(int n) { return gn_map(n, rule_f); }
VertexPermutation auto_p(int n) { return gn_map(n, rule_p); }
VertexPermutation auto_p_inv(int n) { return gn_map(n, rule_p_inv); }
VertexPermutation auto_q(int n) { return gn_map(n, rule_q); }

VertexPermutation auto_r(int n) {
  const VertexPermutation q = auto_q(n);
  const VertexPermutation other = compose(auto_f(n).power(2), auto_p_inv(n));
  std::vector<Vertex> image(8 * n);
  for (int idx = 0; idx < 8 * n; ++idx) {
    image[idx] = in_a_set(gn_vertex(idx, n), n) ? q(idx) : other(idx);
  }
  VertexPermutation r(std::move(image));
  if (r(gn_index({0, 0, 0}, n)) != gn_index({0, 0, 0}, n) ||
      r(gn_index({1, 1, 0}, n)) != gn_index({0, 0, 1}, n)) {
    throw SymmetryError("r fails its pinned values r(00,0)=(00,0), r(11,0)=(00,1)");
  }
  return r;
}

bool verify_automorphism(const Graph& g, const VertexPermutation& pi) {
  if (pi.size() != g.order()) {
    throw GraphError("permutation size " + std::to_string(pi.size()) + " does not match order " +
                     std::to_string(g.order()));
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    VertexSet image;
    g.neighbors(u).for_each([&](Vertex v) { image.insert(pi(v)); });
    if (!(image == g.neighbors(pi(u)))) return false;
  }
  return true;
}

std::string Composite::to_string() const {
  if (word.empty()) return "id";
  std::string out;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) out += "∘";
    out += word[i].generator;
    if (word[i].exponent != 1) out += "^" + std::to_string(word[i].exponent);
  }
  return out;
}

void append_factor(std::vector<WordFactor>& word, WordFactor factor) {
  if (factor.exponent == 0) return;
  if (!word.empty() && word.back().generator == factor.generator) {
    word.back().exponent += factor.exponent;
    if (word.back().exponent == 0) word.pop_back();
    return;
  }
  word.push_back(std::move(factor));
}

GeneratorSet GeneratorSet::verified(const Graph& g, std::vector<NamedPermutation> gens) {
  for (const auto& gen : gens) {
    if (gen.perm.size() != g.order() || !verify_automorphism(g, gen.perm)) {
      throw SymmetryError("generator '" + gen.name + "' is not an automorphism of the graph");
    }
  }
  GeneratorSet out;
  out.gens_ = std::move(gens);
  out.fingerprint_ = g.fingerprint();
  out.order_ = g.order();
  return out;
}

std::vector<std::string> GeneratorSet::names() const {
  std::vector<std::string> out;
  for (const auto& g : gens_) out.push_back(g.name);
  return out;
}

GeneratorSet gn_generators(int n) {
  return GeneratorSet::verified(build_gn(n), {{"f", auto_f(n)},
                                              {"p", auto_p(n)},
                                              {"q", auto_q(n)},
                                              {"r", auto_r(n)}});
}

GeneratorSet kneser_generators(int n, int r) {
  const auto subsets = kneser_subsets(n, r);
  auto induced = [&](auto&& point_map) {
    std::vector<Vertex> image;
    for (const auto& s : subsets) {
      std::vector<int> t;
      for (int x : s) t.push_back(point_map(x));
      image.push_back(kneser_index(n, t));
    }
    return VertexPermutation(std::move(image));
  };
  auto swap12 = induced([](int x) { return x == 1 ? 2 : x == 2 ? 1 : x; });
  auto cycle = induced([n](int x) { return x % n + 1; });
  return GeneratorSet::verified(build_kneser(n, r), {{"(1 2)", swap12}, {"(1..n)", cycle}});
}

GeneratorSet union_generators(const Graph& base, const GeneratorSet& base_gens, int k) {
  if (!base_gens.verified_for(base)) throw SymmetryError("base generators not verified for base graph");
  const Graph g = disjoint_union(base, k);
  const int n = base.order();
  std::vector<NamedPermutation> gens;
  for (const auto& gen : base_gens.generators()) {
    std::vector<Vertex> image(k * n);
    for (int c = 0; c < k; ++c) {
      for (int v = 0; v < n; ++v) image[c * n + v] = c * n + gen.perm(v);
    }
    gens.push_back({gen.name, VertexPermutation(std::move(image))});
  }
  if (k >= 2) {
    std::vector<Vertex> swap(k * n), rot(k * n);
    for (int c = 0; c < k; ++c) {
      const int swapped = c == 0 ? 1 : c == 1 ? 0 : c;
      for (int v = 0; v < n; ++v) {
        swap[c * n + v] = swapped * n + v;
        rot[c * n + v] = ((c + 1) % k) * n + v;
      }
    }
    gens.push_back({"swap01", VertexPermutation(std::move(swap))});
    if (k >= 3) gens.push_back({"rotate", VertexPermutation(std::move(rot))});
  }
  return GeneratorSet::verified(g, std::move(gens));
}

std::string to_string(OrbitDomain d) {
  switch (d) {
    case OrbitDomain::kVertices: return "vertices";
    case OrbitDomain::kEdges: return "edges";
    case OrbitDomain::kNonEdges: return "nonedges";
  }
  return "unknown";
}

std::vector<int> OrbitPartition::members(int cls) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(class_of.size()); ++i) {
    if (class_of[i] == cls) out.push_back(i);
  }
  return out;
}

int OrbitPartition::index_of(VertexPair e) const {
  if (domain == OrbitDomain::kVertices) {
    return e.first >= 0 && e.first < static_cast<int>(elements.size()) ? e.first : -1;
  }
  if (e.first > e.second) std::swap(e.first, e.second);
  auto it = std::lower_bound(elements.begin(), elements.end(), e);
  return it != elements.end() && *it == e ? static_cast<int>(it - elements.begin()) : -1;
}

namespace {

VertexPair act(const VertexPermutation& p, VertexPair e, OrbitDomain domain) {
  if (domain == OrbitDomain::kVertices) return {p(e.first), p(e.first)};
  return apply(p, e);
}

}  // namespace

OrbitPartition orbits(const Graph& g, const GeneratorSet& gens, OrbitDomain domain) {
  if (!gens.verified_for(g)) throw SymmetryError("generator set was not verified for this graph");
  OrbitPartition part;
  part.domain = domain;
  part.graph_order = g.order();
  switch (domain) {
    case OrbitDomain::kVertices:
      for (Vertex v = 0; v < g.order(); ++v) part.elements.emplace_back(v, v);
      break;
    case OrbitDomain::kEdges:
      part.elements = g.edges();
      break;
    case OrbitDomain::kNonEdges:
      for (const VertexPair& e : nonedge_pairs(g)) part.elements.push_back(e);
      break;
  }
  const int size = static_cast<int>(part.elements.size());
  std::vector<int> parent(size);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& gen : gens.generators()) {
    for (int i = 0; i < size; ++i) {
      const int j = part.index_of(act(gen.perm, part.elements[i], domain));
      if (j < 0) throw SymmetryError("generator '" + gen.name + "' leaves the orbit domain");
      const int a = find(i), b = find(j);
      // The smaller index stays root, so roots are class minima.
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  part.class_of.assign(size, -1);
  std::vector<int> class_of_root(size, -1);
  for (int i = 0; i < size; ++i) {
    const int root = find(i);
    if (class_of_root[root] < 0) {
      class_of_root[root] = static_cast<int>(part.representatives.size());
      part.representatives.push_back(root);
    }
    part.class_of[i] = class_of_root[root];
  }
  return part;
}

std::vector<Composite> transport_words(const OrbitPartition& part, const GeneratorSet& gens) {
  const int size = static_cast<int>(part.elements.size());
  std::vector<std::optional<Composite>> words(size);
  for (int rep : part.representatives) {
    words[rep] = Composite{{}, VertexPermutation::identity(part.graph_order)};
    std::deque<int> queue{rep};
    while (!queue.empty()) {
      const int cur = queue.front();
      queue.pop_front();
      for (const auto& gen : gens.generators()) {
        const int next = part.index_of(act(gen.perm, part.elements[cur], part.domain));
        if (next < 0 || words[next]) continue;
        Composite c{{{gen.name, 1}}, compose(gen.perm, words[cur]->perm)};
        for (const auto& f : words[cur]->word) append_factor(c.word, f);
        words[next] = std::move(c);
        queue.push_back(next);
      }
    }
  }
  std::vector<Composite> out;
  out.reserve(size);
  for (auto& w : words) out.push_back(std::move(*w));
  return out;
}

namespace {

// Reduces exponents of f mod 2n and re-merges neighbors.
std::vector<WordFactor> simplify(const std::vector<WordFactor>& word, int n) {
  std::vector<WordFactor> out;
  for (WordFactor f : word) {
    if (f.generator == "f") f.exponent = ((f.exponent % (2 * n)) + 2 * n) % (2 * n);
    append_factor(out, f);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<WordFactor> next;
    for (WordFactor f : out) {
      if (f.generator == "f") f.exponent %= 2 * n;
      const size_t before = next.size();
      append_factor(next, f);
      if (next.size() != before + 1) changed = true;
    }
    out = std::move(next);
  }
  return out;
}

VertexPermutation evaluate(const std::vector<WordFactor>& word, int n) {
  const std::map<std::string, VertexPermutation> gens = {
      {"f", auto_f(n)}, {"p", auto_p(n)}, {"q", auto_q(n)}, {"r", auto_r(n)}};
  VertexPermutation out = VertexPermutation::identity(8 * n);
  for (const auto& f : word) out = compose(out, gens.at(f.generator).power(f.exponent));
  return out;
}

// Composite taking (00,0) to v.
std::vector<WordFactor> route_from_root(GnVertex v, int n) {
  v = gn_normalize(v, n);
  const int j = v.j;
  std::vector<WordFactor> w;
  switch (2 * v.a + v.b) {
    case 0:  // f^j
      append_factor(w, {"f", j});
      break;
    case 1:  // f^j∘p∘p
      append_factor(w, {"f", j});
      append_factor(w, {"p", 2});
      break;
    case 2:  // f^{j+1}∘p
      append_factor(w, {"f", j + 1});
      append_factor(w, {"p", 1});
      break;
    default:  // f^{j+1}∘p⁻¹
      append_factor(w, {"f", j + 1});
      append_factor(w, {"p", -1});
      break;
  }
  return simplify(w, n);
}

std::vector<WordFactor> invert(const std::vector<WordFactor>& word, int n) {
  std::vector<WordFactor> out;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    WordFactor f = *it;
    // f^{-e} is written f^{2n-e} to stay within {f, p, p⁻¹}.
    f.exponent = f.generator == "f" ? 2 * n - f.exponent : -f.exponent;
    append_factor(out, f);
  }
  return simplify(out, n);
}

}  // namespace

Composite transitivity_witness(int n, GnVertex v, GnVertex v2) {
  v = gn_normalize(v, n);
  v2 = gn_normalize(v2, n);
  const Graph g = build_gn(n);
  std::vector<WordFactor> word;
  if (!(v == v2)) {
    for (const auto& f : route_from_root(v2, n)) append_factor(word, f);
    for (const auto& f : invert(route_from_root(v, n), n)) append_factor(word, f);
    word = simplify(word, n);
  }
  Composite c{word, evaluate(word, n)};
  if (!verify_automorphism(g, c.perm) || c.perm(gn_index(v, n)) != gn_index(v2, n)) {
    throw SymmetryError("transitivity witness failed verification");
  }
  return c;
}

std::vector<GnVertex> arc_neighbors(int n) {
  return {{1, 1, 0}, {0, 0, 1}, {1, 0, 2}, gn_normalize({0, 0, -1}, n)};
}

Composite neighbor_witness(int n, GnVertex w, GnVertex w2) {
  w = gn_normalize(w, n);
  w2 = gn_normalize(w2, n);
  const auto allowed = arc_neighbors(n);
  auto pos = [&](GnVertex x) {
    auto it = std::find(allowed.begin(), allowed.end(), x);
    return it == allowed.end() ? -1 : static_cast<int>(it - allowed.begin());
  };
  if (pos(w) < 0 || pos(w2) < 0) {
    throw SymmetryError("neighbor_witness endpoints must be among (11,0),(00,1),(10,2),(00,2n-1)");
  }
  const VertexPermutation q = auto_q(n), r = auto_r(n);
  // Breadth-first search over the 4-set; the word grows on the left.
  std::vector<std::optional<std::vector<WordFactor>>> word(4);
  word[pos(w)] = std::vector<WordFactor>{};
  std::deque<GnVertex> queue{w};
  while (!queue.empty()) {
    const GnVertex x = queue.front();
    queue.pop_front();
    for (const auto& [name, perm] : {std::pair{"q", &q}, std::pair{"r", &r}}) {
      const GnVertex y = gn_vertex((*perm)(gn_index(x, n)), n);
      const int py = pos(y);
      if (py < 0) throw SymmetryError("q/r do not preserve the arc neighbor set");
      if (word[py]) continue;
      std::vector<WordFactor> next{{name, 1}};
      for (const auto& f : *word[pos(x)]) append_factor(next, f);
      word[py] = std::move(next);
      queue.push_back(y);
    }
  }
  if (!word[pos(w2)]) throw SymmetryError("no {q,r} composite maps w to w2");
  Composite c{*word[pos(w2)], evaluate(*word[pos(w2)], n)};
  const int root = gn_index({0, 0, 0}, n);
  if (!verify_automorphism(build_gn(n), c.perm) || c.perm(root) != root ||
      c.perm(gn_index(w, n)) != gn_index(w2, n)) {
    throw SymmetryError("neighbor witness failed verification");
  }
  return c;
}

GnPartition gn_partition(int n) {
  const Graph g = build_gn(n);
  const Vertex root = gn_index({0, 0, 0}, n);
  GnPartition part;
  part.closed_root = g.neighbors(root);
  part.closed_root.insert(root);
  for (int idx = 0; idx < 4 * n; ++idx) part.upper.insert(idx);  // rows a = 0
  part.upper.erase(gn_index({0, 1, 2 * n - 1}, n));
  part.upper -= part.closed_root;
  part.lower = g.vertices() - part.upper - part.closed_root;
  return part;
}

bool check_r_range(int n) {
  const GnPartition part = gn_partition(n);
  const VertexPermutation r = auto_r(n);
  bool ok = true;
  part.upper.for_each([&](Vertex v) { ok = ok && part.lower.contains(r(v)); });
  return ok;
}

}  // namespace pathsat
