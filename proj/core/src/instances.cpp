#include "subcrit/instances.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "subcrit/errors.hpp"

namespace subcrit {

// ---------------------------------------------------------------------------
// Clause / Formula / Hypergraph

Clause::Clause(std::vector<Literal> literals) : lits_(std::move(literals)) {
  std::sort(lits_.begin(), lits_.end(), [](Literal a, Literal b) {
    return var_of(a) < var_of(b);
  });
  for (std::size_t i = 0; i < lits_.size(); ++i) {
    if (lits_[i] == 0) throw std::invalid_argument("clause literal 0");
    if (i > 0 && var_of(lits_[i]) == var_of(lits_[i - 1]))
      throw std::invalid_argument("clause repeats variable " +
                                  std::to_string(var_of(lits_[i])));
  }
}

bool Clause::contains(Literal lit) const {
  return std::find(lits_.begin(), lits_.end(), lit) != lits_.end();
}

bool Clause::mentions(Var v) const {
  return std::any_of(lits_.begin(), lits_.end(),
                     [v](Literal l) { return var_of(l) == v; });
}

Formula::Formula(std::uint32_t order, std::uint32_t width,
                 std::vector<Clause> clauses)
    : order_(order), width_(width), clauses_(std::move(clauses)) {
  for (const Clause& c : clauses_) {
    if (c.width() != width_)
      throw std::invalid_argument("clause width " + std::to_string(c.width()) +
                                  " differs from r=" + std::to_string(width_));
    if (c.width() > 0 && c.variable(c.width() - 1) > order_)
      throw std::invalid_argument("clause variable exceeds formula order");
  }
  if (!std::is_sorted(clauses_.begin(), clauses_.end()))
    std::sort(clauses_.begin(), clauses_.end());
  if (std::adjacent_find(clauses_.begin(), clauses_.end()) != clauses_.end())
    throw std::invalid_argument("duplicate clause");
}

std::size_t Formula::find(const Clause& c) const {
  auto it = std::lower_bound(clauses_.begin(), clauses_.end(), c);
  if (it != clauses_.end() && *it == c) return static_cast<std::size_t>(it - clauses_.begin());
  return clauses_.size();
}

Hypergraph::Hypergraph(std::uint32_t order, std::uint32_t width,
                       std::vector<Edge> edges)
    : order_(order), width_(width), edges_(std::move(edges)) {
  for (Edge& e : edges_) {
    if (e.size() != width_)
      throw std::invalid_argument("edge size " + std::to_string(e.size()) +
                                  " differs from r=" + std::to_string(width_));
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw std::invalid_argument("edge repeats a vertex");
    if (!e.empty() && (e.front() == 0 || e.back() > order_))
      throw std::invalid_argument("edge vertex out of range");
  }
  if (!std::is_sorted(edges_.begin(), edges_.end()))
    std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");
}

std::size_t Hypergraph::find(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) return static_cast<std::size_t>(it - edges_.begin());
  return edges_.size();
}

std::vector<std::uint32_t> Hypergraph::degrees() const {
  std::vector<std::uint32_t> deg(order_, 0);
  for (const Edge& e : edges_)
    for (Var v : e) ++deg[v - 1];
  return deg;
}

std::vector<Clause> Subformula::parent_clauses() const {
  std::vector<Clause> out;
  out.reserve(formula.size());
  for (const Clause& c : formula.clauses()) {
    std::vector<Literal> lits;
    for (Literal l : c.literals()) {
      const auto v = static_cast<Literal>(variables[var_of(l) - 1]);
      lits.push_back(l > 0 ? v : -v);
    }
    out.emplace_back(std::move(lits));
  }
  return out;
}

std::vector<Edge> SubHypergraph::parent_edges() const {
  std::vector<Edge> out;
  out.reserve(graph.size());
  for (const Edge& e : graph.edges()) {
    Edge pe;
    for (Var v : e) pe.push_back(vertices[v - 1]);
    std::sort(pe.begin(), pe.end());
    out.push_back(std::move(pe));
  }
  return out;
}

Subformula induced_by_clauses(const Formula& parent,
                              std::span<const std::size_t> clause_indices) {
  std::vector<Var> vars;
  for (std::size_t i : clause_indices)
    for (Literal l : parent.clause(i).literals()) vars.push_back(var_of(l));
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  std::vector<Var> local(parent.order() + 1, 0);
  for (std::size_t i = 0; i < vars.size(); ++i) local[vars[i]] = static_cast<Var>(i + 1);
  std::vector<Clause> clauses;
  clauses.reserve(clause_indices.size());
  for (std::size_t i : clause_indices) {
    std::vector<Literal> lits;
    for (Literal l : parent.clause(i).literals()) {
      const auto v = static_cast<Literal>(local[var_of(l)]);
      lits.push_back(l > 0 ? v : -v);
    }
    clauses.emplace_back(std::move(lits));
  }
  return {Formula(static_cast<std::uint32_t>(vars.size()), parent.width(),
                  std::move(clauses)),
          std::move(vars)};
}

SubHypergraph induced_by_edges(const Hypergraph& parent,
                               std::span<const std::size_t> edge_indices) {
  std::vector<Var> verts;
  for (std::size_t i : edge_indices)
    for (Var v : parent.edge(i)) verts.push_back(v);
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<Var> local(parent.order() + 1, 0);
  for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<Var>(i + 1);
  std::vector<Edge> edges;
  for (std::size_t i : edge_indices) {
    Edge e;
    for (Var v : parent.edge(i)) e.push_back(local[v]);
    edges.push_back(std::move(e));
  }
  return {Hypergraph(static_cast<std::uint32_t>(verts.size()), parent.width(),
                     std::move(edges)),
          std::move(verts)};
}

std::int64_t excess(const Formula& f) {
  return (static_cast<std::int64_t>(f.width()) - 1) *
             static_cast<std::int64_t>(f.size()) -
         static_cast<std::int64_t>(f.order());
}

std::int64_t excess(const Hypergraph& g) {
  return (static_cast<std::int64_t>(g.width()) - 1) *
             static_cast<std::int64_t>(g.size()) -
         static_cast<std::int64_t>(g.order());
}

bool is_full(const Formula& f) {
  if (f.empty()) return false;
  std::vector<std::uint8_t> seen(f.order() + 1, 0);
  for (const Clause& c : f.clauses())
    for (Literal l : c.literals()) seen[var_of(l)] |= l > 0 ? 1 : 2;
  for (Var v = 1; v <= f.order(); ++v)
    if (seen[v] != 3) return false;
  return true;
}

bool is_k_dense(const Hypergraph& g, std::uint32_t k) {
  if (g.empty()) return false;
  for (std::uint32_t d : g.degrees())
    if (d < k) return false;
  return true;
}

std::string IsoKey::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char ch : bytes) {
    out.push_back(kDigits[ch >> 4]);
    out.push_back(kDigits[ch & 15]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical labeling.
//
// Both kinds are reduced to a point structure: formulae use one point per
// literal (2(v-1) for v, 2(v-1)+1 for -v) with the complement pairing p <->
// p^1 to be preserved; hypergraphs use one point per vertex. Labelings are
// the leaves of an individualization-refinement tree; the key is the least
// leaf encoding and the automorphism count is the number of leaves attaining
// it (automorphisms act regularly on those leaves).

namespace {

struct PointStructure {
  std::uint8_t kind = 0;  // 'F' or 'H'
  std::uint32_t order = 0;
  std::uint32_t width = 0;
  std::uint32_t points = 0;
  bool paired = false;
  std::vector<std::vector<std::uint32_t>> edges;
  std::vector<std::vector<std::uint32_t>> incidence;  // point -> edges
};

PointStructure to_points(const Formula& f) {
  PointStructure s;
  s.kind = 'F';
  s.order = f.order();
  s.width = f.width();
  s.points = 2 * f.order();
  s.paired = true;
  for (const Clause& c : f.clauses()) {
    std::vector<std::uint32_t> e;
    for (Literal l : c.literals()) e.push_back(2 * (var_of(l) - 1) + (l < 0 ? 1 : 0));
    std::sort(e.begin(), e.end());
    s.edges.push_back(std::move(e));
  }
  return s;
}

PointStructure to_points(const Hypergraph& g) {
  PointStructure s;
  s.kind = 'H';
  s.order = g.order();
  s.width = g.width();
  s.points = g.order();
  for (const Edge& e : g.edges()) {
    std::vector<std::uint32_t> pe;
    for (Var v : e) pe.push_back(v - 1);
    s.edges.push_back(std::move(pe));
  }
  return s;
}

using Coloring = std::vector<std::uint32_t>;

// Replace each entry by the rank of its signature among distinct signatures.
template <typename Sig>
std::uint32_t rank_signatures(const std::vector<Sig>& sigs, Coloring& out) {
  std::vector<std::uint32_t> idx(sigs.size());
  std::iota(idx.begin(), idx.end(), 0u);
  std::sort(idx.begin(), idx.end(),
            [&](std::uint32_t a, std::uint32_t b) { return sigs[a] < sigs[b]; });
  out.assign(sigs.size(), 0);
  std::uint32_t rank = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i > 0 && sigs[idx[i]] != sigs[idx[i - 1]]) ++rank;
    out[idx[i]] = rank;
  }
  return sigs.empty() ? 0 : rank + 1;
}

std::uint32_t count_colors(const Coloring& col) {
  if (col.empty()) return 0;
  return *std::max_element(col.begin(), col.end()) + 1;
}

// Colour refinement until stable. Ordering of existing colours is preserved,
// which keeps refinement equivariant.
void refine(const PointStructure& s, Coloring& col) {
  std::uint32_t colors = count_colors(col);
  std::vector<std::vector<std::uint32_t>> esig(s.edges.size());
  std::vector<std::vector<std::uint32_t>> psig(s.points);
  Coloring ecol;
  while (true) {
    for (std::size_t e = 0; e < s.edges.size(); ++e) {
      esig[e].clear();
      for (std::uint32_t p : s.edges[e]) esig[e].push_back(col[p]);
      std::sort(esig[e].begin(), esig[e].end());
    }
    rank_signatures(esig, ecol);
    for (std::uint32_t p = 0; p < s.points; ++p) {
      auto& sig = psig[p];
      sig.clear();
      sig.push_back(col[p]);
      if (s.paired) sig.push_back(col[p ^ 1u]);
      const std::size_t head = sig.size();
      for (std::uint32_t e : s.incidence[p]) sig.push_back(ecol[e]);
      std::sort(sig.begin() + static_cast<std::ptrdiff_t>(head), sig.end());
    }
    Coloring next;
    const std::uint32_t next_colors = rank_signatures(psig, next);
    col.swap(next);
    if (next_colors == colors) return;
    colors = next_colors;
  }
}

void put_u16(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>(v & 0xff));
}

void put_u32(std::string& out, std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8)
    out.push_back(static_cast<char>((v >> shift) & 0xff));
}

class CanonSearch {
 public:
  CanonSearch(const PointStructure& s, std::uint64_t budget)
      : s_(s), budget_(budget) {}

  Canonical run() {
    Coloring col(s_.points, 0);
    if (s_.paired) {
      // Initial invariant: literal occurrence count and complement count.
      std::vector<std::array<std::uint32_t, 2>> sig(s_.points);
      for (std::uint32_t p = 0; p < s_.points; ++p)
        sig[p] = {static_cast<std::uint32_t>(s_.incidence[p].size()),
                  static_cast<std::uint32_t>(s_.incidence[p ^ 1u].size())};
      rank_signatures(sig, col);
    }
    search(std::move(col));
    return {IsoKey{best_}, leaves_};
  }

 private:
  void search(Coloring col) {
    if (++nodes_ > budget_)
      throw BudgetExceeded("canonical search exceeded node budget of " +
                           std::to_string(budget_));
    refine(s_, col);
    const std::uint32_t colors = count_colors(col);
    if (colors == s_.points) {
      leaf(col);
      return;
    }
    std::vector<std::uint32_t> cell_size(colors, 0);
    for (std::uint32_t c : col) ++cell_size[c];
    std::uint32_t target = 0;
    while (cell_size[target] == 1) ++target;
    for (std::uint32_t p = 0; p < s_.points; ++p) {
      if (col[p] != target) continue;
      Coloring child(s_.points);
      for (std::uint32_t q = 0; q < s_.points; ++q)
        child[q] = 2 * col[q] + ((col[q] == target && q != p) ? 1 : 0);
      Coloring ranked;
      rank_signatures(child, ranked);
      search(std::move(ranked));
    }
  }

  void leaf(const Coloring& pos) {
    std::string enc;
    enc.push_back(static_cast<char>(s_.kind));
    put_u32(enc, s_.order);
    put_u32(enc, s_.width);
    put_u32(enc, static_cast<std::uint32_t>(s_.edges.size()));
    if (s_.paired) {
      std::vector<std::uint32_t> at(s_.points);
      for (std::uint32_t p = 0; p < s_.points; ++p) at[pos[p]] = p;
      for (std::uint32_t i = 0; i < s_.points; ++i) put_u16(enc, pos[at[i] ^ 1u]);
    }
    std::vector<std::vector<std::uint32_t>> edges;
    edges.reserve(s_.edges.size());
    for (const auto& e : s_.edges) {
      std::vector<std::uint32_t> le;
      for (std::uint32_t p : e) le.push_back(pos[p]);
      std::sort(le.begin(), le.end());
      edges.push_back(std::move(le));
    }
    std::sort(edges.begin(), edges.end());
    for (const auto& e : edges)
      for (std::uint32_t p : e) put_u16(enc, p);
    if (leaves_ == 0 || enc < best_) {
      best_ = std::move(enc);
      leaves_ = 1;
    } else if (enc == best_) {
      ++leaves_;
    }
  }

  const PointStructure& s_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::uint64_t leaves_ = 0;
  std::string best_;
};

Canonical canonicalize_points(PointStructure s, const CanonOptions& opts) {
  if (s.order > opts.max_order)
    throw BudgetExceeded("order " + std::to_string(s.order) +
                         " exceeds canonicalization cap " +
                         std::to_string(opts.max_order));
  // Unused variables are interchangeable (and flippable); they take the last
  // labels and contribute m! (times 2^m for formulae) automorphisms.
  const std::uint32_t per = s.paired ? 2 : 1;
  std::vector<bool> used(s.order, false);
  for (const auto& e : s.edges)
    for (std::uint32_t p : e) used[p / per] = true;
  std::vector<std::uint32_t> slot(s.order, 0);
  std::uint32_t kept = 0;
  for (std::uint32_t v = 0; v < s.order; ++v)
    if (used[v]) slot[v] = kept++;
  const std::uint32_t unused = s.order - kept;
  for (auto& e : s.edges)
    for (std::uint32_t& p : e) p = per * slot[p / per] + p % per;
  s.points = per * kept;
  s.incidence.assign(s.points, {});
  for (std::uint32_t e = 0; e < s.edges.size(); ++e)
    for (std::uint32_t p : s.edges[e]) s.incidence[p].push_back(e);
  Canonical c = CanonSearch(s, opts.node_budget).run();
  for (std::uint32_t i = 1; i <= unused; ++i) {
    const std::uint64_t factor = std::uint64_t{i} * (s.paired ? 2 : 1);
    if (c.automorphisms > std::numeric_limits<std::uint64_t>::max() / factor)
      throw BudgetExceeded("automorphism count overflows 64 bits");
    c.automorphisms *= factor;
  }
  return c;
}

}  // namespace

Canonical canonicalize(const Formula& f, const CanonOptions& opts) {
  return canonicalize_points(to_points(f), opts);
}

Canonical canonicalize(const Hypergraph& g, const CanonOptions& opts) {
  return canonicalize_points(to_points(g), opts);
}

// ---------------------------------------------------------------------------
// Copies. Embeddings are injective (signed) maps of pattern variables into
// host variables that send every pattern member onto a host member; each
// copy is the image of exactly |aut pattern| embeddings.

namespace {

struct EmbedShape {
  std::uint32_t order = 0;
  bool signed_ = false;
  std::vector<std::vector<Literal>> members;  // literals (positive if unsigned)
};

EmbedShape embed_shape(const Formula& f) {
  EmbedShape s{f.order(), true, {}};
  for (const Clause& c : f.clauses())
    s.members.emplace_back(c.literals().begin(), c.literals().end());
  return s;
}

EmbedShape embed_shape(const Hypergraph& g) {
  EmbedShape s{g.order(), false, {}};
  for (const Edge& e : g.edges())
    s.members.emplace_back(e.begin(), e.end());
  return s;
}

class Embedder {
 public:
  using Visit = std::function<void(std::span<const Var> image,
                                   std::span<const std::size_t> members)>;

  Embedder(const EmbedShape& pattern, const EmbedShape& host)
      : pat_(pattern), host_(host) {
    for (std::size_t i = 0; i < host_.members.size(); ++i) {
      auto key = host_.members[i];
      std::sort(key.begin(), key.end(), [](Literal a, Literal b) {
        return var_of(a) < var_of(b);
      });
      lookup_.emplace(std::move(key), i);
    }
    host_deg_ = degrees(host_);
    pat_deg_ = degrees(pat_);
    host_adj_.assign(host_.order + 1, {});
    for (const auto& m : host_.members)
      for (Literal a : m)
        for (Literal b : m)
          if (a != b) host_adj_[var_of(a)].push_back(var_of(b));
    for (auto& a : host_adj_) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    plan();
  }

  std::uint64_t run(const Visit& visit) {
    visit_ = &visit;
    img_.assign(pat_.order + 1, 0);
    flip_.assign(pat_.order + 1, false);
    used_.assign(host_.order + 1, false);
    hits_.assign(pat_.members.size(), 0);
    count_ = 0;
    if (pat_.order <= host_.order) dfs(0);
    return count_;
  }

 private:
  // deg[v] = {positive occurrences, negative occurrences}
  static std::vector<std::array<std::uint32_t, 2>> degrees(const EmbedShape& s) {
    std::vector<std::array<std::uint32_t, 2>> d(s.order + 1, {0, 0});
    for (const auto& m : s.members)
      for (Literal l : m) ++d[var_of(l)][l > 0 ? 0 : 1];
    return d;
  }

  void plan() {
    const std::uint32_t t = pat_.order;
    std::vector<std::vector<std::size_t>> inc(t + 1);
    for (std::size_t i = 0; i < pat_.members.size(); ++i)
      for (Literal l : pat_.members[i]) inc[var_of(l)].push_back(i);
    std::vector<bool> placed(t + 1, false);
    std::vector<std::uint32_t> links(t + 1, 0);
    anchor_.assign(t + 1, 0);
    for (std::uint32_t step = 0; step < t; ++step) {
      Var best = 0;
      for (Var v = 1; v <= t; ++v) {
        if (placed[v]) continue;
        if (best == 0 || links[v] > links[best] ||
            (links[v] == links[best] && inc[v].size() > inc[best].size()))
          best = v;
      }
      placed[best] = true;
      order_.push_back(best);
      for (std::size_t m : inc[best])
        for (Literal l : pat_.members[m]) {
          const Var u = var_of(l);
          if (!placed[u]) {
            ++links[u];
            if (anchor_[u] == 0) anchor_[u] = best;
          }
        }
    }
    std::vector<std::size_t> depth_of(t + 1, 0);
    for (std::size_t d = 0; d < order_.size(); ++d) depth_of[order_[d]] = d;
    checks_.assign(t, {});
    for (std::size_t i = 0; i < pat_.members.size(); ++i) {
      std::size_t last = 0;
      for (Literal l : pat_.members[i]) last = std::max(last, depth_of[var_of(l)]);
      checks_[last].push_back(i);
    }
  }

  bool compatible(Var pv, Var hv, bool flip) const {
    const auto& p = pat_deg_[pv];
    const auto& h = host_deg_[hv];
    return flip ? (h[0] >= p[1] && h[1] >= p[0]) : (h[0] >= p[0] && h[1] >= p[1]);
  }

  bool check(std::size_t depth) {
    for (std::size_t m : checks_[depth]) {
      std::vector<Literal> key;
      key.reserve(pat_.members[m].size());
      for (Literal l : pat_.members[m]) {
        const Var pv = var_of(l);
        const auto hv = static_cast<Literal>(img_[pv]);
        const bool pos = (l > 0) != flip_[pv];
        key.push_back(pos ? hv : -hv);
      }
      std::sort(key.begin(), key.end(),
                [](Literal a, Literal b) { return var_of(a) < var_of(b); });
      auto it = lookup_.find(key);
      if (it == lookup_.end()) return false;
      hits_[m] = it->second;
    }
    return true;
  }

  void dfs(std::size_t depth) {
    if (depth == order_.size()) {
      ++count_;
      if (*visit_) {
        std::vector<Var> image(img_.begin() + 1, img_.end());
        (*visit_)(image, hits_);
      }
      return;
    }
    const Var pv = order_[depth];
    auto try_host = [&](Var hv) {
      if (used_[hv]) return;
      for (int f = 0; f < (pat_.signed_ ? 2 : 1); ++f) {
        const bool flip = f == 1;
        if (!compatible(pv, hv, flip)) continue;
        img_[pv] = hv;
        flip_[pv] = flip;
        used_[hv] = true;
        if (check(depth)) dfs(depth + 1);
        used_[hv] = false;
      }
    };
    if (anchor_[pv] != 0) {
      for (Var hv : host_adj_[img_[anchor_[pv]]]) try_host(hv);
    } else {
      for (Var hv = 1; hv <= host_.order; ++hv) try_host(hv);
    }
  }

  const EmbedShape& pat_;
  const EmbedShape& host_;
  std::map<std::vector<Literal>, std::size_t> lookup_;
  std::vector<std::array<std::uint32_t, 2>> host_deg_, pat_deg_;
  std::vector<std::vector<Var>> host_adj_;
  std::vector<Var> order_;
  std::vector<Var> anchor_;
  std::vector<std::vector<std::size_t>> checks_;
  std::vector<Var> img_;
  std::vector<bool> flip_;
  std::vector<bool> used_;
  std::vector<std::size_t> hits_;
  std::uint64_t count_ = 0;
  const Visit* visit_ = nullptr;
};

std::vector<Copy> collect_copies(const EmbedShape& pattern,
                                 const EmbedShape& host) {
  std::vector<Copy> out;
  Embedder emb(pattern, host);
  emb.run([&](std::span<const Var> image, std::span<const std::size_t> members) {
    Copy c{{image.begin(), image.end()}, {members.begin(), members.end()}};
    std::sort(c.variables.begin(), c.variables.end());
    std::sort(c.members.begin(), c.members.end());
    out.push_back(std::move(c));
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::uint64_t count_copies(const Formula& pattern, const Formula& host,
                           const CanonOptions& opts) {
  if (pattern.order() > host.order() || pattern.size() > host.size()) return 0;
  if (pattern.width() != host.width() && !pattern.empty()) return 0;
  const auto p = embed_shape(pattern);
  const auto h = embed_shape(host);
  const std::uint64_t embeddings = Embedder(p, h).run({});
  return embeddings / automorphism_count(pattern, opts);
}

std::uint64_t count_copies(const Hypergraph& pattern, const Hypergraph& host,
                           const CanonOptions& opts) {
  if (pattern.order() > host.order() || pattern.size() > host.size()) return 0;
  if (pattern.width() != host.width() && !pattern.empty()) return 0;
  const auto p = embed_shape(pattern);
  const auto h = embed_shape(host);
  const std::uint64_t embeddings = Embedder(p, h).run({});
  return embeddings / automorphism_count(pattern, opts);
}

std::vector<Copy> enumerate_copies(const Formula& pattern, const Formula& host) {
  if (pattern.order() > host.order() || pattern.size() > host.size()) return {};
  if (pattern.width() != host.width() && !pattern.empty()) return {};
  return collect_copies(embed_shape(pattern), embed_shape(host));
}

std::vector<Copy> enumerate_copies(const Hypergraph& pattern,
                                   const Hypergraph& host) {
  if (pattern.order() > host.order() || pattern.size() > host.size()) return {};
  if (pattern.width() != host.width() && !pattern.empty()) return {};
  return collect_copies(embed_shape(pattern), embed_shape(host));
}

// ---------------------------------------------------------------------------

Formula relabel(const Formula& f, std::span<const Var> perm,
                const std::vector<bool>& flip) {
  if (perm.size() != f.order() || flip.size() != f.order())
    throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<Clause> clauses;
  clauses.reserve(f.size());
  for (const Clause& c : f.clauses()) {
    std::vector<Literal> lits;
    for (Literal l : c.literals()) {
      const Var v = var_of(l);
      const auto w = static_cast<Literal>(perm[v - 1]);
      const bool pos = (l > 0) != flip[v - 1];
      lits.push_back(pos ? w : -w);
    }
    clauses.emplace_back(std::move(lits));
  }
  return Formula(f.order(), f.width(), std::move(clauses));
}

Hypergraph relabel(const Hypergraph& g, std::span<const Var> perm) {
  if (perm.size() != g.order())
    throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    Edge ne;
    for (Var v : e) ne.push_back(perm[v - 1]);
    edges.push_back(std::move(ne));
  }
  return Hypergraph(g.order(), g.width(), std::move(edges));
}

Formula disjoint_union(const Formula& a, const Formula& b) {
  const std::uint32_t width = a.empty() ? b.width() : a.width();
  std::vector<Clause> clauses = a.clauses();
  const auto shift = static_cast<Literal>(a.order());
  for (const Clause& c : b.clauses()) {
    std::vector<Literal> lits;
    for (Literal l : c.literals()) lits.push_back(l > 0 ? l + shift : l - shift);
    clauses.emplace_back(std::move(lits));
  }
  return Formula(a.order() + b.order(), width, std::move(clauses));
}

Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
  const std::uint32_t width = a.empty() ? b.width() : a.width();
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) {
    Edge ne;
    for (Var v : e) ne.push_back(v + a.order());
    edges.push_back(std::move(ne));
  }
  return Hypergraph(a.order() + b.order(), width, std::move(edges));
}

Formula complementary_pair(std::uint32_t r) {
  std::vector<Literal> pos, neg;
  for (std::uint32_t i = 1; i <= r; ++i) {
    pos.push_back(static_cast<Literal>(i));
    neg.push_back(-static_cast<Literal>(i));
  }
  return Formula(r, r, {Clause(pos), Clause(neg)});
}

namespace {
void for_each_subset(std::uint32_t n, std::uint32_t r,
                     const std::function<void(const std::vector<Var>&)>& fn) {
  std::vector<Var> combo(r);
  std::iota(combo.begin(), combo.end(), 1u);
  if (r > n) return;
  while (true) {
    fn(combo);
    std::int64_t i = static_cast<std::int64_t>(r) - 1;
    while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - r + static_cast<Var>(i) + 1) --i;
    if (i < 0) return;
    ++combo[static_cast<std::size_t>(i)];
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < r; ++j) combo[j] = combo[j - 1] + 1;
  }
}
}  // namespace

Formula complete_formula(std::uint32_t n, std::uint32_t r) {
  std::vector<Clause> clauses;
  for_each_subset(n, r, [&](const std::vector<Var>& vars) {
    for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
      std::vector<Literal> lits;
      for (std::uint32_t i = 0; i < r; ++i) {
        const auto v = static_cast<Literal>(vars[i]);
        lits.push_back((mask >> i) & 1u ? -v : v);
      }
      clauses.emplace_back(std::move(lits));
    }
  });
  return Formula(n, r, std::move(clauses));
}

Hypergraph complete_hypergraph(std::uint32_t n, std::uint32_t r) {
  std::vector<Edge> edges;
  for_each_subset(n, r, [&](const std::vector<Var>& vars) { edges.push_back(vars); });
  return Hypergraph(n, r, std::move(edges));
}

}  // namespace subcrit
