#include "specwl/homcount.hpp"

#include <algorithm>
#include <bitset>
#include <climits>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <tuple>

namespace specwl {

namespace {

constexpr int kPatternCap = 8;

void check_pattern_cap(const Graph& pattern, const char* what) {
  if (pattern.n > kPatternCap)
    throw CapError(std::string(what) + ": pattern exceeds cap of 8 vertices");
}

// BFS orders per component, concatenated; every vertex after the first of
// its component has an already-ordered neighbor.
std::vector<int> anchor_order(const Graph& g) {
  std::vector<int> order;
  std::vector<char> seen(g.n, 0);
  for (int s = 0; s < g.n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    size_t head = order.size();
    order.push_back(s);
    for (; head < order.size(); ++head)
      for (int w : g.adj[order[head]])
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
  }
  return order;
}

// Maps pattern -> host along `order` from position i, extending `img`.
// Candidates come from the host neighborhood of an already-assigned pattern
// neighbor when one exists. `used` non-null enforces injectivity.
Int count_maps(const Graph& pattern, const Graph& host,
               const std::vector<int>& order, size_t i, std::vector<int>& img,
               std::vector<char>* used) {
  const int v = order[i];
  int anchor = -1;
  for (int w : pattern.adj[v])
    if (img[w] >= 0) {
      anchor = img[w];
      break;
    }
  const bool last = i + 1 == order.size();
  Int total = 0;
  auto attempt = [&](int x) {
    if (used && (*used)[x]) return;
    for (int w : pattern.adj[v])
      if (img[w] >= 0 && !host.has_edge(img[w], x)) return;
    if (last) {
      ++total;
      return;
    }
    img[v] = x;
    if (used) (*used)[x] = 1;
    total += count_maps(pattern, host, order, i + 1, img, used);
    if (used) (*used)[x] = 0;
    img[v] = -1;
  };
  if (anchor >= 0)
    for (int x : host.adj[anchor]) attempt(x);
  else
    for (int x = 0; x < host.n; ++x) attempt(x);
  return total;
}

void check_hom_budget(const Graph& pattern, const Graph& host) {
  if (pattern.n <= kPatternCap) return;
  // host^pattern budget: at most ~2^40 leaves.
  double bits = 0;
  for (int v = 0; v < pattern.n; ++v)
    bits += std::log2(std::max(host.n, 2));
  if (bits > 40)
    throw CapError("hom_brute: enumeration budget exceeded");
}

Int hom_connected_from(const Graph& pattern, const Graph& host,
                       const std::vector<int>& comp_order) {
  std::vector<int> img(pattern.n, -1);
  return count_maps(pattern, host, comp_order, 0, img, nullptr);
}

// All full homs pattern -> host, reported through `emit` with img complete.
void enumerate_homs(const Graph& pattern, const Graph& host,
                    const std::vector<int>& order, size_t i,
                    std::vector<int>& img, const std::function<void()>& emit) {
  if (i == order.size()) {
    emit();
    return;
  }
  const int v = order[i];
  int anchor = -1;
  for (int w : pattern.adj[v])
    if (img[w] >= 0) {
      anchor = img[w];
      break;
    }
  auto attempt = [&](int x) {
    for (int w : pattern.adj[v])
      if (img[w] >= 0 && !host.has_edge(img[w], x)) return;
    img[v] = x;
    enumerate_homs(pattern, host, order, i + 1, img, emit);
    img[v] = -1;
  };
  if (anchor >= 0)
    for (int x : host.adj[anchor]) attempt(x);
  else
    for (int x = 0; x < host.n; ++x) attempt(x);
}

}  // namespace

Int hom_brute(const Graph& pattern, const Graph& host) {
  check_hom_budget(pattern, host);
  if (pattern.n == 0) return 1;
  if (host.n == 0) return 0;
  // hom is multiplicative over pattern components.
  auto order = anchor_order(pattern);
  Int total = 1;
  std::vector<char> comp_start(pattern.n, 0);
  size_t begin = 0;
  std::vector<char> in_comp(pattern.n, 0);
  while (begin < order.size()) {
    size_t end = begin + 1;
    std::fill(in_comp.begin(), in_comp.end(), 0);
    in_comp[order[begin]] = 1;
    // component = contiguous BFS block: extend while attached to the block
    while (end < order.size()) {
      bool attached = false;
      for (int w : pattern.adj[order[end]])
        if (in_comp[w]) {
          attached = true;
          break;
        }
      if (!attached) break;
      in_comp[order[end]] = 1;
      ++end;
    }
    std::vector<int> comp(order.begin() + begin, order.begin() + end);
    total *= hom_connected_from(pattern, host, comp);
    if (total == 0) return 0;
    begin = end;
  }
  return total;
}

Int sub_brute(const Graph& pattern, const Graph& host) {
  check_pattern_cap(pattern, "sub_brute");
  if (pattern.n == 0) return 1;
  if (pattern.n > host.n) return 0;
  auto order = anchor_order(pattern);
  std::vector<int> img(pattern.n, -1);
  std::vector<char> used(host.n, 0);
  Int inj = count_maps(pattern, host, order, 0, img, &used);
  Int aut = automorphism_count(pattern);
  if (inj % aut != 0)
    throw std::logic_error("sub_brute: |Aut| does not divide injective count");
  return inj / aut;
}

bool verify_decomposition(const Graph& pattern, const TreeDecomposition& td) {
  const int b = static_cast<int>(td.bags.size());
  if (b == 0 || td.tree.n != b) return false;
  if (td.tree.m() != b - 1 || !td.tree.connected()) return false;
  std::vector<char> covered(pattern.n, 0);
  for (const auto& bag : td.bags) {
    if (bag.empty() || bag.size() > 3) return false;
    if (!std::is_sorted(bag.begin(), bag.end())) return false;
    if (std::adjacent_find(bag.begin(), bag.end()) != bag.end()) return false;
    for (int v : bag) {
      if (v < 0 || v >= pattern.n) return false;
      covered[v] = 1;
    }
  }
  for (int v = 0; v < pattern.n; ++v)
    if (!covered[v]) return false;
  auto bag_has = [&](int t, int v) {
    const auto& bag = td.bags[t];
    return std::binary_search(bag.begin(), bag.end(), v);
  };
  for (auto [u, v] : pattern.edges) {
    bool housed = false;
    for (int t = 0; t < b && !housed; ++t)
      housed = bag_has(t, u) && bag_has(t, v);
    if (!housed) return false;
  }
  // Bags containing each vertex must induce a subtree.
  for (int v = 0; v < pattern.n; ++v) {
    int want = 0, start = -1;
    for (int t = 0; t < b; ++t)
      if (bag_has(t, v)) {
        ++want;
        start = t;
      }
    std::vector<char> seen(b, 0);
    std::vector<int> queue = {start};
    seen[start] = 1;
    int got = 1;
    for (size_t h = 0; h < queue.size(); ++h)
      for (int t2 : td.tree.adj[queue[h]])
        if (!seen[t2] && bag_has(t2, v)) {
          seen[t2] = 1;
          ++got;
          queue.push_back(t2);
        }
    if (got != want) return false;
  }
  return true;
}

TreeDecomposition decomposition_from_skeleton(const Graph& pattern,
                                              const Skeleton& sk) {
  if (!verify_skeleton(pattern, sk))
    throw InputError("decomposition_from_skeleton: skeleton does not fit pattern");
  TreeDecomposition td;
  std::vector<std::pair<int, int>> tedges;
  const int s = sk.tree.n;
  for (int t = 0; t < s; ++t) td.bags.push_back({sk.beta[t]});
  auto add_bag = [&](std::initializer_list<int> vs) {
    std::set<int> st(vs);
    td.bags.emplace_back(st.begin(), st.end());
    return static_cast<int>(td.bags.size()) - 1;
  };
  for (auto [t1, t2] : sk.tree.edges) {
    const int u = sk.beta[t1], w = sk.beta[t2];
    const int eb = add_bag({u, w});
    tedges.push_back({t1, eb});
    tedges.push_back({eb, t2});
    for (const auto& p : sk.gamma.at({t1, t2})) {
      if (p.size() == 2) continue;  // direct edge lives in the {u,w} bag
      int prev = eb;
      for (size_t i = 0; i + 1 < p.size(); ++i) {
        const int nb = add_bag({p[i], p[i + 1], w});
        tedges.push_back({prev, nb});
        prev = nb;
      }
    }
  }
  td.tree = Graph::make(static_cast<int>(td.bags.size()), tedges);
  return td;
}

Int hom_tw2(const Graph& pattern, const TreeDecomposition& td,
            const Graph& host) {
  if (!verify_decomposition(pattern, td))
    throw InputError("hom_tw2: invalid width-2 tree decomposition");
  if (host.n == 0) return pattern.n == 0 ? 1 : 0;
  const int b = td.tree.n;
  std::vector<int> parent(b, -1), order;
  std::vector<char> seen(b, 0);
  order.push_back(0);
  seen[0] = 1;
  for (size_t h = 0; h < order.size(); ++h)
    for (int c : td.tree.adj[order[h]])
      if (!seen[c]) {
        seen[c] = 1;
        parent[c] = order[h];
        order.push_back(c);
      }
  std::vector<std::vector<int>> children(b);
  for (int t : order)
    if (parent[t] >= 0) children[parent[t]].push_back(t);

  auto intersect = [](const std::vector<int>& a, const std::vector<int>& b2) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b2.begin(), b2.end(),
                          std::back_inserter(out));
    return out;
  };
  std::vector<std::vector<int>> sep(b);
  for (int t = 0; t < b; ++t)
    if (parent[t] >= 0) sep[t] = intersect(td.bags[t], td.bags[parent[t]]);

  std::vector<std::map<std::vector<int>, Int>> msg(b);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int t = *it;
    const auto& bag = td.bags[t];
    const int bs = static_cast<int>(bag.size());
    std::vector<int> pos_of(pattern.n, -1);
    for (int i = 0; i < bs; ++i) pos_of[bag[i]] = i;
    // pattern edges internal to the bag
    std::vector<std::pair<int, int>> inner;
    for (int i = 0; i < bs; ++i)
      for (int j = i + 1; j < bs; ++j)
        if (pattern.has_edge(bag[i], bag[j])) inner.push_back({i, j});
    // child separators as positions in this bag
    std::vector<std::vector<int>> cpos;
    for (int c : children[t]) {
      std::vector<int> ps;
      for (int v : sep[c]) ps.push_back(pos_of[v]);
      cpos.push_back(ps);
    }
    std::vector<int> mypos;
    for (int v : sep[t]) mypos.push_back(pos_of[v]);

    std::vector<int> asg(bs, 0);
    auto& out = msg[t];
    for (;;) {
      bool ok = true;
      for (auto [i, j] : inner)
        if (!host.has_edge(asg[i], asg[j])) {
          ok = false;
          break;
        }
      if (ok) {
        Int weight = 1;
        for (size_t ci = 0; ci < cpos.size() && weight != 0; ++ci) {
          std::vector<int> key;
          for (int p : cpos[ci]) key.push_back(asg[p]);
          auto found = msg[children[t][ci]].find(key);
          if (found == msg[children[t][ci]].end())
            weight = 0;
          else
            weight *= found->second;
        }
        if (weight != 0) {
          std::vector<int> key;
          for (int p : mypos) key.push_back(asg[p]);
          out[key] += weight;
        }
      }
      int i = bs - 1;
      while (i >= 0 && asg[i] == host.n - 1) asg[i--] = 0;
      if (i < 0) break;
      ++asg[i];
    }
    for (int c : children[t]) msg[c].clear();
  }
  auto found = msg[0].find({});
  return found == msg[0].end() ? Int(0) : found->second;
}

HostPowers::HostPowers(const Graph& host) : g_(host) {
  const int n = g_.n;
  powers_.emplace_back(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) powers_[0][static_cast<size_t>(i) * n + i] = 1;
}

const std::vector<Int>& HostPowers::power(int l) {
  if (l < 0) throw InputError("HostPowers: negative exponent");
  const int n = g_.n;
  while (static_cast<int>(powers_.size()) <= l) {
    const auto& prev = powers_.back();
    std::vector<Int> next(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Int s = 0;
        for (int k : g_.adj[j]) s += prev[static_cast<size_t>(i) * n + k];
        next[static_cast<size_t>(i) * n + j] = std::move(s);
      }
    powers_.push_back(std::move(next));
  }
  return powers_[l];
}

Int hom_parallel_tree(const Skeleton& sk, HostPowers& host) {
  const Graph& H = host.host();
  const int n = H.n;
  const int s = sk.tree.n;
  if (s == 0) throw InputError("hom_parallel_tree: empty skeleton");
  if (n == 0) return 0;
  std::vector<int> parent(s, -1), order;
  std::vector<char> seen(s, 0);
  order.push_back(sk.root);
  seen[sk.root] = 1;
  for (size_t h = 0; h < order.size(); ++h)
    for (int c : sk.tree.adj[order[h]])
      if (!seen[c]) {
        seen[c] = 1;
        parent[c] = order[h];
        order.push_back(c);
      }
  std::vector<std::vector<Int>> f(s);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int t = *it;
    f[t].assign(n, 1);
    for (int c : sk.tree.adj[t]) {
      if (c == parent[t]) continue;
      const auto key = std::minmax(t, c);
      std::vector<int> lens;
      for (const auto& p : sk.gamma.at({key.first, key.second}))
        lens.push_back(static_cast<int>(p.size()) - 1);
      for (int x = 0; x < n; ++x) {
        Int acc = 0;
        for (int y = 0; y < n; ++y) {
          if (f[c][y] == 0) continue;
          Int w = f[c][y];
          for (int l : lens) {
            w *= host.power(l)[static_cast<size_t>(x) * n + y];
            if (w == 0) break;
          }
          acc += w;
        }
        f[t][x] *= acc;
      }
      f[c].clear();
    }
  }
  Int total = 0;
  for (int x = 0; x < n; ++x) total += f[sk.root][x];
  return total;
}

Int hom_into_furer(const Graph& pattern, const FurerGraph& fg) {
  check_pattern_cap(pattern, "hom_into_furer");
  const Graph& B = fg.base;
  if (pattern.n == 0) return 1;
  if (B.n == 0) return 0;
  const std::set<std::pair<int, int>> twisted(fg.twist_set.begin(),
                                              fg.twist_set.end());
  auto nidx = [&](int x, int y) {
    const auto& a = B.adj[x];
    return static_cast<int>(std::lower_bound(a.begin(), a.end(), y) -
                            a.begin());
  };
  constexpr int kBits = 256;
  using Row = std::bitset<kBits>;

  Int total = 0;
  auto order = anchor_order(pattern);
  std::vector<int> img(pattern.n, -1);
  std::vector<std::pair<Row, int>> rows;
  enumerate_homs(pattern, B, order, 0, img, [&]() {
    // Fiber over the projected hom: pick an even subset X_v of N(img[v])
    // per pattern vertex; pattern edges force the CFI edge relation.
    std::vector<int> offset(pattern.n + 1, 0);
    for (int v = 0; v < pattern.n; ++v)
      offset[v + 1] = offset[v] + B.deg(img[v]);
    const int vars = offset[pattern.n];
    if (vars > kBits)
      throw CapError("hom_into_furer: GF(2) system exceeds 256 variables");
    rows.clear();
    for (int v = 0; v < pattern.n; ++v) {
      Row r;
      for (int j = 0; j < B.deg(img[v]); ++j) r.set(offset[v] + j);
      rows.push_back({r, 0});
    }
    for (auto [u, v] : pattern.edges) {
      Row r;
      r.set(offset[u] + nidx(img[u], img[v]));
      r.set(offset[v] + nidx(img[v], img[u]));
      const auto e = std::minmax(img[u], img[v]);
      rows.push_back({r, twisted.count({e.first, e.second}) ? 1 : 0});
    }
    int rank = 0;
    for (int col = 0; col < vars && rank < static_cast<int>(rows.size());
         ++col) {
      int piv = -1;
      for (int r = rank; r < static_cast<int>(rows.size()); ++r)
        if (rows[r].first.test(col)) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      std::swap(rows[rank], rows[piv]);
      for (int r = 0; r < static_cast<int>(rows.size()); ++r)
        if (r != rank && rows[r].first.test(col)) {
          rows[r].first ^= rows[rank].first;
          rows[r].second ^= rows[rank].second;
        }
      ++rank;
    }
    bool consistent = true;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r].second) {
        consistent = false;
        break;
      }
    if (consistent) total += Int(1) << (vars - rank);
  });
  return total;
}

SpasmBasis spasm(const Graph& pattern) {
  check_pattern_cap(pattern, "spasm");
  if (pattern.n == 0) throw InputError("spasm: empty pattern");
  SpasmBasis basis;
  basis.pattern = pattern;
  basis.aut_count = automorphism_count(pattern);
  static const long long kFact[9] = {1, 1, 2, 6, 24, 120, 720, 5040, 40320};
  std::map<std::tuple<int, int, std::vector<int>>, std::vector<size_t>> buckets;
  std::vector<int> rgs(pattern.n, 0);
  for (;;) {
    const int nb = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<int>> blocks(nb);
    for (int v = 0; v < pattern.n; ++v) blocks[rgs[v]].push_back(v);
    auto qr = quotient(pattern, blocks);
    if (qr.graph) {
      Int mu = 1;
      for (const auto& bl : blocks) {
        Int f = kFact[bl.size() - 1];
        mu *= bl.size() % 2 == 0 ? -f : f;
      }
      const Graph& q = *qr.graph;
      std::vector<int> ds(q.n);
      for (int v = 0; v < q.n; ++v) ds[v] = q.deg(v);
      std::sort(ds.begin(), ds.end());
      auto& bucket = buckets[{q.n, q.m(), ds}];
      bool merged = false;
      for (size_t idx : bucket)
        if (are_isomorphic(basis.entries[idx].quotient, q)) {
          basis.entries[idx].coefficient += mu;
          merged = true;
          break;
        }
      if (!merged) {
        bucket.push_back(basis.entries.size());
        basis.entries.push_back({q, mu});
      }
    }
    // next restricted growth string
    int i = pattern.n - 1;
    for (; i > 0; --i) {
      int mx = 0;
      for (int j = 0; j < i; ++j) mx = std::max(mx, rgs[j]);
      if (rgs[i] <= mx) {
        ++rgs[i];
        break;
      }
      rgs[i] = 0;
    }
    if (i == 0) break;
  }
  return basis;
}

Int sub_via_hom(const Graph& pattern, const Graph& host) {
  auto basis = spasm(pattern);
  Int inj = 0;
  for (const auto& e : basis.entries) {
    if (e.coefficient == 0) continue;
    inj += e.coefficient * hom_brute(e.quotient, host);
  }
  if (inj % basis.aut_count != 0)
    throw std::logic_error("sub_via_hom: |Aut| does not divide the hom sum");
  return inj / basis.aut_count;
}

CountingPower counting_power_check(const Graph& pattern, int d) {
  if (pattern.n == 0 || !pattern.connected())
    throw InputError("counting_power_check: pattern must be connected");
  auto basis = spasm(pattern);
  CountingPower out;
  out.countable = true;
  // Witness choice: smallest depth first (non-parallel-trees last), then
  // fewest vertices, then fewest edges, then enumeration order.
  std::tuple<int, int, int, size_t> best_key;
  for (size_t i = 0; i < basis.entries.size(); ++i) {
    const Graph& q = basis.entries[i].quotient;
    auto pr = parallel_tree_depth(q);
    const bool violates = !pr.depth || (d >= 0 && *pr.depth > d);
    if (!violates) continue;
    std::tuple<int, int, int, size_t> key{pr.depth ? *pr.depth : INT_MAX, q.n,
                                          q.m(), i};
    if (out.countable || key < best_key) {
      best_key = key;
      out.witness = q;
      out.witness_depth = pr.depth;
    }
    out.countable = false;
  }
  return out;
}

}  // namespace specwl
