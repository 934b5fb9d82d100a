#include "specwl/refine.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <random>
#include <unordered_map>

#include "specwl/wlzoo.hpp"

namespace specwl {

WalkTable walk_profiles(const Graph& g, int L) {
  if (L < 1) throw InputError("walk_profiles needs L >= 1");
  WalkTable t;
  t.n = g.n;
  t.L = L;
  t.w.assign((size_t)L * g.n * g.n, Int(0));
  for (int u = 0; u < g.n; u++) t.w[(size_t)u * g.n + u] = 1;
  for (int k = 1; k < L; k++) {
    const Int* prev = &t.w[(size_t)(k - 1) * g.n * g.n];
    Int* cur = &t.w[(size_t)k * g.n * g.n];
    for (int u = 0; u < g.n; u++) {
      const Int* prow = prev + (size_t)u * g.n;
      Int* crow = cur + (size_t)u * g.n;
      for (int v = 0; v < g.n; v++) {
        Int s = 0;
        for (int w2 : g.adj[v]) s += prow[w2];
        crow[v] = std::move(s);
      }
    }
  }
  return t;
}

namespace {

uint64_t int_limb_hash(const Int& x, uint64_t seed) {
  const auto& b = x.backend();
  return fnv1a(b.limbs(), b.size() * sizeof(*b.limbs()), seed);
}

// Canonical ranking of (prev_id, bignum) pairs across all slots of all
// graphs. Order: prev ascending, then numeric value ascending.
struct IntClassRanker {
  struct Rep {
    int prev;
    const Int* val;
  };
  std::unordered_map<uint64_t, std::vector<int>> buckets;
  std::vector<Rep> reps;

  int classify(int prev, const Int& val) {
    uint64_t h = int_limb_hash(val, 0x9e3779b97f4a7c15ULL ^ (uint64_t)prev * 0xff51afd7ed558ccdULL);
    auto& bucket = buckets[h];
    for (int idx : bucket)
      if (reps[idx].prev == prev && *reps[idx].val == val) return idx;
    bucket.push_back((int)reps.size());
    reps.push_back({prev, &val});
    return (int)reps.size() - 1;
  }

  // class index -> canonical rank
  std::vector<int> ranks() const {
    std::vector<int> order(reps.size());
    for (size_t i = 0; i < order.size(); i++) order[i] = (int)i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (reps[a].prev != reps[b].prev) return reps[a].prev < reps[b].prev;
      return *reps[a].val < *reps[b].val;
    });
    std::vector<int> rank(reps.size());
    for (size_t i = 0; i < order.size(); i++) rank[order[i]] = (int)i;
    return rank;
  }
};

// ---- modular fast path for large joints ----
// Profiles are compared modulo two fixed primes, and the profile length is
// cut at the degree of a common linear recurrence: every pair sequence
// (A^k)_{uv} satisfies the minimal polynomial of the block-diagonal joint
// adjacency, so length-r prefixes determine the full profiles.
constexpr uint64_t kP1 = 2305843009213693951ULL;  // 2^61 - 1
constexpr uint64_t kP2 = 4611686018427387847ULL;  // largest prime < 2^62
constexpr size_t kExactProfileLimit = 64;         // joint vertices

uint64_t addmod(uint64_t a, uint64_t b, uint64_t p) {
  a += b;
  return a >= p ? a - p : a;
}
uint64_t submod(uint64_t a, uint64_t b, uint64_t p) {
  return a >= b ? a - b : a + p - b;
}
uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return (uint64_t)((unsigned __int128)a * b % p);
}
uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

// Shortest recurrence s_i = sum_j rec[j] * s_{i-1-j} fitting the sequence.
std::vector<uint64_t> berlekamp_massey(const std::vector<uint64_t>& s, uint64_t p) {
  int n = (int)s.size(), deg = 0, m = 0;
  std::vector<uint64_t> C(n, 0), B(n, 0), T;
  C[0] = B[0] = 1;
  uint64_t b = 1;
  for (int i = 0; i < n; i++) {
    m++;
    uint64_t d = s[i] % p;
    for (int j = 1; j <= deg; j++) d = addmod(d, mulmod(C[j], s[i - j], p), p);
    if (d == 0) continue;
    T = C;
    uint64_t coef = mulmod(d, powmod(b, p - 2, p), p);
    for (int j = m; j < n; j++) C[j] = submod(C[j], mulmod(coef, B[j - m], p), p);
    if (2 * deg > i) continue;
    deg = i + 1 - deg;
    B = T;
    b = d;
    m = 0;
  }
  std::vector<uint64_t> rec(deg);
  for (int j = 0; j < deg; j++) rec[j] = submod(0, C[j + 1], p);
  return rec;
}

// y[v] = sum_{w in adj(v)} x[w], blockwise over the joint collection.
void joint_matvec(const std::vector<const Graph*>& gs, uint64_t p,
                  const std::vector<uint64_t>& x, std::vector<uint64_t>& y) {
  size_t off = 0;
  for (const Graph* gp : gs) {
    for (int v = 0; v < gp->n; v++) {
      unsigned __int128 acc = 0;
      for (int w : gp->adj[v]) acc += x[off + w];
      y[off + v] = (uint64_t)(acc % p);
    }
    off += gp->n;
  }
}

// Degree of a verified common recurrence for all (A^k)_{uv} sequences mod p,
// or -1 when no short recurrence could be certified.
int recurrence_degree(const std::vector<const Graph*>& gs, size_t total,
                      uint64_t p, std::mt19937_64& rng) {
  const int terms = (int)(2 * total + 4);
  for (int attempt = 0; attempt < 3; attempt++) {
    std::vector<uint64_t> u(total), x(total), y(total);
    for (auto& e : u) e = rng() % p;
    for (auto& e : x) e = rng() % p;
    std::vector<uint64_t> s(terms);
    for (int k = 0; k < terms; k++) {
      unsigned __int128 dot = 0;
      for (size_t i = 0; i < total; i++) {
        dot += mulmod(u[i], x[i], p);
        if ((i & 15) == 15) dot %= p;
      }
      s[k] = (uint64_t)(dot % p);
      if (k + 1 < terms) {
        joint_matvec(gs, p, x, y);
        std::swap(x, y);
      }
    }
    auto rec = berlekamp_massey(s, p);
    const int r = std::max<int>(1, (int)rec.size());
    // certify rec(A) = 0 on two random vectors
    bool ok = true;
    for (int trial = 0; trial < 2 && ok; trial++) {
      std::vector<std::vector<uint64_t>> kry(r + 1, std::vector<uint64_t>(total));
      for (auto& e : kry[0]) e = rng() % p;
      for (int k = 1; k <= r; k++) joint_matvec(gs, p, kry[k - 1], kry[k]);
      for (size_t i = 0; i < total && ok; i++) {
        unsigned __int128 acc = 0;
        for (int j = 0; j < (int)rec.size(); j++)
          acc += mulmod(rec[j], kry[r - 1 - j][i], p);
        ok = kry[r][i] == (uint64_t)(acc % p);
      }
    }
    if (ok) return r;
  }
  return -1;
}

// Canonical ranking of (prev_id, residue pair) slots; same contract as
// IntClassRanker but ordered by residues, so ranks differ from the exact
// path while the induced partition is identical.
struct ModClassRanker {
  struct Rep {
    int prev;
    uint64_t a, b;
  };
  std::unordered_map<uint64_t, std::vector<int>> buckets;
  std::vector<Rep> reps;

  int classify(int prev, uint64_t a, uint64_t b) {
    uint64_t h = fnv1a(&a, sizeof a, 0x9e3779b97f4a7c15ULL ^ (uint64_t)prev);
    h = fnv1a(&b, sizeof b, h);
    auto& bucket = buckets[h];
    for (int idx : bucket)
      if (reps[idx].prev == prev && reps[idx].a == a && reps[idx].b == b)
        return idx;
    bucket.push_back((int)reps.size());
    reps.push_back({prev, a, b});
    return (int)reps.size() - 1;
  }

  std::vector<int> ranks() const {
    std::vector<int> order(reps.size());
    for (size_t i = 0; i < order.size(); i++) order[i] = (int)i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      const Rep &ra = reps[x], &rb = reps[y];
      if (ra.prev != rb.prev) return ra.prev < rb.prev;
      if (ra.a != rb.a) return ra.a < rb.a;
      return ra.b < rb.b;
    });
    std::vector<int> rank(reps.size());
    for (size_t i = 0; i < order.size(); i++) rank[order[i]] = (int)i;
    return rank;
  }
};

std::vector<std::vector<int>> joint_pair_ids_mod(const std::vector<const Graph*>& gs,
                                                 int L, size_t total) {
  std::mt19937_64 rng(0x5ec7a11d2026ULL);  // fixed seed: deterministic ids
  const int r1 = recurrence_degree(gs, total, kP1, rng);
  const int r2 = recurrence_degree(gs, total, kP2, rng);
  const int cut = (r1 < 0 || r2 < 0) ? L : std::min(L, std::max(r1, r2));
  const int ng = (int)gs.size();
  std::vector<std::vector<uint64_t>> ca(ng), cb(ng), na(ng), nb(ng);
  std::vector<std::vector<int>> ids(ng);
  for (int i = 0; i < ng; i++) {
    const size_t nn = (size_t)gs[i]->n * gs[i]->n;
    ca[i].assign(nn, 0);
    cb[i].assign(nn, 0);
    na[i].assign(nn, 0);
    nb[i].assign(nn, 0);
    ids[i].assign(nn, 0);
    for (int u = 0; u < gs[i]->n; u++) {
      ca[i][(size_t)u * gs[i]->n + u] = 1;
      cb[i][(size_t)u * gs[i]->n + u] = 1;
    }
  }
  for (int k = 0; k < cut; k++) {
    if (k > 0) {
      for (int i = 0; i < ng; i++) {
        const Graph& g = *gs[i];
        const int n = g.n;
        for (int u = 0; u < n; u++) {
          const uint64_t* pa = &ca[i][(size_t)u * n];
          const uint64_t* pb = &cb[i][(size_t)u * n];
          uint64_t* qa = &na[i][(size_t)u * n];
          uint64_t* qb = &nb[i][(size_t)u * n];
          for (int v = 0; v < n; v++) {
            unsigned __int128 sa = 0, sb = 0;
            for (int w2 : g.adj[v]) {
              sa += pa[w2];
              sb += pb[w2];
            }
            qa[v] = (uint64_t)(sa % kP1);
            qb[v] = (uint64_t)(sb % kP2);
          }
        }
      }
      for (int i = 0; i < ng; i++) {
        std::swap(ca[i], na[i]);
        std::swap(cb[i], nb[i]);
      }
    }
    ModClassRanker ranker;
    std::vector<std::vector<int>> slot_class(ng);
    for (int i = 0; i < ng; i++) {
      slot_class[i].resize(ids[i].size());
      for (size_t s = 0; s < ids[i].size(); s++)
        slot_class[i][s] = ranker.classify(ids[i][s], ca[i][s], cb[i][s]);
    }
    auto rank = ranker.ranks();
    for (int i = 0; i < ng; i++)
      for (size_t s = 0; s < ids[i].size(); s++) ids[i][s] = rank[slot_class[i][s]];
  }
  return ids;
}

enum class ProfileMode { kAuto, kExact, kMod };

ProfileMode profile_mode() {
  const char* e = std::getenv("SPECWL_PROFILE_MODE");
  if (!e || !*e) return ProfileMode::kAuto;
  const std::string s(e);
  if (s == "auto") return ProfileMode::kAuto;
  if (s == "exact") return ProfileMode::kExact;
  if (s == "mod") return ProfileMode::kMod;
  throw InputError("SPECWL_PROFILE_MODE must be auto, exact, or mod");
}

}  // namespace

std::vector<std::vector<int>> joint_walk_pair_ids(const std::vector<const Graph*>& gs,
                                                  int L) {
  if (L < 1) throw InputError("pair ids need L >= 1");
  size_t total = 0;
  for (const Graph* gp : gs) total += gp->n;
  const ProfileMode mode = profile_mode();
  if (mode == ProfileMode::kMod ||
      (mode == ProfileMode::kAuto && total > kExactProfileLimit))
    return joint_pair_ids_mod(gs, L, total);
  int ng = (int)gs.size();
  std::vector<std::vector<Int>> cur(ng), next(ng);
  std::vector<std::vector<int>> ids(ng);
  for (int i = 0; i < ng; i++) {
    int n = gs[i]->n;
    cur[i].assign((size_t)n * n, Int(0));
    next[i].assign((size_t)n * n, Int(0));
    ids[i].assign((size_t)n * n, 0);
    for (int u = 0; u < n; u++) cur[i][(size_t)u * n + u] = 1;
  }
  for (int k = 0; k < L; k++) {
    if (k > 0) {
      for (int i = 0; i < ng; i++) {
        const Graph& g = *gs[i];
        int n = g.n;
        for (int u = 0; u < n; u++) {
          const Int* prow = &cur[i][(size_t)u * n];
          Int* crow = &next[i][(size_t)u * n];
          for (int v = 0; v < n; v++) {
            Int s = 0;
            for (int w2 : g.adj[v]) s += prow[w2];
            crow[v] = std::move(s);
          }
        }
      }
      for (int i = 0; i < ng; i++) std::swap(cur[i], next[i]);
    }
    IntClassRanker ranker;
    std::vector<std::vector<int>> slot_class(ng);
    for (int i = 0; i < ng; i++) {
      int n = gs[i]->n;
      slot_class[i].resize((size_t)n * n);
      for (size_t p = 0; p < (size_t)n * n; p++)
        slot_class[i][p] = ranker.classify(ids[i][p], cur[i][p]);
    }
    auto rank = ranker.ranks();
    for (int i = 0; i < ng; i++)
      for (size_t p = 0; p < ids[i].size(); p++) ids[i][p] = rank[slot_class[i][p]];
  }
  return ids;
}

std::vector<std::vector<int>> joint_float_pair_ids(const std::vector<const Graph*>& gs,
                                                   double tol) {
  if (tol <= 0) throw InputError("eig_tolerance must be positive");
  auto round9 = [](double x) {
    double r = std::nearbyint(x * 1e9) / 1e9;
    if (r == 0.0) r = 0.0;  // normalize -0
    return r;
  };
  int ng = (int)gs.size();
  // per pair: serialized profile string over eigenvalue groups
  std::vector<std::vector<std::string>> profs(ng);
  for (int i = 0; i < ng; i++) {
    const Graph& g = *gs[i];
    int n = g.n;
    profs[i].assign((size_t)n * n, "");
    if (n == 0) continue;
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    for (auto [u, v] : g.edges) A(u, v) = A(v, u) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
    if (es.info() != Eigen::Success) throw EigenError("eigendecomposition failed");
    const auto& ev = es.eigenvalues();
    const auto& Q = es.eigenvectors();
    // group eigenvalues: consecutive gap < tol (ascending order)
    std::vector<std::pair<int, int>> groups;  // [lo, hi)
    int lo = 0;
    for (int j = 1; j <= n; j++) {
      if (j == n || ev(j) - ev(j - 1) >= tol) {
        groups.push_back({lo, j});
        lo = j;
      }
    }
    std::vector<double> glam(groups.size());
    for (size_t gi = 0; gi < groups.size(); gi++) {
      double s = 0;
      for (int j = groups[gi].first; j < groups[gi].second; j++) s += ev(j);
      glam[gi] = round9(s / (groups[gi].second - groups[gi].first));
    }
    char buf[64];
    for (int u = 0; u < n; u++)
      for (int v = 0; v < n; v++) {
        std::string& s = profs[i][(size_t)u * n + v];
        for (size_t gi = 0; gi < groups.size(); gi++) {
          double p = 0;
          for (int j = groups[gi].first; j < groups[gi].second; j++)
            p += Q(u, j) * Q(v, j);
          std::snprintf(buf, sizeof buf, "(%.9f,%.9f)", glam[gi], round9(p));
          s += buf;
        }
      }
  }
  // joint rank of distinct strings
  std::vector<std::string> distinct;
  for (auto& pg : profs)
    for (auto& s : pg) distinct.push_back(s);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::unordered_map<std::string, int> rank;
  for (size_t i = 0; i < distinct.size(); i++) rank[distinct[i]] = (int)i;
  std::vector<std::vector<int>> ids(ng);
  for (int i = 0; i < ng; i++) {
    ids[i].resize(profs[i].size());
    for (size_t p = 0; p < profs[i].size(); p++) ids[i][p] = rank[profs[i][p]];
  }
  return ids;
}

namespace {

// Canonical ranking of uint64-sequence signatures; order is
// (length, lexicographic) over the distinct sequences.
struct SpanRanker {
  const std::vector<uint64_t>* buf = nullptr;
  struct Rep {
    size_t off, len;
  };
  std::unordered_map<uint64_t, std::vector<int>> buckets;
  std::vector<Rep> reps;

  int classify(size_t off, size_t len) {
    const uint64_t* p = buf->data() + off;
    uint64_t h = fnv1a(p, len * 8, 0x100001b3u ^ (uint64_t)len);
    auto& bucket = buckets[h];
    for (int idx : bucket) {
      const Rep& r = reps[idx];
      if (r.len == len && std::memcmp(buf->data() + r.off, p, len * 8) == 0) return idx;
    }
    bucket.push_back((int)reps.size());
    reps.push_back({off, len});
    return (int)reps.size() - 1;
  }

  std::vector<int> ranks() const {
    std::vector<int> order(reps.size());
    for (size_t i = 0; i < order.size(); i++) order[i] = (int)i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      const Rep &ra = reps[a], &rb = reps[b];
      if (ra.len != rb.len) return ra.len < rb.len;
      const uint64_t *pa = buf->data() + ra.off, *pb = buf->data() + rb.off;
      for (size_t i = 0; i < ra.len; i++)
        if (pa[i] != pb[i]) return pa[i] < pb[i];
      return false;
    });
    std::vector<int> rank(reps.size());
    for (size_t i = 0; i < order.size(); i++) rank[order[i]] = (int)i;
    return rank;
  }
};

uint64_t hash_sorted_spans(const std::vector<uint64_t>& buf,
                           std::vector<std::pair<size_t, size_t>> spans) {
  std::sort(spans.begin(), spans.end(), [&](auto a, auto b) {
    if (a.second != b.second) return a.second < b.second;
    const uint64_t *pa = buf.data() + a.first, *pb = buf.data() + b.first;
    for (size_t i = 0; i < a.second; i++)
      if (pa[i] != pb[i]) return pa[i] < pb[i];
    return false;
  });
  uint64_t h = 0xcbf29ce484222325ULL;
  for (auto [off, len] : spans) {
    uint64_t l = len;
    h = fnv1a(&l, 8, h);
    h = fnv1a(buf.data() + off, len * 8, h);
  }
  return h;
}

}  // namespace

JointRefinement run_joint_refinement(
    const std::vector<int>& item_counts, int d, const std::string& algo,
    const std::function<void(int g, int item, std::vector<uint64_t>& buf)>& init_sig,
    const std::function<void(int g, int item, const std::vector<std::vector<int>>& colors,
                             std::vector<uint64_t>& buf)>& step_sig) {
  int ng = (int)item_counts.size();
  JointRefinement out;
  out.traces.resize(ng);
  for (int i = 0; i < ng; i++) out.traces[i].algo = algo;

  std::vector<std::vector<int>> colors(ng);
  int total_items = 0;
  for (int i = 0; i < ng; i++) total_items += item_counts[i];

  auto record_iteration = [&](const std::vector<uint64_t>& buf,
                              const std::vector<std::vector<std::pair<size_t, size_t>>>& spans) {
    for (int i = 0; i < ng; i++) {
      TraceIteration it;
      it.colors = colors[i];
      it.invariant_hash = hex64(hash_sorted_spans(buf, spans[i]));
      out.traces[i].iterations.push_back(std::move(it));
    }
  };
  auto check_distinguished = [&](int t) {
    if (ng != 2 || out.distinguished_at >= 0) return;
    std::vector<int> a = colors[0], b = colors[1];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) out.distinguished_at = t;
  };

  // iteration 0
  int classes_prev;
  {
    std::vector<uint64_t> buf;
    std::vector<std::vector<std::pair<size_t, size_t>>> spans(ng);
    SpanRanker ranker;
    ranker.buf = &buf;
    std::vector<std::vector<int>> cls(ng);
    for (int i = 0; i < ng; i++) {
      colors[i].assign(item_counts[i], 0);
      cls[i].resize(item_counts[i]);
      spans[i].resize(item_counts[i]);
      for (int it = 0; it < item_counts[i]; it++) {
        size_t off = buf.size();
        init_sig(i, it, buf);
        spans[i][it] = {off, buf.size() - off};
      }
    }
    for (int i = 0; i < ng; i++)
      for (int it = 0; it < item_counts[i]; it++)
        cls[i][it] = ranker.classify(spans[i][it].first, spans[i][it].second);
    auto rank = ranker.ranks();
    for (int i = 0; i < ng; i++)
      for (int it = 0; it < item_counts[i]; it++) colors[i][it] = rank[cls[i][it]];
    classes_prev = (int)ranker.reps.size();
    record_iteration(buf, spans);
    check_distinguished(0);
  }

  int max_iters = (d == ITERS_STABLE) ? total_items + 1 : d;
  bool stabilized = false;
  int t = 0;
  while (t < max_iters) {
    t++;
    if (stabilized) {
      // partition frozen; repeat the previous record deterministically
      for (int i = 0; i < ng; i++)
        out.traces[i].iterations.push_back(out.traces[i].iterations.back());
      continue;
    }
    std::vector<uint64_t> buf;
    std::vector<std::vector<std::pair<size_t, size_t>>> spans(ng);
    SpanRanker ranker;
    ranker.buf = &buf;
    std::vector<std::vector<int>> cls(ng);
    for (int i = 0; i < ng; i++) {
      cls[i].resize(item_counts[i]);
      spans[i].resize(item_counts[i]);
      for (int it = 0; it < item_counts[i]; it++) {
        size_t off = buf.size();
        step_sig(i, it, colors, buf);
        spans[i][it] = {off, buf.size() - off};
      }
    }
    for (int i = 0; i < ng; i++)
      for (int it = 0; it < item_counts[i]; it++)
        cls[i][it] = ranker.classify(spans[i][it].first, spans[i][it].second);
    auto rank = ranker.ranks();
    for (int i = 0; i < ng; i++)
      for (int it = 0; it < item_counts[i]; it++) colors[i][it] = rank[cls[i][it]];
    int classes_now = (int)ranker.reps.size();
    record_iteration(buf, spans);
    check_distinguished(t);
    if (classes_now == classes_prev) {
      stabilized = true;
      if (d == ITERS_STABLE) break;
    }
    classes_prev = classes_now;
  }
  out.stable = stabilized;
  return out;
}

JointRefinement refine_vertices_joint(const std::vector<const Graph*>& gs,
                                      const std::vector<std::vector<int>>& pair_ids,
                                      int d, const std::string& algo) {
  std::vector<int> counts;
  for (auto* g : gs) counts.push_back(g->n);
  auto init = [](int, int, std::vector<uint64_t>& buf) { buf.push_back(0); };
  auto step = [&](int i, int u, const std::vector<std::vector<int>>& colors,
                  std::vector<uint64_t>& buf) {
    int n = gs[i]->n;
    buf.push_back((uint64_t)colors[i][u]);
    size_t start = buf.size();
    for (int v = 0; v < n; v++)
      buf.push_back((uint64_t)colors[i][v] << 32 |
                    (uint64_t)pair_ids[i][(size_t)u * n + v]);
    std::sort(buf.begin() + start, buf.end());
  };
  return run_joint_refinement(counts, d, algo, init, step);
}

RefinementTrace spectral_refine(const Graph& g, int d, int L) {
  if (d < 0 && d != ITERS_STABLE) throw InputError("iterations must be >= 0 or stable");
  if (L == 0) L = std::max(g.n, 1);
  std::vector<const Graph*> gs{&g};
  auto jr = refine_vertices_joint(gs, joint_walk_pair_ids(gs, L), d, "spec");
  jr.traces[0].stable = jr.stable;
  return jr.traces[0];
}

RefinementTrace spectral_refine_float(const Graph& g, int d, double tol) {
  if (d < 0 && d != ITERS_STABLE) throw InputError("iterations must be >= 0 or stable");
  std::vector<const Graph*> gs{&g};
  auto jr = refine_vertices_joint(gs, joint_float_pair_ids(gs, tol), d, "spec-float");
  jr.traces[0].stable = jr.stable;
  return jr.traces[0];
}

JointRefinement korder_refine_joint(const std::vector<const Graph*>& gs, int k, int d) {
  if (k < 1) throw InputError("k >= 1");
  int L = 1;
  for (auto* g : gs) L = std::max(L, g->n);
  std::vector<int> counts;
  std::vector<std::vector<int>> strides(gs.size());
  for (size_t i = 0; i < gs.size(); i++) {
    int n = gs[i]->n;
    int64_t tuples = 1;
    for (int j = 0; j < k; j++) {
      tuples *= std::max(n, 1);
      if (tuples > (1 << 20)) throw CapError("korder tuple table exceeds cap");
    }
    counts.push_back((int)tuples);
    strides[i].resize(k);
    int64_t s = 1;
    for (int j = k - 1; j >= 0; j--) {
      strides[i][j] = (int)s;
      s *= std::max(n, 1);
    }
  }
  auto pair_ids = joint_walk_pair_ids(gs, L);
  // k = 1 degenerates to the standard vertex refinement; reuse its exact
  // signature stream so traces match spectral_refine byte for byte.
  if (k == 1) return refine_vertices_joint(gs, pair_ids, d, "kspec");
  auto decode = [&](int i, int item, std::vector<int>& tup) {
    int n = std::max(gs[i]->n, 1);
    for (int j = k - 1; j >= 0; j--) {
      tup[j] = item % n;
      item /= n;
    }
  };
  auto init = [&](int i, int item, std::vector<uint64_t>& buf) {
    int n = gs[i]->n;
    std::vector<int> tup(k);
    decode(i, item, tup);
    for (int a = 0; a < k; a++)
      for (int b = a + 1; b < k; b++)
        buf.push_back((uint64_t)pair_ids[i][(size_t)tup[a] * n + tup[b]]);
  };
  auto step = [&](int i, int item, const std::vector<std::vector<int>>& colors,
                  std::vector<uint64_t>& buf) {
    int n = gs[i]->n;
    std::vector<int> tup(k);
    decode(i, item, tup);
    buf.push_back((uint64_t)colors[i][item]);
    for (int j = 0; j < k; j++) {
      size_t start = buf.size();
      for (int v = 0; v < n; v++) {
        int item2 = item + (v - tup[j]) * strides[i][j];
        buf.push_back((uint64_t)colors[i][item2] << 32 |
                      (uint64_t)pair_ids[i][(size_t)tup[j] * n + v]);
      }
      std::sort(buf.begin() + start, buf.end());
      buf.push_back(0xffffffffffffffffULL);  // positional separator
    }
  };
  return run_joint_refinement(counts, d, "kspec", init, step);
}

RefinementTrace korder_refine(const Graph& g, int k, int d) {
  if (d < 0 && d != ITERS_STABLE) throw InputError("iterations must be >= 0 or stable");
  std::vector<const Graph*> gs{&g};
  auto jr = korder_refine_joint(gs, k, d);
  jr.traces[0].stable = jr.stable;
  return jr.traces[0];
}

Algo algo_from_string(const std::string& s) {
  if (s == "spec") return Algo::Spec;
  if (s == "spec-float") return Algo::SpecFloat;
  if (s == "wl1") return Algo::WL1;
  if (s == "fwl2") return Algo::FWL2;
  if (s == "local2") return Algo::Local2;
  if (s == "local4") return Algo::Local4;
  if (s == "subgraph") return Algo::Subgraph;
  if (s == "kspec") return Algo::KSpec;
  throw InputError("unknown algo: " + s);
}

std::string algo_name(Algo a) {
  switch (a) {
    case Algo::Spec: return "spec";
    case Algo::SpecFloat: return "spec-float";
    case Algo::WL1: return "wl1";
    case Algo::FWL2: return "fwl2";
    case Algo::Local2: return "local2";
    case Algo::Local4: return "local4";
    case Algo::Subgraph: return "subgraph";
    case Algo::KSpec: return "kspec";
  }
  return "?";
}

CompareVerdict compare_graphs(const Graph& g, const Graph& h, Algo algo, int d, int k) {
  std::vector<const Graph*> gs{&g, &h};
  JointRefinement jr;
  switch (algo) {
    case Algo::Spec: {
      int L = std::max({g.n, h.n, 1});
      jr = refine_vertices_joint(gs, joint_walk_pair_ids(gs, L), d, "spec");
      break;
    }
    case Algo::SpecFloat:
      jr = refine_vertices_joint(gs, joint_float_pair_ids(gs, 1e-9), d, "spec-float");
      break;
    case Algo::KSpec:
      jr = korder_refine_joint(gs, k, d);
      break;
    default:
      jr = wlzoo_joint(gs, algo, d);
      break;
  }
  CompareVerdict v;
  v.iters_run = (int)jr.traces[0].iterations.size() - 1;
  if (jr.distinguished_at >= 0) {
    v.distinguished = true;
    v.iteration = jr.distinguished_at;
  }
  return v;
}

}  // namespace specwl
