#include "unmix/triangulate.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_set>
#include <utility>

// Regular triangulation by lifted lower-hull traversal.
//
// Points are lifted to (p, w(p)) with integer lifts; the lower-hull
// facets of the lifted set project to the cells of the regular
// subdivision. A first cell is found by rotating a supporting
// hyperplane (gift wrapping in the lifted space); the rest are reached
// by pivoting across cell walls. For a cell with barycentric matrix
// M (rows (1, p_i)) and adjugate X (M*X = D*I), the scaled barycentric
// coordinates  lam_k(x) = ((1,x)*X)_k  drive everything:
//   - D = |det M| is the cell's normalized volume,
//   - wall k is a hull facet iff lam_k >= 0 for every point,
//   - otherwise the neighbor across wall k replaces vertex k by the
//     point minimizing  s_j / (-lam_k(p_j))  where s_j is the lifted
//     slack of point j over the cell's hyperplane.
// All arithmetic is exact: a checked 128-bit kernel handles the common
// case and falls back to GMP integers per cell on overflow. Ties in
// the minimum-ratio test mean the lifting is not generic; the whole
// attempt is retried with the next derived seed.

namespace unmix {

namespace {

struct kernel_overflow {};
struct nongeneric_lift {
  std::string why;
};

// ---------------------------------------------------------------- I128

struct I128 {
  __int128 v = 0;
  I128() = default;
  I128(int64_t x) : v(x) {}  // NOLINT(google-explicit-constructor)

  friend I128 operator+(I128 a, I128 b) {
    I128 r;
    if (__builtin_add_overflow(a.v, b.v, &r.v)) throw kernel_overflow{};
    return r;
  }
  friend I128 operator-(I128 a, I128 b) {
    I128 r;
    if (__builtin_sub_overflow(a.v, b.v, &r.v)) throw kernel_overflow{};
    return r;
  }
  friend I128 operator*(I128 a, I128 b) {
    I128 r;
    if (__builtin_mul_overflow(a.v, b.v, &r.v)) throw kernel_overflow{};
    return r;
  }
  I128 operator-() const {
    if (v == low_bound()) throw kernel_overflow{};
    I128 r;
    r.v = -v;
    return r;
  }
  friend bool operator==(I128 a, I128 b) { return a.v == b.v; }
  friend bool operator<(I128 a, I128 b) { return a.v < b.v; }
  int sign() const { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

  static __int128 low_bound() { return __int128(1) << 126; }
};

void divx(I128& q, const I128& a, const I128& b) { q.v = a.v / b.v; }

void divx(Int& q, const Int& a, const Int& b) {
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

int sign_of(const I128& x) { return x.sign(); }
int sign_of(const Int& x) { return sgn(x); }

Int to_int(const I128& x) {
  bool neg = x.v < 0;
  unsigned __int128 u = neg ? (unsigned __int128)0 - (unsigned __int128)x.v
                            : (unsigned __int128)x.v;
  Int r = static_cast<uint64_t>(u >> 64);
  r <<= 64;
  r += static_cast<uint64_t>(u);
  return neg ? Int(-r) : r;
}
Int to_int(const Int& x) { return x; }

// Compares a*b against c*d for nonnegative operands, via 256-bit
// products (the individual factors may use the full 128-bit range).
int cmp_prod(const I128& a, const I128& b, const I128& c, const I128& d) {
  using u128 = unsigned __int128;
  auto mul = [](u128 x, u128 y, u128& hi, u128& lo) {
    uint64_t xl = static_cast<uint64_t>(x), yl = static_cast<uint64_t>(y);
    u128 xh = x >> 64, yh = y >> 64;
    u128 ll = (u128)xl * yl;
    u128 lh = (u128)xl * yh;
    u128 hl = xh * yl;
    u128 hh = xh * yh;
    u128 carry = (ll >> 64) + (u128)(uint64_t)lh + (u128)(uint64_t)hl;
    lo = ((u128)(uint64_t)carry << 64) | (uint64_t)ll;
    hi = hh + (lh >> 64) + (hl >> 64) + (carry >> 64);
  };
  u128 h1, l1, h2, l2;
  mul((u128)a.v, (u128)b.v, h1, l1);
  mul((u128)c.v, (u128)d.v, h2, l2);
  if (h1 != h2) return h1 < h2 ? -1 : 1;
  if (l1 != l2) return l1 < l2 ? -1 : 1;
  return 0;
}

int cmp_prod(const Int& a, const Int& b, const Int& c, const Int& d) {
  Int x = a * b, y = c * d;
  return cmp(x, y);
}

// ------------------------------------------------------------- config

struct LatticeConfig {
  int n = 0;
  size_t m = 0;
  Int dilation = 1;
  std::vector<std::vector<Int>> pts;  // dilated integer coordinates
  bool small_ok = true;
  std::vector<std::vector<std::pair<int, int64_t>>> nz64;
  std::vector<std::vector<std::pair<int, Int>>> nzbig;
};

LatticeConfig make_config(const Support& s) {
  LatticeConfig cfg;
  cfg.n = s.dim;
  cfg.m = s.size();
  Int d = 1;
  for (const auto& p : s.points)
    for (const Rat& c : p) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.den().get_mpz_t());
  cfg.dilation = d;
  cfg.pts.resize(cfg.m);
  cfg.nz64.resize(cfg.m);
  cfg.nzbig.resize(cfg.m);
  for (size_t j = 0; j < cfg.m; ++j) {
    cfg.pts[j].resize(cfg.n);
    for (int k = 0; k < cfg.n; ++k) {
      Rat v = s.points[j][k] * Rat(d);
      cfg.pts[j][k] = v.num();
      if (cfg.pts[j][k] != 0) {
        cfg.nzbig[j].emplace_back(k, cfg.pts[j][k]);
        if (cfg.pts[j][k].fits_slong_p())
          cfg.nz64[j].emplace_back(k, cfg.pts[j][k].get_si());
        else
          cfg.small_ok = false;
      }
    }
  }
  return cfg;
}

template <class T>
struct PointView;

template <>
struct PointView<I128> {
  const LatticeConfig* cfg;
  const std::vector<std::pair<int, int64_t>>& nz(size_t j) const { return cfg->nz64[j]; }
};
template <>
struct PointView<Int> {
  const LatticeConfig* cfg;
  const std::vector<std::pair<int, Int>>& nz(size_t j) const { return cfg->nzbig[j]; }
};

// --------------------------------------------------------- cell kernel

struct CellOutput {
  Int vol;
  std::vector<std::vector<int32_t>> neighbors;
  // boundary walls as primitive inner hyperplanes (normal, offset),
  // in dilated coordinates
  std::vector<std::pair<std::vector<Int>, Int>> walls;
};

template <class T>
CellOutput process_cell(const LatticeConfig& cfg, const std::vector<int64_t>& lifts,
                        const std::vector<int32_t>& ids, bool collect_facets) {
  const int n = cfg.n;
  const int N = n + 1;
  const size_t m = cfg.m;
  PointView<T> pv{&cfg};

  // Fraction-free Gauss-Jordan on [M | I]; ends with the adjugate X
  // (M*X = D*I) in the right block and D as the last pivot.
  std::vector<T> tab(static_cast<size_t>(N) * 2 * N);
  auto at = [&](int i, int j) -> T& { return tab[static_cast<size_t>(i) * 2 * N + j]; };
  for (int l = 0; l < N; ++l) {
    at(l, 0) = T(1);
    for (const auto& [d, v] : pv.nz(ids[l])) at(l, 1 + d) = T(v);
    at(l, N + l) = T(1);
  }
  T prev(1);
  for (int k = 0; k < N; ++k) {
    if (sign_of(at(k, k)) == 0) {
      int r = k + 1;
      while (r < N && sign_of(at(r, k)) == 0) ++r;
      if (r == N) throw std::logic_error("triangulate: singular cell matrix");
      for (int j = 0; j < 2 * N; ++j) std::swap(at(k, j), at(r, j));
    }
    const T piv = at(k, k);
    for (int i = 0; i < N; ++i) {
      if (i == k) continue;
      const T f = at(i, k);
      for (int j = k + 1; j < 2 * N; ++j) {
        T t = at(i, j) * piv - f * at(k, j);
        divx(at(i, j), t, prev);
      }
      at(i, k) = T(0);
    }
    prev = piv;
  }
  T det = prev;
  std::vector<T> adj(static_cast<size_t>(N) * N);
  {
    bool flip = sign_of(det) < 0;
    if (flip) det = -det;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) adj[static_cast<size_t>(i) * N + j] = flip ? -at(i, N + j) : at(i, N + j);
  }

  // Scaled barycentric coordinates of every point, then lifted slacks.
  std::vector<T> lam(m * static_cast<size_t>(N));
  for (size_t j = 0; j < m; ++j) {
    T* row = &lam[j * N];
    for (int k = 0; k < N; ++k) row[k] = adj[k];  // the (1, .) term
    for (const auto& [d, v] : pv.nz(j)) {
      const T tv(v);
      const T* arow = &adj[static_cast<size_t>(1 + d) * N];
      for (int k = 0; k < N; ++k) row[k] = row[k] + tv * arow[k];
    }
  }
  // Self-check: the cell's own rows must give D*e_l. Catches any
  // arithmetic fault in the elimination before it can propagate.
  for (int l = 0; l < N; ++l) {
    const T* row = &lam[static_cast<size_t>(ids[l]) * N];
    for (int k = 0; k < N; ++k) {
      if (!(row[k] == (k == l ? det : T(0))))
        throw std::logic_error("triangulate: adjugate self-check failed");
    }
  }
  std::vector<T> slack(m);
  std::vector<bool> in_cell(m, false);
  for (int l = 0; l < N; ++l) in_cell[ids[l]] = true;
  for (size_t j = 0; j < m; ++j) {
    if (in_cell[j]) continue;
    T s = det * T(lifts[j]);
    const T* row = &lam[j * N];
    for (int k = 0; k < N; ++k) s = s - row[k] * T(lifts[ids[k]]);
    int sg = sign_of(s);
    if (sg < 0) throw std::logic_error("triangulate: point below cell hyperplane");
    if (sg == 0) throw nongeneric_lift{"extra lifted point on a cell hyperplane"};
    slack[j] = s;
  }

  CellOutput out;
  out.vol = to_int(det);
  for (int k = 0; k < N; ++k) {
    // Pivot across wall k: minimize slack_j / (-lam_k(p_j)) over points
    // strictly on the far side of the wall hyperplane.
    size_t best = m;
    for (size_t j = 0; j < m; ++j) {
      if (in_cell[j]) continue;
      const T& g = lam[j * N + k];
      if (!(sign_of(g) < 0)) continue;
      if (best == m) {
        best = j;
        continue;
      }
      int c = cmp_prod(slack[j], -lam[best * N + k], slack[best], -g);
      if (c == 0) throw nongeneric_lift{"tied minimum-ratio pivot"};
      if (c < 0) best = j;
    }
    if (best == m) {
      if (collect_facets) {
        std::vector<Int> normal(n);
        for (int d = 0; d < n; ++d) normal[d] = to_int(adj[static_cast<size_t>(1 + d) * N + k]);
        Int offset = -to_int(adj[k]);
        Int g = ::abs(offset);
        for (const Int& x : normal) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g > 1) {
          for (Int& x : normal) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
          mpz_divexact(offset.get_mpz_t(), offset.get_mpz_t(), g.get_mpz_t());
        }
        out.walls.emplace_back(std::move(normal), std::move(offset));
      }
    } else {
      std::vector<int32_t> nb(ids);
      nb[k] = static_cast<int32_t>(best);
      std::sort(nb.begin(), nb.end());
      out.neighbors.push_back(std::move(nb));
    }
  }
  return out;
}

CellOutput process_dispatch(const LatticeConfig& cfg, const std::vector<int64_t>& lifts,
                            const std::vector<int32_t>& ids, bool collect_facets) {
  if (cfg.small_ok) {
    try {
      return process_cell<I128>(cfg, lifts, ids, collect_facets);
    } catch (const kernel_overflow&) {
      // fall through to the arbitrary-precision kernel
    }
  }
  return process_cell<Int>(cfg, lifts, ids, collect_facets);
}

// ----------------------------------------------------- first cell

// Gift wrapping in the lifted space: rotate a supporting hyperplane,
// starting from the single lowest lifted point, until it touches n+1
// points. Runs once per lifting attempt, so plain rational slack
// bookkeeping is fine here.
std::vector<int32_t> initial_cell(const LatticeConfig& cfg,
                                  const std::vector<int64_t>& lifts) {
  const int n = cfg.n;
  const size_t m = cfg.m;

  std::vector<Rat> slack(m);
  std::vector<bool> in_face(m, false);
  std::vector<int32_t> face;
  {
    size_t lowest = 0;
    for (size_t j = 1; j < m; ++j)
      if (lifts[j] < lifts[lowest]) lowest = j;
    for (size_t j = 0; j < m; ++j) slack[j] = Rat(lifts[j] - lifts[lowest]);
    face.push_back(static_cast<int32_t>(lowest));
    in_face[lowest] = true;
    for (size_t j = 0; j < m; ++j)
      if (!in_face[j] && slack[j].is_zero()) throw nongeneric_lift{"tied lift values"};
  }

  while (face.size() < static_cast<size_t>(n) + 1) {
    // Rotation direction: vanishes on the current face's directions.
    std::vector<Int> beta;
    if (face.size() == 1) {
      beta.assign(n, 0);
      beta[0] = 1;
    } else {
      std::vector<std::vector<Int>> diffs;
      for (size_t l = 1; l < face.size(); ++l) {
        std::vector<Int> row(n);
        for (int d = 0; d < n; ++d)
          row[d] = cfg.pts[face[l]][d] - cfg.pts[face[0]][d];
        diffs.push_back(std::move(row));
      }
      beta = int_kernel_vector(diffs);
    }
    std::vector<Int> u(m);
    bool has_neg = false, has_nonzero = false;
    for (size_t j = 0; j < m; ++j) {
      Int s = 0;
      for (int d = 0; d < n; ++d) s += beta[d] * (cfg.pts[j][d] - cfg.pts[face[0]][d]);
      u[j] = s;
      if (s != 0) has_nonzero = true;
      if (s < 0) has_neg = true;
    }
    if (!has_nonzero) throw std::logic_error("triangulate: rotation direction vanished");
    if (!has_neg)
      for (auto& x : u) x = -x;

    size_t best = m;
    bool tie = false;
    for (size_t j = 0; j < m; ++j) {
      if (!(u[j] < 0)) continue;
      if (best == m) {
        best = j;
        continue;
      }
      // slack[j]/(-u[j]) vs slack[best]/(-u[best])
      Rat lhs = slack[j] * Rat(-u[best]);
      Rat rhs = slack[best] * Rat(-u[j]);
      if (lhs == rhs)
        tie = true;
      else if (lhs < rhs) {
        best = j;
        tie = false;
      }
    }
    if (best == m) throw std::logic_error("triangulate: unbounded rotation");
    if (tie) throw nongeneric_lift{"tied arrival while wrapping the first cell"};

    Rat tstar = slack[best] / Rat(-u[best]);
    for (size_t j = 0; j < m; ++j) slack[j] += tstar * Rat(u[j]);
    face.push_back(static_cast<int32_t>(best));
    in_face[best] = true;
    for (size_t j = 0; j < m; ++j)
      if (!in_face[j] && slack[j].is_zero())
        throw nongeneric_lift{"extra point on the wrapped face"};
  }
  std::sort(face.begin(), face.end());
  return face;
}

// ------------------------------------------------------- traversal

struct VecHash {
  size_t operator()(const std::vector<int32_t>& v) const {
    size_t h = 14695981039346656037ULL;
    for (int32_t x : v) {
      h ^= static_cast<uint32_t>(x);
      h *= 1099511628211ULL;
    }
    return h;
  }
};

struct RawResult {
  std::vector<std::pair<std::vector<int32_t>, Int>> cells;
  Int total = 0;
  std::vector<std::pair<std::vector<Int>, Int>> walls;
};

RawResult traverse_serial(const LatticeConfig& cfg, const std::vector<int64_t>& lifts,
                          bool collect_facets) {
  RawResult res;
  std::unordered_set<std::vector<int32_t>, VecHash> visited;
  std::vector<std::vector<int32_t>> stack;
  stack.push_back(initial_cell(cfg, lifts));
  visited.insert(stack.back());
  while (!stack.empty()) {
    std::vector<int32_t> cell = std::move(stack.back());
    stack.pop_back();
    CellOutput out = process_dispatch(cfg, lifts, cell, collect_facets);
    res.total += out.vol;
    res.cells.emplace_back(std::move(cell), std::move(out.vol));
    for (auto& w : out.walls) res.walls.push_back(std::move(w));
    for (auto& nb : out.neighbors)
      if (visited.insert(nb).second) stack.push_back(std::move(nb));
  }
  return res;
}

RawResult traverse_parallel(const LatticeConfig& cfg, const std::vector<int64_t>& lifts,
                            bool collect_facets) {
  RawResult res;
  std::unordered_set<std::vector<int32_t>, VecHash> visited;
  std::vector<std::vector<int32_t>> frontier;
  frontier.push_back(initial_cell(cfg, lifts));
  visited.insert(frontier.back());
  while (!frontier.empty()) {
    std::vector<CellOutput> outs(frontier.size());
    std::exception_ptr err;
    bool failed = false;
#pragma omp parallel for schedule(dynamic, 1) shared(err, failed)
    for (size_t i = 0; i < frontier.size(); ++i) {
      if (failed) continue;
      try {
        outs[i] = process_dispatch(cfg, lifts, frontier[i], collect_facets);
      } catch (...) {
#pragma omp critical
        {
          if (!failed) {
            failed = true;
            err = std::current_exception();
          }
        }
      }
    }
    if (failed) {
      try {
        std::rethrow_exception(err);
      } catch (const nongeneric_lift& g) {
        throw g;  // unwrap for the retry loop
      }
    }
    std::vector<std::vector<int32_t>> next;
    for (size_t i = 0; i < frontier.size(); ++i) {
      res.total += outs[i].vol;
      res.cells.emplace_back(std::move(frontier[i]), std::move(outs[i].vol));
      for (auto& w : outs[i].walls) res.walls.push_back(std::move(w));
      for (auto& nb : outs[i].neighbors)
        if (visited.insert(nb).second) next.push_back(std::move(nb));
    }
    frontier = std::move(next);
  }
  return res;
}

}  // namespace

Lifting draw_lifting(uint64_t seed, size_t point_count) {
  Lifting l;
  l.seed = seed;
  l.values.resize(point_count);
  SplitMix64 rng(seed);
  for (size_t i = 0; i < point_count; ++i)
    l.values[i] = static_cast<int64_t>(rng.next() & ((1ULL << 20) - 1));
  return l;
}

uint64_t derive_next_seed(uint64_t seed) {
  SplitMix64 rng(seed);
  return rng.next();
}

TriangulateResult triangulate(const Support& s, uint64_t seed,
                              const TriangulateOptions& opts) {
  if (s.points.empty()) throw std::invalid_argument("triangulate: empty support");
  TriangulateResult result;
  result.tri.dim = s.dim;

  if (affine_dim(s.points) < s.dim) {
    result.tri.degenerate = true;
    result.tri.total = Rat(0);
    result.tri.lifting = draw_lifting(seed, s.size());
    return result;
  }

  LatticeConfig cfg = make_config(s);
  uint64_t attempt_seed = seed;
  std::vector<uint64_t> tried;
  for (int attempt = 0; attempt < opts.max_lift_attempts; ++attempt) {
    Lifting lift = draw_lifting(attempt_seed, s.size());
    try {
      RawResult raw = (opts.exec == Exec::Serial)
                          ? traverse_serial(cfg, lift.values, opts.collect_facets)
                          : traverse_parallel(cfg, lift.values, opts.collect_facets);

      Rat unscale(1);
      if (cfg.dilation != 1) {
        Int dn = 1;
        mpz_pow_ui(dn.get_mpz_t(), cfg.dilation.get_mpz_t(), s.dim);
        unscale = Rat(Int(1), dn);
      }
      std::sort(raw.cells.begin(), raw.cells.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      result.tri.lifting = std::move(lift);
      result.tri.cells.reserve(raw.cells.size());
      for (auto& [ids, vol] : raw.cells) {
        Cell c;
        c.vertex_ids.assign(ids.begin(), ids.end());
        c.normalized_vol = Rat(vol) * unscale;
        result.tri.cells.push_back(std::move(c));
      }
      result.tri.total = Rat(raw.total) * unscale;

      if (opts.collect_facets) {
        std::map<std::pair<std::vector<Int>, Int>, bool> dedup;
        for (auto& w : raw.walls) dedup.emplace(std::move(w), true);
        Rat dil(cfg.dilation);
        for (auto& [plane, unused] : dedup) {
          FacetPlane f;
          f.normal = plane.first;
          f.offset = Rat(plane.second) / dil;
          result.facets.push_back(std::move(f));
        }
      }
      return result;
    } catch (const nongeneric_lift&) {
      tried.push_back(attempt_seed);
      attempt_seed = derive_next_seed(attempt_seed);
    }
  }
  std::ostringstream os;
  os << "triangulate: no generic lifting after " << opts.max_lift_attempts
     << " attempts; seeds tried:";
  for (uint64_t t : tried) os << " " << t;
  throw genericity_error(os.str());
}

Triangulation regular_triangulation(const Support& s, uint64_t seed, Exec exec) {
  TriangulateOptions opts;
  opts.exec = exec;
  return triangulate(s, seed, opts).tri;
}

Rat normalized_volume(const Support& s, uint64_t seed, Exec exec) {
  TriangulateOptions opts;
  opts.exec = exec;
  return triangulate(s, seed, opts).tri.total;
}

}  // namespace unmix
