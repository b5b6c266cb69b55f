#include "torus/polytope.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace torus {

namespace {

void check_normals(const HPolytope& p) {
  auto check = [&](const IntVec& v) {
    if (v.size() != p.ambient_dim)
      throw DimensionError("polytope: normal length != ambient_dim");
    bool nonzero = false;
    for (const Int& x : v) nonzero = nonzero || x != 0;
    if (!nonzero) throw InvalidInputError("polytope: zero normal");
  };
  for (const auto& [v, c] : p.equalities) check(v);
  for (const auto& [v, lo] : p.bands) check(v);
}

bool satisfies_all(const HPolytope& p, const RatVec& x) {
  for (const auto& [v, c] : p.equalities)
    if (dot(v, x) != Rat(c)) return false;
  for (const auto& [v, lo] : p.bands) {
    Rat t = dot(v, x);
    if (t < Rat(lo) || t > Rat(lo + 1)) return false;
  }
  return true;
}

}  // namespace

int affine_dim_of(const std::vector<RatVec>& points) {
  if (points.empty()) return -1;
  // Rank of the difference vectors; rows are scaled integral (rank-invariant).
  std::vector<IntVec> rows;
  for (std::size_t i = 1; i < points.size(); ++i) {
    RatVec d(points[i].size());
    Int den = 1;
    for (std::size_t j = 0; j < d.size(); ++j) {
      d[j] = points[i][j] - points[0][j];
      den = boost::multiprecision::lcm(den, denominator(d[j]));
    }
    IntVec r(d.size());
    for (std::size_t j = 0; j < d.size(); ++j) r[j] = numerator(Rat(den) * d[j]);
    rows.push_back(std::move(r));
  }
  if (rows.empty()) return 0;
  return int(rank_of_rows(rows));
}

VertexSet vertices(const HPolytope& p) {
  check_normals(p);
  const std::size_t n = p.ambient_dim;
  std::vector<std::pair<IntVec, Int>> pool;
  for (const auto& [v, c] : p.equalities) pool.emplace_back(v, c);
  for (const auto& [v, lo] : p.bands) {
    pool.emplace_back(v, lo);
    pool.emplace_back(v, lo + 1);
  }
  {
    std::vector<IntVec> normals;
    for (const auto& [v, c] : pool) normals.push_back(v);
    if (rank_of_rows(normals) < n)
      throw UnboundedError("vertices: constraint normals do not span R^n");
  }
  std::set<RatVec> found;
  for_each_combination(pool.size(), n, [&](const std::vector<std::size_t>& idx) {
    IntMatrix m(n, n);
    IntVec rhs(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m(r, c) = pool[idx[r]].first[c];
      rhs[r] = pool[idx[r]].second;
    }
    if (det(m) == 0) return;
    RatVec x = solve_exact(m, rhs);
    if (satisfies_all(p, x)) found.insert(std::move(x));
  });
  VertexSet vs;
  vs.points.assign(found.begin(), found.end());
  vs.affine_dim = affine_dim_of(vs.points);
  return vs;
}

RatVec centroid(const VertexSet& vs) {
  if (vs.points.empty()) throw EmptySetError("centroid: empty vertex set");
  RatVec c(vs.points[0].size(), Rat(0));
  for (const RatVec& p : vs.points)
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += p[i];
  Rat inv = Rat(1) / Rat(Int(vs.points.size()));
  for (Rat& x : c) x *= inv;
  return c;
}

RatVec relative_interior_point(const HPolytope& p) {
  VertexSet vs = vertices(p);
  if (vs.points.empty()) throw EmptySetError("relative_interior_point: empty polytope");
  return centroid(vs);
}

bool is_contained_in_hyperplane(const VertexSet& vs, const IntVec& normal,
                                const Int& c) {
  for (const RatVec& w : vs.points)
    if (dot(normal, w) != Rat(c)) return false;
  return true;
}

bool scaled_lattice_check(const VertexSet& vs, const Int& d) {
  for (const RatVec& w : vs.points)
    for (const Rat& x : w)
      if (!is_integral(Rat(d) * x)) return false;
  return true;
}

namespace {

// Coordinates t with sum_j t_j basis[j] = rhs, or nullopt when rhs is outside
// the span. basis must be linearly independent.
std::optional<RatVec> coords_in_span(const std::vector<RatVec>& basis,
                                     const RatVec& rhs) {
  const std::size_t n = rhs.size(), p = basis.size();
  if (p == 0) {
    for (const Rat& x : rhs)
      if (x != 0) return std::nullopt;
    return RatVec{};
  }
  // Augmented [basis columns | rhs], eliminated to reduced row echelon form.
  std::vector<RatVec> a(n, RatVec(p + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < p; ++j) a[i][j] = basis[j][i];
    a[i][p] = rhs[i];
  }
  std::size_t r = 0;
  std::vector<std::size_t> pivot_row(p);
  for (std::size_t c = 0; c < p; ++c) {
    std::size_t piv = r;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw SingularMatrixError("coords_in_span: dependent basis");
    std::swap(a[r], a[piv]);
    Rat inv = Rat(1) / a[r][c];
    for (std::size_t j = c; j <= p; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = c; j <= p; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_row[c] = r;
    ++r;
  }
  for (std::size_t i = r; i < n; ++i)
    if (a[i][p] != 0) return std::nullopt;
  RatVec t(p);
  for (std::size_t c = 0; c < p; ++c) t[c] = a[pivot_row[c]][p];
  return t;
}

// Affine chart of a point set: base point plus a maximal independent list of
// difference vectors, chosen greedily in lex order (deterministic).
struct AffineChart {
  RatVec base;
  std::vector<RatVec> basis;
  std::vector<std::size_t> generators;  // indices of points spanning the chart
};

AffineChart make_chart(const std::vector<RatVec>& pts) {
  AffineChart ch;
  ch.base = pts[0];
  ch.generators.push_back(0);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    RatVec d(pts[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - ch.base[j];
    if (!coords_in_span(ch.basis, d).has_value()) {
      ch.basis.push_back(std::move(d));
      ch.generators.push_back(i);
    }
  }
  return ch;
}

std::optional<RatVec> chart_coords(const AffineChart& ch, const RatVec& x) {
  RatVec d(x.size());
  for (std::size_t j = 0; j < d.size(); ++j) d[j] = x[j] - ch.base[j];
  return coords_in_span(ch.basis, d);
}

// Facet of a full-dimensional polytope in chart coordinates; the interior
// side is normal . t < rhs.
struct AffineFacet {
  IntVec normal;
  Rat rhs;
};

// Cofactor normal of the affine hyperplane through p points of R^p: the i-th
// coordinate is (-1)^i det(D with column i removed), D the difference matrix.
IntVec hyperplane_normal(const std::vector<RatVec>& pts,
                         const std::vector<std::size_t>& idx) {
  const std::size_t p = pts[idx[0]].size();
  std::vector<IntVec> rows;
  for (std::size_t i = 1; i < p; ++i) {
    RatVec d(p);
    Int den = 1;
    for (std::size_t j = 0; j < p; ++j) {
      d[j] = pts[idx[i]][j] - pts[idx[0]][j];
      den = boost::multiprecision::lcm(den, denominator(d[j]));
    }
    IntVec r(p);
    for (std::size_t j = 0; j < p; ++j) r[j] = numerator(Rat(den) * d[j]);
    rows.push_back(std::move(r));
  }
  IntVec normal(p);
  for (std::size_t i = 0; i < p; ++i) {
    IntMatrix minor(p - 1, p - 1);
    for (std::size_t r = 0; r < p - 1; ++r) {
      std::size_t jj = 0;
      for (std::size_t j = 0; j < p; ++j) {
        if (j == i) continue;
        minor(r, jj++) = rows[r][j];
      }
    }
    Int d = det(minor);
    normal[i] = (i % 2 == 0) ? d : -d;
  }
  return normal;
}

std::vector<AffineFacet> facets_of(const std::vector<RatVec>& pts) {
  const std::size_t p = pts.empty() ? 0 : pts[0].size();
  std::vector<AffineFacet> out;
  if (p == 0) return out;
  std::set<std::pair<IntVec, Rat>> seen;
  for_each_combination(pts.size(), p, [&](const std::vector<std::size_t>& idx) {
    IntVec normal = hyperplane_normal(pts, idx);
    Int content = 0;
    for (const Int& x : normal) content = boost::multiprecision::gcd(content, x);
    if (content == 0) return;  // degenerate subset
    for (Int& x : normal) x /= content;
    Rat rhs = dot(normal, pts[idx[0]]);
    bool all_le = true, all_ge = true;
    for (const RatVec& q : pts) {
      Rat t = dot(normal, q);
      if (t > rhs) all_le = false;
      if (t < rhs) all_ge = false;
    }
    if (all_le == all_ge) return;  // mixed sides: not supporting
    if (all_ge) {
      for (Int& x : normal) x = -x;
      rhs = -rhs;
    }
    if (seen.insert({normal, rhs}).second)
      out.push_back({std::move(normal), std::move(rhs)});
  });
  return out;
}

}  // namespace

bool in_relative_interior(const RatVec& x, const VertexSet& vs) {
  if (vs.points.empty()) return false;
  AffineChart ch = make_chart(vs.points);
  auto tx = chart_coords(ch, x);
  if (!tx.has_value()) return false;
  if (ch.basis.empty()) return x == vs.points[0];
  std::vector<RatVec> coords;
  for (const RatVec& q : vs.points) {
    auto t = chart_coords(ch, q);
    if (!t.has_value())
      throw Error("in_relative_interior: vertex outside its own chart");
    coords.push_back(std::move(*t));
  }
  for (const AffineFacet& f : facets_of(coords))
    if (dot(f.normal, *tx) >= f.rhs) return false;
  return true;
}

std::optional<IntVec> interior_lattice_point(const VertexSet& vs, const Int& k) {
  if (vs.points.empty()) throw EmptySetError("interior_lattice_point: empty set");
  if (k < 1) throw InvalidInputError("interior_lattice_point: k must be positive");
  const std::size_t n = vs.points[0].size();
  for (const RatVec& w : vs.points)
    for (const Rat& x : w)
      if (!is_integral(x))
        throw InvalidInputError("interior_lattice_point: non-integral vertex");
  const int p = vs.affine_dim;
  VertexSet scaled;
  scaled.affine_dim = p;
  for (const RatVec& w : vs.points) {
    RatVec s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = Rat(k) * w[i];
    scaled.points.push_back(std::move(s));
  }
  if (k >= p + 1) {
    // Sum of p+1 affinely independent vertices, padded with copies of the
    // first; certified below against the facets of the scaled polytope.
    AffineChart ch = make_chart(vs.points);
    RatVec y(n, Rat(0));
    for (std::size_t g : ch.generators)
      for (std::size_t i = 0; i < n; ++i) y[i] += vs.points[g][i];
    Rat pad = Rat(k - p - 1);
    for (std::size_t i = 0; i < n; ++i) y[i] += pad * vs.points[ch.generators[0]][i];
    if (!in_relative_interior(y, scaled))
      throw Error("interior_lattice_point: constructive point failed certification");
    IntVec out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = numerator(y[i]);
    return out;
  }
  // k <= p: the lemma is silent, so decide by exhaustive scan of the box.
  IntVec lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rat mn = scaled.points[0][i], mx = scaled.points[0][i];
    for (const RatVec& w : scaled.points) {
      mn = std::min(mn, w[i]);
      mx = std::max(mx, w[i]);
    }
    lo[i] = ceil_rat(mn);
    hi[i] = floor_rat(mx);
    if (lo[i] > hi[i]) return std::nullopt;
  }
  IntVec cur = lo;
  for (;;) {
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = Rat(cur[i]);
    if (in_relative_interior(x, scaled)) return cur;
    std::size_t i = n;
    for (;;) {
      if (i == 0) return std::nullopt;
      --i;
      if (cur[i] < hi[i]) {
        ++cur[i];
        for (std::size_t j = i + 1; j < n; ++j) cur[j] = lo[j];
        break;
      }
    }
  }
}

std::vector<RatVec> lattice_points_of_denominator(const HPolytope& p,
                                                  const Int& m) {
  if (m < 1) throw InvalidInputError("lattice_points_of_denominator: m must be >= 1");
  VertexSet vs = vertices(p);
  std::vector<RatVec> out;
  if (vs.points.empty()) return out;
  const std::size_t n = p.ambient_dim;
  IntVec lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rat mn = vs.points[0][i], mx = vs.points[0][i];
    for (const RatVec& w : vs.points) {
      mn = std::min(mn, w[i]);
      mx = std::max(mx, w[i]);
    }
    lo[i] = ceil_rat(Rat(m) * mn);
    hi[i] = floor_rat(Rat(m) * mx);
    if (lo[i] > hi[i]) return out;
  }
  // Scan y in the integer box; x = y/m. All constraint checks stay integral:
  // equalities v.y == m*rhs, strict bands m*lo < v.y < m*(lo+1).
  IntVec y = lo;
  for (;;) {
    bool ok = true;
    for (const auto& [v, c] : p.equalities)
      if (dot(v, y) != m * c) {
        ok = false;
        break;
      }
    if (ok)
      for (const auto& [v, b] : p.bands) {
        Int t = dot(v, y);
        if (t <= m * b || t >= m * (b + 1)) {
          ok = false;
          break;
        }
      }
    if (ok) {
      RatVec x(n);
      for (std::size_t i = 0; i < n; ++i) x[i] = Rat(y[i]) / Rat(m);
      out.push_back(std::move(x));
    }
    std::size_t i = n;
    for (;;) {
      if (i == 0) return out;
      --i;
      if (y[i] < hi[i]) {
        ++y[i];
        for (std::size_t j = i + 1; j < n; ++j) y[j] = lo[j];
        break;
      }
    }
  }
}

Rat volume(const VertexSet& vs) {
  if (vs.points.empty() || vs.points[0].size() != 2)
    throw DimensionError("volume: ambient dimension must be 2");
  if (vs.affine_dim != 2)
    throw DimensionError("volume: affine dimension must be 2");
  // Andrew monotone chain; input points are already lex-sorted.
  const std::vector<RatVec>& pts = vs.points;
  auto cross = [](const RatVec& o, const RatVec& a, const RatVec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<RatVec> hull;
  for (const RatVec& q : pts) {
    while (hull.size() >= 2 &&
           cross(hull[hull.size() - 2], hull.back(), q) <= 0)
      hull.pop_back();
    hull.push_back(q);
  }
  std::size_t lower = hull.size() + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (hull.size() >= lower &&
           cross(hull[hull.size() - 2], hull.back(), *it) <= 0)
      hull.pop_back();
    hull.push_back(*it);
  }
  hull.pop_back();
  Rat twice_area = 0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const RatVec& a = hull[i];
    const RatVec& b = hull[(i + 1) % hull.size()];
    twice_area += a[0] * b[1] - a[1] * b[0];
  }
  return abs(twice_area) / 2;
}

}  // namespace torus
