#include "torus/arrangement.hpp"

#include <algorithm>
#include <set>

#include "torus/parallel.hpp"

namespace torus {

VectorSet make_vector_set(std::size_t n, std::vector<IntVec> vectors) {
  if (n < 1) throw InvalidInputError("vector set: dimension must be >= 1");
  if (vectors.empty())
    throw InvalidInputError("vector set: needs at least one vector");
  std::set<IntVec> seen;
  for (const IntVec& v : vectors) {
    if (v.size() != n)
      throw InvalidInputError("vector set: vector length does not match n");
    bool nonzero = false;
    for (const Int& x : v) nonzero = nonzero || x != 0;
    if (!nonzero) throw InvalidInputError("vector set: zero vector");
    if (!seen.insert(v).second)
      throw InvalidInputError("vector set: duplicate vector");
  }
  VectorSet a;
  a.n = n;
  a.vectors = std::move(vectors);
  return a;
}

bool spans(const VectorSet& a) { return rank_of_rows(a.vectors) == a.n; }

namespace {

void require_spanning(const VectorSet& a, const char* who) {
  std::size_t r = rank_of_rows(a.vectors);
  if (r < a.n)
    throw SpanError(std::string(who) + ": vectors span only a rank-" +
                    std::to_string(r) + " subspace of R^" + std::to_string(a.n));
}

void check_lift_shape(const VectorSet& a, const Lift& lift) {
  if (lift.offsets.size() != a.vectors.size())
    throw InvalidInputError("lift: offsets length != number of vectors");
  std::size_t prev = 0;
  bool first = true;
  for (std::size_t i : lift.eq_set) {
    if (i >= a.vectors.size())
      throw InvalidInputError("lift: equality index out of range");
    if (!first && i <= prev)
      throw InvalidInputError("lift: equality indices not strictly increasing");
    prev = i;
    first = false;
  }
}

// Min/max of v . x over the closed unit cube: sums of negative/positive parts.
struct OffsetRanges {
  IntVec eq_lo, eq_hi;      // equality offsets
  IntVec band_lo, band_hi;  // band offsets
};

OffsetRanges offset_ranges(const VectorSet& a) {
  OffsetRanges r;
  for (const IntVec& v : a.vectors) {
    Int lo = 0, hi = 0;
    for (const Int& x : v) {
      if (x < 0) lo += x;
      if (x > 0) hi += x;
    }
    r.eq_lo.push_back(lo);
    r.eq_hi.push_back(hi);
    r.band_lo.push_back(lo - 1);
    r.band_hi.push_back(hi);
  }
  return r;
}

bool is_in_eq_set(const Lift& lift, std::size_t j) {
  return std::binary_search(lift.eq_set.begin(), lift.eq_set.end(), j);
}

}  // namespace

Int determinant_lcm(const VectorSet& a) {
  require_spanning(a, "determinant_lcm");
  std::vector<Int> dets;
  for_each_combination(a.vectors.size(), a.n,
                       [&](const std::vector<std::size_t>& idx) {
                         IntMatrix m(a.n, a.n);
                         for (std::size_t r = 0; r < a.n; ++r)
                           for (std::size_t c = 0; c < a.n; ++c)
                             m(r, c) = a.vectors[idx[r]][c];
                         Int d = det(m);
                         if (d != 0) dets.push_back(abs(d));
                       });
  return lcm_all(dets);
}

Int theorem_bound(const VectorSet& a) {
  return Int(a.n + 1) * determinant_lcm(a);
}

HPolytope lift_polytope(const VectorSet& a, const Lift& lift) {
  check_lift_shape(a, lift);
  HPolytope p;
  p.ambient_dim = a.n;
  for (std::size_t j = 0; j < a.vectors.size(); ++j) {
    if (is_in_eq_set(lift, j))
      p.equalities.emplace_back(a.vectors[j], lift.offsets[j]);
    else
      p.bands.emplace_back(a.vectors[j], lift.offsets[j]);
  }
  return p;
}

bool lift_is_valid(const VectorSet& a, const Lift& lift, VertexSet* closure) {
  VertexSet vs = vertices(lift_polytope(a, lift));
  if (closure) *closure = vs;
  if (vs.points.empty()) return false;
  for (std::size_t j = 0; j < a.vectors.size(); ++j) {
    if (is_in_eq_set(lift, j)) continue;
    if (is_contained_in_hyperplane(vs, a.vectors[j], lift.offsets[j]))
      return false;
    if (is_contained_in_hyperplane(vs, a.vectors[j], Int(lift.offsets[j] + 1)))
      return false;
  }
  return true;
}

LiftEnumeration enumerate_lifts_detailed(const VectorSet& a) {
  require_spanning(a, "enumerate_lifts");
  const std::size_t n = a.n, k = a.vectors.size();
  OffsetRanges ranges = offset_ranges(a);

  // Arrangement vertices: pick n directions with independent normals, then
  // one level per direction within [band_lo, band_hi + 1] (every closure
  // face of an in-range lift lies at such a level).
  std::set<RatVec> vertex_set;
  for_each_combination(k, n, [&](const std::vector<std::size_t>& dirs) {
    IntMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = a.vectors[dirs[r]][c];
    if (det(m) == 0) return;
    IntVec level(n);
    for (std::size_t r = 0; r < n; ++r) level[r] = ranges.band_lo[dirs[r]];
    for (;;) {
      vertex_set.insert(solve_exact(m, level));
      std::size_t i = n;
      for (;;) {
        if (i == 0) return;
        --i;
        if (level[i] <= ranges.band_hi[dirs[i]]) {
          ++level[i];
          for (std::size_t j = i + 1; j < n; ++j)
            level[j] = ranges.band_lo[dirs[j]];
          break;
        }
      }
    }
  });

  LiftEnumeration out;
  out.vertex_pool.assign(vertex_set.begin(), vertex_set.end());
  out.vertex_values.resize(out.vertex_pool.size());
  parallel_for(out.vertex_pool.size(), [&](std::size_t id) {
    RatVec vals(k);
    for (std::size_t j = 0; j < k; ++j)
      vals[j] = dot(a.vectors[j], out.vertex_pool[id]);
    out.vertex_values[id] = std::move(vals);
  });

  // Read off the cells incident to each vertex. An integral value t_j admits
  // the equality offset t_j and the band offsets t_j and t_j - 1; otherwise
  // only the band offset floor(t_j). Offsets outside the candidate ranges
  // are dropped.
  std::map<Lift, std::vector<std::uint32_t>> candidates;
  struct Option {
    bool equality;
    Int offset;
  };
  for (std::uint32_t id = 0; id < out.vertex_pool.size(); ++id) {
    std::vector<std::vector<Option>> options(k);
    bool dead = false;
    for (std::size_t j = 0; j < k && !dead; ++j) {
      const Rat& t = out.vertex_values[id][j];
      if (is_integral(t)) {
        Int ti = numerator(t);
        if (ti >= ranges.eq_lo[j] && ti <= ranges.eq_hi[j])
          options[j].push_back({true, ti});
        if (ti >= ranges.band_lo[j] && ti <= ranges.band_hi[j])
          options[j].push_back({false, ti});
        Int lower = ti - 1;
        if (lower >= ranges.band_lo[j] && lower <= ranges.band_hi[j])
          options[j].push_back({false, lower});
      } else {
        Int f = floor_rat(t);
        if (f >= ranges.band_lo[j] && f <= ranges.band_hi[j])
          options[j].push_back({false, f});
      }
      dead = options[j].empty();
    }
    if (dead) continue;
    std::vector<std::size_t> pick(k, 0);
    for (;;) {
      Lift cand;
      cand.offsets.resize(k);
      for (std::size_t j = 0; j < k; ++j) {
        const Option& o = options[j][pick[j]];
        if (o.equality) cand.eq_set.push_back(j);
        cand.offsets[j] = o.offset;
      }
      candidates[std::move(cand)].push_back(id);
      std::size_t j = k;
      for (;;) {
        if (j == 0) goto next_vertex;
        --j;
        if (pick[j] + 1 < options[j].size()) {
          ++pick[j];
          for (std::size_t i = j + 1; i < k; ++i) pick[i] = 0;
          break;
        }
      }
    }
  next_vertex:;
  }

  // A candidate's recorded vertices are exactly its closure vertices, so
  // validity is a containment test against the cached values: the open cell
  // is nonempty iff no band face holds all of them.
  std::vector<std::pair<Lift, std::vector<std::uint32_t>>> entries;
  entries.reserve(candidates.size());
  for (auto& kv : candidates)
    entries.emplace_back(kv.first, std::move(kv.second));
  std::vector<char> keep(entries.size(), 0);
  parallel_for(entries.size(), [&](std::size_t e) {
    const Lift& lift = entries[e].first;
    const auto& ids = entries[e].second;
    for (std::size_t j = 0; j < k; ++j) {
      if (is_in_eq_set(lift, j)) continue;
      for (const Int& face : {lift.offsets[j], Int(lift.offsets[j] + 1)}) {
        bool all_on = true;
        for (std::uint32_t id : ids)
          if (out.vertex_values[id][j] != Rat(face)) {
            all_on = false;
            break;
          }
        if (all_on) return;
      }
    }
    keep[e] = 1;
  });
  for (std::size_t e = 0; e < entries.size(); ++e)
    if (keep[e])
      out.lifts.push_back({std::move(entries[e].first), std::move(entries[e].second)});
  return out;
}

std::vector<Lift> enumerate_lifts(const VectorSet& a) {
  LiftEnumeration en = enumerate_lifts_detailed(a);
  std::vector<Lift> out;
  out.reserve(en.lifts.size());
  for (auto& e : en.lifts) out.push_back(std::move(e.lift));
  return out;
}

std::vector<Lift> enumerate_lifts_by_ranges(const VectorSet& a) {
  require_spanning(a, "enumerate_lifts");
  const std::size_t k = a.vectors.size();
  OffsetRanges ranges = offset_ranges(a);
  std::vector<Lift> out;
  for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
    Lift cand;
    cand.offsets.resize(k);
    IntVec lo(k), hi(k);
    for (std::size_t j = 0; j < k; ++j) {
      if (mask & (std::size_t(1) << j)) {
        cand.eq_set.push_back(j);
        lo[j] = ranges.eq_lo[j];
        hi[j] = ranges.eq_hi[j];
      } else {
        lo[j] = ranges.band_lo[j];
        hi[j] = ranges.band_hi[j];
      }
    }
    cand.offsets = lo;
    for (;;) {
      if (lift_is_valid(a, cand)) out.push_back(cand);
      std::size_t j = k;
      bool done = false;
      for (;;) {
        if (j == 0) {
          done = true;
          break;
        }
        --j;
        if (cand.offsets[j] < hi[j]) {
          ++cand.offsets[j];
          for (std::size_t i = j + 1; i < k; ++i) cand.offsets[i] = lo[i];
          break;
        }
      }
      if (done) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Lift translate_lift(const VectorSet& a, const Lift& lift, const IntVec& z) {
  Lift out = lift;
  for (std::size_t j = 0; j < a.vectors.size(); ++j)
    out.offsets[j] -= dot(a.vectors[j], z);
  return out;
}

IntVec floor_shift(const RatVec& c) {
  IntVec z(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) z[i] = floor_rat(c[i]);
  return z;
}

}  // namespace

Lift canonical_orbit_key(const VectorSet& a, const Lift& lift) {
  VertexSet vs;
  if (!lift_is_valid(a, lift, &vs))
    throw InvalidInputError("canonical_orbit_key: lift names an empty cell");
  return translate_lift(a, lift, floor_shift(centroid(vs)));
}

Stratification stratify(const VectorSet& a) {
  require_spanning(a, "stratify");
  Stratification s;
  s.input = a;
  s.dlcm = determinant_lcm(a);
  s.bound = Int(a.n + 1) * s.dlcm;

  LiftEnumeration en = enumerate_lifts_detailed(a);
  // Canonical keys first (cheap), full strata only for distinct keys.
  std::vector<Lift> keys(en.lifts.size());
  std::vector<IntVec> shifts(en.lifts.size());
  parallel_for(en.lifts.size(), [&](std::size_t i) {
    const EnumeratedLift& e = en.lifts[i];
    RatVec c(a.n, Rat(0));
    for (std::uint32_t id : e.vertex_ids)
      for (std::size_t d = 0; d < a.n; ++d) c[d] += en.vertex_pool[id][d];
    Rat inv = Rat(1) / Rat(Int(e.vertex_ids.size()));
    for (Rat& x : c) x *= inv;
    shifts[i] = floor_shift(c);
    keys[i] = translate_lift(a, e.lift, shifts[i]);
  });
  std::map<Lift, std::size_t> first_of_key;
  for (std::size_t i = 0; i < keys.size(); ++i)
    first_of_key.try_emplace(keys[i], i);

  std::vector<std::pair<const Lift*, std::size_t>> unique_entries;
  unique_entries.reserve(first_of_key.size());
  for (const auto& kv : first_of_key) unique_entries.emplace_back(&kv.first, kv.second);
  std::vector<Stratum> strata(unique_entries.size());
  parallel_for(unique_entries.size(), [&](std::size_t u) {
    const Lift& key = *unique_entries[u].first;
    std::size_t i = unique_entries[u].second;
    const EnumeratedLift& e = en.lifts[i];
    Stratum st;
    st.key = key;
    std::vector<IntVec> eq_rows;
    for (std::size_t idx : key.eq_set) eq_rows.push_back(a.vectors[idx]);
    st.dim = a.n - (eq_rows.empty() ? 0 : rank_of_rows(eq_rows));
    // Closure of the canonical lift: translate the enumerated closure (the
    // shift preserves lex order, so the point list stays sorted).
    for (std::uint32_t id : e.vertex_ids) {
      RatVec p(a.n);
      for (std::size_t d = 0; d < a.n; ++d)
        p[d] = en.vertex_pool[id][d] - Rat(shifts[i][d]);
      st.closure.points.push_back(std::move(p));
    }
    st.closure.affine_dim = affine_dim_of(st.closure.points);
    st.representative = centroid(st.closure);
    strata[u] = std::move(st);
  });
  std::sort(strata.begin(), strata.end(), [](const Stratum& x, const Stratum& y) {
    if (x.dim != y.dim) return x.dim > y.dim;
    return x.key < y.key;
  });
  for (const Stratum& st : strata) ++s.counts_by_dim[st.dim];
  s.strata = std::move(strata);
  return s;
}

namespace {

bool point_in_open_lift(const VectorSet& a, const Lift& lift, const RatVec& x) {
  for (std::size_t j = 0; j < a.vectors.size(); ++j) {
    Rat t = dot(a.vectors[j], x);
    if (is_in_eq_set(lift, j)) {
      if (t != Rat(lift.offsets[j])) return false;
    } else {
      if (t <= Rat(lift.offsets[j]) || t >= Rat(lift.offsets[j] + 1))
        return false;
    }
  }
  return true;
}

// Exact scans stay affordable up to this grid size; beyond it coverage
// prefers the constructive witness whenever the theorem route applies.
constexpr long kScanPreferredLimit = 64;

}  // namespace

CoverageReport coverage(const Stratification& s, const Int& m) {
  if (m < 1) throw InvalidInputError("coverage: m must be >= 1");
  CoverageReport rep;
  rep.m = m;
  rep.witnesses.resize(s.strata.size());
  parallel_for(s.strata.size(), [&](std::size_t i) {
    const Stratum& st = s.strata[i];
    if (m > kScanPreferredLimit && m % s.dlcm == 0 &&
        m / s.dlcm >= Int(st.dim + 1)) {
      // Scaled closure is a lattice polytope (Lemma 3.1); its constructive
      // interior point, divided by m, must land in the open cell. Certify
      // directly; on any failure fall back to the exact scan.
      try {
        VertexSet scaled;
        scaled.affine_dim = st.closure.affine_dim;
        for (const RatVec& w : st.closure.points) {
          RatVec p(w.size());
          for (std::size_t d = 0; d < w.size(); ++d) p[d] = Rat(s.dlcm) * w[d];
          scaled.points.push_back(std::move(p));
        }
        auto y = interior_lattice_point(scaled, Int(m / s.dlcm));
        if (y.has_value()) {
          RatVec x(y->size());
          for (std::size_t d = 0; d < y->size(); ++d)
            x[d] = Rat((*y)[d]) / Rat(m);
          if (point_in_open_lift(s.input, st.key, x)) {
            rep.witnesses[i] = std::move(x);
            return;
          }
        }
      } catch (const Error&) {
      }
    }
    auto pts = lattice_points_of_denominator(lift_polytope(s.input, st.key), m);
    if (!pts.empty()) rep.witnesses[i] = std::move(pts.front());
  });
  for (std::size_t i = 0; i < s.strata.size(); ++i)
    if (!rep.witnesses[i].has_value()) rep.missing.push_back(i);
  rep.covered = rep.missing.empty();
  return rep;
}

std::vector<Int> working_denominators(const Stratification& s, const Int& limit) {
  std::vector<Int> out;
  for (Int m = 1; m <= limit; ++m)
    if (coverage(s, m).covered) out.push_back(m);
  return out;
}

std::vector<Int> minimal_working_set(const Stratification& s, const Int& limit) {
  for (Int m = 1; m <= limit; ++m)
    if (coverage(s, m).covered) return {m};
  return {};
}

Lift lift_containing(const VectorSet& a, const RatVec& x) {
  if (x.size() != a.n)
    throw DimensionError("lift_containing: point dimension mismatch");
  Lift out;
  out.offsets.resize(a.vectors.size());
  for (std::size_t j = 0; j < a.vectors.size(); ++j) {
    Rat t = dot(a.vectors[j], x);
    if (is_integral(t)) {
      out.eq_set.push_back(j);
      out.offsets[j] = numerator(t);
    } else {
      out.offsets[j] = floor_rat(t);
    }
  }
  return out;
}

std::size_t grid_orbit_census(const VectorSet& a, const Int& m) {
  require_spanning(a, "grid_orbit_census");
  if (m < 1) throw InvalidInputError("grid_orbit_census: m must be >= 1");
  const std::size_t n = a.n, k = a.vectors.size();
  Int grid = 1;
  for (std::size_t d = 0; d < n; ++d) grid *= m;
  if (grid > 500'000'000)
    throw Error("grid_orbit_census: grid of m^n = " + grid.str() +
                " points is beyond desk scale");
  // Translations act on offsets through u -> u + (v_j . z)_j; two lifts with
  // equal eq_set are in one orbit iff their offsets differ by a vector in the
  // integer column span of the vector matrix. Reduce offsets to canonical
  // coset representatives and count distinct (eq_set, reduced) pairs.
  IntMatrix vt(n, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t d = 0; d < n; ++d) vt(d, j) = a.vectors[j][d];
  IntMatrix h = hnf_row_basis(vt);

  std::size_t m_count = std::size_t(m);
  std::vector<std::set<Lift>> per_strip(m_count);
  parallel_for(m_count, [&](std::size_t first) {
    IntVec y(n, Int(0));
    y[0] = Int(first);
    std::set<Lift>& local = per_strip[first];
    for (;;) {
      Lift key;
      key.offsets.resize(k);
      for (std::size_t j = 0; j < k; ++j) {
        Int t = dot(a.vectors[j], y);
        Int q = floor_div(t, m);
        if (t == q * m)
          key.eq_set.push_back(j);
        key.offsets[j] = q;
      }
      key.offsets = reduce_mod_row_lattice(h, std::move(key.offsets));
      local.insert(std::move(key));
      std::size_t d = n;
      for (;;) {
        if (d <= 1) return;
        --d;
        if (y[d] < m - 1) {
          ++y[d];
          for (std::size_t i = d + 1; i < n; ++i) y[i] = 0;
          break;
        }
      }
    }
  });
  std::set<Lift> all;
  for (auto& strip : per_strip) all.merge(strip);
  return all.size();
}

std::vector<AreaEntry> smallest_area_strata(const Stratification& s) {
  if (s.input.n != 2)
    throw DimensionError("smallest_area_strata: only defined for n = 2");
  std::vector<AreaEntry> out;
  for (std::size_t i = 0; i < s.strata.size(); ++i) {
    const Stratum& st = s.strata[i];
    if (st.dim != 2) continue;
    out.push_back({i, volume(st.closure), st.closure.points.size()});
  }
  std::sort(out.begin(), out.end(), [](const AreaEntry& x, const AreaEntry& y) {
    if (x.area != y.area) return x.area < y.area;
    return x.stratum_index < y.stratum_index;
  });
  return out;
}

}  // namespace torus
