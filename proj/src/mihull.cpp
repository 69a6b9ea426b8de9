#include "mihull/mihull.hpp"

#include <algorithm>

#include "mihull/hull.hpp"
#include "mihull/lp.hpp"
#include "mihull/subsets.hpp"

namespace mihull {

namespace {

// Integer range of coordinate j over the feasible set; empty() when the
// rounded bounds cross.
struct CoordRange {
  Int lo, hi;
  bool empty() const { return lo > hi; }
};

CoordRange integer_coord_range(const HRep& h, std::size_t j) {
  const std::size_t k = h.space.dim();
  RatVec c(k);
  c[j] = 1;
  LpResult mn = lp_solve(h, c, LpSense::Min);
  if (mn.status == LpStatus::Infeasible)
    raise(Errc::MixedInfeasible, "empty polyhedron");
  LpResult mx = lp_solve(h, c, LpSense::Max);
  if (mn.status != LpStatus::Optimal || mx.status != LpStatus::Optimal)
    raise(Errc::UnboundedInput, "unbounded integer block");
  return CoordRange{ceil_rat(*mn.value), floor_rat(*mx.value)};
}

// Calls fn(xhat) for every integer point of the projection bounding box.
template <typename Fn>
void for_each_integer_x(const HRep& h, Fn&& fn) {
  const int n = h.space.n;
  std::vector<CoordRange> ranges;
  for (int j = 0; j < n; ++j) {
    ranges.push_back(integer_coord_range(h, static_cast<std::size_t>(j)));
    if (ranges.back().empty()) return;
  }
  RatVec xhat(n);
  std::vector<Int> cur(n);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      fn(xhat);
      return;
    }
    for (Int v = ranges[depth].lo; v <= ranges[depth].hi; ++v) {
      cur[depth] = v;
      xhat[depth] = Rat(v);
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
}

// Vertices of the fiber of h at integer point xhat; empty vector when the
// fiber is empty.
std::vector<RatVec> fiber_vertices(const HRep& h, const RatVec& xhat) {
  try {
    return hrep_to_vrep(fiber_slice(h, xhat)).points;
  } catch (const Error& e) {
    if (e.code() == Errc::EmptyPolyhedron) return {};
    throw;
  }
}

MixedIntegerHull hull_of_pool(const MixedSpace& space, std::vector<RatVec> pool) {
  if (pool.empty()) raise(Errc::MixedInfeasible, "no mixed-integer points");
  return MixedIntegerHull{space, hull_vertices(std::move(pool)), {}};
}

}  // namespace

bool mixed_feasible_bounded(const HRep& h) {
  {
    LpResult feas = lp_solve(h, RatVec(h.space.dim()), LpSense::Min);
    if (feas.status == LpStatus::Infeasible) return false;
  }
  if (h.space.n == 0) return true;
  bool found = false;
  const std::size_t k = h.space.dim();
  try {
    for_each_integer_x(h, [&](const RatVec& xhat) {
      if (found) return;
      HRep fiber = fiber_slice(h, xhat);
      if (lp_solve(fiber, RatVec(k), LpSense::Min).status == LpStatus::Optimal) found = true;
    });
  } catch (const Error& e) {
    if (e.code() != Errc::MixedInfeasible) throw;
  }
  return found;
}

Reduction reduce_to_polytope(const Instance& inst) {
  const MixedSpace space = instance_space(inst);
  const int nd = space.dim();

  Reduction out;
  if (const VRep* v = std::get_if<VRep>(&inst)) {
    if (v->points.empty()) raise(Errc::EmptyInput, "reduction of an empty generator set");
    if (!v->rays.empty() && point_in_hull(RatVec(nd), v->rays))
      raise(Errc::ImplicitLineality, "ray set spans a line");
    // T = conv(V) + (n+d) conv(W u {0}); vertex superset via the Minkowski sum.
    std::vector<RatVec> scaled;
    scaled.push_back(RatVec(nd));
    for (const auto& w : v->rays) scaled.push_back(Rat(nd) * w);
    std::vector<RatVec> pts = minkowski_sum_points({v->points, scaled});
    out.polytope = VRep(space, std::move(pts));
    out.rays = v->rays;
  } else {
    const HRep& h = std::get<HRep>(inst);
    VRep gen = hrep_to_vrep(h);  // raises on empty or lineality
    Rat radius = 0;
    for (const auto& p : gen.points)
      for (const Rat& q : p) radius = std::max(radius, Rat(abs(q)));
    for (const auto& r : gen.rays)
      for (const Rat& q : r) radius = std::max(radius, Rat(abs(q)));
    const Rat big = Rat(nd + 1) * radius;
    const std::size_t m = h.rows();
    RatMat a(m + 2 * nd, nd);
    RatVec b(m + 2 * nd);
    for (std::size_t i = 0; i < m; ++i) {
      for (int j = 0; j < nd; ++j) a.at(i, j) = h.A.at(i, j);
      b[i] = h.b[i];
    }
    for (int j = 0; j < nd; ++j) {
      a.at(m + j, j) = 1;
      b[m + j] = big;
      a.at(m + nd + j, j) = -1;
      b[m + nd + j] = big;
    }
    out.polytope = HRep(space, std::move(a), std::move(b));
    out.rays = gen.rays;
  }

  // The mixed-integer set must be nonempty; Q inherits feasibility from P.
  const HRep q_h = std::holds_alternative<HRep>(out.polytope)
                       ? std::get<HRep>(out.polytope)
                       : vrep_to_hrep(std::get<VRep>(out.polytope));
  if (!mixed_feasible_bounded(q_h))
    raise(Errc::MixedInfeasible, "no mixed-integer point in the polyhedron");
  return out;
}

ScaleReport compute_scale_factor(const HRep& h) {
  if (!hrep_is_integral(h))
    raise(Errc::NonIntegralInput, "scale factor needs integer inequality data");
  if (!is_bounded(h)) raise(Errc::UnboundedInput, "scale factor of an unbounded polyhedron");
  const int n = h.space.n;
  const std::size_t k = h.space.dim();
  const std::size_t m = h.rows();

  std::vector<std::vector<Int>> rows;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Int> r(k);
    for (std::size_t j = 0; j < k; ++j) r[j] = rat_num(h.A.at(i, j));
    rows.push_back(std::move(r));
  }
  for (int s = 0; s < 2; ++s) {
    for (int i = 0; i < n; ++i) {
      std::vector<Int> r(k);
      r[i] = s == 0 ? 1 : -1;
      rows.push_back(std::move(r));
    }
  }

  ScaleReport rep;
  for (SubsetIter it(rows.size(), k); !it.done(); it.next()) {
    std::vector<std::vector<Int>> sq;
    for (std::size_t i : *it) sq.push_back(rows[i]);
    Int det = abs(int_mat_det(sq));
    if (det == 0) continue;
    ++rep.bases_considered;
    rep.t = boost::multiprecision::lcm(rep.t, det);
    rep.max_abs_det = std::max(rep.max_abs_det, det);
  }

  const std::size_t phi = max_row_encoding_size(h);
  rep.hadamard_bound = int_pow(Int(2), static_cast<unsigned>(n * phi));
  rep.hadamard_ok = rep.max_abs_det <= rep.hadamard_bound;

  auto binom = [](std::size_t a, std::size_t b) {
    if (b > a) return Int(0);
    Int r = 1;
    for (std::size_t i = 0; i < b; ++i) r = r * Int(a - i) / Int(i + 1);
    return r;
  };
  rep.subsets_m_plus_n = binom(m + n, k);
  rep.subsets_m_plus_2n = binom(m + 2 * n, k);
  return rep;
}

HRep scale_polytope(const HRep& h, const Int& t) {
  if (t < 1) raise(Errc::BadDimension, "scale factor must be positive");
  const int n = h.space.n;
  const std::size_t k = h.space.dim();
  RatMat a(h.rows(), k);
  RatVec b(h.rows());
  const Rat tq(t);
  for (std::size_t i = 0; i < h.rows(); ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      // (A1, A2/t) scaled by t: (t A1, A2), rhs t b.
      a.at(i, j) = j < static_cast<std::size_t>(n) ? tq * h.A.at(i, j) : h.A.at(i, j);
    }
    b[i] = tq * h.b[i];
  }
  return canonicalize_rows(HRep(h.space, std::move(a), std::move(b)));
}

MixedIntegerHull mih_from_hrep(const HRep& h) {
  const MixedSpace space = h.space;
  try {
    if (!is_bounded(h)) raise(Errc::UnboundedInput, "hull of an unbounded polyhedron");
  } catch (const Error& e) {
    if (e.code() == Errc::EmptyPolyhedron)
      raise(Errc::MixedInfeasible, "no mixed-integer point in the polyhedron");
    throw;
  }
  if (space.n == 0) {
    return MixedIntegerHull{space, hrep_to_vrep(h).points, {}};
  }
  const HRep hi = canonicalize_rows(h);
  const ScaleReport rep = compute_scale_factor(hi);
  const HRep ht = scale_polytope(hi, rep.t);

  std::vector<RatVec> pool;
  for_each_integer_x(hi, [&](const RatVec& xhat) {
    std::vector<RatVec> fv = fiber_vertices(ht, xhat);
    pool.insert(pool.end(), fv.begin(), fv.end());
  });
  MixedIntegerHull scaled = hull_of_pool(space, std::move(pool));

  // Scale the continuous block back by 1/t.
  const Rat inv = make_rat(Int(1), rep.t);
  for (auto& vtx : scaled.vertices) {
    for (int j = space.n; j < space.dim(); ++j) vtx[j] *= inv;
  }
  std::sort(scaled.vertices.begin(), scaled.vertices.end());
  return scaled;
}

MixedIntegerHull mih_oracle(const Instance& inst) {
  const MixedSpace space = instance_space(inst);
  if (const VRep* vp = std::get_if<VRep>(&inst); vp && !vp->rays.empty())
    raise(Errc::UnboundedInput, "oracle needs a bounded polyhedron");
  HRep h = [&] {
    if (const HRep* hp = std::get_if<HRep>(&inst)) return *hp;
    return vrep_to_hrep(std::get<VRep>(inst));
  }();
  try {
    if (!is_bounded(h)) raise(Errc::UnboundedInput, "oracle needs a bounded polyhedron");
  } catch (const Error& e) {
    if (e.code() == Errc::EmptyPolyhedron)
      raise(Errc::MixedInfeasible, "no mixed-integer point in the polyhedron");
    throw;
  }
  if (space.n == 0) {
    return MixedIntegerHull{space, hrep_to_vrep(h).points, {}};
  }
  std::vector<RatVec> pool;
  for_each_integer_x(h, [&](const RatVec& xhat) {
    std::vector<RatVec> fv = fiber_vertices(h, xhat);
    pool.insert(pool.end(), fv.begin(), fv.end());
  });
  return hull_of_pool(space, std::move(pool));
}

std::vector<std::vector<std::size_t>> candidate_subsets(const VRep& v) {
  if (!v.rays.empty()) raise(Errc::NonPolytopeInput, "subset enumeration needs a polytope");
  if (v.points.empty()) raise(Errc::EmptyInput, "subset enumeration of no points");
  const std::size_t nd =
      std::min<std::size_t>(static_cast<std::size_t>(v.space.n), affine_dim(v.points));
  std::vector<std::vector<std::size_t>> out;
  for (SubsetIter it(v.points.size(), nd + 1); !it.done(); it.next()) out.push_back(*it);
  return out;
}

std::vector<RatVec> fiber_vertices_in_simplex(const std::vector<RatVec>& simplex,
                                              const RatVec& xhat, int n) {
  if (simplex.empty()) raise(Errc::EmptyInput, "fiber of an empty simplex");
  const std::size_t s = simplex.size();
  const std::size_t k = simplex[0].size();
  if (xhat.size() != static_cast<std::size_t>(n))
    raise(Errc::DimensionMismatch, "fiber point length must equal n");

  // Weight system: n fiber rows plus the convexity row.
  RatMat e(n + 1, s);
  RatVec rhs(n + 1);
  for (int i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < s; ++j) e.at(i, j) = simplex[j][i];
    rhs[i] = xhat[i];
  }
  for (std::size_t j = 0; j < s; ++j) e.at(n, j) = 1;
  rhs[n] = 1;

  std::vector<RatVec> out;
  for (std::size_t size = 1; size <= s; ++size) {
    for (SubsetIter it(s, size); !it.done(); it.next()) {
      const auto& sel = *it;
      // [E_B | rhs]: basic solution iff the columns are independent and the
      // system is consistent.
      RatMat sub(n + 1, size + 1);
      for (int i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j < size; ++j) sub.at(i, j) = e.at(i, sel[j]);
        sub.at(i, size) = rhs[i];
      }
      Rref r = rref(sub);
      bool rhs_pivot = !r.pivot_cols.empty() && r.pivot_cols.back() == size;
      if (rhs_pivot) continue;                     // inconsistent
      if (r.rank != size) continue;                // dependent columns
      RatVec lambda(size);
      bool nonneg = true;
      for (std::size_t i = 0; i < size; ++i) {
        lambda[i] = r.mat.at(i, size);
        if (lambda[i] < 0) nonneg = false;
      }
      if (!nonneg) continue;
      RatVec p(k);
      for (std::size_t j = 0; j < size; ++j) p = p + lambda[j] * simplex[sel[j]];
      out.push_back(std::move(p));
    }
  }
  out = sort_unique_points(std::move(out));
  if (out.empty()) raise(Errc::FiberEmpty, "fiber misses the simplex");
  return out;
}

MixedIntegerHull mih_from_vrep(const VRep& v) {
  if (!v.rays.empty()) raise(Errc::NonPolytopeInput, "hull from vertices needs a polytope");
  if (v.points.empty()) raise(Errc::EmptyInput, "hull of no points");
  const MixedSpace space = v.space;
  if (space.n == 0) {
    return MixedIntegerHull{space, hull_vertices(v.points), {}};
  }
  std::vector<RatVec> pool;
  for (const auto& subset : candidate_subsets(v)) {
    std::vector<RatVec> simplex;
    for (std::size_t i : subset) simplex.push_back(v.points[i]);
    std::vector<RatVec> proj;
    for (const auto& p : simplex) proj.push_back(p.head(space.n));
    proj = sort_unique_points(std::move(proj));
    IntegerHull qi = integer_hull_from_vertices(proj);
    for (const RatVec& xhat : qi.vertices) {
      try {
        std::vector<RatVec> fv = fiber_vertices_in_simplex(simplex, xhat, space.n);
        pool.insert(pool.end(), fv.begin(), fv.end());
      } catch (const Error& e) {
        if (e.code() != Errc::FiberEmpty) throw;
      }
    }
  }
  pool = sort_unique_points(std::move(pool));
  return hull_of_pool(space, std::move(pool));
}

Rat vertex_bound_hrep(std::size_t m, int n, int d, std::size_t phi) {
  const int k = n + d;
  if (k < 1) raise(Errc::BadDimension, "bound needs n + d >= 1");
  const Int varphi = Int(phi) + Int(n) * Int(phi) * int_pow(Int(m + n), static_cast<unsigned>(k));
  const Int base = Int(6) * k * k * varphi;
  return Rat(Int(2) * int_pow(Int(m), static_cast<unsigned>(k)) *
             int_pow(base, static_cast<unsigned>(k - 1)));
}

Rat vertex_bound_vrep(int n, std::size_t nu, std::size_t num_points) {
  if (n < 1) raise(Errc::BadDimension, "bound needs n >= 1");
  const Int phi = Int(4) * n * n * Int(nu);
  return make_rat(Int(4) * int_pow(Int(48), static_cast<unsigned>(n)) *
                      int_pow(Int(n), static_cast<unsigned>(3 * n - 2)) *
                      int_pow(phi, static_cast<unsigned>(n - 1)) *
                      int_pow(Int(num_points), static_cast<unsigned>(n + 1)),
                  Int(3));
}

std::size_t max_row_encoding_size(const HRep& h) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t s = encoding_size(h.b[i]);
    for (std::size_t j = 0; j < h.A.cols(); ++j) s += encoding_size(h.A.at(i, j));
    best = std::max(best, s);
  }
  return best;
}

std::size_t max_point_encoding_size(const std::vector<RatVec>& pts) {
  std::size_t best = 0;
  for (const auto& p : pts) best = std::max(best, encoding_size(p));
  return best;
}

}  // namespace mihull
