#include "mihull/polyrep.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "mihull/hull.hpp"
#include "mihull/lp.hpp"
#include "mihull/subsets.hpp"

namespace mihull {

HRep::HRep(MixedSpace s, RatMat a, RatVec rhs) : space(s), A(std::move(a)), b(std::move(rhs)) {
  if (A.cols() != static_cast<std::size_t>(space.dim()))
    raise(Errc::DimensionMismatch, "H-rep column count does not match the space");
  if (b.size() != A.rows()) raise(Errc::DimensionMismatch, "H-rep rhs length mismatch");
}

bool HRep::contains(const RatVec& z) const {
  for (std::size_t i = 0; i < rows(); ++i) {
    if (dot(row(i), z) > b[i]) return false;
  }
  return true;
}

VRep::VRep(MixedSpace s, std::vector<RatVec> pts, std::vector<RatVec> raw_rays) : space(s) {
  for (const auto& p : pts) {
    if (p.size() != static_cast<std::size_t>(space.dim()))
      raise(Errc::DimensionMismatch, "point dimension does not match the space");
  }
  for (const auto& r : raw_rays) {
    if (r.size() != static_cast<std::size_t>(space.dim()))
      raise(Errc::DimensionMismatch, "ray dimension does not match the space");
  }
  points = sort_unique_points(std::move(pts));
  rays = normalize_rays(raw_rays);
}

const MixedSpace& instance_space(const Instance& inst) {
  return std::visit([](const auto& x) -> const MixedSpace& { return x.space; }, inst);
}

std::vector<RatVec> normalize_rays(const std::vector<RatVec>& raw) {
  std::vector<RatVec> out;
  for (const auto& r : raw) {
    if (is_zero(r)) raise(Errc::ZeroRay, "zero ray");
    out.push_back(primitive_integer_vec(r));
  }
  return sort_unique_points(std::move(out));
}

std::size_t affine_dim(const std::vector<RatVec>& pts) {
  if (pts.empty()) raise(Errc::EmptyInput, "affine dimension of no points");
  if (pts.size() == 1) return 0;
  return mat_rank(detail::difference_matrix(pts));
}

namespace detail {

RatMat difference_matrix(const std::vector<RatVec>& pts) {
  const std::size_t k = pts[0].size();
  RatMat d(pts.size() - 1, k);
  for (std::size_t i = 1; i < pts.size(); ++i) d.set_row(i - 1, pts[i] - pts[0]);
  return d;
}

std::vector<std::size_t> chart_columns(const std::vector<RatVec>& pts, std::size_t dim) {
  if (dim == 0) return {};
  // Pivot columns of the RREF of the difference matrix are the
  // lexicographically first independent coordinate subset.
  Rref r = rref(difference_matrix(pts));
  return r.pivot_cols;
}

RatVec chart_project(const RatVec& p, const std::vector<std::size_t>& cols) {
  RatVec out(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) out[i] = p[cols[i]];
  return out;
}

}  // namespace detail

namespace {

std::string row_key(const std::vector<Int>& coeffs, const Int& rhs) {
  std::string s;
  for (const Int& c : coeffs) {
    s += c.str();
    s += ',';
  }
  s += '|';
  s += rhs.str();
  return s;
}

// Reduction of Az <= b by the equality rows forced by opposite inequality
// pairs: z = origin + basis * w with the reduced system A' w <= b'.
struct EqualityReduction {
  RatVec origin;               // a particular solution of the equality system
  std::vector<RatVec> basis;   // kernel directions, one per free variable
  std::vector<RatVec> rows;    // reduced inequality rows (in w-space)
  std::vector<Rat> rhs;
  bool inconsistent = false;   // equality system unsolvable -> empty
};

EqualityReduction reduce_by_equality_pairs(const HRep& h) {
  const std::size_t k = h.space.dim();
  EqualityReduction red;

  // Detect i, j with primitive row_i == -row_j (both (a|b) scaled): a.z = b.
  std::map<std::string, std::size_t> seen;
  std::vector<std::size_t> eq_rows;
  std::vector<bool> in_eq(h.rows(), false);
  for (std::size_t i = 0; i < h.rows(); ++i) {
    RatVec full(k + 1);
    for (std::size_t j = 0; j < k; ++j) full[j] = h.A.at(i, j);
    full[k] = h.b[i];
    std::vector<Int> prim = primitive_integer_row(full);
    std::vector<Int> neg(prim.size());
    for (std::size_t j = 0; j < prim.size(); ++j) neg[j] = -prim[j];
    Int prhs = prim.back();
    prim.pop_back();
    Int nrhs = neg.back();
    neg.pop_back();
    auto it = seen.find(row_key(neg, nrhs));
    if (it != seen.end() && !in_eq[it->second] && !in_eq[i]) {
      eq_rows.push_back(i);
      in_eq[i] = in_eq[it->second] = true;
    }
    seen.emplace(row_key(prim, prhs), i);
  }

  if (eq_rows.empty()) {
    red.origin = RatVec(k);
    for (std::size_t j = 0; j < k; ++j) {
      RatVec e(k);
      e[j] = 1;
      red.basis.push_back(e);
    }
  } else {
    RatMat eq(eq_rows.size(), k + 1);
    for (std::size_t i = 0; i < eq_rows.size(); ++i) {
      for (std::size_t j = 0; j < k; ++j) eq.at(i, j) = h.A.at(eq_rows[i], j);
      eq.at(i, k) = h.b[eq_rows[i]];
    }
    Rref r = rref(eq);
    for (std::size_t c : r.pivot_cols) {
      if (c == k) {
        red.inconsistent = true;
        return red;
      }
    }
    red.origin = RatVec(k);
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
      red.origin[r.pivot_cols[i]] = r.mat.at(i, k);
    std::vector<bool> is_pivot(k, false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    for (std::size_t free_col = 0; free_col < k; ++free_col) {
      if (is_pivot[free_col]) continue;
      RatVec v(k);
      v[free_col] = 1;
      for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
        v[r.pivot_cols[i]] = -r.mat.at(i, free_col);
      red.basis.push_back(v);
    }
  }

  const std::size_t f = red.basis.size();
  std::map<std::string, bool> dedup;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    RatVec a = h.row(i);
    RatVec ared(f);
    for (std::size_t j = 0; j < f; ++j) ared[j] = dot(a, red.basis[j]);
    Rat bred = h.b[i] - dot(a, red.origin);
    if (is_zero(ared)) {
      if (bred < 0) red.inconsistent = true;
      continue;
    }
    RatVec full(f + 1);
    for (std::size_t j = 0; j < f; ++j) full[j] = ared[j];
    full[f] = bred;
    std::vector<Int> prim = primitive_integer_row(full);
    Int prhs = prim.back();
    prim.pop_back();
    std::string key = row_key(prim, prhs);
    if (dedup.emplace(key, true).second) {
      red.rows.push_back(ared);
      red.rhs.push_back(bred);
    }
  }
  return red;
}

}  // namespace

VRep hrep_to_vrep(const HRep& h) {
  const std::size_t k = h.space.dim();
  {
    LpResult feas = lp_solve(h, RatVec(k), LpSense::Min);
    if (feas.status == LpStatus::Infeasible)
      raise(Errc::EmptyPolyhedron, "vertex enumeration of an empty polyhedron");
  }
  EqualityReduction red = reduce_by_equality_pairs(h);
  if (red.inconsistent)
    raise(Errc::EmptyPolyhedron, "vertex enumeration of an empty polyhedron");
  const std::size_t f = red.basis.size();
  const std::size_t m = red.rows.size();

  RatMat ra = RatMat::from_rows(red.rows, f);
  if (f > 0 && mat_rank(ra) < f)
    raise(Errc::ImplicitLineality, "polyhedron contains a line");

  auto lift = [&](const RatVec& w) {
    RatVec z = red.origin;
    for (std::size_t j = 0; j < f; ++j) z = z + w[j] * red.basis[j];
    return z;
  };
  auto feasible_w = [&](const RatVec& w) {
    for (std::size_t i = 0; i < m; ++i) {
      if (dot(red.rows[i], w) > red.rhs[i]) return false;
    }
    return true;
  };

  // Vertices: basic feasible solutions over all f-row bases.
  std::vector<RatVec> cand;
  for (SubsetIter it(m, f); !it.done(); it.next()) {
    const auto& s = *it;
    RatMat sq(f, f);
    RatVec rs(f);
    for (std::size_t i = 0; i < f; ++i) {
      sq.set_row(i, red.rows[s[i]]);
      rs[i] = red.rhs[s[i]];
    }
    try {
      RatVec w = mat_solve(sq, rs);
      if (feasible_w(w)) cand.push_back(lift(w));
    } catch (const Error& e) {
      if (e.code() != Errc::SingularMatrix) throw;
    }
  }
  std::vector<RatVec> verts = hull_vertices(std::move(cand));

  // Extreme rays: directions pinned by f-1 independent tight rows of the
  // recession cone {w : A'w <= 0}.
  std::vector<RatVec> raydirs;
  if (f >= 1) {
    for (SubsetIter it(m, f - 1); !it.done(); it.next()) {
      const auto& s = *it;
      std::vector<RatVec> sub;
      for (std::size_t i : s) sub.push_back(red.rows[i]);
      std::vector<RatVec> kern = kernel_basis(RatMat::from_rows(sub, f));
      if (kern.size() != 1) continue;
      for (int sgn = 0; sgn < 2; ++sgn) {
        RatVec w = sgn == 0 ? kern[0] : Rat(-1) * kern[0];
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) ok = dot(red.rows[i], w) <= 0;
        if (!ok) continue;
        RatVec dir(k);
        for (std::size_t j = 0; j < f; ++j) dir = dir + w[j] * red.basis[j];
        if (!is_zero(dir)) raydirs.push_back(dir);
      }
    }
  }
  return VRep(h.space, std::move(verts), raydirs);
}

HRep vrep_to_hrep(const VRep& v) {
  if (!v.rays.empty()) raise(Errc::NonPolytopeInput, "facet description requires a polytope");
  if (v.points.empty()) raise(Errc::EmptyInput, "facet description of no points");
  const std::size_t k = v.space.dim();
  const std::vector<RatVec>& pts = v.points;
  const std::size_t nd = affine_dim(pts);

  std::vector<RatVec> rows;  // each of length k+1, (a | b) meaning a.z <= b
  auto push_row = [&](const RatVec& a, const Rat& beta) {
    RatVec full(k + 1);
    for (std::size_t j = 0; j < k; ++j) full[j] = a[j];
    full[k] = beta;
    rows.push_back(primitive_integer_vec(full));
  };

  // Affine-hull equalities as paired inequalities.
  if (nd < k) {
    for (const RatVec& c : kernel_basis(detail::difference_matrix(pts))) {
      RatVec cc = primitive_integer_vec(c);
      Rat beta = dot(cc, pts[0]);
      push_row(cc, beta);
      push_row(Rat(-1) * cc, -beta);
    }
  }

  // Facets within the affine hull, via a coordinate chart.
  if (nd >= 1) {
    std::vector<std::size_t> cols = detail::chart_columns(pts, nd);
    std::vector<RatVec> w(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) w[i] = detail::chart_project(pts[i], cols);

    std::map<std::string, bool> dedup;
    for (SubsetIter it(pts.size(), nd); !it.done(); it.next()) {
      const auto& s = *it;
      std::vector<RatVec> sub;
      for (std::size_t i : s) sub.push_back(w[i]);
      if (affine_dim(sub) != nd - 1) continue;
      std::vector<RatVec> kern = kernel_basis(detail::difference_matrix(sub));
      if (kern.size() != 1) continue;
      RatVec a = kern[0];
      Rat beta = dot(a, sub[0]);
      bool any_below = false, any_above = false;
      for (const auto& wi : w) {
        const Rat val = dot(a, wi);
        if (val < beta) any_below = true;
        if (val > beta) any_above = true;
      }
      if (any_below && any_above) continue;
      if (any_above) {  // orient so that every point satisfies a.x <= beta
        a = Rat(-1) * a;
        beta = -beta;
      }
      RatVec lifted(k);
      for (std::size_t j = 0; j < cols.size(); ++j) lifted[cols[j]] = a[j];
      RatVec full(k + 1);
      for (std::size_t j = 0; j < k; ++j) full[j] = lifted[j];
      full[k] = beta;
      RatVec prim = primitive_integer_vec(full);
      std::string key;
      for (std::size_t j = 0; j <= k; ++j) key += format_rat(prim[j]), key += ',';
      if (dedup.emplace(key, true).second) rows.push_back(prim);
    }
  }

  std::sort(rows.begin(), rows.end());
  RatMat a(rows.size(), k);
  RatVec b(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < k; ++j) a.at(i, j) = rows[i][j];
    b[i] = rows[i][k];
  }
  return HRep(v.space, std::move(a), std::move(b));
}

VRep project_x(const VRep& v) {
  const int n = v.space.n;
  if (n == 0) raise(Errc::BadDimension, "projection onto an empty integer block");
  MixedSpace ps(n, 0);
  std::vector<RatVec> pts;
  for (const auto& p : v.points) pts.push_back(p.head(n));
  std::vector<RatVec> rays;
  for (const auto& r : v.rays) {
    RatVec h = r.head(n);
    if (!is_zero(h)) rays.push_back(h);
  }
  return VRep(ps, std::move(pts), rays);
}

HRep fiber_slice(const HRep& h, const RatVec& xhat) {
  const int n = h.space.n;
  if (xhat.size() != static_cast<std::size_t>(n))
    raise(Errc::DimensionMismatch, "fiber point length must equal n");
  if (n == 0) return h;
  const std::size_t k = h.space.dim();
  const std::size_t m = h.rows();
  RatMat a(m + 2 * n, k);
  RatVec b(m + 2 * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) a.at(i, j) = h.A.at(i, j);
    b[i] = h.b[i];
  }
  for (int i = 0; i < n; ++i) {
    a.at(m + i, i) = 1;
    b[m + i] = xhat[i];
    a.at(m + n + i, i) = -1;
    b[m + n + i] = -xhat[i];
  }
  return HRep(h.space, std::move(a), std::move(b));
}

std::vector<RatVec> minkowski_sum_points(const std::vector<std::vector<RatVec>>& sets) {
  if (sets.empty()) raise(Errc::EmptyInput, "Minkowski sum of no sets");
  for (const auto& s : sets) {
    if (s.empty()) raise(Errc::EmptyInput, "Minkowski sum with an empty set");
  }
  std::vector<RatVec> acc = sets[0];
  for (std::size_t si = 1; si < sets.size(); ++si) {
    std::vector<RatVec> next;
    for (const auto& a : acc)
      for (const auto& b : sets[si]) next.push_back(a + b);
    acc = sort_unique_points(std::move(next));
  }
  return sort_unique_points(std::move(acc));
}

HRep canonicalize_rows(const HRep& h) {
  const std::size_t k = h.space.dim();
  RatMat a(h.rows(), k);
  RatVec b(h.rows());
  for (std::size_t i = 0; i < h.rows(); ++i) {
    RatVec full(k + 1);
    for (std::size_t j = 0; j < k; ++j) full[j] = h.A.at(i, j);
    full[k] = h.b[i];
    RatVec prim = primitive_integer_vec(full);
    for (std::size_t j = 0; j < k; ++j) a.at(i, j) = prim[j];
    b[i] = prim[k];
  }
  return HRep(h.space, std::move(a), std::move(b));
}

bool hrep_is_integral(const HRep& h) {
  for (std::size_t i = 0; i < h.rows(); ++i) {
    if (!is_integer(h.b[i])) return false;
    for (std::size_t j = 0; j < h.A.cols(); ++j)
      if (!is_integer(h.A.at(i, j))) return false;
  }
  return true;
}

}  // namespace mihull
