#include "mihull/lp.hpp"

#include <algorithm>

namespace mihull {

namespace {

// Standard-form tableau: min c.v s.t. Mv = rhs, v >= 0, solved with the
// two-phase method. Bland's rule (lowest index) everywhere, so no cycling.
struct StandardLp {
  std::size_t rows = 0, vars = 0;
  std::vector<std::vector<Rat>> t;  // rows x (vars + artificials + 1), rhs last
  std::vector<std::size_t> basis;   // one basic variable per row
  std::size_t total = 0;            // vars + artificials

  StandardLp(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs, std::size_t nvars)
      : rows(m.size()), vars(nvars) {
    total = vars + rows;
    t.assign(rows, std::vector<Rat>(total + 1));
    basis.resize(rows);
    for (std::size_t i = 0; i < rows; ++i) {
      const bool flip = rhs[i] < 0;
      for (std::size_t j = 0; j < vars; ++j) t[i][j] = flip ? Rat(-m[i][j]) : m[i][j];
      t[i][vars + i] = 1;  // artificial
      t[i][total] = flip ? Rat(-rhs[i]) : rhs[i];
      basis[i] = vars + i;
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rat p = t[r][c];
    for (auto& x : t[r]) x /= p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || t[i][c] == 0) continue;
      const Rat f = t[i][c];
      for (std::size_t j = 0; j <= total; ++j) t[i][j] -= f * t[r][j];
    }
    basis[r] = c;
  }

  // Minimizes cost over columns [0, ncols); returns false when unbounded.
  bool run(const std::vector<Rat>& cost, std::size_t ncols) {
    for (;;) {
      // Reduced costs via the basic cost multipliers.
      std::size_t enter = ncols;
      for (std::size_t j = 0; j < ncols; ++j) {
        Rat red = cost[j];
        for (std::size_t i = 0; i < rows; ++i) {
          if (cost[basis[i]] != 0) red -= cost[basis[i]] * t[i][j];
        }
        if (red < 0) {
          enter = j;
          break;  // Bland: lowest index
        }
      }
      if (enter == ncols) return true;
      std::size_t leave = rows;
      Rat best;
      for (std::size_t i = 0; i < rows; ++i) {
        if (t[i][enter] <= 0) continue;
        Rat ratio = t[i][total] / t[i][enter];
        if (leave == rows || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows) return false;
      pivot(leave, enter);
    }
  }

  Rat objective(const std::vector<Rat>& cost) const {
    Rat v = 0;
    for (std::size_t i = 0; i < rows; ++i) v += cost[basis[i]] * t[i][total];
    return v;
  }

  std::vector<Rat> solution() const {
    std::vector<Rat> v(vars);
    for (std::size_t i = 0; i < rows; ++i) {
      if (basis[i] < vars) v[basis[i]] = t[i][total];
    }
    return v;
  }
};

// Phase 1 + Phase 2. Returns status; fills solution/value for Optimal.
LpStatus solve_standard(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs,
                        std::vector<Rat> c, std::vector<Rat>* solution, Rat* value) {
  const std::size_t nvars = c.size();
  StandardLp lp(std::move(m), std::move(rhs), nvars);
  std::vector<Rat> phase1(lp.total, 0);
  for (std::size_t j = nvars; j < lp.total; ++j) phase1[j] = 1;
  lp.run(phase1, lp.total);  // bounded below by 0
  if (lp.objective(phase1) != 0) return LpStatus::Infeasible;
  // Drive leftover artificials out of the basis where possible.
  for (std::size_t i = 0; i < lp.rows; ++i) {
    if (lp.basis[i] < nvars) continue;
    std::size_t c2 = nvars;
    for (std::size_t j = 0; j < nvars; ++j) {
      if (lp.t[i][j] != 0) {
        c2 = j;
        break;
      }
    }
    if (c2 < nvars) lp.pivot(i, c2);
    // Otherwise the row is redundant; its artificial stays basic at zero,
    // and phase 2 never pivots on artificial columns.
  }
  std::vector<Rat> phase2(lp.total, 0);
  for (std::size_t j = 0; j < nvars; ++j) phase2[j] = c[j];
  if (!lp.run(phase2, nvars)) return LpStatus::Unbounded;
  if (solution) *solution = lp.solution();
  if (value) *value = lp.objective(phase2);
  return LpStatus::Optimal;
}

// Moves an optimal point to a vertex of the optimal face. Each step finds a
// direction in the kernel of the tight rows plus the objective and walks to
// the first newly tight constraint; at most dim steps. Returns the input
// unchanged when the polyhedron contains a line through the optimal face.
RatVec pull_to_vertex(const HRep& h, RatVec z, const RatVec& c) {
  const std::size_t k = h.space.dim();
  for (;;) {
    std::vector<RatVec> stacked;
    for (std::size_t i = 0; i < h.rows(); ++i) {
      if (dot(h.row(i), z) == h.b[i]) stacked.push_back(h.row(i));
    }
    stacked.push_back(c);
    std::vector<RatVec> kern = kernel_basis(RatMat::from_rows(stacked, k));
    if (kern.empty()) return z;
    const RatVec& w = kern.front();
    // Longest feasible step along +w, then -w.
    bool moved = false;
    for (int sgn = 0; sgn < 2 && !moved; ++sgn) {
      RatVec dir = sgn == 0 ? w : Rat(-1) * w;
      bool finite = false;
      Rat step;
      for (std::size_t i = 0; i < h.rows(); ++i) {
        const Rat aw = dot(h.row(i), dir);
        if (aw <= 0) continue;
        const Rat slack = h.b[i] - dot(h.row(i), z);
        const Rat limit = slack / aw;
        if (!finite || limit < step) {
          finite = true;
          step = limit;
        }
      }
      if (finite) {
        z = z + step * dir;
        moved = true;
      }
    }
    if (!moved) return z;  // line inside the optimal face: not pointed
  }
}

}  // namespace

LpResult lp_solve(const HRep& h, const RatVec& c, LpSense sense) {
  const std::size_t k = h.space.dim();
  if (c.size() != k) raise(Errc::DimensionMismatch, "objective length mismatch");
  const std::size_t m = h.rows();
  // z = zp - zn with zp, zn >= 0, slack per row.
  const std::size_t nvars = 2 * k + m;
  std::vector<std::vector<Rat>> rows(m, std::vector<Rat>(nvars));
  std::vector<Rat> rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      rows[i][j] = h.A.at(i, j);
      rows[i][k + j] = -h.A.at(i, j);
    }
    rows[i][2 * k + i] = 1;
    rhs[i] = h.b[i];
  }
  std::vector<Rat> cost(nvars, 0);
  const Rat sign = sense == LpSense::Min ? 1 : -1;
  for (std::size_t j = 0; j < k; ++j) {
    cost[j] = sign * c[j];
    cost[k + j] = -sign * c[j];
  }
  std::vector<Rat> sol;
  Rat val;
  LpStatus st = solve_standard(std::move(rows), std::move(rhs), std::move(cost), &sol, &val);
  LpResult out;
  out.status = st;
  if (st == LpStatus::Optimal) {
    RatVec z(k);
    for (std::size_t j = 0; j < k; ++j) z[j] = sol[j] - sol[k + j];
    z = pull_to_vertex(h, std::move(z), c);
    out.point = z;
    out.value = sense == LpSense::Min ? val : Rat(-val);
  }
  return out;
}

bool point_in_hull_with_rays(const RatVec& p, const std::vector<RatVec>& generators,
                             const std::vector<RatVec>& rays) {
  if (generators.empty()) raise(Errc::EmptyGenerators, "membership in empty hull");
  const std::size_t k = p.size();
  for (const auto& g : generators)
    if (g.size() != k) raise(Errc::DimensionMismatch, "generator dimension mismatch");
  for (const auto& r : rays)
    if (r.size() != k) raise(Errc::DimensionMismatch, "ray dimension mismatch");
  const std::size_t g = generators.size(), w = rays.size();
  // Columns: lambda over generators, mu over rays. Rows: k coordinate
  // equations plus the lambda-sum row.
  std::vector<std::vector<Rat>> m(k + 1, std::vector<Rat>(g + w));
  std::vector<Rat> rhs(k + 1);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < g; ++j) m[i][j] = generators[j][i];
    for (std::size_t j = 0; j < w; ++j) m[i][g + j] = rays[j][i];
    rhs[i] = p[i];
  }
  for (std::size_t j = 0; j < g; ++j) m[k][j] = 1;
  rhs[k] = 1;
  std::vector<Rat> cost(g + w, 0);
  return solve_standard(std::move(m), std::move(rhs), std::move(cost), nullptr, nullptr) ==
         LpStatus::Optimal;
}

bool point_in_hull(const RatVec& p, const std::vector<RatVec>& generators) {
  return point_in_hull_with_rays(p, generators, {});
}

bool is_extreme_point(const RatVec& p, const std::vector<RatVec>& candidates) {
  std::vector<RatVec> others;
  bool found = false;
  for (const auto& c : candidates) {
    if (c == p) {
      found = true;
    } else {
      others.push_back(c);
    }
  }
  if (!found) raise(Errc::PNotInCandidates, "point not among candidates");
  if (others.empty()) return true;
  return !point_in_hull(p, others);
}

bool is_bounded(const HRep& h) {
  const std::size_t k = h.space.dim();
  for (std::size_t j = 0; j < k; ++j) {
    RatVec c(k);
    c[j] = 1;
    for (LpSense sense : {LpSense::Max, LpSense::Min}) {
      LpResult r = lp_solve(h, c, sense);
      if (r.status == LpStatus::Infeasible)
        raise(Errc::EmptyPolyhedron, "boundedness of an empty polyhedron");
      if (r.status == LpStatus::Unbounded) return false;
    }
  }
  return true;
}

}  // namespace mihull
