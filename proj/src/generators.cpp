#include "mihull/generators.hpp"

#include "mihull/mihull.hpp"
#include "mihull/rng.hpp"

namespace mihull {

std::vector<Int> example1_default_b(int d) {
  std::vector<Int> b;
  for (int i = 1; i <= d + 1; ++i) b.push_back(int_pow(Int(2), static_cast<unsigned>(i)) + 1);
  return b;
}

ShearedCube gen_example1(int d, std::vector<Int> b) {
  if (d < 1) raise(Errc::BadDimension, "need at least one continuous coordinate");
  if (b.empty()) b = example1_default_b(d);
  if (b.size() != static_cast<std::size_t>(d + 1))
    raise(Errc::BadDimension, "need d+1 box bounds");
  for (const Int& bi : b) {
    if (bi <= 0 || bi % 2 == 0) raise(Errc::BadDimension, "box bounds must be positive odd");
  }
  const int k = d + 1;
  MixedSpace space(1, d);

  RatMat shear(k, k);
  for (int j = 0; j < k; ++j) shear.at(0, j) = Rat(1, 2);
  for (int i = 1; i < k; ++i) shear.at(i, i) = 1;
  RatMat inv(k, k);
  inv.at(0, 0) = 2;
  for (int j = 1; j < k; ++j) inv.at(0, j) = -1;
  for (int i = 1; i < k; ++i) inv.at(i, i) = 1;

  // Rows A_i z <= b_i and -A_i z <= b_i.
  RatMat a(2 * k, k);
  RatVec rhs(2 * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      a.at(i, j) = inv.at(i, j);
      a.at(k + i, j) = -inv.at(i, j);
    }
    rhs[i] = Rat(b[i]);
    rhs[k + i] = Rat(b[i]);
  }
  HRep hrep(space, std::move(a), std::move(rhs));

  // Vertices: images of the box corners under the shear.
  std::vector<RatVec> pts;
  for (std::uint64_t mask = 0; mask < (1ULL << k); ++mask) {
    RatVec corner(k);
    for (int i = 0; i < k; ++i)
      corner[i] = (mask >> i) & 1 ? Rat(b[i]) : Rat(-b[i]);
    RatVec img(k);
    for (int i = 0; i < k; ++i) {
      Rat s = 0;
      for (int j = 0; j < k; ++j) s += shear.at(i, j) * corner[j];
      img[i] = s;
    }
    pts.push_back(std::move(img));
  }
  return ShearedCube{std::move(hrep), VRep(space, std::move(pts)), std::move(shear), std::move(inv)};
}

HRep gen_knapsack(int m, int n, int d, std::uint64_t seed) {
  if (m < 1 || n < 0 || d < 0 || n + d < 1) raise(Errc::BadDimension, "invalid knapsack shape");
  MixedSpace space(n, d);
  const int k = n + d;
  DetRng rng(seed);
  RatMat a(m + k, k);
  RatVec b(m + k);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < k; ++j) a.at(i, j) = Rat(rng.in(1, 9));
    b[i] = Rat(rng.in(2, 12));
  }
  for (int j = 0; j < k; ++j) {
    a.at(m + j, j) = -1;
    b[m + j] = 0;
  }
  return HRep(space, std::move(a), std::move(b));
}

VRep gen_random_vrep(int n, int d, int max_points, int max_num, int max_den,
                     std::uint64_t seed, bool require_mixed_feasible) {
  MixedSpace space(n, d);
  const int k = n + d;
  for (std::uint64_t attempt = 0;; ++attempt) {
    DetRng rng(seed * 0x10001ULL + attempt);
    const int count = static_cast<int>(rng.in(2, max_points));
    std::vector<RatVec> pts;
    for (int i = 0; i < count; ++i) {
      RatVec p(k);
      for (int j = 0; j < k; ++j)
        p[j] = make_rat(rng.in(-max_num, max_num), rng.in(1, max_den));
      pts.push_back(std::move(p));
    }
    VRep v(space, std::move(pts));
    if (!require_mixed_feasible) return v;
    if (n == 0 || mixed_feasible_bounded(vrep_to_hrep(v))) return v;
  }
}

}  // namespace mihull
