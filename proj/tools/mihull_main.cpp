// Command-line front end: exact mixed-integer hulls, integer hulls, the
// polytope reduction, concave minimization, instance generators, and
// method-vs-oracle verification.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mihull/concmin.hpp"
#include "mihull/generators.hpp"
#include "mihull/hull.hpp"
#include "mihull/instance_io.hpp"
#include "mihull/lp.hpp"
#include "mihull/mihull.hpp"

namespace {

using namespace mihull;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitUnbounded = 4;
constexpr int kExitMismatch = 5;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::Parse:
      return kExitParse;
    case Errc::MixedInfeasible:
    case Errc::EmptyPolyhedron:
      return kExitInfeasible;
    case Errc::UnboundedInput:
      return kExitUnbounded;
    default:
      return kExitError;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::Parse, "cannot write '" + path + "'");
  out << text;
}

Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

bool instance_is_bounded(const Instance& inst) {
  if (const VRep* v = std::get_if<VRep>(&inst)) return v->rays.empty();
  return is_bounded(std::get<HRep>(inst));
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  long long millis() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

struct HullRun {
  MixedIntegerHull hull;
  std::string method;
  std::optional<Int> t;
  std::optional<Rat> bound_hrep;
  std::optional<Rat> bound_vrep;
};

// Computes the hull of a bounded instance with the requested method,
// together with the matching printed vertex bound.
HullRun run_method(const Instance& inst, std::string method) {
  if (method == "auto")
    method = std::holds_alternative<VRep>(inst) ? "subsets" : "scaling";
  HullRun run;
  run.method = method;
  if (method == "subsets") {
    const VRep v = std::holds_alternative<VRep>(inst)
                       ? std::get<VRep>(inst)
                       : hrep_to_vrep(std::get<HRep>(inst));
    run.hull = mih_from_vrep(v);
    if (v.space.n >= 1)
      run.bound_vrep = vertex_bound_vrep(v.space.n, max_point_encoding_size(v.points),
                                         v.points.size());
  } else if (method == "scaling") {
    const HRep h = std::holds_alternative<HRep>(inst)
                       ? std::get<HRep>(inst)
                       : vrep_to_hrep(std::get<VRep>(inst));
    const HRep hi = canonicalize_rows(h);
    if (hi.space.n >= 1) {
      run.t = compute_scale_factor(hi).t;
      run.bound_hrep =
          vertex_bound_hrep(hi.rows(), hi.space.n, hi.space.d, max_row_encoding_size(hi));
    }
    run.hull = mih_from_hrep(hi);
  } else if (method == "oracle") {
    run.hull = mih_oracle(inst);
  } else {
    throw Error(Errc::Parse, "unknown method '" + method + "'");
  }
  return run;
}

std::string hull_to_text(const MixedIntegerHull& hull) {
  return format_instance(VRep(hull.space, hull.vertices, hull.rays));
}

void print_stats(const HullRun& run, long long millis) {
  std::cout << "method: " << run.method << "\n";
  std::cout << "vertices: " << run.hull.vertices.size() << "\n";
  if (run.t) std::cout << "t: " << run.t->str() << "\n";
  if (run.bound_hrep) std::cout << "bound_hrep: " << format_rat(*run.bound_hrep) << "\n";
  if (run.bound_vrep) std::cout << "bound_vrep: " << format_rat(*run.bound_vrep) << "\n";
  std::cout << "millis: " << millis << "\n";
}

// Vertices of conv(points) + cone(rays): drops generators absorbed by the cone.
std::vector<RatVec> polyhedron_vertices(const std::vector<RatVec>& points,
                                        const std::vector<RatVec>& rays) {
  if (rays.empty()) return points;
  std::vector<RatVec> verts;
  for (const auto& p : points) {
    std::vector<RatVec> others;
    for (const auto& q : points)
      if (!(q == p)) others.push_back(q);
    if (others.empty() || !point_in_hull_with_rays(p, others, rays)) verts.push_back(p);
  }
  return verts;
}

int cmd_hull(const std::string& path, const std::string& method, const std::string& out_path) {
  Timer timer;
  Instance inst = load_instance(path);
  std::vector<RatVec> rays;
  if (!instance_is_bounded(inst)) {
    Reduction red = reduce_to_polytope(inst);
    inst = red.polytope;
    rays = red.rays;
  }
  HullRun run = run_method(inst, method);
  if (!rays.empty()) {
    run.hull.vertices = polyhedron_vertices(run.hull.vertices, rays);
    run.hull.rays = rays;
  }
  std::string text = hull_to_text(run.hull);
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    write_file(out_path, text);
  }
  print_stats(run, timer.millis());
  return kExitOk;
}

int cmd_integer_hull(const std::string& path, const std::string& out_path) {
  Timer timer;
  Instance inst = load_instance(path);
  const MixedSpace space = instance_space(inst);
  if (space.d != 0) throw Error(Errc::Parse, "integer-hull needs d = 0");
  const VRep v = std::holds_alternative<VRep>(inst) ? std::get<VRep>(inst)
                                                    : hrep_to_vrep(std::get<HRep>(inst));
  if (!v.rays.empty()) throw Error(Errc::UnboundedInput, "integer-hull needs a polytope");
  IntegerHull hull = integer_hull_from_vertices(v.points);
  std::string text = format_instance(VRep(space, hull.vertices));
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    write_file(out_path, text);
  }
  std::cout << "method: triangulation\n";
  std::cout << "vertices: " << hull.vertices.size() << "\n";
  std::cout << "bound_inthull: "
            << format_rat(integer_hull_vertex_bound(space.n, max_point_encoding_size(v.points),
                                                    v.points.size(),
                                                    v.points.size() == static_cast<std::size_t>(space.n) + 1))
            << "\n";
  std::cout << "millis: " << timer.millis() << "\n";
  return kExitOk;
}

int cmd_reduce(const std::string& path, std::string out_polytope, std::string out_rays) {
  Instance inst = load_instance(path);
  Reduction red = reduce_to_polytope(inst);
  if (out_polytope.empty()) out_polytope = path + ".polytope";
  if (out_rays.empty()) out_rays = path + ".rays";
  write_file(out_polytope, format_instance(red.polytope));
  VRep cone(instance_space(inst), {}, red.rays);
  write_file(out_rays, format_instance(cone));
  std::cout << "polytope: " << out_polytope << "\n";
  std::cout << "rays: " << out_rays << "\n";
  std::cout << "ray_count: " << red.rays.size() << "\n";
  return kExitOk;
}

int cmd_minimize(const std::string& path, const std::string& obj_path) {
  Instance inst = load_instance(path);
  const MixedSpace space = instance_space(inst);
  if (!instance_is_bounded(inst)) throw Error(Errc::UnboundedInput, "minimize needs a polytope");
  const VRep v = std::holds_alternative<VRep>(inst) ? std::get<VRep>(inst)
                                                    : hrep_to_vrep(std::get<HRep>(inst));
  PiecewiseAffineConcave f = parse_objective(read_file(obj_path), space);
  MinResult res = minimize_over_mih(v, f);
  std::cout << format_rat(res.value) << "@";
  for (std::size_t j = 0; j < res.point.size(); ++j) {
    if (j) std::cout << ' ';
    std::cout << format_rat(res.point[j]);
  }
  std::cout << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& path, const std::string& method) {
  Instance inst = load_instance(path);
  std::vector<RatVec> rays;
  if (!instance_is_bounded(inst)) {
    Reduction red = reduce_to_polytope(inst);
    inst = red.polytope;
    rays = red.rays;
  }
  HullRun run = run_method(inst, method);
  MixedIntegerHull oracle = mih_oracle(inst);
  if (run.hull.vertices != oracle.vertices) {
    std::cerr << "verify: mismatch on " << path << " (" << run.method << " gave "
              << run.hull.vertices.size() << " vertices, oracle " << oracle.vertices.size()
              << ")\n";
    return kExitMismatch;
  }
  std::cout << "verify: OK " << path << " (" << oracle.vertices.size() << " vertices";
  if (!rays.empty()) std::cout << ", " << rays.size() << " rays";
  std::cout << ")\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact mixed-integer hulls of rational polyhedra"};
  app.require_subcommand(1);

  std::string in_path, out_path, method = "auto", obj_path;
  std::string out_polytope, out_rays;

  auto* hull = app.add_subcommand("hull", "Mixed-integer hull of an instance");
  hull->add_option("file", in_path)->required();
  hull->add_option("--method", method)->check(CLI::IsMember({"auto", "scaling", "subsets", "oracle"}));
  hull->add_option("--out", out_path);

  auto* ih = app.add_subcommand("integer-hull", "Integer hull via the triangulation pipeline");
  ih->add_option("file", in_path)->required();
  ih->add_option("--out", out_path);

  auto* red = app.add_subcommand("reduce", "Restrict to a polytope plus recession rays");
  red->add_option("file", in_path)->required();
  red->add_option("--out-polytope", out_polytope);
  red->add_option("--out-rays", out_rays);

  auto* mini = app.add_subcommand("minimize", "Concave minimization over mixed-integer points");
  mini->add_option("file", in_path)->required();
  mini->add_option("--objective", obj_path)->required();

  auto* ver = app.add_subcommand("verify", "Check a method against the fiber oracle");
  ver->add_option("file", in_path)->required();
  ver->add_option("--method", method)->check(CLI::IsMember({"auto", "scaling", "subsets", "oracle"}));

  auto* gen = app.add_subcommand("gen", "Instance generators");
  gen->require_subcommand(1);
  int gd = 2, gm = 1, gn = 1, gen_d = 1, gcount = 6, gnum = 5, gden = 4;
  std::uint64_t gseed = 1;
  bool remark1 = false;
  std::vector<std::string> b_values;
  std::string out_hrep, out_vrep;

  auto* ge1 = gen->add_subcommand("example1", "Sheared hypercube with cut-off vertices");
  ge1->add_option("--d", gd, "continuous dimension")->check(CLI::PositiveNumber);
  ge1->add_option("--b", b_values, "d+1 positive odd bounds");
  ge1->add_flag("--remark1", remark1, "use b_i = 3 throughout");
  ge1->add_option("--out-hrep", out_hrep);
  ge1->add_option("--out-vrep", out_vrep);

  auto* gkn = gen->add_subcommand("knapsack", "Random bounded knapsack-style instance");
  gkn->add_option("--m", gm)->check(CLI::PositiveNumber);
  gkn->add_option("--n", gn);
  gkn->add_option("--d", gen_d);
  gkn->add_option("--seed", gseed);
  gkn->add_option("--out", out_path);

  auto* grd = gen->add_subcommand("random", "Random rational V-polytope");
  grd->add_option("--n", gn);
  grd->add_option("--d", gen_d);
  grd->add_option("--points", gcount);
  grd->add_option("--max-num", gnum);
  grd->add_option("--max-den", gden);
  grd->add_option("--seed", gseed);
  grd->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (hull->parsed()) return cmd_hull(in_path, method, out_path);
    if (ih->parsed()) return cmd_integer_hull(in_path, out_path);
    if (red->parsed()) return cmd_reduce(in_path, out_polytope, out_rays);
    if (mini->parsed()) return cmd_minimize(in_path, obj_path);
    if (ver->parsed()) return cmd_verify(in_path, method);
    if (ge1->parsed()) {
      std::vector<Int> b;
      if (remark1) {
        b.assign(gd + 1, Int(3));
      } else {
        for (const auto& s : b_values) b.push_back(Int(s));
      }
      ShearedCube ex = gen_example1(gd, b);
      std::string htext = format_instance(ex.hrep);
      std::string vtext = format_instance(ex.vrep);
      if (out_hrep.empty() && out_vrep.empty()) {
        std::cout << htext << "\n" << vtext;
      } else {
        if (!out_hrep.empty()) write_file(out_hrep, htext);
        if (!out_vrep.empty()) write_file(out_vrep, vtext);
      }
      return kExitOk;
    }
    if (gkn->parsed()) {
      std::string text = format_instance(gen_knapsack(gm, gn, gen_d, gseed));
      if (out_path.empty()) {
        std::cout << text;
      } else {
        write_file(out_path, text);
      }
      return kExitOk;
    }
    if (grd->parsed()) {
      std::string text =
          format_instance(gen_random_vrep(gn, gen_d, gcount, gnum, gden, gseed, true));
      if (out_path.empty()) {
        std::cout << text;
      } else {
        write_file(out_path, text);
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
