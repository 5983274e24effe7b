#include "lagtor/suites.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

#include "lagtor/highdim.hpp"
#include "lagtor/maslov.hpp"
#include "lagtor/morse.hpp"
#include "lagtor/random.hpp"
#include "lagtor/symmetry.hpp"
#include "lagtor/torus.hpp"

namespace lagtor {

void SuiteConfig::validate() const {
  if (grid < 2) throw Error("config: grid must be >= 2");
  if (resolution < 64) throw Error("config: resolution must be >= 64");
  if (!(epsilon > 0.0)) throw Error("config: epsilon must be > 0");
  if (n < 2 || n > 6) throw Error("config: n must be in [2, 6]");
  if (!(tol_geom > 0.0)) throw Error("config: tol_geom must be > 0");
}

ReportConfig SuiteConfig::report_config() const {
  return ReportConfig{n, epsilon, grid, resolution, tol_geom, seed};
}

namespace {

/// Runs one check body, converting any exception into a failing result.
CheckResult guarded(const std::string& claim_id, const std::string& anchor,
                    CheckValue expected, double tolerance,
                    const std::function<CheckResult()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return failed_check(claim_id, anchor, e.what(), std::move(expected), tolerance);
  }
}

std::string ranks_to_string(const std::vector<int>& ranks) {
  std::string s = "(";
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(ranks[i]);
  }
  s += ")";
  return s;
}

}  // namespace

std::vector<CheckResult> lagrangian_suite(const SuiteConfig& cfg) {
  cfg.validate();
  const FrameAtNorthPole frame = FrameAtNorthPole::standard(2);
  std::vector<CheckResult> out;

  out.push_back(guarded(
      "lagrangian_embedding", "intro: the geodesic-flow torus is a Lagrangian embedding",
      0.0, 1e-10, [&] {
        const double r = verify_lagrangian(cfg.grid, frame);
        return real_check("lagrangian_embedding",
                          "intro: the geodesic-flow torus is a Lagrangian embedding", r,
                          0.0, 1e-10);
      }));

  out.push_back(guarded(
      "flow_property", "construction: the closed-form geodesic flow is a one-parameter group",
      0.0, 1e-10, [&] {
        Sampler rng(cfg.seed);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
          const CotangentPoint x = rng.cotangent_point(2, 0.3, 2.0);
          const double s = rng.uniform(-10.0, 10.0);
          const double t = rng.uniform(-10.0, 10.0);
          const CotangentPoint a = geodesic_flow(geodesic_flow(x, s, cfg.tol_geom), t, cfg.tol_geom);
          const CotangentPoint b = geodesic_flow(x, s + t, cfg.tol_geom);
          worst = std::max(worst, ambient_distance(a, b));
        }
        return real_check("flow_property",
                          "construction: the closed-form geodesic flow is a one-parameter group",
                          worst, 0.0, 1e-10);
      }));

  out.push_back(guarded(
      "energy_conservation", "construction: |p| is constant along the geodesic flow", 0.0,
      1e-12, [&] {
        Sampler rng(cfg.seed + 1);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
          const CotangentPoint x = rng.cotangent_point(2, 0.3, 2.0);
          const double t = rng.uniform(-20.0, 20.0);
          worst = std::max(worst, std::abs(geodesic_flow(x, t, cfg.tol_geom).p.norm() - x.p.norm()));
        }
        return real_check("energy_conservation",
                          "construction: |p| is constant along the geodesic flow", worst,
                          0.0, 1e-12);
      }));

  out.push_back(guarded(
      "embedding_injectivity", "intro: the map phi is an embedding of the torus", 0.1, 0.0,
      [&] {
        const double margin = injectivity_margin(256, frame);
        CheckResult r;
        r.claim_id = "embedding_injectivity";
        r.paper_anchor = "intro: the map phi is an embedding of the torus";
        r.measured = margin;
        r.expected = "margin > 0.1 grid spacings";
        r.tolerance = 0.0;
        r.status = margin > 0.1 ? CheckStatus::Pass : CheckStatus::Fail;
        return r;
      }));

  out.push_back(guarded(
      "fiber_intersection_count", "intro: the torus meets each nonpolar fiber exactly twice",
      static_cast<std::int64_t>(2), 0.0, [&] {
        Sampler rng(cfg.seed + 2);
        int min_count = 2, max_count = 2;
        for (int i = 0; i < 1000; ++i) {
          Vec q = rng.unit_vec(3);
          while (1.0 - std::abs(q.dot(frame.north)) < 1e-6) q = rng.unit_vec(3);
          const FiberIntersection fi = fiber_intersections(SpherePoint{q}, frame, cfg.tol_geom);
          const int count = fi.is_circle ? -1 : 2;
          min_count = std::min(min_count, count);
          max_count = std::max(max_count, count);
        }
        return int_check("fiber_intersection_count",
                         "intro: the torus meets each nonpolar fiber exactly twice",
                         (min_count == max_count) ? min_count : -1, 2);
      }));

  out.push_back(guarded(
      "fiber_intersection_residual", "intro: fiber preimages land back in the fiber", 0.0,
      1e-10, [&] {
        Sampler rng(cfg.seed + 2);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
          Vec q = rng.unit_vec(3);
          while (1.0 - std::abs(q.dot(frame.north)) < 1e-6) q = rng.unit_vec(3);
          const FiberIntersection fi = fiber_intersections(SpherePoint{q}, frame, cfg.tol_geom);
          for (const auto& pt : fi.points) {
            worst = std::max(worst, (torus_embed(pt, frame).q - q).norm());
          }
        }
        return real_check("fiber_intersection_residual",
                          "intro: fiber preimages land back in the fiber", worst, 0.0, 1e-10);
      }));

  out.push_back(guarded(
      "fiber_intersection_poles", "intro: over each pole the torus meets the fiber in a circle",
      std::string("circle at t=0 and t=pi"), 0.0, [&] {
        const FiberIntersection north = fiber_intersections(SpherePoint{frame.north}, frame, cfg.tol_geom);
        const FiberIntersection south =
            fiber_intersections(SpherePoint{Vec(-frame.north)}, frame, cfg.tol_geom);
        std::string measured = "none";
        if (north.is_circle && south.is_circle) {
          char buf[64];
          std::snprintf(buf, sizeof(buf), "circle at t=%g and t=pi", north.circle_t);
          measured = (std::abs(south.circle_t - M_PI) < 1e-12) ? buf : "wrong south circle";
        }
        return string_check("fiber_intersection_poles",
                            "intro: over each pole the torus meets the fiber in a circle",
                            measured, "circle at t=0 and t=pi");
      }));

  return out;
}

std::vector<CheckResult> maslov_suite(const SuiteConfig& cfg) {
  cfg.validate();
  const FrameAtNorthPole frame = FrameAtNorthPole::standard(2);
  const DiskClass fiber = build_filling(DiskKind::FiberDisk, frame);
  const DiskClass geo = build_filling(DiskKind::GeodesicDisk, frame);
  std::vector<CheckResult> out;

  out.push_back(guarded("maslov_fiber_disk", "intro: the fiber disk has vanishing Maslov index",
                        static_cast<std::int64_t>(0), 0.0, [&] {
                          return int_check("maslov_fiber_disk",
                                           "intro: the fiber disk has vanishing Maslov index",
                                           disk_maslov_index(fiber, cfg.resolution), 0);
                        }));

  out.push_back(guarded("maslov_geodesic_disk",
                        "intro: the disk of the loop t -> phi_t(v0) has Maslov index 2",
                        static_cast<std::int64_t>(2), 0.0, [&] {
                          return int_check("maslov_geodesic_disk",
                                           "intro: the disk of the loop t -> phi_t(v0) has Maslov index 2",
                                           disk_maslov_index(geo, cfg.resolution), 2);
                        }));

  out.push_back(guarded("area_fiber_disk", "intro: the fiber disk has vanishing symplectic area",
                        0.0, 1e-9, [&] {
                          return real_check("area_fiber_disk",
                                            "intro: the fiber disk has vanishing symplectic area",
                                            symplectic_area(fiber, cfg.resolution), 0.0, 1e-9);
                        }));

  out.push_back(guarded("area_geodesic_disk",
                        "derived: the geodesic-loop disk has symplectic area 2*pi", 2.0 * M_PI,
                        1e-6, [&] {
                          return real_check("area_geodesic_disk",
                                            "derived: the geodesic-loop disk has symplectic area 2*pi",
                                            symplectic_area(geo, cfg.resolution), 2.0 * M_PI, 1e-6);
                        }));

  out.push_back(guarded("area_stokes_vs_quadrature",
                        "construction: boundary and interior integration routes agree", 0.0, 1e-5,
                        [&] {
                          double worst = 0.0;
                          for (const DiskClass* d : {&fiber, &geo}) {
                            worst = std::max(worst,
                                             std::abs(symplectic_area(*d, 512) -
                                                      symplectic_area_direct(*d, 512)));
                          }
                          return real_check("area_stokes_vs_quadrature",
                                            "construction: boundary and interior integration routes agree",
                                            worst, 0.0, 1e-5);
                        }));

  out.push_back(guarded("monotonicity_constant",
                        "intro: monotone torus, area = pi * Maslov index on disk classes", M_PI,
                        1e-6, [&] {
                          const MonotonicityReport rep = monotonicity_check(frame, cfg.resolution);
                          return real_check("monotonicity_constant",
                                            "intro: monotone torus, area = pi * Maslov index on disk classes",
                                            rep.constant, M_PI, 1e-6);
                        }));

  out.push_back(guarded("minimal_maslov_number", "intro: minimal Maslov number 2",
                        static_cast<std::int64_t>(2), 0.0, [&] {
                          const MonotonicityReport rep = monotonicity_check(frame, cfg.resolution);
                          return int_check("minimal_maslov_number", "intro: minimal Maslov number 2",
                                           rep.minimal_maslov, 2);
                        }));

  out.push_back(guarded("maslov_resolution_stability",
                        "construction: winding is stable under resolution doubling",
                        std::string("fiber 0,0,0 geodesic 2,2,2"), 0.0, [&] {
                          char buf[64];
                          std::snprintf(buf, sizeof(buf), "fiber %d,%d,%d geodesic %d,%d,%d",
                                        disk_maslov_index(fiber, 512), disk_maslov_index(fiber, 1024),
                                        disk_maslov_index(fiber, 2048), disk_maslov_index(geo, 512),
                                        disk_maslov_index(geo, 1024), disk_maslov_index(geo, 2048));
                          return string_check("maslov_resolution_stability",
                                              "construction: winding is stable under resolution doubling",
                                              buf, "fiber 0,0,0 geodesic 2,2,2");
                        }));

  out.push_back(guarded("maslov_trivialization_independence",
                        "construction: windings agree across independent trivializations",
                        std::string("fiber 0,0 geodesic 2,2"), 0.0, [&] {
                          const TrivializationOptions alt{0.45, 2.1, 256};
                          char buf[64];
                          std::snprintf(buf, sizeof(buf), "fiber %d,%d geodesic %d,%d",
                                        disk_maslov_index(fiber, cfg.resolution),
                                        disk_maslov_index(fiber, cfg.resolution, alt),
                                        disk_maslov_index(geo, cfg.resolution),
                                        disk_maslov_index(geo, cfg.resolution, alt));
                          return string_check("maslov_trivialization_independence",
                                              "construction: windings agree across independent trivializations",
                                              buf, "fiber 0,0 geodesic 2,2");
                        }));

  out.push_back(guarded("dimension_formula",
                        "proof: moduli dimension equals i(x-) - i(x+) + n",
                        std::string("45/45 cases"), 0.0, [&] {
                          int good = 0, total = 0;
                          for (int im = 0; im <= 2; ++im) {
                            for (int ip = 0; ip <= 2; ++ip) {
                              for (int n = -2; n <= 2; ++n) {
                                ++total;
                                if (expected_dimension(im, ip, n) == im - ip + n) ++good;
                              }
                            }
                          }
                          char buf[32];
                          std::snprintf(buf, sizeof(buf), "%d/%d cases", good, total);
                          return string_check("dimension_formula",
                                              "proof: moduli dimension equals i(x-) - i(x+) + n",
                                              buf, "45/45 cases");
                        }));

  return out;
}

std::vector<CheckResult> morse_suite(const SuiteConfig& cfg) {
  cfg.validate();
  const MorseFunctionSpec spec{cfg.epsilon};
  std::vector<CheckResult> out;

  out.push_back(guarded("morse_critical_points",
                        "proof: f is Morse with four critical points of indices 2,1,1,0",
                        std::string("4 points, indices (2,1,1,0)"), 0.0, [&] {
                          const auto cps = critical_points(spec);
                          std::string measured = std::to_string(cps.size()) + " points, indices (";
                          for (std::size_t i = 0; i < cps.size(); ++i) {
                            if (i) measured += ",";
                            measured += std::to_string(cps[i].index);
                          }
                          measured += ")";
                          return string_check("morse_critical_points",
                                              "proof: f is Morse with four critical points of indices 2,1,1,0",
                                              measured, "4 points, indices (2,1,1,0)");
                        }));

  out.push_back(guarded("morse_flow_line_counts",
                        "proof: adjacent critical points are joined by exactly two trajectories",
                        std::string("all adjacent pairs count 2"), 0.0, [&] {
                          const MorseComplex c = morse_differential(spec);
                          bool all_two = true;
                          for (int k = 1; k <= 2; ++k) {
                            const auto& counts = c.flow_line_counts[static_cast<std::size_t>(k)];
                            for (int i = 0; i < counts.rows(); ++i) {
                              for (int j = 0; j < counts.cols(); ++j) {
                                if (counts(i, j) != 2) all_two = false;
                              }
                            }
                          }
                          return string_check("morse_flow_line_counts",
                                              "proof: adjacent critical points are joined by exactly two trajectories",
                                              all_two ? "all adjacent pairs count 2" : "unexpected counts",
                                              "all adjacent pairs count 2");
                        }));

  out.push_back(guarded("morse_differential_zero", "proof: the mod-2 Morse differential vanishes",
                        std::string("zero in all degrees"), 0.0, [&] {
                          const MorseComplex c = morse_differential(spec);
                          const bool zero = c.differential[1].is_zero() && c.differential[2].is_zero();
                          return string_check("morse_differential_zero",
                                              "proof: the mod-2 Morse differential vanishes",
                                              zero ? "zero in all degrees" : "nonzero entry",
                                              "zero in all degrees");
                        }));

  out.push_back(guarded("morse_homology_ranks",
                        "theorem: Floer ranks equal the Z/2 Betti numbers (1,2,1) of the torus",
                        std::string("(1,2,1)"), 0.0, [&] {
                          const HomologyResult h = homology(morse_differential(spec));
                          return string_check("morse_homology_ranks",
                                              "theorem: Floer ranks equal the Z/2 Betti numbers (1,2,1) of the torus",
                                              ranks_to_string(h.ranks), "(1,2,1)");
                        }));

  out.push_back(guarded("morse_smale_margin",
                        "proof: the flat metric on the torus is Morse-Smale for f",
                        std::string("transverse, margin > 0.1 rad"), 0.0, [&] {
                          const MorseSmaleReport rep = verify_morse_smale(spec, 400);
                          const bool ok = rep.morse_smale && rep.min_margin > 0.1;
                          char buf[64];
                          std::snprintf(buf, sizeof(buf), "margin %.3f rad", rep.min_margin);
                          return string_check("morse_smale_margin",
                                              "proof: the flat metric on the torus is Morse-Smale for f",
                                              ok ? "transverse, margin > 0.1 rad" : buf,
                                              "transverse, margin > 0.1 rad");
                        }));

  out.push_back(guarded("morse_trajectory_cross_check",
                        "construction: RK4 trajectories match the closed-form flow", 0.0, 1e-8,
                        [&] {
                          const TorusPoint start{M_PI / 2.0, 2.0 * M_PI / 3.0};
                          const double duration = 10.0 / spec.epsilon;
                          const double step = duration / 200.0;
                          const auto traj = negative_gradient_trajectory(start, spec, duration, step);
                          double worst = 0.0;
                          for (std::size_t k = 0; k < traj.size(); ++k) {
                            const TorusPoint ref =
                                closed_form_trajectory_point(start, spec, step * static_cast<double>(k));
                            worst = std::max(worst, torus_distance(traj[k], ref));
                          }
                          return real_check("morse_trajectory_cross_check",
                                            "construction: RK4 trajectories match the closed-form flow",
                                            worst, 0.0, 1e-8);
                        }));

  out.push_back(guarded("morse_epsilon_independence",
                        "proof: the Morse data does not depend on the amplitude epsilon",
                        std::string("(1,2,1) for epsilon 0.005, 0.01, 0.05"), 0.0, [&] {
                          std::string measured;
                          bool same = true;
                          for (const double eps : {0.005, 0.01, 0.05}) {
                            const HomologyResult h = homology(morse_differential(MorseFunctionSpec{eps}));
                            if (ranks_to_string(h.ranks) != "(1,2,1)") same = false;
                          }
                          measured = same ? "(1,2,1) for epsilon 0.005, 0.01, 0.05" : "ranks changed";
                          return string_check("morse_epsilon_independence",
                                              "proof: the Morse data does not depend on the amplitude epsilon",
                                              measured, "(1,2,1) for epsilon 0.005, 0.01, 0.05");
                        }));

  return out;
}

std::vector<CheckResult> symmetry_suite(const SuiteConfig& cfg) {
  cfg.validate();
  const FrameAtNorthPole frame = FrameAtNorthPole::standard(2);
  const ReflectionInvolution inv = ReflectionInvolution::great_circle(frame);
  const MorseFunctionSpec spec{cfg.epsilon};
  std::vector<CheckResult> out;

  out.push_back(guarded("involution_identity_square", "proof: I is an involution", 0.0, 1e-14,
                        [&] {
                          Sampler rng(cfg.seed + 10);
                          double worst = inv.involution_residual();
                          for (int i = 0; i < 10000; ++i) {
                            const CotangentPoint x = rng.cotangent_point(2);
                            worst = std::max(worst, ambient_distance(inv.apply(inv.apply(x)), x));
                          }
                          return real_check("involution_identity_square", "proof: I is an involution",
                                            worst, 0.0, 1e-14);
                        }));

  out.push_back(guarded("involution_preserves_forms",
                        "proof: I is symplectic and preserves the canonical one-form", 0.0, 1e-12,
                        [&] {
                          return real_check("involution_preserves_forms",
                                            "proof: I is symplectic and preserves the canonical one-form",
                                            verify_symplectic(inv, 10000, cfg.seed + 11), 0.0, 1e-12);
                        }));

  out.push_back(guarded("torus_involution_action",
                        "proof: I preserves L and acts by (t,v) -> (t,-v)", 0.0, 1e-12, [&] {
                          const TorusInvarianceReport rep =
                              verify_torus_invariance(inv, std::max(cfg.grid, 64), frame);
                          return real_check("torus_involution_action",
                                            "proof: I preserves L and acts by (t,v) -> (t,-v)",
                                            std::max(rep.max_residual, rep.max_fixed_circle_residual),
                                            0.0, 1e-12);
                        }));

  out.push_back(guarded("involution_fixed_locus_components",
                        "proof: L meets Fix(I) in two circles", static_cast<std::int64_t>(2), 0.0,
                        [&] {
                          const FixedLocusReport rep = fixed_locus_intersection(inv, frame);
                          const bool consistent =
                              induced_action_fixed_circles(std::max(cfg.grid, 64)).size() == 2 &&
                              rep.membership_residual <= 1e-12;
                          return int_check("involution_fixed_locus_components",
                                           "proof: L meets Fix(I) in two circles",
                                           consistent ? rep.component_count : -1, 2);
                        }));

  out.push_back(guarded("involution_fixed_locus_momenta",
                        "proof: the two fixed circles are reflections of each other through the zero section",
                        0.0, 1e-12, [&] {
                          const FixedLocusReport rep = fixed_locus_intersection(inv, frame);
                          return real_check("involution_fixed_locus_momenta",
                                            "proof: the two fixed circles are reflections of each other through the zero section",
                                            rep.momentum_opposition_residual, 0.0, 1e-12);
                        }));

  out.push_back(guarded("involution_fixes_critical_points",
                        "proof: the critical points of f are fixed by I", 0.0, 1e-12, [&] {
                          return real_check("involution_fixes_critical_points",
                                            "proof: the critical points of f are fixed by I",
                                            verify_critical_points_fixed(inv, spec, frame), 0.0,
                                            1e-12);
                        }));

  out.push_back(guarded("morse_function_invariant", "proof: f is invariant under I", 0.0, 1e-15,
                        [&] {
                          return real_check("morse_function_invariant", "proof: f is invariant under I",
                                            verify_f_invariance(spec, std::max(cfg.grid, 64)), 0.0,
                                            1e-15);
                        }));

  return out;
}

std::vector<CheckResult> highdim_suite(const SuiteConfig& cfg) {
  cfg.validate();
  const int n = std::max(cfg.n, 3);
  const HighDimConfig hd = HighDimConfig::standard(n);
  std::vector<CheckResult> out;

  out.push_back(guarded("highdim_matches_torus_at_n2",
                        "remark: the construction specializes to the torus for n = 2", 0.0, 0.0,
                        [&] {
                          const HighDimConfig two = HighDimConfig::standard(2);
                          const FrameAtNorthPole frame = FrameAtNorthPole::standard(2);
                          double worst = 0.0;
                          for (int i = 0; i < 17; ++i) {
                            for (int j = 0; j < 17; ++j) {
                              const TorusPoint pt{2.0 * M_PI * i / 17.0, 2.0 * M_PI * j / 17.0};
                              const CotangentPoint a = torus_embed(pt, frame);
                              const CotangentPoint b =
                                  highdim_embed(pt.t, frame.fiber_direction(pt.v), two);
                              worst = std::max(worst, ambient_distance(a, b));
                            }
                          }
                          return real_check("highdim_matches_torus_at_n2",
                                            "remark: the construction specializes to the torus for n = 2",
                                            worst, 0.0, 0.0);
                        }));

  out.push_back(guarded("highdim_lagrangian_residual",
                        "remark: the flowed fiber sphere is Lagrangian in T*S^n", 0.0, 1e-11, [&] {
                          return real_check("highdim_lagrangian_residual",
                                            "remark: the flowed fiber sphere is Lagrangian in T*S^n",
                                            highdim_lagrangian_residual(hd, 32768, cfg.seed + 20),
                                            0.0, 1e-11);
                        }));

  out.push_back(guarded("highdim_hypersphere_diagnosis",
                        "remark: a hypersphere reflection has fixed base dimension n-1 and the symmetry argument fails",
                        std::string("fix dim n-1, approach fails"), 0.0, [&] {
                          const HypersphereDiagnosis diag = hypersphere_reflection_diagnosis(hd);
                          const bool ok = diag.fix_base_dimension == n - 1 && diag.approach_fails &&
                                          diag.involution_residual <= 1e-14;
                          return string_check("highdim_hypersphere_diagnosis",
                                              "remark: a hypersphere reflection has fixed base dimension n-1 and the symmetry argument fails",
                                              ok ? "fix dim n-1, approach fails" : "unexpected diagnosis",
                                              "fix dim n-1, approach fails");
                        }));

  out.push_back(guarded("highdim_geodesic_reflection_fix_dimension",
                        "remark: the reflection about the critical geodesic has fixed locus over a circle",
                        static_cast<std::int64_t>(1), 0.0, [&] {
                          const CriticalGeodesicReflectionReport rep =
                              critical_geodesic_reflection(hd, 512, cfg.seed + 21);
                          return int_check("highdim_geodesic_reflection_fix_dimension",
                                           "remark: the reflection about the critical geodesic has fixed locus over a circle",
                                           rep.fix_base_dimension, 1);
                        }));

  out.push_back(guarded("highdim_geodesic_reflection_invariance",
                        "remark: the reflection preserves L and fixes its critical points", 0.0,
                        1e-12, [&] {
                          const CriticalGeodesicReflectionReport rep =
                              critical_geodesic_reflection(hd, 512, cfg.seed + 21);
                          return real_check("highdim_geodesic_reflection_invariance",
                                            "remark: the reflection preserves L and fixes its critical points",
                                            std::max(rep.l_invariance_residual,
                                                     rep.critical_point_displacement),
                                            0.0, 1e-12);
                        }));

  out.push_back(guarded("highdim_morse_indices",
                        "remark: height-sum critical points have indices 0, 1, n-1, n",
                        std::string("indices {0,1,n-1,n}"), 0.0, [&] {
                          const HighDimMorseData data = highdim_morse_complex(hd, cfg.epsilon);
                          bool ok = true;
                          for (int k = 0; k <= n; ++k) {
                            const std::size_t want =
                                (k == 0 || k == 1 || k == n - 1 || k == n) ? 1 : 0;
                            if (data.complex.generators[static_cast<std::size_t>(k)].size() != want)
                              ok = false;
                          }
                          return string_check("highdim_morse_indices",
                                              "remark: height-sum critical points have indices 0, 1, n-1, n",
                                              ok ? "indices {0,1,n-1,n}" : "unexpected index pattern",
                                              "indices {0,1,n-1,n}");
                        }));

  out.push_back(guarded("highdim_differential_zero",
                        "remark: the mod-2 differential vanishes in all degrees",
                        std::string("zero in all degrees"), 0.0, [&] {
                          const HighDimMorseData data = highdim_morse_complex(hd, cfg.epsilon);
                          bool zero = true;
                          for (int k = 1; k <= n; ++k) {
                            if (!data.complex.differential[static_cast<std::size_t>(k)].is_zero())
                              zero = false;
                          }
                          return string_check("highdim_differential_zero",
                                              "remark: the mod-2 differential vanishes in all degrees",
                                              zero ? "zero in all degrees" : "nonzero entry",
                                              "zero in all degrees");
                        }));

  out.push_back(guarded("highdim_homology_ranks",
                        "remark: homology has one rank in each of the degrees 0, 1, n-1, n",
                        std::string("ranks of S^1 x S^{n-1}"), 0.0, [&] {
                          const HighDimMorseData data = highdim_morse_complex(hd, cfg.epsilon);
                          std::vector<int> want(static_cast<std::size_t>(n) + 1, 0);
                          want[0] = want[1] = 1;
                          want[static_cast<std::size_t>(n) - 1] += 1;
                          want[static_cast<std::size_t>(n)] += 1;
                          const bool ok = data.homology.ranks == want &&
                                          data.homology.euler_characteristic() == 0;
                          return string_check("highdim_homology_ranks",
                                              "remark: homology has one rank in each of the degrees 0, 1, n-1, n",
                                              ok ? "ranks of S^1 x S^{n-1}"
                                                 : ranks_to_string(data.homology.ranks),
                                              "ranks of S^1 x S^{n-1}");
                        }));

  return out;
}

std::vector<CheckResult> all_suites(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  for (const auto& suite : {lagrangian_suite, maslov_suite, morse_suite, symmetry_suite,
                            highdim_suite}) {
    const std::vector<CheckResult> part = suite(cfg);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace lagtor
