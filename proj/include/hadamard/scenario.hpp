#pragma once

#include "hadamard/convexity.hpp"
#include "hadamard/manifold.hpp"
#include "hadamard/probes.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Scenario drivers behind the command-line tool. Each run_* writes its primary
// artifact to `out` (or to files under config.output_dir), human-readable
// verdicts to `log`, and returns the process exit status.
namespace hadamard::scenario {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Csv, Json };

struct ScenarioConfig {
  Model model = Model::HalfPlane;
  int dim = 2;                          // euclidean only
  std::optional<Coords> base;           // default (0, 1) on H, seeded on R^n
  int grid = 256;                       // hull segment samples and GC weight grid
  int t_grid = 16;                      // curve parameter grid
  std::optional<double> tol;            // hull convergence tolerance
  int k_max = 8;
  std::uint64_t seed = 1;
  Format format = Format::Csv;
  std::optional<std::filesystem::path> output_dir;
  std::vector<Coords> points;           // hull / curve input
};

/// Throws UsageError on an inconsistent configuration.
void validate(const ScenarioConfig& config);

/// 17 significant digits, the shortest form that round-trips every double.
std::string format_real(double x);

// Example reproduction on the half-plane.

struct ExampleRow {
  std::string name;
  double computed = 0.0;
  double reference = 0.0;
  double tolerance = 0.0;

  double error() const;
  bool pass() const { return error() <= tolerance; }
};

struct ExampleResult {
  std::vector<ExampleRow> rows;
  double x = 0.0;                // v-coordinate of exp_p of the averaged log vectors
  double hull_discrepancy = 0.0;
  PointCloud hull_polyline{Model::HalfPlane};  // C(S) samples ordered from q1 to q2
  PointCloud gc_polyline{Model::HalfPlane};    // GC_p(S) samples, t = 0..1
  bool x_exceeds_sqrt3 = false;
  bool hulls_differ = false;
  bool endpoints_shared = false;

  bool pass() const;
};

ExampleResult compute_example(const ScenarioConfig& config);

// Probe suite.

struct SuiteResult {
  std::vector<probes::DefectReport> reports;
  bool signature_holds = false;
};

/// One report per clause in the order affinity, exp-interp-geodesic,
/// hull-equality, exp-isometry, curvature. On the half-plane the
/// configuration is the two-point example carried to the base point by the
/// normalizing isometry, augmented with seeded random samples; on R^n it is
/// fully seeded.
SuiteResult compute_probe_suite(const ScenarioConfig& config);

/// Expected signature: everything vanishes on R^n; everything is bounded away
/// from zero and the curvature is about -1 on H.
bool signature_holds(Model model, const std::vector<probes::DefectReport>& reports);

/// Tolerance under which a clause counts as satisfied on a sample.
double zero_tolerance(probes::Clause clause);

std::string report_to_json(const probes::DefectReport& report);

int run_example(const ScenarioConfig& config, std::ostream& out, std::ostream& log);
int run_probe_suite(const ScenarioConfig& config, std::ostream& out, std::ostream& log);
int run_hull(const ScenarioConfig& config, std::ostream& out, std::ostream& log);
int run_curve(const ScenarioConfig& config, std::ostream& out, std::ostream& log);

}  // namespace hadamard::scenario
