#pragma once

// Experiment configuration: parsed from YAML, validated before any compute,
// and echoed back with every default filled in.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hessgame/datum.hpp"
#include "hessgame/domain.hpp"
#include "hessgame/dpp.hpp"
#include "hessgame/errors.hpp"
#include "hessgame/operator_spec.hpp"

namespace hessgame::cli {

/// Schema violation: carries the offending field path and the 1-based line.
class ConfigIssue : public ConfigError {
 public:
  ConfigIssue(std::string field, int line, const std::string& message);
  const std::string& field() const { return field_; }
  int line() const { return line_; }

 private:
  std::string field_;
  int line_;
};

struct DomainConfig {
  std::string type = "ball";  // ball | half_ball | union_of_balls | ellipsoid | polytope | box
  Vec center;
  double radius = 1.0;
  std::size_t dim = 0;
  std::size_t cut_axis = 2;
  std::vector<BallSpec> balls;
  Vec semi_axes;
  std::vector<HalfSpace> faces;
  Vec lo;
  Vec hi;

  std::size_t dimension() const;
  ImplicitDomain build() const;
};

struct DatumConfig {
  std::string type = "polynomial";  // polynomial | peak | constant | affine
  std::vector<Monomial> terms;
  Vec center;
  double radius = 1.0;
  double height = 1.0;
  double value = 0.0;
  Vec slope;
  double intercept = 0.0;
  bool negate = false;

  BoundaryDatum build() const;
};

struct OperatorConfig {
  std::vector<OperatorTerm> terms;  // resolved list

  OperatorSpec build(std::size_t dim) const;
};

struct SolverConfig {
  double eps = 0.05;
  double h = 0.025;
  double tol = 1e-8;
  std::optional<std::size_t> max_iters;
  SweepMode sweep_mode = SweepMode::policy;
  std::optional<std::size_t> frames;
  std::optional<std::size_t> directions;
};

struct GameConfig {
  Vec x0;
  std::size_t games = 10000;
  std::size_t step_cap = 1000000;
  double eta = 0.0;
  std::string transcript;  // optional path for the first game's transcript
};

struct CheckConfig {
  std::size_t j = 1;
  Vec point;       // boundary point, or empty to use `direction`
  Vec direction;   // ray from the witness to the boundary
  double r = 0.5;
  std::vector<double> deltas;
  std::vector<std::string> conditions{"G", "F", "H"};
  std::size_t points = 1000;
  std::size_t subspaces = 100;
  std::size_t directions = 100;
};

struct EnvelopeConfig {
  std::size_t cloud_points = 512;
  std::string kind = "convex";  // convex | concave
  std::vector<Vec> queries;
  std::size_t membership_slices = 0;  // > 0: also solve and run the slice membership check
  std::size_t j = 1;
};

struct MvpConfig {
  std::string function = "all";
  std::vector<std::size_t> js;  // empty: every valid j
  std::vector<double> schedule{0.1, 0.05, 0.025, 0.0125};
  std::string orientation = "min_max";
};

struct OutputConfig {
  std::string dir = ".";
  std::string field_csv = "field.csv";
  std::string summary_json = "summary.json";
  std::string config_echo = "config.resolved.yaml";
  std::string table_csv = "table.csv";
};

struct ExperimentConfig {
  std::string command;  // solve | simulate | check-domain | envelope | mvp-check
  std::uint64_t seed = 1;
  DomainConfig domain;
  DatumConfig datum;
  OperatorConfig op;
  SolverConfig solver;
  GameConfig game;
  CheckConfig check;
  EnvelopeConfig envelope;
  MvpConfig mvp;
  OutputConfig output;

  SolveOptions solve_options(std::size_t dim) const;
};

/// Parses and validates. `command` overrides / must match the file's command key.
ExperimentConfig parse_config_text(const std::string& text, const std::string& command = "");
ExperimentConfig load_config(const std::string& path, const std::string& command = "");

/// YAML with every default spelled out; parsing it yields the same config.
std::string to_yaml(const ExperimentConfig& config);

}  // namespace hessgame::cli
