#pragma once

#include <cstdint>
#include <vector>

#include "graspkit/config.hpp"
#include "graspkit/fitness.hpp"
#include "graspkit/gripper.hpp"
#include "graspkit/pointcloud.hpp"
#include "graspkit/rng.hpp"

namespace graspkit {

struct AnnealSchedule {
  double t_initial = 0.3;
  int iterations = 500;
  double sigma_rot_max = 0.5;  // radians; orientation-step std at full temperature
  double sigma_width = 0.01;   // meters
  std::uint64_t seed = 0;

  void validate() const;
  static AnnealSchedule from_config(const Config& config);
};

struct ScoredGrasp {
  GraspPose pose;
  FitnessBreakdown breakdown;
  int center_index = -1;
};

/// Per-run instrumentation, filled when a trace is passed to optimize_grasp.
struct AnnealTrace {
  std::vector<double> temperatures;
  int accepted = 0;
  int rejected = 0;
  int bounds_exhausted = 0;
  int accepted_into_collision = 0;  // non-colliding -> colliding acceptances; must stay 0
};

struct InitialPose {
  GraspPose pose;
  Eigen::Vector3d family_axis;  // initial approach direction; rotation bound reference
  bool top_down = false;
};

/// Random initial grasp anchored on cloud point center_index: with
/// probability 1/2 a top-down pose (approach -z), otherwise a side pose
/// approaching horizontally toward the cloud centroid. Roll about the
/// approach axis is uniform; width starts at max_width.
InitialPose init_pose(const PointCloud& cloud, int center_index, const GripperSpec& spec,
                      Rng& rng);

/// One annealing proposal: axis-angle orientation step with angle
/// ~ |N(0, sigma_rot_max * temperature_fraction)| and Gaussian width step
/// clamped to [0, max_width]. The center never moves. Resamples (up to 64
/// tries) while the new approach axis leaves the 90-degree cone around
/// family_axis; throws BoundsExhausted when all tries violate the bound.
GraspPose propose_pose(const GraspPose& pose, const Eigen::Vector3d& family_axis,
                       double temperature_fraction, const AnnealSchedule& schedule,
                       const GripperSpec& spec, Rng& rng);

/// Metropolis rule with a hard ban on non-colliding -> colliding moves:
/// better scores always pass, worse ones pass with probability
/// exp(-(score_cur - score_new) / temperature), never at temperature 0.
bool metropolis_accept(double score_new, double score_cur, bool collided_new, bool collided_cur,
                       double temperature, Rng& rng);

/// Full annealing run with the linear schedule T_t = t_initial * (1 - t/n).
/// Returns the best-scoring state the chain visited. Deterministic for a
/// given schedule.seed.
ScoredGrasp optimize_grasp(const PointCloud& cloud, int center_index, const GripperSpec& spec,
                           const FitnessWeights& weights, const AnnealSchedule& schedule,
                           AnnealTrace* trace = nullptr);

}  // namespace graspkit
