#pragma once

#include "graspkit/config.hpp"
#include "graspkit/gripper.hpp"
#include "graspkit/pointcloud.hpp"

namespace graspkit {

/// Weights of the five fitness factors. The five weights sum to 1 so a
/// non-colliding grasp scores in [0, 1]; colliding grasps are scaled down by
/// collide_scale.
struct FitnessWeights {
  double w_enclose = 0.30;
  double w_clearance = 0.15;
  double w_normal = 0.25;
  double w_width = 0.10;
  double w_center = 0.20;
  double collide_scale = 0.10;
  double sigma_center = 0.05;  // meters

  void validate() const;
  static FitnessWeights from_config(const Config& config);
};

struct FitnessBreakdown {
  double f_enclose = 0.0;
  double f_clearance = 0.0;
  double f_normal = 0.0;
  double f_width = 0.0;
  double f_center = 0.0;
  bool collided = false;
  double score = 0.0;
};

/// Five-factor grasp fitness:
///   f_enclose   fraction of cloud points inside the closing region
///   f_clearance centering of the enclosed points between the inner faces
///   f_normal    mean |normal . closing axis| over enclosed points
///   f_width     tightness reward, 1 - width / max_width
///   f_center    Gaussian falloff of grasp center vs cloud centroid
/// Requires per-point normals; throws MissingNormals otherwise.
FitnessBreakdown evaluate_fitness(const PointCloud& cloud, const GripperSpec& spec,
                                  const GraspPose& pose, const FitnessWeights& weights);

}  // namespace graspkit
