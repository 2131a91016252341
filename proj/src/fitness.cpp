#include "graspkit/fitness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace graspkit {

void FitnessWeights::validate() const {
  if (w_enclose < 0 || w_clearance < 0 || w_normal < 0 || w_width < 0 || w_center < 0) {
    throw ValidationError("fitness weights must be non-negative");
  }
  const double sum = w_enclose + w_clearance + w_normal + w_width + w_center;
  if (std::abs(sum - 1.0) > 1e-9) {
    throw ValidationError("fitness weights must sum to 1");
  }
  if (collide_scale < 0.0 || collide_scale >= 1.0) {
    throw ValidationError("collide_scale must lie in [0, 1)");
  }
  if (sigma_center <= 0.0) throw ValidationError("sigma_center must be > 0");
}

FitnessWeights FitnessWeights::from_config(const Config& config) {
  FitnessWeights w;
  w.w_enclose = config.get_double("w_enclose", w.w_enclose);
  w.w_clearance = config.get_double("w_clearance", w.w_clearance);
  w.w_normal = config.get_double("w_normal", w.w_normal);
  w.w_width = config.get_double("w_width", w.w_width);
  w.w_center = config.get_double("w_center", w.w_center);
  w.collide_scale = config.get_double("collide_scale", w.collide_scale);
  w.sigma_center = config.get_double("sigma_center", w.sigma_center);
  w.validate();
  return w;
}

FitnessBreakdown evaluate_fitness(const PointCloud& cloud, const GripperSpec& spec,
                                  const GraspPose& pose, const FitnessWeights& weights) {
  if (!cloud.has_normals()) {
    throw MissingNormals("fitness evaluation requires per-point normals");
  }

  const auto between = points_between_fingers(cloud, spec, pose);
  FitnessBreakdown out;
  out.collided = check_collision(cloud, spec, pose);
  out.f_enclose = static_cast<double>(between.size()) / static_cast<double>(cloud.size());
  out.f_width = 1.0 - pose.width / spec.max_width;

  const Eigen::Vector3d closing = pose.closing_axis();
  if (!between.empty() && pose.width > 0.0) {
    const Eigen::Quaterniond inv = pose.rotation.conjugate();
    const double half = pose.width / 2.0;
    double d_left = std::numeric_limits<double>::infinity();
    double d_right = std::numeric_limits<double>::infinity();
    double align = 0.0;
    for (int i : between) {
      const double x = (inv * (cloud.points[i] - pose.center)).x();
      d_left = std::min(d_left, x + half);
      d_right = std::min(d_right, half - x);
      align += std::abs((*cloud.normals)[i].dot(closing));
    }
    out.f_clearance = std::clamp(2.0 * std::min(d_left, d_right) / pose.width, 0.0, 1.0);
    out.f_normal = std::clamp(align / static_cast<double>(between.size()), 0.0, 1.0);
  }

  const double dist2 = (pose.center - cloud.centroid()).squaredNorm();
  out.f_center = std::exp(-dist2 / (2.0 * weights.sigma_center * weights.sigma_center));

  const double weighted = weights.w_enclose * out.f_enclose +
                          weights.w_clearance * out.f_clearance +
                          weights.w_normal * out.f_normal + weights.w_width * out.f_width +
                          weights.w_center * out.f_center;
  out.score = out.collided ? weights.collide_scale * weighted : weighted;
  return out;
}

}  // namespace graspkit
