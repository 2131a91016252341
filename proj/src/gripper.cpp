#include "graspkit/gripper.hpp"

#include <cmath>

namespace graspkit {

namespace {

struct LocalBox {
  Eigen::Vector3d center;
  Eigen::Vector3d half_extents;
};

// Box layout in the grasp frame. Fingertip plane is z = 0; the solid
// geometry occupies z in [-finger_length - base_depth, 0].
LocalBox local_left_finger(const GripperSpec& s, double width) {
  return {{-(width + s.finger_thickness) / 2.0, 0.0, -s.finger_length / 2.0},
          {s.finger_thickness / 2.0, s.finger_height / 2.0, s.finger_length / 2.0}};
}

LocalBox local_right_finger(const GripperSpec& s, double width) {
  return {{(width + s.finger_thickness) / 2.0, 0.0, -s.finger_length / 2.0},
          {s.finger_thickness / 2.0, s.finger_height / 2.0, s.finger_length / 2.0}};
}

LocalBox local_base(const GripperSpec& s, double width) {
  return {{0.0, 0.0, -s.finger_length - s.base_depth / 2.0},
          {width / 2.0 + s.finger_thickness, s.base_height / 2.0, s.base_depth / 2.0}};
}

LocalBox local_closing_region(const GripperSpec& s, double width) {
  return {{0.0, 0.0, -s.finger_length / 2.0},
          {width / 2.0, s.finger_height / 2.0, s.finger_length / 2.0}};
}

OrientedBox to_world(const LocalBox& box, const GraspPose& pose) {
  return {pose.center + pose.rotation * box.center, box.half_extents, pose.rotation};
}

bool in_local_box(const Eigen::Vector3d& p_local, const LocalBox& box, double margin) {
  const Eigen::Vector3d d = p_local - box.center;
  return std::abs(d.x()) <= box.half_extents.x() + margin &&
         std::abs(d.y()) <= box.half_extents.y() + margin &&
         std::abs(d.z()) <= box.half_extents.z() + margin;
}

}  // namespace

void GripperSpec::validate() const {
  if (finger_length <= 0 || finger_thickness <= 0 || finger_height <= 0 || max_width <= 0 ||
      base_depth <= 0 || base_height <= 0) {
    throw ValidationError("gripper extents must be positive");
  }
  if (collision_margin < 0) throw ValidationError("collision_margin must be >= 0");
}

GripperSpec GripperSpec::from_config(const Config& config) {
  GripperSpec spec;
  spec.finger_length = config.get_double("finger_length", spec.finger_length);
  spec.finger_thickness = config.get_double("finger_thickness", spec.finger_thickness);
  spec.finger_height = config.get_double("finger_height", spec.finger_height);
  spec.max_width = config.get_double("max_width", spec.max_width);
  spec.base_depth = config.get_double("base_depth", spec.base_depth);
  spec.base_height = config.get_double("base_height", spec.base_height);
  spec.collision_margin = config.get_double("collision_margin", spec.collision_margin);
  spec.validate();
  return spec;
}

void GraspPose::validate(const GripperSpec& spec) const {
  if (!center.allFinite()) throw ValidationError("grasp center is not finite");
  if (std::abs(rotation.norm() - 1.0) > 1e-6) {
    throw NonUnitQuaternion("grasp rotation is not a unit quaternion");
  }
  if (width < 0.0 || width > spec.max_width) {
    throw ValidationError("grasp width outside [0, max_width]");
  }
}

GripperBoxes gripper_boxes(const GripperSpec& spec, const GraspPose& pose) {
  return {to_world(local_left_finger(spec, pose.width), pose),
          to_world(local_right_finger(spec, pose.width), pose),
          to_world(local_base(spec, pose.width), pose)};
}

OrientedBox closing_region(const GripperSpec& spec, const GraspPose& pose) {
  return to_world(local_closing_region(spec, pose.width), pose);
}

bool point_in_obb(const Eigen::Vector3d& point, const OrientedBox& box, double margin) {
  const Eigen::Vector3d p = box.rotation.conjugate() * (point - box.center);
  return std::abs(p.x()) <= box.half_extents.x() + margin &&
         std::abs(p.y()) <= box.half_extents.y() + margin &&
         std::abs(p.z()) <= box.half_extents.z() + margin;
}

std::vector<int> points_between_fingers(const PointCloud& cloud, const GripperSpec& spec,
                                        const GraspPose& pose) {
  const LocalBox gap = local_closing_region(spec, pose.width);
  const Eigen::Quaterniond inv = pose.rotation.conjugate();
  std::vector<int> between;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const Eigen::Vector3d p = inv * (cloud.points[i] - pose.center);
    if (in_local_box(p, gap, 0.0)) between.push_back(static_cast<int>(i));
  }
  return between;
}

bool check_collision(const PointCloud& cloud, const GripperSpec& spec, const GraspPose& pose) {
  const LocalBox left = local_left_finger(spec, pose.width);
  const LocalBox right = local_right_finger(spec, pose.width);
  const LocalBox base = local_base(spec, pose.width);
  const Eigen::Quaterniond inv = pose.rotation.conjugate();
  const double margin = spec.collision_margin;
  for (const auto& point : cloud.points) {
    const Eigen::Vector3d p = inv * (point - pose.center);
    if (in_local_box(p, left, margin) || in_local_box(p, right, margin) ||
        in_local_box(p, base, margin)) {
      return true;
    }
  }
  return false;
}

}  // namespace graspkit
