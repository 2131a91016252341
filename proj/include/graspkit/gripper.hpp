#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <vector>

#include "graspkit/config.hpp"
#include "graspkit/pointcloud.hpp"

namespace graspkit {

/// Parametric three-box parallel-jaw gripper: two finger boxes and one base
/// box. All extents in meters.
struct GripperSpec {
  double finger_length = 0.05;     // along the approach axis
  double finger_thickness = 0.01;  // along the closing axis
  double finger_height = 0.02;     // third axis
  double max_width = 0.08;         // inner face to inner face
  double base_depth = 0.02;
  double base_height = 0.02;
  double collision_margin = 0.003;

  void validate() const;
  static GripperSpec from_config(const Config& config);
};

/// Grasp frame convention: local +z is the approach axis (base toward
/// fingertips), local +x is the closing axis. The center sits midway between
/// the inner finger faces on the fingertip line, so the boxes extend along
/// local -z behind it.
struct GraspPose {
  Eigen::Vector3d center = Eigen::Vector3d::Zero();
  Eigen::Quaterniond rotation = Eigen::Quaterniond::Identity();
  double width = 0.0;

  Eigen::Vector3d approach_axis() const { return rotation * Eigen::Vector3d::UnitZ(); }
  Eigen::Vector3d closing_axis() const { return rotation * Eigen::Vector3d::UnitX(); }

  void validate(const GripperSpec& spec) const;
};

struct OrientedBox {
  Eigen::Vector3d center = Eigen::Vector3d::Zero();
  Eigen::Vector3d half_extents = Eigen::Vector3d::Ones();
  Eigen::Quaterniond rotation = Eigen::Quaterniond::Identity();
};

struct GripperBoxes {
  OrientedBox left_finger;
  OrientedBox right_finger;
  OrientedBox base;
};

GripperBoxes gripper_boxes(const GripperSpec& spec, const GraspPose& pose);

/// The box spanning the gap between the inner finger faces.
OrientedBox closing_region(const GripperSpec& spec, const GraspPose& pose);

/// True iff the point lies within half_extents + margin on every box axis.
bool point_in_obb(const Eigen::Vector3d& point, const OrientedBox& box, double margin);

/// Indices of cloud points inside the closing region.
std::vector<int> points_between_fingers(const PointCloud& cloud, const GripperSpec& spec,
                                        const GraspPose& pose);

/// True iff any cloud point lies inside a finger box or the base box, each
/// inflated by spec.collision_margin.
bool check_collision(const PointCloud& cloud, const GripperSpec& spec, const GraspPose& pose);

}  // namespace graspkit
