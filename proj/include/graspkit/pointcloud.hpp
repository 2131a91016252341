#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <utility>
#include <vector>

#include "graspkit/error.hpp"

namespace graspkit {

/// Ordered set of 3-D points with optional per-point unit normals.
/// Coordinates are meters in the sensor frame, or dimensionless in [-1,1]
/// once a cloud has been normalized.
struct PointCloud {
  std::vector<Eigen::Vector3d> points;
  std::optional<std::vector<Eigen::Vector3d>> normals;

  std::size_t size() const { return points.size(); }
  bool has_normals() const { return normals.has_value(); }

  Eigen::Vector3d centroid() const;

  /// Throws ValidationError if any invariant is broken (finite coords,
  /// normals same length and unit within 1e-6).
  void validate() const;
};

/// Similarity transform recorded by normalize(); maps normalized
/// coordinates back to the original frame via p * scale + offset.
struct NormalizationTransform {
  Eigen::Vector3d offset = Eigen::Vector3d::Zero();
  double scale = 1.0;

  Eigen::Vector3d to_normalized(const Eigen::Vector3d& p) const { return (p - offset) / scale; }
  Eigen::Vector3d to_world(const Eigen::Vector3d& p) const { return p * scale + offset; }
};

/// Centers x and y on the centroid, then scales all three axes uniformly so
/// every coordinate lands in [-1, 1]. z keeps its table-relative offset.
/// Normals are carried unchanged. Throws DegenerateCloud when all points
/// coincide.
std::pair<PointCloud, NormalizationTransform> normalize(const PointCloud& cloud);

/// PCA normal per point over its k nearest neighbors, oriented to face the
/// viewpoint. Throws TooFewPoints when the cloud has no more than k points.
PointCloud estimate_normals(const PointCloud& cloud, int k, const Eigen::Vector3d& viewpoint);

/// Row i holds the indices of the k nearest points to point i (self
/// excluded), nearest first; exact ties resolved by smaller index.
std::vector<std::vector<int>> knn_graph(const PointCloud& cloud, int k);

/// m independent uniform random subsets of n points, each in fresh random
/// order. Deterministic given seed. Normals follow their points.
std::vector<PointCloud> sample_permutations(const PointCloud& cloud, int n, int m,
                                            std::uint64_t seed);

/// Perturbs every coordinate by clipped Gaussian noise: sigma = bound / 2,
/// hard clip at +-bound. Normals are invalidated (dropped).
PointCloud augment_noise(const PointCloud& cloud, double bound, std::uint64_t seed);

/// ASCII XYZ I/O: one `x y z` triple per line, `#` starts a comment.
PointCloud load_xyz(const std::filesystem::path& path);
void save_xyz(const PointCloud& cloud, const std::filesystem::path& path);

}  // namespace graspkit
