#include "graspkit/pointcloud.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "graspkit/rng.hpp"

namespace graspkit {

namespace {

/// Static 3-d kd-tree. Queries are contractually identical to brute force:
/// candidates are ordered by (squared distance, index) and subtrees are only
/// pruned when they provably cannot contain a better candidate.
class KdTree {
 public:
  explicit KdTree(const std::vector<Eigen::Vector3d>& pts) : pts_(&pts) {
    std::vector<int> idx(pts.size());
    std::iota(idx.begin(), idx.end(), 0);
    nodes_.reserve(pts.size());
    root_ = build(idx, 0, static_cast<int>(idx.size()), 0);
  }

  /// k nearest to pts[query], excluding the query point itself, nearest
  /// first.
  std::vector<int> knn(const Eigen::Vector3d& query, int k, int exclude) const {
    std::vector<Cand> heap;
    heap.reserve(static_cast<std::size_t>(k) + 1);
    search(root_, 0, query, k, exclude, heap);
    std::sort(heap.begin(), heap.end(),
              [](const Cand& a, const Cand& b) { return closer(a, b); });
    std::vector<int> out;
    out.reserve(heap.size());
    for (const Cand& c : heap) out.push_back(c.idx);
    return out;
  }

 private:
  struct Node {
    int point;
    int left = -1;
    int right = -1;
  };
  struct Cand {
    double d2;
    int idx;
  };

  static bool closer(const Cand& a, const Cand& b) {
    return a.d2 < b.d2 || (a.d2 == b.d2 && a.idx < b.idx);
  }

  int build(std::vector<int>& idx, int lo, int hi, int depth) {
    if (lo >= hi) return -1;
    const int axis = depth % 3;
    const int mid = (lo + hi) / 2;
    std::nth_element(idx.begin() + lo, idx.begin() + mid, idx.begin() + hi,
                     [&](int a, int b) {
                       const double ca = (*pts_)[a][axis];
                       const double cb = (*pts_)[b][axis];
                       return ca < cb || (ca == cb && a < b);
                     });
    const int node = static_cast<int>(nodes_.size());
    nodes_.push_back({idx[mid]});
    const int left = build(idx, lo, mid, depth + 1);
    const int right = build(idx, mid + 1, hi, depth + 1);
    nodes_[node].left = left;
    nodes_[node].right = right;
    return node;
  }

  void search(int node, int depth, const Eigen::Vector3d& query, int k, int exclude,
              std::vector<Cand>& heap) const {
    if (node < 0) return;
    const Node& n = nodes_[node];
    if (n.point != exclude) {
      const Cand cand{((*pts_)[n.point] - query).squaredNorm(), n.point};
      if (static_cast<int>(heap.size()) < k) {
        heap.push_back(cand);
        std::push_heap(heap.begin(), heap.end(), closer);
      } else if (closer(cand, heap.front())) {
        std::pop_heap(heap.begin(), heap.end(), closer);
        heap.back() = cand;
        std::push_heap(heap.begin(), heap.end(), closer);
      }
    }
    const int axis = depth % 3;
    const double diff = query[axis] - (*pts_)[n.point][axis];
    const int near = diff < 0 ? n.left : n.right;
    const int far = diff < 0 ? n.right : n.left;
    search(near, depth + 1, query, k, exclude, heap);
    // Visit the far side on exact plane ties as well; index tie-breaks can
    // still swap candidates at equal distance.
    if (static_cast<int>(heap.size()) < k || diff * diff <= heap.front().d2) {
      search(far, depth + 1, query, k, exclude, heap);
    }
  }

  const std::vector<Eigen::Vector3d>* pts_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

}  // namespace

Eigen::Vector3d PointCloud::centroid() const {
  Eigen::Vector3d sum = Eigen::Vector3d::Zero();
  for (const auto& p : points) sum += p;
  return points.empty() ? sum : Eigen::Vector3d(sum / static_cast<double>(points.size()));
}

void PointCloud::validate() const {
  if (points.empty()) throw ValidationError("point cloud is empty");
  for (const auto& p : points) {
    if (!p.allFinite()) throw ValidationError("point cloud contains non-finite coordinates");
  }
  if (normals) {
    if (normals->size() != points.size()) {
      throw LengthMismatch("normals length differs from points length");
    }
    for (const auto& n : *normals) {
      if (std::abs(n.norm() - 1.0) > 1e-6) {
        throw ValidationError("normal is not unit length");
      }
    }
  }
}

std::pair<PointCloud, NormalizationTransform> normalize(const PointCloud& cloud) {
  cloud.validate();
  if (cloud.size() < 2) throw DegenerateCloud("normalize needs at least 2 points");

  const Eigen::Vector3d c = cloud.centroid();
  const Eigen::Vector3d offset(c.x(), c.y(), 0.0);

  double scale = 0.0;
  for (const auto& p : cloud.points) {
    const Eigen::Vector3d q = p - offset;
    scale = std::max({scale, std::abs(q.x()), std::abs(q.y()), std::abs(q.z())});
  }
  if (scale < 1e-12) throw DegenerateCloud("all points coincide; scale undefined");

  PointCloud out;
  out.points.reserve(cloud.size());
  for (const auto& p : cloud.points) out.points.push_back((p - offset) / scale);
  out.normals = cloud.normals;
  return {std::move(out), NormalizationTransform{offset, scale}};
}

PointCloud estimate_normals(const PointCloud& cloud, int k, const Eigen::Vector3d& viewpoint) {
  if (k < 3) throw ValidationError("estimate_normals requires k >= 3");
  if (static_cast<int>(cloud.size()) <= k) {
    throw TooFewPoints("estimate_normals requires more than k points");
  }

  const KdTree tree(cloud.points);
  PointCloud out = cloud;
  std::vector<Eigen::Vector3d> normals(cloud.size());

  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const auto nbrs = tree.knn(cloud.points[i], k, static_cast<int>(i));

    Eigen::Vector3d mean = Eigen::Vector3d::Zero();
    for (int j : nbrs) mean += cloud.points[j];
    mean /= static_cast<double>(nbrs.size());

    Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
    for (int j : nbrs) {
      const Eigen::Vector3d d = cloud.points[j] - mean;
      cov += d * d.transpose();
    }

    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(cov);
    Eigen::Vector3d n = eig.eigenvectors().col(0);  // smallest eigenvalue
    if (n.dot(viewpoint - cloud.points[i]) < 0.0) n = -n;
    normals[i] = n.normalized();
  }

  out.normals = std::move(normals);
  return out;
}

std::vector<std::vector<int>> knn_graph(const PointCloud& cloud, int k) {
  if (k < 1) throw ValidationError("knn_graph requires k >= 1");
  if (static_cast<int>(cloud.size()) <= k) {
    throw TooFewPoints("knn_graph requires more than k points");
  }
  const KdTree tree(cloud.points);
  std::vector<std::vector<int>> graph(cloud.size());
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    graph[i] = tree.knn(cloud.points[i], k, static_cast<int>(i));
  }
  return graph;
}

std::vector<PointCloud> sample_permutations(const PointCloud& cloud, int n, int m,
                                            std::uint64_t seed) {
  if (n < 1) throw ValidationError("sample_permutations requires n >= 1");
  if (m < 0) throw ValidationError("sample_permutations requires m >= 0");
  if (static_cast<int>(cloud.size()) < n) {
    throw TooFewPoints("cloud smaller than requested subset size");
  }

  Rng rng(seed);
  std::vector<PointCloud> subsets;
  subsets.reserve(static_cast<std::size_t>(m));
  std::vector<int> idx(cloud.size());

  for (int s = 0; s < m; ++s) {
    std::iota(idx.begin(), idx.end(), 0);
    // Partial Fisher-Yates: the first n entries are a uniform subset in
    // uniform random order.
    for (int i = 0; i < n; ++i) {
      const auto j = i + static_cast<int>(rng.uniform_index(idx.size() - i));
      std::swap(idx[i], idx[j]);
    }
    PointCloud sub;
    sub.points.reserve(static_cast<std::size_t>(n));
    if (cloud.normals) sub.normals.emplace();
    for (int i = 0; i < n; ++i) {
      sub.points.push_back(cloud.points[idx[i]]);
      if (cloud.normals) sub.normals->push_back((*cloud.normals)[idx[i]]);
    }
    subsets.push_back(std::move(sub));
  }
  return subsets;
}

PointCloud augment_noise(const PointCloud& cloud, double bound, std::uint64_t seed) {
  if (bound <= 0.0) throw ValidationError("augment_noise requires bound > 0");
  Rng rng(seed);
  const double sigma = bound / 2.0;
  PointCloud out;
  out.points.reserve(cloud.size());
  for (const auto& p : cloud.points) {
    Eigen::Vector3d q;
    for (int a = 0; a < 3; ++a) {
      q[a] = p[a] + std::clamp(rng.normal(0.0, sigma), -bound, bound);
    }
    out.points.push_back(q);
  }
  return out;
}

PointCloud load_xyz(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoFailure("cannot open point cloud file: " + path.string());
  PointCloud cloud;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double x, y, z;
    if (!(ls >> x)) continue;  // blank line
    if (!(ls >> y >> z)) throw MalformedRecord("expected `x y z` triple", line_no);
    std::string extra;
    if (ls >> extra) throw MalformedRecord("trailing tokens after coordinates", line_no);
    cloud.points.emplace_back(x, y, z);
  }
  if (cloud.points.empty()) throw MalformedRecord("no points in file " + path.string(), 0);
  return cloud;
}

void save_xyz(const PointCloud& cloud, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoFailure("cannot open output file: " + path.string());
  out.precision(17);
  for (const auto& p : cloud.points) {
    out << p.x() << ' ' << p.y() << ' ' << p.z() << '\n';
  }
  if (!out) throw IoFailure("write failed: " + path.string());
}

}  // namespace graspkit
