#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace igk {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3& operator+=(const Vec3& o) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm_sq(const Vec3& a) { return dot(a, a); }
inline double norm(const Vec3& a) { return std::sqrt(norm_sq(a)); }

// Ordered set of d-dimensional points in flat row-major storage, with
// optional strictly positive per-point weights.
struct PointCloud {
    int dim = 3;
    std::vector<double> coords;  // size() * dim
    std::vector<double> weights; // empty or size()

    PointCloud() = default;
    explicit PointCloud(int d) : dim(d) {}

    std::size_t size() const { return dim > 0 ? coords.size() / dim : 0; }
    bool has_weights() const { return !weights.empty(); }

    std::span<const double> point(std::size_t i) const {
        return {coords.data() + i * dim, static_cast<std::size_t>(dim)};
    }
    std::span<double> point(std::size_t i) {
        return {coords.data() + i * dim, static_cast<std::size_t>(dim)};
    }
    void push_back(std::span<const double> p) { coords.insert(coords.end(), p.begin(), p.end()); }

    void validate() const;
};

// Triangle mesh with per-face unit normals and edge adjacency. Degenerate
// (zero-area) faces are retained but flagged; their normal is the zero
// vector.
struct TriangleMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> faces;
    std::vector<Vec3> face_normals;
    std::vector<std::vector<int>> face_adjacency;
    std::vector<int> degenerate_faces;

    std::size_t face_count() const { return faces.size(); }
    Vec3 face_centroid(int f) const {
        const auto& t = faces[f];
        return (vertices[t[0]] + vertices[t[1]] + vertices[t[2]]) / 3.0;
    }

    void recompute_face_normals();
    void build_face_adjacency();
    /// Normals + adjacency in one pass; call after editing vertices/faces.
    void finalize() {
        recompute_face_normals();
        build_face_adjacency();
    }
    void validate() const;
};

/// Mean edge length over unique edges.
double mean_edge_length(const TriangleMesh& mesh);

// Balanced kd-tree over a snapshot of a point cloud. Queries are exact and
// return hits sorted by point index, so downstream accumulations are
// deterministic. Read-only queries are safe from multiple threads.
class SpatialIndex {
public:
    explicit SpatialIndex(const PointCloud& cloud);

    int dim() const { return dim_; }
    std::size_t size() const { return count_; }

    /// All points with ||p - center|| <= r as (index, squared distance),
    /// sorted by index.
    void radius_query(std::span<const double> center, double r,
                      std::vector<std::pair<int, double>>& out) const;
    std::vector<std::pair<int, double>> radius_query(std::span<const double> center,
                                                     double r) const;

    /// Distance to the nearest point, optionally skipping one index.
    double nearest_distance(std::span<const double> center, int skip_index = -1) const;

private:
    struct Node {
        double split = 0.0;
        int axis = -1;    // -1 marks a leaf
        int begin = 0, end = 0;
        int left = -1, right = -1;
    };

    int build(int begin, int end, std::vector<double>& lo, std::vector<double>& hi);
    void query_rec(int node, std::span<const double> c, double r2,
                   std::vector<std::pair<int, double>>& out) const;
    void nearest_rec(int node, std::span<const double> c, int skip, double& best2) const;
    double point_dist2(int idx, std::span<const double> c) const;

    int dim_ = 0;
    std::size_t count_ = 0;
    std::vector<double> pts_;   // reordered copy, flat
    std::vector<int> ids_;      // original indices, parallel to pts_
    std::vector<Node> nodes_;
    int root_ = -1;
};

namespace geom {

/// Euclidean length of the axis-aligned bounding box diagonal.
double bbox_diagonal(const PointCloud& cloud);

/// Displaces every point by isotropic Gaussian noise. Each point is
/// independently assigned the "noise" class with probability frac_noise and
/// the "outlier" class otherwise; the class sigma is given in percent of the
/// input's bounding box diagonal. Deterministic for a fixed seed.
PointCloud corrupt_gaussian_mixture(const PointCloud& cloud, double sigma_noise_pct,
                                    double frac_noise, double sigma_outlier_pct,
                                    double frac_outlier, std::uint64_t seed);

/// Moves each vertex along a uniformly random direction by a distance
/// uniform in [0, amplitude_factor * mean_edge_length]. Normals and
/// adjacency are rebuilt.
TriangleMesh corrupt_vertices_uniform(const TriangleMesh& mesh, double amplitude_factor,
                                      std::uint64_t seed);

/// Faces reachable from `face` by breadth-first traversal of edge adjacency
/// where every visited face centroid lies within Euclidean distance r of the
/// seed centroid. Returns sorted face indices including the seed.
std::vector<int> geodesic_face_neighborhood(const TriangleMesh& mesh, int face, double r);

} // namespace geom

} // namespace igk
