#include "igk/geometry.hpp"

#include "igk/errors.hpp"
#include "igk/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>

namespace igk {

void PointCloud::validate() const {
    if (dim < 1) throw std::invalid_argument("PointCloud: dim must be >= 1");
    if (coords.size() % dim != 0) throw std::invalid_argument("PointCloud: ragged coordinate array");
    for (double v : coords)
        if (!std::isfinite(v)) throw std::invalid_argument("PointCloud: non-finite coordinate");
    if (!weights.empty()) {
        if (weights.size() != size())
            throw std::invalid_argument("PointCloud: weights length mismatch");
        for (double w : weights)
            if (!(w > 0.0) || !std::isfinite(w))
                throw std::invalid_argument("PointCloud: weights must be positive and finite");
    }
}

void TriangleMesh::recompute_face_normals() {
    face_normals.assign(faces.size(), Vec3{});
    degenerate_faces.clear();
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const auto& t = faces[f];
        const Vec3 n = cross(vertices[t[1]] - vertices[t[0]], vertices[t[2]] - vertices[t[0]]);
        const double len = norm(n);
        if (len <= 1e-300 * 2.0 || !(len > 0.0)) {
            degenerate_faces.push_back(static_cast<int>(f));
            face_normals[f] = Vec3{};
        } else {
            face_normals[f] = n / len;
        }
    }
}

void TriangleMesh::build_face_adjacency() {
    face_adjacency.assign(faces.size(), {});
    std::map<std::pair<int, int>, std::vector<int>> edge_faces;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const auto& t = faces[f];
        for (int e = 0; e < 3; ++e) {
            int a = t[e], b = t[(e + 1) % 3];
            if (a > b) std::swap(a, b);
            edge_faces[{a, b}].push_back(static_cast<int>(f));
        }
    }
    for (const auto& [edge, fs] : edge_faces) {
        for (std::size_t i = 0; i < fs.size(); ++i)
            for (std::size_t j = i + 1; j < fs.size(); ++j) {
                face_adjacency[fs[i]].push_back(fs[j]);
                face_adjacency[fs[j]].push_back(fs[i]);
            }
    }
    for (auto& adj : face_adjacency) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
}

void TriangleMesh::validate() const {
    const int n = static_cast<int>(vertices.size());
    for (const auto& t : faces)
        for (int idx : t)
            if (idx < 0 || idx >= n) throw std::invalid_argument("TriangleMesh: face index out of range");
    if (face_normals.size() != faces.size())
        throw std::invalid_argument("TriangleMesh: normals not computed");
}

double mean_edge_length(const TriangleMesh& mesh) {
    std::map<std::pair<int, int>, double> edges;
    for (const auto& t : mesh.faces) {
        for (int e = 0; e < 3; ++e) {
            int a = t[e], b = t[(e + 1) % 3];
            if (a > b) std::swap(a, b);
            edges[{a, b}] = norm(mesh.vertices[a] - mesh.vertices[b]);
        }
    }
    if (edges.empty()) throw std::invalid_argument("mean_edge_length: mesh has no edges");
    double sum = 0.0;
    for (const auto& [e, len] : edges) sum += len;
    return sum / static_cast<double>(edges.size());
}

// --- SpatialIndex ---

SpatialIndex::SpatialIndex(const PointCloud& cloud) : dim_(cloud.dim), count_(cloud.size()) {
    pts_ = cloud.coords;
    ids_.resize(count_);
    for (std::size_t i = 0; i < count_; ++i) ids_[i] = static_cast<int>(i);
    if (count_ == 0) return;
    std::vector<double> lo(dim_), hi(dim_);
    root_ = build(0, static_cast<int>(count_), lo, hi);
}

double SpatialIndex::point_dist2(int idx, std::span<const double> c) const {
    double s = 0.0;
    const double* p = pts_.data() + static_cast<std::size_t>(idx) * dim_;
    for (int k = 0; k < dim_; ++k) {
        const double d = p[k] - c[k];
        s += d * d;
    }
    return s;
}

int SpatialIndex::build(int begin, int end, std::vector<double>& lo, std::vector<double>& hi) {
    constexpr int kLeafSize = 16;
    Node node;
    node.begin = begin;
    node.end = end;
    if (end - begin <= kLeafSize) {
        nodes_.push_back(node);
        return static_cast<int>(nodes_.size()) - 1;
    }
    // Split on the axis of largest extent at the median.
    for (int k = 0; k < dim_; ++k) {
        lo[k] = std::numeric_limits<double>::infinity();
        hi[k] = -std::numeric_limits<double>::infinity();
    }
    for (int i = begin; i < end; ++i) {
        const double* p = pts_.data() + static_cast<std::size_t>(i) * dim_;
        for (int k = 0; k < dim_; ++k) {
            lo[k] = std::min(lo[k], p[k]);
            hi[k] = std::max(hi[k], p[k]);
        }
    }
    int axis = 0;
    for (int k = 1; k < dim_; ++k)
        if (hi[k] - lo[k] > hi[axis] - lo[axis]) axis = k;
    if (hi[axis] - lo[axis] <= 0.0) { // all points coincide
        nodes_.push_back(node);
        return static_cast<int>(nodes_.size()) - 1;
    }

    const int mid = begin + (end - begin) / 2;
    // Sort index/point pairs by the chosen axis around the median.
    std::vector<int> order(end - begin);
    for (int i = 0; i < end - begin; ++i) order[i] = i;
    std::nth_element(order.begin(), order.begin() + (mid - begin), order.end(),
                     [&](int a, int b) {
                         return pts_[static_cast<std::size_t>(begin + a) * dim_ + axis] <
                                pts_[static_cast<std::size_t>(begin + b) * dim_ + axis];
                     });
    std::vector<double> tmp_pts(static_cast<std::size_t>(end - begin) * dim_);
    std::vector<int> tmp_ids(end - begin);
    for (int i = 0; i < end - begin; ++i) {
        const int src = begin + order[i];
        tmp_ids[i] = ids_[src];
        for (int k = 0; k < dim_; ++k)
            tmp_pts[static_cast<std::size_t>(i) * dim_ + k] =
                pts_[static_cast<std::size_t>(src) * dim_ + k];
    }
    std::copy(tmp_pts.begin(), tmp_pts.end(), pts_.begin() + static_cast<std::size_t>(begin) * dim_);
    std::copy(tmp_ids.begin(), tmp_ids.end(), ids_.begin() + begin);

    node.axis = axis;
    node.split = pts_[static_cast<std::size_t>(mid) * dim_ + axis];
    const int self = static_cast<int>(nodes_.size());
    nodes_.push_back(node);
    const int left = build(begin, mid, lo, hi);
    const int right = build(mid, end, lo, hi);
    nodes_[self].left = left;
    nodes_[self].right = right;
    return self;
}

void SpatialIndex::query_rec(int node_id, std::span<const double> c, double r2,
                             std::vector<std::pair<int, double>>& out) const {
    const Node& node = nodes_[node_id];
    if (node.axis < 0) {
        for (int i = node.begin; i < node.end; ++i) {
            const double d2 = point_dist2(i, c);
            if (d2 <= r2) out.emplace_back(ids_[i], d2);
        }
        return;
    }
    const double delta = c[node.axis] - node.split;
    if (delta <= 0.0) {
        query_rec(node.left, c, r2, out);
        if (delta * delta <= r2) query_rec(node.right, c, r2, out);
    } else {
        query_rec(node.right, c, r2, out);
        if (delta * delta <= r2) query_rec(node.left, c, r2, out);
    }
}

void SpatialIndex::radius_query(std::span<const double> center, double r,
                                std::vector<std::pair<int, double>>& out) const {
    if (!(r > 0.0)) throw std::invalid_argument("radius_query: requires r > 0");
    if (static_cast<int>(center.size()) != dim_)
        throw std::invalid_argument("radius_query: dimension mismatch");
    out.clear();
    if (root_ < 0) return;
    query_rec(root_, center, r * r, out);
    std::sort(out.begin(), out.end());
}

std::vector<std::pair<int, double>> SpatialIndex::radius_query(std::span<const double> center,
                                                               double r) const {
    std::vector<std::pair<int, double>> out;
    radius_query(center, r, out);
    return out;
}

void SpatialIndex::nearest_rec(int node_id, std::span<const double> c, int skip,
                               double& best2) const {
    const Node& node = nodes_[node_id];
    if (node.axis < 0) {
        for (int i = node.begin; i < node.end; ++i) {
            if (ids_[i] == skip) continue;
            best2 = std::min(best2, point_dist2(i, c));
        }
        return;
    }
    const double delta = c[node.axis] - node.split;
    const int near = delta <= 0.0 ? node.left : node.right;
    const int far = delta <= 0.0 ? node.right : node.left;
    nearest_rec(near, c, skip, best2);
    if (delta * delta < best2) nearest_rec(far, c, skip, best2);
}

double SpatialIndex::nearest_distance(std::span<const double> center, int skip_index) const {
    if (root_ < 0 || count_ == 0 || (count_ == 1 && skip_index == 0))
        throw std::invalid_argument("nearest_distance: no candidate points");
    double best2 = std::numeric_limits<double>::infinity();
    nearest_rec(root_, center, skip_index, best2);
    return std::sqrt(best2);
}

namespace geom {

double bbox_diagonal(const PointCloud& cloud) {
    if (cloud.size() == 0) throw std::invalid_argument("bbox_diagonal: empty cloud");
    const int d = cloud.dim;
    std::vector<double> lo(d, std::numeric_limits<double>::infinity());
    std::vector<double> hi(d, -std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const auto p = cloud.point(i);
        for (int k = 0; k < d; ++k) {
            lo[k] = std::min(lo[k], p[k]);
            hi[k] = std::max(hi[k], p[k]);
        }
    }
    double s = 0.0;
    for (int k = 0; k < d; ++k) s += (hi[k] - lo[k]) * (hi[k] - lo[k]);
    return std::sqrt(s);
}

PointCloud corrupt_gaussian_mixture(const PointCloud& cloud, double sigma_noise_pct,
                                    double frac_noise, double sigma_outlier_pct,
                                    double frac_outlier, std::uint64_t seed) {
    if (frac_noise < 0.0 || frac_outlier < 0.0 || std::fabs(frac_noise + frac_outlier - 1.0) > 1e-9)
        throw std::invalid_argument("corrupt_gaussian_mixture: fractions must be in [0,1] and sum to 1");
    const double diag = bbox_diagonal(cloud);
    const double sigma_noise = sigma_noise_pct / 100.0 * diag;
    const double sigma_outlier = sigma_outlier_pct / 100.0 * diag;

    PointCloud out = cloud;
    Rng rng(seed);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double sigma = rng.uniform01() < frac_noise ? sigma_noise : sigma_outlier;
        auto p = out.point(i);
        for (int k = 0; k < out.dim; ++k) p[k] += sigma * rng.normal();
    }
    return out;
}

TriangleMesh corrupt_vertices_uniform(const TriangleMesh& mesh, double amplitude_factor,
                                      std::uint64_t seed) {
    if (amplitude_factor < 0.0)
        throw std::invalid_argument("corrupt_vertices_uniform: amplitude_factor must be >= 0");
    TriangleMesh out = mesh;
    const double amp = amplitude_factor * mean_edge_length(mesh);
    Rng rng(seed);
    for (auto& v : out.vertices) {
        const auto dir = rng.unit_vector3();
        const double dist = rng.uniform01() * amp;
        v.x += dist * dir[0];
        v.y += dist * dir[1];
        v.z += dist * dir[2];
    }
    out.finalize();
    return out;
}

std::vector<int> geodesic_face_neighborhood(const TriangleMesh& mesh, int face, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("geodesic_face_neighborhood: requires r > 0");
    if (face < 0 || face >= static_cast<int>(mesh.face_count()))
        throw std::invalid_argument("geodesic_face_neighborhood: face index out of range");
    const Vec3 c0 = mesh.face_centroid(face);
    const double r2 = r * r;
    std::vector<char> visited(mesh.face_count(), 0);
    std::vector<int> result;
    std::queue<int> queue;
    visited[face] = 1;
    queue.push(face);
    while (!queue.empty()) {
        const int f = queue.front();
        queue.pop();
        result.push_back(f);
        for (int g : mesh.face_adjacency[f]) {
            if (visited[g]) continue;
            if (norm_sq(mesh.face_centroid(g) - c0) <= r2) {
                visited[g] = 1;
                queue.push(g);
            }
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

} // namespace geom

} // namespace igk
