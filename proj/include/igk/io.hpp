#pragma once

#include "igk/geometry.hpp"

#include <string>

namespace igk::geom {

enum class FileFormat { ply, obj, xyz };

/// Picks a format from the file extension; throws IoError for unknown ones.
FileFormat format_from_path(const std::string& path);

/// Point cloud readers/writers. Coordinates survive an ascii round trip at
/// full double precision (17 significant digits). xyz files hold one point
/// per line with dim whitespace-separated columns (dim inferred from the
/// first data line); ply/obj are 3D.
PointCloud load_points(const std::string& path, FileFormat format);
void save_points(const PointCloud& cloud, const std::string& path, FileFormat format,
                 bool binary = false);

/// Mesh readers/writers (ply and obj only). Face normals are recomputed
/// from vertex winding on load; zero-area faces are retained and flagged in
/// TriangleMesh::degenerate_faces.
TriangleMesh load_mesh(const std::string& path, FileFormat format);
void save_mesh(const TriangleMesh& mesh, const std::string& path, FileFormat format,
               bool binary = false);

} // namespace igk::geom
