// OBJ and PLY writers. Both formats use 0/1-based index conventions as
// required by their consumers: OBJ faces are 1-based, PLY faces 0-based.

#include "mesh/export.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace wpmin::mesh {

namespace {

// Fixed float formatting so repeated runs produce identical bytes.
std::string fmt(double v) {
    // Normalize the sign of zero; -0 would leak platform quirks into files.
    if (v == 0.0) v = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return std::string(buf);
}

} // namespace

void write_obj(const SurfaceMesh& mesh, std::ostream& os) {
    os << "# " << mesh.family << " minimal surface, resolution "
       << mesh.resolution << "\n";
    for (const auto& v : mesh.vertices) {
        os << "v " << fmt(v.x[0]) << ' ' << fmt(v.x[1]) << ' ' << fmt(v.x[2]) << '\n';
    }
    for (const auto& f : mesh.faces) {
        os << "f " << (f[0] + 1) << ' ' << (f[1] + 1) << ' ' << (f[2] + 1) << '\n';
    }
}

void write_ply(const SurfaceMesh& mesh, std::ostream& os) {
    os << "ply\n"
       << "format ascii 1.0\n"
       << "comment " << mesh.family << " minimal surface, resolution "
       << mesh.resolution << "\n"
       << "element vertex " << mesh.vertices.size() << "\n"
       << "property float x\n"
       << "property float y\n"
       << "property float z\n"
       << "property float curvature\n"
       << "element face " << mesh.faces.size() << "\n"
       << "property list uchar int vertex_indices\n"
       << "end_header\n";
    for (const auto& v : mesh.vertices) {
        os << fmt(v.x[0]) << ' ' << fmt(v.x[1]) << ' ' << fmt(v.x[2]) << ' '
           << fmt(v.curvature) << '\n';
    }
    for (const auto& f : mesh.faces) {
        os << "3 " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
    }
}

std::string mesh_filename(const SurfaceMesh& mesh, const std::string& format) {
    if (format != "obj" && format != "ply")
        throw std::invalid_argument("mesh format must be obj or ply, got " + format);
    return mesh.family + "-r" + std::to_string(mesh.resolution) + "." + format;
}

std::string write_mesh_file(const SurfaceMesh& mesh, const std::string& dir,
                            const std::string& format) {
    namespace fs = std::filesystem;
    fs::path out = fs::path(dir) / mesh_filename(mesh, format);
    fs::create_directories(out.parent_path().empty() ? fs::path(".") : out.parent_path());
    std::ofstream os(out, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + out.string() + " for writing");
    if (format == "obj")
        write_obj(mesh, os);
    else
        write_ply(mesh, os);
    os.flush();
    if (!os) throw std::runtime_error("write failed for " + out.string());
    return out.string();
}

} // namespace wpmin::mesh
