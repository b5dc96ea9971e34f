// Mesh serialization: Wavefront OBJ and ascii PLY.
//
// Output must be byte-stable across runs, so all floats go through one
// fixed %.9g formatting (nine significant digits round-trip a float-sized
// budget and keep files compact) and containers are walked in index order.

#pragma once

#include <iosfwd>
#include <string>

#include "mesh/mesh.hpp"

namespace wpmin::mesh {

void write_obj(const SurfaceMesh& mesh, std::ostream& os);
void write_ply(const SurfaceMesh& mesh, std::ostream& os);

// <family>-r<resolution>.<format>
std::string mesh_filename(const SurfaceMesh& mesh, const std::string& format);

// Writes the mesh to dir/mesh_filename(...); returns the full path.
std::string write_mesh_file(const SurfaceMesh& mesh, const std::string& dir,
                            const std::string& format);

} // namespace wpmin::mesh
