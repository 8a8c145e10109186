#pragma once

#include "meshlap/tetmesh.hpp"
#include "meshlap/trimesh.hpp"

namespace meshlap {

// Icosahedron subdivided `level` times, midpoints reprojected onto the unit
// sphere: 20 * 4^level triangles, 10 * 4^level + 2 vertices.
TriMesh icosphere(int level);

// Regular tetrahedron with unit edge length, as a one-tet mesh.
TetMesh regular_tet();

// [0,1]^3 tiled by n^3 cubes of 6 positively oriented tets each (conforming
// Kuhn subdivision), 6 n^3 tets total.
TetMesh cube_tets(int n);

// Two unit-base triangles sharing the edge (0,0,0)-(1,0,0) with interior
// dihedral angle theta in (0, pi]; theta = pi is the flat pair.
TriMesh two_triangle_hinge(double theta);

// Regular (n+1)^2-vertex triangulated grid on [0,1]^2 x {0}.
TriMesh planar_grid(int n);

// Hexagonal triangulated disk of given ring count in the z = 0 plane,
// radius 1; the lattice is equilateral so the triangulation is Delaunay.
TriMesh triangulated_disk(int rings);

} // namespace meshlap
