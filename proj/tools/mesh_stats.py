#!/usr/bin/env python3
"""Quick sanity stats for exported meshes: counts, bounds, edge topology.

Reads the OBJ or ASCII PLY files the wpmin CLI writes and prints vertex and
face counts, the bounding box, the curvature range when present (PLY carries
a per-vertex curvature property), and an index-validity plus edge-manifold
summary.  Usage: mesh_stats.py mesh1.obj mesh2.ply ...
"""

import sys
from collections import Counter


def read_obj(path):
    vertices, faces = [], []
    with open(path) as f:
        for line in f:
            parts = line.split()
            if not parts:
                continue
            if parts[0] == "v":
                vertices.append(tuple(float(x) for x in parts[1:4]))
            elif parts[0] == "f":
                faces.append(tuple(int(x.split("/")[0]) - 1 for x in parts[1:4]))
    return vertices, faces, []


def read_ply(path):
    with open(path) as f:
        if f.readline().strip() != "ply":
            raise ValueError(f"{path}: not a ply file")
        n_vertex = n_face = 0
        properties = []
        in_vertex = False
        for line in f:
            parts = line.split()
            if parts[:2] == ["element", "vertex"]:
                n_vertex, in_vertex = int(parts[2]), True
            elif parts[:2] == ["element", "face"]:
                n_face, in_vertex = int(parts[2]), False
            elif parts[0] == "property" and in_vertex:
                properties.append(parts[-1])
            elif parts[0] == "end_header":
                break
        vertices, curvatures = [], []
        k = properties.index("curvature") if "curvature" in properties else -1
        for _ in range(n_vertex):
            row = [float(x) for x in f.readline().split()]
            vertices.append(tuple(row[:3]))
            if k >= 0:
                curvatures.append(row[k])
        faces = []
        for _ in range(n_face):
            row = [int(x) for x in f.readline().split()]
            if row[0] != 3:
                raise ValueError(f"{path}: non-triangular face")
            faces.append(tuple(row[1:4]))
    return vertices, faces, curvatures


def describe(path):
    reader = read_ply if path.endswith(".ply") else read_obj
    vertices, faces, curvatures = reader(path)
    print(f"{path}: {len(vertices)} vertices, {len(faces)} faces")

    bad = sum(1 for f in faces for i in f if not 0 <= i < len(vertices))
    print(f"  face indices: {'all valid' if bad == 0 else f'{bad} OUT OF RANGE'}")

    for axis in range(3):
        vals = [v[axis] for v in vertices]
        print(f"  {'xyz'[axis]} range: [{min(vals):.6g}, {max(vals):.6g}]")

    if curvatures:
        print(f"  curvature range: [{min(curvatures):.6g}, {max(curvatures):.6g}]")

    # Triangulated-with-boundary check: every undirected edge on 1 or 2 faces.
    edges = Counter()
    for a, b, c in faces:
        for e in ((a, b), (b, c), (c, a)):
            edges[tuple(sorted(e))] += 1
    worst = max(edges.values(), default=0)
    boundary = sum(1 for n in edges.values() if n == 1)
    print(f"  edges: {len(edges)} total, {boundary} on the boundary, "
          f"max faces per edge {worst}")
    return bad == 0 and worst <= 2


def main():
    if len(sys.argv) < 2:
        print(__doc__.strip(), file=sys.stderr)
        return 2
    ok = True
    for path in sys.argv[1:]:
        ok &= describe(path)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
