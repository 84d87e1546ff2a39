"""The polyhedron Q and the identifications producing X_W."""
from salvetti.artin import face_poset_Q, xw_cells
from salvetti.coxeter import parse_coxeter_spec

# A2: Q is a hexagon; opposite edges share a type and are glued.
p = face_poset_Q(parse_coxeter_spec("A2"))
print("A2 faces by dimension:", p.counts())
for gamma, cells in p.orbits.items():
    print(f"  type {gamma}: {', '.join(str(c) for c in cells)}")

# ~A2: three hexagons, one per maximal finite parabolic, sharing vertex cosets.
m = parse_coxeter_spec("~A2")
q = face_poset_Q(m)
print("\n~A2 faces by dimension:", q.counts())
for M, cells in q.pieces.items():
    verts = [str(c) for c in cells if c.dim == 0]
    print(f"  piece {M}: {' '.join(verts)}")
print("cells of X_W:", xw_cells(m))
