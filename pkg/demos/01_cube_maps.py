"""Boolean cubes and cotransverse maps: the raw material.

A vertex of the n-cube is a bit mask; coordinate 1 sits in the least
significant bit.  A cotransverse map is a strictly increasing vertex map
that also sends neighbours to neighbours, where "neighbour" means directed
L1 distance exactly 1.
"""

from transcube import (
    CubeMap,
    Vertex,
    coface,
    compose,
    d1_vertex,
    height,
    max_min_collapse,
    symmetry,
    validate_cotransverse,
)

# Vertices and the directed distance.  Distances only exist upward: from
# (0,1) to (1,0) there is no directed way.
a = Vertex.from_coords((0, 1))
b = Vertex.from_coords((1, 0))
top = Vertex.from_coords((1, 1))
print("height of (0,1):", height(a))
print("d1((0,1) -> (1,1)):", d1_vertex(a, top))
print("d1((0,1) -> (1,0)):", d1_vertex(a, b))

# The archetypal transverse degeneracy: (e1, e2) |-> (max, min).  It is not
# injective, yet strictly increasing and neighbour-preserving.
gamma = max_min_collapse()
print("\ncollapse table:", gamma.literal())
for bits in range(4):
    v = Vertex(2, bits)
    print(f"  {v} |-> {gamma(v)}")

# Generators: cofaces insert a constant coordinate, symmetries swap two.
print("\ncoface inserting 0 at coordinate 1 of the square:", coface(1, 0, 2).literal())
print("swap of the square's coordinates:", symmetry(1, 2).literal())

# Composition is table lookup; the result is validated like everything else.
swapped_first = compose(gamma, symmetry(1, 2))
print("\ncollapse after swapping equals the collapse:", swapped_first.table == gamma.table)

# Invalid tables never become CubeMap values.
report = validate_cotransverse((0, 0, 0, 0), 2, 2)
print("\nconstant table rejected:", report.axiom, "-", report.message)

# Text literals round-trip, so tables are portable.
print("round-trip:", CubeMap.from_literal(gamma.literal()) == gamma)
