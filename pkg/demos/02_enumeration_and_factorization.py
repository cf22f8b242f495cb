"""Hom-sets are finite and fully enumerable at desk scale.

Every cotransverse map factors uniquely as an endomap of its source cube
followed by a pure coface insertion, and that normal form is final among
all ways of peeling an endomap off the source.
"""

from transcube import (
    check_factorization_final,
    coface,
    compose,
    count_homset,
    enumerate_homset,
    factorize,
    max_min_collapse,
)

# Hom-set sizes explode in a controlled way: the closed form
# |endos(m)| * C(n, m) * 2^(n-m) matches brute enumeration.
for m in range(4):
    for n in range(m, 4):
        maps = enumerate_homset(m, n)
        print(f"maps [{m}] -> [{n}]: {len(maps):3d}  (closed form {count_homset(m, n)})")

# The square has exactly four endomaps: identity, the swap and two collapses.
print("\nsquare endomaps:")
for f in enumerate_homset(2, 2):
    print(" ", f.literal())

# Factorization: compose the collapse with a coface, then recover the parts.
f = compose(coface(1, 0, 3), max_min_collapse())
fac = factorize(f)
print("\ncomposite:", f.literal())
print("endomap part:", fac.psi.literal())
print("coface part: ", fac.phi.literal())
print("reassembles: ", fac.composite.table == f.table)

# The canonical factorization is final: every other way of writing f as
# (anything) o (endomap) maps to it through exactly one connecting endomap.
report = check_factorization_final(max_min_collapse())
print("\nfactorizations of the collapse:", report.factorizations, "- final:", report.ok)
