"""Euler characteristics of polytope line bundles on the stellahedral
variety equal lattice-point counts; the structure sheaf of an augmented
wonderful variety has Euler characteristic 1."""

from stellax import eqclasses as eq
from stellax.matroid import graphic, uniform
from stellax.polymatroid import independence_polytope, lattice_points, stellahedron


def main():
    print(f"calibrated sign: {eq.calibrated_sign()}")
    for n in (1, 2, 3):
        P = stellahedron(n)
        print(f"stellahedron({n}): chi = {eq.euler_char(eq.kclass_of_polytope(P))}, "
              f"lattice points = {len(lattice_points(P))}")
    for M in (uniform(2, 3), graphic([(1, 2), (1, 2), (2, 3)]), uniform(1, 3)):
        P = independence_polytope(M)
        print(f"P({M}): chi = {eq.euler_char(eq.kclass_of_polytope(P))}, "
              f"lattice points = {len(lattice_points(P))}")
    for M in (uniform(2, 3), uniform(1, 2)):
        print(f"structure sheaf of {M}: chi = {eq.euler_char(eq.structure_sheaf_class(M))}")


if __name__ == "__main__":
    main()
