"""Cut the octahedron P(U_{2,4}) along a hyperplane and watch the three
valuative-zero tests agree on the resulting relation, then expand a
non-Schubert matroid in the Schubert basis."""

from stellax.valuative import (
    METHODS,
    decompose_in_schubert_basis,
    octahedron_split,
    pairing_det,
    schubert_basis,
    valuative_witness,
)


def main():
    eta = octahedron_split()
    print("relation:")
    for c, M in eta.terms:
        print(f"  {c:+d} * {M}")
    for m in METHODS:
        w = valuative_witness(eta, m)
        print(f"  {m:12s} -> {'zero' if w is None else f'nonzero, witness {w}'}")

    # dropping one pyramid breaks the relation, and every test notices
    broken = type(eta)(eta.terms[:3])
    for m in METHODS:
        print(f"  without M_C, {m:12s} -> zero={valuative_witness(broken, m) is None}")

    n, r = 4, 2
    print(f"\nSchubert basis for n={n}, r={r}: {len(schubert_basis(n, r))} matroids, "
          f"pairing determinant {pairing_det(n, r)}")
    M_C = eta.terms[3][1]
    dec = decompose_in_schubert_basis(M_C)
    print(f"{M_C} in the Schubert basis:")
    for c, S in zip(dec.coeffs, dec.basis):
        if c:
            print(f"  {c:+d} * {S}")


if __name__ == "__main__":
    main()
