"""CSM classes of a matroid Schubert variety and its open cell, and the
pushforward of the open-cell class to (P^1)^n."""

from stellax.csm import (
    csm_open_cell,
    csm_schubert_variety,
    independent_sets_class,
    pushforward_to_cube,
    verify_csm_localization,
)
from stellax.matroid import elements, uniform


def main():
    M = uniform(2, 4)
    cell = csm_open_cell(M)
    whole = csm_schubert_variety(M)
    print(f"{M}: provenance {cell.to_json()['provenance']}")
    for d, part in sorted(whole.graded().items()):
        print(f"  degree {d}: " + ", ".join(f"{c}*y{elements(F)}" for F, c in sorted(part.items())))
    print(f"  effective: {whole.is_effective()}")

    pushed = pushforward_to_cube(M, cell)
    print(f"pushforward is the sum over independent sets: {pushed == independent_sets_class(M)}")
    ok, bad = verify_csm_localization(M)
    print(f"localization check: {ok} {bad if bad else ''}")


if __name__ == "__main__":
    main()
