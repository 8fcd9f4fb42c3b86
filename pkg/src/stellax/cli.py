"""Command-line interface: ``stellax <command> [options]``; every command prints a JSON report."""

from __future__ import annotations

import argparse
import json
import sys

from . import eqclasses as eq
from .matroid import MatroidError, intersection, parse_matroid
from .polymatroid import Polymatroid, independence_polytope, lattice_points, stellahedron

SCHEMA = "stellax-report/1"
LOCALIZATION_MAX_N = 5


class UsageError(ValueError):
    pass


def _guard(n: int, bound: int, what: str):
    if n > bound:
        raise UsageError(f"{what} is limited to n <= {bound} (got n={n})")


def _matroid(args, index: int = 0):
    specs = args.matroid or []
    if len(specs) <= index:
        raise UsageError(f"command {args.command!r} needs {index + 1} --matroid argument(s)")
    return parse_matroid(specs[index])


# ---------------------------------------------------------------------------


def cmd_tutte(args) -> dict:
    from .tutte import T4_NAMES, logconcave_check, lorentzian_check, postnikov_shapiro, t4, tutte

    M = _matroid(args)
    f = t4(M)
    ps = postnikov_shapiro(M)
    out = {
        "matroid": M.to_json(),
        "T": str(tutte(M)),
        "t4": f.to_str(T4_NAMES),
        "lorentzian": lorentzian_check(f).ok,
        "ps_sequence": ps,
        "log_concave": logconcave_check(ps),
    }
    if args.method == "localization":
        from .tutte import shift, t4_via_localization, tutte_via_localization

        _guard(M.n, LOCALIZATION_MAX_N, "localization")
        out["localization_agrees"] = (tutte_via_localization(M).poly == shift(tutte(M)).poly
                                      and t4_via_localization(M) == f)
    return out


def cmd_decompose(args) -> dict:
    from .valuative import decompose_in_schubert_basis

    return decompose_in_schubert_basis(_matroid(args)).to_json()


def parse_combo(text: str):
    """``c1*spec1; c2*spec2; ...`` (a bare spec means coefficient 1)."""
    from .valuative import MatroidCombo

    terms = []
    pos = 0
    for part in text.split(";"):
        chunk = part.strip()
        if chunk:
            coef, star, spec = chunk.partition("*")
            try:
                c = int(coef) if star else 1
                M = parse_matroid(spec if star else coef)
            except (ValueError, MatroidError) as exc:
                raise UsageError(f"combination term at position {pos}: {chunk!r}: {exc}") from exc
            terms.append((c, M))
        pos += len(part) + 1
    if not terms:
        raise UsageError("empty combination")
    return MatroidCombo(terms)


def cmd_equiv(args) -> dict:
    from .valuative import METHODS, valuative_witness

    if not args.combo:
        raise UsageError("equiv needs --combo 'c1*spec1; c2*spec2; ...'")
    eta = parse_combo(args.combo)
    method = args.method or "all"
    methods = METHODS if method == "all" else (method,)
    results = {m: valuative_witness(eta, m) for m in methods}
    zero = {m: w is None for m, w in results.items()}
    return {
        "combo": eta.to_json(),
        "method": method,
        "zero": all(zero.values()),
        "agree": len(set(zero.values())) == 1,
        "by_method": {m: {"zero": zero[m], "witness": results[m]} for m in methods},
    }


def cmd_intersect(args) -> dict:
    M, N = _matroid(args, 0), _matroid(args, 1)
    P = intersection(M, N)
    additive = (M.n - M.rank) + (N.n - N.rank) == P.n - P.rank
    out = {"product": str(P), "product_bases": P.to_json()["bases"], "corank_additive": additive}
    if args.method == "localization":
        _guard(M.n, LOCALIZATION_MAX_N, "localization")
        out["localization_agrees"] = eq.intersection_weight(M, N) == eq.predicted_intersection(M, N)
    return out


def cmd_csm(args) -> dict:
    from .csm import csm_open_cell, csm_schubert_variety, independent_sets_class, pushforward_to_cube, \
        verify_csm_localization
    from .matroid import elements

    M = _matroid(args)
    cell = csm_open_cell(M)
    pushed = pushforward_to_cube(M, cell)
    out = {
        "open_cell": cell.to_json(),
        "schubert_variety": csm_schubert_variety(M).to_json(),
        "pushforward": [{"subset": elements(I), "coef": c} for I, c in sorted(pushed.items())],
        "pushforward_is_independence_class": pushed == independent_sets_class(M),
    }
    if args.method == "localization":
        _guard(M.n, LOCALIZATION_MAX_N, "localization")
        out["localization_verified"] = verify_csm_localization(M)[0]
    return out


def parse_class(text: str) -> tuple[eq.KClass, int | None]:
    """K-class expressions: ``polytope:<matroid>`` (independence polytope), ``stellahedron:<n>``,
    ``structure:<matroid>``, ``S:<matroid>``, ``Q:<matroid>``, ``O1:<n>``, ``polymatroid:<json>``.
    Returns the class and, for polytope classes, the lattice-point count."""
    head, _, rest = text.partition(":")
    try:
        if head == "polytope":
            P = independence_polytope(parse_matroid(rest))
        elif head == "stellahedron":
            P = stellahedron(int(rest))
        elif head == "polymatroid":
            obj = json.loads(open(rest).read() if rest.endswith(".json") else rest)
            P = Polymatroid.from_json(obj)
        elif head == "structure":
            return eq.structure_sheaf_class(parse_matroid(rest)), None
        elif head == "S":
            return eq.kclass_S(parse_matroid(rest)), None
        elif head == "Q":
            return eq.kclass_Q(parse_matroid(rest)), None
        elif head == "O1":
            return eq.sum_of_O1(int(rest)), None
        else:
            raise UsageError(f"unknown class expression at position 0: {head!r}")
    except (ValueError, OSError, MatroidError) as exc:
        if isinstance(exc, UsageError):
            raise
        raise UsageError(f"cannot parse class expression {text!r} at position {len(head) + 1}: {exc}") from exc
    return eq.kclass_of_polytope(P), len(lattice_points(P))


def cmd_euler(args) -> dict:
    if not args.cls:
        raise UsageError("euler needs --class <expr>")
    xi, points = parse_class(args.cls)
    _guard(xi.n, LOCALIZATION_MAX_N, "localization")
    out = {"class": args.cls, "chi": eq.euler_char(xi)}
    if points is not None:
        out["lattice_points"] = points
    return out


def cmd_selftest(args) -> dict:
    from .acceptance import run_all

    level = args.level or "fast"
    results = run_all(level)
    return {"level": level, "criteria": results, "ok": all(r["ok"] for r in results)}


COMMANDS = {
    "tutte": cmd_tutte,
    "decompose": cmd_decompose,
    "equiv": cmd_equiv,
    "intersect": cmd_intersect,
    "csm": cmd_csm,
    "euler": cmd_euler,
    "selftest": cmd_selftest,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="stellax", description=__doc__)
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--matroid", action="append",
                   help="matroid spec (uniform:r,n | schubert:perm:I | dual:.. | sum:a+b | graphic:1-2,.. | JSON | file.json); repeat for intersect")
    p.add_argument("--combo", help="integer combination 'c1*spec1; c2*spec2' for equiv")
    p.add_argument("--class", dest="cls", help="K-class expression for euler")
    p.add_argument("--method", help="equiv: indicator|homological|numerical|all; "
                                    "tutte/intersect/csm: 'localization' adds the fixed-point check")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--seed", type=int, default=0, help="seed for the generic localization directions")
    p.add_argument("--level", choices=("fast", "full"), help="selftest level")
    return p


def render(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    eq.set_seed(args.seed)
    report = {"schema": SCHEMA, "command": args.command, "seed": args.seed}
    code = 0
    try:
        report["result"] = COMMANDS[args.command](args)
        if args.command == "selftest" and not report["result"]["ok"]:
            code = 1
    except (UsageError, MatroidError) as exc:
        report["error"] = str(exc)
        code = 2
    text = render(report)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
