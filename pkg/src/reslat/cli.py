"""Command-line front end.

Exit codes: 0 success or property holds, 1 property fails (a witness is
printed), 2 invalid input.
"""

from __future__ import annotations

import argparse
import sys

from .classify import (
    FILTERS,
    METHODS,
    are_isomorphic,
    enumerate_algebras,
    enumerate_lattice_skeletons,
    table_reports,
)
from .core import ResiduatedLattice, check_properties
from .corpus import seed_corpus
from .errors import (
    AlgebraError,
    ArrowMismatch,
    CatalogIncomplete,
    MethodMismatch,
    MonoidViolation,
    ResiduumMissing,
)
from .expr import render
from .formats import dumps, expr_to_dict, lattice_to_dict, load_algebra, load_ring_spec
from .ideal_lattice import (
    build_ideal_lattice,
    check_c6_c7,
    is_multiplication_ring,
)
from .ordinal import ordinal_product
from .rings import SIDES, TWO_SIDED, build_ring, classify_ideals, describe_ideal, enumerate_ideals

OK, FAILS, INVALID = 0, 1, 2
PROPERTIES = ("all", "residuated", "divisible", "prelinear", "bl", "mv", "heyting", "chain")
ALIASES = {"div": "divisible", "prel": "prelinear"}
RESIDUATION_ERRORS = (ResiduumMissing, MonoidViolation, ArrowMismatch)


class Output:
    """Collects a report and prints it either as text lines or as one JSON object."""

    def __init__(self, fmt: str):
        self.fmt = fmt
        self.lines: list[str] = []
        self.data: dict = {}

    def line(self, s: str = ""):
        self.lines.append(s)

    def flush(self):
        if self.fmt == "json":
            sys.stdout.write(dumps(self.data))
        else:
            sys.stdout.write("\n".join(self.lines) + ("\n" if self.lines else ""))


# ---------------------------------------------------------------------------
# formatting helpers

def _name(L: ResiduatedLattice, x: int) -> str:
    return L.name(x)


def _tup(L, w) -> str:
    return "(" + ",".join(_name(L, x) for x in w) + ")"


def explain(L: ResiduatedLattice, prop: str, w) -> str:
    """Human-readable counterexample for a failed property."""
    n = lambda x: _name(L, x)  # noqa: E731
    o, a, lat = L.odot, L.arrow, L.lattice
    if prop == "divisible":
        x, y = w
        return f"{_tup(L, w)}: x⊙(x→y) = {n(o[x][a[x][y]])} ≠ x∧y = {n(lat.meet[x][y])}"
    if prop == "prelinear":
        x, y = w
        return f"{_tup(L, w)}: {n(lat.join[a[x][y]][a[y][x]])} ≠ {n(L.top)}"
    if prop == "bl":
        rep = check_properties(L)
        sub = "divisible" if not rep.is_divisible else "prelinear"
        return f"{sub} fails, " + explain(L, sub, w)
    if prop == "mv":
        rep = check_properties(L)
        if not rep.is_bl:
            return "not BL, " + explain(L, "bl", w)
        (x,) = w
        return f"{_tup(L, w)}: x** = {n(L.neg(L.neg(x)))} ≠ x"
    if prop == "heyting":
        (x,) = w
        return f"{_tup(L, w)}: x⊙x = {n(o[x][x])} ≠ x"
    if prop == "chain":
        return f"{_tup(L, w)}: incomparable"
    return _tup(L, w)


def algebra_text(L: ResiduatedLattice) -> list[str]:
    names = [_name(L, x) for x in range(L.size)]
    width = max(len(s) for s in names)
    lines = []
    if L.provenance is not None:
        try:
            lines.append(f"expression: {render(L.provenance)}")
        except TypeError:
            pass
    covers = []
    lat = L.lattice
    for x in range(L.size):
        for y in range(L.size):
            if x != y and lat.leq[x][y] and not any(
                    z not in (x, y) and lat.leq[x][z] and lat.leq[z][y] for z in range(L.size)):
                covers.append(f"{names[x]}<{names[y]}")
    lines.append(f"elements: {' '.join(names)}")
    lines.append(f"covers: {' '.join(covers) if covers else '-'}")
    for title, table in (("⊙", L.odot), ("→", L.arrow)):
        lines.append(f"{title:>{width}} | " + " ".join(f"{s:>{width}}" for s in names))
        lines.append("-" * (width + 1) + "+" + "-" * ((width + 1) * L.size))
        for x in range(L.size):
            lines.append(f"{names[x]:>{width}} | "
                         + " ".join(f"{names[table[x][y]]:>{width}}" for y in range(L.size)))
    return lines


def _load(path):
    return load_algebra(path)


# ---------------------------------------------------------------------------
# commands

def cmd_check(args, out: Output) -> int:
    args.property = ALIASES.get(args.property, args.property)
    try:
        L = _load(args.file)
    except RESIDUATION_ERRORS as exc:
        if args.property not in ("all", "residuated"):
            raise
        w = exc.witness
        out.line(f"residuated: no  {type(exc).__name__}: {exc}")
        out.data = {"file": args.file, "residuated": False, "error": type(exc).__name__,
                    "message": str(exc), "witness": list(w) if w is not None else None}
        return FAILS
    rep = check_properties(L)
    flags = rep.flags()
    wanted = list(flags) if args.property == "all" else [args.property]
    failed = False
    results = {}
    for prop in wanted:
        holds = flags[prop]
        w = rep.witnesses.get(prop)
        failed |= not holds
        results[prop] = {"holds": holds,
                         "witness": [_name(L, x) for x in w] if w is not None else None,
                         "explanation": explain(L, prop, w) if w is not None else None}
        out.line(f"{prop}: {'yes' if holds else 'no'}"
                 + (f"  witness {explain(L, prop, w)}" if w is not None else ""))
    if L.provenance is not None:
        try:
            out.line(f"expression: {render(L.provenance)}")
        except TypeError:
            pass
    out.data = {"file": args.file, "size": L.size, "properties": results}
    return FAILS if failed else OK


def cmd_ring_ideals(args, out: Output) -> int:
    spec = load_ring_spec(args.file)
    R = build_ring(spec)
    side = TWO_SIDED if R.commutative else args.side
    ideals = enumerate_ideals(R, side)
    out.line(f"ring: {R.title}  size {R.size}  "
             f"{'commutative' if R.commutative else 'noncommutative'}  {side} ideals: {len(ideals)}")
    rows = []
    for k, I in enumerate(ideals):
        d = describe_ideal(I)
        out.line(f"  [{k}] {d}  size {len(I.members)}")
        rows.append({"index": k, "name": d, "size": len(I.members),
                     "members": [R.name(x) for x in sorted(I.members)]})
    out.data = {"ring": R.title, "size": R.size, "commutative": R.commutative,
                "side": side, "ideals": rows}
    if R.commutative:
        st = classify_ideals(R, ideals)
        stats = {"n_ideals": st.n_ideals, "n_maximal": st.n_maximal, "n_prime": st.n_prime,
                 "local": st.is_local, "principal_ring": st.is_principal_ring,
                 "non_principal": describe_ideal(st.non_principal) if st.non_principal else None}
        out.line(f"maximal: {st.n_maximal}  prime: {st.n_prime}  local: {st.is_local}  "
                 f"principal ring: {st.is_principal_ring}"
                 + (f"  (non-principal {stats['non_principal']})" if st.non_principal else ""))
        out.data["stats"] = stats
        IL = build_ideal_lattice(R)
        out.data["lattice"] = lattice_to_dict(IL.algebra)
        if args.lattice_out:
            with open(args.lattice_out, "w") as fh:
                fh.write(dumps(lattice_to_dict(IL.algebra)))
            out.line(f"lattice written to {args.lattice_out}")
    return OK


def cmd_is_multiplication(args, out: Output) -> int:
    R = build_ring(load_ring_spec(args.file))
    IL = build_ideal_lattice(R)
    v = is_multiplication_ring(IL)
    out.data = {"ring": R.title, "multiplication": v.value, "witness": None}
    if v.value:
        out.line(f"{R.title}: multiplication ring")
        return OK
    i, j = v.witness
    I, J = IL.ideals[i], IL.ideals[j]
    alg = IL.algebra
    lhs, rhs = alg.odot[i][alg.arrow[i][j]], alg.lattice.meet[i][j]
    msg = (f"(I,J) = ({describe_ideal(I)},{describe_ideal(J)}): "
           f"I⊗(J:I) = {alg.name(lhs)} ≠ I∩J = {alg.name(rhs)}")
    out.line(f"{R.title}: not a multiplication ring  witness {msg}")
    out.data["witness"] = {"I": describe_ideal(I), "J": describe_ideal(J), "explanation": msg}
    return FAILS


def cmd_identities(args, out: Output) -> int:
    from .core import check_identities_c1_c5

    L = _load(args.file)
    rep = check_identities_c1_c5(L)
    failed = False
    res = {}
    for k, w in rep.witnesses.items():
        res[k] = None if w is None else [_name(L, x) for x in w]
        failed |= w is not None
        out.line(f"{k}: {'pass' if w is None else 'FAIL witness ' + _tup(L, w)}")
    out.data = {"file": args.file, "c1-c5": res}
    spec = None
    try:
        spec = load_ring_spec(args.file)
    except AlgebraError:
        pass
    if spec is not None:
        d = check_c6_c7(build_ring(spec))
        for k in ("c6", "c7"):
            w = getattr(d, k)
            failed |= w is not None
            res[k] = None if w is None else [_name(L, x) for x in w]
            out.line(f"{k}: {'pass' if w is None else 'FAIL witness ' + _tup(L, w)}")
    return FAILS if failed else OK


def cmd_ordinal_product(args, out: Output) -> int:
    L1, L2 = _load(args.left), _load(args.right)
    P = ordinal_product(L1, L2)
    rep = check_properties(P)
    for line in algebra_text(P):
        out.line(line)
    out.line("properties: " + " ".join(f"{k}={'yes' if v else 'no'}"
                                       for k, v in rep.flags().items()))
    out.data = {"lattice": lattice_to_dict(P), "properties": rep.flags()}
    if P.provenance is not None:
        out.data["expr"] = _expr_json(P.provenance)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(dumps(lattice_to_dict(P)))
        out.line(f"written to {args.output}")
    return OK


def _expr_json(e):
    try:
        return {"name": render(e), "tree": expr_to_dict(e)}
    except TypeError:
        return None


def cmd_iso(args, out: Output) -> int:
    A, B = _load(args.first), _load(args.second)
    cert = are_isomorphic(A, B)
    if cert is None:
        out.line("not isomorphic")
        out.data = {"isomorphic": False}
        return FAILS
    pairs = [f"{_name(A, x)}->{_name(B, y)}" for x, y in enumerate(cert.mapping)]
    out.line("isomorphic")
    out.line("mapping: " + " ".join(pairs))
    out.data = {"isomorphic": True, "verified": cert.verified, "mapping": list(cert.mapping),
                "named": [[_name(A, x), _name(B, y)] for x, y in enumerate(cert.mapping)]}
    return OK


def _rep_record(r):
    return {"expr": render(r.expr) if r.expr is not None else None,
            "lattice": lattice_to_dict(r.algebra)}


def cmd_enumerate(args, out: Output) -> int:
    rep = enumerate_algebras(args.n, args.filter, args.method, args.threads, args.allow_large)
    out.line(f"n={rep.size} class={rep.class_filter} method={rep.method} count={rep.count}")
    for k, r in enumerate(rep.representatives):
        chain = "chain" if r.algebra.lattice.is_chain else "not a chain"
        out.line(f"  [{k}] {r.name}  ({chain})")
    out.data = {"n": rep.size, "class": rep.class_filter, "method": rep.method,
                "count": rep.count, "representatives": [_rep_record(r) for r in rep.representatives]}
    return OK


def cmd_skeletons(args, out: Output) -> int:
    lats = enumerate_lattice_skeletons(args.n)
    out.line(f"n={args.n} lattices: {len(lats)}")
    recs = []
    for k, lat in enumerate(lats):
        covers = [(x, y) for x in range(lat.size) for y in range(lat.size)
                  if x != y and lat.leq[x][y] and not any(
                      z not in (x, y) and lat.leq[x][z] and lat.leq[z][y] for z in range(lat.size))]
        out.line(f"  [{k}] {'chain' if lat.is_chain else 'covers'}: "
                 + " ".join(f"{x}<{y}" for x, y in covers))
        recs.append({"leq": [[int(v) for v in row] for row in lat.leq], "chain": lat.is_chain})
    out.data = {"n": args.n, "count": len(lats), "lattices": recs}
    return OK


def cmd_tables(args, out: Output) -> int:
    rep = table_reports(args.max, args.method, args.threads)
    for line in rep.text.rstrip("\n").split("\n"):
        out.line(line)
    out.data = {"max": args.max, "method": args.method, "counts": rep.records(),
                "bl_structures": {str(n): [{"expr": e, "chain": c} for e, c in v]
                                  for n, v in rep.structures.items()},
                "divisible_not_bl": {str(n): v for n, v in rep.non_bl.items()}}
    return OK


def cmd_seed_corpus(args, out: Output) -> int:
    paths = seed_corpus(args.directory)
    out.line(f"wrote {len(paths)} files to {args.directory}")
    out.data = {"directory": args.directory, "files": [str(p) for p in paths]}
    return OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="reslat", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        s = sub.add_parser(name, help=help_)
        s.add_argument("--format", choices=("text", "json"), default="text")
        s.set_defaults(func=func)
        return s

    s = add("check", cmd_check, "decide algebraic properties of a lattice, ring or expression file")
    s.add_argument("file")
    s.add_argument("--property", choices=PROPERTIES + tuple(ALIASES), default="all")

    s = add("ring-ideals", cmd_ring_ideals, "list the ideals of a ring spec")
    s.add_argument("file")
    s.add_argument("--side", choices=SIDES, default=TWO_SIDED)
    s.add_argument("--lattice-out", help="write Id(A) in the lattice file format")

    s = add("is-multiplication", cmd_is_multiplication, "decide whether a ring is a multiplication ring")
    s.add_argument("file")

    s = add("identities", cmd_identities, "check c1-c5 (and c6-c7 for rings)")
    s.add_argument("file")

    s = add("ordinal-product", cmd_ordinal_product, "glue two BL-algebras")
    s.add_argument("left")
    s.add_argument("right")
    s.add_argument("-o", "--output")

    s = add("iso", cmd_iso, "test two algebras for isomorphism")
    s.add_argument("first")
    s.add_argument("second")

    s = add("enumerate", cmd_enumerate, "enumerate algebras of a given size up to isomorphism")
    s.add_argument("n", type=int)
    s.add_argument("--filter", choices=sorted(FILTERS), default="divisible")
    s.add_argument("--method", choices=METHODS, default="generate")
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--allow-large", action="store_true", help="lift the brute-force size guard")

    s = add("skeletons", cmd_skeletons, "bounded lattices of a given size up to isomorphism")
    s.add_argument("n", type=int)

    s = add("tables", cmd_tables, "recompute the BL / divisible classification tables")
    s.add_argument("--max", type=int, default=6)
    s.add_argument("--method", choices=METHODS, default="generate")
    s.add_argument("--threads", type=int, default=1)

    s = add("seed-corpus", cmd_seed_corpus, "write the test corpus as JSON files")
    s.add_argument("directory")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args.format)
    try:
        code = args.func(args, out)
    except (MethodMismatch, CatalogIncomplete) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAILS
    except (AlgebraError, ValueError, OSError) as exc:
        w = getattr(exc, "witness", None)
        shown = f" (witness {w})" if w and "witness" not in str(exc) else ""
        print(f"error: {type(exc).__name__}: {exc}{shown}", file=sys.stderr)
        return INVALID
    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
