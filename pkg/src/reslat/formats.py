"""JSON readers and writers for lattices, ring specs and algebra expressions."""

from __future__ import annotations

import json
from pathlib import Path

from .core import ResiduatedLattice, validate_lattice, validate_residuated
from .errors import InvalidSpec
from .expr import DirProd, Literal, OrdProd, Ring
from .rings import PolyQuot, Product, TableSpec, Zn


def _read(source):
    if isinstance(source, dict):
        return source, None
    path = Path(source)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InvalidSpec(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(text), path
    except json.JSONDecodeError as exc:
        raise InvalidSpec(f"{path}: not valid JSON ({exc.msg} at line {exc.lineno})") from exc


def _field(obj, key, where):
    if not isinstance(obj, dict) or key not in obj:
        raise InvalidSpec(f"{where}: missing field {key!r}")
    return obj[key]


def _matrix(obj, key, n, where, cast=int):
    rows = _field(obj, key, where)
    if not isinstance(rows, list) or len(rows) != n or any(
            not isinstance(r, list) or len(r) != n for r in rows):
        raise InvalidSpec(f"{where}: {key!r} must be a {n}x{n} array")
    try:
        return [[cast(v) for v in r] for r in rows]
    except (TypeError, ValueError) as exc:
        raise InvalidSpec(f"{where}: {key!r} has a non-integer entry") from exc


# ---------------------------------------------------------------------------
# lattices

def lattice_from_dict(d: dict, where: str = "lattice") -> ResiduatedLattice:
    """Build and validate a residuated lattice from the lattice file schema.

    Validation errors (NotAPartialOrder, ResiduumMissing, ...) propagate.
    """
    n = _field(d, "size", where)
    if not isinstance(n, int) or n < 1:
        raise InvalidSpec(f"{where}: size must be a positive integer")
    labels = d.get("labels")
    if labels is not None and (not isinstance(labels, list) or len(labels) != n):
        raise InvalidSpec(f"{where}: labels must list {n} names")
    leq = _matrix(d, "leq", n, where, lambda v: bool(int(v)))
    odot = _matrix(d, "odot", n, where)
    arrow = _matrix(d, "arrow", n, where) if d.get("arrow") is not None else None
    lat = validate_lattice(leq, labels=[str(s) for s in labels] if labels else None)
    return validate_residuated(lat, odot, arrow)


def lattice_to_dict(L: ResiduatedLattice) -> dict:
    lat = L.lattice
    return {
        "size": L.size,
        "labels": list(lat.labels) if lat.labels else [str(k) for k in range(L.size)],
        "leq": [[int(v) for v in row] for row in lat.leq],
        "odot": [list(row) for row in L.odot],
        "arrow": [list(row) for row in L.arrow],
    }


def load_lattice(source) -> ResiduatedLattice:
    d, path = _read(source)
    alg = lattice_from_dict(d, str(path) if path else "lattice")
    if path is not None:
        alg = alg.with_provenance(Literal(path.stem, str(path), alg))
    return alg


# ---------------------------------------------------------------------------
# ring specs

def ring_spec_from_dict(d: dict, where: str = "ring spec"):
    kind = _field(d, "kind", where)
    if kind == "Zn":
        k = _field(d, "k", where)
        if not isinstance(k, int) or k < 1:
            raise InvalidSpec(f"{where}: Zn needs a positive integer k")
        return Zn(k)
    if kind == "product":
        factors = _field(d, "factors", where)
        if not isinstance(factors, list) or not factors:
            raise InvalidSpec(f"{where}: product needs a non-empty factor list")
        return Product([ring_spec_from_dict(f, f"{where}/factors[{i}]")
                        for i, f in enumerate(factors)])
    if kind == "polyquot":
        p, f = _field(d, "p", where), _field(d, "f", where)
        if not isinstance(p, int) or not isinstance(f, list):
            raise InvalidSpec(f"{where}: polyquot needs integer p and coefficient list f")
        return PolyQuot(p, [int(c) for c in f])
    if kind == "table":
        add = _field(d, "add", where)
        n = len(add) if isinstance(add, list) else 0
        return TableSpec(_matrix(d, "add", n, where), _matrix(d, "mul", n, where),
                         int(_field(d, "zero", where)), int(_field(d, "one", where)),
                         d.get("name", "T"), d.get("labels"))
    raise InvalidSpec(f"{where}: unknown ring kind {kind!r}")


def ring_spec_to_dict(spec) -> dict:
    if isinstance(spec, Zn):
        return {"kind": "Zn", "k": spec.k}
    if isinstance(spec, Product):
        return {"kind": "product", "factors": [ring_spec_to_dict(f) for f in spec.factors]}
    if isinstance(spec, PolyQuot):
        return {"kind": "polyquot", "p": spec.p, "f": list(spec.f)}
    if isinstance(spec, TableSpec):
        out = {"kind": "table", "name": spec.name,
               "add": [list(r) for r in spec.add], "mul": [list(r) for r in spec.mul],
               "zero": spec.zero, "one": spec.one}
        if spec.labels is not None:
            out["labels"] = list(spec.labels)
        return out
    raise TypeError(f"not a ring spec: {spec!r}")


def load_ring_spec(source):
    d, path = _read(source)
    return ring_spec_from_dict(d, str(path) if path else "ring spec")


# ---------------------------------------------------------------------------
# expressions

def expr_from_dict(d: dict, base: Path | None = None, where: str = "expr"):
    kind = _field(d, "kind", where)
    if kind == "ring":
        return Ring(ring_spec_from_dict(_field(d, "spec", where), f"{where}/spec"))
    if kind in ("ordprod", "dirprod"):
        cls = OrdProd if kind == "ordprod" else DirProd
        return cls(expr_from_dict(_field(d, "left", where), base, f"{where}/left"),
                   expr_from_dict(_field(d, "right", where), base, f"{where}/right"))
    if kind == "literal":
        p = Path(_field(d, "path", where))
        if base is not None and not p.is_absolute():
            p = base / p
        alg = load_lattice(p)
        return Literal(d.get("name", p.stem), str(p), alg)
    raise InvalidSpec(f"{where}: unknown expression kind {kind!r}")


def expr_to_dict(e) -> dict:
    if isinstance(e, Ring):
        return {"kind": "ring", "spec": ring_spec_to_dict(e.spec)}
    if isinstance(e, (OrdProd, DirProd)):
        return {"kind": "ordprod" if isinstance(e, OrdProd) else "dirprod",
                "left": expr_to_dict(e.left), "right": expr_to_dict(e.right)}
    if isinstance(e, Literal):
        return {"kind": "literal", "name": e.name, "path": e.path}
    raise TypeError(f"not an algebra expression: {e!r}")


def load_expr(source):
    d, path = _read(source)
    return expr_from_dict(d, path.parent if path else None, str(path) if path else "expr")


def load_algebra(source) -> ResiduatedLattice:
    """Accept a lattice file, a ring spec file (giving Id(A)) or an expression file."""
    from .ordinal import evaluate_expr

    d, path = _read(source)
    where = str(path) if path else "input"
    if isinstance(d, dict) and "size" in d:
        return load_lattice(path if path else d)
    if isinstance(d, dict) and d.get("kind") in ("ring", "ordprod", "dirprod", "literal"):
        return evaluate_expr(expr_from_dict(d, path.parent if path else None, where))
    if isinstance(d, dict) and "kind" in d:
        return evaluate_expr(Ring(ring_spec_from_dict(d, where)))
    raise InvalidSpec(f"{where}: neither a lattice, a ring spec nor an expression")


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=False) + "\n"
