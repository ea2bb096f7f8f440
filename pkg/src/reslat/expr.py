"""Expression trees recording how an algebra was built."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .rings import spec_name

# ASCII stand-in for the glued ordinal product
ORD_TOKEN = "."
PROD_TOKEN = "x"


@dataclass(frozen=True)
class Ring:
    """Id(A) for the ring built from ``spec``."""
    spec: object


@dataclass(frozen=True)
class OrdProd:
    left: object
    right: object


@dataclass(frozen=True)
class DirProd:
    """Componentwise direct product of two residuated lattices."""
    left: object
    right: object


@dataclass(frozen=True)
class Literal:
    name: str
    path: Optional[str] = None
    algebra: object = field(default=None, compare=False, hash=False, repr=False)


AlgebraExpr = Ring | OrdProd | DirProd | Literal


def render(e) -> str:
    if isinstance(e, Ring):
        return f"Id({spec_name(e.spec)})"
    if isinstance(e, Literal):
        return e.name
    if isinstance(e, (OrdProd, DirProd)):
        token = ORD_TOKEN if isinstance(e, OrdProd) else PROD_TOKEN

        def side(child):
            s = render(child)
            return f"({s})" if isinstance(child, (OrdProd, DirProd)) else s

        return f"{side(e.left)} {token} {side(e.right)}"
    raise TypeError(f"not an algebra expression: {e!r}")


def node_count(e) -> int:
    if isinstance(e, (OrdProd, DirProd)):
        return 1 + node_count(e.left) + node_count(e.right)
    return 1


def left_weight(e) -> int:
    """Number of binary nodes sitting in left subtrees; favors right-nested names."""
    if isinstance(e, (OrdProd, DirProd)):
        return node_count(e.left) - 1 + left_weight(e.left) + left_weight(e.right)
    return 0


def preference_key(e):
    return (node_count(e), left_weight(e), render(e))
