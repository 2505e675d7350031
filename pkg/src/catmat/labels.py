"""Morphism labels for constructed categories.

Labels encode their own source and target through (class, local index)
coordinates, so a label is globally unique within one category.  Every label
renders to a canonical string used by the certificate format; `parse_label`
inverts `render` for the structured variants and leaves anything else opaque.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True)
class Identity:
    cls: int
    i: int


@dataclass(frozen=True)
class Pair:
    """Morphism factoring through a class basepoint: u indexes the leg into the
    basepoint (1..a), v the leg out of it (1..b)."""

    cls: int
    i: int
    j: int
    u: int
    v: int


@dataclass(frozen=True)
class Collapsed:
    """The single canonical non-identity morphism shape inside a class with no
    basepoint; all within-class composites collapse onto it."""

    cls: int
    i: int
    j: int


@dataclass(frozen=True)
class CrossBase:
    src_cls: int
    i: int
    dst_cls: int
    j: int
    k: int


@dataclass(frozen=True)
class CrossRow:
    src_cls: int
    i: int
    dst_cls: int
    j: int
    k: int


@dataclass(frozen=True)
class CrossCol:
    src_cls: int
    i: int
    dst_cls: int
    j: int
    k: int


@dataclass(frozen=True)
class CrossExtra:
    src_cls: int
    i: int
    dst_cls: int
    j: int
    k: int


@dataclass(frozen=True)
class Pad:
    """Filler morphism absorbing surplus hom-set size beyond the structural labels."""

    cls: int
    i: int
    j: int
    k: int


@dataclass(frozen=True)
class Inflated:
    """Morphism of an inflated category: a copy of `inner` between duplicated objects."""

    src: int
    dst: int
    inner: "MorphismLabel"


MorphismLabel = Union[
    Identity, Pair, Collapsed, CrossBase, CrossRow, CrossCol, CrossExtra, Pad, Inflated
]

_CROSS_TYPES = (CrossBase, CrossRow, CrossCol, CrossExtra)


def is_cross(label: MorphismLabel) -> bool:
    return isinstance(label, _CROSS_TYPES)


def render(label: MorphismLabel) -> str:
    if isinstance(label, Identity):
        return f"Identity({label.cls},{label.i})"
    if isinstance(label, Pair):
        return f"Pair({label.cls},{label.i},{label.j},{label.u},{label.v})"
    if isinstance(label, Collapsed):
        return f"Collapsed({label.cls},{label.i},{label.j})"
    if isinstance(label, _CROSS_TYPES):
        name = type(label).__name__
        return f"{name}({label.src_cls},{label.i},{label.dst_cls},{label.j},{label.k})"
    if isinstance(label, Pad):
        return f"Pad({label.cls},{label.i},{label.j},{label.k})"
    if isinstance(label, Inflated):
        return f"Infl({label.src},{label.dst},{render(label.inner)})"
    raise TypeError(f"not a morphism label: {label!r}")


_SIMPLE = re.compile(r"^(Identity|Pair|Collapsed|CrossBase|CrossRow|CrossCol|CrossExtra|Pad)\((-?\d+(?:,-?\d+)*)\)$")
_INFL = re.compile(r"^Infl\((-?\d+),(-?\d+),(.+)\)$")
_ARITY = {
    "Identity": 2,
    "Pair": 5,
    "Collapsed": 3,
    "CrossBase": 5,
    "CrossRow": 5,
    "CrossCol": 5,
    "CrossExtra": 5,
    "Pad": 4,
}
_CTOR = {
    "Identity": Identity,
    "Pair": Pair,
    "Collapsed": Collapsed,
    "CrossBase": CrossBase,
    "CrossRow": CrossRow,
    "CrossCol": CrossCol,
    "CrossExtra": CrossExtra,
    "Pad": Pad,
}


def parse_label(text: str) -> MorphismLabel | None:
    """Parse a canonical label string; None when the text is not one."""
    m = _INFL.match(text)
    if m:
        inner = parse_label(m.group(3))
        if inner is None:
            return None
        return Inflated(int(m.group(1)), int(m.group(2)), inner)
    m = _SIMPLE.match(text)
    if not m:
        return None
    name = m.group(1)
    args = [int(v) for v in m.group(2).split(",")]
    if len(args) != _ARITY[name]:
        return None
    return _CTOR[name](*args)
