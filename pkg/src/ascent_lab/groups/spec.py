"""Group specifications and the ``family:params`` mini-language.

    bs:<n>                     BS(1, n)
    wreath                     Z ≀ Z
    heis                       integer Heisenberg group
    zd:<d>                     Z^d
    hnn-abelian:<matrix>       e.g. hnn-abelian:[[2,0],[0,3]]
    hnn-free:<word>;<word>     images of a1, a2, e.g. hnn-free:a1 a2 A1 A2;a1
    matrix:<d>:<m>,<m>,...     e.g. matrix:2:[[1,2],[0,1]],[[1,0],[2,1]]
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from ascent_lab.errors import BadParameter, ParseError
from ascent_lab.exact.matrix import IntegerMatrix, parse_matrix
from ascent_lab.groups import free
from ascent_lab.groups.base import Group
from ascent_lab.groups.families import BaumslagSolitar, FreeAbelian, Heisenberg, MatrixGroup, WreathZZ
from ascent_lab.groups.hnn import HnnAbelian, HnnFree

FAMILIES = ("bs", "wreath", "heis", "zd", "hnn-abelian", "hnn-free", "matrix")


@dataclass(frozen=True)
class GroupSpec:
    family: str
    n: int | None = None
    d: int | None = None
    matrix: IntegerMatrix | None = None
    images: tuple[str, ...] | None = None
    matrices: tuple[IntegerMatrix, ...] | None = None

    def __str__(self) -> str:
        f = self.family
        if f == "bs":
            return f"bs:{self.n}"
        if f in ("wreath", "heis"):
            return f
        if f == "zd":
            return f"zd:{self.d}"
        if f == "hnn-abelian":
            return f"hnn-abelian:{self.matrix.to_literal()}"
        if f == "hnn-free":
            return "hnn-free:" + ";".join(free.format_free_word(w) for w in self.images)
        return f"matrix:{self.d}:" + ",".join(m.to_literal() for m in self.matrices)

    @classmethod
    def bs(cls, n: int) -> "GroupSpec":
        return cls("bs", n=n)

    @classmethod
    def hnn_abelian(cls, phi) -> "GroupSpec":
        if not isinstance(phi, IntegerMatrix):
            phi = IntegerMatrix.of(phi)
        return cls("hnn-abelian", matrix=phi)

    @classmethod
    def hnn_free(cls, img1: str, img2: str) -> "GroupSpec":
        return cls("hnn-free", images=(free.parse_free_word(img1), free.parse_free_word(img2)))


def parse_group_spec(text: str) -> GroupSpec:
    s = text.strip()
    family, _, rest = s.partition(":")
    family = family.strip().lower()
    try:
        if family == "bs":
            return GroupSpec("bs", n=int(rest))
        if family in ("wreath", "heis") and not rest:
            return GroupSpec(family)
        if family == "zd":
            return GroupSpec("zd", d=int(rest))
        if family == "hnn-abelian":
            return GroupSpec("hnn-abelian", matrix=parse_matrix(rest))
        if family == "hnn-free":
            parts = rest.strip().strip('"').split(";")
            if len(parts) != 2:
                raise ParseError("hnn-free needs two images separated by ';'")
            return GroupSpec("hnn-free", images=tuple(free.parse_free_word(p) for p in parts))
        if family == "matrix":
            d_text, _, mats = rest.partition(":")
            rows = json.loads("[" + mats + "]")
            return GroupSpec("matrix", d=int(d_text), matrices=tuple(parse_matrix(json.dumps(m)) for m in rows))
    except ParseError:
        raise
    except (ValueError, json.JSONDecodeError, TypeError) as exc:
        raise ParseError(f"bad group spec {text!r}: {exc}") from None
    raise ParseError(f"unknown group family in {text!r} (expected one of {', '.join(FAMILIES)})")


def build_group(spec: GroupSpec | str) -> Group:
    """Construct the group handle for ``spec``; parameters are validated here."""
    if isinstance(spec, str):
        spec = parse_group_spec(spec)
    f = spec.family
    if f == "bs":
        g = BaumslagSolitar(spec.n)
    elif f == "wreath":
        g = WreathZZ()
    elif f == "heis":
        g = Heisenberg()
    elif f == "zd":
        g = FreeAbelian(spec.d)
    elif f == "hnn-abelian":
        g = HnnAbelian(spec.matrix)
    elif f == "hnn-free":
        g = HnnFree(spec.images)
    elif f == "matrix":
        g = MatrixGroup(spec.d, spec.matrices)
    else:
        raise BadParameter(f"unknown family {f!r}")
    g.spec = spec
    return g
