"""Linear combinations of diagrams, cell preorders, and nonvanishing.

A ``TLElement`` is a finite sum of diagrams with Laurent coefficients;
multiplying basis diagrams stacks them and converts each closed loop into
a factor of delta = q + q^-1.

Cells are read off the diagram boundaries.  Which boundary goes with the
left preorder is not fixed by fiat: ``calibrated_left_side`` compares the
arc-set partition on each boundary against the recording-tableau partition
at rank 4 and keeps the side that matches.  All preorder and cell
functions consult that calibration.
"""

from __future__ import annotations

from functools import lru_cache

from .diagrams import (
    TLDiagram,
    bottom_arcs,
    compose,
    diagram_of_fc,
    flip,
    top_arcs,
)
from .laurent import LaurentPoly
from .permutations import (
    Permutation,
    a_value,
    enumerate_fc,
    is_fully_commutative,
    rs_inverse,
    rs_tableaux,
)

_DELTA = LaurentPoly.delta()


@lru_cache(maxsize=None)
def _diag(p: Permutation) -> TLDiagram:
    return diagram_of_fc(p)


class TLElement:
    """An immutable linear combination of same-rank diagrams.

    >>> from .permutations import Permutation
    >>> e1 = basis_of(Permutation((2, 1)))
    >>> e1 * e1 == e1.scaled(LaurentPoly.delta())
    True
    """

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms):
        clean = {}
        for d, c in dict(terms).items():
            if d.n != n:
                raise ValueError(f"diagram of rank {d.n} in rank-{n} element")
            if not isinstance(c, LaurentPoly):
                c = LaurentPoly.from_int(c)
            if not c.is_zero():
                clean[d] = c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", hash((n, frozenset(clean.items()))))

    def __setattr__(self, name, value):
        raise AttributeError("TLElement is immutable")

    @classmethod
    def zero(cls, n: int) -> "TLElement":
        return cls(n, {})

    @classmethod
    def from_diagram(cls, d: TLDiagram, coeff: LaurentPoly | None = None) -> "TLElement":
        return cls(d.n, {d: LaurentPoly.one() if coeff is None else coeff})

    def coefficient_of(self, d: TLDiagram) -> LaurentPoly:
        return self.terms.get(d, LaurentPoly.zero())

    def scaled(self, c: LaurentPoly) -> "TLElement":
        return TLElement(self.n, {d: coeff * c for d, coeff in self.terms.items()})

    def __add__(self, other: "TLElement") -> "TLElement":
        if not isinstance(other, TLElement):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"rank mismatch: {self.n} != {other.n}")
        terms = dict(self.terms)
        for d, c in other.terms.items():
            terms[d] = terms.get(d, LaurentPoly.zero()) + c
        return TLElement(self.n, terms)

    def __mul__(self, other: "TLElement") -> "TLElement":
        if not isinstance(other, TLElement):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"rank mismatch: {self.n} != {other.n}")
        terms: dict[TLDiagram, LaurentPoly] = {}
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                d, loops = compose(d1, d2)
                c = c1 * c2 * _DELTA ** loops
                terms[d] = terms.get(d, LaurentPoly.zero()) + c
        return TLElement(self.n, terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TLElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return f"TLElement({self.n}, 0)"
        bits = sorted(
            (d.pairs, f"({c!r})*{d!r}") for d, c in self.terms.items()
        )
        return " + ".join(s for _, s in bits)

    def to_pairs(self):
        """Deterministic list of (diagram, coefficient) pairs."""
        return tuple(sorted(self.terms.items(), key=lambda t: t[0].pairs))


def basis_of(p: Permutation) -> TLElement:
    """The basis element attached to a fully commutative permutation."""
    return TLElement.from_diagram(_diag(p))


def tle_multiply(a: TLElement, b: TLElement) -> TLElement:
    return a * b


def coefficient_of(e: TLElement, d: TLDiagram) -> LaurentPoly:
    """The coefficient of d in e, zero if absent."""
    if e.n != d.n:
        raise ValueError(f"rank mismatch: {e.n} != {d.n}")
    return e.coefficient_of(d)


def _partition(elements, key):
    groups: dict = {}
    for w in elements:
        groups.setdefault(key(w), []).append(w)
    return frozenset(frozenset(g) for g in groups.values())


@lru_cache(maxsize=1)
def calibrated_left_side() -> str:
    """The boundary whose arc sets cut out left cells: "top" or "bottom".

    Left cells of fully commutative elements are the classes of equal
    recording tableau.  Exactly one boundary reproduces that partition by
    arc-set equality at rank 4; the match is recomputed here rather than
    hard-coded so a convention change upstream cannot silently flip it.
    """
    fc = enumerate_fc(4)
    by_q = _partition(fc, lambda w: rs_tableaux(w)[1])
    by_top = _partition(fc, lambda w: top_arcs(_diag(w)))
    by_bottom = _partition(fc, lambda w: bottom_arcs(_diag(w)))
    if by_q == by_top and by_q != by_bottom:
        return "top"
    if by_q == by_bottom and by_q != by_top:
        return "bottom"
    raise RuntimeError("left-cell calibration is ambiguous at rank 4")


def side_arcs(d: TLDiagram, side: str) -> frozenset[tuple[int, int]]:
    if side == "top":
        return top_arcs(d)
    if side == "bottom":
        return bottom_arcs(d)
    raise ValueError(f"side must be 'top' or 'bottom', got {side!r}")


def _other(side: str) -> str:
    return "bottom" if side == "top" else "top"


def _require_fc(p: Permutation) -> None:
    if not is_fully_commutative(p):
        raise ValueError(f"{p.images} is not fully commutative")


def leq_L(x: Permutation, y: Permutation) -> bool:
    """Left preorder: arcs of x on the calibrated side all appear in y.

    >>> from .permutations import Permutation
    >>> leq_L(Permutation.identity(3), Permutation((2, 1, 3)))
    True
    >>> leq_L(Permutation((2, 1, 3)), Permutation((1, 3, 2)))
    False
    """
    _require_fc(x)
    _require_fc(y)
    side = calibrated_left_side()
    return side_arcs(_diag(x), side) <= side_arcs(_diag(y), side)


def leq_R(x: Permutation, y: Permutation) -> bool:
    """Right preorder: same as leq_L on the opposite boundary."""
    _require_fc(x)
    _require_fc(y)
    side = _other(calibrated_left_side())
    return side_arcs(_diag(x), side) <= side_arcs(_diag(y), side)


def cells(n: int, kind: str) -> tuple[frozenset[Permutation], ...]:
    """Partition the fully commutative elements of rank n into cells.

    kind "left" groups by calibrated-side arcs, "right" by the other
    boundary, "two_sided" by a-value.  Cells are returned in a
    deterministic order (by their lexicographically smallest member).
    """
    fc = enumerate_fc(n)
    if kind == "left":
        side = calibrated_left_side()
        key = lambda w: side_arcs(_diag(w), side)  # noqa: E731
    elif kind == "right":
        side = _other(calibrated_left_side())
        key = lambda w: side_arcs(_diag(w), side)  # noqa: E731
    elif kind == "two_sided":
        key = a_value
    else:
        raise ValueError(f"kind must be left, right or two_sided, got {kind!r}")
    groups: dict = {}
    for w in fc:
        groups.setdefault(key(w), []).append(w)
    return tuple(
        sorted(
            (frozenset(g) for g in groups.values()),
            key=lambda cell: min(w.images for w in cell),
        )
    )


def duflo_involution(cell) -> Permutation:
    """The unique involution in a left (or right) cell.

    Raises ValueError when the input holds no or several involutions,
    which signals that it is not actually a one-sided cell.
    """
    found = [w for w in cell if w.is_involution()]
    if len(found) != 1:
        raise ValueError(f"expected exactly one involution, found {len(found)}")
    return found[0]


def left_cell_involution(w: Permutation) -> Permutation:
    """The Duflo involution of the left cell of w.

    Same recording tableau as w, used as its insertion tableau too.
    """
    _require_fc(w)
    q = rs_tableaux(w)[1]
    return rs_inverse(q, q)


def theta_nonzero(x: Permutation, y: Permutation) -> bool:
    """Whether the translation functor of x keeps the simple of y alive.

    Holds when the calibrated-side arcs of the flipped diagram of x all
    appear on that side of the diagram of y.

    >>> from .permutations import Permutation
    >>> theta_nonzero(Permutation((1, 3, 2, 4)), Permutation((3, 4, 1, 2)))
    True
    >>> theta_nonzero(Permutation((2, 1, 3)), Permutation((1, 3, 2)))
    False
    """
    _require_fc(x)
    _require_fc(y)
    side = calibrated_left_side()
    return side_arcs(flip(_diag(x)), side) <= side_arcs(_diag(y), side)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
