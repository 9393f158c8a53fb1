"""Graded term lists: equivariant summands of complexes with degree bookkeeping.

Differentials are never represented; a complex is a multiset of terms per
degree.  Every term records two gradings separately:

* ``hdeg``    -- the naive homological position (a Koszul term Lambda^j sits
                 at -j, a derived pushforward adds its cohomological degree);
* ``rcharge`` -- the accumulated R-charge of the sections that produced the
                 term (a Koszul step against a section of R-charge r
                 contributes -r).

The single column index used for display and cancellation is the flattened
degree ``hdeg - rcharge``: it places a differential built from a section of
R-charge r a total of r - 1 steps further, so every differential has total
degree 1.  A multiplication map of R-charge 4 between two trivial summands,
for instance, connects flattened degrees 3 and 0.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from collections import Counter

from .characters import VirtualCharacter
from .weights import check_weight


def _split_det(w):
    """Normalise a rank-2 weight: last part moves into a det twist."""
    w = check_weight(w)
    c = w[-1]
    return tuple(p - c for p in w), c


@dataclass(frozen=True, order=True)
class BundleTerm:
    """One summand S^s1(S1) (x) S^s2(S2) (x) O(a, b) with its degrees.

    ``s1`` and ``s2`` are stored in canonical form (last part zero), the
    overflow living in ``twist = (a, b)`` with O(a, b) = (det S1)^a (det S2)^b.
    """

    s1: tuple[int, ...]
    s2: tuple[int, ...]
    twist: tuple[int, int]
    hdeg: int
    rcharge: int

    @classmethod
    def make(cls, s1, s2, a=0, b=0, hdeg=0, rcharge=0) -> "BundleTerm":
        s1c, da = _split_det(s1)
        s2c, db = _split_det(s2)
        return cls(s1c, s2c, (a + da, b + db), hdeg, rcharge)

    @property
    def flat(self) -> int:
        return self.hdeg - self.rcharge

    def value(self):
        """Equivariant content, forgetting degrees; the cancellation key."""
        return (self.s1, self.s2, self.twist)

    def actual_weights(self):
        """The honest (S1, S2) highest weights, twists folded back in."""
        a, b = self.twist
        return (tuple(p + a for p in self.s1), tuple(p + b for p in self.s2))

    def shifted(self, dh=0, dr=0) -> "BundleTerm":
        return replace(self, hdeg=self.hdeg + dh, rcharge=self.rcharge + dr)

    def text(self) -> str:
        f1, a = _factor_text("S1", self.s1[0], self.twist[0])
        f2, b = _factor_text("S2", self.s2[0], self.twist[1])
        name = "*".join(f for f in (f1, f2) if f) or "O"
        if a or b:
            name += f"({a},{b})"
        return name

    def to_json(self) -> dict:
        return {"s1": list(self.s1), "s2": list(self.s2),
                "twist": list(self.twist), "hdeg": self.hdeg, "rcharge": self.rcharge}


def _factor_text(sym: str, c: int, a: int):
    """Render S^(c,0)(S) (det S)^a, preferring the dual form when it absorbs
    the twist: S^(c,0) (det)^(-c) is Sym^c of the dual."""
    if c == 0:
        return "", a
    if a <= -c:
        base = f"{sym}^v" if c == 1 else f"Sym^{c} {sym}^v"
        return base, a + c
    base = sym if c == 1 else f"Sym^{c} {sym}"
    return base, a


@dataclass(frozen=True, order=True)
class HTerm:
    """One GL(H)-equivariant summand S^weight(H) of a pushed-down resolution.

    ``pdeg`` counts exterior factors drawn from the degree-2 coordinate block
    and drives the det-twist correction applied when H is specialised to
    Hom(S2, S1).
    """

    weight: tuple[int, ...]
    hdeg: int
    rcharge: int
    pdeg: int

    @property
    def flat(self) -> int:
        return self.hdeg - self.rcharge

    def value(self):
        return (self.weight,)

    def shifted(self, dh=0, dr=0) -> "HTerm":
        return replace(self, hdeg=self.hdeg + dh, rcharge=self.rcharge + dr)

    def text(self) -> str:
        return _h_text(self.weight)

    def to_json(self) -> dict:
        return {"weight": list(self.weight), "hdeg": self.hdeg,
                "rcharge": self.rcharge, "pdeg": self.pdeg}


def _h_text(w) -> str:
    d = len(w)
    c = w[-1]
    base = tuple(p - c for p in w)
    ones = sum(1 for p in base if p == 1)
    if base == (0,) * d:
        pass
    elif set(base) <= {0, 1}:
        # exterior-power form; L^j H (det)^c equals L^(d-j) H^v (det)^(c+1),
        # so one flip to the dual absorbs a negative det power
        j, dual = ones, False
        if c < 0:
            j, dual, c = d - j, True, c + 1
        sym = "H^v" if dual else "H"
        name = sym if j == 1 else f"L^{j} {sym}"
        return name if c == 0 else f"{name}(det H)^{c}"
    elif base[1:] == (0,) * (d - 1):
        m = base[0]
        name = f"Sym^{m} H"
        return name if c == 0 else f"{name}(det H)^{c}"
    elif base[:-1] == (base[0],) * (d - 1):
        m = base[0]
        name = f"Sym^{m} H^v"
        cc = c + m
        return name if cc == 0 else f"{name}(det H)^{cc}"
    else:
        return f"S{tuple(w)}H"
    return "O" if c == 0 else f"(det H)^{c}"


class GradedTermList:
    """A complex with the differentials forgotten: a labelled bag of terms."""

    def __init__(self, label: str, terms):
        self.label = label
        self.terms = tuple(sorted(terms))

    def columns(self, by: str = "hdeg") -> dict[int, tuple]:
        """Group terms by ``hdeg`` or by the flattened degree ``flat``."""
        out: dict[int, list] = {}
        for t in self.terms:
            out.setdefault(getattr(t, by), []).append(t)
        return {d: tuple(sorted(col)) for d, col in sorted(out.items())}

    def value_columns(self, by: str = "flat") -> dict[int, tuple]:
        """Columns of equivariant content only; the comparison key for golden
        tables and for residuals of different provenance."""
        out: dict[int, list] = {}
        for t in self.terms:
            out.setdefault(getattr(t, by), []).append(t.value())
        return {d: tuple(sorted(col)) for d, col in sorted(out.items())}

    def shifted(self, dh=0, dr=0, label=None) -> "GradedTermList":
        return GradedTermList(label or self.label,
                              (t.shifted(dh, dr) for t in self.terms))

    def euler_character(self, by: str = "flat", offset: int = 0) -> VirtualCharacter:
        """Alternating sum of the columns as a two-factor virtual character."""
        acc: Counter = Counter()
        for t in self.terms:
            w1, w2 = t.actual_weights()
            acc[w1 + w2] += -1 if (getattr(t, by) + offset) % 2 else 1
        return VirtualCharacter((2, 2), acc)

    def to_json(self, by: str = "hdeg") -> dict:
        return {"label": self.label,
                "columns": [{"hdeg": d, "terms": [t.to_json() for t in col]}
                            for d, col in self.columns(by).items()]}

    def text_table(self, by: str = "flat") -> str:
        lines = [f"{self.label}:"]
        for d, col in self.columns(by).items():
            body = " + ".join(t.text() for t in col)
            lines.append(f"  [{d}] {body}")
        return "\n".join(lines)

    def __eq__(self, other) -> bool:
        return isinstance(other, GradedTermList) and self.terms == other.terms

    def __repr__(self) -> str:
        return f"GradedTermList({self.label!r}, {len(self.terms)} terms)"
