"""Exact character algebra for products of general linear groups.

Irreducible characters are labelled by highest weights: weakly decreasing
integer tuples, one block per GL factor.  Torus-weight multisets are the
universal internal representation; tensor products, exterior and symmetric
powers are computed from them and decomposed by highest-weight stripping, so
Littlewood-Richardson numbers are recovered rather than tabulated.  All
arithmetic is exact.
"""

from __future__ import annotations

from collections import Counter
from functools import cache
from itertools import product
from math import comb

from .weights import (check_weight, conjugate_partition, dual_weight, is_weight,
                      pad, partitions_in_box, strip)


def schur_dim(w) -> int:
    """Dimension of the irreducible GL_k module with highest weight ``w``.

    Weyl dimension formula: prod_{i<j} (w_i - w_j + j - i) / (j - i).
    """
    w = check_weight(w)
    num = den = 1
    k = len(w)
    for i in range(k):
        for j in range(i + 1, k):
            num *= w[i] - w[j] + j - i
            den *= j - i
    return num // den


@cache
def _partition_weights(lam: tuple[int, ...], k: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Torus weights of the Schur module of shape ``lam`` for GL_k.

    Enumerated through the branching rule GL_k -> GL_{k-1}: chains of
    interlacing partitions are in bijection with semistandard tableaux, and
    the i-th coordinate of a weight counts the letter i.  ``lam`` carries no
    trailing zeros and at most k parts.
    """
    if k == 0:
        return (((), 1),) if not lam else ()
    full = pad(lam, k)
    out: Counter = Counter()
    for mu in product(*(range(full[i + 1], full[i] + 1) for i in range(k - 1))):
        last = sum(full) - sum(mu)
        for wt, m in _partition_weights(strip(mu), k - 1):
            out[wt + (last,)] += m
    return tuple(sorted(out.items()))


def torus_weights(w) -> Counter:
    """Full torus-weight multiset of the irreducible with highest weight ``w``.

    Negative parts are handled by a det-power shift: translate so all parts
    are nonnegative, enumerate tableaux, untwist.  The multiset cardinality
    equals ``schur_dim(w)``.
    """
    w = check_weight(w)
    k = len(w)
    if k == 0:
        return Counter({(): 1})
    shift = w[-1]
    lam = strip(p - shift for p in w)
    out: Counter = Counter()
    for wt, m in _partition_weights(lam, k):
        out[tuple(c + shift for c in wt)] += m
    return out


def _blocks(key, ranks):
    out, i = [], 0
    for r in ranks:
        out.append(tuple(key[i:i + r]))
        i += r
    return out


def key_torus_weights(key, ranks) -> Counter:
    """Torus weights of an irreducible of a product group (concatenated)."""
    acc = Counter({(): 1})
    for block in _blocks(key, ranks):
        nxt: Counter = Counter()
        for head, m in acc.items():
            for wt, mm in torus_weights(block).items():
                nxt[head + wt] += m * mm
        acc = nxt
    return acc


class VirtualCharacter:
    """Formal integer combination of irreducibles of GL_{r_1} x ... x GL_{r_m}.

    ``ranks`` lists the factor ranks; each key concatenates one weakly
    decreasing weight per factor.  Zero multiplicities are never stored, and
    negative multiplicities make the character virtual (a K-theory class).
    """

    __slots__ = ("ranks", "entries")

    def __init__(self, ranks, entries=()):
        self.ranks = (ranks,) if isinstance(ranks, int) else tuple(ranks)
        total = sum(self.ranks)
        items = entries.items() if hasattr(entries, "items") else entries
        ent: dict[tuple[int, ...], int] = {}
        for key, mult in items:
            key = tuple(int(c) for c in key)
            if len(key) != total:
                raise ValueError(f"key {key} has length {len(key)}, expected {total}")
            for block in _blocks(key, self.ranks):
                if not is_weight(block):
                    raise ValueError(f"key {key} is not dominant in block {block}")
            ent[key] = ent.get(key, 0) + int(mult)
        self.entries = {k: v for k, v in sorted(ent.items()) if v}

    @classmethod
    def irreducible(cls, key, ranks=None) -> "VirtualCharacter":
        key = tuple(key)
        return cls(ranks if ranks is not None else (len(key),), {key: 1})

    @classmethod
    def zero(cls, ranks) -> "VirtualCharacter":
        return cls(ranks, {})

    @property
    def rank(self) -> int:
        if len(self.ranks) != 1:
            raise ValueError("rank is only defined for a single GL factor")
        return self.ranks[0]

    def items(self):
        return self.entries.items()

    def support(self) -> frozenset:
        return frozenset(self.entries)

    def blocks(self, key):
        return _blocks(key, self.ranks)

    def is_genuine(self) -> bool:
        return all(m > 0 for m in self.entries.values())

    def dim(self) -> int:
        """Signed dimension (virtual dimension for K-classes)."""
        total = 0
        for key, m in self.entries.items():
            d = 1
            for block in _blocks(key, self.ranks):
                d *= schur_dim(block)
            total += m * d
        return total

    def torus(self) -> Counter:
        """Full signed torus-weight multiset."""
        out: Counter = Counter()
        for key, m in self.entries.items():
            for wt, mm in key_torus_weights(key, self.ranks).items():
                c = out[wt] + m * mm
                if c:
                    out[wt] = c
                else:
                    del out[wt]
        return out

    def __add__(self, other) -> "VirtualCharacter":
        if self.ranks != other.ranks:
            raise ValueError("rank mismatch")
        ent = dict(self.entries)
        for k, m in other.entries.items():
            ent[k] = ent.get(k, 0) + m
        return VirtualCharacter(self.ranks, ent)

    def __sub__(self, other) -> "VirtualCharacter":
        return self + (-1) * other

    def __rmul__(self, scalar: int) -> "VirtualCharacter":
        return VirtualCharacter(self.ranks, {k: scalar * m for k, m in self.entries.items()})

    def __eq__(self, other) -> bool:
        return (isinstance(other, VirtualCharacter)
                and self.ranks == other.ranks and self.entries == other.entries)

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __repr__(self) -> str:
        return f"VirtualCharacter({self.ranks}, {self.entries})"


def standard(k: int) -> VirtualCharacter:
    """Character of the defining representation of GL_k."""
    return VirtualCharacter.irreducible((1,) + (0,) * (k - 1))


def decompose(tw, ranks) -> VirtualCharacter:
    """Resolve a symmetric torus-weight multiset into irreducible characters.

    Repeatedly strips the lexicographically greatest weight present; for the
    character of a (virtual) representation that weight is dominant in every
    block and is the highest weight of a constituent.  Raises ``ValueError``
    when a selected maximal weight is not dominant, which means the input was
    not the restriction of a genuine symmetric character.
    """
    ranks = (ranks,) if isinstance(ranks, int) else tuple(ranks)
    left = {wt: m for wt, m in (tw.items() if hasattr(tw, "items") else tw) if m}
    found: dict[tuple[int, ...], int] = {}
    while left:
        top = max(left)
        if not all(is_weight(b) for b in _blocks(top, ranks)):
            raise ValueError(
                f"not a symmetric character: maximal weight {top} is not dominant")
        mult = left[top]
        found[top] = mult
        for wt, m in key_torus_weights(top, ranks).items():
            c = left.get(wt, 0) - m * mult
            if c:
                left[wt] = c
            else:
                left.pop(wt, None)
    return VirtualCharacter(ranks, found)


def tensor(a: VirtualCharacter, b: VirtualCharacter) -> VirtualCharacter:
    """Tensor product character, by torus-weight convolution and stripping."""
    if a.ranks != b.ranks:
        raise ValueError(f"rank mismatch: {a.ranks} vs {b.ranks}")
    ta, tb = a.torus(), b.torus()
    conv: Counter = Counter()
    for wa, ma in ta.items():
        for wb, mb in tb.items():
            conv[tuple(x + y for x, y in zip(wa, wb))] += ma * mb
    return decompose(conv, a.ranks)


def _power_dp(c: VirtualCharacter, m: int, coeff) -> VirtualCharacter:
    zero = (0,) * sum(c.ranks)
    dp: list[Counter] = [Counter() for _ in range(m + 1)]
    dp[0][zero] = 1
    for wt, mu in sorted(c.torus().items()):
        ndp: list[Counter] = [Counter() for _ in range(m + 1)]
        for j in range(m + 1):
            for i in range(j + 1):
                f = coeff(mu, i)
                if not f:
                    continue
                shift = tuple(x * i for x in wt)
                for w0, m0 in dp[j - i].items():
                    ndp[j][tuple(a + b for a, b in zip(w0, shift))] += m0 * f
        dp = ndp
    return decompose(dp[m], c.ranks)


def exterior_power(m: int, c: VirtualCharacter) -> VirtualCharacter:
    """Character of the m-th exterior power of a genuine representation.

    The m-th elementary symmetric combination of the torus-weight multiset,
    decomposed.  A weight of multiplicity mu contributes C(mu, i) copies of
    its i-fold sum.
    """
    if m < 0:
        raise ValueError("negative exterior power")
    if not c.is_genuine():
        raise ValueError("exterior power of a virtual character")
    return _power_dp(c, m, comb)


def symmetric_power(m: int, c: VirtualCharacter) -> VirtualCharacter:
    """Character of the m-th symmetric power of a genuine representation."""
    if m < 0:
        raise ValueError("negative symmetric power")
    if not c.is_genuine():
        raise ValueError("symmetric power of a virtual character")
    return _power_dp(c, m, lambda mu, i: comb(mu - 1 + i, i))


def cauchy_exterior(m: int, rank_a: int, dim_b: int) -> set[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Summands of the m-th exterior power of A tensor B, by the Cauchy identity.

    Returns all pairs (lam, lam') with lam a partition of m fitting in a
    ``rank_a`` x ``dim_b`` box (padded to a GL weight of length ``rank_a``)
    and lam' its conjugate, each occurring exactly once.  Empty for
    m > rank_a * dim_b.
    """
    return {(pad(lam, rank_a), conjugate_partition(lam))
            for lam in partitions_in_box(m, rank_a, dim_b)}


def dualize(c: VirtualCharacter) -> VirtualCharacter:
    """Dual character: negate and reverse the weight in every factor."""
    ent = {}
    for key, m in c.entries.items():
        new = ()
        for block in _blocks(key, c.ranks):
            new += dual_weight(block)
        ent[new] = m
    return VirtualCharacter(c.ranks, ent)
