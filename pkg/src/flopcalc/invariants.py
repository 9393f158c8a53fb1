"""Bounded brute-force verification of the classical invariant-ring generators.

Setup: V of dimension n, S of dimension 2, coordinates x in Hom(S, V) (an
n x 2 block), y in Hom(V, S) (2 x n) and p in End(S), with GL(S) acting by
x -> x g^{-1}, y -> g y, p -> g p g^{-1}.  The claim under test: the entries
of xy and xpy together with det p and tr p generate all GL(S)-invariant
polynomials.

Invariance is decided infinitesimally: a polynomial is invariant iff the four
gl_2 derivations annihilate it (characteristic zero, connected group), so
dimension counts are exact-integer certificates.  Scaling the rows of x and
the columns of y independently gives a Z^{2n} multigrading preserved by
GL(S); it cuts the linear algebra into small independent blocks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .linalg import int_rank, span_dimension

GL2_BASIS = ((0, 0), (0, 1), (1, 0), (1, 1))  # (a, b) indexing E_ab


class BlockSizeError(ValueError):
    """A multidegree block exceeded the configured limit; reduce degree bound."""


class PolyRingSpec:
    """Variable bookkeeping for fixed n: indexing, gradings, blocks."""

    def __init__(self, n: int, max_block: int = 20000):
        self.n = n
        self.max_block = max_block
        self.vars = ([("x", i, a) for i in range(n) for a in range(2)]
                     + [("y", a, i) for a in range(2) for i in range(n)]
                     + [("p", a, b) for a in range(2) for b in range(2)])
        self.index = {v: i for i, v in enumerate(self.vars)}
        self.nvars = len(self.vars)
        self._ops = [self._derivation(a, b) for a, b in GL2_BASIS]

    def _derivation(self, a: int, b: int):
        """Substitution table of the E_ab derivation: var -> [(coeff, var)]."""
        n = self.n
        table: dict[int, list[tuple[int, int]]] = {}

        def add(src, coeff, dst):
            table.setdefault(self.index[src], []).append((coeff, self.index[dst]))

        for i in range(n):
            add(("x", i, b), 1, ("x", i, a))
            add(("y", a, i), -1, ("y", b, i))
        for c in range(2):
            add(("p", c, b), 1, ("p", c, a))
        for d in range(2):
            add(("p", a, d), -1, ("p", b, d))
        return table

    def apply_operator(self, op: int, mono, coeff: int = 1) -> dict:
        """Image of a monomial under one gl_2 derivation, as a polynomial."""
        out: dict = {}
        table = self._ops[op]
        for v, e in enumerate(mono):
            if not e or v not in table:
                continue
            for c, w in table[v]:
                img = list(mono)
                img[v] -= 1
                img[w] += 1
                key = tuple(img)
                val = out.get(key, 0) + coeff * c * e
                if val:
                    out[key] = val
                else:
                    out.pop(key, None)
        return out

    def multidegree(self, mono):
        """(x-row degrees, y-column degrees, p-degree); all preserved by gl_2."""
        n = self.n
        xr = [0] * n
        yc = [0] * n
        pd = 0
        for (kind, i, j), e in zip(self.vars, mono):
            if not e:
                continue
            if kind == "x":
                xr[i] += e
            elif kind == "y":
                yc[j] += e
            else:
                pd += e
        return tuple(xr), tuple(yc), pd

    def monomials_of(self, md) -> list[tuple[int, ...]]:
        """All monomials in a multidegree block, in a fixed order."""
        xr, yc, pd = md
        n = self.n

        def splits(total, slots):
            if slots == 1:
                return [(total,)]
            return [(h,) + rest for h in range(total + 1)
                    for rest in splits(total - h, slots - 1)]

        xparts = [()]
        for i in range(n):
            xparts = [head + s for head in xparts for s in splits(xr[i], 2)]
        yparts = [()]
        for i in range(n):
            yparts = [head + s for head in yparts for s in splits(yc[i], 2)]
        # y variables are ordered (a, i): reorder the per-column splits
        ymons = []
        for part in yparts:
            mono = [0] * (2 * n)
            for i in range(n):
                mono[i] = part[2 * i]          # y[0][i]
                mono[n + i] = part[2 * i + 1]  # y[1][i]
            ymons.append(tuple(mono))
        pmons = splits_p(pd)
        size = len(xparts) * len(ymons) * len(pmons)
        if size > self.max_block:
            raise BlockSizeError(
                f"block {md} has {size} monomials (> {self.max_block}); reduce degree bound")
        return [x + y + p for x in xparts for y in ymons for p in pmons]

    def blocks_up_to(self, total: int):
        """All multidegrees with total degree at most ``total``."""
        n = self.n
        grid = range(total + 1)
        for xr in product(grid, repeat=n):
            sx = sum(xr)
            if sx > total:
                continue
            for yc in product(grid, repeat=n):
                sy = sx + sum(yc)
                if sy > total:
                    continue
                for pd in range(total - sy + 1):
                    yield xr, yc, pd


def splits_p(total: int) -> list[tuple[int, int, int, int]]:
    return [(a, b, c, total - a - b - c)
            for a in range(total + 1)
            for b in range(total - a + 1)
            for c in range(total - a - b + 1)]


def _poly_mul(f: dict, g: dict) -> dict:
    out: dict = {}
    for m1, c1 in f.items():
        for m2, c2 in g.items():
            key = tuple(a + b for a, b in zip(m1, m2))
            val = out.get(key, 0) + c1 * c2
            if val:
                out[key] = val
            else:
                out.pop(key, None)
    return out


def generator_set(spec: PolyRingSpec, omit=()) -> dict[str, dict]:
    """The 2n^2 + 2 classical generators as explicit polynomials.

    ``omit`` drops named generators (for negative controls), e.g. "detp".
    """
    n = spec.n
    ix = spec.index
    gens: dict[str, dict] = {}

    def mono(*vs):
        m = [0] * spec.nvars
        for v in vs:
            m[ix[v]] += 1
        return tuple(m)

    for i in range(n):
        for j in range(n):
            gens[f"xy[{i}][{j}]"] = {}
            gens[f"xpy[{i}][{j}]"] = {}
            for a in range(2):
                key = mono(("x", i, a), ("y", a, j))
                gens[f"xy[{i}][{j}]"][key] = gens[f"xy[{i}][{j}]"].get(key, 0) + 1
                for b in range(2):
                    key = mono(("x", i, a), ("p", a, b), ("y", b, j))
                    gens[f"xpy[{i}][{j}]"][key] = gens[f"xpy[{i}][{j}]"].get(key, 0) + 1
    gens["trp"] = {mono(("p", 0, 0)): 1, mono(("p", 1, 1)): 1}
    gens["detp"] = {mono(("p", 0, 0), ("p", 1, 1)): 1,
                    mono(("p", 0, 1), ("p", 1, 0)): -1}
    for name in omit:
        gens.pop(name)
    return gens


def is_invariant(spec: PolyRingSpec, poly: dict) -> bool:
    """Machine check that all four gl_2 derivations annihilate a polynomial."""
    for op in range(4):
        acc: dict = {}
        for mono, coeff in poly.items():
            for key, val in spec.apply_operator(op, mono, coeff).items():
                tot = acc.get(key, 0) + val
                if tot:
                    acc[key] = tot
                else:
                    acc.pop(key, None)
        if acc:
            return False
    return True


def invariant_dimension(spec: PolyRingSpec, md) -> int:
    """Dimension of the GL(S)-invariants in one multidegree block.

    The simultaneous kernel of the four derivations on the monomial basis;
    rank is computed fraction-free over the integers.
    """
    basis = spec.monomials_of(md)
    if not basis:
        return 0
    rows = []
    for op in range(4):
        mat: dict = {}  # target monomial -> row over source basis
        for c, mono in enumerate(basis):
            for key, val in spec.apply_operator(op, mono).items():
                mat.setdefault(key, [0] * len(basis))[c] = val
        rows.extend(mat.values())
    return len(basis) - int_rank(rows)


def _product_exponents(gmds, target):
    """Exponent vectors over generators whose multidegrees sum to ``target``."""
    out = []

    def sub(md, g, mult):
        xr = tuple(a - mult * b for a, b in zip(md[0], g[0]))
        yc = tuple(a - mult * b for a, b in zip(md[1], g[1]))
        pd = md[2] - mult * g[2]
        if pd < 0 or any(v < 0 for v in xr) or any(v < 0 for v in yc):
            return None
        return xr, yc, pd

    def rec(idx, remaining, chosen):
        if all(v == 0 for v in remaining[0]) and all(v == 0 for v in remaining[1]) \
                and remaining[2] == 0:
            out.append(tuple(chosen))
            return
        if idx == len(gmds):
            return
        mult = 0
        rem = remaining
        while rem is not None:
            rec(idx + 1, rem, chosen + [mult])
            mult += 1
            rem = sub(remaining, gmds[idx], mult)

    rec(0, target, [])
    return out


def subalgebra_dimension(spec: PolyRingSpec, gens: dict, md) -> int:
    """Dimension of the span of generator products landing in a block."""
    basis = spec.monomials_of(md)
    if not basis:
        return 0
    names = sorted(gens)
    gmds = [spec.multidegree(next(iter(gens[n]))) for n in names]
    pos = {m: i for i, m in enumerate(basis)}
    vectors = []
    for expo in _product_exponents(gmds, md):
        poly = {tuple([0] * spec.nvars): 1}
        for name, e in zip(names, expo):
            for _ in range(e):
                poly = _poly_mul(poly, gens[name])
        if poly:
            vectors.append(poly)
    return span_dimension(vectors, pos)


@dataclass
class GeneratorReport:
    n: int
    max_total_degree: int
    omitted: tuple
    blocks_checked: int = 0
    mismatches: list = field(default_factory=list)  # (md, invariant dim, span dim)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_generators(n: int, max_total_degree: int, omit=(),
                      max_block: int = 20000) -> GeneratorReport:
    """Compare invariant and generated dimensions over every block in range.

    A discrepancy is a report outcome, not an error; each mismatch carries
    the offending multidegree and both dimensions.
    """
    spec = PolyRingSpec(n, max_block)
    gens = generator_set(spec, omit)
    for name, poly in generator_set(spec).items():
        if not is_invariant(spec, poly):
            raise AssertionError(f"generator {name} is not invariant")
    report = GeneratorReport(n, max_total_degree, tuple(omit))
    for md in spec.blocks_up_to(max_total_degree):
        inv = invariant_dimension(spec, md)
        sub = subalgebra_dimension(spec, gens, md)
        report.blocks_checked += 1
        if inv != sub:
            report.mismatches.append((md, inv, sub))
    return report
