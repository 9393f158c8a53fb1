"""Grade-restriction windows: generation, membership and weight-set checks.

Three window families for GL_k acting on the spaces of the flop:

* ``W``      -- weights gamma with 0 <= gamma_k <= ... <= gamma_1 <= n - k,
                the Kapranov exceptional-collection weights, C(n, k) of them;
* ``Wprime`` -- k = 2 only: the same box relaxed by one, gamma_1 <= n - 1;
* ``box``    -- general k: 0 <= gamma_k <= ... <= gamma_1 <= n - 1.

Windows are materialised as explicit finite sets: desk scale, and the
acceptance checks compare sets for equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .characters import VirtualCharacter, cauchy_exterior, tensor
from .weights import dual_weight

FAMILIES = ("W", "Wprime", "box")


@dataclass(frozen=True)
class WindowSet:
    family: str
    k: int
    n: int
    members: frozenset

    def __contains__(self, w) -> bool:
        return tuple(w) in self.members

    def sorted_members(self) -> list[tuple[int, ...]]:
        """Canonical serialisation order: lexicographic."""
        return sorted(self.members)


def _box(k: int, bound: int) -> set[tuple[int, ...]]:
    """All weakly decreasing nonnegative length-k tuples with parts <= bound."""
    out = {()}
    for _ in range(k):
        out = {(first,) + rest
               for rest in out
               for first in range((rest[0] if rest else 0), bound + 1)}
    return out


def generate(family: str, k: int, n: int) -> WindowSet:
    """Materialise a window family for GL_k at dimension n."""
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got k={k}, n={n}")
    if family == "W":
        members = _box(k, n - k)
    elif family == "Wprime":
        if k != 2:
            raise ValueError("the Wprime family is defined for k = 2 only")
        members = _box(k, n - 1)
    elif family == "box":
        members = _box(k, n - 1)
    else:
        raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")
    return WindowSet(family, k, n, frozenset(members))


def membership(w, ws: WindowSet) -> bool:
    w = tuple(w)
    if len(w) != ws.k:
        raise ValueError(f"weight {w} has length {len(w)}, window expects {ws.k}")
    return w in ws.members


class KoszulWindow(NamedTuple):
    weights: frozenset
    convention: str


def koszul_restriction_weights(k: int, n: int) -> KoszulWindow:
    """GL(S2) irreducibles occurring in the exterior algebra on Hom(S2, V/S1)^v.

    Collected through the Cauchy identity over all exterior degrees
    m = 0 .. k(n-k) with rank(S2) = k and dim(V/S1) = n - k.  Whether the
    literal weight set or its dual matches the window is detected rather than
    assumed, and the winning convention is reported alongside the set.
    """
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got k={k}, n={n}")
    collected = set()
    for m in range(k * (n - k) + 1):
        for a_weight, _b_part in cauchy_exterior(m, k, n - k):
            collected.add(a_weight)
    primal = frozenset(collected)
    dual = frozenset(dual_weight(w) for w in collected)
    target = generate("W", k, n).members
    if primal == target:
        return KoszulWindow(primal, "cauchy-box")
    if dual == target:
        return KoszulWindow(dual, "dual")
    return KoszulWindow(primal, "undetermined")


OC_FACTORS = ((0, 0), (1, 0), (1, 1))  # trivial, S2, det S2


class TensorCheck(NamedTuple):
    matches: bool
    produced: frozenset
    expected: frozenset


def oc_tensor_check(n: int, factors: Iterable[tuple[int, int]] = OC_FACTORS) -> TensorCheck:
    """Tensor the k = 2 window ``W`` by the kernel weights and compare to ``Wprime``.

    ``factors`` defaults to the restriction weights of the fibre-product
    kernel: trivial, S2 and det S2.  Returns the verdict together with both
    weight sets so failures carry witnesses.
    """
    if n <= 2:
        raise ValueError("need n > 2")
    produced = set()
    for w in generate("W", 2, n).members:
        cw = VirtualCharacter.irreducible(w)
        for f in factors:
            produced.update(tensor(cw, VirtualCharacter.irreducible(tuple(f))).support())
    expected = generate("Wprime", 2, n).members
    return TensorCheck(frozenset(produced) == expected, frozenset(produced), expected)
