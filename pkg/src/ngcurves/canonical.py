"""Canonical module of a Cohen-Macaulay curve.

The canonical module is realized inside the lattice as the set of points w
with -w.x a gap of the first projection and -w.y a gap of the second: a point
survives every shift along an axis exactly when the opposite coordinate's
negation stays outside the corresponding projection.  That reduction makes
membership O(1); the definitional bounded check lives in
``ngcurves.verification`` as an independent oracle.

On top of the membership predicate this module computes the minimal
generators V, the minimal-degree part V_min, levelness, the ``S - V``
predicate, the nearly-Gorenstein test (every curve generator splits as
u + v with v in V_min and u in S - V) and minimal covering movements.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple, Optional

from . import _kernels as kernels
from .curve import Curve, Point, Sequence


@dataclass(frozen=True)
class CanonicalData:
    """Minimal generators of the canonical module with their degrees.

    ``gens`` is sorted by first coordinate; ``degrees`` is parallel to it.
    ``vmin`` is the subset of minimal degree and ``level`` records whether all
    degrees coincide.
    """

    gens: tuple[Point, ...]
    degrees: tuple[int, ...]
    vmin: tuple[Point, ...]
    level: bool


class Translate(NamedTuple):
    u: Point
    covered: tuple[int, ...]


@dataclass(frozen=True)
class MovementChain:
    """A minimum family of shifts whose V_min translates cover all generators.

    ``translates`` is ordered by first coordinate of u; ``movement`` lists the
    first coordinates themselves.
    """

    translates: tuple[Translate, ...]
    movement: tuple[int, ...]
    covers_all: bool


def omega_contains(curve: Curve, w) -> bool:
    """Membership of a lattice point in the canonical module."""
    curve._require_cm()
    if not curve.lattice_contains(w):
        return False
    return not curve.s1.contains(-w[0]) and not curve.s2.contains(-w[1])


def canonical_generators(curve: Curve) -> CanonicalData:
    """Minimal generators of the canonical module, computed over the complete
    finite box -F(S1) <= x <= a_n, -F(S2) <= y <= a_n.

    Any member with x > a_n stays a member after subtracting (a_n, 0), and
    symmetrically in y, so no minimal generator escapes the box; the lower
    bounds are forced by membership itself.
    """
    curve._require_cm()
    if curve._canonical is not None:
        return curve._canonical
    an = curve.a_n
    raw = kernels.canonical_box(
        curve._m1,
        curve._m2,
        curve.s1.frobenius,
        curve.s2.frobenius,
        an,
        [0, *curve.seq.values],
    )
    gens = tuple(Point(x, y) for x, y in raw)
    degrees = tuple((p.x + p.y) // an for p in gens)
    dmin = min(degrees)
    vmin = tuple(p for p, d in zip(gens, degrees) if d == dmin)
    data = CanonicalData(
        gens=gens, degrees=degrees, vmin=vmin, level=len(vmin) == len(gens)
    )
    curve._canonical = data
    return data


def is_level(curve: Curve) -> bool:
    """True iff all canonical generators share one degree."""
    return canonical_generators(curve).level


def in_s_minus_v(curve: Curve, u) -> bool:
    """True iff u is a lattice point with u + v in the curve semigroup for
    every canonical generator v."""
    data = canonical_generators(curve)
    if not curve.lattice_contains(u):
        return False
    u = Point(u[0], u[1])
    return all(curve.contains(u + v) for v in data.gens)


def is_nearly_gorenstein(curve: Curve) -> bool:
    """Every curve generator must split as u + v with v of minimal degree and
    u in S - V; u is determined by the pair, so no open search is needed."""
    if curve._ng is not None:
        return curve._ng
    data = canonical_generators(curve)
    curve._ng = all(
        any(in_s_minus_v(curve, g - v) for v in data.vmin)
        for g in curve.generators
    )
    return curve._ng


def _movement_candidates(curve: Curve) -> list[tuple[Point, tuple[int, ...]]]:
    """Valid shifts u = g - v together with the generator coordinates their
    V_min translate covers, deduplicated and ordered by u.x."""
    data = canonical_generators(curve)
    seen: dict[Point, tuple[int, ...]] = {}
    for g in curve.generators:
        for v in data.vmin:
            u = g - v
            if u not in seen and in_s_minus_v(curve, u):
                seen[u] = tuple(sorted(w.x + u.x for w in data.vmin))
    return sorted(seen.items())


def find_movement(curve: Curve) -> Optional[MovementChain]:
    """A minimum-cardinality covering movement, or None when the curve is not
    nearly Gorenstein.

    Ties break to the lexicographically smallest list of u.x values; a cover
    of size at most n + 1 always exists for a nearly Gorenstein curve (one
    shift per generator), so the exhaustive search is tiny.
    """
    if not is_nearly_gorenstein(curve):
        return None
    universe = frozenset(g.x for g in curve.generators)
    cands = _movement_candidates(curve)
    for size in range(1, len(cands) + 1):
        for combo in combinations(cands, size):
            hit = set()
            for _, covered in combo:
                hit.update(covered)
            if universe <= hit:
                return MovementChain(
                    translates=tuple(Translate(u, covered) for u, covered in combo),
                    movement=tuple(u.x for u, _ in combo),
                    covers_all=True,
                )
    raise AssertionError("nearly Gorenstein curve must admit a covering movement")


def render_movement(chain: MovementChain, seq: Sequence) -> str:
    """One line per chain: entries 0, a_1, ..., a_n with covered entries
    bracketed as maximal runs, arrows labeled with consecutive u.x offsets.
    """
    entries = (0,) + tuple(seq.values)
    parts = []
    for t in chain.translates:
        covered = set(t.covered)
        bits = []
        i = 0
        while i < len(entries):
            if entries[i] in covered:
                j = i
                while j + 1 < len(entries) and entries[j + 1] in covered:
                    j += 1
                bits.append("[" + ",".join(map(str, entries[i : j + 1])) + "]")
                i = j + 1
            else:
                bits.append(str(entries[i]))
                i += 1
        parts.append(",".join(bits))
    out = [parts[0]]
    for prev, cur, part in zip(chain.translates, chain.translates[1:], parts[1:]):
        out.append(f" --({cur.u.x - prev.u.x:+d})--> ")
        out.append(part)
    return "".join(out)
