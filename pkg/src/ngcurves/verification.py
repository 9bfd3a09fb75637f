"""Independent brute-force re-derivations of the production algorithms.

These are deliberately naive (enumeration instead of sieves, the definitional
canonical-module test instead of the gap reduction) and exist to certify the
fast paths: the test suite checks agreement on exhaustive small ranges, and
``ngcurves analyze --verify`` re-runs them on demand.  They live in the
shipped package, not the tests, so results stay user-auditable.
"""

from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Optional

from .canonical import canonical_generators
from .curve import Curve, Point
from .errors import DegreeTooLargeForOracleError, OracleRangeExceededError
from .numsg import NumericalSemigroup

BRUTE_DEGREE_LIMIT = 8
LAYERED_AN_LIMIT = 15
PF_FROBENIUS_LIMIT = 10**4


def brute_reachable_xs(curve: Curve, d: int) -> frozenset[int]:
    """First coordinates of all degree-d members, by enumerating every
    multiset of exactly d generators."""
    if d > BRUTE_DEGREE_LIMIT:
        raise DegreeTooLargeForOracleError(f"degree {d} > {BRUTE_DEGREE_LIMIT}")
    xs = [g.x for g in curve.generators]
    return frozenset(sum(combo) for combo in combinations_with_replacement(xs, d))


def brute_curve_contains(curve: Curve, p) -> bool:
    """Membership by exhaustive enumeration of generator multisets."""
    d = curve.degree(p)
    if d is None or d < 0 or p[0] < 0 or p[1] < 0:
        return False
    return p[0] in brute_reachable_xs(curve, d)


def omega_contains_definitional(curve: Curve, w, m_bound: Optional[int] = None) -> bool:
    """Canonical-module membership straight from the definition: the negated
    point must avoid the curve semigroup under every axis shift.

    Membership along a shift direction is monotone once it occurs, so testing
    shifts up to ``m_bound`` (defaulting past the stabilization point) is
    exhaustive.
    """
    curve._require_cm()
    if not curve.lattice_contains(w):
        return False
    w = Point(w[0], w[1])
    d = curve.degree(w)
    if m_bound is None:
        f1, f2 = curve.s1.frobenius, curve.s2.frobenius
        m_bound = (f1 + f2) // curve.a_n + abs(d) + 2
    neg = -w
    shifts = (Point(curve.a_n, 0), Point(0, curve.a_n))
    return not any(
        curve.contains(neg + Point(m * f.x, m * f.y))
        for f in shifts
        for m in range(m_bound + 1)
    )


def canonical_generators_layered(curve: Curve) -> frozenset[Point]:
    """Minimal canonical-module generators by degree-layer enumeration.

    Walks the degree layers from the least possible degree up through +2,
    marking a member as generated when it is a lower-layer member plus a
    curve generator; unmarked members are the generators.  Any member with a
    coordinate above a_n is generated by an axis translate, so nothing can
    appear beyond degree 2; a hit in the top layer means the oracle itself is
    out of range.
    """
    curve._require_cm()
    an = curve.a_n
    if an > LAYERED_AN_LIMIT:
        raise OracleRangeExceededError(f"a_n = {an} > {LAYERED_AN_LIMIT}")
    f1, f2 = curve.s1.frobenius, curve.s2.frobenius
    dmin = -((f1 + f2) // an)
    gens_out = []
    prev_layer: set[Point] = set()
    for d in range(dmin, 3):
        layer = set()
        for x in range(-f1, d * an + f2 + 1):
            w = Point(x, d * an - x)
            if omega_contains_definitional(curve, w):
                layer.add(w)
        for w in sorted(layer):
            if not any(w - g in prev_layer for g in curve.generators):
                if d == 2:
                    raise OracleRangeExceededError(
                        f"unexpected canonical generator {w} at the top layer"
                    )
                gens_out.append(w)
        prev_layer = layer
    return frozenset(gens_out)


def pf_brute(sg: NumericalSemigroup) -> frozenset[int]:
    """Pseudo-Frobenius numbers by scanning every gap against every member
    up to the stabilization point."""
    fro = sg.frobenius
    if fro > PF_FROBENIUS_LIMIT:
        raise OracleRangeExceededError(f"Frobenius number {fro} too large")
    if fro < 0:
        return frozenset()
    out = []
    for x in range(fro + 1):
        if sg.contains(x):
            continue
        members = (s for s in range(1, x + sg.conductor + 1) if sg.contains(s))
        if all(sg.contains(x + s) for s in members):
            out.append(x)
    return frozenset(out)


def cross_check(curve: Curve) -> list[str]:
    """Re-derive a curve's invariants with the oracles; returns descriptions
    of any disagreements (empty means everything matched)."""
    problems = []
    for label, sg in (("first", curve.s1), ("second", curve.s2)):
        if sg.frobenius <= 2000:
            if pf_brute(sg) != sg.pseudo_frobenius():
                problems.append(f"pseudo-Frobenius mismatch on the {label} projection")
    for d in range(0, 5):
        fast = frozenset(
            x for x in range(d * curve.a_n + 1) if curve.contains(Point(x, d * curve.a_n - x))
        )
        if fast != brute_reachable_xs(curve, d):
            problems.append(f"membership mismatch at degree {d}")
    if curve.is_cm():
        data = canonical_generators(curve)
        for v in data.gens:
            if not omega_contains_definitional(curve, v):
                problems.append(f"{v} is not a canonical-module member definitionally")
            for g in curve.generators:
                if omega_contains_definitional(curve, v - g):
                    problems.append(f"{v} is not minimal: {v} - {g} is a member")
        if len(data.gens) != curve.cm_type():
            problems.append("generator count disagrees with the Cohen-Macaulay type")
        if curve.is_gorenstein_symmetry() != (curve.cm_type() == 1):
            problems.append("symmetry test disagrees with type 1")
        if curve.a_n <= LAYERED_AN_LIMIT:
            if canonical_generators_layered(curve) != frozenset(data.gens):
                problems.append("layered generator enumeration disagrees")
    else:
        witness = curve.find_non_cm_witness(curve.witness_degree_bound())
        if witness is not None and not curve.validate_witness(witness):
            problems.append(f"witness {witness} fails its defining conditions")
    return problems
