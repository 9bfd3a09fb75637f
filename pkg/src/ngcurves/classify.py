"""Per-sequence classification and the exhaustive scanner.

``analyze`` aggregates every invariant of one curve into a record.  ``scan``
classifies every strictly increasing gcd-1 sequence of a given length up to a
bound and compares the nearly-Gorenstein non-Gorenstein sequences it finds
against the closed-form family list in ``expected_ng``: the codimension-2
family k, k+1, 2k+1 and, for codimension 3, the sequence 1, 2, 3, 4 together
with the family 2k-1, 2k+1, 4k, 6k+1 and its dual.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from math import gcd
from multiprocessing import Pool
from typing import Optional

from .canonical import (
    MovementChain,
    canonical_generators,
    find_movement,
    is_nearly_gorenstein,
)
from .curve import Curve, Point, Sequence, as_sequence
from .errors import CapExceededError, OutOfFamilyRangeError, ValidationError

#: Hard scan ceiling; override with the NGCURVES_MAX_AN environment variable.
DEFAULT_MAX_AN_CAP = 200


@dataclass(frozen=True)
class ClassificationRecord:
    """Verdicts for one sequence.  Ring invariants are populated only for
    Cohen-Macaulay curves; ``witness`` only for non-Cohen-Macaulay ones
    (and only when the bounded search finds one)."""

    seq: Sequence
    cm: bool
    gorenstein: Optional[bool] = None
    nearly_gorenstein: Optional[bool] = None
    level: Optional[bool] = None
    cm_type: Optional[int] = None
    canonical_gens: Optional[tuple[Point, ...]] = None
    movement: Optional[MovementChain] = None
    witness: Optional[Point] = None

    @property
    def canonical_degrees(self) -> Optional[tuple[int, ...]]:
        if self.canonical_gens is None:
            return None
        an = self.seq.a_n
        return tuple((p.x + p.y) // an for p in self.canonical_gens)

    @property
    def vmin_size(self) -> Optional[int]:
        degrees = self.canonical_degrees
        if degrees is None:
            return None
        dmin = min(degrees)
        return sum(1 for d in degrees if d == dmin)


@dataclass(frozen=True)
class ScanReport:
    """Outcome of one exhaustive scan; ``verdict`` is True when the found
    nearly-Gorenstein non-Gorenstein set equals the expected one exactly."""

    n: int
    max_an: int
    records: tuple[ClassificationRecord, ...]
    ng_found: tuple[Sequence, ...]
    ng_expected: tuple[Sequence, ...]
    verdict: bool


def analyze(seq) -> ClassificationRecord:
    """Full classification of one sequence."""
    seq = as_sequence(seq)
    curve = Curve(seq)
    if not curve.is_cm():
        witness = curve.find_non_cm_witness(curve.witness_degree_bound())
        return ClassificationRecord(seq=seq, cm=False, witness=witness)
    data = canonical_generators(curve)
    return ClassificationRecord(
        seq=seq,
        cm=True,
        gorenstein=curve.is_gorenstein_symmetry(),
        nearly_gorenstein=is_nearly_gorenstein(curve),
        level=data.level,
        cm_type=curve.cm_type(),
        canonical_gens=data.gens,
        movement=find_movement(curve),
    )


_FAMILIES = {
    "alpha": (1, lambda k: (k, k + 1, 2 * k + 1)),
    "i_a": (1, lambda k: (k, k + 1, 2 * k + 1, 3 * k + 2)),
    "i_b": (1, lambda k: (2 * k - 1, 2 * k + 1, 4 * k, 6 * k + 1)),
    "ii_d": (2, lambda k: (k, k + 1, 2 * k + 1, 3 * k + 1)),
    "iv_b": (1, lambda k: (2 * k + 1, 4 * k, 4 * k + 2, 6 * k + 1)),
    "v_d": (2, lambda k: (k, 2 * k, 2 * k + 1, 3 * k + 1)),
}


def family(name: str, k: int) -> Sequence:
    """One-parameter sequence families by id.

    alpha: (k, k+1, 2k+1); i_a: (k, k+1, 2k+1, 3k+2);
    i_b: (2k-1, 2k+1, 4k, 6k+1); ii_d: (k, k+1, 2k+1, 3k+1), k >= 2;
    iv_b: (2k+1, 4k, 4k+2, 6k+1); v_d: (k, 2k, 2k+1, 3k+1), k >= 2.
    """
    if name not in _FAMILIES:
        raise OutOfFamilyRangeError(f"unknown family {name!r}")
    kmin, build = _FAMILIES[name]
    if k < kmin:
        raise OutOfFamilyRangeError(f"family {name!r} needs k >= {kmin} (got {k})")
    return Sequence(build(k))


def pair_family(name: str, a: int, b: int) -> tuple[Sequence, Point]:
    """Two-parameter non-Cohen-Macaulay families, with the closed-form
    witness point certifying non-Cohen-Macaulayness.

    i_c: (a, b, a+b, a+2b) for b >= a+3;  ii_e: (a, b, a+b, 2a+b) for
    b >= a+2;  iii: (a, b, a+b, 2b) for any a < b with b != 2.  All need
    gcd(a, b) = 1 and a >= 1.
    """
    if a < 1 or b <= a:
        raise OutOfFamilyRangeError(f"need 1 <= a < b (got a={a}, b={b})")
    if gcd(a, b) != 1:
        raise OutOfFamilyRangeError(f"need gcd(a, b) = 1 (got a={a}, b={b})")
    if name == "i_c":
        if b < a + 3:
            raise OutOfFamilyRangeError("family i_c needs b >= a + 3")
        seq = Sequence((a, b, a + b, a + 2 * b))
        witness = Point(a * (b - 1), 2 * b * b - a - 4 * b)
    elif name == "ii_e":
        if b < a + 2:
            raise OutOfFamilyRangeError("family ii_e needs b >= a + 2")
        seq = Sequence((a, b, a + b, 2 * a + b))
        witness = Point(a * (b - 1), b * b - 2 * b + a * b - 3 * a)
    elif name == "iii":
        if b == 2:
            raise OutOfFamilyRangeError("family iii needs b != 2")
        seq = Sequence((a, b, a + b, 2 * b))
        witness = Point(2 * a, 2 * b - 2 * a)
    else:
        raise OutOfFamilyRangeError(f"unknown pair family {name!r}")
    return seq, witness


def expected_ng(n: int, max_an: int) -> frozenset[Sequence]:
    """The classified nearly-Gorenstein non-Gorenstein sequences with a_n
    bounded, closed under duality (the scanner enumerates raw sequences)."""
    if n == 2:
        return frozenset()  # codimension 1 is a hypersurface, always Gorenstein
    if n == 3:
        return frozenset(
            Sequence((k, k + 1, 2 * k + 1))
            for k in range(1, (max_an - 1) // 2 + 1)
        )
    if n == 4:
        out = set()
        if max_an >= 4:
            out.add(Sequence((1, 2, 3, 4)))
        k = 1
        while 6 * k + 1 <= max_an:
            out.add(family("i_b", k))
            out.add(family("iv_b", k))  # the dual of i_b at the same k
            k += 1
        return frozenset(out)
    raise ValidationError(f"classification is known for n in {{2, 3, 4}} (got n={n})")


def _analyze_chunk(values_chunk) -> list[ClassificationRecord]:
    return [analyze(vals) for vals in values_chunk]


def max_an_cap() -> int:
    return int(os.environ.get("NGCURVES_MAX_AN", str(DEFAULT_MAX_AN_CAP)))


def scan(n: int, max_an: int, jobs: int = 1) -> ScanReport:
    """Classify every strictly increasing gcd-1 sequence of length n with
    a_n <= max_an and compare against ``expected_ng``.

    Records are ordered by sequence regardless of ``jobs``.
    """
    if n not in (2, 3, 4):
        raise ValidationError(f"scan supports n in {{2, 3, 4}} (got n={n})")
    cap = max_an_cap()
    if max_an > cap:
        raise CapExceededError(f"max_an={max_an} exceeds the cap {cap}")
    pool_values = [
        vals
        for vals in combinations(range(1, max_an + 1), n)
        if reduce(gcd, vals) == 1
    ]
    if jobs > 1 and len(pool_values) > 1:
        chunk = max(1, len(pool_values) // (jobs * 8))
        chunks = [
            pool_values[i : i + chunk] for i in range(0, len(pool_values), chunk)
        ]
        with Pool(jobs) as pool:
            parts = pool.map(_analyze_chunk, chunks)
        records = tuple(rec for part in parts for rec in part)
    else:
        records = tuple(analyze(vals) for vals in pool_values)
    ng_found = tuple(
        sorted(
            (r.seq for r in records if r.cm and r.nearly_gorenstein and not r.gorenstein),
            key=lambda s: s.values,
        )
    )
    ng_exp = tuple(sorted(expected_ng(n, max_an), key=lambda s: s.values))
    return ScanReport(
        n=n,
        max_an=max_an,
        records=records,
        ng_found=ng_found,
        ng_expected=ng_exp,
        verdict=ng_found == ng_exp,
    )
