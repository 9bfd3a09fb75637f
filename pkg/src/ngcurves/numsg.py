"""Exact computations on numerical semigroups ⟨a_1, ..., a_n⟩.

Membership, Frobenius number, Apéry sets, pseudo-Frobenius numbers and the
symmetry (gap-count) test.  Everything is decided by an integer sieve built
once per semigroup, so queries are O(1) and exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd

from . import _kernels as kernels
from .errors import (
    BaseNotInSemigroupError,
    CapExceededError,
    GcdNotOneError,
    NonPositiveError,
    NotStrictlyIncreasingError,
    SequenceTooShortError,
)

#: Largest accepted generator.  Sieve sizes grow like a_n**2, so anything
#: near this cap is already impractical; the cap catches accidental misuse.
GENERATOR_CAP = 10**6


def validate_generators(values) -> tuple[int, ...]:
    """Check positivity, strict increase, the size cap and gcd 1."""
    vals = tuple(int(v) for v in values)
    if not vals:
        raise SequenceTooShortError("at least one generator is required")
    if any(v <= 0 for v in vals):
        raise NonPositiveError(f"generators must be positive: {vals}")
    if any(a >= b for a, b in zip(vals, vals[1:])):
        raise NotStrictlyIncreasingError(
            f"generators must be strictly increasing: {vals}"
        )
    if vals[-1] > GENERATOR_CAP:
        raise CapExceededError(
            f"generator {vals[-1]} exceeds the cap {GENERATOR_CAP}"
        )
    g = reduce(gcd, vals)
    if g != 1:
        raise GcdNotOneError(f"gcd must be 1 (got {g})")
    return vals


def _sieve_limit(gens: tuple[int, ...]) -> int:
    # (a_1 - 1)(a_n - 1) - 1 bounds the Frobenius number for gcd 1, so this
    # covers every gap plus the 2*a_n slack the curve-level consumers query.
    return (gens[0] - 1) * (gens[-1] - 1) + 2 * gens[-1]


@dataclass(frozen=True)
class AperySet1D:
    """Least member of the semigroup in each residue class mod ``base``.

    ``elements[r]`` is the least member congruent to r, except that the
    class-0 representative is ``base`` itself rather than 0.
    """

    base: int
    elements: tuple[int, ...]


class NumericalSemigroup:
    """A numerical semigroup, immutable once constructed.

    The summand sieve is built eagerly, so instances can be shared freely
    across threads.
    """

    __slots__ = ("generators", "frobenius", "_m", "_minimal")

    def __init__(self, generators):
        self.generators = validate_generators(generators)
        self._m = kernels.min_summands(self.generators, _sieve_limit(self.generators))
        #: Largest integer not in the semigroup; -1 when 1 is a generator.
        self.frobenius = kernels.largest_gap(self._m)
        self._minimal = None

    @property
    def conductor(self) -> int:
        return self.frobenius + 1

    def contains(self, n: int) -> bool:
        """True iff n is a nonnegative integer combination of the generators."""
        if n < 0:
            return False
        if n >= len(self._m):
            return True  # the sieve extends past every gap
        return self._m[n] < kernels.UNREACHABLE

    def apery(self, s: int) -> AperySet1D:
        """Apéry set with respect to a nonzero member s."""
        if s <= 0 or not self.contains(s):
            raise BaseNotInSemigroupError(f"{s} is not a nonzero member")
        need = self.frobenius + s + 1
        m = self._m
        if need > len(m):
            m = kernels.extend_min_summands(m, self.generators, need)
        least = kernels.least_member_per_class(m, s)
        least[0] = s
        return AperySet1D(base=s, elements=tuple(least))

    def pseudo_frobenius(self) -> frozenset[int]:
        """All gaps x with x + s in the semigroup for every nonzero member s.

        Testing x + a_i for the generators alone suffices, since every
        nonzero member is a sum of generators.  Empty for the full semigroup.
        """
        if self.frobenius < 0:
            return frozenset()
        un = kernels.UNREACHABLE
        m = self._m
        return frozenset(
            x
            for x in range(self.frobenius + 1)
            if m[x] >= un and all(self.contains(x + g) for g in self.generators)
        )

    def is_symmetric(self) -> bool:
        """True iff exactly half the integers below the conductor are members."""
        un = kernels.UNREACHABLE
        m = self._m
        members = sum(1 for x in range(self.conductor) if m[x] < un)
        return 2 * members == self.conductor

    def minimal_generators(self) -> tuple[int, ...]:
        """The unique minimal generating set (members not sums of two nonzero members)."""
        if self._minimal is None:
            self._minimal = tuple(
                g
                for g in self.generators
                if not any(self.contains(g - h) for h in self.generators if h < g)
            )
        return self._minimal

    def __eq__(self, other) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.minimal_generators() == other.minimal_generators()

    def __hash__(self) -> int:
        return hash(self.minimal_generators())

    def __repr__(self) -> str:
        return f"NumericalSemigroup{self.generators}"
