"""Integer partitions and the combinatorial side of hypersurface s-numbers.

A partition sigma of n indexes the product of projective spaces
CP^{sigma_1} x ... x CP^{sigma_k} and its anticanonical Calabi-Yau
hypersurface.  The s-number of that hypersurface is minus the weighted
multinomial coefficient computed here, so the whole divisibility theory
of those s-numbers reduces to exact partition combinatorics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .numthy import (
    factorial_valuation,
    p_adic_digits,
    prime_power,
    primes_upto,
    valuation,
)


class Partition(tuple):
    """Unordered partition of a positive integer.

    Parts are stored weakly decreasing, so two partitions are equal (and
    hash equal) exactly when they are the same multiset.  Display output
    uses the increasing convention, e.g. ``(1,1,3)``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int]) -> "Partition":
        ordered = sorted(parts, reverse=True)
        if not ordered:
            raise ValueError("a partition needs at least one part")
        for part in ordered:
            if not isinstance(part, int) or part < 1:
                raise ValueError(f"parts must be positive integers, got {ordered}")
        return super().__new__(cls, ordered)

    @property
    def n(self) -> int:
        """The partitioned integer: sum of the parts."""
        return sum(self)

    @property
    def k(self) -> int:
        """Number of parts."""
        return len(self)

    @property
    def increasing(self) -> tuple[int, ...]:
        return tuple(reversed(self))

    @property
    def label(self) -> str:
        """Comma-separated increasing rendering, e.g. ``"1,1,3"``."""
        return ",".join(str(p) for p in self.increasing)

    def __repr__(self) -> str:
        return f"Partition(({self.label}))"

    def __str__(self) -> str:
        return f"({self.label})"

    def __reduce__(self):
        return (Partition, (tuple(self),))


def parse_partition(text: str) -> Partition:
    """Parse a comma-separated part list such as ``"1,1,3"``."""
    try:
        parts = [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise ValueError(f"not a comma-separated integer list: {text!r}") from None
    return Partition(parts)


def _iter_decreasing(remaining: int, max_part: int) -> Iterator[tuple[int, ...]]:
    # Raw reverse-lexicographic generator over plain tuples; hot loops
    # (full scans up to n = 60) stay clear of Partition construction.
    if remaining == 0:
        yield ()
        return
    top = min(remaining, max_part)
    for first in range(top, 0, -1):
        for rest in _iter_decreasing(remaining - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of ``n``, reverse-lexicographically.

    The order is on the weakly decreasing part tuples: ``(n)`` comes
    first and ``(1, ..., 1)`` last.  Generation is lazy; nothing forces
    the full list into memory.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    for raw in _iter_decreasing(n, n):
        yield Partition(raw)


def count_partitions(n: int) -> int:
    """Number of partitions of ``n``, by the bounded-part recurrence.

    Independent of the enumeration above, which makes it usable as a
    cross-check on the generator.
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    # table[m] = number of partitions of m with parts <= current bound
    table = [1] + [0] * n
    for part in range(1, n + 1):
        for m in range(part, n + 1):
            table[m] += table[m - part]
    return table[n]


def generator_partitions(n: int) -> Iterator[Partition]:
    """Partitions of ``n`` with every part at most ``n - 2``.

    Equivalently all partitions except ``(n)`` and ``(n-1, 1)``.  These
    index the hypersurfaces whose s-numbers enter the generator
    certificates; order matches :func:`enumerate_partitions`.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    for raw in _iter_decreasing(n, n - 2):
        yield Partition(raw)


def multinomial(sigma: Partition) -> int:
    """Exact multinomial coefficient n! / (sigma_1! ... sigma_k!)."""
    value = math.factorial(sigma.n)
    for part in sigma:
        value //= math.factorial(part)
    return value


def weighted_multinomial(sigma: Partition) -> int:
    """Multinomial of sigma times the product of ``(part + 1)**part``.

    This is the magnitude of the s-number of the anticanonical
    hypersurface in the product of projective spaces indexed by sigma
    (the s-number itself is the negative of this value).
    """
    value = multinomial(sigma)
    for part in sigma:
        value *= (part + 1) ** part
    return value


def multinomial_valuation(p: int, sigma: Iterable[int]) -> int:
    """Exponent of the prime ``p`` in the multinomial of sigma.

    Computed from factorial valuations, which keeps full scans over all
    partitions of n cheap: no big integers are materialised.
    """
    total = factorial_valuation(p, sum(sigma))
    for part in sigma:
        total -= factorial_valuation(p, part)
    return total


def weighted_multinomial_valuation(p: int, sigma: Iterable[int]) -> int:
    """Exponent of the prime ``p`` in ``weighted_multinomial(sigma)``."""
    sigma = tuple(sigma)
    total = multinomial_valuation(p, sigma)
    for part in sigma:
        total += part * valuation(p, part + 1)
    return total


def digit_partition(n: int, p: int) -> Partition:
    """Partition of ``n`` built from its base-``p`` digits.

    Contains ``a_i`` copies of ``p**i`` for each digit ``a_i`` of ``n``.
    """
    parts: list[int] = []
    power = 1
    for digit in p_adic_digits(n, p):
        parts.extend([power] * digit)
        power *= p
    return Partition(parts)


def split_prime_power(n: int, p: int) -> Partition:
    """For ``n = p**s``, the partition of ``n`` into ``p`` copies of ``p**(s-1)``."""
    pp = prime_power(n)
    if pp is None or pp[0] != p:
        raise ValueError(f"{n} is not a power of {p}")
    _, s = pp
    return Partition([p ** (s - 1)] * p)


def split_prime_power_successor(n: int, q: int) -> Partition:
    """For ``n = q**r + 1``, the partition into ``q`` copies of ``q**(r-1)`` and a 1."""
    pp = prime_power(n - 1)
    if pp is None or pp[0] != q:
        raise ValueError(f"{n} - 1 is not a power of {q}")
    _, r = pp
    return Partition([q ** (r - 1)] * q + [1])


@dataclass(frozen=True)
class DivisibilityEntry:
    """One verified divisibility statement about multinomials of partitions of n.

    ``kind`` is ``"coprime"`` (the digit partition's multinomial is prime
    to ``prime``), ``"power"`` (n is a power of ``prime``: every capped
    partition's multinomial is divisible by it, the balanced split
    exactly once) or ``"successor"`` (same with n - 1 a power of
    ``prime`` and the successor split as the exact-once witness).
    """

    prime: int
    kind: str
    witness: Partition
    witness_valuation: int
    scan_min: int | None
    ok: bool


@dataclass(frozen=True)
class DivisibilityReport:
    """Outcome of :func:`power_check` for a single ``n``."""

    n: int
    entries: tuple[DivisibilityEntry, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(entry.ok for entry in self.entries)


def power_check(n: int) -> DivisibilityReport:
    """Verify the prime-divisibility pattern of multinomials over the capped partitions.

    For each prime ``p <= n`` exactly one statement applies and is checked:

    * ``n != p**s`` and ``n != p**r + 1``: the multinomial of the base-p
      digit partition is not divisible by ``p``.
    * ``n == p**s``: every partition with parts at most ``n - 2`` has
      multinomial divisible by ``p``, and the split into ``p`` equal
      prime-power parts is divisible exactly once.
    * ``n == p**r + 1``: same, with the witness the split of ``n`` into
      ``p`` equal prime-power parts and a single 1.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    power = prime_power(n)
    successor = prime_power(n - 1)
    scan_primes: list[tuple[int, str, Partition]] = []
    entries: list[DivisibilityEntry] = []
    for p in primes_upto(n):
        if power and power[0] == p:
            scan_primes.append((p, "power", split_prime_power(n, p)))
        elif successor and successor[0] == p:
            scan_primes.append((p, "successor", split_prime_power_successor(n, p)))
        else:
            witness = digit_partition(n, p)
            val = multinomial_valuation(p, witness)
            entries.append(
                DivisibilityEntry(
                    prime=p,
                    kind="coprime",
                    witness=witness,
                    witness_valuation=val,
                    scan_min=None,
                    ok=val == 0,
                )
            )
    if scan_primes:
        mins: dict[int, int | None] = {p: None for p, _, _ in scan_primes}
        top_valuation = {p: factorial_valuation(p, n) for p, _, _ in scan_primes}
        plist = [p for p, _, _ in scan_primes]
        for raw in _iter_decreasing(n, n - 2):
            for p in plist:
                val = top_valuation[p]
                for part in raw:
                    if part >= p:
                        val -= factorial_valuation(p, part)
                cur = mins[p]
                if cur is None or val < cur:
                    mins[p] = val
        for p, kind, witness in scan_primes:
            val = multinomial_valuation(p, witness)
            entries.append(
                DivisibilityEntry(
                    prime=p,
                    kind=kind,
                    witness=witness,
                    witness_valuation=val,
                    scan_min=mins[p],
                    ok=mins[p] is not None and mins[p] >= 1 and val == 1,
                )
            )
    entries.sort(key=lambda e: e.prime)
    return DivisibilityReport(n=n, entries=tuple(entries))
