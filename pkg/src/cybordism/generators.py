"""Gcd identity and integer certificates for SU-bordism polynomial generators.

For each n >= 3 the s-numbers of the Calabi-Yau hypersurfaces indexed by
the capped partitions of n have greatest common divisor exactly the
attainable generator s-number, so an explicit integer combination of
those hypersurfaces realises a polynomial generator of the SU-bordism
ring with 2 inverted.  This module verifies the gcd identity and
produces deterministic Bezout certificates witnessing it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cohomology import hypersurface_euler_characteristic, hypersurface_s_number
from .numthy import (
    CaseTag,
    classify,
    primes_upto,
    su_generator_s_number,
    valuation,
)
from .partitions import (
    Partition,
    generator_partitions,
    weighted_multinomial,
    weighted_multinomial_valuation,
)


def s_number_gcd(n: int) -> int:
    """Gcd of the hypersurface s-number magnitudes over all capped partitions of n.

    Folds ``math.gcd`` over every partition of ``n`` with parts at most
    ``n - 2``; no shortcut via the predicted value is taken, so the
    result is an independent check against :func:`su_generator_s_number`.
    """
    acc = 0
    for sigma in generator_partitions(n):
        acc = math.gcd(acc, weighted_multinomial(sigma))
    return acc


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(d, x, y)`` with ``d = gcd(a, b) = x*a + y*b``.

    Standard iterative Euclid with Bezout back-substitution; for positive
    inputs the coefficients are the minimal ones.
    """
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


@dataclass(frozen=True)
class GeneratorCertificate:
    """Integer combination of hypersurfaces realising a bordism generator.

    ``entries`` lists ``(sigma, coefficient)`` pairs with distinct
    partitions and nonzero coefficients; ``achieved`` is the s-number of
    the combination, which equals the attainable generator s-number for
    dimension ``2(n - 1)``.
    """

    n: int
    entries: tuple[tuple[Partition, int], ...]
    achieved: int

    def coefficient(self, sigma: Partition) -> int:
        for part, coeff in self.entries:
            if part == sigma:
                return coeff
        return 0

    def as_mapping(self) -> dict[Partition, int]:
        return dict(self.entries)


def _scan_order(n: int) -> list[Partition]:
    # Fewest parts first, then lexicographic on the increasing part
    # tuples.  Partitions with few parts live in small ambient rings, so
    # certificates built from the front of this order stay cheap to
    # re-verify through the cohomology route.
    return sorted(generator_partitions(n), key=lambda s: (len(s), s.increasing))


def certificate(n: int) -> GeneratorCertificate:
    """Deterministic minimal-support certificate for the generator in ``2(n-1)``.

    Scans the capped partitions of ``n`` ordered by number of parts and
    then lexicographically.  First a single s-number magnitude equal to
    the target is accepted; then every pair is tried in scan order,
    taking the first whose pairwise gcd hits the target, with Bezout
    coefficients; when no pair suffices, a running extended gcd over the
    scan order is accumulated, skipping values that do not strictly
    reduce it, until the target is reached.  Signs are flipped at the
    end so the combination's s-number is ``+target`` (each hypersurface
    s-number is negative).
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    target = su_generator_s_number(n)
    order = _scan_order(n)
    primes = primes_upto(n)
    target_vec = tuple(valuation(p, target) for p in primes)
    # Exponent vectors of the s-number magnitudes over the primes <= n
    # (no larger prime can divide them), computed without big integers.
    vectors = [
        tuple(weighted_multinomial_valuation(p, sigma) for p in primes)
        for sigma in order
    ]

    for sigma, vec in zip(order, vectors):
        if vec == target_vec:
            entries = ((sigma, -1),)
            return GeneratorCertificate(n=n, entries=entries, achieved=target)

    pair = _first_exact_pair(vectors, target_vec)
    if pair is not None:
        i, j = pair
        a, b = weighted_multinomial(order[i]), weighted_multinomial(order[j])
        d, x, y = extended_gcd(a, b)
        assert d == target
        entries = ((order[i], -x), (order[j], -y))
        return GeneratorCertificate(n=n, entries=entries, achieved=target)

    return _sequential_certificate(order, target, n)


def _first_exact_pair(
    vectors: list[tuple[int, ...]], target_vec: tuple[int, ...]
) -> tuple[int, int] | None:
    # gcd(a_i, a_j) == target iff for every prime the smaller of the two
    # exponents is the target's exponent; since target divides every
    # value, that means each prime is "tight" in at least one of the
    # two.  Encoding tightness as bitmasks turns the pair search into
    # cheap mask cover queries.
    nprimes = len(target_vec)
    full = (1 << nprimes) - 1
    masks = []
    for vec in vectors:
        mask = 0
        for bit in range(nprimes):
            if vec[bit] == target_vec[bit]:
                mask |= 1 << bit
        masks.append(mask)
    by_mask: dict[int, list[int]] = {}
    for idx, mask in enumerate(masks):
        by_mask.setdefault(mask, []).append(idx)
    distinct = list(by_mask)
    for i, mask_i in enumerate(masks):
        needed = full & ~mask_i
        best = None
        for mask in distinct:
            if mask & needed == needed:
                candidates = by_mask[mask]
                j = _first_greater(candidates, i)
                if j is not None and (best is None or j < best):
                    best = j
        if best is not None:
            return i, best
    return None


def _first_greater(sorted_indices: list[int], i: int) -> int | None:
    # indices are appended in increasing order, so binary search applies
    lo, hi = 0, len(sorted_indices)
    while lo < hi:
        mid = (lo + hi) // 2
        if sorted_indices[mid] <= i:
            lo = mid + 1
        else:
            hi = mid
    return sorted_indices[lo] if lo < len(sorted_indices) else None


def _sequential_certificate(
    order: list[Partition], target: int, n: int
) -> GeneratorCertificate:
    # Running extended gcd along the scan order; a value enters the
    # combination only when it strictly reduces the running gcd.
    coeffs: dict[int, int] = {0: 1}
    running = weighted_multinomial(order[0])
    for idx in range(1, len(order)):
        if running == target:
            break
        value = weighted_multinomial(order[idx])
        d, x, y = extended_gcd(running, value)
        if d == running:
            continue
        coeffs = {i: c * x for i, c in coeffs.items() if c * x != 0}
        if y != 0:
            coeffs[idx] = y
        running = d
    if running != target:
        raise ArithmeticError(
            f"gcd over capped partitions of {n} is {running}, expected {target}"
        )
    entries = tuple(
        (order[idx], -coeffs[idx]) for idx in sorted(coeffs) if coeffs[idx] != 0
    )
    return GeneratorCertificate(n=n, entries=entries, achieved=target)


def reverify_certificate(cert: GeneratorCertificate) -> int:
    """Recompute the certificate's s-number through the cohomology route.

    Evaluates ``sum coeff * s(N_sigma)`` with each s-number obtained by
    honest truncated-ring arithmetic, independent of the combinatorial
    values used to build the certificate.
    """
    return sum(coeff * hypersurface_s_number(sigma) for sigma, coeff in cert.entries)


@dataclass(frozen=True)
class GcdIdentityRow:
    n: int
    gcd_value: int
    expected: int
    tag: CaseTag | None

    @property
    def ok(self) -> bool:
        return self.gcd_value == self.expected


@dataclass(frozen=True)
class GcdIdentityReport:
    """Scan of the gcd identity up to ``n_max``, with case attribution."""

    n_max: int
    rows: tuple[GcdIdentityRow, ...]

    @property
    def passed(self) -> bool:
        return all(row.ok for row in self.rows)

    def case_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for row in self.rows:
            label = row.tag.label if row.tag else "base"
            counts[label] = counts.get(label, 0) + 1
        return counts


def verify_gcd_identity(n_max: int) -> GcdIdentityReport:
    """Check ``s_number_gcd(n) == su_generator_s_number(n)`` for ``3 <= n <= n_max``.

    Each ``n > 3`` is attributed to its prime-power shape; ``n = 3`` is
    the base value 48 and carries no shape.
    """
    if n_max < 3:
        raise ValueError(f"need n_max >= 3, got {n_max}")
    rows = []
    for n in range(3, n_max + 1):
        rows.append(
            GcdIdentityRow(
                n=n,
                gcd_value=s_number_gcd(n),
                expected=su_generator_s_number(n),
                tag=classify(n) if n > 3 else None,
            )
        )
    return GcdIdentityReport(n_max=n_max, rows=tuple(rows))


def low_dimension_table() -> dict:
    """Explicit data for the generators of complex dimension 2, 3 and 4.

    Returns the target s-numbers, the certificates over the partitions
    of 3, 4 and 5, and the Euler-characteristic condition a single
    Calabi-Yau threefold must satisfy to represent the dimension-3
    generator or its negative.
    """
    targets = {i: su_generator_s_number(i + 1) for i in (2, 3, 4)}
    certificates = {n: certificate(n) for n in (3, 4, 5)}
    cert4 = certificates[4]
    combination_euler = sum(
        coeff * hypersurface_euler_characteristic(sigma)
        for sigma, coeff in cert4.entries
    )
    return {
        "targets": targets,
        "certificates": certificates,
        "dimension3_combination_euler": combination_euler,
        "dimension3_single_manifold_euler": (2, -2),
    }
