"""Exact cohomology of products of projective spaces and their Calabi-Yau hypersurfaces.

The integral cohomology ring of ``V = CP^{d_1} x ... x CP^{d_k}`` is
``Z[u_1, ..., u_k] / (u_1^{d_1 + 1}, ..., u_k^{d_k + 1})``, where ``u_i``
is the hyperplane class of the i-th factor.  Because the relations are
monomial, the quotient is modelled exactly by integer polynomials with a
per-variable exponent cap: any product monomial exceeding a cap is zero
and is silently dropped.

The tangent bundle of ``V`` splits stably into ``d_i + 1`` copies of the
hyperplane line bundle per factor, so the total Chern class is
``prod (1 + u_i)^{d_i + 1}`` and the degree-2j power-sum class is
``sum (d_i + 1) u_i^j``.  The anticanonical hypersurface ``N`` dual to
``c_1(V)`` has ``c_1(N) = 0``; all of its characteristic numbers are
evaluated on ``V`` by multiplying with ``c_1(V)`` (the class dual to N)
and pairing with the fundamental class, so ``N`` itself is never
constructed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .partitions import Partition, enumerate_partitions


class ProjectiveProduct:
    """A product of complex projective spaces ``CP^{d_1} x ... x CP^{d_k}``.

    Factor dimensions are kept in the canonical (weakly decreasing)
    order of the indexing partition, so ``u_1`` always belongs to the
    largest factor.
    """

    __slots__ = ("dims", "k", "n")

    def __init__(self, dims: Iterable[int]):
        self.dims = Partition(dims)
        self.k = len(self.dims)
        self.n = self.dims.n

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ProjectiveProduct) and self.dims == other.dims

    def __hash__(self) -> int:
        return hash(self.dims)

    def __repr__(self) -> str:
        return " x ".join(f"CP^{d}" for d in self.dims)

    @property
    def top_monomial(self) -> tuple[int, ...]:
        """Exponent vector of the top class ``u_1^{d_1} ... u_k^{d_k}``."""
        return tuple(self.dims)

    def zero(self) -> "TruncatedPolynomial":
        return TruncatedPolynomial(self, {})

    def one(self) -> "TruncatedPolynomial":
        return TruncatedPolynomial(self, {(0,) * self.k: 1})

    def generator(self, i: int) -> "TruncatedPolynomial":
        """The hyperplane class ``u_i`` (0-based factor index)."""
        if not 0 <= i < self.k:
            raise IndexError(f"factor index {i} out of range for {self!r}")
        exps = [0] * self.k
        exps[i] = 1
        return TruncatedPolynomial(self, {tuple(exps): 1})

    def first_chern_class(self) -> "TruncatedPolynomial":
        """``c_1(V) = sum (d_i + 1) u_i``."""
        terms = {}
        for i, d in enumerate(self.dims):
            exps = [0] * self.k
            exps[i] = 1
            terms[tuple(exps)] = d + 1
        return TruncatedPolynomial(self, terms)


class TruncatedPolynomial:
    """Element of the exponent-capped polynomial model of ``H*(V; Z)``.

    ``terms`` maps exponent vectors to nonzero integer coefficients; no
    stored exponent exceeds its cap.  Instances are treated as immutable.
    """

    __slots__ = ("space", "terms")

    def __init__(self, space: ProjectiveProduct, terms: Mapping[tuple[int, ...], int]):
        caps = space.dims
        self.space = space
        self.terms = {
            e: c
            for e, c in terms.items()
            if c != 0 and all(a <= cap for a, cap in zip(e, caps))
        }

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exponents: tuple[int, ...]) -> int:
        return self.terms.get(tuple(exponents), 0)

    def graded_part(self, degree: int) -> "TruncatedPolynomial":
        """Terms of total polynomial degree ``degree`` (cohomological degree 2*degree)."""
        return TruncatedPolynomial(
            self.space, {e: c for e, c in self.terms.items() if sum(e) == degree}
        )

    def _check_space(self, other: "TruncatedPolynomial") -> None:
        if self.space != other.space:
            raise ValueError(f"mixed ambient spaces: {self.space!r} vs {other.space!r}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedPolynomial):
            return NotImplemented
        return self.space == other.space and self.terms == other.terms

    def __add__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        self._check_space(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return TruncatedPolynomial(self.space, out)

    def __neg__(self) -> "TruncatedPolynomial":
        return TruncatedPolynomial(self.space, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        return self + (-other)

    def __mul__(self, other: "TruncatedPolynomial | int") -> "TruncatedPolynomial":
        if isinstance(other, int):
            return TruncatedPolynomial(
                self.space, {e: c * other for e, c in self.terms.items()}
            )
        self._check_space(other)
        caps = self.space.dims
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                dead = False
                e = tuple(a + b for a, b in zip(e1, e2))
                for a, cap in zip(e, caps):
                    if a > cap:
                        dead = True
                        break
                if dead:
                    continue
                out[e] = out.get(e, 0) + c1 * c2
        return TruncatedPolynomial(self.space, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "TruncatedPolynomial":
        if exponent < 0:
            raise ValueError("negative powers are not defined in the quotient ring")
        result = self.space.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        names = [f"u{i + 1}" for i in range(self.space.k)]
        bits = []
        for e, c in sorted(self.terms.items()):
            mon = "*".join(
                f"{name}^{a}" if a > 1 else name for name, a in zip(names, e) if a
            )
            bits.append(f"{c}" if not mon else f"{c}*{mon}")
        return " + ".join(bits)


@dataclass(frozen=True)
class ChernData:
    """Total Chern class of a space, with graded access.

    ``total`` is ``1 + c_1 + c_2 + ...`` in the truncated ring; the
    degree-0 piece is always 1.
    """

    space: ProjectiveProduct
    total: TruncatedPolynomial

    def part(self, degree: int) -> TruncatedPolynomial:
        """The class ``c_degree`` (zero above the ring's top degree)."""
        return self.total.graded_part(degree)


def fundamental_pairing(x: TruncatedPolynomial) -> int:
    """Evaluate a class against the fundamental homology class of its space.

    Equals the coefficient of the top monomial ``u_1^{d_1} ... u_k^{d_k}``;
    lower-degree terms pair to zero.
    """
    return x.coefficient(x.space.top_monomial)


def chern_total(space: ProjectiveProduct) -> ChernData:
    """Total Chern class ``prod (1 + u_i)^{d_i + 1}`` of the tangent bundle."""
    total = space.one()
    for i, d in enumerate(space.dims):
        line = space.one() + space.generator(i)
        total = total * line ** (d + 1)
    return ChernData(space=space, total=total)


def power_sum_class(chern: ChernData, j: int) -> TruncatedPolynomial:
    """Degree-2j power-sum class from the Chern classes, by Newton's identities.

    Uses ``s_j = c_1 s_{j-1} - c_2 s_{j-2} + ... + (-1)^{j-1} j c_j``,
    entirely inside the truncated ring.
    """
    if j < 1:
        raise ValueError(f"need j >= 1, got {j}")
    s: list[TruncatedPolynomial] = [chern.space.zero()]  # s[0] unused
    for m in range(1, j + 1):
        acc = chern.part(m) * ((-1) ** (m - 1) * m)
        for i in range(1, m):
            acc = acc + chern.part(i) * s[m - i] * ((-1) ** (i - 1))
        s.append(acc)
    return s[j]


def power_sum_direct(space: ProjectiveProduct, j: int) -> TruncatedPolynomial:
    """Degree-2j power sum ``sum (d_i + 1) u_i^j`` of the tangent line classes.

    The tangent bundle of the product splits stably into ``d_i + 1``
    hyperplane lines per factor; summing their j-th powers directly gives
    an oracle independent of the Newton-identity route.
    """
    if j < 1:
        raise ValueError(f"need j >= 1, got {j}")
    acc = space.zero()
    for i, d in enumerate(space.dims):
        acc = acc + space.generator(i) ** j * (d + 1)
    return acc


def hypersurface_s_number(sigma: Partition | Iterable[int]) -> int:
    """s-number of the anticanonical Calabi-Yau hypersurface indexed by sigma.

    For ``N`` dual to ``c_1`` inside ``V``, the normal bundle of the
    embedding is the restriction of the anticanonical line bundle, so
    ``s_{n-1}(N)`` pushes forward to
    ``< s_{n-1}(V) c_1(V) - c_1(V)^n , [V] >``, evaluated here purely by
    ring arithmetic.
    """
    sigma = Partition(sigma)
    if sigma.n < 2:
        raise ValueError(f"need a partition of n >= 2, got {sigma}")
    space = ProjectiveProduct(sigma)
    n = space.n
    c1 = space.first_chern_class()
    s_ambient = power_sum_direct(space, n - 1)
    return fundamental_pairing(s_ambient * c1 - c1**n)


def hypersurface_chern_classes(
    sigma: Partition | Iterable[int],
) -> tuple[ProjectiveProduct, list[TruncatedPolynomial]]:
    """Chern classes of the hypersurface, as classes on the ambient space.

    With ``nu`` the normal bundle, ``TN + nu`` restricts from ``TV``, so
    ``c(N)`` is the restriction of ``c(V) / (1 + c_1(V))``.  The inverse
    series terminates because ``c_1`` is nilpotent.  Returns the ambient
    space and the list ``[c_1(N), ..., c_{n-1}(N)]`` of representatives.
    """
    sigma = Partition(sigma)
    space = ProjectiveProduct(sigma)
    n = space.n
    c1 = space.first_chern_class()
    inverse = space.one()
    term = space.one()
    for _ in range(n):
        term = term * (-c1)
        inverse = inverse + term
    quotient = chern_total(space).total * inverse
    return space, [quotient.graded_part(j) for j in range(1, n)]


def hypersurface_chern_numbers(sigma: Partition | Iterable[int]) -> dict[Partition, int]:
    """All tangential Chern numbers of the hypersurface indexed by sigma.

    Keys are partitions ``omega`` of ``n - 1``: the key ``(3, 1, 1)``
    denotes the number ``c_1^2 c_3 [N]``.  Values are exact integers,
    obtained by pairing the corresponding product of hypersurface Chern
    classes, multiplied by the dual class ``c_1(V)`` of ``N``, against
    the ambient fundamental class.  The key ``(n - 1,)`` is the Euler
    characteristic; every key containing a part 1 pairs to zero because
    ``c_1(N) = 0``.
    """
    sigma = Partition(sigma)
    if sigma.n < 2:
        raise ValueError(f"need a partition of n >= 2, got {sigma}")
    space, classes = hypersurface_chern_classes(sigma)
    n = space.n
    c1 = space.first_chern_class()
    numbers: dict[Partition, int] = {}
    for omega in enumerate_partitions(n - 1):
        product = space.one()
        for index in omega:
            product = product * classes[index - 1]
        numbers[omega] = fundamental_pairing(product * c1)
    return numbers


def hypersurface_euler_characteristic(sigma: Partition | Iterable[int]) -> int:
    """Euler characteristic of the hypersurface: its top Chern number."""
    sigma = Partition(sigma)
    space, classes = hypersurface_chern_classes(sigma)
    c1 = space.first_chern_class()
    return fundamental_pairing(classes[-1] * c1)


def iter_chern_indices(dimension: int) -> Iterator[Partition]:
    """Partitions indexing the Chern numbers of a ``dimension``-fold."""
    return enumerate_partitions(dimension)
