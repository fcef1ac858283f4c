"""Finite rings Z_{n_1} x ... x Z_{n_k} and their prime ideals."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

import numpy as np

from . import kernels
from .errors import CapExceededError, NotPrimeError

DEFAULT_RING_CAP = 4096

_FACTOR_RE = re.compile(r"^z(\d+)$")


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    for d in range(2, math.isqrt(p) + 1):
        if p % d == 0:
            return False
    return True


def prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True, order=True)
class RingElement:
    coords: tuple[int, ...]

    def __str__(self) -> str:
        if len(self.coords) == 1:
            return str(self.coords[0])
        return "(" + ",".join(map(str, self.coords)) + ")"


@dataclass(frozen=True)
class RingSpec:
    """The ring Z_{n_1} x ... x Z_{n_k}; a single factor gives Z_n."""

    factors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(int(n) for n in self.factors))
        if not self.factors:
            raise ValueError("a ring needs at least one factor")
        bad = [n for n in self.factors if n < 2]
        if bad:
            raise ValueError(f"every modulus must be >= 2, got {bad}")

    def __str__(self) -> str:
        return "x".join(f"Z{n}" for n in self.factors)

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    @cached_property
    def weights(self) -> np.ndarray:
        w = np.ones(len(self.factors), dtype=np.int64)
        for t in range(len(self.factors) - 2, -1, -1):
            w[t] = w[t + 1] * self.factors[t + 1]
        return w

    @cached_property
    def coords(self) -> np.ndarray:
        """All elements as an ``(order, k)`` coordinate array, in index order."""
        idx = np.arange(self.order, dtype=np.int64)
        moduli = np.asarray(self.factors, dtype=np.int64)
        return (idx[:, None] // self.weights[None, :]) % moduli[None, :]

    @property
    def moduli(self) -> np.ndarray:
        return np.asarray(self.factors, dtype=np.int64)

    def elements(self) -> list[RingElement]:
        return [RingElement(tuple(int(c) for c in row)) for row in self.coords]

    def element(self, *coords: int) -> RingElement:
        if len(coords) != len(self.factors):
            raise ValueError(f"{self} expects {len(self.factors)} coordinates, got {len(coords)}")
        return RingElement(tuple(int(c) % n for c, n in zip(coords, self.factors)))

    def index(self, x: RingElement) -> int:
        self._check(x)
        return int(sum(c * int(w) for c, w in zip(x.coords, self.weights)))

    def zero(self) -> RingElement:
        return RingElement((0,) * len(self.factors))

    def _check(self, x: RingElement) -> None:
        if len(x.coords) != len(self.factors):
            raise ValueError(
                f"element {x} has {len(x.coords)} coordinates but {self} has {len(self.factors)} factors"
            )
        for c, n in zip(x.coords, self.factors):
            if not 0 <= c < n:
                raise ValueError(f"coordinate {c} of {x} is not a residue mod {n}")

    @classmethod
    def parse(cls, text: str) -> "RingSpec":
        """Parse ``Z6``, ``z8`` or ``Z2xZ3``."""
        parts = text.strip().lower().split("x")
        factors = []
        for part in parts:
            m = _FACTOR_RE.match(part.strip())
            if m is None:
                raise ValueError(f"cannot parse ring {text!r}; expected something like Z6 or Z2xZ3")
            factors.append(int(m.group(1)))
        return cls(tuple(factors))

    def parse_element(self, text: str) -> RingElement:
        """Parse ``3`` (single factor) or ``(1,2)``."""
        body = text.strip().strip("()")
        vals = [int(v) for v in body.split(",") if v.strip()]
        return self.element(*vals)


def make_ring(moduli: Iterable[int]) -> RingSpec:
    return RingSpec(tuple(moduli))


def mul(r: RingSpec, x: RingElement, y: RingElement) -> RingElement:
    r._check(x)
    r._check(y)
    return RingElement(tuple((a * b) % n for a, b, n in zip(x.coords, y.coords, r.factors)))


def add(r: RingSpec, x: RingElement, y: RingElement) -> RingElement:
    r._check(x)
    r._check(y)
    return RingElement(tuple((a + b) % n for a, b, n in zip(x.coords, y.coords, r.factors)))


@dataclass(frozen=True)
class PrimeIdeal:
    """A proper prime ideal with its quotient field order.

    ``factor`` and ``prime`` record where it came from: the ideal is
    ``Z_{n_1} x ... x (prime) x ... x Z_{n_k}`` with ``(prime)`` in position ``factor``.
    """

    ring: RingSpec
    members: frozenset[RingElement]
    quotient_order: int
    factor: int | None = None
    prime: int | None = None
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if self.ring.order != len(self.members) * self.quotient_order:
            raise ValueError(
                f"|R| = {self.ring.order} but |P| * q = {len(self.members)} * {self.quotient_order}"
            )

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: RingElement) -> bool:
        return x in self.members

    def sorted_members(self) -> list[RingElement]:
        return sorted(self.members)

    def __str__(self) -> str:
        return self.label or "{" + ",".join(map(str, self.sorted_members())) + "}"


def _check_cap(r: RingSpec, cap: int) -> None:
    if r.order > cap:
        raise CapExceededError(f"|R| = {r.order} exceeds the ring cap {cap}")


def _member_mask(r: RingSpec, s: Iterable[RingElement]) -> np.ndarray:
    mask = np.zeros(r.order, dtype=np.bool_)
    for x in s:
        mask[r.index(x)] = True
    return mask


def prime_witness(r: RingSpec, s: Iterable[RingElement], cap: int = DEFAULT_RING_CAP) -> str | None:
    """None if ``s`` is a proper prime ideal of ``r``, else a reason naming the failing elements."""
    _check_cap(r, cap)
    mask = _member_mask(r, s)
    code, i, j = kernels.ideal_witness(r.coords, r.moduli, r.weights, mask)
    if code == kernels.IDEAL_OK:
        return None
    el = r.elements()
    x, y = el[int(i)], el[int(j)]
    if code == kernels.MISSING_ZERO:
        return "0 is not in the set"
    if code == kernels.NOT_PROPER:
        return "the set is the whole ring"
    if code == kernels.NOT_ADDITIVE:
        return f"{x} + {y} = {add(r, x, y)} is not in the set"
    if code == kernels.NOT_ABSORBING:
        return f"{x} * {y} = {mul(r, x, y)} is not in the set although {y} is"
    return f"{x} * {y} = {mul(r, x, y)} is in the set but neither {x} nor {y} is"


def verify_prime(r: RingSpec, s: Iterable[RingElement], cap: int = DEFAULT_RING_CAP) -> bool:
    """Exhaustively check that ``s`` is a proper ideal satisfying xy in s => x in s or y in s."""
    return prime_witness(r, s, cap) is None


def principal_ideal(r: RingSpec, g: RingElement) -> frozenset[RingElement]:
    return frozenset(mul(r, x, g) for x in r.elements())


def prime_ideals(r: RingSpec, cap: int = DEFAULT_RING_CAP) -> list[PrimeIdeal]:
    """All proper prime ideals of ``r``, ordered by factor position then prime.

    They are built number-theoretically (a prime p | n_i in one coordinate,
    full rings elsewhere) and each one is re-checked with :func:`verify_prime`.
    """
    _check_cap(r, cap)
    coords = r.coords
    elements = r.elements()
    out = []
    for t, n in enumerate(r.factors):
        for p in prime_divisors(n):
            keep = coords[:, t] % p == 0
            members = frozenset(e for e, k in zip(elements, keep) if k)
            if len(r.factors) == 1:
                label = f"({p % n})"
            else:
                label = "x".join(f"({p % n})" if s == t else f"Z{m}" for s, m in enumerate(r.factors))
            ideal = PrimeIdeal(r, members, quotient_order=p, factor=t, prime=p, label=label)
            witness = prime_witness(r, members, cap)
            if witness is not None:  # pragma: no cover - would contradict basic number theory
                raise NotPrimeError(f"constructed ideal {label} of {r} is not prime", witness)
            out.append(ideal)
    return out


def ideal_from_members(r: RingSpec, members: Iterable[RingElement], cap: int = DEFAULT_RING_CAP,
                       label: str = "") -> PrimeIdeal:
    """Wrap an explicit member set as a PrimeIdeal after checking it exhaustively."""
    members = frozenset(members)
    witness = prime_witness(r, members, cap)
    if witness is not None:
        raise NotPrimeError(f"{{{','.join(map(str, sorted(members)))}}} is not a proper prime ideal of {r}",
                            witness)
    # the quotient of a finite ring by a prime ideal is a field; its order is the index of P
    return PrimeIdeal(r, members, quotient_order=r.order // len(members), label=label)


def ideal_from_generator(r: RingSpec, g: RingElement, cap: int = DEFAULT_RING_CAP) -> PrimeIdeal:
    return ideal_from_members(r, principal_ideal(r, g), cap, label=f"({g})")
