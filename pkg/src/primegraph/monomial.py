"""Exact monomial ideal arithmetic over k[x_1..x_a, y_1..y_b].

Ideals are stored by their minimal generating set, as an ``int64`` exponent
matrix with one row per generator and columns ``x_1..x_a, y_1..y_b``.  Rows
are kept in canonical order: graded reverse lexicographic, descending, with
``x_1 > ... > x_a > y_1 > ... > y_b``.  Because minimal generators of a
monomial ideal are unique, two ideals are equal iff their matrices are.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import CapExceededError, WidthMismatchError

DEFAULT_PRODUCT_CAP = 10**6

_FACTOR_RE = re.compile(r"^([xy])(\d+)(?:\^(\d+))?$")


@dataclass(frozen=True)
class Monomial:
    alpha: tuple[int, ...]
    beta: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(int(e) for e in self.alpha))
        object.__setattr__(self, "beta", tuple(int(e) for e in self.beta))
        if any(e < 0 for e in self.alpha + self.beta):
            raise ValueError(f"negative exponent in {self.alpha}, {self.beta}")

    @property
    def widths(self) -> tuple[int, int]:
        return len(self.alpha), len(self.beta)

    @property
    def exponents(self) -> tuple[int, ...]:
        return self.alpha + self.beta

    @property
    def degree(self) -> int:
        return sum(self.alpha) + sum(self.beta)

    @property
    def x_degree(self) -> int:
        return sum(self.alpha)

    @property
    def y_degree(self) -> int:
        return sum(self.beta)

    def __mul__(self, other: "Monomial") -> "Monomial":
        _same_widths(self.widths, other.widths)
        return Monomial(tuple(p + q for p, q in zip(self.alpha, other.alpha)),
                        tuple(p + q for p, q in zip(self.beta, other.beta)))

    def __str__(self) -> str:
        parts = []
        for name, block in (("x", self.alpha), ("y", self.beta)):
            for i, e in enumerate(block, start=1):
                if e == 1:
                    parts.append(f"{name}{i}")
                elif e > 1:
                    parts.append(f"{name}{i}^{e}")
        return "*".join(parts) if parts else "1"

    @classmethod
    def parse(cls, text: str, a: int, b: int) -> "Monomial":
        """Inverse of ``str``: ``x1^2*y3``, ``1``."""
        alpha, beta = [0] * a, [0] * b
        text = text.strip()
        if text != "1":
            for factor in text.split("*"):
                m = _FACTOR_RE.match(factor.strip())
                if m is None:
                    raise ValueError(f"bad monomial factor {factor!r} in {text!r}")
                block = alpha if m.group(1) == "x" else beta
                i = int(m.group(2)) - 1
                if not 0 <= i < len(block):
                    raise ValueError(f"variable {m.group(1)}{i + 1} out of range in {text!r}")
                block[i] += int(m.group(3) or 1)
        return cls(tuple(alpha), tuple(beta))

    @classmethod
    def from_row(cls, row: Sequence[int], a: int) -> "Monomial":
        row = [int(e) for e in row]
        return cls(tuple(row[:a]), tuple(row[a:]))

    @classmethod
    def one(cls, a: int, b: int) -> "Monomial":
        return cls((0,) * a, (0,) * b)

    @classmethod
    def variable(cls, a: int, b: int, index: int) -> "Monomial":
        """The variable at position ``index`` of ``x_1..x_a, y_1..y_b`` (0-based)."""
        row = [0] * (a + b)
        row[index] = 1
        return cls.from_row(row, a)


def variable_names(a: int, b: int) -> list[str]:
    return [f"x{i}" for i in range(1, a + 1)] + [f"y{j}" for j in range(1, b + 1)]


def _same_widths(w1: tuple[int, int], w2: tuple[int, int]) -> None:
    if w1 != w2:
        raise WidthMismatchError(f"widths {w1} and {w2} differ")


def divides(m1: Monomial, m2: Monomial) -> bool:
    _same_widths(m1.widths, m2.widths)
    return all(p <= q for p, q in zip(m1.exponents, m2.exponents))


def canonical_order(rows: np.ndarray) -> np.ndarray:
    """Permutation putting rows in descending graded reverse lexicographic order."""
    if rows.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    keys = [rows[:, t] for t in range(rows.shape[1])] + [-rows.sum(axis=1)]
    return np.lexsort(keys)


def _minimal_rows(rows: np.ndarray) -> np.ndarray:
    if rows.shape[0] == 0:
        return rows
    rows = np.unique(rows, axis=0)
    degrees = rows.sum(axis=1)
    order = np.argsort(degrees, kind="stable")
    rows, degrees = np.ascontiguousarray(rows[order]), degrees[order]
    if degrees[0] != degrees[-1]:
        rows = rows[kernels.minimal_mask(rows, degrees)]
    return rows


class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    The empty generator set is the zero ideal; the single generator ``1`` is
    the unit ideal.
    """

    def __init__(self, a: int, b: int, rows: np.ndarray | None = None, *, _minimal: bool = False):
        self.a = int(a)
        self.b = int(b)
        width = self.a + self.b
        if rows is None:
            rows = np.zeros((0, width), dtype=np.int64)
        rows = np.asarray(rows, dtype=np.int64).reshape(-1, width)
        if (rows < 0).any():
            raise ValueError("exponents must be nonnegative")
        if not _minimal:
            rows = _minimal_rows(rows)
        rows = np.ascontiguousarray(rows[canonical_order(rows)])
        rows.setflags(write=False)
        self._rows = rows

    @classmethod
    def from_monomials(cls, a: int, b: int, monomials: Iterable[Monomial]) -> "MonomialIdeal":
        data = []
        for m in monomials:
            _same_widths((a, b), m.widths)
            data.append(m.exponents)
        return cls(a, b, np.array(data, dtype=np.int64).reshape(-1, a + b))

    @classmethod
    def from_strings(cls, a: int, b: int, texts: Iterable[str]) -> "MonomialIdeal":
        return cls.from_monomials(a, b, (Monomial.parse(t, a, b) for t in texts))

    @classmethod
    def zero(cls, a: int, b: int) -> "MonomialIdeal":
        return cls(a, b)

    @classmethod
    def unit(cls, a: int, b: int) -> "MonomialIdeal":
        return cls(a, b, np.zeros((1, a + b), dtype=np.int64), _minimal=True)

    @classmethod
    def generated_by_variables(cls, a: int, b: int, indices: Iterable[int]) -> "MonomialIdeal":
        idx = sorted(set(indices))
        rows = np.zeros((len(idx), a + b), dtype=np.int64)
        rows[np.arange(len(idx)), idx] = 1
        return cls(a, b, rows, _minimal=True)

    @property
    def widths(self) -> tuple[int, int]:
        return self.a, self.b

    @property
    def rows(self) -> np.ndarray:
        """Read-only exponent matrix in canonical order."""
        return self._rows

    @cached_property
    def generators(self) -> tuple[Monomial, ...]:
        return tuple(Monomial.from_row(r, self.a) for r in self._rows)

    @property
    def gens(self) -> frozenset[Monomial]:
        return frozenset(self.generators)

    def __len__(self) -> int:
        return self._rows.shape[0]

    def __iter__(self):
        return iter(self.generators)

    def __contains__(self, m: Monomial) -> bool:
        """Ideal membership: some generator divides ``m``."""
        _same_widths(self.widths, m.widths)
        if len(self) == 0:
            return False
        return bool((self._rows <= np.asarray(m.exponents)).all(axis=1).any())

    def is_zero(self) -> bool:
        return len(self) == 0

    def is_unit(self) -> bool:
        return len(self) == 1 and not self._rows.any()

    def degrees(self) -> np.ndarray:
        return self._rows.sum(axis=1)

    def strings(self) -> list[str]:
        return [str(m) for m in self.generators]

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.widths == other.widths and np.array_equal(self._rows, other._rows)

    def __hash__(self) -> int:
        return hash((self.a, self.b, self._rows.tobytes()))

    def __repr__(self) -> str:
        shown = ", ".join(self.strings()[:8])
        more = f", ... ({len(self)} gens)" if len(self) > 8 else ""
        return f"MonomialIdeal({shown}{more})"

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return product(self, other)

    def __pow__(self, n: int) -> "MonomialIdeal":
        return power(self, n)


def minimalize(ms: Iterable[Monomial], a: int | None = None, b: int | None = None) -> MonomialIdeal:
    """Drop every monomial divisible by another one in the collection."""
    ms = list(ms)
    if a is None or b is None:
        if not ms:
            raise ValueError("widths are required for an empty collection")
        a, b = ms[0].widths
    return MonomialIdeal.from_monomials(a, b, ms)


def _check_pair(i: MonomialIdeal, j: MonomialIdeal, cap: int) -> None:
    _same_widths(i.widths, j.widths)
    if len(i) * len(j) > cap:
        raise CapExceededError(f"{len(i)} x {len(j)} pairwise products exceed the cap {cap}")


def product(i: MonomialIdeal, j: MonomialIdeal, cap: int = DEFAULT_PRODUCT_CAP) -> MonomialIdeal:
    _check_pair(i, j, cap)
    sums = (i.rows[:, None, :] + j.rows[None, :, :]).reshape(-1, i.a + i.b)
    return MonomialIdeal(i.a, i.b, sums)


def power(i: MonomialIdeal, n: int, cap: int = DEFAULT_PRODUCT_CAP) -> MonomialIdeal:
    if n < 0:
        raise ValueError("power must be nonnegative")
    result = MonomialIdeal.unit(i.a, i.b)
    for _ in range(n):
        result = product(result, i, cap)
    return result


def intersect(i: MonomialIdeal, j: MonomialIdeal, cap: int = DEFAULT_PRODUCT_CAP) -> MonomialIdeal:
    """Generated by the pairwise least common multiples of the generators."""
    _check_pair(i, j, cap)
    lcms = np.maximum(i.rows[:, None, :], j.rows[None, :, :]).reshape(-1, i.a + i.b)
    return MonomialIdeal(i.a, i.b, lcms)


def intersect_all(ideals: Sequence[MonomialIdeal], cap: int = DEFAULT_PRODUCT_CAP) -> MonomialIdeal:
    if not ideals:
        raise ValueError("nothing to intersect")
    return reduce(lambda p, q: intersect(p, q, cap), ideals)


def colon_by_monomial(i: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """``I : m``, generated by ``u / gcd(u, m)`` over the generators ``u`` of ``I``."""
    _same_widths(i.widths, m.widths)
    quotients = np.maximum(i.rows - np.asarray(m.exponents, dtype=np.int64), 0)
    return MonomialIdeal(i.a, i.b, quotients)


def equals(i: MonomialIdeal, j: MonomialIdeal) -> bool:
    _same_widths(i.widths, j.widths)
    return i == j


def contains_ideal(big: MonomialIdeal, small: MonomialIdeal) -> bool:
    """True iff every generator of ``small`` lies in ``big``."""
    _same_widths(big.widths, small.widths)
    if len(small) == 0:
        return True
    if len(big) == 0:
        return False
    return bool((big.rows[None, :, :] <= small.rows[:, None, :]).all(axis=2).any(axis=1).all())


def is_squarefree(i: MonomialIdeal) -> bool:
    return bool((i.rows <= 1).all())


def is_equigenerated(i: MonomialIdeal) -> bool:
    d = i.degrees()
    return len(d) > 0 and bool((d == d[0]).all())
