"""Edge ideals of K_a join the edgeless graph on b vertices, and closed forms for their powers.

Everything here is closed form.  :mod:`primegraph.monomial` computes the same
objects by brute force, and the test suite compares the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator

import numpy as np

from .errors import CapExceededError
from .graph import SplitGraph, abstract_split_graph
from .monomial import (
    DEFAULT_PRODUCT_CAP,
    MonomialIdeal,
    equals,
    intersect_all,
    variable_names,
)
from .ring import is_prime

DEFAULT_ENUMERATION_CAP = 10**6


def binom(r: int, s: int) -> int:
    """Binomial coefficient, zero when r < 0, s < 0 or r < s."""
    if r < 0 or s < 0 or r < s:
        return 0
    return comb(r, s)


@dataclass(frozen=True)
class EdgeIdealModel:
    a: int
    b: int
    ideal: MonomialIdeal

    @property
    def clique_part(self) -> MonomialIdeal:
        """J = (x_i x_j : i < j)."""
        rows = self.ideal.rows
        return MonomialIdeal(self.a, self.b, rows[rows[:, self.a:].sum(axis=1) == 0], _minimal=True)

    @property
    def cross_part(self) -> MonomialIdeal:
        """K = (x_i y_t)."""
        rows = self.ideal.rows
        return MonomialIdeal(self.a, self.b, rows[rows[:, self.a:].sum(axis=1) == 1], _minimal=True)


def edge_ideal(g: SplitGraph) -> EdgeIdealModel:
    """Generated by z_i z_j over the edges of ``g``, with z the x-block then the y-block."""
    n = len(g)
    rows = np.zeros((len(g.edge_indices), n), dtype=np.int64)
    for k, (i, j) in enumerate(g.edge_indices):
        rows[k, i] = 1
        rows[k, j] = 1
    return EdgeIdealModel(g.a, g.b, MonomialIdeal(g.a, g.b, rows))


def edge_ideal_ab(a: int, b: int) -> EdgeIdealModel:
    return edge_ideal(abstract_split_graph(a, b))


def compositions(total: int, parts: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Tuples of ``parts`` nonnegative integers summing to ``total``, lexicographically descending."""
    if max_part is None:
        max_part = total
    if parts == 0:
        if total == 0:
            yield ()
        return
    if total > parts * max_part:
        return
    for first in range(min(total, max_part), -1, -1):
        for rest in compositions(total - first, parts - 1, max_part):
            yield (first,) + rest


def _composition_array(total: int, parts: int, max_part: int | None = None) -> np.ndarray:
    return np.array(list(compositions(total, parts, max_part)), dtype=np.int64).reshape(-1, parts)


def closed_form_strata(a: int, b: int, n: int) -> Iterator[tuple[int, np.ndarray]]:
    """Yield ``(s, rows)`` for s = 0..n, where rows are the generators of I^n with y-degree s.

    A monomial x^α y^β of degree 2n is a minimal generator iff |β| <= n and
    every α_i <= n.
    """
    for s in range(n + 1):
        betas = _composition_array(s, b)
        alphas = _composition_array(2 * n - s, a, n)
        if len(alphas) == 0 or len(betas) == 0:
            yield s, np.zeros((0, a + b), dtype=np.int64)
            continue
        rows = np.hstack([np.repeat(alphas, len(betas), axis=0), np.tile(betas, (len(alphas), 1))])
        yield s, rows


def _enumeration_bound(a: int, b: int, n: int) -> int:
    # unrestricted x-part count per stratum; an upper bound on the work done
    return sum(binom(s + b - 1, b - 1) * binom(2 * n - s + a - 1, a - 1) for s in range(n + 1))


def closed_form_generators(a: int, b: int, n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> MonomialIdeal:
    """Minimal generators of I(K_a ∨ K̄_b)^n, enumerated from the degree conditions."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if a == 0:
        return MonomialIdeal.zero(a, b)
    if _enumeration_bound(a, b, n) > cap:
        raise CapExceededError(f"enumerating generators for (a,b,n)=({a},{b},{n}) exceeds the cap {cap}")
    blocks = [rows for _, rows in closed_form_strata(a, b, n)]
    # all rows share degree 2n, so they are pairwise incomparable already
    return MonomialIdeal(a, b, np.vstack(blocks), _minimal=True)


def count_generators(a: int, b: int, n: int) -> int:
    """μ(I^n) = Σ_s C(s+b-1, b-1) [C(2n-s+a-1, a-1) - a C(n-s+a-2, a-1)]."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if a == 0:
        return 0
    return sum(
        binom(s + b - 1, b - 1) * (binom(2 * n - s + a - 1, a - 1) - a * binom(n - s + a - 2, a - 1))
        for s in range(n + 1)
    )


def stratum_counts(a: int, b: int, n: int) -> list[int]:
    """The summands of :func:`count_generators`, one per y-degree s."""
    return [
        binom(s + b - 1, b - 1) * (binom(2 * n - s + a - 1, a - 1) - a * binom(n - s + a - 2, a - 1))
        for s in range(n + 1)
    ]


def complete_graph_power_generators(a: int, q: int) -> MonomialIdeal:
    """G(I(K_a)^q) = {x^δ : |δ| = 2q, δ_i <= q}, in k[x_1..x_a]; q = 0 gives the unit ideal."""
    if a < 1 or q < 0:
        raise ValueError("need a >= 1 and q >= 0")
    if q == 0:
        return MonomialIdeal.unit(a, 0)
    return MonomialIdeal(a, 0, _composition_array(2 * q, a, q), _minimal=True)


def cross_power_generators(a: int, b: int, s: int) -> MonomialIdeal:
    """G(K^s) = {x^γ y^β : |γ| = |β| = s}."""
    if s < 0:
        raise ValueError("s must be >= 0")
    gammas = _composition_array(s, a)
    betas = _composition_array(s, b)
    rows = np.hstack([np.repeat(gammas, len(betas), axis=0), np.tile(betas, (len(gammas), 1))])
    return MonomialIdeal(a, b, rows, _minimal=True)


def star_count(b: int, n: int) -> int:
    return binom(n + b - 1, b - 1)


@dataclass(frozen=True)
class PrimaryDecomposition:
    """Components given as sets of 0-based variable positions in x_1..x_a, y_1..y_b."""

    a: int
    b: int
    components: tuple[frozenset[int], ...]

    def ideals(self) -> list[MonomialIdeal]:
        return [MonomialIdeal.generated_by_variables(self.a, self.b, c) for c in self.components]

    def names(self) -> list[list[str]]:
        names = variable_names(self.a, self.b)
        return [[names[i] for i in sorted(c)] for c in self.components]

    def without(self, k: int) -> "PrimaryDecomposition":
        return PrimaryDecomposition(self.a, self.b, self.components[:k] + self.components[k + 1:])


def primary_decomposition(a: int, b: int) -> PrimaryDecomposition:
    """(x_1..x_a) and, for each i, (x's without x_i, all y's)."""
    if a < 1:
        raise ValueError("the primary decomposition needs a >= 1")
    xs = frozenset(range(a))
    ys = frozenset(range(a, a + b))
    return PrimaryDecomposition(a, b, (xs,) + tuple((xs - {i}) | ys for i in range(a)))


def verify_primary_decomposition(m: EdgeIdealModel, decomposition: PrimaryDecomposition | None = None,
                                 cap: int = DEFAULT_PRODUCT_CAP) -> bool:
    """Intersect the components, compare with the edge ideal, and check none can be dropped."""
    if m.a < 1:
        raise ValueError("the primary decomposition needs a >= 1")
    if decomposition is None:
        decomposition = primary_decomposition(m.a, m.b)
    comps = decomposition.ideals()
    if not comps or len(set(decomposition.components)) != len(comps):
        return False
    if not equals(intersect_all(comps, cap), m.ideal):
        return False
    for k in range(len(comps)):
        rest = comps[:k] + comps[k + 1:]
        if rest and equals(intersect_all(rest, cap), m.ideal):
            return False
    return True


def height_and_dim(a: int, b: int) -> tuple[int, int, bool]:
    """Height of I, Krull dimension of S/I, and whether I is unmixed, from the decomposition."""
    sizes = [len(c) for c in primary_decomposition(a, b).components]
    ht = min(sizes)
    return ht, (a + b) - ht, len(set(sizes)) == 1


def zpm_parameters(p: int, m: int) -> tuple[int, int]:
    """(a, b) for the prime (p) of Z_{p^m}."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m < 2:
        raise ValueError("m must be >= 2")
    return p ** (m - 1) - 1, p ** (m - 1) * (p - 1)


def zpm_mu(p: int, m: int) -> int:
    """Number of edges of Γ_(p)(Z_{p^m}): C(p^{m-1}-1, 2) + (p^{m-1}-1) p^{m-1} (p-1)."""
    a, b = zpm_parameters(p, m)
    return binom(a, 2) + a * b
