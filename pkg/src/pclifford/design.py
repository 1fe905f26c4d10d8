"""Frame potentials, fixed-point profiles, orbit counts.

The t-th frame potential of a group of F2 maps is the group average of
f(S)^(t-1), where f counts fixed labels; the parity-restricted variant
averages ((f_+ + c_+)/2)^(t-1) with f_+ the even fixed labels and c_+
the even labels S maps to their complement.  All counts come from rank
computations, never from enumeration; exact potentials are rationals.

Monte Carlo estimates report mean and standard error of the mean; the
sampling draws one level index per recursion level, so a run is
reproducible from (seed, dim, samples) alone.
"""

from __future__ import annotations

import itertools
import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional

from .f2core import BitMatrix, rank_ints
from .group import (
    OrthogonalMap,
    SymplecticMap,
    _build_orthogonal_rows,
    _build_symplectic_rows,
    _orth_level_count,
    _random_orthogonal_rows,
    _symp_int,
    group_order,
)

__all__ = [
    "FixedPointProfile",
    "FramePotentialReport",
    "fixed_point_profile",
    "frame_potential",
    "parity_frame_potential",
    "haar_frame_potential",
    "orbit_count",
    "orbit_decomposition",
    "quotient_action",
]


@dataclass(frozen=True)
class FixedPointProfile:
    """f: all fixed labels; f_plus: even fixed labels; c_plus: even
    labels mapped to their complement (0 or f_plus)."""

    f: int
    f_plus: int
    c_plus: int

    def __post_init__(self) -> None:
        for x in (self.f, self.f_plus):
            if x < 1 or x & (x - 1):
                raise ValueError("fixed-point counts must be powers of two")
        if self.c_plus not in (0, self.f_plus):
            raise ValueError("complemented count must be 0 or f_plus")


@dataclass(frozen=True)
class FramePotentialReport:
    ensemble: str
    dim: int
    t: int
    mode: str
    restricted: bool
    value: Optional[Fraction] = None
    estimate: Optional[float] = None
    std_error: Optional[float] = None
    samples: Optional[int] = None
    seed: Optional[int] = None

    def to_json(self) -> str:
        payload: dict = {
            "ensemble": self.ensemble,
            "dim": self.dim,
            "t": self.t,
            "mode": self.mode,
            "restricted": self.restricted,
        }
        if self.mode == "exact":
            assert self.value is not None
            payload["value"] = (
                int(self.value) if self.value.denominator == 1 else str(self.value)
            )
        else:
            payload["estimate"] = self.estimate
            payload["std_error"] = self.std_error
            payload["samples"] = self.samples
            payload["seed"] = self.seed
        return json.dumps(payload)


# ---------------------------------------------------------------------------
# fixed points by rank


def _fixed_exponent(rows: list[int], dim: int) -> int:
    kicked = [rows[i] ^ (1 << (dim - 1 - i)) for i in range(dim)]
    return dim - rank_ints(kicked)


def _parity_counts(rows: list[int], dim: int) -> tuple[int, int]:
    """(f_plus, c_plus) from two rank computations on S + I."""
    kicked = [rows[i] ^ (1 << (dim - 1 - i)) for i in range(dim)]
    j = (1 << dim) - 1
    r2 = rank_ints(kicked + [j])
    f_plus = 1 << (dim - r2)
    # (S+I)v = j together with j^T v = 0, checked via the augmented rank
    aug = [(row << 1) | 1 for row in kicked] + [j << 1]
    c_plus = f_plus if rank_ints(aug) == r2 else 0
    return f_plus, c_plus


def fixed_point_profile(S: OrthogonalMap | SymplecticMap) -> FixedPointProfile:
    """Counts via kernel ranks of S + I; O(dim^3), no enumeration."""
    rows = list(S.m.data)
    dim = S.m.rows
    f = 1 << _fixed_exponent(rows, dim)
    f_plus, c_plus = _parity_counts(rows, dim)
    return FixedPointProfile(f, f_plus, c_plus)


# ---------------------------------------------------------------------------
# ensemble iteration and the potentials


def _iter_group_rows(kind: str, dim: int) -> Iterator[list[int]]:
    if kind == "orthogonal":
        levels = [range(_orth_level_count(k)) for k in range(dim, 1, -1)]
        for picks in itertools.product(*levels):
            yield _build_orthogonal_rows(dim, picks)
    else:
        levels = [
            list(itertools.product(range((1 << k) - 1), range(1 << (k - 1))))
            for k in range(dim, 0, -2)
        ]
        for picks in itertools.product(*levels):
            yield _build_symplectic_rows(dim, list(picks))


def _random_group_rows(kind: str, dim: int, rng: random.Random) -> list[int]:
    if kind == "orthogonal":
        return _random_orthogonal_rows(dim, rng)
    picks = [
        (rng.randrange((1 << k) - 1), rng.randrange(1 << (k - 1)))
        for k in range(dim, 0, -2)
    ]
    return _build_symplectic_rows(dim, picks)


def _check_ensemble(kind: str, dim: int) -> None:
    if kind not in ("orthogonal", "symplectic"):
        raise ValueError(f"unknown ensemble {kind!r}")
    group_order(kind, dim)  # validates dim for the kind


def _potential(
    kind: str,
    dim: int,
    t: int,
    restricted: bool,
    mode: str,
    budget: int,
    seed,
    samples: int,
) -> FramePotentialReport:
    _check_ensemble(kind, dim)
    if t < 1:
        raise ValueError("frame potential order must be >= 1")
    if restricted and kind != "orthogonal":
        raise ValueError("parity restriction applies to the orthogonal ensemble")
    if mode == "exact":
        order = group_order(kind, dim)
        if order > budget:
            raise ValueError(
                f"group order {order} exceeds the exact-mode budget {budget}"
            )
        total = 0
        for rows in _iter_group_rows(kind, dim):
            if restricted:
                f_plus, c_plus = _parity_counts(rows, dim)
                total += (f_plus + c_plus) ** (t - 1)
            else:
                total += (1 << _fixed_exponent(rows, dim)) ** (t - 1)
        denom = order * (1 << (t - 1)) if restricted else order
        return FramePotentialReport(
            kind, dim, t, "exact", restricted, value=Fraction(total, denom)
        )
    if mode != "monte_carlo":
        raise ValueError(f"unknown mode {mode!r}")
    if samples < 1:
        raise ValueError("need at least one sample")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    acc = 0.0
    acc_sq = 0.0
    for _ in range(samples):
        rows = _random_group_rows(kind, dim, rng)
        if restricted:
            f_plus, c_plus = _parity_counts(rows, dim)
            x = float((f_plus + c_plus) / 2) ** (t - 1)
        else:
            x = float(1 << _fixed_exponent(rows, dim)) ** (t - 1)
        acc += x
        acc_sq += x * x
    est = acc / samples
    if samples > 1:
        var = max(acc_sq - samples * est * est, 0.0) / (samples - 1)
        se = math.sqrt(var / samples)
    else:
        se = float("inf")
    return FramePotentialReport(
        kind,
        dim,
        t,
        "monte_carlo",
        restricted,
        estimate=est,
        std_error=se,
        samples=samples,
        seed=seed if isinstance(seed, int) else None,
    )


def frame_potential(
    kind: str,
    dim: int,
    t: int,
    mode: str = "exact",
    budget: int = 10**7,
    seed=None,
    samples: int = 10**6,
) -> FramePotentialReport:
    """Group average of f(S)^(t-1), exact or Monte Carlo."""
    return _potential(kind, dim, t, False, mode, budget, seed, samples)


def parity_frame_potential(
    dim: int,
    t: int,
    mode: str = "exact",
    budget: int = 10**7,
    seed=None,
    samples: int = 10**6,
) -> FramePotentialReport:
    """Orthogonal-ensemble average of ((f_+ + c_+)/2)^(t-1)."""
    return _potential("orthogonal", dim, t, True, mode, budget, seed, samples)


def haar_frame_potential(t: int, N: int) -> int:
    """Haar reference: Catalan number for N = 2, t! for N >= t."""
    if t < 1:
        raise ValueError("order must be >= 1")
    if N == 2:
        return math.comb(2 * t, t) // (t + 1)
    if N >= t:
        return math.factorial(t)
    raise ValueError(f"no closed form available for t={t}, N={N}")


# ---------------------------------------------------------------------------
# orbits of the generator closure


class _UnionFind:
    def __init__(self, size: int) -> None:
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def _orbit_points(dim: int, space: str) -> list[int]:
    if space == "full":
        return list(range(1 << dim))
    if space == "even_quotient":
        if dim % 2:
            raise ValueError("even quotient needs even dimension")
        j = (1 << dim) - 1
        return [v for v in range(1 << dim) if v.bit_count() % 2 == 0 and v <= v ^ j]
    raise ValueError(f"unknown space {space!r}")


def orbit_decomposition(
    dim: int, tuple_order: int, group: str, space: str = "full"
) -> list[int]:
    """Sorted orbit sizes of the generator closure on (space)^tuple_order.

    Orthogonal generators are the weight-2/4 reflections; symplectic
    generators are all nonzero transvections.  The symplectic group
    does not act on the even quotient (transvections move the all-ones
    vector), so that combination is rejected.
    """
    if tuple_order < 1:
        raise ValueError("tuple order must be >= 1")
    if group == "symplectic":
        if dim % 2:
            raise ValueError("symplectic groups need even dimension")
        if space == "even_quotient":
            raise ValueError("the symplectic group does not act on the even quotient")
        gens: Iterable[int] = range(1, 1 << dim)
    elif group == "orthogonal":
        gens = [a for a in range(1 << dim) if a.bit_count() in (2, 4)]
    else:
        raise ValueError(f"unknown group {group!r}")
    points = _orbit_points(dim, space)
    npts = len(points)
    total = npts**tuple_order
    if total > 1 << 16:
        raise ValueError(f"{total} tuples is too large to enumerate")
    pos = {p: i for i, p in enumerate(points)}
    j = (1 << dim) - 1
    uf = _UnionFind(total)
    for a in gens:
        if group == "orthogonal":
            img_pt = [
                p ^ (a if (p & a).bit_count() & 1 else 0) for p in points
            ]
        else:
            img_pt = [p ^ (a if _symp_int(a, p, dim) else 0) for p in points]
        if space == "even_quotient":
            img_pt = [min(p, p ^ j) for p in img_pt]
        img = [pos[p] for p in img_pt]
        for tidx in range(total):
            rem = tidx
            out = 0
            mult = 1
            for _ in range(tuple_order):
                out += img[rem % npts] * mult
                rem //= npts
                mult *= npts
            uf.union(tidx, out)
    sizes: dict[int, int] = {}
    for tidx in range(total):
        root = uf.find(tidx)
        sizes[root] = sizes.get(root, 0) + 1
    return sorted(sizes.values())


def orbit_count(dim: int, tuple_order: int, group: str, space: str = "full") -> int:
    return len(orbit_decomposition(dim, tuple_order, group, space))


# ---------------------------------------------------------------------------
# quotient embedding Sp(2n-2) <= O(2n)


def _embedding_rows(n2: int) -> list[int]:
    """Symplectic basis of the even labels modulo the all-ones vector.

    Row pairs (odd, even) for k = 1..n-1; the pairwise dot products
    reproduce the standard pair form, all rows leave the last position
    clear, and every row has even weight.
    """
    rows = []
    for k in range(1, n2 // 2):
        prefix_odd = ((1 << (2 * k - 1)) - 1) << (n2 - (2 * k - 1))
        rows.append(prefix_odd | (1 << (n2 - (2 * k + 1))))
        rows.append(((1 << (2 * k)) - 1) << (n2 - 2 * k))
    return rows


def quotient_action(S: OrthogonalMap) -> SymplecticMap:
    """Induced symplectic action on even labels modulo the all-ones
    vector, expressed in the embedded pair basis; a homomorphism onto
    Sp(dim-2) with kernel of size 2^(dim-1)."""
    n2 = S.dim
    if n2 < 4:
        raise ValueError("quotient action needs at least two mode pairs")
    rows = _embedding_rows(n2)
    swapped = []
    for k in range(0, len(rows), 2):
        swapped.append(rows[k + 1])
        swapped.append(rows[k])
    B = BitMatrix(n2 - 2, n2, tuple(rows))
    B_sw = BitMatrix(n2 - 2, n2, tuple(swapped))
    return SymplecticMap(B_sw.mul(S.m).mul(B.transpose()), "pauli")
