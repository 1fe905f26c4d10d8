"""Generators and uniform sampling for O(N, F2) and Sp(2n, F2).

Parity-preserving Cliffords are represented projectively by orthogonal
matrices; the braiding operator with even label a acts on labels as the
Householder reflection h_a = I + a a^T.  General Cliffords correspond to
symplectic matrices and transvections.

Index-based samplers are bijections from 1..|G| onto the group, built
level by level: each level fixes the image of one standard basis vector
(one symplectic pair for Sp) and recurses on the stabilizer.  At odd
level N the all-ones vector cannot be a column of an orthogonal matrix,
so that level has 2**(N-1) - 1 choices rather than 2**(N-1); the odd
levels are what make |O(2n)| smaller than |Sp(2n)|.

Random samplers draw one level index per level, never a big integer.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

from .f2core import (
    BitMatrix,
    BitVec,
    dot,
    make_form,
    solve_affine,
    symp_product,
)
from .strings import MajoranaString, parse_string, format_string, zeta_coeff

__all__ = [
    "OrthogonalMap",
    "SymplecticMap",
    "CliffordWord",
    "apply_householder",
    "transvection_apply",
    "braid_action",
    "find_householders",
    "sample_orthogonal",
    "sample_orthogonal_random",
    "sample_symplectic",
    "sample_symplectic_random",
    "group_order",
    "decompose_orthogonal",
    "reflection_product",
    "reduce_to_elementary",
    "word_orthogonal",
    "parse_braid_word",
    "format_braid_word",
]


@dataclass(frozen=True)
class OrthogonalMap:
    """Binary matrix with m^T m = I; automatically fixes the all-ones vector."""

    m: BitMatrix

    def __post_init__(self) -> None:
        m = self.m
        if m.rows != m.cols:
            raise ValueError("orthogonal map must be square")
        if m.transpose().mul(m) != BitMatrix.identity(m.rows):
            raise ValueError("matrix is not orthogonal")
        j = make_form("all_ones", m.rows)
        if m.mulvec(j) != j:
            raise ValueError("orthogonal map must fix the all-ones vector")

    @property
    def dim(self) -> int:
        return self.m.rows


@dataclass(frozen=True)
class SymplecticMap:
    """Binary matrix preserving the commutation form of its basis."""

    m: BitMatrix
    basis: str = "pauli"

    def __post_init__(self) -> None:
        m = self.m
        if m.rows != m.cols or m.rows % 2:
            raise ValueError("symplectic map must be square of even dimension")
        kind = "eta" if self.basis == "pauli" else "omega"
        if self.basis not in ("pauli", "majorana"):
            raise ValueError(f"unknown basis {self.basis!r}")
        form = make_form(kind, m.rows)
        if m.transpose().mul(form).mul(m) != form:
            raise ValueError("matrix does not preserve the symplectic form")

    @property
    def dim(self) -> int:
        return self.m.rows


@dataclass(frozen=True)
class CliffordWord:
    """Braid generator word, optionally prefixed by a single string.

    The represented unitary is prefix * B(a_1) * ... * B(a_m); under
    conjugation the rightmost generator acts first, so the word's F2
    representation is the matrix product h_{a_1} ... h_{a_m}.
    """

    n: int
    gens: tuple[BitVec, ...] = field(default_factory=tuple)
    prefix: Optional[MajoranaString] = None
    allow_odd: bool = False

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("need at least one mode pair")
        for a in self.gens:
            if a.n != 2 * self.n:
                raise ValueError("generator length does not match the word")
            if a.parity and not self.allow_odd:
                raise ValueError("odd-parity generator in a parity-preserving word")
        if self.prefix is not None and self.prefix.v.n != 2 * self.n:
            raise ValueError("prefix length does not match the word")


# ---------------------------------------------------------------------------
# elementary actions


def apply_householder(a: BitVec, v: BitVec) -> BitVec:
    """h_a v = v + (a^T v) a; requires even-parity a."""
    if a.n != v.n:
        raise ValueError("length mismatch")
    if a.parity:
        raise ValueError("householder vector must have even parity")
    return BitVec(v.n, v.bits ^ (a.bits if dot(a, v) else 0))


def transvection_apply(a: BitVec, v: BitVec, basis: str = "majorana") -> BitVec:
    """v + <a, v> a; coincides with apply_householder for even a in the
    majorana basis."""
    if a.n != v.n:
        raise ValueError("length mismatch")
    return BitVec(v.n, v.bits ^ (a.bits if symp_product(a, v, basis) else 0))


def braid_action(a: BitVec, s: MajoranaString, allow_odd: bool = False) -> MajoranaString:
    """Conjugation of a string by the braid B(a), phase included.

    Strings commuting with mu(a) are untouched; anticommuting ones pick
    up i * zeta(a, v) and move to v + a.
    """
    if a.n != s.v.n:
        raise ValueError("length mismatch")
    if a.parity and not allow_odd:
        raise ValueError("braid vector must have even parity")
    if symp_product(a, s.v, s.basis) == 0:
        return s
    phase = (s.phase + 1 + zeta_coeff(a, s.v, s.basis)) % 4
    return MajoranaString(phase, a ^ s.v, s.basis)


# ---------------------------------------------------------------------------
# packed-row helpers (index 1 is the most significant bit, as in f2core)


def _reflect(rows: list[int], a: int, n: int) -> None:
    """In-place left multiplication by h_a on packed rows."""
    if a == 0:
        return
    acc = 0
    x = a
    while x:
        p = (x & -x).bit_length() - 1
        acc ^= rows[n - 1 - p]
        x &= x - 1
    x = a
    while x:
        p = (x & -x).bit_length() - 1
        rows[n - 1 - p] ^= acc
        x &= x - 1


def _top_bit(x: int) -> int:
    return 1 << (x.bit_length() - 1)


def _householder_pair(v: int, w: int, n: int) -> tuple[int, int]:
    """Raw Algorithm: even a, b with h_b h_a v = w (and also w -> v).

    Callers guarantee p(v) = p(w) and v, w not in {0, all-ones}.
    """
    if v == w:
        return 0, 0
    pv = v.bit_count() & 1
    if ((v & w).bit_count() & 1) ^ pv == 1:
        # v^T w = 1 - p(v): one reflection suffices
        return v ^ w, 0
    full = (1 << n) - 1
    common0 = full & ~v & ~w
    common1 = v & w
    if common0 and common1:
        a = _top_bit(common0) | _top_bit(common1)
    else:
        # mixed pair: one index set only in v, one only in w
        a = _top_bit(v & ~w) | _top_bit(w & ~v)
    return a, v ^ w ^ a


def find_householders(v: BitVec, w: BitVec) -> tuple[BitVec, BitVec]:
    """At most two reflections mapping v to w; b may be zero.

    Preconditions: equal lengths and parities; neither vector is zero
    or all-ones.
    """
    if v.n != w.n:
        raise ValueError("length mismatch")
    if v.parity != w.parity:
        raise ValueError("parities differ")
    full = (1 << v.n) - 1
    for x in (v, w):
        if x.bits == 0 or x.bits == full:
            raise ValueError("zero and all-ones vectors are not connectable")
    a, b = _householder_pair(v.bits, w.bits, v.n)
    return BitVec(v.n, a), BitVec(v.n, b)


# ---------------------------------------------------------------------------
# group orders and index sampling


def _orth_level_count(k: int) -> int:
    # odd-parity first columns; the all-ones vector is impossible at odd k
    return (1 << (k - 1)) - (k & 1)


@lru_cache(maxsize=None)
def group_order(kind: str, dim: int) -> int:
    if dim < 1:
        raise ValueError("dimension must be >= 1")
    if kind == "orthogonal":
        order = 1
        for k in range(2, dim + 1):
            order *= _orth_level_count(k)
        return order
    if kind == "symplectic":
        if dim % 2:
            raise ValueError("symplectic groups need even dimension")
        n = dim // 2
        order = 1 << (n * n)
        for i in range(1, n + 1):
            order *= (1 << (2 * i)) - 1
        return order
    raise ValueError(f"unknown group kind {kind!r}")


def _odd_parity_vector(k: int, idx: int) -> int:
    """idx-th odd-parity vector of length k in lexicographic order."""
    return (idx << 1) | (1 ^ (idx.bit_count() & 1))


def _build_orthogonal_rows(dim: int, picks: Sequence[int]) -> list[int]:
    rows = [1]
    for k in range(2, dim + 1):
        f = _odd_parity_vector(k, picks[dim - k])
        a, b = _householder_pair(1 << (k - 1), f, k)
        rows = [1 << (k - 1)] + rows
        _reflect(rows, a, k)
        _reflect(rows, b, k)
    return rows


def sample_orthogonal(dim: int, index: int) -> OrthogonalMap:
    """Bijection from 1..|O(dim)| onto the orthogonal group."""
    order = group_order("orthogonal", dim)
    if not 1 <= index <= order:
        raise ValueError(f"index {index} out of range 1..{order}")
    rem = index - 1
    picks = [0] * max(dim - 1, 0)
    for k in range(dim, 1, -1):
        p = _orth_level_count(k)
        picks[dim - k] = rem % p
        rem //= p
    rows = _build_orthogonal_rows(dim, picks)
    return OrthogonalMap(BitMatrix(dim, dim, tuple(rows)))


def _random_orthogonal_rows(dim: int, rng: random.Random) -> list[int]:
    picks = [rng.randrange(_orth_level_count(k)) for k in range(dim, 1, -1)]
    return _build_orthogonal_rows(dim, picks)


def sample_orthogonal_random(dim: int, seed=None) -> OrthogonalMap:
    """Uniform over O(dim): one level index drawn per recursion level."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    rows = _random_orthogonal_rows(dim, rng)
    return OrthogonalMap(BitMatrix(dim, dim, tuple(rows)))


# ---------------------------------------------------------------------------
# symplectic sampling (pauli basis internally)


def _symp_int(a: int, b: int, dim: int) -> int:
    hi = int("10" * (dim // 2), 2)
    lo = int("01" * (dim // 2), 2)
    swapped = ((b & hi) >> 1) | ((b & lo) << 1)
    return (a & swapped).bit_count() & 1


def _transvect_int(h: int, x: int, dim: int) -> int:
    return x ^ (h if _symp_int(h, x, dim) else 0)


def _solve_symp_constraints(vecs: list[int], dim: int) -> int:
    """Some x with <v, x> = 1 for every v in vecs; callers guarantee
    consistency."""
    hi = int("10" * (dim // 2), 2)
    lo = int("01" * (dim // 2), 2)
    rows = tuple(((v & hi) >> 1) | ((v & lo) << 1) for v in vecs)
    sol = solve_affine(
        BitMatrix(len(rows), dim, rows), BitVec(len(rows), (1 << len(rows)) - 1)
    )
    assert sol is not None, "inconsistent transvection constraints"
    return sol.x0.bits


def _pair_transvections(c1: int, c2: int, dim: int) -> list[int]:
    """Transvection vectors routing (e1, e2) to (c1, c2), applied in list
    order; c1 nonzero and <c1, c2> = 1."""
    e1 = 1 << (dim - 1)
    e2 = 1 << (dim - 2)
    if c1 == e1:
        t_part: list[int] = []
    elif _symp_int(e1, c1, dim):
        t_part = [e1 ^ c1]
    else:
        w = _solve_symp_constraints([e1, c1], dim)
        t_part = [e1 ^ w, w ^ c1]
    d = c2
    for h in reversed(t_part):
        d = _transvect_int(h, d, dim)
    if d == e2:
        m_part: list[int] = []
    elif _symp_int(e2, d, dim):
        m_part = [e2 ^ d]
    else:
        w = _solve_symp_constraints([e1, e2, d], dim)
        m_part = [e2 ^ w, w ^ d]
    return m_part + t_part


def _apply_transvection_rows(rows: list[int], h: int, dim: int) -> None:
    """In-place left multiplication by the transvection matrix of h."""
    if h == 0:
        return
    hi = int("10" * (dim // 2), 2)
    lo = int("01" * (dim // 2), 2)
    eta_h = ((h & hi) >> 1) | ((h & lo) << 1)
    acc = 0
    x = eta_h
    while x:
        p = (x & -x).bit_length() - 1
        acc ^= rows[dim - 1 - p]
        x &= x - 1
    x = h
    while x:
        p = (x & -x).bit_length() - 1
        rows[dim - 1 - p] ^= acc
        x &= x - 1
    return


def _build_symplectic_rows(dim: int, picks: list[tuple[int, int]]) -> list[int]:
    if dim == 0:
        return []
    k1, k2 = picks[0]
    c1 = k1 + 1
    hi = int("10" * (dim // 2), 2)
    lo = int("01" * (dim // 2), 2)
    eta_c1 = ((c1 & hi) >> 1) | ((c1 & lo) << 1)
    sol = solve_affine(BitMatrix(1, dim, (eta_c1,)), BitVec(1, 1))
    assert sol is not None
    # the 2**(dim-1) partners of c1 are x0 plus kernel combinations
    c2 = sol.x0.bits
    for t, kv in enumerate(sol.kernel):
        if (k2 >> t) & 1:
            c2 ^= kv.bits
    trans = _pair_transvections(c1, c2, dim)
    sub = _build_symplectic_rows(dim - 2, picks[1:])
    rows = [1 << (dim - 1), 1 << (dim - 2)] + [r for r in sub]
    for h in trans:
        _apply_transvection_rows(rows, h, dim)
    return rows


def _symplectic_to_majorana(rows: tuple[int, ...], dim: int) -> BitMatrix:
    W = make_form("jw", dim)
    return W.mul(BitMatrix(dim, dim, rows)).mul(W)


def sample_symplectic(dim: int, index: int, basis: str = "pauli") -> SymplecticMap:
    """Bijection from 1..|Sp(dim)| onto the symplectic group."""
    order = group_order("symplectic", dim)
    if not 1 <= index <= order:
        raise ValueError(f"index {index} out of range 1..{order}")
    rem = index - 1
    picks = []
    for k in range(dim, 0, -2):
        s = (1 << k) - 1
        h = 1 << (k - 1)
        lvl = rem % (s * h)
        rem //= s * h
        picks.append((lvl % s, lvl // s))
    rows = tuple(_build_symplectic_rows(dim, picks))
    if basis == "majorana":
        return SymplecticMap(_symplectic_to_majorana(rows, dim), "majorana")
    return SymplecticMap(BitMatrix(dim, dim, rows), "pauli")


def sample_symplectic_random(dim: int, seed=None, basis: str = "pauli") -> SymplecticMap:
    """Uniform over Sp(dim); per-level draws, deterministic given seed."""
    if dim % 2 or dim < 2:
        raise ValueError("symplectic groups need even dimension >= 2")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    picks = []
    for k in range(dim, 0, -2):
        picks.append((rng.randrange((1 << k) - 1), rng.randrange(1 << (k - 1))))
    rows = tuple(_build_symplectic_rows(dim, picks))
    if basis == "majorana":
        return SymplecticMap(_symplectic_to_majorana(rows, dim), "majorana")
    return SymplecticMap(BitMatrix(dim, dim, rows), "pauli")


# ---------------------------------------------------------------------------
# decomposition into generators


def decompose_orthogonal(S: OrthogonalMap) -> list[BitVec]:
    """Householder word (length <= 2N) whose reflection product is S.

    Columns are fixed left to right; each step costs two reflections at
    most, and identity steps contribute nothing.
    """
    N = S.dim
    work = list(S.m.data)
    word: list[int] = []
    for k in range(N, 1, -1):
        off = N - k
        shift = k - 1
        fbits = 0
        for i in range(off, N):
            fbits = (fbits << 1) | ((work[i] >> shift) & 1)
        a, b = _householder_pair(1 << shift, fbits, k)
        block = [work[i] & ((1 << k) - 1) for i in range(off, N)]
        _reflect(block, a, k)
        _reflect(block, b, k)
        assert block[0] == 1 << shift, "column peel failed"
        for i in range(off, N):
            work[i] = block[i - off]
        for bits in (a, b):
            if bits:
                word.append(bits)
    assert work[N - 1] == 1
    return [BitVec(N, bits) for bits in word]


def reflection_product(word: Sequence[BitVec], dim: int) -> BitMatrix:
    """Matrix product h_{w1} h_{w2} ... h_{wm}; empty product is identity."""
    rows = [1 << (dim - 1 - i) for i in range(dim)]
    for x in reversed(word):
        if x.n != dim:
            raise ValueError("word vector length does not match dimension")
        if x.parity:
            raise ValueError("householder vector must have even parity")
        _reflect(rows, x.bits, dim)
    return BitMatrix(dim, dim, tuple(rows))


def word_orthogonal(word: CliffordWord) -> OrthogonalMap:
    """F2 representation h_{a1} ... h_{am} of a parity-preserving word.

    The prefix string conjugates every label to itself, so it does not
    appear here.
    """
    for a in word.gens:
        if a.parity:
            raise ValueError("word contains an odd-parity generator")
    return OrthogonalMap(reflection_product(word.gens, 2 * word.n))


def reduce_to_elementary(a: BitVec) -> list[BitVec]:
    """Expand h_a into weight-2/4 reflections via h_b h_x h_b = h_{h_b x}.

    The returned word multiplies out to h_a exactly; its length is
    weight(a) - 3 for weights above 4.
    """
    if a.parity:
        raise ValueError("householder vector must have even parity")
    full = (1 << a.n) - 1
    if a.bits == 0 or a.bits == full:
        raise ValueError("zero and all-ones vectors are excluded")

    def rec(bits: int) -> list[int]:
        if bits.bit_count() in (2, 4):
            return [bits]
        top3 = 0
        x = bits
        for _ in range(3):
            t = _top_bit(x)
            top3 |= t
            x ^= t
        clear = ~bits & full
        b = top3 | (clear & -clear)
        return [b] + rec(bits ^ b) + [b]

    return [BitVec(a.n, bits) for bits in rec(a.bits)]


# ---------------------------------------------------------------------------
# braid word text format


def parse_braid_word(text: str, n: Optional[int] = None) -> CliffordWord:
    """Braid word format: optional 'P i^<a> <bits>' line, then 'B <bits>'
    lines."""
    prefix = None
    gens = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("P "):
            if prefix is not None or gens:
                raise ValueError("prefix line must come first")
            prefix = parse_string(line[2:])
        elif line.startswith("B "):
            gens.append(BitVec.from_string(line[2:]))
        else:
            raise ValueError(f"unrecognized braid word line: {line!r}")
    if n is None:
        if prefix is not None:
            n = prefix.v.n // 2
        elif gens:
            n = gens[0].n // 2
        else:
            raise ValueError("empty braid word needs an explicit mode count")
    return CliffordWord(n, tuple(gens), prefix)


def format_braid_word(word: CliffordWord) -> str:
    lines = []
    if word.prefix is not None:
        lines.append("P " + format_string(word.prefix))
    lines.extend("B " + str(a) for a in word.gens)
    return "\n".join(lines) + ("\n" if lines else "")
