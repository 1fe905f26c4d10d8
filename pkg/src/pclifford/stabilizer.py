"""Fermionic stabilizers over even-parity isotropic subspaces.

A stabilizer group is generated by signed Hermitian strings mubar(b_i)
over an isotropic subspace M of even-parity labels, with a sign
character (-1)^(v^T m) attached through a coset representative v.  The
encoder stab_clifford returns an orthogonal matrix routing the
canonical subspace onto M, column by column.

Subspace bases are canonicalized to reduced row echelon form on
construction; the RREF order is the definitional generator order for
mubar products, which are phase-sensitive to ordering.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .f2core import (
    BitMatrix,
    BitVec,
    dot,
    rref_ints,
    solve_affine,
    symp_product,
)
from .group import OrthogonalMap, _householder_pair, _reflect
from .strings import MajoranaString, compose

__all__ = [
    "IsotropicSubspace",
    "Stabilizer",
    "canonical_isotropic",
    "validate_isotropic",
    "add_ancilla",
    "stab_clifford",
    "stabilizer_element",
    "logical_generators",
    "state_parity",
    "transform_isotropic",
    "transform_stabilizer",
    "parse_stabilizer",
    "format_stabilizer",
]


@dataclass(frozen=True)
class IsotropicSubspace:
    """Even-parity subspace with pairwise vanishing symplectic products.

    The basis is stored in RREF (pivot columns ascending), so equal
    subspaces compare equal regardless of the generators supplied.
    """

    n: int
    basis: tuple[BitVec, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("need at least one mode pair")
        n2 = 2 * self.n
        for b in self.basis:
            if b.n != n2:
                raise ValueError("generator length does not match the mode count")
            if b.parity:
                raise ValueError(f"odd-parity generator {b}")
        for i, b in enumerate(self.basis):
            for c in self.basis[i + 1 :]:
                if symp_product(b, c, "majorana"):
                    raise ValueError(f"generators {b} and {c} do not commute")
        work, pivots = rref_ints([b.bits for b in self.basis])
        if any(p == 0 for p in pivots) or len(work) != len(self.basis):
            raise ValueError("generators are linearly dependent")
        if len(work) > self.n:
            raise ValueError("isotropic dimension exceeds the mode count")
        object.__setattr__(
            self, "basis", tuple(BitVec(n2, bits) for bits in work)
        )

    @property
    def r(self) -> int:
        return len(self.basis)

    def matrix(self) -> BitMatrix:
        return BitMatrix(self.r, 2 * self.n, tuple(b.bits for b in self.basis))

    def reduce(self, v: BitVec) -> BitVec:
        """Lexicographically minimal representative of v + span(basis)."""
        if v.n != 2 * self.n:
            raise ValueError("length mismatch")
        bits = v.bits
        for row in self.basis:
            pivot = 1 << (row.bits.bit_length() - 1)
            if bits & pivot:
                bits ^= row.bits
        return BitVec(v.n, bits)

    def contains(self, v: BitVec) -> bool:
        return self.reduce(v).bits == 0

    def contains_all_ones(self) -> bool:
        return self.contains(BitVec(2 * self.n, (1 << (2 * self.n)) - 1))

    def coords(self, m: BitVec) -> tuple[int, ...]:
        """Expansion coefficients of a member over the RREF basis."""
        if not self.contains(m):
            raise ValueError(f"{m} is not in the subspace")
        # in RREF each pivot column carries exactly one generator
        return tuple(
            (m.bits >> (row.bits.bit_length() - 1)) & 1 for row in self.basis
        )


@dataclass(frozen=True)
class Stabilizer:
    """Isotropic subspace plus a sign character given by a coset rep.

    The sign vector is canonicalized to the lexicographically minimal
    representative of its coset, so equal stabilizers compare equal.
    """

    space: IsotropicSubspace
    sign_vector: Optional[BitVec] = None

    def __post_init__(self) -> None:
        n2 = 2 * self.space.n
        v = self.sign_vector if self.sign_vector is not None else BitVec(n2, 0)
        if v.n != n2:
            raise ValueError("sign vector length does not match the subspace")
        object.__setattr__(self, "sign_vector", self.space.reduce(v))

    @property
    def n(self) -> int:
        return self.space.n

    @property
    def r(self) -> int:
        return self.space.r


def canonical_isotropic(n: int, r: int) -> IsotropicSubspace:
    """First r rows of the consecutive-pair pattern 1100..., 0011..., ..."""
    if not 1 <= r <= n:
        raise ValueError(f"rank {r} out of range 1..{n}")
    n2 = 2 * n
    rows = tuple(BitVec(n2, 0b11 << (n2 - 2 * i)) for i in range(1, r + 1))
    return IsotropicSubspace(n, rows)


def validate_isotropic(rows: Sequence[BitVec]) -> IsotropicSubspace:
    """Canonicalize raw generators, rejecting anything non-isotropic."""
    if not rows:
        raise ValueError("empty generator list")
    if rows[0].n % 2:
        raise ValueError("generators must have even length")
    return IsotropicSubspace(rows[0].n // 2, tuple(rows))


def add_ancilla(M: IsotropicSubspace) -> IsotropicSubspace:
    """Two trailing zero coordinates; pushes the all-ones vector out of
    the span."""
    n2 = 2 * (M.n + 1)
    return IsotropicSubspace(M.n + 1, tuple(BitVec(n2, b.bits << 2) for b in M.basis))


def stab_clifford(M: IsotropicSubspace) -> OrthogonalMap:
    """Orthogonal S mapping the i-th canonical generator to basis[i].

    Walks the generators once; each step routes the current image back
    to the canonical pair with at most two reflections chosen to fix
    everything already routed.  Requires the all-ones vector outside M
    (add_ancilla delivers that), which also caps r at n - 1 so the
    working tail is always at least 4 wide.
    """
    n2 = 2 * M.n
    if M.contains_all_ones():
        raise ValueError("all-ones vector lies in the subspace; run add_ancilla first")
    work = [1 << (n2 - 1 - i) for i in range(n2)]
    for i, b in enumerate(M.basis):
        m = 0
        for k in range(n2):
            m = (m << 1) | ((work[k] & b.bits).bit_count() & 1)
        tw = n2 - 2 * i
        mask = (1 << tw) - 1
        m_tail = m & mask
        m_lead = m >> tw
        # nonzero by independence; not all-ones or the all-ones vector
        # would sit in the subspace
        assert m_tail != 0 and m_tail != mask, "tail invariant violated"
        e_tail = 0b11 << (tw - 2)
        if m_tail == e_tail:
            a_tail = b_tail = 0b0110 << (tw - 4)
        else:
            a_tail, b_tail = _householder_pair(e_tail, m_tail, tw)
        _reflect(work, (m_lead << tw) | a_tail, n2)
        _reflect(work, b_tail, n2)
    # work accumulated the inverse routing; its transpose is S
    return OrthogonalMap(BitMatrix(n2, n2, tuple(work)).transpose())


def stabilizer_element(stab: Stabilizer, m: BitVec) -> MajoranaString:
    """Signed Hermitian stabilizer string for a member label m.

    mubar(m) multiplies the basis strings carrying m's RREF coordinates
    in stored order; the character contributes (-1)^(sign_vector^T m).
    """
    cs = stab.space.coords(m)
    out = MajoranaString(0, BitVec(2 * stab.n, 0))
    for c, b in zip(cs, stab.space.basis):
        if c:
            out = compose(out, MajoranaString(0, b))
    phase = (out.phase + 2 * dot(stab.sign_vector, m)) % 4
    return MajoranaString(phase, out.v)


def logical_generators(stab: Stabilizer) -> list[BitVec]:
    """Basis of the centralizer of M modulo M; 2(n - r) vectors.

    Representatives are reduced against M, so each has zeros in M's
    pivot columns.  Odd-parity representatives can occur exactly when
    the all-ones vector is outside M.
    """
    space = stab.space
    n2 = 2 * space.n
    sol = solve_affine(space.matrix(), BitVec(space.r, 0))
    assert sol is not None  # homogeneous systems are always consistent
    acc = [b.bits for b in space.basis]
    out = []
    for kv in sol.kernel:
        bits = kv.bits
        for row in acc:
            pivot = 1 << (row.bit_length() - 1)
            if bits & pivot:
                bits ^= row
        if bits:
            acc.append(bits)
            out.append(BitVec(n2, bits))
    assert len(out) == n2 - 2 * space.r, "centralizer dimension mismatch"
    return out


def state_parity(stab: Stabilizer) -> int:
    """+1 or -1; defined for maximal stabilizers only."""
    if stab.r != stab.n:
        raise ValueError("state parity needs a maximal stabilizer (r = n)")
    return -1 if stab.sign_vector.parity else 1


def transform_isotropic(S: OrthogonalMap, M: IsotropicSubspace) -> IsotropicSubspace:
    if S.dim != 2 * M.n:
        raise ValueError("dimension mismatch")
    return IsotropicSubspace(M.n, tuple(S.m.mulvec(b) for b in M.basis))


def transform_stabilizer(S: OrthogonalMap, stab: Stabilizer) -> Stabilizer:
    return Stabilizer(
        transform_isotropic(S, stab.space), S.m.mulvec(stab.sign_vector)
    )


# ---------------------------------------------------------------------------
# text format: header `n=<n> r=<r>`, r generator bitstrings, optional sign


def parse_stabilizer(text: str) -> Stabilizer:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty stabilizer file")
    head = lines[0].split()
    try:
        fields = dict(part.split("=", 1) for part in head)
        n = int(fields["n"])
        r = int(fields["r"])
    except (ValueError, KeyError) as exc:
        raise ValueError(f"bad stabilizer header {lines[0]!r}") from exc
    if len(lines) < 1 + r:
        raise ValueError(f"expected {r} generator lines")
    rows = [BitVec.from_string(ln) for ln in lines[1 : 1 + r]]
    sign = None
    for ln in lines[1 + r :]:
        if ln.startswith("sign="):
            sign = BitVec.from_string(ln[len("sign=") :])
        else:
            raise ValueError(f"unrecognized stabilizer line {ln!r}")
    for row in rows:
        if row.n != 2 * n:
            raise ValueError("generator length does not match the header")
    space = IsotropicSubspace(n, tuple(rows))
    return Stabilizer(space, sign)


def format_stabilizer(stab: Stabilizer) -> str:
    lines = [f"n={stab.n} r={stab.r}"]
    lines.extend(str(b) for b in stab.space.basis)
    lines.append(f"sign={stab.sign_vector}")
    return "\n".join(lines) + "\n"
