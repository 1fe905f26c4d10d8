"""Phase-exact algebra of Majorana and Pauli strings.

A string is a pair (phase exponent, F2 vector) with a basis tag.  The
phase is an exponent of i, kept mod 4, never a float.  Composition
multiplies the underlying operators exactly:

    mu(v) mu(w) = zeta(v, w) mu(v + w)

with zeta(v, w) = (-1)**(v^T L w + f(v, w)) * i**<v, w>, where L is the
strictly lower triangular part of the commutation form, <.,.> is the
symplectic product, and f is the symmetric correction

    f(v, w) = q(v) q(w) + <v, w> (q(v) + q(w) + 1),  q(u) = u^T L u.

The same shape works in both bases, with (omega_lower, omega) for
Majorana labels and (eta_lower, eta) for Pauli labels.  Dense fidelity
of all of this is pinned down in the oracle module.
"""

from __future__ import annotations

from dataclasses import dataclass

from .f2core import BitVec, make_form, symp_product

__all__ = [
    "MajoranaString",
    "zeta_coeff",
    "compose",
    "commutes",
    "jordan_wigner_map",
    "parity_operator",
    "quad_lower",
    "parse_string",
    "format_string",
]

BASES = ("majorana", "pauli")


@dataclass(frozen=True)
class MajoranaString:
    """i**phase times the basis string labeled by v."""

    phase: int
    v: BitVec
    basis: str = "majorana"

    def __post_init__(self) -> None:
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        if self.v.n % 2:
            raise ValueError("string labels have even length")
        object.__setattr__(self, "phase", self.phase % 4)

    @property
    def n(self) -> int:
        return self.v.n // 2

    def __str__(self) -> str:
        return format_string(self)


def _pair_mask(n: int) -> int:
    # ones at the even bit positions, entry indices 2, 4, ...
    return int("01" * (n // 2), 2)


def quad_lower(v: BitVec, basis: str = "majorana") -> int:
    """q(v) = v^T L v with L the strictly lower triangle of the form."""
    if basis == "majorana":
        w = v.bits.bit_count()
        return (w * (w - 1) // 2) & 1
    if basis == "pauli":
        both = v.bits & (v.bits >> 1) & _pair_mask(v.n)
        return both.bit_count() & 1
    raise ValueError(f"unknown basis {basis!r}")


def _cross_lower(v: BitVec, w: BitVec, basis: str) -> int:
    """v^T L w, exploiting the prefix structure of both forms."""
    if basis == "majorana":
        acc = 0
        x = v.bits
        while x:
            p = (x & -x).bit_length() - 1
            acc ^= (w.bits >> (p + 1)).bit_count() & 1
            x &= x - 1
        return acc
    if basis == "pauli":
        hit = v.bits & (w.bits >> 1) & _pair_mask(v.n)
        return hit.bit_count() & 1
    raise ValueError(f"unknown basis {basis!r}")


def zeta_coeff(v: BitVec, w: BitVec, basis: str = "majorana") -> int:
    """Composition coefficient zeta(v, w) as an exponent of i, mod 4."""
    if v.n != w.n:
        raise ValueError("length mismatch")
    if v.n % 2:
        raise ValueError("string labels have even length")
    s = symp_product(v, w, basis)
    qv = quad_lower(v, basis)
    qw = quad_lower(w, basis)
    cross = _cross_lower(v, w, basis)
    f = (qv & qw) ^ (s & (qv ^ qw ^ 1))
    return (2 * ((cross ^ f) & 1) + s) % 4


def compose(s1: MajoranaString, s2: MajoranaString) -> MajoranaString:
    """Exact operator product of two strings."""
    if s1.basis != s2.basis:
        raise ValueError("basis mismatch")
    if s1.v.n != s2.v.n:
        raise ValueError("length mismatch")
    phase = (s1.phase + s2.phase + zeta_coeff(s1.v, s2.v, s1.basis)) % 4
    return MajoranaString(phase, s1.v ^ s2.v, s1.basis)


def commutes(s1: MajoranaString, s2: MajoranaString) -> bool:
    if s1.basis != s2.basis:
        raise ValueError("basis mismatch")
    return symp_product(s1.v, s2.v, s1.basis) == 0


def jordan_wigner_map(s: MajoranaString) -> MajoranaString:
    """Relabel v -> W v and flip the basis tag; involutive.

    The identification is at the level of vector labels; dense phase
    fidelity is the oracle module's business.
    """
    W = make_form("jw", s.v.n)
    other = "pauli" if s.basis == "majorana" else "majorana"
    return MajoranaString(s.phase, W.mulvec(s.v), other)


def parity_operator(n: int) -> MajoranaString:
    """The all-modes string mu(j); commutes exactly with even strings."""
    if n < 1:
        raise ValueError("need at least one mode pair")
    return MajoranaString(0, make_form("all_ones", 2 * n), "majorana")


def parse_string(text: str, basis: str = "majorana") -> MajoranaString:
    """String text format: 'i^<a> <bitstring>'."""
    parts = text.split()
    if len(parts) != 2 or not parts[0].startswith("i^"):
        raise ValueError(f"expected 'i^<a> <bitstring>', got {text!r}")
    try:
        phase = int(parts[0][2:])
    except ValueError as exc:
        raise ValueError(f"bad phase exponent in {text!r}") from exc
    return MajoranaString(phase, BitVec.from_string(parts[1]), basis)


def format_string(s: MajoranaString) -> str:
    return f"i^{s.phase} {s.v}"
