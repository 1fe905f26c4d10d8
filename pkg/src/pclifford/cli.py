"""Command line interface.

Exit codes: 0 success, 1 input or usage error, 2 internal failure.
Randomized subcommands draw no entropy from the environment; --seed
defaults to DEFAULT_SEED so repeated invocations agree byte for byte.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .f2core import BitVec, format_matrix, make_form
from .strings import MajoranaString, compose, format_string, parse_string
from .group import (
    CliffordWord,
    braid_action,
    decompose_orthogonal,
    format_braid_word,
    group_order,
    sample_orthogonal,
    sample_orthogonal_random,
    sample_symplectic,
    sample_symplectic_random,
)
from .stabilizer import (
    add_ancilla,
    canonical_isotropic,
    parse_stabilizer,
    stab_clifford,
    transform_isotropic,
)
from .design import frame_potential, orbit_decomposition, parity_frame_potential
from . import dense

DEFAULT_SEED = 271828

_GROUPS = {"o": "orthogonal", "sp": "symplectic"}


@dataclass(frozen=True)
class CliConfig:
    """Parsed invocation: subcommand name, flag map, seed, input path."""

    subcommand: str
    flags: dict = field(default_factory=dict)
    seed: Optional[int] = None
    input_path: Optional[str] = None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pclifford",
        description="Majorana-label Clifford algebra: sampling, encoding, designs.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_dim(p, with_n=True):
        p.add_argument("--dim", type=int, help="label dimension (2n)")
        if with_n:
            p.add_argument("--n", type=int, help="mode pairs; shorthand for --dim 2n")

    p = sub.add_parser("order", help="group order")
    p.add_argument("--group", choices=sorted(_GROUPS), required=True)
    add_dim(p)

    p = sub.add_parser("sample", help="sample one group element")
    p.add_argument("--group", choices=sorted(_GROUPS), required=True)
    add_dim(p)
    p.add_argument("--index", type=int, help="1-based element index (exact bijection)")
    p.add_argument("--seed", type=int, help=f"rng seed (default {DEFAULT_SEED})")
    p.add_argument("--basis", choices=["majorana", "pauli"])

    p = sub.add_parser("jw", help="basis-change matrix between label conventions")
    add_dim(p)

    p = sub.add_parser("compose", help="multiply strings read from a file or stdin")
    p.add_argument("path", nargs="?", help="input file ('-' or omitted: stdin)")
    p.add_argument("--basis", choices=["majorana", "pauli"], default="majorana")

    p = sub.add_parser("stab-encode", help="orthogonal encoder for a stabilizer file")
    p.add_argument("path", nargs="?", help="stabilizer file ('-' or omitted: stdin)")

    p = sub.add_parser("frame", help="frame potential report as JSON")
    p.add_argument("--group", choices=sorted(_GROUPS), required=True)
    add_dim(p)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--exact", action="store_true")
    p.add_argument("--samples", type=int, default=10**5)
    p.add_argument("--seed", type=int, help=f"rng seed (default {DEFAULT_SEED})")
    p.add_argument("--parity-restricted", action="store_true")

    p = sub.add_parser("orbits", help="orbit sizes of the generator closure")
    p.add_argument("--group", choices=sorted(_GROUPS), required=True)
    add_dim(p)
    p.add_argument("--tuple-order", type=int, default=1)
    p.add_argument("--space", choices=["full", "even-quotient"], default="full")

    p = sub.add_parser("verify", help="dense-oracle cross checks; exit 0 iff all pass")
    p.add_argument("--seed", type=int, help=f"rng seed (default {DEFAULT_SEED})")

    return parser


def _resolve_dim(cfg: CliConfig) -> int:
    dim = cfg.flags.get("dim")
    n = cfg.flags.get("n")
    if (dim is None) == (n is None):
        raise ValueError("give exactly one of --dim or --n")
    return dim if dim is not None else 2 * n


def _read_text(path: Optional[str]) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_order(cfg: CliConfig) -> int:
    print(group_order(_GROUPS[cfg.flags["group"]], _resolve_dim(cfg)))
    return 0


def _cmd_sample(cfg: CliConfig) -> int:
    kind = _GROUPS[cfg.flags["group"]]
    dim = _resolve_dim(cfg)
    index = cfg.flags.get("index")
    basis = cfg.flags.get("basis")
    if index is not None and cfg.flags.get("seed") is not None:
        raise ValueError("--index and --seed are mutually exclusive")
    seed = cfg.seed if cfg.seed is not None else DEFAULT_SEED
    if kind == "orthogonal":
        if basis is not None:
            raise ValueError("--basis applies to symplectic sampling only")
        out = (
            sample_orthogonal(dim, index)
            if index is not None
            else sample_orthogonal_random(dim, seed)
        )
    else:
        basis = basis or "pauli"
        out = (
            sample_symplectic(dim, index, basis)
            if index is not None
            else sample_symplectic_random(dim, seed, basis)
        )
    sys.stdout.write(format_matrix(out.m))
    return 0


def _cmd_jw(cfg: CliConfig) -> int:
    sys.stdout.write(format_matrix(make_form("jw", _resolve_dim(cfg))))
    return 0


def _cmd_compose(cfg: CliConfig) -> int:
    basis = cfg.flags["basis"]
    lines = [ln for ln in _read_text(cfg.input_path).splitlines() if ln.strip()]
    if not lines:
        raise ValueError("no strings to compose")
    out = parse_string(lines[0], basis)
    for ln in lines[1:]:
        out = compose(out, parse_string(ln, basis))
    print(format_string(out))
    return 0


def _cmd_stab_encode(cfg: CliConfig) -> int:
    stab = parse_stabilizer(_read_text(cfg.input_path))
    S = stab_clifford(stab.space)
    word = decompose_orthogonal(S)
    sys.stdout.write(format_matrix(S.m))
    sys.stdout.write(format_braid_word(CliffordWord(stab.n, tuple(word))))
    return 0


def _cmd_frame(cfg: CliConfig) -> int:
    kind = _GROUPS[cfg.flags["group"]]
    dim = _resolve_dim(cfg)
    t = cfg.flags["t"]
    mode = "exact" if cfg.flags["exact"] else "monte_carlo"
    seed = cfg.seed if cfg.seed is not None else DEFAULT_SEED
    if cfg.flags["parity_restricted"]:
        if kind != "orthogonal":
            raise ValueError("--parity-restricted requires --group o")
        report = parity_frame_potential(
            dim, t, mode=mode, seed=seed, samples=cfg.flags["samples"]
        )
    else:
        report = frame_potential(
            kind, dim, t, mode=mode, seed=seed, samples=cfg.flags["samples"]
        )
    print(report.to_json())
    return 0


def _cmd_orbits(cfg: CliConfig) -> int:
    kind = _GROUPS[cfg.flags["group"]]
    dim = _resolve_dim(cfg)
    space = cfg.flags["space"].replace("-", "_")
    sizes = orbit_decomposition(dim, cfg.flags["tuple_order"], kind, space)
    print(
        json.dumps(
            {
                "group": kind,
                "dim": dim,
                "space": cfg.flags["space"],
                "tuple_order": cfg.flags["tuple_order"],
                "count": len(sizes),
                "sizes": sizes,
            }
        )
    )
    return 0


# ---------------------------------------------------------------------------
# verify: dense-oracle cross checks


def _suite_jw_involution(rng: random.Random):
    for dim in range(2, 18, 2):
        W = make_form("jw", dim)
        if W.mul(W) != make_form("identity", dim):
            return False, f"W^2 != I at dim {dim}"
        eta = make_form("eta", dim)
        omega = make_form("omega", dim)
        if W.transpose().mul(eta).mul(W) != omega:
            return False, f"W^T eta W != omega at dim {dim}"
    return True, "dims 2..16"


def _suite_string_composition(rng: random.Random):
    import numpy as np

    checked = 0
    for n2 in (2, 4):
        cache = {
            bits: dense.dense_string(MajoranaString(0, BitVec(n2, bits)))
            for bits in range(1 << n2)
        }
        for vb in range(1 << n2):
            for wb in range(1 << n2):
                v, w = BitVec(n2, vb), BitVec(n2, wb)
                got = compose(MajoranaString(0, v), MajoranaString(0, w))
                want = cache[vb] @ cache[wb]
                if not np.array_equal(dense.dense_string(got), want):
                    return False, f"mismatch at {v} * {w}"
                checked += 1
    n2 = 6
    for _ in range(300):
        v = BitVec(n2, rng.randrange(1 << n2))
        w = BitVec(n2, rng.randrange(1 << n2))
        got = compose(MajoranaString(0, v), MajoranaString(0, w))
        want = dense.dense_string(MajoranaString(0, v)) @ dense.dense_string(
            MajoranaString(0, w)
        )
        if not np.array_equal(dense.dense_string(got), want):
            return False, f"mismatch at {v} * {w}"
        checked += 1
    return True, f"{checked} products"


def _suite_braid_conjugation(rng: random.Random):
    import numpy as np

    for _ in range(100):
        n = rng.randint(1, 3)
        n2 = 2 * n
        while True:
            a = BitVec(n2, rng.randrange(1 << n2))
            if a.parity == 0:
                break
        v = BitVec(n2, rng.randrange(1 << n2))
        s = MajoranaString(rng.randrange(4), v)
        B = dense.dense_braid(a)
        want = B @ dense.dense_string(s) @ B.conj().T
        got = dense.dense_string(braid_action(a, s))
        if not np.allclose(got, want, atol=1e-9):
            return False, f"mismatch at a={a}, s={format_string(s)}"
    return True, "100 conjugations"


def _suite_encoder(rng: random.Random):
    for _ in range(50):
        n0 = rng.randint(1, 7)
        r = rng.randint(1, n0)
        S0 = sample_orthogonal_random(2 * n0, rng)
        M = add_ancilla(transform_isotropic(S0, canonical_isotropic(n0, r)))
        S = stab_clifford(M)
        std = canonical_isotropic(M.n, M.r)
        for i, b in enumerate(M.basis):
            if S.m.mulvec(std.basis[i]) != b:
                return False, f"generator {i + 1} not routed"
    return True, "50 encoders"


def _suite_sampler_enumeration(rng: random.Random):
    for dim in range(1, 5):
        order = group_order("orthogonal", dim)
        seen = {sample_orthogonal(dim, i).m.data for i in range(1, order + 1)}
        if len(seen) != order:
            return False, f"O({dim}) enumeration collides"
    seen = {sample_symplectic(2, i).m.data for i in range(1, 7)}
    if len(seen) != 6:
        return False, "Sp(2) enumeration collides"
    return True, "O(1..4), Sp(2)"


def _suite_frame_small(rng: random.Random):
    want = (1, 2, 5, 15)
    for t in range(1, 5):
        po = parity_frame_potential(4, t).value
        ps = frame_potential("symplectic", 2, t).value
        if po != want[t - 1] or ps != want[t - 1]:
            return False, f"t={t}: restricted O(4) {po}, Sp(2) {ps}"
    return True, "restricted O(4) = Sp(2), t = 1..4"


_VERIFY_SUITES = [
    ("jw-involution", _suite_jw_involution),
    ("string-composition", _suite_string_composition),
    ("braid-conjugation", _suite_braid_conjugation),
    ("encoder-roundtrip", _suite_encoder),
    ("sampler-enumeration", _suite_sampler_enumeration),
    ("frame-potential-small", _suite_frame_small),
]


def _cmd_verify(cfg: CliConfig) -> int:
    seed = cfg.seed if cfg.seed is not None else DEFAULT_SEED
    failures = 0
    for name, fn in _VERIFY_SUITES:
        ok, detail = fn(random.Random(seed))
        print(f"{'ok' if ok else 'FAIL'} {name} ({detail})")
        if not ok:
            failures += 1
    return 0 if failures == 0 else 1


_HANDLERS = {
    "order": _cmd_order,
    "sample": _cmd_sample,
    "jw": _cmd_jw,
    "compose": _cmd_compose,
    "stab-encode": _cmd_stab_encode,
    "frame": _cmd_frame,
    "orbits": _cmd_orbits,
    "verify": _cmd_verify,
}


def parse_cli(argv=None) -> CliConfig:
    ns = _build_parser().parse_args(argv)
    flags = {k: v for k, v in vars(ns).items() if k not in ("subcommand", "path")}
    return CliConfig(
        subcommand=ns.subcommand,
        flags=flags,
        seed=getattr(ns, "seed", None),
        input_path=getattr(ns, "path", None),
    )


def main(argv=None) -> int:
    try:
        cfg = parse_cli(argv)
    except SystemExit as exc:
        code = exc.code
        if code in (None, 0):
            return 0
        return 1  # argparse usage errors map to the input-error code
    try:
        return _HANDLERS[cfg.subcommand](cfg)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
