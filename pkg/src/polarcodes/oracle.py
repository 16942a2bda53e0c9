"""Exhaustive reference implementations.

These follow the definitions literally (enumerate every motif, every
pseudo-monomial, every point) and share no code path with the fast routines
beyond the basic value types.  Size caps are hard errors.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

import numpy as np

from .ideals import CanonicalForm, PseudoMonomial, VariableSpace
from .motifs import Code, Motif
from .polarization import formal_polarize, gjs_prime_test

MAX_MOTIF_DIM = 10
MAX_POINT_DIM = 20
MAX_SCAN_N = 4


class OracleCapError(ValueError):
    """Input too large for exhaustive enumeration."""


def _cap(value: int, limit: int, what: str):
    if value > limit:
        raise OracleCapError(f"{what} {value} exceeds the oracle cap {limit}")


def _all_points(d: int) -> np.ndarray:
    """Every word of ``F_2^d`` as a ``(2**d, d)`` 0/1 matrix, position 1 first."""
    return np.array(list(itertools.product((0, 1), repeat=d)), dtype=np.int8).reshape(-1, d)


def _all_motifs(d: int) -> tuple[np.ndarray, np.ndarray]:
    """All ``3**d`` motifs as ``(fixed, value)`` bitmask arrays, position 1 on top."""
    fixed = np.zeros(1, dtype=np.uint16)
    value = np.zeros(1, dtype=np.uint16)
    for _ in range(d):
        fixed = np.concatenate([fixed * 2 + 1, fixed * 2 + 1, fixed * 2])
        value = np.concatenate([value * 2, value * 2 + 1, value * 2])
    return fixed, value


def _any_hit(fixed: np.ndarray, value: np.ndarray, words: np.ndarray) -> np.ndarray:
    """``out[m]`` is True iff some word lies in the variety of motif ``m``."""
    out = np.zeros(len(fixed), dtype=bool)
    if len(words) == 0:
        return out
    step = max(1, (1 << 23) // len(words))
    w = words[None, :]
    for k in range(0, len(fixed), step):
        f = fixed[k:k + step, None]
        v = value[k:k + step, None]
        out[k:k + step] = ((w & f) == v).any(axis=1)
    return out


def _leq(a: tuple[int, int], b: tuple[int, int]) -> bool:
    # every entry fixed in b is fixed to the same value in a
    return a[0] & b[0] == b[0] and a[1] & b[0] == b[1]


def _to_motif(fixed: int, value: int, d: int) -> Motif:
    return Motif("".join("*" if not fixed >> (d - 1 - i) & 1 else str(value >> (d - 1 - i) & 1)
                         for i in range(d)))


def _words(C: Code) -> np.ndarray:
    return np.array(sorted(int(w, 2) for w in C.words), dtype=np.uint16)


def brute_max_mot(C: Code) -> set[Motif]:
    """Filter all motifs of ``C`` down to the maximal ones by pairwise comparison."""
    n = C.n
    _cap(n, MAX_MOTIF_DIM, "code length")
    if not C.words:
        return set()
    fixed, value = _all_motifs(n)
    outside = np.flatnonzero(~C.mask).astype(np.uint16)
    inside = ~_any_hit(fixed, value, outside)
    cand = sorted(zip(fixed[inside].tolist(), value[inside].tolist()),
                  key=lambda m: bin(m[0]).count("1"))
    kept: list[tuple[int, int]] = []
    for a in cand:
        if not any(_leq(a, b) for b in kept):
            kept.append(a)
    return {_to_motif(f, v, n) for f, v in kept}


def brute_cf(C: Code, doubled: bool = False) -> CanonicalForm:
    """All divisibility-minimal pseudo-monomials vanishing on ``C``."""
    n = C.n
    _cap(n, MAX_MOTIF_DIM, "code length")
    space = VariableSpace.for_length(n, doubled)
    fixed, value = _all_motifs(n)
    # a pseudo-monomial is 1 at w iff w matches its fixed entries
    vanish = ~_any_hit(fixed, value, _words(C))
    cand = sorted(zip(fixed[vanish].tolist(), value[vanish].tolist()),
                  key=lambda m: bin(m[0]).count("1"))
    kept: list[tuple[int, int]] = []
    for g in cand:
        # f | g iff every factor of f is a factor of g, i.e. g <= f as motifs
        if not any(_leq(g, f) for f in kept):
            kept.append(g)
    elements = set()
    for f, v in kept:
        bits = [(i + 1, f >> (n - 1 - i) & 1, v >> (n - 1 - i) & 1) for i in range(n)]
        elements.add(PseudoMonomial(space,
                                    {i for i, fx, vx in bits if fx and vx},
                                    {i for i, fx, vx in bits if fx and not vx}))
    return CanonicalForm(space, elements)


def brute_variety(gens, space: VariableSpace) -> Code:
    """Points of ``F_2^d`` where every generator evaluates to 0."""
    d = space.dim
    _cap(d, MAX_POINT_DIM, "dimension")
    points = _all_points(d)
    alive = np.ones(len(points), dtype=bool)
    for f in gens:
        val = np.ones(len(points), dtype=bool)
        for i in f.sigma:
            val &= points[:, i - 1] == 1
        for j in f.tau:
            val &= points[:, j - 1] == 0
        alive &= ~val
    return Code(d, frozenset("".join(map(str, p)) for p in points[alive]))


@dataclass
class GjsScanReport:
    code: Code
    checked: int = 0
    discrepancies: list[tuple[str, bool, bool]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def lines(self) -> list[str]:
        hx = self.code.to_hex()
        return [f"CODE {hx} MOTIF {m} fast={str(f).lower()} oracle={str(o).lower()}"
                for m, f, o in self.discrepancies]


def brute_gjs_scan(C: Code) -> GjsScanReport:
    """Compare the partial-code test with direct containment for every doubled motif."""
    _cap(C.n, MAX_SCAN_N, "code length")
    fp = formal_polarize(C)
    report = GjsScanReport(C)
    for c in Motif.all(2 * C.n):
        fast = gjs_prime_test(c, C)
        words = fp.words
        direct = all(w in words for w in _expand(c.symbols))
        report.checked += 1
        if fast != direct:
            report.discrepancies.append((c.format(True), fast, direct))
    return report


def _expand(s: str):
    stars = [i for i, c in enumerate(s) if c == "*"]
    base = list(s)
    for bits in itertools.product("01", repeat=len(stars)):
        for i, b in zip(stars, bits):
            base[i] = b
        yield "".join(base)


DENSITIES = (0.25, 0.5, 0.75)


def random_code(n: int, rng: random.Random, p: float | None = None) -> Code:
    """Each word of ``F_2^n`` is kept independently with probability ``p``
    (drawn from :data:`DENSITIES` when not given)."""
    if p is None:
        p = rng.choice(DENSITIES)
    words = [format(k, f"0{n}b") for k in range(2**n) if rng.random() < p]
    return Code(n, frozenset(words))


def all_codes(n: int):
    """Every code of length ``n`` (``2**(2**n)`` of them)."""
    for bits in range(2 ** (2**n)):
        yield Code(n, frozenset(format(k, f"0{n}b") for k in range(2**n) if bits >> k & 1))
