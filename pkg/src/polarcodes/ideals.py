"""Pseudo-monomials, canonical forms and motivic primes of neural ideals.

Only the pieces of polynomial algebra that neural ideals need are modelled:
a pseudo-monomial is the pair of disjoint index sets ``(sigma, tau)`` standing
for ``prod X_i (i in sigma) * prod (1 - X_j) (j in tau)``.  Divisibility is
factorwise containment and evaluation happens at points of ``F_2^d``.

In a doubled space of ``2n`` variables, index ``n + i`` is written ``Yi``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .motifs import (
    STAR,
    Code,
    Motif,
    as_motif,
    canonical_key,
    is_antichain,
    is_motif_of,
    motif_leq,
    max_mot,
    max_mot_complement,
)

#: Evaluation over the whole ambient space is restricted to this dimension.
MAX_EVAL_DIM = 20


@dataclass(frozen=True)
class VariableSpace:
    """``X1..Xn`` or, when ``doubled``, ``X1..Xn, Y1..Yn``."""

    n: int
    doubled: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("variable space needs n >= 1")

    @property
    def dim(self) -> int:
        return 2 * self.n if self.doubled else self.n

    @classmethod
    def for_length(cls, length: int, doubled: bool = False) -> "VariableSpace":
        if doubled:
            if length % 2:
                raise ValueError("doubled spaces need an even length")
            return cls(length // 2, True)
        return cls(length, False)

    def name(self, i: int) -> str:
        if not 1 <= i <= self.dim:
            raise ValueError(f"variable index {i} out of range 1..{self.dim}")
        if self.doubled and i > self.n:
            return f"Y{i - self.n}"
        return f"X{i}"

    def index(self, letter: str, k: int) -> int:
        if letter == "X":
            i = k
            if not 1 <= k <= self.n:
                raise ValueError(f"X{k} out of range")
        elif letter == "Y" and self.doubled:
            if not 1 <= k <= self.n:
                raise ValueError(f"Y{k} out of range")
            i = self.n + k
        else:
            raise ValueError(f"variable {letter}{k} not in this space")
        return i


@dataclass(frozen=True)
class PseudoMonomial:
    space: VariableSpace
    sigma: frozenset = frozenset()
    tau: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "sigma", frozenset(self.sigma))
        object.__setattr__(self, "tau", frozenset(self.tau))
        if self.sigma & self.tau:
            raise ValueError("sigma and tau must be disjoint")
        for i in self.sigma | self.tau:
            self.space.name(i)

    @property
    def degree(self) -> int:
        return len(self.sigma) + len(self.tau)

    def motif(self) -> Motif:
        """The motif ``a`` with ``L_a`` equal to this pseudo-monomial."""
        return Motif("".join("1" if i in self.sigma else "0" if i in self.tau else STAR
                             for i in range(1, self.space.dim + 1)))

    def __str__(self):
        return format_pm(self)

    def __repr__(self):
        return f"PseudoMonomial({format_pm(self)!r}, doubled={self.space.doubled})"

    def sort_key(self):
        return format_pm(self)


def format_pm(f: PseudoMonomial) -> str:
    """Render e.g. ``X1(1-X2)Y4``; the empty product is ``1``."""
    parts = []
    for i in sorted(f.sigma | f.tau):
        v = f.space.name(i)
        parts.append(v if i in f.sigma else f"(1-{v})")
    return "".join(parts) or "1"


_FACTOR = re.compile(r"\(1-([XY])(\d+)\)|([XY])(\d+)")


def parse_pm(text: str, space: VariableSpace) -> PseudoMonomial:
    text = text.replace(" ", "").replace("*", "")
    if text == "1":
        return PseudoMonomial(space)
    sigma, tau = set(), set()
    pos = 0
    while pos < len(text):
        m = _FACTOR.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse pseudo-monomial {text!r} at {text[pos:]!r}")
        if m.group(1):
            i = space.index(m.group(1), int(m.group(2)))
            tau.add(i)
        else:
            i = space.index(m.group(3), int(m.group(4)))
            sigma.add(i)
        pos = m.end()
    if not text:
        raise ValueError("empty pseudo-monomial")
    return PseudoMonomial(space, sigma, tau)


def lagrange(a, doubled: bool = False) -> PseudoMonomial:
    """Lagrange polynomial of ``a``: equals 1 exactly on ``V_a``."""
    a = as_motif(a)
    space = VariableSpace.for_length(len(a), doubled)
    return PseudoMonomial(
        space,
        {i + 1 for i, c in enumerate(a) if c == "1"},
        {i + 1 for i, c in enumerate(a) if c == "0"},
    )


def pm_divides(f: PseudoMonomial, g: PseudoMonomial) -> bool:
    if f.space != g.space:
        raise ValueError("pseudo-monomials live in different spaces")
    return f.sigma <= g.sigma and f.tau <= g.tau


def evaluate(f: PseudoMonomial, w) -> int:
    w = str(w).replace("|", "")
    if len(w) != f.space.dim or set(w) - {"0", "1"}:
        raise ValueError(f"word {w!r} does not fit {f.space.dim} variables")
    ok = all(w[i - 1] == "1" for i in f.sigma) and all(w[j - 1] == "0" for j in f.tau)
    return int(ok)


def common_zeros(gens: Iterable[PseudoMonomial], space: VariableSpace) -> Code:
    """Words of ``F_2^d`` at which every generator vanishes."""
    d = space.dim
    if d > MAX_EVAL_DIM:
        raise ValueError(f"evaluation limited to {MAX_EVAL_DIM} variables")
    ar = np.arange(2**d)
    alive = np.ones(2**d, dtype=bool)
    for f in gens:
        if f.space != space:
            raise ValueError("generator from a different space")
        fixed, value = f.motif().masks()
        alive &= (ar & fixed) != value
    return Code.from_mask(alive, d)


@dataclass(frozen=True)
class CanonicalForm:
    space: VariableSpace
    elements: frozenset

    def __post_init__(self):
        object.__setattr__(self, "elements", frozenset(self.elements))
        for f in self.elements:
            if f.space != self.space:
                raise ValueError("canonical form mixes variable spaces")
        # f | g exactly when g's motif lies below f's
        if not is_antichain(f.motif() for f in self.elements):
            raise ValueError("canonical form elements must not divide each other")

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(sorted(self.elements, key=format_pm))

    def __contains__(self, f):
        return f in self.elements

    def lines(self) -> list[str]:
        return sorted(format_pm(f) for f in self.elements)

    def __str__(self):
        return "\n".join(self.lines())

    def contains_pm(self, f: PseudoMonomial) -> bool:
        """Ideal membership of a pseudo-monomial: some element divides it."""
        return any(pm_divides(g, f) for g in self.elements)

    @classmethod
    def parse(cls, lines: Iterable[str], space: VariableSpace) -> "CanonicalForm":
        return cls(space, {parse_pm(s, space) for s in lines})


def cf_from_complement_motifs(motifs: Iterable, space: VariableSpace) -> CanonicalForm:
    return CanonicalForm(space, {lagrange(a, space.doubled) for a in motifs})


def neural_ideal_cf(C: Code, doubled: bool = False) -> CanonicalForm:
    """CF(J_C): Lagrange polynomials of the maximal motifs of the complement."""
    space = VariableSpace.for_length(C.n, doubled)
    return cf_from_complement_motifs(max_mot_complement(max_mot(C), C.n), space)


def cf_of_pm_ideal(gens: Iterable[PseudoMonomial], space: VariableSpace) -> CanonicalForm:
    """CF of the ideal generated by ``gens``, through its zero set."""
    return neural_ideal_cf(common_zeros(gens, space), space.doubled)


def variety_of_neural_ideal(C: Code) -> Code:
    return common_zeros(neural_ideal_cf(C).elements, VariableSpace(C.n))


@dataclass(frozen=True)
class MotivicPrime:
    """The prime generated by ``X_i`` where ``a_i = 0`` and ``1 - X_j`` where
    ``a_j = 1``."""

    motif: Motif
    doubled: bool = False

    def __post_init__(self):
        object.__setattr__(self, "motif", as_motif(self.motif))
        VariableSpace.for_length(len(self.motif), self.doubled)

    @property
    def space(self) -> VariableSpace:
        return VariableSpace.for_length(len(self.motif), self.doubled)

    def generators(self) -> list[PseudoMonomial]:
        sp = self.space
        out = []
        for i, c in enumerate(self.motif, start=1):
            if c == "0":
                out.append(PseudoMonomial(sp, {i}))
            elif c == "1":
                out.append(PseudoMonomial(sp, (), {i}))
        return out

    def generator_strings(self) -> list[str]:
        return [format_pm(g).strip("()") for g in self.generators()]

    def __str__(self):
        gens = self.generator_strings()
        return "(" + ", ".join(gens) + ")" if gens else "(0)"

    def __le__(self, other: "MotivicPrime") -> bool:
        """Ideal inclusion, which reverses the motif order."""
        return motif_leq(other.motif, self.motif)


def motivic_prime(a, doubled: bool = False) -> MotivicPrime:
    return MotivicPrime(as_motif(a), doubled)


def sorted_primes(primes: Iterable[MotivicPrime]) -> list[MotivicPrime]:
    return sorted(primes, key=lambda p: canonical_key(p.motif))


def prime_contains_neural_ideal(a, C: Code) -> bool:
    """``p_a`` contains ``J_C`` exactly when ``a`` is a motif of ``C``."""
    return is_motif_of(a, C)


def min_primes(C: Code, doubled: bool = False) -> set[MotivicPrime]:
    return {MotivicPrime(a, doubled) for a in max_mot(C)}


def primary_decomposition(C: Code, doubled: bool = False) -> list[MotivicPrime]:
    """Irredundant primary decomposition of ``J_C`` into motivic primes."""
    if not C.words:
        raise ValueError("J_C is the unit ideal for the empty code")
    primes = sorted_primes(min_primes(C, doubled))
    if not is_antichain(p.motif for p in primes):
        raise AssertionError("redundant component in decomposition")
    return primes

