"""Words, motifs, neural codes and their partial (deactivated) variants.

A motif is a string over ``0``, ``1`` and ``*``.  The star is a wildcard, so a
motif stands for the set of binary words matching its fixed entries (its
*variety*).  Motifs are ordered by ``0 < *`` and ``1 < *`` componentwise, which
is the same as inclusion of varieties.

Partial motifs additionally use ``u`` for an inactive neuron; ``u`` is
comparable only with itself.

Positions (neurons) are numbered from 1 in every public function, to agree
with the variable names ``X1, X2, ...`` used by :mod:`polarcodes.ideals`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

import numpy as np

STAR = "*"
INACTIVE = "u"

#: Largest ambient dimension handled by the dense motif table (3**d booleans).
MAX_TABLE_DIM = 16

_ORDER_KEY = str.maketrans("01*u", "0123")
_ADD = {
    ("0", "0"): "0",
    ("0", "1"): "1",
    ("1", "0"): "1",
    ("1", "1"): "0",
}


def canonical_key(s) -> str:
    """Sort key realising the lexicographic order with ``0 < 1 < * < u``."""
    return str(s).translate(_ORDER_KEY)


def _strip_separator(text: str) -> str:
    text = text.strip()
    if "|" not in text:
        return text
    left, sep, right = text.partition("|")
    if "|" in right or len(left) != len(right):
        raise ValueError(f"misplaced '|' separator in {text!r}")
    return left + right


@dataclass(frozen=True)
class Motif:
    """A motif over ``{0, 1, *}``.

    The text form may carry one ``|`` exactly in the middle (doubled-space
    convention); it is dropped on parsing.
    """

    symbols: str

    ALPHABET = frozenset("01*")

    def __post_init__(self):
        s = _strip_separator(self.symbols)
        if not s:
            raise ValueError("motifs must have positive length")
        bad = set(s) - self.ALPHABET
        if bad:
            raise ValueError(f"invalid symbols {sorted(bad)} in motif {s!r}")
        object.__setattr__(self, "symbols", s)

    def __str__(self):
        return self.symbols

    def __repr__(self):
        return f"{type(self).__name__}({self.symbols!r})"

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def __le__(self, other):
        return motif_leq(self, other)

    def __lt__(self, other):
        return self != other and motif_leq(self, other)

    def __add__(self, other):
        return motif_add(self, other)

    @property
    def star_count(self) -> int:
        return self.symbols.count(STAR)

    @property
    def fixed(self) -> dict[int, str]:
        """Map from 1-based position to the fixed (non-star) symbol."""
        return {i + 1: c for i, c in enumerate(self.symbols) if c != STAR}

    def masks(self) -> tuple[int, int]:
        """Return ``(fixed_mask, value)`` with position 1 as the top bit."""
        n = len(self.symbols)
        fixed = value = 0
        for i, c in enumerate(self.symbols):
            if c in "01":
                bit = 1 << (n - 1 - i)
                fixed |= bit
                if c == "1":
                    value |= bit
        return fixed, value

    def format(self, doubled: bool = False) -> str:
        if doubled:
            if len(self) % 2:
                raise ValueError("doubled motifs must have even length")
            h = len(self) // 2
            return self.symbols[:h] + "|" + self.symbols[h:]
        return self.symbols

    @classmethod
    def all(cls, n: int) -> Iterator["Motif"]:
        """Every motif of length ``n`` (``3**n`` of them)."""
        for t in itertools.product("01*", repeat=n):
            yield cls("".join(t))


class PartialMotif(Motif):
    """A motif that may also contain the inactive symbol ``u``."""

    ALPHABET = frozenset("01*u")

    @property
    def inactive(self) -> frozenset[int]:
        return frozenset(i + 1 for i, c in enumerate(self.symbols) if c == INACTIVE)


def as_motif(a) -> Motif:
    if isinstance(a, Motif):
        return a
    s = _strip_separator(str(a))
    return PartialMotif(s) if INACTIVE in s else Motif(s)


def _check_word(w: str, n: int | None = None) -> str:
    w = _strip_separator(str(w))
    if not w or set(w) - {"0", "1"}:
        raise ValueError(f"invalid word {w!r}")
    if n is not None and len(w) != n:
        raise ValueError(f"word {w!r} does not have length {n}")
    return w


@dataclass(frozen=True)
class Code:
    """A neural code: a set of binary words of common length ``n``."""

    n: int
    words: frozenset

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("code length must be positive")
        object.__setattr__(
            self, "words", frozenset(_check_word(w, self.n) for w in self.words)
        )

    @classmethod
    def from_words(cls, words: Iterable[str], n: int | None = None) -> "Code":
        """Build a code; duplicates collapse and ``n`` is inferred if omitted."""
        ws = [_check_word(w) for w in words]
        if n is None:
            if not ws:
                raise ValueError("cannot infer the length of an empty code")
            n = len(ws[0])
        for w in ws:
            if len(w) != n:
                raise ValueError(f"ragged word lengths: {w!r} is not of length {n}")
        return cls(n, frozenset(ws))

    @classmethod
    def from_mask(cls, mask: np.ndarray, n: int) -> "Code":
        code = object.__new__(cls)
        fmt = f"0{n}b"
        object.__setattr__(code, "n", n)
        object.__setattr__(code, "words",
                           frozenset(format(i, fmt) for i in np.flatnonzero(mask).tolist()))
        return code

    @classmethod
    def full(cls, n: int) -> "Code":
        return cls.from_mask(np.ones(2**n, dtype=bool), n)

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(sorted(self.words))

    def __contains__(self, w):
        return _strip_separator(str(w)) in self.words

    def __le__(self, other: "Code"):
        return self.n == other.n and self.words <= other.words

    def __lt__(self, other: "Code"):
        return self.n == other.n and self.words < other.words

    @cached_property
    def mask(self) -> np.ndarray:
        """Boolean indicator of the code over ``range(2**n)``."""
        m = np.zeros(2**self.n, dtype=bool)
        if self.words:
            m[[int(w, 2) for w in self.words]] = True
        m.flags.writeable = False
        return m

    def to_hex(self) -> str:
        """Bitset of the code as hex; bit ``k`` is set iff word ``k`` is present."""
        return format(sum(1 << int(w, 2) for w in self.words), "x")

    def format(self, doubled: bool = False) -> list[str]:
        return [Motif(w).format(doubled) for w in self]


@dataclass(frozen=True)
class PartialCode:
    """Partial words of length ``n`` sharing the inactive set ``inactive``."""

    n: int
    inactive: frozenset
    words: frozenset

    def __post_init__(self):
        object.__setattr__(self, "inactive", frozenset(self.inactive))
        ws = frozenset(PartialMotif(w).symbols for w in self.words)
        for w in ws:
            if len(w) != self.n or STAR in w:
                raise ValueError(f"invalid partial word {w!r}")
            if PartialMotif(w).inactive != self.inactive:
                raise ValueError(f"partial word {w!r} disagrees with inactive set")
        object.__setattr__(self, "words", ws)

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(sorted(self.words, key=canonical_key))

    def __contains__(self, w):
        return str(w) in self.words

    def active_positions(self) -> list[int]:
        return [i for i in range(1, self.n + 1) if i not in self.inactive]


def _same_length(a: Motif, b: Motif):
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {a} vs {b}")


def motif_leq(a, b) -> bool:
    """``a <= b`` in the wildcard order (``V_a`` contained in ``V_b``)."""
    a, b = as_motif(a), as_motif(b)
    _same_length(a, b)
    return all(y == STAR and x != INACTIVE or x == y for x, y in zip(a, b))


def motif_add(a, b) -> Motif:
    """Componentwise sum: XOR on fixed entries, ``*`` absorbs."""
    a, b = as_motif(a), as_motif(b)
    _same_length(a, b)
    return Motif("".join(_ADD.get((x, y), STAR) for x, y in zip(a, b)))


def is_disjoint(a, b) -> bool:
    """True iff some position is fixed to opposite values in ``a`` and ``b``."""
    a, b = as_motif(a), as_motif(b)
    _same_length(a, b)
    return any({x, y} == {"0", "1"} for x, y in zip(a, b))


def _variety_ints(a: Motif) -> Iterator[int]:
    fixed, value = a.masks()
    free = ~fixed & ((1 << len(a)) - 1)
    sub = free
    while True:
        yield value | sub
        if sub == 0:
            return
        sub = (sub - 1) & free


def variety(a) -> Code:
    """All words obtained by filling the stars of ``a`` with 0 and 1."""
    a = as_motif(a)
    n = len(a)
    return Code(n, frozenset(format(v, f"0{n}b") for v in _variety_ints(a)))


def variety_mask(motifs: Iterable, n: int) -> np.ndarray:
    """Indicator over ``range(2**n)`` of the union of the motifs' varieties."""
    ar = np.arange(2**n)
    out = np.zeros(2**n, dtype=bool)
    for a in motifs:
        a = as_motif(a)
        if len(a) != n:
            raise ValueError(f"motif {a} does not have length {n}")
        fixed, value = a.masks()
        out |= (ar & fixed) == value
    return out


def is_motif_of(a, C: Code) -> bool:
    """True iff every word of ``V_a`` lies in ``C``."""
    a = as_motif(a)
    if len(a) != C.n:
        raise ValueError(f"motif {a} does not have length {C.n}")
    if a.star_count > 10:
        fixed, value = a.masks()
        ar = np.arange(2**C.n)
        return bool(C.mask[(ar & fixed) == value].all())
    words = C.words
    n = C.n
    return all(format(v, f"0{n}b") in words for v in _variety_ints(a))


def complement(C: Code) -> Code:
    return Code.from_mask(~C.mask, C.n)


def motif_table(C: Code) -> np.ndarray:
    """Boolean array of shape ``(3,)*n``; entry ``t`` says whether the motif
    with digits ``t`` (0, 1, 2 for ``*``) is a motif of ``C``.

    A motif is a motif of ``C`` iff both of its one-star refinements are, so
    the table is filled one axis at a time from the word indicator.
    """
    n = C.n
    if n > MAX_TABLE_DIM:
        raise ValueError(f"motif table limited to length {MAX_TABLE_DIM}")
    t = C.mask.reshape((2,) * n)
    for ax in range(n):
        both = np.take(t, [0], axis=ax) & np.take(t, [1], axis=ax)
        t = np.concatenate([t, both], axis=ax)
    return t


def _digits_to_motifs(idx: np.ndarray) -> set[Motif]:
    sym = np.array(list("01*"))
    return {Motif("".join(row)) for row in sym[idx]}


def _maximal_entries(t: np.ndarray) -> np.ndarray:
    n = t.ndim
    dominated = np.zeros_like(t)
    for ax in range(n):
        up = np.take(t, [2], axis=ax)
        dominated |= np.concatenate([up, up, np.zeros_like(up)], axis=ax)
    return t & ~dominated


def motifs_of(C: Code) -> set[Motif]:
    """Mot(C): every motif whose variety lies inside ``C``."""
    return _digits_to_motifs(np.argwhere(motif_table(C)))


def max_mot(C: Code) -> set[Motif]:
    """MaxMot(C), the maximal motifs of ``C``.

    A motif of ``C`` is maximal iff no single fixed entry can be raised to a
    star, since every chain of motifs of ``C`` moves one entry at a time.
    """
    return set(_max_mot(C))


@lru_cache(maxsize=32)
def _max_mot(C: Code) -> frozenset[Motif]:
    if not C.words:
        return frozenset()
    return frozenset(_digits_to_motifs(np.argwhere(_maximal_entries(motif_table(C)))))


def is_antichain(motifs: Iterable) -> bool:
    ms = [as_motif(m) for m in motifs]
    if any(INACTIVE in m.symbols for m in ms):
        return not any(a != b and motif_leq(a, b) for a in ms for b in ms)
    masks = [m.masks() for m in ms]
    for fa, va in masks:
        for fb, vb in masks:
            # a <= b: whatever b fixes, a fixes to the same value
            if (fa, va) != (fb, vb) and fa & fb == fb and va & fb == vb:
                return False
    return True


def max_mot_complement(M: Iterable, n: int | None = None) -> set[Motif]:
    """MaxMot of the complement of the code covered by the motifs ``M``.

    A motif avoids ``V_m`` iff it fixes some position ``i`` with
    ``m_i != *`` to ``1 - m_i``.  The maximal motifs of the complement are the
    minimal consistent assignments hitting every ``m``.  They are enumerated
    depth first: a branch is abandoned as soon as one of its chosen entries
    stops being the only hit of some ``m`` (it could never become minimal),
    and choosing ``i -> v`` withdraws ``i -> 1 - v`` from the candidates.
    """
    ms = sorted({as_motif(m) for m in M}, key=canonical_key)
    if n is None:
        if not ms:
            raise ValueError("n is required when M is empty")
        n = len(ms[0])
    for m in ms:
        if len(m) != n:
            raise ValueError(f"motif {m} does not have length {n}")
    if not is_antichain(ms):
        raise ValueError("the motif set is not an antichain")

    # element 2*i + v assigns value v to position i
    n_elem = 2 * n
    covers = [0] * n_elem          # element -> bitset of motifs it hits
    members = []                   # motif -> bitset of elements hitting it
    for k, m in enumerate(ms):
        mem = 0
        for i, c in enumerate(m.symbols):
            if c != STAR:
                e = 2 * i + (1 - int(c))
                covers[e] |= 1 << k
                mem |= 1 << e
        members.append(mem)

    found: list[int] = []
    chosen: list[int] = []
    crit: dict[int, int] = {}

    def search(uncov: int, cand: int):
        if not uncov:
            found.append(sum(1 << e for e in chosen))
            return
        best, best_count = -1, n_elem + 1
        rest = uncov
        while rest:
            low = rest & -rest
            k = low.bit_length() - 1
            cnt = (members[k] & cand).bit_count()
            if cnt < best_count:
                best, best_count = k, cnt
                if cnt == 0:
                    return
            rest ^= low
        options = members[best] & cand
        cand &= ~options
        while options:
            low = options & -options
            e = low.bit_length() - 1
            options ^= low
            hit = covers[e]
            saved = {f: crit[f] for f in chosen}
            ok = True
            for f in chosen:
                crit[f] &= ~hit
                if not crit[f]:
                    ok = False
            if ok:
                crit[e] = uncov & hit
                chosen.append(e)
                search(uncov & ~hit, cand & ~(1 << (e ^ 1)))
                chosen.pop()
                del crit[e]
            crit.update(saved)
            cand |= low

    search((1 << len(ms)) - 1, (1 << n_elem) - 1)
    out = set()
    for bits in found:
        s = [STAR] * n
        for e in range(n_elem):
            if bits >> e & 1:
                s[e // 2] = str(e % 2)
        out.add(Motif("".join(s)))
    return out


def sorted_motifs(motifs: Iterable) -> list:
    return sorted(motifs, key=canonical_key)


# -- partial codes ---------------------------------------------------------

def _check_indices(idx: Iterable[int], n: int) -> frozenset[int]:
    idx = frozenset(int(i) for i in idx)
    for i in idx:
        if not 1 <= i <= n:
            raise ValueError(f"neuron index {i} out of range 1..{n}")
    return idx


def deactivate(C: Code, idx: Iterable[int]) -> PartialCode:
    """Replace the entries at positions ``idx`` of every word by ``u``."""
    idx = _check_indices(idx, C.n)
    words = {"".join(INACTIVE if j + 1 in idx else c for j, c in enumerate(w)) for w in C.words}
    return PartialCode(C.n, idx, frozenset(words))


def _project(P: PartialCode) -> Code | None:
    active = [i - 1 for i in P.active_positions()]
    if not active:
        return None
    return Code(len(active), frozenset("".join(w[j] for j in active) for w in P.words))


def _reinsert(a: str, P: PartialCode) -> PartialMotif:
    it = iter(a)
    return PartialMotif("".join(INACTIVE if i in P.inactive else next(it)
                                for i in range(1, P.n + 1)))


def max_par_mot(P: PartialCode) -> set[PartialMotif]:
    """Maximal partial motifs of ``P``: MaxMot of the active projection with
    the inactive columns put back."""
    if not P.words:
        return set()
    proj = _project(P)
    if proj is None:
        return {PartialMotif(INACTIVE * P.n)}
    return {_reinsert(a.symbols, P) for a in max_mot(proj)}


def par_mot_contains(a, P: PartialCode) -> bool:
    """True iff every partial word below ``a`` belongs to ``P``."""
    a = PartialMotif(str(a))
    if len(a) != P.n or a.inactive != P.inactive:
        raise ValueError(f"inactive set of {a} does not match the partial code")
    proj = _project(P)
    if proj is None:
        return bool(P.words)
    active = [i - 1 for i in P.active_positions()]
    return is_motif_of(Motif("".join(a.symbols[j] for j in active)), proj)


# -- text I/O --------------------------------------------------------------

def parse_lines(text: str) -> list[str]:
    """Non-empty, comment-stripped lines of a code or motif file."""
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def parse_code(text: str, n: int | None = None) -> Code:
    return Code.from_words(parse_lines(text), n)


def read_code(path, n: int | None = None) -> Code:
    with open(path) as fh:
        return parse_code(fh.read(), n)
