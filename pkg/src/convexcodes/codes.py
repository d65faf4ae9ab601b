"""Neural codes as finite sets of codewords over a fixed neuron universe.

A codeword is stored as an integer bitmask: bit ``i - 1`` set means neuron
``i`` belongs to the word.  The universe is capped at 64 neurons, which keeps
subset and intersection tests constant-time and covers every code this
package ships.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping

MAX_NEURONS = 64

Word = int


def word(indices: Iterable[int] = ()) -> Word:
    """Build a codeword bitmask from neuron indices (1-based)."""
    w = 0
    for i in indices:
        if not isinstance(i, int) or i < 1:
            raise ValueError(f"neuron index must be a positive integer, got {i!r}")
        if i > MAX_NEURONS:
            raise ValueError(f"neuron index {i} exceeds the {MAX_NEURONS}-neuron cap")
        w |= 1 << (i - 1)
    return w


def members(w: Word) -> tuple[int, ...]:
    """Neuron indices of a codeword, ascending."""
    out = []
    i = 1
    while w:
        if w & 1:
            out.append(i)
        w >>= 1
        i += 1
    return tuple(out)


def word_label(w: Word) -> str:
    """Render a codeword as ``{1,2,3}``; the empty word as ``{}``."""
    return "{" + ",".join(str(i) for i in members(w)) + "}"


def full_word(n: int) -> Word:
    """The codeword containing every neuron of an n-neuron universe."""
    return (1 << n) - 1


def word_key(w: Word) -> tuple[int, ...]:
    """Sort key: lexicographic on the ascending member tuple."""
    return members(w)


@dataclass(frozen=True)
class NeuralCode:
    """A set of codewords over neurons 1..n.  Immutable; equality is set equality."""

    n: int
    words: frozenset[Word]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"neuron count must be a positive integer, got {self.n!r}")
        if self.n > MAX_NEURONS:
            raise ValueError(f"neuron count {self.n} exceeds the {MAX_NEURONS}-neuron cap")
        allowed = full_word(self.n)
        for w in self.words:
            if w & ~allowed:
                raise ValueError(
                    f"codeword {word_label(w)} uses neurons beyond universe [{self.n}]"
                )

    def __contains__(self, w: Word) -> bool:
        return w in self.words

    def __iter__(self) -> Iterator[Word]:
        return iter(self.sorted_words())

    def __len__(self) -> int:
        return len(self.words)

    def sorted_words(self) -> list[Word]:
        return sorted(self.words, key=word_key)

    def __repr__(self) -> str:
        inner = " ".join(word_label(w) for w in self.sorted_words())
        return f"NeuralCode(n={self.n}, {{{inner}}})"


def neural_code(n: int, words: Iterable[Iterable[int]]) -> NeuralCode:
    """Convenience constructor from iterables of neuron indices."""
    return NeuralCode(n, frozenset(word(w) for w in words))


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex stored by its inclusion-maximal faces (facets).

    Faces are codeword bitmasks over an ambient universe 1..n.  The empty
    face belongs to the complex whenever there is any facet at all.
    """

    n: int
    facets: frozenset[Word]

    @cached_property
    def face_set(self) -> frozenset[Word]:
        faces: set[Word] = set()
        for f in self.facets:
            if f in faces:
                continue
            # enumerate all submasks of f, including 0
            sub = f
            while True:
                faces.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & f
        return frozenset(faces)

    def has_face(self, w: Word) -> bool:
        return any(w & f == w for f in self.facets)

    @property
    def dim(self) -> int:
        if not self.facets:
            return -1
        return max(f.bit_count() for f in self.facets) - 1

    def vertices(self) -> tuple[int, ...]:
        v = 0
        for f in self.facets:
            v |= f
        return members(v)

    def sorted_facets(self) -> list[Word]:
        return sorted(self.facets, key=word_key)

    def f_vector(self) -> tuple[int, ...]:
        """Counts of k-dimensional faces, k = 0..dim (the empty face is omitted)."""
        counts = [0] * (self.dim + 1)
        for f in self.face_set:
            if f:
                counts[f.bit_count() - 1] += 1
        return tuple(counts)

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * c for k, c in enumerate(self.f_vector()))

    def __repr__(self) -> str:
        inner = " ".join(word_label(f) for f in self.sorted_facets())
        return f"SimplicialComplex(n={self.n}, facets={{{inner}}})"


def _inclusion_maximal(ws: Iterable[Word]) -> frozenset[Word]:
    pool = set(ws)
    return frozenset(
        w for w in pool if not any(w != v and w & v == w for v in pool)
    )


def complex_from_faces(n: int, faces: Iterable[Word]) -> SimplicialComplex:
    """The smallest complex containing the given faces."""
    return SimplicialComplex(n, _inclusion_maximal(faces))


def maximal_codewords(code: NeuralCode) -> frozenset[Word]:
    """Codewords not strictly contained in another codeword of the code."""
    return _inclusion_maximal(code.words)


def simplicial_complex(code: NeuralCode) -> SimplicialComplex:
    """The smallest simplicial complex containing every codeword of the code."""
    return SimplicialComplex(code.n, maximal_codewords(code))


@dataclass(frozen=True)
class MaxIntersectionCheck:
    """Outcome of the max-intersection completeness test.

    When ``complete`` is false, ``witness_sets`` is a tuple of two or more
    maximal codewords whose intersection ``witness_value`` is missing from
    the code.
    """

    complete: bool
    witness_sets: tuple[Word, ...] | None = None
    witness_value: Word | None = None

    def __bool__(self) -> bool:
        return self.complete


def is_max_intersection_complete(code: NeuralCode) -> MaxIntersectionCheck:
    """Check that every intersection of >= 2 maximal codewords lies in the code.

    Intersections are explored breadth-first (all pairs first, then deeper
    meets), so a reported witness uses as few maximal codewords as possible
    and is deterministic.
    """
    maxima = sorted(maximal_codewords(code), key=word_key)
    seen: dict[Word, tuple[Word, ...]] = {}
    frontier: list[Word] = []
    for a_idx in range(len(maxima)):
        for b_idx in range(a_idx + 1, len(maxima)):
            a, b = maxima[a_idx], maxima[b_idx]
            v = a & b
            if v in seen:
                continue
            seen[v] = (a, b)
            frontier.append(v)
            if v not in code.words:
                return MaxIntersectionCheck(False, (a, b), v)
    while frontier:
        nxt: list[Word] = []
        for v in frontier:
            for m in maxima:
                u = v & m
                if u in seen:
                    continue
                seen[u] = seen[v] + (m,)
                nxt.append(u)
                if u not in code.words:
                    return MaxIntersectionCheck(False, seen[u], u)
        frontier = nxt
    return MaxIntersectionCheck(True)


def restriction_map(tau: Word) -> dict[int, int]:
    """Reindexing of the surviving neurons of tau to 1..|tau|, order-preserving."""
    return {old: new for new, old in enumerate(members(tau), start=1)}


def restrict(code: NeuralCode, tau: Word | Iterable[int]) -> NeuralCode:
    """Restrict the code to the neurons of tau and reindex them to 1..|tau|."""
    t = tau if isinstance(tau, int) else word(tau)
    if t & ~full_word(code.n):
        raise ValueError(f"restriction set {word_label(t)} is not a subset of [{code.n}]")
    if t == 0:
        raise ValueError("cannot restrict to an empty neuron set")
    remap = restriction_map(t)
    new_words = frozenset(
        word(remap[i] for i in members(w & t)) for w in code.words
    )
    return NeuralCode(t.bit_count(), new_words)


def permute(code: NeuralCode, pi: Mapping[int, int]) -> NeuralCode:
    """Relabel neurons by the bijection pi on [n]."""
    if sorted(pi.keys()) != list(range(1, code.n + 1)) or sorted(pi.values()) != list(
        range(1, code.n + 1)
    ):
        raise ValueError(f"permutation must be a bijection on [{code.n}]")
    return NeuralCode(
        code.n,
        frozenset(word(pi[i] for i in members(w)) for w in code.words),
    )


@dataclass(frozen=True)
class AddCodewordResult:
    """Result of adding a codeword: the new code plus context flags."""

    code: NeuralCode
    added: bool
    non_maximal: bool
    complex_preserved: bool


def add_codeword(code: NeuralCode, sigma: Word | Iterable[int]) -> AddCodewordResult:
    """Return code ∪ {sigma} and whether sigma is non-maximal / preserves the complex."""
    s = sigma if isinstance(sigma, int) else word(sigma)
    if s & ~full_word(code.n):
        raise ValueError(f"codeword {word_label(s)} is not a subset of [{code.n}]")
    new = NeuralCode(code.n, code.words | {s})
    non_maximal = any(w != s and s & w == s for w in new.words)
    preserved = simplicial_complex(new) == simplicial_complex(code)
    return AddCodewordResult(new, s not in code.words, non_maximal, preserved)


def duplicate_neurons(code: NeuralCode) -> tuple[tuple[int, ...], ...]:
    """Partition [n] into classes of neurons belonging to exactly the same codewords."""
    signatures: dict[frozenset[Word], list[int]] = {}
    for i in range(1, code.n + 1):
        bit = 1 << (i - 1)
        sig = frozenset(w for w in code.words if w & bit)
        signatures.setdefault(sig, []).append(i)
    classes = [tuple(sorted(group)) for group in signatures.values()]
    return tuple(sorted(classes))


def is_sunflower_code(code: NeuralCode) -> bool:
    """True iff [n] is a codeword and every other codeword has at most one neuron."""
    full = full_word(code.n)
    if full not in code.words:
        return False
    return all(w == full or w.bit_count() <= 1 for w in code.words)
