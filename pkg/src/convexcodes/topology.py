"""Topology of code complexes: links, exact rational homology, collapsibility.

Contractibility of a geometric realization is undecidable in general, so the
decision procedure here is three-valued.  CONTRACTIBLE comes with a checkable
certificate (a cone apex, or a full sequence of elementary collapses down to
one vertex); NON_CONTRACTIBLE comes with a nonzero reduced Betti number over
the rationals, or with the observation that the realization is empty.
Anything else is UNKNOWN.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .codes import (
    NeuralCode,
    SimplicialComplex,
    Word,
    complex_from_faces,
    maximal_codewords,
    simplicial_complex,
    word_key,
    word_label,
)

DEFAULT_COLLAPSE_BUDGET = 1_000_000


class FaceNotFoundError(ValueError):
    """Raised when an operation is asked about a face outside the complex."""


class Contractibility(Enum):
    CONTRACTIBLE = "contractible"
    NON_CONTRACTIBLE = "non-contractible"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class ContractibilityResult:
    """Three-valued contractibility verdict with its certificate.

    Exactly one certificate field is populated for a decided status:
    ``cone_apex`` or ``collapse_steps`` for CONTRACTIBLE, ``nonzero_betti_dim``
    or ``empty`` for NON_CONTRACTIBLE.
    """

    status: Contractibility
    cone_apex: int | None = None
    collapse_steps: tuple[tuple[Word, Word], ...] | None = None
    nonzero_betti_dim: int | None = None
    empty: bool = False

    def describe(self) -> str:
        if self.status is Contractibility.CONTRACTIBLE:
            if self.cone_apex is not None:
                return f"contractible [cone apex {self.cone_apex}]"
            assert self.collapse_steps is not None
            return f"contractible [collapses to a point, {len(self.collapse_steps)} steps]"
        if self.status is Contractibility.NON_CONTRACTIBLE:
            if self.empty:
                return "non-contractible [empty realization]"
            return f"non-contractible [nonzero reduced betti in dimension {self.nonzero_betti_dim}]"
        return "unknown [no certificate within budget]"


def link(cpx: SimplicialComplex, sigma: Word) -> SimplicialComplex:
    """The link of sigma: faces tau disjoint from sigma with sigma ∪ tau in cpx."""
    if not cpx.has_face(sigma):
        raise FaceNotFoundError(f"face {word_label(sigma)} is not in the complex")
    candidates = [f & ~sigma for f in cpx.facets if sigma & f == sigma]
    return complex_from_faces(cpx.n, candidates)


# --- exact reduced homology over the rationals ---------------------------------


def _proper_submasks(w: Word):
    sub = (w - 1) & w
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & w


def _coface_counts(faces: set[Word]) -> dict[Word, int]:
    counts = dict.fromkeys(faces, 0)
    for g in faces:
        if g == 0:
            continue
        for mu in _proper_submasks(g):
            counts[mu] += 1
    return counts


def _greedy_collapse(faces: set[Word]) -> tuple[set[Word], list[tuple[Word, Word]]]:
    """Collapse free faces greedily (lexicographically least first) until stuck.

    Elementary collapses preserve the homotopy type, so the stuck core has the
    same homology as the input.  Faces are mutated in place on a copy.
    """
    faces = set(faces)
    counts = _coface_counts(faces)
    heap = [(word_key(f), f) for f, c in counts.items() if c == 1 and f != 0]
    heapq.heapify(heap)
    steps: list[tuple[Word, Word]] = []
    while heap:
        _, sigma = heapq.heappop(heap)
        if sigma not in faces or counts[sigma] != 1:
            continue
        cofaces = [g for g in faces if g != sigma and sigma & g == sigma]
        tau = cofaces[0]
        faces.discard(sigma)
        faces.discard(tau)
        steps.append((sigma, tau))
        for removed in (sigma, tau):
            for mu in _proper_submasks(removed):
                if mu in faces:
                    counts[mu] -= 1
                    if counts[mu] == 1 and mu != 0:
                        heapq.heappush(heap, (word_key(mu), mu))
    return faces, steps


def _column_rank(cols: list[dict[int, Fraction]]) -> int:
    """Rank of a sparse rational matrix given by columns, by exact reduction."""
    pivots: dict[int, dict[int, Fraction]] = {}
    rank = 0
    for col in cols:
        col = dict(col)
        while col:
            low = max(col)
            piv = pivots.get(low)
            if piv is None:
                inv = col[low]
                pivots[low] = {r: v / inv for r, v in col.items()}
                rank += 1
                break
            factor = col[low]
            for r, v in piv.items():
                nv = col.get(r, Fraction(0)) - factor * v
                if nv:
                    col[r] = nv
                else:
                    col.pop(r, None)
        # a column eliminated to zero contributes nothing
    return rank


def _betti_of_faces(faces: set[Word], top_dim: int) -> tuple[int, ...]:
    """Reduced Betti numbers of a face set, padded with zeros up to top_dim."""
    if top_dim < 0:
        return ()
    by_dim: dict[int, list[Word]] = {}
    for f in faces:
        if f:
            by_dim.setdefault(f.bit_count() - 1, []).append(f)
    for fs in by_dim.values():
        fs.sort(key=word_key)
    index_of = {
        k: {f: i for i, f in enumerate(fs)} for k, fs in by_dim.items()
    }
    dim = max(by_dim) if by_dim else -1

    ranks: dict[int, int] = {}
    # augmentation map onto the empty face
    ranks[0] = 1 if by_dim.get(0) else 0
    for k in range(1, dim + 1):
        rows = index_of.get(k - 1, {})
        cols: list[dict[int, Fraction]] = []
        for f in by_dim.get(k, []):
            col: dict[int, Fraction] = {}
            verts = [1 << (i - 1) for i in _bits(f)]
            for j, vbit in enumerate(verts):
                face = f & ~vbit
                col[rows[face]] = Fraction((-1) ** j)
            cols.append(col)
        ranks[k] = _column_rank(cols)

    betti = []
    for k in range(top_dim + 1):
        f_k = len(by_dim.get(k, []))
        betti.append(f_k - ranks.get(k, 0) - ranks.get(k + 1, 0))
    return tuple(betti)


def _bits(w: Word) -> list[int]:
    out = []
    i = 1
    while w:
        if w & 1:
            out.append(i)
        w >>= 1
        i += 1
    return out


def reduced_homology(cpx: SimplicialComplex) -> tuple[int, ...]:
    """Reduced rational Betti numbers, indexed by dimension 0..dim(cpx).

    A greedy collapse shrinks the complex first; collapses are homotopy
    equivalences, so the boundary-matrix ranks of the core give the Betti
    numbers of the input.  All arithmetic is exact.
    """
    top_dim = cpx.dim
    if top_dim < 0:
        return ()
    core, _ = _greedy_collapse(set(cpx.face_set))
    return _betti_of_faces(core, top_dim)


# --- collapsibility search ------------------------------------------------------


class _BudgetExhausted(Exception):
    pass


def _free_pairs(faces: frozenset[Word]) -> list[tuple[Word, Word]]:
    counts = _coface_counts(set(faces))
    pairs = []
    for sigma, c in counts.items():
        if sigma == 0 or c != 1:
            continue
        tau = next(g for g in faces if g != sigma and sigma & g == sigma)
        pairs.append((sigma, tau))
    pairs.sort(key=lambda p: (word_key(p[0]), word_key(p[1])))
    return pairs


def collapse_to_point(
    cpx: SimplicialComplex, budget: int = DEFAULT_COLLAPSE_BUDGET
) -> tuple[tuple[Word, Word], ...] | None:
    """Search for a full sequence of elementary collapses down to one vertex.

    Backtracking over free-face choices in lexicographic order, memoizing
    visited face sets.  Returns None when no sequence exists or the state
    budget runs out.
    """
    start = frozenset(cpx.face_set)
    visited: set[frozenset[Word]] = set()
    remaining = budget

    def is_point(fs: frozenset[Word]) -> bool:
        return len(fs) == 2 and 0 in fs

    def search(fs: frozenset[Word]) -> list[tuple[Word, Word]] | None:
        nonlocal remaining
        if is_point(fs):
            return []
        for sigma, tau in _free_pairs(fs):
            nxt = frozenset(fs - {sigma, tau})
            if nxt in visited:
                continue
            visited.add(nxt)
            remaining -= 1
            if remaining < 0:
                raise _BudgetExhausted
            rest = search(nxt)
            if rest is not None:
                return [(sigma, tau)] + rest
        return None

    if is_point(start):
        return ()
    try:
        seq = search(start)
    except _BudgetExhausted:
        return None
    return tuple(seq) if seq is not None else None


def contractibility(
    cpx: SimplicialComplex, collapse_budget: int = DEFAULT_COLLAPSE_BUDGET
) -> ContractibilityResult:
    """Decide contractibility of the geometric realization where possible.

    Decision order: empty realization, cone detection, nonzero reduced
    homology, then bounded collapse search.  A complex whose homology is
    trivial but which resists collapsing within budget stays UNKNOWN.
    """
    faces = cpx.face_set
    nonempty = [f for f in faces if f]
    if not nonempty:
        return ContractibilityResult(Contractibility.NON_CONTRACTIBLE, empty=True)
    common = ~0
    for f in cpx.facets:
        common &= f
    if common:
        apex = (common & -common).bit_length()
        return ContractibilityResult(Contractibility.CONTRACTIBLE, cone_apex=apex)
    betti = reduced_homology(cpx)
    for k, b in enumerate(betti):
        if b:
            return ContractibilityResult(
                Contractibility.NON_CONTRACTIBLE, nonzero_betti_dim=k
            )
    seq = collapse_to_point(cpx, budget=collapse_budget)
    if seq is not None:
        return ContractibilityResult(Contractibility.CONTRACTIBLE, collapse_steps=seq)
    return ContractibilityResult(Contractibility.UNKNOWN)


# --- mandatory codewords and local obstructions ---------------------------------


def mandatory_codewords(
    cpx: SimplicialComplex, collapse_budget: int = DEFAULT_COLLAPSE_BUDGET
) -> dict[Word, ContractibilityResult]:
    """Contractibility status of the link of every nonempty face.

    A face is a mandatory codeword when its link is NON_CONTRACTIBLE: every
    code with this complex that is open or closed convex must contain it.
    """
    out: dict[Word, ContractibilityResult] = {}
    for f in sorted((f for f in cpx.face_set if f), key=word_key):
        out[f] = contractibility(link(cpx, f), collapse_budget=collapse_budget)
    return out


@dataclass(frozen=True)
class LocalObstructionReport:
    """Verdict of the locally-good test plus the faces it had to examine.

    ``verdict`` is True/False/None (None = some needed status is UNKNOWN).
    ``checked`` maps each nonempty intersection of >= 2 maximal codewords
    missing from the code to the contractibility of its link.
    """

    verdict: bool | None
    checked: tuple[tuple[Word, ContractibilityResult], ...]
    obstruction: Word | None = None

    def checked_faces(self) -> tuple[Word, ...]:
        return tuple(f for f, _ in self.checked)


def _missing_intersections(code: NeuralCode) -> list[Word]:
    """Nonempty intersections of >= 2 maximal codewords that are not codewords."""
    maxima = sorted(maximal_codewords(code), key=word_key)
    values: set[Word] = set()
    frontier: set[Word] = set()
    for i in range(len(maxima)):
        for j in range(i + 1, len(maxima)):
            frontier.add(maxima[i] & maxima[j])
    while frontier:
        values |= frontier
        frontier = {
            v & m for v in frontier for m in maxima if (v & m) not in values
        }
    return sorted((v for v in values if v and v not in code.words), key=word_key)


def is_locally_good(
    code: NeuralCode, collapse_budget: int = DEFAULT_COLLAPSE_BUDGET
) -> LocalObstructionReport:
    """Detect local obstructions to open or closed convexity.

    The code is locally good iff every nonempty intersection of two or more
    maximal codewords that is missing from the code has a contractible link
    in the code's complex.  This is equivalent to containing every mandatory
    codeword of the complex.
    """
    cpx = simplicial_complex(code)
    checked: list[tuple[Word, ContractibilityResult]] = []
    obstruction: Word | None = None
    saw_unknown = False
    for f in _missing_intersections(code):
        res = contractibility(link(cpx, f), collapse_budget=collapse_budget)
        checked.append((f, res))
        if res.status is Contractibility.NON_CONTRACTIBLE and obstruction is None:
            obstruction = f
        elif res.status is Contractibility.UNKNOWN:
            saw_unknown = True
    if obstruction is not None:
        verdict: bool | None = False
    elif saw_unknown:
        verdict = None
    else:
        verdict = True
    return LocalObstructionReport(verdict, tuple(checked), obstruction)


__all__ = [
    "Contractibility",
    "ContractibilityResult",
    "FaceNotFoundError",
    "LocalObstructionReport",
    "collapse_to_point",
    "contractibility",
    "is_locally_good",
    "link",
    "mandatory_codewords",
    "reduced_homology",
]
