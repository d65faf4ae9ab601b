"""Exact rational polyhedral geometry for arrangements of convex sets.

Sets are H-representations: lists of linear constraints ``a·x <= b``,
``a·x < b``, or ``a·x = b`` with Fraction coefficients.  The feasibility
kernel is Fourier-Motzkin elimination, run exactly; equalities are removed
first by substitution.  Mixed strict/weak constraints are handled natively,
which is what lets a single engine decide both open and closed semantics.

An arrangement is an ordered family U_1..U_n of such sets in a common
ambient dimension, tagged open or closed.  The code of the arrangement is
the set of membership patterns sigma for which the atom
``U_sigma minus the union of the other sets`` is nonempty; atoms are decided
by a depth-first search over one negated constraint per avoided set, with
incremental infeasibility pruning.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .codes import NeuralCode, Word, full_word, members

Rational = Fraction

Point = tuple[Fraction, ...]


class Rel(Enum):
    LE = "<="
    LT = "<"
    EQ = "="


class Topology(Enum):
    OPEN = "open"
    CLOSED = "closed"


class TopologyError(ValueError):
    """A constraint relation is incompatible with the declared topology."""


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class LinearConstraint:
    """One constraint ``coeffs · x  rel  bound`` over Fraction scalars."""

    coeffs: tuple[Fraction, ...]
    rel: Rel
    bound: Fraction

    def evaluate(self, point: Sequence[Fraction]) -> Fraction:
        return sum((c * x for c, x in zip(self.coeffs, point)), Fraction(0))

    def holds_at(self, point: Sequence[Fraction]) -> bool:
        v = self.evaluate(point)
        if self.rel is Rel.LE:
            return v <= self.bound
        if self.rel is Rel.LT:
            return v < self.bound
        return v == self.bound


def constraint(coeffs: Iterable, rel: Rel | str, bound) -> LinearConstraint:
    """Build a constraint, coercing ints/strings to Fractions."""
    r = rel if isinstance(rel, Rel) else Rel(rel)
    return LinearConstraint(tuple(_frac(c) for c in coeffs), r, _frac(bound))


@dataclass(frozen=True)
class Polyhedron:
    """A convex set in R^dim given by a finite list of linear constraints."""

    dim: int
    constraints: tuple[LinearConstraint, ...]

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError("ambient dimension must be positive")
        for c in self.constraints:
            if len(c.coeffs) != self.dim:
                raise ValueError(
                    f"constraint has {len(c.coeffs)} coefficients in dimension {self.dim}"
                )


def polyhedron(dim: int, rows: Iterable[tuple]) -> Polyhedron:
    """Convenience constructor: rows of (coeffs, rel, bound)."""
    return Polyhedron(dim, tuple(constraint(*row) for row in rows))


@dataclass(frozen=True)
class Arrangement:
    """An ordered family of polyhedra with uniform topology in R^dim."""

    dim: int
    topology: Topology
    sets: tuple[Polyhedron, ...]

    def __post_init__(self) -> None:
        for k, p in enumerate(self.sets, start=1):
            if p.dim != self.dim:
                raise ValueError(f"set {k} lives in dimension {p.dim}, expected {self.dim}")
            for c in p.constraints:
                if self.topology is Topology.OPEN and c.rel is Rel.EQ:
                    raise TopologyError(
                        f"set {k}: equality constraint not allowed in an open arrangement"
                    )
                if self.topology is Topology.CLOSED and c.rel is Rel.LT:
                    raise TopologyError(
                        f"set {k}: strict constraint not allowed in a closed arrangement"
                    )

    @property
    def n(self) -> int:
        return len(self.sets)


def interpreted_constraints(
    poly: Polyhedron, topology: Topology
) -> tuple[LinearConstraint, ...]:
    """Constraints with the topology applied: open sets read ``<=`` strictly.

    Open convex sets are empty or full-dimensional, so equality constraints
    are rejected loudly under OPEN rather than treated as an empty set.
    """
    if topology is Topology.CLOSED:
        for c in poly.constraints:
            if c.rel is Rel.LT:
                raise TopologyError("strict constraint not allowed under closed topology")
        return poly.constraints
    out = []
    for c in poly.constraints:
        if c.rel is Rel.EQ:
            raise TopologyError("equality constraint not allowed under open topology")
        out.append(LinearConstraint(c.coeffs, Rel.LT, c.bound))
    return tuple(out)


def negation_branches(c: LinearConstraint) -> tuple[LinearConstraint, ...]:
    """Constraints covering the complement of c (two branches for equality)."""
    neg = tuple(-a for a in c.coeffs)
    if c.rel is Rel.LE:
        return (LinearConstraint(neg, Rel.LT, -c.bound),)
    if c.rel is Rel.LT:
        return (LinearConstraint(neg, Rel.LE, -c.bound),)
    return (
        LinearConstraint(c.coeffs, Rel.LT, c.bound),
        LinearConstraint(neg, Rel.LT, -c.bound),
    )


# --- Fourier-Motzkin feasibility -------------------------------------------------


class _Infeasible(Exception):
    pass


# normalized inequality row: (primitive int coefficient tuple, bound, strict)
_Row = tuple[tuple[int, ...], Fraction, bool]


class _IneqSystem:
    """Weak/strict inequality rows, normalized, with dominance pruning.

    Rows are keyed by their primitive integer coefficient vector; for equal
    directions only the tightest bound is kept.  Opposite directions are
    checked for an empty feasibility window as rows are added.
    """

    def __init__(self) -> None:
        self.rows: dict[tuple[int, ...], tuple[Fraction, bool]] = {}

    def add(self, coeffs: Sequence[Fraction], bound: Fraction, strict: bool) -> None:
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in coeffs]
        g = 0
        for v in ints:
            g = gcd(g, abs(v))
        if g == 0:
            if bound < 0 or (bound == 0 and strict):
                raise _Infeasible
            return
        key = tuple(v // g for v in ints)
        b = bound * den / g
        old = self.rows.get(key)
        if old is None or b < old[0] or (b == old[0] and strict and not old[1]):
            self.rows[key] = (b, strict)
            b_eff, s_eff = b, strict
        else:
            b_eff, s_eff = old
        opp = self.rows.get(tuple(-v for v in key))
        if opp is not None:
            # key·x <= b_eff and key·x >= -opp_bound
            if -opp[0] > b_eff or (-opp[0] == b_eff and (s_eff or opp[1])):
                raise _Infeasible

    def items(self) -> list[_Row]:
        return [(k, b, s) for k, (b, s) in self.rows.items()]


def _eliminate(system: _IneqSystem, k: int) -> tuple[list[_Row], list[_Row], _IneqSystem]:
    lowers: list[_Row] = []
    uppers: list[_Row] = []
    keep: list[_Row] = []
    for key, b, s in system.items():
        ck = key[k]
        if ck < 0:
            lowers.append((key, b, s))
        elif ck > 0:
            uppers.append((key, b, s))
        else:
            keep.append((key, b, s))
    new = _IneqSystem()
    for key, b, s in keep:
        new.add([Fraction(v) for v in key], b, s)
    for lkey, lb, ls in lowers:
        la = -lkey[k]
        for ukey, ub, us in uppers:
            ua = ukey[k]
            combined = [Fraction(ua * lv + la * uv) for lv, uv in zip(lkey, ukey)]
            new.add(combined, ua * lb + la * ub, ls or us)
    return lowers, uppers, new


def feasible_point(
    constraints: Iterable[LinearConstraint], dim: int
) -> Point | None:
    """Decide a mixed strict/weak/equality system exactly; return a witness.

    Equalities are eliminated by substitution, then Fourier-Motzkin removes
    the remaining variables; a satisfying rational point is reconstructed by
    back-substitution through the recorded bounds.  Returns None when the
    system is infeasible.
    """
    ineqs: list[list] = []  # [coeffs list, bound, strict]
    eqs: list[list] = []  # [coeffs list, bound]
    for c in constraints:
        if len(c.coeffs) != dim:
            raise ValueError(f"constraint has {len(c.coeffs)} coefficients, expected {dim}")
        if c.rel is Rel.EQ:
            eqs.append([list(c.coeffs), c.bound])
        else:
            ineqs.append([list(c.coeffs), c.bound, c.rel is Rel.LT])

    # substitute equalities away: x_p = e0 + sum_j ej[j] * x_j
    subs: list[tuple[int, Fraction, dict[int, Fraction]]] = []
    while eqs:
        coeffs, bound = eqs.pop(0)
        p = next((i for i, a in enumerate(coeffs) if a != 0), None)
        if p is None:
            if bound != 0:
                return None
            continue
        ap = coeffs[p]
        e0 = bound / ap
        ej = {j: -a / ap for j, a in enumerate(coeffs) if j != p and a != 0}
        for row in eqs:
            _apply_substitution(row, p, e0, ej)
        for row in ineqs:
            _apply_substitution(row, p, e0, ej)
        subs.append((p, e0, ej))

    system = _IneqSystem()
    try:
        for coeffs, bound, strict in ineqs:
            system.add(coeffs, bound, strict)
        steps: list[tuple[int, list[_Row], list[_Row]]] = []
        while True:
            active = sorted({i for key in system.rows for i, v in enumerate(key) if v})
            if not active:
                break
            k = min(
                active,
                key=lambda i: (
                    sum(1 for key in system.rows if key[i] < 0)
                    * sum(1 for key in system.rows if key[i] > 0),
                    i,
                ),
            )
            lowers, uppers, system = _eliminate(system, k)
            steps.append((k, lowers, uppers))
    except _Infeasible:
        return None

    values = [Fraction(0)] * dim
    for k, lowers, uppers in reversed(steps):
        lo: tuple[Fraction, bool] | None = None
        for key, b, s in lowers:
            rest = sum((Fraction(v) * values[i] for i, v in enumerate(key) if i != k), Fraction(0))
            cand = (b - rest) / key[k]  # key[k] < 0 flips the inequality
            if lo is None or cand > lo[0] or (cand == lo[0] and s):
                lo = (cand, s)
        hi: tuple[Fraction, bool] | None = None
        for key, b, s in uppers:
            rest = sum((Fraction(v) * values[i] for i, v in enumerate(key) if i != k), Fraction(0))
            cand = (b - rest) / key[k]
            if hi is None or cand < hi[0] or (cand == hi[0] and s):
                hi = (cand, s)
        if lo is None and hi is None:
            values[k] = Fraction(0)
        elif lo is None:
            assert hi is not None
            values[k] = hi[0] - 1 if hi[1] else hi[0]
        elif hi is None:
            values[k] = lo[0] + 1 if lo[1] else lo[0]
        elif lo[0] == hi[0]:
            values[k] = lo[0]
        else:
            values[k] = (lo[0] + hi[0]) / 2
    for p, e0, ej in reversed(subs):
        values[p] = e0 + sum((c * values[j] for j, c in ej.items()), Fraction(0))
    return tuple(values)


def _apply_substitution(
    row: list, p: int, e0: Fraction, ej: dict[int, Fraction]
) -> None:
    coeffs = row[0]
    ap = coeffs[p]
    if ap == 0:
        return
    for j, c in ej.items():
        coeffs[j] += ap * c
    coeffs[p] = Fraction(0)
    row[1] = row[1] - ap * e0


def is_feasible(constraints: Iterable[LinearConstraint], dim: int) -> bool:
    return feasible_point(constraints, dim) is not None


def point_satisfies(constraints: Iterable[LinearConstraint], point: Sequence[Fraction]) -> bool:
    return all(c.holds_at(point) for c in constraints)


def set_is_empty(poly: Polyhedron, topology: Topology) -> bool:
    """Whether the topology-interpreted point set is empty."""
    return feasible_point(interpreted_constraints(poly, topology), poly.dim) is None


def interpret_closure(arr: Arrangement) -> Arrangement:
    """Read every constraint of an open arrangement weakly.

    The result realizes the closures of the original sets; its code may
    differ from the open code and is not checked here.
    """
    if arr.topology is not Topology.OPEN:
        raise ValueError("interpret_closure expects an open arrangement")
    new_sets = tuple(
        Polyhedron(
            p.dim,
            tuple(
                LinearConstraint(c.coeffs, Rel.LE if c.rel is Rel.LT else c.rel, c.bound)
                for c in p.constraints
            ),
        )
        for p in arr.sets
    )
    return Arrangement(arr.dim, Topology.CLOSED, new_sets)


def membership_pattern(arr: Arrangement, point: Sequence[Fraction]) -> Word:
    """The codeword of sets containing the point under the arrangement topology."""
    pt = tuple(_frac(x) for x in point)
    w = 0
    for i, p in enumerate(arr.sets, start=1):
        if point_satisfies(interpreted_constraints(p, arr.topology), pt):
            w |= 1 << (i - 1)
    return w


def _atom_search(
    arr: Arrangement,
    interp: Sequence[tuple[LinearConstraint, ...]],
    sigma: Word,
    base_constraints: list[LinearConstraint],
    base_witness: Point,
) -> Point | None:
    """Find a point of U_sigma avoiding every other set, or prove there is none.

    One negated constraint is chosen per avoided set, depth-first; a branch
    is pruned as soon as its partial system is infeasible.  Witnesses are
    reused: a branch whose new constraint already holds at the current
    witness needs no new solve.
    """
    if membership_pattern(arr, base_witness) == sigma:
        return base_witness
    outside = [i for i in range(1, arr.n + 1) if not sigma & (1 << (i - 1))]
    # sets already disjoint from the base region need no explicit negation
    levels: list[list[LinearConstraint]] = []
    for j in outside:
        if feasible_point(base_constraints + list(interp[j - 1]), arr.dim) is None:
            continue
        branches = [nb for c in interp[j - 1] for nb in negation_branches(c)]
        levels.append(branches)

    def search(level: int, cons: list[LinearConstraint], witness: Point) -> Point | None:
        if level == len(levels):
            return witness
        for nb in levels[level]:
            if nb.holds_at(witness):
                found = search(level + 1, cons + [nb], witness)
            else:
                w2 = feasible_point(cons + [nb], arr.dim)
                found = search(level + 1, cons + [nb], w2) if w2 is not None else None
            if found is not None:
                return found
        return None

    return search(0, base_constraints, base_witness)


def find_atom_point(arr: Arrangement, sigma: Word) -> Point | None:
    """A rational point whose membership pattern is exactly sigma, or None."""
    if sigma & ~full_word(arr.n):
        raise ValueError(f"pattern uses sets beyond the arrangement's {arr.n}")
    interp = [interpreted_constraints(p, arr.topology) for p in arr.sets]
    base: list[LinearConstraint] = []
    for i in members(sigma):
        base.extend(interp[i - 1])
    w = feasible_point(base, arr.dim)
    if w is None:
        return None
    return _atom_search(arr, interp, sigma, base, w)


def atom_is_nonempty(arr: Arrangement, sigma: Word) -> bool:
    return find_atom_point(arr, sigma) is not None


def code_of_arrangement(arr: Arrangement) -> NeuralCode:
    """Extract the code of the arrangement: all sigma with a nonempty atom.

    Candidate patterns are the faces of the nerve (subsets with nonempty
    common intersection), discovered breadth-first from the empty pattern by
    adding sets in increasing order; the empty codeword is decided by the
    same atom search as every other pattern.
    """
    if arr.n > 20:
        raise ValueError(f"arrangement has {arr.n} sets; extraction is capped at 20")
    interp = [interpreted_constraints(p, arr.topology) for p in arr.sets]
    origin = tuple(Fraction(0) for _ in range(arr.dim))
    words: set[Word] = set()
    queue: list[tuple[Word, int, list[LinearConstraint], Point]] = [(0, 0, [], origin)]
    while queue:
        sigma, top, cons, witness = queue.pop(0)
        if _atom_search(arr, interp, sigma, cons, witness) is not None:
            words.add(sigma)
        for j in range(top + 1, arr.n + 1):
            cons2 = cons + list(interp[j - 1])
            if point_satisfies(interp[j - 1], witness):
                w2: Point | None = witness
            else:
                w2 = feasible_point(cons2, arr.dim)
            if w2 is not None:
                queue.append((sigma | (1 << (j - 1)), j, cons2, w2))
    return NeuralCode(arr.n, frozenset(words))


def line_meets(
    poly: Polyhedron,
    topology: Topology,
    point: Sequence,
    direction: Sequence,
) -> bool:
    """Whether the line point + t*direction meets the topology-interpreted set.

    Substituting the parametrization turns each constraint into a one-variable
    constraint on t, decided exactly.
    """
    pt = tuple(_frac(x) for x in point)
    dr = tuple(_frac(x) for x in direction)
    if len(pt) != poly.dim or len(dr) != poly.dim:
        raise ValueError("point/direction dimension mismatch")
    if all(x == 0 for x in dr):
        raise ValueError("direction must be nonzero")
    one_d = []
    for c in interpreted_constraints(poly, topology):
        slope = sum((a * d for a, d in zip(c.coeffs, dr)), Fraction(0))
        offset = c.bound - sum((a * x for a, x in zip(c.coeffs, pt)), Fraction(0))
        one_d.append(LinearConstraint((slope,), c.rel, offset))
    return feasible_point(one_d, 1) is not None


__all__ = [
    "Arrangement",
    "LinearConstraint",
    "Point",
    "Polyhedron",
    "Rational",
    "Rel",
    "Topology",
    "TopologyError",
    "atom_is_nonempty",
    "code_of_arrangement",
    "constraint",
    "feasible_point",
    "find_atom_point",
    "interpret_closure",
    "interpreted_constraints",
    "is_feasible",
    "line_meets",
    "membership_pattern",
    "negation_branches",
    "point_satisfies",
    "polyhedron",
    "set_is_empty",
]
