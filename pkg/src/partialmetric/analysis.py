"""Sequence analyzers and topology probes.

Limits are not decidable from finitely many terms, so the analyzers never
assert one. A "converges" verdict is a finite certificate (tail index and
achieved gap at a tolerance); a "refuted" verdict is issued only when the
offending gap recurs along an exact cycle, either declared on the
sequence or detected as an exactly repeating tail pattern. Everything
else is "inconclusive".
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .core import FinitePMSpace, ball, check_axioms, separation_class
from .errors import AxiomFailureError, UnsupportedSequenceError
from .points import Point, format_point, format_rational

DEFAULT_TOL = Fraction(1, 10**6)
DEFAULT_HORIZON = 10**4

# Pairwise Cauchy checks are quadratic in the window, so cap it.
_PAIR_WINDOW = 64
_MAX_PERIOD = 8


@dataclass(frozen=True)
class SequenceSpec:
    """A sequence given as an explicit prefix, a periodic pattern, or a generator.

    Indices are 1-based. Periodic specs describe the whole infinite
    sequence exactly, so verdicts computed from them are exact; explicit
    prefixes and generators only support finite-horizon certificates.
    """

    kind: str  # "explicit" | "periodic" | "generator"
    prefix: tuple[Point, ...] = ()
    cycle: tuple[Point, ...] = ()
    generator: Optional[Callable[[int], Point]] = None
    name: Optional[str] = None

    @classmethod
    def explicit(cls, points: Sequence[Point], name: Optional[str] = None) -> "SequenceSpec":
        pts = tuple(points)
        if not pts:
            raise ValueError("empty sequence")
        return cls("explicit", prefix=pts, name=name)

    @classmethod
    def periodic(cls, cycle: Sequence[Point], preamble: Sequence[Point] = (),
                 name: Optional[str] = None) -> "SequenceSpec":
        cyc = tuple(cycle)
        if not cyc:
            raise ValueError("empty cycle")
        return cls("periodic", prefix=tuple(preamble), cycle=cyc, name=name)

    @classmethod
    def from_generator(cls, fn: Callable[[int], Point], name: Optional[str] = None) -> "SequenceSpec":
        return cls("generator", generator=fn, name=name)

    def term(self, n: int) -> Point:
        if n < 1:
            raise ValueError("sequence indices start at 1")
        if self.kind == "explicit":
            if n > len(self.prefix):
                raise UnsupportedSequenceError(f"explicit sequence has {len(self.prefix)} terms")
            return self.prefix[n - 1]
        if self.kind == "periodic":
            if n <= len(self.prefix):
                return self.prefix[n - 1]
            return self.cycle[(n - len(self.prefix) - 1) % len(self.cycle)]
        assert self.generator is not None
        return self.generator(n)

    def effective_horizon(self, horizon: int) -> int:
        if horizon < 1:
            raise ValueError("horizon must be at least 1")
        if self.kind == "explicit":
            return min(horizon, len(self.prefix))
        return horizon

    def terms(self, horizon: int) -> list[Point]:
        return [self.term(n) for n in range(1, self.effective_horizon(horizon) + 1)]


def _tail_period(values: Sequence, max_period: int = _MAX_PERIOD) -> Optional[int]:
    """Minimal period of the exactly repeating tail half, if any."""
    if len(values) >= 2 and all(v == values[0] for v in values):
        return 1
    tail = list(values[len(values) // 2:])
    for d in range(1, max_period + 1):
        if len(tail) >= max(2, 3 * d) and all(tail[i] == tail[i + d] for i in range(len(tail) - d)):
            return d
    return None


def exact_cycle(seq: SequenceSpec, horizon: int = DEFAULT_HORIZON) -> Optional[tuple[Point, ...]]:
    """The sequence's eventual cycle: declared for periodic specs, else detected."""
    if seq.kind == "periodic":
        return seq.cycle
    pts = seq.terms(horizon)
    d = _tail_period(pts)
    return tuple(pts[-d:]) if d else None


@dataclass(frozen=True)
class Certificate:
    tail_index: int
    achieved_gap: Fraction

    def to_dict(self) -> dict:
        return {"tail_index": self.tail_index, "achieved_gap": format_rational(self.achieved_gap)}


@dataclass(frozen=True)
class _GapVerdict:
    status: str  # "ok" | "refuted" | "inconclusive"
    certificate: Optional[Certificate]
    witness: tuple[tuple[Point, Fraction], ...]
    exact: bool
    observed_gap: Optional[Fraction]


def _analyze_gaps(space, seq: SequenceSpec, gap_of: Callable[[Point], Fraction],
                  tol: Fraction, horizon: int) -> _GapVerdict:
    """Certificate/refutation analysis of one gap sequence."""
    if seq.kind == "periodic":
        gaps = [(y, gap_of(y)) for y in seq.cycle]
        bad = tuple((y, g) for y, g in gaps if g > tol)
        if not bad:
            cert = Certificate(len(seq.prefix) + 1, max(g for _, g in gaps))
            return _GapVerdict("ok", cert, (), True, cert.achieved_gap)
        return _GapVerdict("refuted", None, bad, True, max(g for _, g in bad))

    n = seq.effective_horizon(horizon)
    pts = seq.terms(n)
    gaps = [gap_of(x) for x in pts]
    window_start = n - n // 4 + 1 if n >= 4 else 1
    window = gaps[window_start - 1:]
    if all(g <= tol for g in window):
        n0 = window_start
        while n0 > 1 and gaps[n0 - 2] <= tol:
            n0 -= 1
        return _GapVerdict("ok", Certificate(n0, max(gaps[n0 - 1:])), (), False, max(window))
    d = _tail_period(gaps)
    if d is not None:
        block = [(pts[n - d + i], gaps[n - d + i]) for i in range(d)]
        bad = tuple((y, g) for y, g in block if g > tol)
        if bad:
            return _GapVerdict("refuted", None, bad, False, max(g for _, g in bad))
    return _GapVerdict("inconclusive", None, (), False, max(window))


@dataclass(frozen=True)
class ConvergenceReport:
    mode: str  # "converges" | "properly_converges" | "inconclusive" | "refuted"
    target: Point
    tol: Fraction
    horizon: int
    certificate: Optional[Certificate]
    self_certificate: Optional[Certificate] = None
    witness: tuple[tuple[Point, Fraction], ...] = ()
    exact: bool = False
    observed_gap: Optional[Fraction] = None

    @property
    def ok(self) -> bool:
        return self.mode in ("converges", "properly_converges")

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "target": format_point(self.target),
            "tol": format_rational(self.tol),
            "horizon": self.horizon,
            "certificate": self.certificate.to_dict() if self.certificate else None,
            "self_certificate": self.self_certificate.to_dict() if self.self_certificate else None,
            "witness": [[format_point(p), format_rational(g)] for p, g in self.witness],
            "exact": self.exact,
            "observed_gap": format_rational(self.observed_gap) if self.observed_gap is not None else None,
        }


def converges_to(space, seq: SequenceSpec, x: Point, tol: Fraction = DEFAULT_TOL,
                 horizon: int = DEFAULT_HORIZON) -> ConvergenceReport:
    """Finite certificate that p(x_n, x) settles at p(x,x) within tol."""
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    px = space.p(x, x)
    leg = _analyze_gaps(space, seq, lambda y: abs(space.p(y, x) - px), tol, horizon)
    mode = {"ok": "converges", "refuted": "refuted", "inconclusive": "inconclusive"}[leg.status]
    return ConvergenceReport(mode, x, tol, horizon, leg.certificate,
                             witness=leg.witness, exact=leg.exact, observed_gap=leg.observed_gap)


def properly_converges(space, seq: SequenceSpec, x: Point, tol: Fraction = DEFAULT_TOL,
                       horizon: int = DEFAULT_HORIZON) -> ConvergenceReport:
    """As converges_to, plus the self-distances p(x_n, x_n) must settle at p(x,x)."""
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    px = space.p(x, x)
    plain = _analyze_gaps(space, seq, lambda y: abs(space.p(y, x) - px), tol, horizon)
    selfd = _analyze_gaps(space, seq, lambda y: abs(space.p(y, y) - px), tol, horizon)
    if plain.status == "ok" and selfd.status == "ok":
        mode = "properly_converges"
    elif plain.status == "refuted" or selfd.status == "refuted":
        mode = "refuted"
    else:
        mode = "inconclusive"
    witness = plain.witness if plain.status == "refuted" else selfd.witness
    observed = [g for g in (plain.observed_gap, selfd.observed_gap) if g is not None]
    return ConvergenceReport(mode, x, tol, horizon, plain.certificate,
                             self_certificate=selfd.certificate, witness=witness,
                             exact=plain.exact and selfd.exact,
                             observed_gap=max(observed) if observed else None)


@dataclass(frozen=True)
class CauchyReport:
    verdict: str  # "cauchy_to" | "inconclusive" | "refuted"
    a: Optional[Fraction]
    tol: Fraction
    horizon: int
    tail_index: Optional[int]
    max_deviation: Optional[Fraction]
    witness: tuple[tuple[tuple[Point, Point], Fraction], ...] = ()
    exact: bool = False

    @property
    def ok(self) -> bool:
        return self.verdict == "cauchy_to"

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "a": format_rational(self.a) if self.a is not None else None,
            "tol": format_rational(self.tol),
            "horizon": self.horizon,
            "tail_index": self.tail_index,
            "max_deviation": format_rational(self.max_deviation) if self.max_deviation is not None else None,
            "witness": [[[format_point(u), format_point(v)], format_rational(g)]
                        for (u, v), g in self.witness],
            "exact": self.exact,
        }


def _cauchy_over_cycle(space, cycle: tuple[Point, ...], tol: Fraction, horizon: int,
                       tail_index: int, exact: bool) -> CauchyReport:
    pairs = [((u, v), space.p(u, v)) for u in cycle for v in cycle]
    values = [g for _, g in pairs]
    lo, hi = min(values), max(values)
    if hi - lo <= 2 * tol:
        return CauchyReport("cauchy_to", (hi + lo) / 2, tol, horizon, tail_index,
                            (hi - lo) / 2, exact=exact)
    lo_pair = next(pv for pv in pairs if pv[1] == lo)
    hi_pair = next(pv for pv in pairs if pv[1] == hi)
    return CauchyReport("refuted", None, tol, horizon, None, None,
                        witness=(lo_pair, hi_pair), exact=exact)


def is_cauchy(space, seq: SequenceSpec, tol: Fraction = DEFAULT_TOL,
              horizon: int = DEFAULT_HORIZON) -> CauchyReport:
    """Do the pairwise distances p(x_n, x_m) stabilize to a single value?"""
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    if seq.kind == "periodic":
        return _cauchy_over_cycle(space, seq.cycle, tol, horizon, len(seq.prefix) + 1, True)
    n = seq.effective_horizon(horizon)
    pts = seq.terms(n)
    w = max(1, min(n // 4 if n >= 4 else n, _PAIR_WINDOW))
    tail = pts[n - w:]
    pairs = [((tail[i], tail[j]), space.p(tail[i], tail[j]))
             for i in range(w) for j in range(i, w)]
    values = [g for _, g in pairs]
    lo, hi = min(values), max(values)
    if hi - lo <= 2 * tol:
        return CauchyReport("cauchy_to", (hi + lo) / 2, tol, horizon, n - w + 1,
                            (hi - lo) / 2, exact=False)
    d = _tail_period(pts)
    if d is not None:
        return _cauchy_over_cycle(space, tuple(pts[-d:]), tol, horizon, n - d + 1, False)
    return CauchyReport("inconclusive", None, tol, horizon, None, None)


def limit_set(space: FinitePMSpace, seq: SequenceSpec,
              horizon: int = DEFAULT_HORIZON) -> frozenset:
    """All x with exact lim p(x_n, x) = p(x,x), for exactly periodic sequences."""
    cycle = exact_cycle(seq, horizon)
    if cycle is None:
        raise UnsupportedSequenceError("limit_set needs an eventually periodic sequence")
    for y in cycle:
        space.index(y)
    return frozenset(
        t for t in space.points
        if all(space.p(y, t) == space.p(t, t) for y in cycle)
    )


@dataclass(frozen=True)
class SpecializationOrder:
    """The relation x >= y iff y lies in every ball around x, i.e. p(x,y) = p(x,x)."""

    points: tuple[Point, ...]
    matrix: tuple[tuple[bool, ...], ...]

    def dominates(self, x: Point, y: Point) -> bool:
        pts = self.points
        return self.matrix[pts.index(x)][pts.index(y)]

    def to_dict(self) -> dict:
        return {
            "points": [format_point(p) for p in self.points],
            "dominates": [[bool(v) for v in row] for row in self.matrix],
        }


def specialization_order(space: FinitePMSpace) -> SpecializationOrder:
    """Compute the specialization relation; refuses axiom-violating tables.

    On a valid space the relation is reflexive, transitive and
    antisymmetric; those are rechecked defensively.
    """
    report = check_axioms(space)
    if not report.ok:
        raise AxiomFailureError(f"space violates {report.violated_axiom}")
    m, n = space.matrix, len(space)
    dom = tuple(tuple(m[i][j] == m[i][i] for j in range(n)) for i in range(n))
    for i in range(n):
        if not dom[i][i]:
            raise RuntimeError("specialization order lost reflexivity")
        for j in range(n):
            if i != j and dom[i][j] and dom[j][i]:
                raise RuntimeError("specialization order lost antisymmetry")
            for k in range(n):
                if dom[i][j] and dom[j][k] and not dom[i][k]:
                    raise RuntimeError("specialization order lost transitivity")
    return SpecializationOrder(space.points, dom)


def _candidate_radii(space: FinitePMSpace) -> list[Fraction]:
    """Radii probing every ball configuration: thresholds, midpoints, extremes."""
    gaps = sorted({space.matrix[i][j] - space.matrix[i][i]
                   for i in range(len(space)) for j in range(len(space))
                   if space.matrix[i][j] > space.matrix[i][i]})
    if not gaps:
        return [Fraction(1)]
    radii = [gaps[0] / 2]
    radii.extend(gaps)
    radii.extend((gaps[t] + gaps[t + 1]) / 2 for t in range(len(gaps) - 1))
    radii.append(gaps[-1] + 1)
    return sorted(set(radii))


def maximal_points(space: FinitePMSpace) -> frozenset:
    """Points with no proper dominator; their balls cover the space at every radius."""
    order = specialization_order(space)
    n = len(space)
    maximal = [j for j in range(n)
               if not any(i != j and order.matrix[i][j] for i in range(n))]
    hats = frozenset(space.points[j] for j in maximal)
    for eps in _candidate_radii(space):
        covered = set()
        for j in maximal:
            covered |= ball(space, space.points[j], eps)
        if covered != set(space.points):
            raise RuntimeError(f"maximal balls fail to cover at radius {eps}")
    return hats


@dataclass(frozen=True)
class GDeltaReport:
    t1: bool
    stabilization_n: int
    equals_diagonal: bool

    def to_dict(self) -> dict:
        return {"t1": self.t1, "stabilization_n": self.stabilization_n,
                "equals_diagonal": self.equals_diagonal}


def gdelta_diagonal(space: FinitePMSpace) -> GDeltaReport:
    """Is the diagonal the intersection of the product ball neighborhoods?

    Ball membership y in B(x, 1/n) only depends on whether
    p(x,y) - p(x,x) < 1/n, so once 1/n drops below the smallest positive
    gap g nothing changes; the sets shrink with n, hence the infinite
    intersection equals the one at n0 = ceil(1/g).
    """
    m, n = space.matrix, len(space)
    t1 = separation_class(space).t1
    gaps = [m[i][j] - m[i][i] for i in range(n) for j in range(n) if m[i][j] > m[i][i]]
    n0 = max(1, math.ceil(1 / min(gaps))) if gaps else 1

    def product_pairs(eps: Fraction) -> frozenset:
        members = []
        for c in range(n):
            inside = [i for i in range(n) if m[c][i] - m[c][c] < eps]
            members.extend((i, j) for i in inside for j in inside)
        return frozenset(members)

    inter = product_pairs(Fraction(1, 1))
    for k in range(2, n0 + 1):
        inter &= product_pairs(Fraction(1, k))
    diagonal = frozenset((i, i) for i in range(n))
    return GDeltaReport(t1, n0, inter == diagonal)


@dataclass(frozen=True)
class CoverReport:
    covers: bool
    uncovered: Optional[Point]
    eps: Fraction

    def to_dict(self) -> dict:
        return {"covers": self.covers,
                "uncovered": format_point(self.uncovered) if self.uncovered is not None else None,
                "eps": format_rational(self.eps)}


def ball_cover_check(space: FinitePMSpace, centers: Sequence[Point], eps: Fraction) -> CoverReport:
    """Do the eps-balls around the centers cover the space?"""
    if eps <= 0:
        raise ValueError("cover radius must be positive")
    covered: set = set()
    for c in centers:
        covered |= ball(space, c, eps)
    for p in space.points:
        if p not in covered:
            return CoverReport(False, p, eps)
    return CoverReport(True, None, eps)


@dataclass(frozen=True)
class NetReport:
    centers: tuple[Point, ...]
    eps: Fraction

    @property
    def size(self) -> int:
        return len(self.centers)

    def to_dict(self) -> dict:
        return {"centers": [format_point(p) for p in self.centers],
                "size": self.size, "eps": format_rational(self.eps)}


def totally_bounded_at(space: FinitePMSpace, eps: Fraction) -> NetReport:
    """Greedy eps-net.

    Repeatedly picks the uncovered point whose ball swallows the most of
    what is still uncovered (ties to the lowest index), so a point whose
    ball is the whole space is found first. Always succeeds on a finite
    space; the interesting output is the net size.
    """
    if eps <= 0:
        raise ValueError("net radius must be positive")
    balls = {p: ball(space, p, eps) for p in space.points}
    uncovered = set(space.points)
    centers: list[Point] = []
    while uncovered:
        best = max(
            (p for p in space.points if p in uncovered),
            key=lambda p: (len(balls[p] & uncovered), -space.index(p)),
        )
        centers.append(best)
        uncovered -= balls[best]
    return NetReport(tuple(centers), eps)


@dataclass(frozen=True)
class SubsequenceWitness:
    kind: str  # "full" | "constant"
    limit: Point
    exact: bool
    progression: Optional[tuple[int, int]] = None   # (start, step) for cycle constants
    indices: Optional[tuple[int, ...]] = None       # explicit positions otherwise

    def to_dict(self) -> dict:
        return {"kind": self.kind, "limit": format_point(self.limit), "exact": self.exact,
                "progression": list(self.progression) if self.progression else None,
                "indices": list(self.indices) if self.indices else None}


def seq_compact_witness(space: FinitePMSpace, seq: SequenceSpec,
                        tol: Fraction = DEFAULT_TOL,
                        horizon: int = DEFAULT_HORIZON) -> SubsequenceWitness:
    """A convergent subsequence: the whole sequence when a limit is exact or
    certified, otherwise a constant subsequence obtained by pigeonhole."""
    cycle = exact_cycle(seq, horizon)
    if cycle is not None:
        exact_limits = [t for t in space.points
                        if all(space.p(y, t) == space.p(t, t) for y in cycle)]
        if exact_limits:
            return SubsequenceWitness("full", exact_limits[0], True)
        counts = {v: cycle.count(v) for v in cycle}
        v = max(cycle, key=lambda y: (counts[y], -cycle.index(y)))
        if seq.kind == "periodic":
            start = len(seq.prefix) + cycle.index(v) + 1
            return SubsequenceWitness("constant", v, True, progression=(start, len(cycle)))
        pts = seq.terms(horizon)
        return SubsequenceWitness("constant", v, True,
                                  indices=tuple(i + 1 for i, y in enumerate(pts) if y == v))
    for t in space.points:
        if converges_to(space, seq, t, tol, horizon).mode == "converges":
            return SubsequenceWitness("full", t, False)
    pts = seq.terms(horizon)
    counts = {v: pts.count(v) for v in set(pts)}
    v = max(pts, key=lambda y: (counts[y], -pts.index(y)))
    return SubsequenceWitness("constant", v, True,
                              indices=tuple(i + 1 for i, y in enumerate(pts) if y == v))
