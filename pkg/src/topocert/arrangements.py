"""Geometric cover specifications with exact rational endpoints.

Three families stand in for the classical spaces whose point sets are
infinite: intervals on a half-open segment, arcs on a circle, and
axis-aligned strict-inequality regions in the plane.  Density classes are
computed by walking the finitely many cells the endpoints induce, so only
the order of endpoints matters and there are no floating-point ties.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, List, Optional, Tuple

from .errors import CapExceeded, EmptyMember, InvalidArrangement, NotACover
from .hasse import HPartition, canonical_key, make_hpartition

DEFAULT_COVER_SIZE_CAP = 5


@dataclass(frozen=True)
class Segment:
    """Half-open segment [lo, hi)."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo >= self.hi:
            raise InvalidArrangement("segment needs lo < hi")

    def describe(self) -> str:
        return f"segment[{self.lo},{self.hi})"


@dataclass(frozen=True)
class FullLine:
    def describe(self) -> str:
        return "line"


@dataclass(frozen=True)
class Circle:
    circumference: Fraction

    def __post_init__(self):
        if self.circumference <= 0:
            raise InvalidArrangement("circle needs positive circumference")

    def describe(self) -> str:
        return f"circle({self.circumference})"


@dataclass(frozen=True)
class Interval:
    """One cover member.

    Segment: open (lo, hi), or [lo, hi) with closed_lo at the left boundary
    (the only closed end that is still open in the subspace topology).
    Line: lo/hi of None mean unbounded.  Circle: the arc running from lo
    counterclockwise to hi, wrapping when lo >= hi; both endpoints excluded.
    """

    lo: Optional[Fraction]
    hi: Optional[Fraction]
    closed_lo: bool = False


@dataclass(frozen=True)
class IntervalSpec:
    domain: object  # Segment | FullLine | Circle
    members: tuple  # of Interval


@dataclass(frozen=True)
class Constraint:
    var: str  # "x" | "y"
    op: str  # "<" | ">"
    c: Fraction


@dataclass(frozen=True)
class AxisAlignedSpec:
    members: tuple  # of tuples of Constraint


def _validate_interval(domain, member: Interval, idx: int) -> None:
    lo, hi = member.lo, member.hi
    if isinstance(domain, Segment):
        if lo is None or hi is None:
            raise InvalidArrangement(f"member {idx}: segment members need finite ends")
        if member.closed_lo and lo != domain.lo:
            raise InvalidArrangement(
                f"member {idx}: a closed left end is only open at the segment start"
            )
        if lo < domain.lo or hi > domain.hi:
            raise InvalidArrangement(f"member {idx}: endpoints outside the segment")
        if lo >= hi:
            raise EmptyMember(idx)
    elif isinstance(domain, FullLine):
        if member.closed_lo:
            raise InvalidArrangement(f"member {idx}: closed ends are not open in the line")
        if lo is not None and hi is not None and lo >= hi:
            raise EmptyMember(idx)
    elif isinstance(domain, Circle):
        if member.closed_lo:
            raise InvalidArrangement(f"member {idx}: closed ends are not open in the circle")
        if lo is None or hi is None:
            raise InvalidArrangement(f"member {idx}: arcs need both endpoints")
        if not (0 <= lo < domain.circumference and 0 <= hi < domain.circumference):
            raise InvalidArrangement(
                f"member {idx}: arc endpoints must lie in [0, circumference)"
            )
        if lo == hi:
            raise EmptyMember(idx)
    else:
        raise InvalidArrangement(f"unsupported domain {domain!r}")


def make_interval_spec(domain, members) -> IntervalSpec:
    ms = tuple(members)
    if not ms:
        raise InvalidArrangement("a cover needs at least one member")
    for idx, m in enumerate(ms):
        _validate_interval(domain, m, idx)
    for i, j in combinations(range(len(ms)), 2):
        if ms[i] == ms[j]:
            raise InvalidArrangement(f"members {i} and {j} are the same set")
    return IntervalSpec(domain=domain, members=ms)


def _contains(domain, member: Interval, x: Fraction) -> bool:
    lo, hi = member.lo, member.hi
    if isinstance(domain, Circle):
        if lo < hi:
            return lo < x < hi
        return x > lo or x < hi
    if lo is not None:
        if member.closed_lo:
            if x < lo:
                return False
        elif x <= lo:
            return False
    if hi is not None and x >= hi:
        return False
    return True


def _cells(spec: IntervalSpec) -> List[Tuple[str, Fraction]]:
    """(description, sample point) per cell, in walk order.

    Cells are the endpoint singletons plus the open stretches between them;
    membership is constant on each because no endpoint lies inside.
    """
    domain = spec.domain
    vals = set()
    for m in spec.members:
        for v in (m.lo, m.hi):
            if v is None:
                continue
            if isinstance(domain, Segment):
                if domain.lo <= v < domain.hi:
                    vals.add(v)
            else:
                vals.add(v)
    cells: List[Tuple[str, Fraction]] = []
    if isinstance(domain, Segment):
        vals.add(domain.lo)
        vs = sorted(vals)
        for i, v in enumerate(vs):
            cells.append((f"{{{v}}}", v))
            nxt = vs[i + 1] if i + 1 < len(vs) else domain.hi
            if v < nxt:
                cells.append((f"({v},{nxt})", (v + nxt) / 2))
    elif isinstance(domain, FullLine):
        vs = sorted(vals)
        if not vs:
            return [("(-inf,inf)", Fraction(0))]
        cells.append((f"(-inf,{vs[0]})", vs[0] - 1))
        for i, v in enumerate(vs):
            cells.append((f"{{{v}}}", v))
            if i + 1 < len(vs):
                nxt = vs[i + 1]
                cells.append((f"({v},{nxt})", (v + nxt) / 2))
        cells.append((f"({vs[-1]},inf)", vs[-1] + 1))
    else:  # Circle
        c = domain.circumference
        vs = sorted(vals)
        for i, v in enumerate(vs):
            cells.append((f"{{{v}}}", v))
            if i + 1 < len(vs):
                nxt = vs[i + 1]
                cells.append((f"({v},{nxt})", (v + nxt) / 2))
        # wrap-around stretch from the last endpoint back to the first
        wrap_mid = ((vs[-1] + vs[0] + c) / 2) % c
        cells.append((f"({vs[-1]},{vs[0]}+wrap)", wrap_mid))
    return cells


def hclasses_of_intervals(spec: IntervalSpec) -> HPartition:
    """Density classes of an interval/arc cover via the cell walk."""
    for idx, m in enumerate(spec.members):
        _validate_interval(spec.domain, m, idx)
    classes = []
    seen = set()
    for desc, sample in _cells(spec):
        h = frozenset(
            i for i, m in enumerate(spec.members)
            if _contains(spec.domain, m, sample)
        )
        if not h:
            raise NotACover(f"cell {desc}")
        if h not in seen:
            seen.add(h)
            classes.append(h)
    src = f"{spec.domain.describe()} cover(n={len(spec.members)})"
    return make_hpartition(classes, len(spec.members), src)


# -- axis-aligned plane covers ------------------------------------------------

_AXIS_VARS = ("x", "y")


def make_axis_spec(members) -> AxisAlignedSpec:
    ms = []
    for idx, conj in enumerate(members):
        cs = tuple(conj)
        lows: dict = {}
        highs: dict = {}
        for con in cs:
            if con.var not in _AXIS_VARS or con.op not in ("<", ">"):
                raise InvalidArrangement(
                    f"member {idx}: constraints are strict <,> on x or y"
                )
            side = lows if con.op == ">" else highs
            cur = side.get(con.var)
            if con.op == ">":
                side[con.var] = con.c if cur is None else max(cur, con.c)
            else:
                side[con.var] = con.c if cur is None else min(cur, con.c)
        for var in _AXIS_VARS:
            if var in lows and var in highs and lows[var] >= highs[var]:
                raise EmptyMember(idx)
        ms.append(cs)
    if not ms:
        raise InvalidArrangement("a cover needs at least one member")
    return AxisAlignedSpec(members=tuple(ms))


def _axis_cells(thresholds: List[Fraction]) -> List[tuple]:
    """1D cells of the threshold grid as ("lt"|"eq"|"between"|"gt", values)."""
    ts = sorted(set(thresholds))
    if not ts:
        return [("all",)]
    cells: List[tuple] = [("lt", ts[0])]
    for i, t in enumerate(ts):
        cells.append(("eq", t))
        if i + 1 < len(ts):
            cells.append(("between", t, ts[i + 1]))
    cells.append(("gt", ts[-1]))
    return cells


def _cell_satisfies(cell: tuple, op: str, c: Fraction) -> bool:
    """Whether a whole 1D grid cell satisfies ``var op c``.

    Constraint thresholds are grid thresholds, so satisfaction is constant
    on every cell.
    """
    kind = cell[0]
    if kind == "all":
        return False  # no thresholds means no constraints on this axis
    if op == "<":
        if kind == "lt":
            return cell[1] <= c
        if kind == "eq":
            return cell[1] < c
        if kind == "between":
            return cell[2] <= c
        return False
    if kind == "gt":
        return cell[1] >= c
    if kind == "eq":
        return cell[1] > c
    if kind == "between":
        return cell[1] >= c
    return False


def _cell_desc(var: str, cell: tuple) -> str:
    kind = cell[0]
    if kind == "all":
        return f"{var} free"
    if kind == "lt":
        return f"{var}<{cell[1]}"
    if kind == "eq":
        return f"{var}={cell[1]}"
    if kind == "between":
        return f"{cell[1]}<{var}<{cell[2]}"
    return f"{var}>{cell[1]}"


def hclasses_axis2d(spec: AxisAlignedSpec) -> HPartition:
    """Density classes of an axis-aligned plane cover via the threshold grid.

    The plane is refined into the grid of all constraint thresholds (open
    boxes, threshold lines and their crossings); membership is evaluated
    symbolically per cell and the distinct member sets are collected.
    """
    spec = make_axis_spec(spec.members)  # re-validate, normalizes nothing
    per_var = {v: [] for v in _AXIS_VARS}
    for conj in spec.members:
        for con in conj:
            per_var[con.var].append(con.c)
    xcells = _axis_cells(per_var["x"])
    ycells = _axis_cells(per_var["y"])
    classes = []
    seen = set()
    for xc in xcells:
        for yc in ycells:
            h = set()
            for i, conj in enumerate(spec.members):
                ok = True
                for con in conj:
                    cell = xc if con.var == "x" else yc
                    if not _cell_satisfies(cell, con.op, con.c):
                        ok = False
                        break
                if ok:
                    h.add(i)
            if not h:
                raise NotACover(f"cell {_cell_desc('x', xc)}, {_cell_desc('y', yc)}")
            fh = frozenset(h)
            if fh not in seen:
                seen.add(fh)
                classes.append(fh)
    return make_hpartition(classes, len(spec.members), f"plane cover(n={len(spec.members)})")


# -- exhaustive combinatorial types of interval covers ------------------------

def _segment_choices(m: int) -> List[tuple]:
    """Member descriptors over slots 0..m+1 (0 = left boundary, m+1 = right).

    ("L", h): [segment.lo, value(h));  ("O", a, b): (value(a), value(b)).
    The attached bitmask records which interior slots 1..m the member uses.
    """
    top = m + 1
    out = []
    for h in range(1, top + 1):
        out.append((("L", h), _slot_mask((h,), m)))
    for a in range(0, top):
        for b in range(a + 1, top + 1):
            out.append((("O", a, b), _slot_mask((a, b), m)))
    return out


def _line_choices(m: int) -> List[tuple]:
    """("W",) whole line; ("RL", b) (-inf, b); ("RR", a) (a, inf); ("O", a, b)."""
    out = [(("W",), 0)]
    for b in range(1, m + 1):
        out.append((("RL", b), _slot_mask((b,), m)))
    for a in range(1, m + 1):
        out.append((("RR", a), _slot_mask((a,), m)))
    for a in range(1, m + 1):
        for b in range(a + 1, m + 1):
            out.append((("O", a, b), _slot_mask((a, b), m)))
    return out


def _slot_mask(slots, m: int) -> int:
    mask = 0
    for s in slots:
        if 1 <= s <= m:
            mask |= 1 << (s - 1)
    return mask


def _segment_member(domain: Segment, desc: tuple, m: int) -> Interval:
    span = domain.hi - domain.lo

    def value(slot: int) -> Fraction:
        return domain.lo + span * Fraction(slot, m + 1)

    if desc[0] == "L":
        return Interval(lo=domain.lo, hi=value(desc[1]), closed_lo=True)
    return Interval(lo=value(desc[1]), hi=value(desc[2]))


def _line_member(desc: tuple) -> Interval:
    if desc[0] == "W":
        return Interval(lo=None, hi=None)
    if desc[0] == "RL":
        return Interval(lo=None, hi=Fraction(desc[1]))
    if desc[0] == "RR":
        return Interval(lo=Fraction(desc[1]), hi=None)
    return Interval(lo=Fraction(desc[1]), hi=Fraction(desc[2]))


def enumerate_interval_cover_types(domain, n: int,
                                   cap: int = DEFAULT_COVER_SIZE_CAP
                                   ) -> Iterator[HPartition]:
    """Every combinatorial type of n-interval cover of the domain, one
    representative per distinct partition identity.

    Endpoint weak orders (ties allowed) are enumerated as slot assignments:
    each endpoint takes a boundary slot or one of m interior slots, every
    interior slot is used, and members respect lo < hi.  Any n-interval
    cover realizes some assignment, so the stream is exhaustive; families
    that fail to cover are dropped by the cell walk, and duplicates are
    removed by label-independent partition identity.
    """
    if n < 1:
        raise ValueError("cover size must be positive")
    if n > cap:
        raise CapExceeded("interval cover size", cap, n)
    if isinstance(domain, Segment):
        choices, build = _segment_choices, lambda d, m: _segment_member(domain, d, m)
    elif isinstance(domain, FullLine):
        choices, build = _line_choices, lambda d, m: _line_member(d)
    else:
        raise InvalidArrangement(
            "cover-type enumeration supports segment and line domains"
        )
    seen = set()
    for m in range(0, 2 * n + 1):
        full = (1 << m) - 1
        pool = choices(m)
        for combo in combinations(pool, n):
            used = 0
            for _, mask in combo:
                used |= mask
            if used != full:
                continue  # an unused interior slot reproduces a smaller m
            members = tuple(build(desc, m) for desc, _ in combo)
            spec = IntervalSpec(domain=domain, members=members)
            try:
                partition = hclasses_of_intervals(spec)
            except NotACover:
                continue
            key = canonical_key(partition)
            if key in seen:
                continue
            seen.add(key)
            yield partition
