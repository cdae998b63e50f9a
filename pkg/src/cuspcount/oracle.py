"""Independent numeric referee for the symbolic cusp census.

Subdivision over a square domain discards boxes where interval arithmetic
proves one of the three cusp equations nonzero; surviving boxes are polished
by floating-point Newton iteration on the best-conditioned pair of
equations and then certified by interval-Newton contraction, which proves
existence and uniqueness of a zero in a tiny isolating box.  The third
equation is checked against a Lipschitz bound over the certified box, and
the sign of the orientation polynomial over the box gives the local degree.

Interval arithmetic is outward-rounded on hardware doubles: every computed
range contains the true range.  The oracle never overrules the exact
pipeline; boxes it cannot decide are reported as unresolved, not dropped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import Unclassifiable
from .pipeline import DerivedSystem
from .poly import Polynomial

_INF = math.inf

#: Minimum subdivision box width; survivors below it are reported unresolved.
MIN_BOX_WIDTH = 2.0 ** -40

#: Half-widths tried for the certified isolating box (width stays <= 1e-6).
_CERTIFY_RADII = (1e-7, 4e-7)

#: Box width below which Newton polishing is attempted.
_POLISH_TRIGGER = 1.0 / 32

#: Hard cap on processed boxes; the remainder is reported unresolved.
_MAX_BOXES = 500_000


def _down(v: float) -> float:
    return math.nextafter(v, -_INF)


def _up(v: float) -> float:
    return math.nextafter(v, _INF)


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi] of doubles with outward-rounded arithmetic."""

    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo <= self.hi:
            raise ValueError(f"invalid interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, v: float) -> "Interval":
        return cls(v, v)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def __add__(self, other: "Interval") -> "Interval":
        return Interval(_down(self.lo + other.lo), _up(self.hi + other.hi))

    def __sub__(self, other: "Interval") -> "Interval":
        return Interval(_down(self.lo - other.hi), _up(self.hi - other.lo))

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __mul__(self, other: "Interval") -> "Interval":
        products = (self.lo * other.lo, self.lo * other.hi,
                    self.hi * other.lo, self.hi * other.hi)
        return Interval(_down(min(products)), _up(max(products)))

    def __truediv__(self, other: "Interval") -> "Interval":
        if other.lo <= 0.0 <= other.hi:
            raise ZeroDivisionError("interval division by a range containing zero")
        quotients = (self.lo / other.lo, self.lo / other.hi,
                     self.hi / other.lo, self.hi / other.hi)
        return Interval(_down(min(quotients)), _up(max(quotients)))

    def power(self, n: int) -> "Interval":
        if n == 0:
            return Interval(1.0, 1.0)
        if self.lo >= 0.0:
            return Interval(_point_pow(self.lo, n).lo, _point_pow(self.hi, n).hi)
        if self.hi <= 0.0:
            if n % 2 == 0:
                return Interval(_point_pow(self.hi, n).lo, _point_pow(self.lo, n).hi)
            return Interval(_point_pow(self.lo, n).lo, _point_pow(self.hi, n).hi)
        if n % 2 == 0:
            bound = max(-self.lo, self.hi)
            return Interval(0.0, _point_pow(bound, n).hi)
        return Interval(_point_pow(self.lo, n).lo, _point_pow(self.hi, n).hi)

    def contains(self, v: float) -> bool:
        return self.lo <= v <= self.hi

    def excludes_zero(self) -> bool:
        return self.lo > 0.0 or self.hi < 0.0

    def sign(self) -> int | None:
        """+1 or -1 when the interval excludes zero, else None."""
        if self.lo > 0.0:
            return 1
        if self.hi < 0.0:
            return -1
        return None

    def strictly_inside(self, other: "Interval") -> bool:
        return other.lo < self.lo and self.hi < other.hi

    def intersects(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def contains_interval(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi


def _point_pow(base: float, n: int) -> "Interval":
    """Outward-rounded enclosure of base**n by repeated interval multiplication."""
    result = Interval(1.0, 1.0)
    factor = Interval(base, base)
    for _ in range(n):
        result = result * factor
    return result


Box = tuple[Interval, Interval]


@dataclass(frozen=True)
class CertifiedPoint:
    """A classified point of the cusp system, with its isolating box.

    For kind 'cusp' the box is certified (by interval-Newton contraction) to
    contain exactly one solution of the system; degree_sign is the sign of
    the orientation polynomial over the box (None when undecided), and
    in_region is the verdict of the region polynomial over the box (None
    when undecided or when no region was supplied).
    """

    box: Box
    kind: str  # 'cusp' | 'fold' | 'unresolved'
    degree_sign: int | None = None
    in_region: bool | None = None


class _IntervalPoly:
    """A polynomial compiled for interval evaluation over boxes."""

    __slots__ = ("terms", "max_ex", "max_ey")

    def __init__(self, p: Polynomial):
        self.terms = []
        self.max_ex = 0
        self.max_ey = 0
        for mono, coeff in p.terms.items():
            approx = float(coeff)
            if Fraction(approx) == coeff:
                iv = Interval(approx, approx)
            else:
                iv = Interval(_down(approx), _up(approx))
            self.terms.append((mono.ex, mono.ey, iv))
            self.max_ex = max(self.max_ex, mono.ex)
            self.max_ey = max(self.max_ey, mono.ey)

    def range(self, x: Interval, y: Interval) -> Interval:
        xp = [Interval(1.0, 1.0)]
        for _ in range(self.max_ex):
            xp.append(x.power(len(xp)))
        yp = [Interval(1.0, 1.0)]
        for _ in range(self.max_ey):
            yp.append(y.power(len(yp)))
        total = Interval(0.0, 0.0)
        for ex, ey, coeff in self.terms:
            total = total + coeff * xp[ex] * yp[ey]
        return total

    def at_point(self, px: float, py: float) -> Interval:
        return self.range(Interval.point(px), Interval.point(py))


class _FloatPoly:
    """A polynomial compiled for fast approximate evaluation."""

    __slots__ = ("terms",)

    def __init__(self, p: Polynomial):
        self.terms = [(m.ex, m.ey, float(c)) for m, c in p.terms.items()]

    def __call__(self, px: float, py: float) -> float:
        return sum(c * px ** ex * py ** ey for ex, ey, c in self.terms)


def region_membership(u: Polynomial, point: CertifiedPoint) -> bool | None:
    """Interval verdict of {u > 0} over the point's isolating box.

    True/False when the sign of u is decided over the whole box; None when
    the range straddles zero.
    """
    value = _IntervalPoly(u).range(*point.box)
    sign = value.sign()
    return None if sign is None else sign > 0


def classify_critical_point(derived: DerivedSystem,
                            point: tuple) -> str:
    """Exact classification of a rational point: 'not_critical', 'fold' or 'cusp'.

    Raises Unclassifiable when the jacobian, both velocity components and
    both minors all vanish there (outside the certified situation).
    """
    if derived.jac.evaluate(point) != 0:
        return "not_critical"
    if derived.vel1.evaluate(point) != 0 or derived.vel2.evaluate(point) != 0:
        return "fold"
    if derived.minor1.evaluate(point) != 0 or derived.minor2.evaluate(point) != 0:
        return "cusp"
    raise Unclassifiable(
        f"all classification polynomials vanish at {point}; "
        "the point is outside the certified fold/cusp dichotomy")


# -- root isolation ----------------------------------------------------------

class _System:
    """Compiled evaluators for the cusp system and its derivatives."""

    def __init__(self, derived: DerivedSystem):
        eqs = (derived.jac, derived.vel1, derived.vel2)
        self.interval = [_IntervalPoly(p) for p in eqs]
        self.float_eq = [_FloatPoly(p) for p in eqs]
        self.float_grad = [( _FloatPoly(p.partial("x")), _FloatPoly(p.partial("y")))
                           for p in eqs]
        self.interval_grad = [(_IntervalPoly(p.partial("x")), _IntervalPoly(p.partial("y")))
                              for p in eqs]
        self.orientation = _IntervalPoly(derived.vel_jac)


def _best_pair(system: _System, px: float, py: float) -> tuple[int, int]:
    """Indices of the two equations whose gradients are best conditioned."""
    grads = [(gx(px, py), gy(px, py)) for gx, gy in system.float_grad]
    norms = [math.hypot(gx, gy) for gx, gy in grads]
    best, best_score = (0, 1), -1.0
    for i in range(3):
        for j in range(i + 1, 3):
            det = grads[i][0] * grads[j][1] - grads[i][1] * grads[j][0]
            denom = norms[i] * norms[j]
            score = abs(det) / denom if denom > 0 else 0.0
            if score > best_score:
                best, best_score = (i, j), score
    return best


def _polish(system: _System, pair: tuple[int, int],
            px: float, py: float) -> tuple[float, float] | None:
    """Float Newton iteration on a square subsystem; None if it fails to settle."""
    f1, f2 = system.float_eq[pair[0]], system.float_eq[pair[1]]
    (g1x, g1y), (g2x, g2y) = system.float_grad[pair[0]], system.float_grad[pair[1]]
    for _ in range(40):
        v1, v2 = f1(px, py), f2(px, py)
        a, b = g1x(px, py), g1y(px, py)
        c, d = g2x(px, py), g2y(px, py)
        det = a * d - b * c
        if det == 0 or not math.isfinite(det):
            return None
        dx = (d * v1 - b * v2) / det
        dy = (-c * v1 + a * v2) / det
        px, py = px - dx, py - dy
        if not (math.isfinite(px) and math.isfinite(py)):
            return None
        if abs(dx) + abs(dy) < 1e-14 * (1.0 + abs(px) + abs(py)):
            return (px, py)
    return None


def _interval_newton(system: _System, pair: tuple[int, int],
                     px: float, py: float, radius: float) -> Box | None:
    """Certify a unique zero of the pair in the box around (px, py).

    Returns the certified box when the interval-Newton image lies strictly
    inside it, else None.
    """
    box_x = Interval(px - radius, px + radius)
    box_y = Interval(py - radius, py + radius)
    i, j = pair
    j11 = system.interval_grad[i][0].range(box_x, box_y)
    j12 = system.interval_grad[i][1].range(box_x, box_y)
    j21 = system.interval_grad[j][0].range(box_x, box_y)
    j22 = system.interval_grad[j][1].range(box_x, box_y)
    det = j11 * j22 - j12 * j21
    if not det.excludes_zero():
        return None
    v1 = system.interval[i].at_point(px, py)
    v2 = system.interval[j].at_point(px, py)
    centre_x = Interval.point(px)
    centre_y = Interval.point(py)
    newton_x = centre_x - (j22 * v1 - j12 * v2) / det
    newton_y = centre_y - (j11 * v2 - j21 * v1) / det
    if newton_x.strictly_inside(box_x) and newton_y.strictly_inside(box_y):
        return (box_x, box_y)
    return None


def _third_equation_plausible(system: _System, pair: tuple[int, int],
                              px: float, py: float, box: Box) -> bool:
    """Check the remaining equation vanishes within its Lipschitz slack."""
    third = next(k for k in range(3) if k not in pair)
    value = system.interval[third].at_point(px, py)
    gx = system.interval_grad[third][0].range(*box)
    gy = system.interval_grad[third][1].range(*box)
    lipschitz = max(abs(gx.lo), abs(gx.hi)) + max(abs(gy.lo), abs(gy.hi))
    radius = 0.5 * max(box[0].width, box[1].width)
    slack = _up(lipschitz * radius)
    return value.lo <= slack and value.hi >= -slack


def _try_certify(system: _System, px: float, py: float) -> Box | None:
    pair = _best_pair(system, px, py)
    polished = _polish(system, pair, px, py)
    if polished is None:
        return None
    qx, qy = polished
    for radius in _CERTIFY_RADII:
        box = _interval_newton(system, pair, qx, qy, radius)
        if box is not None:
            if _third_equation_plausible(system, pair, qx, qy, box):
                return box
            return None
    return None


def isolate_cusps(derived: DerivedSystem, box_radius: float = 16.0,
                  min_width: float = MIN_BOX_WIDTH) -> tuple[CertifiedPoint, ...]:
    """Isolate all solutions of the cusp system in [-r, r]^2.

    Returns certified cusp points (disjoint isolating boxes, each with a
    degree sign when the orientation polynomial's sign is decided) plus an
    'unresolved' entry for every box that could neither be excluded nor
    certified before reaching the minimum width.  Results are sorted by box
    corner, so the output is deterministic.
    """
    if box_radius <= 0:
        raise ValueError("box_radius must be positive")
    system = _System(derived)
    full = (Interval(-box_radius, box_radius), Interval(-box_radius, box_radius))
    stack = [full]
    certified: list[Box] = []
    unresolved: list[Box] = []
    processed = 0
    while stack:
        box = stack.pop()
        processed += 1
        if processed > _MAX_BOXES:
            unresolved.append(box)
            continue
        if any(p.range(*box).excludes_zero() for p in system.interval):
            continue
        if any(c[0].contains_interval(box[0]) and c[1].contains_interval(box[1])
               for c in certified):
            continue
        width = max(box[0].width, box[1].width)
        if width <= _POLISH_TRIGGER:
            result = _try_certify(system, box[0].mid, box[1].mid)
            if result is not None and _is_new(result, certified, box_radius):
                certified.append(result)
                if (result[0].contains_interval(box[0])
                        and result[1].contains_interval(box[1])):
                    continue
        if width <= min_width:
            unresolved.append(box)
            continue
        mx, my = box[0].mid, box[1].mid
        x_lo, x_hi = Interval(box[0].lo, mx), Interval(mx, box[0].hi)
        y_lo, y_hi = Interval(box[1].lo, my), Interval(my, box[1].hi)
        stack.extend(((x_lo, y_lo), (x_lo, y_hi), (x_hi, y_lo), (x_hi, y_hi)))

    points = [CertifiedPoint(box=c, kind="cusp",
                             degree_sign=system.orientation.range(*c).sign())
              for c in certified]
    points.extend(CertifiedPoint(box=b, kind="unresolved") for b in _merge(unresolved))
    points.sort(key=lambda pt: (pt.box[0].lo, pt.box[1].lo))
    return tuple(points)


def _is_new(box: Box, certified: list[Box], box_radius: float) -> bool:
    centre_x, centre_y = box[0].mid, box[1].mid
    margin = 1e-9 * (1.0 + box_radius)
    if not (-box_radius - margin <= centre_x <= box_radius + margin
            and -box_radius - margin <= centre_y <= box_radius + margin):
        return False
    return not any(box[0].intersects(c[0]) and box[1].intersects(c[1])
                   for c in certified)


def _merge(boxes: list[Box]) -> list[Box]:
    """Coalesce adjacent unresolved boxes into maximal clusters."""
    remaining = list(boxes)
    merged: list[Box] = []
    while remaining:
        bx, by = remaining.pop()
        changed = True
        while changed:
            changed = False
            for other in remaining[:]:
                if bx.intersects(other[0]) and by.intersects(other[1]):
                    bx = Interval(min(bx.lo, other[0].lo), max(bx.hi, other[0].hi))
                    by = Interval(min(by.lo, other[1].lo), max(by.hi, other[1].hi))
                    remaining.remove(other)
                    changed = True
        merged.append((bx, by))
    return merged
