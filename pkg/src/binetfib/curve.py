"""The Binet-Fibonacci curve: Binet's formula at real t on the principal branch.

With lam = ln(phi) and (-1)^t = exp(i pi t),

    F_t = (exp(lam t) - exp(i pi t) exp(-lam t)) / (phi + 1/phi)

so x(t) = Re F_t and y(t) = Im F_t.  The curve crosses the real axis only at
integer t, where it takes the Fibonacci values.  For t > 0 it oscillates
with shrinking amplitude; for t < 0 it winds out as a spiral.

Every evaluation runs in the extended context (see ``precision``).  Velocity
and acceleration come from differentiating the closed form, never from
finite differences.

Segment areas are signed so that A_{n,n+1} is minus the
Green line integral (1/2) int (x y' - y x') dt over [n, n+1].
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DegenerateVelocity, PreconditionError, RangeExceeded
from .exact_core import fib
from .precision import EXT, EXTENDED_DPS, context, golden_constants, to_fraction, to_mpf

T_MAX = 300
AREA_INDEX_MAX = 10_000
DEFAULT_PANELS = 10_000
MIN_SPEED = 1e-300

_G = golden_constants()
PHI = _G.phi
LN_PHI = _G.ln_phi
PI = _G.pi
_SCALE = 1 / (PHI + 1 / PHI)
# exp(i pi t) exp(-lam t) = exp(MU t)
_MU = EXT.mpc(-LN_PHI, PI)


@dataclass(frozen=True)
class CurvePoint:
    t: object
    x: object
    y: object


@dataclass(frozen=True)
class CurveJet:
    """Position, velocity and acceleration at one parameter value."""

    t: object
    x: object
    y: object
    dx: object
    dy: object
    ddx: object
    ddy: object


@dataclass(frozen=True)
class AreaSegment:
    n: int
    closed_form: object
    quadrature: object
    quadrature_steps: int

    @property
    def abs_diff(self):
        return abs(self.closed_form - self.quadrature)


@dataclass(frozen=True)
class CurvatureSample:
    t: object
    kappa: object


def _param(t):
    if isinstance(t, (int, Fraction, str, float)):
        tm = to_mpf(to_fraction(t))
    else:
        tm = EXT.mpf(t)
    if abs(tm) > T_MAX:
        raise RangeExceeded(f"|t| = {EXT.nstr(abs(tm), 8)} exceeds {T_MAX}")
    return tm


def _complex_jet(t):
    tm = _param(t)
    grow = EXT.exp(LN_PHI * tm)
    turn = EXT.mpc(EXT.cospi(tm), EXT.sinpi(tm)) / grow
    z = _SCALE * (grow - turn)
    dz = _SCALE * (LN_PHI * grow - _MU * turn)
    ddz = _SCALE * (LN_PHI ** 2 * grow - _MU ** 2 * turn)
    return tm, z, dz, ddz


def curve_point(t) -> CurvePoint:
    """(t, Re F_t, Im F_t); y is exactly zero at integer t."""
    tm = _param(t)
    grow = EXT.exp(LN_PHI * tm)
    x = _SCALE * (grow - EXT.cospi(tm) / grow)
    y = -_SCALE * EXT.sinpi(tm) / grow
    return CurvePoint(tm, x, y)


def jet(t) -> CurveJet:
    tm, z, dz, ddz = _complex_jet(t)
    return CurveJet(tm, z.real, z.imag, dz.real, dz.imag, ddz.real, ddz.imag)


def grid(t0, t1, steps: int) -> list[Fraction]:
    """Uniform grid of ``steps`` exact rationals from t0 to t1 inclusive."""
    f0, f1 = to_fraction(t0), to_fraction(t1)
    if not f0 < f1:
        raise PreconditionError(f"need t0 < t1, got {t0} and {t1}")
    if steps < 2:
        raise PreconditionError(f"steps must be >= 2, got {steps}")
    span = f1 - f0
    return [f0 + span * i / (steps - 1) for i in range(steps)]


def sample(t0, t1, steps: int) -> list[CurvePoint]:
    ts = grid(t0, t1, steps)
    for end in (ts[0], ts[-1]):
        if abs(end) > T_MAX:
            raise RangeExceeded(f"|t| = {float(abs(end))} exceeds {T_MAX}")
    return [curve_point(t) for t in ts]


def real_axis_crossings(t0, t1) -> list[int]:
    """Integers in [t0, t1]: the only parameters where sin(pi t) = 0."""
    f0, f1 = to_fraction(t0), to_fraction(t1)
    if not f0 < f1:
        raise PreconditionError(f"need t0 < t1, got {t0} and {t1}")
    lo = -((-f0.numerator) // f0.denominator)
    hi = f1.numerator // f1.denominator
    return list(range(lo, hi + 1))


def sign_change_scan(t0, t1, samples_per_unit: int = 100) -> list:
    """Locate zeros of y on a uniform grid.

    Returns the grid points where y is exactly zero, plus the left end of
    every grid interval across which y changes sign strictly.  Entries are
    exact rationals.
    """
    f0, f1 = to_fraction(t0), to_fraction(t1)
    steps = int((f1 - f0) * samples_per_unit) + 1
    ts = grid(f0, f1, max(steps, 2))
    ys = [curve_point(t).y for t in ts]
    found = []
    for i, (t, y) in enumerate(zip(ts, ys)):
        if y == 0:
            found.append(t)
        elif i + 1 < len(ys) and ys[i + 1] != 0 and (y > 0) != (ys[i + 1] > 0):
            found.append(t)
    return found


def _area_context(n: int):
    # F_{2n} - F_{2n+1}/phi cancels about 0.42 |n| digits
    return context(EXTENDED_DPS + int(0.42 * abs(2 * n + 1)) + 5)


def area_segment_closed(n: int):
    """-(1/10) [4 (-1)^n lam / pi - (pi / (2 lam)) (F_{2n} - F_{2n+1} / phi)]."""
    if abs(n) > AREA_INDEX_MAX:
        raise RangeExceeded(f"|n| = {abs(n)} exceeds {AREA_INDEX_MAX}")
    ctx = _area_context(n)
    phi = (1 + ctx.sqrt(5)) / 2
    lam = ctx.log(phi)
    pi = +ctx.pi
    sign = 1 if n % 2 == 0 else -1
    tail = ctx.mpf(fib(2 * n)) - ctx.mpf(fib(2 * n + 1)) / phi
    value = -(4 * sign * lam / pi - pi / (2 * lam) * tail) / 10
    return EXT.mpf(value)


def green_integrand(t):
    """-(1/2)(x y' - y x'), the integrand whose integral over [n, n+1] is A_{n,n+1}."""
    _, z, dz, _ = _complex_jet(t)
    return -(z.real * dz.imag - z.imag * dz.real) / 2


def _check_panels(panels: int):
    if panels < 4 or panels % 2:
        raise PreconditionError(f"panels must be even and >= 4, got {panels}")


def simpson_sum(values, h):
    """Composite Simpson rule over equally spaced ``values`` (odd count)."""
    ends = values[0] + values[-1]
    odd = EXT.fsum(values[1:-1:2])
    even = EXT.fsum(values[2:-1:2])
    return (ends + 4 * odd + 2 * even) * h / 3


def simpson(f, a, b, panels: int):
    """Composite Simpson rule for ``f`` on [a, b]; ``panels`` even and >= 4."""
    _check_panels(panels)
    a, b = to_fraction(a), to_fraction(b)
    h = (b - a) / panels
    return simpson_sum([f(a + h * i) for i in range(panels + 1)], to_mpf(h))


def _green_on_grid(a, h, count: int) -> list:
    # Advance exp(lam t) and exp(MU t) by constant factors instead of
    # re-evaluating them; drift is ~count ulps at extended precision.
    _param(a + h * (count - 1))
    tm, hm = to_mpf(a), to_mpf(h)
    grow = EXT.exp(LN_PHI * tm)
    turn = EXT.mpc(EXT.cospi(tm), EXT.sinpi(tm)) / grow
    grow_step = EXT.exp(LN_PHI * hm)
    turn_step = EXT.mpc(EXT.cospi(hm), EXT.sinpi(hm)) / grow_step
    out = []
    for _ in range(count):
        z = _SCALE * (grow - turn)
        dz = _SCALE * (LN_PHI * grow - _MU * turn)
        out.append(-(z.real * dz.imag - z.imag * dz.real) / 2)
        grow *= grow_step
        turn *= turn_step
    return out


def area_segment_quadrature(n: int, panels: int = DEFAULT_PANELS):
    """Simpson value of the Green integral over [n, n+1], in the area sign convention."""
    _check_panels(panels)
    h = Fraction(1, panels)
    return simpson_sum(_green_on_grid(Fraction(n), h, panels + 1), to_mpf(h))


def area_segment(n: int, panels: int = DEFAULT_PANELS) -> AreaSegment:
    return AreaSegment(n=n, closed_form=area_segment_closed(n),
                       quadrature=area_segment_quadrature(n, panels),
                       quadrature_steps=panels)


def area_limit():
    """lim |A_{n,n+1}| = 2 ln(phi) / (5 pi)."""
    return 2 * LN_PHI / (5 * PI)


def phi_from_area_limit():
    return EXT.exp(5 * PI * area_limit() / 2)


@dataclass
class SignTheoremReport:
    n_max: int
    areas: dict = field(repr=False)
    alternation_violations: list = field(default_factory=list)
    pair_sum_violations: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.alternation_violations and not self.pair_sum_violations


def check_sign_theorems(n_max: int) -> SignTheoremReport:
    """Check sign(A_{n,n+1}) = (-1)^(n+1) and A_{n,n+1} + A_{n+1,n+2} < 0.

    The alternation statement is made for n >= 2 (n = 2k or 2k+1, k >= 1)
    and the pair statement for n >= 2.  n = 1 is evaluated for both and
    recorded in ``notes`` without counting as a violation.
    """
    if n_max < 3:
        raise PreconditionError(f"n_max must be >= 3, got {n_max}")
    areas = {n: area_segment_closed(n) for n in range(1, n_max + 2)}
    report = SignTheoremReport(n_max=n_max, areas=areas)
    for n in range(1, n_max + 1):
        expected_positive = n % 2 == 1
        holds = (areas[n] > 0) == expected_positive and areas[n] != 0
        if n == 1:
            report.notes.append(
                f"n=1 (outside stated range): A_1,2 = {EXT.nstr(areas[n], 6)}, "
                f"alternation {'holds' if holds else 'does not hold'}")
        elif not holds:
            report.alternation_violations.append(n)
    for n in range(1, n_max + 1):
        pair = areas[n] + areas[n + 1]
        if n == 1:
            report.notes.append(
                f"n=1 (outside stated range): A_1,2 + A_2,3 = {EXT.nstr(pair, 6)}")
        elif not pair < 0:
            report.pair_sum_violations.append(n)
    return report


@dataclass(frozen=True)
class LambdaRatio:
    n: int
    direct: object
    closed_form: object
    rel_diff: object


def lambda_closed_form(n: int):
    """(1/phi^2) |c phi^(2n+1) + (-1)^n| / |c phi^(2n-1) - (-1)^n|, c = 8 lam^2 / pi^2."""
    c = 8 * LN_PHI ** 2 / PI ** 2
    sign = 1 if n % 2 == 0 else -1
    return (abs(c * PHI ** (2 * n + 1) + sign)
            / abs(c * PHI ** (2 * n - 1) - sign) / PHI ** 2)


def lambda_ratio(n: int) -> LambdaRatio:
    """|A_{n,n+1} / A_{n-1,n}| directly and via the closed form."""
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}")
    direct = abs(area_segment_closed(n) / area_segment_closed(n - 1))
    closed = lambda_closed_form(n)
    return LambdaRatio(n=n, direct=direct, closed_form=closed,
                       rel_diff=abs(direct - closed) / abs(closed))


def curvature(t) -> CurvatureSample:
    """Signed curvature (x' y'' - y' x'') / (x'^2 + y'^2)^(3/2)."""
    tm, _, dz, ddz = _complex_jet(t)
    speed = abs(dz)
    if speed < MIN_SPEED:
        raise DegenerateVelocity(f"|r'(t)| = {EXT.nstr(speed, 5)} at t = {tm}")
    cross = dz.real * ddz.imag - dz.imag * ddz.real
    return CurvatureSample(tm, cross / speed ** 3)


def curvature_expanded(t):
    """kappa(t) written out in exp, cos and sin of t; a cross-check on ``curvature``."""
    tm = _param(t)
    lam, pi = LN_PHI, PI
    c, s = EXT.cospi(tm), EXT.sinpi(tm)
    e_plus, e_minus = EXT.exp(2 * tm * lam), EXT.exp(-2 * tm * lam)
    num = (3 * pi * lam ** 2 * c + s * (pi ** 2 * lam - 2 * lam ** 3)
           + e_minus * pi * (pi ** 2 + lam ** 2))
    inner = (lam ** 2 * (e_plus + e_minus) + 2 * lam * pi * s
             + 2 * lam ** 2 * c + pi ** 2 * e_minus) / 5
    return num / (5 * inner ** EXT.mpf(1.5))


def curvature_formula_residuals(ts) -> list[tuple]:
    """(t, analytic, expanded, relative difference) for each t."""
    out = []
    for t in ts:
        k = curvature(t).kappa
        kp = curvature_expanded(t)
        scale = max(abs(k), abs(kp))
        out.append((t, k, kp, abs(k - kp) / scale if scale else abs(k - kp)))
    return out


DIRECTIONS = ("+inf", "-inf")


@dataclass(frozen=True)
class CurvatureRatioReport:
    """Curvature ratios at a probe point compared with a claimed limit.

    ``forward_ratio`` is kappa(probe + k) / kappa(probe) in both directions.
    ``outward_ratio`` steps toward the limit instead: kappa(probe - k) /
    kappa(probe) when the direction is -inf.  The two coincide for +inf.
    """

    direction: str
    k: int
    probe: object
    claimed_limit: object
    forward_ratio: object
    outward_ratio: object

    @property
    def forward_error(self):
        return abs(self.forward_ratio - self.claimed_limit)

    @property
    def outward_error(self):
        return abs(self.outward_ratio - self.claimed_limit)


def curvature_ratio_claim(direction: str, k: int):
    if direction == "+inf":
        return (-1 / PHI ** 3) ** k
    return (1 / PHI) ** k


def curvature_ratio_report(direction: str, k: int, n_probe) -> CurvatureRatioReport:
    if direction not in DIRECTIONS:
        raise PreconditionError(f"direction must be one of {DIRECTIONS}, got {direction!r}")
    if k < 1:
        raise PreconditionError(f"k must be >= 1, got {k}")
    probe = to_fraction(n_probe)
    base = curvature(probe).kappa
    forward = curvature(probe + k).kappa / base
    if direction == "+inf":
        outward = forward
    else:
        outward = curvature(probe - k).kappa / base
    return CurvatureRatioReport(direction=direction, k=k, probe=to_mpf(probe),
                                claimed_limit=curvature_ratio_claim(direction, k),
                                forward_ratio=forward, outward_ratio=outward)


def position_velocity_angle(t):
    """Angle in [0, pi] between r(t) and r'(t)."""
    _, z, dz, _ = _complex_jet(t)
    cosang = (z.real * dz.real + z.imag * dz.imag) / (abs(z) * abs(dz))
    return EXT.acos(max(min(cosang, EXT.mpf(1)), EXT.mpf(-1)))


def spiral_angle_limit():
    """As t -> -inf, r' ~ (-lam + i pi) r, so the angle tends to arg(-lam + i pi)."""
    return EXT.atan2(PI, -LN_PHI)


@dataclass
class SpiralReport:
    t_min: object
    angle_limit: object
    angles: list = field(default_factory=list)
    ratios: list = field(default_factory=list)
    kappa_at_t_min: object = None

    def to_dict(self) -> dict:
        return {
            "t_min": float(self.t_min),
            "angle_limit": float(self.angle_limit),
            "angles": [{"t": float(t), "angle": float(a), "error": float(e)}
                       for t, a, e in self.angles],
            "ratios": [{"n": n, "forward": float(f), "forward_error": float(fe),
                        "reversed": float(r), "reversed_error": float(re)}
                       for n, f, fe, r, re in self.ratios],
            "kappa_at_t_min": float(self.kappa_at_t_min),
            "phi_squared": float(PHI ** 2),
        }


def spiral_diagnostics(t_min, step=5) -> SpiralReport:
    """Log-spiral behaviour of the t < 0 branch.

    ``angles`` holds (t, angle(r, r'), |angle - limit|) on t = -10, -10 - step,
    ... down to t_min.  ``ratios`` holds, for integers n from -10 down to
    t_min, F_{n+2}/F_n and its reciprocal F_n/F_{n+2} with their distance to
    phi^2.  Going outward the first tends to 1/phi^2 and the second to phi^2.
    """
    tf = to_fraction(t_min)
    if tf > -10:
        raise PreconditionError(f"t_min must be <= -10, got {t_min}")
    if abs(tf) > T_MAX:
        raise RangeExceeded(f"|t_min| exceeds {T_MAX}")
    step = to_fraction(step)
    if step <= 0:
        raise PreconditionError("step must be positive")
    limit = spiral_angle_limit()
    report = SpiralReport(t_min=to_mpf(tf), angle_limit=limit)
    t = Fraction(-10)
    while t >= tf:
        ang = position_velocity_angle(t)
        report.angles.append((to_mpf(t), ang, abs(ang - limit)))
        t -= step
    if report.angles[-1][0] != to_mpf(tf):
        ang = position_velocity_angle(tf)
        report.angles.append((to_mpf(tf), ang, abs(ang - limit)))
    phi2 = PHI ** 2
    n = -10
    while n >= tf:
        fwd = EXT.mpf(fib(n + 2)) / fib(n)
        rev = EXT.mpf(fib(n)) / fib(n + 2)
        report.ratios.append((n, fwd, abs(fwd - phi2), rev, abs(rev - phi2)))
        n -= 1
    report.kappa_at_t_min = curvature(tf).kappa
    return report
