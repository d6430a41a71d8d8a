"""Closed-form Ramsey values and bounds for stars, cycles, fans and wheels.

All regime boundaries are compared in exact rational arithmetic. Constants
that are only known to exist (the "sufficiently large" thresholds and the
additive constant of the odd-wheel bound) are never printed as numbers; they
show up as ``notes`` and as an ``asymptotic`` exactness.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import ceil
from typing import Callable, Iterator

from .constructions import cycle_star_regime, mindegree_wheel_value


class Exactness(str, Enum):
    EXACT = "exact"
    INTERVAL = "interval"
    ASYMPTOTIC = "asymptotic"


class ErrorClass(str, Enum):
    NONE = "none"
    ADDITIVE_CONSTANT = "additive_constant"
    LITTLE_O = "little_o"


class ExcludedCase(ValueError):
    """The formula is stated to fail at these parameters."""


@dataclass(frozen=True)
class LeadingTerm:
    """A linear form such as ``2m + n`` with exact rational coefficients."""

    coeffs: tuple[tuple[str, Fraction], ...]

    @classmethod
    def of(cls, **coeffs: Fraction | int) -> "LeadingTerm":
        return cls(tuple((k, Fraction(v)) for k, v in coeffs.items() if v))

    def at(self, **values: int | Fraction) -> Fraction:
        return sum((c * Fraction(values[k]) for k, c in self.coeffs), Fraction(0))

    def __str__(self) -> str:
        parts = []
        for var, c in self.coeffs:
            if c == 1:
                parts.append(var)
            elif c.denominator == 1:
                parts.append(f"{c.numerator}{var}")
            else:
                parts.append(f"({c}){var}")
        return " + ".join(parts) or "0"


@dataclass(frozen=True)
class RegimeTag:
    """Which case of a piecewise formula applies.

    ``q`` is the band index where one exists, ``c = m - n`` for the m >= n
    cycle-wheel case, and ``theta`` is 1 exactly when m and n are both even.
    """

    pair: str
    case: str
    q: int | None = None
    c: int | None = None
    theta: int | None = None


@dataclass(frozen=True)
class BoundValue:
    lower: int | None
    upper: int | None
    exactness: Exactness
    error_class: ErrorClass
    regime: RegimeTag
    provenance: str
    leading: LeadingTerm | None = None
    estimate: int | None = None
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.lower is not None and self.upper is not None and self.lower > self.upper:
            raise ValueError(f"lower {self.lower} exceeds upper {self.upper}")
        if self.exactness is Exactness.EXACT and (self.lower is None or self.lower != self.upper):
            raise ValueError("an exact value needs lower == upper")

    @property
    def value(self) -> int | None:
        return self.lower if self.exactness is Exactness.EXACT else None

    def to_dict(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "exactness": self.exactness.value,
            "error_class": self.error_class.value,
            "regime": self.regime.case,
            "pair": self.regime.pair,
            "q": self.regime.q,
            "c": self.regime.c,
            "theta": self.regime.theta,
            "leading": None if self.leading is None else str(self.leading),
            "estimate": self.estimate,
            "provenance": self.provenance,
            "notes": list(self.notes),
        }

    def render(self) -> str:
        if self.exactness is Exactness.EXACT:
            return f"exact {self.lower}"
        if self.exactness is Exactness.INTERVAL:
            return f"interval [{self.lower}, {self.upper}]"
        text = "asymptotic"
        if self.leading is not None:
            err = {"little_o": "(1+o(1))", "additive_constant": "+O(1)"}.get(self.error_class.value, "")
            text += f" {self.leading}{' ' + err if err else ''}"
        if self.lower is not None:
            text += f"; lower {self.lower}"
        if self.upper is not None:
            text += f"; upper {self.upper}"
        return text


def _exact(value: int, regime: RegimeTag, provenance: str, **kw) -> BoundValue:
    return BoundValue(value, value, Exactness.EXACT, ErrorClass.NONE, regime, provenance, **kw)


def _sign_term(k: int) -> int:
    """(1 + (-1)^k) / 2, i.e. 1 for even k and 0 for odd k."""
    return 1 - k % 2


# -- stars versus even wheels ------------------------------------------------------


def _li_schiermeyer(m: int, n: int) -> int:
    return 2 * m + n - (1 if m % 2 == 0 and n % 2 == 0 else 0)


def star_wheel_value(m: int, n: int) -> BoundValue:
    """R(K_{1,m}, W_2n)."""
    if m < 1 or n < 2:
        raise ValueError(f"need m >= 1 and n >= 2, got m={m}, n={n}")
    theta = 1 if m % 2 == 0 and n % 2 == 0 else 0
    if m <= n:
        return _exact(
            m + 2 * n - _sign_term(m),
            RegimeTag("star-wheel", "m<=n", theta=theta),
            "Hasmawati; Li-Schiermeyer (m <= n)",
        )
    lb = _li_schiermeyer(m, n)
    if n == 2:
        return BoundValue(
            lb,
            None,
            Exactness.ASYMPTOTIC,
            ErrorClass.LITTLE_O,
            RegimeTag("star-wheel", "n=2,m>n", theta=theta),
            "two-part coloring lower bound; W_4 behaves differently for m > n",
            leading=LeadingTerm.of(m=2, n=1),
            notes=("W4 exception: value of R(K_{1,m}, W_4) differs from the general pattern",),
        )
    tag = RegimeTag("star-wheel", "n<m<=2n-2", theta=theta)
    if m <= 2 * n - 2:
        return _exact(lb, tag, "Li-Schiermeyer (3 <= n < m <= 2n-2)")
    if m <= 3 * n - 1000:
        return _exact(lb, RegimeTag("star-wheel", "n<m<=3n-1000", theta=theta), "exact for 3 <= n < m <= 3n-1000")
    if m == 2 * n - 1:
        return BoundValue(
            5 * n - 2,
            5 * n - 1,
            Exactness.INTERVAL,
            ErrorClass.ADDITIVE_CONSTANT,
            RegimeTag("star-wheel", "m=2n-1", theta=theta),
            "published bounds 5n-2 <= R(K_{1,2n-1}, W_2n) <= 5n-1",
        )
    return BoundValue(
        lb,
        None,
        Exactness.ASYMPTOTIC,
        ErrorClass.LITTLE_O,
        RegimeTag("star-wheel", "m>n", theta=theta),
        "(2+o(1))m + n for m > n; lower from the two-part coloring",
        leading=LeadingTerm.of(m=2, n=1),
        estimate=lb,
        notes=("exact value conjectured to follow the two-part coloring for m >= 2n-1 >= 4",),
    )


# -- even cycles ----------------------------------------------------------------------


def even_cycle_ramsey(m: int, n: int) -> BoundValue:
    """R(C_2m, C_2n) for m, n >= 2 other than m = n = 2."""
    if m < 2 or n < 2:
        raise ValueError(f"need m, n >= 2, got m={m}, n={n}")
    if (m, n) == (2, 2):
        raise ExcludedCase("R(C4, C4) = 6 is not given by the formula")
    if m >= n:
        return _exact(2 * m + n - 1, RegimeTag("cycle-cycle", "m>=n"), "Faudree-Schelp; Rosta")
    return _exact(m + 2 * n - 1, RegimeTag("cycle-cycle", "m<n"), "Faudree-Schelp; Rosta")


# -- cycles versus wheels -------------------------------------------------------------

FAN_REGIME_DEGREE_CONSTANT = 75 * 10**4 * 6**5
"""Constant from the pancyclicity theorem at density 1/6."""

CYCLE_FAN_C = 3 * FAN_REGIME_DEGREE_CONSTANT
CYCLE_FAN_M0 = 45 * FAN_REGIME_DEGREE_CONSTANT * 6**4


def regime_classify(m: int, n: int) -> RegimeTag:
    """Case of the piecewise asymptotic value of R(C_2m, W_2n)."""
    if m < 2 or n < 2:
        raise ValueError(f"need m, n >= 2, got m={m}, n={n}")
    if m >= n:
        return RegimeTag("cycle-wheel", "m>=n", c=m - n)
    if 2 * m >= n:
        return RegimeTag("cycle-wheel", "n/2<=m<n", q=2)
    q = -(-n // m)
    if Fraction((q + 1) * n, q * q) <= m:
        return RegimeTag("cycle-wheel", "q-band: 2qm", q=q)
    return RegimeTag("cycle-wheel", "q-band: (2+2/q)n", q=q)


def cycle_star_lower(m: int, n: int) -> int:
    """Order of the clique coloring with no red C_2m and no blue K_{1,2n}, plus one."""
    reg = cycle_star_regime(m, n)
    if reg.subcase == 1:
        return reg.q * (2 * m - 1) + 1
    c = ceil(Fraction(2 * n - 1, reg.q))
    return (reg.q + 1) * c - (reg.q - reg.r) + 1


def cycle_wheel_bounds(m: int, n: int) -> BoundValue:
    """Bounds on R(C_2m, W_2n)."""
    tag = regime_classify(m, n)
    if tag.case == "m>=n":
        c = m - n
        upper = max(4 * m + 332 - (333 * c) // 251, 4 * m - 1)
        if upper == 4 * m - 1:
            return _exact(4 * m - 1, tag, "Zhang-Broersma-Chen (m >= n+251); two-clique coloring")
        return BoundValue(
            4 * m - 1,
            upper,
            Exactness.INTERVAL,
            ErrorClass.ADDITIVE_CONSTANT,
            tag,
            "two-clique coloring; cut-vertex/pancyclicity argument",
            leading=LeadingTerm.of(m=4),
        )
    if tag.case == "n/2<=m<n":
        return BoundValue(
            2 * m + 2 * n - 2,
            2 * m + 2 * n + CYCLE_FAN_C,
            Exactness.INTERVAL,
            ErrorClass.ADDITIVE_CONSTANT,
            tag,
            "three-clique coloring; regular-pancyclicity argument",
            leading=LeadingTerm.of(m=2, n=2),
            notes=(f"upper bound proven for m >= {CYCLE_FAN_M0}",),
        )
    q = tag.q
    assert q is not None
    lead = LeadingTerm.of(m=2 * q) if tag.case == "q-band: 2qm" else LeadingTerm.of(n=2 + Fraction(2, q))
    return BoundValue(
        cycle_star_lower(m, n),
        None,
        Exactness.ASYMPTOTIC,
        ErrorClass.LITTLE_O,
        tag,
        "clique coloring without blue K_{1,2n}; regularity + fractional matchings",
        leading=lead,
        notes=("asymptotic upper bound holds for sufficiently large m (unquantified)",),
    )


def cycle_star_value(m: int, n: int, *, exact_from: int | None = None) -> BoundValue:
    """R(C_2m, K_{1,2n}).

    For m <= n the two-case formula is only known for sufficiently large
    parameters. It is reported as exact once ``m >= exact_from``; otherwise
    exactness is ``asymptotic`` with the formula value in ``estimate`` and the
    clique-coloring bound as ``lower``.
    """
    if m < 2 or n < 1:
        raise ValueError(f"need m >= 2 and n >= 1, got m={m}, n={n}")
    if m >= 2 * n:
        return _exact(2 * m, RegimeTag("cycle-star", "m>=2n"), "Dirac")
    if m > n:
        return _exact(4 * n, RegimeTag("cycle-star", "n<m<2n"), "Zhang-Broersma-Chen")
    reg = cycle_star_regime(m, n)
    if reg.subcase == 1:
        value = 2 * reg.q * m - (reg.q - 1)
        case = "q-band sub-case 1"
    else:
        value = 2 * n + (2 * n - 1) // reg.q + 1
        case = "q-band sub-case 2"
    tag = RegimeTag("cycle-star", case, q=reg.q)
    prov = "Allen-Luczak-Polcyn-Zhang"
    if exact_from is not None and m >= exact_from:
        return _exact(value, tag, prov, notes=(f"treated as exact for m >= {exact_from}",))
    lower = cycle_star_lower(m, n)
    return BoundValue(
        lower,
        None,
        Exactness.ASYMPTOTIC,
        ErrorClass.NONE,
        tag,
        prov,
        estimate=value,
        notes=("formula value holds for sufficiently large m, n (unquantified cutoff)",),
    )


# -- diagonal wheels ------------------------------------------------------------------

KNOWN_EVEN_WHEELS = {2: 15, 3: 19}


def even_wheel_diag_bounds(n: int) -> BoundValue:
    """R(W_2n)."""
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    if n in KNOWN_EVEN_WHEELS:
        return _exact(KNOWN_EVEN_WHEELS[n], RegimeTag("wheel-diag", "known"), "computer search (W4, W6)")
    return BoundValue(
        5 * n - _sign_term(n),
        8 * n + 664,
        Exactness.INTERVAL,
        ErrorClass.ADDITIVE_CONSTANT,
        RegimeTag("wheel-diag", "n>=4"),
        "star-wheel lower bound; twice the cycle-wheel upper bound",
    )


def odd_wheel_diag_bounds(n: int) -> BoundValue:
    """R(W_{2n+1}).

    The concrete upper bound is 2 R(C_{2n+1}, W_{2n+1}) = 12n + 2; the
    sharper 10n + c has an unquantified constant and is given as ``leading``.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    if n == 1:
        return _exact(18, RegimeTag("odd-wheel-diag", "W3=K4"), "R(K4) = 18")
    return BoundValue(
        6 * n + 4,
        12 * n + 2,
        Exactness.INTERVAL,
        ErrorClass.ADDITIVE_CONSTANT,
        RegimeTag("odd-wheel-diag", "n>=2"),
        "star-wheel lower bound; 10n + c with c unquantified",
        leading=LeadingTerm.of(n=10),
        notes=("upper bound 10n + c holds for an unquantified constant c",),
    )


def odd_star_wheel_value(m: int, n: int) -> BoundValue:
    """R(K_{1,m}, W_{2n+1})."""
    if m < 1 or n < 1:
        raise ValueError(f"need m, n >= 1, got m={m}, n={n}")
    if m <= n:
        return _exact(m + 2 * n + 1, RegimeTag("odd-star-wheel", "m<=n"), "Li-Schiermeyer")
    return _exact(3 * m + 1, RegimeTag("odd-star-wheel", "m>n"), "Li-Schiermeyer")


def odd_cycle_wheel_value(m: int, n: int) -> BoundValue:
    """R(C_{2m+1}, W_{2n+1})."""
    if m < 1 or n < 1:
        raise ValueError(f"need m, n >= 1, got m={m}, n={n}")
    if (m, n) == (1, 1):
        raise ExcludedCase("R(C3, W3) = R(K3, K4) = 9 is not given by the formula")
    if 3 * m > 2 * n:
        return _exact(6 * m + 1, RegimeTag("odd-cycle-wheel", "m>2n/3"), "Chen-Cheng-Ng-Zhang")
    return _exact(4 * n + 3, RegimeTag("odd-cycle-wheel", "m<=2n/3"), "Zhang-Zhang-Chen")


def matching_fan_value(n: int) -> BoundValue:
    """R(nK_2, F_n) = R(nK_2, W_2n)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    return _exact(3 * n, RegimeTag("matching-fan", "n>=1"), "Lin-Li")


# -- minimum degree forcing a wheel --------------------------------------------------


@dataclass(frozen=True)
class DegreeThreshold:
    """Minimum degree forcing W_2k on n vertices: the asymptotic threshold and,
    where applicable, the conjectured exact value."""

    threshold: BoundValue
    conjectured: BoundValue | None


def mindegree_wheel_threshold(n: int, k: int) -> DegreeThreshold:
    if not (2 <= k and 2 * k < n):
        raise ValueError(f"need 2 <= k < n/2, got n={n}, k={k}")
    if 3 * k < n:
        lower = mindegree_wheel_value(n, k) + 1
        tag = RegimeTag("mindeg-wheel", "k<n/3")
        threshold = BoundValue(
            lower,
            None,
            Exactness.ASYMPTOTIC,
            ErrorClass.LITTLE_O,
            tag,
            "two-part graph lower bound; (n+k)/2 + eps n suffices for large n",
            leading=LeadingTerm.of(n=Fraction(1, 2), k=Fraction(1, 2)),
        )
        conj = None
        if k >= 3:
            half = (n + k) // 2
            value = half if (k - 1) % 2 == 1 and half % 2 == 1 else -(-(n + k) // 2)
            conj = _exact(value, tag, "conjecture", notes=("conjectured exact threshold",))
        return DegreeThreshold(threshold, conj)
    threshold = BoundValue(
        None,
        None,
        Exactness.ASYMPTOTIC,
        ErrorClass.LITTLE_O,
        RegimeTag("mindeg-wheel", "n/3<=k<n/2"),
        "2k suffices for large n and is asymptotically tight",
        leading=LeadingTerm.of(k=2),
    )
    return DegreeThreshold(threshold, None)


# -- figure data ---------------------------------------------------------------------


def cycle_wheel_ratio(x: Fraction) -> Fraction:
    """Leading coefficient of R(C_2m, W_2n) / n at m = x n."""
    x = Fraction(x)
    if x <= 0:
        raise ValueError("m/n must be positive")
    if x >= 1:
        return 4 * x
    if 2 * x >= 1:
        return 2 + 2 * x
    q = ceil(1 / x)
    if x >= Fraction(q + 1, q * q):
        return 2 * q * x
    return 2 + Fraction(2, q)


def cycle_star_ratio(x: Fraction) -> Fraction:
    """Leading coefficient of R(C_2m, K_{1,2n}) / n at m = x n."""
    x = Fraction(x)
    if x <= 0:
        raise ValueError("m/n must be positive")
    if x >= 2:
        return 2 * x
    if x >= 1:
        return Fraction(4)
    q = ceil(1 / x)
    if q == 1:
        q = 2
    if x >= Fraction(q + 1, q * q):
        return 2 * q * x
    return 2 + Fraction(2, q)


@dataclass(frozen=True)
class Discontinuity:
    at: Fraction
    left: Fraction
    right: Fraction


def band_boundaries(q_max: int = 50) -> list[Fraction]:
    """Every x = m/n where a piece of either curve starts or stops, for q <= q_max."""
    pts = {Fraction(1), Fraction(2)}
    for q in range(2, q_max + 1):
        pts.add(Fraction(1, q))
        pts.add(Fraction(q + 1, q * q))
    return sorted(pts)


def continuity_defects(curve=cycle_wheel_ratio, q_max: int = 50) -> list[Discontinuity]:
    """Boundaries where ``curve`` jumps, compared exactly.

    Each piece is linear in x, so the left limit at b equals
    2 f(b - e) - f(b - 2e) for any e small enough to stay inside the piece.
    The pieces near 1/q have width of order 1/q^2, far above e.
    """
    eps = Fraction(1, 10**12)
    out = []
    for b in band_boundaries(q_max):
        left = 2 * curve(b - eps) - curve(b - 2 * eps)
        right = curve(b)
        if left != right:
            out.append(Discontinuity(b, left, right))
    return out


def figure_points(figure: int, n: int, steps: int) -> Iterator[tuple[int, Fraction, Fraction, Fraction | None]]:
    """Sample points ``(m, m/n, wheel ratio, star ratio)`` for a figure sweep.

    The grid is ``steps`` evenly spaced values of m up to 5n/4 (figure 1) or
    5n/2 (figure 2), merged with every band boundary that is an integer m.
    """
    if figure not in (1, 2):
        raise ValueError("figure must be 1 or 2")
    if n < 1 or steps < 1:
        raise ValueError("n and steps must be positive")
    x_max = Fraction(5, 4) if figure == 1 else Fraction(5, 2)
    m_max = int(x_max * n)
    ms = {max(1, ceil(Fraction(i, steps) * x_max * n)) for i in range(1, steps + 1)}
    for q in range(2, 51):
        for b in (Fraction(n, q - 1), Fraction((q + 1) * n, q * q)):
            if b.denominator == 1 and 1 <= b <= m_max:
                ms.add(int(b))
    for m in sorted(ms):
        x = Fraction(m, n)
        star = cycle_star_ratio(x) if figure == 2 else None
        yield m, x, cycle_wheel_ratio(x), star


def rational(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def figure_csv(figure: int, n: int, steps: int) -> str:
    """CSV of a figure sweep. Figure 2 adds the cycle-versus-star curve."""
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    header = ["m_over_n", "leading_coeff_over_n"]
    if figure == 2:
        header.append("star_coeff_over_n")
    out.writerow(header)
    for _, x, wheel, star in figure_points(figure, n, steps):
        row = [rational(x), rational(wheel)]
        if star is not None:
            row.append(rational(star))
        out.writerow(row)
    return buf.getvalue()


# -- pair registry for the command line ------------------------------------------------

PAIRS: dict[str, Callable[[int, int], BoundValue]] = {
    "star-wheel": star_wheel_value,
    "cycle-cycle": even_cycle_ramsey,
    "cycle-wheel": cycle_wheel_bounds,
    "cycle-star": cycle_star_value,
    "wheel-diag": lambda m, n: even_wheel_diag_bounds(n),
    "odd-wheel-diag": lambda m, n: odd_wheel_diag_bounds(n),
    "odd-star-wheel": odd_star_wheel_value,
    "odd-cycle-wheel": odd_cycle_wheel_value,
    "matching-fan": lambda m, n: matching_fan_value(n),
}
"""Evaluators keyed by pair name; single-parameter pairs ignore ``m``."""

SINGLE_PARAMETER_PAIRS = frozenset({"wheel-diag", "odd-wheel-diag", "matching-fan"})

VALUE_COLUMNS = ("m", "n", "regime", "q", "lower", "upper", "exactness", "provenance")


def value_table_csv(pair: str, n: int, steps: int) -> str:
    """Rows m = 1..steps of ``pair`` at fixed n; out-of-range m are skipped."""
    evaluate = PAIRS[pair]
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(VALUE_COLUMNS)
    for m in range(1, steps + 1):
        try:
            b = evaluate(m, n)
        except ValueError:
            continue
        out.writerow(
            [m, n, b.regime.case, "" if b.regime.q is None else b.regime.q,
             "" if b.lower is None else b.lower, "" if b.upper is None else b.upper,
             b.exactness.value, b.provenance]
        )
    return buf.getvalue()
