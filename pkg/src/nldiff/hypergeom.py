"""Evaluation of the generalized hypergeometric series 2F3 for real parameters and x <= 0.

The series

    2F3(a1, a2; b1, b2, b3; x) = sum_{j>=0} t_j,
    t_0 = 1,
    t_{j+1} = t_j * (a1+j)(a2+j) / ((b1+j)(b2+j)(b3+j)(1+j)) * x,

is entire in x, but for large negative x the partial sums grow to roughly
exp(2*sqrt(|x|)) before collapsing to a result that can be exponentially
smaller.  The double-precision path tracks how many decimal digits are lost to
this cancellation; callers reroute to the software wide-float path
(`pfq_2f3_extended`, backed by mpmath) when the loss exceeds
``CANCELLATION_REROUTE`` digits or when the partial sums overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath as mp

from .errors import InvalidParams, NonConvergence

# Stopping rule: |t_j| < REL_TERM_TOL * |partial sum| for CONSECUTIVE_SMALL terms.
REL_TERM_TOL = 1e-17
CONSECUTIVE_SMALL = 3
TERM_CAP = 10_000

# Digits of cancellation beyond which the double-precision result is rejected.
CANCELLATION_REROUTE = 6.0

_DOUBLE_EPS = 2.0 ** -52
_TINY = 1e-300
_LOG10_E2 = 2.0 / math.log(10.0)  # ln(max partial) ~ 2*sqrt(|x|) for x -> -inf


@dataclass(frozen=True)
class PfqParams:
    """Real parameters (a1, a2; b1, b2, b3) of the 2F3 series."""

    a1: float
    a2: float
    b1: float
    b2: float
    b3: float

    def validate(self) -> None:
        for b in (self.b1, self.b2, self.b3):
            if b <= 0.0 and float(b).is_integer():
                raise InvalidParams(
                    f"denominator parameter {b} is a nonpositive integer; series undefined"
                )

    @classmethod
    def from_operator(cls, n: int, beta: float) -> "PfqParams":
        """Series parameters of the nonlocal-Laplacian multiplier for dimension n
        and kernel exponent beta: (1, (n+2-beta)/2; 2, (n+2)/2, (n+4-beta)/2)."""
        return cls(1.0, (n + 2 - beta) / 2.0, 2.0, (n + 2) / 2.0, (n + 4 - beta) / 2.0)


@dataclass
class SeriesResult:
    """Outcome of one series summation.

    cancellation_digits is log10(max |partial sum| / |result|), clamped at 0;
    it measures how many leading digits were destroyed by alternating terms.
    """

    value: float
    terms_used: int
    est_abs_error: float
    cancellation_digits: float
    converged: bool


def _check_args(p: PfqParams, x: float) -> None:
    p.validate()
    if not (x <= 0.0):
        raise InvalidParams(f"series argument must satisfy x <= 0, got {x}")


def pfq_2f3(p: PfqParams, x: float, term_cap: int = TERM_CAP) -> SeriesResult:
    """Sum the 2F3 series in double precision with compensated accumulation.

    On overflow of the partial sums the result is returned with
    ``converged=False`` and infinite cancellation_digits instead of raising,
    so callers can reroute to the extended-precision path.
    """
    _check_args(p, x)
    if x == 0.0:
        return SeriesResult(1.0, 1, 0.0, 0.0, True)

    a1, a2, b1, b2, b3 = p.a1, p.a2, p.b1, p.b2, p.b3
    term = 1.0
    total = 1.0
    comp = 0.0  # Neumaier compensation
    max_abs = 1.0
    small_run = 0
    terms = 1
    for j in range(term_cap):
        term *= (a1 + j) * (a2 + j) / ((b1 + j) * (b2 + j) * (b3 + j) * (1.0 + j)) * x
        t = total + term
        if abs(total) >= abs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
        terms += 1
        if not math.isfinite(total):
            return SeriesResult(math.nan, terms, math.inf, math.inf, False)
        running = total + comp
        if abs(running) > max_abs:
            max_abs = abs(running)
        if term == 0.0 or abs(term) < REL_TERM_TOL * abs(running):
            small_run += 1
            if small_run >= CONSECUTIVE_SMALL:
                value = running
                cancel = math.log10(max_abs / max(abs(value), _TINY))
                est = abs(term) + _DOUBLE_EPS * max_abs
                return SeriesResult(value, terms, est, max(cancel, 0.0), True)
        else:
            small_run = 0
    raise NonConvergence(
        f"2F3 series did not satisfy the stopping test within {term_cap} terms "
        f"(params={p}, x={x})"
    )


def required_digits(cancellation_digits: float) -> int:
    """Working precision rule for the extended path: 16 + ceil(loss) + 8 guard digits."""
    return 16 + int(math.ceil(cancellation_digits)) + 8


def estimate_cancellation(x: float) -> float:
    """A priori estimate of digits lost at argument x, from the exp(2*sqrt(|x|))
    growth of the partial sums.  Used when the double run overflowed."""
    return _LOG10_E2 * math.sqrt(abs(x)) + 4.0


def _extended_term_cap(x: float, term_cap: int) -> int:
    # The peak term sits near j = sqrt(|x|); the tail needs ~2.8*sqrt(|x|) terms
    # to fall below the result, so the fixed cap must scale with the argument.
    return max(term_cap, int(3.0 * math.sqrt(abs(x))) + 200)


def pfq_2f3_mpf(p: PfqParams, x, digits: int, term_cap: int = TERM_CAP):
    """Sum the series with mpmath at `digits` working digits; returns
    (value: mpf, terms_used, max_abs_partial: mpf)."""
    _check_args(p, float(x))
    cap = _extended_term_cap(float(x), term_cap)
    with mp.workdps(digits):
        xm = mp.mpf(x)
        a1, a2 = mp.mpf(p.a1), mp.mpf(p.a2)
        b1, b2, b3 = mp.mpf(p.b1), mp.mpf(p.b2), mp.mpf(p.b3)
        term = mp.mpf(1)
        total = mp.mpf(1)
        max_abs = mp.mpf(1)
        small_run = 0
        terms = 1
        for j in range(cap):
            term = term * (a1 + j) * (a2 + j) / ((b1 + j) * (b2 + j) * (b3 + j) * (1 + j)) * xm
            total += term
            terms += 1
            if abs(total) > max_abs:
                max_abs = abs(total)
            if term == 0 or abs(term) < mp.mpf(REL_TERM_TOL) * abs(total):
                small_run += 1
                if small_run >= CONSECUTIVE_SMALL:
                    return total, terms, max_abs
            else:
                small_run = 0
    raise NonConvergence(
        f"extended 2F3 series did not converge within {cap} terms (params={p}, x={x})"
    )


def pfq_2f3_extended(
    p: PfqParams, x: float, digits: int, term_cap: int = TERM_CAP
) -> SeriesResult:
    """Sum the same series in software extended precision (>= `digits` decimal digits)."""
    total, terms, max_abs = pfq_2f3_mpf(p, x, digits, term_cap)
    value = float(total)
    cancel = float(mp.log10(max_abs / max(abs(total), mp.mpf(_TINY))))
    est = float(mp.mpf(10) ** (-digits) * max_abs)
    return SeriesResult(value, terms, est, max(cancel, 0.0), True)


def pfq_2f3_auto(p: PfqParams, x: float, term_cap: int = TERM_CAP):
    """Double-precision evaluation with automatic reroute to extended precision.

    Returns (SeriesResult, used_extended).  The reroute fires when the double
    run overflowed or reports more than CANCELLATION_REROUTE digits lost.
    """
    res = pfq_2f3(p, x, term_cap)
    if res.converged and res.cancellation_digits <= CANCELLATION_REROUTE:
        return res, False
    cancel = res.cancellation_digits
    if not math.isfinite(cancel):
        cancel = estimate_cancellation(x)
    return pfq_2f3_extended(p, x, required_digits(cancel), term_cap), True
