"""Locating ordinates of the nontrivial zeta zeros on the critical line.

The zeros are assumed to lie on Re s = 1/2 (Riemann hypothesis, as the model
requires); their ordinates gamma_k are found as sign changes of the rotated
real function Z(t) = exp(i theta(t)) zeta(1/2 + it), scanned on a grid of
Gram points with escalating local refinement where Gram's law fails, and the
result is audited against the smooth counting formula.

Zero tables are persisted as plain text:

    # rgas-zeros v1 count=<n> abs_error=<e>
    14.1347251417
    21.0220396388
    ...

with one ordinate per line at 12 significant digits.  Tables quantize their
ordinates to that precision at construction, so a save/load round trip is
the identity.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

from .errors import AccuracyError, DomainError, MissedZeroError, TableFormatError
from .numkernel import (
    DEFAULT_OPTIONS,
    EvalOptions,
    _em_cutoff,
    _hurwitz_em,
    _log_gamma_many,
    log_gamma,
)

__all__ = [
    "ZeroTable",
    "HardyEval",
    "riemann_siegel_theta",
    "hardy_z",
    "hardy_eval",
    "gram_point",
    "find_zeros",
    "zero_count_estimate",
    "counting_smooth",
    "save_table",
    "load_table",
]

_LOG_PI = math.log(math.pi)
_TWO_PI = 2.0 * math.pi
_MAX_ZEROS = 10_000
_REALNESS_TOL = 1e-9  # |Im(e^{i theta} zeta(1/2+it))| beyond this flags kernel trouble


@dataclass(frozen=True)
class ZeroTable:
    """Ascending positive ordinates of nontrivial zeros with metadata."""

    gammas: np.ndarray
    abs_error: float
    count: int
    source: str  # "computed" | "loaded"

    def __post_init__(self) -> None:
        g = np.asarray(self.gammas, dtype=np.float64)
        if g.ndim != 1 or g.size != self.count:
            raise DomainError("gamma array does not match count")
        if g.size and g[0] <= 14.0:
            raise DomainError("first ordinate must exceed 14")
        if np.any(np.diff(g) <= 0.0):
            raise DomainError("ordinates must be strictly increasing")
        if self.source not in ("computed", "loaded"):
            raise DomainError("source must be 'computed' or 'loaded'")
        g.setflags(write=False)
        object.__setattr__(self, "gammas", g)

    def count_below(self, t: float) -> int:
        return int(np.searchsorted(self.gammas, t, side="right"))

    def head(self, count: int) -> "ZeroTable":
        """The first `count` ordinates as a table of their own."""
        if count < 1 or count > self.count:
            raise DomainError("head count out of range")
        return ZeroTable(self.gammas[:count].copy(), self.abs_error, count, self.source)


# ----------------------------------------------------------------------
# theta and Z
# ----------------------------------------------------------------------

def riemann_siegel_theta(t: float) -> float:
    """theta(t) = Im log Gamma(1/4 + i t/2) - (t/2) ln pi for t > 0."""
    if not t > 0.0:
        raise DomainError("theta requires t > 0")
    return log_gamma(complex(0.25, 0.5 * t)).imag - 0.5 * t * _LOG_PI


def _theta_many(t: np.ndarray) -> np.ndarray:
    t = np.asarray(t, dtype=np.float64)
    z = 0.25 + 0.5j * t
    return _log_gamma_many(z).imag - 0.5 * t * _LOG_PI


def _z_chunk(t: np.ndarray, opts: EvalOptions) -> np.ndarray:
    """Z(t) for an ascending chunk sharing one Euler-Maclaurin cutoff."""
    s = 0.5 + 1j * t
    n = _em_cutoff(float(t[-1]), 1.0, opts)
    zeta_vals, _, est, _ = _hurwitz_em(s, 1.0, n, want_derivative=False)
    worst = float(np.max(est))
    if worst > max(opts.target_abs_error, 1e-11):
        raise AccuracyError(f"zeta accuracy {worst:.2e} insufficient on the critical line")
    rotated = np.exp(1j * _theta_many(t)) * zeta_vals
    drift = float(np.max(np.abs(rotated.imag)))
    if drift > _REALNESS_TOL:
        raise AccuracyError(
            f"rotated zeta has imaginary part {drift:.2e}; kernel inaccurate"
        )
    return rotated.real


def _z_many(t: np.ndarray, opts: EvalOptions = DEFAULT_OPTIONS, chunk: int = 512) -> np.ndarray:
    """Vectorized Hardy Z over arbitrary positive t (internally sorted and
    chunked so each chunk shares a zeta cutoff)."""
    t = np.asarray(t, dtype=np.float64)
    if np.any(t <= 0.0):
        raise DomainError("hardy_z requires t > 0")
    order = np.argsort(t, kind="stable")
    sorted_t = t[order]
    out = np.empty_like(sorted_t)
    for lo in range(0, sorted_t.size, chunk):
        seg = sorted_t[lo : lo + chunk]
        out[lo : lo + chunk] = _z_chunk(seg, opts)
    result = np.empty_like(out)
    result[order] = out
    return result


def hardy_z(t: float, opts: EvalOptions = DEFAULT_OPTIONS) -> float:
    """Hardy's real rotation of zeta on the critical line; its sign changes
    bracket the zero ordinates."""
    return float(_z_many(np.array([float(t)]), opts)[0])


@dataclass(frozen=True)
class HardyEval:
    """One rotated evaluation on the critical line: e^{i theta} zeta(1/2+it)
    is real up to kernel accuracy, checked at construction."""

    t: float
    z_value: float
    theta: float


def hardy_eval(t: float, opts: EvalOptions = DEFAULT_OPTIONS) -> HardyEval:
    """Z(t) together with the rotation angle theta(t)."""
    return HardyEval(t=float(t), z_value=hardy_z(t, opts), theta=riemann_siegel_theta(t))


# ----------------------------------------------------------------------
# counting
# ----------------------------------------------------------------------

def zero_count_estimate(t: float) -> float:
    """Smooth zero-counting estimate (T/2pi) ln(T/2pi) - T/2pi + 7/8."""
    if not t > _TWO_PI:
        raise DomainError("counting estimate needs T > 2 pi")
    x = t / _TWO_PI
    return x * math.log(x) - x + 0.875


def counting_smooth(t: float) -> float:
    """theta(T)/pi + 1: the exact smooth part of the counting function."""
    return riemann_siegel_theta(t) / math.pi + 1.0


def gram_point(n: int) -> float:
    """The Gram point g_n where theta(g_n) = n pi, for n >= -1."""
    if n < -1:
        raise DomainError("gram_point supports n >= -1")
    return float(_gram_points(n, n)[0])


def _gram_points(n_lo: int, n_hi: int) -> np.ndarray:
    """Gram points g_n for n = n_lo..n_hi by vectorized Newton iteration."""
    n = np.arange(n_lo, n_hi + 1, dtype=np.float64)
    target = n * math.pi
    # asymptotic seed from theta(t) ~ (t/2) ln(t/(2 pi e)) - pi/8
    t = np.full_like(n, 18.0)
    for _ in range(80):
        x = t / _TWO_PI
        guess = 0.5 * t * np.log(x) - 0.5 * t - math.pi / 8.0
        slope = 0.5 * np.log(x)
        step = (target - guess) / np.where(np.abs(slope) < 0.05, 0.05, slope)
        t = np.clip(t + step, 8.0, None)
        if float(np.max(np.abs(step))) < 1e-9:
            break
    # polish on the exact theta
    for _ in range(8):
        resid = _theta_many(t) - target
        slope = 0.5 * np.log(t / _TWO_PI)
        t = np.clip(t - resid / np.where(np.abs(slope) < 0.05, 0.05, slope), 7.5, None)
    if float(np.max(np.abs(_theta_many(t) - target))) > 1e-7:
        raise AccuracyError("Gram point iteration did not converge")
    return t


# ----------------------------------------------------------------------
# zero search
# ----------------------------------------------------------------------

def _brackets_on_grid(grid: np.ndarray, z: np.ndarray) -> list[tuple[float, float, float, float]]:
    sign_change = z[:-1] * z[1:] < 0.0
    idx = np.flatnonzero(sign_change)
    return [(float(grid[i]), float(grid[i + 1]), float(z[i]), float(z[i + 1])) for i in idx]


def _subdivide(gram: np.ndarray, per_interval: np.ndarray) -> np.ndarray:
    """Grid over [gram[0], gram[-1]] with per_interval[i] cells in interval i."""
    pieces = [np.array([gram[0]])]
    for i in range(gram.size - 1):
        k = int(per_interval[i])
        pieces.append(np.linspace(gram[i], gram[i + 1], k + 1)[1:])
    return np.concatenate(pieces)


def find_zeros(count: int, opts: EvalOptions = DEFAULT_OPTIONS) -> ZeroTable:
    """First `count` zero ordinates, bracketed on a Gram-point grid (8 cells
    per interval, escalating to 64 and 512 where the counting formula shows
    a deficit), refined by 40 lockstep bisections and one secant polish, and
    audited against the smooth counting formula."""
    if count < 1:
        raise DomainError("count must be >= 1")
    if count > _MAX_ZEROS:
        raise DomainError(f"zero search supports at most {_MAX_ZEROS} zeros")

    buffer = 6
    m_hi = count + buffer
    gram = _gram_points(-1, m_hi)  # g_-1 .. g_{m_hi}
    expected_total = m_hi + 1  # N(g_n) should be n + 1 when all are found

    per_interval = np.full(gram.size - 1, 8, dtype=np.int64)
    brackets: list[tuple[float, float, float, float]] = []
    for level in (8, 64, 512, 4096):
        grid = _subdivide(gram, per_interval)
        z = _z_many(grid, opts)
        brackets = _brackets_on_grid(grid, z)
        if len(brackets) >= expected_total:
            break
        # cumulative deficit per Gram interval drives targeted escalation
        lefts = np.array([b[0] for b in brackets])
        deficient = []
        for i in range(gram.size - 1):
            cum_found = int(np.searchsorted(lefts, gram[i + 1], side="left"))
            if cum_found < i + 2:
                deficient.append(i)
        if not deficient:
            break
        for i in deficient:
            for j in (i - 1, i, i + 1):
                if 0 <= j < per_interval.size:
                    per_interval[j] = max(per_interval[j], level * 8)
    if len(brackets) < expected_total:
        raise MissedZeroError(
            f"found {len(brackets)} sign changes below g_{m_hi}, expected {expected_total}"
        )

    lo = np.array([b[0] for b in brackets[: count + 1]])
    hi = np.array([b[1] for b in brackets[: count + 1]])
    zlo = np.array([b[2] for b in brackets[: count + 1]])
    for _ in range(40):
        mid = 0.5 * (lo + hi)
        zm = _z_many(mid, opts)
        take_left = np.sign(zm) == np.sign(zlo)
        lo = np.where(take_left, mid, lo)
        zlo = np.where(take_left, zm, zlo)
        hi = np.where(take_left, hi, mid)
    # one secant polish on the final bracket
    zhi = _z_many(hi, opts)
    zlo = _z_many(lo, opts)
    denom = zhi - zlo
    secant = np.where(np.abs(denom) > 0.0, hi - zhi * (hi - lo) / np.where(denom == 0.0, 1.0, denom), 0.5 * (lo + hi))
    secant = np.clip(secant, lo, hi)

    raw = secant[:count]
    quantized = np.array([_quantize(g) for g in raw])
    g_max = float(quantized[-1])
    half_ulp = 0.5 * 10.0 ** (math.floor(math.log10(g_max)) - 11)
    abs_error = max(1e-11, half_ulp)
    table = ZeroTable(quantized, abs_error, count, "computed")

    # audit against the counting formula at a spread of checkpoints
    for k in range(9, count, max(1, count // 8)):
        t_mid = 0.5 * (table.gammas[k] + (table.gammas[k + 1] if k + 1 < count else float(gram[k + 2])))
        if t_mid > _TWO_PI:
            drift = abs(table.count_below(t_mid) - round(zero_count_estimate(t_mid)))
            if drift > 1:
                raise MissedZeroError(
                    f"counting audit failed near t={t_mid:.3f}: drift {drift}"
                )
    return table


def _quantize(g: float) -> float:
    """Round to the 12-significant-digit precision of the file format."""
    return float(format(g, ".12g"))


# ----------------------------------------------------------------------
# persistence
# ----------------------------------------------------------------------

_HEADER_RE = re.compile(
    r"^# rgas-zeros v1 count=(\d+) abs_error=([0-9.eE+-]+)\s*$"
)


def save_table(table: ZeroTable, path) -> None:
    """Write the text format: header line, then one ordinate per line with
    12 significant digits."""
    lines = [f"# rgas-zeros v1 count={table.count} abs_error={table.abs_error:.6g}"]
    lines.extend(format(g, ".12g") for g in table.gammas)
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def load_table(path) -> ZeroTable:
    """Read a zero-table file, validating header, parse, and monotonicity."""
    with open(path, "r", encoding="ascii") as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise TableFormatError("line 1: empty zero-table file")
    m = _HEADER_RE.match(lines[0])
    if m is None:
        raise TableFormatError(f"line 1: malformed header: {lines[0]!r}")
    count = int(m.group(1))
    abs_error = float(m.group(2))
    values = []
    for i, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        try:
            values.append(float(line))
        except ValueError as exc:
            raise TableFormatError(f"line {i}: not a number: {line!r}") from exc
    if len(values) != count:
        raise TableFormatError(
            f"line {len(lines)}: header promises {count} ordinates, found {len(values)}"
        )
    g = np.array(values, dtype=np.float64)
    if np.any(np.diff(g) <= 0.0):
        bad = int(np.flatnonzero(np.diff(g) <= 0.0)[0]) + 3
        raise TableFormatError(f"line {bad}: ordinates not strictly increasing")
    try:
        return ZeroTable(g, abs_error, count, "loaded")
    except DomainError as exc:
        raise TableFormatError(f"line 2: {exc}") from exc
