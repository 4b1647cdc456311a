"""Independent brute-force oracles used to freeze expected values.

Everything here is deliberately primitive (direct summation, alternating
series acceleration, trial division) and shares no code path with the
library kernels it checks.
"""

import math

EULER_GAMMA = 0.5772156649015328606


def zeta_via_eta(s: float, n: int = 60) -> float:
    """zeta(s) for real 0 < s < 1 (or s > 1) through the alternating eta
    series, accelerated by Chebyshev-weighted summation; error ~ 5.83^-n."""
    d = (3.0 + math.sqrt(8.0)) ** n
    d = 0.5 * (d + 1.0 / d)
    b, c, total = -1.0, -d, 0.0
    for k in range(n):
        c = b - c
        total += c * (k + 1.0) ** (-s)
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0))
    return total / d / (1.0 - 2.0 ** (1.0 - s))


def zeta_prime_2(n: int = 200_000) -> float:
    """zeta'(2) = -sum ln n / n^2 with an integral-plus-endpoint tail."""
    part = math.fsum(math.log(k) / k**2 for k in range(1, n + 1))
    tail = (
        (math.log(n) + 1.0) / n
        - 0.5 * math.log(n) / n**2
        - (1.0 - 2.0 * math.log(n)) / (12.0 * n**3)
    )
    return -(part + tail)


def zeta_log_derivative_2_bracket(n: int = 200_000) -> tuple[float, float]:
    """(zeta'/zeta)(2) = -sum Lambda(k)/k^2: partial sum and a rigorous
    tail bound (Lambda(k) <= ln k)."""
    spf = list(range(n + 1))
    for p in range(2, int(math.isqrt(n)) + 1):
        if spf[p] == p:
            for m in range(p * p, n + 1, p):
                if spf[m] == m:
                    spf[m] = p
    terms = []
    for k in range(2, n + 1):
        p = spf[k]
        m = k
        while m % p == 0:
            m //= p
        if m == 1:
            terms.append(math.log(p) / k**2)
    return -math.fsum(terms), (math.log(n) + 1.0) / n


def ei_series(x: float) -> float:
    """Ei by its defining power series (fsum-accumulated)."""
    terms = []
    term = 1.0
    for k in range(1, 400):
        term *= x / k
        terms.append(term / k)
        if abs(term / k) < 1e-21:
            break
    return EULER_GAMMA + math.log(abs(x)) + math.fsum(terms)


# frozen values produced by the oracles above (and checked in the tests)
ZETA_HALF = -1.4603545088095862          # zeta_via_eta(0.5)
ZETA_PRIME_2 = -0.9375482543158438       # zeta_prime_2()
EI_1 = 1.8951178163559366                # ei_series(1.0)
EI_QUARTER = -0.5425432646619137         # ei_series(0.25)
RHO_SUM = 0.02309570896612101            # 1 + gamma/2 - ln(4 pi)/2
GAMMA_1 = 14.134725141734693             # refined zero ordinate (12+ digits)
GAMMA_2 = 21.022039638771555
