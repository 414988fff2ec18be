"""Asymptotic constants of the weighted walk models and a non-D-finiteness test.

Each counting model has a step inventory S(z; x, y) whose saddle point gives
the growth constant gamma and the polynomial decay exponent
alpha = 1 + pi/arccos(xi), with xi read off the second partials of S.  When
xi is algebraic with minimal polynomial X, alpha is rational exactly when
the polynomial N(zeta) = X((zeta + 1/zeta)/2) cleared of denominators has a
cyclotomic prime factor; scanning gcd(N, zeta^m - 1) over the finitely many
admissible m decides this, and alpha irrational certifies that the counting
sequence has a non-D-finite generating function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

MODELS = ("posets-edges", "posets-vertices", "transversal")


class NoRootInInterval(ValueError):
    """Bisection could not bracket a sign change."""


class DegenerateInput(ValueError):
    """The polynomial carries no algebraic information (constant)."""


class OutOfRange(ValueError):
    """The requested quantity is undefined for this argument."""


class TooShort(ValueError):
    """Not enough terms to run the extrapolation."""


@dataclass(frozen=True)
class AsymptoticConstants:
    model: str
    v: Fraction
    rho: float
    z0: float
    gamma: float
    xi: float
    alpha: float


def _check_model(model: str, v) -> Fraction:
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}, expected one of {MODELS}")
    v = Fraction(v)
    if model != "transversal" and v != 0:
        raise ValueError(f"model {model!r} takes no weight parameter")
    if v < 0:
        raise ValueError("the quadrangle weight must be nonnegative")
    return v


def _radius(model: str, v: float) -> float:
    if model == "posets-edges":
        return 1.0
    if model == "posets-vertices":
        return 0.5
    return (math.sqrt(2.0 + v) - 1.0) / (1.0 + v)


def _s_value(model: str, v: float, z: float) -> float:
    if model == "posets-edges":
        return 1.0 / z**2 + (z / (1.0 - z)) ** 2
    if model == "posets-vertices":
        return 1.0 / z**2 + 1.0 / (1.0 - 2.0 * z)
    q = 1.0 - 2.0 * z - (1.0 + v) * z**2
    return 1.0 / z**2 + 1.0 / q


def _s_prime(model: str, v: float, z: float) -> float:
    if model == "posets-edges":
        return -2.0 / z**3 + 2.0 * z / (1.0 - z) ** 3
    if model == "posets-vertices":
        return -2.0 / z**3 + 2.0 / (1.0 - 2.0 * z) ** 2
    q = 1.0 - 2.0 * z - (1.0 + v) * z**2
    return -2.0 / z**3 + (2.0 + 2.0 * (1.0 + v) * z) / q**2


def _xi_at(model: str, v: float, z: float) -> float:
    """-S_xy/S_xx at (z; 1, 1), from the closed partial derivatives."""
    if model == "posets-edges":
        # S = (x/y) z^-2 + z/(x-z) * zy/(1-zy)
        sxx = 2.0 * z**2 / (1.0 - z) ** 4
        sxy = -1.0 / z**2 - z**2 / (1.0 - z) ** 4
        return -sxy / sxx
    if model == "posets-vertices":
        # S = (x/y) z^-2 + 1/(1 - z/x - zy)
        q = 1.0 - 2.0 * z
        sxx = 2.0 * z**2 / q**3 + 2.0 * z / q**2
        sxy = -1.0 / z**2 - 2.0 * z**2 / q**3
        return -sxy / sxx
    # S = (x/y) z^-2 / (1 - F) with F = z^2 (y/x)/D, D = 1 - z/x - zy - v z^2 y/x
    d = z + v * z**2
    dd = 1.0 - 2.0 * z - v * z**2
    f = z**2 / dd
    r = 1.0 + d / dd
    u = 1.0 - f
    a = f * r
    f_xx = 2.0 * f * r**2
    f_xy = -f * (r**2 + v * z**2 / dd + (d / dd) ** 2)
    num = u - 2.0 * a - f_xy + 2.0 * a**2 / u
    den = f_xx - 2.0 * a + 2.0 * a**2 / u
    return num / den


def _bisect(fn, lo: float, hi: float, tol: float = 1e-12) -> float:
    flo, fhi = fn(lo), fn(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo < 0.0) == (fhi < 0.0):
        raise NoRootInInterval(f"no sign change on [{lo}, {hi}]")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = fn(mid)
        if fm == 0.0:
            return mid
        if (fm < 0.0) == (flo < 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _closed_z0(model: str, v: float) -> float:
    if model == "posets-vertices":
        return (3.0 - math.sqrt(5.0)) / 2.0
    if model == "transversal":
        if v == 0.0:
            return 1.0 / 3.0
        return (-3.0 + math.sqrt(9.0 + 4.0 * v)) / (2.0 * v)
    return None


def _closed_gamma(model: str, v: float, z0: float) -> float:
    if model == "posets-edges":
        return 5.0 * z0**3 + 7.0 * z0**2 - 13.0 * z0 + 9.0
    if model == "posets-vertices":
        return (11.0 + 5.0 * math.sqrt(5.0)) / 2.0
    m = 9.0 + 4.0 * v
    return (2.0 * v**2 + 18.0 * v + 27.0 + m**1.5) / (2.0 * (2.0 + v))


def _closed_xi(model: str, v: float, z0: float) -> float:
    if model in ("posets-edges", "posets-vertices"):
        return 1.0 - z0 / 2.0
    return (4.0 * v**2 + 14.0 * v + 11.0 + math.sqrt(9.0 + 4.0 * v)) / (
        4.0 * (2.0 + v) ** 2
    )


def solve_constants(model: str, v=0) -> AsymptoticConstants:
    """Saddle point z0, growth gamma, correlation xi and exponent alpha.

    z0 is found by bisecting S'(z) on (0, rho); the direct values are then
    checked against the closed forms of the model, so a discrepancy in
    either derivation raises instead of returning silently wrong constants.
    """
    vq = _check_model(model, v)
    vf = float(vq)
    rho = _radius(model, vf)
    eps = rho * 1e-9
    z0 = _bisect(lambda z: _s_prime(model, vf, z), eps, rho - eps)
    gamma = _s_value(model, vf, z0)
    xi = _xi_at(model, vf, z0)
    zc = _closed_z0(model, vf)
    if zc is not None and abs(z0 - zc) > 1e-10:
        raise NoRootInInterval(f"bisection drifted from the closed root: {z0} vs {zc}")
    if abs(gamma - _closed_gamma(model, vf, z0)) > 1e-10 * max(1.0, gamma):
        raise NoRootInInterval("gamma disagrees with its closed form")
    if abs(xi - _closed_xi(model, vf, z0)) > 1e-10:
        raise NoRootInInterval("xi disagrees with its closed form")
    # report the closed forms, which round cleanly; the bisection route above
    # exists to cross-check them
    if zc is not None:
        z0 = zc
    gamma = _closed_gamma(model, vf, z0)
    xi = _closed_xi(model, vf, z0)
    alpha = 1.0 + math.pi / math.acos(xi)
    return AsymptoticConstants(model, vq, rho, z0, gamma, xi, alpha)


# --- exact minimal polynomials of xi ------------------------------------------


def _clear_fractions(coeffs) -> list:
    """Integer coefficients: clear denominators, divide by content, lead > 0."""
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        return [0]
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in coeffs]
    content = 0
    for c in ints:
        content = math.gcd(content, abs(c))
    ints = [c // content for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _is_rational_square(q: Fraction):
    if q < 0:
        return None
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def xi_polynomial(model: str, v=0) -> list:
    """Integer polynomial (ascending coefficients) annihilating xi.

    For the even-weight models this is the minimal polynomial.  For the
    transversal model at rational v the conjugate root is split off, so the
    result is quadratic, degenerating to linear when 9 + 4v is a rational
    square.
    """
    vq = _check_model(model, v)
    if model == "posets-edges":
        # xi = 1 - z0/2 with z0^4 + z0^3 - 3 z0^2 + 3 z0 - 1 = 0
        return [17, -70, 108, -72, 16]
    if model == "posets-vertices":
        return [-1, -2, 4]
    r = 4 * vq**2 + 14 * vq + 11
    m = 9 + 4 * vq
    lead = 4 * (2 + vq) ** 2
    root = _is_rational_square(m)
    if root is not None:
        return _clear_fractions([-(r + root), lead])
    # (lead*s - r)^2 - m
    return _clear_fractions([r * r - m, -2 * lead * r, lead * lead])


def _poly_eval(coeffs, x):
    out = 0
    for c in reversed(coeffs):
        out = out * x + c
    return out


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return out


def zeta_numerator(x_coeffs) -> list:
    """Clear X((zeta + 1/zeta)/2) into a polynomial in zeta.

    With X = sum a_k s^k of degree d, the result is
    sum a_k (zeta^2 + 1)^k (2 zeta)^(d-k), normalized by content.
    """
    coeffs = list(x_coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) <= 1:
        raise DegenerateInput("constant polynomial has no root to test")
    d = len(coeffs) - 1
    out = [0] * (2 * d + 1)
    for k, a in enumerate(coeffs):
        term = [a]
        for _ in range(k):
            term = _poly_mul(term, [1, 0, 1])
        for _ in range(d - k):
            term = _poly_mul(term, [0, 2])
        for i, c in enumerate(term):
            out[i] += c
    return _clear_fractions(out)


def _poly_divmod_q(num, den):
    num = [Fraction(c) for c in num]
    den = [Fraction(c) for c in den]
    while den and den[-1] == 0:
        den.pop()
    q = [Fraction(0)] * max(0, len(num) - len(den) + 1)
    r = num[:]
    while len(r) >= len(den) and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) < len(den):
            break
        f = r[-1] / den[-1]
        shift = len(r) - len(den)
        q[shift] = f
        for i, c in enumerate(den):
            r[i + shift] -= f * c
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    return q, r


def _poly_gcd_degree(a, b) -> int:
    """Degree of gcd(a, b) over the rationals."""
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    while b and any(c != 0 for c in b):
        _, r = _poly_divmod_q(a, b)
        a, b = b, r
    while a and a[-1] == 0:
        a.pop()
    return len(a) - 1


def cyclotomic_root_scan(n_coeffs) -> dict:
    """Decide whether the polynomial has a root of unity among its roots.

    gcd(N, zeta^m - 1) is nontrivial for some m exactly when a cyclotomic
    polynomial divides N; m only needs to range over values with
    phi(m) <= deg(N).  A cheap prefilter (self-reciprocal with small
    coefficients) is reported alongside but never decides the outcome.
    """
    coeffs = list(n_coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) <= 1:
        raise DegenerateInput("constant polynomial has no root to test")
    deg = len(coeffs) - 1
    reciprocal = coeffs == coeffs[::-1]
    small = max(abs(c) for c in coeffs) <= 2
    witness = None
    limit = 3 * deg * deg
    for m in range(1, limit + 1):
        phi = sum(1 for k in range(1, m + 1) if math.gcd(k, m) == 1)
        if phi > deg:
            continue
        unit = [0] * (m + 1)
        unit[0] = -1
        unit[m] = 1
        if _poly_gcd_degree(coeffs, unit) > 0:
            witness = m
            break
    return {
        "degree": deg,
        "prefilter_self_reciprocal": reciprocal,
        "prefilter_small_coefficients": small,
        "has_cyclotomic_factor": witness is not None,
        "witness_order": witness,
    }


def non_dfinite_check(model: str, v=0) -> dict:
    """Certify irrationality of alpha for a model, hence non-D-finiteness.

    alpha = 1 + pi/arccos(xi) is rational exactly when the cleared
    polynomial N(zeta) of xi's annihilating polynomial has a root of unity
    among its roots.  Finding none certifies that the counting sequence's
    generating function is not D-finite.
    """
    x = xi_polynomial(model, v)
    n = zeta_numerator(x)
    scan = cyclotomic_root_scan(n)
    return {
        "model": model,
        "v": str(Fraction(v)),
        "xi_polynomial": x,
        "zeta_numerator": n,
        **scan,
        "alpha_is_rational": scan["has_cyclotomic_factor"],
        "certified_non_dfinite": not scan["has_cyclotomic_factor"],
    }


# --- descriptive extras --------------------------------------------------------


def central_charge(alpha: float) -> float:
    """Solve 12(2 - alpha) = c - 1 - sqrt((1 - c)(25 - c)) for c <= 1."""
    if alpha < 2.0:
        raise OutOfRange("alpha below 2 has no central charge")
    target = 12.0 * (2.0 - alpha)

    def h(c):
        return c - 1.0 - math.sqrt((1.0 - c) * (25.0 - c)) - target

    lo = 1.0
    while h(lo) > 0.0:
        lo = 2.0 * lo - 27.0
    return _bisect(h, lo, 1.0)


def growth_fit(seq, tail: int = None) -> tuple:
    """Estimate (gamma, alpha) from terms following c gamma^n n^-alp, roughly.

    Two Richardson rounds on the log-ratios give gamma; alpha then comes
    from regressing the residual log-term against log n on the tail.
    """
    terms = list(seq)
    if len(terms) < 8:
        raise TooShort("need at least eight terms")
    if any(t <= 0 for t in terms):
        raise ValueError("terms must be positive")
    # math.log takes arbitrary-size ints, so avoid float() on huge terms
    logs = [math.log(t) for t in terms]
    ratios = [logs[k + 1] - logs[k] for k in range(len(terms) - 1)]
    r1 = [
        (k + 1) * ratios[k + 1] - k * ratios[k] for k in range(1, len(ratios) - 1)
    ]
    r2 = []
    for k in range(1, len(r1)):
        n = k + 2
        r2.append(((n * n) * r1[k] - (n - 1) ** 2 * r1[k - 1]) / (2 * n - 1))
    log_gamma = r2[-1]
    gamma = math.exp(log_gamma)
    if tail is None:
        tail = max(4, len(terms) // 2)
    pts = [
        (math.log(n + 1), logs[n] - (n + 1) * log_gamma)
        for n in range(len(terms) - tail, len(terms))
    ]
    mx = sum(p[0] for p in pts) / len(pts)
    my = sum(p[1] for p in pts) / len(pts)
    sxx = sum((p[0] - mx) ** 2 for p in pts)
    sxy = sum((p[0] - mx) * (p[1] - my) for p in pts)
    alpha = -sxy / sxx
    return gamma, alpha
