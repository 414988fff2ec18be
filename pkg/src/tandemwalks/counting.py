"""Exact counting of weighted quadrant tandem walks.

A tandem walk takes steps SE = (+1,-1) and face-steps (-i,+j) with i,j >= 0.
Walks are confined to the quadrant x >= 0, y >= 0 and weighted by the product
of per-step weights; SE steps always have weight 1.  Three face-step weight
kinds are supported:

  indicator    1 if i >= 1 and j >= 1, else 0
  binomial     binomial(i+j, i)
  transversal  polynomial in v: w(1,1) = 1 and
               w(i,j) = w(i-1,j) + w(i,j-1) + v*w(i-1,j-1), zero if i or j < 1

All arithmetic is exact: Python integers, Fraction, or polynomials in v with
integer coefficients (VPoly).  The dynamic programs bound the state space by
x <= (steps so far) and y <= (steps remaining), which is exact because x only
increases through SE steps and y only decreases through SE steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

WEIGHT_KINDS = ("indicator", "binomial", "transversal")


class NegativeWeight(ValueError):
    """Raised when the transversal weight is evaluated at v < 0."""


class MismatchAt(AssertionError):
    """Two independent computations of the same quantity disagree at index n.

    This always signals an implementation bug, never bad input.
    """

    def __init__(self, identity: str, n: int, lhs, rhs):
        self.identity = identity
        self.n = n
        self.lhs = lhs
        self.rhs = rhs
        super().__init__(f"{identity} fails at n={n}: {lhs} != {rhs}")


class VPoly:
    """Polynomial in the indeterminate v, dense coefficient tuple.

    Coefficients are exact (int or Fraction).  Trailing zeros are trimmed, so
    the zero polynomial has an empty coefficient tuple.  Instances are
    immutable and compare equal to plain scalars when constant.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("VPoly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        oc = _coeffs_of(other)
        if oc is None:
            return NotImplemented
        n = max(len(self.coeffs), len(oc))
        return VPoly(
            (self.coeffs[k] if k < len(self.coeffs) else 0)
            + (oc[k] if k < len(oc) else 0)
            for k in range(n)
        )

    __radd__ = __add__

    def __sub__(self, other):
        oc = _coeffs_of(other)
        if oc is None:
            return NotImplemented
        n = max(len(self.coeffs), len(oc))
        return VPoly(
            (self.coeffs[k] if k < len(self.coeffs) else 0)
            - (oc[k] if k < len(oc) else 0)
            for k in range(n)
        )

    def __rsub__(self, other):
        oc = _coeffs_of(other)
        if oc is None:
            return NotImplemented
        n = max(len(self.coeffs), len(oc))
        return VPoly(
            (oc[k] if k < len(oc) else 0)
            - (self.coeffs[k] if k < len(self.coeffs) else 0)
            for k in range(n)
        )

    def __mul__(self, other):
        oc = _coeffs_of(other)
        if oc is None:
            return NotImplemented
        if not self.coeffs or not oc:
            return VPoly()
        out = [0] * (len(self.coeffs) + len(oc) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(oc):
                    out[i + j] += a * b
        return VPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int = 1) -> "VPoly":
        """Multiply by v**k."""
        if not self.coeffs:
            return self
        return VPoly((0,) * k + self.coeffs)

    def __call__(self, v0):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * v0 + c
        return acc

    def __eq__(self, other):
        oc = _coeffs_of(other)
        if oc is None:
            return NotImplemented
        return self.coeffs == tuple(oc) or list(self.coeffs) == list(oc)

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash(self.coeffs)

    def render(self) -> str:
        """Human form, e.g. '642 + 114*v + 2*v^2'; zero renders as '0'."""
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append("v" if c == 1 else f"{c}*v")
            else:
                parts.append(f"v^{k}" if c == 1 else f"{c}*v^{k}")
        return " + ".join(parts)

    def __repr__(self):
        return f"VPoly({self.render()!r})"


def _coeffs_of(x):
    if isinstance(x, VPoly):
        return x.coeffs
    if isinstance(x, (int, Fraction)):
        return (x,) if x else ()
    return None


_V = VPoly((0, 1))

_transversal_cache: dict[tuple[int, int], VPoly] = {(1, 1): VPoly((1,))}


def transversal_weight(i: int, j: int) -> VPoly:
    """Kernel weight w(i,j) as a polynomial in v (zero when i < 1 or j < 1)."""
    if i < 1 or j < 1:
        return VPoly()
    got = _transversal_cache.get((i, j))
    if got is not None:
        return got
    # fill the whole rectangle up to (i, j); cheap and avoids deep recursion
    for s in range(2, i + j + 1):
        for a in range(max(1, s - j), min(i, s - 1) + 1):
            b = s - a
            if (a, b) in _transversal_cache:
                continue
            w = (
                transversal_weight(a - 1, b)
                + transversal_weight(a, b - 1)
                + transversal_weight(a - 1, b - 1).shift(1)
            )
            _transversal_cache[(a, b)] = w if isinstance(w, VPoly) else VPoly((w,))
    return _transversal_cache[(i, j)]


def weight_value(kind: str, i: int, j: int, v=None):
    """The face-step weight w(i,j) for a given kind.

    For the transversal kind, v=None keeps the result symbolic (VPoly) and a
    scalar v evaluates it exactly.
    """
    if kind == "indicator":
        return 1 if (i >= 1 and j >= 1) else 0
    if kind == "binomial":
        return comb(i + j, i)
    if kind == "transversal":
        w = transversal_weight(i, j)
        return w if v is None else w(v)
    raise ValueError(f"unknown weight kind: {kind!r}")


@dataclass(frozen=True)
class ModelSpec:
    """A weighted walk-counting model: weight kind, start (0,a), end (b,0).

    v selects the evaluation point for the transversal weight (None keeps the
    count symbolic in v).  mark_se asks for counts split by number of SE
    steps.
    """

    weight: str
    a: int = 0
    b: int = 0
    v: object = None
    mark_se: bool = False

    def __post_init__(self):
        if self.weight not in WEIGHT_KINDS:
            raise ValueError(f"unknown weight kind: {self.weight!r}")
        if self.a < 0 or self.b < 0:
            raise ValueError("endpoints must be in the quadrant")
        if self.v is not None:
            if self.weight != "transversal":
                raise ValueError("v only applies to the transversal weight")
            if self.v < 0:
                raise NegativeWeight(f"v = {self.v} < 0")


def _zeros(nx: int, ny: int):
    return [[0] * ny for _ in range(nx)]


def _face_layer(kind, A, xmax_old, ymax_old, ymax_new, v):
    """Accumulated face-step contribution C[x][y] = sum w(i,j) * A[x+i][y-j].

    A is indexed A[x][y] for 0 <= x <= xmax_old, 0 <= y <= ymax_old; the
    result covers 0 <= x <= xmax_old, 0 <= y <= ymax_new.  Recurrences used
    (zero outside the ranges):

      indicator    C(x,y) = C(x,y-1) + S(x,y-1),  S(x,y) = S(x+1,y) + A(x+1,y)
      binomial     C(x,y) = A(x,y) + C(x+1,y) + C(x,y-1)
      transversal  C(x,y) = A(x+1,y-1) + C(x+1,y) + C(x,y-1) + v*C(x+1,y-1)
    """
    nx = xmax_old + 1
    ny = ymax_new + 1
    C = _zeros(nx, ny)
    if kind == "indicator":
        S = _zeros(nx, ny)
        for x in range(nx - 1, -1, -1):
            Sx = S[x]
            Ax1 = A[x + 1] if x + 1 < nx else None
            Sx1 = S[x + 1] if x + 1 < nx else None
            for y in range(ny):
                if Ax1 is not None:
                    Sx[y] = Sx1[y] + Ax1[y]
            Cx = C[x]
            for y in range(1, ny):
                Cx[y] = Cx[y - 1] + Sx[y - 1]
        return C
    if kind == "binomial":
        for x in range(nx - 1, -1, -1):
            Cx = C[x]
            Cx1 = C[x + 1] if x + 1 < nx else None
            Ax = A[x]
            for y in range(ny):
                acc = Ax[y]
                if Cx1 is not None:
                    acc = acc + Cx1[y]
                if y:
                    acc = acc + Cx[y - 1]
                Cx[y] = acc
        return C
    # transversal
    symbolic = v is None
    for x in range(nx - 1, -1, -1):
        Cx = C[x]
        Cx1 = C[x + 1] if x + 1 < nx else None
        Ax1 = A[x + 1] if x + 1 < nx else None
        for y in range(ny):
            acc = 0
            if y and Ax1 is not None and y - 1 <= ymax_old:
                acc = Ax1[y - 1]
            if Cx1 is not None:
                acc = acc + Cx1[y]
            if y:
                acc = acc + Cx[y - 1]
            if y and Cx1 is not None:
                prev = Cx1[y - 1]
                if prev:
                    if symbolic:
                        term = prev.shift(1) if isinstance(prev, VPoly) else _V * prev
                    else:
                        term = v * prev
                    acc = acc + term
            Cx[y] = acc
    return C


def _sweep(spec: ModelSpec, length: int):
    """Yield (k, layer) for k = 0..length; layer[x][y], x <= k, y <= length-k."""
    A = _zeros(1, length + spec.a + 1)
    A[0][spec.a] = 1
    yield 0, A
    for k in range(length):
        ymax_old = length - k + spec.a if k == 0 else length - k
        ymax_new = length - k - 1
        xmax_new = k + 1
        C = _face_layer(spec.weight, A, k, ymax_old, ymax_new, spec.v)
        new = _zeros(xmax_new + 1, ymax_new + 1)
        for x in range(xmax_new + 1):
            row = new[x]
            Arow = A[x - 1] if 1 <= x <= k + 1 and x - 1 <= k else None
            Crow = C[x] if x <= k else None
            for y in range(ymax_new + 1):
                acc = 0
                if Arow is not None and y + 1 <= ymax_old:
                    acc = Arow[y + 1]
                if Crow is not None:
                    acc = acc + Crow[y]
                row[y] = acc
        A = new
        yield k + 1, A


def weighted_count(spec: ModelSpec, length: int):
    """Total weight of quadrant tandem walks of the given length.

    Walks run from (0, spec.a) to (spec.b, 0).  Returns an int (or Fraction),
    or a VPoly for the symbolic transversal weight, or a dict mapping SE-step
    count to such values when spec.mark_se is set.
    """
    if length < 0:
        raise ValueError("length must be nonnegative")
    if spec.mark_se:
        return _weighted_count_marked(spec, length)
    final = None
    for _, layer in _sweep(spec, length):
        final = layer
    if spec.b >= len(final):
        out = 0
    else:
        out = final[spec.b][0]
    if spec.weight == "transversal" and spec.v is None and not isinstance(out, VPoly):
        out = VPoly((out,)) if out else VPoly()
    return out


def _weighted_count_marked(spec: ModelSpec, length: int) -> dict:
    """Walk counts split by number of SE steps (dict se_count -> value).

    Straightforward per-cell transitions; meant for small lengths where the
    split is needed, not for long sweeps.
    """
    start = (0, spec.a)
    layer = {start: {0: 1}}
    for k in range(length):
        rem = length - k - 1
        new: dict = {}
        for (x, y), by_se in layer.items():
            # SE step
            if y >= 1:
                tgt = (x + 1, y - 1)
                if tgt[1] <= rem:
                    cell = new.setdefault(tgt, {})
                    for se, val in by_se.items():
                        cell[se + 1] = cell.get(se + 1, 0) + val
            # face-steps
            for i in range(0, x + 1):
                for j in range(0, rem - y + 1):
                    w = weight_value(spec.weight, i, j, spec.v)
                    if not w:
                        continue
                    cell = new.setdefault((x - i, y + j), {})
                    for se, val in by_se.items():
                        cell[se] = cell.get(se, 0) + val * w
        layer = new
    out = layer.get((spec.b, 0), {})
    return {se: val for se, val in sorted(out.items()) if val}


def _weighted_count_naive(spec: ModelSpec, length: int):
    """Reference implementation with per-cell face-step loops (no accumulators)."""
    marked = _weighted_count_marked(spec, length)
    total = 0
    for val in marked.values():
        total = total + val
    if spec.weight == "transversal" and spec.v is None and not isinstance(total, VPoly):
        total = VPoly((total,)) if total else VPoly()
    return total


# --- small-step excursions -------------------------------------------------

_SMALL_STEPS = ((0, 0), (1, 0), (0, -1), (-1, 1), (1, -1))  # 0, E, S, NW, SE


def excursion_counts(max_length: int) -> list:
    """Counts of quadrant excursions from the origin with steps 0,E,S,NW,SE.

    Returns [c_0, ..., c_max_length] where c_m counts excursions of length m
    (so c_0 = 1 for the empty excursion).
    """
    L = max_length
    out = []
    layer = {(0, 0): 1}
    out.append(1)
    for k in range(L):
        # keeps every walk that can still return to the origin by step L;
        # reading intermediate layers at (0,0) stays exact
        cap = min(k + 1, L - k - 1)
        new: dict = {}
        for (x, y), val in layer.items():
            for dx, dy in _SMALL_STEPS:
                nx, ny = x + dx, y + dy
                if nx < 0 or ny < 0 or nx > cap or ny > cap:
                    continue
                new[(nx, ny)] = new.get((nx, ny), 0) + val
        layer = new
        out.append(layer.get((0, 0), 0))
    return out


def e_sequence(N: int) -> list:
    """First N terms of the plane-bipolar-posets-by-edges sequence.

    e_n equals the number of quadrant excursions of length n-1 with steps in
    {0, E, S, NW, SE}.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    exc = excursion_counts(N - 1)
    return [exc[n - 1] for n in range(1, N + 1)]


def b_sequence(N: int) -> list:
    """First N terms of the plane-bipolar-posets-by-vertices sequence.

    b_n is the binomial-weighted count of quadrant tandem walks of length
    n+1 from (0,0) to (0,0); a single sweep of horizon N+1 yields all terms.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    spec = ModelSpec("binomial", a=0, b=0)
    out = []
    for k, layer in _sweep(spec, N + 1):
        if 2 <= k <= N + 1:
            out.append(layer[0][0])
    return out


def t_sequence(N: int, v=0) -> list:
    """First N terms of the transversal-structure sequence t_n(v).

    v may be an exact scalar (int or Fraction) or None for symbolic terms
    (VPoly values).  Uses the two-array recurrence over pairs of walk tables
    indexed by SE count; t_n(v) is read off at level n+2, position (1,0).

    The recurrence couples cells within one level: the not-ending-in-SE array
    at (i,j) needs (i+1, j-1), (i+1, j) and (i, j-1) of the same level, so
    levels are filled with i descending and j ascending.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    if v is not None and v < 0:
        raise NegativeWeight(f"v = {v} < 0")
    symbolic = v is None
    top = N + 2

    def jmax(n):
        return top - n

    # level 0: seed down[0][1] = 1
    down = [[0] * (jmax(0) + 1)]
    down[0][1] = 1
    up = [[0] * (jmax(0) + 1)]
    out = []
    for n in range(1, top + 1):
        jm = jmax(n)
        jm_prev = jmax(n - 1)
        ndown = [[0] * (jm + 1) for _ in range(n + 1)]
        nup = [[0] * (jm + 1) for _ in range(n + 1)]
        for i in range(1, n + 1):
            if i - 1 >= len(down):
                break
            drow, urow = down[i - 1], up[i - 1]
            trow = ndown[i]
            for j in range(jm + 1):
                if j + 1 <= jm_prev:
                    trow[j] = drow[j + 1] + urow[j + 1]
        for i in range(n, -1, -1):
            row = nup[i]
            above = nup[i + 1] if i + 1 <= n else None
            dabove = ndown[i + 1] if i + 1 <= n else None
            for j in range(jm + 1):
                acc = 0
                if j and above is not None:
                    prev = above[j - 1]
                    acc = dabove[j - 1] + prev
                    if prev:
                        if symbolic:
                            acc = acc + (
                                prev.shift(1) if isinstance(prev, VPoly) else _V * prev
                            )
                        else:
                            acc = acc + v * prev
                if above is not None:
                    acc = acc + above[j]
                if j:
                    acc = acc + row[j - 1]
                row[j] = acc
        down, up = ndown, nup
        if n >= 3:
            val = down[1][0] if jm >= 0 else 0
            if symbolic and not isinstance(val, VPoly):
                val = VPoly((val,)) if val else VPoly()
            out.append(val)
    return out


def t_from_walks(n: int, v=0):
    """t_n(v) recomputed from the SE-marked transversal walk DP (slow path).

    Sums, over all walk lengths, the weight of quadrant tandem walks from
    (0,1) to (1,0) carrying exactly n+2 SE steps.  Face-steps number at most
    n+1 because each consumes at least one unit of x, so lengths are bounded
    by 2n+3.
    """
    se_target = n + 2
    total = 0
    for length in range(se_target, 2 * n + 3 + 1):
        spec = ModelSpec("transversal", a=1, b=1, v=v, mark_se=True)
        marked = _weighted_count_marked(spec, length)
        if se_target in marked:
            total = total + marked[se_target]
    if v is None and not isinstance(total, VPoly):
        total = VPoly((total,)) if total else VPoly()
    return total


def series_relation_check(N: int) -> dict:
    """Cross-validate the tandem-walk model against the small-step model.

    Checks, with both sides computed by independent dynamic programs:

      * sum_b #{indicator walks of length n from (0,1) to (b,0)} equals the
        number of small-step excursions of length n-2, for 3 <= n <= N;
      * e_n equals the indicator-walk count of length n+3 from (0,1) to
        (1,0), for 2 <= n <= N;
      * the manual boundary case e_1 = 1 = (empty excursion count).

    Returns a summary dict; raises MismatchAt on any failure (which would
    mean an implementation bug).
    """
    if N < 3:
        raise ValueError("N must be >= 3")
    exc = excursion_counts(N - 1)  # exc[m] = excursions of length m
    e_seq = e_sequence(N)
    horizon = N + 3
    spec = ModelSpec("indicator", a=1, b=0)
    y0_rows = {}
    for k, layer in _sweep(spec, horizon):
        y0_rows[k] = [layer[x][0] for x in range(len(layer))]
    checked_q = 0
    for n in range(3, N + 1):
        lhs = sum(y0_rows[n])
        rhs = exc[n - 2]
        if lhs != rhs:
            raise MismatchAt("sum_b walks(n) = excursions(n-2)", n, lhs, rhs)
        checked_q += 1
    checked_shift = 0
    for n in range(2, N + 1):
        row = y0_rows[n + 3]
        lhs = e_seq[n - 1]
        rhs = row[1] if len(row) > 1 else 0
        if lhs != rhs:
            raise MismatchAt("e_n = walks(n+3, (0,1)->(1,0))", n, lhs, rhs)
        checked_shift += 1
    if e_seq[0] != 1 or exc[0] != 1:
        raise MismatchAt("e_1 = 1 = empty excursion", 1, e_seq[0], exc[0])
    return {
        "ok": True,
        "N": N,
        "q_identity_checked": checked_q,
        "shift_identity_checked": checked_shift,
    }
