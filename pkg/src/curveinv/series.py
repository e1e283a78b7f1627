"""Truncated univariate power series over Q(i), and parametrized plane curves.

A ``TruncSeries`` stores coefficients for exponents 0..len-1 together with a
precision ``prec``:

* ``prec = None`` means the series is an exact polynomial -- every
  coefficient beyond the stored ones is identically zero.  Orders computed
  from exact series are structural facts, so "vanishes identically" can be
  proved rather than guessed.
* ``prec = N`` means coefficients are only known for exponents < N.  A series
  that is zero up to its precision is *not* known to be the zero series;
  order extraction then raises ``TruncationInsufficient`` and drivers retry
  with a doubled window (up to ``MAX_PREC``) before failing loudly.

Arithmetic propagates precision conservatively: sums keep the minimum
precision, products shift each operand's precision by the other's order, and
a quotient's precision drops by the divisor's order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .errors import IsotropicTangent, NotASeries, TruncationInsufficient, ZeroPolynomial
from .extnat import INFINITY, ExtendedNat
from .gaussian import GaussianRational, ONE, ZERO
from .poly import BiPoly

DEFAULT_PREC = 64
MAX_PREC = 1024


def _trim(coeffs: list[GaussianRational]) -> tuple[GaussianRational, ...]:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class TruncSeries:
    """A power series in t known exactly below its precision."""

    __slots__ = ("coeffs", "prec")

    def __init__(self, coeffs: Iterable = (), prec: int | None = None):
        cs = [GaussianRational.coerce(c) for c in coeffs]
        if prec is not None:
            if prec < 0:
                raise ValueError("precision must be nonnegative")
            cs = cs[:prec]
        object.__setattr__(self, "coeffs", _trim(cs))
        object.__setattr__(self, "prec", prec)

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(prec: int | None = None) -> "TruncSeries":
        return TruncSeries((), prec)

    @staticmethod
    def const(c, prec: int | None = None) -> "TruncSeries":
        return TruncSeries((GaussianRational.coerce(c),), prec)

    @staticmethod
    def monomial(k: int, c=1, prec: int | None = None) -> "TruncSeries":
        cs = [ZERO] * k + [GaussianRational.coerce(c)]
        return TruncSeries(cs, prec)

    @staticmethod
    def from_pairs(pairs: dict[int, object], prec: int | None = None) -> "TruncSeries":
        if not pairs:
            return TruncSeries((), prec)
        top = max(pairs)
        cs = [ZERO] * (top + 1)
        for k, c in pairs.items():
            cs[k] = GaussianRational.coerce(c)
        return TruncSeries(cs, prec)

    # -- inspection ----------------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return self.prec is None

    @property
    def is_structurally_zero(self) -> bool:
        return self.prec is None and not self.coeffs

    @property
    def is_zero_up_to_prec(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> GaussianRational:
        if self.prec is not None and k >= self.prec:
            raise TruncationInsufficient(f"coefficient {k} beyond precision", self.prec)
        return self.coeffs[k] if k < len(self.coeffs) else ZERO

    def _order_lb(self) -> int | None:
        """First nonzero index; prec when zero-up-to-window; None for exact zero."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return self.prec

    def order(self) -> int:
        """Index of the first nonzero coefficient.

        Raises TruncationInsufficient when the series is zero up to its
        precision (including the exact zero series, which has no finite
        order; callers distinguish that case with ``is_structurally_zero``).
        """
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        raise TruncationInsufficient("series is zero up to truncation", self.prec)

    def order_ext(self) -> ExtendedNat:
        """Order as an extended natural: INFINITY only for the exact zero series."""
        if self.is_structurally_zero:
            return INFINITY
        return ExtendedNat(self.order())

    def lead_coeff(self) -> GaussianRational:
        return self.coeffs[self.order()]

    def degree_bound(self) -> int:
        """Largest stored exponent (meaningful mainly for exact series)."""
        return len(self.coeffs) - 1 if self.coeffs else -1

    # -- arithmetic ----------------------------------------------------------

    def _cap(self, other: "TruncSeries") -> int | None:
        if self.prec is None:
            return other.prec
        if other.prec is None:
            return self.prec
        return min(self.prec, other.prec)

    def __add__(self, other):
        o = _coerce_series(other)
        if o is None:
            return NotImplemented
        prec = self._cap(o)
        n = max(len(self.coeffs), len(o.coeffs))
        cs = [self.coeffs[k] if k < len(self.coeffs) else ZERO for k in range(n)]
        for k in range(len(o.coeffs)):
            cs[k] = cs[k] + o.coeffs[k]
        return TruncSeries(cs, prec)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce_series(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce_series(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __neg__(self):
        out = TruncSeries.__new__(TruncSeries)
        object.__setattr__(out, "coeffs", tuple(-c for c in self.coeffs))
        object.__setattr__(out, "prec", self.prec)
        return out

    def __mul__(self, other):
        o = _coerce_series(other)
        if o is None:
            return NotImplemented
        if self.is_structurally_zero or o.is_structurally_zero:
            return TruncSeries.zero()
        # unknown tail of one factor enters at its prec plus the other's order
        caps = []
        if self.prec is not None:
            lb = o._order_lb()
            caps.append(self.prec + (lb if lb is not None else 0))
        if o.prec is not None:
            lb = self._order_lb()
            caps.append(o.prec + (lb if lb is not None else 0))
        prec = min(caps) if caps else None
        if not self.coeffs or not o.coeffs:
            return TruncSeries.zero(prec)
        n = len(self.coeffs) + len(o.coeffs) - 1
        if prec is not None:
            n = min(n, prec)
        cs = [ZERO] * n
        for i, a in enumerate(self.coeffs):
            if not a or i >= n:
                continue
            top = min(len(o.coeffs), n - i)
            for j in range(top):
                b = o.coeffs[j]
                if b:
                    cs[i + j] = cs[i + j] + a * b
        return TruncSeries(cs, prec)

    __rmul__ = __mul__

    def scale(self, c) -> "TruncSeries":
        c = GaussianRational.coerce(c)
        if not c:
            return TruncSeries.zero(self.prec)
        return TruncSeries([v * c for v in self.coeffs], self.prec)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = TruncSeries.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divide(self, other: "TruncSeries", prec: int | None = None) -> "TruncSeries":
        """Quotient self/other.

        Requires ord(self) >= ord(other) (otherwise NotASeries).  When both
        operands are exact and the division is exact in Q(i)[t], the result
        is exact; otherwise it is a window of width min(prec) - ord(other),
        using ``prec`` (default DEFAULT_PREC) when both operands are exact.
        """
        o = _coerce_series(other)
        if o is None:
            raise TypeError("divisor is not a series")
        if o.is_structurally_zero:
            raise ZeroDivisionError("division by the zero series")
        if o.is_zero_up_to_prec:
            raise TruncationInsufficient("divisor is zero up to truncation", o.prec)
        ob = o.order()
        if self.is_structurally_zero:
            return TruncSeries.zero()
        if self.is_zero_up_to_prec:
            return TruncSeries.zero(max(self.prec - ob, 0))  # type: ignore[operator]
        oa = self.order()
        if oa < ob:
            raise NotASeries(f"quotient would start at t^{oa - ob}")
        if self.prec is None and o.prec is None:
            q = _poly_div_exact(list(self.coeffs), list(o.coeffs))
            if q is not None:
                return TruncSeries(q, None)
            window = (prec if prec is not None else DEFAULT_PREC)
        else:
            window = min(p for p in (self.prec, o.prec) if p is not None)
            if prec is not None:
                window = min(window, prec + ob)
        out_prec = max(window - ob, 0)
        # long division of the shifted series: both numerator and denominator
        # start at exponent 0 after dropping t^ob
        a = [self.coeffs[k + ob] if k + ob < len(self.coeffs) else ZERO for k in range(out_prec)]
        b = [o.coeffs[k + ob] if k + ob < len(o.coeffs) else ZERO for k in range(out_prec)]
        inv = ONE / o.coeffs[ob]
        q = [ZERO] * out_prec
        for k in range(out_prec):
            acc = a[k]
            for m in range(k):
                if q[m] and b[k - m]:
                    acc = acc - q[m] * b[k - m]
            q[k] = acc * inv
        return TruncSeries(q, out_prec)

    def derivative(self) -> "TruncSeries":
        """Termwise derivative; a finite precision drops by one."""
        cs = [self.coeffs[k] * k for k in range(1, len(self.coeffs))]
        prec = None if self.prec is None else max(self.prec - 1, 0)
        return TruncSeries(cs, prec)

    def truncate(self, prec: int) -> "TruncSeries":
        new = prec if self.prec is None else min(self.prec, prec)
        return TruncSeries(list(self.coeffs), new)

    # -- comparison / printing ------------------------------------------------

    def __eq__(self, other):
        o = _coerce_series(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs and self.prec == o.prec

    def __hash__(self):
        return hash((self.coeffs, self.prec))

    def agrees_with(self, other: "TruncSeries") -> bool:
        """Equality of all coefficients on the common known window."""
        cap = self._cap(other)
        top = max(len(self.coeffs), len(other.coeffs))
        if cap is not None:
            top = min(top, cap)
        for k in range(top):
            a = self.coeffs[k] if k < len(self.coeffs) else ZERO
            b = other.coeffs[k] if k < len(other.coeffs) else ZERO
            if a != b:
                return False
        return True

    def __str__(self):
        return series_to_text(self)

    def __repr__(self):
        tail = "" if self.prec is None else f" + O(t^{self.prec})"
        return f"TruncSeries({series_to_text(self)!r}{tail})"


def _coerce_series(v) -> TruncSeries | None:
    if isinstance(v, TruncSeries):
        return v
    if isinstance(v, (int, Fraction, GaussianRational)):
        return TruncSeries.const(v)
    return None


def _poly_div_exact(a: list[GaussianRational], b: list[GaussianRational]) -> list[GaussianRational] | None:
    """Exact quotient in Q(i)[t], or None when b does not divide a."""
    if not a:
        return []
    if len(a) < len(b):
        return None
    rem = list(a)
    q = [ZERO] * (len(a) - len(b) + 1)
    inv = ONE / b[-1]
    for top in range(len(a) - 1, len(b) - 2, -1):
        c = rem[top]
        if not c:
            continue
        d = top - (len(b) - 1)
        qc = c * inv
        q[d] = qc
        for k, bc in enumerate(b):
            rem[d + k] = rem[d + k] - qc * bc
    if any(rem):
        return None
    return q


# ---------------------------------------------------------------------------
# parametrized curves
# ---------------------------------------------------------------------------

class ParamCurve:
    """A germ of a parametrized plane curve t -> (x(t), y(t)) at the origin."""

    __slots__ = ("x", "y")

    def __init__(self, x: TruncSeries, y: TruncSeries):
        if (x.coeffs and x.coeffs[0]) or (y.coeffs and y.coeffs[0]):
            raise ValueError("parametrization must pass through the origin")
        if x.is_zero_up_to_prec and y.is_zero_up_to_prec:
            raise ValueError("both components vanish up to truncation")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    def __setattr__(self, name, value):
        raise AttributeError("ParamCurve is immutable")

    @staticmethod
    def from_pairs(x_pairs: dict[int, object], y_pairs: dict[int, object],
                   prec: int | None = None) -> "ParamCurve":
        return ParamCurve(TruncSeries.from_pairs(x_pairs, prec),
                          TruncSeries.from_pairs(y_pairs, prec))

    @property
    def is_exact(self) -> bool:
        return self.x.is_exact and self.y.is_exact

    @property
    def prec(self) -> int | None:
        return self.x._cap(self.y)

    def truncate(self, prec: int) -> "ParamCurve":
        return ParamCurve(self.x.truncate(prec), self.y.truncate(prec))

    def support_exponents(self) -> list[int]:
        out = [k for k, c in enumerate(self.x.coeffs) if c]
        out += [k for k, c in enumerate(self.y.coeffs) if c]
        return sorted(set(out))

    def __eq__(self, other):
        if not isinstance(other, ParamCurve):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.x, self.y))

    def __repr__(self):
        return f"ParamCurve(x={series_to_text(self.x)!r}, y={series_to_text(self.y)!r})"


def eval_on_curve(g: BiPoly, curve: ParamCurve, prec: int | None = None) -> TruncSeries:
    """Exact substitution g(x(t), y(t)).

    With ``prec`` set, all intermediate products are truncated to that
    window; otherwise the curve's own precision governs (exact curves yield
    the exact polynomial composite).
    """
    sx, sy = curve.x, curve.y
    if prec is not None:
        sx, sy = sx.truncate(prec), sy.truncate(prec)
    xpow: list[TruncSeries] = [TruncSeries.const(1)]
    ypow: list[TruncSeries] = [TruncSeries.const(1)]
    for _ in range(g.x_degree()):
        xpow.append(xpow[-1] * sx)
    for _ in range(g.y_degree()):
        ypow.append(ypow[-1] * sy)
    total = TruncSeries.zero(curve.prec if prec is None else prec)
    for (i, j), c in g.terms():
        total = total + (xpow[i] * ypow[j]).scale(c)
    return total


# ---------------------------------------------------------------------------
# normalization by similarities
# ---------------------------------------------------------------------------

def apply_rotation(curve: ParamCurve, a: GaussianRational, b: GaussianRational) -> ParamCurve:
    """The similarity (x, y) -> (a*x + b*y, -b*x + a*y); requires a^2+b^2 != 0."""
    if not (a * a + b * b):
        raise IsotropicTangent("rotation with a^2 + b^2 = 0 is not invertible")
    new_x = curve.x.scale(a) + curve.y.scale(b)
    new_y = curve.x.scale(-b) + curve.y.scale(a)
    return ParamCurve(new_x, new_y)


def _clear_denominators(a: GaussianRational, b: GaussianRational) -> tuple[GaussianRational, GaussianRational]:
    denoms = [a.re.denominator, a.im.denominator, b.re.denominator, b.im.denominator]
    m = 1
    for d in denoms:
        m = m * d // _gcd_int(m, d)
    return a * m, b * m


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a if a else 1


def normalize_param(curve: ParamCurve) -> tuple[ParamCurve, list[tuple[GaussianRational, GaussianRational]]]:
    """Rotate the curve so ord(x) is finite and strictly below ord(y).

    Only members (x,y) -> (a*x+b*y, -b*x+a*y) of the similarity group are
    used, so vertex-type invariants are preserved.  Returns the rotated curve
    and the list of (a, b) pairs applied, in order.  A curve whose tangent
    direction is isotropic (a^2 + b^2 = 0, e.g. tangent to x + iy = 0)
    cannot be separated by similarities and raises IsotropicTangent.
    """
    transforms: list[tuple[GaussianRational, GaussianRational]] = []
    cur = curve
    for _ in range(3):
        x_zero = cur.x.is_zero_up_to_prec
        y_zero = cur.y.is_zero_up_to_prec
        if x_zero and not y_zero:
            rot = (ZERO, ONE)
            cur = apply_rotation(cur, *rot)
            transforms.append(rot)
            continue
        if y_zero:
            return cur, transforms
        ox, oy = cur.x.order(), cur.y.order()
        if ox < oy:
            return cur, transforms
        if ox > oy:
            rot = (ZERO, ONE)
            cur = apply_rotation(cur, *rot)
            transforms.append(rot)
            return cur, transforms
        p, q = cur.x.lead_coeff(), cur.y.lead_coeff()
        if not (p * p + q * q):
            raise IsotropicTangent("tangent direction satisfies a^2 + b^2 = 0")
        rot = _clear_denominators(q, -p)
        cur = apply_rotation(cur, *rot)
        transforms.append(rot)
    return cur, transforms


# ---------------------------------------------------------------------------
# canonical text form
# ---------------------------------------------------------------------------

def series_to_text(s: TruncSeries) -> str:
    """Canonical text in the variable t, ascending exponents."""
    from .poly import coefficient_text, GaussianRational as _G  # reuse the literal renderer

    if not s.coeffs:
        return "0"
    chunks: list[str] = []
    for k, c in enumerate(s.coeffs):
        if not c:
            continue
        first = not chunks
        if first:
            body_coeff = c
            prefix = ""
        else:
            neg = (c.re < 0) if c.re else (c.im < 0)
            prefix = " - " if neg else " + "
            body_coeff = -c if neg else c
        mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        if not mono:
            body = coefficient_text(body_coeff)
        elif body_coeff == ONE:
            body = mono
        elif body_coeff == GaussianRational.coerce(-1):
            body = f"-1*{mono}"
        else:
            body = f"{coefficient_text(body_coeff)}*{mono}"
        chunks.append(prefix + body)
    return "".join(chunks)
