"""Sparse bivariate polynomials over Q(i).

A ``BiPoly`` maps exponent pairs (i, j) for x^i * y^j to nonzero
``GaussianRational`` coefficients.  Canonical form stores no zero terms, so
two polynomials are equal iff their term maps are equal.

The gcd works in Q(i)[x][y]: contents and primitive parts are taken in
Q(i)[x] (where plain monic Euclid applies, the coefficients forming a field)
and the y-direction runs a primitive pseudo-remainder sequence.  The result
is normalised to leading coefficient 1 in graded lex order with x > y; that
order is used only for printing and normalisation, never for semantics.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator

from .errors import ZeroPolynomial
from .gaussian import GaussianRational, ONE, ZERO

Exponent = tuple[int, int]

# dense univariate polynomials over Q(i): list of coefficients, low to high
UniPoly = list[GaussianRational]


def _grlex_key(e: Exponent) -> tuple[int, int]:
    return (e[0] + e[1], e[0])


class BiPoly:
    """A polynomial in Q(i)[x, y], stored sparsely and treated as immutable."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[Exponent, GaussianRational] | None = None):
        cleaned: dict[Exponent, GaussianRational] = {}
        if terms:
            for (i, j), c in terms.items():
                c = GaussianRational.coerce(c)
                if c:
                    cleaned[(int(i), int(j))] = c
        self._terms = cleaned

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "BiPoly":
        return BiPoly()

    @staticmethod
    def const(c) -> "BiPoly":
        return BiPoly({(0, 0): GaussianRational.coerce(c)})

    @staticmethod
    def monomial(i: int, j: int, c=1) -> "BiPoly":
        return BiPoly({(i, j): GaussianRational.coerce(c)})

    @staticmethod
    def variable(name: str) -> "BiPoly":
        if name == "x":
            return BiPoly.monomial(1, 0)
        if name == "y":
            return BiPoly.monomial(0, 1)
        raise ValueError(f"unknown variable {name!r}")

    # -- inspection ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return all(e == (0, 0) for e in self._terms)

    def coeff(self, i: int, j: int) -> GaussianRational:
        return self._terms.get((i, j), ZERO)

    def terms(self) -> Iterator[tuple[Exponent, GaussianRational]]:
        return iter(self._terms.items())

    def num_terms(self) -> int:
        return len(self._terms)

    def value_at_origin(self) -> GaussianRational:
        return self._terms.get((0, 0), ZERO)

    def total_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("degree of the zero polynomial")
        return max(i + j for i, j in self._terms)

    def multiplicity(self) -> int:
        """Lowest total degree of a term (the multiplicity of the germ)."""
        if not self._terms:
            raise ZeroPolynomial("multiplicity of the zero polynomial")
        return min(i + j for i, j in self._terms)

    def tangent_cone(self) -> "BiPoly":
        """The homogeneous part of lowest total degree."""
        r = self.multiplicity()
        return BiPoly({e: c for e, c in self._terms.items() if e[0] + e[1] == r})

    def homogeneous_part(self, d: int) -> "BiPoly":
        return BiPoly({e: c for e, c in self._terms.items() if e[0] + e[1] == d})

    def truncate_total(self, bound: int) -> "BiPoly":
        """Drop all terms of total degree above ``bound``."""
        return _raw({e: c for e, c in self._terms.items() if e[0] + e[1] <= bound})

    def homogeneous_parts(self) -> list["BiPoly"]:
        if not self._terms:
            return []
        degrees = sorted({i + j for i, j in self._terms})
        return [self.homogeneous_part(d) for d in degrees]

    def x_degree(self) -> int:
        return max((i for i, _ in self._terms), default=0)

    def y_degree(self) -> int:
        return max((j for _, j in self._terms), default=0)

    def leading_term_grlex(self) -> tuple[Exponent, GaussianRational]:
        if not self._terms:
            raise ZeroPolynomial("leading term of the zero polynomial")
        e = max(self._terms, key=_grlex_key)
        return e, self._terms[e]

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        o = _coerce_poly(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in o._terms.items():
            s = out.get(e, ZERO) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return _raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce_poly(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce_poly(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __neg__(self):
        return _raw({e: -c for e, c in self._terms.items()})

    def __mul__(self, other):
        o = _coerce_poly(other)
        if o is None:
            return NotImplemented
        if not self._terms or not o._terms:
            return BiPoly.zero()
        out: dict[Exponent, GaussianRational] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in o._terms.items():
                e = (i1 + i2, j1 + j2)
                s = out.get(e, ZERO) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return _raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = BiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "BiPoly":
        c = GaussianRational.coerce(c)
        if not c:
            return BiPoly.zero()
        return _raw({e: v * c for e, v in self._terms.items()})

    def __eq__(self, other):
        o = _coerce_poly(other)
        return NotImplemented if o is None else self._terms == o._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- calculus ------------------------------------------------------------

    def partial(self, var: str) -> "BiPoly":
        """Formal partial derivative with respect to "x" or "y"."""
        out: dict[Exponent, GaussianRational] = {}
        if var == "x":
            for (i, j), c in self._terms.items():
                if i:
                    out[(i - 1, j)] = c * i
        elif var == "y":
            for (i, j), c in self._terms.items():
                if j:
                    out[(i, j - 1)] = c * j
        else:
            raise ValueError(f"unknown variable {var!r}")
        return _raw(out)

    # -- substitution ----------------------------------------------------------

    def compose_linear(self, a, b, c, d) -> "BiPoly":
        """Substitute x -> a*x + b*y, y -> c*x + d*y (exact expansion)."""
        X = BiPoly({(1, 0): GaussianRational.coerce(a), (0, 1): GaussianRational.coerce(b)})
        Y = BiPoly({(1, 0): GaussianRational.coerce(c), (0, 1): GaussianRational.coerce(d)})
        xpow: list[BiPoly] = [BiPoly.const(1)]
        ypow: list[BiPoly] = [BiPoly.const(1)]
        for _ in range(self.x_degree()):
            xpow.append(xpow[-1] * X)
        for _ in range(self.y_degree()):
            ypow.append(ypow[-1] * Y)
        out = BiPoly.zero()
        for (i, j), coeff in self._terms.items():
            out = out + (xpow[i] * ypow[j]).scale(coeff)
        return out

    def swap_xy(self) -> "BiPoly":
        return _raw({(j, i): c for (i, j), c in self._terms.items()})

    def restrict_y_zero(self) -> UniPoly:
        """f(x, 0) as a dense univariate polynomial in x."""
        deg = max((i for (i, j) in self._terms if j == 0), default=-1)
        out = [ZERO] * (deg + 1)
        for (i, j), c in self._terms.items():
            if j == 0:
                out[i] = c
        return u_norm(out)

    def restrict_x_zero(self) -> UniPoly:
        """f(0, y) as a dense univariate polynomial in y."""
        deg = max((j for (i, j) in self._terms if i == 0), default=-1)
        out = [ZERO] * (deg + 1)
        for (i, j), c in self._terms.items():
            if i == 0:
                out[j] = c
        return u_norm(out)

    # -- division ----------------------------------------------------------

    def div_exact(self, d: "BiPoly") -> "BiPoly | None":
        """Exact quotient self / d, or None when d does not divide self.

        Single-divisor reduction in graded lex order: if d | self the leading
        term of every intermediate remainder is divisible by lt(d), so the
        loop either completes with remainder zero or proves indivisibility.
        """
        if d.is_zero:
            raise ZeroPolynomial("division by the zero polynomial")
        if self.is_zero:
            return BiPoly.zero()
        (di, dj), dc = d.leading_term_grlex()
        rem = dict(self._terms)
        quot: dict[Exponent, GaussianRational] = {}
        while rem:
            e = max(rem, key=_grlex_key)
            qi, qj = e[0] - di, e[1] - dj
            if qi < 0 or qj < 0:
                return None
            qc = rem[e] / dc
            quot[(qi, qj)] = quot.get((qi, qj), ZERO) + qc
            for (i2, j2), c2 in d._terms.items():
                key = (qi + i2, qj + j2)
                s = rem.get(key, ZERO) - qc * c2
                if s:
                    rem[key] = s
                else:
                    rem.pop(key, None)
        return _raw({e: c for e, c in quot.items() if c})

    def divides(self, other: "BiPoly") -> bool:
        return other.div_exact(self) is not None

    def monic_grlex(self) -> "BiPoly":
        """Scale so the graded-lex leading coefficient is 1."""
        if self.is_zero:
            return self
        _, c = self.leading_term_grlex()
        return self.scale(ONE / c)

    # -- printing ----------------------------------------------------------

    def __str__(self):
        return poly_to_text(self)

    def __repr__(self):
        return f"BiPoly({poly_to_text(self)!r})" if self._terms else "BiPoly(0)"


def _raw(terms: dict[Exponent, GaussianRational]) -> BiPoly:
    p = BiPoly.__new__(BiPoly)
    p._terms = terms
    return p


def _coerce_poly(v) -> BiPoly | None:
    if isinstance(v, BiPoly):
        return v
    if isinstance(v, (int, Fraction, GaussianRational)):
        return BiPoly.const(v)
    return None


X = BiPoly.variable("x")
Y = BiPoly.variable("y")


# ---------------------------------------------------------------------------
# univariate helpers over Q(i)
# ---------------------------------------------------------------------------

def u_norm(p: UniPoly) -> UniPoly:
    while p and not p[-1]:
        p.pop()
    return p


def u_deg(p: UniPoly) -> int:
    return len(p) - 1


def u_ord(p: UniPoly) -> int:
    """Index of the first nonzero coefficient; p must be nonzero."""
    for k, c in enumerate(p):
        if c:
            return k
    raise ZeroPolynomial("order of the zero polynomial")


def u_add(a: UniPoly, b: UniPoly) -> UniPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, c in enumerate(b):
        out[k] = out[k] + c
    return u_norm(out)


def u_scale(a: UniPoly, c: GaussianRational) -> UniPoly:
    if not c:
        return []
    return [v * c for v in a]


def u_mul(a: UniPoly, b: UniPoly) -> UniPoly:
    if not a or not b:
        return []
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            if cb:
                out[i + j] = out[i + j] + ca * cb
    return u_norm(out)


def u_divmod(a: UniPoly, b: UniPoly) -> tuple[UniPoly, UniPoly]:
    b = u_norm(list(b))
    if not b:
        raise ZeroPolynomial("univariate division by zero")
    rem = u_norm(list(a))
    quot = [ZERO] * max(len(rem) - len(b) + 1, 0)
    inv = ONE / b[-1]
    while len(rem) >= len(b):
        c = rem[-1]
        if not c:
            rem.pop()
            continue
        d = len(rem) - len(b)
        qc = c * inv
        quot[d] = qc
        for k, bc in enumerate(b):
            rem[d + k] = rem[d + k] - qc * bc
        rem.pop()
    return u_norm(quot), u_norm(rem)


def _round_div(p: int, q: int) -> int:
    """Nearest integer to p/q for q > 0."""
    return (2 * p + q) // (2 * q)


def _zi_gcd_raw(ar: int, ai: int, br: int, bi: int) -> tuple[int, int]:
    """Gcd of Gaussian integers by Euclid with nearest-integer quotients."""
    while br or bi:
        n = br * br + bi * bi
        qr = _round_div(ar * br + ai * bi, n)
        qi = _round_div(ai * br - ar * bi, n)
        rr = ar - (qr * br - qi * bi)
        ri = ai - (qr * bi + qi * br)
        ar, ai, br, bi = br, bi, rr, ri
    return ar, ai


def _zi_gcd(u: GaussianRational, v: GaussianRational) -> GaussianRational:
    r, i = _zi_gcd_raw(u.re.numerator, u.im.numerator, v.re.numerator, v.im.numerator)
    return GaussianRational(r, i)


def _u_int_primitive(p: UniPoly) -> UniPoly:
    """Scale p into a primitive polynomial over the Gaussian integers."""
    if not p:
        return []
    m = 1
    for c in p:
        for d in (c.re.denominator, c.im.denominator):
            m = m * d // _int_gcd(m, d)
    scaled = [c * m for c in p]
    cont = scaled[-1]
    for c in scaled:
        if cont.norm() == 1:
            break
        if c:
            cont = _zi_gcd(cont, c)
    if cont and cont != ONE:
        scaled = [c / cont for c in scaled]
    return scaled


def _int_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a if a else 1


def int_primitive(p: BiPoly) -> BiPoly:
    """Scale p by a nonzero constant so its coefficients are coprime Gaussian
    integers.  Constants are local units, so intersection numbers and shared
    components are unaffected.
    """
    if p.is_zero:
        return p
    m = 1
    for _, c in p.terms():
        for d in (c.re.denominator, c.im.denominator):
            m = m * d // _int_gcd(m, d)
    cont = None
    for _, c in p.terms():
        v = c * m
        cont = v if cont is None else _zi_gcd(cont, v)
        if cont.norm() == 1:
            break
    scale = GaussianRational(m) / cont
    return p.scale(scale)


def _u_prem(a: UniPoly, b: UniPoly) -> UniPoly:
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b; no division needed."""
    rem = list(a)
    lcb = b[-1]
    steps = len(a) - len(b) + 1
    while True:
        rem = u_norm(rem)
        if len(rem) < len(b):
            break
        d = len(rem) - len(b)
        lcr = rem[-1]
        rem = [c * lcb for c in rem]
        for k, bc in enumerate(b):
            rem[d + k] = rem[d + k] - lcr * bc
        steps -= 1
    for _ in range(steps):
        rem = [c * lcb for c in rem]
    return u_norm(rem)


def u_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd in Q(i)[x].

    Runs a primitive pseudo-remainder sequence over the Gaussian integers;
    plain monic Euclid over Q(i) suffers catastrophic coefficient growth
    already around degree 40.
    """
    a, b = _u_int_primitive(a), _u_int_primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _u_prem(a, b)
        a, b = b, _u_int_primitive(r)
    if not a:
        return []
    inv = ONE / a[-1]
    return [c * inv for c in a]


def u_sub(a: UniPoly, b: UniPoly) -> UniPoly:
    return u_add(a, u_scale(b, GaussianRational(-1)))


# integer-pair univariate polynomials over Z[i]: list[(re, im)], low to high.
# Bareiss on Fraction-backed coefficients wastes most of its time in gcd
# normalisation; raw int pairs are an order of magnitude faster.

IntUni = list  # list[tuple[int, int]]


def _iu_norm(p: IntUni) -> IntUni:
    while p and p[-1] == (0, 0):
        p.pop()
    return p


def _iu_mul(a: IntUni, b: IntUni) -> IntUni:
    if not a or not b:
        return []
    out = [(0, 0)] * (len(a) + len(b) - 1)
    for i, (ar, ai) in enumerate(a):
        if not (ar or ai):
            continue
        for j, (br, bi) in enumerate(b):
            if br or bi:
                cr, ci = out[i + j]
                out[i + j] = (cr + ar * br - ai * bi, ci + ar * bi + ai * br)
    return _iu_norm(out)


def _iu_sub(a: IntUni, b: IntUni) -> IntUni:
    n = max(len(a), len(b))
    out = []
    for k in range(n):
        ar, ai = a[k] if k < len(a) else (0, 0)
        br, bi = b[k] if k < len(b) else (0, 0)
        out.append((ar - br, ai - bi))
    return _iu_norm(out)


def _zi_div_exact(ar: int, ai: int, br: int, bi: int) -> tuple[int, int]:
    n = br * br + bi * bi
    pr, pi = ar * br + ai * bi, ai * br - ar * bi
    qr, rr = divmod(pr, n)
    qi, ri = divmod(pi, n)
    if rr or ri:
        raise ArithmeticError("inexact division in Z[i]")
    return qr, qi


def _iu_div_exact(a: IntUni, b: IntUni) -> IntUni:
    """Exact quotient in Z[i][x]; raises when the division is not exact."""
    if not b:
        raise ZeroPolynomial("integer univariate division by zero")
    rem = list(a)
    if not rem:
        return []
    if len(rem) < len(b):
        raise ArithmeticError("inexact division in Z[i][x]")
    quot = [(0, 0)] * (len(rem) - len(b) + 1)
    br, bi = b[-1]
    for top in range(len(rem) - 1, len(b) - 2, -1):
        cr, ci = rem[top]
        if not (cr or ci):
            continue
        d = top - (len(b) - 1)
        qr, qi = _zi_div_exact(cr, ci, br, bi)
        quot[d] = (qr, qi)
        for k, (vr, vi) in enumerate(b):
            wr, wi = rem[d + k]
            rem[d + k] = (wr - (qr * vr - qi * vi), wi - (qr * vi + qi * vr))
    if any(c != (0, 0) for c in rem[: len(b) - 1]):
        raise ArithmeticError("inexact division in Z[i][x]")
    return _iu_norm(quot)


def _int_bareiss(mat: list[list[IntUni]]) -> IntUni:
    """Fraction-free determinant of a matrix over Z[i][x] (Bareiss)."""
    n = len(mat)
    m = [row[:] for row in mat]
    sign = 1
    prev: IntUni = [(1, 0)]
    for k in range(n - 1):
        if not m[k][k]:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return []
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = _iu_sub(_iu_mul(m[i][j], m[k][k]), _iu_mul(m[i][k], m[k][j]))
                m[i][j] = _iu_div_exact(num, prev) if num else []
            m[i][k] = []
        prev = m[k][k]
    det = m[n - 1][n - 1]
    if sign == -1:
        det = [(-r, -i) for (r, i) in det]
    return det


def _to_int_yrec(p: BiPoly) -> list[IntUni]:
    """y-dense integer-pair representation of a denominator-cleared multiple of p."""
    m = 1
    for _, c in p.terms():
        for d in (c.re.denominator, c.im.denominator):
            m = m * d // _int_gcd(m, d)
    cols: list[IntUni] = [[] for _ in range(p.y_degree() + 1)]
    for (i, j), c in p.terms():
        col = cols[j]
        if len(col) <= i:
            col.extend([(0, 0)] * (i + 1 - len(col)))
        v = c * m
        col[i] = (v.re.numerator, v.im.numerator)
    return [_iu_norm(col) for col in cols]


def resultant_y(f: BiPoly, g: BiPoly) -> UniPoly:
    """Res_y(f, g) as a polynomial in x, up to a nonzero constant factor.

    Computed as a Bareiss determinant of the Sylvester matrix over Z[i][x]
    after clearing denominators (which scales the resultant by a constant;
    the roots and their multiplicities, in particular the order at x = 0,
    are unaffected).
    """
    A, B = _to_int_yrec(f), _to_int_yrec(g)
    n, m = len(A) - 1, len(B) - 1
    if n < 0 or m < 0:
        raise ZeroPolynomial("resultant with the zero polynomial")

    def back(p: IntUni) -> UniPoly:
        return [GaussianRational(r, i) for (r, i) in p]

    if n == 0 and m == 0:
        return [ONE]
    if n == 0:
        base: IntUni = [(1, 0)]
        for _ in range(m):
            base = _iu_mul(base, A[0])
        return back(base)
    if m == 0:
        base = [(1, 0)]
        for _ in range(n):
            base = _iu_mul(base, B[0])
        return back(base)
    size = n + m
    rows: list[list[IntUni]] = []
    rev_a = A[::-1]
    rev_b = B[::-1]
    for k in range(m):
        rows.append([[] for _ in range(k)] + rev_a + [[] for _ in range(size - n - 1 - k)])
    for k in range(n):
        rows.append([[] for _ in range(k)] + rev_b + [[] for _ in range(size - m - 1 - k)])
    return back(_int_bareiss(rows))


# ---------------------------------------------------------------------------
# gcd in Q(i)[x, y]
# ---------------------------------------------------------------------------

def _to_yrec(p: BiPoly) -> list[UniPoly]:
    """Represent p as a dense list of x-polynomials indexed by the y-exponent."""
    out: list[UniPoly] = [[] for _ in range(p.y_degree() + 1)]
    for (i, j), c in p.terms():
        col = out[j]
        if len(col) <= i:
            col.extend([ZERO] * (i + 1 - len(col)))
        col[i] = c
    return [u_norm(col) for col in out]


def _from_yrec(cols: list[UniPoly]) -> BiPoly:
    terms: dict[Exponent, GaussianRational] = {}
    for j, col in enumerate(cols):
        for i, c in enumerate(col):
            if c:
                terms[(i, j)] = c
    return BiPoly(terms)


def _yrec_norm(cols: list[UniPoly]) -> list[UniPoly]:
    while cols and not cols[-1]:
        cols.pop()
    return cols


def _yrec_content(cols: list[UniPoly]) -> UniPoly:
    cont: UniPoly = []
    for col in cols:
        if col:
            cont = u_gcd(cont, col)
            if u_deg(cont) == 0:
                break
    return cont


def _yrec_div_content(cols: list[UniPoly], cont: UniPoly) -> list[UniPoly]:
    if u_deg(cont) == 0:
        inv = ONE / cont[0]
        return [u_scale(col, inv) for col in cols]
    out = []
    for col in cols:
        if not col:
            out.append([])
            continue
        q, r = u_divmod(col, cont)
        if r:
            raise ArithmeticError("content does not divide a coefficient")
        out.append(q)
    return out


def _yrec_prem(a: list[UniPoly], b: list[UniPoly]) -> list[UniPoly]:
    """Pseudo-remainder of a by b with respect to y, coefficients in Q(i)[x]."""
    da, db = len(a) - 1, len(b) - 1
    lcb = b[-1]
    rem = [list(col) for col in a]
    steps = da - db + 1
    while True:
        rem = _yrec_norm(rem)
        dr = len(rem) - 1
        if dr < db or not rem:
            break
        lcr = rem[-1]
        shift = dr - db
        # rem := lcb * rem - lcr * y^shift * b
        new = [u_mul(col, lcb) for col in rem]
        for k, col in enumerate(b):
            t = u_mul(col, lcr)
            idx = k + shift
            new[idx] = u_add(new[idx], u_scale(t, GaussianRational(-1)))
        rem = _yrec_norm(new)
        steps -= 1
    # pad with remaining lcb powers so the scaling equals lcb^(da-db+1)
    for _ in range(steps):
        rem = [u_mul(col, lcb) for col in rem]
    return _yrec_norm(rem)


def poly_gcd(f: BiPoly, g: BiPoly) -> BiPoly:
    """Greatest common divisor in Q(i)[x, y].

    Primitive pseudo-remainder sequence in the y-direction, contents handled
    in Q(i)[x] by Euclid.  The result is primitive with graded-lex leading
    coefficient 1; gcd is constant (1) iff f and g share no component.
    """
    if f.is_zero and g.is_zero:
        raise ZeroPolynomial("gcd(0, 0)")
    if f.is_zero:
        return g.monic_grlex()
    if g.is_zero:
        return f.monic_grlex()
    if f.y_degree() == 0 and g.y_degree() == 0:
        c = u_gcd(f.restrict_y_zero(), g.restrict_y_zero())
        return _from_yrec([c]).monic_grlex()

    A, B = _to_yrec(f), _to_yrec(g)
    if len(A) < len(B):
        A, B = B, A
    cont_a, cont_b = _yrec_content(A), _yrec_content(B)
    cont = u_gcd(cont_a, cont_b)
    A = _yrec_div_content(A, cont_a)
    B = _yrec_div_content(B, cont_b)

    while True:
        if len(B) == 1:
            # primitive and constant in y: primitive parts are coprime
            pp: list[UniPoly] = [[ONE]]
            break
        R = _yrec_prem(A, B)
        if not R:
            pp = B
            break
        A, B = B, _yrec_div_content(R, _yrec_content(R))

    result = _from_yrec([u_mul(col, cont) for col in pp])
    return result.monic_grlex()


def poly_is_reduced(f: BiPoly) -> bool:
    """True iff f is squarefree: gcd(f, f_x, f_y) is constant (char 0)."""
    if f.is_zero:
        raise ZeroPolynomial("squarefreeness of the zero polynomial")
    g = poly_gcd(f, f.partial("x"))
    if g.is_constant:
        return True
    g = poly_gcd(g, f.partial("y"))
    return g.is_constant


def line_factor(f: BiPoly) -> BiPoly | None:
    """Largest factor of f cutting out lines through the origin, or None.

    f vanishes on a line through 0 iff every homogeneous part does, i.e. iff
    the gcd of the homogeneous parts is nonconstant (over C it is then a
    product of linear forms, each a line germ contained in the curve).
    """
    parts = f.homogeneous_parts()
    if not parts:
        return None
    g = parts[0]
    for p in parts[1:]:
        if g.is_constant:
            break
        g = poly_gcd(g, p)
    if g.is_constant:
        return None
    return g.monic_grlex()


# ---------------------------------------------------------------------------
# canonical text form
# ---------------------------------------------------------------------------

def _fraction_literal(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"({q.numerator}/{q.denominator})"


def coefficient_text(c: GaussianRational) -> str:
    """Render a Q(i) coefficient as a standalone grammar factor (sign included)."""
    if not c.im:
        return _fraction_literal(c.re)
    if not c.re:
        if c.im == 1:
            return "i"
        if c.im == -1:
            return "-1*i"
        return f"{_fraction_literal(c.im)}*i"
    im_mag = abs(c.im)
    im_txt = "i" if im_mag == 1 else f"{_fraction_literal(im_mag)}*i"
    sign = "+" if c.im > 0 else "-"
    return f"({_fraction_literal(c.re)} {sign} {im_txt})"


def _monomial_text(i: int, j: int, var1: str = "x", var2: str = "y") -> str:
    parts = []
    if i == 1:
        parts.append(var1)
    elif i > 1:
        parts.append(f"{var1}^{i}")
    if j == 1:
        parts.append(var2)
    elif j > 1:
        parts.append(f"{var2}^{j}")
    return "*".join(parts)


def _is_negative_led(c: GaussianRational) -> bool:
    if c.re:
        return c.re < 0
    return c.im < 0


def poly_to_text(p: BiPoly) -> str:
    """Canonical text form, graded lex descending with x > y.

    Round-trips exactly through ``parse_poly``.  The grammar has no unary
    minus, so a leading negative coefficient is folded into its literal
    (e.g. ``-1*x^3``, ``(-1/2)*x``).
    """
    if p.is_zero:
        return "0"
    items = sorted(p.terms(), key=lambda t: _grlex_key(t[0]), reverse=True)
    chunks: list[str] = []
    for (i, j), c in items:
        first = not chunks
        mono = _monomial_text(i, j)
        if first:
            body_coeff = c
            prefix = ""
        else:
            neg = _is_negative_led(c)
            prefix = " - " if neg else " + "
            body_coeff = -c if neg else c
        if not mono:
            body = coefficient_text(body_coeff)
        elif body_coeff == ONE:
            body = mono
        elif body_coeff == GaussianRational(-1):
            body = f"-1*{mono}"
        else:
            body = f"{coefficient_text(body_coeff)}*{mono}"
        chunks.append(prefix + body)
    return "".join(chunks)
