"""Exact coefficient arithmetic: sparse integer polynomials in (q, u) and
the rational function field built on them.

PolyQU stores a polynomial in Z[q, u] as a sparse map (qdeg, udeg) -> int
with no zero entries.  RatQU is a fraction num/den of two PolyQU values
kept in a canonical reduced form (gcd 1 including integer content, leading
coefficient of the denominator positive under the lexicographic order on
(qdeg, udeg)), so equal values compare structurally equal.

Everything is immutable and safe to share; no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd

Monomial = tuple[int, int]


class PolyQU:
    """Sparse bivariate polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=()):
        merged: dict[Monomial, int] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for (i, j), c in items:
            if c:
                acc = merged.get((i, j), 0) + c
                if acc:
                    merged[(i, j)] = acc
                elif (i, j) in merged:
                    del merged[(i, j)]
        self.terms = merged
        self._hash = None

    # construction helpers

    @staticmethod
    def const(n: int) -> "PolyQU":
        return PolyQU({(0, 0): n} if n else {})

    @staticmethod
    def monomial(coeff: int, qdeg: int, udeg: int) -> "PolyQU":
        if qdeg < 0 or udeg < 0:
            raise ValueError("negative exponent")
        return PolyQU({(qdeg, udeg): coeff} if coeff else {})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyQU) and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __neg__(self) -> "PolyQU":
        return PolyQU({m: -c for m, c in self.terms.items()})

    def __add__(self, other: "PolyQU") -> "PolyQU":
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for m, c in other.terms.items():
            acc = out.get(m, 0) + c
            if acc:
                out[m] = acc
            elif m in out:
                del out[m]
        p = PolyQU.__new__(PolyQU)
        p.terms = out
        p._hash = None
        return p

    def __sub__(self, other: "PolyQU") -> "PolyQU":
        return self + (-other)

    def __mul__(self, other: "PolyQU") -> "PolyQU":
        if not self.terms or not other.terms:
            return _ZERO
        if self.terms == _ONE_TERMS:
            return other
        if other.terms == _ONE_TERMS:
            return self
        out: dict[Monomial, int] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                m = (i1 + i2, j1 + j2)
                acc = out.get(m, 0) + c1 * c2
                if acc:
                    out[m] = acc
                elif m in out:
                    del out[m]
        p = PolyQU.__new__(PolyQU)
        p.terms = out
        p._hash = None
        return p

    def __pow__(self, e: int) -> "PolyQU":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def scale(self, n: int) -> "PolyQU":
        if n == 1:
            return self
        return PolyQU({m: n * c for m, c in self.terms.items()} if n else {})

    # queries

    def qdeg(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def udeg(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def leading(self) -> tuple[Monomial, int]:
        """Leading (monomial, coeff) under lex order on (qdeg, udeg)."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms)
        return m, self.terms[m]

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = _int_gcd(g, c)
        return g

    def coeff(self, qdeg: int, udeg: int) -> int:
        return self.terms.get((qdeg, udeg), 0)

    def coeff_of_u(self, udeg: int) -> "PolyQU":
        """The q-polynomial multiplying u^udeg."""
        return PolyQU({(i, 0): c for (i, j), c in self.terms.items() if j == udeg})

    def subst(self, q: "PolyQU | None" = None, u: "PolyQU | None" = None) -> "PolyQU":
        """Simultaneous substitution q -> q_val, u -> u_val (defaults keep the variable)."""
        if q is None and u is None:
            return self
        qv = Q if q is None else q
        uv = U if u is None else u
        qpow: dict[int, PolyQU] = {0: ONE}
        upow: dict[int, PolyQU] = {0: ONE}
        out = _ZERO
        for (i, j), c in sorted(self.terms.items()):
            if i not in qpow:
                k = max(k for k in qpow if k <= i)
                acc = qpow[k]
                while k < i:
                    acc = acc * qv
                    k += 1
                    qpow[k] = acc
            if j not in upow:
                k = max(k for k in upow if k <= j)
                acc = upow[k]
                while k < j:
                    acc = acc * uv
                    k += 1
                    upow[k] = acc
            out = out + (qpow[i] * upow[j]).scale(c)
        return out

    def evaluate(self, qval, uval=0) -> Fraction:
        """Exact evaluation at rational arguments."""
        qv, uv = Fraction(qval), Fraction(uval)
        total = Fraction(0)
        for (i, j), c in self.terms.items():
            total += c * qv**i * uv**j
        return total

    def __str__(self) -> str:
        return poly_to_str(self)

    def __repr__(self) -> str:
        return f"PolyQU({poly_to_str(self)})"


_ZERO = PolyQU()
_ONE_TERMS = {(0, 0): 1}

ZERO = _ZERO
ONE = PolyQU.const(1)
Q = PolyQU.monomial(1, 1, 0)
U = PolyQU.monomial(1, 0, 1)


# ---------------------------------------------------------------------------
# gcd machinery
#
# A PolyQU is viewed as a polynomial in u whose coefficients live in Z[q];
# the q-polynomials are handled as dense integer lists (lowest degree first).
# The bivariate gcd is content * gcd of primitive parts, with the primitive
# part computed by a primitive pseudo-remainder sequence.  All steps are
# exact integer arithmetic.

def _q_trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _q_content(f: list[int]) -> int:
    g = 0
    for c in f:
        g = _int_gcd(g, c)
    return g


def _q_scale(f: list[int], n: int) -> list[int]:
    return [c * n for c in f]


def _q_mul(f: list[int], g: list[int]) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] += a * b
    return _q_trim(out)


def _q_sub(f: list[int], g: list[int]) -> list[int]:
    n = max(len(f), len(g))
    out = [(f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0) for i in range(n)]
    return _q_trim(out)


def _q_exact_div(f: list[int], g: list[int]) -> list[int] | None:
    """Exact quotient f/g over Z[q], or None when it does not divide."""
    if not g:
        raise ZeroDivisionError
    if not f:
        return []
    f = list(f)
    out = [0] * (len(f) - len(g) + 1) if len(f) >= len(g) else None
    if out is None:
        return None
    while f:
        if len(f) < len(g):
            return None
        qcoef, rem = divmod(f[-1], g[-1])
        if rem:
            return None
        k = len(f) - len(g)
        out[k] = qcoef
        for i, b in enumerate(g):
            f[k + i] -= qcoef * b
        _q_trim(f)
    return out


def _q_gcd(f: list[int], g: list[int]) -> list[int]:
    """gcd in Z[q] with positive leading coefficient."""
    f, g = _q_trim(list(f)), _q_trim(list(g))
    if not f:
        g = list(g)
        return _q_scale(g, -1) if g and g[-1] < 0 else g
    if not g:
        return _q_scale(f, -1) if f[-1] < 0 else list(f)
    cf, cg = _q_content(f), _q_content(g)
    c = _int_gcd(cf, cg)
    f = [x // cf for x in f]
    g = [x // cg for x in g]
    while g:
        # pseudo-remainder of f by g
        r = list(f)
        lead = g[-1]
        while r and len(r) >= len(g):
            k = len(r) - len(g)
            lc = r[-1]
            r = _q_scale(r, lead)
            for i, b in enumerate(g):
                r[k + i] -= lc * b
            _q_trim(r)
        cr = _q_content(r)
        f, g = g, ([x // cr for x in r] if cr else [])
    if f[-1] < 0:
        f = _q_scale(f, -1)
    return _q_scale(f, c)


def _to_rec(p: PolyQU) -> dict[int, list[int]]:
    """u-degree -> dense q-coefficient list."""
    rec: dict[int, list[int]] = {}
    for (i, j), c in p.terms.items():
        row = rec.setdefault(j, [])
        if len(row) <= i:
            row.extend([0] * (i + 1 - len(row)))
        row[i] = c
    return {j: _q_trim(row) for j, row in rec.items() if _q_trim(list(row))}


def _from_rec(rec: dict[int, list[int]]) -> PolyQU:
    terms = {}
    for j, row in rec.items():
        for i, c in enumerate(row):
            if c:
                terms[(i, j)] = c
    return PolyQU(terms)


def _rec_dense(rec: dict[int, list[int]]) -> list[list[int]]:
    if not rec:
        return []
    top = max(rec)
    return [list(rec.get(j, [])) for j in range(top + 1)]


def _biv_trim(f: list[list[int]]) -> list[list[int]]:
    while f and not f[-1]:
        f.pop()
    return f


def _biv_content(f: list[list[int]]) -> list[int]:
    g: list[int] = []
    for row in f:
        g = _q_gcd(g, row)
    return g


def _biv_pp(f: list[list[int]]) -> list[list[int]]:
    c = _biv_content(f)
    if c == [1]:
        return f
    return [_q_exact_div(row, c) or [] for row in f]


def _biv_scale(f: list[list[int]], s: list[int]) -> list[list[int]]:
    return [_q_mul(row, s) for row in f]


def _biv_sub(f: list[list[int]], g: list[list[int]]) -> list[list[int]]:
    n = max(len(f), len(g))
    out = []
    for j in range(n):
        a = f[j] if j < len(f) else []
        b = g[j] if j < len(g) else []
        out.append(_q_sub(a, b))
    return _biv_trim(out)


def _biv_prem(f: list[list[int]], g: list[list[int]]) -> list[list[int]]:
    """Pseudo-remainder of f by g as polynomials in u over Z[q]."""
    r = [list(row) for row in f]
    lead = g[-1]
    while r and len(r) >= len(g):
        k = len(r) - len(g)
        lc = r[-1]
        r = _biv_scale(r, lead)
        shifted = [[] for _ in range(k)] + [_q_mul(lc, row) for row in g]
        r = _biv_sub(r, shifted)
    return r


def _int_normalized(p: PolyQU) -> tuple[PolyQU, int]:
    """Smallest positive m with m*p integer-coefficient, plus that scaled poly."""
    m = 1
    exact = True
    for c in p.terms.values():
        if isinstance(c, Fraction):
            exact = False
            d = c.denominator
            m = m * d // _int_gcd(m, d)
    if exact:
        return p, 1
    return PolyQU({mon: int(c * m) for mon, c in p.terms.items()}), m


def poly_gcd(a: PolyQU, b: PolyQU) -> PolyQU:
    """gcd in Z[q,u] (integer content included), leading coefficient positive.

    Inputs with fractional coefficients are scaled to integer polynomials
    first, so the result is the gcd of the two integerized inputs."""
    a, _ = _int_normalized(a)
    b, _ = _int_normalized(b)
    if a.is_zero() and b.is_zero():
        return ZERO
    if a.is_zero() or b.is_zero():
        g = b if a.is_zero() else a
        _, lc = g.leading()
        return -g if lc < 0 else g
    if a.terms == _ONE_TERMS or b.terms == _ONE_TERMS:
        return ONE
    # common pure-q fast path
    if a.udeg() == 0 and b.udeg() == 0:
        fa = _rec_dense(_to_rec(a))[0]
        fb = _rec_dense(_to_rec(b))[0]
        return _from_rec({0: _q_gcd(fa, fb)})
    fa = _biv_trim(_rec_dense(_to_rec(a)))
    fb = _biv_trim(_rec_dense(_to_rec(b)))
    ca, cb = _biv_content(fa), _biv_content(fb)
    c = _q_gcd(ca, cb)
    fa = [_q_exact_div(row, ca) or [] for row in fa]
    fb = [_q_exact_div(row, cb) or [] for row in fb]
    if len(fa) < len(fb):
        fa, fb = fb, fa
    while fb:
        r = _biv_trim(_biv_prem(fa, fb))
        fa, fb = fb, _biv_pp(r) if r else []
    g = _biv_scale(fa, c)
    out = _from_rec({j: row for j, row in enumerate(g)})
    _, lc = out.leading()
    return -out if lc < 0 else out


def poly_exact_div(a: PolyQU, b: PolyQU) -> PolyQU | None:
    """Exact quotient a/b in Q[q,u], or None when b does not divide a.

    The quotient keeps integer coefficients whenever the division is
    exact over Z[q,u]; otherwise its coefficients are exact Fractions
    (so (a*b)/b == a holds for every nonzero b)."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if a.is_zero():
        return ZERO
    ia, ma = _int_normalized(a)
    ib, mb = _int_normalized(b)
    if ma == 1 and mb == 1:
        rem = ia
        out: dict[Monomial, int] = {}
        (bi, bj), bc = ib.leading()
        integral = True
        while rem.terms:
            (ri, rj), rc = rem.leading()
            if ri < bi or rj < bj:
                # a leading-monomial failure rules out divisibility over
                # Q as well, since the remainders so far match the
                # rational division step for step
                return None
            qcoef, r = divmod(rc, bc)
            if r:
                integral = False
                break
            m = (ri - bi, rj - bj)
            out[m] = qcoef
            rem = rem - ib * PolyQU.monomial(qcoef, *m)
        if integral:
            return PolyQU(out)
    rem = a
    fout: dict[Monomial, int | Fraction] = {}
    (bi, bj), bc = b.leading()
    while rem.terms:
        (ri, rj), rc = rem.leading()
        if ri < bi or rj < bj:
            return None
        qc = Fraction(rc) / Fraction(bc)
        coeff: int | Fraction = int(qc) if qc.denominator == 1 else qc
        m = (ri - bi, rj - bj)
        fout[m] = coeff
        rem = rem - b * PolyQU.monomial(coeff, *m)
    return PolyQU(fout)


# ---------------------------------------------------------------------------
# rational functions

class RatQU:
    """Reduced fraction of two PolyQU values; the canonical form is unique."""

    __slots__ = ("num", "den")

    def __init__(self, num: PolyQU, den: PolyQU = ONE):
        if den.is_zero():
            raise ZeroDivisionError("division by zero")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        if den.terms != _ONE_TERMS:
            g = poly_gcd(num, den)
            if g.terms != _ONE_TERMS:
                num = poly_exact_div(num, g)
                den = poly_exact_div(den, g)
            _, lc = den.leading()
            if lc < 0:
                num, den = -num, -den
        self.num, self.den = num, den

    @staticmethod
    def from_int(n: int) -> "RatQU":
        return RatQU(PolyQU.const(n))

    @staticmethod
    def from_frac(x: Fraction) -> "RatQU":
        return RatQU(PolyQU.const(x.numerator), PolyQU.const(x.denominator))

    @staticmethod
    def from_poly(p: PolyQU) -> "RatQU":
        return RatQU(p)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        return isinstance(other, RatQU) and self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __neg__(self) -> "RatQU":
        r = RatQU.__new__(RatQU)
        r.num, r.den = -self.num, self.den
        return r

    def __add__(self, other: "RatQU") -> "RatQU":
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den == other.den:
            return RatQU(self.num + other.num, self.den)
        return RatQU(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "RatQU") -> "RatQU":
        return self + (-other)

    def __mul__(self, other: "RatQU") -> "RatQU":
        if self.num.is_zero() or other.num.is_zero():
            return RAT_ZERO
        # cross-reduce before multiplying to keep intermediates small
        a, b, c, d = self.num, self.den, other.num, other.den
        g1 = poly_gcd(a, d)
        if g1.terms != _ONE_TERMS:
            a, d = poly_exact_div(a, g1), poly_exact_div(d, g1)
        g2 = poly_gcd(c, b)
        if g2.terms != _ONE_TERMS:
            c, b = poly_exact_div(c, g2), poly_exact_div(b, g2)
        r = RatQU.__new__(RatQU)
        num, den = a * c, b * d
        _, lc = den.leading()
        if lc < 0:
            num, den = -num, -den
        r.num, r.den = num, den
        return r

    def inv(self) -> "RatQU":
        if self.num.is_zero():
            raise ZeroDivisionError("division by zero")
        r = RatQU.__new__(RatQU)
        num, den = self.den, self.num
        _, lc = den.leading()
        if lc < 0:
            num, den = -num, -den
        r.num, r.den = num, den
        return r

    def __truediv__(self, other: "RatQU") -> "RatQU":
        return self * other.inv()

    def scale_poly(self, p: PolyQU) -> "RatQU":
        return RatQU(self.num * p, self.den)

    def scale_int(self, m: int) -> "RatQU":
        """self * m, reduced without a polynomial gcd: in canonical form only
        integer content of the denominator can cancel against m."""
        if m == 0 or self.num.is_zero():
            return RAT_ZERO
        if m == 1:
            return self
        g = _int_gcd(m, self.den.content())
        r = RatQU.__new__(RatQU)
        if g == 1:
            r.num, r.den = self.num.scale(m), self.den
        else:
            r.num = self.num.scale(m // g)
            r.den = PolyQU({mono: c // g for mono, c in self.den.terms.items()})
        return r

    def scale_frac(self, x: Fraction) -> "RatQU":
        """self * x for a rational scalar, again reduced via integer gcds only."""
        if x.numerator == 0 or self.num.is_zero():
            return RAT_ZERO
        if x.denominator == 1:
            return self.scale_int(x.numerator)
        p, s = x.numerator, x.denominator
        g1 = _int_gcd(p, self.den.content())
        g2 = _int_gcd(s, self.num.content())
        num = self.num if g2 == 1 else PolyQU(
            {mono: c // g2 for mono, c in self.num.terms.items()}
        )
        den = self.den if g1 == 1 else PolyQU(
            {mono: c // g1 for mono, c in self.den.terms.items()}
        )
        r = RatQU.__new__(RatQU)
        r.num = num.scale(p // g1)
        r.den = den.scale(s // g2)
        return r

    def is_poly(self) -> bool:
        return self.den.terms == _ONE_TERMS

    def to_poly(self) -> PolyQU:
        """The underlying polynomial; raises unless the value is in Z[q,u]."""
        if self.den.terms == _ONE_TERMS:
            return self.num
        raise ValueError(f"not a polynomial: ({self.num})/({self.den})")

    def subst(self, q: PolyQU | None = None, u: PolyQU | None = None) -> "RatQU":
        return RatQU(self.num.subst(q=q, u=u), self.den.subst(q=q, u=u))

    def evaluate(self, qval, uval=0) -> Fraction:
        d = self.den.evaluate(qval, uval)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at the evaluation point")
        return self.num.evaluate(qval, uval) / d

    def __str__(self) -> str:
        if self.den.terms == _ONE_TERMS:
            return poly_to_str(self.num)
        return f"({poly_to_str(self.num)})/({poly_to_str(self.den)})"

    def __repr__(self) -> str:
        return f"RatQU({self})"


RAT_ZERO = RatQU(ZERO)
RAT_ONE = RatQU(ONE)


# ---------------------------------------------------------------------------
# serialization

def poly_to_json(p: PolyQU) -> list[list]:
    """JSON form: [[coeff-as-decimal-string, qdeg, udeg], ...] in ascending
    lexicographic order on (qdeg, udeg)."""
    return [[str(c), i, j] for (i, j), c in sorted(p.terms.items())]


def poly_from_json(data) -> PolyQU:
    terms = {}
    for entry in data:
        cstr, i, j = entry
        c = Fraction(cstr)
        terms[(int(i), int(j))] = int(c) if c.denominator == 1 else c
    return PolyQU(terms)


def _monomial_str(qdeg: int, udeg: int) -> str:
    parts = []
    if udeg == 1:
        parts.append("u")
    elif udeg > 1:
        parts.append(f"u^{udeg}")
    if qdeg == 1:
        parts.append("q")
    elif qdeg > 1:
        parts.append(f"q^{qdeg}")
    return "*".join(parts)


def poly_to_str(p: PolyQU) -> str:
    """Human form like "q^3 + 2*q + 1", u-major term order."""
    if not p.terms:
        return "0"
    pieces = []
    for (i, j), c in sorted(p.terms.items(), key=lambda kv: (kv[0][1], kv[0][0]), reverse=True):
        mono = _monomial_str(i, j)
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = str(mag)
        pieces.append(("-" if c < 0 else "+", body))
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out
