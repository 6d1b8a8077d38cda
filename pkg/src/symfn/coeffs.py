"""Exact scalars: integer polynomials in a, b, c, q, t, alpha and their fractions.

Every scalar in the library is a Coeff: a reduced fraction num/den of sparse
multivariate polynomials with arbitrary-precision integer coefficients over a
fixed six-symbol alphabet.  Arithmetic is exact, and canonical form (coprime
numerator and denominator, integer content reduced, denominator leading
coefficient positive under the lexicographic symbol order a < b < c < q < t
< alpha) is restored after every operation, so equality is plain structural
comparison.

Negative powers never appear as exponents; they are fractions.  Parameter
specializations are substitutions into the same six-symbol field, never new
coefficient types.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping

SYMBOLS = ("a", "b", "c", "q", "t", "alpha")
_INDEX = {name: i for i, name in enumerate(SYMBOLS)}
_NVARS = len(SYMBOLS)
_EXP0 = (0,) * _NVARS


class PoleError(ZeroDivisionError):
    """A substitution made a denominator vanish identically."""


# ---------------------------------------------------------------------------
# Sparse multivariate integer polynomials
# ---------------------------------------------------------------------------


class Poly:
    """Sparse map from exponent vectors to nonzero integers.

    Exponent vectors are tuples of six non-negative integers, one slot per
    symbol.  Instances are treated as immutable; do not mutate .terms.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, ...], int]):
        self.terms = terms

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_int(k: int) -> "Poly":
        return P_ZERO if k == 0 else Poly({_EXP0: k})

    @staticmethod
    def symbol(name: str) -> "Poly":
        if name not in _INDEX:
            raise ValueError(f"unknown symbol {name!r}; symbols are {SYMBOLS}")
        exp = [0] * _NVARS
        exp[_INDEX[name]] = 1
        return Poly({tuple(exp): 1})

    # -- predicates ----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_const(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and _EXP0 in self.terms)

    def const_value(self) -> int:
        if not self.terms:
            return 0
        return self.terms[_EXP0]

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        if not other.terms:
            return self
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) - c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly(out)

    def __mul__(self, other: "Poly") -> "Poly":
        if not self.terms or not other.terms:
            return P_ZERO
        if self.terms is P_ONE.terms:
            return other
        if other.terms is P_ONE.terms:
            return self
        out: dict[tuple[int, ...], int] = {}
        small, large = (self.terms, other.terms)
        if len(small) > len(large):
            small, large = large, small
        for e1, c1 in small.items():
            for e2, c2 in large.items():
                e = tuple(map(sum, zip(e1, e2)))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return Poly(out)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial; use Coeff")
        result = P_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mul_int(self, k: int) -> "Poly":
        if k == 0:
            return P_ZERO
        if k == 1:
            return self
        return Poly({e: c * k for e, c in self.terms.items()})

    # -- structure -----------------------------------------------------

    def leading(self) -> tuple[tuple[int, ...], int]:
        e = max(self.terms)
        return e, self.terms[e]

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        return poly_str(self)

    def __repr__(self) -> str:
        return f"Poly({poly_str(self)})"


P_ZERO = Poly({})
P_ONE = Poly({_EXP0: 1})


def _int_content(p: Poly) -> int:
    g = 0
    for c in p.terms.values():
        g = math.gcd(g, c)
        if g == 1:
            return 1
    return g


def _sign_fixed(p: Poly) -> Poly:
    """Negate if the lexicographically leading coefficient is negative."""
    if p.terms and p.terms[max(p.terms)] < 0:
        return -p
    return p


def _min_var(p: Poly) -> int | None:
    best: int | None = None
    for e in p.terms:
        for i, ei in enumerate(e):
            if ei and (best is None or i < best):
                best = i
                break
    return best


def _to_univar(p: Poly, v: int) -> dict[int, Poly]:
    """View p as a univariate polynomial in symbol v with Poly coefficients."""
    out: dict[int, dict] = {}
    for e, c in p.terms.items():
        d = e[v]
        e0 = e[:v] + (0,) + e[v + 1 :]
        out.setdefault(d, {})[e0] = c
    return {d: Poly(ts) for d, ts in out.items()}


def _from_univar(u: dict[int, Poly], v: int) -> Poly:
    out: dict[tuple[int, ...], int] = {}
    for d, p in u.items():
        for e, c in p.terms.items():
            out[e[:v] + (d,) + e[v + 1 :]] = c
    return Poly(out)


def poly_divexact(f: Poly, g: Poly) -> Poly:
    """Divide f by g when the division is known to be exact."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if not f:
        return P_ZERO
    if g.terms is P_ONE.terms or g == P_ONE:
        return f
    if g.is_const():
        k = g.const_value()
        out = {}
        for e, c in f.terms.items():
            qt, r = divmod(c, k)
            if r:
                raise ArithmeticError("inexact polynomial division")
            out[e] = qt
        return Poly(out)
    ltg = max(g.terms)
    lcg = g.terms[ltg]
    rem = dict(f.terms)
    out: dict[tuple[int, ...], int] = {}
    while rem:
        ltr = max(rem)
        lcr = rem[ltr]
        qe = tuple(x - y for x, y in zip(ltr, ltg))
        if any(x < 0 for x in qe) or lcr % lcg:
            raise ArithmeticError("inexact polynomial division")
        qc = lcr // lcg
        out[qe] = qc
        for e, c in g.terms.items():
            ee = tuple(map(sum, zip(qe, e)))
            v = rem.get(ee, 0) - qc * c
            if v:
                rem[ee] = v
            else:
                rem.pop(ee, None)
    return Poly(out)


def _univar_content(u: Iterable[Poly]) -> Poly:
    g = P_ZERO
    for p in u:
        g = poly_gcd(g, p)
        if g == P_ONE:
            return g
    return g


def _primitive_univar(u: dict[int, Poly]) -> dict[int, Poly]:
    cont = _univar_content(u.values())
    if cont == P_ONE:
        return u
    return {d: poly_divexact(p, cont) for d, p in u.items()}


def _pseudo_rem(A: dict[int, Poly], B: dict[int, Poly]) -> dict[int, Poly]:
    """Pseudo-remainder of univariate polynomials with Poly coefficients."""
    dB = max(B)
    lB = B[dB]
    R = A
    while R and max(R) >= dB:
        dR = max(R)
        lR = R[dR]
        Rn: dict[int, Poly] = {}
        for d, p in R.items():
            if d != dR:
                Rn[d] = p * lB
        for d, p in B.items():
            if d == dB:
                continue
            dd = d + dR - dB
            v = Rn.get(dd, P_ZERO) - p * lR
            if v:
                Rn[dd] = v
            else:
                Rn.pop(dd, None)
        R = Rn
    return R


def _prs_gcd(f: Poly, g: Poly) -> Poly:
    """Content/primitive-part recursion on the lex-leading symbol with a
    primitive pseudo-remainder sequence.  Deterministic fallback; slow when
    coefficients swell."""
    vf = _min_var(f)
    vg = _min_var(g)
    v = min(vf, vg)
    if vf != vg:
        # One side is free of the leading symbol: the gcd divides it, hence
        # also divides the other side's content in that symbol.
        if vf > vg:
            f, g = g, f
        return poly_gcd(g, _univar_content(_to_univar(f, v).values()))
    fu = _to_univar(f, v)
    gu = _to_univar(g, v)
    cf = _univar_content(fu.values())
    cg = _univar_content(gu.values())
    cont = poly_gcd(cf, cg)
    A = fu if cf == P_ONE else {d: poly_divexact(p, cf) for d, p in fu.items()}
    B = gu if cg == P_ONE else {d: poly_divexact(p, cg) for d, p in gu.items()}
    if max(A) < max(B):
        A, B = B, A
    while True:
        R = _pseudo_rem(A, B)
        if not R:
            pp = _primitive_univar(B)
            break
        if max(R) == 0:
            return _sign_fixed(cont)
        A, B = B, _primitive_univar(R)
    return _sign_fixed(cont * _from_univar(pp, v))


def _max_norm(p: Poly) -> int:
    return max(abs(c) for c in p.terms.values())


def _eval_var(p: Poly, v: int, x: int) -> Poly:
    """Substitute the integer x for symbol v."""
    powers = {0: 1}
    out: dict[tuple[int, ...], int] = {}
    for e, c in p.terms.items():
        d = e[v]
        if d not in powers:
            powers[d] = x**d
        e0 = e[:v] + (0,) + e[v + 1 :]
        val = out.get(e0, 0) + c * powers[d]
        if val:
            out[e0] = val
        else:
            out.pop(e0, None)
    return Poly(out)


def _interpolate_var(val: Poly, v: int, x: int) -> Poly:
    """Reverse of _eval_var: base-x digits with balanced remainders."""
    half = x // 2
    out: dict[tuple[int, ...], int] = {}
    k = 0
    while val:
        nxt: dict[tuple[int, ...], int] = {}
        for e, c in val.terms.items():
            r = c % x
            if r > half:
                r -= x
            if r:
                out[e[:v] + (k,) + e[v + 1 :]] = r
            d = (c - r) // x
            if d:
                nxt[e] = d
        val = Poly(nxt)
        k += 1
        if k > 10000:
            raise ArithmeticError("interpolation runaway")
    return Poly(out)


def _divides(h: Poly, p: Poly) -> bool:
    try:
        poly_divexact(p, h)
        return True
    except ArithmeticError:
        return False


def _heu_gcd(f: Poly, g: Poly, depth: int = 0) -> Poly:
    """Heuristic gcd of content-free inputs: evaluate one symbol at a large
    integer, take the gcd one level down, reconstruct by balanced base-x
    digits, and verify by exact trial division.

    The common integer content is extracted first at every level; by Gauss,
    what remains has an integer-primitive gcd, so the candidate may safely be
    replaced by its primitive part before verification.
    """
    if f.terms == g.terms:
        return _sign_fixed(f)
    if f.is_const() or g.is_const():
        return Poly.from_int(math.gcd(_int_content(f), _int_content(g)))
    ch = math.gcd(_int_content(f), _int_content(g))
    if ch > 1:
        f = Poly({e: c // ch for e, c in f.terms.items()})
        g = Poly({e: c // ch for e, c in g.terms.items()})
    v = min(_min_var(f), _min_var(g))
    x = 2 * min(_max_norm(f), _max_norm(g)) + 29
    result = None
    for _ in range(6):
        fe = _eval_var(f, v, x)
        ge = _eval_var(g, v, x)
        if fe and ge:
            he = _heu_gcd(fe, ge, depth + 1)
            h = _interpolate_var(he, v, x)
            cont = _int_content(h)
            if cont > 1:
                h = Poly({e: c // cont for e, c in h.terms.items()})
            h = _sign_fixed(h)
            if h and _divides(h, f) and _divides(h, g):
                result = h
                break
        x = int(x * 73794 / 27011) + 1
    if result is None:
        result = _prs_gcd(f, g)
    return result if ch == 1 else result.mul_int(ch)


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Greatest common divisor, integer content included; leading sign positive."""
    if not f:
        return _sign_fixed(g)
    if not g:
        return _sign_fixed(f)
    if f.terms == g.terms:
        return _sign_fixed(f)
    if f.is_const() or g.is_const():
        return Poly.from_int(math.gcd(_int_content(f), _int_content(g)))
    # Pull out the common monomial and integer contents first; they are the
    # overwhelmingly common case in fraction normalization.
    fmin = [min(e[i] for e in f.terms) for i in range(_NVARS)]
    gmin = [min(e[i] for e in g.terms) for i in range(_NVARS)]
    mono = tuple(min(a_, b_) for a_, b_ in zip(fmin, gmin))
    if any(fmin):
        f = Poly({tuple(x - m for x, m in zip(e, fmin)): c for e, c in f.terms.items()})
    if any(gmin):
        g = Poly({tuple(x - m for x, m in zip(e, gmin)): c for e, c in g.terms.items()})
    cf = _int_content(f)
    cg = _int_content(g)
    ci = math.gcd(cf, cg)
    if cf > 1:
        f = Poly({e: c // cf for e, c in f.terms.items()})
    if cg > 1:
        g = Poly({e: c // cg for e, c in g.terms.items()})
    if f.is_const() or g.is_const():
        core = P_ONE
    else:
        core = _heu_gcd(f, g)
    result = core if ci == 1 else core.mul_int(ci)
    if any(mono):
        result = Poly({tuple(map(sum, zip(e, mono))): c for e, c in result.terms.items()})
    return _sign_fixed(result)


# ---------------------------------------------------------------------------
# Canonical string form and parsing
# ---------------------------------------------------------------------------


def poly_str(p: Poly) -> str:
    """Expanded normal form: monomials sorted lex-descending, explicit * and ^."""
    if not p.terms:
        return "0"
    pieces: list[str] = []
    for e in sorted(p.terms, reverse=True):
        c = p.terms[e]
        factors = []
        for i, ei in enumerate(e):
            if ei == 1:
                factors.append(SYMBOLS[i])
            elif ei > 1:
                factors.append(f"{SYMBOLS[i]}^{ei}")
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if not pieces:
            pieces.append(body if c > 0 else "-" + body)
        else:
            pieces.append((" + " if c > 0 else " - ") + body)
    return "".join(pieces)


class _Parser:
    """Recursive-descent parser for the canonical coefficient grammar."""

    def __init__(self, text: str):
        self.tokens = self._tokenize(text)
        self.pos = 0

    @staticmethod
    def _tokenize(text: str):
        tokens: list[tuple[str, object]] = []
        i = 0
        n = len(text)
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch.isdigit():
                j = i
                while j < n and text[j].isdigit():
                    j += 1
                tokens.append(("int", int(text[i:j])))
                i = j
            elif ch.isalpha():
                j = i
                while j < n and text[j].isalpha():
                    j += 1
                name = text[i:j]
                if name not in _INDEX:
                    raise ValueError(f"unknown symbol {name!r}")
                tokens.append(("name", name))
                i = j
            elif ch in "+-*/^()":
                tokens.append(("op", ch))
                i += 1
            else:
                raise ValueError(f"unexpected character {ch!r}")
        tokens.append(("end", None))
        return tokens

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, ch):
        kind, val = self.take()
        if kind != "op" or val != ch:
            raise ValueError(f"expected {ch!r}")

    def parse(self) -> "Coeff":
        value = self.expr()
        if self.peek()[0] != "end":
            raise ValueError(f"trailing input {self.peek()!r}")
        return value

    def expr(self) -> "Coeff":
        value = self.term()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                value = value + rhs if val == "+" else value - rhs
            else:
                return value

    def term(self) -> "Coeff":
        value = self.unary()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                rhs = self.unary()
                value = value * rhs if val == "*" else value / rhs
            else:
                return value

    def unary(self) -> "Coeff":
        sign = 1
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                if val == "-":
                    sign = -sign
            else:
                break
        value = self.power()
        return value if sign == 1 else -value

    def power(self) -> "Coeff":
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            esign = 1
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                if val == "-":
                    esign = -1
            kind, val = self.take()
            if kind != "int":
                raise ValueError("exponent must be an integer")
            return base ** (esign * val)
        return base

    def atom(self) -> "Coeff":
        kind, val = self.take()
        if kind == "int":
            return Coeff.from_int(val)
        if kind == "name":
            return Coeff.symbol(val)
        if kind == "op" and val == "(":
            value = self.expr()
            self.expect_op(")")
            return value
        raise ValueError(f"unexpected token {val!r}")


# ---------------------------------------------------------------------------
# The coefficient field
# ---------------------------------------------------------------------------


class Coeff:
    """Reduced fraction of two integer polynomials; always canonical."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = P_ONE, _canonical: bool = False):
        if _canonical:
            self.num = num
            self.den = den
            return
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num = P_ZERO
            self.den = P_ONE
            return
        g = poly_gcd(num, den)
        if not (g == P_ONE):
            num = poly_divexact(num, g)
            den = poly_divexact(den, g)
        if den.terms[max(den.terms)] < 0:
            num = -num
            den = -den
        self.num = num
        self.den = den

    # -- constructors ---------------------------------------------------

    @staticmethod
    def from_int(k: int) -> "Coeff":
        if k == 0:
            return ZERO
        if k == 1:
            return ONE
        return Coeff(Poly.from_int(k), P_ONE, _canonical=True)

    @staticmethod
    def rational(p: int, q: int) -> "Coeff":
        if q == 0:
            raise ZeroDivisionError("zero denominator")
        g = math.gcd(p, q)
        if g:
            p //= g
            q //= g
        if q < 0:
            p, q = -p, -q
        if p == 0:
            return ZERO
        return Coeff(Poly.from_int(p), Poly.from_int(q), _canonical=True)

    @staticmethod
    def symbol(name: str) -> "Coeff":
        return Coeff(Poly.symbol(name), P_ONE, _canonical=True)

    @staticmethod
    def parse(text: str) -> "Coeff":
        return _Parser(text).parse()

    @staticmethod
    def from_json(obj: Mapping[str, str]) -> "Coeff":
        num = Coeff.parse(obj["num"])
        den = Coeff.parse(obj["den"])
        return num / den

    @staticmethod
    def _coerce(x) -> "Coeff":
        if isinstance(x, Coeff):
            return x
        if isinstance(x, int):
            return Coeff.from_int(x)
        raise TypeError(f"cannot coerce {x!r} to Coeff")

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num.terms == P_ONE.terms and self.den.terms == P_ONE.terms

    def __bool__(self) -> bool:
        return bool(self.num)

    # -- field arithmetic --------------------------------------------------

    def __add__(self, other) -> "Coeff":
        other = Coeff._coerce(other)
        if not self.num:
            return other
        if not other.num:
            return self
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        if d1.terms == d2.terms:
            num = n1 + n2
            if not num:
                return ZERO
            g = poly_gcd(num, d1)
            if g == P_ONE:
                return Coeff(num, d1, _canonical=True)
            return Coeff(num, d1)
        g = poly_gcd(d1, d2)
        if g == P_ONE:
            num = n1 * d2 + n2 * d1
            if not num:
                return ZERO
            return Coeff(num, d1 * d2, _canonical=True)
        d2g = poly_divexact(d2, g)
        tnum = n1 * d2g + n2 * poly_divexact(d1, g)
        if not tnum:
            return ZERO
        g2 = poly_gcd(tnum, g)
        if g2 == P_ONE:
            return Coeff(tnum, d1 * d2g, _canonical=True)
        return Coeff(poly_divexact(tnum, g2), poly_divexact(d1, g2) * d2g, _canonical=True)

    __radd__ = __add__

    def __neg__(self) -> "Coeff":
        return Coeff(-self.num, self.den, _canonical=True)

    def __sub__(self, other) -> "Coeff":
        return self + (-Coeff._coerce(other))

    def __rsub__(self, other) -> "Coeff":
        return Coeff._coerce(other) + (-self)

    def __mul__(self, other) -> "Coeff":
        other = Coeff._coerce(other)
        if not self.num or not other.num:
            return ZERO
        if self.is_one():
            return other
        if other.is_one():
            return self
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        g1 = poly_gcd(n1, d2)
        g2 = poly_gcd(n2, d1)
        if not (g1 == P_ONE):
            n1 = poly_divexact(n1, g1)
            d2 = poly_divexact(d2, g1)
        if not (g2 == P_ONE):
            n2 = poly_divexact(n2, g2)
            d1 = poly_divexact(d1, g2)
        num = n1 * n2
        den = d1 * d2
        if den.terms[max(den.terms)] < 0:
            num = -num
            den = -den
        return Coeff(num, den, _canonical=True)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Coeff":
        other = Coeff._coerce(other)
        if not other.num:
            raise ZeroDivisionError("division by zero coefficient")
        return self * Coeff(other.den, other.num)

    def __rtruediv__(self, other) -> "Coeff":
        if not self.num:
            raise ZeroDivisionError("division by zero coefficient")
        return Coeff._coerce(other) * Coeff(self.den, self.num)

    def __pow__(self, n: int) -> "Coeff":
        if n == 0:
            return ONE
        if n < 0:
            if not self.num:
                raise ZeroDivisionError("negative power of zero")
            base = Coeff(self.den, self.num)
            n = -n
        else:
            base = self
        num = base.num**n
        den = base.den**n
        if den.terms[max(den.terms)] < 0:
            num = -num
            den = -den
        return Coeff(num, den, _canonical=True)

    # -- substitution ------------------------------------------------------

    def substitute(self, bindings: Mapping[str, "Coeff | int"]) -> "Coeff":
        """Simultaneous substitution of symbols by coefficients.

        Raises PoleError when the denominator vanishes identically under the
        substitution.
        """
        bound: dict[int, Coeff] = {}
        for name, val in bindings.items():
            if name not in _INDEX:
                raise ValueError(f"unknown symbol {name!r}")
            bound[_INDEX[name]] = Coeff._coerce(val)
        num_v = _poly_subst(self.num, bound)
        den_v = _poly_subst(self.den, bound)
        if den_v.is_zero():
            raise PoleError("pole at specialization")
        return num_v / den_v

    # -- structure -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Coeff.from_int(other)
        return (
            isinstance(other, Coeff)
            and self.num.terms == other.num.terms
            and self.den.terms == other.den.terms
        )

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __str__(self) -> str:
        if self.den.terms == P_ONE.terms:
            return poly_str(self.num)
        return f"(({poly_str(self.num)}))/(({poly_str(self.den)}))"

    def __repr__(self) -> str:
        return f"Coeff({self})"

    def to_json(self) -> dict[str, str]:
        return {"num": poly_str(self.num), "den": poly_str(self.den)}


def _poly_subst(p: Poly, bound: dict[int, Coeff]) -> Coeff:
    if not p:
        return ZERO
    powers: dict[int, list[Coeff]] = {i: [ONE] for i in bound}
    acc = ZERO
    for e, c in p.terms.items():
        residual = list(e)
        factor: Coeff | None = None
        for i, val in bound.items():
            ei = e[i]
            if not ei:
                continue
            residual[i] = 0
            cache = powers[i]
            while len(cache) <= ei:
                cache.append(cache[-1] * val)
            factor = cache[ei] if factor is None else factor * cache[ei]
        base = Coeff(Poly({tuple(residual): c}), P_ONE, _canonical=True)
        acc = acc + (base if factor is None else base * factor)
    return acc


ZERO = Coeff(P_ZERO, P_ONE, _canonical=True)
ONE = Coeff(P_ONE, P_ONE, _canonical=True)


def sym(name: str) -> Coeff:
    """Shorthand for Coeff.symbol."""
    return Coeff.symbol(name)
