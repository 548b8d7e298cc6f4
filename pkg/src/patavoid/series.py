"""Exact truncated power series in t with rational-polynomial coefficients.

Coefficients are polynomials in two formal variables u and v over the
rationals; plain rationals are degree-0 polynomials.  All arithmetic is
exact.  Division requires the denominator's t^0 coefficient to be a nonzero
u,v-free rational; square roots require a u,v-free radicand with constant
term 1.  Any operation combining two series works to the smaller of their
orders.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence, Union

Scalar = Union[int, Fraction]


class Poly:
    """A polynomial in u and v, stored as {(deg_u, deg_v): coefficient}."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Scalar] | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def const(cls, c: Scalar) -> Poly:
        return cls({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, c: Scalar, du: int = 0, dv: int = 0) -> Poly:
        return cls({(du, dv): c} if c else {})

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0, 0) in self.terms)

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial: {self}")
        return self.terms.get((0, 0), 0)

    def __add__(self, other: Poly) -> Poly:
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        res = Poly.__new__(Poly)
        res.terms = out
        return res

    def __neg__(self) -> Poly:
        res = Poly.__new__(Poly)
        res.terms = {k: -c for k, c in self.terms.items()}
        return res

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        out: dict[tuple[int, int], Scalar] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                s = out.get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        res = Poly.__new__(Poly)
        res.terms = out
        return res

    def scale(self, c: Scalar) -> Poly:
        if not c:
            return Poly()
        res = Poly.__new__(Poly)
        res.terms = {k: c * v for k, v in self.terms.items()}
        return res

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def subs_one(self, u: bool = False, v: bool = False) -> Poly:
        """Substitute 1 for u and/or v."""
        out: dict[tuple[int, int], Scalar] = {}
        for (a, b), c in self.terms.items():
            k = (0 if u else a, 0 if v else b)
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        res = Poly.__new__(Poly)
        res.terms = out
        return res

    def __call__(self, uval: Scalar, vval: Scalar) -> Scalar:
        return sum(c * uval**a * vval**b for (a, b), c in self.terms.items())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self.terms.items()):
            mono = ""
            if a:
                mono += "u" if a == 1 else f"u^{a}"
            if b:
                mono += "v" if b == 1 else f"v^{b}"
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    __repr__ = __str__


_ZERO = Poly()
_ONE = Poly.const(1)


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    return Poly.const(x)


class TruncatedSeries:
    """A power series in t modulo t^(order+1), with Poly coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence[Poly | Scalar], order: int | None = None):
        coeffs = [_as_poly(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if len(coeffs) < order + 1:
            coeffs += [_ZERO] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = coeffs[: order + 1]

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls([], order)

    @classmethod
    def from_terms(cls, order: int,
                   terms: Mapping[tuple[int, int, int], Scalar]) -> TruncatedSeries:
        """Build from {(deg_t, deg_u, deg_v): coefficient}."""
        coeffs = [dict() for _ in range(order + 1)]
        for (i, a, b), c in terms.items():
            if i <= order and c:
                coeffs[i][(a, b)] = coeffs[i].get((a, b), 0) + c
        return cls([Poly(d) for d in coeffs], order)

    def coefficient(self, n: int) -> Poly:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} beyond order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def first_nonzero(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                return i
        return None

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        order = min(self.order, other.order)
        return TruncatedSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(order + 1)], order)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        order = min(self.order, other.order)
        return TruncatedSeries(
            [self.coeffs[i] - other.coeffs[i] for i in range(order + 1)], order)

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        order = min(self.order, other.order)
        out = [_ZERO] * (order + 1)
        for i, a in enumerate(self.coeffs[: order + 1]):
            if a.is_zero():
                continue
            for j in range(order + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(out, order)

    def scale(self, p: Poly | Scalar) -> TruncatedSeries:
        p = _as_poly(p)
        return TruncatedSeries([c * p for c in self.coeffs], self.order)

    def shift(self, k: int) -> TruncatedSeries:
        """Multiply by t^k (k >= 0) or divide by t^k (k < 0, exact)."""
        if k >= 0:
            return TruncatedSeries([_ZERO] * k + self.coeffs, self.order + k)
        if any(not c.is_zero() for c in self.coeffs[:-k]):
            raise ValueError(f"series not divisible by t^{-k}")
        return TruncatedSeries(self.coeffs[-k:], self.order + k)

    def inverse(self) -> TruncatedSeries:
        """Reciprocal; requires an invertible rational constant term."""
        c0 = self.coeffs[0]
        if not c0.is_constant() or not c0.constant_value():
            raise ValueError(
                f"series not invertible: constant term {c0} is not a nonzero rational")
        inv0 = Fraction(1, 1) / Fraction(c0.constant_value())
        out = [Poly.const(inv0)]
        for n in range(1, self.order + 1):
            acc = _ZERO
            for k in range(1, n + 1):
                if not self.coeffs[k].is_zero():
                    acc = acc + self.coeffs[k] * out[n - k]
            out.append(acc.scale(-inv0))
        return TruncatedSeries(out, self.order)

    def __truediv__(self, other: TruncatedSeries) -> TruncatedSeries:
        return self * other.inverse()

    def sqrt(self) -> TruncatedSeries:
        """Square root with constant term 1; radicand must be u,v-free."""
        if any(not c.is_constant() for c in self.coeffs):
            raise ValueError("sqrt requires a u,v-free radicand")
        if self.coeffs[0].constant_value() != 1:
            raise ValueError("sqrt requires constant term 1")
        r = [Fraction(1)]
        s = [Fraction(c.constant_value()) for c in self.coeffs]
        for n in range(1, self.order + 1):
            acc = sum(r[i] * r[n - i] for i in range(1, n))
            r.append((s[n] - acc) / 2)
        return TruncatedSeries([Poly.const(x) for x in r], self.order)

    def pow(self, k: int) -> TruncatedSeries:
        out = TruncatedSeries.from_terms(self.order, {(0, 0, 0): 1})
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def subs_one(self, u: bool = False, v: bool = False) -> TruncatedSeries:
        return TruncatedSeries([c.subs_one(u, v) for c in self.coeffs], self.order)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return all(self.coeffs[i] == other.coeffs[i] for i in range(order + 1))

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __str__(self) -> str:
        parts = []
        for n, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            tpart = "" if n == 0 else ("t" if n == 1 else f"t^{n}")
            if c.is_constant():
                val = c.constant_value()
                if not tpart:
                    parts.append(str(val))
                elif val == 1:
                    parts.append(tpart)
                elif val == -1:
                    parts.append(f"-{tpart}")
                else:
                    parts.append(f"{val}{tpart}")
            else:
                body = str(c)
                parts.append(f"({body}){tpart}" if tpart else f"({body})")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    __repr__ = __str__

    def to_json(self) -> list:
        """Nested arrays of rational strings: result[n][deg_u][deg_v] = "p/q"."""
        out = []
        for c in self.coeffs:
            du = max((a for (a, _) in c.terms), default=0)
            dv = max((b for (_, b) in c.terms), default=0)
            grid = [[str(Fraction(c.terms.get((a, b), 0)))
                     for b in range(dv + 1)] for a in range(du + 1)]
            out.append(grid)
        return out


def expand_rational(num: TruncatedSeries, den: TruncatedSeries) -> TruncatedSeries:
    """num/den where den has an invertible rational constant term."""
    return num * den.inverse()


def divide_cancel(num: TruncatedSeries, den: TruncatedSeries) -> TruncatedSeries:
    """num/den allowing a common power of t to be canceled first.

    The first nonzero coefficient of den (after cancellation) must be an
    invertible rational; num must vanish to at least the same t-order.  The
    result's order drops by the canceled power.
    """
    k = den.first_nonzero()
    if k is None:
        raise ZeroDivisionError("division by the zero series")
    if k:
        num = num.shift(-k)
        den = den.shift(-k)
    return num * den.inverse()


def sqrt_series(s: TruncatedSeries) -> TruncatedSeries:
    return s.sqrt()


def algebraic_root(eq_coeffs: Sequence[TruncatedSeries], order: int) -> TruncatedSeries:
    """The unique power-series root Y with Y(0) = 0 of sum_i c_i(t) Y^i = 0.

    Requires c_0(0) = 0 and c_1(0) invertible; solved by Newton iteration
    with doubling precision.
    """
    coeffs = [c.truncate(order) if c.order > order
              else TruncatedSeries(c.coeffs, order) for c in eq_coeffs]
    c0 = coeffs[0].coeffs[0]
    c1 = coeffs[1].coeffs[0]
    if not c0.is_zero():
        raise ValueError("no power-series branch: equation does not vanish at Y=0, t=0")
    if not c1.is_constant() or not c1.constant_value():
        raise ValueError("branch not unique: linear coefficient not invertible at t=0")

    def eval_eq(y: TruncatedSeries, upto: int) -> tuple[TruncatedSeries, TruncatedSeries]:
        # value sum_i c_i Y^i and derivative sum_i i c_i Y^(i-1), both mod t^(upto+1)
        val = TruncatedSeries.zero(upto)
        der = TruncatedSeries.zero(upto)
        ypow = TruncatedSeries.from_terms(upto, {(0, 0, 0): 1})
        yt = TruncatedSeries(y.coeffs[: upto + 1], upto)
        for i, c in enumerate(coeffs):
            ct = c.truncate(upto)
            val = val + ct * ypow
            if i + 1 < len(coeffs):
                der = der + coeffs[i + 1].truncate(upto).scale(Poly.const(i + 1)) * ypow
                ypow = ypow * yt
        return val, der

    y = TruncatedSeries.zero(1)
    prec = 1
    while True:
        upto = min(order, 2 * prec)
        ycur = TruncatedSeries(y.coeffs, upto)
        val, der = eval_eq(ycur, upto)
        y = ycur - val * der.inverse()
        if prec >= order:
            break
        prec = upto
    val, _ = eval_eq(y, order)
    if not val.is_zero():
        raise ArithmeticError("Newton iteration failed to converge")
    return y
