"""Exact arithmetic in cyclotomic fields Q(zeta_k).

Elements are stored in the power basis ``1, z, ..., z^(phi(k)-1)`` reduced
modulo the k-th cyclotomic polynomial, with exact rational coefficients
(``gmpy2.mpq`` internally).  Operands with different conductors are lifted
to ``Q(zeta_lcm)`` before combining.

The textual form used by the CLI and the JSON reports is::

    1 + -2/3*z + z^3 @ conductor 7
"""

from __future__ import annotations

import re
from contextlib import contextmanager
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational

import gmpy2
from gmpy2 import mpq

__all__ = [
    "ConductorError",
    "CycNumber",
    "RootExtractionError",
    "conductor_cap",
    "get_conductor_cap",
    "set_conductor_cap",
    "zeta",
    "root_of_unity",
    "q_int",
    "q_factorial",
    "q_binomial",
    "nth_roots",
    "principal_root",
    "parse",
]


class ConductorError(ArithmeticError):
    """Raised when a result would need a conductor above the configured cap."""


class RootExtractionError(ArithmeticError):
    """Raised when an n-th root cannot be found inside a cyclotomic field."""


_CAP = [2 * 7 * 120]


def get_conductor_cap() -> int:
    return _CAP[0]


def set_conductor_cap(cap: int) -> None:
    if cap < 1:
        raise ValueError("conductor cap must be positive")
    _CAP[0] = int(cap)


@contextmanager
def conductor_cap(cap: int):
    old = _CAP[0]
    set_conductor_cap(cap)
    try:
        yield
    finally:
        _CAP[0] = old


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def _canon_conductor(k: int) -> int:
    # Q(zeta_2m) = Q(zeta_m) for odd m
    return k // 2 if k % 4 == 2 else k


def _check_cap(k: int) -> None:
    if k > _CAP[0]:
        raise ConductorError(f"conductor {k} exceeds cap {_CAP[0]}")


# ---------------------------------------------------------------------------
# number theory helpers
# ---------------------------------------------------------------------------

def _factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def totient(n: int) -> int:
    r = n
    for p in _factor(n):
        r = r // p * (p - 1)
    return r


def mobius(n: int) -> int:
    f = _factor(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, constant term first."""
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _poly_exact_div(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _poly_exact_div(num: list[int], den: list[int]) -> list[int]:
    num = num[:]
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(out) - 1, -1, -1):
        q, r = divmod(num[i + len(den) - 1], lead)
        assert r == 0
        out[i] = q
        if q:
            for j, c in enumerate(den):
                num[i + j] -= q * c
    return out


class _Field:
    """Cached per-conductor data."""

    __slots__ = ("k", "phi", "poly", "reduce", "powers", "ntrace")

    def __init__(self, k: int):
        self.k = k
        self.poly = cyclotomic_polynomial(k)
        phi = self.phi = len(self.poly) - 1
        # x^e mod Phi_k for 0 <= e < max(2*phi - 1, k)
        top = max(2 * phi - 1, k)
        vec = [0] * phi
        vec[0] = 1
        table = []
        for _ in range(top):
            table.append(tuple(vec))
            carry = vec[-1]
            vec = [0] + vec[:-1]
            if carry:
                for i in range(phi):
                    vec[i] -= carry * self.poly[i]
        self.reduce = table
        self.powers = table[:k]
        self.ntrace = tuple(
            mpq(mobius(k // gcd(j, k)), totient(k // gcd(j, k))) for j in range(phi)
        )


@lru_cache(maxsize=None)
def _field(k: int) -> _Field:
    return _Field(k)


_ZERO = mpq(0)
_ONE = mpq(1)


def _to_mpq(x) -> mpq:
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, str):
        return mpq(Fraction(x))
    return mpq(x)


# ---------------------------------------------------------------------------
# the number type
# ---------------------------------------------------------------------------

class CycNumber:
    """An element of Q(zeta_k) in reduced power-basis form.  Immutable."""

    __slots__ = ("k", "c")

    def __init__(self, k: int, coeffs=None):
        k = int(k)
        if k < 1:
            raise ValueError("conductor must be positive")
        F = _field(k)
        if coeffs is None:
            c = (_ZERO,) * F.phi
        else:
            raw = [_to_mpq(x) for x in coeffs]
            if len(raw) > F.phi:
                c = _reduce(raw, F)
            else:
                c = tuple(raw) + (_ZERO,) * (F.phi - len(raw))
        if k % 4 == 2:
            # rewrite in Q(zeta_{k/2}); zeta_k = -zeta_{k/2}^((k/2+1)/2)
            h = k // 2
            G = _field(h)
            e = (h + 1) // 2
            acc = [_ZERO] * G.phi
            for j, cj in enumerate(c):
                if cj:
                    v = G.powers[(e * j) % h]
                    s = -cj if j % 2 else cj
                    for i, vi in enumerate(v):
                        if vi:
                            acc[i] += s * vi
            k, c = h, tuple(acc)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "c", c)

    def __setattr__(self, name, value):
        raise AttributeError("CycNumber is immutable")

    @classmethod
    def _raw(cls, k: int, c: tuple) -> "CycNumber":
        obj = object.__new__(cls)
        object.__setattr__(obj, "k", k)
        object.__setattr__(obj, "c", c)
        return obj

    @classmethod
    def rational(cls, x) -> "CycNumber":
        return cls._raw(1, (_to_mpq(x),))

    # -- basic properties ---------------------------------------------------
    @property
    def conductor(self) -> int:
        return self.k

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(int(x.numerator), int(x.denominator)) for x in self.c)

    def is_zero(self) -> bool:
        return not any(self.c)

    def __bool__(self) -> bool:
        return any(self.c)

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def to_fraction(self) -> Fraction:
        s = self.simplify()
        if not s.is_rational():
            raise ValueError(f"{self} is not rational")
        x = s.c[0]
        return Fraction(int(x.numerator), int(x.denominator))

    # -- conductor handling -------------------------------------------------
    def lift(self, m: int) -> "CycNumber":
        """The same element written in Q(zeta_m); ``k`` must divide ``m``."""
        m = _canon_conductor(m)
        if m == self.k:
            return self
        if m % self.k:
            raise ValueError(f"cannot lift conductor {self.k} to {m}")
        _check_cap(m)
        G = _field(m)
        step = m // self.k
        acc = [_ZERO] * G.phi
        for j, cj in enumerate(self.c):
            if cj:
                v = G.powers[(j * step) % m]
                for i, vi in enumerate(v):
                    if vi:
                        acc[i] += cj * vi
        return CycNumber._raw(m, tuple(acc))

    def galois(self, t: int) -> "CycNumber":
        """Apply the automorphism zeta -> zeta^t (t coprime to the conductor)."""
        if gcd(t, self.k) != 1:
            raise ValueError("exponent must be coprime to the conductor")
        F = _field(self.k)
        acc = [_ZERO] * F.phi
        for j, cj in enumerate(self.c):
            if cj:
                v = F.powers[(j * t) % self.k]
                for i, vi in enumerate(v):
                    if vi:
                        acc[i] += cj * vi
        return CycNumber._raw(self.k, tuple(acc))

    def conjugate(self) -> "CycNumber":
        return self.galois(-1 % self.k) if self.k > 2 else self

    def simplify(self) -> "CycNumber":
        """Rewrite in the smallest cyclotomic field containing the element."""
        x = self
        changed = True
        while changed and x.k > 1:
            changed = False
            for p in sorted(_factor(x.k)):
                d = _canon_conductor(x.k // p)
                if d == x.k:
                    continue
                y = x._descend(d)
                if y is not None:
                    x, changed = y, True
                    break
        return x

    def _descend(self, d: int) -> "CycNumber | None":
        k = self.k
        ts = [t for t in range(2, k) if gcd(t, k) == 1 and (t - 1) % d == 0]
        if any(self.galois(t) != self for t in ts):
            return None
        # solve for coordinates in Q(zeta_d)
        D = _field(d)
        cols = [CycNumber._raw(d, tuple(_ONE if i == j else _ZERO for i in range(D.phi))).lift(k).c
                for j in range(D.phi)]
        sol = _solve_rational([list(r) for r in zip(*cols)], list(self.c))
        return CycNumber._raw(d, tuple(sol))

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, CycNumber):
            a, b = self, other
        elif isinstance(other, (int, Rational, type(_ZERO))):
            return self, CycNumber._raw(self.k, (_to_mpq(other),) + (_ZERO,) * (len(self.c) - 1))
        else:
            return NotImplemented
        if a.k != b.k:
            m = _canon_conductor(_lcm(a.k, b.k))
            a, b = a.lift(m), b.lift(m)
        return a, b

    def __add__(self, other):
        if isinstance(other, CycNumber):
            if other.k == self.k:
                return CycNumber._raw(self.k, tuple(x + y for x, y in zip(self.c, other.c)))
            if other.k == 1:
                return CycNumber._raw(self.k, (self.c[0] + other.c[0],) + self.c[1:])
        r = self._coerce(other)
        if r is NotImplemented:
            return r
        a, b = r
        if a.k == self.k and not isinstance(other, CycNumber):
            c = (a.c[0] + b.c[0],) + a.c[1:]
            return CycNumber._raw(a.k, c)
        return CycNumber._raw(a.k, tuple(x + y for x, y in zip(a.c, b.c)))

    __radd__ = __add__

    def __neg__(self):
        return CycNumber._raw(self.k, tuple(-x for x in self.c))

    def __pos__(self):
        return self

    def __sub__(self, other):
        if isinstance(other, CycNumber) and other.k == self.k:
            return CycNumber._raw(self.k, tuple(x - y for x, y in zip(self.c, other.c)))
        r = self._coerce(other)
        if r is NotImplemented:
            return r
        a, b = r
        return CycNumber._raw(a.k, tuple(x - y for x, y in zip(a.c, b.c)))

    def __rsub__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return r
        a, b = r
        return CycNumber._raw(a.k, tuple(y - x for x, y in zip(a.c, b.c)))

    def __mul__(self, other):
        if not isinstance(other, CycNumber):
            if isinstance(other, (int, Rational, type(_ZERO))):
                s = _to_mpq(other)
                return CycNumber._raw(self.k, tuple(x * s for x in self.c))
            return NotImplemented
        if other.k == 1:
            s = other.c[0]
            return CycNumber._raw(self.k, tuple(x * s for x in self.c))
        if self.k == 1:
            s = self.c[0]
            return CycNumber._raw(other.k, tuple(s * y for y in other.c))
        if self.k == other.k:
            return CycNumber._raw(self.k, _mul(self.c, other.c, _field(self.k)))
        a, b = self._coerce(other)
        return CycNumber._raw(a.k, _mul(a.c, b.c, _field(a.k)))

    __rmul__ = __mul__

    def inverse(self) -> "CycNumber":
        if not self:
            raise ZeroDivisionError("division by zero in cyclotomic field")
        if self.k == 1:
            return CycNumber._raw(1, (1 / self.c[0],))
        F = _field(self.k)
        phi = F.phi
        # columns: self * z^j
        cols = []
        for j in range(phi):
            basis = [_ZERO] * phi
            basis[j] = _ONE
            cols.append(_mul(self.c, tuple(basis), F))
        rows = [[cols[j][i] for j in range(phi)] for i in range(phi)]
        rhs = [_ONE] + [_ZERO] * (phi - 1)
        return CycNumber._raw(self.k, tuple(_solve_rational(rows, rhs)))

    def __truediv__(self, other):
        if isinstance(other, CycNumber):
            return self * other.inverse()
        if isinstance(other, (int, Rational, type(_ZERO))):
            s = _to_mpq(other)
            if not s:
                raise ZeroDivisionError("division by zero in cyclotomic field")
            return CycNumber._raw(self.k, tuple(x / s for x in self.c))
        return NotImplemented

    def __rtruediv__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return r
        return r[1] * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = CycNumber._raw(self.k, (_ONE,) + (_ZERO,) * (len(self.c) - 1))
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, CycNumber):
            if self.k == other.k:
                return self.c == other.c
            m = _lcm(self.k, other.k)
            m = _canon_conductor(m)
            with conductor_cap(max(m, _CAP[0])):
                return self.lift(m).c == other.lift(m).c
        if isinstance(other, (int, Rational, type(_ZERO))):
            return self.c[0] == _to_mpq(other) and not any(self.c[1:])
        return NotImplemented

    def __hash__(self):
        # normalised trace is invariant under lifting
        if self.k == 1:
            return hash(self.c[0])
        t = sum((x * w for x, w in zip(self.c, _field(self.k).ntrace)), _ZERO)
        if not any(self.c[1:]):
            return hash(self.c[0])
        return hash(t)

    def order(self) -> int | None:
        """Multiplicative order if this is a root of unity, else None."""
        m = _lcm(2, self.k)
        one = CycNumber.rational(1)
        p = self
        for j in range(1, m + 1):
            if p == one:
                return j
            p = p * self
        return None

    # -- text ---------------------------------------------------------------
    def __str__(self):
        s = self.simplify()
        terms = []
        for j, x in enumerate(s.c):
            if not x:
                continue
            q = str(Fraction(int(x.numerator), int(x.denominator)))
            if j == 0:
                terms.append(q)
            elif j == 1:
                terms.append(f"{q}*z")
            else:
                terms.append(f"{q}*z^{j}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} @ conductor {s.k}"

    def __repr__(self):
        return f"CycNumber({self})"


def _reduce(raw: list, F: _Field) -> tuple:
    phi = F.phi
    out = list(raw[:phi]) + [_ZERO] * max(0, phi - len(raw))
    for e in range(phi, len(raw)):
        x = raw[e]
        if x:
            v = F.reduce[e] if e < len(F.reduce) else F.powers[e % F.k]
            for i, vi in enumerate(v):
                if vi:
                    out[i] += x * vi
    return tuple(out)


def _mul(a: tuple, b: tuple, F: _Field) -> tuple:
    phi = F.phi
    prod = [_ZERO] * (2 * phi - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    prod[i + j] += x * y
    if phi == 1:
        return (prod[0],)
    red = F.reduce
    out = prod[:phi]
    for e in range(phi, 2 * phi - 1):
        x = prod[e]
        if x:
            for i, vi in enumerate(red[e]):
                if vi:
                    out[i] += x * vi
    return tuple(out)


def _solve_rational(rows: list[list], rhs: list) -> list:
    """Solve a square (or consistent overdetermined) rational system."""
    n = len(rows[0])
    m = [list(r) + [v] for r, v in zip(rows, rhs)]
    piv_cols = []
    r = 0
    for col in range(n):
        p = next((i for i in range(r, len(m)) if m[i][col]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        piv_cols.append(col)
        r += 1
    for i in range(r, len(m)):
        if m[i][-1]:
            raise ArithmeticError("inconsistent rational system")
    sol = [_ZERO] * n
    for i, col in enumerate(piv_cols):
        sol[col] = m[i][-1]
    return sol


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def root_of_unity(k: int, j: int = 1) -> CycNumber:
    """zeta_k ** j as an exact element."""
    if k < 1:
        raise ValueError("order must be positive")
    _check_cap(_canon_conductor(k))
    j %= k
    F = _field(k)
    return CycNumber(k, F.powers[j])


def zeta(k: int) -> CycNumber:
    return root_of_unity(k, 1)


_TOKEN = re.compile(r"^\s*([+-]?\s*(?:[0-9]+(?:/[0-9]+)?)?)\s*(\*?\s*z(?:\s*\^\s*([0-9]+))?)?\s*$")


def parse(text: str) -> CycNumber:
    """Inverse of ``str(CycNumber)``; also accepts plain rationals."""
    if "@" in text:
        body, tail = text.split("@", 1)
        tail = tail.strip()
        if tail.startswith("conductor"):
            tail = tail[len("conductor"):]
        k = int(tail.strip())
    else:
        body, k = text, 1
    body = body.strip()
    if body in ("", "0"):
        return CycNumber(k)
    coeffs: dict[int, mpq] = {}
    for part in re.split(r"\s+\+\s+", body):
        mt = _TOKEN.match(part)
        if mt is None or (not mt.group(1).strip() and mt.group(2) is None):
            raise ValueError(f"cannot parse term {part!r}")
        coef_txt = mt.group(1).replace(" ", "")
        if coef_txt in ("", "+"):
            coef = _ONE
        elif coef_txt == "-":
            coef = mpq(-1)
        else:
            coef = _to_mpq(coef_txt)
        if mt.group(2) is None:
            e = 0
        else:
            e = int(mt.group(3)) if mt.group(3) else 1
        coeffs[e] = coeffs.get(e, _ZERO) + coef
    x = CycNumber(k)
    z = zeta(k) if k > 1 else CycNumber.rational(1)
    for e, cf in coeffs.items():
        x = x + (z ** e) * cf
    return x


# ---------------------------------------------------------------------------
# q-combinatorics at a root of unity
# ---------------------------------------------------------------------------

def _check_primitive(eps: CycNumber, ell: int | None) -> int:
    o = eps.order()
    if o is None:
        raise ValueError(f"{eps} is not a root of unity")
    if ell is not None and o != ell:
        raise ValueError(f"{eps} has order {o}, not {ell}")
    if o < 3 or o % 2 == 0:
        raise ValueError(f"root of unity order must be odd and >= 3, got {o}")
    return o


def q_int(n: int, eps: CycNumber, ell: int | None = None) -> CycNumber:
    """[n] = (eps^n - eps^-n) / (eps - eps^-1)."""
    _check_primitive(eps, ell)
    inv = eps.inverse()
    return (eps ** n - inv ** n) / (eps - inv)


def q_factorial(n: int, eps: CycNumber, ell: int | None = None) -> CycNumber:
    _check_primitive(eps, ell)
    out = CycNumber.rational(1)
    for j in range(1, n + 1):
        out = out * q_int(j, eps)
    return out


def q_binomial(n: int, k: int, eps: CycNumber, ell: int | None = None) -> CycNumber:
    """Gaussian binomial evaluated through the q-Pascal rule, so vanishing
    q-factorials at eps never appear in a denominator."""
    _check_primitive(eps, ell)
    if k < 0 or k > n:
        return CycNumber.rational(0)
    inv = eps.inverse()
    row = [CycNumber.rational(1)]
    for m in range(1, n + 1):
        new = []
        for j in range(m + 1):
            v = CycNumber.rational(0)
            if j <= m - 1:
                v = v + row[j] * inv ** j
            if j >= 1:
                v = v + row[j - 1] * eps ** (m - j)
            new.append(v)
        row = new
    return row[k]


# ---------------------------------------------------------------------------
# roots
# ---------------------------------------------------------------------------

def _split_rational_times_unit(a: CycNumber) -> tuple[mpq, int, int]:
    """Write a = r * zeta_K^j with r > 0 rational.  Returns (r, K, j)."""
    if not a:
        raise RootExtractionError("zero has no multiplicative decomposition")
    K = _lcm(2, a.k)
    b = (a ** K).simplify()
    if not b.is_rational():
        raise RootExtractionError(f"{a} is not a rational multiple of a root of unity")
    bq = b.c[0]
    if bq <= 0:
        raise RootExtractionError(f"{a} is not a rational multiple of a root of unity")
    num, ok1 = gmpy2.iroot(gmpy2.mpz(bq.numerator), K)
    den, ok2 = gmpy2.iroot(gmpy2.mpz(bq.denominator), K)
    if not (ok1 and ok2):
        raise RootExtractionError(f"{a} is not a rational multiple of a root of unity")
    r = mpq(num, den)
    unit = a / r
    for j in range(K):
        if root_of_unity(K, j) == unit:
            return r, K, j
    raise RootExtractionError(f"{a} is not a rational multiple of a root of unity")


def _sqrt_prime(p: int) -> CycNumber:
    if p == 2:
        z8 = zeta(8)
        return z8 + z8 ** 7
    g = CycNumber(p)
    for a in range(1, p):
        leg = pow(a, (p - 1) // 2, p)
        s = 1 if leg == 1 else -1
        g = g + root_of_unity(p, a) * s
    if p % 4 == 1:
        return g
    return -zeta(4) * g


def _sqrt_positive_rational(r: mpq) -> CycNumber:
    n = int(r.numerator) * int(r.denominator)
    out = CycNumber.rational(mpq(1, int(r.denominator)))
    for p, e in sorted(_factor(n).items()):
        out = out * (p ** (e // 2))
        if e % 2:
            out = out * _sqrt_prime(p)
    return out


def nth_roots(a: CycNumber, m: int) -> list[CycNumber]:
    """All m-th roots of ``a`` that lie in a cyclotomic field under the cap.

    Supported inputs are rational multiples of roots of unity, which covers
    every torus coordinate this package needs."""
    if m < 1:
        raise ValueError("root order must be positive")
    if not isinstance(a, CycNumber):
        a = CycNumber.rational(a)
    r, K, j = _split_rational_times_unit(a)
    num, ok1 = gmpy2.iroot(gmpy2.mpz(r.numerator), m)
    den, ok2 = gmpy2.iroot(gmpy2.mpz(r.denominator), m)
    if ok1 and ok2:
        rho = CycNumber.rational(mpq(num, den))
    elif m % 2 == 0:
        h = m // 2
        num, ok1 = gmpy2.iroot(gmpy2.mpz(r.numerator), h)
        den, ok2 = gmpy2.iroot(gmpy2.mpz(r.denominator), h)
        if not (ok1 and ok2):
            raise RootExtractionError(f"rational part of {a} has no cyclotomic {m}-th root")
        rho = _sqrt_positive_rational(mpq(num, den))
    else:
        raise RootExtractionError(f"rational part of {a} has no cyclotomic {m}-th root")
    need = _canon_conductor(_lcm(_lcm(rho.k, K * m), m))
    if need > _CAP[0]:
        raise ConductorError(f"{m}-th root of {a} needs conductor {need} (cap {_CAP[0]})")
    base = rho * root_of_unity(K * m, j)
    roots = [(base * root_of_unity(m, t)) for t in range(m)] if m > 1 else [base]
    return [x.lift(need) for x in roots]


def principal_root(a: CycNumber, m: int) -> CycNumber:
    """The m-th root of ``a`` of least argument in [0, 2*pi).

    Writing a = r * exp(2*pi*i*j/K) with r > 0 and 0 <= j < K, this is
    r^(1/m) * exp(2*pi*i*j/(K*m)).  In particular the principal root of a
    positive rational is positive."""
    return nth_roots(a, m)[0].simplify()
