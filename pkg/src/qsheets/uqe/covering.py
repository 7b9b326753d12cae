"""The covering map pi from central characters to the big cell of SL_n.

Conventions (defining representation, n = rank + 1):

* f_i = E_{i+1,i}, e_i = E_{i,i+1};
* f_{beta_r} = Ad(n_{i_1} ... n_{i_{r-1}})(f_{i_r}) with
  n_i = exp(f_i) exp(-e_i) exp(f_i); each f_beta is +-E_{b,a};
* the minus part is prod_{r=N..1} exp(x_r f_{beta_r}) with
  x_r = (eps - eps^-1)^ell * chi(F_{beta_r}^ell);
* the torus part is tau^2 where omega_j(tau) = chi(K_{omega_j}^ell);
* the plus part is prod_{r=1..N} exp(y_r e_{beta_r}) with e_beta the
  transpose of f_beta and y_r = (eps - eps^-1)^ell * chi(E_{beta_r}^ell).

Any other fixed nonzero normalisations only rescale coordinates; the exact
round trip ``pi_map(char_from_point(g)) == g`` is what the tests enforce.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .. import linalg
from ..cyclo import CycNumber, principal_root, root_of_unity
from ..roots import LeviData, levi as make_levi
from .algebra import Presentation
from .center import CentralCharacter

__all__ = [
    "GroupPoint",
    "chevalley_f",
    "pi_map",
    "char_from_point",
    "restrict_char",
    "levi_factorization_holds",
    "random_lower_point",
]


def _cyc(x) -> CycNumber:
    return x if isinstance(x, CycNumber) else CycNumber.rational(x)


@dataclass(frozen=True)
class GroupPoint:
    """u_minus * diag(t) * u_plus in SL_n."""

    u_minus: np.ndarray
    t: tuple[CycNumber, ...]
    u_plus: np.ndarray

    def __post_init__(self):
        n = len(self.t)
        for name, lower in (("u_minus", True), ("u_plus", False)):
            u = getattr(self, name)
            for i in range(n):
                if u[i, i] != 1:
                    raise ValueError(f"{name} is not unipotent")
                for j in range(n):
                    if (j > i if lower else j < i) and u[i, j]:
                        raise ValueError(f"{name} is not triangular")
        det = CycNumber.rational(1)
        for x in self.t:
            det = det * _cyc(x)
        if det != 1:
            raise ValueError("torus part must have determinant 1")

    @property
    def n(self) -> int:
        return len(self.t)

    @property
    def matrix(self) -> np.ndarray:
        d = linalg.zeros(self.n)
        for i, x in enumerate(self.t):
            d[i, i] = x
        return linalg.matmul(linalg.matmul(self.u_minus, d), self.u_plus)

    @property
    def in_lower_borel(self) -> bool:
        return linalg.mat_equal(self.u_plus, linalg.identity(self.n))

    @classmethod
    def from_lower_matrix(cls, g: np.ndarray) -> "GroupPoint":
        """Factor a lower-triangular matrix of determinant 1."""
        n = g.shape[0]
        t = tuple(_cyc(g[i, i]) for i in range(n))
        u = linalg.zeros(n)
        for i in range(n):
            for j in range(i + 1):
                u[i, j] = g[i, j] / t[j] if g[i, j] else 0
        return cls(u, t, linalg.identity(n))

    def __eq__(self, other):
        if not isinstance(other, GroupPoint):
            return NotImplemented
        return linalg.mat_equal(self.matrix, other.matrix)

    __hash__ = None


def _elementary(n: int, i: int, j: int, c=1) -> np.ndarray:
    m = linalg.zeros(n)
    m[i, j] = c
    return m


def _exp_nilpotent(x: np.ndarray) -> np.ndarray:
    """exp of a nilpotent integer matrix (finite sum, exact)."""
    n = x.shape[0]
    out = linalg.identity(n)
    term = linalg.identity(n)
    k = 1
    while True:
        term = linalg.scale(CycNumber.rational(1) / k, linalg.matmul(term, x))
        if linalg.is_zero(term):
            return out
        out = linalg.add(out, term)
        k += 1


def _tits_element(n: int, i: int) -> np.ndarray:
    ef = _exp_nilpotent(_elementary(n, i + 1, i))
    ee = _exp_nilpotent(_elementary(n, i, i + 1, -1))
    return linalg.matmul(linalg.matmul(ef, ee), ef)


def chevalley_f(p: Presentation) -> list[np.ndarray]:
    """Matrices f_{beta_r} in the defining representation."""
    n = p.rank + 1
    out = []
    for r, i in enumerate(p.word.letters):
        g = linalg.identity(n)
        for j in p.word.letters[:r]:
            g = linalg.matmul(g, _tits_element(n, j))
        f = linalg.matmul(linalg.matmul(g, _elementary(n, i + 1, i)), linalg.inverse(g))
        out.append(_normalize_int(f))
    return out


def _normalize_int(m: np.ndarray) -> np.ndarray:
    out = linalg.zeros(*m.shape)
    for idx, x in np.ndenumerate(m):
        if x:
            v = x.to_fraction() if isinstance(x, CycNumber) else x
            out[idx] = int(v)
    return out


def _position(f: np.ndarray) -> tuple[int, int, int]:
    (rows, cols) = np.nonzero(np.vectorize(bool)(f))
    if len(rows) != 1:
        raise ArithmeticError("Chevalley vector is not a signed matrix unit")
    i, j = int(rows[0]), int(cols[0])
    return i, j, int(f[i, j])


def _c_ell(p: Presentation) -> CycNumber:
    return (p.eps - p.eps.inverse()) ** p.ell


def _unipotent_product(mats, coeffs, n) -> np.ndarray:
    u = linalg.identity(n)
    for m, x in zip(mats, coeffs):
        if x:
            u = linalg.matmul(u, linalg.add(linalg.identity(n), linalg.scale(x, m)))
    return u


def pi_map(p: Presentation, chi: CentralCharacter) -> GroupPoint:
    if not chi.matches(p):
        raise ValueError("central character belongs to a different presentation")
    n = p.rank + 1
    c = _c_ell(p)
    fs = chevalley_f(p)
    xs = [c * v for v in chi.f_values]
    u_minus = _unipotent_product(reversed(fs), reversed(xs), n)
    es = [f.T.copy() for f in fs]
    ys = [c * v for v in chi.e_values]
    u_plus = _unipotent_product(es, ys, n)
    k = [CycNumber.rational(1)] + list(chi.k_values) + [CycNumber.rational(1)]
    t = tuple(((k[j + 1] / k[j]) ** 2).simplify() for j in range(n))
    return GroupPoint(u_minus, t, u_plus)


def char_from_point(p: Presentation, g: GroupPoint | np.ndarray) -> CentralCharacter:
    """A central character with chi^+ = 0 mapping to g in B^-.

    chi(K_{omega_j}^ell) is the principal square root of omega_j(t)."""
    if not isinstance(g, GroupPoint):
        g = GroupPoint.from_lower_matrix(g)
    if not g.in_lower_borel:
        raise ValueError("char_from_point needs a point of the lower Borel subgroup")
    n = p.rank + 1
    if g.n != n:
        raise ValueError(f"point has size {g.n}, expected {n}")
    fs = chevalley_f(p)
    c = _c_ell(p)
    u = g.u_minus
    xs = [None] * p.N
    for r in range(p.N - 1, -1, -1):
        i, j, sign = _position(fs[r])
        x = u[i, j]
        x = _cyc(x) * sign if x else CycNumber.rational(0)
        xs[r] = x
        if x:
            u = linalg.matmul(linalg.sub(linalg.identity(n), linalg.scale(x, fs[r])), u)
    if not linalg.mat_equal(u, linalg.identity(n)):
        raise ArithmeticError("peeling the minus part did not terminate at the identity")
    f_values = [x / c for x in xs]
    k_values = []
    acc = CycNumber.rational(1)
    for j in range(p.rank):
        acc = acc * g.t[j]
        k_values.append(principal_root(acc, 2))
    return CentralCharacter(p.ell, p.word.letters, f_values, [0] * p.N, k_values)


def _levi_of(p: Presentation, levi_data) -> LeviData:
    if isinstance(levi_data, LeviData):
        return levi_data
    return make_levi(p.rs, levi_data)


def restrict_char(p: Presentation, chi: CentralCharacter, levi_data) -> CentralCharacter:
    """chi_L: the values on the first N_L root vectors and on K^ell."""
    lv = _levi_of(p, levi_data)
    nl = lv.N_L
    if not all(lv.contains_root(b) for b in p.betas[:nl]):
        raise ValueError(f"the reduced word {p.word} has no prefix for the Levi {lv}")
    return CentralCharacter(
        chi.ell, p.word.letters[:nl], chi.f_values[:nl], chi.e_values[:nl], chi.k_values
    )


def levi_factorization_holds(p: Presentation, chi: CentralCharacter, levi_data) -> bool:
    """pi^-(chi) * pi_L^-(chi_L)^{-1} lies in the opposite unipotent radical."""
    lv = _levi_of(p, levi_data)
    chi_l = restrict_char(p, chi, lv)
    n = p.rank + 1
    c = _c_ell(p)
    fs = chevalley_f(p)
    full = _unipotent_product(reversed(fs), reversed([c * v for v in chi.f_values]), n)
    nl = lv.N_L
    part = _unipotent_product(reversed(fs[:nl]), reversed([c * v for v in chi_l.f_values]), n)
    q = linalg.matmul(full, linalg.inverse(part))
    block = []
    for i in range(p.rank + 1):
        block.append(0 if i == 0 else (block[-1] if (i - 1) in lv.simple else block[-1] + 1))
    for i in range(n):
        for j in range(n):
            if i == j:
                if q[i, j] != 1:
                    return False
            elif q[i, j] and (j > i or block[i] == block[j]):
                return False
    return True


def random_lower_point(p: Presentation, rng: random.Random, height: int = 3) -> GroupPoint:
    """Pseudorandom point of B^- over Q(zeta_3) with square-rootable torus part."""
    n = p.rank + 1
    z3 = root_of_unity(3)

    def entry():
        a, b = rng.randint(-height, height), rng.randint(-height, height)
        return CycNumber.rational(a) + z3 * b

    u = linalg.identity(n)
    for i in range(n):
        for j in range(i):
            u[i, j] = entry()
    t = []
    for _ in range(n - 1):
        scale = CycNumber.rational(rng.choice([1, 2, 3, 4, 9]))
        if rng.random() < 0.5:
            scale = CycNumber.rational(1) / scale
        t.append(scale * z3 ** rng.randrange(3) * rng.choice([1, -1]))
    last = CycNumber.rational(1)
    for x in t:
        last = last / x
    t.append(last)
    return GroupPoint(u, tuple(x.simplify() for x in t), linalg.identity(n))
