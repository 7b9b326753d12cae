"""Modules over U_eps (or over a quantized Levi) given by explicit matrices."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .. import linalg
from ..cyclo import CycNumber
from ..uqe import AlgebraElement, CentralCharacter, Presentation

__all__ = [
    "MatrixModule",
    "ModuleError",
    "verify_module",
    "derived_character",
    "is_absolutely_irreducible",
    "intertwiners",
    "are_isomorphic",
]


class ModuleError(ArithmeticError):
    """A module failed one of its defining checks."""


@dataclass
class MatrixModule:
    """Matrices for E_i, F_i (i in ``simple``) and K_{omega_j}^{+-1} (all j).

    With ``simple`` equal to every index this is a U_eps(G)-module; a proper
    subset describes a module for the quantized Levi generated by those
    E_i, F_i and the full Cartan part.
    """

    p: Presentation
    E: dict[int, np.ndarray]
    F: dict[int, np.ndarray]
    K: list[np.ndarray]
    Kinv: list[np.ndarray]
    simple: frozenset = None
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.simple is None:
            self.simple = frozenset(range(self.p.rank))
        self.simple = frozenset(self.simple)
        d = self.dim
        for m in list(self.E.values()) + list(self.F.values()) + self.K + self.Kinv:
            if m.shape != (d, d):
                raise ValueError("all generator matrices must be square of the same size")
        if set(self.E) != set(self.simple) or set(self.F) != set(self.simple):
            raise ValueError("E and F matrices must be given exactly for the generator subset")
        self._cache: dict = {}

    @property
    def dim(self) -> int:
        return self.K[0].shape[0]

    @property
    def is_full(self) -> bool:
        return self.simple == frozenset(range(self.p.rank))

    @property
    def n_roots(self) -> int:
        """Number of leading convex-order roots whose root vectors act."""
        if self.is_full:
            return self.p.N
        nl = 0
        for beta in self.p.betas:
            if all(beta[j] == 0 for j in range(self.p.rank) if j not in self.simple):
                nl += 1
            else:
                break
        return nl

    def generators(self) -> list[tuple[str, np.ndarray]]:
        out = []
        for i in sorted(self.simple):
            out.append((f"E{i + 1}", self.E[i]))
            out.append((f"F{i + 1}", self.F[i]))
        for j in range(self.p.rank):
            out.append((f"K{j + 1}", self.K[j]))
            out.append((f"K{j + 1}^-1", self.Kinv[j]))
        return out

    # evaluation ---------------------------------------------------------
    def _word(self, kind: str, word) -> np.ndarray:
        mats = self.E if kind == "E" else self.F
        out = linalg.identity(self.dim)
        for i in word:
            if i not in mats:
                raise ModuleError(f"{kind}{i + 1} does not act on this module")
            out = linalg.matmul(out, mats[i])
        return out

    def root_E(self, r: int) -> np.ndarray:
        key = ("E", r)
        if key not in self._cache:
            acc = linalg.zeros(self.dim)
            for w, c in self.p.root_words[r].items():
                acc = linalg.add(acc, linalg.scale(c, self._word("E", w)))
            self._cache[key] = acc
        return self._cache[key]

    def root_F(self, r: int) -> np.ndarray:
        key = ("F", r)
        if key not in self._cache:
            acc = linalg.zeros(self.dim)
            for w, c in self.p.root_words[r].items():
                acc = linalg.add(acc, linalg.scale(c, self._word("F", w[::-1])))
            self._cache[key] = acc
        return self._cache[key]

    def K_matrix(self, c) -> np.ndarray:
        out = linalg.identity(self.dim)
        for j, e in enumerate(c):
            if e:
                base = self.K[j] if e > 0 else self.Kinv[j]
                out = linalg.matmul(out, linalg.matpow(base, abs(e)))
        return out

    def monomial_matrix(self, a, c, b) -> np.ndarray:
        key = ("m", tuple(a), tuple(c), tuple(b))
        if key in self._cache:
            return self._cache[key]
        out = linalg.identity(self.dim)
        for r in range(len(a) - 1, -1, -1):
            if a[r]:
                out = linalg.matmul(out, linalg.matpow(self.root_F(r), a[r]))
        out = linalg.matmul(out, self.K_matrix(c))
        for r in range(len(b)):
            if b[r]:
                out = linalg.matmul(out, linalg.matpow(self.root_E(r), b[r]))
        self._cache[key] = out
        return out

    def evaluate(self, x: AlgebraElement) -> np.ndarray:
        acc = linalg.zeros(self.dim)
        for (a, c, b), v in x.terms.items():
            acc = linalg.add(acc, linalg.scale(v, self.monomial_matrix(a, c, b)))
        return acc

    def character(self) -> CentralCharacter:
        return derived_character(self)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "generators": sorted(i + 1 for i in self.simple),
            "provenance": {k: v for k, v in self.provenance.items() if isinstance(v, (str, int, list))},
        }


def _relation_residuals(m: MatrixModule) -> list[tuple[str, np.ndarray]]:
    p = m.p
    eps = p.eps
    n = p.rank
    d = m.dim
    I = linalg.identity(d)
    mm = linalg.matmul
    out = []
    for j in range(n):
        out.append((f"K{j + 1} K{j + 1}^-1 = 1", linalg.sub(mm(m.K[j], m.Kinv[j]), I)))
        out.append((f"K{j + 1}^-1 K{j + 1} = 1", linalg.sub(mm(m.Kinv[j], m.K[j]), I)))
        for l in range(j + 1, n):
            out.append((f"K{j + 1} K{l + 1} = K{l + 1} K{j + 1}",
                        linalg.sub(mm(m.K[j], m.K[l]), mm(m.K[l], m.K[j]))))
        for i in sorted(m.simple):
            s = eps if i == j else CycNumber.rational(1)
            out.append((f"K{j + 1} E{i + 1} = eps^d E{i + 1} K{j + 1}",
                        linalg.sub(mm(m.K[j], m.E[i]), linalg.scale(s, mm(m.E[i], m.K[j])))))
            out.append((f"K{j + 1} F{i + 1} = eps^-d F{i + 1} K{j + 1}",
                        linalg.sub(mm(m.K[j], m.F[i]), linalg.scale(s.inverse(), mm(m.F[i], m.K[j])))))
    den = (eps - eps.inverse()).inverse()
    for i in sorted(m.simple):
        for j in sorted(m.simple):
            lhs = linalg.sub(mm(m.E[i], m.F[j]), mm(m.F[j], m.E[i]))
            if i == j:
                a = p.alpha_k[i]
                h = linalg.scale(den, linalg.sub(m.K_matrix(a), m.K_matrix(tuple(-x for x in a))))
                lhs = linalg.sub(lhs, h)
            out.append((f"[E{i + 1}, F{j + 1}]", lhs))
    two = eps + eps.inverse()
    for i in sorted(m.simple):
        for j in sorted(m.simple):
            if i == j:
                continue
            for kind, mats in (("E", m.E), ("F", m.F)):
                X, Y = mats[i], mats[j]
                if p.rs.cartan[i][j] == -1:
                    r = linalg.add(
                        linalg.sub(mm(mm(X, X), Y), linalg.scale(two, mm(mm(X, Y), X))),
                        mm(mm(Y, X), X),
                    )
                    out.append((f"Serre {kind}{i + 1}^2 {kind}{j + 1}", r))
                elif i < j:
                    out.append((f"{kind}{i + 1} {kind}{j + 1} commute",
                                linalg.sub(mm(X, Y), mm(Y, X))))
    return out


def derived_character(m: MatrixModule) -> CentralCharacter:
    """Scalars by which Z0 acts; raises ModuleError if one is not scalar."""
    ell = m.p.ell
    nr = m.n_roots
    vals = {"E": [], "F": []}
    for r in range(nr):
        for kind, mat in (("E", m.root_E(r)), ("F", m.root_F(r))):
            s = linalg.scalar_value(linalg.matpow(mat, ell))
            if s is None:
                raise ModuleError(f"{kind}_beta{r + 1}^{ell} does not act by a scalar")
            vals[kind].append(s)
    ks = []
    for j in range(m.p.rank):
        s = linalg.scalar_value(linalg.matpow(m.K[j], ell))
        if s is None:
            raise ModuleError(f"K{j + 1}^{ell} does not act by a scalar")
        ks.append(s)
    return CentralCharacter(ell, m.p.word.letters[:nr], vals["F"], vals["E"], ks)


def verify_module(m: MatrixModule) -> dict:
    """Check every defining relation and the Z0 scalars; return a report."""
    failures = [name for name, r in _relation_residuals(m) if not linalg.is_zero(r)]
    chi = None
    try:
        chi = derived_character(m)
    except ModuleError as exc:
        failures.append(str(exc))
    return {
        "dim": m.dim,
        "passed": not failures,
        "failures": failures,
        "character": chi,
    }


def _flatten(a: np.ndarray) -> dict:
    return {k: x for k, x in enumerate(a.flat) if x}


def is_absolutely_irreducible(m: MatrixModule, max_dim: int = 200) -> bool:
    """Burnside: the algebra generated by the action matrices is all of
    End(V), i.e. has dimension dim(V)^2."""
    d = m.dim
    if d > max_dim:
        raise ValueError(f"module dimension {d} exceeds the Burnside bound {max_dim}")
    if d == 1:
        return True
    gens = [g for _, g in m.generators()]
    basis = linalg.EchelonBasis()
    frontier = [linalg.identity(d)]
    basis.add(_flatten(frontier[0]))
    while frontier and len(basis) < d * d:
        new = []
        for x in frontier:
            for g in gens:
                y = linalg.matmul(g, x)
                if basis.add(_flatten(y)):
                    new.append(y)
                    if len(basis) == d * d:
                        return True
        frontier = new
    return len(basis) == d * d


def intertwiners(a: MatrixModule, b: MatrixModule) -> list[np.ndarray]:
    """Basis of {X : X a(g) = b(g) X for every generator g}."""
    if a.simple != b.simple:
        raise ValueError("modules over different generator sets")
    da, db = a.dim, b.dim
    ga = dict(a.generators())
    gb = dict(b.generators())
    rows = []
    # unknown X[i, j] at index i * da + j, X is db x da
    for name in ga:
        A, B = ga[name], gb[name]
        for i in range(db):
            for j in range(da):
                row = {}
                for k in range(da):
                    if A[k, j]:
                        key = i * da + k
                        row[key] = row.get(key, 0) + A[k, j]
                for k in range(db):
                    if B[i, k]:
                        key = k * da + j
                        row[key] = row.get(key, 0) - B[i, k]
                row = {k: v for k, v in row.items() if v}
                if row:
                    rows.append(row)
    eb = linalg.EchelonBasis()
    for r in rows:
        eb.add(r)
    n = da * db
    free = [j for j in range(n) if j not in eb.pivots]
    out = []
    for f in free:
        x = [0] * n
        x[f] = 1
        for piv, ri in eb.pivots.items():
            c = eb.rows[ri].get(f)
            if c:
                x[piv] = -c
        mat = linalg.zeros(db, da)
        for k, v in enumerate(x):
            if v:
                mat[k // da, k % da] = v
        out.append(mat)
    return out


def are_isomorphic(a: MatrixModule, b: MatrixModule) -> bool:
    """Isomorphism test for absolutely irreducible modules (Schur)."""
    if a.dim != b.dim:
        return False
    for x in intertwiners(a, b):
        if linalg.rank(x) == a.dim:
            return True
    return False
