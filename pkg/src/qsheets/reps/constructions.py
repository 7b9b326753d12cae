"""Explicit modules: baby Vermas, Cartan characters and tensor twists."""

from __future__ import annotations

from itertools import product

import numpy as np

from .. import linalg
from ..cyclo import CycNumber, principal_root, q_int, root_of_unity
from ..roots import LeviData, levi as make_levi
from ..uqe import Presentation, build_algebra
from .modules import MatrixModule, ModuleError, verify_module

__all__ = [
    "levi_baby_verma",
    "sl2_baby_verma",
    "torus_module",
    "trivial_module",
    "one_dim_module",
    "cartan_twist",
    "tensor_one_dim",
    "direct_sum",
]


def _cyc(x) -> CycNumber:
    return x if isinstance(x, CycNumber) else CycNumber.rational(x)


def _diag(values) -> np.ndarray:
    m = linalg.zeros(len(values))
    for i, v in enumerate(values):
        m[i, i] = v
    return m


def _levi_of(p: Presentation, levi_data) -> LeviData:
    if isinstance(levi_data, LeviData):
        return levi_data
    return make_levi(p.rs, levi_data)


def levi_baby_verma(p: Presentation, i: int, mu, a=0) -> MatrixModule:
    """Baby Verma for the rank-1 Levi generated by E_i, F_i.

    Basis m_0..m_{l-1}; K_{omega_j} m_q = mu_j eps^{-q delta_ij} m_q,
    F_i m_q = m_{q+1} with F_i m_{l-1} = a m_0, E_i m_0 = 0 and
    E_i m_q = [q] (lam eps^{1-q} - lam^-1 eps^{q-1}) / (eps - eps^-1) m_{q-1}
    where lam = K_{alpha_i} on m_0.
    """
    ell, eps = p.ell, p.eps
    mu = [_cyc(x) for x in mu]
    if len(mu) != p.rank or any(not x for x in mu):
        raise ValueError("mu must give a nonzero K_omega eigenvalue for each j")
    a = _cyc(a)
    lam = CycNumber.rational(1)
    for j, e in enumerate(p.alpha_k[i]):
        lam = lam * mu[j] ** e
    den = (eps - eps.inverse()).inverse()
    E = linalg.zeros(ell)
    F = linalg.zeros(ell)
    for q in range(ell):
        F[(q + 1) % ell, q] = a if q == ell - 1 else CycNumber.rational(1)
        if q:
            E[q - 1, q] = q_int(q, eps) * (
                lam * eps ** (1 - q) - lam.inverse() * eps ** (q - 1)
            ) * den
    K, Kinv = [], []
    for j in range(p.rank):
        vals = [mu[j] * (eps ** (-q) if j == i else 1) for q in range(ell)]
        K.append(_diag(vals))
        Kinv.append(_diag([v.inverse() for v in vals]))
    m = MatrixModule(
        p, {i: E}, {i: F}, K, Kinv, simple=frozenset([i]),
        provenance={"kind": "baby_verma", "simple": i, "mu": [str(x) for x in mu], "a": str(a)},
    )
    return m


def sl2_baby_verma(ell: int, lam, a=0) -> MatrixModule:
    """Baby Verma for U_eps(sl2) with K_alpha m_p = lam eps^{-2p} m_p.

    The algebra is presented with K_omega (K_alpha = K_omega^2); we take
    K_omega m_0 = the principal square root of lam.
    """
    lam = _cyc(lam)
    if not lam:
        raise ValueError("lam must be nonzero")
    p = build_algebra(1, ell)
    m = levi_baby_verma(p, 0, [principal_root(lam, 2)], a)
    m.provenance["lam"] = str(lam)
    rep = verify_module(m)
    if not rep["passed"]:
        raise ModuleError(f"baby Verma failed relations: {rep['failures']}")
    return m


def torus_module(p: Presentation, mu) -> MatrixModule:
    """One-dimensional module of the Cartan part: K_{omega_j} -> mu_j."""
    mu = [_cyc(x) for x in mu]
    if len(mu) != p.rank or any(not x for x in mu):
        raise ValueError("mu must give a nonzero scalar for each K_omega_j")
    K = [_diag([x]) for x in mu]
    Kinv = [_diag([x.inverse()]) for x in mu]
    return MatrixModule(p, {}, {}, K, Kinv, simple=frozenset(),
                        provenance={"kind": "torus", "mu": [str(x) for x in mu]})


def trivial_module(p: Presentation, simple=None) -> MatrixModule:
    simple = frozenset(range(p.rank)) if simple is None else frozenset(simple)
    one = CycNumber.rational(1)
    z = linalg.zeros(1)
    return MatrixModule(
        p, {i: z.copy() for i in simple}, {i: z.copy() for i in simple},
        [_diag([one]) for _ in range(p.rank)], [_diag([one]) for _ in range(p.rank)],
        simple=simple, provenance={"kind": "trivial"},
    )


def _blocks(p: Presentation, lv: LeviData) -> list[list[int]]:
    """Diagonal positions of SL_{rank+1} grouped into Levi blocks."""
    out = [[0]]
    for i in range(p.rank):
        if i in lv.simple:
            out[-1].append(i + 1)
        else:
            out.append([i + 1])
    return out


def cartan_twist(p: Presentation, levi_data, z) -> list[CycNumber]:
    """sigma(omega_j) for the one-dimensional module attached to z.

    ``z`` lists the diagonal entries of a point of the connected center
    of L (constant on Levi blocks, determinant 1).  We pick s_b with
    s_b^{2 ell} = z_b on each block b and prod_b s_b^{|b|} = 1, then
    sigma(omega_j) = s_1 ... s_j (positions).  Hence sigma(alpha_i) = 1 for
    alpha_i in L and sigma(omega_j)^{2 ell} = omega_j(z).
    """
    lv = _levi_of(p, levi_data)
    n = p.rank + 1
    z = [_cyc(x) for x in z]
    if len(z) != n:
        raise ValueError(f"z must have {n} diagonal entries")
    det = CycNumber.rational(1)
    for x in z:
        det = det * x
    if det != 1:
        raise ValueError("z must have determinant 1")
    blocks = _blocks(p, lv)
    for b in blocks:
        if any(z[k] != z[b[0]] for k in b):
            raise ValueError("z is not in the center of the Levi")
    two_ell = 2 * p.ell
    s = [principal_root(z[b[0]], two_ell) for b in blocks]
    # correct prod s_b^{|b|} (a 2l-th root of unity) to 1
    prod = CycNumber.rational(1)
    for sb, b in zip(s, blocks):
        prod = prod * sb ** len(b)
    zeta = root_of_unity(two_ell)
    k = next((k for k in range(two_ell) if zeta ** k == prod), None)
    if k is None:
        raise ModuleError("normalising product is not a 2l-th root of unity")
    sizes = [len(b) for b in blocks]
    shift = _solve_mod(sizes, (-k) % two_ell, two_ell)
    if shift is None:
        raise ModuleError(f"no 2l-th root twist with block sizes {sizes} for z")
    s = [sb * zeta ** e for sb, e in zip(s, shift)]
    pos = [None] * n
    for sb, b in zip(s, blocks):
        for k2 in b:
            pos[k2] = sb
    out, acc = [], CycNumber.rational(1)
    for j in range(p.rank):
        acc = acc * pos[j]
        out.append(acc.simplify())
    return out


def _solve_mod(sizes: list[int], target: int, m: int) -> list[int] | None:
    """Exponents e with sum sizes[b] * e_b = target mod m, or None."""
    for e in product(range(m), repeat=len(sizes)):
        if sum(x * y for x, y in zip(sizes, e)) % m == target:
            return list(e)
    return None


def one_dim_module(p: Presentation, levi_data, z) -> MatrixModule:
    """V_lambda: E_i, F_i (i in L) act by 0 and K_xi by sigma(xi)."""
    lv = _levi_of(p, levi_data)
    sigma = cartan_twist(p, lv, z)
    zero = linalg.zeros(1)
    m = MatrixModule(
        p, {i: zero.copy() for i in lv.simple}, {i: zero.copy() for i in lv.simple},
        [_diag([x]) for x in sigma], [_diag([x.inverse()]) for x in sigma],
        simple=frozenset(lv.simple),
        provenance={"kind": "one_dim", "z": [str(_cyc(x)) for x in z]},
    )
    m.provenance["sigma"] = sigma
    return m


def tensor_one_dim(w: MatrixModule, v: MatrixModule) -> MatrixModule:
    """W tensor V for a one-dimensional V on which E_i, F_i act by 0.

    E_i and F_i act through W alone and K_omega picks up the scalar of V."""
    if v.dim != 1:
        raise ValueError("second factor must be one-dimensional")
    if not w.simple <= v.simple:
        raise ValueError("one-dimensional module does not cover the generators of W")
    for i in w.simple:
        if v.E[i][0, 0] or v.F[i][0, 0]:
            raise ValueError("E_i, F_i must act by zero on the one-dimensional factor")
    K = [linalg.scale(v.K[j][0, 0], w.K[j]) for j in range(w.p.rank)]
    Kinv = [linalg.scale(v.Kinv[j][0, 0], w.Kinv[j]) for j in range(w.p.rank)]
    prov = dict(w.provenance)
    prov["twist"] = v.provenance.get("z")
    return MatrixModule(w.p, dict(w.E), dict(w.F), K, Kinv, simple=w.simple, provenance=prov)


def direct_sum(mods: list[MatrixModule]) -> MatrixModule:
    p = mods[0].p
    simple = mods[0].simple
    if any(m.p is not p or m.simple != simple for m in mods):
        raise ValueError("direct sum needs modules over the same algebra")
    E = {i: linalg.block_diag(*[m.E[i] for m in mods]) for i in simple}
    F = {i: linalg.block_diag(*[m.F[i] for m in mods]) for i in simple}
    K = [linalg.block_diag(*[m.K[j] for m in mods]) for j in range(p.rank)]
    Kinv = [linalg.block_diag(*[m.Kinv[j] for m in mods]) for j in range(p.rank)]
    return MatrixModule(p, E, F, K, Kinv, simple=simple, provenance={"kind": "direct_sum"})
