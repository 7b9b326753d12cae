"""Falsification harnesses and small counting checks on modules."""

from __future__ import annotations

from itertools import product

from .. import linalg
from ..classes import ClassDatum, class_dim, class_of_matrix, is_regular
from ..cyclo import CycNumber, nth_roots
from ..uqe import CentralCharacter, Presentation, pi_map
from .constructions import direct_sum, levi_baby_verma, torus_module
from .induction import parabolic_induce
from .modules import (
    MatrixModule,
    ModuleError,
    are_isomorphic,
    derived_character,
    is_absolutely_irreducible,
    verify_module,
)

__all__ = [
    "class_of_character",
    "dckp_check",
    "baby_verma_top",
    "conjecture_gio_probe",
    "spanning_rank",
]


def class_of_character(p: Presentation, chi: CentralCharacter) -> ClassDatum:
    """Conjugacy class of pi(chi); needs chi^+ = 0 (a lower-triangular point)."""
    if not chi.plus_zero:
        raise ValueError("class_of_character needs chi^+ = 0")
    return class_of_matrix(pi_map(p, chi).matrix)


def dckp_check(m: MatrixModule, c: ClassDatum) -> bool:
    """ell^{dim O / 2} divides dim V."""
    d = class_dim(c)
    if d % 2:
        raise ValueError(f"class {c} has odd dimension {d}")
    return m.dim % (m.p.ell ** (d // 2)) == 0


def baby_verma_top(m: MatrixModule) -> MatrixModule:
    """Simple quotient of a rank-1 baby Verma.

    If F acts invertibly the module is simple.  Otherwise F m_{l-1} = 0 and
    the first q >= 1 with E m_q = 0 cuts off the maximal submodule
    span(m_q, ..., m_{l-1}); the quotient is the leading q x q block.
    """
    (i,) = tuple(m.simple)
    ell = m.dim
    F, E = m.F[i], m.E[i]
    if F[0, ell - 1]:
        return m
    q = next((q for q in range(1, ell) if not E[q - 1, q]), ell)
    if q == ell:
        return m
    cut = lambda x: x[:q, :q].copy()
    return MatrixModule(
        m.p, {i: cut(E)}, {i: cut(F)}, [cut(x) for x in m.K], [cut(x) for x in m.Kinv],
        simple=m.simple, provenance={**m.provenance, "kind": "baby_verma_quotient"},
    )


def conjecture_gio_probe(p: Presentation, chi: CentralCharacter) -> dict:
    """For U_chi(sl2): every simple quotient of a baby Verma over a class
    induced from T must be isomorphic to an induction from T.

    Report per module: dimension, irreducibility, and status INDUCED,
    VIOLATION or VACUOUS (class not induced from a proper Levi)."""
    if p.rank != 1:
        raise ValueError("the probe classifies modules for SL2 only")
    if not chi.plus_zero:
        raise ValueError("the probe needs chi^+ = 0")
    cls = class_of_character(p, chi)
    induced_from_t = is_regular(cls) and class_dim(cls) > 0
    a = chi.f_values[0]
    mus = nth_roots(chi.k_values[0], p.ell)
    inductions = []
    if induced_from_t:
        for mu in mus:
            inductions.append(parabolic_induce(torus_module(p, [mu]), [], chi))
    records = []
    for mu in mus:
        top = baby_verma_top(levi_baby_verma(p, 0, [mu], a))
        rep = verify_module(top)
        if not rep["passed"] or rep["character"] != chi:
            raise ModuleError(f"baby Verma quotient at mu = {mu} is not a U_chi-module")
        irreducible = is_absolutely_irreducible(top)
        if not induced_from_t:
            status = "VACUOUS"
        elif irreducible and any(are_isomorphic(top, v) for v in inductions):
            status = "INDUCED"
        else:
            status = "VIOLATION"
        records.append({
            "mu": str(mu),
            "dim": top.dim,
            "absolutely_irreducible": irreducible,
            "status": status,
        })
    return {
        "class": str(cls),
        "class_dim": class_dim(cls),
        "induced_from_torus": induced_from_t,
        "modules": records,
        "violations": [r for r in records if r["status"] == "VIOLATION"],
        "character": chi.to_json(),
    }


def spanning_rank(p: Presentation, chi: CentralCharacter) -> dict:
    """Rank of the ell^3 monomials F^a K_omega^c E^b (0 <= a, b, c < ell) of
    U_chi(sl2) acting on the sum of the ell baby Vermas over chi."""
    if p.rank != 1:
        raise ValueError("spanning count is implemented for SL2")
    mods = [levi_baby_verma(p, 0, [mu], chi.f_values[0]) for mu in nth_roots(chi.k_values[0], p.ell)]
    for m in mods:
        if derived_character(m) != chi:
            raise ModuleError("baby Verma does not lie over chi")
    big = direct_sum(mods)
    ell = p.ell
    eb = linalg.EchelonBasis()
    count = 0
    for a, c, b in product(range(ell), repeat=3):
        mat = big.monomial_matrix((a,), (c,), (b,))
        eb.add({k: x for k, x in enumerate(mat.flat) if x})
        count += 1
    return {"monomials": count, "rank": len(eb), "model_dim": big.dim}
