"""Parabolic induction from a quantized Levi and its graded inverse."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .. import linalg
from ..cyclo import CycNumber
from ..roots import LeviData, levi as make_levi
from ..uqe import CentralCharacter, Presentation, restrict_char
from .constructions import one_dim_module, tensor_one_dim
from .modules import MatrixModule, ModuleError, derived_character, verify_module

__all__ = [
    "InducedModuleIndex",
    "parabolic_induce",
    "graded_top",
    "degree_slices",
    "jordan_bijection",
]


@dataclass(frozen=True)
class InducedModuleIndex:
    """Frame F_{beta_N}^{a_N} ... F_{beta_{N_L+1}}^{a_{N_L+1}} (x) w_k.

    ``exponents`` lists the complementary exponent vectors (indices N_L..N-1)
    in frame order; basis vector number ``s * dim_w + k`` is exponent s with
    base vector k.
    """

    levi: LeviData
    n_levi_roots: int
    n_roots: int
    ell: int
    dim_w: int
    exponents: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, p: Presentation, lv: LeviData, dim_w: int) -> "InducedModuleIndex":
        nl = lv.N_L
        exps = sorted(product(range(p.ell), repeat=p.N - nl), key=lambda a: (sum(a), a))
        return cls(lv, nl, p.N, p.ell, dim_w, tuple(exps))

    @property
    def size(self) -> int:
        return len(self.exponents) * self.dim_w

    @property
    def expected_size(self) -> int:
        return self.ell ** (self.n_roots - self.n_levi_roots) * self.dim_w

    def position(self, a_comp: tuple[int, ...]) -> int:
        return self._pos[a_comp]

    def __post_init__(self):
        object.__setattr__(self, "_pos", {a: s for s, a in enumerate(self.exponents)})

    def degree(self, s: int) -> int:
        return sum(self.exponents[s])


def _levi_of(p: Presentation, levi_data) -> LeviData:
    if isinstance(levi_data, LeviData):
        return levi_data
    return make_levi(p.rs, levi_data)


def _check_characters(w: MatrixModule, p: Presentation, lv: LeviData, chi: CentralCharacter) -> CentralCharacter:
    if not chi.matches(p):
        raise ModuleError("central character belongs to a different presentation")
    if not chi.plus_zero:
        raise ModuleError("parabolic induction needs chi^+ = 0")
    chi_l = restrict_char(p, chi, lv)
    got = derived_character(w)
    if got.f_values != chi_l.f_values or got.e_values != chi_l.e_values or got.k_values != chi_l.k_values:
        raise ModuleError("the module does not have the restricted character chi_L")
    return chi_l


def parabolic_induce(w: MatrixModule, levi_data, chi: CentralCharacter) -> MatrixModule:
    """Ind_L^{G, chi}(W) = U_chi(G) (x)_{U_chi(P)} W as matrices.

    For a frame vector F^a (x) w, g * F^a is put in normal order; normal
    monomials F^{a'} K^c E^b with E-part outside L vanish on 1 (x) W, the
    L-part acts through W's matrices and complementary exponents >= ell are
    reduced with chi(F_beta^ell).
    """
    p = w.p
    lv = _levi_of(p, levi_data)
    if w.simple != frozenset(lv.simple):
        raise ModuleError("the inducing module is not a module for this Levi")
    _check_characters(w, p, lv, chi)
    idx = InducedModuleIndex.build(p, lv, w.dim)
    nl = idx.n_levi_roots
    ell = p.ell
    dw = w.dim
    d = idx.size
    if d != idx.expected_size:
        raise ModuleError("frame size disagrees with the dimension formula")

    def op(kind, arg):
        mat = linalg.zeros(d)
        for s, a_comp in enumerate(idx.exponents):
            x = p.monomial(a=(0,) * nl + a_comp)
            y = p.left_mul((kind, arg), x)
            for (a2, c2, b2), v in y.terms.items():
                if any(b2[nl:]):
                    continue
                scale = v
                red = []
                for r, e in enumerate(a2[nl:]):
                    q, rem = divmod(e, ell)
                    if q:
                        scale = scale * chi.f_values[nl + r] ** q
                    red.append(rem)
                if not scale:
                    continue
                t = idx.position(tuple(red))
                block = w.monomial_matrix(a2[:nl], c2, b2[:nl])
                for i in range(dw):
                    for j in range(dw):
                        x_ij = block[i, j]
                        if x_ij:
                            cur = mat[t * dw + i, s * dw + j]
                            mat[t * dw + i, s * dw + j] = cur + scale * x_ij
        return linalg._clean(mat)

    E = {i: op("E", i) for i in range(p.rank)}
    F = {i: op("F", i) for i in range(p.rank)}
    K, Kinv = [], []
    for j in range(p.rank):
        unit = tuple(1 if t == j else 0 for t in range(p.rank))
        K.append(op("K", unit))
        Kinv.append(op("K", tuple(-x for x in unit)))
    return MatrixModule(
        p, E, F, K, Kinv,
        provenance={"kind": "induced", "levi": sorted(lv.simple), "base": w,
                    "index": idx, "character": chi},
    )


def _require_induced(v: MatrixModule) -> InducedModuleIndex:
    if v.provenance.get("kind") != "induced":
        raise ModuleError("module carries no induction provenance")
    return v.provenance["index"]


def degree_slices(v: MatrixModule) -> dict[int, list[int]]:
    """Basis positions grouped by complementary F-degree."""
    idx = _require_induced(v)
    out: dict[int, list[int]] = {}
    for s, a in enumerate(idx.exponents):
        out.setdefault(sum(a), []).extend(range(s * idx.dim_w, (s + 1) * idx.dim_w))
    return out


def graded_top(v: MatrixModule) -> MatrixModule:
    """Action of U(L) on the degree-0 slice 1 (x) W of an induced module."""
    idx = _require_induced(v)
    dw = idx.dim_w
    top = list(range(dw))
    simple = frozenset(idx.levi.simple)

    def restrict(m):
        for i in range(v.dim):
            for j in top:
                if i >= dw and m[i, j]:
                    raise ModuleError("degree-0 slice is not stable under U(L)")
        return m[:dw, :dw].copy()

    base = v.provenance["base"]
    out = MatrixModule(
        v.p,
        {i: restrict(v.E[i]) for i in simple},
        {i: restrict(v.F[i]) for i in simple},
        [restrict(m) for m in v.K],
        [restrict(m) for m in v.Kinv],
        simple=simple,
        provenance=dict(base.provenance),
    )
    return out


def _same_matrices(a: MatrixModule, b: MatrixModule) -> bool:
    if a.dim != b.dim or a.simple != b.simple:
        return False
    return all(linalg.mat_equal(x, y) for (_, x), (_, y) in zip(a.generators(), b.generators()))


def jordan_bijection(chi: CentralCharacter, z, mods: list[MatrixModule]) -> list[dict]:
    """Twist-and-reinduce: V = Ind(W) goes to Ind(W (x) V_lambda) over chi chi_z.

    Returns one record per module with both modules, the dimension and
    character checks, and whether the twisted module has identical
    matrices (expected exactly when z = 1).
    """
    out = []
    for v in mods:
        idx = _require_induced(v)
        if v.provenance["character"] != chi:
            raise ModuleError("module was not induced over the given character")
        p = v.p
        w = graded_top(v)
        vl = one_dim_module(p, idx.levi, z)
        sigma = vl.provenance["sigma"]
        chi_z = chi.twist([s ** p.ell for s in sigma])
        w2 = tensor_one_dim(w, vl)
        v2 = parabolic_induce(w2, idx.levi, chi_z)
        rep = verify_module(v2)
        out.append({
            "module": v,
            "twisted": v2,
            "dim": v.dim,
            "dim_twisted": v2.dim,
            "dim_preserved": v.dim == v2.dim,
            "relations_pass": rep["passed"],
            "character_matches": rep["character"] == chi_z,
            "character": chi_z,
            "identical": _same_matrices(v, v2),
            "top_recovered": _same_matrices(w, v.provenance["base"]),
        })
    return out
