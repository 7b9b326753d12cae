"""The Frobenius center Z0 and its points (central characters)."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..cyclo import CycNumber
from .algebra import AlgebraElement, Presentation

__all__ = ["CentralCharacter", "z0_generators", "z0_check"]


def _cyc(x) -> CycNumber:
    return x if isinstance(x, CycNumber) else CycNumber.rational(x)


@dataclass(frozen=True)
class CentralCharacter:
    """Values of chi on the generators of Z0 for a fixed convex order.

    ``f_values[r] = chi(F_{beta_r}^ell)``, ``e_values[r] = chi(E_{beta_r}^ell)``
    and ``k_values[j] = chi(K_{omega_j}^ell)``.
    """

    ell: int
    word: tuple[int, ...]
    f_values: tuple[CycNumber, ...]
    e_values: tuple[CycNumber, ...]
    k_values: tuple[CycNumber, ...]
    _checked: bool = field(default=True, repr=False, compare=False)

    def __post_init__(self):
        for name in ("f_values", "e_values", "k_values"):
            object.__setattr__(self, name, tuple(_cyc(x) for x in getattr(self, name)))
        object.__setattr__(self, "word", tuple(self.word))
        if len(self.f_values) != len(self.e_values):
            raise ValueError("f_values and e_values must have one entry per positive root")
        if any(not k for k in self.k_values):
            raise ValueError("chi(K^ell) must be nonzero")

    @classmethod
    def trivial(cls, p: Presentation) -> "CentralCharacter":
        zero = [CycNumber.rational(0)] * p.N
        return cls(p.ell, p.word.letters, zero, zero, [CycNumber.rational(1)] * p.rank)

    @classmethod
    def for_presentation(cls, p: Presentation, f_values=None, e_values=None, k_values=None):
        zero = [0] * p.N
        return cls(
            p.ell,
            p.word.letters,
            f_values if f_values is not None else zero,
            e_values if e_values is not None else zero,
            k_values if k_values is not None else [1] * p.rank,
        )

    @property
    def N(self) -> int:
        return len(self.f_values)

    @property
    def rank(self) -> int:
        return len(self.k_values)

    @property
    def plus_zero(self) -> bool:
        return not any(self.e_values)

    def matches(self, p: Presentation) -> bool:
        return self.ell == p.ell and self.word == p.word.letters

    def twist(self, factors) -> "CentralCharacter":
        """Multiply the chi(K_{omega_j}^ell) values by ``factors``."""
        return CentralCharacter(
            self.ell, self.word, self.f_values, self.e_values,
            tuple(k * _cyc(f) for k, f in zip(self.k_values, factors)),
        )

    def to_json(self) -> dict:
        return {
            "ell": self.ell,
            "reduced_word": [i + 1 for i in self.word],
            "chi_F_ell": [str(x) for x in self.f_values],
            "chi_E_ell": [str(x) for x in self.e_values],
            "chi_K_ell": [str(x) for x in self.k_values],
        }


def z0_generators(p: Presentation) -> list[tuple[str, AlgebraElement]]:
    ell = p.ell
    out = []
    for r in range(p.N):
        b = tuple(ell if s == r else 0 for s in range(p.N))
        out.append((f"E_beta{r + 1}^{ell}", p.monomial(b=b)))
        out.append((f"F_beta{r + 1}^{ell}", p.monomial(a=b)))
    for j in range(p.rank):
        out.append((f"K{j + 1}^{ell}", p.K(j, ell)))
        out.append((f"K{j + 1}^-{ell}", p.K(j, -ell)))
    return out


def z0_check(p: Presentation) -> list[dict]:
    """Check that every Z0 generator commutes with every algebra generator."""
    gens = []
    for i in range(p.rank):
        gens.append((f"E{i + 1}", ("E", i)))
        gens.append((f"F{i + 1}", ("F", i)))
        for s in (1, -1):
            c = tuple(s if t == i else 0 for t in range(p.rank))
            gens.append((f"K{i + 1}^{s}", ("K", c)))
    report = []
    for name, x in z0_generators(p):
        failures = []
        for gname, g in gens:
            comm = p.right_mul(x, g) - p.left_mul(g, x)
            if comm:
                failures.append(gname)
        report.append({
            "element": name,
            "status": "PASS" if not failures else "FAIL",
            "noncommuting": failures,
        })
    return report
