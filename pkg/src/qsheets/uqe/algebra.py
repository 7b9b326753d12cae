"""PBW normal forms for U_eps of type A_n, n <= 3.

Monomials are triples (a, c, b) standing for

    F_{beta_N}^{a_N} ... F_{beta_1}^{a_1} K^c E_{beta_1}^{b_1} ... E_{beta_N}^{b_N}

with K^c = prod_j K_{omega_j}^{c_j}.  The straightening rules
E_{beta_k} E_{beta_j} (k > j) are obtained once, by linear algebra in the
weight space beta_j + beta_k of the word model, and checked to have the
convex (Levendorskii-Soibelman) shape.  Products of E-monomials are then
computed by rewriting with those rules; F-monomials are handled through the
anti-automorphism omega (E_i <-> F_i, K fixed), which maps the E-monomial
with exponents b to the F-monomial with the same exponents.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable

from ..cyclo import CycNumber, zeta
from ..linalg import EchelonBasis
from ..roots import (
    LeviData,
    RootSystemData,
    WeylWord,
    beta_sequence,
    build_root_system,
    is_reduced,
    levi,
    longest_word_with_prefix,
)
from .words import TriangularAlgebra, Vec, _add_into, word_weight

__all__ = ["Presentation", "AlgebraElement", "build_algebra", "RewriteBoundError"]

Mono = tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]


class RewriteBoundError(RuntimeError):
    """Raised when the straightening system exceeds its configured size."""


def _one() -> CycNumber:
    return CycNumber.rational(1)


class AlgebraElement:
    """Finite combination of PBW monomials."""

    __slots__ = ("p", "terms")

    def __init__(self, p: "Presentation", terms: dict | None = None):
        self.p = p
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    def __add__(self, other):
        other = self.p.coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            _add_into(out, m, c)
        return AlgebraElement(self.p, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.p, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self.p.coerce(other))

    def __rsub__(self, other):
        return self.p.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return self.p.product(self, other)
        return AlgebraElement(self.p, {m: c * other for m, c in self.terms.items()})

    def __rmul__(self, other):
        return AlgebraElement(self.p, {m: other * c for m, c in self.terms.items()})

    def __pow__(self, n: int):
        out = self.p.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            other = self.p.coerce(other)
        return (self - other).is_zero()

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def omega(self) -> "AlgebraElement":
        return AlgebraElement(self.p, {(b, c, a): v for (a, c, b), v in self.terms.items()})

    def degree(self) -> int:
        return max((sum(a) + sum(b) for a, _, b in self.terms), default=0)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{self.p.monomial_str(m)}" for m, c in sorted(self.terms.items()))


class Presentation:
    """U_eps for type A_n at a primitive ell-th root of unity eps.

    Generators: E_i, F_i, K_{omega_j}^{+-1}.  The PBW basis is attached to
    the Levi-prefixed reduced word for w0 (Levi given by ``levi_simple``).
    """

    def __init__(self, rank: int, ell: int, levi_simple: Iterable[int] = (),
                 word: WeylWord | None = None, max_rules: int = 10_000):
        if ell < 3 or ell % 2 == 0:
            raise ValueError(f"ell must be odd and >= 3, got {ell}")
        if not 1 <= rank <= 3:
            raise ValueError(f"the rewriting engine supports ranks 1..3, got {rank}")
        self.rs: RootSystemData = build_root_system("A", rank)
        self.rank = rank
        self.ell = ell
        self.eps = zeta(ell)
        self.levi: LeviData = levi(self.rs, levi_simple)
        if word is None:
            word = longest_word_with_prefix(self.rs, self.levi)
        elif not is_reduced(self.rs, word) or len(word) != self.rs.N:
            raise ValueError(f"{word} is not a reduced word for w0")
        self.word = word
        self.betas = beta_sequence(self.rs, word)
        self.N = len(self.betas)
        self.max_rules = max_rules
        self.boot = TriangularAlgebra(self.rs.cartan, self.eps, ell)
        self.space = self.boot.space
        self._pow = [self.eps ** k for k in range(ell)]
        self._den = (self.eps - self.eps.inverse()).inverse()
        self.root_words: list[Vec] = [self.boot.root_vector(word.letters, r) for r in range(self.N)]
        self.simple_index = [self.betas.index(self.rs.simple_root(i)) for i in range(rank)]
        for i, r in enumerate(self.simple_index):
            if self.root_words[r] != {(i,): 1}:
                raise ArithmeticError(f"root vector of alpha_{i + 1} is not E_{i + 1}")
        self._pbw_cache: dict = {}
        self._emul_letter: dict = {}
        self._emul: dict = {}
        self._comm: dict = {}
        self._lmE: dict = {}
        self._rootEF: dict = {}
        self._ef: dict = {}
        self.rules = self._straightening_rules()
        self.comm_simple = self._commutators()

    # -- small helpers ---------------------------------------------------
    def epow(self, k: int) -> CycNumber:
        return self._pow[k % self.ell]

    @property
    def zero_exp(self) -> tuple[int, ...]:
        return (0,) * self.N

    @property
    def zero_k(self) -> tuple[int, ...]:
        return (0,) * self.rank

    def unit(self, r: int) -> tuple[int, ...]:
        return tuple(1 if s == r else 0 for s in range(self.N))

    def weight_of(self, b: tuple[int, ...]) -> tuple[int, ...]:
        w = [0] * self.rank
        for r, e in enumerate(b):
            if e:
                for i, x in enumerate(self.betas[r]):
                    w[i] += e * x
        return tuple(w)

    def k_pair(self, c: tuple[int, ...], wt: tuple[int, ...]) -> int:
        """(sum c_j omega_j, wt) with wt in root coordinates."""
        return sum(x * y for x, y in zip(c, wt))

    @cached_property
    def alpha_k(self) -> list[tuple[int, ...]]:
        """K_{alpha_i} as fundamental-weight exponents."""
        return self.boot.alpha

    def monomial_str(self, m: Mono) -> str:
        a, c, b = m
        parts = []
        for r in range(self.N - 1, -1, -1):
            if a[r]:
                parts.append(f"F{r + 1}^{a[r]}" if a[r] > 1 else f"F{r + 1}")
        if any(c):
            parts.append("K" + str(list(c)))
        for r in range(self.N):
            if b[r]:
                parts.append(f"E{r + 1}^{b[r]}" if b[r] > 1 else f"E{r + 1}")
        return "*".join(parts) or "1"

    # -- word model <-> PBW ---------------------------------------------------
    def monomial_words(self, b: tuple[int, ...]) -> Vec:
        vec: Vec = {(): _one()}
        for r in range(self.N):
            for _ in range(b[r]):
                vec = self.space.multiply(vec, self.root_words[r])
        return vec

    def _monomials_of_weight(self, mu: tuple[int, ...]) -> list[tuple[int, ...]]:
        out = []

        def rec(r, rem, acc):
            if r == self.N:
                if not any(rem):
                    out.append(tuple(acc))
                return
            beta = self.betas[r]
            k = 0
            while all(x >= 0 for x in rem):
                rec(r + 1, rem, acc + [k])
                rem = tuple(x - y for x, y in zip(rem, beta))
                k += 1

        rec(0, tuple(mu), [])
        return out

    def _pbw_frame(self, mu):
        hit = self._pbw_cache.get(mu)
        if hit is not None:
            return hit
        monos = self._monomials_of_weight(mu)
        # echelon form of the monomial word vectors, tracking combinations
        words: dict = {}
        rows = []
        for k, b in enumerate(monos):
            vec = self.monomial_words(b)
            row = {}
            for w, c in vec.items():
                row[words.setdefault(w, len(words))] = c
            row[("m", k)] = _one()
            rows.append(row)
        keyed = []
        for row in rows:
            keyed.append({(0, k) if not isinstance(k, tuple) else (1, k[1]): v for k, v in row.items()})
        eb = EchelonBasis()
        for row in keyed:
            if not eb.add(row):
                raise ArithmeticError(f"PBW monomials of weight {mu} are linearly dependent")
        self._pbw_cache[mu] = (monos, words, eb)
        return self._pbw_cache[mu]

    def words_to_pbw(self, vec: Vec) -> dict:
        """Express a combination of E-words (one weight or several) in the PBW basis."""
        vec = self.space.reduce(vec)
        by_weight: dict = {}
        for w, c in vec.items():
            by_weight.setdefault(word_weight(w, self.rank), {})[w] = c
        out: dict = {}
        for mu, part in by_weight.items():
            monos, words, eb = self._pbw_frame(mu)
            target = {}
            for w, c in part.items():
                if w not in words:
                    raise ArithmeticError(f"word {w} outside the PBW span of weight {mu}")
                target[(0, words[w])] = c
            red = eb.reduce(target)
            # red = target - sum x_k row_k; word part must vanish
            if any(k[0] == 0 for k in red):
                raise ArithmeticError(f"vector of weight {mu} not in the PBW span")
            for (_, k), v in red.items():
                _add_into(out, monos[k], -v)
        return out

    # -- straightening rules ----------------------------------------------------
    def _straightening_rules(self) -> dict:
        rules = {}
        for k in range(self.N):
            for j in range(k):
                vec = self.space.multiply(self.root_words[k], self.root_words[j])
                rhs = self.words_to_pbw(vec)
                lead = tuple(1 if s in (j, k) else 0 for s in range(self.N))
                for b in rhs:
                    if b == lead:
                        continue
                    if any(b[s] for s in range(self.N) if s <= j or s >= k):
                        raise ArithmeticError(
                            f"straightening E{k + 1}E{j + 1} leaves the convex interval: {b}"
                        )
                if lead not in rhs:
                    raise ArithmeticError(f"straightening E{k + 1}E{j + 1} lost its leading term")
                rules[(k, j)] = rhs
                if len(rules) > self.max_rules:
                    raise RewriteBoundError("straightening system exceeds the rule bound")
        return rules

    def emul_letter(self, k: int, b: tuple[int, ...]) -> dict:
        """E_{beta_k} * E^b in the PBW basis."""
        key = (k, b)
        hit = self._emul_letter.get(key)
        if hit is not None:
            return hit
        j = next((s for s in range(self.N) if b[s]), None)
        if j is None or k <= j:
            res = {tuple(x + (1 if s == k else 0) for s, x in enumerate(b)): _one()}
            self._emul_letter[key] = res
            return res
        rest = tuple(x - (1 if s == j else 0) for s, x in enumerate(b))
        res: dict = {}
        for t, coef in self.rules[(k, j)].items():
            if t[j] and t[k]:
                # E_j (E_k E^rest)
                for m, v in self.emul_letter(k, rest).items():
                    if any(m[s] for s in range(j)):
                        raise ArithmeticError("convexity violated while straightening")
                    m2 = tuple(x + (1 if s == j else 0) for s, x in enumerate(m))
                    _add_into(res, m2, coef * v)
            else:
                for m, v in self.emul(t, rest).items():
                    _add_into(res, m, coef * v)
        self._emul_letter[key] = res
        return res

    def emul(self, b1: tuple[int, ...], b2: tuple[int, ...]) -> dict:
        """E^{b1} * E^{b2} in the PBW basis."""
        key = (b1, b2)
        hit = self._emul.get(key)
        if hit is not None:
            return hit
        last = max((s for s in range(self.N) if b1[s]), default=None)
        first = next((s for s in range(self.N) if b2[s]), None)
        if last is None:
            res = {b2: _one()}
        elif first is None or last <= first:
            res = {tuple(x + y for x, y in zip(b1, b2)): _one()}
        else:
            head = tuple(x - (1 if s == last else 0) for s, x in enumerate(b1))
            res = {}
            for m, v in self.emul_letter(last, b2).items():
                for m2, w in self.emul(head, m).items():
                    _add_into(res, m2, v * w)
        self._emul[key] = res
        return res

    def fmul(self, a1: tuple[int, ...], a2: tuple[int, ...]) -> dict:
        """F^{a1} * F^{a2}; omega turns it into E^{a2} * E^{a1}."""
        return self.emul(a2, a1)

    # -- [E_i, F_beta] ----------------------------------------------------------------
    def _commutators(self) -> list[list[dict]]:
        """[E_i, F_{beta_r}] as {(a, c): coeff} (no E part)."""
        B = self.boot
        table = []
        for i in range(self.rank):
            row = []
            for r in range(self.N):
                fvec = {(w[::-1], self.zero_k, ()): c for w, c in self.root_words[r].items()}
                e = B.gen_E(i)
                x = B.add(B.mul(e, fvec), B.mul(fvec, e), -1)
                x = B.canonical(x)
                by_k: dict = {}
                for (f, c, ew), v in x.items():
                    if ew:
                        raise ArithmeticError("commutator [E_i, F_beta] has an E part")
                    by_k.setdefault(c, {})[f[::-1]] = v
                out = {}
                for c, vec in by_k.items():
                    for a, v in self.words_to_pbw(vec).items():
                        _add_into(out, (a, c), v)
                row.append(out)
            table.append(row)
        return table

    def comm_EF(self, i: int, a: tuple[int, ...]) -> dict:
        """[E_i, F^a] as {(a', c'): coeff}."""
        key = (i, a)
        hit = self._comm.get(key)
        if hit is not None:
            return hit
        top = max((s for s in range(self.N) if a[s]), default=None)
        res: dict = {}
        if top is not None:
            rest = tuple(x - (1 if s == top else 0) for s, x in enumerate(a))
            wt_rest = self.weight_of(rest)
            # [E_i, F_top] F^rest
            for (a1, c1), v in self.comm_simple[i][top].items():
                sc = self.epow(-self.k_pair(c1, wt_rest))
                for a2, w in self.fmul(a1, rest).items():
                    _add_into(res, (a2, c1), v * w * sc)
            # F_top [E_i, F^rest]
            unit = self.unit(top)
            for (a1, c1), v in self.comm_EF(i, rest).items():
                for a2, w in self.fmul(unit, a1).items():
                    _add_into(res, (a2, c1), v * w)
        self._comm[key] = res
        return res

    # -- left multiplication by generators -------------------------------------
    def _lm_E_mono(self, i: int, m: Mono) -> dict:
        key = (i, m)
        hit = self._lmE.get(key)
        if hit is not None:
            return hit
        a, c, b = m
        res: dict = {}
        sc = self.epow(-c[i])
        for b2, v in self.emul_letter(self.simple_index[i], b).items():
            _add_into(res, (a, c, b2), v * sc)
        for (a2, c2), v in self.comm_EF(i, a).items():
            _add_into(res, (a2, tuple(x + y for x, y in zip(c2, c)), b), v)
        self._lmE[key] = res
        return res

    def left_mul_E(self, i: int, x: AlgebraElement) -> AlgebraElement:
        out: dict = {}
        for m, v in x.terms.items():
            for m2, w in self._lm_E_mono(i, m).items():
                _add_into(out, m2, v * w)
        return AlgebraElement(self, out)

    def left_mul_F(self, i: int, x: AlgebraElement) -> AlgebraElement:
        unit = self.unit(self.simple_index[i])
        out: dict = {}
        for (a, c, b), v in x.terms.items():
            for a2, w in self.fmul(unit, a).items():
                _add_into(out, (a2, c, b), v * w)
        return AlgebraElement(self, out)

    def left_mul_K(self, d, x: AlgebraElement) -> AlgebraElement:
        d = tuple(d)
        out: dict = {}
        for (a, c, b), v in x.terms.items():
            sc = self.epow(-self.k_pair(d, self.weight_of(a)))
            _add_into(out, (a, tuple(p + q for p, q in zip(c, d)), b), v * sc)
        return AlgebraElement(self, out)

    def left_mul(self, g, x: AlgebraElement) -> AlgebraElement:
        """Left multiplication by a generator symbol: ('E', i), ('F', i) or
        ('K', exponent tuple)."""
        kind = g[0]
        if kind == "E":
            return self.left_mul_E(g[1], x)
        if kind == "F":
            return self.left_mul_F(g[1], x)
        if kind == "K":
            return self.left_mul_K(g[1], x)
        raise ValueError(f"unknown generator {g!r}")

    def right_mul(self, x: AlgebraElement, g) -> AlgebraElement:
        swap = {"E": "F", "F": "E", "K": "K"}
        return self.left_mul((swap[g[0]], g[1]), x.omega()).omega()

    def left_mul_root_E(self, r: int, x: AlgebraElement) -> AlgebraElement:
        out = AlgebraElement(self)
        for w, c in self.root_words[r].items():
            y = x
            for i in reversed(w):
                y = self.left_mul_E(i, y)
            out = out + y * c
        return out

    # -- elements ----------------------------------------------------------------
    def monomial(self, a=None, c=None, b=None, coeff=None) -> AlgebraElement:
        a = tuple(a) if a is not None else self.zero_exp
        c = tuple(c) if c is not None else self.zero_k
        b = tuple(b) if b is not None else self.zero_exp
        return AlgebraElement(self, {(a, c, b): coeff if coeff is not None else _one()})

    def one(self) -> AlgebraElement:
        return self.monomial()

    def coerce(self, x) -> AlgebraElement:
        if isinstance(x, AlgebraElement):
            return x
        return self.monomial(coeff=x if isinstance(x, CycNumber) else CycNumber.rational(x))

    def E(self, i: int) -> AlgebraElement:
        return self.monomial(b=self.unit(self.simple_index[i]))

    def F(self, i: int) -> AlgebraElement:
        return self.monomial(a=self.unit(self.simple_index[i]))

    def K(self, j: int, power: int = 1) -> AlgebraElement:
        return self.monomial(c=tuple(power if s == j else 0 for s in range(self.rank)))

    def K_weight(self, c) -> AlgebraElement:
        return self.monomial(c=tuple(c))

    def E_root(self, r: int) -> AlgebraElement:
        return self.monomial(b=self.unit(r))

    def F_root(self, r: int) -> AlgebraElement:
        return self.monomial(a=self.unit(r))

    def root_vectors(self) -> list[tuple[AlgebraElement, AlgebraElement]]:
        return [(self.E_root(r), self.F_root(r)) for r in range(self.N)]

    def cartan_term(self, i: int) -> AlgebraElement:
        """(K_{alpha_i} - K_{alpha_i}^{-1}) / (eps - eps^{-1})."""
        a = self.alpha_k[i]
        return (self.K_weight(a) - self.K_weight(tuple(-x for x in a))) * self._den

    def _root_EF(self, r: int, a: tuple[int, ...]) -> dict:
        """E_{beta_r} * F^a."""
        key = (r, a)
        hit = self._rootEF.get(key)
        if hit is None:
            hit = self.left_mul_root_E(r, self.monomial(a=a)).terms
            self._rootEF[key] = hit
        return hit

    def _EF(self, b: tuple[int, ...], a: tuple[int, ...]) -> dict:
        """E^b * F^a in normal order."""
        key = (b, a)
        hit = self._ef.get(key)
        if hit is not None:
            return hit
        last = max((s for s in range(self.N) if b[s]), default=None)
        if last is None:
            res = {(a, self.zero_k, self.zero_exp): _one()}
        elif not any(a):
            res = {(a, self.zero_k, b): _one()}
        else:
            head = tuple(x - (1 if s == last else 0) for s, x in enumerate(b))
            res = {}
            for (a1, c1, b1), v in self._root_EF(last, a).items():
                for (a2, c2, b2), w in self._EF(head, a1).items():
                    sc = self.epow(-self.k_pair(c1, self.weight_of(b2)))
                    c = tuple(x + y for x, y in zip(c2, c1))
                    for b3, u in self.emul(b2, b1).items():
                        _add_into(res, (a2, c, b3), v * w * sc * u)
        self._ef[key] = res
        return res

    def product(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        out: dict = {}
        for (a, c, b), v in x.terms.items():
            for (a1, c1, b1), v1 in y.terms.items():
                wt_b1 = None
                for (a2, c2, b2), w in self._EF(b, a1).items():
                    sc = self.epow(-self.k_pair(c, self.weight_of(a2))
                                   - self.k_pair(c1, self.weight_of(b2)))
                    k = tuple(p + q + s for p, q, s in zip(c, c2, c1))
                    coef = v * v1 * w * sc
                    for a3, u in self.fmul(a, a2).items():
                        cu = coef * u
                        for b3, t in self.emul(b2, b1).items():
                            _add_into(out, (a3, k, b3), cu * t)
        return AlgebraElement(self, out)

    def _generator(self, g):
        if g[0] == "K" and isinstance(g[1], int):
            power = g[2] if len(g) > 2 else 1
            return ("K", tuple(power if s == g[1] else 0 for s in range(self.rank)))
        return g

    def normal_form(self, word) -> AlgebraElement:
        """Normal form of a word in generator symbols.

        Symbols are ('E', i), ('F', i), ('K', j) or ('K', j, power) for
        K_{omega_j}^power, or ('K', exponent tuple)."""
        x = self.one()
        for g in reversed(list(word)):
            x = self.left_mul(self._generator(g), x)
        return x

    def word_element(self, vec: Vec, kind: str = "E") -> AlgebraElement:
        """Normal form of a combination of E-words (or F-words)."""
        total = AlgebraElement(self)
        for w, c in vec.items():
            total = total + self.normal_form([(kind, i) for i in w]) * c
        return total

    # -- relations -----------------------------------------------------------
    def defining_relations(self) -> list[tuple[str, AlgebraElement]]:
        """Every defining relation, normalized (all should vanish)."""
        out = []
        n = self.rank
        nf = self.normal_form
        two = self.eps + self.eps.inverse()
        for j in range(n):
            kj = tuple(1 if s == j else 0 for s in range(n))
            kinv = tuple(-x for x in kj)
            out.append((f"K{j + 1}*K{j + 1}^-1 = 1", nf([("K", kj), ("K", kinv)]) - 1))
            for i in range(n):
                d = 1 if i == j else 0
                out.append((f"K{j + 1} E{i + 1} K{j + 1}^-1 = eps^{d} E{i + 1}",
                            nf([("K", kj), ("E", i), ("K", kinv)]) - self.E(i) * self.epow(d)))
                out.append((f"K{j + 1} F{i + 1} K{j + 1}^-1 = eps^-{d} F{i + 1}",
                            nf([("K", kj), ("F", i), ("K", kinv)]) - self.F(i) * self.epow(-d)))
            for m in range(n):
                km = tuple(1 if s == m else 0 for s in range(n))
                out.append((f"K{j + 1} K{m + 1} = K{m + 1} K{j + 1}",
                            nf([("K", kj), ("K", km)]) - nf([("K", km), ("K", kj)])))
        for i in range(n):
            for j in range(n):
                lhs = nf([("E", i), ("F", j)]) - nf([("F", j), ("E", i)])
                if i == j:
                    lhs = lhs - self.cartan_term(i)
                out.append((f"[E{i + 1}, F{j + 1}]", lhs))
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                for kind in ("E", "F"):
                    if self.rs.cartan[i][j] == -1:
                        rel = (nf([(kind, i), (kind, i), (kind, j)])
                               - nf([(kind, i), (kind, j), (kind, i)]) * two
                               + nf([(kind, j), (kind, i), (kind, i)]))
                        out.append((f"Serre {kind}{i + 1}^2 {kind}{j + 1}", rel))
                    elif i < j:
                        rel = nf([(kind, i), (kind, j)]) - nf([(kind, j), (kind, i)])
                        out.append((f"{kind}{i + 1} {kind}{j + 1} commute", rel))
        return out

    def describe(self) -> dict:
        return {
            "type": self.rs.label,
            "ell": self.ell,
            "eps": str(self.eps),
            "levi": sorted(i + 1 for i in self.levi.simple),
            "reduced_word": [i + 1 for i in self.word.letters],
            "beta_sequence": [list(b) for b in self.betas],
            "straightening_rules": len(self.rules),
        }


_CACHE: dict = {}


def build_algebra(rank: int, ell: int, levi_simple: Iterable[int] = ()) -> Presentation:
    """Cached constructor (presentations are immutable after construction)."""
    key = (rank, ell, frozenset(levi_simple))
    if key not in _CACHE:
        _CACHE[key] = Presentation(rank, ell, levi_simple)
    return _CACHE[key]
