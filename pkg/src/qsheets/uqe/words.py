"""Word-level model of U_eps used to construct root vectors.

``WordSpace`` is the positive part as the free algebra on E_1..E_n modulo
the quantum Serre relations.  Words of a fixed weight are reduced modulo
the weight component of the Serre ideal, which gives canonical
representatives.  The negative part uses the same space through the
anti-automorphism E_i <-> F_i (the Serre relations are palindromic).

``TriangularAlgebra`` holds elements sum c * F_word K^c E_word, straightened
with the commutation relations only.  It is the bootstrap in which the
braid operators are applied before any PBW basis exists.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from itertools import permutations

from ..cyclo import CycNumber
from ..linalg import EchelonBasis

Word = tuple[int, ...]
Vec = dict  # Word -> scalar


def _add_into(acc: dict, key, val) -> None:
    if not val:
        return
    cur = acc.get(key)
    if cur is None:
        acc[key] = val
    else:
        s = cur + val
        if s:
            acc[key] = s
        else:
            del acc[key]


def word_weight(word: Word, rank: int) -> tuple[int, ...]:
    w = [0] * rank
    for i in word:
        w[i] += 1
    return tuple(w)


@lru_cache(maxsize=None)
def words_of_weight(mu: tuple[int, ...]) -> tuple[Word, ...]:
    letters = [i for i, m in enumerate(mu) for _ in range(m)]
    return tuple(sorted(set(permutations(letters))))


class WordSpace:
    """U^+ as words in E_i modulo the quantum Serre relations."""

    def __init__(self, cartan, eps: CycNumber):
        self.cartan = cartan
        self.rank = len(cartan)
        self.eps = eps
        if any(cartan[i][j] not in (0, -1) for i in range(self.rank) for j in range(self.rank) if i != j):
            raise NotImplementedError("word model is implemented for simply-laced Cartan data")
        two = eps + eps.inverse()
        rels = []
        for i in range(self.rank):
            for j in range(self.rank):
                if i == j:
                    continue
                if cartan[i][j] == -1:
                    rels.append({(i, i, j): CycNumber.rational(1), (i, j, i): -two, (j, i, i): CycNumber.rational(1)})
                elif i < j:
                    rels.append({(i, j): CycNumber.rational(1), (j, i): CycNumber.rational(-1)})
        self.relations = rels
        self._ideal: dict[tuple, EchelonBasis] = {}

    def weight(self, word: Word) -> tuple[int, ...]:
        return word_weight(word, self.rank)

    def _ideal_basis(self, mu: tuple[int, ...]) -> tuple[dict, EchelonBasis]:
        if mu in self._ideal:
            return self._ideal[mu]
        words = words_of_weight(mu)
        index = {w: k for k, w in enumerate(words)}
        eb = EchelonBasis()
        for rel in self.relations:
            sigma = self.weight(next(iter(rel)))
            rest = tuple(a - b for a, b in zip(mu, sigma))
            if any(x < 0 for x in rest):
                continue
            for w in words_of_weight(rest):
                for cut in range(len(w) + 1):
                    u, v = w[:cut], w[cut:]
                    vec = {index[u + r + v]: c for r, c in rel.items()}
                    eb.add(vec)
        self._ideal[mu] = (index, eb)
        return index, eb

    def reduce(self, vec: Vec) -> Vec:
        """Canonical representative of a combination of words."""
        by_weight: dict[tuple, dict] = defaultdict(dict)
        for w, c in vec.items():
            if c:
                by_weight[self.weight(w)][w] = c
        out: Vec = {}
        for mu, part in by_weight.items():
            index, eb = self._ideal_basis(mu)
            words = words_of_weight(mu)
            red = eb.reduce({index[w]: c for w, c in part.items()})
            for k, c in red.items():
                out[words[k]] = c
        return out

    def reduce_word(self, word: Word) -> Vec:
        return self.reduce({word: CycNumber.rational(1)})

    def multiply(self, x: Vec, y: Vec) -> Vec:
        acc: Vec = {}
        for u, a in x.items():
            for v, b in y.items():
                _add_into(acc, u + v, a * b)
        return self.reduce(acc)

    def is_zero(self, vec: Vec) -> bool:
        return not self.reduce(vec)


# ---------------------------------------------------------------------------
# triangular bootstrap algebra
# ---------------------------------------------------------------------------

Term = tuple[Word, tuple[int, ...], Word]


class TriangularAlgebra:
    """Elements sum c * F_word K^c E_word with K^c = prod K_{omega_j}^{c_j}.

    Relations used: K_{omega_j} E_i = eps^{delta_ij} E_i K_{omega_j},
    K_{omega_j} F_i = eps^{-delta_ij} F_i K_{omega_j},
    E_i F_j - F_j E_i = delta_ij (K_{alpha_i} - K_{alpha_i}^{-1}) / (eps - eps^{-1}).
    """

    def __init__(self, cartan, eps: CycNumber, ell: int):
        self.cartan = cartan
        self.rank = len(cartan)
        self.eps = eps
        self.ell = ell
        self.space = WordSpace(cartan, eps)
        self._pow = [eps ** k for k in range(ell)]
        self._den = (eps - eps.inverse()).inverse()
        self._ef_cache: dict = {}
        # K_{alpha_i} in fundamental-weight exponents
        self.alpha = [tuple(cartan[j][i] for j in range(self.rank)) for i in range(self.rank)]

    def epow(self, k: int) -> CycNumber:
        return self._pow[k % self.ell]

    def pair(self, c: tuple[int, ...], word: Word) -> int:
        """(sum c_j omega_j, weight of word)."""
        return sum(c[i] for i in word)

    def zero_k(self) -> tuple[int, ...]:
        return (0,) * self.rank

    # elements -------------------------------------------------------------
    def gen_E(self, i: int) -> dict:
        return {((), self.zero_k(), (i,)): CycNumber.rational(1)}

    def gen_F(self, i: int) -> dict:
        return {((i,), self.zero_k(), ()): CycNumber.rational(1)}

    def gen_K(self, c) -> dict:
        return {((), tuple(c), ()): CycNumber.rational(1)}

    def add(self, x: dict, y: dict, scale=1) -> dict:
        out = dict(x)
        for t, v in y.items():
            _add_into(out, t, v * scale)
        return out

    def scale(self, x: dict, s) -> dict:
        return {t: v * s for t, v in x.items() if v * s}

    def _ef(self, ew: Word, fw: Word) -> dict:
        """E_word * F_word in triangular order."""
        key = (ew, fw)
        hit = self._ef_cache.get(key)
        if hit is not None:
            return hit
        zero = self.zero_k()
        if not ew or not fw:
            res = {(fw, zero, ew): CycNumber.rational(1)}
            self._ef_cache[key] = res
            return res
        i = ew[-1]
        # E_i F_fw
        first: dict = {(fw, zero, (i,)): CycNumber.rational(1)}
        a = self.alpha[i]
        neg = tuple(-x for x in a)
        for m, j in enumerate(fw):
            if j != i:
                continue
            rest = fw[m + 1:]
            short = fw[:m] + rest
            s = self.pair(a, rest)
            _add_into(first, (short, a, ()), self.epow(-s) * self._den)
            _add_into(first, (short, neg, ()), -self.epow(s) * self._den)
        res: dict = {}
        head = ew[:-1]
        for (f1, c1, e1), v in first.items():
            for (f2, c2, e2), w in self._ef(head, f1).items():
                # F f2 K^c2 E e2 K^c1 E e1
                sc = self.epow(-self.pair(c1, e2))
                c = tuple(x + y for x, y in zip(c2, c1))
                _add_into(res, (f2, c, e2 + e1), v * w * sc)
        self._ef_cache[key] = res
        return res

    def mul(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for (f1, c1, e1), a in x.items():
            for (f2, c2, e2), b in y.items():
                for (f, c, e), v in self._ef(e1, f2).items():
                    # f1 K^c1 f K^c e K^c2 e2
                    sc = self.epow(-self.pair(c1, f) - self.pair(c2, e))
                    k = tuple(p + q + r for p, q, r in zip(c1, c, c2))
                    _add_into(out, (f1 + f, k, e + e2), a * b * v * sc)
        return out

    def canonical(self, x: dict) -> dict:
        """Reduce F-words and E-words modulo the Serre ideals."""
        red = self.space.reduce_word
        fcache: dict = {}
        ecache: dict = {}
        out: dict = {}
        for (f, c, e), v in x.items():
            if f not in fcache:
                # F words: reverse, reduce as E words, reverse back
                fcache[f] = {w[::-1]: a for w, a in red(f[::-1]).items()}
            if e not in ecache:
                ecache[e] = red(e)
            for f2, a in fcache[f].items():
                for e2, b in ecache[e].items():
                    _add_into(out, (f2, c, e2), v * a * b)
        return out

    # braid operators --------------------------------------------------------
    def braid_generator(self, i: int, kind: str, j: int | tuple) -> dict:
        """T_i on a generator (kind 'E', 'F' with index j, or 'K' with exponents j)."""
        A = self.cartan
        one = CycNumber.rational(1)
        if kind == "K":
            c = tuple(j)
            # T_i K_{omega} = K_{s_i omega}, s_i(omega) = omega - <omega, alpha_i^vee> alpha_i
            ci = c[i]
            return self.gen_K(tuple(x - ci * a for x, a in zip(c, self.alpha[i])))
        if kind == "E":
            if j == i:
                # -F_i K_{alpha_i}
                return {((i,), self.alpha[i], ()): -one}
            if A[i][j] == 0:
                return self.gen_E(j)
            return self.add(self.mul(self.gen_E(i), self.gen_E(j)),
                            self.mul(self.gen_E(j), self.gen_E(i)), -self.epow(-1))
        if kind == "F":
            if j == i:
                # -K_{alpha_i}^{-1} E_i
                return {((), tuple(-x for x in self.alpha[i]), (i,)): -one}
            if A[i][j] == 0:
                return self.gen_F(j)
            return self.add(self.mul(self.gen_F(j), self.gen_F(i)),
                            self.mul(self.gen_F(i), self.gen_F(j)), -self.epow(1))
        raise ValueError(kind)

    def braid(self, i: int, x: dict) -> dict:
        out: dict = {}
        for (f, c, e), v in x.items():
            acc = {((), self.zero_k(), ()): v}
            for j in f:
                acc = self.mul(acc, self.braid_generator(i, "F", j))
            acc = self.mul(acc, self.braid_generator(i, "K", c))
            for j in e:
                acc = self.mul(acc, self.braid_generator(i, "E", j))
            for t, w in acc.items():
                _add_into(out, t, w)
        return self.canonical(out)

    def root_vector(self, letters: tuple[int, ...], r: int) -> Vec:
        """E_{beta_r} = T_{i_1} ... T_{i_{r-1}} (E_{i_r}) as a word vector."""
        x = self.canonical(self.gen_E(letters[r]))
        for k in range(r - 1, -1, -1):
            x = self.braid(letters[k], x)
        zero = self.zero_k()
        out: Vec = {}
        for (f, c, e), v in x.items():
            if f or c != zero:
                raise ArithmeticError(
                    f"root vector {r} is not in the positive part (term {f}, {c}, {e})"
                )
            out[e] = v
        return out
