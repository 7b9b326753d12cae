"""Root systems, Weyl words and the convex order on positive roots.

Roots are integer vectors in the basis of simple roots; weights are integer
vectors in the basis of fundamental weights.  Indices of simple roots are
0-based in the API and printed 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations

__all__ = [
    "RootSystemData",
    "WeylWord",
    "LeviData",
    "build_root_system",
    "levi",
    "longest_word_with_prefix",
    "beta_sequence",
    "weyl_act",
    "reflect",
]

_MAX_RANK = {"A": 8, "B": 8, "C": 8, "D": 8, "G": 2}


def _realisation(kind: str, rank: int) -> list[tuple[Fraction, ...]]:
    """Simple roots as explicit Euclidean vectors (Bourbaki numbering)."""

    def e(i, dim):
        v = [Fraction(0)] * dim
        v[i] = Fraction(1)
        return v

    def diff(a, b):
        return tuple(x - y for x, y in zip(a, b))

    if kind == "A":
        d = rank + 1
        return [diff(e(i, d), e(i + 1, d)) for i in range(rank)]
    if kind == "B":
        d = rank
        return [diff(e(i, d), e(i + 1, d)) for i in range(rank - 1)] + [tuple(e(rank - 1, d))]
    if kind == "C":
        d = rank
        return [diff(e(i, d), e(i + 1, d)) for i in range(rank - 1)] + [
            tuple(2 * x for x in e(rank - 1, d))
        ]
    if kind == "D":
        d = rank
        last = tuple(x + y for x, y in zip(e(rank - 2, d), e(rank - 1, d)))
        return [diff(e(i, d), e(i + 1, d)) for i in range(rank - 1)] + [last]
    if kind == "G":
        return [
            (Fraction(1), Fraction(-1), Fraction(0)),
            (Fraction(-2), Fraction(1), Fraction(1)),
        ]
    raise ValueError(f"unsupported root system type {kind!r}")


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class RootSystemData:
    """Cartan data of a finite root system.

    ``cartan[i][j]`` is ``<alpha_i^vee, alpha_j>``, so that
    ``s_i(alpha_j) = alpha_j - cartan[i][j] * alpha_i``.
    """

    kind: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    positive_roots: tuple[tuple[int, ...], ...]

    @property
    def N(self) -> int:
        return len(self.positive_roots)

    @property
    def label(self) -> str:
        return f"{self.kind}{self.rank}"

    @cached_property
    def root_index(self) -> dict[tuple[int, ...], int]:
        return {r: i for i, r in enumerate(self.positive_roots)}

    def simple_root(self, i: int) -> tuple[int, ...]:
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def is_positive_root(self, v) -> bool:
        return tuple(v) in self.root_index

    def is_root(self, v) -> bool:
        v = tuple(v)
        return v in self.root_index or tuple(-x for x in v) in self.root_index

    def coroot_pairing(self, i: int, v) -> int:
        """<alpha_i^vee, v> for v in root coordinates."""
        return sum(self.cartan[i][j] * v[j] for j in range(self.rank))

    def root_form(self, u, v) -> int:
        """Symmetric form (u, v) on root coordinates; short roots have (a, a) = 2."""
        return sum(
            u[i] * v[j] * self.symmetrizer[i] * self.cartan[i][j]
            for i in range(self.rank)
            for j in range(self.rank)
        )

    def weight_pairing(self, xi, beta) -> int:
        """(xi, beta) for xi in fundamental-weight and beta in root coordinates."""
        return sum(xi[i] * beta[i] * self.symmetrizer[i] for i in range(self.rank))

    def root_to_weight(self, beta) -> tuple[int, ...]:
        """Fundamental-weight coordinates of a root-lattice vector."""
        return tuple(
            sum(self.cartan[i][j] * beta[j] for j in range(self.rank)) for i in range(self.rank)
        )

    def height(self, beta) -> int:
        return sum(beta)


def build_root_system(kind: str, rank: int) -> RootSystemData:
    kind = kind.upper()
    if kind not in _MAX_RANK:
        raise ValueError(f"unsupported root system type {kind!r}")
    lo = {"A": 1, "B": 2, "C": 2, "D": 3, "G": 2}[kind]
    if not lo <= rank <= _MAX_RANK[kind] or (kind == "G" and rank != 2):
        raise ValueError(f"unsupported rank {rank} for type {kind}")
    simple = _realisation(kind, rank)
    cartan = tuple(
        tuple(int(2 * _dot(a, b) / _dot(a, a)) for b in simple) for a in simple
    )
    lengths = [_dot(a, a) for a in simple]
    short = min(lengths)
    symm = tuple(int(x / short) for x in lengths)
    # reflection closure in root coordinates
    found = {tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)}
    frontier = list(found)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(rank):
                w = reflect_coords(cartan, i, v)
                if all(x >= 0 for x in w) and any(w) and w not in found:
                    found.add(w)
                    nxt.append(w)
        frontier = nxt
    roots = tuple(sorted(found, key=lambda r: (sum(r), tuple(-x for x in r))))
    return RootSystemData(kind, rank, cartan, symm, roots)


def reflect_coords(cartan, i: int, v) -> tuple[int, ...]:
    c = sum(cartan[i][j] * v[j] for j in range(len(v)))
    return tuple(x - c if j == i else x for j, x in enumerate(v))


def reflect(rs: RootSystemData, i: int, v) -> tuple[int, ...]:
    return reflect_coords(rs.cartan, i, v)


# ---------------------------------------------------------------------------
# Weyl words
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WeylWord:
    """A word s_{i1} s_{i2} ... in simple reflections (0-based indices)."""

    letters: tuple[int, ...]
    reduced: bool = field(default=False, compare=False)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        if not self.letters:
            return "e"
        return "".join(f"s{i + 1}" for i in self.letters)

    def prefix(self, k: int) -> "WeylWord":
        return WeylWord(self.letters[:k], self.reduced)


def weyl_act(rs: RootSystemData, w: WeylWord, v) -> tuple[int, ...]:
    """Apply s_{i1} ... s_{ik} to a root-lattice vector (rightmost first)."""
    v = tuple(v)
    for i in reversed(w.letters):
        v = reflect_coords(rs.cartan, i, v)
    return v


def length(rs: RootSystemData, w: WeylWord) -> int:
    """Length of the Weyl group element (number of positive roots sent negative
    by its inverse)."""
    inv = WeylWord(tuple(reversed(w.letters)))
    count = 0
    for r in rs.positive_roots:
        if any(x < 0 for x in weyl_act(rs, inv, r)):
            count += 1
    return count


def is_reduced(rs: RootSystemData, w: WeylWord) -> bool:
    return length(rs, w) == len(w)


# ---------------------------------------------------------------------------
# Levi subsystems
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LeviData:
    """Standard Levi subsystem attached to a subset of simple roots."""

    rs: RootSystemData
    simple: frozenset[int]

    @cached_property
    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            r for r in self.rs.positive_roots
            if all(r[j] == 0 for j in range(self.rs.rank) if j not in self.simple)
        )

    @property
    def N_L(self) -> int:
        return len(self.positive_roots)

    @property
    def dim(self) -> int:
        return 2 * self.N_L + self.rs.rank

    def contains_root(self, beta) -> bool:
        return all(beta[j] == 0 for j in range(self.rs.rank) if j not in self.simple)

    def __str__(self):
        return "{" + ",".join(f"a{i + 1}" for i in sorted(self.simple)) + "}"


def levi(rs: RootSystemData, simple) -> LeviData:
    simple = frozenset(simple)
    if not simple <= set(range(rs.rank)):
        raise ValueError(f"invalid Levi subset {sorted(simple)} for {rs.label}")
    return LeviData(rs, simple)


def all_levis(rs: RootSystemData) -> list[LeviData]:
    out = []
    for k in range(rs.rank + 1):
        for sub in combinations(range(rs.rank), k):
            out.append(levi(rs, sub))
    return out


def longest_word_with_prefix(rs: RootSystemData, lv: LeviData | None = None) -> WeylWord:
    """Lexicographically least reduced word for w0 whose first N_L letters
    form a reduced word for the longest element of the Levi Weyl group.

    Greedy is exact here: every reduced word of an element below w0 (weak
    order) extends to a reduced word of w0, and likewise inside W_L.
    """
    if lv is None:
        lv = levi(rs, ())
    if lv.rs != rs:
        raise ValueError("Levi belongs to a different root system")
    letters: list[int] = []

    def extends(i):
        # l(w s_i) > l(w)  iff  w(alpha_i) > 0
        v = weyl_act(rs, WeylWord(tuple(letters)), rs.simple_root(i))
        return all(x >= 0 for x in v)

    for step in range(rs.N):
        allowed = sorted(lv.simple) if step < lv.N_L else range(rs.rank)
        for i in allowed:
            if extends(i):
                letters.append(i)
                break
        else:  # pragma: no cover - impossible for a valid Levi
            raise RuntimeError("no reduced extension found")
    return WeylWord(tuple(letters), reduced=True)


def beta_sequence(rs: RootSystemData, w: WeylWord) -> list[tuple[int, ...]]:
    """beta_r = s_{i1} ... s_{i(r-1)} (alpha_{ir}) for a reduced word of w0."""
    if len(w) != rs.N or not is_reduced(rs, w):
        raise ValueError(f"{w} is not a reduced word for the longest element of {rs.label}")
    out = []
    for r, i in enumerate(w.letters):
        out.append(weyl_act(rs, WeylWord(w.letters[:r]), rs.simple_root(i)))
    return out


def reduced_words_of_longest(rs: RootSystemData) -> list[WeylWord]:
    """All reduced words of w0 (used in tests; feasible for rank <= 3)."""
    out = []

    def rec(letters):
        if len(letters) == rs.N:
            out.append(WeylWord(tuple(letters), reduced=True))
            return
        for i in range(rs.rank):
            v = weyl_act(rs, WeylWord(tuple(letters)), rs.simple_root(i))
            if all(x >= 0 for x in v):
                rec(letters + [i])

    rec([])
    return out
