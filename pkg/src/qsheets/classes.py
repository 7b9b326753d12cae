"""Conjugacy-class geometry of SL_n in combinatorial form.

A class is a semisimple part (eigenvalue tags with multiplicities) together
with one partition per eigenvalue, the Jordan type of the unipotent part on
that eigenspace.  Tags are either numbers (ints, rationals, CycNumbers), in
which case the determinant must be 1, or strings, which only record which
eigenvalues coincide.

Induction from a Levi uses the type-A rule: on each eigenspace the induced
partition is the row-wise sum of the partitions coming from the Levi blocks.
Every induction is checked against the dimension identity
``dim Ind = dim G - dim L + dim O^L``.
"""

from __future__ import annotations

import enum
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import product
from math import gcd

from .cyclo import CycNumber, root_of_unity

__all__ = [
    "Partition",
    "SemisimpleDatum",
    "ClassDatum",
    "LeviComposition",
    "LeviClass",
    "JordanClassDatum",
    "SheetDatum",
    "Evidence",
    "ClassGeometryError",
    "partitions",
    "transpose",
    "dominates",
    "add_partitions",
    "class_dim",
    "levi_envelope",
    "jordan_class",
    "ls_induce",
    "is_isolated",
    "is_rigid",
    "sheet_of",
    "enumerate_sheets",
    "enumerate_jordan_classes",
    "enumerate_unipotent_classes",
    "induction_presentations",
    "conjecture_ledger",
    "class_of_matrix",
    "parse_class",
    "parse_partition",
]

Partition = tuple[int, ...]


class ClassGeometryError(RuntimeError):
    """Raised when an internal consistency check of the combinatorics fails."""


# ---------------------------------------------------------------------------
# partitions
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n in decreasing lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def transpose(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def add_partitions(*ps: Partition) -> Partition:
    """Row-wise sum of zero-padded partitions."""
    width = max((len(p) for p in ps), default=0)
    return tuple(sum(p[i] if i < len(p) else 0 for p in ps) for i in range(width))


def dominates(p: Partition, q: Partition) -> bool:
    """p dominates q (p >= q) for partitions of the same size."""
    if sum(p) != sum(q):
        return False
    a = b = 0
    for i in range(max(len(p), len(q))):
        a += p[i] if i < len(p) else 0
        b += q[i] if i < len(q) else 0
        if a < b:
            return False
    return True


def _check_partition(p, size: int | None = None) -> Partition:
    p = tuple(int(x) for x in p)
    if any(x <= 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"{p} is not a partition")
    if size is not None and sum(p) != size:
        raise ValueError(f"partition {p} does not sum to {size}")
    return p


def _centralizer_gl(p: Partition) -> int:
    """Dimension of the centralizer in GL_m of a unipotent with Jordan type p."""
    return sum(x * x for x in transpose(p))


# ---------------------------------------------------------------------------
# data types
# ---------------------------------------------------------------------------

def _is_symbolic(tag) -> bool:
    return isinstance(tag, str)


def _tag_key(tag):
    return (0, tag) if _is_symbolic(tag) else (1, str(tag))


@dataclass(frozen=True)
class SemisimpleDatum:
    """Eigenvalue tags with multiplicities."""

    blocks: tuple[tuple[object, int], ...]

    def __post_init__(self):
        blocks = tuple((t, int(m)) for t, m in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if not blocks:
            raise ValueError("empty semisimple datum")
        if any(m <= 0 for _, m in blocks):
            raise ValueError("multiplicities must be positive")
        tags = [t for t, _ in blocks]
        if len(set(tags)) != len(tags):
            raise ValueError("eigenvalue tags must be pairwise distinct")
        symbolic = [_is_symbolic(t) for t in tags]
        if any(symbolic) and not all(symbolic):
            raise ValueError("cannot mix symbolic and numeric eigenvalue tags")
        if not any(symbolic):
            det = reduce(lambda a, b: a * b, (t ** m for t, m in blocks), 1)
            if det != 1:
                raise ValueError(f"determinant {det} != 1")

    @property
    def n(self) -> int:
        return sum(m for _, m in self.blocks)

    @property
    def tags(self) -> tuple:
        return tuple(t for t, _ in self.blocks)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.blocks)

    @property
    def concrete(self) -> bool:
        return not _is_symbolic(self.blocks[0][0])


@dataclass(frozen=True)
class ClassDatum:
    """A conjugacy class of SL_n: semisimple datum plus one partition per block."""

    semisimple: SemisimpleDatum
    unipotent: tuple[Partition, ...]

    def __post_init__(self):
        ss = self.semisimple
        if not isinstance(ss, SemisimpleDatum):
            ss = SemisimpleDatum(tuple(ss))
            object.__setattr__(self, "semisimple", ss)
        unip = tuple(_check_partition(p, m) for p, m in zip(self.unipotent, ss.multiplicities))
        if len(unip) != len(ss.blocks):
            raise ValueError("need exactly one partition per eigenvalue block")
        object.__setattr__(self, "unipotent", unip)

    @classmethod
    def from_blocks(cls, blocks) -> "ClassDatum":
        """Build from ``[(tag, partition), ...]``."""
        blocks = list(blocks)
        ss = SemisimpleDatum(tuple((t, sum(p)) for t, p in blocks))
        return cls(ss, tuple(tuple(p) for _, p in blocks))

    @property
    def n(self) -> int:
        return self.semisimple.n

    def items(self):
        return zip(self.semisimple.tags, self.unipotent)

    def canonical(self) -> tuple:
        """Order-independent key."""
        return tuple(sorted(
            ((sum(p), p, _tag_key(t)) for t, p in self.items()),
            key=lambda x: (-x[0], tuple(-y for y in x[1]), x[2]),
        ))

    def pattern(self) -> tuple[tuple[int, Partition], ...]:
        """Multiset of (multiplicity, partition) pairs, tags forgotten."""
        return tuple(sorted(((sum(p), p) for p in self.unipotent), reverse=True))

    def __str__(self):
        parts = []
        for t, p in self.items():
            parts.append(f"{t}:{''.join(map(str, p)) if all(x < 10 for x in p) else p}")
        return f"SL{self.n}[" + " ".join(parts) + "]"


def central_class(n: int, tag=1) -> ClassDatum:
    return ClassDatum.from_blocks([(tag, (1,) * n)])


def unipotent_class(partition, tag=1) -> ClassDatum:
    return ClassDatum.from_blocks([(tag, tuple(partition))])


def _symbols(k: int) -> list[str]:
    return [chr(ord("a") + i) for i in range(k)]


def pattern_class(pattern) -> ClassDatum:
    """Class with symbolic eigenvalues from ``[(partition), ...]`` per eigenvalue."""
    pattern = list(pattern)
    return ClassDatum.from_blocks(zip(_symbols(len(pattern)), pattern))


def regular_semisimple(n: int) -> ClassDatum:
    return pattern_class([(1,)] * n)


@dataclass(frozen=True)
class LeviComposition:
    """Standard block Levi of SL_n."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if not parts or any(x <= 0 for x in parts):
            raise ValueError(f"invalid composition {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def dim(self) -> int:
        """Dimension of the Levi subgroup of SL_n."""
        return sum(x * x for x in self.parts) - 1

    @property
    def center_dim(self) -> int:
        return len(self.parts) - 1

    def canonical(self) -> "LeviComposition":
        return LeviComposition(tuple(sorted(self.parts, reverse=True)))

    def simple_roots(self) -> frozenset[int]:
        """0-based simple roots of SL_n inside this Levi."""
        out, pos = set(), 0
        for x in self.parts:
            out.update(range(pos, pos + x - 1))
            pos += x
        return frozenset(out)

    @classmethod
    def from_simple_roots(cls, n: int, simple) -> "LeviComposition":
        simple = set(simple)
        parts, size = [], 1
        for i in range(n - 1):
            if i in simple:
                size += 1
            else:
                parts.append(size)
                size = 1
        parts.append(size)
        return cls(tuple(parts))

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


# A class of a Levi: for each Levi block, a tuple of (tag, partition) pairs.
LeviClass = tuple[tuple[tuple[object, Partition], ...], ...]


def trivial_levi_class(levi: LeviComposition, tag=1) -> LeviClass:
    return tuple(((tag, (1,) * x),) for x in levi.parts)


def _levi_class_dim(levi: LeviComposition, lc: LeviClass) -> int:
    """Dimension of the class in L (L-conjugacy)."""
    total = 0
    for size, block in zip(levi.parts, lc):
        cent = sum(_centralizer_gl(p) for _, p in block)
        total += size * size - cent
    return total


def _validate_levi_class(levi: LeviComposition, lc: LeviClass) -> None:
    if len(lc) != len(levi.parts):
        raise ValueError("Levi class must have one entry per Levi block")
    for size, block in zip(levi.parts, lc):
        tags = [t for t, _ in block]
        if len(set(tags)) != len(tags):
            raise ValueError("repeated tag inside a Levi block")
        if sum(sum(_check_partition(p)) for _, p in block) != size:
            raise ValueError(f"Levi block of size {size} has wrong total multiplicity")


class Evidence(str, enum.Enum):
    REGULAR_PROVED = "REGULAR_PROVED"
    DENSE_JORDAN_THM4 = "DENSE_JORDAN_THM4"
    LEVI_A1A2_COR = "LEVI_A1A2_COR"
    SUBREGULAR_TYPEA = "SUBREGULAR_TYPEA"
    OPEN = "OPEN"


@dataclass(frozen=True)
class JordanClassDatum:
    """Jordan (decomposition) class of SL_n.

    ``component`` locates the coset Z(G^s)°s inside Z(G^s): it is an integer
    mod ``gcd(multiplicities)``, or None when unknown (symbolic tags).
    """

    levi: LeviComposition
    pattern: tuple[tuple[int, Partition], ...]
    component: int | None
    dim: int

    @property
    def n(self) -> int:
        return self.levi.n

    @property
    def modulus(self) -> int:
        return reduce(gcd, (m for m, _ in self.pattern))


@dataclass(frozen=True)
class SheetDatum:
    """Sheet of SL_n: Levi L (block sizes, decreasing) and the component of
    the central anchor in Z(L)/Z(L)°, represented by zeta_n^component * I."""

    levi: LeviComposition
    component: int | None
    dim: int
    dense: JordanClassDatum

    @property
    def modulus(self) -> int:
        return reduce(gcd, self.levi.parts)

    def anchor(self) -> CycNumber | None:
        if self.component is None:
            return None
        return root_of_unity(self.levi.n, self.component)

    def __str__(self):
        return f"S(L={self.levi}, k={self.component}, dim={self.dim})"


# ---------------------------------------------------------------------------
# dimensions and envelopes
# ---------------------------------------------------------------------------

def class_dim(c: ClassDatum) -> int:
    n = c.n
    return n * n - sum(_centralizer_gl(p) for p in c.unipotent)


def levi_envelope(s: SemisimpleDatum | ClassDatum) -> LeviComposition:
    """Block Levi of the multiplicity pattern, parts in decreasing order."""
    if isinstance(s, ClassDatum):
        s = s.semisimple
    return LeviComposition(tuple(sorted(s.multiplicities, reverse=True)))


def _as_cyc(x) -> CycNumber:
    if isinstance(x, CycNumber):
        return x
    return CycNumber.rational(Fraction(x))


def _component(tags_mults, d: int) -> int | None:
    """k with prod x^(m/d) = zeta_d^k, or None for symbolic tags."""
    if d == 1:
        return 0
    if any(_is_symbolic(t) for t, _ in tags_mults):
        return None
    w = CycNumber.rational(1)
    for t, m in tags_mults:
        w = w * _as_cyc(t) ** (m // d)
    for k in range(d):
        if w == root_of_unity(d, k):
            return k
    raise ClassGeometryError(f"component value {w} is not a {d}-th root of unity")


def jordan_class(c: ClassDatum) -> JordanClassDatum:
    mults = c.semisimple.multiplicities
    d = reduce(gcd, mults)
    comp = _component(c.semisimple.blocks, d)
    dim = class_dim(c) + len(mults) - 1
    return JordanClassDatum(levi_envelope(c), c.pattern(), comp, dim)


# ---------------------------------------------------------------------------
# induction
# ---------------------------------------------------------------------------

def ls_induce(levi: LeviComposition, lc: LeviClass) -> ClassDatum:
    """Lusztig-Spaltenstein induction from a block Levi of SL_n."""
    _validate_levi_class(levi, lc)
    per_tag: dict = {}
    order = []
    for block in lc:
        for t, p in block:
            if t not in per_tag:
                per_tag[t] = []
                order.append(t)
            per_tag[t].append(tuple(p))
    c = ClassDatum.from_blocks((t, add_partitions(*per_tag[t])) for t in order)
    n = levi.n
    expected = (n * n - 1) - levi.dim + _levi_class_dim(levi, lc)
    if class_dim(c) != expected:
        raise ClassGeometryError(
            f"dimension formula violated inducing {lc} from {levi}: "
            f"{class_dim(c)} != {expected}"
        )
    return c


def as_levi_class(c: ClassDatum) -> tuple[LeviComposition, LeviClass]:
    """The class c viewed in the trivial Levi L = G."""
    return LeviComposition((c.n,)), (tuple(c.items()),)


def is_isolated(c: ClassDatum) -> bool:
    return len(c.semisimple.blocks) == 1


def is_rigid(c: ClassDatum) -> bool:
    return is_isolated(c) and all(x == 1 for x in c.unipotent[0])


# ---------------------------------------------------------------------------
# sheets
# ---------------------------------------------------------------------------

def _dense_jordan(levi: LeviComposition, component: int | None) -> JordanClassDatum:
    pattern = tuple(sorted(((x, (1,) * x) for x in levi.parts), reverse=True))
    n = levi.n
    dim = n * n - sum(x * x for x in levi.parts) + len(levi.parts) - 1
    return JordanClassDatum(levi, pattern, component, dim)


def _sheet(levi: LeviComposition, component: int | None) -> SheetDatum:
    levi = levi.canonical()
    n = levi.n
    dim = (n * n - 1) - levi.dim + levi.center_dim
    return SheetDatum(levi, component, dim, _dense_jordan(levi, component))


def sheet_of(c: ClassDatum) -> SheetDatum:
    """The sheet containing c.

    c = s*u is induced from the class of s in the Levi whose blocks are the
    columns of every partition; s is central there, hence rigid.
    """
    parts = []
    for p in c.unipotent:
        parts.extend(transpose(p))
    levi = LeviComposition(tuple(sorted(parts, reverse=True)))
    d = reduce(gcd, levi.parts)
    comp = _component(c.semisimple.blocks, d)
    # membership check through the induction itself
    lc = []
    for t, p in c.items():
        for col in transpose(p):
            lc.append(((t, (1,) * col),))
    composition = LeviComposition(tuple(len(b[0][1]) for b in lc))
    if ls_induce(composition, tuple(lc)).canonical() != c.canonical():
        raise ClassGeometryError(f"could not locate {c} in a sheet")
    return _sheet(levi, comp)


def enumerate_sheets(n: int) -> list[SheetDatum]:
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    for lam in sorted(partitions(n), key=lambda p: (len(p), tuple(-x for x in p)), reverse=True):
        d = reduce(gcd, lam)
        for k in range(d):
            out.append(_sheet(LeviComposition(lam), k))
    return out


def enumerate_unipotent_classes(n: int) -> list[ClassDatum]:
    return [unipotent_class(p) for p in partitions(n)]


def _multiset_partitions(n: int) -> list[tuple[tuple[int, Partition], ...]]:
    """Jordan patterns: multisets of (m, partition of m) with sum m = n."""
    out = []

    def rec(rem, max_item, acc):
        if rem == 0:
            out.append(tuple(acc))
            return
        for m in range(min(rem, max_item[0]), 0, -1):
            for p in partitions(m):
                item = (m, p)
                if item > max_item:
                    continue
                rec(rem - m, item, acc + [item])

    rec(n, (n, (n,)), [])
    return out


def enumerate_jordan_classes(n: int) -> list[JordanClassDatum]:
    """All Jordan classes of SL_n with their torus-coset components."""
    out = []
    for pattern in _multiset_partitions(n):
        c = pattern_class([p for _, p in pattern])
        base = jordan_class(c)
        d = base.modulus
        for k in range(d):
            out.append(JordanClassDatum(base.levi, base.pattern, k, base.dim))
    return out


def sheet_of_jordan(j: JordanClassDatum) -> SheetDatum:
    parts = []
    for _, p in j.pattern:
        parts.extend(transpose(p))
    levi = LeviComposition(tuple(sorted(parts, reverse=True)))
    d = reduce(gcd, levi.parts)
    comp = None if j.component is None else j.component % d
    return _sheet(levi, comp)


# ---------------------------------------------------------------------------
# induction presentations
# ---------------------------------------------------------------------------

def _distributions(total: int, sizes: list[int]):
    """Vectors (x_b) with 0 <= x_b <= sizes[b] and sum x_b = total."""
    if not sizes:
        if total == 0:
            yield ()
        return
    for x in range(min(total, sizes[0]), -1, -1):
        for rest in _distributions(total - x, sizes[1:]):
            yield (x,) + rest


def _partition_splits(p: Partition, sizes: tuple[int, ...]):
    """Tuples of partitions q_b of sizes[b] with row-wise sum equal to p."""
    if not sizes:
        if not p:
            yield ()
        return
    for q in partitions(sizes[0]) if sizes[0] else [()]:
        if len(q) > len(p) or any(q[i] > p[i] for i in range(len(q))):
            continue
        rest = tuple(x - (q[i] if i < len(q) else 0) for i, x in enumerate(p))
        if list(rest) != sorted(rest, reverse=True):
            continue
        rest = tuple(x for x in rest if x)
        for tail in _partition_splits(rest, sizes[1:]):
            yield (q,) + tail


def induction_presentations(c: ClassDatum) -> list[tuple[LeviComposition, LeviClass]]:
    """All (L, O_L) with Ind_L^G(O_L) = c, up to conjugacy of the pair."""
    n = c.n
    items = list(c.items())
    seen = set()
    out = []
    for lam in partitions(n):
        sizes = list(lam)
        # multiplicity matrix m[x][b]
        def rec_rows(idx, remaining, rows):
            if idx == len(items):
                if all(r == 0 for r in remaining):
                    yield tuple(rows)
                return
            m = sum(items[idx][1])
            for row in _distributions(m, remaining):
                yield from rec_rows(idx + 1, [r - x for r, x in zip(remaining, row)], rows + [row])

        for rows in rec_rows(0, sizes, []):
            choices = []
            for (t, p), row in zip(items, rows):
                choices.append([(t, row, split) for split in _partition_splits(p, row)])
            for combo in product(*choices):
                blocks = []
                for b in range(len(sizes)):
                    blk = tuple((t, split[b]) for t, row, split in combo if row[b])
                    blocks.append(blk)
                key = tuple(sorted(
                    (sizes[b], tuple(sorted((_tag_key(t), q) for t, q in blocks[b])))
                    for b in range(len(sizes))
                ))
                if key in seen:
                    continue
                seen.add(key)
                levi = LeviComposition(tuple(sizes))
                lc = tuple(blocks)
                if ls_induce(levi, lc).canonical() != c.canonical():  # pragma: no cover
                    raise ClassGeometryError("presentation search produced a wrong induction")
                out.append((levi, lc))
    out.sort(key=lambda x: (len(x[0].parts), tuple(-y for y in x[0].parts), str(x[1])))
    return out


# ---------------------------------------------------------------------------
# evidence ledger
# ---------------------------------------------------------------------------

def is_regular(c: ClassDatum) -> bool:
    return all(len(p) == 1 for p in c.unipotent)


def is_semisimple(c: ClassDatum) -> bool:
    return all(all(x == 1 for x in p) for p in c.unipotent)


def is_subregular_unipotent(c: ClassDatum) -> bool:
    n = c.n
    return is_isolated(c) and n >= 2 and c.unipotent[0] == ((n - 1, 1) if n > 2 else (1, 1))


def conjecture_ledger(c: ClassDatum) -> Evidence:
    """Strongest available evidence for the DCKP bound on classes like c.

    Rules in priority order: regular classes; Levi envelopes whose derived
    group has only A1/A2 factors (multiplicities <= 3, any u); semisimple
    classes (dense in their Jordan class, handled by the Jordan bijection);
    subregular unipotent classes up to the center.
    """
    if is_regular(c):
        return Evidence.REGULAR_PROVED
    if max(c.semisimple.multiplicities) <= 3:
        return Evidence.LEVI_A1A2_COR
    if is_semisimple(c):
        return Evidence.DENSE_JORDAN_THM4
    if is_subregular_unipotent(c):
        return Evidence.SUBREGULAR_TYPEA
    return Evidence.OPEN


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

def class_of_matrix(g) -> ClassDatum:
    """Class of a triangular matrix over a cyclotomic field.

    Eigenvalues are read off the diagonal; the Jordan type of each
    eigenvalue comes from kernel dimensions of powers of (g - x).
    """
    from . import linalg

    n = g.shape[0]
    lower = all(not g[i, j] for i in range(n) for j in range(i + 1, n))
    upper = all(not g[i, j] for i in range(n) for j in range(i))
    if not (lower or upper):
        raise ValueError("class_of_matrix needs a triangular matrix")
    counts = Counter(g[i, i] for i in range(n))
    blocks = []
    for x, m in counts.items():
        a = linalg.sub(g, linalg.scale(x, linalg.identity(n)))
        kernels = [0]
        power = linalg.identity(n)
        while kernels[-1] < m:
            power = linalg.matmul(power, a)
            kernels.append(n - linalg.rank(power))
        cols = [kernels[j] - kernels[j - 1] for j in range(1, len(kernels))]
        tag = x.to_fraction() if isinstance(x, CycNumber) and x.is_rational() else x
        if isinstance(tag, Fraction) and tag.denominator == 1:
            tag = int(tag)
        blocks.append((tag, transpose(tuple(cols))))
    blocks.sort(key=lambda b: _tag_key(b[0]))
    return ClassDatum.from_blocks(blocks)


# ---------------------------------------------------------------------------
# text form
# ---------------------------------------------------------------------------

_SYMBOL = re.compile(r"^[A-Za-y_][A-Za-z0-9_]*$")


def parse_partition(text: str) -> Partition:
    """'2,1', '21', '(2, 1)' or 'trivial' needs a size, so not accepted here."""
    t = text.strip().strip("()").replace(" ", "")
    if not t:
        raise ValueError("empty partition")
    parts = [int(x) for x in t.split(",")] if "," in t else [int(x) for x in t]
    return _check_partition(tuple(parts))


def _parse_tag(text: str):
    from .cyclo import parse

    t = text.strip()
    if _SYMBOL.match(t):
        return t
    x = parse(t)
    if x.is_rational():
        f = x.to_fraction()
        return int(f) if f.denominator == 1 else f
    return x.simplify()


def parse_class(text: str) -> ClassDatum:
    """Read 'tag:partition' items, e.g. '1:21', 'a:1 b:1 c:1' or
    '1*z @ conductor 3:1,1,1'.  Items are separated by ';' when present,
    otherwise by whitespace; the ``SLn[...]`` wrapper of ``str`` is accepted."""
    t = text.strip()
    m = re.match(r"^SL\d+\[(.*)\]$", t)
    if m:
        t = m.group(1)
    items = [x for x in (t.split(";") if ";" in t else t.split()) if x.strip()]
    if not items:
        raise ValueError("empty class description")
    blocks = []
    for item in items:
        if ":" not in item:
            raise ValueError(f"item {item!r} is not of the form tag:partition")
        tag, part = item.rsplit(":", 1)
        blocks.append((_parse_tag(tag), parse_partition(part)))
    return ClassDatum.from_blocks(blocks)
