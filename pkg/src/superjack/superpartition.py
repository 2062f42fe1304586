"""Superpartitions and their diagrams.

A superpartition is a pair ``(antisym; sym)`` with ``antisym`` strictly
decreasing (a final zero is allowed) and ``sym`` a partition.  Circles in the
diagram sit at the end of the rows coming from ``antisym``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache, total_ordering
from itertools import combinations
from math import factorial, prod


class InvalidMove(ValueError):
    """An undefined composition of top moves."""


# ---------------------------------------------------------------- partitions

@total_ordering
@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        p = tuple(int(x) for x in self.parts)
        if any(x < 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
            raise ValueError(f"not a partition: {p}")
        while p and p[-1] == 0:
            p = p[:-1]
        object.__setattr__(self, "parts", p)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __lt__(self, other):
        return self.parts < other.parts

    def size(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """Zero-based part, zero beyond the length."""
        return self.parts[i] if i < len(self.parts) else 0

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        return Partition(tuple(sum(1 for x in self.parts if x > j) for j in range(self.parts[0])))

    def cells(self):
        """One-based cells (i, j) in English convention."""
        return [(i + 1, j + 1) for i, row in enumerate(self.parts) for j in range(row)]

    def z(self) -> int:
        """z_lambda = prod_i i^{m_i} m_i!"""
        return prod(i ** m * factorial(m) for i, m in Counter(self.parts).items())

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def partition_dominance_leq(mu, lam) -> bool:
    mu, lam = tuple(mu), tuple(lam)
    if sum(mu) != sum(lam):
        return False
    s = t = 0
    for i in range(max(len(mu), len(lam))):
        s += mu[i] if i < len(mu) else 0
        t += lam[i] if i < len(lam) else 0
        if s > t:
            return False
    return True


def partitions(n: int, maxpart: int | None = None):
    """Partitions of n in reverse lexicographic order."""
    if maxpart is None:
        maxpart = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, maxpart), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


# ----------------------------------------------------------- superpartitions

_SPART_RE = re.compile(r"^\(\s*([0-9,\s]*)\s*;\s*([0-9,\s]*)\s*\)$")


def _ints(text: str) -> tuple[int, ...]:
    text = text.strip().strip(",")
    return tuple(int(x) for x in text.split(",") if x.strip()) if text else ()


@dataclass(frozen=True)
class Superpartition:
    antisym: tuple[int, ...] = ()
    sym: tuple[int, ...] = ()

    def __post_init__(self):
        a = tuple(int(x) for x in self.antisym)
        s = tuple(int(x) for x in self.sym)
        if any(a[i] <= a[i + 1] for i in range(len(a) - 1)) or any(x < 0 for x in a):
            raise ValueError(f"antisymmetric parts must be strictly decreasing and >= 0: {a}")
        if any(s[i] < s[i + 1] for i in range(len(s) - 1)) or any(x <= 0 for x in s):
            raise ValueError(f"symmetric parts must be a partition with positive parts: {s}")
        object.__setattr__(self, "antisym", a)
        object.__setattr__(self, "sym", s)

    @classmethod
    def parse(cls, text: str) -> "Superpartition":
        m = _SPART_RE.match(text.strip())
        if not m:
            raise ValueError(f"cannot parse superpartition {text!r}")
        return cls(_ints(m.group(1)), _ints(m.group(2)))

    def __str__(self):
        return "(" + ",".join(map(str, self.antisym)) + ";" + ",".join(map(str, self.sym)) + ")"

    def __repr__(self):
        return f"Superpartition{self}"

    def to_json(self):
        return {"a": list(self.antisym), "s": list(self.sym)}

    # gradings
    @property
    def m(self) -> int:
        return len(self.antisym)

    @property
    def n(self) -> int:
        return sum(self.antisym) + sum(self.sym)

    def degree(self) -> tuple[int, int]:
        return self.n, self.m

    def length(self) -> int:
        """Number of parts, counting a zero antisymmetric part."""
        return len(self.antisym) + len(self.sym)

    # associated partitions
    def star(self) -> Partition:
        return Partition(tuple(sorted(self.antisym + self.sym, reverse=True)))

    def circledast(self) -> Partition:
        return Partition(tuple(sorted([x + 1 for x in self.antisym] + list(self.sym), reverse=True)))

    def sort_key(self):
        """Descending lexicographic on (circledast, star) gives a linear
        extension of dominance when sorted in reverse."""
        return (self.circledast().parts, self.star().parts)

    def circled_rows(self) -> list[bool]:
        """For each row of the diagram (rows of star padded with zero rows for
        a zero part), whether the row ends in a circle.  Among equal rows the
        circle sits on the top-most one."""
        rows = sorted(self.antisym + self.sym, reverse=True)
        circled = [False] * len(rows)
        for a in self.antisym:
            i = rows.index(a)
            circled[i] = True
        return circled

    def diagram_rows(self) -> list[tuple[int, bool]]:
        rows = sorted(self.antisym + self.sym, reverse=True)
        return list(zip(rows, self.circled_rows()))


def from_star_circledast(star, circ) -> Superpartition:
    """Inverse of (star, circledast)."""
    star, circ = tuple(star), tuple(circ)
    L = max(len(star), len(circ))
    star += (0,) * (L - len(star))
    circ += (0,) * (L - len(circ))
    a, s = [], []
    for x, y in zip(star, circ):
        if y == x + 1:
            a.append(x)
        elif y == x:
            if x:
                s.append(x)
        else:
            raise ValueError("incompatible pair of partitions")
    return Superpartition(tuple(sorted(a, reverse=True)), tuple(s))


def star(sp: Superpartition) -> Partition:
    return sp.star()


def circledast(sp: Superpartition) -> Partition:
    return sp.circledast()


def degree(sp: Superpartition) -> tuple[int, int]:
    return sp.degree()


def dominance_leq(omega: Superpartition, lam: Superpartition) -> bool:
    if omega.degree() != lam.degree():
        return False
    return partition_dominance_leq(omega.star(), lam.star()) and \
        partition_dominance_leq(omega.circledast(), lam.circledast())


def _strict(n: int, m: int, maxpart: int):
    """Strictly decreasing m-tuples of integers >= 0 summing to n, first <= maxpart."""
    if m == 0:
        if n == 0:
            yield ()
        return
    for first in range(min(n, maxpart), m - 2, -1):
        for rest in _strict(n - first, m - 1, first - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def superpartitions(n: int, m: int) -> tuple[Superpartition, ...]:
    """All superpartitions of degree (n|m), sorted from the top of a linear
    extension of dominance downwards."""
    out = []
    for na in range(n + 1):
        for a in _strict(na, m, na):
            for s in partitions(n - na):
                out.append(Superpartition(a, s))
    out.sort(key=Superpartition.sort_key, reverse=True)
    return tuple(out)


# ---------------------------------------------------------------- cell data

@dataclass(frozen=True)
class CellStats:
    arm: int
    leg: int
    coarm: int
    coleg: int
    tilde_arm: int
    tilde_leg: int


def cell_stats(lam, lam_circ, cell) -> CellStats:
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    lam_circ = lam_circ if isinstance(lam_circ, Partition) else Partition(tuple(lam_circ))
    i, j = cell
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise ValueError(f"cell {cell} outside diagram {lam}")
    conj, conj_c = lam.conjugate(), lam_circ.conjugate()
    return CellStats(
        arm=lam[i - 1] - j,
        leg=conj[j - 1] - i,
        coarm=j - 1,
        coleg=i - 1,
        tilde_arm=lam_circ.part(i - 1) - j,
        tilde_leg=conj_c.part(j - 1) - i,
    )


def box_set_B(sp: Superpartition) -> set[tuple[int, int]]:
    """Boxes of the diagram not lying in a row and a column that both end in a circle."""
    circ = sp.circledast()
    rows = sp.diagram_rows()
    circ_cells = {(i + 1, r + 1) for i, (r, c) in enumerate(rows) if c}
    conj = circ.conjugate()
    col_ends_circle = {j for j in range(1, len(conj) + 1) if (conj[j - 1], j) in circ_cells}
    out = set()
    for i, (r, c) in enumerate(rows):
        for j in range(1, r + 1):
            if not (c and j in col_ends_circle):
                out.add((i + 1, j))
    return out


# ------------------------------------------------------------ admissibility

def is_admissible_22(lam, parts: int) -> bool:
    p = list(lam) + [0] * max(0, parts - len(tuple(lam)))
    return all(p[i] - p[i + 2] >= 2 for i in range(parts - 2))


def is_super_admissible_22(sp: Superpartition, l: int) -> bool:
    s, c = sp.star(), sp.circledast()
    return all(c.part(i) - s.part(i + 2) >= 2 for i in range(l - 2))


# ---------------------------------------------------------- special shapes

def staircase_gamma(r: int, s: int) -> Superpartition:
    """Gamma_{r,s} = ((s+r)/2-1, ..., (s-r)/2;) for r+s even."""
    if r < 1 or r > s:
        raise ValueError("need 1 <= r <= s")
    if (r + s) % 2:
        raise ValueError("r+s must be even")
    top = (s + r) // 2 - 1
    return Superpartition(tuple(range(top, top - r, -1)), ())


def gamma_r_s_plus1(r: int, s: int) -> Superpartition:
    """Gamma_{r,s+1} = ((s+r+1)/2-1, ..., (s-r+1)/2;) for r+s odd."""
    if r < 1 or r > s:
        raise ValueError("need 1 <= r <= s")
    if (r + s) % 2 == 0:
        raise ValueError("r+s must be odd")
    top = (s + r + 1) // 2 - 1
    return Superpartition(tuple(range(top, top - r, -1)), ())


def gamma_bar(a: int, l: int) -> Superpartition:
    if a < l or l < 1:
        raise ValueError("need a >= l >= 1")
    return Superpartition(tuple(range(a - 1, a - l - 1, -1)), ())


def mu_partition(sector: str, k: int) -> Partition:
    if k < 1:
        raise ValueError("k >= 1")
    if sector.upper() == "NS":
        return Partition(tuple(x for i in range(k) for x in (2 * (k - i) - 1,) * 2))
    if sector.upper() == "R":
        return Partition(tuple(range(2 * k - 1, 0, -1)))
    raise ValueError(f"unknown sector {sector!r}")


# ----------------------------------------------------------------- top moves

@dataclass(frozen=True)
class MarkedDiagram:
    """Rows of boxes, each with an optional circle label (1 = bottom circle)."""

    rows: tuple[tuple[int, int | None], ...]
    used: frozenset = frozenset()

    @classmethod
    def from_spart(cls, sp: Superpartition) -> "MarkedDiagram":
        labels = {a: j + 1 for j, a in enumerate(sorted(sp.antisym))}
        rows = [(a, labels[a]) for a in sp.antisym] + [(s, None) for s in sp.sym]
        return cls(tuple(rows))

    def to_spart(self) -> Superpartition:
        a = sorted((b for b, c in self.rows if c is not None), reverse=True)
        s = sorted((b for b, c in self.rows if c is None and b > 0), reverse=True)
        return Superpartition(tuple(a), tuple(s))

    def top(self, i: int) -> "MarkedDiagram":
        if i in self.used or i - 1 in self.used or i + 1 in self.used:
            raise InvalidMove(f"top move {i} not allowed after {sorted(self.used)}")
        labels = [c for _, c in self.rows]
        if i not in labels or i + 1 not in labels:
            raise InvalidMove(f"circles {i} and {i + 1} must both be present")
        rows = []
        for b, c in self.rows:
            if c == i:
                rows.append((b + 1, None))
            elif c == i + 1:
                rows.append((b, None))
            else:
                rows.append((b, c))
        return MarkedDiagram(tuple(rows), self.used | {i})


def top_move(sp, i: int):
    d = sp if isinstance(sp, MarkedDiagram) else MarkedDiagram.from_spart(sp)
    return d.top(i)


def top_moves(sp: Superpartition, indices) -> Superpartition:
    """Apply top moves right to left: ``top_moves(L, (4, 2))`` is T4 T2 L."""
    d = MarkedDiagram.from_spart(sp)
    for i in reversed(tuple(indices)):
        d = d.top(i)
    return d.to_spart()


def build_Xk(sp: Superpartition, k: int) -> set[Superpartition]:
    m = sp.m
    out = set()
    for idx in combinations(range(1, m), k):
        if all(idx[j + 1] >= idx[j] + 2 for j in range(k - 1)):
            out.add(top_moves(sp, idx))
    return out
