"""Dyck paths, their ascent/descent compositions and the LGV path families.

A Dyck path of semilength n is a string over {"U", "D"}.  Compositions are
tuples of positive ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate, groupby
from typing import Iterator, Sequence

from .combinatorics import binomial, check_bound, determinant, is_composition
from .patterns import comp_of_set, descent_set, perm_contains, set_of_comp

#: Default exhaustive bound for :func:`enumerate_dyck`.
DYCK_BOUND = 14


def is_dyck(steps: str) -> bool:
    height = 0
    for s in steps:
        if s == "U":
            height += 1
        elif s == "D":
            height -= 1
            if height < 0:
                return False
        else:
            return False
    return height == 0


def _runs(steps: str, letter: str) -> tuple[int, ...]:
    return tuple(len(list(g)) for key, g in groupby(steps) if key == letter)


def ascent_comp(path: str) -> tuple[int, ...]:
    return _runs(path, "U")


def descent_comp(path: str) -> tuple[int, ...]:
    return _runs(path, "D")


def from_compositions(alpha: Sequence[int], delta: Sequence[int]) -> str:
    """U^{a1} D^{d1} U^{a2} D^{d2} ..."""
    if len(alpha) != len(delta):
        raise ValueError("ascent and descent compositions must have equal length")
    path = "".join("U" * a + "D" * d for a, d in zip(alpha, delta))
    if not is_dyck(path) or not (is_composition(alpha) and is_composition(delta)):
        raise ValueError(f"U/D runs {tuple(alpha)}, {tuple(delta)} do not form a Dyck path")
    return path


def reverse_path(path: str) -> str:
    """Mirror image: read backwards and swap U with D."""
    return "".join("D" if s == "U" else "U" for s in reversed(path))


def enumerate_dyck(n: int, bound: int = DYCK_BOUND) -> Iterator[str]:
    """Every Dyck path of semilength ``n``, in lexicographic order with D < U."""
    check_bound(n, bound, "enumerate_dyck")
    yield from _dyck_paths(n)


@lru_cache(maxsize=4)
def _dyck_paths(n: int) -> tuple[str, ...]:
    out = []
    buf = []

    def rec(ups: int, downs: int) -> None:
        if ups == n and downs == n:
            out.append("".join(buf))
            return
        if downs < ups:
            buf.append("D")
            rec(ups, downs + 1)
            buf.pop()
        if ups < n:
            buf.append("U")
            rec(ups + 1, downs)
            buf.pop()

    rec(0, 0)
    return tuple(out)


def _ascent_matrix(parts: Sequence[int]) -> list[list[int]]:
    k = len(parts)
    sums = list(accumulate(parts))
    return [
        [binomial(j - i + sums[i - 1], j - (i - 1)) for j in range(1, k)]
        for i in range(1, k)
    ]


def dyck_by_ascent_det(alpha: Sequence[int]) -> int:
    """Dyck paths with ascent composition ``alpha``, as an LGV determinant."""
    if not is_composition(alpha):
        raise ValueError(f"{tuple(alpha)} is not a composition")
    return determinant(_ascent_matrix(alpha))


def dyck_by_ascent_bruteforce(alpha: Sequence[int], bound: int = DYCK_BOUND) -> int:
    alpha = tuple(alpha)
    return sum(1 for d in enumerate_dyck(sum(alpha), bound) if ascent_comp(d) == alpha)


def refinement_shift(alpha: Sequence[int]) -> tuple[int, ...]:
    """(a1+1, ..., a_{k-1}+1, a_k)."""
    alpha = tuple(alpha)
    return tuple(a + 1 for a in alpha[:-1]) + alpha[-1:]


def dyck_refining_count(alpha: Sequence[int]) -> int:
    """Dyck paths whose ascent set lies inside the partial sums of ``alpha``.

    Equivalently, paths whose ascent composition is refined by ``alpha``.
    Counted as the paths with ascent composition ``refinement_shift(alpha)``.
    """
    return dyck_by_ascent_det(refinement_shift(alpha))


def dyck_refining_bruteforce(alpha: Sequence[int], bound: int = DYCK_BOUND) -> int:
    allowed = set_of_comp(alpha)
    return sum(
        1 for d in enumerate_dyck(sum(alpha), bound) if set_of_comp(ascent_comp(d)) <= allowed
    )


def delete_leading_peaks(path: str, count: int) -> str:
    """Remove the first ``count`` occurrences of a UD peak."""
    out = path
    for _ in range(count):
        idx = out.find("UD")
        if idx < 0:
            raise ValueError("path has too few peaks")
        out = out[:idx] + out[idx + 2 :]
    return out


def lehmer_code(pi: Sequence[int]) -> tuple[int, ...]:
    n = len(pi)
    return tuple(sum(1 for j in range(i + 1, n) if pi[j] < pi[i]) for i in range(n))


def rothe_dyck(pi: Sequence[int]) -> str:
    """Boundary path of the Rothe diagram of a 132-avoiding permutation.

    For a 132-avoider the diagram is the Young diagram of its Lehmer code
    (weakly decreasing).  Rows with equal code value form one run of D
    steps and each drop of the code value is a run of U steps, giving
    U^{n-v1} D^{b1} U^{v1-v2} D^{b2} ... where v1 > v2 > ... > 0 are the
    distinct code values and b1, b2, ... the number of rows holding each.
    """
    pi = tuple(pi)
    if perm_contains(pi, (1, 3, 2)):
        raise ValueError(f"{pi} contains 132")
    n = len(pi)
    if n == 0:
        return ""
    code = lehmer_code(pi)
    values = []
    blocks = []
    for v, group in groupby(code):
        values.append(v)
        blocks.append(len(list(group)))
    ups = [n - values[0]] + [values[t - 1] - values[t] for t in range(1, len(values))]
    return from_compositions(ups, blocks)


def rothe_cells(pi: Sequence[int]) -> set[tuple[int, int]]:
    """Cells (row i, column j), 1-based, with j < pi(i) and pi^{-1}(j) > i."""
    n = len(pi)
    pos = {v: i for i, v in enumerate(pi, start=1)}
    return {(i, j) for i in range(1, n + 1) for j in range(1, pi[i - 1]) if pos[j] > i}


@dataclass(frozen=True)
class PathFamily:
    """Nonintersecting family of k-1 lattice paths for an ascent composition.

    Path i runs from s_i = (alpha_1+...+alpha_i - 1, i-1) to t_i = (0, i)
    with west steps and exactly one north step, taken at abscissa
    ``columns[i-1]``.  The family is vertex-disjoint exactly when the
    columns strictly increase.
    """

    alpha: tuple[int, ...]
    columns: tuple[int, ...]

    def __post_init__(self) -> None:
        k = len(self.alpha)
        if not is_composition(self.alpha) or len(self.columns) != k - 1:
            raise ValueError("malformed path family")
        for x, s in zip(self.columns, self.sources()):
            if not 0 <= x <= s[0]:
                raise ValueError(f"north step at {x} lies outside source row {s}")
        if any(a >= b for a, b in zip(self.columns, self.columns[1:])):
            raise ValueError(f"paths intersect: columns {self.columns} not increasing")

    def sources(self) -> list[tuple[int, int]]:
        sums = list(accumulate(self.alpha))
        return [(sums[i] - 1, i) for i in range(len(self.alpha) - 1)]

    def sinks(self) -> list[tuple[int, int]]:
        return [(0, i + 1) for i in range(len(self.alpha) - 1)]

    def paths(self) -> list[list[tuple[int, int]]]:
        """Vertex lists of each path, source first."""
        out = []
        for (sx, sy), x in zip(self.sources(), self.columns):
            verts = [(cx, sy) for cx in range(sx, x - 1, -1)]
            verts += [(cx, sy + 1) for cx in range(x, -1, -1)]
            out.append(verts)
        return out


def lgv_families(alpha: Sequence[int]) -> Iterator[PathFamily]:
    """Every nonintersecting family for ``alpha``, columns in lexicographic order."""
    alpha = tuple(alpha)
    if not is_composition(alpha):
        raise ValueError(f"{alpha} is not a composition")
    limits = [s - 1 for s in accumulate(alpha)][:-1]
    cols: list[int] = []

    def rec(i: int) -> Iterator[PathFamily]:
        if i == len(limits):
            yield PathFamily(alpha, tuple(cols))
            return
        start = cols[-1] + 1 if cols else 0
        for x in range(start, limits[i] + 1):
            cols.append(x)
            yield from rec(i + 1)
            cols.pop()

    yield from rec(0)


def family_to_dyck(family: PathFamily) -> str:
    n = sum(family.alpha)
    delta = []
    prev = -1
    for x in family.columns:
        delta.append(x - prev)
        prev = x
    delta.append(n - sum(delta))
    return from_compositions(family.alpha, delta)


def dyck_to_family(path: str) -> PathFamily:
    if not is_dyck(path):
        raise ValueError(f"{path!r} is not a Dyck path")
    alpha = ascent_comp(path)
    delta = descent_comp(path)
    columns = tuple(s - 1 for s in accumulate(delta))[:-1]
    return PathFamily(alpha, columns)


def render_path(path: str) -> str:
    """Mountain drawing of a Dyck path with / and \\ (documentation only)."""
    if not path:
        return "(empty path)"
    height = 0
    points = []
    top = 0
    for s in path:
        if s == "U":
            points.append((height, "/"))
            height += 1
        else:
            height -= 1
            points.append((height, "\\"))
        top = max(top, height)
    lines = []
    for level in range(top - 1, -1, -1):
        lines.append("".join(ch if h == level else " " for h, ch in points).rstrip())
    return "\n".join(lines)


def render_rothe(pi: Sequence[int]) -> str:
    """Permutation grid: X marks (i, pi(i)), # marks Rothe-diagram cells."""
    n = len(pi)
    cells = rothe_cells(pi)
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if pi[i - 1] == j:
                row.append("X")
            elif (i, j) in cells:
                row.append("#")
            else:
                row.append(".")
        rows.append(" ".join(row))
    return "\n".join(rows)


def descent_comp_of_perm(pi: Sequence[int]) -> tuple[int, ...]:
    return comp_of_set(descent_set(pi), len(pi))
