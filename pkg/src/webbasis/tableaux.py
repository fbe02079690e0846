"""
Partitions, standard Young tableaux and the entry action of S_d.

Conventions
-----------
Permutations are tuples in one-line notation on ``1..d`` (``p[k-1]`` is the
image of ``k``) and compose as functions: ``(s * t)(k) = s(t(k))``.

The right action on tableaux acts on entries: ``(t.s)(box) = s^-1(t(box))``.
With this convention ``t.s_i`` swaps the entries ``i`` and ``i+1`` and
``(t.s).u == t.(s*u)``.

>>> t0 = superstandard(Partition((2, 2, 2)))
>>> [i for i, _ in bruhat_covers_up(t0)]
[2, 4]
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "Partition", "StandardTableau", "Permutation",
    "identity", "simple", "compose", "inverse", "from_word", "permutation_length",
    "superstandard", "enumerate_std", "transpose_tableau", "apply_simple",
    "act", "bruhat_covers_up", "reduced_word_to", "reduced_word",
    "sigma_lambda", "eta_inverse", "catalan",
]

Permutation = tuple[int, ...]


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts if p != 0)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {self.parts!r}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {self.parts!r}")
        object.__setattr__(self, "parts", parts)

    @property
    def d(self) -> int:
        return sum(self.parts)

    def transpose(self) -> Partition:
        if not self.parts:
            return self
        return Partition(tuple(
            sum(1 for p in self.parts if p > j) for j in range(self.parts[0])
        ))

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True, order=True)
class StandardTableau:
    """A filling of a Young diagram; ``rows`` is a tuple of row tuples."""
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows if len(row))
        object.__setattr__(self, "rows", rows)

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def d(self) -> int:
        return sum(len(r) for r in self.rows)

    def reading_word(self) -> tuple[int, ...]:
        """Entries read left-to-right, top-to-bottom."""
        return tuple(x for row in self.rows for x in row)

    def columns(self) -> tuple[tuple[int, ...], ...]:
        if not self.rows:
            return ()
        return tuple(
            tuple(row[j] for row in self.rows if len(row) > j)
            for j in range(len(self.rows[0]))
        )

    def is_standard(self) -> bool:
        shape_ok = all(len(a) >= len(b) for a, b in zip(self.rows, self.rows[1:]))
        if not shape_ok:
            return False
        if sorted(self.reading_word()) != list(range(1, self.d + 1)):
            return False
        rows_ok = all(a < b for row in self.rows for a, b in zip(row, row[1:]))
        cols_ok = all(a < b for col in self.columns() for a, b in zip(col, col[1:]))
        return rows_ok and cols_ok

    def position(self, entry: int) -> tuple[int, int]:
        for i, row in enumerate(self.rows):
            if entry in row:
                return i, row.index(entry)
        raise KeyError(entry)

    def to_json(self, compact: bool = False):
        if compact:
            cols = self.columns()
            if len(cols) != 2 and not (len(cols) == 1):
                raise ValueError("compact form only exists for at most two columns")
            out = {"col1": list(cols[0]) if cols else []}
            out["col2"] = list(cols[1]) if len(cols) > 1 else []
            return out
        return {"shape": list(self.shape.parts), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data) -> StandardTableau:
        if isinstance(data, dict) and "col1" in data:
            col1, col2 = list(data["col1"]), list(data.get("col2", []))
            if len(col2) > len(col1):
                raise ValueError("second column longer than first")
            rows = [(col1[k], col2[k]) if k < len(col2) else (col1[k],)
                    for k in range(len(col1))]
            t = cls(tuple(rows))
        elif isinstance(data, dict):
            t = cls(tuple(tuple(r) for r in data["rows"]))
            if "shape" in data and list(t.shape.parts) != [p for p in data["shape"] if p]:
                raise ValueError("shape does not match rows")
        else:
            t = cls(tuple(tuple(r) for r in data))
        if not t.is_standard():
            raise ValueError(f"not a standard tableau: {data!r}")
        return t

    def __str__(self):
        return "[" + ",".join("[" + ",".join(map(str, r)) + "]" for r in self.rows) + "]"


# -- permutations ------------------------------------------------------------

def identity(d: int) -> Permutation:
    return tuple(range(1, d + 1))


def simple(i: int, d: int) -> Permutation:
    if not 1 <= i < d:
        raise ValueError(f"s_{i} is not a simple transposition of S_{d}")
    p = list(range(1, d + 1))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def compose(s: Permutation, t: Permutation) -> Permutation:
    """``s * t``: apply ``t`` first."""
    return tuple(s[x - 1] for x in t)


def inverse(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for k, v in enumerate(p, start=1):
        out[v - 1] = k
    return tuple(out)


def from_word(word: Iterable[int], d: int) -> Permutation:
    """``s_{i1} s_{i2} ... s_{im}`` as a permutation."""
    p = list(range(1, d + 1))
    for i in word:
        # right multiplication by s_i swaps positions i, i+1
        p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def permutation_length(p: Sequence[int]) -> int:
    n = len(p)
    return sum(1 for a in range(n) for b in range(a + 1, n) if p[a] > p[b])


def reduced_word(p: Permutation) -> tuple[int, ...]:
    """A reduced word for ``p``, found by peeling right descents."""
    p = list(p)
    word = []
    while True:
        for i in range(1, len(p)):
            if p[i - 1] > p[i]:
                p[i - 1], p[i] = p[i], p[i - 1]
                word.append(i)
                break
        else:
            break
    return tuple(reversed(word))


# -- tableaux ----------------------------------------------------------------

def superstandard(shape: Partition) -> StandardTableau:
    rows, k = [], 1
    for part in shape:
        rows.append(tuple(range(k, k + part)))
        k += part
    return StandardTableau(tuple(rows))


def transpose_tableau(t: StandardTableau) -> StandardTableau:
    return StandardTableau(t.columns())


def act(t: StandardTableau, p: Permutation) -> StandardTableau:
    """The entry action ``t.p``."""
    inv = inverse(p)
    return StandardTableau(tuple(tuple(inv[x - 1] for x in row) for row in t.rows))


def apply_simple(t: StandardTableau, i: int) -> tuple[StandardTableau, bool]:
    """Swap entries ``i`` and ``i+1``; also report whether the result is standard."""
    if not 1 <= i < t.d:
        raise ValueError(f"index {i} out of range for d={t.d}")
    swap = {i: i + 1, i + 1: i}
    u = StandardTableau(tuple(tuple(swap.get(x, x) for x in row) for row in t.rows))
    return u, u.is_standard()


@lru_cache(maxsize=None)
def _enumerate_std(parts: tuple[int, ...]) -> tuple[StandardTableau, ...]:
    d = sum(parts)
    found = []

    def grow(rows: list[list[int]], k: int):
        if k > d:
            found.append(StandardTableau(tuple(tuple(r) for r in rows)))
            return
        for i, target in enumerate(parts):
            if len(rows[i]) < target and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                grow(rows, k + 1)
                rows[i].pop()

    grow([[] for _ in parts], 1)
    return tuple(sorted(found, key=lambda t: t.reading_word()))


def enumerate_std(shape: Partition) -> list[StandardTableau]:
    """All standard tableaux of ``shape``, sorted by reading word."""
    return list(_enumerate_std(shape.parts))


def bruhat_covers_up(t: StandardTableau) -> list[tuple[int, StandardTableau]]:
    """Pairs ``(i, t.s_i)`` with ``t <=_i t.s_i``."""
    word = t.reading_word()
    where = {x: k for k, x in enumerate(word)}
    out = []
    for i in range(1, t.d):
        if where[i] < where[i + 1]:
            u, ok = apply_simple(t, i)
            if ok:
                out.append((i, u))
    return out


def reduced_word_to(t: StandardTableau) -> tuple[int, ...]:
    """
    Labels of a cover chain from the superstandard tableau of ``t``'s shape
    up to ``t``. Built by walking down, always taking the smallest descent.
    """
    labels = []
    while True:
        word = t.reading_word()
        where = {x: k for k, x in enumerate(word)}
        for i in range(1, t.d):
            if where[i + 1] < where[i]:
                u, ok = apply_simple(t, i)
                if ok:
                    labels.append(i)
                    t = u
                    break
        else:
            break
    return tuple(reversed(labels))


def eta_inverse(t: StandardTableau) -> Permutation:
    """The permutation ``tau`` with ``superstandard(shape).tau == t``."""
    base = superstandard(t.shape)
    tau = [0] * t.d
    for brow, trow in zip(base.rows, t.rows):
        for b, x in zip(brow, trow):
            tau[x - 1] = b
    return tuple(tau)


def sigma_lambda(shape: Partition) -> Permutation:
    """The permutation with ``(t^shape . sigma)^T == t^(shape^T)``."""
    target = transpose_tableau(superstandard(shape.transpose()))
    base = superstandard(shape)
    sigma = [0] * shape.d
    for brow, trow in zip(base.rows, target.rows):
        for b, x in zip(brow, trow):
            # sigma^-1(b) = x
            sigma[x - 1] = b
    return tuple(sigma)


def catalan(n: int) -> int:
    """Catalan numbers by the convolution recurrence (independent of tableaux)."""
    c = [1]
    for m in range(n):
        c.append(sum(c[k] * c[m - k] for k in range(m + 1)))
    return c[n]
