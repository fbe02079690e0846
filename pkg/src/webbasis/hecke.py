"""
The Hecke algebra H_d(q) on its T_w basis and the Specht module z_lambda H_d(q).

This module is an oracle: it knows nothing about webs. It builds the standard
basis ``v_t = z_lambda T_{eta^-1(t)}`` inside the algebra and extracts the
matrices of right multiplication by each T_i on that basis.

Normalisation: ``(T_i - q)(T_i + q^-1) = 0``, so ``T_i^2 = (q - q^-1) T_i + 1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .qlaurent import LaurentPoly, ONE, ZERO
from .linalg import Matrix, bareiss_solve, zeros
from .tableaux import (
    Partition, Permutation, StandardTableau, enumerate_std, eta_inverse,
    identity, permutation_length, reduced_word, sigma_lambda,
)

__all__ = [
    "HeckeElement", "OracleBoundError", "DEFAULT_ORACLE_BOUND",
    "mult_generator", "mult_word", "mult_T", "mult", "T",
    "element_x", "element_y", "element_z", "young_subgroup",
    "standard_basis", "action_matrix_standard", "check_key_lemma",
]

DEFAULT_ORACLE_BOUND = 8
Q_MINUS_QINV = LaurentPoly({1: 1, -1: -1})

# evaluation point for choosing pivot coordinates; exactness never depends on it
_PRIME = (1 << 61) - 1
_POINT = 1_000_003


class OracleBoundError(ValueError):
    pass


@dataclass
class HeckeElement:
    d: int
    terms: dict[Permutation, LaurentPoly] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {w: c for w, c in self.terms.items() if c}
        if any(len(w) != self.d for w in self.terms):
            raise ValueError("permutation of the wrong degree")

    @classmethod
    def one(cls, d: int) -> HeckeElement:
        return cls(d, {identity(d): ONE})

    def __add__(self, other: HeckeElement) -> HeckeElement:
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, ZERO) + c
        return HeckeElement(self.d, out)

    def __sub__(self, other: HeckeElement) -> HeckeElement:
        return self + other.scale(-ONE)

    def scale(self, c: LaurentPoly) -> HeckeElement:
        return HeckeElement(self.d, {w: c * v for w, v in self.terms.items()})

    def __mul__(self, other: HeckeElement) -> HeckeElement:
        return mult(self, other)

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.d == other.d and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, w: Permutation) -> LaurentPoly:
        return self.terms.get(w, ZERO)

    def to_json(self) -> dict:
        return {"d": self.d,
                "terms": [[list(w), c.to_json()] for w, c in sorted(self.terms.items())]}


def T(w: Permutation) -> HeckeElement:
    return HeckeElement(len(w), {tuple(w): ONE})


def mult_generator(h: HeckeElement, i: int) -> HeckeElement:
    """Right multiplication by ``T_i``."""
    if not 1 <= i < h.d:
        raise IndexError(f"T_{i} does not exist in H_{h.d}")
    out: dict[Permutation, LaurentPoly] = {}
    a, b = i - 1, i
    for w, c in h.terms.items():
        ws = list(w)
        ws[a], ws[b] = ws[b], ws[a]
        ws = tuple(ws)
        if w[a] < w[b]:
            out[ws] = out.get(ws, ZERO) + c
        else:
            out[w] = out.get(w, ZERO) + Q_MINUS_QINV * c
            out[ws] = out.get(ws, ZERO) + c
    return HeckeElement(h.d, out)


def mult_word(h: HeckeElement, word: Iterable[int]) -> HeckeElement:
    for i in word:
        h = mult_generator(h, i)
    return h


def mult_T(h: HeckeElement, w: Permutation) -> HeckeElement:
    """``h * T_w`` via a reduced word of ``w``."""
    return mult_word(h, reduced_word(w))


def mult(h: HeckeElement, g: HeckeElement) -> HeckeElement:
    if h.d != g.d:
        raise ValueError("degree mismatch")
    out = HeckeElement(h.d)
    for w, c in g.terms.items():
        out = out + mult_T(h, w).scale(c)
    return out


# -- Young subgroups and the elements x, y, z ----------------------------------

def young_subgroup(shape: Partition) -> list[tuple[Permutation, int]]:
    """``(w, length(w))`` for every w permuting the consecutive row blocks of ``shape``."""
    blocks, start = [], 1
    for part in shape:
        blocks.append(list(range(start, start + part)))
        start += part
    per_block = [
        [(p, permutation_length(p)) for p in itertools.permutations(block)]
        for block in blocks
    ]
    out = []
    for choice in itertools.product(*per_block):
        w = tuple(x for p, _ in choice for x in p)
        out.append((w, sum(l for _, l in choice)))
    return out


def element_x(shape: Partition) -> HeckeElement:
    return HeckeElement(shape.d, {w: LaurentPoly.q(l) for w, l in young_subgroup(shape)})


def element_y(shape: Partition) -> HeckeElement:
    # (-q)^(-l)
    return HeckeElement(shape.d, {w: LaurentPoly.monomial((-1) ** l, -l)
                                  for w, l in young_subgroup(shape)})


@lru_cache(maxsize=None)
def _z(parts: tuple[int, ...]) -> HeckeElement:
    shape = Partition(parts)
    h = mult_T(element_x(shape), sigma_lambda(shape))
    return mult(h, element_y(shape.transpose()))


def element_z(shape: Partition) -> HeckeElement:
    z = _z(shape.parts)
    return HeckeElement(z.d, dict(z.terms))


# -- the standard basis and the action matrices ---------------------------------

def _check_bound(shape: Partition, bound: int):
    if shape.d > bound:
        raise OracleBoundError(f"d={shape.d} exceeds the oracle bound {bound}")


@lru_cache(maxsize=None)
def _standard_basis(parts: tuple[int, ...]) -> tuple[tuple[StandardTableau, HeckeElement], ...]:
    shape = Partition(parts)
    z = _z(parts)
    out = []
    for t in enumerate_std(shape.transpose()):
        out.append((t, mult_T(z, eta_inverse(t))))
    return tuple(out)


def standard_basis(shape: Partition, bound: int = DEFAULT_ORACLE_BOUND
                   ) -> list[tuple[StandardTableau, HeckeElement]]:
    """``(t, v_t)`` for ``t`` in Std(shape^T), in ``enumerate_std`` order."""
    _check_bound(shape, bound)
    return list(_standard_basis(shape.parts))


def _mod_value(c: LaurentPoly) -> int:
    inv = pow(_POINT, -1, _PRIME)
    total = 0
    for e, k in c.items():
        base = _POINT if e >= 0 else inv
        total += k * pow(base, abs(e), _PRIME)
    return total % _PRIME


def _pivot_coordinates(vectors: list[HeckeElement]) -> list[Permutation]:
    """Permutations whose coordinates make the basis matrix nonsingular."""
    k = len(vectors)
    coords = sorted({w for v in vectors for w in v.terms})
    basis: list[tuple[int, list[int]]] = []  # (lead column, reduced row)
    chosen = []
    for w in coords:
        row = [_mod_value(v.coeff(w)) for v in vectors]
        for lead, brow in basis:
            f = row[lead]
            if f:
                row = [(x - f * y) % _PRIME for x, y in zip(row, brow)]
        lead = next((j for j, x in enumerate(row) if x), None)
        if lead is None:
            continue
        inv = pow(row[lead], -1, _PRIME)
        row = [(x * inv) % _PRIME for x in row]
        basis.append((lead, row))
        chosen.append(w)
        if len(chosen) == k:
            return chosen
    raise ArithmeticError("standard basis vectors are linearly dependent")


def dimension_of_span(vectors: list[HeckeElement]) -> int:
    try:
        return len(_pivot_coordinates(vectors))
    except ArithmeticError:
        # recount without stopping early
        coords = sorted({w for v in vectors for w in v.terms})
        rows = [[_mod_value(v.coeff(w)) for v in vectors] for w in coords]
        rank = 0
        cols = len(vectors)
        for c in range(cols):
            piv = next((r for r in range(rank, len(rows)) if rows[r][c]), None)
            if piv is None:
                continue
            rows[rank], rows[piv] = rows[piv], rows[rank]
            inv = pow(rows[rank][c], -1, _PRIME)
            for r in range(len(rows)):
                if r != rank and rows[r][c]:
                    f = rows[r][c] * inv
                    rows[r] = [(x - f * y) % _PRIME for x, y in zip(rows[r], rows[rank])]
            rank += 1
        return rank


@lru_cache(maxsize=None)
def _action_matrix(parts: tuple[int, ...], i: int) -> tuple[tuple[LaurentPoly, ...], ...]:
    basis = [v for _, v in _standard_basis(parts)]
    pivots = _pivot_coordinates(basis)
    a = [[v.coeff(w) for v in basis] for w in pivots]
    images = [mult_generator(v, i) for v in basis]
    rhs = [[img.coeff(w) for img in images] for w in pivots]
    x = bareiss_solve(a, rhs)
    # multiply back on every coordinate, not just the pivots
    for col, img in enumerate(images):
        combo = HeckeElement(img.d)
        for row, v in enumerate(basis):
            if x[row][col]:
                combo = combo + v.scale(x[row][col])
        if combo != img:
            raise ArithmeticError(f"v_t T_{i} is not in the span of the standard basis")
    return tuple(tuple(row) for row in x)


def action_matrix_standard(shape: Partition, i: int, bound: int = DEFAULT_ORACLE_BOUND) -> Matrix:
    """``B`` with ``v_t T_i = sum_u B[u][t] v_u`` (columns are images)."""
    _check_bound(shape, bound)
    if not 1 <= i < shape.d:
        raise IndexError(f"T_{i} does not exist in H_{shape.d}")
    return [list(row) for row in _action_matrix(shape.parts, i)]


def check_key_lemma(shape: Partition, bound: int = DEFAULT_ORACLE_BOUND) -> LaurentPoly:
    """The scalar ``c`` with ``z_lambda y_{lambda^T} = c z_lambda``."""
    _check_bound(shape, bound)
    z = _z(shape.parts)
    zy = mult(z, element_y(shape.transpose()))
    if z.is_zero():
        raise ArithmeticError("z_lambda vanished")
    w0 = min(z.terms)
    c = zy.coeff(w0).divmod_exact(z.coeff(w0))
    if zy != z.scale(c):
        raise ArithmeticError(f"z y is not proportional to z for {shape}")
    if not c:
        raise ArithmeticError("proportionality constant is zero")
    return c


def matrix_of(rows) -> Matrix:
    out = zeros(len(rows), len(rows[0]) if rows else 0)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            out[i][j] = x
    return out
