"""
The transition matrix from the standard basis to the web basis, and the
checks run against it.

Column ``t`` holds the image of ``v_t`` written in webs. Columns are ordered
by ``(length of eta^-1(t), reading word)`` and row ``k`` is the web
``psi(t_k^T)`` of column ``k``, so the expected leading terms sit on the
diagonal.

>>> M = transition_matrix(Partition((2, 1)))
>>> [str(w) for w in M.row_labels]
['()|', '|()']
>>> [[str(x) for x in row] for row in M.entries]
[['1', 'q'], ['0', '1']]
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache

from .diagrams import PositiveStats, build_diagram, resolve_naive, resolve_positive
from .hecke import DEFAULT_ORACLE_BOUND, action_matrix_standard, young_subgroup
from .linalg import Matrix, mat_mul
from .qlaurent import ONE, ZERO, LaurentPoly, eval_at_one, is_palindromic
from .tableaux import (
    Partition, StandardTableau, enumerate_std, eta_inverse, permutation_length,
    reduced_word, reduced_word_to, transpose_tableau,
)
from .webs import (
    Web, WebCombination, act_word, action_matrix, enumerate_webs, min_web, nest,
    order_leq, psi,
)

__all__ = [
    "METHODS", "TransitionMatrix", "Report", "two_row",
    "image_of_standard", "transition_matrix", "check_unitriangular",
    "check_positive", "check_palindromic", "check_equivariance",
    "check_eigen_relation", "check_q_one", "serialize", "parse",
    "check_bijection", "check_module_relations", "check_order_isomorphism",
    "check_resolvers", "check_key_lemma_report", "standard_labels", "eigenvalue",
]

METHODS = ("algebraic", "naive", "positive")


def two_row(shape: Partition) -> tuple[int, int]:
    """``(n, r)`` for the two-row shape ``(n + r, n)``."""
    parts = tuple(shape.parts) + (0, 0)
    if len(shape.parts) > 2:
        raise ValueError(f"{shape} has more than two rows")
    a, b = parts[0], parts[1]
    return b, a - b


def _column_order(t: StandardTableau):
    return (permutation_length(eta_inverse(t)), t.reading_word())


def standard_labels(shape: Partition) -> list[StandardTableau]:
    return sorted(enumerate_std(shape.transpose()), key=_column_order)


def image_of_standard(t: StandardTableau, method: str = "algebraic",
                      stats: PositiveStats | None = None) -> WebCombination:
    """The image of ``v_t`` in the web module, computed by ``method``."""
    if method == "algebraic":
        shape = t.shape.transpose()
        n, r = two_row(shape)
        return act_word(WebCombination.single(min_web(n, r)), reduced_word_to(t))
    if method == "naive":
        return resolve_naive(build_diagram(t))
    if method == "positive":
        return resolve_positive(build_diagram(t), stats, strict=False)
    raise ValueError(f"unknown method {method!r}")


@dataclass
class TransitionMatrix:
    shape: Partition
    row_labels: list[Web]
    col_labels: list[StandardTableau]
    entries: Matrix

    def entry(self, w: Web, t: StandardTableau) -> LaurentPoly:
        return self.entries[self.row_labels.index(w)][self.col_labels.index(t)]

    def column(self, t: StandardTableau) -> WebCombination:
        j = self.col_labels.index(t)
        return WebCombination((w, self.entries[k][j]) for k, w in enumerate(self.row_labels))

    def as_mapping(self) -> dict[tuple[Web, StandardTableau], LaurentPoly]:
        return {(w, t): self.entries[k][j]
                for k, w in enumerate(self.row_labels)
                for j, t in enumerate(self.col_labels) if self.entries[k][j]}

    def __eq__(self, other):
        if not isinstance(other, TransitionMatrix):
            return NotImplemented
        return (self.shape == other.shape and self.row_labels == other.row_labels
                and self.col_labels == other.col_labels and self.entries == other.entries)


def transition_matrix(shape: Partition, method: str = "algebraic",
                      stats: PositiveStats | None = None) -> TransitionMatrix:
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    return _transition_matrix(shape.parts, method) if stats is None \
        else _build(shape, method, stats)


@lru_cache(maxsize=None)
def _cached(parts: tuple[int, ...], method: str) -> TransitionMatrix:
    return _build(Partition(parts), method, None)


def _transition_matrix(parts, method) -> TransitionMatrix:
    m = _cached(parts, method)
    return TransitionMatrix(m.shape, list(m.row_labels), list(m.col_labels),
                            [list(row) for row in m.entries])


def _build(shape: Partition, method: str, stats) -> TransitionMatrix:
    two_row(shape)
    cols = standard_labels(shape)
    rows = [psi(transpose_tableau(t)) for t in cols]
    entries = [[ZERO] * len(cols) for _ in rows]
    index = {w: k for k, w in enumerate(rows)}
    for j, t in enumerate(cols):
        for w, c in image_of_standard(t, method, stats).items():
            entries[index[w]][j] = c
    return TransitionMatrix(shape, rows, cols, entries)


# -- checks ------------------------------------------------------------------------

@dataclass
class Report:
    name: str
    passed: bool
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def fail(self, msg: str):
        self.passed = False
        self.failures.append(msg)

    def lines(self) -> list[str]:
        out = [f"{self.name}: {'pass' if self.passed else 'FAIL'}"]
        out += [f"  {x}" for x in self.notes]
        out += [f"  failure: {x}" for x in self.failures[:20]]
        if len(self.failures) > 20:
            out.append(f"  ... {len(self.failures) - 20} more failures")
        return out


def check_unitriangular(m: TransitionMatrix) -> Report:
    """Leading coefficient 1 at ``psi(t^T)``, every other term strictly lower in the web order and in nesting."""
    rep = Report(f"unitriangular {m.shape}", True)
    for j, t in enumerate(m.col_labels):
        lead = psi(transpose_tableau(t))
        if m.entry(lead, t) != ONE:
            rep.fail(f"column {t}: coefficient of {lead} is {m.entry(lead, t)}")
        for k, w in enumerate(m.row_labels):
            c = m.entries[k][j]
            if not c or w == lead:
                continue
            if not order_leq(w, lead):
                rep.fail(f"column {t}: {w} is not below {lead}")
            if nest(w) >= nest(lead):
                rep.fail(f"column {t}: nest({w}) >= nest({lead})")
    return rep


def check_positive(m: TransitionMatrix) -> Report:
    rep = Report(f"positive {m.shape}", True)
    for (w, t), c in sorted(m.as_mapping().items(), key=lambda x: (x[0][0].sort_key(), x[0][1].rows)):
        if any(e < 0 or k < 0 for e, k in c.items()):
            rep.fail(f"entry ({w}, {t}) = {c}")
    return rep


def check_palindromic(m: TransitionMatrix) -> Report:
    """Conjecture check: reported, never a theorem failure unless asked."""
    rep = Report(f"palindromic {m.shape} (conjecture)", True)
    for (w, t), c in sorted(m.as_mapping().items(), key=lambda x: (x[0][0].sort_key(), x[0][1].rows)):
        if not is_palindromic(c):
            rep.fail(f"entry ({w}, {t}) = {c}")
    return rep


def check_q_one(m: TransitionMatrix) -> Report:
    rep = Report(f"q=1 specialisation {m.shape}", True)
    for (w, t), c in m.as_mapping().items():
        if eval_at_one(c) < 0:
            rep.fail(f"entry ({w}, {t}) = {c} evaluates to {eval_at_one(c)}")
    return rep


def check_equivariance(shape: Partition, bound: int = DEFAULT_ORACLE_BOUND) -> Report:
    """``M B_i = A_i M`` with B_i from the Specht module oracle and A_i from the web action."""
    rep = Report(f"equivariance {shape}", True)
    n, r = two_row(shape)
    m = transition_matrix(shape)
    basis = enumerate_webs(n, r)
    # rows in web enumeration order (for A_i), columns in tableau enumeration order (for B_i)
    index = {w: k for k, w in enumerate(m.row_labels)}
    cols = [m.col_labels.index(t) for t in enumerate_std(shape.transpose())]
    mm = [[m.entries[index[w]][j] for j in cols] for w in basis]
    for i in range(1, shape.d):
        b = action_matrix_standard(shape, i, bound)
        a = action_matrix(n, r, i, basis)
        if mat_mul(mm, b) != mat_mul(a, mm):
            rep.fail(f"M B_{i} != A_{i} M")
    rep.notes.append(f"checked i = 1..{shape.d - 1}")
    return rep


def eigenvalue(shape: Partition) -> LaurentPoly:
    """The scalar by which ``y_{shape^T}`` acts on ``w0``; raises if ``w0`` is not an eigenvector."""
    n, r = two_row(shape)
    w0 = min_web(n, r)
    start = WebCombination.single(w0)
    total = WebCombination()
    for w, length in young_subgroup(shape.transpose()):
        coeff = LaurentPoly.monomial((-1) ** length, -length)
        total = total + act_word(start, reduced_word(w)).scale(coeff)
    c = total.coeff(w0)
    if total != WebCombination.single(w0, c):
        raise ArithmeticError(f"w0 is not an eigenvector of y for {shape}")
    return c


def check_eigen_relation(shape: Partition) -> Report:
    rep = Report(f"eigen {shape}", True)
    n, _ = two_row(shape)
    expected = (ONE + LaurentPoly.q(-2)) ** n
    try:
        c = eigenvalue(shape)
    except ArithmeticError as exc:
        rep.fail(str(exc))
        return rep
    rep.notes.append(f"w0 y = ({c}) w0")
    if c != expected:
        rep.fail(f"eigenvalue {c}, expected {expected}")
    return rep


# -- serialisation -----------------------------------------------------------------

def serialize(m: TransitionMatrix, fmt: str = "json") -> str:
    if fmt == "json":
        a, b = (tuple(m.shape.parts) + (0, 0))[:2]
        data = {
            "lambda": [a, b],
            "rows": [w.to_json() for w in m.row_labels],
            "cols": [t.to_json() for t in m.col_labels],
            "entries": [[c.to_json() for c in row] for row in m.entries],
        }
        return json.dumps(data, separators=(",", ":"))
    if fmt == "pretty":
        cells = [[str(c) for c in row] for row in m.entries]
        width = max([len(x) for row in cells for x in row] + [1])
        label_w = max(len(str(w)) for w in m.row_labels)
        out = [f"lambda = {m.shape}"]
        for j, t in enumerate(m.col_labels):
            out.append(f"  t{j} = {t}")
        out.append(" " * (label_w + 2) + "  ".join(f"t{j}".rjust(width) for j in range(len(m.col_labels))))
        for w, row in zip(m.row_labels, cells):
            out.append(str(w).ljust(label_w) + "  " + "  ".join(x.rjust(width) for x in row))
        return "\n".join(out)
    raise ValueError(f"unknown format {fmt!r}")


def parse(text: str) -> TransitionMatrix:
    data = json.loads(text)
    shape = Partition(tuple(data["lambda"]))
    rows = [Web.from_json(x) for x in data["rows"]]
    cols = [StandardTableau.from_json(x) for x in data["cols"]]
    entries = [[LaurentPoly.from_json(c) for c in row] for row in data["entries"]]
    if len(entries) != len(rows) or any(len(row) != len(cols) for row in entries):
        raise ValueError("entries do not match the labels")
    return TransitionMatrix(shape, rows, cols, entries)


# -- structural checks on webs and tableaux -------------------------------------------

def check_bijection(shape: Partition) -> Report:
    """``phi`` and ``psi`` are mutually inverse, and the two sets have equal size."""
    from .tableaux import catalan
    from .webs import phi

    rep = Report(f"bijection {shape}", True)
    n, r = two_row(shape)
    webs = enumerate_webs(n, r)
    tabs = enumerate_std(shape)
    for w in webs:
        if psi(phi(w)) != w:
            rep.fail(f"psi(phi({w})) = {psi(phi(w))}")
    for t in tabs:
        if phi(psi(t)) != t:
            rep.fail(f"phi(psi({t})) = {phi(psi(t))}")
    if len(webs) != len(tabs):
        rep.fail(f"{len(webs)} webs but {len(tabs)} tableaux")
    if r == 0 and len(webs) != catalan(n):
        rep.fail(f"{len(webs)} webs but Catalan({n}) = {catalan(n)}")
    rep.notes.append(f"{len(webs)} webs")
    return rep


def check_module_relations(shape: Partition) -> Report:
    """Quadratic, commutation and braid relations for the web action matrices."""
    from .linalg import identity_matrix, mat_add, mat_scale

    rep = Report(f"hecke-relations {shape}", True)
    n, r = two_row(shape)
    basis = enumerate_webs(n, r)
    d = shape.d
    mats = {i: action_matrix(n, r, i, basis) for i in range(1, d)}
    one = identity_matrix(len(basis))
    q = LaurentPoly.q(1)
    for i, a in mats.items():
        left = mat_add(a, mat_scale(one, -q))
        right = mat_add(a, mat_scale(one, LaurentPoly.q(-1)))
        if any(x for row in mat_mul(left, right) for x in row):
            rep.fail(f"(T_{i} - q)(T_{i} + q^-1) != 0")
        for j, b in mats.items():
            if j > i + 1 and mat_mul(a, b) != mat_mul(b, a):
                rep.fail(f"T_{i} T_{j} != T_{j} T_{i}")
            if j == i + 1 and mat_mul(mat_mul(a, b), a) != mat_mul(mat_mul(b, a), b):
                rep.fail(f"braid relation fails for {i}, {j}")
    return rep


def tableau_cover_edges(shape: Partition) -> list[tuple[StandardTableau, int, StandardTableau]]:
    from .tableaux import bruhat_covers_up

    return [(t, i, u) for t in enumerate_std(shape.transpose()) for i, u in bruhat_covers_up(t)]


def check_order_isomorphism(shape: Partition) -> Report:
    """The labelled cover graphs on webs and on Std(shape^T) agree under ``phi(.)^T``; nest is the length."""
    from .webs import hasse_edges, phi

    rep = Report(f"order-iso {shape}", True)
    n, r = two_row(shape)

    def image(w):
        return transpose_tableau(phi(w))

    web_edges = {(image(w), i, image(u)) for w, i, u in hasse_edges(n, r)}
    tab_edges = set(tableau_cover_edges(shape))
    if web_edges != tab_edges:
        rep.fail(f"{len(web_edges ^ tab_edges)} edges differ")
    for w in enumerate_webs(n, r):
        length = permutation_length(eta_inverse(image(w)))
        if nest(w) != length:
            rep.fail(f"nest({w}) = {nest(w)} but the length is {length}")
    rep.notes.append(f"{len(tab_edges)} cover edges")
    return rep


def check_resolvers(shape: Partition) -> Report:
    """
    The algebraic, naive and positive routes agree column by column, and the
    positive route keeps (B1)-(B3) on every intermediate diagram.
    """
    from .diagrams import PositiveStats

    rep = Report(f"resolvers {shape}", True)
    searched = 0
    for t in standard_labels(shape):
        a = image_of_standard(t, "algebraic")
        if image_of_standard(t, "naive") != a:
            rep.fail(f"naive route differs at {t}")
        stats = PositiveStats()
        if image_of_standard(t, "positive", stats) != a:
            rep.fail(f"positive route differs at {t}")
        if stats.b_violations:
            rep.fail(f"{t}: no rewriting keeps (B1)-(B3); "
                     f"{stats.b_violations} intermediate diagrams violate them")
        if stats.loop_removals:
            rep.fail(f"{t}: closed loops were removed")
        searched += stats.fallback > 0
    if searched:
        rep.notes.append(f"{searched} columns needed a rewrite other than the preferred region")
    return rep


def check_key_lemma_report(shape: Partition, bound: int = DEFAULT_ORACLE_BOUND) -> Report:
    from .hecke import check_key_lemma

    rep = Report(f"key lemma {shape}", True)
    try:
        rep.notes.append(f"z y = ({check_key_lemma(shape, bound)}) z")
    except ArithmeticError as exc:
        rep.fail(str(exc))
    return rep
