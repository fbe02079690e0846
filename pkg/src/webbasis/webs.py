"""
Non-crossing (n+r, n)-webs and the web module.

A web is stored as its bottom word over ``(``, ``)`` and ``|``: an arc is a
matched ``(``/``)`` pair and ``|`` is a through-string. Planarity forces the
k-th ``|`` to end at the top vertex k', so the word determines the web.

Vertices are numbered ``1..2n+r`` along the bottom. In pairings a top vertex
k' is encoded as ``-k``.

>>> w = Web("|(())")
>>> phi(w)
StandardTableau(rows=((1, 2, 3), (4, 5)))
>>> nest(w)
3
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Mapping

from .qlaurent import LaurentPoly, ONE, Q, ZERO, quantum_int
from .tableaux import Partition, StandardTableau

__all__ = [
    "Web", "WebCombination", "enumerate_webs", "min_web", "max_web",
    "phi", "psi", "nest_edge", "nest", "nest_via_prime",
    "act_E", "act_T", "act_word", "web_covers_up", "hasse_edges", "order_leq",
    "action_matrix",
]

_SORT = {"(": 0, "|": 1, ")": 2}
MINUS_TWO = -quantum_int(2)


@dataclass(frozen=True)
class Web:
    word: str

    def __post_init__(self):
        depth = 0
        for ch in self.word:
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth < 0:
                    raise ValueError(f"unbalanced web word {self.word!r}")
            elif ch == "|":
                if depth:
                    raise ValueError(f"through-string inside an arc in {self.word!r}")
            else:
                raise ValueError(f"bad symbol {ch!r} in web word")
        if depth:
            raise ValueError(f"unbalanced web word {self.word!r}")

    @property
    def n(self) -> int:
        return self.word.count("(")

    @property
    def r(self) -> int:
        return self.word.count("|")

    @property
    def size(self) -> int:
        return len(self.word)

    @cached_property
    def pairing(self) -> dict[int, int]:
        """Partner of every vertex; top vertex k' is ``-k``."""
        partner: dict[int, int] = {}
        stack: list[int] = []
        thru = 0
        for v, ch in enumerate(self.word, start=1):
            if ch == "(":
                stack.append(v)
            elif ch == ")":
                a = stack.pop()
                partner[a], partner[v] = v, a
            else:
                thru += 1
                partner[v], partner[-thru] = -thru, v
        return partner

    def arcs(self) -> list[tuple[int, int]]:
        return sorted((a, b) for a, b in self.pairing.items() if 0 < a < b)

    def through_strings(self) -> list[int]:
        """Bottom endpoints of the through-strings, left to right."""
        return [v for v, ch in enumerate(self.word, start=1) if ch == "|"]

    def is_left(self, v: int) -> bool:
        return self.word[v - 1] in "(|"

    def sort_key(self):
        return tuple(_SORT[ch] for ch in self.word)

    def to_json(self) -> dict:
        return {"n": self.n, "r": self.r, "word": self.word}

    @classmethod
    def from_json(cls, data) -> Web:
        if isinstance(data, str):
            return cls(data)
        w = cls(data["word"])
        if ("n" in data and data["n"] != w.n) or ("r" in data and data["r"] != w.r):
            raise ValueError("n/r disagree with the web word")
        return w

    @classmethod
    def from_pairing(cls, size: int, partner: Mapping[int, int]) -> Web:
        chars = []
        for v in range(1, size + 1):
            p = partner[v]
            chars.append("|" if p < 0 else ("(" if p > v else ")"))
        w = cls("".join(chars))
        if any(w.pairing[v] != partner[v] for v in range(1, size + 1)
               if partner[v] > 0):
            raise ValueError("pairing is not non-crossing")
        return w

    def __str__(self):
        return self.word


class WebCombination:
    """A finitely supported ``Web -> LaurentPoly`` map with no zero entries."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Web, LaurentPoly] | Iterable[tuple[Web, LaurentPoly]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Web, LaurentPoly] = {}
        for w, c in items:
            if isinstance(c, int):
                c = LaurentPoly.const(c)
            c = acc.get(w, ZERO) + c
            if c:
                acc[w] = c
            else:
                acc.pop(w, None)
        shapes = {(w.n, w.r) for w in acc}
        if len(shapes) > 1:
            raise ValueError(f"mixed web shapes {sorted(shapes)}")
        self._terms = acc

    @classmethod
    def single(cls, w: Web, c: LaurentPoly = ONE) -> WebCombination:
        return cls({w: c})

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def coeff(self, w: Web) -> LaurentPoly:
        return self._terms.get(w, ZERO)

    def support(self) -> list[Web]:
        return [w for w, _ in self.items()]

    def __len__(self):
        return len(self._terms)

    def __iter__(self) -> Iterator[Web]:
        return iter(self.support())

    def __add__(self, other: WebCombination) -> WebCombination:
        return WebCombination(list(self._terms.items()) + list(other._terms.items()))

    def scale(self, c: LaurentPoly) -> WebCombination:
        if not c:
            return WebCombination()
        return WebCombination({w: c * v for w, v in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, WebCombination):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def to_json(self) -> list:
        return [[w.word, c.to_json()] for w, c in self.items()]

    def __repr__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"({c})*{w.word}" for w, c in self.items())


# -- enumeration -------------------------------------------------------------

@lru_cache(maxsize=None)
def _webs(n: int, r: int) -> tuple[Web, ...]:
    out: list[str] = []

    def grow(prefix: str, opens: int, depth: int, thru: int):
        if opens == n and depth == 0 and thru == r:
            out.append(prefix)
            return
        if opens < n:
            grow(prefix + "(", opens + 1, depth + 1, thru)
        if depth == 0 and thru < r:
            grow(prefix + "|", opens, depth, thru + 1)
        if depth > 0:
            grow(prefix + ")", opens, depth - 1, thru)

    grow("", 0, 0, 0)
    return tuple(sorted((Web(w) for w in out), key=Web.sort_key))


def enumerate_webs(n: int, r: int) -> list[Web]:
    if n < 0 or r < 0:
        raise ValueError("n and r must be nonnegative")
    return list(_webs(n, r))


def min_web(n: int, r: int) -> Web:
    return Web("()" * n + "|" * r)


def max_web(n: int, r: int) -> Web:
    return Web("|" * r + "(" * n + ")" * n)


# -- bijections with two-row tableaux ----------------------------------------

def phi(w: Web) -> StandardTableau:
    """First row: L-vertices (arc openers and through-strings); second row: arc closers."""
    left = [v for v, ch in enumerate(w.word, start=1) if ch in "(|"]
    right = [v for v, ch in enumerate(w.word, start=1) if ch == ")"]
    return StandardTableau((tuple(left), tuple(right)))


def psi(t: StandardTableau) -> Web:
    """Connect each second-row entry, left to right, to the nearest open first-row vertex to its left."""
    if len(t.rows) > 2 or not t.is_standard():
        raise ValueError(f"psi needs a standard tableau with at most two rows: {t}")
    first = set(t.rows[0])
    second = t.rows[1] if len(t.rows) > 1 else ()
    size = t.d
    partner: dict[int, int] = {}
    for b in second:
        candidates = [a for a in range(b - 1, 0, -1) if a in first and a not in partner]
        a = candidates[0]
        partner[a], partner[b] = b, a
    k = 0
    for v in range(1, size + 1):
        if v not in partner:
            k += 1
            partner[v] = -k
    return Web.from_pairing(size, partner)


# -- nesting numbers -----------------------------------------------------------

def nest_edge(w: Web, edge: tuple[int, int]) -> int:
    a, b = sorted(edge)
    if a <= 0 or w.pairing.get(a) != b:
        raise ValueError(f"{edge} is not an arc of {w}")
    containing = sum(1 for (x, y) in w.arcs() if x < a and b < y)
    left_thru = sum(1 for v in w.through_strings() if v < a)
    return containing + left_thru


def nest(w: Web) -> int:
    return sum(nest_edge(w, e) for e in w.arcs())


def nest_via_prime(w: Web) -> int:
    arcs = w.arcs()
    total = 0
    for a, b in arcs:
        total += sum(1 for (x, y) in arcs if a < x and y < b)
    for v in w.through_strings():
        total += sum(1 for (x, _) in arcs if v < x)
    return total


# -- the Hecke action ----------------------------------------------------------

def _check_index(w: Web, i: int):
    if not 1 <= i < w.size:
        raise IndexError(f"generator index {i} out of range for a web on {w.size} points")


def act_E(w: Web, i: int) -> WebCombination:
    """``w E_i = w T_i - q w`` via cap-cup surgery at positions i, i+1."""
    _check_index(w, i)
    pair = w.pairing
    p, pp = pair[i], pair[i + 1]
    if p == i + 1:
        return WebCombination.single(w, MINUS_TWO)
    if p < 0 and pp < 0:
        # would join two top vertices
        return WebCombination()
    new = dict(pair)
    new[i], new[i + 1] = i + 1, i
    new[p], new[pp] = pp, p
    return WebCombination.single(Web.from_pairing(w.size, new))


def _act_T_web(w: Web, i: int) -> WebCombination:
    return WebCombination.single(w, Q) + act_E(w, i)


def act_T(v: WebCombination | Web, i: int) -> WebCombination:
    if isinstance(v, Web):
        return _act_T_web(v, i)
    out = WebCombination()
    for w, c in v.items():
        out = out + _act_T_web(w, i).scale(c)
    return out


def act_word(v: WebCombination | Web, word: Iterable[int]) -> WebCombination:
    """Apply ``T_{i1} T_{i2} ...`` in order."""
    if isinstance(v, Web):
        v = WebCombination.single(v)
    for i in word:
        v = act_T(v, i)
    return v


def action_matrix(n: int, r: int, i: int, basis: list[Web] | None = None):
    """Matrix of ``T_i``: column j holds the image of basis web j."""
    basis = basis if basis is not None else enumerate_webs(n, r)
    index = {w: k for k, w in enumerate(basis)}
    m = [[ZERO] * len(basis) for _ in basis]
    for j, w in enumerate(basis):
        for u, c in _act_T_web(w, i).items():
            m[index[u]][j] = c
    return m


# -- the partial order ---------------------------------------------------------

def web_covers_up(w: Web) -> list[tuple[int, Web]]:
    """``(i, w E_i)`` for every i that is an R-vertex followed by an L-vertex."""
    out = []
    for i in range(1, w.size):
        if w.word[i - 1] == ")" and w.word[i] in "(|":
            (u, c), = act_E(w, i).items()
            assert c == ONE
            out.append((i, u))
    return out


@lru_cache(maxsize=None)
def hasse_edges(n: int, r: int) -> tuple[tuple[Web, int, Web], ...]:
    return tuple((w, i, u) for w in enumerate_webs(n, r) for i, u in web_covers_up(w))


@lru_cache(maxsize=None)
def _up_sets(n: int, r: int) -> dict[Web, frozenset[Web]]:
    succ: dict[Web, list[Web]] = {w: [] for w in enumerate_webs(n, r)}
    for w, _, u in hasse_edges(n, r):
        succ[w].append(u)
    reach: dict[Web, frozenset[Web]] = {}
    for w in succ:
        seen = {w}
        queue = deque([w])
        while queue:
            x = queue.popleft()
            for y in succ[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        reach[w] = frozenset(seen)
    return reach


def order_leq(w: Web, w2: Web) -> bool:
    if (w.n, w.r) != (w2.n, w2.r):
        raise ValueError("webs of different shapes are incomparable")
    return w2 in _up_sets(w.n, w.r)[w]


def shape_of(n: int, r: int) -> Partition:
    return Partition((n + r, n))
