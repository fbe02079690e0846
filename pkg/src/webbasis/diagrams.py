"""
Web diagrams with crossings and the two ways of resolving them.

A diagram is kept as a planar map. Every crossing is a vertex with four ports
in counter-clockwise order ``NE, NW, SW, SE``; bottom points, top points and
crossing ports are joined in pairs by strand segments (``link``). Crossings
keep the compass labels they were drawn with, so after any number of
resolutions the words north/south/east/west still mean what they meant in the
original layered picture.

Faces are found with the usual rotation-system walk, after closing the strip
with a frame through the boundary points. A face is bounded iff its walk
never uses a frame segment.

Crossing rule (over-strand NE-SW):   X = q * )( + 1 * ≍
Mirror crossing (over-strand NW-SE): X = q^-1 * )( + 1 * ≍
Closed loop: -[2]_q.   Two top points joined: zero.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .qlaurent import LaurentPoly, ONE, Q, ZERO
from .tableaux import StandardTableau, reduced_word_to
from .webs import MINUS_TWO, Web, WebCombination, min_web, psi
from .tableaux import transpose_tableau

__all__ = [
    "Crossing", "CrossedDiagram", "DiagramCombination", "Region",
    "POSITIVE", "NEGATIVE", "NE", "NW", "SW", "SE",
    "build_diagram", "resolve_crossing", "resolve_naive", "bounded_regions",
    "check_B_conditions", "reidemeister_II", "resolve_positive",
    "PositivityViolation", "NaiveTrace", "PositiveStats",
]

NE, NW, SW, SE = 0, 1, 2, 3
POSITIVE = "NEoverSW"
NEGATIVE = "NWoverSE"
_OPP = {NE: SW, NW: SE, SW: NE, SE: NW}
# region of a crossing lying clockwise-after the port through which a face walk enters
_REGION_OF_ENTRY = {NW: "N", SW: "W", SE: "S", NE: "E"}
_ENTRY_OF_REGION = {v: k for k, v in _REGION_OF_ENTRY.items()}
_Q_INV = LaurentPoly.q(-1)

Port = tuple


class PositivityViolation(AssertionError):
    """An invariant of the positivity-preserving rewriting failed."""


@dataclass(frozen=True)
class Crossing:
    layer: int
    position: int
    orientation: str = POSITIVE

    @property
    def positive(self) -> bool:
        return self.orientation == POSITIVE


class CrossedDiagram:
    """
    An (n+r, n)-web diagram with crossings and possibly closed loops.

    ``size`` bottom points ``('b', k)``, ``r`` top points ``('t', j)``, and
    crossing ports ``('x', id, direction)``. ``link`` is an involution on
    ports. ``loops`` counts closed components that meet no crossing.
    """

    __slots__ = ("size", "r", "link", "crossings", "loops", "top", "layers", "_key")

    def __init__(self, size: int, r: int, link: dict, crossings: dict[int, Crossing],
                 loops: int = 0, top: Web | None = None, layers: tuple | None = None):
        self.size = size
        self.r = r
        self.link = link
        self.crossings = crossings
        self.loops = loops
        self.top = top
        self.layers = layers
        self._key = None

    # -- construction ----------------------------------------------------------

    @classmethod
    def from_layers(cls, top: Web, layers: Iterable) -> CrossedDiagram:
        """
        Stack ``layers`` below ``top``. A layer is ``(i, orientation)`` for a
        crossing of columns i, i+1, or ``(i, "cupcap")`` for a cup joining
        columns i, i+1 above a new cap below them.
        """
        layers = tuple((int(i), str(kind)) for i, kind in layers)
        size = top.size
        link: dict = {}
        loops = 0
        placeholders: list[tuple[Port, Port]] = []
        hang: list[Port | None] = [None] * (size + 2)
        for a, b in top.arcs():
            cap = (("c", len(placeholders), 0), ("c", len(placeholders), 1))
            placeholders.append(cap)
            hang[a], hang[b] = cap
        for j, v in enumerate(top.through_strings(), start=1):
            hang[v] = ("t", j)
        crossings: dict[int, Crossing] = {}
        for layer, (i, kind) in enumerate(layers):
            if not 1 <= i < size:
                raise ValueError(f"layer position {i} out of range 1..{size - 1}")
            if kind in (POSITIVE, NEGATIVE):
                crossings[layer] = Crossing(layer, i, kind)
                for port, col in ((NW, i), (NE, i + 1)):
                    p = ("x", layer, port)
                    link[p], link[hang[col]] = hang[col], p
                hang[i], hang[i + 1] = ("x", layer, SW), ("x", layer, SE)
            elif kind == "cupcap":
                cup = (("c", len(placeholders), 0), ("c", len(placeholders), 1))
                placeholders.append(cup)
                link[cup[0]], link[hang[i]] = hang[i], cup[0]
                link[cup[1]], link[hang[i + 1]] = hang[i + 1], cup[1]
                cap = (("c", len(placeholders), 0), ("c", len(placeholders), 1))
                placeholders.append(cap)
                hang[i], hang[i + 1] = cap
            else:
                raise ValueError(f"unknown layer kind {kind!r}")
        for col in range(1, size + 1):
            p = ("b", col)
            link[p], link[hang[col]] = hang[col], p
        for x, y in placeholders:
            loops += _splice(link, x, y)
        return cls(size, top.r, link, crossings, loops, top, layers)

    def copy_with(self, link: dict, crossings: dict, loops: int) -> CrossedDiagram:
        return CrossedDiagram(self.size, self.r, link, crossings, loops)

    # -- basic queries ------------------------------------------------------------

    @property
    def n(self) -> int:
        return (self.size - self.r) // 2

    def crossing_count(self) -> int:
        return len(self.crossings)

    def key(self):
        if self._key is None:
            pairs = frozenset(frozenset(pq) for pq in self.link.items())
            self._key = (self.size, self.r, frozenset(self.crossings.items()), pairs, self.loops)
        return self._key

    def __eq__(self, other):
        return isinstance(other, CrossedDiagram) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def ordered_crossings(self) -> list[int]:
        return sorted(self.crossings, key=lambda c: (self.crossings[c].layer,
                                                     self.crossings[c].position))

    def vertex_types(self) -> str:
        """L/R type of every bottom point, following strands through crossings."""
        out = []
        for k in range(1, self.size + 1):
            end = self._trace(("b", k))
            if end[0] == "t":
                out.append("L")
            elif end[0] == "b":
                out.append("L" if end[1] > k else "R")
            else:
                out.append("?")
        return "".join(out)

    def _trace(self, start: Port) -> Port:
        """The boundary port at the other end of the strand leaving ``start``."""
        p = self.link[start]
        while p[0] == "x":
            p = self.link[("x", p[1], _OPP[p[2]])]
        return p

    def components_touch_boundary(self) -> bool:
        parent: dict = {}

        def find(x):
            while parent.setdefault(x, x) != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a, b):
            parent[find(a)] = find(b)

        for p, q in self.link.items():
            union(p, q)
        for c in self.crossings:
            for d in (NW, SW, SE):
                union(("x", c, NE), ("x", c, d))
        rooted = {find(p) for p in self.link if p[0] in "bt"}
        return all(find(p) in rooted for p in self.link)

    def to_web(self) -> tuple[Web | None, int]:
        """For a crossing-free diagram: the web (None if two top points meet) and the loop count."""
        if self.crossings:
            raise ValueError("diagram still has crossings")
        partner = {}
        for k in range(1, self.size + 1):
            p = self.link[("b", k)]
            partner[k] = p[1] if p[0] == "b" else -p[1]
        if any(p[0] == "t" and self.link[p][0] == "t" for p in self.link):
            return None, self.loops
        return Web.from_pairing(self.size, partner), self.loops

    def to_json(self) -> dict:
        if self.layers is None:
            raise ValueError("only layered diagrams have a JSON encoding")
        return {"top": self.top.to_json(), "layers": [[i, k] for i, k in self.layers]}

    @classmethod
    def from_json(cls, data) -> CrossedDiagram:
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_layers(Web.from_json(data["top"]), data.get("layers", []))

    def ascii_art(self) -> str:
        """Rough strand picture of a layered diagram; one text row per layer."""
        if self.layers is None:
            return f"<diagram: {len(self.crossings)} crossings, {self.loops} loops>"
        rows = [" ".join(self.top.word)]
        for i, kind in self.layers:
            cells = ["|"] * self.size
            mark = {"NEoverSW": "/", "NWoverSE": "\\", "cupcap": "U"}[kind]
            cells[i - 1] = mark
            cells[i] = mark if kind == "cupcap" else "X"
            rows.append(" ".join(cells))
        rows.append(" ".join(str(k % 10) for k in range(1, self.size + 1)))
        return "\n".join(rows)

    def __repr__(self):
        return f"CrossedDiagram(size={self.size}, r={self.r}, crossings={sorted(self.crossings)}, loops={self.loops})"


def _splice(link: dict, x: Port, y: Port) -> int:
    """Delete ports x, y and join their mates. Returns 1 if this closed a loop."""
    a = link.pop(x)
    b = link.pop(y)
    if a == y:
        return 1
    link[a], link[b] = b, a
    return 0


def _remove_crossing(d: CrossedDiagram, c: int, pairs) -> CrossedDiagram:
    link = dict(d.link)
    loops = d.loops
    for u, v in pairs:
        loops += _splice(link, ("x", c, u), ("x", c, v))
    crossings = {k: v for k, v in d.crossings.items() if k != c}
    return d.copy_with(link, crossings, loops)


class DiagramCombination:
    """Finitely supported ``CrossedDiagram -> LaurentPoly``; equal diagrams merge."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[tuple[CrossedDiagram, LaurentPoly]] = ()):
        self._terms: dict = {}
        for d, c in terms:
            self.add(d, c)

    def add(self, d: CrossedDiagram, c: LaurentPoly):
        k = d.key()
        if k in self._terms:
            old_d, old_c = self._terms[k]
            c = old_c + c
            if c:
                self._terms[k] = (old_d, c)
            else:
                del self._terms[k]
        elif c:
            self._terms[k] = (d, c)

    def items(self) -> list[tuple[CrossedDiagram, LaurentPoly]]:
        return list(self._terms.values())

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, DiagramCombination):
            return NotImplemented
        return ({k: c for k, (_, c) in self._terms.items()}
                == {k: c for k, (_, c) in other._terms.items()})


# -- building the diagram of a standard basis vector ------------------------------

def build_diagram(t: StandardTableau) -> CrossedDiagram:
    """``w0 beta_{i1} ... beta_{im}`` for the cover chain from the superstandard tableau to ``t``."""
    if len(t.columns()) > 2:
        raise ValueError("build_diagram needs a tableau with at most two columns")
    shape = t.shape.transpose()
    a, b = (tuple(shape.parts) + (0, 0))[:2]
    n, r = b, a - b
    top = min_web(n, r)
    types = ["L" if ch in "(|" else "R" for ch in top.word]
    layers = []
    for i in reduced_word_to(t):
        assert types[i - 1] == "R" and types[i] == "L", \
            f"step {i} does not cross an R-vertex under an L-vertex"
        types[i - 1], types[i] = types[i], types[i - 1]
        layers.append((i, POSITIVE))
    return CrossedDiagram.from_layers(top, layers)


# -- naive resolution ----------------------------------------------------------------

def resolve_crossing(d: CrossedDiagram, site: int) -> DiagramCombination:
    """Expand crossing ``site``: straight-through smoothing and cap-cup smoothing."""
    if site not in d.crossings:
        raise KeyError(f"no crossing {site}")
    cr = d.crossings[site]
    vertical = _remove_crossing(d, site, ((NW, SW), (NE, SE)))
    horizontal = _remove_crossing(d, site, ((NW, NE), (SW, SE)))
    return DiagramCombination([(vertical, Q if cr.positive else _Q_INV), (horizontal, ONE)])


@dataclass
class NaiveTrace:
    """Per-state contributions: ``web -> [(coefficient before loop removal, loops)]``."""
    contributions: dict = field(default_factory=dict)
    loop_removals: int = 0


def _lowest(d: CrossedDiagram) -> int:
    return max(d.crossings, key=lambda c: (d.crossings[c].layer, d.crossings[c].position))


def resolve_naive(d: CrossedDiagram, trace: NaiveTrace | None = None) -> WebCombination:
    """
    Resolve the bottom-most crossing until none remain, then delete loops with
    factor ``-[2]_q``. With ``trace`` the individual states are recorded and
    equal intermediate diagrams are not merged.
    """
    current = [(d, ONE)]
    finished: list[tuple[CrossedDiagram, LaurentPoly]] = []
    while current:
        nxt = DiagramCombination() if trace is None else None
        nxt_list = []
        for diag, c in current:
            if not diag.crossings:
                finished.append((diag, c))
                continue
            for e, k in resolve_crossing(diag, _lowest(diag)).items():
                if nxt is not None:
                    nxt.add(e, c * k)
                else:
                    nxt_list.append((e, c * k))
        current = nxt.items() if nxt is not None else nxt_list
    out = []
    for diag, c in finished:
        web, loops = diag.to_web()
        if trace is not None:
            trace.loop_removals += loops
        if web is None:
            continue
        if trace is not None:
            trace.contributions.setdefault(web, []).append((c, loops))
        out.append((web, c * MINUS_TWO ** loops))
    return WebCombination(out)


# -- faces -------------------------------------------------------------------------

def _frame(size: int, r: int):
    """Ports of the frame vertices, each vertex's ports in counter-clockwise order, and frame mates."""
    rot: list[list[Port]] = []
    mate: dict = {}
    rot.append([("BL", "R"), ("BL", "U")])
    rot.append([("BR", "U"), ("BR", "L")])
    rot.append([("TR", "L"), ("TR", "D")])
    rot.append([("TL", "R"), ("TL", "D")])
    for k in range(1, size + 1):
        rot.append([("bR", k), ("b", k), ("bL", k)])
    for j in range(1, r + 1):
        rot.append([("tR", j), ("tL", j), ("t", j)])

    def join(p, q):
        mate[p], mate[q] = q, p

    join(("BL", "R"), ("bL", 1))
    for k in range(1, size):
        join(("bR", k), ("bL", k + 1))
    join(("bR", size), ("BR", "L"))
    join(("BR", "U"), ("TR", "D"))
    if r:
        join(("TR", "L"), ("tR", r))
        for j in range(r, 1, -1):
            join(("tL", j), ("tR", j - 1))
        join(("tL", 1), ("TL", "R"))
    else:
        join(("TR", "L"), ("TL", "R"))
    join(("TL", "D"), ("BL", "U"))
    return rot, mate


@dataclass
class Region:
    """A face of the diagram."""
    index: int
    darts: list
    corners: list  # (crossing id, region letter) in counter-clockwise order
    bounded: bool
    kind: str = "unbounded"  # bigon / triangle / square / other
    corner_map: dict = field(default_factory=dict)  # template role -> crossing id
    neighbors: dict = field(default_factory=dict)  # "N"/"S"/"E"/"W" -> list of face indices

    def sort_key(self, d: CrossedDiagram):
        cs = [d.crossings[c] for c, _ in self.corners] or [Crossing(10 ** 9, 10 ** 9)]
        return (min(x.position for x in cs), min(x.layer for x in cs), self.index)


class _Faces:
    def __init__(self, d: CrossedDiagram):
        self.d = d
        rot, mate = _frame(d.size, d.r)
        for c in d.crossings:
            rot.append([("x", c, NE), ("x", c, NW), ("x", c, SW), ("x", c, SE)])
        mate.update(d.link)
        self.mate = mate
        self.cw_next: dict = {}
        for ports in rot:
            m = len(ports)
            for k, p in enumerate(ports):
                self.cw_next[p] = ports[k - 1] if m > 1 else p
        self.face_of: dict = {}
        self.regions: list[Region] = []
        for start in sorted(mate, key=repr):
            if start in self.face_of:
                continue
            darts, p = [], start
            while p not in self.face_of:
                self.face_of[p] = len(self.regions)
                darts.append(p)
                p = self.cw_next[mate[p]]
            bounded = all(x[0] in ("b", "t", "x") for x in darts)
            corners = []
            for x in darts:
                head = mate[x]
                if head[0] == "x":
                    corners.append((head[1], _REGION_OF_ENTRY[head[2]]))
            self.regions.append(Region(len(self.regions), darts, corners, bounded))
        self.loop_regions = d.loops
        for reg in self.regions:
            if reg.bounded:
                self._classify(reg)

    # face lying in compass region ``letter`` of crossing ``c``
    def around(self, c: int, letter: str) -> int:
        entry = ("x", c, _ENTRY_OF_REGION[letter])
        return self.face_of[self.mate[entry]]

    # face across the side that leaves crossing ``c`` through port ``p``
    def across(self, c: int, p: int) -> int:
        return self.face_of[self.mate[("x", c, p)]]

    def _side(self, c1: int, p1: int, c2: int, p2: int) -> bool:
        return self.mate.get(("x", c1, p1)) == ("x", c2, p2)

    def _classify(self, reg: Region):
        corners = reg.corners
        k = len(corners)
        letters = [l for _, l in corners]
        by_letter = {l: c for c, l in corners}
        if len(by_letter) != k or len({c for c, _ in corners}) != k:
            reg.kind = "other"
            return
        d = self.d
        all_positive = all(d.crossings[c].positive for c, _ in corners)
        if k == 2 and all_positive and set(letters) == {"W", "N"}:
            x, y = by_letter["W"], by_letter["N"]
            if self._side(x, NW, y, NW) and self._side(y, NE, x, SW):
                reg.kind = "bigon"
                reg.corner_map = {"upper": x, "lower": y, "mirror": False}
                reg.neighbors = {"N": [self.across(x, NW)], "S": [self.across(y, NE)],
                                 "E": [self.around(x, "E")], "W": [self.around(y, "S")]}
                return
        if k == 2 and all_positive and set(letters) == {"E", "N"}:
            x, y = by_letter["E"], by_letter["N"]
            if self._side(x, SE, y, NW) and self._side(y, NE, x, NE):
                reg.kind = "bigon"
                reg.corner_map = {"upper": x, "lower": y, "mirror": True}
                reg.neighbors = {"N": [self.across(y, NE)], "S": [self.across(x, SE)],
                                 "W": [self.around(x, "W")], "E": [self.around(y, "S")]}
                return
        if k == 3 and all_positive and set(letters) == {"E", "N", "W"}:
            a, b, c = by_letter["E"], by_letter["N"], by_letter["W"]
            if (self._side(a, SE, b, NW) and self._side(b, NE, c, SW)
                    and self._side(c, NW, a, NE)):
                reg.kind = "triangle"
                reg.corner_map = {"west": a, "south": b, "east": c}
                reg.neighbors = {"N": [self.across(c, NW)], "W": [self.around(a, "W")],
                                 "E": [self.around(c, "E")],
                                 "S": [self.around(b, "S"), self.across(a, SE),
                                       self.across(b, NE)]}
                return
        if k == 4 and all_positive and set(letters) == {"S", "E", "N", "W"}:
            top, left, bot, right = (by_letter[x] for x in "SENW")
            if (self._side(top, SW, left, NE) and self._side(left, SE, bot, NW)
                    and self._side(bot, NE, right, SW) and self._side(right, NW, top, SE)):
                reg.kind = "square"
                reg.corner_map = {"north": top, "west": left, "south": bot, "east": right}
                reg.neighbors = {"N": [self.around(top, "N"), self.across(top, SW),
                                       self.across(right, NW)],
                                 "W": [self.around(left, "W")],
                                 "E": [self.around(right, "E")],
                                 "S": [self.around(bot, "S"), self.across(left, SE),
                                       self.across(bot, NE)]}
                return
        reg.kind = "other"


def bounded_regions(d: CrossedDiagram) -> list[Region]:
    """
    Bounded faces, leftmost-topmost first, each classified as bigon, triangle,
    square or other. The interior of a closed loop counts as an ``other`` region.
    """
    faces = _Faces(d)
    regs = [r for r in faces.regions if r.bounded]
    regs.sort(key=lambda r: r.sort_key(d))
    for _ in range(d.loops):
        regs.append(Region(-1, [], [], True, "other"))
    return regs


def _b_report(d: CrossedDiagram) -> tuple[bool, str]:
    if d.loops or not d.components_touch_boundary():
        return False, "B1: isolated component"
    faces = _Faces(d)
    bounded = {r.index for r in faces.regions if r.bounded}
    for reg in faces.regions:
        if reg.bounded and reg.kind == "other":
            return False, f"B2: bounded region with corners {reg.corners}"
    for reg in faces.regions:
        if not reg.bounded:
            continue
        for s in reg.neighbors.get("S", []):
            if s in bounded and faces.regions[s].kind != "square":
                return False, f"B3: {faces.regions[s].kind} south of a {reg.kind}"
    return True, "ok"


def check_B_conditions(d: CrossedDiagram) -> bool:
    return _b_report(d)[0]


def reidemeister_II(d: CrossedDiagram, region: Region) -> tuple[LaurentPoly, CrossedDiagram]:
    """Pull the cap of a bigon back through the strand it crosses twice."""
    if region.kind != "bigon":
        raise ValueError(f"region is a {region.kind}, not a bigon")
    x, y = region.corner_map["upper"], region.corner_map["lower"]
    link = dict(d.link)
    loops = d.loops
    for c in (x, y):
        loops += _splice(link, ("x", c, NE), ("x", c, SW))
        loops += _splice(link, ("x", c, NW), ("x", c, SE))
    crossings = {k: v for k, v in d.crossings.items() if k not in (x, y)}
    return Q, d.copy_with(link, crossings, loops)


# -- positivity-preserving resolution ---------------------------------------------

@dataclass
class PositiveStats:
    steps: int = 0
    case1: int = 0
    case2a: int = 0
    case2b: int = 0
    case2c: int = 0
    fallback: int = 0
    b_violations: int = 0
    loop_removals: int = 0
    diagrams_checked: int = 0


def _nonnegative_poly(c: LaurentPoly) -> bool:
    return all(e >= 0 and k > 0 for e, k in c.items())


def _region_move(d: CrossedDiagram, reg: Region):
    if reg.kind == "bigon":
        c, e = reidemeister_II(d, reg)
        return "case2a", [(e, c)]
    if reg.kind == "triangle":
        return "case2b", resolve_crossing(d, reg.corner_map["west"]).items()
    if reg.kind == "square":
        return "case2c", resolve_crossing(d, reg.corner_map["north"]).items()
    raise PositivityViolation(f"cannot rewrite a region of kind {reg.kind}")


def _candidate_moves(d: CrossedDiagram) -> Iterator[tuple[str, list]]:
    """
    Rewrites of ``d`` in preference order: the region with unbounded N and W
    neighbours first (leftmost-topmost), then the other region moves, then
    single crossings, then any Reidemeister II.
    """
    faces = _Faces(d)
    regs = sorted((r for r in faces.regions if r.bounded), key=lambda r: r.sort_key(d))
    if not regs:
        yield "case1", resolve_crossing(d, d.ordered_crossings()[0]).items()
        return

    def free(reg, letters):
        return all(not faces.regions[f].bounded
                   for x in letters for f in reg.neighbors.get(x, []))

    movable = [r for r in regs if r.kind != "other"]
    order = ([r for r in movable if free(r, "NW")]
             + [r for r in movable if free(r, "N") and not free(r, "NW")]
             + [r for r in movable if not free(r, "N")])
    for reg in order:
        yield _region_move(d, reg)
    for site in d.ordered_crossings():
        yield "case1", resolve_crossing(d, site).items()


class _Planner:
    """
    Finds a rewriting tree whose every diagram passes ``accept``. Most
    diagrams take the first candidate; the search only matters where the
    preferred region leads to a dead end.
    """

    def __init__(self, accept):
        self.accept = accept
        self.memo: dict = {}

    def plan(self, d: CrossedDiagram):
        k = d.key()
        if k in self.memo:
            return self.memo[k]
        if not d.crossings:
            self.memo[k] = ("done", [])
            return self.memo[k]
        self.memo[k] = None
        for first, (case, outputs) in enumerate(_candidate_moves(d)):
            outputs = list(outputs)
            if all(not e.loops and self.accept(e) for e, _ in outputs) \
                    and all(self.plan(e) is not None for e, _ in outputs):
                self.memo[k] = (case if first == 0 else case + "*", outputs)
                return self.memo[k]
        return None


def resolve_positive(d: CrossedDiagram, stats: PositiveStats | None = None,
                     strict: bool = True) -> WebCombination:
    """
    Rewrite a diagram satisfying (B1)-(B3) into non-crossing webs using only
    the crossing rule and Reidemeister II, guided by bounded regions.

    Every intermediate diagram is checked against (B1)-(B3); every
    coefficient must stay in Z>=0[q]; closed loops must never appear.

    The preferred region (unbounded N and W neighbours) is always tried
    first, but it need not exist and taking it can lead to a diagram with no
    admissible rewrite, so the rewrite tree is searched. If no tree keeps
    (B1)-(B3) everywhere, ``strict`` raises ``PositivityViolation``;
    otherwise a tree keeping only (B1) is used and the offending diagrams
    are counted in ``stats.b_violations``.
    """
    stats = stats if stats is not None else PositiveStats()
    planner = _Planner(check_B_conditions)
    if planner.plan(d) is None:
        if strict:
            raise PositivityViolation("no rewriting keeps conditions (B1)-(B3)")
        planner = _Planner(lambda e: e.components_touch_boundary())
        if planner.plan(d) is None:
            raise PositivityViolation("no rewriting avoids closed loops")
    current = DiagramCombination([(d, ONE)])
    done: list[tuple[CrossedDiagram, LaurentPoly]] = []
    while len(current):
        nxt = DiagramCombination()
        for diag, c in current.items():
            ok, why = _b_report(diag)
            stats.diagrams_checked += 1
            if not ok:
                if strict or why.startswith("B1"):
                    raise PositivityViolation(why)
                stats.b_violations += 1
            if not _nonnegative_poly(c):
                raise PositivityViolation(f"coefficient {c} left Z>=0[q]")
            if not diag.crossings:
                done.append((diag, c))
                continue
            case, outputs = planner.plan(diag)
            stats.steps += 1
            if case.endswith("*"):
                stats.fallback += 1
                case = case[:-1]
            setattr(stats, case, getattr(stats, case) + 1)
            before = diag.crossing_count()
            for e, k in outputs:
                if e.loops:
                    raise PositivityViolation("a closed loop appeared")
                if e.crossing_count() >= before:
                    raise PositivityViolation("rewrite did not reduce crossings")
                nxt.add(e, c * k)
        current = nxt
    out = []
    for diag, c in done:
        web, loops = diag.to_web()
        stats.loop_removals += loops
        if web is not None:
            out.append((web, c))
    return WebCombination(out)


def _diagram_for(t: StandardTableau) -> CrossedDiagram:
    return build_diagram(t)


def web_of(t: StandardTableau) -> Web:
    """The leading web ``psi(t^T)``."""
    return psi(transpose_tableau(t))
