"""Symmetric-subgroup orbit graphs on the flag variety.

A graph stores, per node, a twisted involution of the Weyl group and, per
(simple root, node), a label drawn from the seven classical cases together
with the cross action and (partial) Cayley transform maps.  Graphs for
genuine symmetric pairs are data, validated against the structural axioms;
generated graphs exist for the diagonal case and for a synthetic harness on
twisted involutions.

Monoid words act first letter first, matching upward sequences of moves.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import (
    AxiomViolation,
    Mismatch,
    NoOpenNode,
    NotNoncompact,
    NotReal,
    ParseError,
    Unreachable,
)
from .orbit_poset import NodeId, OrbitGraph, node_sort_key
from .root_datum import (
    RootDatum,
    format_root_datum,
    is_m_alpha_trivial,
    parse_root_datum_lines,
    simple_root,
    _significant_lines,
)
from .weyl import (
    WeylElt,
    apply_twist,
    enumerate_elements,
    format_word,
    from_word,
    identity,
    inv,
    length as weyl_length,
    mul,
    parse_word,
    reduced_word,
    simple_reflection,
)


class RootType(enum.Enum):
    """Label of a simple root relative to a node."""

    COMPLEX_ASCENT = "C+"
    COMPLEX_DESCENT = "C-"
    COMPACT_IMAGINARY = "ci"
    NONCOMPACT_I = "nci1"
    NONCOMPACT_II = "nci2"
    REAL_I = "r1"
    REAL_II = "r2"


_ASCENT_TYPES = frozenset(
    {RootType.COMPLEX_ASCENT, RootType.NONCOMPACT_I, RootType.NONCOMPACT_II}
)
_IMAGINARY_TYPES = frozenset(
    {RootType.COMPACT_IMAGINARY, RootType.NONCOMPACT_I, RootType.NONCOMPACT_II}
)
_REAL_TYPES = frozenset({RootType.REAL_I, RootType.REAL_II})


@dataclass
class KgbGraph:
    datum: RootDatum
    nodes: tuple[NodeId, ...]
    tw: dict[NodeId, WeylElt]
    length: dict[NodeId, int]
    label: dict[tuple[int, NodeId], RootType]
    cross: dict[tuple[int, NodeId], NodeId]
    cayley: dict[tuple[int, NodeId], NodeId]
    origin: str = "data"

    def __post_init__(self):
        self.nodes = tuple(sorted(self.nodes, key=node_sort_key))

    def __eq__(self, other):
        if not isinstance(other, KgbGraph):
            return NotImplemented
        return (
            self.datum == other.datum
            and self.nodes == other.nodes
            and self.tw == other.tw
            and self.length == other.length
            and self.label == other.label
            and self.cross == other.cross
            and self.cayley == other.cayley
        )

    def _require(self, v: NodeId) -> None:
        if v not in self.length:
            raise Mismatch(f"unknown node {v!r}")

    def _require_alpha(self, alpha: int) -> None:
        if not 1 <= alpha <= self.datum.rank:
            raise Mismatch(f"simple index {alpha} out of range 1..{self.datum.rank}")


# --- twisted involutions -----------------------------------------------------


def twist_elt(datum: RootDatum, w: WeylElt) -> WeylElt:
    return apply_twist(w)


def is_twisted_involution(w: WeylElt) -> bool:
    return apply_twist(w) == inv(w)


def twisted_involutions(datum: RootDatum) -> tuple[WeylElt, ...]:
    """All w with theta(w) equal to the inverse, by brute force."""
    return tuple(w for w in enumerate_elements(datum) if is_twisted_involution(w))


def _theta_root(datum: RootDatum, alpha: int):
    return simple_root(datum, datum.twist[alpha - 1])


# --- elementary queries ------------------------------------------------------


def root_type(g: KgbGraph, alpha: int, v: NodeId) -> RootType:
    g._require(v)
    g._require_alpha(alpha)
    return g.label[(alpha, v)]


def cross_action(g: KgbGraph, alpha: int, v: NodeId) -> NodeId:
    g._require(v)
    g._require_alpha(alpha)
    return g.cross[(alpha, v)]


def cayley(g: KgbGraph, alpha: int, v: NodeId) -> NodeId:
    g._require(v)
    g._require_alpha(alpha)
    if g.label[(alpha, v)] not in (RootType.NONCOMPACT_I, RootType.NONCOMPACT_II):
        raise NotNoncompact(f"root {alpha} is not noncompact imaginary at node {v}")
    return g.cayley[(alpha, v)]


def inverse_cayley(g: KgbGraph, alpha: int, v: NodeId) -> tuple[NodeId, ...]:
    g._require(v)
    g._require_alpha(alpha)
    if g.label[(alpha, v)] not in _REAL_TYPES:
        raise NotReal(f"root {alpha} is not real at node {v}")
    pre = [x for x in g.nodes if g.cayley.get((alpha, x)) == v]
    return tuple(sorted(pre, key=node_sort_key))


def monoid(g: KgbGraph, alpha: int, v: NodeId) -> NodeId:
    """Move to the dense node of the fiber; fixes v unless alpha is an ascent."""
    g._require(v)
    g._require_alpha(alpha)
    lab = g.label[(alpha, v)]
    if lab is RootType.COMPLEX_ASCENT:
        return g.cross[(alpha, v)]
    if lab in (RootType.NONCOMPACT_I, RootType.NONCOMPACT_II):
        return g.cayley[(alpha, v)]
    return v


def monoid_word(g: KgbGraph, word, v: NodeId) -> NodeId:
    """Apply a sequence of simple monoid moves, first letter first."""
    node = v
    for i in word:
        node = monoid(g, i, node)
    return node


def monoid_elt(g: KgbGraph, w: WeylElt, v: NodeId) -> NodeId:
    """Monoid element of w evaluated through its canonical reduced word; the
    result is word-independent once the braid checks pass."""
    if w.datum != g.datum:
        raise Mismatch("element belongs to a different root datum")
    return monoid_word(g, reduced_word(w), v)


# --- validation ----------------------------------------------------------------


def _braid_order(datum: RootDatum, a: int, b: int) -> int:
    prod = datum.cartan[a - 1][b - 1] * datum.cartan[b - 1][a - 1]
    return {0: 2, 1: 3, 2: 4, 3: 6}[prod]


def validate_kgb(g: KgbGraph) -> list[str]:
    """Check the structural axioms; returns sorted human-readable violations.
    The ascent criterion is deliberately not examined here, see
    ascent_consistency_check."""
    datum = g.datum
    out: list[str] = []

    for v in g.nodes:
        if not isinstance(g.length[v], int) or g.length[v] < 0:
            out.append(f"BadLength: node={v}")
        if apply_twist(g.tw[v]) != inv(g.tw[v]):
            out.append(f"TwNotTwisted: node={v}")

    for alpha in range(1, datum.rank + 1):
        theta_alpha = _theta_root(datum, alpha)
        alpha_root = simple_root(datum, alpha)
        s = simple_reflection(datum, alpha)
        s_theta = simple_reflection(datum, datum.twist[alpha - 1])
        trivial = is_m_alpha_trivial(datum, alpha)
        for v in g.nodes:
            key = (alpha, v)
            tag = f"alpha={alpha} node={v}"
            if key not in g.label or key not in g.cross:
                out.append(f"MissingLabel: {tag}")
                continue
            lab = g.label[key]
            cr = g.cross[key]
            if cr not in g.length:
                out.append(f"UnknownNode: {tag} cross={cr}")
                continue
            if g.cross.get((alpha, cr)) != v:
                out.append(f"CrossNotInvolution: {tag}")
            # class of the label against the twisted involution
            from .weyl import _apply

            img = _apply(g.tw[v], theta_alpha)
            if lab in _REAL_TYPES:
                wanted = tuple(-c for c in alpha_root)
                if img != wanted:
                    out.append(f"LabelClass: {tag} label={lab.value} not real")
            elif lab in _IMAGINARY_TYPES:
                if img != alpha_root:
                    out.append(f"LabelClass: {tag} label={lab.value} not imaginary")
            else:
                if img == alpha_root or img == tuple(-c for c in alpha_root):
                    out.append(f"LabelClass: {tag} label={lab.value} not complex")
            # twisted involution transforms uniformly under the cross action
            if mul(mul(s, g.tw[v]), s_theta) != g.tw[cr]:
                out.append(f"CrossTwist: {tag}")
            # per-label local pattern
            has_cayley = key in g.cayley
            if lab in (RootType.NONCOMPACT_I, RootType.NONCOMPACT_II):
                if not has_cayley:
                    out.append(f"MissingCayley: {tag}")
            elif has_cayley:
                out.append(f"SpuriousCayley: {tag}")
            if trivial and lab in (RootType.NONCOMPACT_I, RootType.REAL_I):
                out.append(f"TypeIForbidden: {tag} (m_alpha trivial)")
            if lab is RootType.COMPLEX_ASCENT:
                if cr == v or g.length[cr] != g.length[v] + 1:
                    out.append(f"AscentPattern: {tag}")
                elif g.label[(alpha, cr)] is not RootType.COMPLEX_DESCENT:
                    out.append(f"PartnerLabel: {tag}")
            elif lab is RootType.COMPLEX_DESCENT:
                if cr == v or g.length[cr] != g.length[v] - 1:
                    out.append(f"DescentPattern: {tag}")
                elif g.label[(alpha, cr)] is not RootType.COMPLEX_ASCENT:
                    out.append(f"PartnerLabel: {tag}")
            elif lab is RootType.COMPACT_IMAGINARY:
                if cr != v:
                    out.append(f"CompactMoved: {tag}")
            elif lab is RootType.NONCOMPACT_I:
                if cr == v or g.length[cr] != g.length[v]:
                    out.append(f"TypeIPattern: {tag}")
                elif g.label[(alpha, cr)] is not RootType.NONCOMPACT_I:
                    out.append(f"PartnerLabel: {tag}")
                if has_cayley:
                    t = g.cayley[key]
                    if t not in g.length:
                        out.append(f"UnknownNode: {tag} cayley={t}")
                    else:
                        if g.length[t] != g.length[v] + 1:
                            out.append(f"CayleyLength: {tag}")
                        if g.label.get((alpha, t)) is not RootType.REAL_I:
                            out.append(f"CayleyTarget: {tag} expected r1")
                        if mul(s, g.tw[v]) != g.tw[t]:
                            out.append(f"CayleyTwist: {tag}")
                        if cr in g.length and g.cayley.get((alpha, cr)) != t:
                            out.append(f"SharedCayley: {tag}")
            elif lab is RootType.NONCOMPACT_II:
                if cr != v:
                    out.append(f"TypeIIPattern: {tag}")
                if has_cayley:
                    t = g.cayley[key]
                    if t not in g.length:
                        out.append(f"UnknownNode: {tag} cayley={t}")
                    else:
                        if g.length[t] != g.length[v] + 1:
                            out.append(f"CayleyLength: {tag}")
                        if g.label.get((alpha, t)) is not RootType.REAL_II:
                            out.append(f"CayleyTarget: {tag} expected r2")
                        if mul(s, g.tw[v]) != g.tw[t]:
                            out.append(f"CayleyTwist: {tag}")
            elif lab in _REAL_TYPES:
                if cr != v:
                    out.append(f"RealMoved: {tag}")
                pre = [x for x in g.nodes if g.cayley.get((alpha, x)) == v]
                want = 2 if lab is RootType.REAL_I else 1
                if len(pre) != want:
                    out.append(f"InverseCayleyCount: {tag} got={len(pre)} want={want}")

    # cross actions must satisfy the braid relations pairwise
    for a in range(1, datum.rank + 1):
        for b in range(a + 1, datum.rank + 1):
            order = _braid_order(datum, a, b)
            for v in g.nodes:
                x = y = v
                for step in range(order):
                    x = g.cross[(a if step % 2 == 0 else b, x)]
                    y = g.cross[(b if step % 2 == 0 else a, y)]
                if x != y:
                    out.append(f"CrossBraid: alpha={a} beta={b} node={v}")

    return sorted(out)


def ascent_consistency_check(g: KgbGraph) -> list[str]:
    """The direction criterion: a label is an ascent exactly when the twisted
    involution sends the twisted simple root to a positive root and the label
    is not compact imaginary."""
    from .weyl import _apply

    out = []
    for alpha in range(1, g.datum.rank + 1):
        theta_alpha = _theta_root(g.datum, alpha)
        for v in g.nodes:
            lab = g.label[(alpha, v)]
            img = _apply(g.tw[v], theta_alpha)
            predicted = all(c >= 0 for c in img) and lab is not RootType.COMPACT_IMAGINARY
            if (lab in _ASCENT_TYPES) != predicted:
                out.append(f"AscentCriterion: alpha={alpha} node={v} label={lab.value}")
    return sorted(out)


def minimal_w_uniqueness_check(g: KgbGraph) -> list[str]:
    """For each start node and reachable target, the minimal-length group
    elements whose monoid action sends start to target must be unique."""
    elements = enumerate_elements(g.datum)
    out = []
    for u in g.nodes:
        reach: dict[WeylElt, NodeId] = {identity(g.datum): u}
        for w in elements:
            if w in reach:
                continue
            word = reduced_word(w)
            shorter = from_word(g.datum, word[:-1])
            reach[w] = monoid(g, word[-1], reach[shorter])
        best: dict[NodeId, tuple[int, list[WeylElt]]] = {}
        for w in elements:
            t = reach[w]
            lw = weyl_length(w)
            if t not in best or lw < best[t][0]:
                best[t] = (lw, [w])
            elif lw == best[t][0]:
                best[t][1].append(w)
        for t, (lw, ws) in best.items():
            if len(ws) > 1:
                words = ";".join(format_word(reduced_word(w)) for w in ws)
                out.append(f"MinimalWNotUnique: start={u} target={t} words={words}")
    return sorted(out)


# --- export -------------------------------------------------------------------


def to_orbit_poset(g: KgbGraph) -> OrbitGraph:
    fibers = []
    for (alpha, v), lab in g.label.items():
        if lab is RootType.COMPLEX_ASCENT:
            t = g.cross[(alpha, v)]
            fibers.append((alpha, t, (v, t)))
        elif lab is RootType.NONCOMPACT_I:
            t = g.cayley[(alpha, v)]
            fibers.append((alpha, t, (v, g.cross[(alpha, v)], t)))
        elif lab is RootType.NONCOMPACT_II:
            t = g.cayley[(alpha, v)]
            fibers.append((alpha, t, (v, t)))
    return OrbitGraph(g.datum.name or "custom", g.datum.rank, g.length, fibers)


# --- generated graphs -----------------------------------------------------------


def doubled_datum(datum: RootDatum) -> RootDatum:
    """Two commuting copies of the datum with the swap twist."""
    from .root_datum import CartanSpec, build_root_datum

    r = datum.rank
    zero = [0] * r

    def block(mat):
        top = [list(row) + zero for row in mat]
        bottom = [zero + list(row) for row in mat]
        return tuple(tuple(row) for row in top + bottom)

    if datum.name:
        spec = f"{datum.name}x{datum.name}"
    else:
        labels = tuple(str(i + 1) for i in range(2 * r))
        spec = CartanSpec(block(datum.cartan), labels)
    twist = tuple(range(r + 1, 2 * r + 1)) + tuple(range(1, r + 1))
    rows = block(datum.coroot_images) if datum.isogeny == "lattice" else None
    return build_root_datum(spec, isogeny=datum.isogeny, twist=twist, coroot_rows=rows)


def embed_pair(doubled: RootDatum, u: WeylElt, v: WeylElt) -> WeylElt:
    """The element acting as u on the first copy and v on the second."""
    r = doubled.rank // 2
    images = []
    for i in range(r):
        images.append(tuple(u.images[i]) + (0,) * r)
    for i in range(r):
        images.append((0,) * r + tuple(v.images[i]))
    return WeylElt(doubled, tuple(images))


def group_case(datum: RootDatum) -> KgbGraph:
    """The diagonal symmetric pair: nodes are group elements, every label is
    complex, and the two copies of each simple root act by the two sides."""
    dd = doubled_datum(datum)
    elements = enumerate_elements(datum)
    ids = {w: str(i) for i, w in enumerate(elements)}
    r = datum.rank
    tw = {}
    length = {}
    label = {}
    cross = {}
    for w in elements:
        v = ids[w]
        tw[v] = embed_pair(dd, w, inv(w))
        length[v] = weyl_length(w)
        for i in range(1, r + 1):
            s = simple_reflection(datum, i)
            left = mul(s, w)
            right = mul(w, s)
            up_left = weyl_length(left) > weyl_length(w)
            up_right = weyl_length(right) > weyl_length(w)
            label[(i, v)] = RootType.COMPLEX_ASCENT if up_left else RootType.COMPLEX_DESCENT
            cross[(i, v)] = ids[left]
            label[(r + i, v)] = RootType.COMPLEX_ASCENT if up_right else RootType.COMPLEX_DESCENT
            cross[(r + i, v)] = ids[right]
    return KgbGraph(dd, tuple(ids.values()), tw, length, label, cross, {}, origin="group_case")


def twisted_shadow(datum: RootDatum) -> KgbGraph:
    """Synthetic test harness, not a symmetric pair: nodes are the twisted
    involutions, and every imaginary root is treated as noncompact type II."""
    invs = twisted_involutions(datum)
    e = identity(datum)
    # breadth-first lengths along upward moves from the identity
    depth = {e: 0}
    frontier = [e]
    while frontier:
        nxt = []
        for w in frontier:
            from .weyl import _apply

            for alpha in range(1, datum.rank + 1):
                theta_alpha = _theta_root(datum, alpha)
                img = _apply(w, theta_alpha)
                alpha_root = simple_root(datum, alpha)
                s = simple_reflection(datum, alpha)
                s_theta = simple_reflection(datum, datum.twist[alpha - 1])
                if img == alpha_root:
                    up = mul(s, w)
                elif img == tuple(-c for c in alpha_root):
                    continue
                else:
                    cand = mul(mul(s, w), s_theta)
                    if weyl_length(cand) != weyl_length(w) + 2:
                        continue
                    up = cand
                if up not in depth:
                    depth[up] = depth[w] + 1
                    nxt.append(up)
                elif depth[up] != depth[w] + 1:
                    raise Unreachable("inconsistent lengths among twisted involutions")
        frontier = nxt
    if set(depth) != set(invs):
        raise Unreachable("some twisted involution is unreachable from the identity")

    order = sorted(invs, key=lambda w: (depth[w], reduced_word(w)))
    ids = {w: str(i) for i, w in enumerate(order)}
    tw = {ids[w]: w for w in order}
    length = {ids[w]: depth[w] for w in order}
    label = {}
    cross = {}
    cay = {}
    from .weyl import _apply

    for w in order:
        v = ids[w]
        for alpha in range(1, datum.rank + 1):
            theta_alpha = _theta_root(datum, alpha)
            img = _apply(w, theta_alpha)
            alpha_root = simple_root(datum, alpha)
            s = simple_reflection(datum, alpha)
            s_theta = simple_reflection(datum, datum.twist[alpha - 1])
            if img == alpha_root:
                label[(alpha, v)] = RootType.NONCOMPACT_II
                cross[(alpha, v)] = v
                cay[(alpha, v)] = ids[mul(s, w)]
            elif img == tuple(-c for c in alpha_root):
                label[(alpha, v)] = RootType.REAL_II
                cross[(alpha, v)] = v
            else:
                other = mul(mul(s, w), s_theta)
                up = weyl_length(other) > weyl_length(w)
                label[(alpha, v)] = (
                    RootType.COMPLEX_ASCENT if up else RootType.COMPLEX_DESCENT
                )
                cross[(alpha, v)] = ids[other]
    return KgbGraph(
        datum, tuple(ids.values()), tw, length, label, cross, cay, origin="twisted_shadow"
    )


# --- hand-built fixtures ----------------------------------------------------------


def sl2_split() -> KgbGraph:
    """Rank one, simply connected, split: two closed orbits joined by the cross
    action, both Cayley-ascending to the open orbit (type I pattern)."""
    from .root_datum import build_root_datum

    datum = build_root_datum("A1")
    e = identity(datum)
    s = simple_reflection(datum, 1)
    return KgbGraph(
        datum,
        ("0", "1", "2"),
        {"0": e, "1": e, "2": s},
        {"0": 0, "1": 0, "2": 1},
        {
            (1, "0"): RootType.NONCOMPACT_I,
            (1, "1"): RootType.NONCOMPACT_I,
            (1, "2"): RootType.REAL_I,
        },
        {(1, "0"): "1", (1, "1"): "0", (1, "2"): "2"},
        {(1, "0"): "2", (1, "1"): "2"},
        origin="fixture",
    )


def pgl2_split() -> KgbGraph:
    """Rank one, adjoint, split: the torus element of order two is trivial, so
    the noncompact root is forced to type II (single closed orbit)."""
    from .root_datum import build_root_datum

    datum = build_root_datum("A1", isogeny="adjoint")
    e = identity(datum)
    s = simple_reflection(datum, 1)
    return KgbGraph(
        datum,
        ("0", "1"),
        {"0": e, "1": s},
        {"0": 0, "1": 1},
        {(1, "0"): RootType.NONCOMPACT_II, (1, "1"): RootType.REAL_II},
        {(1, "0"): "0", (1, "1"): "1"},
        {(1, "0"): "1"},
        origin="fixture",
    )


def a1xa1_swap() -> KgbGraph:
    """Two commuting copies swapped by the twist; both roots complex.  The
    same graph arises as group_case(A1)."""
    from .root_datum import build_root_datum

    datum = build_root_datum("A1xA1", twist=(2, 1))
    e = identity(datum)
    top = from_word(datum, (1, 2))
    return KgbGraph(
        datum,
        ("0", "1"),
        {"0": e, "1": top},
        {"0": 0, "1": 1},
        {
            (1, "0"): RootType.COMPLEX_ASCENT,
            (2, "0"): RootType.COMPLEX_ASCENT,
            (1, "1"): RootType.COMPLEX_DESCENT,
            (2, "1"): RootType.COMPLEX_DESCENT,
        },
        {(1, "0"): "1", (2, "0"): "1", (1, "1"): "0", (2, "1"): "0"},
        {},
        origin="fixture",
    )


def builtin_fixtures() -> dict[str, KgbGraph]:
    """Named graphs shipped with the package, in a deterministic order."""
    from .root_datum import build_root_datum

    out = {
        "sl2_split": sl2_split(),
        "pgl2_split": pgl2_split(),
        "a1xa1_swap": a1xa1_swap(),
    }
    for name in ("A1", "A2", "B2"):
        out[f"group_case_{name.lower()}"] = group_case(build_root_datum(name))
    return out


# --- canonical sequences -----------------------------------------------------------


@dataclass(frozen=True)
class CanonicalSequences:
    """Two ways to reach a node: up from a closed node by monoid moves, and
    down from the open node with a recorded branch at every double-valued
    inverse Cayley."""

    start: NodeId
    up: tuple[int, ...]
    open_node: NodeId
    down: tuple[tuple[int, int | None], ...]


def _open_node(g: KgbGraph) -> NodeId:
    top = max(g.length.values())
    at_top = [v for v in g.nodes if g.length[v] == top]
    if len(at_top) != 1:
        raise NoOpenNode(f"expected a unique maximal-length node, found {len(at_top)}")
    return at_top[0]


def canonical_sequences(g: KgbGraph, v: NodeId) -> CanonicalSequences:
    g._require(v)
    poset = to_orbit_poset(g)
    from .orbit_poset import reduced_decomposition

    rd = reduced_decomposition(poset, v)
    open_node = _open_node(g)

    climb: list[tuple[int, NodeId, NodeId]] = []
    node = v
    while node != open_node:
        for alpha in range(1, g.datum.rank + 1):
            if g.label[(alpha, node)] in _ASCENT_TYPES:
                upper = monoid(g, alpha, node)
                climb.append((alpha, node, upper))
                node = upper
                break
        else:
            raise Unreachable(f"node {node} has no ascent but is not the open node")
    down = []
    for alpha, lower, upper in reversed(climb):
        lab = g.label[(alpha, upper)]
        if lab is RootType.REAL_I:
            branch = inverse_cayley(g, alpha, upper).index(lower)
            down.append((alpha, branch))
        else:
            down.append((alpha, None))
    return CanonicalSequences(rd.nodes[0], rd.roots, open_node, tuple(down))


def replay_upward(g: KgbGraph, start: NodeId, up) -> NodeId:
    return monoid_word(g, up, start)


def replay_downward(g: KgbGraph, down) -> NodeId:
    node = _open_node(g)
    for alpha, branch in down:
        lab = g.label[(alpha, node)]
        if lab is RootType.COMPLEX_DESCENT:
            node = g.cross[(alpha, node)]
        elif lab is RootType.REAL_I:
            node = inverse_cayley(g, alpha, node)[branch]
        elif lab is RootType.REAL_II:
            node = inverse_cayley(g, alpha, node)[0]
        else:
            raise Mismatch(f"root {alpha} does not descend from node {node}")
    return node


# --- text format ----------------------------------------------------------------------

FORMAT_HEADER = "kgbgraph v1"

_TYPE_BY_CODE = {t.value: t for t in RootType}


def format_kgb(g: KgbGraph) -> str:
    lines = [FORMAT_HEADER, "rootsystem inline"]
    lines.extend(format_root_datum(g.datum).rstrip("\n").split("\n"))
    lines.append(f"nodes {len(g.nodes)}")
    for v in g.nodes:
        lines.append(f"node {v} {g.length[v]} {format_word(reduced_word(g.tw[v]))}")
    for v in g.nodes:
        for alpha in range(1, g.datum.rank + 1):
            lab = g.label[(alpha, v)]
            parts = [f"label {v} {alpha} {lab.value} cross={g.cross[(alpha, v)]}"]
            if (alpha, v) in g.cayley:
                parts.append(f"cayley={g.cayley[(alpha, v)]}")
            lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


def save_kgb(g: KgbGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_kgb(g))


def parse_kgb(text: str, base_dir=None) -> KgbGraph:
    """Parse and validate; a structurally bad graph raises AxiomViolation."""
    lines = _significant_lines(text)
    if not lines or lines[0] != FORMAT_HEADER:
        raise ParseError(f"expected header {FORMAT_HEADER!r}")
    if len(lines) < 2 or not lines[1].startswith("rootsystem"):
        raise ParseError("expected a rootsystem line")
    fields = lines[1].split()
    if fields == ["rootsystem", "inline"]:
        datum, rest = parse_root_datum_lines(lines[2:])
    elif len(fields) == 3 and fields[1] == "file":
        import os

        ref = fields[2]
        path = ref if os.path.isabs(ref) or base_dir is None else os.path.join(base_dir, ref)
        from .root_datum import parse_root_datum

        with open(path, "r", encoding="utf-8") as fh:
            datum = parse_root_datum(fh.read())
        rest = lines[2:]
    else:
        raise ParseError(f"bad rootsystem line: {lines[1]!r}")

    if not rest or not rest[0].startswith("nodes "):
        raise ParseError("expected a node count line")
    fields = rest[0].split()
    if len(fields) != 2 or not fields[1].isdigit():
        raise ParseError("expected a node count line")
    count = int(fields[1])
    tw = {}
    length = {}
    pos = 1
    for _ in range(count):
        if pos >= len(rest):
            raise ParseError("truncated node list")
        fields = rest[pos].split()
        if len(fields) != 4 or fields[0] != "node":
            raise ParseError(f"bad node line: {rest[pos]!r}")
        name = fields[1]
        if name in length:
            raise ParseError(f"duplicate node {name!r}")
        try:
            length[name] = int(fields[2])
        except ValueError:
            raise ParseError(f"bad node length in {rest[pos]!r}") from None
        tw[name] = from_word(datum, parse_word(datum, fields[3]))
        pos += 1
    label = {}
    cross = {}
    cay = {}
    for line in rest[pos:]:
        fields = line.split()
        if fields[0] != "label" or len(fields) not in (5, 6):
            raise ParseError(f"bad label line: {line!r}")
        name = fields[1]
        if name not in length:
            raise ParseError(f"label for unknown node {name!r}")
        try:
            alpha = int(fields[2])
        except ValueError:
            raise ParseError(f"bad simple index in {line!r}") from None
        if not 1 <= alpha <= datum.rank:
            raise ParseError(f"simple index out of range in {line!r}")
        if fields[3] not in _TYPE_BY_CODE:
            raise ParseError(f"unknown label code in {line!r}")
        if (alpha, name) in label:
            raise ParseError(f"duplicate label for node {name!r}, root {alpha}")
        label[(alpha, name)] = _TYPE_BY_CODE[fields[3]]
        if not fields[4].startswith("cross="):
            raise ParseError(f"bad cross field in {line!r}")
        cross[(alpha, name)] = fields[4][len("cross=") :]
        if len(fields) == 6:
            if not fields[5].startswith("cayley="):
                raise ParseError(f"bad cayley field in {line!r}")
            cay[(alpha, name)] = fields[5][len("cayley=") :]
    g = KgbGraph(datum, tuple(length), tw, length, label, cross, cay)
    violations = validate_kgb(g)
    if violations:
        raise AxiomViolation(violations)
    return g


def load_kgb(path) -> KgbGraph:
    import os

    with open(path, "r", encoding="utf-8") as fh:
        return parse_kgb(fh.read(), base_dir=os.path.dirname(os.path.abspath(path)))
