"""Orbit graphs for a spherical subgroup acting on the flag variety.

Nodes are orbit identifiers (plain strings).  For each simple root the nodes
fall into fibers of size 1, 2, or 3 with a unique dense member; closure order
is recovered from this data alone, by downward lifting, and cross-checked
against subexpression enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import Mismatch, ParseError, Unreachable
from .root_datum import RootDatum, simple_root
from .weyl import format_word, length as weyl_length, mul, reduced_word, simple_reflection

NodeId = str


def node_sort_key(node: NodeId) -> tuple:
    """Numeric ids sort numerically, everything else lexicographically after."""
    return (0, int(node)) if node.isdigit() else (1, node)


class OrbitGraph:
    """Immutable after construction; fibers of size one are implicit."""

    def __init__(
        self,
        rootsystem: str,
        rank: int,
        lengths: Mapping[NodeId, int],
        fibers: Iterable[tuple[int, NodeId, Sequence[NodeId]]],
    ):
        self.rootsystem = rootsystem
        self.rank = rank
        self.length = dict(lengths)
        self.nodes: tuple[NodeId, ...] = tuple(sorted(self.length, key=node_sort_key))
        self._fibers: dict[tuple[int, NodeId], tuple[NodeId, tuple[NodeId, ...]]] = {}
        for alpha, dense, members in fibers:
            group = tuple(sorted(set(members) | {dense}, key=node_sort_key))
            for x in group:
                self._fibers[(alpha, x)] = (dense, group)
        self._leq_cache: dict[tuple[NodeId, NodeId], bool | None] = {}

    def _require(self, node: NodeId) -> None:
        if node not in self.length:
            raise Mismatch(f"unknown node {node!r}")

    def fiber(self, alpha: int, node: NodeId) -> tuple[NodeId, ...]:
        self._require(node)
        if not 1 <= alpha <= self.rank:
            raise Mismatch(f"simple index {alpha} out of range 1..{self.rank}")
        got = self._fibers.get((alpha, node))
        return got[1] if got else (node,)

    def dense_node(self, alpha: int, node: NodeId) -> NodeId:
        self._require(node)
        if not 1 <= alpha <= self.rank:
            raise Mismatch(f"simple index {alpha} out of range 1..{self.rank}")
        got = self._fibers.get((alpha, node))
        return got[0] if got else node

    def stored_fibers(self) -> list[tuple[int, NodeId, tuple[NodeId, ...]]]:
        """Each explicit fiber once, sorted by simple index then dense node."""
        seen = {}
        for (alpha, _), (dense, group) in self._fibers.items():
            seen[(alpha, group)] = (alpha, dense, group)
        return sorted(seen.values(), key=lambda t: (t[0], node_sort_key(t[1])))


def monoid_apply(g: OrbitGraph, alpha: int, node: NodeId) -> NodeId:
    """The dense node of the fiber; idempotent by construction."""
    return g.dense_node(alpha, node)


# --- construction from Weyl groups and parabolic quotients ------------------


def from_weyl(datum: RootDatum) -> OrbitGraph:
    from .weyl import enumerate_elements

    elements = enumerate_elements(datum)
    ident = {w: format_word(reduced_word(w)) for w in elements}
    lengths = {ident[w]: weyl_length(w) for w in elements}
    fibers = []
    for alpha in range(1, datum.rank + 1):
        s = simple_reflection(datum, alpha)
        for w in elements:
            ws = mul(w, s)
            if weyl_length(ws) > weyl_length(w):
                fibers.append((alpha, ident[ws], (ident[w], ident[ws])))
    return OrbitGraph(datum.name or "custom", datum.rank, lengths, fibers)


def from_parabolic(datum: RootDatum, levi) -> OrbitGraph:
    from .parabolic import StepType, classify_step, enumerate_cosets, p_length, step_coset
    from .root_datum import normalize_levi

    levi = normalize_levi(datum, levi)
    cosets = enumerate_cosets(datum, levi)
    ident = {c: format_word(reduced_word(c.min_rep)) for c in cosets}
    lengths = {ident[c]: p_length(c) for c in cosets}
    fibers = []
    for alpha in range(1, datum.rank + 1):
        for c in cosets:
            if classify_step(c.min_rep, simple_root(datum, alpha), levi) is StepType.COMPLEX_UPWARD:
                up = step_coset(c, alpha)
                fibers.append((alpha, ident[up], (ident[c], ident[up])))
    label = datum.name or "custom"
    if levi:
        label += " levi " + ",".join(str(i) for i in levi)
    return OrbitGraph(label, datum.rank, lengths, fibers)


# --- validation --------------------------------------------------------------


def validate(g: OrbitGraph) -> list[str]:
    """Check every structural axiom; empty list means the graph is a genuine
    orbit graph as far as the fiber data can tell."""
    violations = []
    for node in g.nodes:
        if not isinstance(g.length[node], int) or g.length[node] < 0:
            violations.append(f"BadLength: node={node} length={g.length[node]!r}")
    for alpha, dense, group in g.stored_fibers():
        tag = f"alpha={alpha} fiber={'/'.join(group)}"
        if not 1 <= alpha <= g.rank:
            violations.append(f"BadSimpleIndex: {tag}")
            continue
        unknown = [x for x in group if x not in g.length]
        if unknown:
            violations.append(f"UnknownNode: {tag} nodes={','.join(unknown)}")
            continue
        if len(group) > 3:
            violations.append(f"FiberTooLarge: {tag} size={len(group)}")
        for x in group:
            if g._fibers.get((alpha, x), (None, None))[1] != group:
                violations.append(f"FiberIncoherent: {tag} node={x}")
        top = max(g.length[x] for x in group)
        at_top = [x for x in group if g.length[x] == top]
        if len(at_top) != 1:
            violations.append(f"NoDenseNode: {tag} maximal={','.join(at_top)}")
        elif at_top[0] != dense:
            violations.append(f"NoDenseNode: {tag} stored dense {dense} is not the longest")
        elif len(group) > 1:
            for x in group:
                if x != dense and g.length[x] != top - 1:
                    violations.append(f"BadLengthGap: {tag} node={x}")
    if all(g.length[node] != 0 for node in g.nodes):
        violations.append("NoClosedNode: no node of length 0")
    for node in g.nodes:
        if g.length[node] > 0 and not any(
            g.dense_node(alpha, node) == node and len(g.fiber(alpha, node)) > 1
            for alpha in range(1, g.rank + 1)
        ):
            violations.append(f"Unreachable: node={node} has no downward fiber")
    return sorted(violations)


# --- reduced decompositions and subexpressions -------------------------------


@dataclass(frozen=True)
class ReducedDecomposition:
    """Path of orbits from a closed one to the target, one dense step each."""

    nodes: tuple[NodeId, ...]
    roots: tuple[int, ...]


def reduced_decomposition(g: OrbitGraph, v: NodeId) -> ReducedDecomposition:
    """Deterministic decomposition: walk down from v, at each step taking the
    smallest simple index that lowers, then the smallest lower node."""
    g._require(v)
    rev_nodes = [v]
    rev_roots = []
    node = v
    while g.length[node] > 0:
        for alpha in range(1, g.rank + 1):
            group = g.fiber(alpha, node)
            if len(group) > 1 and g.dense_node(alpha, node) == node:
                below = min((x for x in group if x != node), key=node_sort_key)
                rev_roots.append(alpha)
                rev_nodes.append(below)
                node = below
                break
        else:
            raise Unreachable(f"node {node} has positive length but no downward fiber")
    return ReducedDecomposition(tuple(reversed(rev_nodes)), tuple(reversed(rev_roots)))


def all_reduced_decompositions(g: OrbitGraph, v: NodeId) -> list[ReducedDecomposition]:
    g._require(v)
    if g.length[v] == 0:
        return [ReducedDecomposition((v,), ())]
    out = []
    for alpha in range(1, g.rank + 1):
        group = g.fiber(alpha, v)
        if len(group) > 1 and g.dense_node(alpha, v) == v:
            for below in sorted((x for x in group if x != v), key=node_sort_key):
                for rd in all_reduced_decompositions(g, below):
                    out.append(ReducedDecomposition(rd.nodes + (v,), rd.roots + (alpha,)))
    if not out:
        raise Unreachable(f"node {v} has positive length but no downward fiber")
    return out


def _check_rd(g: OrbitGraph, rd: ReducedDecomposition) -> None:
    if len(rd.nodes) != len(rd.roots) + 1:
        raise Mismatch("decomposition sequences have inconsistent lengths")
    for node in rd.nodes:
        g._require(node)
    if g.length[rd.nodes[0]] != 0:
        raise Mismatch(f"decomposition must start at a closed orbit, got {rd.nodes[0]}")
    for i, alpha in enumerate(rd.roots):
        prev, cur = rd.nodes[i], rd.nodes[i + 1]
        if cur == prev or g.dense_node(alpha, prev) != cur:
            raise Mismatch(f"step {i + 1} is not a dense move along {alpha}")


def subexpression_endpoints(g: OrbitGraph, rd: ReducedDecomposition) -> tuple[NodeId, ...]:
    """All endpoints of subexpressions of the given decomposition.  A node
    already dense in its fiber can only stand still; otherwise the whole
    fiber is reachable in one step (stand still, move to dense, or slide to
    the other member under the shared dense target)."""
    _check_rd(g, rd)
    current = {rd.nodes[0]}
    for alpha in rd.roots:
        nxt = set()
        for u in current:
            if g.dense_node(alpha, u) == u:
                nxt.add(u)
            else:
                nxt.update(g.fiber(alpha, u))
        current = nxt
    return tuple(sorted(current, key=node_sort_key))


# --- order --------------------------------------------------------------------


def poset_leq(g: OrbitGraph, u: NodeId, v: NodeId) -> bool:
    """Closure order by downward lifting.  Deterministic: the lowering root is
    the smallest simple index at which v is dense in a non-singleton fiber."""
    g._require(u)
    g._require(v)
    key = (u, v)
    cached = g._leq_cache.get(key, "missing")
    if cached != "missing":
        return bool(cached)  # in-progress None reads as False: cycle in bad graph
    if u == v:
        g._leq_cache[key] = True
        return True
    if g.length[u] >= g.length[v]:
        g._leq_cache[key] = False
        return False
    g._leq_cache[key] = None
    result = False
    for alpha in range(1, g.rank + 1):
        group = g.fiber(alpha, v)
        if len(group) > 1 and g.dense_node(alpha, v) == v:
            below = min((x for x in group if x != v), key=node_sort_key)
            u_dense = g.dense_node(alpha, u)
            if u_dense != u:
                result = poset_leq(g, u_dense, v)
            else:
                result = any(
                    poset_leq(g, x, below)
                    for x in sorted(g.fiber(alpha, u), key=node_sort_key)
                )
            break
    g._leq_cache[key] = result
    return result


def property_z_check(g: OrbitGraph) -> list[str]:
    """For every simple root and every pair of upward moves, the three lifting
    conditions must agree.  Nonempty output pinpoints the failing pair."""
    violations = []
    for alpha in range(1, g.rank + 1):
        moved = [x for x in g.nodes if g.dense_node(alpha, x) != x]
        for u1 in moved:
            u2 = g.dense_node(alpha, u1)
            slide = [x for x in g.fiber(alpha, u1) if x != u2]
            for v1 in moved:
                v2 = g.dense_node(alpha, v1)
                c1 = any(poset_leq(g, x, v1) for x in slide)
                c2 = poset_leq(g, u2, v2)
                c3 = poset_leq(g, u1, v2)
                if not (c1 == c2 == c3):
                    violations.append(
                        f"PropertyZ: alpha={alpha} u1={u1} v1={v1} "
                        f"conditions=({c1},{c2},{c3})"
                    )
    return sorted(violations)


def hasse(g: OrbitGraph) -> list[tuple[NodeId, NodeId]]:
    """Cover relations of the closure order, sorted for stable output."""
    below: dict[NodeId, list[NodeId]] = {
        v: [u for u in g.nodes if u != v and poset_leq(g, u, v)] for v in g.nodes
    }
    edges = []
    for v in g.nodes:
        for u in below[v]:
            if not any(poset_leq(g, u, w) for w in below[v] if w != u):
                edges.append((u, v))
    return sorted(edges, key=lambda e: (node_sort_key(e[0]), node_sort_key(e[1])))


def hasse_dot(g: OrbitGraph) -> str:
    """Cover graph in DOT form, nodes annotated with their lengths."""
    lines = ["digraph closure_order {"]
    for node in g.nodes:
        lines.append(f'  "{node}" [label="{node} len={g.length[node]}"];')
    for u, v in hasse(g):
        lines.append(f'  "{u}" -> "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


# --- text format ---------------------------------------------------------------

FORMAT_HEADER = "orbitgraph v1"


def format_orbit_graph(g: OrbitGraph) -> str:
    lines = [FORMAT_HEADER, f"rootsystem {g.rootsystem}", f"nodes {len(g.nodes)}"]
    for node in g.nodes:
        lines.append(f"node {node} {g.length[node]}")
    for alpha, dense, group in g.stored_fibers():
        if len(group) > 1:
            rest = [x for x in group if x != dense]
            lines.append(f"fiber {alpha} {dense} {' '.join(rest)}")
    return "\n".join(lines) + "\n"


def save_orbit_graph(g: OrbitGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_orbit_graph(g))


def parse_orbit_graph(text: str) -> OrbitGraph:
    from .root_datum import _significant_lines

    lines = _significant_lines(text)
    if not lines or lines[0] != FORMAT_HEADER:
        raise ParseError(f"expected header {FORMAT_HEADER!r}")
    if len(lines) < 3 or not lines[1].startswith("rootsystem "):
        raise ParseError("expected a rootsystem line")
    rootsystem = lines[1][len("rootsystem ") :].strip()
    fields = lines[2].split()
    if len(fields) != 2 or fields[0] != "nodes" or not fields[1].isdigit():
        raise ParseError("expected a node count line")
    count = int(fields[1])
    lengths: dict[NodeId, int] = {}
    pos = 3
    for _ in range(count):
        if pos >= len(lines):
            raise ParseError("truncated node list")
        fields = lines[pos].split()
        if len(fields) != 3 or fields[0] != "node":
            raise ParseError(f"bad node line: {lines[pos]!r}")
        name = fields[1]
        if name in lengths:
            raise ParseError(f"duplicate node {name!r}")
        try:
            lengths[name] = int(fields[2])
        except ValueError:
            raise ParseError(f"bad node length in {lines[pos]!r}") from None
        pos += 1
    fibers = []
    rank = 0
    for line in lines[pos:]:
        fields = line.split()
        if fields[0] != "fiber" or len(fields) < 4:
            raise ParseError(f"bad fiber line: {line!r}")
        try:
            alpha = int(fields[1])
        except ValueError:
            raise ParseError(f"bad simple index in {line!r}") from None
        if alpha < 1:
            raise ParseError(f"bad simple index in {line!r}")
        rank = max(rank, alpha)
        for name in fields[2:]:
            if name not in lengths:
                raise ParseError(f"fiber mentions unknown node {name!r}")
        fibers.append((alpha, fields[2], tuple(fields[2:])))
    return OrbitGraph(rootsystem, rank, lengths, fibers)


def load_orbit_graph(path) -> OrbitGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_orbit_graph(fh.read())
