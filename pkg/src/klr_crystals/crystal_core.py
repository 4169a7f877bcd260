"""Abstract crystals, the tensor rule, axiom and morphism checkers, graphs.

Crystal operators follow the convention in which, on a pair (b1, b2),
e_j prefers the right factor and f_j prefers the left factor at ties:
    eps_j(b1 (x) b2) = max(eps_j(b2), eps_j(b1) - <h_j, wt(b2)>)
    phi_j(b1 (x) b2) = max(phi_j(b2) + <h_j, wt(b1)>, phi_j(b1))
    e_j acts on b1 iff eps_j(b1) >  phi_j(b2)
    f_j acts on b1 iff eps_j(b1) >= phi_j(b2)
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .cartan import InvalidDatumError, cartan_entry

_STRING_CAP = 100_000


class Crystal:
    """Base interface: colored operators e/f, statistics eps/phi, weight, label.

    Nodes are hashable values whose meaning is fixed by the concrete class.
    e and f return the neighboring node or None.
    """

    ell: int

    def wt(self, b):
        raise NotImplementedError

    def eps(self, j, b):
        raise NotImplementedError

    def phi(self, j, b):
        raise NotImplementedError

    def e(self, j, b):
        raise NotImplementedError

    def f(self, j, b):
        raise NotImplementedError

    def label(self, b):
        raise NotImplementedError


def tensor_stats(B1, B2, j, b1, b2):
    """(eps, phi) of b1 (x) b2 via the max formulas."""
    eps = max(B2.eps(j, b2), B1.eps(j, b1) - B2.wt(b2).evals[j % B2.ell])
    phi = max(B2.phi(j, b2) + B1.wt(b1).evals[j % B1.ell], B1.phi(j, b1))
    return eps, phi


def tensor_e(B1, B2, j, b1, b2):
    """e_j on a pair; ties go to the right factor."""
    if B1.eps(j, b1) > B2.phi(j, b2):
        nxt = B1.e(j, b1)
        return None if nxt is None else (nxt, b2)
    nxt = B2.e(j, b2)
    return None if nxt is None else (b1, nxt)


def tensor_f(B1, B2, j, b1, b2):
    """f_j on a pair; ties go to the left factor."""
    if B1.eps(j, b1) >= B2.phi(j, b2):
        nxt = B1.f(j, b1)
        return None if nxt is None else (nxt, b2)
    nxt = B2.f(j, b2)
    return None if nxt is None else (b1, nxt)


class TensorCrystal(Crystal):
    """Pairwise tensor of two crystals over the same cyclic datum."""

    def __init__(self, left, right):
        if left.ell != right.ell:
            raise InvalidDatumError(
                f"tensor factors disagree on ell: {left.ell} vs {right.ell}"
            )
        self.ell = left.ell
        self.left = left
        self.right = right

    def wt(self, b):
        return self.left.wt(b[0]) + self.right.wt(b[1])

    def eps(self, j, b):
        return tensor_stats(self.left, self.right, j, b[0], b[1])[0]

    def phi(self, j, b):
        return tensor_stats(self.left, self.right, j, b[0], b[1])[1]

    def e(self, j, b):
        return tensor_e(self.left, self.right, j, b[0], b[1])

    def f(self, j, b):
        return tensor_f(self.left, self.right, j, b[0], b[1])

    def label(self, b):
        return f"{self.left.label(b[0])}⊗{self.right.label(b[1])}"


@dataclass(frozen=True)
class Violation:
    axiom: str
    node: str
    color: int
    detail: str


def _string_length(step, j, b):
    n = 0
    while (b := step(j, b)) is not None:
        n += 1
        if n > _STRING_CAP:
            return None
    return n


def _raising_closure(B, nodes):
    order = []
    seen = set()
    queue = list(nodes)
    while queue:
        b = queue.pop()
        if b in seen:
            continue
        seen.add(b)
        order.append(b)
        for j in range(B.ell):
            up = B.e(j, b)
            if up is not None and up not in seen:
                queue.append(up)
        if len(order) > _STRING_CAP:
            raise InvalidDatumError("raising closure did not terminate")
    return order


def check_axioms(B, nodes):
    """Violations of the local crystal axioms over the given nodes.

    The node set is first closed under raising. Checked per node and color:
    statistics are nonnegative ints equal to the raising/lowering string
    lengths, phi - eps matches the weight evaluation, e and f shift the
    statistics and the weight by the expected Cartan amounts, and e/f are
    mutually inverse where defined.
    """
    out = []
    for b in _raising_closure(B, nodes):
        name = B.label(b)
        wt_b = B.wt(b).evals
        for j in range(B.ell):
            eps, phi = B.eps(j, b), B.phi(j, b)
            if not (isinstance(eps, int) and isinstance(phi, int)) or eps < 0 or phi < 0:
                out.append(Violation("C5", name, j, f"eps={eps} phi={phi}"))
                continue
            if phi - eps != wt_b[j]:
                out.append(
                    Violation("C1", name, j, f"phi-eps={phi - eps} wt={wt_b[j]}")
                )
            up_len = _string_length(B.e, j, b)
            if up_len != eps:
                out.append(Violation("seminormal", name, j, f"eps={eps} string={up_len}"))
            down_len = _string_length(B.f, j, b)
            if down_len != phi:
                out.append(Violation("seminormal", name, j, f"phi={phi} string={down_len}"))
            a = B.e(j, b)
            if a is not None:
                if B.eps(j, a) != eps - 1 or B.phi(j, a) != phi + 1:
                    out.append(Violation("C2", name, j, "statistics do not shift by 1"))
                want = tuple(v + cartan_entry(B.ell, t, j) for t, v in enumerate(wt_b))
                if B.wt(a).evals != want:
                    out.append(Violation("C2", name, j, "weight does not gain alpha_j"))
                if B.f(j, a) != b:
                    out.append(Violation("C4", name, j, "f(e(b)) != b"))
            c = B.f(j, b)
            if c is not None:
                if B.eps(j, c) != eps + 1 or B.phi(j, c) != phi - 1:
                    out.append(Violation("C3", name, j, "statistics do not shift by 1"))
                want = tuple(v - cartan_entry(B.ell, t, j) for t, v in enumerate(wt_b))
                if B.wt(c).evals != want:
                    out.append(Violation("C3", name, j, "weight does not lose alpha_j"))
                if B.e(j, c) != b:
                    out.append(Violation("C4", name, j, "e(f(b)) != b"))
    return out


@dataclass
class MorphismReport:
    violations: list
    injective: bool
    surjective: bool | None


def check_morphism(psi, B1, B2, nodes, strict=False, targets=None):
    """Check psi: B1 -> B2 u {None} on the given nodes.

    Where psi(b) is not None it must preserve wt/eps/phi and commute with
    e and f whenever both sides stay inside the crystals; with strict=True
    commuting is required with None treated as a genuine value. Injectivity
    is judged on the non-None images; surjectivity against `targets` if given.
    """
    if B1.ell != B2.ell:
        raise InvalidDatumError("morphism endpoints disagree on ell")
    nodes = list(nodes)
    violations = []
    images = {b: psi(b) for b in nodes}
    for b in nodes:
        y = images[b]
        name = B1.label(b)
        if y is not None:
            if B1.wt(b).evals != B2.wt(y).evals:
                violations.append(Violation("M2", name, -1, "weight not preserved"))
            for j in range(B1.ell):
                if B1.eps(j, b) != B2.eps(j, y) or B1.phi(j, b) != B2.phi(j, y):
                    violations.append(Violation("M2", name, j, "eps/phi not preserved"))
        for j in range(B1.ell):
            a = B1.e(j, b)
            c = B1.f(j, b)
            if strict:
                pa = psi(a) if a is not None else None
                ea = B2.e(j, y) if y is not None else None
                if pa != ea:
                    violations.append(Violation("strict", name, j, "e does not commute"))
                pc = psi(c) if c is not None else None
                fc = B2.f(j, y) if y is not None else None
                if pc != fc:
                    violations.append(Violation("strict", name, j, "f does not commute"))
            elif y is not None:
                if a is not None and (pa := psi(a)) is not None and pa != B2.e(j, y):
                    violations.append(Violation("M3", name, j, "e does not commute"))
                if c is not None and (pc := psi(c)) is not None and pc != B2.f(j, y):
                    violations.append(Violation("M4", name, j, "f does not commute"))
    hits = [y for y in images.values() if y is not None]
    injective = len(hits) == len(set(hits))
    surjective = None if targets is None else set(hits) == set(targets)
    return MorphismReport(violations, injective, surjective)


def bfs_levels(B, roots, depth):
    """Nodes grouped by distance (in f-steps) from the roots, up to depth."""
    seen = set()
    level = []
    for r in roots:
        if r not in seen:
            seen.add(r)
            level.append(r)
    levels = [level]
    for _ in range(depth):
        nxt = []
        for b in levels[-1]:
            for j in range(B.ell):
                c = B.f(j, b)
                if c is not None and c not in seen:
                    seen.add(c)
                    nxt.append(c)
        levels.append(nxt)
    return levels


def bfs_nodes(B, roots, depth):
    return [b for level in bfs_levels(B, roots, depth) for b in level]


@dataclass(frozen=True)
class GraphNode:
    id: str
    eps: tuple[int, ...]
    phi: tuple[int, ...]
    wt: tuple[int, ...]


@dataclass(frozen=True)
class GraphEdge:
    src: str
    dst: str
    color: int


@dataclass(frozen=True)
class CrystalGraph:
    ell: int
    depth: int
    nodes: tuple[GraphNode, ...]
    edges: tuple[GraphEdge, ...]


def build_graph(B, roots, depth):
    """Lowering graph from the roots, truncated at the given depth.

    Nodes are sorted by label and edges by (source, target, color), so equal
    inputs always produce an identical graph value.
    """
    levels = bfs_levels(B, roots, depth)
    nodes = []
    for level in levels:
        for b in level:
            nodes.append(
                GraphNode(
                    B.label(b),
                    tuple(B.eps(j, b) for j in range(B.ell)),
                    tuple(B.phi(j, b) for j in range(B.ell)),
                    tuple(B.wt(b).evals),
                )
            )
    edges = []
    for level in levels[:-1]:
        for b in level:
            for j in range(B.ell):
                c = B.f(j, b)
                if c is not None:
                    edges.append(GraphEdge(B.label(b), B.label(c), j))
    nodes.sort(key=lambda n: n.id)
    edges.sort(key=lambda e: (e.src, e.dst, e.color))
    return CrystalGraph(B.ell, depth, tuple(nodes), tuple(edges))


def export_graph(graph, fmt="dot"):
    """Serialize a graph to bytes: GraphViz DOT or the JSON document form."""
    if fmt == "dot":
        lines = ["digraph crystal {"]
        for n in graph.nodes:
            lines.append(f'"{n.id}" [shape=box]')
        for e in graph.edges:
            lines.append(f'"{e.src}" -> "{e.dst}" [label="{e.color}"]')
        lines.append("}")
        return ("\n".join(lines) + "\n").encode("utf-8")
    if fmt == "json":
        def stat_map(values):
            return {str(j): v for j, v in enumerate(values)}

        doc = {
            "ell": graph.ell,
            "depth": graph.depth,
            "nodes": [
                {
                    "id": n.id,
                    "eps": stat_map(n.eps),
                    "phi": stat_map(n.phi),
                    "wt": stat_map(n.wt),
                }
                for n in graph.nodes
            ],
            "edges": [
                {"from": e.src, "to": e.dst, "color": e.color} for e in graph.edges
            ],
        }
        return (json.dumps(doc, indent=2, ensure_ascii=False) + "\n").encode("utf-8")
    raise InvalidDatumError(f"unknown export format {fmt!r}")


def graph_from_json(data):
    """Rebuild a CrystalGraph from the JSON document form."""
    doc = json.loads(data.decode("utf-8") if isinstance(data, bytes) else data)
    try:
        ell = doc["ell"]
        depth = doc["depth"]

        def stats(m):
            return tuple(m[str(j)] for j in range(ell))

        nodes = tuple(
            GraphNode(n["id"], stats(n["eps"]), stats(n["phi"]), stats(n["wt"]))
            for n in doc["nodes"]
        )
        edges = tuple(
            GraphEdge(e["from"], e["to"], e["color"]) for e in doc["edges"]
        )
    except (KeyError, TypeError) as err:
        raise InvalidDatumError(f"malformed graph document: {err}") from err
    return CrystalGraph(ell, depth, nodes, edges)
