"""Wildness test by certified tree unfoldings.

A candidate quiver is discarded when a small tree can be grown inside it
whose underlying graph lies outside the Dynkin and extended Dynkin shapes.
Tree nodes are placed at quiver vertices and edges realize arrows; each
node may use each arrow pair of its vertex at most once, and a double arrow
realizes a double edge.  Every directed path of length 2 or 3 appearing in
the tree must carry a relation-free certificate (no closing arrow back from
the path's end to its start), which keeps the unfolding claim sound.
"""

from __future__ import annotations

from dataclasses import dataclass

FINITE = "finite"
TAME = "tame"
WILD = "wild"


def _arms(adj, branch):
    """(length, ends_at_branch) for each direction out of a branch node."""
    arms = []
    for start in adj[branch]:
        length = 0
        prev, cur = branch, start
        while True:
            length += 1
            nxt = [w for w in adj[cur] if w != prev]
            if len(nxt) != 1:
                arms.append((length, len(nxt) > 1))
                break
            prev, cur = cur, nxt[0]
    return arms


def graph_class(n_nodes, edges):
    """Shape class of a connected multigraph whose simple part is a tree.

    edges: iterable of (a, b, multiplicity) with 0-based distinct endpoints.
    Returns 'finite' (Dynkin A/D/E), 'tame' (extended Dynkin) or 'wild'.
    """
    edges = list(edges)
    if any(m > 2 for _, _, m in edges):
        return WILD
    if any(m == 2 for _, _, m in edges):
        if n_nodes == 2 and len(edges) == 1:
            return TAME
        return WILD
    adj = [[] for _ in range(n_nodes)]
    for a, b, _ in edges:
        adj[a].append(b)
        adj[b].append(a)
    degs = [len(x) for x in adj]
    if any(d >= 5 for d in degs):
        return WILD
    branches = [v for v in range(n_nodes) if degs[v] >= 3]
    if not branches:
        return FINITE
    if len(branches) == 1:
        b = branches[0]
        if degs[b] == 4:
            return TAME if n_nodes == 5 else WILD
        arms = sorted(length for length, _ in _arms(adj, b))
        if arms[0] == arms[1] == 1:
            return FINITE
        if arms in ([1, 2, 2], [1, 2, 3], [1, 2, 4]):
            return FINITE
        if arms in ([2, 2, 2], [1, 3, 3], [1, 2, 5]):
            return TAME
        return WILD
    if len(branches) == 2:
        if any(degs[b] != 3 for b in branches):
            return WILD
        for b in branches:
            # the two arms away from the connector path must be single edges
            hanging = [length for length, at_branch in _arms(adj, b) if not at_branch]
            if hanging != [1, 1]:
                return WILD
        return TAME
    return WILD


@dataclass(frozen=True)
class UnfoldingWitness:
    """A certified wild tree: node_vertices[k] is node k's quiver vertex;
    edges are (tail_node, head_node, multiplicity) following arrow direction."""

    node_vertices: tuple
    edges: tuple


class _Tree:
    def __init__(self, root_vertex):
        self.vertices = [root_vertex]
        self.edges = []  # (tail_node, head_node, mult)
        self.used = [set()]  # arrow pairs consumed per node
        self.out_nbrs = [[]]  # node -> heads of edges leaving it
        self.in_nbrs = [[]]

    def add(self, node, pair, mult, outgoing):
        child = len(self.vertices)
        s, t = pair
        self.vertices.append(t if outgoing else s)
        self.used.append({pair})
        self.out_nbrs.append([])
        self.in_nbrs.append([])
        self.used[node].add(pair)
        if outgoing:
            self.edges.append((node, child, mult))
            self.out_nbrs[node].append(child)
            self.in_nbrs[child].append(node)
        else:
            self.edges.append((child, node, mult))
            self.out_nbrs[child].append(node)
            self.in_nbrs[node].append(child)
        return child

    def pop(self, node):
        child = len(self.vertices) - 1
        tail, head, _ = self.edges.pop()
        if tail == node:
            self.out_nbrs[node].pop()
        else:
            self.in_nbrs[node].pop()
        self.used[node].discard(next(iter(self.used[child])))
        self.vertices.pop()
        self.used.pop()
        self.out_nbrs.pop()
        self.in_nbrs.pop()

    def canonical(self):
        n = len(self.vertices)
        lab = {}
        for tail, head, m in self.edges:
            lab[(tail, head)] = (1, m)
            lab[(head, tail)] = (-1, m)
        adj = [[] for _ in range(n)]
        for tail, head, _ in self.edges:
            adj[tail].append(head)
            adj[head].append(tail)

        def code(v, parent):
            subs = sorted(
                (lab[(v, w)], code(w, v)) for w in adj[v] if w != parent
            )
            return (self.vertices[v], tuple(subs))

        return min(code(v, -1) for v in range(n))


def _certified(tree, q, child):
    """Certificates for every directed 2- and 3-path through the new node."""
    vx = tree.vertices

    def no_arrow(a, b):
        return q.mult[vx[a] - 1][vx[b] - 1] == 0

    # directed paths with the new node as an endpoint
    paths = []
    for m in tree.in_nbrs[child]:
        for x in tree.in_nbrs[m]:
            if x != child:
                paths.append((x, m, child))
                for w in tree.in_nbrs[x]:
                    if w not in (m, child):
                        paths.append((w, x, m, child))
    for m in tree.out_nbrs[child]:
        for z in tree.out_nbrs[m]:
            if z != child:
                paths.append((child, m, z))
                for w in tree.out_nbrs[z]:
                    if w not in (m, child):
                        paths.append((child, m, z, w))
    # paths with the new node in the middle
    for m in tree.in_nbrs[child]:
        for z in tree.out_nbrs[child]:
            if z == m:
                continue
            paths.append((m, child, z))
            for x in tree.in_nbrs[m]:
                if x not in (child, z):
                    paths.append((x, m, child, z))
            for w in tree.out_nbrs[z]:
                if w not in (child, m):
                    paths.append((m, child, z, w))
    for p in paths:
        if not no_arrow(p[-1], p[0]):
            return False
    return True


def find_wild_unfolding(q, max_nodes=8):
    """First certified tree with a wild underlying graph, or None.

    Deterministic depth-first growth with canonical-form memoization; only
    non-wild trees are extended, so the explored shapes stay within the
    Dynkin and extended Dynkin families and the search is small.
    """
    pairs = sorted((s, t) for s, t, _ in q.arrows())
    seen = set()

    def extensions(tree):
        for node in range(len(tree.vertices)):
            u = tree.vertices[node]
            for s, t in pairs:
                if (s, t) in tree.used[node]:
                    continue
                m = q.mult[s - 1][t - 1]
                if s == u:
                    yield node, (s, t), m, True
                if t == u:
                    yield node, (s, t), m, False

    def grow(tree):
        key = tree.canonical()
        if key in seen:
            return None
        seen.add(key)
        if len(tree.vertices) >= max_nodes:
            return None
        for node, pair, m, outgoing in extensions(tree):
            child = tree.add(node, pair, m, outgoing)
            ok = _certified(tree, q, child)
            if ok:
                cls = graph_class(len(tree.vertices), tree.edges)
                if cls == WILD:
                    witness = UnfoldingWitness(
                        tuple(tree.vertices), tuple(tree.edges)
                    )
                    tree.pop(node)
                    return witness
                found = grow(tree)
                if found is not None:
                    tree.pop(node)
                    return found
            tree.pop(node)
        return None

    for root in range(1, q.n + 1):
        found = grow(_Tree(root))
        if found is not None:
            return found
    return None
