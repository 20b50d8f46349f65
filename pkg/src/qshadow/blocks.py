"""Block calculus for glued quivers.

A quiver is assembled from a small catalog of building blocks.  Each block
has closed vertices (written as bullets: all their arrows stay inside the
block) and outlet vertices (written as circles: glued in pairs across two
distinct blocks).  The module glues block specifications into quivers,
decomposes quivers back into blocks by exact cover, computes the two arrow
permutations f and g of a 2-regular glueing of loops, self-folded triangles
and triangles, derives virtual arrows from orbit weights, and applies the
local mutation rewrites that exchange the four-vertex and five-vertex block
shapes around a pivot vertex.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field

from . import quivers as qv
from .errors import (
    DanglingOutlet,
    DuplicateBullet,
    LoopAtPivot,
    NoMatchingPattern,
    OverGlued,
    ParseError,
    VertexOutOfRange,
    WeightNotOrbitConstant,
    WeightTooSmall,
)
from .quivers import PatternSpec, Quiver, degrees, find_pattern


@dataclass(frozen=True)
class BlockTemplate:
    """One catalog entry.

    arrows are template-indexed (1-based) with one entry per arrow copy;
    bullets are the closed vertices, outlets the glueable ones.
    virtual_pair marks the vertex pair that carries a dotted 2-cycle in the
    glueing this block shape arises from (declarative data only).
    """

    name: str
    n: int
    arrows: tuple
    bullets: frozenset
    outlets: tuple
    virtual_pair: tuple | None = None


TEMPLATES = {
    "I": BlockTemplate("I", 1, ((1, 1),), frozenset(), (1,)),
    "II": BlockTemplate("II", 2, ((1, 1), (1, 2), (2, 1)), frozenset({1}), (2,)),
    "III": BlockTemplate("III", 3, ((1, 2), (2, 3), (3, 1)), frozenset(), (1, 2, 3)),
    # vertices: 1, 2 outlets; 3 the 1-vertex; 4 the second closed vertex
    "IV": BlockTemplate(
        "IV", 4, ((3, 1), (1, 2), (2, 3), (2, 4), (4, 1)),
        frozenset({3, 4}), (1, 2), virtual_pair=(1, 2),
    ),
    # vertices: 1, 3 the (2,1) closed vertices; 2, 4 the (1,2) closed
    # vertices; 5 the outlet
    "V": BlockTemplate(
        "V", 5, ((2, 1), (2, 3), (4, 1), (4, 3), (1, 5), (3, 5), (5, 4), (5, 2)),
        frozenset({1, 2, 3, 4}), (5,),
    ),
    "V1": BlockTemplate("V1", 2, ((1, 2), (2, 1)), frozenset({1}), (2,)),
    # 4-cycle with closed vertices at antipodal positions 2 and 4
    "V2": BlockTemplate(
        "V2", 4, ((1, 2), (2, 3), (3, 4), (4, 1)), frozenset({2, 4}), (1, 3),
    ),
    # vertices: 1 the (1,2) closed vertex; 2, 3 the middle pair; 4 the (2,1)
    # closed vertex; 5 the outlet
    "V3": BlockTemplate(
        "V3", 5, ((1, 2), (1, 3), (2, 4), (3, 4), (4, 5), (5, 1)),
        frozenset({1, 2, 3, 4}), (5,), virtual_pair=(1, 4),
    ),
    "V4": BlockTemplate(
        "V4", 6, ((1, 2), (1, 3), (2, 4), (3, 4), (4, 5), (4, 6), (5, 1), (6, 1)),
        frozenset({1, 2, 3, 4, 5, 6}), (), virtual_pair=(1, 4),
    ),
}

CATALOG_ORDER = ("I", "II", "III", "IV", "V", "V1", "V2", "V3", "V4")
TRIANGULATION_TYPES = ("I", "II", "III")
BISERIAL_TYPES = ("I", "II", "III", "V1", "V2")


@dataclass(frozen=True)
class BlockInstance:
    """A placed block: vertices[k] is the global vertex of template vertex k+1."""

    type: str
    vertices: tuple

    @property
    def template(self):
        return TEMPLATES[self.type]

    @property
    def arrows(self):
        t = self.template
        return tuple((self.vertices[s - 1], self.vertices[t_ - 1]) for s, t_ in t.arrows)

    @property
    def bullets(self):
        return frozenset(self.vertices[v - 1] for v in self.template.bullets)

    @property
    def outlets(self):
        return tuple(self.vertices[v - 1] for v in self.template.outlets)


@dataclass(frozen=True)
class BlockDecomposition:
    n: int
    blocks: tuple

    def arrow_counter(self):
        c = Counter()
        for b in self.blocks:
            c.update(b.arrows)
        return c

    def bullet_vertices(self):
        out = set()
        for b in self.blocks:
            out |= b.bullets
        return out


def _template_quiver(name):
    t = TEMPLATES[name]
    return qv.from_arrows(t.n, t.arrows, tame_mode=False)


# ---------------------------------------------------------------------------
# glueing

def _parse_entry(entry):
    if isinstance(entry, dict):
        name = entry.get("type")
        outlets = entry.get("outlets", [])
        bullets = entry.get("bullets", [])
    else:
        name = entry[0]
        outlets = entry[1] if len(entry) > 1 else []
        bullets = entry[2] if len(entry) > 2 else []
    if name not in TEMPLATES:
        raise ParseError("unknown block type %r" % (name,))
    t = TEMPLATES[name]
    if len(outlets) != len(t.outlets):
        raise ParseError(
            "block %s needs %d outlet labels, got %d" % (name, len(t.outlets), len(outlets))
        )
    if bullets and len(bullets) != len(t.bullets):
        raise ParseError(
            "block %s needs %d bullet labels, got %d" % (name, len(t.bullets), len(bullets))
        )
    return name, list(outlets), list(bullets)


def glue_blocks(spec):
    """Assemble blocks along shared outlet labels.

    spec: iterable of dicts {"type": ..., "outlets": [...], "bullets": [...]}
    or tuples (type, outlets[, bullets]).  Every outlet label must be used
    exactly twice, by two distinct blocks; bullet labels (optional) must be
    globally unique.  Returns (Quiver, BlockDecomposition).
    """
    label_vertex = {}
    used_labels = set()
    outlet_blocks = {}
    nverts = 0
    placed = []

    def fresh():
        nonlocal nverts
        nverts += 1
        return nverts

    for bi, entry in enumerate(spec):
        name, outlet_labels, bullet_labels = _parse_entry(entry)
        t = TEMPLATES[name]
        outlet_of = dict(zip(t.outlets, outlet_labels))
        bullet_of = dict(zip(sorted(t.bullets), bullet_labels))
        mapping = []
        for v in range(1, t.n + 1):
            if v in outlet_of:
                label = outlet_of[v]
                outlet_blocks.setdefault(label, []).append(bi)
                if label not in label_vertex:
                    label_vertex[label] = fresh()
                    used_labels.add(label)
                mapping.append(label_vertex[label])
            else:
                if v in bullet_of:
                    label = bullet_of[v]
                    if label in used_labels:
                        raise DuplicateBullet("bullet label %r reused" % (label,))
                    used_labels.add(label)
                mapping.append(fresh())
        placed.append(BlockInstance(name, tuple(mapping)))

    for label, blocks in outlet_blocks.items():
        if len(blocks) == 1:
            raise DanglingOutlet("outlet label %r used only once" % (label,))
        if len(blocks) > 2:
            raise OverGlued("outlet label %r used %d times" % (label, len(blocks)))
        if blocks[0] == blocks[1]:
            raise OverGlued("outlet label %r glued within one block" % (label,))

    arrows = []
    for b in placed:
        arrows.extend(b.arrows)
    quiver = qv.from_arrows(nverts, arrows)
    return quiver, BlockDecomposition(nverts, tuple(placed))


# ---------------------------------------------------------------------------
# exact-cover decomposition

def _candidates(q, allowed):
    """Deduplicated placed blocks matching the quiver, in deterministic order."""
    seen = set()
    out = []
    for name in CATALOG_ORDER:
        if name not in allowed:
            continue
        t = TEMPLATES[name]
        spec = PatternSpec(template=_template_quiver(name), closed=t.bullets)
        for m in find_pattern(q, spec):
            inst = BlockInstance(name, m)
            key = (name, tuple(sorted(inst.arrows)), inst.bullets)
            if key in seen:
                continue
            seen.add(key)
            out.append(inst)
    return out


def decompose_into_blocks(q, allowed, exhaustive=False):
    """Partition the quiver's arrows into placed blocks from the allowed set.

    Each vertex must end up as the closed vertex of exactly one block or the
    shared outlet of exactly two blocks.  Returns the first decomposition in
    search order (or None); with exhaustive=True, the list of all of them.
    """
    allowed = frozenset(allowed)
    remaining = Counter()
    for s, t, m in q.arrows():
        remaining[(s, t)] = m
    cands = _candidates(q, allowed)
    by_arrow = {}
    for c in cands:
        for a in set(c.arrows):
            by_arrow.setdefault(a, []).append(c)

    bullet_at = set()
    outlet_count = Counter()
    chosen = []
    solutions = []

    def roles_final_ok():
        for v in range(1, q.n + 1):
            if v in bullet_at:
                continue
            if outlet_count[v] != 2:
                return False
        return True

    def place_ok(c):
        counts = Counter(c.arrows)
        for a, k in counts.items():
            if remaining[a] < k:
                return False
        for v in c.bullets:
            if v in bullet_at or outlet_count[v]:
                return False
        for v in c.outlets:
            if v in bullet_at or outlet_count[v] >= 2:
                return False
        return True

    def search():
        pivot = None
        for a in sorted(remaining):
            if remaining[a] > 0:
                pivot = a
                break
        if pivot is None:
            if roles_final_ok():
                solutions.append(BlockDecomposition(q.n, tuple(chosen)))
            return bool(solutions) and not exhaustive
        for c in by_arrow.get(pivot, ()):
            if not place_ok(c):
                continue
            for a in c.arrows:
                remaining[a] -= 1
            bullet_at.update(c.bullets)
            for v in c.outlets:
                outlet_count[v] += 1
            chosen.append(c)
            done = search()
            chosen.pop()
            for a in c.arrows:
                remaining[a] += 1
            bullet_at.difference_update(c.bullets)
            for v in c.outlets:
                outlet_count[v] -= 1
            if done:
                return True
        return False

    search()
    if exhaustive:
        return solutions
    return solutions[0] if solutions else None


def recognize_gwsa_gabriel(q):
    """Exact cover against the full block catalog, or None."""
    if not qv.is_connected(q):
        return None
    return decompose_into_blocks(q, CATALOG_ORDER)


# ---------------------------------------------------------------------------
# the arrow permutations f and g on 2-regular glueings of blocks I-III

@dataclass(frozen=True)
class TriangulationStructure:
    """Arrow copies are (source, target, copy_index) triples."""

    quiver: Quiver
    decomposition: BlockDecomposition
    arrows: tuple
    f: dict = field(compare=False)
    g: dict = field(compare=False)


def _assign_copies(dec):
    """Per-block arrow copies, deterministic in block and template order."""
    counter = Counter()
    out = []
    for b in dec.blocks:
        copies = []
        for a in b.arrows:
            copies.append((a[0], a[1], counter[a]))
            counter[a] += 1
        out.append(copies)
    return out


def triangulation_structure(q):
    """The permutation f for a 2-regular glueing of blocks I-III, or None.

    f fixes every loop block, cycles each triangle, and on a self-folded
    triangle (block II) sends loop -> outgoing -> incoming -> loop.  g is
    f followed by the swap of the two arrows leaving each source.
    """
    if not qv.is_two_regular(q):
        return None
    dec = decompose_into_blocks(q, TRIANGULATION_TYPES)
    if dec is None:
        return None
    per_block = _assign_copies(dec)
    f = {}
    for b, copies in zip(dec.blocks, per_block):
        if b.type == "I":
            f[copies[0]] = copies[0]
        else:
            # templates list arrows so that each arrow starts where the
            # previous one ends: cycle them
            for k, a in enumerate(copies):
                f[a] = copies[(k + 1) % len(copies)]
    arrows = tuple(sorted(f))
    by_source = {}
    for a in arrows:
        by_source.setdefault(a[0], []).append(a)
    bar = {}
    for outs in by_source.values():
        bar[outs[0]] = outs[1]
        bar[outs[1]] = outs[0]
    g = {a: bar[f[a]] for a in arrows}
    return TriangulationStructure(q, dec, arrows, f, g)


def g_orbits(ts):
    """Orbits of g, each a tuple starting at its lex-least arrow copy."""
    seen = set()
    orbits = []
    for a in ts.arrows:
        if a in seen:
            continue
        orbit = []
        cur = a
        while cur not in seen:
            seen.add(cur)
            orbit.append(cur)
            cur = ts.g[cur]
        orbits.append(tuple(orbit))
    return orbits


def _orbit_weights(ts, weights):
    """Validate caller-supplied weights; one positive weight per g-orbit."""
    out = []
    for orbit in g_orbits(ts):
        vals = {weights[a] for a in orbit if a in weights}
        if len(vals) != 1:
            raise WeightNotOrbitConstant(
                "orbit of %s needs exactly one weight, got %r" % (orbit[0], sorted(vals))
            )
        m = vals.pop()
        if m * len(orbit) < 2:
            raise WeightTooSmall(
                "orbit of %s has weight %d and length %d" % (orbit[0], m, len(orbit))
            )
        out.append((orbit, m))
    return out


def virtual_arrows(ts, weights):
    """Arrow copies whose weight times orbit length equals 2."""
    out = set()
    for orbit, m in _orbit_weights(ts, weights):
        if m * len(orbit) == 2:
            out.update(orbit)
    return out


def gabriel_quiver_of(ts, weights):
    """The quiver with the virtual arrow copies removed."""
    drop = Counter()
    for s, t, _ in virtual_arrows(ts, weights):
        drop[(s, t)] += 1
    q = ts.quiver
    rows = [list(r) for r in q.mult]
    for (s, t), k in drop.items():
        rows[s - 1][t - 1] -= k
    return qv.validate_quiver(rows)


# ---------------------------------------------------------------------------
# mutation rewrites

def _edit(q, remove, add):
    rows = [list(r) for r in q.mult]
    for s, t in remove:
        if rows[s - 1][t - 1] < 1:
            raise NoMatchingPattern("missing arrow (%d, %d)" % (s, t))
        rows[s - 1][t - 1] -= 1
    for s, t in add:
        rows[s - 1][t - 1] += 1
    return qv.validate_quiver(rows)


def _mutate_one_vertex(q, v):
    """Rewrites at a 1-regular pivot: the four- and five-block exchange.

    With p -> v -> q and the return arrow q -> p present (plus a path
    p -> d -> q), both arrows at v are reversed and q -> p is deleted.
    Without any arrow between p and q (plus a path q -> d -> p), both
    arrows at v are reversed and p -> q is added.  The two rewrites are
    mutually inverse.
    """
    p = next(i for i in range(1, q.n + 1) if q.mult[i - 1][v - 1])
    t = next(j for j in range(1, q.n + 1) if q.mult[v - 1][j - 1])
    if p == t or p == v or t == v:
        raise NoMatchingPattern("pivot %d sits on a 2-cycle or loop" % v)
    others = [d for d in range(1, q.n + 1) if d not in (v, p, t)]
    back = q.has_arrow(t, p)
    fwd = q.has_arrow(p, t)
    if back and not fwd:
        if q.mult[t - 1][p - 1] != 1:
            # a double return arrow is not a catalog occurrence, and the
            # leftover copy would block the inverse rewrite
            raise NoMatchingPattern("pivot %d has a double return arrow" % v)
        if not any(q.has_arrow(p, d) and q.has_arrow(d, t) for d in others):
            raise NoMatchingPattern("no closing path around pivot %d" % v)
        return _edit(q, [(t, p), (p, v), (v, t)], [(v, p), (t, v)])
    if not back and not fwd:
        if not any(q.has_arrow(t, d) and q.has_arrow(d, p) for d in others):
            raise NoMatchingPattern("no closing path around pivot %d" % v)
        return _edit(q, [(p, v), (v, t)], [(v, p), (t, v), (p, t)])
    raise NoMatchingPattern("pivot %d matches no rewrite pattern" % v)


def _mutate_five_down(q, v):
    """Five-vertex block, pivot at a (2,1) closed vertex."""
    t = TEMPLATES["V"]
    spec = PatternSpec(template=_template_quiver("V"), closed=t.bullets)
    for m in find_pattern(q, spec):
        if m[0] == v:
            # the swap (1 3)(2 4) is an automorphism of the template
            m = (m[2], m[3], m[0], m[1], m[4])
        if m[2] != v:
            continue
        y1, y2, x1, x2, e = m
        return _edit(
            q,
            [(e, x2), (e, y2), (x1, e), (x2, x1), (y2, x1)],
            [(x1, x2), (x1, y2), (e, x1)],
        )
    raise NoMatchingPattern("pivot %d matches no rewrite pattern" % v)


def _mutate_five_up(q, v):
    """Five-vertex mirror block, pivot at its (1,2) closed vertex."""
    t = TEMPLATES["V3"]
    spec = PatternSpec(template=_template_quiver("V3"), closed=t.bullets)
    for m in find_pattern(q, spec):
        if m[0] != v:
            continue
        a, p1, p2, b, o = m
        return _edit(
            q,
            [(a, p1), (a, p2), (o, a)],
            [(a, o), (p1, a), (p2, a), (o, p1), (o, p2)],
        )
    raise NoMatchingPattern("pivot %d matches no rewrite pattern" % v)


def mutate_block(q, v):
    """Apply the unique catalog rewrite whose pivot pattern matches at v."""
    if not (1 <= v <= q.n):
        raise VertexOutOfRange(str(v))
    if q.mult[v - 1][v - 1]:
        raise LoopAtPivot(v)
    d = degrees(q, v)
    if d == (1, 1):
        return _mutate_one_vertex(q, v)
    if d == (2, 1):
        return _mutate_five_down(q, v)
    if d == (1, 2):
        return _mutate_five_up(q, v)
    raise NoMatchingPattern("pivot %d has degrees %r" % (v, tuple(d)))


# ---------------------------------------------------------------------------
# classification cross-check

@dataclass(frozen=True)
class TheoremReport:
    n: int
    mode: str
    results: tuple  # (quiver, decomposition-or-None) pairs

    @property
    def all_passed(self):
        return all(dec is not None for _, dec in self.results)

    def summary(self):
        ok = sum(1 for _, dec in self.results if dec is not None)
        return "%d/%d quivers decompose into catalog blocks" % (ok, len(self.results))


def verify_main_theorem(n, mode="tsp4"):
    """Recognize every classified quiver as a glueing of catalog blocks."""
    from . import reconstruction

    survivors = reconstruction.classify(n, mode=mode).quivers
    results = tuple((q, recognize_gwsa_gabriel(q)) for q in survivors)
    return TheoremReport(n, mode, results)


# ---------------------------------------------------------------------------
# serialization

def blocks_from_json(text):
    """Parse a glueing spec: {"blocks": [{"type": ..., "outlets": [...]}]}."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("invalid JSON: %s" % exc)
    if not isinstance(payload, dict) or not isinstance(payload.get("blocks"), list):
        raise ParseError("expected an object with a 'blocks' list")
    return payload["blocks"]


def decomposition_to_json(dec):
    payload = {
        "n": dec.n,
        "blocks": [
            {
                "type": b.type,
                "vertices": list(b.vertices),
                "arrows": [list(a) for a in b.arrows],
                "bullets": sorted(b.bullets),
                "outlets": list(b.outlets),
            }
            for b in dec.blocks
        ],
    }
    return json.dumps(payload, separators=(", ", ": "))
