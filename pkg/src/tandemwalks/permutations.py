"""Plane permutations, their bipolar posets, and the shared generating tree.

A permutation is plane when the Hasse diagram of the dominance order on its
graph points (i, pi(i)), together with a global minimum and maximum, can be
drawn with non-crossing straight segments.  phi_map builds that diagram as a
bipolar poset and psi_map recovers the permutation from two tree tours, so
the two families grow along the same generating tree: inserting a new
maximal element at an active value on one side matches attaching a new
vertex at an active site on the other, and both follow the label rewriting
rule omega starting from (1, 1).
"""

from __future__ import annotations

from collections import defaultdict

from .maps import (
    BipolarMap,
    InternalConsistencyError,
    NotAPoset,
    PlanarMap,
    is_poset,
    map_from_coords,
    validate_bipolar,
)


class NotPlane(ValueError):
    """The permutation is not plane."""


class InactiveValue(ValueError):
    """Insertion at this value breaks planarity."""


class InactiveVertex(ValueError):
    """The vertex is not an active growth site of the poset."""


class Permutation:
    """A permutation of 1..n in one-line notation."""

    __slots__ = ("values",)

    def __init__(self, values):
        values = tuple(int(v) for v in values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ValueError(f"{values} is not a permutation of 1..{len(values)}")
        object.__setattr__(self, "values", values)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def from_string(cls, text: str) -> "Permutation":
        text = text.strip()
        if "," in text or " " in text:
            parts = text.replace(",", " ").split()
        else:
            parts = list(text)
        return cls(int(p) for p in parts)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return f"Permutation({list(self.values)})"

    def __str__(self):
        if len(self.values) < 10:
            return "".join(str(v) for v in self.values)
        return " ".join(str(v) for v in self.values)


# --- planarity, two ways -----------------------------------------------------


def _plane_by_ascents(values) -> bool:
    """No ascent may see a larger in-gap value before it and a smaller after."""
    n = len(values)
    for b in range(n - 1):
        lo, hi = values[b], values[b + 1]
        if lo > hi:
            continue
        before = [v for v in values[:b] if lo < v < hi]
        after = [v for v in values[b + 2 :] if lo < v < hi]
        if before and after and min(before) < max(after):
            return False
    return True


def _dominance_covers(points):
    """Cover pairs of the dominance order on points with distinct coordinates."""
    covers = []
    for i, p in enumerate(points):
        for j, q in enumerate(points):
            if p[0] < q[0] and p[1] < q[1]:
                between = any(
                    p[0] < r[0] < q[0] and p[1] < r[1] < q[1] for r in points
                )
                if not between:
                    covers.append((i, j))
    return covers


def _orient(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _on_segment(p, q, r):
    return (
        min(p[0], q[0]) <= r[0] <= max(p[0], q[0])
        and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])
    )


def _segments_cross(p1, q1, p2, q2) -> bool:
    """Whether two closed segments meet outside a shared endpoint."""
    shared = {p1, q1} & {p2, q2}
    if shared:
        # touching at a common endpoint is fine unless they overlap further
        (s,) = shared if len(shared) == 1 else (p1,)
        if len(shared) == 2:
            return True
        a = q1 if p1 == s else p1
        b = q2 if p2 == s else p2
        if _orient(s, a, b) == 0 and (_on_segment(s, a, b) or _on_segment(s, b, a)):
            return True
        return False
    d1 = _orient(p2, q2, p1)
    d2 = _orient(p2, q2, q1)
    d3 = _orient(p1, q1, p2)
    d4 = _orient(p1, q1, q2)
    if ((d1 > 0) != (d2 > 0) and d1 != 0 and d2 != 0) and (
        (d3 > 0) != (d4 > 0) and d3 != 0 and d4 != 0
    ):
        return True
    for (p, q, r) in ((p2, q2, p1), (p2, q2, q1), (p1, q1, p2), (p1, q1, q2)):
        if _orient(p, q, r) == 0 and _on_segment(p, q, r):
            return True
    return False


def _plane_by_segments(values) -> bool:
    """The Hasse diagram of the dominance order has no crossing segments."""
    n = len(values)
    points = [(0, 0)] + [(i + 1, v) for i, v in enumerate(values)] + [(n + 1, n + 1)]
    covers = _dominance_covers(points)
    segs = [(points[i], points[j]) for i, j in covers]
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            if _segments_cross(*segs[i], *segs[j]):
                return False
    return True


def is_plane(p: Permutation) -> bool:
    a = _plane_by_ascents(p.values)
    b = _plane_by_segments(p.values)
    if a != b:
        raise InternalConsistencyError(
            f"planarity routes disagree on {p}: ascents={a}, segments={b}"
        )
    return a


# --- phi: permutation to bipolar poset ---------------------------------------


def phi_map(p: Permutation) -> BipolarMap:
    """The dominance Hasse diagram of a plane permutation as a bipolar poset.

    Vertex i (1-based) sits at (i, pi(i)); 0 is the source at the origin and
    n + 1 the sink at (n + 1, n + 1).  The root edge is the cover from the
    source to vertex 1, the steepest outgoing segment.
    """
    if not is_plane(p):
        raise NotPlane(f"{p} contains a forbidden pattern")
    n = len(p)
    coords = [(0, 0)] + [(i + 1, v) for i, v in enumerate(p.values)] + [(n + 1, n + 1)]
    edges = _dominance_covers(coords)
    root_edge = edges.index((0, 1))
    m, orientation = map_from_coords(coords, edges, root_edge)
    bip = validate_bipolar(m, orientation, 0, n + 1)
    if not is_poset(bip):
        raise InternalConsistencyError(f"phi_map({p}) is not a poset")
    return bip


# --- psi: bipolar poset to permutation ---------------------------------------


def _outs_left_to_right(b: BipolarMap, v: int):
    m = b.map
    if v == b.S:
        halves = list(m.vertex_halves(v))
        k = halves.index(m.root)
        halves = halves[k:] + halves[:k]
        return [halves[0]] + list(reversed(halves[1:]))
    outs = []
    h = b.rightmost_out(v)
    while b.is_out(h):
        outs.append(h)
        h = m.nxt[h]
    return list(reversed(outs))


def _tour_ranks(b: BipolarMap, rightmost_tree: bool, left_first: bool):
    """First-visit ranks of the non-pole vertices along a tree contour.

    The tree on V minus the sink takes each vertex's rightmost (or leftmost)
    ingoing edge as parent edge; the contour explores subtrees left to right
    (clockwise) or right to left (counterclockwise).
    """
    m = b.map
    parent_half = {}
    for v in range(m.n_vertices):
        if v in (b.S, b.N):
            continue
        parent_half[v] = b.rightmost_in(v) if rightmost_tree else b.leftmost_in(v)
    rank = {}
    stack = [b.S]
    while stack:
        u = stack.pop()
        if u != b.S:
            rank[u] = len(rank) + 1
        kids = []
        for h in _outs_left_to_right(b, u):
            w = m.head(h)
            if w != b.N and parent_half[w] == (h ^ 1):
                kids.append(w)
        if not left_first:
            kids.reverse()
        stack.extend(reversed(kids))
    return rank


def psi_map(b: BipolarMap) -> Permutation:
    """The plane permutation of a bipolar poset (inverse of phi_map).

    Abscissa of a vertex: first-visit rank on the clockwise contour of the
    rightmost-in tree; ordinate: rank on the counterclockwise contour of the
    leftmost-in tree.
    """
    if not is_poset(b):
        raise NotAPoset("psi_map takes a bipolar poset")
    x = _tour_ranks(b, rightmost_tree=True, left_first=True)
    y = _tour_ranks(b, rightmost_tree=False, left_first=False)
    n = b.map.n_vertices - 2
    values = [0] * n
    for v, xv in x.items():
        values[xv - 1] = y[v]
    return Permutation(values)


def descents(p: Permutation) -> int:
    return sum(1 for a, b in zip(p.values, p.values[1:]) if a > b)


def tree_leaves(b: BipolarMap) -> int:
    """Leaves of the rightmost-in tree on the non-sink vertices."""
    m = b.map
    parents = set()
    non_sink = 0
    for v in range(m.n_vertices):
        if v == b.N:
            continue
        non_sink += 1
        if v != b.S:
            h = b.rightmost_in(v)
            parents.add(m.origin[h ^ 1])
    return non_sink - len(parents)


# --- active values and the permutation side of the generating tree ----------


def active_points(p: Permutation):
    """Values a in 1..n+1 whose insertion keeps the permutation plane.

    Checked two ways: by inserting and retesting, and by scanning for the
    vincular pattern where some earlier value sits between an adjacent
    ascent's ends, which blocks exactly the values in (that value, ascent
    top].
    """
    n = len(p)
    values = p.values
    by_insert = []
    for a in range(1, n + 2):
        child = [(v + 1 if v >= a else v) for v in values] + [a]
        if _plane_by_ascents(child):
            by_insert.append(a)
    blocked = set()
    for b in range(n - 1):
        lo, hi = values[b], values[b + 1]
        if lo > hi:
            continue
        for k in range(b):
            if lo < values[k] < hi:
                blocked.update(range(values[k] + 1, hi + 1))
    by_pattern = [a for a in range(1, n + 2) if a not in blocked]
    if by_insert != by_pattern:
        raise InternalConsistencyError(
            f"active-value routes disagree on {p}: {by_insert} vs {by_pattern}"
        )
    return tuple(by_insert)


def perm_child(p: Permutation, a: int) -> Permutation:
    """Append a new maximal point at value a (an active value)."""
    if a not in active_points(p):
        raise InactiveValue(f"value {a} is not active for {p}")
    return Permutation([(v + 1 if v >= a else v) for v in p.values] + [a])


def perm_parent(p: Permutation) -> Permutation:
    """Remove the last point (inverse of perm_child)."""
    if len(p) <= 1:
        raise ValueError("the one-point permutation is the root")
    last = p.values[-1]
    return Permutation([(v - 1 if v > last else v) for v in p.values[:-1]])


def perm_label(p: Permutation):
    """Generating-tree label (h, k): actives above and not above the last value."""
    acts = active_points(p)
    last = p.values[-1]
    h = sum(1 for a in acts if a > last)
    k = len(acts) - h
    return (h, k)


def perm_children(p: Permutation):
    """Children in downward order (decreasing insertion value)."""
    return [perm_child(p, a) for a in sorted(active_points(p), reverse=True)]


# --- poset side of the generating tree ---------------------------------------


def _sink_ins_left_to_right(b: BipolarMap):
    """Ingoing half-edges at the sink, leftmost to rightmost."""
    m = b.map
    _, _, left, right = b.face_paths(m.root ^ 1)
    leftmost = left[-1] ^ 1
    halves = list(m.vertex_halves(b.N))
    k = halves.index(leftmost)
    return halves[k:] + halves[:k]


def poset_actives(b: BipolarMap):
    """Active vertices of a bipolar poset, split into upper and lower lists.

    Both lists run downward.  Upper: interiors of the left boundaries of the
    faces below the sink, face by face from the left, topmost first, then
    the top-right vertex.  Lower: the right outer boundary strictly below
    the top-right vertex, ending at the source.
    """
    m = b.map
    if m.n_vertices < 3:
        raise ValueError("the poset must have a non-pole vertex")
    if not is_poset(b):
        raise NotAPoset("the generating tree grows bipolar posets")
    ins = _sink_ins_left_to_right(b)
    qs = [m.origin[h ^ 1] for h in ins]
    u = qs[-1]
    upper = []
    for h in ins[:-1]:
        fh = h ^ 1  # the face right of the upward half q_t -> N
        _, _, L, _ = b.face_paths(fh)
        interiors = [m.head(g) for g in L[:-1]]
        upper.extend(reversed(interiors))
    upper.append(u)
    _, _, _, right = b.face_paths(m.root ^ 1)
    boundary = [b.S] + [m.head(h) for h in right]
    if boundary[-2] != u:
        raise InternalConsistencyError("top of the right boundary is not the last quasi-maximal")
    lower = list(reversed(boundary[:-2]))
    return upper, lower


def poset_label(b: BipolarMap):
    upper, lower = poset_actives(b)
    return (len(upper), len(lower))


def _rotations(m: PlanarMap):
    return {v: list(m.vertex_halves(v)) for v in range(m.n_vertices)}


def _rebuild(n_vertices, rotations, origin, orientation, root, S, N):
    nxt = [0] * len(origin)
    for rot in rotations.values():
        for k, h in enumerate(rot):
            nxt[h] = rot[(k + 1) % len(rot)]
    m = PlanarMap(n_vertices, nxt, origin, root)
    try:
        bip = validate_bipolar(m, orientation, S, N)
    except ValueError as exc:
        raise InternalConsistencyError(f"grown map rejected: {exc}") from exc
    if not is_poset(bip):
        raise InternalConsistencyError("grown map is not a poset")
    return bip


def poset_child(b: BipolarMap, v: int) -> BipolarMap:
    """Grow the poset at active vertex v (one new vertex covering the sink)."""
    m = b.map
    upper, lower = poset_actives(b)
    if v not in upper and v not in lower:
        raise InactiveVertex(f"vertex {v} is not active")
    ins = _sink_ins_left_to_right(b)
    qs = [m.origin[h ^ 1] for h in ins]
    origin = list(m.origin)
    orientation = list(b.orientation)
    rot = _rotations(m)
    new_v = m.n_vertices

    def fresh_edge(tail, head):
        h0 = len(origin)
        origin.extend((tail, head))
        orientation.append(True)
        return h0

    if v in qs:
        # redirect the sink edges of q_i .. q_{s+1} onto the new vertex
        i = qs.index(v)
        h_new = fresh_edge(new_v, b.N)
        moved = ins[i:]
        for h in moved:
            origin[h] = new_v
        rot[new_v] = [h_new] + moved
        rot[b.N] = ins[:i] + [h_new ^ 1]
    elif v in upper:
        # v sits inside the left boundary of the face right of q_t's edge;
        # the sink edges strictly right of that face move onto the new vertex
        t = None
        for idx, h in enumerate(ins[:-1]):
            _, _, L, _ = b.face_paths(h ^ 1)
            if v in (m.head(g) for g in L[:-1]):
                t = idx
                break
        if t is None:
            raise InternalConsistencyError("upper-active vertex not found on its face")
        g_new = fresh_edge(v, new_v)
        h_new = fresh_edge(new_v, b.N)
        moved = ins[t + 1 :]
        for h in moved:
            origin[h] = new_v
        d = b.rightmost_in(v)
        k = rot[v].index(d)
        rot[v] = rot[v][: k + 1] + [g_new] + rot[v][k + 1 :]
        rot[new_v] = [h_new, g_new ^ 1] + moved
        rot[b.N] = ins[: t + 1] + [h_new ^ 1]
    else:
        # new rightmost path v -> w -> N
        g_new = fresh_edge(v, new_v)
        h_new = fresh_edge(new_v, b.N)
        anchor = m.root if v == b.S else b.rightmost_in(v)
        k = rot[v].index(anchor)
        rot[v] = rot[v][: k + 1] + [g_new] + rot[v][k + 1 :]
        rot[new_v] = [h_new, g_new ^ 1]
        rot[b.N] = ins + [h_new ^ 1]
    return _rebuild(new_v + 1, rot, origin, orientation, m.root, b.S, b.N)


def poset_parent(b: BipolarMap):
    """Shrink a poset by one vertex (inverse of poset_child).

    Returns (parent, v) with v the active vertex of the parent that grows
    back into b, in the parent's numbering.
    """
    m = b.map
    if m.n_vertices < 4:
        raise ValueError("the three-vertex chain is the root")
    if not is_poset(b):
        raise NotAPoset("the generating tree grows bipolar posets")
    ins = _sink_ins_left_to_right(b)
    alpha = ins[-1] ^ 1  # upward half of the rightmost sink edge
    u2 = m.origin[alpha]
    u2_halves = list(m.vertex_halves(u2))
    if sum(1 for h in u2_halves if b.is_out(h)) != 1:
        raise InternalConsistencyError("top-right vertex with several outgoing edges")
    v_used = m.origin[b.leftmost_in(u2) ^ 1]
    drop_edges = {alpha >> 1}
    if m.face_of(alpha ^ 1) != m.outer_face() and b.face_type(alpha ^ 1).j == 1:
        # the lone edge under e' on that face turns transitive: remove it too
        _, _, _, right = b.face_paths(alpha ^ 1)
        drop_edges.add(right[0] >> 1)

    # merge u2 into the sink: its ins replace alpha's twin in the sink rotation
    rot_ins = list(_sink_ins_left_to_right(b))
    pos = rot_ins.index(alpha ^ 1)
    u2_rot = list(m.vertex_halves(u2))
    ka = u2_rot.index(alpha)
    u2_rot = u2_rot[ka + 1 :] + u2_rot[:ka]  # u2's ins, left to right
    sink_rot = rot_ins[:pos] + u2_rot + rot_ins[pos + 1 :]

    rot = _rotations(m)
    rot[b.N] = sink_rot
    del rot[u2]
    keep_edges = [e for e in range(m.n_edges) if e not in drop_edges]
    edge_new = {e: k for k, e in enumerate(keep_edges)}
    vmap = {}
    for v in range(m.n_vertices):
        if v != u2:
            vmap[v] = len(vmap)
    origin = [0] * (2 * len(keep_edges))
    nxt = [0] * (2 * len(keep_edges))

    def half_new(h):
        return 2 * edge_new[h >> 1] + (h & 1)

    for v, halves in rot.items():
        kept = [h for h in halves if (h >> 1) in edge_new]
        if not kept:
            raise InternalConsistencyError("vertex stripped of all edges")
        for idx, h in enumerate(kept):
            g = kept[(idx + 1) % len(kept)]
            nxt[half_new(h)] = half_new(g)
            origin[half_new(h)] = vmap[v]
    orientation = [b.orientation[e] for e in keep_edges]
    pm = PlanarMap(m.n_vertices - 1, nxt, origin, half_new(m.root))
    try:
        parent = validate_bipolar(pm, orientation, vmap[b.S], vmap[b.N])
    except ValueError as exc:
        raise InternalConsistencyError(f"shrunk map rejected: {exc}") from exc
    if not is_poset(parent):
        raise InternalConsistencyError("shrunk map is not a poset")
    return parent, vmap[v_used]


def poset_children(b: BipolarMap):
    upper, lower = poset_actives(b)
    return [poset_child(b, v) for v in upper + lower]


# --- the label dynamics alone -------------------------------------------------


def omega_counts(levels: int):
    """Label multiplicities per level under the rewriting rule omega.

    Level 1 is the root label (1, 1); a label (h, k) produces
    (1, k+1), ..., (h, k+1) and (h+1, k), (h+2, k-1), ..., (h+k, 1).
    """
    if levels < 1:
        raise ValueError("levels must be at least 1")
    out = [{(1, 1): 1}]
    for _ in range(levels - 1):
        nxt = defaultdict(int)
        for (h, k), c in out[-1].items():
            for t in range(1, h + 1):
                nxt[(t, k + 1)] += c
            for t in range(1, k + 1):
                nxt[(h + t, k + 1 - t)] += c
        out.append(dict(nxt))
    return out
