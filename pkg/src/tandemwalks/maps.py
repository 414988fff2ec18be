"""Rooted planar maps, plane bipolar orientations, and transversal structures.

Maps are stored as half-edge rotation systems.  Half-edges come in pairs
(2e, 2e+1) for edge e, so twin(h) = h ^ 1.  nxt[h] is the half-edge after h
in counterclockwise order around its origin vertex.  Faces are derived
orbits of h -> nxt[twin(h)]; the face of h lies to the RIGHT of h, inner
faces are traversed clockwise and the outer face counterclockwise.  The
root half-edge of a bipolar orientation is the leftmost outgoing edge at
the source S (the first edge of the left outer boundary), and the outer
face is the face of twin(root).

Edge directions are stored as one flag per edge: orientation[e] is True
when half-edge 2e is the outgoing half at its origin (the edge points from
origin[2e] to origin[2e+1]).
"""

from __future__ import annotations

from collections import deque
from functools import cmp_to_key
from math import isqrt
from typing import NamedTuple, Optional, Sequence


class InternalConsistencyError(RuntimeError):
    """Two independent computations of the same property disagree."""


class Cyclic(ValueError):
    """The orientation contains a directed cycle."""


class MultipleSources(ValueError):
    """The orientation has a source other than the declared one."""


class MultipleSinks(ValueError):
    """The orientation has a sink other than the declared one."""


class PoleMisplaced(ValueError):
    """S/N are not where the rooting conventions require them."""


class LateralCornerViolation(ValueError):
    """A non-pole vertex does not have exactly two lateral corners."""

    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} does not have exactly two lateral corners")


class ExtremalCornerViolation(ValueError):
    """A face does not have exactly one source and one sink corner."""

    def __init__(self, face_half: int):
        self.face_half = face_half
        super().__init__(
            f"face of half-edge {face_half} does not have exactly two extremal corners"
        )


class NotSimple(ValueError):
    """The map has a loop or a multiple edge."""


class OuterNotQuad(ValueError):
    """The outer face is not a simple 4-cycle."""


class T1Violation(ValueError):
    """An outer vertex has a wrongly colored or directed inner edge."""

    def __init__(self, vertex: int, reason: str = ""):
        self.vertex = vertex
        super().__init__(f"outer vertex {vertex}: {reason}" if reason else f"vertex {vertex}")


class T2Violation(ValueError):
    """An inner vertex breaks the four-group clockwise pattern."""

    def __init__(self, vertex: int, reason: str = ""):
        self.vertex = vertex
        super().__init__(f"inner vertex {vertex}: {reason}" if reason else f"vertex {vertex}")


class NotAPoset(ValueError):
    """The bipolar orientation has a transitive edge."""


class InvalidDecoration(ValueError):
    """Decoration data does not describe valid transversal edges."""


class FaceType(NamedTuple):
    """Type (i, j) of a face: lateral path lengths minus one."""

    i: int
    j: int

    @property
    def degree(self) -> int:
        return self.i + self.j + 2


class PlanarMap:
    """A connected rooted map of genus 0 given by its rotation system.

    The constructor checks the combinatorial invariants: twin pairing via
    h ^ 1, nxt a permutation whose orbits are exactly the vertices,
    connectivity, at least one edge, and the Euler relation (genus 0).
    Instances are immutable by convention; derived structures (faces,
    rotation inverses) are computed once and cached.
    """

    def __init__(self, n_vertices: int, nxt: Sequence[int], origin: Sequence[int], root: int):
        nxt = tuple(nxt)
        origin = tuple(origin)
        n = len(nxt)
        if n == 0 or n % 2 != 0:
            raise ValueError("a map needs an even, positive number of half-edges")
        if len(origin) != n:
            raise ValueError("nxt and origin must have the same length")
        if not (0 <= root < n):
            raise ValueError("root out of range")
        if sorted(nxt) != list(range(n)):
            raise ValueError("nxt is not a permutation of the half-edges")
        for h in range(n):
            if not (0 <= origin[h] < n_vertices):
                raise ValueError(f"origin of half-edge {h} out of range")
            if origin[nxt[h]] != origin[h]:
                raise ValueError(f"nxt moves half-edge {h} to another vertex")
        # each vertex must be a single rotation orbit
        seen_vertex = [False] * n_vertices
        seen_half = [False] * n
        orbits = 0
        for h in range(n):
            if seen_half[h]:
                continue
            orbits += 1
            v = origin[h]
            if seen_vertex[v]:
                raise ValueError(f"vertex {v} has a split rotation orbit")
            seen_vertex[v] = True
            g = h
            while not seen_half[g]:
                seen_half[g] = True
                g = nxt[g]
        if orbits != n_vertices:
            raise ValueError("isolated vertices are not allowed")
        # connectivity over nxt and twin
        reached = [False] * n
        stack = [0]
        while stack:
            h = stack.pop()
            if reached[h]:
                continue
            reached[h] = True
            stack.append(nxt[h])
            stack.append(h ^ 1)
        if not all(reached):
            raise ValueError("the map is not connected")
        self.n_vertices = n_vertices
        self.nxt = nxt
        self.origin = origin
        self.root = root
        self._faces = None
        self._face_of = None
        self._prev = None
        self._vertex_halves = None
        if self.n_vertices - self.n_edges + len(self.faces()) != 2:
            raise ValueError("the rotation system does not have genus 0")

    @property
    def n_half_edges(self) -> int:
        return len(self.nxt)

    @property
    def n_edges(self) -> int:
        return len(self.nxt) // 2

    @staticmethod
    def twin(h: int) -> int:
        return h ^ 1

    def prev(self, h: int) -> int:
        """Inverse rotation: the half-edge g with nxt[g] == h."""
        if self._prev is None:
            p = [0] * len(self.nxt)
            for g, t in enumerate(self.nxt):
                p[t] = g
            self._prev = p
        return self._prev[h]

    def head(self, h: int) -> int:
        return self.origin[h ^ 1]

    def face_next(self, h: int) -> int:
        return self.nxt[h ^ 1]

    def faces(self) -> tuple:
        """All face orbits, each a tuple of half-edges starting at its minimum."""
        if self._faces is None:
            n = len(self.nxt)
            face_of = [-1] * n
            faces = []
            for h in range(n):
                if face_of[h] >= 0:
                    continue
                orbit = []
                g = h
                while face_of[g] < 0:
                    face_of[g] = len(faces)
                    orbit.append(g)
                    g = self.nxt[g ^ 1]
                faces.append(tuple(orbit))
            self._faces = tuple(faces)
            self._face_of = face_of
        return self._faces

    def face_of(self, h: int) -> int:
        self.faces()
        return self._face_of[h]

    def face_orbit(self, h: int) -> tuple:
        return self.faces()[self.face_of(h)]

    def outer_face(self) -> int:
        """Index of the outer face (the face of twin(root))."""
        return self.face_of(self.root ^ 1)

    def vertex_halves(self, v: int) -> tuple:
        """The rotation orbit at v, starting from its minimal half-edge."""
        if self._vertex_halves is None:
            first = [-1] * self.n_vertices
            for h in range(len(self.nxt)):
                if first[self.origin[h]] < 0:
                    first[self.origin[h]] = h
            out = []
            for w in range(self.n_vertices):
                h0 = first[w]
                orbit = [h0]
                g = self.nxt[h0]
                while g != h0:
                    orbit.append(g)
                    g = self.nxt[g]
                out.append(tuple(orbit))
            self._vertex_halves = tuple(out)
        return self._vertex_halves[v]

    def degree(self, v: int) -> int:
        return len(self.vertex_halves(v))

    def canonical_half_map(self) -> list:
        """Old-to-new half-edge renumbering by breadth-first root traversal."""
        seen = [False] * len(self.nxt)
        order = []
        q = deque([self.root])
        while q:
            h = q.popleft()
            if seen[h]:
                continue
            seen[h] = True
            order.append(h)
            q.append(self.nxt[h])
            q.append(h ^ 1)
        half_map = [-1] * len(self.nxt)
        k = 0
        for h in order:
            if half_map[h] < 0:
                half_map[h] = 2 * k
                half_map[h ^ 1] = 2 * k + 1
                k += 1
        return half_map

    def relabeled(self, half_map: Sequence[int]):
        """Rebuild under a half-edge renumbering (new ids must pair twins).

        Returns (map, vertex_map) with vertex ids renumbered by first
        appearance along the new half-edge order.
        """
        n = len(self.nxt)
        inv = [-1] * n
        for old, new in enumerate(half_map):
            inv[new] = old
        vmap = [-1] * self.n_vertices
        nv = 0
        new_origin = [0] * n
        for new in range(n):
            v = self.origin[inv[new]]
            if vmap[v] < 0:
                vmap[v] = nv
                nv += 1
            new_origin[new] = vmap[v]
        new_nxt = [0] * n
        for old in range(n):
            new_nxt[half_map[old]] = half_map[self.nxt[old]]
        m = PlanarMap(self.n_vertices, new_nxt, new_origin, half_map[self.root])
        return m, vmap


def _angle_cmp(a, b):
    """Counterclockwise comparison of direction vectors from the +x axis."""
    ha = 0 if (a[1] > 0 or (a[1] == 0 and a[0] > 0)) else 1
    hb = 0 if (b[1] > 0 or (b[1] == 0 and b[0] > 0)) else 1
    if ha != hb:
        return -1 if ha < hb else 1
    cross = a[0] * b[1] - a[1] * b[0]
    if cross > 0:
        return -1
    if cross < 0:
        return 1
    return 0


def map_from_coords(coords: Sequence[tuple], edges: Sequence[tuple], root_edge: int):
    """Build a map from straight-line segment data.

    coords[v] is an exact integer point per vertex; edges are (tail, head)
    pairs, each drawn as the straight segment between its endpoints (so no
    two edges may overlap in direction at a shared vertex).  Rotations come
    from exact counterclockwise angular sorting.  Edge e gets half-edges
    2e (at tail) and 2e+1 (at head); all orientation flags are True.  The
    root is the tail half of edges[root_edge].

    Returns (map, orientation).
    """
    n = len(coords)
    incident = [[] for _ in range(n)]
    origin = [0] * (2 * len(edges))
    for e, (u, w) in enumerate(edges):
        origin[2 * e] = u
        origin[2 * e + 1] = w
        incident[u].append(2 * e)
        incident[w].append(2 * e + 1)
    nxt = [0] * (2 * len(edges))
    for v in range(n):
        if not incident[v]:
            raise ValueError(f"vertex {v} has no edges")
        x0, y0 = coords[v]

        def direction(h):
            x1, y1 = coords[origin[h ^ 1]]
            d = (x1 - x0, y1 - y0)
            if d == (0, 0):
                raise ValueError("zero-length edge")
            return d

        ordered = sorted(incident[v], key=cmp_to_key(lambda a, b: _angle_cmp(direction(a), direction(b))))
        for k, h in enumerate(ordered):
            nxt[h] = ordered[(k + 1) % len(ordered)]
    m = PlanarMap(n, nxt, origin, 2 * root_edge)
    return m, tuple(True for _ in edges)


# --- JSON ---------------------------------------------------------------


def map_to_json(m: PlanarMap, orientation=None, colors=None) -> dict:
    data = {
        "vertices": m.n_vertices,
        "half_edges": [
            {"twin": h ^ 1, "next": m.nxt[h], "origin": m.origin[h]}
            for h in range(m.n_half_edges)
        ],
        "root": m.root,
        "orientation": [bool(b) for b in orientation]
        if orientation is not None
        else [True] * m.n_edges,
    }
    if colors is not None:
        data["colors"] = list(colors)
    return data


def map_from_json(data: dict):
    """Load a map; foreign twin involutions are renumbered to the h^1 pairing.

    Returns (map, orientation, colors) with colors possibly None.
    """
    hes = data["half_edges"]
    n = len(hes)
    twin = [he["twin"] for he in hes]
    for h in range(n):
        if not (0 <= twin[h] < n) or twin[h] == h or twin[twin[h]] != h:
            raise ValueError("twin is not a fixed-point-free involution")
    remap = [-1] * n
    k = 0
    for h in range(n):
        if remap[h] < 0:
            remap[h] = 2 * k
            remap[twin[h]] = 2 * k + 1
            k += 1
    nxt = [0] * n
    origin = [0] * n
    for h in range(n):
        nxt[remap[h]] = remap[hes[h]["next"]]
        origin[remap[h]] = hes[h]["origin"]
    m = PlanarMap(data["vertices"], nxt, origin, remap[data["root"]])
    raw_orient = data.get("orientation")
    orientation = None
    if raw_orient is not None:
        if len(raw_orient) != n // 2:
            raise ValueError("orientation must have one flag per edge")
        orientation = [True] * (n // 2)
        for old_e in range(n // 2):
            new_h = remap[2 * old_e]
            # the old forward half 2e is outgoing iff flag; translate to new pairing
            out_at_new = bool(raw_orient[old_e])
            if new_h % 2 == 1:
                new_h ^= 1
                out_at_new = not out_at_new
            orientation[new_h // 2] = out_at_new
        orientation = tuple(orientation)
    colors = data.get("colors")
    if colors is not None:
        if len(colors) != n // 2:
            raise ValueError("colors must have one entry per edge")
        new_colors = [None] * (n // 2)
        for old_e in range(n // 2):
            new_colors[remap[2 * old_e] // 2] = colors[old_e]
        colors = tuple(new_colors)
    return m, orientation, colors


# --- bipolar orientations ------------------------------------------------


class BipolarMap:
    """A plane bipolar orientation; build through validate_bipolar."""

    def __init__(self, m: PlanarMap, orientation, S: int, N: int):
        self.map = m
        self.orientation = tuple(bool(b) for b in orientation)
        if len(self.orientation) != m.n_edges:
            raise ValueError("orientation must have one flag per edge")
        self.S = S
        self.N = N

    def is_out(self, h: int) -> bool:
        """True when h is the outgoing half at its origin."""
        return self.orientation[h >> 1] == (h % 2 == 0)

    def edge_tail(self, e: int) -> int:
        return self.map.origin[2 * e if self.orientation[e] else 2 * e + 1]

    def edge_head(self, e: int) -> int:
        return self.map.origin[2 * e + 1 if self.orientation[e] else 2 * e]

    def out_half(self, e: int) -> int:
        """The half-edge of e sitting at its tail."""
        return 2 * e if self.orientation[e] else 2 * e + 1

    def rightmost_in(self, v: int) -> int:
        """The ingoing half-edge at v directly before the outgoing block.

        At a non-pole vertex the rotation reads (outs, then ins) in
        counterclockwise order, so this is the unique ingoing h whose nxt is
        outgoing.
        """
        found = None
        for h in self.map.vertex_halves(v):
            if not self.is_out(h) and self.is_out(self.map.nxt[h]):
                if found is not None:
                    raise InternalConsistencyError(f"vertex {v} has two in->out corners")
                found = h
        if found is None:
            raise InternalConsistencyError(f"vertex {v} has no in->out corner")
        return found

    def leftmost_in(self, v: int) -> int:
        found = None
        for h in self.map.vertex_halves(v):
            if not self.is_out(h) and self.is_out(self.map.prev(h)):
                if found is not None:
                    raise InternalConsistencyError(f"vertex {v} has two out->in corners")
                found = h
        if found is None:
            raise InternalConsistencyError(f"vertex {v} has no out->in corner")
        return found

    def rightmost_out(self, v: int) -> int:
        return self.map.nxt[self.rightmost_in(v)]

    def leftmost_out(self, v: int) -> int:
        return self.map.prev(self.leftmost_in(v))

    # -- faces ------------------------------------------------------------

    def _face_corners(self, orbit):
        """Positions of the source and sink corners along a face orbit.

        The corner at index t sits between twin(orbit[t]) and orbit[t+1]
        around their common vertex; it is extremal when both are outgoing
        (source corner) or both ingoing (sink corner).
        """
        L = len(orbit)
        srcs = []
        snks = []
        for t in range(L):
            a = self.is_out(orbit[t] ^ 1)
            b = self.is_out(orbit[(t + 1) % L])
            if a and b:
                srcs.append(t)
            elif not a and not b:
                snks.append(t)
        return srcs, snks

    def face_type(self, face_half: int) -> FaceType:
        """Type of the face containing face_half (works for inner and outer)."""
        orbit = self.map.face_orbit(face_half)
        srcs, snks = self._face_corners(orbit)
        if len(srcs) != 1 or len(snks) != 1:
            raise InternalConsistencyError("face without exactly two extremal corners")
        L = len(orbit)
        d1 = (snks[0] - srcs[0]) % L
        if self.map.face_of(face_half) == self.map.outer_face():
            return FaceType(L - d1 - 1, d1 - 1)
        return FaceType(d1 - 1, L - d1 - 1)

    def face_paths(self, face_half: int):
        """Lateral paths of a face as half-edge lists in flow direction.

        Returns (bottom_vertex, top_vertex, left, right) where left/right
        list the half-edges of the lateral paths bottom to top, each half
        being the outgoing half of its edge.
        """
        orbit = self.map.face_orbit(face_half)
        srcs, snks = self._face_corners(orbit)
        if len(srcs) != 1 or len(snks) != 1:
            raise InternalConsistencyError("face without exactly two extremal corners")
        L = len(orbit)
        t0, t1 = srcs[0], snks[0]
        seg = []
        t = t0
        while t != t1:
            t = (t + 1) % L
            seg.append(orbit[t])
        other = []
        t = t1
        while t != t0:
            t = (t + 1) % L
            other.append(orbit[t])
        other = [h ^ 1 for h in reversed(other)]
        bottom = self.map.origin[seg[0]] if seg else None
        if self.map.face_of(face_half) == self.map.outer_face():
            left, right = other, seg
        else:
            left, right = seg, other
        bottom = self.map.origin[left[0]]
        top = self.map.head(left[-1])
        return bottom, top, left, right

    def outer_type(self) -> FaceType:
        """The (a, b) type of the outer face (left and right boundary lengths minus one)."""
        return self.face_type(self.map.root ^ 1)

    def inner_face_halves(self) -> list:
        """Minimal half-edge of each inner face, in increasing order."""
        outer = self.map.outer_face()
        return [orbit[0] for k, orbit in enumerate(self.map.faces()) if k != outer]

    def pole_type(self) -> tuple:
        """(deg(S) - 1, deg(N) - 1)."""
        return (self.map.degree(self.S) - 1, self.map.degree(self.N) - 1)

    # -- canonical form ----------------------------------------------------

    def canonical(self) -> "BipolarMap":
        half_map = self.map.canonical_half_map()
        m, vmap = self.map.relabeled(half_map)
        inv = [-1] * len(half_map)
        for old, new in enumerate(half_map):
            inv[new] = old
        orientation = tuple(self.is_out(inv[2 * e]) for e in range(m.n_edges))
        return BipolarMap(m, orientation, vmap[self.S], vmap[self.N])

    def canonical_key(self) -> tuple:
        c = self.canonical()
        return (c.map.n_vertices, c.map.nxt, c.map.origin, c.orientation)

    def __eq__(self, other):
        if not isinstance(other, BipolarMap):
            return NotImplemented
        return self.canonical_key() == other.canonical_key()

    def __hash__(self):
        return hash(self.canonical_key())

    def to_json(self) -> dict:
        return map_to_json(self.map, self.orientation)


def _edges_on_cycles(m: PlanarMap, bip: BipolarMap) -> list:
    """Edge ids lying on some directed cycle (head reaches tail back)."""
    adj = [[] for _ in range(m.n_vertices)]
    for e in range(m.n_edges):
        adj[bip.edge_tail(e)].append((e, bip.edge_head(e)))
    out = []
    for e in range(m.n_edges):
        tail, headv = bip.edge_tail(e), bip.edge_head(e)
        seen = {headv}
        stack = [headv]
        found = tail == headv
        while stack and not found:
            v = stack.pop()
            for _, w in adj[v]:
                if w == tail:
                    found = True
                    break
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if found:
            out.append(e)
    return out


def validate_bipolar(m: PlanarMap, orientation, S: int, N: int) -> BipolarMap:
    """Check that the orientation is bipolar with poles S, N and return it.

    Two independent routes are evaluated: the global one (acyclic, S the
    unique source, N the unique sink) and the local one (every non-pole
    vertex has exactly two lateral corners, every face has exactly one
    source and one sink corner, S all outgoing, N all ingoing).  They must
    agree, or InternalConsistencyError is raised.  Violations are reported
    by the first witnessing half-edge; ties break toward the global errors.

    The rooting conventions are also enforced: the root must be the
    leftmost outgoing edge at S (so the root corner is the outer source
    corner) and N must be incident to the outer face.
    """
    bip = BipolarMap(m, orientation, S, N)
    if S == N or not (0 <= S < m.n_vertices) or not (0 <= N < m.n_vertices):
        raise PoleMisplaced("S and N must be distinct vertices of the map")

    violations = []  # (witness half-edge, precedence rank, exception)

    indeg = [0] * m.n_vertices
    outdeg = [0] * m.n_vertices
    for e in range(m.n_edges):
        outdeg[bip.edge_tail(e)] += 1
        indeg[bip.edge_head(e)] += 1
    sources = [v for v in range(m.n_vertices) if indeg[v] == 0]
    sinks = [v for v in range(m.n_vertices) if outdeg[v] == 0]

    cyc_edges = _edges_on_cycles(m, bip)
    acyclic = not cyc_edges
    if cyc_edges:
        violations.append((2 * cyc_edges[0], 0, Cyclic(f"edge {cyc_edges[0]} lies on a directed cycle")))
    extra_sources = [v for v in sources if v != S]
    if extra_sources and len(sources) > 1:
        w = min(min(bip.map.vertex_halves(v)) for v in extra_sources)
        violations.append((w, 1, MultipleSources(f"sources: {sorted(sources)}")))
    extra_sinks = [v for v in sinks if v != N]
    if extra_sinks and len(sinks) > 1:
        w = min(min(bip.map.vertex_halves(v)) for v in extra_sinks)
        violations.append((w, 2, MultipleSinks(f"sinks: {sorted(sinks)}")))

    # pole and rooting placement
    pole_ok = True
    for h in m.vertex_halves(S):
        if not bip.is_out(h):
            violations.append((h, 3, PoleMisplaced(f"S = {S} has an ingoing edge")))
            pole_ok = False
            break
    for h in m.vertex_halves(N):
        if bip.is_out(h):
            violations.append((h, 3, PoleMisplaced(f"N = {N} has an outgoing edge")))
            pole_ok = False
            break
    if m.origin[m.root] != S:
        violations.append((m.root, 3, PoleMisplaced("the root must start at S")))
        pole_ok = False
    outer_orbit = m.face_orbit(m.root ^ 1)
    if N not in {m.origin[h] for h in outer_orbit}:
        violations.append((min(outer_orbit), 3, PoleMisplaced("N must lie on the outer face")))
        pole_ok = False

    # (B): lateral corners of non-pole vertices
    lateral_ok = True
    for v in range(m.n_vertices):
        if v in (S, N):
            continue
        halves = m.vertex_halves(v)
        lateral = 0
        for k, h in enumerate(halves):
            if bip.is_out(h) != bip.is_out(halves[(k + 1) % len(halves)]):
                lateral += 1
        if lateral != 2:
            violations.append((min(halves), 4, LateralCornerViolation(v)))
            lateral_ok = False

    # (B'): extremal corners of every face
    extremal_ok = True
    for orbit in m.faces():
        srcs, snks = bip._face_corners(orbit)
        if len(srcs) != 1 or len(snks) != 1:
            violations.append((min(orbit), 5, ExtremalCornerViolation(orbit[0])))
            extremal_ok = False

    global_ok = acyclic and sources == [S] and sinks == [N]
    local_ok = lateral_ok and extremal_ok and pole_ok
    if violations:
        # both routes saw trouble; they must not contradict each other
        if pole_ok and global_ok != (lateral_ok and extremal_ok):
            raise InternalConsistencyError(
                f"bipolar routes disagree: global={global_ok} local={lateral_ok and extremal_ok}"
            )
        violations.sort(key=lambda t: (t[0], t[1]))
        raise violations[0][2]
    if not (global_ok and local_ok):
        raise InternalConsistencyError("bipolar routes disagree with no recorded violation")

    # the outer source corner must be the root corner
    srcs, _ = bip._face_corners(outer_orbit)
    if outer_orbit[srcs[0]] != (m.root ^ 1):
        raise PoleMisplaced("the root must be the leftmost outgoing edge at S")
    return bip


def is_poset(b: BipolarMap) -> bool:
    """True when no edge is transitive (head reachable around it).

    Computed independently from edge reachability and from the absence of
    inner faces with a zero type entry; the two answers must agree.
    """
    m = b.map
    adj = [[] for _ in range(m.n_vertices)]
    for e in range(m.n_edges):
        adj[b.edge_tail(e)].append((e, b.edge_head(e)))
    transitive = False
    for e in range(m.n_edges):
        tail, headv = b.edge_tail(e), b.edge_head(e)
        seen = set()
        stack = [tail]
        while stack and not transitive:
            v = stack.pop()
            for f, w in adj[v]:
                if f == e:
                    continue
                if w == headv:
                    transitive = True
                    break
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if transitive:
            break
    by_types = any(
        0 in b.face_type(h) for h in b.inner_face_halves()
    )
    if by_types != transitive:
        raise InternalConsistencyError(
            f"poset routes disagree: reachability={transitive} face-types={by_types}"
        )
    return not transitive


# --- decorated bipolar orientations ---------------------------------------


class DecoratedBipolar:
    """A bipolar orientation with transversal decoration data per inner face.

    decorations maps the minimal half-edge of each inner face to a tuple of
    (l, r) index pairs into the face's lateral paths.  For kind V the pairs
    index edges (0-based from the bottom) and follow the staircase from
    (0, 0) to the face type with unit steps.  For kind T the base must be a
    poset and the pairs index interior vertices (1-based), starting at
    (1, 1) and stepping by (1,0), (0,1) or (1,1) up to the face type.
    """

    def __init__(self, base: BipolarMap, kind: str, decorations: dict):
        if kind not in ("V", "T"):
            raise ValueError(f"unknown decoration kind: {kind!r}")
        if kind == "T" and not is_poset(base):
            raise NotAPoset("T decorations require a poset base")
        inner = base.inner_face_halves()
        keys = set(decorations)
        if keys != set(inner):
            raise InvalidDecoration(
                f"decoration keys {sorted(keys)} do not match inner faces {inner}"
            )
        normalized = {}
        for fh in inner:
            ftype = base.face_type(fh)
            pairs = tuple(tuple(p) for p in decorations[fh])
            _check_staircase(kind, ftype, pairs)
            normalized[fh] = pairs
        self.base = base
        self.kind = kind
        self.decorations = normalized

    def canonical(self) -> "DecoratedBipolar":
        half_map = self.base.map.canonical_half_map()
        cbase = self.base.canonical()
        remapped = {}
        for fh, pairs in self.decorations.items():
            new_orbit = cbase.map.face_orbit(half_map[fh])
            remapped[min(new_orbit)] = pairs
        return DecoratedBipolar(cbase, self.kind, remapped)

    def canonical_key(self) -> tuple:
        c = self.canonical()
        dec = tuple(sorted(c.decorations.items()))
        return c.base.canonical_key() + (c.kind, dec)

    def __eq__(self, other):
        if not isinstance(other, DecoratedBipolar):
            return NotImplemented
        return self.canonical_key() == other.canonical_key()

    def __hash__(self):
        return hash(self.canonical_key())


def _check_staircase(kind: str, ftype: FaceType, pairs) -> None:
    i, j = ftype
    if kind == "V":
        if not pairs or pairs[0] != (0, 0) or pairs[-1] != (i, j):
            raise InvalidDecoration(f"V pairs must run from (0,0) to ({i},{j}): {pairs}")
        allowed = ((1, 0), (0, 1))
    else:
        if not pairs or pairs[0] != (1, 1) or pairs[-1] != (i, j):
            raise InvalidDecoration(f"T pairs must run from (1,1) to ({i},{j}): {pairs}")
        allowed = ((1, 0), (0, 1), (1, 1))
    for (a, b), (c, d) in zip(pairs, pairs[1:]):
        if (c - a, d - b) not in allowed:
            raise InvalidDecoration(f"illegal staircase step from ({a},{b}) to ({c},{d})")


# --- transversal structures ------------------------------------------------

RED, BLUE = "red", "blue"


class TransversalStructure:
    """A 4-outer map with a red/blue orientation of its inner edges.

    Build through validate_transversal.  The four outer vertices are read
    off the outer face: the root half-edge goes from S to W, and the outer
    contour visits W, N, E, S clockwise.  colors[e] is "red" or "blue" for
    inner edges and None for the four outer edges; orientation flags for
    outer edges are normalized so the outer cycle forms the two directed
    paths S -> W -> N and S -> E -> N used by the red poset.
    """

    def __init__(self, m: PlanarMap, orientation, colors):
        self.map = m
        orientation = list(orientation)
        colors = list(colors)
        if len(orientation) != m.n_edges or len(colors) != m.n_edges:
            raise ValueError("orientation and colors must have one entry per edge")
        outer_orbit = m.face_orbit(m.root ^ 1)
        if len(outer_orbit) != 4:
            raise OuterNotQuad(f"outer face has degree {len(outer_orbit)}")
        idx = outer_orbit.index(m.root ^ 1)
        outer_orbit = outer_orbit[idx:] + outer_orbit[:idx]
        # outer_orbit = [W->S, S->E, E->N, N->W] as half-edges
        self.S = m.origin[m.root]
        self.W = m.head(m.root)
        self.E = m.head(outer_orbit[1])
        self.N = m.head(outer_orbit[2])
        if len({self.S, self.W, self.E, self.N}) != 4:
            raise OuterNotQuad("outer contour is not a simple 4-cycle")
        self.outer_halves = tuple(outer_orbit)
        outer_edges = {h >> 1 for h in outer_orbit}
        self.outer_edges = outer_edges
        for e in outer_edges:
            colors[e] = None
        # normalize outer orientations: S->W, W->N, S->E, E->N
        for h, tail in (
            (m.root, self.S),
            (outer_orbit[3] ^ 1, self.W),
            (outer_orbit[1], self.S),
            (outer_orbit[2], self.E),
        ):
            orientation[h >> 1] = (h % 2 == 0) if m.origin[h] == tail else None
            if orientation[h >> 1] is None:
                raise InternalConsistencyError("outer contour halves inconsistent")
        self.orientation = tuple(orientation)
        self.colors = tuple(colors)

    def is_out(self, h: int) -> bool:
        return self.orientation[h >> 1] == (h % 2 == 0)

    def color(self, h: int):
        return self.colors[h >> 1]

    def we_type(self) -> tuple:
        return (self.map.degree(self.W) - 2, self.map.degree(self.E) - 2)

    def inner_vertices(self) -> list:
        outer = {self.S, self.W, self.N, self.E}
        return [v for v in range(self.map.n_vertices) if v not in outer]

    def quad_count(self) -> int:
        """Number of quadrangular inner faces."""
        outer = self.map.outer_face()
        return sum(
            1
            for k, orbit in enumerate(self.map.faces())
            if k != outer and len(orbit) == 4
        )

    def canonical(self) -> "TransversalStructure":
        half_map = self.map.canonical_half_map()
        m, vmap = self.map.relabeled(half_map)
        inv = [-1] * len(half_map)
        for old, new in enumerate(half_map):
            inv[new] = old
        orientation = []
        colors = []
        for e in range(m.n_edges):
            old_h = inv[2 * e]
            orientation.append(self.is_out(old_h))
            colors.append(self.colors[old_h >> 1])
        return TransversalStructure(m, orientation, colors)

    def canonical_key(self) -> tuple:
        c = self.canonical()
        return (c.map.n_vertices, c.map.nxt, c.map.origin, c.orientation, c.colors)

    def __eq__(self, other):
        if not isinstance(other, TransversalStructure):
            return NotImplemented
        return self.canonical_key() == other.canonical_key()

    def __hash__(self):
        return hash(self.canonical_key())

    def to_json(self) -> dict:
        return map_to_json(self.map, self.orientation, self.colors)


def validate_transversal(m: PlanarMap, orientation, colors) -> TransversalStructure:
    """Check simplicity, the outer quadrangle, and conditions (T1), (T2).

    Also asserts the guaranteed face shape consequences (all inner faces of
    degree 3 or 4; inner faces at the outer vertices triangular), whose
    failure marks an internal inconsistency rather than bad input.
    """
    x = TransversalStructure(m, orientation, colors)
    seen_pairs = set()
    for e in range(m.n_edges):
        u, w = m.origin[2 * e], m.origin[2 * e + 1]
        if u == w:
            raise NotSimple(f"edge {e} is a loop")
        key = (min(u, w), max(u, w))
        if key in seen_pairs:
            raise NotSimple(f"vertices {key} are joined by two edges")
        seen_pairs.add(key)
    for e in range(m.n_edges):
        if e not in x.outer_edges and x.colors[e] not in (RED, BLUE):
            raise ValueError(f"inner edge {e} must be colored red or blue")

    # (T1) around the outer vertices, ignoring the two outer-cycle edges
    t1_expect = {
        x.W: (True, BLUE, "outgoing blue"),
        x.N: (False, RED, "ingoing red"),
        x.E: (False, BLUE, "ingoing blue"),
        x.S: (True, RED, "outgoing red"),
    }
    for v, (want_out, want_color, label) in t1_expect.items():
        if m.degree(v) == 2:
            raise T1Violation(v, "needs at least one inner edge")
        for h in m.vertex_halves(v):
            if (h >> 1) in x.outer_edges:
                continue
            if x.is_out(h) != want_out or x.color(h) != want_color:
                raise T1Violation(v, f"inner edges must be {label}")

    # (T2) around each inner vertex: clockwise groups
    # outgoing red, outgoing blue, ingoing red, ingoing blue, all non-empty
    pattern = ((True, RED), (True, BLUE), (False, RED), (False, BLUE))
    for v in x.inner_vertices():
        halves = m.vertex_halves(v)
        labels = [(x.is_out(h), x.color(h)) for h in reversed(halves)]  # clockwise
        for lab in set(labels):
            if lab not in pattern:
                raise T2Violation(v, f"unexpected edge kind {lab}")
        starts = [k for k, lab in enumerate(labels) if lab == pattern[0] and labels[k - 1] != pattern[0]]
        ok = False
        if len(starts) == 1:
            rolled = labels[starts[0]:] + labels[:starts[0]]
            idx = 0
            for lab in rolled:
                while idx < 4 and lab != pattern[idx]:
                    idx += 1
                if idx == 4:
                    break
            else:
                ok = len(set(rolled)) == 4
        if not ok:
            raise T2Violation(v, "clockwise order is not four non-empty groups")

    outer_face = m.outer_face()
    outer_vs = {x.S, x.W, x.N, x.E}
    for k, orbit in enumerate(m.faces()):
        if k == outer_face:
            continue
        if len(orbit) not in (3, 4):
            raise InternalConsistencyError(f"inner face of degree {len(orbit)}")
        if len(orbit) == 4 and any(m.origin[h] in outer_vs for h in orbit):
            raise InternalConsistencyError("quadrangular face at an outer vertex")
    return x


def red_poset(x: TransversalStructure) -> BipolarMap:
    """The bipolar poset of red edges plus the outer cycle.

    Keeps the red inner edges and the four outer edges (oriented S->W->N
    and S->E->N), drops the blue edges, and validates the result; the
    validation cannot fail for a valid transversal structure, so failures
    surface as InternalConsistencyError.
    """
    m = x.map
    keep = sorted(
        e for e in range(m.n_edges) if e in x.outer_edges or x.colors[e] == RED
    )
    edge_new = {e: k for k, e in enumerate(keep)}
    half_new = {}
    for e, k in edge_new.items():
        half_new[2 * e] = 2 * k
        half_new[2 * e + 1] = 2 * k + 1
    nxt = [0] * (2 * len(keep))
    origin = [0] * (2 * len(keep))
    for e in keep:
        for old_h in (2 * e, 2 * e + 1):
            g = m.nxt[old_h]
            while (g >> 1) not in edge_new:
                g = m.nxt[g]
            nxt[half_new[old_h]] = half_new[g]
            origin[half_new[old_h]] = m.origin[old_h]
    try:
        sub = PlanarMap(m.n_vertices, nxt, origin, half_new[m.root])
        orientation = tuple(
            x.orientation[e] for e in keep
        )
        bip = validate_bipolar(sub, orientation, x.S, x.N)
        if not is_poset(bip):
            raise InternalConsistencyError("red skeleton is not a poset")
    except (ValueError, InternalConsistencyError) as exc:
        if isinstance(exc, InternalConsistencyError):
            raise
        raise InternalConsistencyError(f"red skeleton rejected: {exc}") from exc
    return bip


# --- grid family ------------------------------------------------------------


def grid_quad_count(n: int) -> int:
    """Quadrangular face count of grid_transversal(n), by the closed formula."""
    if n < 1:
        raise ValueError("n must be >= 1")
    h = isqrt(n)
    k = n - h * h
    if k == 0:
        delta = 1
    elif k <= h:
        delta = 0
    else:
        delta = -1
    return n - 2 * h + delta


def grid_transversal(n: int):
    """The near-grid transversal structure with n inner vertices.

    Takes the h x h grid (h the integer square root of n) with red vertical
    and blue horizontal edges, and grafts the first n - h*h points of the
    surrounding hook (top row left to right, then right column top to
    bottom).  Returns (structure, quad_count); the count is checked against
    the closed formula n - 2h + delta.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    h = isqrt(n)
    k = n - h * h
    m_extra = max(0, k - h - 1)  # points taken from the right column
    big = 4 * h * h

    coords = {}

    def vid(name):
        return coords.setdefault(name, len(coords))

    # inner vertices; grid point (c, r) sits at x=c, y=r
    pos = {}
    for c in range(1, h + 1):
        for r in range(1, h + 1):
            pos[vid(("g", c, r))] = (c, r)
    for c in range(1, min(k, h) + 1):
        pos[vid(("u", c))] = (c, h + 1)
    if k >= h + 1:
        pos[vid(("u", h + 1))] = (h + 1, h + 1)
    for t in range(1, m_extra + 1):
        pos[vid(("v", t))] = (h + 1, h + 1 - t)
    pos[vid("W")] = (-big, h + 1)
    pos[vid("E")] = (big + h, h + 1)
    pos[vid("S")] = (h + 1, -big)
    pos[vid("N")] = (h + 1, big + h)

    W, E, S, N = coords["W"], coords["E"], coords["S"], coords["N"]
    g = lambda c, r: coords[("g", c, r)]
    u = lambda c: coords[("u", c)]

    edges = []
    colors = []

    def add(tail, head, color):
        edges.append((tail, head))
        colors.append(color)

    # grid interior
    for c in range(1, h + 1):
        for r in range(1, h):
            add(g(c, r), g(c, r + 1), RED)
    for c in range(1, h):
        for r in range(1, h + 1):
            add(g(c, r), g(c + 1, r), BLUE)
    # south and west fans
    for c in range(1, h + 1):
        add(S, g(c, 1), RED)
    for r in range(1, h + 1):
        add(W, g(1, r), BLUE)
    if k >= 1:
        add(W, u(1), BLUE)

    n_u = min(k, h)  # top-row points present
    for c in range(1, n_u + 1):
        add(g(c, h), u(c), RED)
        add(u(c), N, RED)
        if c >= 2:
            add(u(c - 1), u(c), BLUE)
    for c in range(n_u + 1, h + 1):
        add(g(c, h), N, RED)

    if k == 0:
        for r in range(1, h + 1):
            add(g(h, r), E, BLUE)
    elif k <= h:
        if k < h:
            add(u(k), g(k + 1, h), BLUE)  # diagonal
            for r in range(1, h + 1):
                add(g(h, r), E, BLUE)
        else:
            add(u(h), E, BLUE)
            for r in range(1, h + 1):
                add(g(h, r), E, BLUE)
    else:
        uc = u(h + 1)
        add(u(h), uc, BLUE)
        add(uc, N, RED)
        add(uc, E, BLUE)
        if m_extra == 0:
            add(g(h, h), uc, RED)  # diagonal
            for r in range(1, h + 1):
                add(g(h, r), E, BLUE)
        else:
            v = lambda t: coords[("v", t)]
            for t in range(1, m_extra + 1):
                add(g(h, h + 1 - t), v(t), BLUE)
                add(v(t), uc if t == 1 else v(t - 1), RED)
                add(v(t), E, BLUE)
            add(g(h, h - m_extra), v(m_extra), RED)  # diagonal
            for r in range(1, h - m_extra + 1):
                add(g(h, r), E, BLUE)
    # outer quadrangle
    root_edge = len(edges)
    add(S, W, None)
    add(W, N, None)
    add(S, E, None)
    add(E, N, None)

    coord_list = [None] * len(coords)
    for name, v_ in coords.items():
        coord_list[v_] = pos[v_]
    m, orientation = map_from_coords(coord_list, edges, root_edge)
    x = validate_transversal(m, orientation, colors)
    quads = x.quad_count()
    if quads != grid_quad_count(n):
        raise InternalConsistencyError(
            f"grid quad count {quads} != formula {grid_quad_count(n)}"
        )
    return x, quads
