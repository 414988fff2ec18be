"""Bijections between oriented planar maps and quadrant tandem walks.

The core pair is kmsw_forward / kmsw_backward: a plane bipolar orientation
with outer type (a, b) and E edges corresponds to a tandem walk of length
E - 1 from (0, a) to (b, 0).  Forward visits the edges in successor order
starting from the root edge: the left-top edge of an inner face hands over
to that face's right-bottom edge and emits the face's type as a face step,
and every other edge hands over to the leftmost outgoing edge at its head
and emits an SE step.  Backward glues the map back from a single edge,
maintaining the right outer boundary.

On top of it sit the decorated correspondences: phi_V / psi_V exchange
V-decorated bipolar orientations with bipolar posets (counted by vertices)
and phi_T / psi_T exchange T-decorated bipolar posets with transversal
structures.  The composite helpers chain them with attachment words to map
posets to V-walks and transversal structures to T-walks.
"""

from __future__ import annotations

from .maps import (
    BipolarMap,
    DecoratedBipolar,
    FaceType,
    InternalConsistencyError,
    NotAPoset,
    PlanarMap,
    TransversalStructure,
    is_poset,
    validate_bipolar,
    validate_transversal,
    RED,
    BLUE,
)
from .walks import (
    SE,
    AttachedMismatch,
    FaceStep,
    SEStep,
    TandemWalk,
    validate_walk,
)


class InvalidWalk(ValueError):
    """The walk is not a quadrant tandem walk from (0, a) to (b, 0)."""


# --- forward: map to walk ---------------------------------------------------


def kmsw_forward_detailed(b: BipolarMap):
    """Tandem walk of a bipolar orientation plus step provenance.

    Returns (walk, info) where info[t] is ("SE", vertex) for SE steps (the
    non-pole vertex the step crosses) and ("face", min_half) for face steps
    (the inner face the step discovers).

    The walk reads off the successor order of the edges, starting from the
    root edge: when the current edge is the top-left edge of the inner face
    on its right, that face is discovered and the successor is the
    bottom-right edge of the face; otherwise the walk crosses the head of
    the current edge and the successor is its leftmost outgoing edge.
    """
    m = b.map
    outer = m.outer_face()
    steps = []
    info = []
    h = b.out_half(m.root >> 1)
    for _ in range(m.n_edges - 1):
        f = m.face_of(h)
        if f != outer:
            _, _, left, right = b.face_paths(h)
            if h == left[-1]:
                t = b.face_type(h)
                steps.append(FaceStep(t.i, t.j))
                info.append(("face", min(m.face_orbit(h))))
                h = right[0]
                continue
        v = b.edge_head(h >> 1)
        steps.append(SE)
        info.append(("SE", v))
        h = b.leftmost_out(v)
    a, bb = b.outer_type()
    walk = TandemWalk((0, a), steps)
    if walk.end != (bb, 0) or walk.length != m.n_edges - 1:
        raise InternalConsistencyError(
            f"forward walk ends at {walk.end}, expected ({bb}, 0) "
            f"with length {m.n_edges - 1}"
        )
    return walk, info


def kmsw_forward(b: BipolarMap) -> TandemWalk:
    return kmsw_forward_detailed(b)[0]


# --- backward: walk to map ---------------------------------------------------


def _insert_after(nxt, prv, anchor, h):
    b = nxt[anchor]
    nxt[anchor] = h
    nxt[h] = b
    prv[h] = anchor
    prv[b] = h


def kmsw_backward_detailed(walk: TandemWalk):
    """Glue the bipolar orientation of a tandem walk, with step provenance.

    Returns (bipolar, info) shaped like kmsw_forward_detailed's info: the
    t-th walk step yields the vertex (SE) or inner face (face step) it
    transports to.
    """
    if walk.walk_class not in ("plain", "E"):
        raise InvalidWalk(f"cannot glue a walk of class {walk.walk_class!r}")
    try:
        end = validate_walk(walk)
    except ValueError as exc:
        raise InvalidWalk(str(exc)) from exc
    if walk.start[0] != 0:
        raise InvalidWalk(f"the walk must start on the y-axis, not at {walk.start}")
    if end[1] != 0:
        raise InvalidWalk(f"the walk must end on the x-axis, not at {end}")
    a = walk.start[1]

    # half-edge arrays of the growing map; edge e is directed
    # origin[2e] -> origin[2e+1] throughout
    nxt = [0, 1]
    prv = [0, 1]
    origin = [0, 1]
    beta = [0]  # upward halves of the right boundary, bottom to top
    cur = 0
    n_vertices = 2
    raw_info = []

    def new_edge(tail, head):
        h0 = len(nxt)
        nxt.extend((h0, h0 + 1))
        prv.extend((h0, h0 + 1))
        origin.extend((tail, head))
        return h0

    for step in walk.steps:
        if step is SE:
            if cur + 1 < len(beta):
                cur += 1
                raw_info.append(("SE", origin[beta[cur]]))
            else:
                top_in = beta[-1] ^ 1
                top = origin[top_in]
                w = n_vertices
                n_vertices += 1
                h0 = new_edge(top, w)
                _insert_after(nxt, prv, top_in, h0)
                beta.append(h0)
                cur += 1
                raw_info.append(("SE", top))
        else:
            i, j = step.i, step.j
            g_b = beta[cur - i]
            bottom = origin[g_b]
            top_in = beta[cur] ^ 1
            top = origin[top_in]
            new_halves = []
            prev_v = bottom
            prev_in = None
            for t in range(j + 1):
                head_v = top if t == j else n_vertices
                if t != j:
                    n_vertices += 1
                h0 = new_edge(prev_v, head_v)
                if t == 0:
                    _insert_after(nxt, prv, prv[g_b], h0)
                else:
                    _insert_after(nxt, prv, prev_in, h0)
                if t == j:
                    _insert_after(nxt, prv, top_in, h0 ^ 1)
                prev_v = head_v
                prev_in = h0 ^ 1
                new_halves.append(h0)
            beta[cur - i : cur + 1] = new_halves
            cur -= i
            raw_info.append(("face", g_b))

    if cur != len(beta) - 1:
        raise InternalConsistencyError("gluing finished below the boundary top")
    sink = origin[beta[-1] ^ 1]
    m = PlanarMap(n_vertices, nxt, origin, 0)
    try:
        bip = validate_bipolar(m, [True] * m.n_edges, 0, sink)
    except ValueError as exc:
        raise InternalConsistencyError(f"glued map is not bipolar: {exc}") from exc
    if bip.outer_type() != (a, end[0]):
        raise InternalConsistencyError(
            f"glued outer type {bip.outer_type()} != ({a}, {end[0]})"
        )
    info = [
        (kind, val if kind == "SE" else min(m.face_orbit(val)))
        for kind, val in raw_info
    ]
    return bip, info


def kmsw_backward(walk: TandemWalk) -> BipolarMap:
    return kmsw_backward_detailed(walk)[0]


# --- face words --------------------------------------------------------------


def face_walk_decode(kind: str, ftype: FaceType, letters):
    """Decoration pairs of a face from its attachment word.

    V words over {W, N} walk edge index pairs from (0, 0); T words start
    with the marked *NW and walk interior vertex index pairs from (1, 1).
    """
    i, j = ftype.i, ftype.j
    if kind == "V":
        c = (0, 0)
        pairs = [c]
        for idx, letter in enumerate(letters):
            if letter == "W":
                c = (c[0] + 1, c[1])
            elif letter == "N":
                c = (c[0], c[1] + 1)
            else:
                raise AttachedMismatch(idx, f"letter {letter!r} is not W or N")
            pairs.append(c)
    elif kind == "T":
        if not letters or letters[0] != "*NW":
            raise AttachedMismatch(0, "a T word must start with the marked *NW")
        c = (1, 1)
        pairs = [c]
        for idx, letter in enumerate(letters[1:], start=1):
            if letter == "W":
                c = (c[0] + 1, c[1])
            elif letter == "N":
                c = (c[0], c[1] + 1)
            elif letter == "NW":
                c = (c[0] + 1, c[1] + 1)
            else:
                raise AttachedMismatch(idx, f"letter {letter!r} is not W, N or NW")
            pairs.append(c)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    if pairs[-1] != (i, j):
        raise AttachedMismatch(len(letters), f"word reaches {pairs[-1]}, face type is ({i},{j})")
    return tuple(pairs)


def face_walk_encode(kind: str, ftype: FaceType, pairs):
    """Attachment word of a face from its decoration pairs (inverse of decode)."""
    i, j = ftype.i, ftype.j
    pairs = tuple(tuple(p) for p in pairs)
    start = (0, 0) if kind == "V" else (1, 1)
    if kind not in ("V", "T"):
        raise ValueError(f"unknown kind {kind!r}")
    if not pairs or pairs[0] != start:
        raise AttachedMismatch(0, f"pairs must start at {start}")
    if pairs[-1] != (i, j):
        raise AttachedMismatch(len(pairs) - 1, f"pairs must end at ({i},{j})")
    letters = ["*NW"] if kind == "T" else []
    for idx, ((x0, y0), (x1, y1)) in enumerate(zip(pairs, pairs[1:]), start=1):
        d = (x1 - x0, y1 - y0)
        if d == (1, 0):
            letters.append("W")
        elif d == (0, 1):
            letters.append("N")
        elif d == (1, 1) and kind == "T":
            letters.append("NW")
        else:
            raise AttachedMismatch(idx, f"illegal step {d} in pairs")
    return tuple(letters)


# --- phi_V / psi_V: V-decorated bipolar <-> bipolar poset -------------------


def phi_V(d: DecoratedBipolar) -> BipolarMap:
    """The bipolar poset of a V-decorated bipolar orientation.

    The poset has one vertex per base edge (its white subdivision point)
    plus new poles; its edges are the decoration edges of each inner face
    together with pole edges along the outer boundary.  Vertex w of base
    edge e keeps the id e; the poles get ids E and E + 1.
    """
    if d.kind != "V":
        raise ValueError("phi_V takes a V-decorated bipolar orientation")
    B = d.base
    m = B.map
    E = m.n_edges
    S_P, N_P = E, E + 1
    _, _, left_halves, right_halves = B.face_paths(m.root ^ 1)
    left_edges = [h >> 1 for h in left_halves]
    right_edges = [h >> 1 for h in right_halves]

    p_edges = []
    east = {e: [] for e in range(E)}  # (sort key, half at the white)
    west = {e: [] for e in range(E)}
    for fh in B.inner_face_halves():
        _, _, L, R = B.face_paths(fh)
        Le = [h >> 1 for h in L]
        Re = [h >> 1 for h in R]
        for (l, r) in d.decorations[fh]:
            pe = len(p_edges)
            p_edges.append((Le[l], Re[r]))
            east[Le[l]].append((r, 2 * pe))
            west[Re[r]].append((-l, 2 * pe + 1))
    s_half_of = {}
    n_half_of = {}
    for e in right_edges:
        pe = len(p_edges)
        p_edges.append((e, N_P))
        east[e].append((0, 2 * pe))
        n_half_of[e] = 2 * pe + 1
    for e in left_edges:
        pe = len(p_edges)
        p_edges.append((S_P, e))
        west[e].append((0, 2 * pe + 1))
        s_half_of[e] = 2 * pe

    rotations = {v: [] for v in range(E + 2)}
    for e in range(E):
        rotations[e] = [h for _, h in sorted(east[e])] + [h for _, h in sorted(west[e])]
    rotations[S_P] = [s_half_of[e] for e in left_edges]
    rotations[N_P] = [n_half_of[e] for e in reversed(right_edges)]

    n_halves = 2 * len(p_edges)
    nxt = [0] * n_halves
    origin = [0] * n_halves
    for pe, (tail, head) in enumerate(p_edges):
        origin[2 * pe] = tail
        origin[2 * pe + 1] = head
    for v, rot in rotations.items():
        for k, h in enumerate(rot):
            nxt[h] = rot[(k + 1) % len(rot)]
    root = s_half_of[left_edges[-1]]
    try:
        pm = PlanarMap(E + 2, nxt, origin, root)
        bip = validate_bipolar(pm, [True] * pm.n_edges, S_P, N_P)
    except ValueError as exc:
        raise InternalConsistencyError(f"phi_V output rejected: {exc}") from exc
    if not is_poset(bip):
        raise InternalConsistencyError("phi_V output is not a poset")
    return bip


def psi_V_detailed(P: BipolarMap):
    """Base bipolar orientation and decorations of a poset, with transport.

    Returns (decorated, vertex_of_face, edge_of_white): the non-pole
    vertices of P (the whites) turn into base edges, the inner faces of P
    into non-pole base vertices.
    """
    m = P.map
    if m.n_vertices < 3:
        raise ValueError("the poset must have at least one non-pole vertex")
    if not is_poset(P):
        raise NotAPoset("psi_V takes a bipolar poset")
    outer = m.outer_face()
    inner_faces = [k for k in range(len(m.faces())) if k != outer]
    v_of_face = {f: idx for idx, f in enumerate(inner_faces)}
    K = len(inner_faces)
    S_B, N_B = K, K + 1

    whites = [v for v in range(m.n_vertices) if v not in (P.S, P.N)]
    edge_of_white = {w: e for e, w in enumerate(whites)}
    tails = []
    heads = []
    for w in whites:
        f_tail = m.face_of(P.rightmost_out(w))
        f_head = m.face_of(P.leftmost_in(w))
        tails.append(S_B if f_tail == outer else v_of_face[f_tail])
        heads.append(N_B if f_head == outer else v_of_face[f_head])

    rotations = {}
    for f in inner_faces:
        fh = m.faces()[f][0]
        _, _, L, R = P.face_paths(fh)
        l_int = [m.head(h) for h in L[:-1]]
        r_int = [m.head(h) for h in R[:-1]]
        rot = [2 * edge_of_white[w] for w in reversed(l_int)]
        rot += [2 * edge_of_white[w] + 1 for w in r_int]
        rotations[v_of_face[f]] = rot
    _, _, left_halves, right_halves = P.face_paths(m.root ^ 1)
    left_int = [m.head(h) for h in left_halves[:-1]]
    right_int = [m.head(h) for h in right_halves[:-1]]
    rotations[S_B] = [2 * edge_of_white[w] for w in reversed(right_int)]
    rotations[N_B] = [2 * edge_of_white[w] + 1 for w in left_int]

    n_halves = 2 * len(whites)
    nxt = [0] * n_halves
    origin = [0] * n_halves
    for e in range(len(whites)):
        origin[2 * e] = tails[e]
        origin[2 * e + 1] = heads[e]
    for v, rot in rotations.items():
        if not rot:
            raise InternalConsistencyError(f"base vertex {v} has no edges")
        for k, h in enumerate(rot):
            nxt[h] = rot[(k + 1) % len(rot)]
    w_r = m.head(m.nxt[m.root])
    root = 2 * edge_of_white[w_r]
    try:
        bm = PlanarMap(K + 2, nxt, origin, root)
        base = validate_bipolar(bm, [True] * bm.n_edges, S_B, N_B)
    except ValueError as exc:
        raise InternalConsistencyError(f"psi_V base rejected: {exc}") from exc

    # recover the decoration pairs of each base inner face
    face_L = {}
    face_R = {}
    for fh in base.inner_face_halves():
        _, _, L, R = base.face_paths(fh)
        face_L[fh] = [h >> 1 for h in L]
        face_R[fh] = [h >> 1 for h in R]
    decorations = {fh: [] for fh in base.inner_face_halves()}
    for pe in range(m.n_edges):
        w, w2 = P.edge_tail(pe), P.edge_head(pe)
        if w in (P.S, P.N) or w2 in (P.S, P.N):
            continue
        e, e2 = edge_of_white[w], edge_of_white[w2]
        g = bm.face_of(2 * e)
        g2 = bm.face_of((2 * e2) ^ 1)
        if g != g2:
            raise InternalConsistencyError("decoration edge faces disagree")
        fh = bm.faces()[g][0]
        decorations[fh].append((face_L[fh].index(e), face_R[fh].index(e2)))
    decorations = {fh: tuple(sorted(ps)) for fh, ps in decorations.items()}
    return DecoratedBipolar(base, "V", decorations), v_of_face, edge_of_white


def psi_V(P: BipolarMap) -> DecoratedBipolar:
    return psi_V_detailed(P)[0]


# --- phi_T / psi_T: T-decorated poset <-> transversal structure -------------


def phi_T(d: DecoratedBipolar) -> TransversalStructure:
    """The transversal structure of a T-decorated bipolar poset.

    Base edges become the red edges; each decoration pair becomes a blue
    edge between interior vertices of the face's lateral paths; W and E are
    added with blue fans to the interiors of the outer boundaries.
    """
    if d.kind != "T":
        raise ValueError("phi_T takes a T-decorated bipolar poset")
    B = d.base
    m = B.map
    if m.n_vertices < 3:
        raise ValueError("the base must have a non-pole vertex")
    E_B = m.n_edges
    W = m.n_vertices
    Ev = m.n_vertices + 1
    n_halves = 2 * E_B
    nxt = list(m.nxt)
    origin = list(m.origin)
    orientation = list(B.orientation)
    colors = [RED] * E_B

    def new_edge(tail, head, color):
        nonlocal n_halves
        h0 = n_halves
        n_halves += 2
        nxt.extend((h0, h0 + 1))
        origin.extend((tail, head))
        orientation.append(True)
        colors.append(color)
        return h0

    def splice_after(anchor, group):
        tail_next = nxt[anchor]
        cur = anchor
        for h in group:
            nxt[cur] = h
            cur = h
        nxt[cur] = tail_next

    def set_cycle(group):
        for k, h in enumerate(group):
            nxt[h] = group[(k + 1) % len(group)]

    _, _, left_halves, right_halves = B.face_paths(m.root ^ 1)
    left_int = [m.head(h) for h in left_halves[:-1]]
    right_int = [m.head(h) for h in right_halves[:-1]]

    east_gap = {v: [] for v in range(m.n_vertices)}  # (key, out half)
    west_gap = {v: [] for v in range(m.n_vertices)}
    for fh in B.inner_face_halves():
        _, _, L, R = B.face_paths(fh)
        l_int = [m.head(h) for h in L[:-1]]
        r_int = [m.head(h) for h in R[:-1]]
        for (l, r) in d.decorations[fh]:
            u, u2 = l_int[l - 1], r_int[r - 1]
            h0 = new_edge(u, u2, BLUE)
            east_gap[u].append((r, h0))
            west_gap[u2].append((-l, h0 ^ 1))
    w_rot = []
    for u in left_int:
        h0 = new_edge(W, u, BLUE)
        west_gap[u].append((0, h0 ^ 1))
        w_rot.append(h0)
    e_rot = []
    for u in right_int:
        h0 = new_edge(u, Ev, BLUE)
        east_gap[u].append((0, h0))
        e_rot.append(h0 ^ 1)
    h_sw = new_edge(B.S, W, None)
    h_wn = new_edge(W, B.N, None)
    h_se = new_edge(B.S, Ev, None)
    h_en = new_edge(Ev, B.N, None)

    for v in range(m.n_vertices):
        if v == B.S or v == B.N:
            continue
        if east_gap[v]:
            splice_after(B.rightmost_in(v), [h for _, h in sorted(east_gap[v])])
        if west_gap[v]:
            splice_after(B.leftmost_out(v), [h for _, h in sorted(west_gap[v])])
    # S: counterclockwise ... leftmost out, S->W, S->E, rightmost out ...
    splice_after(m.root, [h_sw, h_se])
    # N: counterclockwise ... rightmost in, N->E, N->W, leftmost in ...
    top_right_in = right_halves[-1] ^ 1
    top_left_in = left_halves[-1] ^ 1
    if m.nxt[top_right_in] != top_left_in:
        raise InternalConsistencyError("sink corner halves out of order")
    splice_after(top_right_in, [h_en ^ 1, h_wn ^ 1])
    set_cycle([h_sw ^ 1] + w_rot + [h_wn])
    set_cycle([h_en] + list(reversed(e_rot)) + [h_se ^ 1])

    try:
        xm = PlanarMap(m.n_vertices + 2, nxt, origin, h_sw)
        x = validate_transversal(xm, orientation, colors)
    except ValueError as exc:
        raise InternalConsistencyError(f"phi_T output rejected: {exc}") from exc
    return x


def psi_T_detailed(x: TransversalStructure):
    """Base poset and blue decorations of a transversal structure.

    Removes W and E with all their edges; the red edges form the base, the
    surviving blue edges decorate its inner faces.  Returns (decorated,
    vertex_map) with vertex_map[old] the base id of each kept vertex.
    """
    m = x.map
    drop = {x.W, x.E}
    vmap = {}
    for v in range(m.n_vertices):
        if v not in drop:
            vmap[v] = len(vmap)
    kept = [
        e
        for e in range(m.n_edges)
        if m.origin[2 * e] not in drop and m.origin[2 * e + 1] not in drop
    ]
    reds = [e for e in kept if x.colors[e] == RED]
    blues = [e for e in kept if x.colors[e] == BLUE]
    edge_new = {e: k for k, e in enumerate(reds)}

    def half_new(h):
        return 2 * edge_new[h >> 1] + (h & 1)

    nxt = [0] * (2 * len(reds))
    origin = [0] * (2 * len(reds))
    for e in reds:
        for h in (2 * e, 2 * e + 1):
            g = m.nxt[h]
            while (g >> 1) not in edge_new:
                g = m.nxt[g]
            nxt[half_new(h)] = half_new(g)
            origin[half_new(h)] = vmap[m.origin[h]]
    # the root of the base is the red edge just before S->W counterclockwise
    g = m.root
    while True:
        g = m.prev(g)
        if (g >> 1) in edge_new:
            break
    root = half_new(g)
    orientation = [x.orientation[e] for e in reds]
    try:
        bm = PlanarMap(len(vmap), nxt, origin, root)
        base = validate_bipolar(bm, orientation, vmap[x.S], vmap[x.N])
    except ValueError as exc:
        raise InternalConsistencyError(f"psi_T base rejected: {exc}") from exc
    if not is_poset(base):
        raise InternalConsistencyError("psi_T base is not a poset")

    face_l_int = {}
    face_r_int = {}
    for fh in base.inner_face_halves():
        _, _, L, R = base.face_paths(fh)
        face_l_int[fh] = [bm.origin[h ^ 1] for h in L[:-1]]
        face_r_int[fh] = [bm.origin[h ^ 1] for h in R[:-1]]
    decorations = {fh: [] for fh in base.inner_face_halves()}
    for e in blues:
        tail = 2 * e if x.orientation[e] else 2 * e + 1
        u = vmap[m.origin[tail]]
        u2 = vmap[m.origin[tail ^ 1]]
        g1 = bm.face_of(base.rightmost_out(u))
        g2 = bm.face_of(base.leftmost_in(u2))
        if g1 != g2:
            raise InternalConsistencyError("blue edge faces disagree")
        fh = bm.faces()[g1][0]
        decorations[fh].append(
            (face_l_int[fh].index(u) + 1, face_r_int[fh].index(u2) + 1)
        )
    decorations = {fh: tuple(sorted(ps)) for fh, ps in decorations.items()}
    return DecoratedBipolar(base, "T", decorations), vmap


def psi_T(x: TransversalStructure) -> DecoratedBipolar:
    return psi_T_detailed(x)[0]


# --- composites ---------------------------------------------------------------


def poset_to_v_walk(P: BipolarMap) -> TandemWalk:
    """The V-walk of a bipolar poset: base walk plus attachment words."""
    d = psi_V(P)
    walk, info = kmsw_forward_detailed(d.base)
    steps = _attach(walk, info, d, "V")
    return TandemWalk(walk.start, steps, "V")


def v_walk_to_poset(walk: TandemWalk) -> BipolarMap:
    if walk.walk_class != "V":
        raise InvalidWalk("expected a walk of class V")
    validate_walk(walk)
    d = _detach(walk, "V")
    return phi_V(d)


def transversal_to_t_walk(x: TransversalStructure) -> TandemWalk:
    """The T-walk of a transversal structure: red base walk plus blue words."""
    d = psi_T(x)
    walk, info = kmsw_forward_detailed(d.base)
    steps = _attach(walk, info, d, "T")
    return TandemWalk(walk.start, steps, "T")


def t_walk_to_transversal(walk: TandemWalk) -> TransversalStructure:
    if walk.walk_class != "T":
        raise InvalidWalk("expected a walk of class T")
    validate_walk(walk)
    d = _detach(walk, "T")
    return phi_T(d)


def _attach(walk, info, d: DecoratedBipolar, kind: str):
    steps = []
    for step, (what, ref) in zip(walk.steps, info):
        if what == "SE":
            steps.append(SE)
        else:
            ftype = d.base.face_type(ref)
            letters = face_walk_encode(kind, ftype, d.decorations[ref])
            steps.append(FaceStep(step.i, step.j, letters))
    return tuple(steps)


def _detach(walk: TandemWalk, kind: str) -> DecoratedBipolar:
    plain = TandemWalk(
        walk.start,
        tuple(s if s is SE else FaceStep(s.i, s.j) for s in walk.steps),
    )
    base, info = kmsw_backward_detailed(plain)
    decorations = {}
    for step, (what, ref) in zip(walk.steps, info):
        if what == "face":
            ftype = base.face_type(ref)
            decorations[ref] = face_walk_decode(kind, ftype, step.attached)
    return DecoratedBipolar(base, kind, decorations)
