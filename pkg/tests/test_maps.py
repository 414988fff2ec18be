"""Half-edge maps, bipolar orientations, transversal structures, validators."""

import pytest

from tandemwalks import (
    BipolarMap,
    Cyclic,
    ExtremalCornerViolation,
    InvalidDecoration,
    LateralCornerViolation,
    MultipleSources,
    NotSimple,
    OuterNotQuad,
    PoleMisplaced,
    T1Violation,
    DecoratedBipolar,
    grid_quad_count,
    grid_transversal,
    is_poset,
    map_from_coords,
    map_from_json,
    map_to_json,
    red_poset,
    validate_bipolar,
    validate_transversal,
)


def path_map():
    """S -> v -> N drawn on a vertical line."""
    m, ori = map_from_coords([(0, 0), (0, 1), (0, 2)], [(0, 1), (1, 2)], root_edge=0)
    return validate_bipolar(m, ori, 0, 2)


def chord_left_triangle():
    """Path S -> v -> N with the chord S -> N; v sits left of the chord."""
    m, ori = map_from_coords(
        [(0, 0), (-1, 1), (0, 2)], [(0, 1), (1, 2), (0, 2)], root_edge=0
    )
    return validate_bipolar(m, ori, 0, 2)


def chord_right_triangle():
    m, ori = map_from_coords(
        [(0, 0), (1, 1), (0, 2)], [(0, 1), (1, 2), (0, 2)], root_edge=2
    )
    return validate_bipolar(m, ori, 0, 2)


# planar map plumbing --------------------------------------------------------


def test_path_shape():
    b = path_map()
    m = b.map
    assert m.n_vertices == 3
    assert m.n_edges == 2
    assert m.n_half_edges == 4
    # a tree has a single face
    assert len(m.faces()) == 1


def test_triangle_faces_euler():
    b = chord_left_triangle()
    m = b.map
    faces = m.faces()
    assert m.n_vertices - m.n_edges + len(faces) == 2
    assert len(faces) == 2
    outer = m.outer_face()
    inner = [f for f in faces if m.face_of(f[0]) != outer]
    assert len(inner) == 1


def test_twin_prev_next():
    m = chord_left_triangle().map
    for h in range(m.n_half_edges):
        assert m.twin(h) == h ^ 1
        assert m.nxt[m.prev(h)] == h
    # rotation orbits partition the half-edges by origin
    for v in range(m.n_vertices):
        for h in m.vertex_halves(v):
            assert m.origin[h] == v


def test_rotation_from_coords():
    # a degree-3 star: rotation at the center follows angles counterclockwise
    m, _ = map_from_coords(
        [(0, 0), (1, 0), (0, 1), (-1, 0)], [(0, 1), (0, 2), (0, 3)], root_edge=0
    )
    halves = m.vertex_halves(0)
    assert len(halves) == 3
    heads = [m.origin[h ^ 1] for h in halves]
    # counterclockwise from east: 1, 2, 3 in cyclic order
    k = heads.index(1)
    assert [heads[(k + t) % 3] for t in range(3)] == [1, 2, 3]


def test_map_json_round_trip():
    b = chord_right_triangle()
    m = b.map
    m2, ori2, colors2 = map_from_json(map_to_json(m, b.orientation))
    assert tuple(m2.nxt) == tuple(m.nxt)
    assert tuple(m2.origin) == tuple(m.origin)
    assert m2.root == m.root
    assert m2.n_vertices == m.n_vertices
    assert tuple(ori2) == tuple(b.orientation)
    assert colors2 is None


# bipolar orientations -------------------------------------------------------


def test_outer_and_pole_types():
    b = path_map()
    assert tuple(b.outer_type()) == (1, 1)
    assert b.pole_type() == (0, 0)
    bl = chord_left_triangle()
    assert tuple(bl.outer_type()) == (1, 0)
    assert bl.pole_type() == (1, 1)
    br = chord_right_triangle()
    assert tuple(br.outer_type()) == (0, 1)
    assert br.pole_type() == (1, 1)


def test_face_type_counts_lateral_edges():
    # the triangle's inner face has the two-edge path on one side and the
    # chord on the other
    bl = chord_left_triangle()
    inner = bl.inner_face_halves()
    assert len(inner) == 1
    t = bl.face_type(inner[0])
    assert sorted((t.i + 1, t.j + 1)) == [1, 2]
    bottom, top, left, right = bl.face_paths(inner[0])
    assert bottom == 0 and top == 2
    assert {len(left), len(right)} == {1, 2}


def test_is_poset():
    assert is_poset(path_map())
    # the chord is transitive in both triangles
    assert not is_poset(chord_left_triangle())
    assert not is_poset(chord_right_triangle())


def test_canonical_stable_under_relabeling():
    b = chord_left_triangle()
    c = b.canonical()
    assert c == c.canonical()
    assert b.canonical_key() == c.canonical_key()
    assert hash(c) == hash(c.canonical())
    # a differently drawn copy of the same map canonicalizes identically
    m, ori = map_from_coords(
        [(5, -3), (4, -2), (5, -1)], [(0, 1), (1, 2), (0, 2)], root_edge=0
    )
    b2 = validate_bipolar(m, ori, 0, 2)
    assert b2.canonical() == c


def test_bipolar_json_shape():
    d = path_map().to_json()
    assert d["vertices"] == 3
    assert len(d["orientation"]) == 2
    assert len(d["half_edges"]) == 4


# validator rejections -------------------------------------------------------


def test_rejects_cycle():
    m, _ = map_from_coords(
        [(0, 0), (2, 0), (1, 2)], [(0, 1), (1, 2), (2, 0)], root_edge=0
    )
    with pytest.raises(Cyclic):
        validate_bipolar(m, [True, True, True], 0, 2)


def test_rejects_second_source():
    m, _ = map_from_coords(
        [(0, 0), (1, 1), (2, 0)], [(2, 1), (0, 1)], root_edge=1
    )
    with pytest.raises(MultipleSources):
        validate_bipolar(m, [True, True], 0, 1)


def test_rejects_two_sinks_at_corners():
    # S with two outgoing leaves: the outer face gains a second sink corner
    m, _ = map_from_coords(
        [(0, 0), (-1, 1), (1, 1)], [(0, 1), (0, 2)], root_edge=0
    )
    with pytest.raises(ExtremalCornerViolation):
        validate_bipolar(m, [True, True], 0, 1)


def test_rejects_misplaced_pole():
    m, ori = map_from_coords([(0, 0), (0, 1), (0, 2)], [(0, 1), (1, 2)], root_edge=0)
    with pytest.raises(PoleMisplaced):
        validate_bipolar(m, ori, 1, 2)
    with pytest.raises(PoleMisplaced):
        validate_bipolar(m, ori, 0, 0)


def test_rejects_interior_sink():
    # reorienting the middle edge of the triangle gives v only incoming edges
    m, _ = map_from_coords(
        [(0, 0), (-1, 1), (0, 2)], [(0, 1), (2, 1), (0, 2)], root_edge=0
    )
    with pytest.raises(LateralCornerViolation):
        validate_bipolar(m, [True, True, True], 0, 2)


# transversal structures ------------------------------------------------------


def test_grid_structures():
    for n in range(1, 10):
        x, quads = grid_transversal(n)
        assert quads == grid_quad_count(n)
        assert quads == x.quad_count()
        assert len(x.inner_vertices()) == n
        # revalidation from raw parts agrees
        again = validate_transversal(x.map, x.orientation, x.colors)
        assert again.canonical_key() == x.canonical_key()


def test_grid_red_poset():
    for n in (1, 2, 5, 8):
        x, _ = grid_transversal(n)
        rp = red_poset(x)
        assert is_poset(rp)


def test_transversal_rejects_bare_square():
    m, ori = map_from_coords(
        [(-1, 0), (0, -1), (1, 0), (0, 1)],
        [(0, 1), (1, 2), (0, 3), (3, 2)],
        root_edge=0,
    )
    with pytest.raises(T1Violation):
        validate_transversal(m, ori, [None] * 4)


def test_transversal_rejects_non_quad_outer():
    b = chord_left_triangle()
    with pytest.raises(OuterNotQuad):
        validate_transversal(b.map, b.orientation, [None] * 3)


def test_transversal_rejects_multi_edge():
    # square frame plus a center vertex joined twice to the same corner;
    # straight-line coordinates cannot draw the lens, so wire it directly
    from tandemwalks import PlanarMap

    nxt = [12, 2, 1, 7, 0, 6, 5, 9, 13, 11, 8, 3, 4, 10]
    origin = [0, 1, 1, 2, 0, 3, 3, 2, 4, 2, 4, 2, 0, 4]
    m = PlanarMap(5, nxt, origin, 0)
    ori = [True] * 7
    with pytest.raises(NotSimple):
        validate_transversal(m, ori, [None, None, None, None, "red", "red", "blue"])


def test_transversal_canonical_and_json():
    x, _ = grid_transversal(3)
    c = x.canonical()
    assert c.canonical_key() == x.canonical_key()
    d = x.to_json()
    assert d["vertices"] == x.map.n_vertices
    assert len(d["colors"]) == x.map.n_edges
    assert x.we_type() == (2, 2) or x.we_type()[0] >= 1


def test_decoration_rejects_bad_staircase():
    b = path_map()
    with pytest.raises(InvalidDecoration):
        DecoratedBipolar(chord_left_triangle(), "V", {0: ((1, 1), (0, 0))})
