"""Steps, walk validation, enumeration, attachment words, text and JSON forms."""

import pytest
from hypothesis import given, strategies as st

from tandemwalks import (
    SE,
    SEStep,
    FaceStep,
    TandemWalk,
    AttachedMismatch,
    ClassViolation,
    DomainError,
    LeftQuadrant,
    VPoly,
    attached_count,
    enumerate_attached,
    enumerate_walks,
    format_walk,
    parse_walk,
    validate_walk,
    walk_from_json,
    walk_to_json,
    walk_weight,
)


def test_se_singleton():
    assert SE is SEStep()
    assert repr(SE) == "SE"


def test_face_step_repr():
    assert repr(FaceStep(1, 0)) == "(-1,+0)"
    assert repr(FaceStep(2, 1, ("*NW", "W"))) == "(-2,+1)[*NW,W]"


def test_end_and_length():
    w = TandemWalk((0, 1), (SE, FaceStep(1, 0)))
    assert w.length == 2
    assert w.end == (0, 0)


def test_leaves_quadrant():
    w = TandemWalk((0, 0), (SE,))
    with pytest.raises(LeftQuadrant):
        validate_walk(w)
    # a face step pulling x below zero is caught too
    w = TandemWalk((0, 0), (FaceStep(1, 2),))
    with pytest.raises(LeftQuadrant):
        w.end


def test_class_rules():
    with pytest.raises(ClassViolation):
        validate_walk(TandemWalk((0, 0), (FaceStep(0, 0),), walk_class="E"))
    with pytest.raises(ClassViolation):
        validate_walk(
            TandemWalk((0, 0), (FaceStep(0, 0, attached=()),), walk_class="plain")
        )
    with pytest.raises(ClassViolation):
        validate_walk(TandemWalk((0, 0), (FaceStep(0, 0),), walk_class="V"))


def test_attachment_rules():
    # T words must open with the marked NW and match the step type
    bad = TandemWalk((1, 1), (FaceStep(1, 1, ("NW",)),), walk_class="T")
    with pytest.raises(AttachedMismatch):
        validate_walk(bad)
    ok = TandemWalk((1, 1), (FaceStep(1, 1, ("N", "W")),), walk_class="V")
    assert ok.end == (0, 2)
    mismatched = TandemWalk((2, 1), (FaceStep(2, 1, ("N", "W")),), walk_class="V")
    with pytest.raises(AttachedMismatch):
        validate_walk(mismatched)


# enumeration ---------------------------------------------------------------

# excursions by length; plain length L matches bipolar maps with L+1 edges
# and trivial boundary
PLAIN_EXCURSIONS = [1, 1, 1, 2, 6, 22, 92]


def test_enumerate_plain_excursions():
    got = [sum(1 for _ in enumerate_walks("plain", L)) for L in range(7)]
    assert got == PLAIN_EXCURSIONS


def test_enumerate_e_all_endpoints():
    # E walks of length L over every boundary pair match the poset-by-edges
    # sequence at L+1
    from tandemwalks import e_sequence

    want = e_sequence(6)
    for L in range(6):
        got = sum(
            sum(1 for _ in enumerate_walks("E", L, start=(0, a), end=(b, 0)))
            for a in range(L + 1)
            for b in range(L + 1)
        )
        assert got == want[L], f"length {L}"


def test_enumerate_endpoints():
    for w in enumerate_walks("plain", 4, start=(0, 2), end=(1, 0)):
        assert w.start == (0, 2)
        assert w.end == (1, 0)
        assert w.length == 4


def test_enumerate_type_bound():
    for w in enumerate_walks("plain", 5, type_bound=1):
        for s in w.steps:
            if isinstance(s, FaceStep):
                assert s.i <= 1 and s.j <= 1


def test_enumerate_deterministic():
    a = list(enumerate_walks("V", 3))
    b = list(enumerate_walks("V", 3))
    assert a == b


# attachment words ----------------------------------------------------------


def test_attached_count_v_is_binomial():
    for i in range(5):
        for j in range(5):
            n = attached_count("V", i, j)
            assert n == len(list(enumerate_attached("V", i, j)))
    assert attached_count("V", 1, 1) == 2
    assert attached_count("V", 2, 2) == 6


def test_attached_count_t():
    assert attached_count("T", 1, 1) == 1
    c = attached_count("T", 2, 2)
    assert isinstance(c, VPoly)
    assert c.render() == "2 + v"
    assert attached_count("T", 2, 2, v=1) == 3
    assert attached_count("T", 2, 2, v=0) == 2
    with pytest.raises(DomainError):
        attached_count("T", 0, 1)


def test_attached_words_t22():
    words = list(enumerate_attached("T", 2, 2))
    assert words == [("*NW", "N", "W"), ("*NW", "NW"), ("*NW", "W", "N")]


def test_attached_words_match_counts():
    for i in range(1, 4):
        for j in range(1, 4):
            words = list(enumerate_attached("T", i, j))
            assert len(words) == attached_count("T", i, j, v=1)
            for word in words:
                assert word[0] == "*NW"


def test_walk_weight_t():
    w = TandemWalk(
        (0, 2), (SE, FaceStep(1, 2, ("*NW", "NW")), SE, SE), walk_class="T"
    )
    assert walk_weight(w, None) == VPoly((0, 1))
    assert walk_weight(w, 5) == 5
    plain = TandemWalk((0, 1), (SE, FaceStep(1, 0)))
    assert walk_weight(plain) == 1


# text and JSON forms --------------------------------------------------------


def test_format_fixed_strings():
    w = TandemWalk((0, 1), (SE, FaceStep(1, 0)))
    assert format_walk(w) == "(0,1): SE,(-1,+0)"
    assert format_walk(w, with_start=False) == "SE,(-1,+0)"
    wt = TandemWalk((0, 1), (SE, FaceStep(1, 1, ("*NW",)), SE), walk_class="T")
    assert format_walk(wt) == "(0,1): SE,(-1,+1)[*NW],SE"


def test_parse_fixed_strings():
    w = parse_walk("(0,1): SE,(-1,+0)")
    assert w == TandemWalk((0, 1), (SE, FaceStep(1, 0)))
    # the comma inside a bracketed word does not split tokens
    wt = parse_walk("(0,2): (-0,+0),SE", walk_class="plain")
    assert wt.steps == (FaceStep(0, 0), SE)
    wv = parse_walk("SE,(-1,+1)[N,W]", walk_class="V", start=(0, 1))
    assert wv.steps[1].attached == ("N", "W")


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_walk("SE,(-1")


@st.composite
def plain_walks(draw):
    length = draw(st.integers(min_value=0, max_value=5))
    pool = list(enumerate_walks("plain", length))
    return draw(st.sampled_from(pool))


@given(plain_walks())
def test_text_round_trip(w):
    assert parse_walk(format_walk(w)) == w


@given(plain_walks())
def test_json_round_trip(w):
    assert walk_from_json(walk_to_json(w)) == w


def test_round_trip_with_attachments():
    for cls in ("V", "T"):
        for L in range(4):
            for w in enumerate_walks(cls, L, start=(0, 1), end=(1, 0)):
                assert parse_walk(format_walk(w), walk_class=cls) == w
                assert walk_from_json(walk_to_json(w)) == w


def test_json_carries_class():
    w = TandemWalk((0, 0), (FaceStep(0, 0, ()),), walk_class="V")
    d = walk_to_json(w)
    assert d["class"] == "V"
    assert walk_from_json(d).walk_class == "V"
