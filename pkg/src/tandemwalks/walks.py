"""Tandem walks in the quarter plane, with optional per-step attachments.

A tandem walk starts at (x0, y0) with x0, y0 >= 0 and takes steps

  SE           (+1, -1)
  face-step    (-i, +j) with i, j >= 0

staying in the quadrant x >= 0, y >= 0 throughout.

Four walk classes are supported.  "plain" walks carry bare steps.  "E"
walks are plain walks whose face-steps all have i >= 1 and j >= 1.  "V"
walks attach to each face-step (-i,+j) a word with exactly i letters W and
j letters N, in any order.  "T" walks require i, j >= 1 and attach a word
over {N, W, NW} whose first letter is a marked NW (written *NW) and whose
displacement totals (i, j), counting W and NW as one unit of i and N and NW
as one unit of j.  Attachment words are stored as tuples of letter strings.

Text format: comma-separated tokens `SE` and `(-i,+j)[letters]` with the
letters comma-separated, e.g. `SE,(-2,+1)[*NW,W],SE`.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from math import comb
from typing import Iterator, Optional, Sequence

from .counting import VPoly, transversal_weight

WALK_CLASSES = ("plain", "E", "V", "T")

V_LETTERS = ("N", "W")
T_LETTERS = ("N", "NW", "W")
T_MARK = "*NW"


class LeftQuadrant(ValueError):
    """The walk leaves the quadrant; .index is the offending step (or -1)."""

    def __init__(self, index: int, position):
        self.index = index
        self.position = position
        super().__init__(f"walk leaves the quadrant at step {index} (reaching {position})")


class ClassViolation(ValueError):
    """A step does not fit the declared walk class; .index locates it."""

    def __init__(self, index: int, reason: str):
        self.index = index
        super().__init__(f"step {index}: {reason}")


class AttachedMismatch(ValueError):
    """An attachment word is malformed or does not match its step type."""

    def __init__(self, index: int, reason: str):
        self.index = index
        super().__init__(f"step {index}: {reason}")


class DomainError(ValueError):
    """No attachment exists for this walk class and step type."""


class SEStep:
    """The (+1, -1) step.  A singleton, available as walks.SE."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "SE"

    def __eq__(self, other):
        return isinstance(other, SEStep)

    def __hash__(self):
        return hash("SE")


SE = SEStep()


@dataclass(frozen=True)
class FaceStep:
    """A (-i, +j) step, optionally carrying an attachment word."""

    i: int
    j: int
    attached: Optional[tuple] = None

    def __post_init__(self):
        if self.i < 0 or self.j < 0:
            raise ValueError("face-step type must be nonnegative")
        if self.attached is not None and not isinstance(self.attached, tuple):
            object.__setattr__(self, "attached", tuple(self.attached))

    def __repr__(self):
        if self.attached is None:
            return f"(-{self.i},+{self.j})"
        return f"(-{self.i},+{self.j})[{','.join(self.attached)}]"


@dataclass(frozen=True)
class TandemWalk:
    start: tuple
    steps: tuple
    walk_class: str = "plain"

    def __post_init__(self):
        if self.walk_class not in WALK_CLASSES:
            raise ValueError(f"unknown walk class: {self.walk_class!r}")
        object.__setattr__(self, "start", tuple(self.start))
        object.__setattr__(self, "steps", tuple(self.steps))

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def end(self) -> tuple:
        return validate_walk(self)

    def __repr__(self):
        return f"TandemWalk({self.start}, {format_walk(self, with_start=False)!r}, {self.walk_class!r})"


def _word_displacement(word: Sequence[str]) -> tuple:
    dx = dy = 0
    for letter in word:
        if letter in ("W", "NW", T_MARK):
            dx += 1
        if letter in ("N", "NW", T_MARK):
            dy += 1
    return dx, dy


def validate_walk(walk: TandemWalk) -> tuple:
    """Check quadrant confinement and class discipline; return the endpoint.

    Raises LeftQuadrant, ClassViolation or AttachedMismatch, each carrying
    the index of the first offending step.
    """
    x, y = walk.start
    if x < 0 or y < 0:
        raise LeftQuadrant(-1, (x, y))
    cls = walk.walk_class
    for k, step in enumerate(walk.steps):
        if isinstance(step, SEStep):
            if y < 1:
                raise LeftQuadrant(k, (x + 1, y - 1))
            x, y = x + 1, y - 1
            continue
        if not isinstance(step, FaceStep):
            raise ClassViolation(k, f"not a step: {step!r}")
        if cls in ("E", "T") and (step.i < 1 or step.j < 1):
            raise ClassViolation(k, f"class {cls} requires i >= 1 and j >= 1")
        if cls in ("plain", "E"):
            if step.attached is not None:
                raise ClassViolation(k, f"class {cls} walks carry no attachments")
        elif step.attached is None:
            raise ClassViolation(k, f"class {cls} walks require an attachment")
        else:
            _check_attachment(cls, step, k)
        if step.i > x:
            raise LeftQuadrant(k, (x - step.i, y + step.j))
        x, y = x - step.i, y + step.j
    return (x, y)


def _check_attachment(walk_class: str, step: FaceStep, k: int):
    word = step.attached
    if walk_class == "V":
        for letter in word:
            if letter not in V_LETTERS:
                raise AttachedMismatch(k, f"letter {letter!r} not allowed in a V word")
        dx, dy = _word_displacement(word)
        if (dx, dy) != (step.i, step.j):
            raise AttachedMismatch(
                k, f"word displacement ({dx},{dy}) != step type ({step.i},{step.j})"
            )
        return
    # T
    if not word or word[0] != T_MARK:
        raise AttachedMismatch(k, "T word must start with the marked NW")
    for letter in word[1:]:
        if letter not in T_LETTERS:
            raise AttachedMismatch(k, f"letter {letter!r} not allowed after the marked NW")
    dx, dy = _word_displacement(word)
    if (dx, dy) != (step.i, step.j):
        raise AttachedMismatch(
            k, f"word displacement ({dx},{dy}) != step type ({step.i},{step.j})"
        )


def attached_count(kind: str, i: int, j: int, v=None):
    """How many attachment words fit a (-i,+j) step of the given kind.

    V gives binomial(i+j, i).  T gives a polynomial in v (VPoly) counting
    words by their number of unmarked NW letters, evaluated at v when given;
    it requires i, j >= 1 since the initial marked NW consumes one unit of
    each.
    """
    if kind == "V":
        if i < 0 or j < 0:
            raise DomainError("face-step type must be nonnegative")
        return comb(i + j, i)
    if kind == "T":
        if i < 1 or j < 1:
            raise DomainError("T attachments need i >= 1 and j >= 1")
        w = transversal_weight(i, j)
        return w if v is None else w(v)
    raise ValueError(f"unknown attachment kind: {kind!r}")


def enumerate_attached(walk_class: str, i: int, j: int) -> Iterator[Optional[tuple]]:
    """All attachment words for a (-i,+j) step, in token order.

    V words are interleavings of i W and j N letters; T words start with
    *NW and continue over {N, NW, W}.  Both come out in lexicographic order
    of their comma-joined token text.  plain and E yield the single value
    None (no attachment).
    """
    if walk_class in ("plain", "E"):
        yield None
        return
    if walk_class == "V":
        yield from _v_words(i, j, ())
        return
    if walk_class == "T":
        if i < 1 or j < 1:
            return
        for tail in _t_words(i - 1, j - 1, ()):
            yield (T_MARK,) + tail
        return
    raise ValueError(f"unknown walk class: {walk_class!r}")


def _v_words(i: int, j: int, prefix: tuple) -> Iterator[tuple]:
    if i == 0 and j == 0:
        yield prefix
        return
    if j > 0:
        yield from _v_words(i, j - 1, prefix + ("N",))
    if i > 0:
        yield from _v_words(i - 1, j, prefix + ("W",))


def _t_words(i: int, j: int, prefix: tuple) -> Iterator[tuple]:
    if i == 0 and j == 0:
        yield prefix
        return
    if j > 0:
        yield from _t_words(i, j - 1, prefix + ("N",))
    if i > 0 and j > 0:
        yield from _t_words(i - 1, j - 1, prefix + ("NW",))
    if i > 0:
        yield from _t_words(i - 1, j, prefix + ("W",))


def enumerate_walks(
    walk_class: str,
    length: int,
    start: tuple = (0, 0),
    end: tuple = (0, 0),
    type_bound: Optional[int] = None,
) -> Iterator[TandemWalk]:
    """All quadrant tandem walks of a given length between fixed endpoints.

    Walks come out in lexicographic order of their step tokens: face-steps
    sorted by token text precede SE at each position, and attachment words
    follow enumerate_attached order.  type_bound caps face-step coordinates;
    the default is large enough to be no restriction for fixed endpoints.
    """
    if walk_class not in WALK_CLASSES:
        raise ValueError(f"unknown walk class: {walk_class!r}")
    sx, sy = start
    ex, ey = end
    if sx < 0 or sy < 0 or ex < 0 or ey < 0:
        raise ValueError("endpoints must be in the quadrant")
    if type_bound is None:
        type_bound = length + max(sy, ex) + 1
    min_ij = 1 if walk_class in ("E", "T") else 0

    def rec(x, y, rem, acc):
        if rem == 0:
            if (x, y) == (ex, ey):
                yield TandemWalk(start, tuple(acc), walk_class)
            return
        candidates = []
        for i in range(min_ij, min(x, type_bound) + 1):
            jcap = min(type_bound, rem - 1 + ey - y)
            for j in range(min_ij, jcap + 1):
                nx, ny = x - i, y + j
                if max(0, ex - nx, ny - ey) > rem - 1:
                    continue
                candidates.append((f"(-{i},+{j})", i, j))
        candidates.sort(key=lambda c: c[0])
        for _, i, j in candidates:
            nx, ny = x - i, y + j
            for word in enumerate_attached(walk_class, i, j):
                acc.append(FaceStep(i, j, word))
                yield from rec(nx, ny, rem - 1, acc)
                acc.pop()
        # "SE" sorts after every "(-i,+j)..." token
        if y >= 1:
            nx, ny = x + 1, y - 1
            if max(0, ex - nx, ny - ey) <= rem - 1:
                acc.append(SE)
                yield from rec(nx, ny, rem - 1, acc)
                acc.pop()

    yield from rec(sx, sy, length, [])


def walk_weight(walk: TandemWalk, v=None):
    """Product of per-step weights under the walk's natural weighting.

    T walks weigh v**(number of unmarked NW letters), symbolic for v=None;
    every other class weighs 1.
    """
    if walk.walk_class != "T":
        return 1
    nw = 0
    for step in walk.steps:
        if isinstance(step, FaceStep) and step.attached:
            nw += sum(1 for letter in step.attached if letter == "NW")
    if v is None:
        return VPoly((0,) * nw + (1,))
    return v**nw


# --- text and JSON formats --------------------------------------------------

_STEP_RE = re.compile(r"^\(-(\d+),\+(\d+)\)(?:\[([^\]]*)\])?$")
_START_RE = re.compile(r"^\((\d+),(\d+)\):\s*(.*)$", re.S)


def format_step(step) -> str:
    return repr(step)


def format_walk(walk: TandemWalk, with_start: bool = True) -> str:
    """Render a walk as text, e.g. '(0,1): SE,(-2,+1)[*NW,W],SE'.

    The '(x,y): ' start prefix is this library's convention; the token list
    after it is the interchange format.
    """
    body = ",".join(format_step(s) for s in walk.steps)
    if not with_start:
        return body
    x, y = walk.start
    return f"({x},{y}): {body}"


def _split_tokens(text: str) -> list:
    tokens = []
    depth = 0
    cur = []
    for ch in text:
        if ch == "," and depth == 0:
            tokens.append("".join(cur))
            cur = []
            continue
        if ch in "[(":
            depth += 1
        elif ch in "])":
            depth -= 1
        cur.append(ch)
    if cur:
        tokens.append("".join(cur))
    return [t.strip() for t in tokens if t.strip()]


def parse_step(token: str):
    token = token.strip()
    if token == "SE":
        return SE
    m = _STEP_RE.match(token)
    if not m:
        raise ValueError(f"cannot parse step: {token!r}")
    i, j = int(m.group(1)), int(m.group(2))
    if m.group(3) is None:
        return FaceStep(i, j)
    word = tuple(w.strip() for w in m.group(3).split(",") if w.strip())
    return FaceStep(i, j, word)


def parse_walk(text: str, walk_class: str = "plain", start: Optional[tuple] = None) -> TandemWalk:
    """Parse the text format; a '(x,y): ' prefix sets the start unless given."""
    text = text.strip()
    m = _START_RE.match(text)
    if m:
        prefix_start = (int(m.group(1)), int(m.group(2)))
        text = m.group(3).strip()
        if start is None:
            start = prefix_start
    if start is None:
        start = (0, 0)
    steps = tuple(parse_step(tok) for tok in _split_tokens(text))
    return TandemWalk(start, steps, walk_class)


def walk_to_json(walk: TandemWalk) -> dict:
    """JSON form: start point, class, and the array of step tokens."""
    return {
        "start": list(walk.start),
        "class": walk.walk_class,
        "steps": [format_step(s) for s in walk.steps],
    }


def walk_from_json(data) -> TandemWalk:
    if isinstance(data, str):
        data = json.loads(data)
    start = tuple(data.get("start", (0, 0)))
    walk_class = data.get("class", "plain")
    steps = tuple(parse_step(tok) for tok in data.get("steps", []))
    return TandemWalk(start, steps, walk_class)
