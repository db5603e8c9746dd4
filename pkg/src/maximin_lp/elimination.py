"""Level-by-level elimination of the homogeneous constraints.

Level 1 holds the unit vectors of ``{1, ..., n+1}``. Each advance consumes one
constraint function ``g``: elements with ``g <= 0`` are kept (in their
existing order) and every pair of a negative element with a positive one is
combined as ``g(pos) * h(neg) - g(neg) * h(pos)``, which zeroes ``g``. All
carried functions and the kernel row over level 1 are transported by that same
rule, so for every element ``carried value of h == kernel_row . h``.
"""

from dataclasses import dataclass
from fractions import Fraction
import re

from .errors import ParseError, SizeLimitExceeded
from .rational import dot, fmt

DEFAULT_MAX_ELEMENTS = 10**6


@dataclass(frozen=True)
class Kept:
    level: int
    rank: int

    def __str__(self):
        return f"[{self.rank}]_{self.level}"


@dataclass(frozen=True)
class Pair:
    level: int
    neg: object  # Kept, Pair or a base index (int)
    pos: object

    def __str__(self):
        return f"[{self.neg},{self.pos}]_{self.level}"


def render(label):
    return str(label)


_TOKEN = re.compile(r"\s*(\d+|\[|\]_|,)")


def parse_label(text):
    """Inverse of :func:`render`; also accepts the ``]_`` subscript with spaces."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r} in label {text!r}", column=pos + 1)
        tokens.append(m.group(1))
        pos = m.end()

    def take(i):
        if i >= len(tokens):
            raise ParseError(f"truncated label {text!r}")
        return tokens[i]

    def node(i):
        tok = take(i)
        if tok.isdigit():
            return int(tok), i + 1
        if tok != "[":
            raise ParseError(f"expected '[' or an index in label {text!r}")
        first, i = node(i + 1)
        if take(i) == ",":
            second, i = node(i + 1)
        else:
            second = None
        if take(i) != "]_" or not take(i + 1).isdigit():
            raise ParseError(f"expected ']_<level>' in label {text!r}")
        level = int(tokens[i + 1])
        if second is None:
            if not isinstance(first, int):
                raise ParseError(f"kept rank must be an integer in label {text!r}")
            return Kept(level, first), i + 2
        return Pair(level, first, second), i + 2

    label, end = node(0)
    if end != len(tokens):
        raise ParseError(f"trailing input in label {text!r}")
    return label


@dataclass(frozen=True)
class LevelElement:
    label: object
    kernel_row: tuple
    # transported values: remaining constraint functions, then e1, then e2
    carried: tuple

    @property
    def g(self):
        return self.carried[0]

    @property
    def d1(self):
        return self.carried[-2]

    @property
    def d2(self):
        return self.carried[-1]


@dataclass(frozen=True)
class LevelState:
    level: int
    elements: tuple

    @property
    def pending(self):
        """Number of constraint functions not yet consumed."""
        return len(self.elements[0].carried) - 2 if self.elements else 0

    @property
    def g_values(self):
        if self.pending == 0:
            return None
        return [e.g for e in self.elements]

    @property
    def partition(self):
        values = self.g_values
        return None if values is None else sign_partition(values)

    def __len__(self):
        return len(self.elements)


def sign_partition(values):
    """1-based (zero, neg, pos) position lists, each ascending."""
    zero, neg, pos = [], [], []
    for i, v in enumerate(values, 1):
        (zero if v == 0 else neg if v < 0 else pos).append(i)
    return zero, neg, pos


def ordered_pairs(neg, pos):
    return [(i, j) for i in neg for j in pos]


def initial_state(red):
    size = red.size
    elements = []
    for i in range(size):
        row = tuple(Fraction(int(i == k)) for k in range(size))
        carried = tuple(f[i] for f in red.fs) + (red.e1[i], red.e2[i])
        elements.append(LevelElement(i + 1, row, carried))
    return LevelState(1, tuple(elements))


def next_size(state):
    zero, neg, pos = state.partition
    return len(zero) + len(neg) + len(neg) * len(pos)


def advance(state, max_elements=DEFAULT_MAX_ELEMENTS):
    """Consume the current constraint function and build the next level.

    Returns ``(next_state, rho)`` where ``rho`` lists ``(kept label, parent
    label)`` for the order-preserving map onto ``zero | neg``.
    """
    if state.pending == 0:
        raise ValueError(f"level {state.level} has no constraint left to consume")
    zero, neg, pos = state.partition
    size = len(zero) + len(neg) + len(neg) * len(pos)
    level = state.level + 1
    if size > max_elements:
        raise SizeLimitExceeded(level, size, max_elements)

    elems = state.elements
    out = []
    rho = []
    for rank, i in enumerate(sorted(zero + neg), 1):
        parent = elems[i - 1]
        label = Kept(level, rank)
        out.append(LevelElement(label, parent.kernel_row, parent.carried[1:]))
        rho.append((label, parent.label))
    for i, j in ordered_pairs(neg, pos):
        en, ep = elems[i - 1], elems[j - 1]
        gp, gn = ep.g, en.g
        row = tuple(gp * u - gn * v for u, v in zip(en.kernel_row, ep.kernel_row))
        carried = tuple(gp * u - gn * v for u, v in zip(en.carried[1:], ep.carried[1:]))
        out.append(LevelElement(Pair(level, en.label, ep.label), row, carried))
    return LevelState(level, tuple(out)), rho


@dataclass(frozen=True)
class Elimination:
    states: tuple  # level 1 .. m
    rho: tuple  # rho[k] maps level k+2 kept labels to level k+1 labels

    @property
    def final(self):
        return self.states[-1]


def run_elimination(red, max_elements=DEFAULT_MAX_ELEMENTS):
    state = initial_state(red)
    states, rhos = [state], []
    while state.pending:
        state, rho = advance(state, max_elements)
        states.append(state)
        rhos.append(tuple(rho))
    return Elimination(tuple(states), tuple(rhos))


def kernel_identity_holds(state, red):
    """Check ``carried value == kernel_row . h`` for every carried function."""
    consumed = state.level - 1
    sources = list(red.fs[consumed:]) + [red.e1, red.e2]
    for e in state.elements:
        if len(e.carried) != len(sources):
            return False
        for value, h in zip(e.carried, sources):
            if dot(e.kernel_row, h) != value:
                return False
    return True


def level_table(state):
    """Rows of ``(label, g or None, d1, d2)`` as exact strings, in j order."""
    rows = []
    for e in state.elements:
        g = fmt(e.g) if state.pending else None
        rows.append((str(e.label), g, fmt(e.d1), fmt(e.d2)))
    return rows
