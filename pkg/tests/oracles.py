"""Independent brute-force oracles used by the tests.

Nothing here calls into the code paths it is used to check.
"""

import itertools
import random

import sympy


def gt_pattern_count(top):
    """Number of Gelfand-Tsetlin patterns with top row ``top``.

    Each row interlaces the one above it; the count is the dimension of the
    gl_n (hence sl_n) module with that highest weight.
    """
    top = tuple(top)

    def below(row):
        ranges = [range(row[i + 1], row[i] + 1) for i in range(len(row) - 1)]
        return itertools.product(*ranges)

    def count(row):
        if len(row) == 1:
            return 1
        return sum(count(r) for r in below(row))

    return count(top)


def enumerate_vertices(k):
    """All (s, t) with 0 <= t <= s <= k by plain double loop."""
    return [(s, t) for s in range(k + 1) for t in range(k + 1) if t <= s]


def random_move_sequence(s, t, rng):
    """Random lattice path of 'a'/'b' moves from (0,0) to (s,t) staying in t <= s."""
    moves, cs, ct = [], 0, 0
    while (cs, ct) != (s, t):
        options = []
        if cs < s:
            options.append("a")
        if ct < t and ct + 1 <= cs:
            options.append("b")
        m = rng.choice(options)
        moves.append(m)
        if m == "a":
            cs += 1
        else:
            ct += 1
    return moves


def half_int_weight_from_moves(k, seed2, moves):
    """Apply moves to a doubled seed using only the root formulas e_i -/+ e_j.

    An 'a' move at alpha-count s subtracts e_{k-s} - e_{k+1}; a 'b' move at
    beta-count t subtracts e_{k-t} + e_{k+2}. Coordinates stay doubled.
    """
    w = list(seed2)
    s = t = 0
    for m in moves:
        if m == "a":
            w[k - s - 1] -= 2
            w[k] += 2
            s += 1
        else:
            w[k - t - 1] -= 2
            w[k + 1] -= 2
            t += 1
    return tuple(w)


QUATERNION_UNITS = [
    sympy.Matrix([[1, 0], [0, 1]]),
    sympy.Matrix([[sympy.I, 0], [0, -sympy.I]]),
    sympy.Matrix([[0, 1], [-1, 0]]),
    sympy.Matrix([[0, sympy.I], [sympy.I, 0]]),
]


def sympy_laplacian(components, xs):
    """Laplacian of each component expression in the variables ``xs``."""
    return tuple(sympy.expand(sum(sympy.diff(c, x, 2) for x in xs)) for c in components)


def sympy_dirac(components, xs):
    """sum_a e_a d/dx_a applied to a 2-vector of expressions."""
    v = sympy.Matrix(components)
    out = sympy.zeros(2, 1)
    for e, x in zip(QUATERNION_UNITS, xs):
        out += e * v.diff(x)
    return tuple(sympy.expand(c) for c in out)


def seeded(seed):
    return random.Random(seed)
