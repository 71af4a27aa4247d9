"""Dirac operator in k quaternionic variables on polynomial spinor fields.

A field is a polynomial in the 4k real variables ``x[l, a]`` (``l = 1..k``,
``a = 0..3``) with values in C^2. Coefficients are exact Gaussian rationals
(:data:`sympy.QQ_I`), so every identity checked here is decided exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping, Sequence

import sympy
from sympy import QQ_I

from .errors import InvalidParameterError

ZERO = QQ_I.zero
ONE = QQ_I.one

Spinor = tuple  # (QQ_I, QQ_I)
Matrix2 = tuple  # ((QQ_I, QQ_I), (QQ_I, QQ_I))


def _g(re, im=0):
    return QQ_I(re, im)


# quaternion units 1, i, j, k as 2x2 complex matrices; i*j = k
CLIFFORD_BASIS: tuple[Matrix2, ...] = (
    ((_g(1), _g(0)), (_g(0), _g(1))),
    ((_g(0, 1), _g(0)), (_g(0), _g(0, -1))),
    ((_g(0), _g(1)), (_g(-1), _g(0))),
    ((_g(0), _g(0, 1)), (_g(0, 1), _g(0))),
)
# e_0 stays, e_1..e_3 change sign
CONJUGATE_BASIS: tuple[Matrix2, ...] = (CLIFFORD_BASIS[0],) + tuple(
    tuple(tuple(-x for x in r) for r in m) for m in CLIFFORD_BASIS[1:]
)


def matmul2(a: Matrix2, b: Matrix2) -> Matrix2:
    return tuple(
        tuple(a[r][0] * b[0][c] + a[r][1] * b[1][c] for c in range(2)) for r in range(2)
    )


def apply(m: Matrix2, v: Spinor) -> Spinor:
    return (m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1])


def spinor(a, b) -> Spinor:
    """Spinor from Python numbers or ``(re, im)`` pairs."""
    def conv(x):
        if isinstance(x, tuple):
            return QQ_I(*x)
        if isinstance(x, complex):
            raise TypeError("use (re, im) pairs; floats are not exact")
        return QQ_I.convert(x)

    return (conv(a), conv(b))


def _is_zero(v: Spinor) -> bool:
    return not v[0] and not v[1]


def var_index(l: int, a: int) -> int:
    """Position of ``x[l, a]`` in an exponent tuple."""
    return 4 * (l - 1) + a


@dataclass(frozen=True)
class PolySpinorField:
    """C^2-valued polynomial on ``M(4, k, R)``.

    ``terms`` maps exponent tuples of length ``4k`` to nonzero spinors.
    """

    k: int
    terms: Mapping[tuple[int, ...], Spinor]

    def __post_init__(self):
        if self.k < 1:
            raise InvalidParameterError(f"k must be positive, got {self.k}")
        clean = {}
        for mono, v in self.terms.items():
            mono = tuple(mono)
            if len(mono) != 4 * self.k or any(e < 0 for e in mono):
                raise InvalidParameterError(f"bad monomial {mono} for k={self.k}")
            if not _is_zero(v):
                clean[mono] = (v[0], v[1])
        object.__setattr__(self, "terms", clean)

    def __hash__(self):
        return hash((self.k, frozenset(self.terms.items())))

    # constructors

    @classmethod
    def zero(cls, k: int) -> "PolySpinorField":
        return cls(k, {})

    @classmethod
    def constant(cls, k: int, v: Spinor) -> "PolySpinorField":
        return cls(k, {(0,) * (4 * k): v})

    @classmethod
    def monomial(cls, k: int, powers: Mapping[tuple[int, int], int], v: Spinor) -> "PolySpinorField":
        """``prod x[l, a]**p * v`` for ``powers = {(l, a): p}``."""
        exps = [0] * (4 * k)
        for (l, a), p in powers.items():
            _check_variable(k, l)
            if not 0 <= a <= 3:
                raise InvalidParameterError(f"coordinate index must be 0..3, got {a}")
            exps[var_index(l, a)] += p
        return cls(k, {tuple(exps): v})

    @classmethod
    def random(cls, k: int, degree: int, rng: random.Random, n_terms: int = 6, bound: int = 5) -> "PolySpinorField":
        """Random field of degree at most ``degree`` with small Gaussian-integer coefficients."""
        terms = {}
        nvars = 4 * k
        for _ in range(n_terms):
            d = rng.randint(0, degree)
            exps = [0] * nvars
            for _ in range(d):
                exps[rng.randrange(nvars)] += 1
            v = tuple(QQ_I(rng.randint(-bound, bound), rng.randint(-bound, bound)) for _ in range(2))
            mono = tuple(exps)
            old = terms.get(mono, (ZERO, ZERO))
            terms[mono] = (old[0] + v[0], old[1] + v[1])
        return cls(k, terms)

    # algebra

    def _check_same(self, other):
        if not isinstance(other, PolySpinorField):
            raise TypeError(f"expected PolySpinorField, got {type(other).__name__}")
        if other.k != self.k:
            raise InvalidParameterError(f"fields of rank {self.k} and {other.k} cannot be combined")

    def __add__(self, other: "PolySpinorField") -> "PolySpinorField":
        self._check_same(other)
        out = dict(self.terms)
        for mono, v in other.terms.items():
            old = out.get(mono, (ZERO, ZERO))
            out[mono] = (old[0] + v[0], old[1] + v[1])
        return PolySpinorField(self.k, out)

    def __neg__(self) -> "PolySpinorField":
        return PolySpinorField(self.k, {m: (-v[0], -v[1]) for m, v in self.terms.items()})

    def __sub__(self, other: "PolySpinorField") -> "PolySpinorField":
        return self + (-other)

    def scale(self, c) -> "PolySpinorField":
        c = QQ_I.convert(c)
        return PolySpinorField(self.k, {m: (c * v[0], c * v[1]) for m, v in self.terms.items()})

    def left_multiply(self, m: Matrix2) -> "PolySpinorField":
        return PolySpinorField(self.k, {mono: apply(m, v) for mono, v in self.terms.items()})

    def diff(self, l: int, a: int) -> "PolySpinorField":
        """Partial derivative in ``x[l, a]``."""
        _check_variable(self.k, l)
        idx = var_index(l, a)
        out = {}
        for mono, v in self.terms.items():
            p = mono[idx]
            if p == 0:
                continue
            new = list(mono)
            new[idx] = p - 1
            out[tuple(new)] = (v[0] * p, v[1] * p)
        return PolySpinorField(self.k, out)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def symbols(self) -> list[sympy.Symbol]:
        return [sympy.Symbol(f"x{l}_{a}", real=True) for l in range(1, self.k + 1) for a in range(4)]

    def as_expr(self) -> tuple[sympy.Expr, sympy.Expr]:
        """The two spinor components as sympy expressions."""
        xs = self.symbols()
        comps = [sympy.Integer(0), sympy.Integer(0)]
        for mono, v in self.terms.items():
            m = sympy.Mul(*[x**e for x, e in zip(xs, mono)])
            for c in range(2):
                comps[c] += QQ_I.to_sympy(v[c]) * m
        return tuple(sympy.expand(c) for c in comps)


def _check_variable(k: int, l: int) -> None:
    if not 1 <= l <= k:
        raise InvalidParameterError(f"variable index must be in 1..{k}, got {l}")


def _clifford_derivative(f: PolySpinorField, l: int, basis: Sequence[Matrix2]) -> PolySpinorField:
    _check_variable(f.k, l)
    out = PolySpinorField.zero(f.k)
    for a, e in enumerate(basis):
        out = out + f.diff(l, a).left_multiply(e)
    return out


def dirac_component(f: PolySpinorField, l: int) -> PolySpinorField:
    """``D_l f = sum_a e_a df/dx[l, a]``."""
    return _clifford_derivative(f, l, CLIFFORD_BASIS)


def conjugate_dirac_component(f: PolySpinorField, l: int) -> PolySpinorField:
    """``sum_a conj(e_a) df/dx[l, a]``; composes with :func:`dirac_component` to the Laplacian."""
    return _clifford_derivative(f, l, CONJUGATE_BASIS)


def dirac_k(f: PolySpinorField) -> tuple[PolySpinorField, ...]:
    return tuple(dirac_component(f, l) for l in range(1, f.k + 1))


def laplacian(f: PolySpinorField, l: int) -> PolySpinorField:
    out = PolySpinorField.zero(f.k)
    for a in range(4):
        out = out + f.diff(l, a).diff(l, a)
    return out


def linear_monogenics(k: int, l: int, v: Spinor) -> list[PolySpinorField]:
    """The degree-1 fields ``(x[l,a] e_0 - x[l,0] e_a) v``, ``a = 1, 2, 3``."""
    _check_variable(k, l)
    out = []
    for a in (1, 2, 3):
        f = PolySpinorField.monomial(k, {(l, a): 1}, apply(CLIFFORD_BASIS[0], v))
        g = PolySpinorField.monomial(k, {(l, 0): 1}, apply(CLIFFORD_BASIS[a], v))
        out.append(f - g)
    return out


def target_dimension(k: int) -> int:
    """Rank of ``dirac_k`` on linear fields, i.e. the dimension of its constant target.

    Every linear field ``x[l, a] v`` maps to a constant k-tuple of spinors; the
    span of these images in ``C^(2k)`` is computed exactly.
    """
    if k < 1:
        raise InvalidParameterError(f"k must be positive, got {k}")
    const = (0,) * (4 * k)
    rows = []
    for l in range(1, k + 1):
        for a in range(4):
            for c in range(2):
                v = (ONE, ZERO) if c == 0 else (ZERO, ONE)
                images = dirac_k(PolySpinorField.monomial(k, {(l, a): 1}, v))
                row = []
                for img in images:
                    val = img.terms.get(const, (ZERO, ZERO))
                    row.extend(QQ_I.to_sympy(x) for x in val)
                rows.append(row)
    return sympy.Matrix(rows).rank()


@dataclass
class CheckReport:
    name: str
    passed: int
    total: int

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def __str__(self) -> str:
        return f"{self.passed}/{self.total} {self.name} checks passed"


def run_checks(k: int, degree: int, trials: int, seed: int) -> list[CheckReport]:
    """Property suite for the first operator on ``trials`` random fields.

    Reports factorization ``conj(D_l) D_l = Laplacian_l`` (one count per field,
    all ``l``), commutation ``D_l Laplacian_m = Laplacian_m D_l`` for all
    ``l, m``, and annihilation of the linear monogenic family. ``D_l D_m`` itself
    is not symmetric in ``l, m`` because the Clifford units do not commute.
    """
    if k < 1 or degree < 0 or trials < 0:
        raise InvalidParameterError("k must be positive and degree, trials nonnegative")
    rng = random.Random(seed)
    fact = comm = 0
    for _ in range(trials):
        f = PolySpinorField.random(k, degree, rng)
        if all(conjugate_dirac_component(dirac_component(f, l), l) == laplacian(f, l) for l in range(1, k + 1)):
            fact += 1
        if all(
            dirac_component(laplacian(f, m), l) == laplacian(dirac_component(f, l), m)
            for l in range(1, k + 1)
            for m in range(1, k + 1)
        ):
            comm += 1
    mono_total = mono_ok = 0
    for l in range(1, k + 1):
        for v in ((ONE, ZERO), (ZERO, ONE)):
            for g in linear_monogenics(k, l, v):
                mono_total += 1
                mono_ok += all(d.is_zero() for d in dirac_k(g))
    return [
        CheckReport("factorization", fact, trials),
        CheckReport("commutation", comm, trials),
        CheckReport("monogenic", mono_ok, mono_total),
    ]


def monogenic_basis(degree: int) -> list[PolySpinorField]:
    """Basis of homogeneous ``k = 1`` fields of the given degree killed by ``D_1``.

    Found by solving the linear system on the coefficients with sympy.
    """
    from itertools import combinations_with_replacement

    monos = []
    for combo in combinations_with_replacement(range(4), degree):
        e = [0, 0, 0, 0]
        for a in combo:
            e[a] += 1
        monos.append(tuple(e))
    unknowns = [(m, c) for m in monos for c in range(2)]
    images = []
    for m, c in unknowns:
        v = (ONE, ZERO) if c == 0 else (ZERO, ONE)
        images.append(dirac_component(PolySpinorField(1, {m: v}), 1))
    keys = sorted({(m, c) for img in images for m in img.terms for c in range(2)})
    A = sympy.zeros(len(keys), len(unknowns))
    for col, img in enumerate(images):
        for row, (m, c) in enumerate(keys):
            if m in img.terms:
                A[row, col] = QQ_I.to_sympy(img.terms[m][c])
    basis = []
    for vec in A.nullspace():
        terms = {}
        for (m, c), x in zip(unknowns, vec):
            x = QQ_I.from_sympy(sympy.nsimplify(x))
            old = list(terms.get(m, (ZERO, ZERO)))
            old[c] = old[c] + x
            terms[m] = tuple(old)
        basis.append(PolySpinorField(1, terms))
    return basis
