"""Exact-arithmetic model of the real symplectic Lie algebra sp(2n, R).

Elements are matrices X with J X = -X^t J where J = [[0, -I], [I, 0]];
equivalently block matrices [[A, B], [C, -A^t]] with B, C symmetric.  The
fixed basis enumerates the A block row-major (n^2 generators), then the
upper triangle of B, then the upper triangle of C, so coordinates and all
reports are reproducible.  Structure constants, adjoint matrices and the
Killing form are computed once per context and shared.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import Matrix, Q, echelon_rows, qf, vec_is_zero
from .polynomials import (charpoly, count_real_roots, even_part,
                          is_squarefree, poly_deg, poly_divmod, poly_eval,
                          squarefree_part)


def j_matrix(n: int) -> Matrix:
    m = Matrix.zeros(2 * n, 2 * n)
    for i in range(n):
        m.data[i][n + i] = Q(-1)
        m.data[n + i][i] = Q(1)
    return m


def is_in_algebra(x: Matrix, n: int) -> bool:
    """Exact membership test J x = -x^t J."""
    if (x.rows, x.cols) != (2 * n, 2 * n):
        raise ValueError(f"expected a {2*n}x{2*n} matrix, got {x.rows}x{x.cols}")
    j = j_matrix(n)
    return ((j @ x) + (x.transpose() @ j)).is_zero()


def is_in_group(x: Matrix, n: int) -> bool:
    """Exact membership test x^t J x = J."""
    if (x.rows, x.cols) != (2 * n, 2 * n):
        raise ValueError(f"expected a {2*n}x{2*n} matrix, got {x.rows}x{x.cols}")
    j = j_matrix(n)
    return (x.transpose() @ j @ x) == j


def _basis_matrices(n: int) -> tuple[list[Matrix], list[str]]:
    basis: list[Matrix] = []
    labels: list[str] = []
    # A block: E_ij in A, -E_ji in the lower right block
    for i in range(n):
        for j in range(n):
            m = Matrix.zeros(2 * n, 2 * n)
            m.data[i][j] = Q(1)
            m.data[n + j][n + i] = Q(-1)
            basis.append(m)
            labels.append(f"A[{i + 1},{j + 1}]")
    # symmetric B block (upper right)
    for i in range(n):
        for j in range(i, n):
            m = Matrix.zeros(2 * n, 2 * n)
            m.data[i][n + j] = Q(1)
            m.data[j][n + i] = Q(1)
            basis.append(m)
            labels.append(f"B[{i + 1},{j + 1}]")
    # symmetric C block (lower left)
    for i in range(n):
        for j in range(i, n):
            m = Matrix.zeros(2 * n, 2 * n)
            m.data[n + i][j] = Q(1)
            m.data[n + j][i] = Q(1)
            basis.append(m)
            labels.append(f"C[{i + 1},{j + 1}]")
    return basis, labels


class AlgebraContext:
    """Basis of sp(2n, R) with precomputed structure constants and Killing form.

    Immutable after construction; safe to share between threads.
    """

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be a positive integer")
        self.n = n
        self.dim = 2 * n * n + n
        self.basis, self.basis_labels = _basis_matrices(n)
        if len(self.basis) != self.dim:
            raise AssertionError("basis enumeration does not match dimension")
        for m in self.basis:
            if not is_in_algebra(m, n):
                raise AssertionError("basis matrix fails algebra membership")
        # structure constants, sparse: _table[(i, j)] = {k: c} for i < j
        self._table: dict[tuple[int, int], dict[int, Fraction]] = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                comm = (self.basis[i] @ self.basis[j]) - (self.basis[j] @ self.basis[i])
                coords = self.coords_of_matrix(comm)
                entry = {k: c for k, c in enumerate(coords) if c != 0}
                if entry:
                    self._table[(i, j)] = entry
        # adjoint of each basis element, sparse by column: _ad[i][a] = {b: c}
        self._ad: list[dict[int, dict[int, Fraction]]] = []
        for i in range(self.dim):
            col: dict[int, dict[int, Fraction]] = {}
            for a in range(self.dim):
                entry = self.pair_bracket(i, a)
                if entry:
                    col[a] = entry
            self._ad.append(col)
        gram = Matrix.zeros(self.dim, self.dim)
        for i in range(self.dim):
            for j in range(i, self.dim):
                acc = Q(0)
                for a, bi in self._ad[i].items():
                    adj = self._ad[j]
                    for b, cval in bi.items():
                        if b in adj:
                            back = adj[b].get(a)
                            if back is not None:
                                acc += cval * back
                gram.data[i][j] = acc
                gram.data[j][i] = acc
        self.killing_gram = gram

    # -- coordinates ---------------------------------------------------
    def coords_of_matrix(self, x: Matrix) -> list[Fraction]:
        """Coordinates in the fixed basis; requires algebra membership."""
        n = self.n
        if not is_in_algebra(x, n):
            raise ValueError("matrix is not in sp(2n, R)")
        coords: list[Fraction] = []
        for i in range(n):
            for j in range(n):
                coords.append(x.data[i][j])
        for i in range(n):
            for j in range(i, n):
                coords.append(x.data[i][n + j])
        for i in range(n):
            for j in range(i, n):
                coords.append(x.data[n + i][j])
        return coords

    def matrix_of_coords(self, coords: Sequence[Fraction]) -> Matrix:
        if len(coords) != self.dim:
            raise ValueError("coordinate length mismatch")
        acc = Matrix.zeros(2 * self.n, 2 * self.n)
        for c, b in zip(coords, self.basis):
            if c != 0:
                acc = acc + b.scale(c)
        return acc

    def element(self, coords: Sequence[int | str | Fraction]) -> "AlgebraElement":
        return AlgebraElement(self, tuple(qf(c) for c in coords))

    def element_from_matrix(self, x: Matrix) -> "AlgebraElement":
        return AlgebraElement(self, tuple(self.coords_of_matrix(x)))

    def basis_element(self, k: int) -> "AlgebraElement":
        coords = [Q(0)] * self.dim
        coords[k] = Q(1)
        return AlgebraElement(self, tuple(coords))

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, tuple([Q(0)] * self.dim))

    # -- structure constants --------------------------------------------
    def pair_bracket(self, i: int, j: int) -> dict[int, Fraction]:
        """Sparse coordinates of [e_i, e_j]."""
        if i == j:
            return {}
        if i < j:
            return self._table.get((i, j), {})
        return {k: -c for k, c in self._table.get((j, i), {}).items()}

    def structure_constant(self, i: int, j: int, k: int) -> Fraction:
        return self.pair_bracket(i, j).get(k, Q(0))

    def bracket_coords(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> list[Fraction]:
        out = [Q(0)] * self.dim
        for (i, j), entry in self._table.items():
            w = x[i] * y[j] - x[j] * y[i]
            if w == 0:
                continue
            for k, c in entry.items():
                out[k] += w * c
        return out

    def ad_matrix(self, x: Sequence[Fraction]) -> Matrix:
        """Matrix of ad(x) acting on algebra coordinates."""
        out = Matrix.zeros(self.dim, self.dim)
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for a, entry in self._ad[i].items():
                for b, c in entry.items():
                    out.data[b][a] += xi * c
        return out


@dataclass(frozen=True)
class AlgebraElement:
    context: AlgebraContext
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coords) != self.context.dim:
            raise ValueError("coordinate length mismatch")

    def to_matrix(self) -> Matrix:
        return self.context.matrix_of_coords(self.coords)

    def is_zero(self) -> bool:
        return vec_is_zero(self.coords)

    def scale(self, c) -> "AlgebraElement":
        c = qf(c)
        return AlgebraElement(self.context, tuple(c * x for x in self.coords))

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        _require_same_context(self, other)
        return AlgebraElement(self.context,
                              tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + other.scale(-1)


class Subspace:
    """Subspace of the algebra, stored as a reduced-echelon row basis."""

    def __init__(self, context: AlgebraContext, rows: Sequence[Sequence[Fraction]]):
        self.context = context
        self.rows = tuple(tuple(r) for r in echelon_rows(rows))

    @classmethod
    def from_elements(cls, elements: Sequence[AlgebraElement]) -> "Subspace":
        if not elements:
            raise ValueError("need at least one element to infer the context")
        ctx = elements[0].context
        for e in elements:
            _require_same_context(elements[0], e)
        return cls(ctx, [list(e.coords) for e in elements])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def elements(self) -> list[AlgebraElement]:
        return [AlgebraElement(self.context, r) for r in self.rows]

    def contains(self, coords: Sequence[Fraction]) -> bool:
        v = list(coords)
        for row in self.rows:
            pivot = next(i for i, x in enumerate(row) if x != 0)
            if v[pivot] != 0:
                f = v[pivot]
                v = [a - f * b for a, b in zip(v, row)]
        return vec_is_zero(v)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Subspace) and self.context is other.context
                and self.rows == other.rows)

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim})"


def _require_same_context(a, b) -> None:
    if a.context is not b.context:
        raise ValueError("elements belong to different algebra contexts")


def standard_basis(n: int) -> AlgebraContext:
    """Context for sp(2n, R) in the fixed block-ordered basis."""
    return AlgebraContext(n)


def bracket(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    _require_same_context(x, y)
    return AlgebraElement(x.context, tuple(x.context.bracket_coords(x.coords, y.coords)))


def killing_form(x: AlgebraElement, y: AlgebraElement) -> Fraction:
    """trace(ad x . ad y), computed from the structure constants."""
    _require_same_context(x, y)
    ctx = x.context
    ax = ctx.ad_matrix(x.coords)
    ay = ctx.ad_matrix(y.coords)
    return sum((ax.data[i][k] * ay.data[k][i]
                for i in range(ctx.dim) for k in range(ctx.dim)
                if ax.data[i][k] != 0 and ay.data[k][i] != 0), Q(0))


def killing_trace_constant(ctx: AlgebraContext) -> Fraction:
    """The constant c with B(x, y) = c * trace(xy) on this algebra.

    Derived report: the Killing form is defined as the ad-trace, and the
    proportionality is verified entrywise before c is returned.
    """
    c = None
    for i in range(ctx.dim):
        for j in range(i, ctx.dim):
            prod = ctx.basis[i] @ ctx.basis[j]
            tr = sum((prod.data[a][a] for a in range(prod.rows)), Q(0))
            kij = ctx.killing_gram.data[i][j]
            if tr == 0:
                if kij != 0:
                    raise AssertionError("Killing form is not proportional to the trace form")
                continue
            ratio = kij / tr
            if c is None:
                c = ratio
            elif c != ratio:
                raise AssertionError("Killing form is not proportional to the trace form")
    if c is None:
        raise AssertionError("trace form vanished identically")
    return c


def is_regular(a: AlgebraElement) -> bool:
    """True iff the characteristic polynomial of a's matrix is squarefree,
    i.e. a has 2n distinct complex eigenvalues."""
    return is_squarefree(charpoly(a.to_matrix()))


def centralizer(a: AlgebraElement) -> Subspace:
    """Echelonized basis of {x : [a, x] = 0}, the exact kernel of ad(a)."""
    ctx = a.context
    return Subspace(ctx, ctx.ad_matrix(a.coords).nullspace())


def is_abelian(s: Subspace) -> bool:
    ctx = s.context
    rows = s.rows
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            if not vec_is_zero(ctx.bracket_coords(rows[i], rows[j])):
                return False
    return True


def is_maximal_abelian(s: Subspace) -> bool:
    """True iff the joint centralizer of s equals s.

    Raises ValueError on non-abelian input.
    """
    if not is_abelian(s):
        raise ValueError("is_maximal_abelian requires an abelian subspace")
    ctx = s.context
    if not s.rows:
        return False  # the whole algebra centralizes the zero subspace
    stacked = Matrix.vstack([ctx.ad_matrix(r) for r in s.rows])
    joint = Subspace(ctx, stacked.nullspace())
    return joint == s


@dataclass(frozen=True)
class SpectralType:
    """Eigenvalue families of an algebra element.

    real_pairs counts {a, -a} families, imaginary_pairs counts {bi, -bi},
    complex_quadruples counts {a+bi, -a-bi, a-bi, -a+bi}; defective is the
    number of eigenvalues (with multiplicity) left over, which is 0 exactly
    for regular elements.
    """

    real_pairs: int
    imaginary_pairs: int
    complex_quadruples: int
    defective: int
    label: str

    def to_dict(self) -> dict:
        return {"real_pairs": self.real_pairs,
                "imaginary_pairs": self.imaginary_pairs,
                "complex_quadruples": self.complex_quadruples,
                "defective": self.defective,
                "label": self.label}


def spectral_type(a: AlgebraElement) -> SpectralType:
    """Classify the eigenvalue families of a's matrix, exactly.

    The characteristic polynomial of a symplectic algebra element is even,
    p(t) = P(t^2); positive real roots of P give real pairs, negative real
    roots give imaginary pairs, and conjugate pairs of complex roots give
    quadruples.  Sturm counts on P make the whole classification exact.
    """
    ctx = a.context
    n = ctx.n
    p = charpoly(a.to_matrix())
    big = even_part(p)  # degree n in mu = t^2
    sf = squarefree_part(big)
    if poly_eval(sf, Q(0)) == 0:
        sf = poly_divmod(sf, [Q(0), Q(1)])[0]  # drop the mu = 0 root
    pos = count_real_roots(sf, Q(0), None) if poly_deg(sf) > 0 else 0
    neg = count_real_roots(sf, None, Q(0)) if poly_deg(sf) > 0 else 0
    quads = (poly_deg(sf) - pos - neg) // 2
    defective = 2 * n - 2 * pos - 2 * neg - 4 * quads
    if defective > 0:
        label = "parabolic/defective"
    elif neg == n:
        label = "elliptic"
    elif pos == n:
        label = "hyperbolic"
    else:
        label = "mixed"
    return SpectralType(pos, neg, quads, defective, label)


def random_element(ctx: AlgebraContext, rng: random.Random,
                   low: int = -9, high: int = 9) -> AlgebraElement:
    """Integer coordinates uniform in [low, high] in the block parametrization."""
    return ctx.element([rng.randint(low, high) for _ in range(ctx.dim)])


def random_regular_element(ctx: AlgebraContext, rng: random.Random,
                           low: int = -9, high: int = 9) -> AlgebraElement:
    """Redraw until regular; regularity is Zariski-generic so this is fast."""
    while True:
        a = random_element(ctx, rng, low, high)
        if is_regular(a):
            return a
