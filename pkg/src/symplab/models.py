"""Finite cochain models carrying d, the symplectic star, and d^Lambda.

Three builders:

* ``build_torus_model(n)`` -- constant-coefficient exterior forms on a
  2n-torus; d = 0, the star comes from w0 = sum dxi^dyi.
* ``build_polynomial_model(n, D)`` -- forms on R^2n with polynomial
  coefficients truncated at total degree D.  d drops coefficient degree
  by one and the star acts on the exterior factor only, so all five
  operator identities hold exactly on the truncated space.  The window
  marks coefficients of degree <= D-2, the sub-basis whose cohomology is
  unaffected by the truncation boundary.
* ``build_suspension_model(N)`` -- the holonomy-invariant subcomplex of
  Fourier-truncated forms on T^2 for the torus map x -> Lx with
  L = [[1, 1], [0, 1]], i.e. the basic complex of the suspension
  foliation.  Derivatives absorb the factor 2*pi into the basis scaling,
  so every matrix stays rational with integer entries.

The codifferential on k-forms is (-1)^(k+1) star . d . star; the degree
sign is what makes d and the codifferential anticommute (it drops out of
every kernel, image and cohomology dimension, and is +1 in the odd
degrees the reduction procedure walks through).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import exterior
from .linalg import Matrix, Q, qf

EXT_NAMES_XY = ("dx", "dy")  # interleaved pairs dx_i, dy_i


def _ext_label_xy(mono: exterior.Mono) -> str:
    if not mono:
        return "1"
    return "^".join(f"{EXT_NAMES_XY[v % 2]}{v // 2 + 1}" for v in mono)


def _ext_label_torus2(mono: exterior.Mono) -> str:
    if not mono:
        return "1"
    return "^".join(f"dx{v + 1}" for v in mono)


@dataclass
class GradedOperator:
    """Family of matrices, one per degree, with declared degree targets."""

    blocks: dict[int, Matrix]
    targets: dict[int, int]

    @classmethod
    def from_shift(cls, blocks: dict[int, Matrix], shift: int) -> "GradedOperator":
        return cls(blocks, {k: k + shift for k in blocks})

    @property
    def degree_shift(self) -> int | None:
        shifts = {t - k for k, t in self.targets.items()}
        return shifts.pop() if len(shifts) == 1 else None

    def block(self, k: int) -> Matrix:
        if k not in self.blocks:
            raise ValueError(f"degree {k} out of range for this operator")
        return self.blocks[k]


@dataclass
class ComplexModel:
    """Finite graded cochain model with exact operator matrices."""

    name: str
    kind: str  # torus | polynomial | suspension
    top_degree: int
    graded_basis: dict[int, list[str]]
    d: GradedOperator
    star_s: GradedOperator
    d_lambda: GradedOperator
    inner: dict[int, Matrix] | None = None
    window: dict[int, list[int]] | None = None
    meta: dict = field(default_factory=dict)

    def dim(self, k: int) -> int:
        if 0 <= k <= self.top_degree:
            return len(self.graded_basis[k])
        return 0

    def dims(self) -> list[int]:
        return [self.dim(k) for k in range(self.top_degree + 1)]


@dataclass(frozen=True)
class FormVector:
    model: ComplexModel
    degree: int
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        expected = self.model.dim(self.degree)
        if len(self.coords) != expected:
            raise ValueError(f"expected {expected} coordinates in degree {self.degree}")

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coords)


def form_vector(model: ComplexModel, degree: int, coords) -> FormVector:
    return FormVector(model, degree, tuple(qf(c) for c in coords))


def zero_form(model: ComplexModel, degree: int) -> FormVector:
    return FormVector(model, degree, tuple([Q(0)] * model.dim(degree)))


def d_apply(v: FormVector) -> FormVector:
    m = v.model
    if not 0 <= v.degree <= m.top_degree:
        raise ValueError("degree out of range")
    if v.degree == m.top_degree:
        return FormVector(m, m.top_degree + 1, ())
    return FormVector(m, v.degree + 1, tuple(m.d.block(v.degree).apply(list(v.coords))))


def d_lambda_apply(v: FormVector) -> FormVector:
    m = v.model
    if not 0 <= v.degree <= m.top_degree:
        raise ValueError("degree out of range")
    if v.degree == 0:
        return FormVector(m, -1, ())
    return FormVector(m, v.degree - 1, tuple(m.d_lambda.block(v.degree).apply(list(v.coords))))


def star_s_apply(v: FormVector) -> FormVector:
    m = v.model
    if not 0 <= v.degree <= m.top_degree:
        raise ValueError("degree out of range")
    return FormVector(m, m.top_degree - v.degree,
                      tuple(m.star_s.block(v.degree).apply(list(v.coords))))


def _compose_dlambda(d: GradedOperator, star: GradedOperator, top: int,
                     dims) -> GradedOperator:
    """The codifferential (-1)^(k+1) star . d . star, blocks per degree.

    The degree sign is forced: without it the anticommutation identity
    d.dl + dl.d = 0 fails already for 1-forms on R^2.  On the odd degrees
    that the reduction procedure walks through the sign is +1.
    """
    blocks: dict[int, Matrix] = {0: Matrix.zeros(0, dims(0))}
    for k in range(1, top + 1):
        composed = star.blocks[top - k + 1] @ d.blocks[top - k] @ star.blocks[k]
        blocks[k] = composed if k % 2 == 1 else composed.scale(-1)
    return GradedOperator(blocks, {k: k - 1 for k in blocks})


def operator_identity_report(model: ComplexModel) -> dict[str, dict[int, bool]]:
    """Exact per-degree checks of the five structural matrix identities."""
    top = model.top_degree
    d, star, dl = model.d, model.star_s, model.d_lambda
    report: dict[str, dict[int, bool]] = {
        "d.d=0": {}, "star.star=id": {}, "dl=signed star.d.star": {},
        "dl.dl=0": {}, "d.dl+dl.d=0": {},
    }
    for k in range(top):
        report["d.d=0"][k] = (d.blocks[k + 1] @ d.blocks[k]).is_zero()
    for k in range(top + 1):
        comp = star.blocks[top - k] @ star.blocks[k]
        report["star.star=id"][k] = comp == Matrix.identity(model.dim(k))
    for k in range(top + 1):
        if k == 0:
            report["dl=signed star.d.star"][k] = dl.blocks[0].rows == 0
        else:
            composed = star.blocks[top - k + 1] @ d.blocks[top - k] @ star.blocks[k]
            if k % 2 == 0:
                composed = composed.scale(-1)
            report["dl=signed star.d.star"][k] = dl.blocks[k] == composed
    for k in range(top + 1):
        if k <= 1:
            report["dl.dl=0"][k] = True
        else:
            report["dl.dl=0"][k] = (dl.blocks[k - 1] @ dl.blocks[k]).is_zero()
    for k in range(top + 1):
        nk = model.dim(k)
        first = (d.blocks[k - 1] @ dl.blocks[k]) if k >= 1 else Matrix.zeros(nk, nk)
        second = (dl.blocks[k + 1] @ d.blocks[k]) if k < top else Matrix.zeros(nk, nk)
        report["d.dl+dl.d=0"][k] = (first + second).is_zero()
    return report


def assert_model_identities(model: ComplexModel) -> None:
    report = operator_identity_report(model)
    for name, per_degree in report.items():
        bad = [k for k, ok in per_degree.items() if not ok]
        if bad:
            raise AssertionError(f"identity {name} fails in degrees {bad} of {model.name}")


# ---------------------------------------------------------------------------
# torus model
# ---------------------------------------------------------------------------

def build_torus_model(n: int) -> ComplexModel:
    """Constant-coefficient forms on a 2n-torus: d = 0, star from w0."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    m = 2 * n
    star_ext = exterior.star_blocks(n)
    basis = {k: [_ext_label_xy(mono) for mono in exterior.ext_basis(m, k)]
             for k in range(m + 1)}
    dims = {k: len(basis[k]) for k in basis}
    d = GradedOperator.from_shift(
        {k: Matrix.zeros(dims[k + 1], dims[k]) for k in range(m)} | {m: Matrix.zeros(0, dims[m])},
        1)
    star = GradedOperator({k: star_ext[k] for k in range(m + 1)},
                          {k: m - k for k in range(m + 1)})
    dl = _compose_dlambda(d, star, m, lambda k: dims.get(k, 0))
    inner = {k: Matrix.identity(dims[k]) for k in range(m + 1)}
    model = ComplexModel(name=f"torus-n{n}", kind="torus", top_degree=m,
                         graded_basis=basis, d=d, star_s=star, d_lambda=dl,
                         inner=inner, meta={"n": n})
    assert_model_identities(model)
    return model


# ---------------------------------------------------------------------------
# polynomial model on R^2n
# ---------------------------------------------------------------------------

def _monomials(nvars: int, max_degree: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...], remaining: int, budget: int):
        if remaining == 0:
            out.append(prefix)
            return
        for e in range(budget + 1):
            rec(prefix + (e,), remaining - 1, budget - e)

    rec((), nvars, max_degree)
    out.sort(key=lambda t: (sum(t), t))
    return out


def _var_name(v: int) -> str:
    return f"{'xy'[v % 2]}{v // 2 + 1}"


def _mono_label(mono: tuple[int, ...]) -> str:
    parts = [f"{_var_name(v)}" + (f"^{e}" if e > 1 else "")
             for v, e in enumerate(mono) if e > 0]
    return "*".join(parts) if parts else "1"


def build_polynomial_model(n: int, cutoff: int) -> ComplexModel:
    """Polynomial-coefficient forms on R^2n, coefficient degree <= cutoff."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    if cutoff < 2:
        raise ValueError("cutoff must be at least 2")
    m = 2 * n
    monos = _monomials(m, cutoff)
    mono_index = {mono: i for i, mono in enumerate(monos)}
    ext = {k: exterior.ext_basis(m, k) for k in range(m + 1)}
    ext_index = {k: {mono: i for i, mono in enumerate(ext[k])} for k in range(m + 1)}
    dims = {k: len(monos) * len(ext[k]) for k in range(m + 1)}

    basis = {}
    for k in range(m + 1):
        labels = []
        for mono in monos:
            for emono in ext[k]:
                ml, el = _mono_label(mono), _ext_label_xy(emono)
                labels.append(el if ml == "1" else (ml if el == "1" else f"{ml} {el}"))
        basis[k] = labels

    def index(k: int, mono_i: int, ext_i: int) -> int:
        return mono_i * len(ext[k]) + ext_i

    d_blocks: dict[int, Matrix] = {}
    for k in range(m):
        blk = Matrix.zeros(dims[k + 1], dims[k])
        for mi, mono in enumerate(monos):
            for ei, emono in enumerate(ext[k]):
                col = index(k, mi, ei)
                for v, e in enumerate(mono):
                    if e == 0 or v in emono:
                        continue
                    w = exterior.wedge_monomials((v,), emono)
                    if w is None:
                        continue
                    sign, target_ext = w
                    lowered = mono[:v] + (e - 1,) + mono[v + 1:]
                    row = index(k + 1, mono_index[lowered], ext_index[k + 1][target_ext])
                    blk.data[row][col] += Q(sign * e)
        d_blocks[k] = blk
    d_blocks[m] = Matrix.zeros(0, dims[m])
    d = GradedOperator.from_shift(d_blocks, 1)

    star_ext = exterior.star_blocks(n)
    star = GradedOperator(
        {k: Matrix.kron(Matrix.identity(len(monos)), star_ext[k]) for k in range(m + 1)},
        {k: m - k for k in range(m + 1)})
    dl = _compose_dlambda(d, star, m, lambda k: dims.get(k, 0))

    window = {k: [index(k, mi, ei)
                  for mi, mono in enumerate(monos) if sum(mono) <= cutoff - 2
                  for ei in range(len(ext[k]))]
              for k in range(m + 1)}

    model = ComplexModel(name=f"polynomial-n{n}-D{cutoff}", kind="polynomial",
                         top_degree=m, graded_basis=basis, d=d, star_s=star,
                         d_lambda=dl, inner=None, window=window,
                         meta={"n": n, "D": cutoff, "monos": monos,
                               "mono_index": mono_index})
    assert_model_identities(model)
    return model


def w0_power_form(model: ComplexModel, j: int) -> FormVector:
    """w0^j as a constant-coefficient form of degree 2j."""
    n = model.meta["n"]
    ext_coords = exterior.w0_power_coords(n, j)
    if model.kind == "torus":
        return form_vector(model, 2 * j, ext_coords)
    if model.kind != "polynomial":
        raise ValueError("w0 powers are built on torus or polynomial models")
    monos = model.meta["monos"]
    const_i = model.meta["mono_index"][(0,) * (2 * n)]
    ecount = len(ext_coords)
    coords = [Q(0)] * model.dim(2 * j)
    for ei, c in enumerate(ext_coords):
        coords[const_i * ecount + ei] = c
    return form_vector(model, 2 * j, coords)


def poincare_antiderivative(v: FormVector, operator: str = "d") -> FormVector:
    """Primitive under d (or d_lambda) via the exact radial homotopy.

    For a closed k-form with monomial coefficients the homotopy sends
    p * dI to sum_j (-1)^(j-1)/(deg p + k) * p*x_{i_j} * d(I without i_j);
    the d_lambda primitive conjugates this by the star.  Deterministic:
    integration constants are always zero.
    """
    model = v.model
    if model.kind != "polynomial":
        raise ValueError("poincare_antiderivative is supported on polynomial models only")
    if operator not in ("d", "d_lambda"):
        raise ValueError("operator must be 'd' or 'd_lambda'")
    if operator == "d_lambda":
        if v.degree > model.top_degree - 1:
            raise ValueError("d_lambda antiderivative needs degree <= top - 1")
        if not d_lambda_apply(v).is_zero():
            raise ValueError("input is not coclosed")
        w = star_s_apply(_radial_homotopy(star_s_apply(v)))
        # sign chosen so that d_lambda(w) = v under the signed codifferential
        if v.degree % 2 == 1:
            w = FormVector(model, w.degree, tuple(-c for c in w.coords))
        return w
    if v.degree < 1:
        raise ValueError("d antiderivative needs degree >= 1")
    if not d_apply(v).is_zero():
        raise ValueError("input is not closed")
    return _radial_homotopy(v)


def _radial_homotopy(v: FormVector) -> FormVector:
    model = v.model
    n = model.meta["n"]
    cutoff = model.meta["D"]
    m = 2 * n
    k = v.degree
    if k < 1:
        raise ValueError("homotopy needs degree >= 1")
    monos = model.meta["monos"]
    mono_index = model.meta["mono_index"]
    ext_src = exterior.ext_basis(m, k)
    ext_dst = exterior.ext_basis(m, k - 1)
    ext_dst_index = {mono: i for i, mono in enumerate(ext_dst)}
    out = [Q(0)] * model.dim(k - 1)
    for idx, c in enumerate(v.coords):
        if c == 0:
            continue
        mi, ei = divmod(idx, len(ext_src))
        mono, emono = monos[mi], ext_src[ei]
        weight = Q(1, sum(mono) + k)
        for pos, var in enumerate(emono):
            if sum(mono) + 1 > cutoff:
                raise ValueError("antiderivative leaves the coefficient cutoff")
            raised = mono[:var] + (mono[var] + 1,) + mono[var + 1:]
            target_ext = emono[:pos] + emono[pos + 1:]
            row = mono_index[raised] * len(ext_dst) + ext_dst_index[target_ext]
            out[row] += c * weight * ((-1) ** pos)
    return form_vector(model, k - 1, out)


def alpha_form(model: ComplexModel, k: int) -> FormVector:
    """Normalized primitive of w0^k: d(alpha) = w0^k exactly.

    The normalization is computed by the homotopy itself rather than
    taken from a printed coefficient.
    """
    n = model.meta.get("n")
    if model.kind != "polynomial":
        raise ValueError("alpha_form lives in the polynomial model")
    if not 1 <= k <= n:
        raise ValueError("k out of range")
    return poincare_antiderivative(w0_power_form(model, k), "d")


# ---------------------------------------------------------------------------
# suspension model
# ---------------------------------------------------------------------------

FourierMode = tuple[str, tuple[int, int]]  # ("const"|"cos"|"sin", (m1, m2))


def _canonical_mode(m: tuple[int, int]) -> tuple[int, tuple[int, int]]:
    """Sign-canonical representative: cos(-m) = cos(m), sin(-m) = -sin(m)."""
    m1, m2 = m
    if m1 > 0 or (m1 == 0 and m2 > 0):
        return 1, m
    return -1, (-m1, -m2)


def _fourier_functions(modes: list[tuple[int, int]]) -> list[FourierMode]:
    out: list[FourierMode] = [("const", (0, 0))]
    for m in sorted(modes):
        out.append(("cos", m))
        out.append(("sin", m))
    return out


def _mode_label(f: FourierMode) -> str:
    kind, (m1, m2) = f
    if kind == "const":
        return "1"
    terms = []
    if m1:
        terms.append(f"{m1}*x1" if m1 != 1 else "x1")
    if m2:
        sign = "+" if (m2 > 0 and terms) else ""
        terms.append(f"{sign}{m2}*x2" if m2 != 1 else f"{sign}x2")
    return f"{kind}(2*pi*({''.join(terms)}))"


def _derivative_entries(f: FourierMode, axis: int) -> list[tuple[Fraction, FourierMode]]:
    """d/dx_axis in 2*pi units: cos_m -> -m_a sin_m, sin_m -> m_a cos_m."""
    kind, m = f
    if kind == "const":
        return []
    coeff = m[axis]
    if coeff == 0:
        return []
    if kind == "cos":
        return [(Q(-coeff), ("sin", m))]
    return [(Q(coeff), ("cos", m))]


def _pullback_function(f: FourierMode, box: int | None = None) -> list[tuple[Fraction, FourierMode]] | None:
    """Composition with x -> Lx on modes: m -> L^t m = (m1, m1 + m2).

    Returns None when the image mode leaves the cutoff box.
    """
    kind, (m1, m2) = f
    if kind == "const":
        return [(Q(1), f)]
    image = (m1, m1 + m2)
    if box is not None and (abs(image[0]) > box or abs(image[1]) > box):
        return None
    sign, canon = _canonical_mode(image)
    if kind == "cos":
        return [(Q(1), ("cos", canon))]
    return [(Q(sign), ("sin", canon))]


_PULLBACK_EXT: dict[exterior.Mono, list[tuple[int, exterior.Mono]]] = {
    (): [(1, ())],
    (0,): [(1, (0,)), (1, (1,))],  # dx1 -> dx1 + dx2
    (1,): [(1, (1,))],
    (0, 1): [(1, (0, 1))],  # (dx1 + dx2) ^ dx2 = dx1 ^ dx2
}


def _fourier_complex(functions: list[FourierMode]):
    """d blocks and bookkeeping for a span of Fourier modes on T^2."""
    findex = {f: i for i, f in enumerate(functions)}
    ext = {k: exterior.ext_basis(2, k) for k in range(3)}
    dims = {k: len(functions) * len(ext[k]) for k in range(3)}

    def index(k: int, fi: int, ei: int) -> int:
        return fi * len(ext[k]) + ei

    d_blocks: dict[int, Matrix] = {}
    for k in range(2):
        blk = Matrix.zeros(dims[k + 1], dims[k])
        ext_dst_index = {mono: i for i, mono in enumerate(ext[k + 1])}
        for fi, f in enumerate(functions):
            for ei, emono in enumerate(ext[k]):
                col = index(k, fi, ei)
                for axis in range(2):
                    if axis in emono:
                        continue
                    w = exterior.wedge_monomials((axis,), emono)
                    if w is None:
                        continue
                    sign, target = w
                    for coeff, g in _derivative_entries(f, axis):
                        row = index(k + 1, findex[g], ext_dst_index[target])
                        blk.data[row][col] += sign * coeff
        d_blocks[k] = blk
    d_blocks[2] = Matrix.zeros(0, dims[2])
    return findex, ext, dims, index, d_blocks


def _fourier_pullback(functions: list[FourierMode], findex, ext, dims, index,
                      box: int | None):
    """Pullback matrices per degree and the columns where they are defined."""
    p_blocks: dict[int, Matrix] = {}
    stable: dict[int, list[int]] = {}
    for k in range(3):
        blk = Matrix.zeros(dims[k], dims[k])
        cols: list[int] = []
        ext_index = {mono: i for i, mono in enumerate(ext[k])}
        for fi, f in enumerate(functions):
            transported = _pullback_function(f, box)
            if transported is None or any(g not in findex for _, g in transported):
                continue  # image mode leaves the cutoff: column stays undefined
            for ei, emono in enumerate(ext[k]):
                col = index(k, fi, ei)
                for coeff, g in transported:
                    for esign, target in _PULLBACK_EXT[emono]:
                        row = index(k, findex[g], ext_index[target])
                        blk.data[row][col] += esign * coeff
                cols.append(col)
        p_blocks[k] = blk
        stable[k] = cols
    return p_blocks, stable


def suspension_full_complex(cutoff: int):
    """Full truncated complex on T^2 with the partial pullback operator.

    Returns (functions, dims, d_blocks, p_blocks, stable_columns); used to
    check that the pullback commutes with d where both sides are defined
    and that w0 is pullback-invariant.
    """
    modes = []
    for m1 in range(-cutoff, cutoff + 1):
        for m2 in range(-cutoff, cutoff + 1):
            if (m1, m2) == (0, 0):
                continue
            if _canonical_mode((m1, m2))[0] == 1 and _canonical_mode((m1, m2))[1] == (m1, m2):
                modes.append((m1, m2))
    functions = _fourier_functions(modes)
    findex, ext, dims, index, d_blocks = _fourier_complex(functions)
    p_blocks, stable = _fourier_pullback(functions, findex, ext, dims, index, cutoff)
    return functions, dims, d_blocks, p_blocks, stable


def build_suspension_model(cutoff: int) -> ComplexModel:
    """Basic complex of the suspension foliation at Fourier cutoff N.

    Only modes whose orbit under m -> (m1, m1 + m2) stays inside the box
    can support invariant vectors (the orbit is finite exactly when
    m1 = 0), so the invariance solve runs on that stable sector; the
    invariant subcomplex is the exact nullspace of P - I in each degree.
    """
    if cutoff < 1:
        raise ValueError("cutoff must be a positive integer")
    sector_modes = [(0, m2) for m2 in range(1, cutoff + 1)]
    functions = _fourier_functions(sector_modes)
    findex, ext, dims, index, d_blocks = _fourier_complex(functions)
    p_blocks, stable = _fourier_pullback(functions, findex, ext, dims, index, None)
    for k in range(3):
        if len(stable[k]) != dims[k]:
            raise AssertionError("stable sector is not closed under the pullback")

    star_ext = exterior.star_blocks(1)
    star_sector = {k: Matrix.kron(Matrix.identity(len(functions)), star_ext[k])
                   for k in range(3)}

    inv_basis: dict[int, list[list[Fraction]]] = {}
    for k in range(3):
        delta = p_blocks[k] - Matrix.identity(dims[k])
        inv_basis[k] = Matrix(delta.data).nullspace() if dims[k] else []
    embed = {k: Matrix.from_columns(inv_basis[k], rows=dims[k]) if inv_basis[k]
             else Matrix.zeros(dims[k], 0) for k in range(3)}

    def restrict(block: Matrix, k_src: int, k_dst: int) -> Matrix:
        image = block @ embed[k_src]
        return embed[k_dst].solve_matrix(image)

    inv_dims = {k: len(inv_basis[k]) for k in range(3)}
    d_inv = {k: restrict(d_blocks[k], k, k + 1) for k in range(2)}
    d_inv[2] = Matrix.zeros(0, inv_dims[2])
    star_inv = {k: restrict(star_sector[k], k, 2 - k) for k in range(3)}

    labels: dict[int, list[str]] = {}
    for k in range(3):
        ext_labels = [_ext_label_torus2(mono) for mono in ext[k]]
        sector_labels = []
        for f in functions:
            for el in ext_labels:
                fl = _mode_label(f)
                sector_labels.append(el if fl == "1" else (fl if el == "1" else f"{fl} {el}"))
        labels[k] = []
        for column in (embed[k].columns() if inv_dims[k] else []):
            support = [i for i, x in enumerate(column) if x != 0]
            if len(support) == 1 and column[support[0]] == 1:
                labels[k].append(sector_labels[support[0]])
            else:
                labels[k].append(" + ".join(
                    f"{qf(column[i])}*{sector_labels[i]}" for i in support))

    d_op = GradedOperator.from_shift(d_inv, 1)
    star_op = GradedOperator(star_inv, {k: 2 - k for k in range(3)})
    dl_op = _compose_dlambda(d_op, star_op, 2, lambda k: inv_dims.get(k, 0))
    inner = {k: Matrix.identity(inv_dims[k]) for k in range(3)}
    model = ComplexModel(name=f"suspension-N{cutoff}", kind="suspension",
                         top_degree=2, graded_basis=labels, d=d_op,
                         star_s=star_op, d_lambda=dl_op, inner=inner,
                         meta={"N": cutoff})
    assert_model_identities(model)
    return model


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def model_to_json_dict(model: ComplexModel) -> dict:
    return {
        "name": model.name,
        "dims": {str(k): model.dim(k) for k in range(model.top_degree + 1)},
        "d_blocks": {str(k): m.to_json_dict() for k, m in model.d.blocks.items()},
        "star_blocks": {str(k): m.to_json_dict() for k, m in model.star_s.blocks.items()},
        "window": (None if model.window is None
                   else {str(k): v for k, v in model.window.items()}),
    }


def form_to_json_dict(v: FormVector) -> dict:
    from .linalg import qstr
    return {"degree": v.degree, "coords": [qstr(c) for c in v.coords]}
