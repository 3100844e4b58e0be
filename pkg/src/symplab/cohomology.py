"""Exact cohomology of a finite cochain model.

Three theories per degree k:

* de Rham:            ker d / im d
* (d+dl)-cohomology:  (ker d  intersect  ker dl) / im(d.dl)
* dl.d-cohomology:    ker(d.dl) / (im d + im dl)

The kernel of the degree-mixing operator d + dl equals ker d intersect
ker dl because the two images live in different degrees.  Quotient
dimensions are computed as rank(numerator stacked over denominator) minus
rank(denominator); everything stays over Q.  The windowed variants
restrict numerators to the model window while denominators keep the full
truncated space, which removes exactly the truncation-boundary classes.

Also here: the reduction of an even-degree cocycle to its constant, the
finite Hodge operator built from adjoints with respect to the model inner
product, and the per-degree inequality check between the theories.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from .linalg import Matrix, Q, qstr, rank_of_rows
from .models import (ComplexModel, FormVector, d_apply, d_lambda_apply,
                     form_vector, poincare_antiderivative)

THEORIES = ("deRham", "dPlusDLambda", "ddLambda")


@dataclass(frozen=True)
class CohomologyReport:
    model_name: str
    theory: str
    dims: tuple[int, ...]
    windowed: bool
    representatives: dict[int, list[list[Fraction]]] | None = None


@dataclass(frozen=True)
class HodgeDegree:
    dim_total: int
    dim_ker_d: int
    dim_h: int
    rank_ddl: int
    rank_adjoint: int
    decomposition_ok: bool
    kernel_matches_cohomology: bool


@dataclass(frozen=True)
class HodgeReport:
    model_name: str
    degrees: tuple[HodgeDegree, ...]

    def kernel_dims(self) -> tuple[int, ...]:
        return tuple(d.dim_ker_d for d in self.degrees)

    def all_ok(self) -> bool:
        return all(d.decomposition_ok and d.kernel_matches_cohomology
                   for d in self.degrees)


# -- operator block helpers --------------------------------------------------

def _dmat(model: ComplexModel, k: int) -> Matrix:
    """d as a matrix from degree k to k+1 (zero space above the top)."""
    if k < 0:
        return Matrix.zeros(model.dim(0), 0)
    return model.d.blocks[k]


def _dlmat(model: ComplexModel, k: int) -> Matrix:
    """d_lambda as a matrix from degree k to k-1 (zero space below 0)."""
    if k > model.top_degree:
        return Matrix.zeros(model.dim(model.top_degree), 0)
    return model.d_lambda.blocks[k]


def _ddl(model: ComplexModel, k: int) -> Matrix:
    """The composite d . d_lambda acting on degree k."""
    n = model.dim(k)
    if k == 0:
        return Matrix.zeros(n, n)
    return _dmat(model, k - 1) @ _dlmat(model, k)


def _kernel_rows(constraint: Matrix, model: ComplexModel, k: int,
                 windowed: bool) -> list[list[Fraction]]:
    """Basis of ker(constraint), optionally restricted to window columns."""
    if not windowed or model.window is None:
        return constraint.nullspace()
    cols = model.window[k]
    sub = constraint.select_columns(cols)
    rows = []
    for small in sub.nullspace():
        full = [Q(0)] * model.dim(k)
        for c, x in zip(cols, small):
            full[c] = x
        rows.append(full)
    return rows


def _den_rows(columns: Matrix) -> list[list[Fraction]]:
    return [columns.column(j) for j in range(columns.cols)]


def _quotient(num_rows, den_rows, want_reps: bool):
    den_rank = rank_of_rows(den_rows)
    dim = rank_of_rows(den_rows + num_rows) - den_rank
    if not want_reps:
        return dim, None
    reps = []
    rows = list(den_rows)
    r = den_rank
    for v in num_rows:
        cand = rank_of_rows(rows + [v])
        if cand > r:
            reps.append(v)
            rows.append(v)
            r = cand
    if len(reps) != dim:
        raise AssertionError("representative extraction lost rank")
    return dim, reps


def _report(model: ComplexModel, theory: str, windowed: bool,
            numerator, denominator, representatives: bool) -> CohomologyReport:
    dims = []
    reps: dict[int, list[list[Fraction]]] = {}
    for k in range(model.top_degree + 1):
        num = numerator(k)
        den = denominator(k)
        dim, rep = _quotient(num, den, representatives)
        dims.append(dim)
        if representatives:
            reps[k] = rep
    return CohomologyReport(model.name, theory, tuple(dims), windowed,
                            reps if representatives else None)


def de_rham(model: ComplexModel, windowed: bool = False,
            representatives: bool = False) -> CohomologyReport:
    return _report(
        model, "deRham", windowed,
        lambda k: _kernel_rows(_dmat(model, k), model, k, windowed),
        lambda k: _den_rows(_dmat(model, k - 1)),
        representatives)


def d_plus_dlambda_cohomology(model: ComplexModel, windowed: bool = False,
                              representatives: bool = False) -> CohomologyReport:
    return _report(
        model, "dPlusDLambda", windowed,
        lambda k: _kernel_rows(Matrix.vstack([_dmat(model, k), _dlmat(model, k)]),
                               model, k, windowed),
        lambda k: _den_rows(_ddl(model, k)),
        representatives)


def dd_lambda_cohomology(model: ComplexModel, windowed: bool = False,
                         representatives: bool = False) -> CohomologyReport:
    return _report(
        model, "ddLambda", windowed,
        lambda k: _kernel_rows(_ddl(model, k), model, k, windowed),
        lambda k: _den_rows(Matrix.hstack([_dmat(model, k - 1), _dlmat(model, k + 1)])),
        representatives)


def compute_report(model: ComplexModel, theory: str, windowed: bool = False,
                   representatives: bool = False) -> CohomologyReport:
    fn = {"deRham": de_rham, "dPlusDLambda": d_plus_dlambda_cohomology,
          "ddLambda": dd_lambda_cohomology}[theory]
    return fn(model, windowed, representatives)


def quotient_sanity(model: ComplexModel) -> bool:
    """Both quotients are well formed: im(d.dl) inside ker d and ker dl,
    and im d + im dl inside ker(d.dl); exact matrix identities."""
    for k in range(model.top_degree + 1):
        s = _ddl(model, k)
        if not (_dmat(model, k) @ s).is_zero():
            return False
        if not (_dlmat(model, k) @ s).is_zero():
            return False
        if not (s @ _dmat(model, k - 1)).is_zero():
            return False
        if not (s @ _dlmat(model, k + 1)).is_zero():
            return False
    return True


def inequality_check(dr: CohomologyReport, dpl: CohomologyReport,
                     ddl: CohomologyReport) -> dict[int, bool]:
    """Per-degree check dim H_dR <= dim H_(d+dl) + dim H_(ddl)."""
    if not (dr.model_name == dpl.model_name == ddl.model_name
            and dr.windowed == dpl.windowed == ddl.windowed):
        raise ValueError("reports must come from the same model and windowing")
    return {k: dr.dims[k] <= dpl.dims[k] + ddl.dims[k]
            for k in range(len(dr.dims))}


# -- reduction of an even cocycle to its constant ----------------------------

def _constant_value(v: FormVector) -> Fraction:
    model = v.model
    const_i = model.meta["mono_index"][(0,) * (2 * model.meta["n"])]
    value = Q(0)
    for i, c in enumerate(v.coords):
        if i == const_i:
            value = c
        elif c != 0:
            raise AssertionError("expected a constant function")
    return value


def reduction_constant(v: FormVector, _perturb_first: FormVector | None = None) -> Fraction:
    """Reduce an even-degree cocycle to its constant.

    Repeatedly take the radial d-antiderivative and apply the
    codifferential; the walk ends on a 0-form which is necessarily
    constant, and that constant is returned.  All antiderivative choices
    are deterministic (radial homotopy, zero integration constants); the
    result does not depend on them, which ``_perturb_first`` lets the
    tests confirm by adding an exact form to the first antiderivative.
    """
    model = v.model
    if model.kind != "polynomial":
        raise ValueError("reduction_constant lives in the polynomial model")
    if v.degree % 2 != 0:
        raise ValueError("reduction_constant needs an even-degree form")
    if not d_apply(v).is_zero() or (v.degree > 0 and not d_lambda_apply(v).is_zero()):
        raise ValueError("input is not a (d + d_lambda)-cocycle")
    current = v
    first = True
    while current.degree > 0:
        y = poincare_antiderivative(current, "d")
        if first and _perturb_first is not None:
            if _perturb_first.degree != y.degree:
                raise ValueError("perturbation degree mismatch")
            y = form_vector(model, y.degree,
                            [a + b for a, b in zip(y.coords, _perturb_first.coords)])
            if d_apply(y).coords != current.coords:
                raise ValueError("perturbation must be d-closed")
        first = False
        current = d_lambda_apply(y)
    return _constant_value(current)


# -- finite Hodge operator ----------------------------------------------------

def _adjoint(m: Matrix, g_src: Matrix, g_dst: Matrix) -> Matrix:
    """Adjoint of m: V_src -> V_dst with respect to the given inner Grams."""
    return g_src.solve_matrix(m.transpose() @ g_dst)


def hodge_check(model: ComplexModel,
                dpl: CohomologyReport | None = None) -> HodgeReport:
    """Kernel of the finite (d+dl)-Laplacian against the cohomology.

    D = (d.dl)(d.dl)* + (d.dl)*(d.dl) + d*.dl.dl*.d + dl*.d.d*.dl
        + d*d + dl*dl,  per degree, adjoints taken in the declared inner
    product.  Reports, per degree, whether ker D matches the
    (d+dl)-cohomology dimension and whether the three-summand
    decomposition ker D + im(d.dl) + (im d* + im dl*) is exhaustive.
    """
    if model.inner is None:
        raise ValueError("hodge_check requires a model with an inner product")
    top = model.top_degree
    gram = model.inner
    if dpl is None:
        dpl = d_plus_dlambda_cohomology(model)

    def g(k: int) -> Matrix:
        return gram[k] if 0 <= k <= top else Matrix.zeros(0, 0)

    degrees = []
    for k in range(top + 1):
        nk = model.dim(k)
        s = _ddl(model, k)
        s_star = _adjoint(s, g(k), g(k))
        d_k = _dmat(model, k)
        dl_k = _dlmat(model, k)
        d_k_star = _adjoint(d_k, g(k), g(k + 1)) if k < top else Matrix.zeros(nk, 0)
        dl_k_star = _adjoint(dl_k, g(k), g(k - 1)) if k > 0 else Matrix.zeros(nk, 0)
        big = (s @ s_star) + (s_star @ s)
        if k < top:
            big = big + d_k_star @ d_k
        if k > 0:
            big = big + dl_k_star @ dl_k
        if k + 2 <= top:
            dl_up = _dlmat(model, k + 2)
            dl_up_star = _adjoint(dl_up, g(k + 2), g(k + 1))
            big = big + d_k_star @ dl_up @ dl_up_star @ d_k
        if k - 2 >= 0:
            d_down = _dmat(model, k - 2)
            d_down_star = _adjoint(d_down, g(k - 2), g(k - 1))
            big = big + dl_k_star @ d_down @ d_down_star @ dl_k
        dim_ker = nk - big.rank()
        rank_ddl = s.rank()
        adjoint_cols = Matrix.hstack([d_k_star, dl_k_star])
        rank_adj = adjoint_cols.rank()
        kernel_cols = Matrix.from_columns(big.nullspace(), rows=nk)
        spanning = Matrix.hstack([kernel_cols, s, adjoint_cols])
        exhaustive = (dim_ker + rank_ddl + rank_adj == nk
                      and spanning.rank() == nk)
        degrees.append(HodgeDegree(
            dim_total=nk, dim_ker_d=dim_ker, dim_h=dpl.dims[k],
            rank_ddl=rank_ddl, rank_adjoint=rank_adj,
            decomposition_ok=exhaustive,
            kernel_matches_cohomology=(dim_ker == dpl.dims[k])))
    return HodgeReport(model.name, tuple(degrees))


# -- emission -----------------------------------------------------------------

THEORY_CSV_NAMES = {"deRham": "dr", "dPlusDLambda": "dpl", "ddLambda": "ddl"}


def report_to_json_dict(report: CohomologyReport) -> dict:
    out = {"model": report.model_name, "theory": report.theory,
           "dims": list(report.dims), "windowed": report.windowed}
    if report.representatives is not None:
        out["representatives"] = {
            str(k): [[qstr(x) for x in v] for v in vs]
            for k, vs in report.representatives.items()}
    return out


def hodge_to_json_dict(report: HodgeReport) -> dict:
    return {"model": report.model_name,
            "degrees": [{"dim_total": d.dim_total, "dim_ker_D": d.dim_ker_d,
                         "dim_h_dpl": d.dim_h, "rank_ddl": d.rank_ddl,
                         "rank_adjoint": d.rank_adjoint,
                         "decomposition_ok": d.decomposition_ok,
                         "kernel_matches_cohomology": d.kernel_matches_cohomology}
                        for d in report.degrees]}


def reports_to_csv(reports, hodge_reports=()) -> str:
    """CSV with schema model,theory,degree,dimension,windowed."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["model", "theory", "degree", "dimension", "windowed"])
    for rep in reports:
        for k, dim in enumerate(rep.dims):
            writer.writerow([rep.model_name, THEORY_CSV_NAMES[rep.theory],
                             k, dim, str(rep.windowed).lower()])
    for rep in hodge_reports:
        for k, deg in enumerate(rep.degrees):
            writer.writerow([rep.model_name, "hodge", k, deg.dim_ker_d, "false"])
    return buf.getvalue()
