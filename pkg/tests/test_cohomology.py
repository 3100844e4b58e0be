import random
from fractions import Fraction as Q

import pytest

import symplab.cohomology as coh
from symplab.linalg import Matrix, rank_of_rows
from symplab.models import (build_polynomial_model, build_suspension_model,
                            build_torus_model, d_apply, d_lambda_apply,
                            form_vector, w0_power_form)

TORUS1 = build_torus_model(1)
TORUS2 = build_torus_model(2)
POLY6 = build_polynomial_model(1, 6)
SUSP2 = build_suspension_model(2)


def test_torus_reports_all_equal_full_exterior_algebra():
    # d = 0 everywhere, so every theory reports the binomial dimensions
    for fn in (coh.de_rham, coh.d_plus_dlambda_cohomology, coh.dd_lambda_cohomology):
        assert fn(TORUS1).dims == (1, 2, 1)
        assert fn(TORUS2).dims == (1, 4, 6, 4, 1)


def test_suspension_de_rham():
    assert coh.de_rham(SUSP2).dims == (1, 1, 5)
    assert coh.de_rham(build_suspension_model(8)).dims == (1, 1, 17)


def test_suspension_symplectic_theories():
    assert coh.d_plus_dlambda_cohomology(SUSP2).dims == (1, 5, 1)
    assert coh.dd_lambda_cohomology(SUSP2).dims == (5, 1, 5)


def test_suspension_scaling_in_cutoff():
    for cutoff in (1, 2, 3, 4, 5, 6, 7, 8):
        model = build_suspension_model(cutoff)
        width = 2 * cutoff + 1
        assert coh.d_plus_dlambda_cohomology(model).dims == (1, width, 1)
        assert coh.dd_lambda_cohomology(model).dims == (width, 1, width)


def test_polynomial_windowed_dimensions():
    assert coh.d_plus_dlambda_cohomology(POLY6, windowed=True).dims == (1, 0, 1)
    assert coh.dd_lambda_cohomology(POLY6, windowed=True).dims == (0, 1, 0)
    assert coh.de_rham(POLY6, windowed=True).dims == (1, 0, 0)


def test_polynomial_windowed_stability_across_cutoffs():
    reference = None
    for cutoff in (4, 6, 8):
        model = build_polynomial_model(1, cutoff)
        dims = (coh.de_rham(model, windowed=True).dims,
                coh.d_plus_dlambda_cohomology(model, windowed=True).dims,
                coh.dd_lambda_cohomology(model, windowed=True).dims)
        if reference is None:
            reference = dims
        assert dims == reference


def test_quotient_sanity_all_models():
    for model in (TORUS1, TORUS2, POLY6, SUSP2):
        assert coh.quotient_sanity(model)


def test_representatives_are_independent_mod_denominator():
    rep = coh.d_plus_dlambda_cohomology(SUSP2, representatives=True)
    for k, vectors in rep.representatives.items():
        assert len(vectors) == rep.dims[k]
        den = coh._den_rows(coh._ddl(SUSP2, k))
        assert rank_of_rows(den + vectors) == rank_of_rows(den) + len(vectors)


def test_windowed_numerators_stay_in_window():
    model = build_polynomial_model(1, 4)
    rep = coh.dd_lambda_cohomology(model, windowed=True, representatives=True)
    for k, vectors in rep.representatives.items():
        allowed = set(model.window[k])
        for v in vectors:
            assert all(i in allowed for i, x in enumerate(v) if x != 0)


# -- reduction constants ---------------------------------------------------------

def test_reduction_constant_w0():
    assert coh.reduction_constant(w0_power_form(POLY6, 1)) == Q(-1)


def test_reduction_constant_degree0_convention():
    assert coh.reduction_constant(w0_power_form(POLY6, 0)) == Q(1)
    zero = form_vector(POLY6, 0, [Q(0)] * POLY6.dim(0))
    assert coh.reduction_constant(zero) == Q(0)


def test_reduction_constant_top_power_n2():
    # exact value for w0^2 on R^4: the factorial factor makes it +2
    model = build_polynomial_model(2, 4)
    assert coh.reduction_constant(w0_power_form(model, 2)) == Q(2)


def test_reduction_constant_kills_exact_cocycles():
    rng = random.Random(51)
    for _ in range(10):
        z = form_vector(POLY6, 2, [Q(rng.randint(-9, 9)) for _ in range(POLY6.dim(2))])
        x = d_apply(d_lambda_apply(z))
        assert coh.reduction_constant(x) == Q(0)


def test_reduction_constant_independent_of_antiderivative_choice():
    # perturb the first antiderivative by an exact 1-form
    rng = random.Random(52)
    f = form_vector(POLY6, 0, [Q(rng.randint(-5, 5)) for _ in range(POLY6.dim(0))])
    perturbation = d_apply(f)
    x = w0_power_form(POLY6, 1)
    assert coh.reduction_constant(x) == coh.reduction_constant(x, _perturb_first=perturbation)


def test_reduction_constant_preconditions():
    with pytest.raises(ValueError):
        coh.reduction_constant(w0_power_form(POLY6, 1),
                               _perturb_first=w0_power_form(POLY6, 0))
    a = form_vector(POLY6, 1, [Q(0)] * POLY6.dim(1))
    with pytest.raises(ValueError):
        coh.reduction_constant(a)  # odd degree
    # non-cocycle: x * w0 is closed (top degree) but not coclosed
    x_i = POLY6.meta["mono_index"][(1, 0)]
    coords = [Q(0)] * POLY6.dim(2)
    coords[x_i] = Q(1)
    with pytest.raises(ValueError):
        coh.reduction_constant(form_vector(POLY6, 2, coords))
    with pytest.raises(ValueError):
        coh.reduction_constant(form_vector(TORUS1, 2, [Q(1)]))


def test_reduction_monomorphism_on_windowed_even_cocycles():
    # c(x) = 0 iff x is exact, over a basis of windowed even cocycles
    model = POLY6
    for k in (0, 2):
        constraint = Matrix.vstack([coh._dmat(model, k), coh._dlmat(model, k)])
        num = coh._kernel_rows(constraint, model, k, True)
        den = coh._den_rows(coh._ddl(model, k))
        den_rank = rank_of_rows(den)
        for v in num:
            exact = rank_of_rows(den + [v]) == den_rank
            c = coh.reduction_constant(form_vector(model, k, v))
            assert (c == 0) == exact


# -- hodge ------------------------------------------------------------------------

def test_hodge_suspension_and_torus():
    for model, expected in ((SUSP2, (1, 5, 1)), (TORUS1, (1, 2, 1))):
        report = coh.hodge_check(model)
        assert report.kernel_dims() == expected
        assert report.all_ok()
        for deg in report.degrees:
            assert deg.dim_ker_d + deg.rank_ddl + deg.rank_adjoint == deg.dim_total


def test_hodge_requires_inner_product():
    with pytest.raises(ValueError):
        coh.hodge_check(POLY6)


def test_hodge_with_nontrivial_gram():
    # rescaling the inner product must not change kernel dimensions
    model = build_suspension_model(2)
    scaled = {k: Matrix.identity(model.dim(k)).scale(Q(1, 2)) for k in range(3)}
    for k in range(3):
        scaled[k].data[0][0] = Q(3)
    model.inner = scaled
    report = coh.hodge_check(model)
    assert report.kernel_dims() == (1, 5, 1)
    assert report.all_ok()


# -- inequality --------------------------------------------------------------------

def test_inequality_examples():
    dr = coh.de_rham(SUSP2)
    dpl = coh.d_plus_dlambda_cohomology(SUSP2)
    ddl = coh.dd_lambda_cohomology(SUSP2)
    checks = coh.inequality_check(dr, dpl, ddl)
    assert checks == {0: True, 1: True, 2: True}
    assert dr.dims[2] == 5 and dpl.dims[2] + ddl.dims[2] == 6  # 5 <= 1 + 5
    # torus: equality in every degree
    t_checks = coh.inequality_check(coh.de_rham(TORUS1),
                                    coh.d_plus_dlambda_cohomology(TORUS1),
                                    coh.dd_lambda_cohomology(TORUS1))
    assert all(t_checks.values())
    # polynomial windowed, degree 0: 1 <= 1 + 0
    p_checks = coh.inequality_check(coh.de_rham(POLY6, windowed=True),
                                    coh.d_plus_dlambda_cohomology(POLY6, windowed=True),
                                    coh.dd_lambda_cohomology(POLY6, windowed=True))
    assert all(p_checks.values())


def test_inequality_rejects_mismatched_reports():
    with pytest.raises(ValueError):
        coh.inequality_check(coh.de_rham(TORUS1),
                             coh.d_plus_dlambda_cohomology(SUSP2),
                             coh.dd_lambda_cohomology(SUSP2))


# -- emission -----------------------------------------------------------------------

def test_csv_schema_and_determinism():
    reports = [coh.de_rham(SUSP2), coh.d_plus_dlambda_cohomology(SUSP2)]
    hodge = [coh.hodge_check(SUSP2)]
    text = coh.reports_to_csv(reports, hodge)
    lines = text.strip().split("\n")
    assert lines[0] == "model,theory,degree,dimension,windowed"
    assert "suspension-N2,dr,2,5,false" in lines
    assert "suspension-N2,dpl,1,5,false" in lines
    assert "suspension-N2,hodge,1,5,false" in lines
    assert text == coh.reports_to_csv(reports, hodge)


def test_report_json_dict():
    rep = coh.de_rham(SUSP2)
    obj = coh.report_to_json_dict(rep)
    assert obj == {"model": "suspension-N2", "theory": "deRham",
                   "dims": [1, 1, 5], "windowed": False}
