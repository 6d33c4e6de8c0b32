"""Parameter bundles, constructors, the c-matrix solver, and the
singular-hyperplane catalog."""

import json
from fractions import Fraction

import pytest

from desingzeta.errors import ParameterError, UnsupportedFamilyError
from desingzeta.exact import root_of_unity
from desingzeta.models import (
    CMatrix,
    HLData,
    builtin_data,
    ezl_data,
    mt2_data,
    root_system_rank2_data,
    singular_hyperplanes,
    solve_c_matrix,
)


def test_ezl_embedding_rank2():
    d = ezl_data((1, 1), (1, 1))
    assert (d.d, d.r) == (2, 2)
    assert d.gamma == ((1, 0), (1, 1))
    assert d.beta == (1, 2)
    assert d.delta == (1, 1)


def test_ezl_embedding_rank3_generic_gammas():
    g = (Fraction(2), Fraction(3), Fraction(5))
    d = ezl_data((1, 1, 1), g)
    assert d.gamma == ((2, 0, 0), (2, 3, 0), (2, 3, 5))
    assert d.beta == (2, 5, 10)
    c = solve_c_matrix(d)
    assert c.c == (
        (Fraction(1, 2), 0, 0),
        (Fraction(-1, 3), Fraction(1, 3), 0),
        (0, Fraction(-1, 5), Fraction(1, 5)),
    )


def test_ezl_rank1_lerch_type():
    d = ezl_data((Fraction(-1),), (1,))
    assert d.d == d.r == 1
    assert d.delta == (0,)


def test_ezl_validation():
    with pytest.raises(ParameterError):
        ezl_data((1, 1), (1,))
    with pytest.raises(ParameterError):
        ezl_data((1,), (0,))


def test_mt2_family():
    data, family = mt2_data()
    assert data.beta == (1, 1, 2)
    assert family(0, 0).c == ((1, 0, 0), (0, 1, 0))
    assert family(1, 0).c == ((2, 1, -1), (0, 1, 0))
    # invariant holds for arbitrary a, b
    for a, b in [(2, -3), (Fraction(1, 2), Fraction(5, 7))]:
        cm = family(a, b)
        for m in range(2):
            for k in range(2):
                acc = sum(cm.c[m][j] * data.gamma[j][k] for j in range(3))
                assert acc == (1 if m == k else 0)


def test_cmatrix_c0_and_violation():
    d = ezl_data((1, 1), (1, 1))
    c = solve_c_matrix(d)
    assert c.c == ((1, 0), (-1, 1))
    assert c.c0 == (0, 0)
    with pytest.raises(ParameterError):
        CMatrix.for_data(d, ((1, 1), (0, 1)))


def test_root_system_a2_equals_mt2():
    da, ca = root_system_rank2_data(((1, 0), (0, 1), (1, 1)), (1, 1))
    dm, fam = mt2_data()
    assert da == dm
    assert ca.c == fam(0, 0).c


def test_root_system_rank1_is_riemann():
    d, c = root_system_rank2_data(((1,),), (1,))
    assert d.d == d.r == 1 and d.beta == (1,)
    assert c.c == ((1,),)


def test_root_system_twisted_delta():
    da, _ = root_system_rank2_data(((1, 0), (0, 1), (1, 1)),
                                   (1, Fraction(-1)))
    assert da.delta == (1, 0)


def test_root_system_requires_identity_block():
    with pytest.raises(ParameterError):
        root_system_rank2_data(((0, 1), (1, 0), (1, 1)), (1, 1))


def test_solver_rank_deficiency():
    bad = HLData(3, 2, (1, 1),
                 ((Fraction(1), Fraction(1)), (Fraction(1), Fraction(1)),
                  (Fraction(2), Fraction(2))),
                 (1, 1, 2))
    with pytest.raises(ParameterError, match="unsatisfiable"):
        solve_c_matrix(bad)


def test_solver_output_always_satisfies_invariant():
    for name in ("ez2", "ez3", "mt2", "a2"):
        data, c = builtin_data(name)
        for m in range(data.r):
            for k in range(data.r):
                acc = sum(c.c[m][j] * data.gamma[j][k] for j in range(data.d))
                assert acc == (1 if m == k else 0)


def test_singularity_catalog_rank2():
    cat = singular_hyperplanes((1, 1), 3)
    assert cat.has_sr_pole()
    assert cat.sum_values(1) == [2, 1, 0, -2, -4, -6]
    cat = singular_hyperplanes((1, Fraction(-1)), 2)
    assert not cat.has_sr_pole()
    assert cat.sum_values(1) == [1, 0, -2, -4]
    i4 = root_of_unity(4, 1)
    cat = singular_hyperplanes((1, i4), 2)
    assert cat.sum_values(1) == [1, 0, -1]
    assert singular_hyperplanes((i4, i4), 5).is_empty()
    cat = singular_hyperplanes((i4, 1), 4)
    assert cat.has_sr_pole() and cat.sum_values(1) == []


def test_singularity_catalog_counts_rank4():
    # C(j, r) recursion: appending a twist with xi_r = 1 raises every
    # case-I constant by one
    xi3 = (1, 1, Fraction(-1))
    xi4 = xi3 + (1,)
    c3 = {h.start_index: h.values[0]
          for h in singular_hyperplanes(xi3, 0).hyperplanes if h.case == "I"}
    c4 = {h.start_index: h.values[0]
          for h in singular_hyperplanes(xi4, 0).hyperplanes if h.case == "I"}
    for j, v in c3.items():
        assert c4[j] == v + 1


def test_singularity_unsupported_family():
    with pytest.raises(UnsupportedFamilyError):
        singular_hyperplanes((0.5, 1), 2)


def test_rank1_catalog():
    assert singular_hyperplanes((Fraction(-1),), 3).is_empty()
    cat = singular_hyperplanes((1,), 3)
    assert cat.has_sr_pole() and len(cat.hyperplanes) == 1


def test_json_round_trip():
    for name in ("ez2", "ez3", "mt2"):
        data, c = builtin_data(name)
        doc = json.loads(json.dumps(data.to_json(c)))
        back = HLData.from_json(doc)
        assert back == data
    dt = ezl_data((1, root_of_unity(3, 1)), (Fraction(1, 2), 2))
    back = HLData.from_json(json.loads(json.dumps(dt.to_json())))
    assert back == dt


def test_hldata_validation():
    with pytest.raises(ParameterError):
        HLData(1, 1, (2,), ((1,),), (1,))  # |xi| > 1 exact non-root
    with pytest.raises(ParameterError):
        HLData(1, 1, (1,), ((Fraction(-1),),), (1,))  # negative gamma
    with pytest.raises(ParameterError):
        HLData(1, 1, (1,), ((1,),), (0,))  # beta must be positive


def test_ezl_gammas_detection():
    d = ezl_data((1, 1), (Fraction(1, 2), Fraction(3)))
    assert d.ezl_gammas() == (Fraction(1, 2), 3)
    dm, _ = mt2_data()
    assert dm.ezl_gammas() is None
