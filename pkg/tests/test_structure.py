import random
from fractions import Fraction

import pytest

from liecohom.errors import IntegrabilityError, JacobiViolation, ParseError
from liecohom.exterior import Form, basis, total_basis
from liecohom.scalars import HALF, I, ONE, Scalar
from liecohom.structure import (
    StructureEquations,
    parse_form_expr,
    parse_lie,
    parse_structure,
    render_form,
    render_structure,
)

SL2C = """\
algebra sl2c
dim 3
d f1 = f2^f3
d f2 = -1*f1^f3
d f3 = f1^f2
"""

CALABI_ECKMANN = """\
algebra calabi-eckmann
dim 3
d f1 = 1i*f1^f3 + 1i*f1^F3
d f2 = f2^f3 - f2^F3
d f3 = (0-1i)*f1^F1 + f2^F2
"""

KODAIRA = """\
algebra kodaira-secondary
dim 2
d f1 = -1/2*f1^f2 + 1/2*f1^F2
d f2 = 1/2i*f1^F1
"""

# one-dimensional affine algebra: integrable but NOT unimodular
AFFINE = """\
algebra affine
dim 1
d f1 = f1^F1
"""


def mono(n, h, a, c=ONE):
    return Form.monomial(n, h, a, c)


# -- parsing ---------------------------------------------------------------------


def test_parse_sl2c():
    s = parse_structure(SL2C)
    assert s.n == 3 and s.name == "sl2c"
    assert s.dgen[0] == mono(3, [2, 3], [])
    assert s.dgen[1] == mono(3, [1, 3], [], -ONE)
    assert s.flags.integrable


def test_parse_calabi_eckmann_line():
    s = parse_structure(CALABI_ECKMANN)
    assert s.dgen[2] == mono(3, [1], [1], Scalar(0, -1)) + mono(3, [2], [2])
    assert s.flags.integrable


def test_parse_pure_02_is_non_integrable():
    s = parse_structure("algebra nonint\ndim 3\nd f1 = F2^F3\n")
    assert not s.flags.integrable


def test_omitted_generators_are_closed():
    s = parse_structure("algebra iwasawa\ndim 3\nd f3 = f1^f2\n")
    assert s.dgen[0].is_zero() and s.dgen[1].is_zero()


def test_parse_monomial_reordering():
    # the parser wedges generators in the written order, with signs
    f = parse_form_expr("F1^f2", 3)
    assert f == mono(3, [2], [1], -ONE)


def test_parse_zero_expression():
    s = parse_structure("algebra abelian\ndim 2\nd f1 = 0\n")
    assert s.dgen[0].is_zero()


def test_syntax_error_reports_position():
    with pytest.raises(ParseError) as err:
        parse_structure("algebra broken\ndim 2\nd f1 = f2 ^^ f1\n")
    assert err.value.line == 3 and err.value.col is not None


def test_index_out_of_range():
    with pytest.raises(ParseError):
        parse_structure("algebra broken\ndim 2\nd f1 = f2^f3\n")


def test_duplicate_generator_rejected():
    with pytest.raises(ParseError):
        parse_structure("algebra broken\ndim 2\nd f1 = 0\nd f1 = 0\n")


def test_jacobi_violation_names_generator():
    text = "algebra broken\ndim 3\nd f1 = f2^f3\nd f2 = f1^f2\n"
    with pytest.raises(JacobiViolation) as err:
        parse_structure(text)
    assert "f1" in str(err.value)


def test_missing_dim_rejected():
    with pytest.raises(ParseError):
        parse_structure("algebra broken\nd f1 = 0\n")


def test_metric_blocks():
    lf = parse_lie(SL2C + "metric identity\n")
    assert lf.metric is not None and lf.metric.n == 3
    text = KODAIRA + "metric hermitian\n2 1i\n-1i 1\n"
    lf = parse_lie(text)
    assert lf.metric.entries[0][1] == I
    with pytest.raises(ParseError):
        parse_lie(KODAIRA + "metric hermitian\n2 1i\n1i 1\n")  # not Hermitian


def test_render_round_trip():
    for text in (SL2C, CALABI_ECKMANN, KODAIRA):
        s = parse_structure(text)
        again = parse_structure(render_structure(s))
        assert again.dgen == s.dgen


def test_render_form_round_trip_random():
    rng = random.Random(9)
    n = 3
    mons = basis(n, 1, 1) + basis(n, 2, 0)
    for _ in range(25):
        terms = {
            mons[rng.randrange(len(mons))]: Scalar(
                Fraction(rng.randint(-3, 3), rng.randint(1, 3)),
                Fraction(rng.randint(-3, 3), rng.randint(1, 3)),
            )
            for _ in range(3)
        }
        f = Form(n, terms)
        assert parse_form_expr(render_form(f), n) == f


# -- the differential ---------------------------------------------------------------


def test_sl2c_d_of_f12_vanishes():
    s = parse_structure(SL2C)
    assert s.d(mono(3, [1, 2], [])).is_zero()


def test_sl2c_d_mixed_monomial():
    # hand antiderivation: d(f1^F1) = f2^f3^F1 - f1^F2^F3
    # (the second sign is forced by d^2 = 0 and d(conj) = conj(d))
    s = parse_structure(SL2C)
    assert s.d(mono(3, [1], [1])) == mono(3, [2, 3], [1]) - mono(3, [1], [2, 3])


def test_kodaira_d_generator():
    s = parse_structure(KODAIRA)
    assert s.d(mono(2, [2], [])) == mono(2, [1], [1], Scalar(0, Fraction(1, 2)))


def test_d_squared_zero_on_every_monomial():
    for text in (SL2C, CALABI_ECKMANN, KODAIRA, AFFINE):
        s = parse_structure(text)
        for k in range(2 * s.n + 1):
            for m in total_basis(s.n, k):
                assert s.d(s.d(Form(s.n, {m: ONE}))).is_zero()


def test_d_commutes_with_conjugation():
    rng = random.Random(11)
    s = parse_structure(CALABI_ECKMANN)
    for _ in range(20):
        p, q = rng.randint(0, 3), rng.randint(0, 3)
        mons = basis(3, p, q)
        if not mons:
            continue
        a = Form(3, {mons[rng.randrange(len(mons))]: Scalar(rng.randint(-2, 2), 1)})
        assert s.d(a.conjugate()) == s.d(a).conjugate()


def test_leibniz_random_pairs():
    rng = random.Random(12)
    s = parse_structure(SL2C)
    mons_by_degree = {k: total_basis(3, k) for k in range(7)}
    for _ in range(50):
        ka = rng.randint(0, 4)
        kb = rng.randint(0, 4)
        if not mons_by_degree[ka] or not mons_by_degree[kb]:
            continue
        a = Form(3, {mons_by_degree[ka][rng.randrange(len(mons_by_degree[ka]))]: Scalar(2, -1)})
        b = Form(3, {mons_by_degree[kb][rng.randrange(len(mons_by_degree[kb]))]: Scalar(1, 3)})
        sign_a = -ONE if ka % 2 else ONE
        assert s.d(a.wedge(b)) == s.d(a).wedge(b) + a.wedge(s.d(b)).scale(sign_a)


# -- del and delbar ---------------------------------------------------------------------


def test_sl2c_holomorphic_coframe():
    s = parse_structure(SL2C)
    assert s.delbar(mono(3, [1], [])).is_zero()


def test_calabi_eckmann_split():
    s = parse_structure(CALABI_ECKMANN)
    psi1 = mono(3, [1], [])
    assert s.del_(psi1) == mono(3, [1, 3], [], I)
    assert s.delbar(psi1) == mono(3, [1], [3], I)


def test_d_equals_del_plus_delbar():
    s = parse_structure(CALABI_ECKMANN)
    for p in range(4):
        for q in range(4):
            for m in basis(3, p, q):
                a = Form(3, {m: ONE})
                assert s.d(a) == s.del_(a) + s.delbar(a)


def test_del_squared_zero_random():
    rng = random.Random(13)
    for text in (SL2C, CALABI_ECKMANN, KODAIRA):
        s = parse_structure(text)
        for _ in range(10):
            p, q = rng.randint(0, s.n), rng.randint(0, s.n)
            mons = basis(s.n, p, q)
            if not mons:
                continue
            a = Form(s.n, {mons[rng.randrange(len(mons))]: Scalar(1, 1)})
            assert s.del_(s.del_(a)).is_zero()
            assert s.delbar(s.delbar(a)).is_zero()


def test_non_integrable_refuses_split():
    s = parse_structure("algebra nonint\ndim 3\nd f1 = F2^F3\n")
    with pytest.raises(IntegrabilityError):
        s.del_(mono(3, [1], []))
    # de Rham style work is still allowed
    assert s.d(mono(3, [1], [])) == mono(3, [], [2, 3])


# -- flags --------------------------------------------------------------------------------


def test_flags_sl2c():
    s = parse_structure(SL2C)
    assert s.flags.integrable and s.flags.unimodular and not s.flags.nilpotent


def test_flags_kodaira():
    s = parse_structure(KODAIRA)
    assert s.flags.integrable and s.flags.unimodular and not s.flags.nilpotent


def test_flags_nilpotent_entries():
    iwasawa = parse_structure("algebra iwasawa\ndim 3\nd f3 = f1^f2\n")
    assert iwasawa.flags.nilpotent and iwasawa.flags.unimodular
    skt = parse_structure("algebra skt\ndim 3\nd f3 = F2^f2 + 1i*f1^F1\n")
    assert skt.flags.nilpotent


def test_affine_not_unimodular():
    s = parse_structure(AFFINE)
    assert s.flags.integrable
    assert not s.flags.unimodular
    assert not s.flags.nilpotent


def test_unimodularity_matches_top_degree_exactness():
    # independent characterization: trace(ad) = 0 for all generators
    # iff d kills every (2n-1)-form
    for text in (SL2C, CALABI_ECKMANN, KODAIRA, AFFINE):
        s = parse_structure(text)
        kills_all = all(
            s.d(Form(s.n, {m: ONE})).is_zero() for m in total_basis(s.n, 2 * s.n - 1)
        )
        assert kills_all == s.flags.unimodular
