import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ringforge import GF

# q <= 81 keeps every exhaustive loop here instantaneous
FIELDS = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (3, 2), (2, 3), (5, 2), (3, 4)]


@pytest.fixture(scope="module", params=FIELDS, ids=lambda pr: f"GF({pr[0] ** pr[1]})")
def F(request):
    p, r = request.param
    return GF(p, r)


# -- construction ----------------------------------------------------------

def test_default_moduli():
    assert tuple(GF(2, 2).modulus) == (1, 1, 1)
    assert tuple(GF(3, 2).modulus) == (1, 0, 1)


def test_prime_required():
    with pytest.raises(ValueError, match="p must be prime"):
        GF(4)
    with pytest.raises(ValueError, match="p must be prime"):
        GF(1)


def test_reducible_modulus_rejected():
    # x^2 + 1 = (x+1)^2 over Z_2
    with pytest.raises(ValueError, match="reducible"):
        GF(2, 2, modulus=(1, 0, 1))


def test_bad_degree():
    with pytest.raises(ValueError, match="extension degree"):
        GF(2, 0)


def test_order_cap():
    with pytest.raises(ValueError, match="exceeds"):
        GF(2, 40)


# -- arithmetic tables -----------------------------------------------------

def test_gf4_table_values():
    F = GF(2, 2)
    # codes: 0, 1, 2 = x, 3 = x+1 with x^2 = x+1
    assert F.mul(2, 2) == 3
    assert F.mul(2, 3) == 1
    assert F.mul(3, 3) == 2
    assert F.add(2, 3) == 1
    assert F.frobenius(2) == 3
    assert F.frobenius(3) == 2
    assert F.frobenius(2, 2) == 2


def test_field_axioms_exhaustive(F):
    q = F.q
    for a in range(q):
        for b in range(q):
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            for c in range(q):
                assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
                assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    for a in range(q):
        assert F.add(a, 0) == a
        assert F.mul(a, 1) == a
        assert F.add(a, F.neg(a)) == 0
        assert F.sub(a, a) == 0


def test_inverses(F):
    for a in F.units():
        assert F.mul(a, F.inv(a)) == 1
        assert F.div(a, a) == 1
    with pytest.raises(ZeroDivisionError):
        F.inv(0)
    with pytest.raises(ZeroDivisionError):
        F.div(1, 0)


def test_unit_group_order(F):
    # a^(q-1) = 1 for units, a^q = a for everyone
    for a in F.units():
        assert F.pow(a, F.q - 1) == 1
    for a in range(F.q):
        assert F.pow(a, F.q) == a


def test_frobenius_is_homomorphism(F):
    if F.q > 49:
        pytest.skip("pairs capped at q <= 49")
    for e in F.automorphism_exponents():
        for a in range(F.q):
            for b in range(F.q):
                assert F.frobenius(F.add(a, b), e) == F.add(
                    F.frobenius(a, e), F.frobenius(b, e)
                )
                assert F.frobenius(F.mul(a, b), e) == F.mul(
                    F.frobenius(a, e), F.frobenius(b, e)
                )


def test_frobenius_is_pth_power(F):
    for a in range(F.q):
        assert F.frobenius(a) == F.pow(a, F.p)
        assert F.frobenius(a, F.r) == a  # full cycle


def test_pow_negative(F):
    for a in F.units():
        assert F.pow(a, -1) == F.inv(a)
        assert F.pow(a, -2) == F.mul(F.inv(a), F.inv(a))
    with pytest.raises(ZeroDivisionError):
        F.pow(0, -1)


@settings(max_examples=60, deadline=None)
@given(a=st.integers(0, 8), b=st.integers(0, 8), m=st.integers(0, 50), n=st.integers(0, 50))
def test_pow_laws_gf9(a, b, m, n):
    F = GF(3, 2)
    assert F.pow(F.mul(a, b), m) == F.mul(F.pow(a, m), F.pow(b, m))
    if a:
        assert F.pow(a, m + n) == F.mul(F.pow(a, m), F.pow(a, n))


def test_array_ops_match_scalar(F):
    rng = np.random.default_rng(7)
    a = rng.integers(0, F.q, size=40)
    b = rng.integers(0, F.q, size=40)
    assert all(F.add(a, b)[i] == F.add(int(a[i]), int(b[i])) for i in range(40))
    assert all(F.mul(a, b)[i] == F.mul(int(a[i]), int(b[i])) for i in range(40))
    assert all(F.neg(a)[i] == F.neg(int(a[i])) for i in range(40))
    for e in F.automorphism_exponents():
        fa = F.frobenius(a, e)
        assert all(fa[i] == F.frobenius(int(a[i]), e) for i in range(40))


def test_code_range_checks(F):
    with pytest.raises(ValueError):
        F.mul(0, F.q)
    with pytest.raises(ValueError):
        F.add(-1, 0)
    with pytest.raises(ValueError, match="out of range"):
        F._check_array(np.array([0, F.q]))


# -- structure queries -----------------------------------------------------

def test_squares_and_nonsquare(F):
    sq = set(F.squares())
    assert 0 in sq and 1 in sq
    if F.p == 2:
        # squaring is bijective in characteristic 2
        assert sq == set(range(F.q))
        with pytest.raises(ValueError):
            F.least_nonsquare()
    else:
        assert len(sq) == (F.q - 1) // 2 + 1
        g = F.least_nonsquare()
        assert g not in sq
        assert all(a in sq for a in range(g))


def test_sign_coset_reps(F):
    reps = F.sign_coset_reps()
    covered = set()
    for c in reps:
        assert c not in covered
        covered.add(c)
        covered.add(F.neg(c))
    assert covered == set(F.units())
    expected = F.q - 1 if F.p == 2 else (F.q - 1) // 2
    assert len(reps) == expected


def test_multiplicative_generator(F):
    g = F.multiplicative_generator()
    seen = set()
    x = 1
    for _ in range(F.q - 1):
        x = F.mul(x, g)
        seen.add(x)
    assert seen == set(F.units())


def test_automorphism_exponents(F):
    assert list(F.automorphism_exponents()) == list(range(F.r))


def test_digits_and_poly_str():
    F = GF(3, 2)
    assert F.element_digits(5) == (2, 1)  # 5 = 2 + 1*3
    assert F.poly_str(5) == "a+2"
    assert F.poly_str(0) == "0"
    assert F.poly_str(1) == "1"
    assert GF(2, 3).poly_str(6) == "a^2+a"


def test_serialization_round_trip(F):
    d = F.to_dict()
    G = GF.from_dict(d)
    assert G == F
    assert hash(G) == hash(F)
    assert G.modulus == F.modulus


def test_equality_distinguishes_presentations():
    assert GF(3, 2) != GF(3, 1)
    assert GF(2, 2) == GF(2, 2, modulus=(1, 1, 1))
