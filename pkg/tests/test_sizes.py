import pytest

from sscode import sizes
from sscode.errors import BadParams
from sscode.gf import gaussian_binomial


def test_pending_dots_closed_form():
    assert sizes.size_pending_dots(8, 2) == 1179
    assert sizes.size_pending_dots(9, 2) == 4747
    for n in range(8, 14):
        assert sizes.size_pending_dots(n, 3) == 3 ** (2 * (n - 3)) + gaussian_binomial(n - 3, 2, 3)


def test_A_reduces_to_pending_dots_at_k3():
    for n in range(8, 12):
        assert sizes.size_A(n, 3, 2) == sizes.size_pending_dots(n, 2)


def test_A_mod_exponent_switch():
    assert sizes.size_A_mod(30, 4, 2) == 4585559591403520
    assert sizes.size_A_mod(30, 4, 2, printed_exponent=True) == 4620335373352960


@pytest.mark.parametrize(
    "n,k,d,q,extra",
    [(10, 4, 2, 2, 4113), (11, 4, 2, 2, 33025), (13, 4, 3, 2, 4113), (19, 5, 4, 2, 1052673), (12, 5, 2, 2, 1049601)],
)
def test_MC_closed_form(n, k, d, q, extra):
    assert sizes.size_MC(n, k, d, q) == q ** ((n - k) * (k - d + 1)) + extra


def test_D_and_lifted():
    assert sizes.size_D(4797, 4, 2, 2, 4) == 2**24 + 2871296
    assert sizes.size_lifted_mrd(13, 4, 3, 2) == 2**18
    with pytest.raises(BadParams):
        sizes.size_D(10, 4, 2, 2, 3)


def test_B_enumerated_equals_closed_form():
    for n, k in [(10, 4), (11, 4), (12, 5), (13, 5), (14, 6), (16, 7)]:
        for q in (2, 3):
            assert sizes.size_B(n, k, q, 7) == sizes.size_B_enumerated(n, k, q, 7)


def test_C4_even_rows_agree_with_enumeration():
    for n in range(10, 31, 2):
        assert sizes.size_C4(n, 2, 0) == sizes.size_C4_enumerated(n, 2, 0)


def test_C5_even_rows_agree_with_enumeration():
    for n in range(12, 25, 2):
        assert sizes.size_C5(n, 2, 0) == sizes.size_C5_enumerated(n, 2, 0)


def test_C5_odd_rows_differ_in_one_bracket():
    # one pending-dot bracket of the odd closed form carries coefficient 1 on
    # q^(2n-16) where the cell count gives 2
    n = 13
    sets = sizes.c5_set_sizes(n, 2)
    assert sets["A3"] == 50577408
    assert sizes.size_C5_enumerated(n, 2, 0) > sizes.size_C5(n, 2, 0)


def test_parameter_errors():
    with pytest.raises(BadParams):
        sizes.size_C4(9, 2, 0)
    with pytest.raises(BadParams):
        sizes.size_C5(11, 2, 0)
    with pytest.raises(BadParams):
        sizes.size_B(9, 4, 2, 0)
    with pytest.raises(BadParams):
        sizes.size_A(10, 2, 2)


def test_split_and_format():
    assert sizes.split_power(284005, 2) == (18, 21861)
    assert sizes.format_size(284005, 2) == "2^18+21861"
    assert sizes.format_size(3**28 + 5, 3) == "3^28+5"
    assert sizes.format_size(2**20, 2, 18) == "2^18+786432"
