import numpy as np
import pytest

from sscode.cdc import CdcCode, Cell, construction_D, lifted_mrd, multicomponent, single_cell
from sscode.constructions import pending_dots
from sscode.errors import BadArgs, CertificateGap, TooLarge
from sscode.ferrers import FdrmCode
from sscode.gf import field_new
from sscode.projective import MixedCode
from sscode.subspace import from_generator
from sscode.verify import verify_distance


def _small_codes():
    return [
        pending_dots(8, 2),
        pending_dots(9, 2),
        multicomponent(9, 3, 2, 2),
        lifted_mrd(6, 3, 2, 2),
        multicomponent(6, 3, 2, 3),
        multicomponent(6, 2, 2, 4),
        construction_D(multicomponent(6, 3, 2, 2), 3),
    ]


@pytest.mark.parametrize("idx", range(7))
def test_structured_agrees_with_exhaustive(idx):
    code = _small_codes()[idx]
    ex = verify_distance(code, "exhaustive")
    st = verify_distance(code, "structured")
    assert ex.passed and st.passed
    assert ex.min_found == code.d
    assert st.gaps == 0 and st.fallback_failures == 0
    assert ex.pairs_checked == code.size * (code.size - 1) // 2


def _break_a_cell(code):
    """Copy of ``code`` where one cell gets a repeated basis matrix."""
    cells = list(code.cells)
    i = next(j for j, c in enumerate(cells) if c.rho >= 2)
    c = cells[i]
    basis = c.code.basis.copy()
    basis[1] = basis[0]
    bad = FdrmCode(c.code.diagram, c.code.field, basis, c.code.offset)
    cells[i] = Cell(c.ident, bad, c.label)
    return CdcCode(code.n, code.k, code.d, code.field, cells)


def test_repeated_word_is_caught():
    bad = _break_a_cell(pending_dots(8, 2))
    for mode in ("exhaustive", "structured"):
        r = verify_distance(bad, mode)
        assert not r.passed and r.witness and r.min_found == 0, mode


def test_close_cells_are_caught():
    F = field_new(2)
    cells = [single_cell((1, 1, 1, 0, 0, 0), F, 2), single_cell((1, 1, 0, 1, 0, 0), F, 2)]
    bad = CdcCode(6, 3, 2, F, cells)
    ex = verify_distance(bad, "exhaustive")
    assert not ex.passed and ex.min_found == 1
    st = verify_distance(bad, "structured")
    assert not st.passed and st.fallback_failures == 1
    assert not verify_distance(bad, "sampled", pairs=20000, seed=3).passed


def test_sampled_is_deterministic_across_workers():
    code = pending_dots(9, 2)
    one = verify_distance(code, "sampled", pairs=600_000, seed=11, jobs=1)
    four = verify_distance(code, "sampled", pairs=600_000, seed=11, jobs=4)
    assert (one.pairs_checked, one.min_found, one.passed) == (four.pairs_checked, four.min_found, four.passed)
    assert one.passed and one.min_found == 2 and one.seed == 11


def test_sampled_over_q3():
    r = verify_distance(multicomponent(8, 3, 2, 3), "sampled", pairs=50_000, seed=1)
    assert r.passed and r.min_found == 2


def test_budget_and_modes():
    with pytest.raises(TooLarge):
        verify_distance(pending_dots(8, 2), "exhaustive", budget=100)
    with pytest.raises(BadArgs):
        verify_distance(pending_dots(8, 2), "bogus")


def test_mixed_code_metrics():
    F = field_new(2)
    X = from_generator([[1, 0, 0, 0]], F)
    Y = from_generator([[0, 1, 0, 0], [0, 0, 1, 0]], F)
    Z = from_generator([[0, 0, 0, 1], [1, 1, 0, 0], [0, 0, 1, 1]], F)
    for metric, d in (("S", 3), ("I", 2)):
        r = verify_distance(MixedCode(4, F, metric, d, [X, Y, Z]), "exhaustive")
        assert r.passed and r.min_found == d
    assert not verify_distance(MixedCode(4, F, "S", 4, [X, Y, Z]), "exhaustive").passed


def test_report_lines():
    r = verify_distance(pending_dots(8, 2), "structured")
    text = str(r)
    assert "mode=structured" in text and "result=pass" in text
    assert sum(r.breakdown.get(k, 0) for k in ("a-exact", "a-certified", "b-asym", "c-block", "d-fallback")) == r.pairs_checked
