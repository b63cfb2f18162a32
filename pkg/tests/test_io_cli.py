import pytest

from sscode import io
from sscode.cdc import CdcCode, multicomponent
from sscode.cli import main
from sscode.constructions import pending_dots
from sscode.io import ParseError
from sscode.projective import MixedCode
from sscode.subspace import Subspace


def test_cell_round_trip_is_byte_stable():
    for code in (pending_dots(8, 2), multicomponent(7, 3, 2, 3)):
        text = io.emit(code)
        back = io.parse(text)
        assert isinstance(back, CdcCode) and back.size == code.size
        assert io.emit(back) == text
        assert io.emit(back, cells=False) == io.emit(code, cells=False)


def test_expanded_round_trip():
    code = multicomponent(6, 2, 2, 4)
    text = io.emit(code, cells=False)
    back = io.parse(text)
    assert isinstance(back, MixedCode) and back.size == code.size and back.metric == "I"
    assert io.emit(back) == text
    assert set(back.codewords) == set(code.expand())


def test_meta_survives():
    code = pending_dots(8, 2)
    back = io.parse(io.emit(code))
    assert back.meta == io.parse(io.emit(back)).meta and back.meta


def test_parse_errors():
    good = io.emit(multicomponent(6, 3, 2, 2), cells=False)
    with pytest.raises(ParseError):
        io.parse("SSC 2\n" + good.split("\n", 1)[1])
    with pytest.raises(ParseError):
        io.parse(good.replace("count=", "count=9"))
    lines = good.splitlines()
    row = next(i for i, l in enumerate(lines) if l.startswith("K ")) + 1
    lines[row] = "2" + lines[row][1:]
    with pytest.raises(ParseError):
        io.parse("\n".join(lines))


def _close_copy(code):
    """Expanded copy where one codeword is replaced by a neighbour of another at rank distance 1."""
    words = sorted(code.expand(), key=lambda X: X.key())
    taken = set(words)
    X, Y = words[0], words[1]
    assert X.pivots == Y.pivots
    free = [(r, c) for r in range(Y.k) for c in range(Y.n) if c not in Y.pivots and c > Y.pivots[r]]
    for r, c in free:
        B = Y.basis.copy()
        B[r, c] ^= 1
        Z = Subspace(Y.n, Y.field, B, Y.pivots)
        if Z not in taken:
            words[0] = Z
            return MixedCode(code.n, code.field, "I", code.d, words)
    raise AssertionError("no free dot")


def test_cli_build_verify_expand(tmp_path, capsys):
    cells = tmp_path / "pd.sscc"
    flat = tmp_path / "pd.ssc"
    again = tmp_path / "pd2.ssc"
    assert main(["build", "-c", "pending-dots", "--n", "8", "-o", str(cells)]) == 0
    assert "1179 = 2^10+155" in capsys.readouterr().out
    assert main(["build", "-c", "pending-dots", "--n", "8", "--expand", "-o", str(flat)]) == 0
    assert main(["expand", str(cells), "-o", str(again)]) == 0
    assert flat.read_bytes() == again.read_bytes()
    assert main(["verify", str(cells)]) == 0
    assert main(["verify", str(flat)]) == 0
    assert "result=pass" in capsys.readouterr().out


def test_cli_rejects_corrupted_files(tmp_path, capsys):
    code = pending_dots(8, 2)
    bad = tmp_path / "bad.ssc"
    io.write(str(bad), _close_copy(code))
    assert main(["verify", str(bad)]) == 1
    out = capsys.readouterr().out
    assert "result=FAIL" in out and "witness" in out

    # repeat a basis tableau inside one cell
    lines = io.emit(code).splitlines()
    b = next(i for i, l in enumerate(lines) if l.startswith("B ") and int(l[2:]) >= 2)
    lines[b + 2] = lines[b + 1]
    dup = tmp_path / "dup.sscc"
    dup.write_text("\n".join(lines) + "\n")
    assert main(["verify", str(dup)]) == 1

    # truncated cell
    cut = tmp_path / "cut.sscc"
    cut.write_text("\n".join(io.emit(code).splitlines()[:-1]) + "\n")
    assert main(["verify", str(cut)]) == 2
    assert "ParseError" in capsys.readouterr().err


def test_cli_errors_and_sizes(capsys, tmp_path):
    assert main(["build", "-c", "pending-dots", "--n", "20", "-o", str(tmp_path / "x")]) == 2
    assert "FieldTooSmall" in capsys.readouterr().err
    assert main(["verify", str(tmp_path / "missing.ssc")]) == 2
    assert main(["size", "-c", "B", "--n", "10", "--k", "4"]) == 0
    assert "284005 = 2^18+21861" in capsys.readouterr().out
    assert main(["size", "-c", "A", "--n", "13", "--k", "4"]) == 0
    assert "2^18+4747" in capsys.readouterr().out


def test_cli_reports(capsys):
    assert main(["tables", "--which", "1"]) == 0
    assert "**2^18+4747**" in capsys.readouterr().out
    assert main(["bounds", "--suite", "--suite-q", "2"]) == 0
    out = capsys.readouterr().out
    assert "pass=no" not in out and "check=A-MC" in out
    assert main(["registry", "inspect", "--q", "2", "--n", "11", "--d", "2", "--k", "3"]) == 0
    assert "76331" in capsys.readouterr().out
