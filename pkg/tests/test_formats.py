import pytest

import semiringlab as sl
from semiringlab.errors import MissingMap, ParseError

from conftest import QSR3_TEXT, ZUNION_Z2_SBL


def test_srt_round_trip(qsr3):
    again = sl.parse_srt(sl.serialize_srt(qsr3))
    assert again == qsr3


def test_srt_comments_and_blank_lines():
    text = """
# a semiring with comments
elements: a b 0   # carrier
add:
b 0 0
0 0 0  # row b
0 0 0

mul:
b 0 0
0 0 0
0 0 0
"""
    s = sl.parse_srt(text)
    assert s.names == ("a", "b", "0")
    assert sl.validate(s).verdict


@pytest.mark.parametrize(
    "mangle, fragment",
    [
        (lambda t: t.replace("b 0 0\n0 0 0\n0 0 0\nmul", "b 0 0\n0 0\n0 0 0\nmul"), "2 entries"),
        (lambda t: t.replace("add:\nb", "add:\nq"), "unknown element"),
        (lambda t: t.replace("mul:\n", ""), "expected 'mul:'"),
        (lambda t: t.replace("elements: a b 0", "elements: a b a"), "duplicate"),
        (lambda t: t + "extra\n", "trailing"),
        (lambda t: "", "missing 'elements:'"),
    ],
)
def test_srt_parse_errors_carry_line_numbers(mangle, fragment):
    with pytest.raises(ParseError) as err:
        sl.parse_srt(mangle(QSR3_TEXT), source="bad.srt")
    assert fragment in str(err.value)
    assert "bad.srt" in str(err.value)


def test_srt_ragged_row_reports_its_line():
    text = "elements: a b\nadd:\na b\na\nmul:\na b\nb a\n"
    with pytest.raises(ParseError) as err:
        sl.parse_srt(text, source="f.srt")
    assert err.value.line == 4


def test_srt_file_round_trip(tmp_path, qsr3):
    path = tmp_path / "qsr3.srt"
    sl.save_srt(qsr3, path)
    assert sl.load_srt(path) == qsr3


def test_sbl_round_trip(zunion_z2_spec):
    text = sl.serialize_sbl(zunion_z2_spec)
    again = sl.parse_sbl(text)
    assert again.blattice == zunion_z2_spec.blattice
    assert again.components == zunion_z2_spec.components
    assert again.maps == zunion_z2_spec.maps


def test_sbl_missing_component():
    text = ZUNION_Z2_SBL.replace("component p:\nelements: z\nadd:\nz\nmul:\nz\n", "")
    with pytest.raises(ParseError) as err:
        sl.parse_sbl(text)
    assert "missing component" in str(err.value)


def test_sbl_missing_map_is_detected():
    text = ZUNION_Z2_SBL.replace("map p q:\nz -> 0\n", "")
    with pytest.raises(MissingMap):
        sl.parse_sbl(text)


def test_sbl_map_entry_errors():
    with pytest.raises(ParseError) as err:
        sl.parse_sbl(ZUNION_Z2_SBL.replace("z -> 0", "z 0"))
    assert "x -> y" in str(err.value)
    with pytest.raises(ParseError) as err:
        sl.parse_sbl(ZUNION_Z2_SBL.replace("z -> 0", "w -> 0"))
    assert "misses element" in str(err.value) or "foreign element" in str(err.value)
    with pytest.raises(ParseError) as err:
        sl.parse_sbl(ZUNION_Z2_SBL.replace("z -> 0", "z -> 7"))
    assert "unknown element" in str(err.value)


def test_sbl_unknown_blattice_element_in_blocks():
    with pytest.raises(ParseError):
        sl.parse_sbl(ZUNION_Z2_SBL.replace("component q:", "component r:"))
    with pytest.raises(ParseError):
        sl.parse_sbl(ZUNION_Z2_SBL.replace("map p q:", "map p r:"))
