import pytest
from hypothesis import given, settings

from conftest import posets
from posetexp import textio
from posetexp.core import CycleDetected, EMPTY, chain, crown4


def test_loads_crown():
    text = "# the crown\n4\n0 < 2\n0 < 3\n1 < 2\n1 < 3  # last\n"
    assert textio.loads(text) == crown4()


def test_loads_closes_relation():
    assert textio.loads("3\n0<1\n1<2\n0<2\n") == chain(3)


@pytest.mark.parametrize("text", ["", "# only\n", "x\n", "3\n0 - 1\n", "3\na < 1\n"])
def test_parse_errors(text):
    with pytest.raises(textio.ParseError):
        textio.loads(text)


def test_cycle_rejected():
    with pytest.raises(CycleDetected):
        textio.loads("2\n0 < 1\n1 < 0\n")


def test_dump_load(tmp_path):
    path = tmp_path / "c.poset"
    textio.dump(crown4(), path, comment="crown\nfour elements")
    assert path.read_text().startswith("# crown\n# four elements\n4\n")
    assert textio.load(path) == crown4()


@settings(max_examples=100, deadline=None)
@given(posets(max_n=8))
def test_roundtrip(p):
    assert textio.loads(textio.dumps(p)) == p


def test_dot():
    dot = textio.to_dot(crown4(), labels=list("abcd"))
    assert dot.startswith("digraph hasse {")
    assert "rankdir=BT" in dot
    assert "{ rank=same; 0; 1; }" in dot and "{ rank=same; 2; 3; }" in dot
    assert dot.count("arrowhead=none") == 4
    assert '0 [label="a"]' in dot
    assert "rank=same" not in textio.to_dot(EMPTY)
