import pytest

from nilpjordan.errors import ParseError, ValidationError
from nilpjordan.exact_field import CycloNumber, FieldAutomorphism
from nilpjordan.groupfile import load_group, parse_group_file, parse_group_text, write_group_file
from nilpjordan.witnesses import sample_antidiag_t_rot3

S3 = """# S3
kind: permutation
degree: 3
generator: 1, 0, 2
generator: 1, 2, 0
"""

MATRIX = """kind: matrix
conductor: 8
dimension: 1
generator:
  row: (1/2)*z^3 - 2
"""


def test_permutation_file():
    gens, ctx = parse_group_text(S3)
    assert len(gens) == 2 and ctx.dimension == 3 and ctx.kind == "permutation"
    assert gens[1].images == (1, 2, 0)


def test_matrix_entry():
    gens, ctx = parse_group_text(MATRIX)
    x = gens[0].rows[0][0]
    assert isinstance(x, CycloNumber) and x.conductor == 8
    assert x.coeffs == (-2, 0, 0, 0.5)


def test_semilinear_file():
    text = """kind: semilinear
conductor: 4
dimension: 2
uses_t: true
generator:
  row: 0, t   # antidiagonal
  row: 1/t, 0
  mobius: 0, 1, 1, 0
generator:
  row: z, 0
  row: 0, 1
"""
    gens, ctx = parse_group_text(text)
    assert ctx.uses_t and len(gens) == 2
    assert gens[0].aut == FieldAutomorphism.inversion(4)
    assert gens[1].aut.is_identity()


def test_singular_mobius():
    text = """kind: semilinear
conductor: 4
dimension: 1
generator:
  row: 1
  mobius: 1, 0, 0, 0
"""
    with pytest.raises(ValidationError):
        parse_group_text(text)


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("kind: matrix\nconductor: 8\ndimension: 1\ngenerator:\n  row: z +\n", 5, 11),
        ("kind: matrix\nconductor: 8\ndimension: 2\ngenerator:\n  row: 1, z $ 2\n", 5, 13),
        ("kind: permutation\ndegree: 2\ngenerator: 1, x\n", 3, 15),
        ("kind: widget\n", 1, 7),
        ("kind: matrix\nconductor: 8\nbogus: 1\n", 3, 1),
        ("kind: permutation\ndegree: 2\nnonsense\n", 3, 1),
        ("kind: matrix\ndimension: 1\nconductor: eight\n", 3, 12),
        ("kind: matrix\nconductor: 4\ndimension: 1\ngenerator:\n  row: 1\n  mobius: 1, 0, 0, 1\n", 6, 1),
    ],
)
def test_parse_errors_are_located(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_group_text(text)
    assert (info.value.line, info.value.column) == (line, column)


@pytest.mark.parametrize(
    "text",
    [
        "kind: matrix\nconductor: 4\ndimension: 2\ngenerator:\n  row: 1, 0\n",
        "kind: matrix\nconductor: 4\ndimension: 2\ngenerator:\n  row: 1, 0\n  row: 0\n",
        "kind: matrix\nconductor: 4\ndimension: 2\ngenerator:\n  row: 1, 1\n  row: 1, 1\n",
        "kind: permutation\ndegree: 3\ngenerator: 0, 1\n",
        "kind: permutation\ndegree: 3\ngenerator: 0, 0, 1\n",
        "kind: permutation\ndegree: 3\n",
        "kind: matrix\nconductor: 4\ndimension: 1\nuses_t: true\ngenerator:\n  row: t\n",
        "kind: matrix\nconductor: 0\ndimension: 1\n",
    ],
)
def test_validation_errors(text):
    with pytest.raises(ValidationError):
        parse_group_text(text)


def test_t_without_uses_t_is_a_parse_error():
    text = "kind: semilinear\nconductor: 4\ndimension: 1\ngenerator:\n  row: t\n"
    with pytest.raises(ParseError):
        parse_group_text(text)


def test_missing_file(tmp_path):
    with pytest.raises(ValidationError):
        parse_group_file(tmp_path / "absent.grp")


def test_file_round_trip(tmp_path):
    G = sample_antidiag_t_rot3()
    path = tmp_path / "g.grp"
    write_group_file(path, G, comment="antidiagonal sample")
    assert path.read_text().startswith("# antidiagonal sample\n")
    H, ctx = load_group(path)
    assert ctx.source == str(path)
    assert H.order == G.order
    assert {g.key for g in H.elements} == {g.key for g in G.elements}
