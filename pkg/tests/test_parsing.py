"""Model file grammar: round-trips, expressions, line-numbered errors."""
import pathlib

import pytest

from sullivan.errors import (
    DegreeMismatch,
    ModelSyntaxError,
    UnknownGenerator,
)
from sullivan.parsing import load_model, parse_model, render_model

MODELS = pathlib.Path(__file__).resolve().parent.parent / "models"


def test_parse_minimal():
    m = parse_model('model "m"\neven x : 2\nodd y : 3 = x^2\n')
    assert m.name == "m"
    assert m.d(m.element("y")) == m.element("x") ** 2


def test_shipped_files_load_and_roundtrip():
    for path in sorted(MODELS.glob("*.model")):
        m = load_model(path)
        text = render_model(m)
        m2 = parse_model(text)
        assert render_model(m2) == text, path.name
        assert m2.name == m.name
        for g in m.generators:
            assert m.d(m.element(g.name)).render() == \
                m2.d(m2.element(g.name)).render()


def test_rational_coefficients():
    m = parse_model('model "q"\neven x : 2\nodd y : 3 = 1/2*x^2 + x*x\n')
    img = m.d(m.element("y"))
    assert img.render() == "3/2*x^2"


def test_parenthesized_products_expand():
    m = parse_model(
        'model "p"\neven a : 2\neven b : 2\nodd y : 3 = a*(a + b) - b^2\n')
    img = m.d(m.element("y"))
    assert img == (m.element("a") ** 2 + m.element("a") * m.element("b")
                   - m.element("b") ** 2)


def test_unary_minus_and_precedence():
    m = parse_model('model "u"\neven x : 2\nodd y : 3 = -x^2 + 2*x^2\n')
    assert m.d(m.element("y")) == m.element("x") ** 2


def test_zero_image_dropped():
    m = parse_model('model "z"\neven x : 2\nodd y : 3 = x^2 - x^2\n')
    assert m.d(m.element("y")).is_zero()
    assert m.differential_length().render() == "zero"


def test_comments_and_blanks():
    text = '# top comment\nmodel "c"  # trailing\n\neven x : 2\n# mid\nodd y : 3 = x^2\n'
    m = parse_model(text)
    assert m.name == "c"


def test_forward_reference_allowed():
    m = parse_model('model "fwd"\nodd y : 3 = x^2\neven x : 2\n')
    assert m.d(m.element("y")) == m.element("x") ** 2


def test_missing_model_line():
    with pytest.raises(ModelSyntaxError):
        parse_model("even x : 2\n")


def test_duplicate_model_line():
    with pytest.raises(ModelSyntaxError):
        parse_model('model "a"\nmodel "b"\neven x : 2\n')


def test_parity_mismatch_line_number():
    with pytest.raises(ModelSyntaxError) as exc:
        parse_model('model "m"\neven x : 2\nodd w : 4\n')
    assert "line 3" in str(exc.value)


def test_even_with_image_rejected():
    with pytest.raises(ModelSyntaxError):
        parse_model('model "m"\neven x : 2 = x\n')


def test_unknown_identifier_line_number():
    with pytest.raises(UnknownGenerator) as exc:
        parse_model('model "m"\neven x : 2\nodd y : 3 = x*q\n')
    assert "line 3" in str(exc.value)


def test_degree_mismatch_line_number():
    with pytest.raises(DegreeMismatch) as exc:
        parse_model('model "m"\neven x : 2\nodd y : 5 = x^2\n')
    assert "line 3" in str(exc.value)


def test_junk_line():
    with pytest.raises(ModelSyntaxError) as exc:
        parse_model('model "m"\nweird stuff\n')
    assert "line 2" in str(exc.value)


def test_bad_expression_token():
    with pytest.raises(ModelSyntaxError):
        parse_model('model "m"\neven x : 2\nodd y : 3 = x ** 2\n')


def test_load_model_rejects_non_utf8(tmp_path):
    path = tmp_path / "binary.model"
    path.write_bytes(b'model "m"\xa0\xff\x00junk')
    with pytest.raises(ModelSyntaxError) as exc:
        load_model(str(path))
    assert "UTF-8" in str(exc.value)


def test_render_is_grammar_canonical(tower_model):
    text = render_model(tower_model)
    lines = text.strip().split("\n")
    assert lines[0] == 'model "coformal-tower"'
    assert lines[1] == "even x1 : 2"
    assert "odd y1 : 3 = x1^2" in lines
    assert text.endswith("\n")
