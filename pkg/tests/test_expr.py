import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leftalg.errors import ParseError
from leftalg.expr import Add, Mul, Pow, T, Var, evaluate, parse_element, parse_expr, render
from leftalg.scalars import x
from leftalg.series import T as TS
from leftalg.series import series_inv

leaves = st.one_of(
    st.integers(0, 4).map(lambda i: f"x{i}"),
    st.just("t"),
    st.integers(1, 9).map(str),
    st.sampled_from(["1/2", "3/4"]),
)


def extend(children):
    return st.one_of(
        st.tuples(children, st.sampled_from(["+", "-", "*"]), children).map(lambda p: f"{p[0]} {p[1]} {p[2]}"),
        children.map(lambda s: f"({s})"),
        st.tuples(children, st.integers(0, 3)).map(lambda p: f"({p[0]})^{p[1]}"),
        children.map(lambda s: f"-{s}"),
    )


sources = st.recursive(leaves, extend, max_leaves=6)


def test_simple_trees():
    assert parse_expr("x0 + t") == Add(Var(0), T())
    assert parse_expr("3t") == Mul(parse_expr("3"), T())
    assert parse_expr("t^-2") == Pow(T(), -2)


def test_evaluation():
    assert parse_element("x0 + t") == x(0) + TS
    assert parse_element("t*x0") == x(1) * TS
    assert parse_element("(x0+t)^-1", 5).agrees(series_inv(x(0) + TS, 5))


@pytest.mark.parametrize(
    "src, offset, expected",
    [
        ("t^x0", 2, "integer"),
        ("x0 +", 4, "("),
        ("(x0", 3, ")"),
        ("x", 1, "digits"),
        ("x0 $", 3, "end of input"),
        ("1/0", 2, "nonzero digits"),
    ],
)
def test_parse_errors(src, offset, expected):
    with pytest.raises(ParseError) as err:
        parse_expr(src)
    assert err.value.offset == offset
    assert expected in err.value.expected


def test_offsets_are_bytes():
    with pytest.raises(ParseError) as err:
        parse_expr("xé")
    assert err.value.offset == 1
    with pytest.raises(ParseError) as err:
        parse_expr("é")
    assert err.value.offset == 0
    with pytest.raises(ParseError) as err:
        parse_expr("(é)")
    assert err.value.offset == 1


@settings(max_examples=150, deadline=None)
@given(sources)
def test_render_round_trip(src):
    tree = parse_expr(src)
    assert parse_expr(render(tree)) == tree


@settings(max_examples=60, deadline=None)
@given(sources)
def test_rendered_text_evaluates_identically(src):
    tree = parse_expr(src)
    assert evaluate(parse_expr(render(tree))) == evaluate(tree)
