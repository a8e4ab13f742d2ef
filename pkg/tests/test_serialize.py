import json

import pytest

from greenseq import (
    IntMatrix,
    NotSkewSymmetrizable,
    ParseError,
    emit_dot,
    find_symmetrizer,
    parse_matrix,
    serialize_matrix,
    underlying_quiver,
)

from data import B_CYCLE3, B_FIVE, B_MARKOV, B_TWO


class TestParseJson:
    def test_round_trip_with_computed_symmetrizer(self):
        doc = parse_matrix(json.dumps({"n": 3, "b": B_CYCLE3}))
        assert doc.n == 3
        assert doc.symmetrizer == (1, 1, 1)
        assert parse_matrix(serialize_matrix(doc)) == doc

    def test_attached_rows(self):
        doc = parse_matrix(json.dumps({"b": B_CYCLE3, "attached": [[1, 0, 0], [0, 1, 1]]}))
        assert doc.attached == IntMatrix([[1, 0, 0], [0, 1, 1]])
        ext = doc.to_extended()
        assert (ext.n, ext.m) == (3, 2)

    def test_supplied_symmetrizer_must_certify(self):
        with pytest.raises(NotSkewSymmetrizable):
            parse_matrix(json.dumps({"b": B_TWO, "symmetrizer": [1, 1]}))

    def test_supplied_symmetrizer_kept(self):
        doc = parse_matrix(json.dumps({"b": B_TWO, "symmetrizer": [3, 2]}))
        assert doc.symmetrizer == (3, 2)

    def test_n_mismatch(self):
        with pytest.raises(ParseError):
            parse_matrix(json.dumps({"n": 2, "b": B_CYCLE3}))

    def test_bad_json_has_position(self):
        with pytest.raises(ParseError) as info:
            parse_matrix('{"b": [[0, 1], [-1, 0]')
        assert info.value.line is not None

    def test_non_integer_entry(self):
        with pytest.raises(ParseError):
            parse_matrix('{"b": [[0, 1.5], [-1.5, 0]]}')

    def test_not_skew_symmetrizable(self):
        with pytest.raises(NotSkewSymmetrizable):
            parse_matrix(json.dumps({"b": [[0, 1], [1, 0]]}))


class TestParseGrid:
    def test_slash_rows(self):
        doc = parse_matrix("0 -2 / 3 0")
        assert doc.b == IntMatrix(B_TWO)
        assert doc.symmetrizer == (3, 2)

    def test_newline_rows(self):
        doc = parse_matrix("0 1 -1\n-1 0 1\n1 -1 0\n")
        assert doc.b == IntMatrix(B_CYCLE3)

    def test_extra_rows_become_attached(self):
        doc = parse_matrix("0 1\n-1 0\n1 0\n0 1\n")
        assert doc.b == IntMatrix([[0, 1], [-1, 0]])
        assert doc.attached == IntMatrix([[1, 0], [0, 1]])

    def test_bad_token_position(self):
        with pytest.raises(ParseError) as info:
            parse_matrix("0 1\n-1 x\n")
        assert info.value.line == 2
        assert info.value.column == 4

    def test_ragged_grid(self):
        with pytest.raises(ParseError):
            parse_matrix("0 1\n-1\n")

    def test_too_few_rows(self):
        with pytest.raises(ParseError):
            parse_matrix("0 1 2\n")

    def test_sign_violation(self):
        with pytest.raises(NotSkewSymmetrizable):
            parse_matrix("0 1 / 1 0")

    def test_empty_input(self):
        with pytest.raises(ParseError):
            parse_matrix("   \n  ")


class TestRoundTrip:
    def test_all_fixture_matrices(self):
        for b in (B_CYCLE3, B_TWO, B_FIVE, B_MARKOV):
            doc = parse_matrix(json.dumps({"b": b}))
            assert parse_matrix(serialize_matrix(doc)) == doc

    def test_attached_round_trip(self):
        doc = parse_matrix(json.dumps({"b": B_TWO, "attached": [[2, 0]]}))
        assert parse_matrix(serialize_matrix(doc)) == doc


class TestEmitDot:
    def test_cycle(self):
        Q = underlying_quiver(find_symmetrizer(B_CYCLE3))
        dot = emit_dot(Q)
        assert "1 -> 2;" in dot
        assert "2 -> 3;" in dot
        assert "3 -> 1;" in dot
        assert "label" not in dot

    def test_weights_labeled(self):
        Q = underlying_quiver(find_symmetrizer(B_MARKOV))
        dot = emit_dot(Q)
        assert '1 -> 2 [label="2"];' in dot

    def test_empty_quiver_lists_nodes(self):
        Q = underlying_quiver(find_symmetrizer([[0, 0], [0, 0]]))
        dot = emit_dot(Q)
        assert "  1;" in dot and "  2;" in dot
        assert "->" not in dot

    def test_colors(self):
        Q = underlying_quiver(find_symmetrizer(B_CYCLE3))
        dot = emit_dot(Q, {1: "green", 2: "red"})
        assert "1 [style=filled, fillcolor=palegreen];" in dot
        assert "2 [style=filled, fillcolor=lightcoral];" in dot

    def test_byte_stable(self):
        Q = underlying_quiver(find_symmetrizer(B_FIVE))
        assert emit_dot(Q) == emit_dot(Q)
        colored = emit_dot(Q, {v: "green" for v in range(1, 6)})
        assert colored == emit_dot(Q, {v: "green" for v in range(1, 6)})

    def test_bad_color(self):
        Q = underlying_quiver(find_symmetrizer(B_CYCLE3))
        with pytest.raises(ValueError):
            emit_dot(Q, {1: "blue"})
