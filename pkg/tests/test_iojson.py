import json
from fractions import Fraction

import pytest

from ginv.errors import InputError
from ginv.fields import PrimeField, Rationals
from ginv.iojson import (MAX_DIM, dumps_canonical, parse_field, parse_input,
                         serialize_document)


def test_round_trip_rationals():
    text = '{"field": "Q", "matrices": {"a": [["1", "1/2"], ["-3/4", "0"]]}}'
    doc = parse_input(text)
    assert isinstance(doc.field, Rationals)
    a = doc.matrices["a"]
    assert a.data[0][1] == Fraction(1, 2)
    assert a.data[1][0] == Fraction(-3, 4)
    out = serialize_document(doc)
    assert out == ('{"field":"Q","matrices":'
                   '{"a":[["1","1/2"],["-3/4","0"]]}}\n')
    assert parse_input(out).matrices["a"] == a


def test_round_trip_prime_field():
    doc = parse_input('{"field": {"GF": 7}, "matrices": {"m": [[9, -1]]}}')
    assert isinstance(doc.field, PrimeField) and doc.field.p == 7
    assert doc.matrices["m"].data[0] == (2, 6)
    assert serialize_document(doc) == \
        '{"field":{"GF":7},"matrices":{"m":[[2,6]]}}\n'


def test_canonical_is_key_order_independent():
    a = '{"matrices": {"a": [[1]]}, "field": {"GF": 5}}'
    b = '{"field": {"GF": 5}, "matrices": {"a": [[1]]}}'
    assert serialize_document(parse_input(a)) == \
        serialize_document(parse_input(b))


def test_bytes_accepted():
    doc = parse_input(b'{"field": "Q", "matrices": {}}')
    assert doc.matrices == {}


@pytest.mark.parametrize("text,fragment", [
    ('{"field": "Q"}', "requires"),
    ('{"field": "Q", "matrices": {}, "extra": 1}', "unknown keys"),
    ('[1, 2]', "JSON object"),
    ('{"field": "Q", "matrices": []}', "must be an object"),
    ('{"field": "Q", "matrices": {"a": []}}', "nonempty"),
    ('{"field": "Q", "matrices": {"a": [[]]}}', "nonempty"),
    ('{"field": "Q", "matrices": {"a": [["1"], ["1", "2"]]}}', "ragged"),
    ('{"field": "Q", "matrices": {"a": [["1/0"]]}}', "denominator"),
    ('{"field": "Q", "matrices": {"a": [[1]]}}', "string"),
    ('{"field": {"GF": 7}, "matrices": {"a": [["1"]]}}', "integer"),
    ('{"field": {"GF": 7}, "matrices": {"a": [[true]]}}', "integer"),
    ('{"field": {"GF": 4}, "matrices": {}}', "prime"),
    ('{"field": {"GF": "7"}, "matrices": {}}', "integer"),
    ('{"field": "R", "matrices": {}}', "field descriptor"),
    ('{"field": {"GF": 7, "x": 1}, "matrices": {}}', "field descriptor"),
    ('not json', "malformed"),
])
def test_rejections(text, fragment):
    with pytest.raises(InputError, match=fragment):
        parse_input(text)


def test_dimension_cap():
    big = [["0"] * (MAX_DIM + 1)]
    text = json.dumps({"field": "Q", "matrices": {"a": big}})
    with pytest.raises(InputError, match="cap"):
        parse_input(text)
    tall = [["0"]] * (MAX_DIM + 1)
    with pytest.raises(InputError, match="cap"):
        parse_input(json.dumps({"field": "Q", "matrices": {"a": tall}}))
    square = [["0"] * MAX_DIM] * MAX_DIM
    parse_input(json.dumps({"field": "Q", "matrices": {"a": square}}))


def test_modulus_bound():
    with pytest.raises(InputError):
        parse_field({"GF": 2**31 + 11})
    parse_field({"GF": 2147483629})   # largest prime below 2**31


def test_dumps_canonical_terminates_with_newline():
    s = dumps_canonical({"b": 1, "a": [2, 3]})
    assert s == '{"a":[2,3],"b":1}\n'
