"""Tests for the strict JSON configuration format."""

import json

import pytest

from cisym.configio import (
    SchemaError,
    config_from_obj,
    dump_config,
    fraction_str,
    parse_config,
)
from cisym.localization import ConfigurationError

from fractions import Fraction


def quadric_obj():
    return {
        "ambient": {"t": 2, "rho": 1, "euler": 4, "sign": 0},
        "template": "surface_plus_two_points",
        "flags": {"effectiveness": True, "convention35": True,
                  "lemma64": True},
        "components": [
            {"kind": "surface", "weights": [1, 1], "a": 0, "ev_x": -2,
             "ev_y1": 0, "ev_y2": 0, "chi": 2},
            {"kind": "point", "weights": [1, 1, 1], "a": 1, "eps": 1},
            {"kind": "point", "weights": [1, 1, 1], "a": -1, "eps": -1},
        ],
    }


def path_of_error(obj) -> str:
    with pytest.raises(SchemaError) as excinfo:
        config_from_obj(obj)
    return excinfo.value.path


def test_parse_well_formed_document():
    cfg = config_from_obj(quadric_obj())
    assert cfg.template == "surface_plus_two_points"
    assert cfg.ambient.t == 2
    assert len(cfg.components) == 3
    assert cfg.components[1].eps == 1


def test_round_trip_is_byte_identical():
    cfg = config_from_obj(quadric_obj())
    text = dump_config(cfg)
    again = parse_config(text)
    assert dump_config(again) == text


def test_missing_top_level_key():
    obj = quadric_obj()
    del obj["template"]
    assert path_of_error(obj) == "template"


def test_unknown_top_level_key():
    obj = quadric_obj()
    obj["comment"] = "hello"
    assert path_of_error(obj) == "comment"


def test_unknown_nested_key_path():
    obj = quadric_obj()
    obj["ambient"]["extra"] = 7
    assert path_of_error(obj) == "ambient.extra"


def test_missing_flag_key():
    obj = quadric_obj()
    del obj["flags"]["lemma64"]
    assert path_of_error(obj) == "flags.lemma64"


def test_boolean_is_not_an_integer():
    obj = quadric_obj()
    obj["ambient"]["t"] = True
    assert path_of_error(obj) == "ambient.t"


def test_integer_is_not_a_boolean():
    obj = quadric_obj()
    obj["flags"]["lemma64"] = 1
    assert path_of_error(obj) == "flags.lemma64"


def test_float_rejected():
    obj = quadric_obj()
    obj["ambient"]["rho"] = 1.0
    assert path_of_error(obj) == "ambient.rho"


def test_weight_arity_enforced():
    obj = quadric_obj()
    obj["components"][1]["weights"] = [1, 1]
    assert path_of_error(obj) == "components[1].weights"


def test_weight_entry_path():
    obj = quadric_obj()
    obj["components"][0]["weights"] = [1, "two"]
    assert path_of_error(obj) == "components[0].weights[1]"


def test_component_unknown_key_path():
    obj = quadric_obj()
    obj["components"][2]["sign"] = 0
    assert path_of_error(obj) == "components[2].sign"


def test_component_kind_required():
    obj = quadric_obj()
    del obj["components"][0]["kind"]
    assert path_of_error(obj) == "components[0].kind"


def test_unknown_kind():
    obj = quadric_obj()
    obj["components"][0] = {"kind": "solid", "weights": [1]}
    assert path_of_error(obj) == "components[0].kind"


def test_unknown_template_rejected():
    obj = quadric_obj()
    obj["template"] = "three_surfaces"
    assert path_of_error(obj) == "template"


def test_invalid_json_text():
    with pytest.raises(SchemaError):
        parse_config("{not json")


def test_structural_violations_surface_as_configuration_error():
    obj = quadric_obj()
    obj["ambient"]["t"] = 0
    with pytest.raises(ConfigurationError):
        config_from_obj(obj)


def test_four_component_round_trip():
    obj = {
        "ambient": {"t": 1, "rho": 4, "euler": 4, "sign": 0},
        "template": "cp2like_plus_point",
        "flags": {"effectiveness": True, "convention35": True,
                  "lemma64": True},
        "components": [
            {"kind": "four", "weights": [1], "a": 0, "ev_x2": -1,
             "ev_xy": 1, "ev_y2": -1, "ev_p1": -3, "b2": 1, "sign": -1,
             "chi": 3},
            {"kind": "point", "weights": [1, 1, 1], "a": 1, "eps": 1},
        ],
    }
    cfg = config_from_obj(obj)
    assert json.loads(dump_config(cfg)) == obj
    assert dump_config(parse_config(dump_config(cfg))) == dump_config(cfg)


def test_fraction_str_rendering():
    assert fraction_str(Fraction(5, 8)) == "5/8"
    assert fraction_str(Fraction(-64)) == "-64"
    assert fraction_str(7) == "7"
    assert fraction_str(Fraction(-3, 4)) == "-3/4"
