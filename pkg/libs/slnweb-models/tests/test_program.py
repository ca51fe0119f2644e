import json

import pytest
from pydantic import ValidationError

from slnweb_models import Crossing, EngineConfig, FMove, FProgram, LinkProgram


def test_start_weight():
    program = FProgram(n=3, m=5, ell=2)
    assert program.start_weight() == (3, 3, 0, 0, 0)
    assert program.moves == ()


def test_moves_default_to_power_one():
    program = FProgram(n=2, m=4, ell=2, moves=[FMove(pos=2, power=2), FMove(pos=1)])
    assert program.total_power() == 3
    assert program.moves[1].to_dict() == {"kind": "F", "pos": 1, "power": 1}


@pytest.mark.parametrize("fields", [
    {"n": 1, "m": 2, "ell": 1},
    {"n": 2, "m": 2, "ell": 3},
    {"n": 2, "m": 2, "ell": 0},
    {"n": 2, "m": 2, "ell": 1, "moves": [{"pos": 2}]},
    {"n": 2, "m": 2, "ell": 1, "moves": [{"pos": 1, "power": 0}]},
])
def test_invalid_programs(fields):
    with pytest.raises(ValidationError):
        FProgram(**fields)


def test_program_dict_round_trip():
    program = FProgram(n=2, m=3, ell=1, moves=[FMove(pos=1), FMove(pos=2)])
    assert FProgram.from_dict(json.loads(json.dumps(program.to_dict()))) == program


def test_crossing_sign():
    assert Crossing(pos=1, sign=-1).sign == -1
    with pytest.raises(ValidationError):
        Crossing(pos=1, sign=2)


def test_link_items_are_discriminated():
    lp = LinkProgram.from_dict({
        "n": 2, "m": 3, "ell": 1,
        "items": [{"kind": "F", "pos": 1}, {"kind": "T", "pos": 1, "sign": -1}],
    })
    assert isinstance(lp.items[0], FMove)
    assert lp.crossings == [Crossing(pos=1, sign=-1)]
    assert LinkProgram.from_dict(lp.to_dict()) == lp


def test_crossing_needs_two_columns_on_its_right():
    with pytest.raises(ValidationError):
        LinkProgram(n=2, m=3, ell=1, items=[Crossing(pos=2, sign=1)])


def test_engine_config(tmp_path):
    path = tmp_path / "engine.json"
    path.write_text(json.dumps({"jobs": 3}))
    config = EngineConfig.from_json_file(path)
    assert config.to_dict() == {"jobs": 3, "max_states": 10**6, "parallel_threshold": 256}
    with pytest.raises(ValidationError):
        EngineConfig(jobs=0)
