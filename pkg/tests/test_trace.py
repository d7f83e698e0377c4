import io
import json
import random

import numpy as np
import pytest

from tptlmon.trace import (
    Predicate,
    PredicateMap,
    TimedStateSequence,
    TraceError,
    apply_predicate_map,
    dumps_csv,
    gen_random,
    load_predicate_map,
    load_signals,
    load_trace,
    map_states,
    parse_predicate_map,
)

from conftest import DATA, bits

EX1_CSV = b"time,a,b\n0,0,0\n0.3,0,0\n0.7,1,1\n1.0,1,0\n1.1,1,1\n1.5,0,1\n1.9,0,1"


def test_example1_csv(example1_trace):
    tr = load_trace(io.BytesIO(EX1_CSV))
    assert tr == example1_trace
    assert tr.times == (0, 0.3, 0.7, 1.0, 1.1, 1.5, 1.9)
    assert bits(tr.valuation("a")) == "FFTTTFF"
    assert bits(tr.valuation("b")) == "FFTFTTT"
    assert tr.propositions == ("a", "b")


def test_single_sample():
    tr = load_trace(io.StringIO("time,a\n0,1"))
    assert len(tr) == 1 and tr[0] == (0.0, frozenset({"a"}))


def test_boolean_spellings():
    tr = load_trace(io.StringIO("time,a,b\n0,true,False\n1,TRUE,0\n"))
    assert [sorted(s) for _, s in tr] == [["a"], ["a"]]


def test_never_true_proposition_is_known():
    tr = load_trace(io.StringIO("time,a,b\n0,1,0\n"))
    assert "b" in tr.propositions
    assert not tr.valuation("b").any()


@pytest.mark.parametrize(
    "text, match",
    [
        ("time,a\n0,1\n0.5,1\n0.2,0\n", "precedes"),
        ("time,a\n", "empty"),
        ("", "empty"),
        ("time,a\n0.5,1\n", "first timestamp"),
        ("time,a\n0,2\n", "expected 0/1"),
        ("time,a\n0,1,1\n", "cells"),
        ("t,a\n0,1\n", "time"),
        ("time,a\nzero,1\n", "timestamp"),
        ("time,a\n-1,1\n", "invalid timestamp"),
        ("time,a\nnan,1\n", "invalid timestamp"),
    ],
)
def test_csv_errors(text, match):
    with pytest.raises(TraceError, match=match):
        load_trace(io.StringIO(text))


def test_normalize():
    tr = load_trace(io.StringIO("time,a\n2.5,1\n3.0,0\n"), normalize=True)
    assert tr.times == (0.0, 0.5)


def test_equal_timestamps_allowed():
    assert len(load_trace(io.StringIO("time,a\n0,1\n0,0\n1,1\n"))) == 3


def test_json_trace():
    data = [{"time": 0, "state": ["a"]}, {"time": 0.5, "state": []}, {"time": 1, "state": ["a", "b"]}]
    tr = load_trace(io.StringIO(json.dumps(data)), format="json")
    assert tr.times == (0, 0.5, 1)
    assert tr.states[2] == {"a", "b"}


@pytest.mark.parametrize(
    "data",
    [{"time": 0}, [], [{"time": "0", "state": []}], [{"time": 0, "state": "a"}], [{"time": 0, "signals": {"w": 1}}]],
)
def test_json_errors(data):
    with pytest.raises(TraceError):
        load_trace(io.StringIO(json.dumps(data)), format="json")


def test_unknown_format():
    with pytest.raises(TraceError):
        load_trace(io.StringIO("time\n0\n"), format="xml")


def test_predicate_map_threshold():
    pmap = parse_predicate_map("a1 := w >= 4500\n")
    tr = apply_predicate_map([(0, {"w": 4400.0}), (1, {"w": 4600.0})], pmap)
    assert "a1" not in tr.states[0] and "a1" in tr.states[1]


def test_predicate_map_inclusive_boundary():
    pmap = PredicateMap((Predicate("a4", "v", "<=", 120),))
    assert map_states([(0, {"v": 120.0})], pmap) == [{"a4"}]


def test_empty_map():
    tr = apply_predicate_map([(0, {"v": 1.0}), (1, {"v": 2.0})], PredicateMap())
    assert tr.states == (frozenset(), frozenset())


def test_missing_column():
    pmap = parse_predicate_map("a := w > 1")
    with pytest.raises(TraceError, match="missing column"):
        map_states([(0, {"v": 1.0})], pmap)


def test_predicate_map_file_syntax():
    pmap = parse_predicate_map("# gear predicates\na1 := w >= 4500  # engine speed\n\na4 := v <= 120\nneg := v < -1.5e2\n")
    assert pmap.names == ("a1", "a4", "neg")
    assert pmap.predicates[2].threshold == -150.0
    with pytest.raises(TraceError):
        parse_predicate_map("a1 = w >= 1")
    with pytest.raises(TraceError, match="duplicate"):
        parse_predicate_map("a := w > 1\na := v < 2")


def test_signal_loading_csv_and_json(tmp_path):
    (tmp_path / "s.csv").write_text("time,w,v\n0,4400,100\n1,4600,130\n")
    (tmp_path / "m.txt").write_text("a1 := w >= 4500\na4 := v <= 120\n")
    pmap = load_predicate_map(tmp_path / "m.txt")
    tr = load_trace(tmp_path / "s.csv", predicate_map=pmap)
    assert tr.states == (frozenset({"a4"}), frozenset({"a1"}))
    data = [{"time": 0, "signals": {"w": 4400, "v": 100}}, {"time": 1, "signals": {"w": 4600, "v": 130}}]
    (tmp_path / "s.json").write_text(json.dumps(data))
    assert load_trace(tmp_path / "s.json", format="json", predicate_map=pmap) == tr
    with pytest.raises(TraceError, match="not a number"):
        load_signals(io.StringIO("time,w\n0,fast\n"))


def test_mapping_is_pointwise():
    rng = random.Random(4)
    pmap = parse_predicate_map("p := w >= 0.5\nq := v < 0.2\nr := w = 0.25")
    for _ in range(50):
        rows = [(float(i), {"w": rng.choice([0, 0.25, 0.5, 1]), "v": rng.random()}) for i in range(10)]
        perm = list(range(10))
        rng.shuffle(perm)
        mapped = map_states(rows, pmap)
        assert map_states([rows[k] for k in perm], pmap) == [mapped[k] for k in perm]


def test_gen_random_properties():
    a = gen_random(1000, ["a", "b"], 0.5, seed=9)
    assert a == gen_random(1000, ["a", "b"], 0.5, seed=9)
    assert a != gen_random(1000, ["a", "b"], 0.5, seed=10)
    t = np.asarray(a.times)
    assert len(a) == 1000 and t[0] == 0
    steps = np.diff(t)
    assert (steps > 0).all() and (steps <= 1.0).all()
    assert abs(steps.mean() - 0.5) < 0.05
    assert 0.4 < a.valuation("a").mean() < 0.6


def test_gen_random_csv_round_trip():
    for seed in range(20):
        tr = gen_random(50, ["p", "q", "r"], 1.3, seed)
        assert load_trace(io.StringIO(dumps_csv(tr))) == tr


def test_valuation_is_read_only(example1_trace):
    with pytest.raises(ValueError):
        example1_trace.valuation("a")[0] = True
    assert not example1_trace.valuation("zzz").any()


def test_direct_construction_validation():
    with pytest.raises(TraceError):
        TimedStateSequence((0, 1), ({"a"},))
    with pytest.raises(TraceError):
        TimedStateSequence((), ())


def test_data_file_matches(example1_trace):
    assert load_trace(DATA / "example1.csv") == example1_trace
