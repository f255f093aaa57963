import json

import pytest

from bottsamelson import (
    BottSamelsonError,
    BoxTooLarge,
    ProblemError,
    cartan_of_type,
    load_problem,
    parse_problem,
    report_json,
    run_analyze,
    run_oracle,
    run_scan,
    run_toric,
    run_weights,
)

BASE_DOC = {
    "cartan": {"type": "A", "rank": 3},
    "word": [2, 1, 3, 2],
    "divisor": [2, 2, 2, 2],
}


def test_parse_cartan_by_type_and_by_matrix():
    by_type = parse_problem(BASE_DOC)
    by_matrix = parse_problem({
        "cartan": {"matrix": [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]},
        "word": [2, 1, 3, 2],
        "divisor": [2, 2, 2, 2],
    })
    bare = parse_problem({
        "cartan": [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
        "word": [2, 1, 3, 2],
        "divisor": [2, 2, 2, 2],
    })
    assert by_type.gcm == by_matrix.gcm == bare.gcm == cartan_of_type("A", 3)
    assert by_type.word.letters == (2, 1, 3, 2)
    assert by_type.a == (2, 2, 2, 2)
    assert by_type.b == (0, 0, 0, 0)


def test_parse_divisor_with_lower_coefficients():
    spec = parse_problem({
        "cartan": [[2]],
        "word": [1],
        "divisor": {"a": [-2], "b": [1]},
    })
    assert spec.divisor().a == (-2,) and spec.divisor().b == (1,)


def test_parse_rejects_malformed_documents():
    base = {"cartan": [[2]], "word": [1], "divisor": [0]}
    bad_docs = [
        {**base, "extra": 1},
        {**base, "divisor": [0, 0]},
        {**base, "divisor": "nope"},
        {**base, "divisor": [0.5]},
        {**base, "divisor": [True]},
        {**base, "word": []},
        {**base, "word": [1.5]},
        {**base, "cartan": {"type": "A"}},
        {**base, "cartan": {"rank": 2}},
        {**base, "cartan": {"matrix": [[2]], "type": "A", "rank": 1}},
        {**base, "scan": [[2, 1]]},
        {**base, "scan": [[0, 1], [0, 1]]},
        "not a dict",
    ]
    # every malformed document maps to the invalid-input exit code, whether
    # the parser or a deeper validator catches it first
    for doc in bad_docs:
        with pytest.raises(BottSamelsonError):
            parse_problem(doc)


def test_load_problem_rejects_bad_json():
    with pytest.raises(ProblemError):
        load_problem("{not json")
    spec = load_problem(json.dumps(BASE_DOC))
    assert spec.a == (2, 2, 2, 2)


def test_commands_requiring_missing_pieces():
    no_divisor = parse_problem({"cartan": [[2]], "word": [1]})
    with pytest.raises(ProblemError):
        run_analyze(no_divisor)
    no_scan = parse_problem({"cartan": [[2]], "word": [1], "divisor": [0]})
    with pytest.raises(ProblemError):
        run_scan(no_scan)


def test_analyze_report_round_trips_through_its_echo():
    spec = parse_problem(BASE_DOC)
    doc = run_analyze(spec)
    again = parse_problem(doc["input"])
    assert again.gcm == spec.gcm
    assert again.word == spec.word
    assert again.a == spec.a
    assert run_analyze(again)["vanishing"] == doc["vanishing"]


def test_reports_are_byte_identical_across_runs():
    first = report_json(run_analyze(parse_problem(BASE_DOC), collect_witnesses=True))
    second = report_json(run_analyze(parse_problem(dict(BASE_DOC)), collect_witnesses=True))
    assert first == second
    assert first.encode() == second.encode()


def test_big_integers_become_decimal_strings():
    huge = 2**80
    spec = parse_problem({
        "cartan": [[2]],
        "word": [1],
        "divisor": [huge],
    })
    doc = run_analyze(spec, with_toric=False)
    text = report_json(doc)
    parsed = json.loads(text)
    assert parsed["input"]["divisor"]["a"] == [str(huge)]
    assert parsed["conditions"][0]["c_min"] == str(huge)
    # values that fit in 64 bits stay numeric
    assert parsed["schema"] == 1


def test_scan_matches_individual_reports():
    spec = parse_problem({
        "cartan": {"type": "A", "rank": 2},
        "word": [1, 2],
        "scan": [[-2, 0], [-1, 1]],
    })
    doc = run_scan(spec)
    assert len(doc["records"]) == 9
    assert doc["records"][0]["a"] == [-2, -1]
    assert doc["records"][-1]["a"] == [0, 1]
    from bottsamelson import build_bott_data, vanishing_report
    bott = build_bott_data(spec.gcm, spec.word)
    for rec in doc["records"]:
        rep = vanishing_report(bott, tuple(rec["a"]), with_toric=False)
        assert tuple(rec["vanished"]) == rep.vanished
        assert rec["single_degree"] == rep.single_degree
        assert rec["everything_vanishes"] == rep.everything_vanishes


def test_scan_grid_cap():
    spec = parse_problem({
        "cartan": [[2]],
        "word": [1],
        "scan": [[-1000, 1000]],
    })
    with pytest.raises(BoxTooLarge):
        run_scan(spec, cap=100)


def test_weights_and_toric_commands():
    spec = parse_problem({
        "cartan": {"type": "A", "rank": 2},
        "word": [1, 1],
        "divisor": [1, 0],
    })
    toric_doc = run_toric(spec)
    assert toric_doc["toric"]["dims"] == [2, 0, 0]
    weights_doc = run_weights(spec)
    concentrated = [r for r in weights_doc["weights"] if r["kind"] == "concentrated"]
    assert sum(1 for r in concentrated if r["degree"] == 0) == 2
    assert weights_doc["box"]["points"] == len(weights_doc["weights"])


def test_oracle_agreement_on_known_examples():
    for doc, dims in [
        ({"cartan": {"type": "A", "rank": 2}, "word": [1, 1], "divisor": [1, 0]},
         [2, 0, 0]),
        ({"cartan": [[2]], "word": [1], "divisor": [-2]}, [0, 1]),
    ]:
        out = run_oracle(parse_problem(doc))
        assert out["agree"]
        assert out["closed_form"]["dims"] == dims
        assert out["simplicial"]["dims"] == dims
        assert out["cech"]["dims"] == dims
        assert "first_mismatch" not in out
