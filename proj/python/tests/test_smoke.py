import json

import pytest

import unipmn


def test_values():
    assert unipmn.value("4|", "2,1|1", "C") == 1
    assert unipmn.value("0,1|4", "4|", "C") == unipmn.value_oracle("0,1|4", "4|", "C") == 1
    assert abs(unipmn.value("1,3|", "|2,1,1", "D-")) == 2


def test_symbols_and_degrees():
    assert len(unipmn.symbols(2, "C")) == 6
    assert unipmn.normalize("0,1,2|0,1") == "0|"
    assert unipmn.degree("0,1|4", 2) == 51
    assert unipmn.degree(unipmn.dual("1,4|0"), 2) == 30464
    assert unipmn.hooks("0,1|4", 4) == [("0|", 1)]
    assert unipmn.babbage_residue(5, 3) == []


def test_errors():
    with pytest.raises(ValueError):
        unipmn.value("0,1|4", "3|", "C")
    with pytest.raises(unipmn.ParseError):
        unipmn.normalize("3,1|")


def test_scan_and_cli():
    rep = unipmn.scan("C", 4, 2, 5, threads=1)
    assert "0,1|4" in [s["symbol"] for s in rep["nonvanishing"]]
    code, out, err = unipmn.cli(["degree", "--symbol", "0,1|4", "--q", "2"])
    assert code == 0 and json.loads(out)["degree"] == 51 and err == ""
    code, _, err = unipmn.cli(["value", "--family", "C", "--symbol", "0,1|4", "--class", "3|"])
    assert code == 2 and "error" in json.loads(err)


def test_checks():
    assert unipmn.corrigendum("Sp", 3, 2, 2)["index"] == 336
    assert unipmn.cartan(2, 2, 1)["passed"]
    assert "0,1|4" in unipmn.predicted_exceptions("C", 4, 4, 2)
