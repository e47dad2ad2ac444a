"""End-to-end tests for the serj command line tool."""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("SERJ_CLI", "serj")

PAIR_TOPOLOGY = {
    "nodes": [
        {"id": "S", "x": 0.0, "y": 0.0},
        {"id": "D", "x": 1.0, "y": 0.0},
    ],
    "source": "S",
    "destination": "D",
}


def run_cli(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def write_config(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def test_route_json(tmp_path):
    config = write_config(
        tmp_path, "route.json", {"topology": PAIR_TOPOLOGY, "format": "jsonl"}
    )
    result = run_cli("route", "--config", config)
    assert result.returncode == 0, result.stderr
    doc = json.loads(result.stdout)
    assert doc["path"] == ["S", "D"]
    assert doc["k_bits"] == 13
    assert doc["beta"] == 89462102.0
    assert abs(doc["total_cost"] - 3.4942e10) <= 1e7

    again = run_cli("route", "--config", config)
    assert again.stdout == result.stdout


def test_route_topology_file(tmp_path):
    topo_path = tmp_path / "pair.json"
    topo_path.write_text(json.dumps(PAIR_TOPOLOGY))
    config = write_config(
        tmp_path, "route.json", {"topology_file": "pair.json", "format": "jsonl"}
    )
    result = run_cli("route", "--config", config)
    assert result.returncode == 0, result.stderr
    assert json.loads(result.stdout)["k_bits"] == 13


def test_sweep_csv_header_and_flatness(tmp_path):
    config = write_config(tmp_path, "sweep.json", {})
    result = run_cli("sweep", "--config", config, "--sweep", "n_e=1:10:1")
    assert result.returncode == 0, result.stderr
    lines = result.stdout.strip().splitlines()
    assert lines[0] == "swept_param,value,P_total,hops,K,beta,eta,wall_ms"
    assert len(lines) == 11
    powers = {line.split(",")[2] for line in lines[1:]}
    assert len(powers) == 1  # eavesdropper count never changes the power


def test_sweep_jsonl_mirrors_csv(tmp_path):
    config = write_config(
        tmp_path,
        "sweep.json",
        {"scenario": {"sweep": "d_sd", "start": 1, "stop": 3, "step": 1}},
    )
    csv_out = run_cli("sweep", "--config", config, "--format", "csv")
    jsonl_out = run_cli("sweep", "--config", config, "--format", "jsonl")
    assert csv_out.returncode == 0
    assert jsonl_out.returncode == 0
    csv_rows = csv_out.stdout.strip().splitlines()[1:]
    jsonl_rows = [json.loads(line) for line in jsonl_out.stdout.strip().splitlines()]
    assert len(csv_rows) == len(jsonl_rows) == 3
    for csv_row, record in zip(csv_rows, jsonl_rows):
        fields = csv_row.split(",")
        assert fields[0] == record["swept_param"] == "d_sd"
        assert float(fields[1]) == record["value"]
        assert float(fields[2]) == record["P_total"]
        assert int(fields[4]) == record["K"]


def test_validate(tmp_path):
    config = write_config(tmp_path, "validate.json", {"topology": PAIR_TOPOLOGY})
    result = run_cli(
        "validate", "--config", config, "--trials", "20000", "--seed", "11"
    )
    assert result.returncode == 0, result.stderr
    lines = result.stdout.strip().splitlines()
    assert lines[0] == "link,analytic_pout,empirical_pout,bound_3sigma,pass"
    assert lines[-1].startswith("end_to_end,")
    assert all(line.endswith(",true") for line in lines[1:])


def test_output_file(tmp_path):
    out_path = tmp_path / "rows.csv"
    config = write_config(
        tmp_path,
        "sweep.json",
        {
            "scenario": {"sweep": "r_max", "start": 1, "stop": 5, "step": 1},
            "output": str(out_path),
        },
    )
    result = run_cli("sweep", "--config", config)
    assert result.returncode == 0, result.stderr
    assert out_path.exists()
    assert out_path.read_text().startswith("swept_param,")


def test_exit_codes(tmp_path):
    bad_config = write_config(
        tmp_path, "bad.json", {"params": {"epsilon": 1.5}, "topology": PAIR_TOPOLOGY}
    )
    assert run_cli("route", "--config", bad_config).returncode == 2

    no_topology = write_config(tmp_path, "empty.json", {})
    assert run_cli("route", "--config", no_topology).returncode == 2

    secrecy = write_config(
        tmp_path, "secrecy.json", {"params": {"l": 1e-11}, "topology": PAIR_TOPOLOGY}
    )
    result = run_cli("route", "--config", secrecy)
    assert result.returncode == 3
    assert "secrecy_infeasible" in result.stderr

    unreliable = write_config(
        tmp_path, "theta.json", {"params": {"theta": 1e-3}, "topology": PAIR_TOPOLOGY}
    )
    result = run_cli("route", "--config", unreliable)
    assert result.returncode == 4
    assert "reliability_infeasible" in result.stderr

    assert run_cli("sweep", "--sweep", "bogus=1:2:1").returncode == 2
    assert run_cli("bogus-command").returncode == 2


def test_help():
    result = run_cli("--help")
    assert result.returncode == 0
    assert "route" in result.stdout
    assert "sweep" in result.stdout
    assert "validate" in result.stdout
