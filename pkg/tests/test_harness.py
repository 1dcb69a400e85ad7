import json
import os

import pytest

from zfalpha.cli import main
from zfalpha.enumeration import enumerate_connected_cubic
from zfalpha.graphs import (GraphError, complete_bipartite, complete_graph,
                            cycle_graph, disjoint_union, graph_from_edges,
                            parse_graph6, path_graph, petersen_graph,
                            write_graph6)
from zfalpha.harness import (Certificate, RunConfig, trace_forcing,
                             verify_batch, verify_graph)


def test_runconfig_validation():
    with pytest.raises(ValueError):
        RunConfig(budget_secs=0)
    with pytest.raises(ValueError):
        RunConfig(workers=0)


def test_verify_graph_k4():
    cert = verify_graph(complete_graph(4))
    assert cert.z == 3 and cert.alpha == 1
    conj = [b for b in cert.bounds if b.bound_name == "z_le_alpha_plus_1"]
    assert len(conj) == 1 and not conj[0].applicable
    assert not cert.violations


def test_verify_graph_petersen():
    cert = verify_graph(petersen_graph())
    assert cert.z == 5 and cert.alpha == 4
    conj = [b for b in cert.bounds if b.bound_name == "z_le_alpha_plus_1"][0]
    assert conj.applicable and conj.holds  # 5 <= 5
    assert cert.phi == 3 and cert.upper_embeddable and cert.one_face
    assert cert.claw_center_count == 10
    assert not cert.violations


def test_verify_graph_k33():
    cert = verify_graph(complete_bipartite(3, 3))
    assert cert.z == 4 and cert.alpha == 3
    assert not cert.violations


def test_verify_graph_noncubic():
    cert = verify_graph(path_graph(5))
    assert cert.z == 1 and cert.alpha == 3
    assert cert.phi is None and cert.upper_embeddable is None
    claw = [b for b in cert.bounds
            if b.bound_name == "z_le_alpha_plus_1_plus_claw_centers"]
    assert claw and claw[0].holds


def test_verify_graph_requires_connected():
    with pytest.raises(GraphError):
        verify_graph(disjoint_union(path_graph(2), path_graph(2)))


def test_certificate_json_round_trip():
    cert = verify_graph(cycle_graph(6))
    line = cert.to_json()
    back = Certificate.from_json(line)
    assert back.to_json() == line
    assert back.z == cert.z and back.bounds == cert.bounds


def test_certificate_graph6_reparses():
    cert = verify_graph(petersen_graph())
    again = verify_graph(parse_graph6(cert.graph6))
    assert (again.z, again.alpha, again.phi) == (cert.z, cert.alpha, cert.phi)


def test_budget_exhaustion_recorded(tmp_path):
    big = enumerate_connected_cubic(12)[0]
    cert = verify_graph(big, RunConfig(budget_secs=1e-6,
                                       check_embeddability=False,
                                       check_constructions=False))
    assert "zero_forcing" in cert.incomplete
    assert cert.z is None


def test_verify_batch_writes_certificates(tmp_path):
    out = tmp_path / "certs.jsonl"
    csv = tmp_path / "certs.csv"
    graphs = enumerate_connected_cubic(6)
    summary, certs = verify_batch(graphs, out_path=str(out), csv_path=str(csv))
    assert summary.graphs_checked == 2
    assert summary.ok and not summary.violation_certs
    assert summary.upper_embeddable_fraction == {6: 1.0}
    lines = out.read_text().splitlines()
    assert len(lines) == 2
    for line, g in zip(lines, graphs):
        row = json.loads(line)
        assert row["graph6"] == write_graph6(g).decode("ascii")
    header, *rows = csv.read_text().splitlines()
    assert header.startswith("graph6,n,z,alpha")
    assert len(rows) == 2


def test_verify_batch_deterministic(tmp_path):
    graphs = enumerate_connected_cubic(6)
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    verify_batch(graphs, out_path=str(a))
    verify_batch(graphs, out_path=str(b))
    assert a.read_bytes() == b.read_bytes()


def test_verify_batch_workers_match_serial(tmp_path):
    graphs = enumerate_connected_cubic(8)
    cfg = RunConfig(check_embeddability=False, check_constructions=False)
    a, b = tmp_path / "serial.jsonl", tmp_path / "pool.jsonl"
    verify_batch(graphs, cfg, out_path=str(a))
    verify_batch(graphs, RunConfig(workers=2, check_embeddability=False,
                                   check_constructions=False),
                 out_path=str(b))
    assert a.read_bytes() == b.read_bytes()


def test_workers_env_override(monkeypatch):
    monkeypatch.setenv("ZFW_WORKERS", "3")
    assert RunConfig(workers=1).effective_workers() == 3
    monkeypatch.delenv("ZFW_WORKERS")
    assert RunConfig(workers=2).effective_workers() == 2


def test_trace_examples():
    assert trace_forcing(path_graph(3), 0b001) == "0→1, 1→2"
    assert trace_forcing(complete_graph(4), 0b0111) == "0→3"
    stall = trace_forcing(cycle_graph(4), 0b0001)
    assert stall.startswith("stalled") and "{0}" in stall
    dot = trace_forcing(path_graph(3), 0b001, dot=True)
    assert dot.startswith("graph forcing {") and "0 -- 1" in dot


# ---------------------------------------------------------------------------
# CLI


def test_cli_compute(capsys):
    rc = main(["compute", write_graph6(petersen_graph()).decode("ascii"),
               "--z", "--alpha"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "Z = 5" in out and "alpha = 4" in out


def test_cli_compute_file_with_comments(tmp_path, capsys):
    path = tmp_path / "graphs.g6"
    path.write_text("# a comment line\n\nC~\nBg\n")
    rc = main(["compute", str(path), "--z"])
    out = capsys.readouterr().out
    assert rc == 0
    assert out.count("Z =") == 2


def test_cli_verify_exit_codes(tmp_path, capsys):
    out = tmp_path / "certs.jsonl"
    rc = main(["verify", "--enumerate-n", "6", "--out", str(out)])
    text = capsys.readouterr().out
    assert rc == 0
    assert "violations: 0" in text
    assert "upper-embeddable fraction" in text
    assert out.exists()


def test_cli_construct_and_trace(capsys):
    rc = main(["construct", "--gt", "4"])
    out = capsys.readouterr().out.splitlines()
    assert rc == 0
    built = parse_graph6([ln for ln in out if not ln.startswith("#")][0])
    assert built.n == 16

    rc = main(["trace", "Bg", "--blue", "0"])
    assert rc == 0
    assert capsys.readouterr().out.strip() == "0→1, 1→2"

    rc = main(["trace", "Bg", "--blue", "0", "--dot"])
    assert rc == 0
    assert "graph forcing {" in capsys.readouterr().out


def test_cli_gadget_requires_input(capsys):
    rc = main(["construct", "--gadget", "g2"])
    assert rc == 2


def test_cli_bad_graph6(capsys):
    rc = main(["compute", "/nonexistent/file.g6"])
    assert rc == 2


def test_cli_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["verify"])  # missing required source
    assert info.value.code == 2
