#!/usr/bin/env python3
"""End-to-end CLI checks: round-trips generated files through every
subcommand and verifies the documented exit-code contract."""

import json
import os
import subprocess
import sys
import tempfile

BIN = sys.argv[1]


def run(*args, expect=0, env=None):
    r = subprocess.run([BIN, *args], capture_output=True, text=True, env=env)
    if r.returncode != expect:
        raise AssertionError(f"{args}: exit {r.returncode} (wanted {expect})\n"
                             f"stdout: {r.stdout}\nstderr: {r.stderr}")
    return r


def main():
    td = tempfile.mkdtemp(prefix="altmatch_cli_")

    g1dir = os.path.join(td, "g1")
    out = run("gen", "--family", "g1:n=1", "-o", g1dir)
    manifest = json.loads(out.stdout)
    assert manifest["nu"] == 6 and manifest["edges"] == 9, manifest
    gfile = os.path.join(g1dir, "graph.edges")
    mfile = os.path.join(g1dir, "matching.txt")
    assert os.path.exists(gfile) and os.path.exists(mfile)

    r = run("check", "--theorem", "thm42", "-g", gfile, "-m", mfile)
    rep = json.loads(r.stdout)
    assert rep["exception_branch"] == "G1-jointing", rep
    assert rep["hypothesis_met"] and not rep["conclusion_holds"]
    assert not rep["counterexample"]

    r = run("check", "--theorem", "thm42", "-g", gfile, "-m", mfile, "--format", "human")
    assert "G1-jointing" in r.stdout

    k4dir = os.path.join(td, "k4")
    run("gen", "--family", "k:n=4", "-o", k4dir)
    k4g = os.path.join(k4dir, "graph.edges")
    k4m = os.path.join(k4dir, "matching.txt")

    r = run("search", "--target", "alt-ham-cycle", "-g", k4g, "-m", k4m)
    w = json.loads(r.stdout)
    assert w["status"] == "found" and len(w["witness"]["vertices"]) == 4, w
    flags = w["witness"]["matched_edge_flags"]
    assert sorted(flags) == [False, False, True, True]

    r = run("search", "--target", "alt-ham-cycle", "-g", gfile, "-m", mfile)
    assert json.loads(r.stdout)["status"] == "absent"

    r = run("search", "--target", "longest-alt-cycle", "-g", gfile, "-m", mfile)
    w = json.loads(r.stdout)
    assert w["status"] == "found" and len(w["witness"]["vertices"]) == 4

    # budget exhaustion surfaces as exit code 3
    k8dir = os.path.join(td, "k8")
    run("gen", "--family", "k:n=8", "-o", k8dir)
    run("search", "--target", "alt-ham-cycle", "-g", os.path.join(k8dir, "graph.edges"),
        "-m", os.path.join(k8dir, "matching.txt"), "--budget", "2", expect=3)

    r = run("build-path", "-g", k4g, "-m", k4m)
    b = json.loads(r.stdout)
    assert b["status"] == "engine" and len(b["trace"]) == 1, b
    assert b["trace"][0]["kind"] == "extend_tail"
    assert len(b["walk"]["vertices"]) == 4

    r = run("extend-profile", "-g", k4g)
    prof = json.loads(r.stdout)
    assert prof["max_k"] == 1 and prof["failing_k"] is None, prof

    r = run("probe-lw", "-g", k4g, "-L", "0-1,2-3")
    rep = json.loads(r.stdout)
    assert rep["hypothesis_met"] and rep["conclusion_holds"], rep
    run("probe-lw", "-g", k4g, "-L", "0-1,1-2", expect=64)  # dependent edges

    remdir = os.path.join(td, "remark")
    run("gen", "--family", "remark:t=1", "-o", remdir)
    r = run("check", "--theorem", "thm21", "-g", os.path.join(remdir, "graph.edges"),
            "-m", os.path.join(remdir, "matching.txt"))
    rep = json.loads(r.stdout)
    assert not rep["hypothesis_met"]
    assert rep["diagnostics"]["min_cross_degree_sum"] == 4

    k6dir = os.path.join(td, "k6")
    run("gen", "--family", "k:n=6", "-o", k6dir)
    r = run("check", "--theorem", "cor43", "--k", "2", "-g", os.path.join(k6dir, "graph.edges"),
            "-m", os.path.join(k6dir, "matching.txt"))
    rep = json.loads(r.stdout)
    assert rep["hypothesis_met"] and rep["conclusion_holds"], rep

    cfg = os.path.join(td, "sweep.json")
    with open(cfg, "w") as f:
        json.dump({"nu": [2, 4], "theorems": ["thm31", "thm42"]}, f)
    summary_file = os.path.join(td, "summary.json")
    r = run("sweep", "--config", cfg, "--summary-out", summary_file)
    with open(summary_file) as f:
        s = json.load(f)
    assert s["counterexamples_total"] == 0 and s["graphs_seen"] == 66, s

    env = dict(os.environ, ALTMATCH_WORKERS="2")
    r = run("sweep", "--config", cfg, env=env)
    s2 = json.loads(r.stdout)
    assert s2["matchings_seen"] == s["matchings_seen"]

    budget_cfg = os.path.join(td, "budget.json")
    with open(budget_cfg, "w") as f:
        json.dump({"nu": [6], "theorems": ["thm42"], "budget": 1}, f)
    r = run("sweep", "--config", budget_cfg, expect=3)
    assert json.loads(r.stdout)["budget_exceeded_total"] > 0

    # graph6 catalogs drive sweeps too
    catalog = os.path.join(td, "mini.g6")
    with open(catalog, "w") as f:
        f.write("C~\nE{Sw\n")  # K4 and the triangular prism
    cat_cfg = os.path.join(td, "catalog.json")
    with open(cat_cfg, "w") as f:
        json.dump({"graph6": catalog, "theorems": ["thm42"]}, f)
    ce_file = os.path.join(td, "ce.ndjson")
    r = run("sweep", "--config", cat_cfg, "--counterexamples-out", ce_file)
    s3 = json.loads(r.stdout)
    assert s3["graphs_seen"] == 2 and s3["counterexamples_total"] == 0, s3
    assert os.path.exists(ce_file) and os.path.getsize(ce_file) == 0

    # bad matching files exit 64 and name the offending line
    c6dir = os.path.join(td, "c6")
    run("gen", "--family", "cycle:n=6", "-o", c6dir)
    bad = os.path.join(td, "bad_matching.txt")
    with open(bad, "w") as f:
        f.write("0 1\n0 2\n")  # 0 repeated, 0-2 not an edge
    r = run("check", "--theorem", "thm31", "-g", os.path.join(c6dir, "graph.edges"),
            "-m", bad, expect=64)
    assert "line 2" in r.stderr, r.stderr

    partial = os.path.join(td, "partial_matching.txt")
    with open(partial, "w") as f:
        f.write("0 1\n")
    r = run("search", "--target", "alt-ham-cycle", "-g", os.path.join(c6dir, "graph.edges"),
            "-m", partial, expect=64)
    assert "not perfect" in r.stderr, r.stderr

    run("gen", "--family", "nonsense:x=1", "-o", td, expect=64)

    print("cli tests ok")


if __name__ == "__main__":
    main()
