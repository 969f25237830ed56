"""Every JSON report the CLI emits must re-parse and carry its schema keys."""

import json
import subprocess
import sys

BIN = sys.argv[1]


def run(*args):
    out = subprocess.run([BIN, *args], capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main():
    d = run("classify", "--algebra", "sp10", "--partition", "3,3,1,1,1,1",
            "--format", "json")
    for key in ("family", "size", "partition", "levi", "k", "zk", "excellent", "dimA"):
        assert key in d, key
    assert d["excellent"] and d["k"] == "sp2+sp4" and d["dimA"] == 1

    rep = run("verify", "--fixture", "sl3", "--format", "json")
    assert rep["fixture"] == "sl3"
    assert rep["all_pass"]
    for c in rep["checks"]:
        for key in ("name", "rule", "pass", "witness"):
            assert key in c, key

    dp = run("dual-pair", "--fixture", "sl3", "--format", "json")
    assert dp["mutual"] and not dp["reductive"]

    sec = run("section", "--algebra", "sp6", "--partition", "2,2,2",
              "--format", "json")
    assert sec["dim_section"] == 1 and sec["orbit_dim"] == 12
    assert sec["constant_orbit_dim"] and len(sec["samples"]) == 10

    en = run("enumerate", "--family", "sp", "--max", "6", "--format", "json")
    assert {"algebra": "sp4", "partition": [4], "dimA": 2, "anomaly": False} in en

    tb = run("tables", "--check", "--format", "json")
    assert tb["ok"] and tb["checks_run"] > 40

    print("cli json round trip ok")


if __name__ == "__main__":
    main()
