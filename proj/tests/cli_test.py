"""CLI behaviour checks: subcommands, formats, exit codes, output files."""

import json
import os
import subprocess
import sys
import tempfile

CLI = sys.argv[1]


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def main():
    tmp = tempfile.mkdtemp(prefix="wintgen_cli_")

    # family writes a patch spec and reports the chosen domain
    spec = os.path.join(tmp, "fk.json")
    r = run("family", "first-kind", "--c1", "1", "--c2", "0", "--out", spec)
    assert r.returncode == 0, r.stderr
    assert "sqrt(cos(2*v))" in r.stdout
    doc = json.load(open(spec))
    assert doc["family"] == "vranceanu"
    assert len(doc["components"]) == 4

    # eval on the generated spec, json format
    r = run("eval", "--patch", spec, "--at", "0,0")
    assert r.returncode == 0, r.stderr
    point = json.loads(r.stdout)["points"][0]
    assert abs(point["K"] - 2.0) < 1e-9
    assert point["kind"] == "first"

    # csv grid with worker pool
    r = run("eval", "--patch", spec, "--grid", "8x5", "--format", "csv", "--workers", "4")
    assert r.returncode == 0, r.stderr
    lines = r.stdout.strip().splitlines()
    assert lines[0].startswith("u,v,K,KN,KN_signed")
    assert len(lines) == 1 + 8 * 5

    # classify emits flags-only rows
    r = run("classify", "--patch", spec, "--grid", "2x2", "--format", "csv")
    assert r.returncode == 0
    assert r.stdout.splitlines()[0] == "u,v,kind,flags"

    # malformed expression: exit 2 and no partial output file
    bad = os.path.join(tmp, "bad.json")
    with open(bad, "w") as f:
        f.write('{"ambient_dim": 3, "components": ["u", "v", "cos("], "domain": [0,1,0,1]}')
    out = os.path.join(tmp, "never.json")
    r = run("eval", "--patch", bad, "--grid", "4x4", "--out", out)
    assert r.returncode == 2, (r.returncode, r.stderr)
    assert not os.path.exists(out)

    # domain error: exit 3, offending point identified, no partial output
    half = os.path.join(tmp, "half.json")
    with open(half, "w") as f:
        f.write(
            '{"ambient_dim": 3, "components": ["u", "v", "sqrt(v)"],'
            ' "domain": [-1, 1, -1, 1]}'
        )
    r = run("eval", "--patch", half, "--grid", "2x4", "--out", out)
    assert r.returncode == 3, (r.returncode, r.stderr)
    assert "at (u=" in r.stderr
    assert not os.path.exists(out)

    # out-of-domain single point
    r = run("eval", "--patch", spec, "--at", "99,0")
    assert r.returncode == 3

    # unknown flags / missing inputs are input errors
    r = run("eval")
    assert r.returncode == 2
    r = run("family", "second-kind", "--c1", "0", "--c2", "0")
    assert r.returncode == 2

    # verify: text and json formats, exit 0 on pass
    r = run("verify", "lemma41", "--seed", "7", "--count", "200")
    assert r.returncode == 0, r.stderr
    assert "[PASS]" in r.stdout
    r = run("verify", "vranceanu", "--seed", "7", "--format", "json")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["pass"] is True
    r = run("verify", "no-such-suite")
    assert r.returncode == 2

    print("cli tests passed")


if __name__ == "__main__":
    main()
