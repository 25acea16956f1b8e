#!/usr/bin/env python3
"""Byte-level determinism and exit-code checks for the command line tool."""

import json
import pathlib
import shutil
import subprocess
import sys
import tempfile

BINARY = sys.argv[1]


def run(args, expect=0):
    proc = subprocess.run([BINARY] + args, capture_output=True, text=True)
    if proc.returncode != expect:
        raise SystemExit(
            f"{args}: expected exit {expect}, got {proc.returncode}\n"
            f"stdout:\n{proc.stdout}\nstderr:\n{proc.stderr}"
        )
    return proc


def scene_outputs(scene, extra, out_dir):
    run([scene] + extra + ["--out", out_dir])
    produced = sorted(p.name for p in pathlib.Path(out_dir).iterdir())
    blobs = {name: (pathlib.Path(out_dir) / name).read_bytes() for name in produced}
    return produced, blobs


def check_scene(scene, extra, expect_files):
    # The report echoes the configuration (including the output directory), so
    # byte-level determinism is over identical invocations: same path twice.
    with tempfile.TemporaryDirectory() as tmp:
        out = tmp + "/a"
        names1, blobs1 = scene_outputs(scene, extra, out)
        shutil.rmtree(out)
        names2, blobs2 = scene_outputs(scene, extra, out)
    if names1 != names2 or set(names1) != set(expect_files):
        raise SystemExit(f"{scene}: files {names1} vs {names2}, expected {expect_files}")
    for name in names1:
        if blobs1[name] != blobs2[name]:
            raise SystemExit(f"{scene}: {name} differs between identical runs")
    report = json.loads(blobs1["report.json"])
    if report["scene"] != scene:
        raise SystemExit(f"{scene}: report names scene {report['scene']}")
    for key in ("config", "surface"):
        if key not in report:
            raise SystemExit(f"{scene}: report lacks key {key}")
    if "elapsed" in json.dumps(report) or "time" in report.get("config", {}):
        raise SystemExit(f"{scene}: report contains timing data")
    return report, blobs1


def main():
    report, blobs = check_scene(
        "fuchsian-genus2", ["--depth", "2"], ["report.json", "surface.obj"]
    )
    if report["metric"]["classification_row"] != 9:
        raise SystemExit("fuchsian report row changed")

    report, blobs = check_scene(
        "parabolic-torus", ["--depth", "3"], ["report.json", "surface.obj"]
    )
    if report["metric"]["classification_row"] != 5:
        raise SystemExit("parabolic report row changed")
    quads = [
        line
        for line in blobs["surface.obj"].decode().splitlines()
        if line.startswith("f ") and len(line.split()) == 5
    ]
    if not quads:
        raise SystemExit("parabolic surface.obj lost its quadrilateral faces")

    report, _ = check_scene("polar-dual", [], ["dual.obj", "report.json", "surface.obj"])
    if report["metric"]["classification_row"] != 4:
        raise SystemExit("polar dual report row changed")

    check_scene(
        "generalized",
        ["--preset", "ideal-tetrahedron"],
        ["report.json", "surface.obj"],
    )

    # Disabling exports must leave only the report.
    with tempfile.TemporaryDirectory() as tmp:
        run(["polar-dual", "--export", "json", "--out", tmp])
        names = sorted(p.name for p in pathlib.Path(tmp).iterdir())
        if names != ["report.json"]:
            raise SystemExit(f"--export json still wrote {names}")

    # Inadmissible preset geometry completes with a rejection diagnostic.
    with tempfile.TemporaryDirectory() as tmp:
        run(["generalized", "--preset", "rejected-cube", "--out", tmp])
        report = json.loads((pathlib.Path(tmp) / "report.json").read_text())
        details = report["details"]
        if not details["rejected"] or "edge" not in details["reason"]:
            raise SystemExit(f"rejected-cube not diagnosed: {details}")

    # Usage errors exit 2, help exits 0, an unknown preset fails the scene.
    run(["no-such-scene"], expect=2)
    run(["fuchsian-genus2", "--depth", "99"], expect=2)
    run(["--help"], expect=0)
    with tempfile.TemporaryDirectory() as tmp:
        run(["generalized", "--preset", "bogus", "--out", tmp], expect=1)

    print("cli determinism ok")


if __name__ == "__main__":
    main()
