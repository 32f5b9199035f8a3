#!/usr/bin/env python3
# Copyright 2026 The walletdiff Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""End-to-end checks of the walletdiff command line tool.

Runs a campaign twice with different worker counts, validates report.json
against its schema, re-renders the matrix, reloads the written corpus, and
replays the bundled seed fixtures.
"""

import argparse
import json
import shutil
import subprocess
import sys
from pathlib import Path

import jsonschema


def run(cli, *args, expect=0):
    proc = subprocess.run([cli, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        sys.stderr.write(proc.stdout + proc.stderr)
        raise AssertionError(f"{' '.join(args)}: exit {proc.returncode}, expected {expect}")
    return proc


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--cli", required=True)
    parser.add_argument("--schema", required=True, type=Path)
    parser.add_argument("--seeds", required=True, type=Path)
    parser.add_argument("--work", required=True, type=Path)
    args = parser.parse_args()

    shutil.rmtree(args.work, ignore_errors=True)
    args.work.mkdir(parents=True)
    one, four, reloaded = (args.work / d for d in ("jobs1", "jobs4", "reloaded"))

    run(args.cli, "--rng-seed", "7", "fuzz", "--jobs", "1", "--out", str(one))
    run(args.cli, "--rng-seed", "7", "fuzz", "--jobs", "4", "--out", str(four))
    report_bytes = (one / "report.json").read_bytes()
    assert report_bytes == (four / "report.json").read_bytes(), "reports differ across --jobs"

    report = json.loads(report_bytes)
    jsonschema.validate(report, json.loads(args.schema.read_text()))
    assert report["rngSeed"] == 7
    assert report["exitCode"] == 0
    assert report["totals"]["crashes"] == 0

    rendered = run(args.cli, "report", "--in", str(one / "report.json")).stdout
    assert rendered == (one / "report.md").read_text(), "report subcommand disagrees with report.md"

    run(args.cli, "--rng-seed", "7", "fuzz", "--corpus", str(one / "corpus.json"),
        "--out", str(reloaded))
    assert (reloaded / "report.json").read_bytes() == report_bytes, "reloaded corpus changed report"

    err = run(args.cli, "corpus", "--tx-count", "0", "--out", str(args.work / "c"), expect=1).stderr
    assert "bad-config" in err, err

    cases = [
        ("gasprice_branch_mint.json", "inject-v2", "classification: V2"),
        ("masked_ens_recipient.json", "ens-auto-suggest", "classification: V12"),
        ("masked_ens_recipient.json", "hardened", "classification: none"),
        ("benign_token_transfer.json", "hardened", "0 violation(s)"),
    ]
    for seed, profile, expected in cases:
        out = run(args.cli, "replay", "--seed", str(args.seeds / seed), "--profile", profile).stdout
        assert expected in out, f"{seed} on {profile}:\n{out}"

    proc = subprocess.run([args.cli, "replay", "--seed", str(args.seeds / cases[0][0]),
                           "--profile", "no-such-wallet"], capture_output=True, text=True)
    assert proc.returncode != 0, "unknown profile accepted"
    print("cli checks passed")


if __name__ == "__main__":
    main()
