#!/usr/bin/env python3
# Copyright 2026 The eaqecc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Freezes seeded splittings of the combination-code builder as fixtures.

Runs `eaqecc search-t43` for each (D, split, E) ingredient triple and stores
the found generator matrices together with the seed and trial that produced
them.

    python3 tools/freeze_t43_fixtures.py build/eaqecc data/fixtures
"""
import json
import os
import subprocess
import sys

SEED = 1
CASES = [
    ("dodecacode", 8, "E_2_4_1", 7),
    ("dodecacode", 8, "E_3_4_2", 8),
    ("self_dual_14", 10, "E_2_4_1", 7),
    ("self_dual_14", 10, "E_3_4_2", 8),
    ("self_dual_18", 14, "E_2_4_1", 9),
    ("self_dual_18", 14, "E_3_4_2", 10),
]


def main():
    exe, outdir = sys.argv[1], sys.argv[2]
    for d, split, e, target in CASES:
        cmd = [exe, "search-t43", os.path.join(outdir, d + ".json"), str(split),
               os.path.join(outdir, e + ".json"), str(target), "--seed", str(SEED), "--budget", "100"]
        res = json.loads(subprocess.run(cmd, check=True, capture_output=True, text=True).stdout)
        if not res["found"]:
            raise SystemExit(f"no splitting for {d} + {e}")
        b = res["build"]
        fixture = {
            "name": f"t43_{d}_{e}",
            "D": d, "E_code": e, "seed": SEED, "trial": res["trial"],
            "n": len(res["C"][0]), "m": len(res["E"][0]),
            "C": res["C"], "Cprime": res["Cprime"], "E": res["E"],
            "params": b["params"]["params"], "d1": b["d1"], "d2": b["d2"],
        }
        with open(os.path.join(outdir, fixture["name"] + ".json"), "w") as f:
            json.dump(fixture, f, indent=2)
            f.write("\n")
        print(fixture["name"], fixture["params"], "trial", fixture["trial"])


if __name__ == "__main__":
    main()
