"""CLI contract tests: JSON determinism and the rnum/zeta round trip.

Usage: test_cli_roundtrip.py <rzeta-binary> <fixture-dir>
"""

import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path


def run(args):
    return subprocess.run(args, capture_output=True, text=True)


def main():
    rzeta = sys.argv[1]
    data = Path(sys.argv[2])
    fib = str(data / "fibonacci.json")

    # byte-stable --json output across runs
    first = run([rzeta, "zeta", fib, "--json"])
    second = run([rzeta, "zeta", fib, "--json"])
    assert first.returncode == 0, first.stderr
    assert first.stdout == second.stdout, "zeta --json output is not byte-stable"

    z = json.loads(first.stdout)
    assert list(z.keys()) == [
        "numerator", "denominator", "radius", "radius_error",
        "degree_bound", "certified", "second_factor_c",
    ], f"unexpected key order: {list(z.keys())}"

    # round trip: expand P/Q and recover the R values printed by rnum
    max_m = 16
    r = run([rzeta, "rnum", fib, "--max", str(max_m), "--json"])
    assert r.returncode == 0, r.stderr
    rnumbers = [int(x) for x in json.loads(r.stdout)["rnumbers"]]

    num, den = z["numerator"], z["denominator"]
    series = [Fraction(0)] * (max_m + 1)
    for m in range(max_m + 1):
        acc = Fraction(num[m] if m < len(num) else 0)
        for j in range(1, min(m, len(den) - 1) + 1):
            acc -= den[j] * series[m - j]
        series[m] = acc / den[0]
    recovered = []
    for m in range(1, max_m + 1):
        acc = m * series[m]
        for j in range(1, m):
            acc -= recovered[j - 1] * series[m - j]
        recovered.append(acc)
    assert recovered == rnumbers, f"{recovered} != {rnumbers}"

    # exit codes: validation 2, I/O 3, zeta undefined 4, verify failure 5
    bad = run([rzeta, "rnum", str(data / "bad_nonunimodular.json")])
    assert bad.returncode == 2, (bad.returncode, bad.stderr)
    missing = run([rzeta, "rnum", str(data / "no_such_file.json")])
    assert missing.returncode == 3, missing.returncode
    undef = run([rzeta, "zeta", str(data / "identity.json")])
    assert undef.returncode == 4, undef.returncode
    assert "Phi_1" in undef.stderr
    corrupt = run([rzeta, "verify", str(data / "corrupted.json")])
    assert corrupt.returncode == 5, (corrupt.returncode, corrupt.stdout)

    # k = 1 renders inf with the R-infinity note
    k1 = run([rzeta, "rnum", str(data / "k1.json"), "--max", "3"])
    assert k1.returncode == 0
    assert "R-infinity" in k1.stdout
    values = [line.split("\t")[1] for line in k1.stdout.splitlines() if "\t" in line]
    assert values == ["inf", "inf", "inf"], values

    print("cli round-trip and exit-code tests passed")


if __name__ == "__main__":
    main()
