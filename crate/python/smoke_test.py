#!/usr/bin/env python3
"""Smoke test for the schmidt_lab Python extension.

Builds the extension if needed, imports it, and exercises the bijection,
the colored reduction, the counting functions, and one identity check.

Usage: python3 python/smoke_test.py
"""

import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def locate_or_build():
    candidates = [
        ROOT / "target" / profile / "libschmidt_lab_py.so"
        for profile in ("release", "debug")
    ]
    existing = [p for p in candidates if p.exists()]
    if not existing:
        print("extension not built yet; running cargo build ...", flush=True)
        subprocess.run(
            [
                "cargo",
                "build",
                "--release",
                "-p",
                "schmidt-lab-py",
                "--features",
                "extension-module",
            ],
            cwd=ROOT,
            check=True,
        )
        existing = [p for p in candidates if p.exists()]
    return max(existing, key=lambda p: p.stat().st_mtime)


def main():
    ext = locate_or_build()
    staging = Path(tempfile.mkdtemp(prefix="schmidt_lab_"))
    shutil.copy(ext, staging / "schmidt_lab.so")
    sys.path.insert(0, str(staging))

    import schmidt_lab as sl

    # conjugation
    assert sl.conjugate([4, 2, 2, 1]) == [4, 3, 1, 1]
    assert sl.conjugate([]) == []

    # the worked bijection example
    result = sl.phi([26, 25, 22, 19, 15, 13, 11, 7, 5, 5, 3], 5)
    assert result["image"] == [41, 27, 24, 23, 21, 12, 3]
    assert result["mu"] == [30, 25, 5, 5]
    assert result["lambda_v"] == [21, 17, 14, 13, 11, 7, 3]
    assert sl.phi_inverse(result["image"], 5) == [26, 25, 22, 19, 15, 13, 11, 7, 5, 5, 3]

    # preconditions surface as ValueError
    try:
        sl.phi([6, 1], 5)
    except ValueError as e:
        assert "flat" in str(e)
    else:
        raise AssertionError("phi accepted a non-flat partition")

    # the colored reduction of the 26-part example
    big = [11, 11, 11, 10, 10, 8, 8, 7, 7, 7, 7, 6, 6,
           5, 5, 4, 4, 4, 4, 3, 3, 3, 2, 2, 2, 1]
    colored = sl.schmidt_to_colored(big, 5, [1, 2, 3])
    assert colored == [(25, 1), (17, 2), (15, 4), (15, 3), (13, 1), (8, 2), (3, 3)]
    assert sl.schmidt_weight(big, 5, [1, 2, 3]) == 96
    assert sl.diff_vector(big, 5) == [2, 2, 2, 1]
    assert sl.colored_to_schmidt(colored, 5, [1, 2, 3]) == big

    # counting functions
    assert sl.count_f32(7, 3) == 4
    assert sl.partitions_exact_parts(7, 3) == 4
    assert sl.count_r(2, 1, 4) == 5  # Schmidt's theorem: f(4) = p(4)
    assert sl.count_p(3, [1, 2], 0, [0, 0]) == 1
    # main theorem on one small bucket: counted = colored
    assert sl.count_p(3, [1, 2], 6, [1, 1]) == sl.count_colored(6, 3, [1, 2], [1, 1])
    assert sl.hook_multiset_check(8)
    assert sl.count_weighted([1, 2, 3, 2, 1], 4, 9) == sl.mod9_class_count(9)
    assert len(sl.partitions_of(7)) == 15

    # one identity check through the verifier
    verdicts = sl.verify("2phi1", big_m=4)
    assert len(verdicts) == 1 and verdicts[0]["status"] == "verified"
    verdicts = sl.verify("genf", order=12, k=3)
    assert all(v["status"] == "verified" for v in verdicts)

    print("smoke test passed")


if __name__ == "__main__":
    main()
