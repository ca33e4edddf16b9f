"""Large constructions that are too slow for the test suite.

    python3 scripts/long_runs.py ggs        # [2016,1008] over F_729, several minutes
    python3 scripts/long_runs.py tower-8    # [252,126] over F_64

Each run builds the code, checks its rank and certifies it with the
systematic-form method; no minimum distance is attempted.
"""

from __future__ import annotations

import argparse
import json
import time

from isodual import codes


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("which", choices=["ggs", "tower-8", "hermitian-5"])
    args = ap.parse_args()
    t0 = time.perf_counter()
    if args.which == "ggs":
        code = codes.build_ggs_lift(3, 3)
    elif args.which == "tower-8":
        code = codes.build_tower_step1(8)
    else:
        code = codes.build_hermitian_isodual(5, 1)
    built = time.perf_counter() - t0
    cert = codes.certify_isodual(code, method="systematic")
    print(json.dumps({
        "family": code.provenance.family,
        "n": code.n,
        "k": code.k,
        "deg_G": code.provenance.G.degree,
        "designed_distance": code.designed_distance,
        "verdict": cert.verdict,
        "residual_ok": cert.residual_ok,
        "build_seconds": round(built, 1),
        "total_seconds": round(time.perf_counter() - t0, 1),
    }))


if __name__ == "__main__":
    main()
