#!/usr/bin/env python3
"""Run every certification scan at its default grid and print one line each.

Exits nonzero if any scan fails.  Note the full-interval envelope scan at
(a=4, b=3) fails by design: the two envelopes provably swap order left of
x ~ 0.48, a finding the acceptance suite pins down as well.
"""

import sys

from marcumq.analysis import (
    log_grid,
    scan_envelope_ordering,
    scan_f_ratio_monotone,
    scan_g_negative,
    scan_jp_dominance,
    scan_sandwich,
    scan_shifted_exp_chain,
)


def run() -> int:
    jobs = [
        ("g_negative [1e-3, 700]", scan_g_negative(1e-3, 700.0, 10000)),
        ("f_dec_eq2  [1e-3, 700]", scan_f_ratio_monotone("f_dec_eq2", 1e-3, 700.0, 10000)),
        ("f_inc_sinh [1e-3, 700]", scan_f_ratio_monotone("f_inc_sinh", 1e-3, 700.0, 10000)),
        ("chain_eq6  b=1 m=3", scan_shifted_exp_chain(1.0, 3.0, log_grid(1.5, 51.0, 100))),
        ("envelope   a=10 b=8 [7, 8]", scan_envelope_ordering(10.0, 8.0, 500, x_lo=7.0, x_hi=8.0)),
        ("envelope   a=4 b=3 [0, 3] (known reversal near 0)", scan_envelope_ordering(4.0, 3.0, 500)),
        ("sandwich", scan_sandwich()),
        ("jp_dominance", scan_jp_dominance()),
    ]
    failed = 0
    for label, rep in jobs:
        status = "PASS" if rep.passed else "FAIL"
        print(f"{status}  {label:<48} worst={rep.worst_violation:.3e} witness={rep.witness}")
        if not rep.passed:
            failed += 1
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(run())
