#!/usr/bin/env python3
"""Compare the three zero-free regions and locate every crossover.

Everything runs in log t: the third region only takes over near
t = exp(54563), hopelessly outside double range for t itself.  The same
log-domain discipline locates the turning-point brackets behind the
large-x pipelines and the points where the two envelope families trade
places.
"""

from pntbounds import (
    bracket_nu2,
    bracket_nu3,
    compute_default_rows,
    compute_row,
    envelope_crossovers,
    limiting_constants,
    load_table,
    nu1,
    nu2,
    nu3,
    regime_compare,
    verify_unimodal,
)
from pntbounds.engine import VK_DEFAULT_PARAMS
from pntbounds.zfr import R1_FORD


def main() -> None:
    print("== region widths at a few heights (log t) ==")
    for y in (10.0, 91.28, 1000.0, 54563.0):
        print(f"  log t = {y:>8.2f}:  nu1 = {nu1(y):.3e}  nu2 = {nu2(y):.3e}  nu3 = {nu3(y):.3e}")

    print("\n== where the widest region changes ==")
    for c in envelope_crossovers():
        print(f"  {c.pair}: log t = {c.root_log_t:.4f} (bisected inside {c.bracket})")

    print("\n== decay-rate ceilings ==")
    lims = limiting_constants()
    print(f"  classical-shape limit 2/sqrt(R0): {lims['C1_limit']:.5f}")
    print(f"  same for the smoothed region:     {limiting_constants(R=R1_FORD)['C1_limit']:.5f}")
    print(f"  slow-decay limit:                 {lims['C2_limit']:.5f}")

    print("\n== turning-point brackets (units of sqrt(log x)) ==")
    for log_x0 in (1e5, 1e6, 1e10):
        b = bracket_nu2(log_x0)
        print(f"  log x0 = {log_x0:.0e}: B0 = {b.B0:.7f}  B2 = {b.B2:.7f}  B3 = {b.B3:.7f}")
    b = bracket_nu3()
    print(f"  slow-decay region:  B0 = {b.B0:.7f}  B2 = {b.B2:.7f}  B3 = {b.B3:.7f}")

    print("\n== single-peak certification of the integrand ==")
    rep = verify_unimodal(bracket_nu2(1e6), 1e6)
    print(f"  nu2 at log x = 1e6: slope pattern '{rep.pattern}', "
          f"peak at log t = {rep.turning_log_t:.1f} in [{rep.bracket_lo:.1f}, {rep.bracket_hi:.1f}]")
    rep = verify_unimodal(bracket_nu3(), 2.8e10)
    print(f"  nu3 at log x = 2.8e10: slope pattern '{rep.pattern}', "
          f"peak at log t = {rep.turning_log_t:.0f}")

    print("\n== where the envelope families trade places ==")
    table = load_table()
    rows = compute_default_rows(table)
    vk = compute_row(VK_DEFAULT_PARAMS, table)
    rc = regime_compare(rows, vk)
    print(f"  sqrt-decay table wins for {rc.lower_log_x:.2f} <= log x <= {rc.upper_log_x:.4e}")


if __name__ == "__main__":
    main()
