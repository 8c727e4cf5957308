"""Regenerate src/solenoid_scatter/_zero_table.py.

Zeros of J0 and J1 in [ZMIN, ZMAX] are located to 40 digits with the Decimal
oracle and stored as (hi, lo, slope) with hi + lo the zero to ~32 digits and
slope the first derivative of the function at the zero.
"""
import math
import sys
from decimal import Decimal, localcontext
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from solenoid_scatter.bessel_reference import series_decimal, zero_decimal  # noqa: E402

ZMIN, ZMAX = 23.0, 112.0
OUT = Path(__file__).resolve().parents[1] / "src" / "solenoid_scatter" / "_zero_table.py"


def zeros(nu):
    rows = []
    k = 1
    while True:
        beta = (k + (0.25 if nu == 1 else -0.25)) * math.pi
        guess = beta - (4 * nu * nu - 1) / (8 * beta)
        k += 1
        if guess < ZMIN - 1:
            continue
        if guess > ZMAX + 1:
            break
        z = zero_decimal(nu, guess)
        if not ZMIN <= z <= ZMAX:
            continue
        with localcontext() as ctx:
            ctx.prec = 80
            hi = float(z)
            lo = float(z - Decimal(hi))
            if nu == 0:
                slope = -float(series_decimal(1, z, 90))
            else:
                slope = float(series_decimal(0, z, 90))
        rows.append((hi, lo, slope))
    return rows


def main():
    lines = [
        '"""Zeros of J0 and J1 used by the near-zero Taylor branch.',
        "",
        "Generated by tools/gen_zero_table.py; do not edit by hand.",
        "Each row is (hi, lo, slope): the zero is hi + lo and slope is the",
        "derivative of the function there.",
        '"""',
        "",
        f"ZMIN = {ZMIN!r}",
        f"ZMAX = {ZMAX!r}",
        "",
    ]
    for nu in (0, 1):
        lines.append(f"J{nu}_ZEROS = (")
        for hi, lo, slope in zeros(nu):
            lines.append(f"    ({hi!r}, {lo!r}, {slope!r}),")
        lines.append(")")
        lines.append("")
    OUT.write_text("\n".join(lines))
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
