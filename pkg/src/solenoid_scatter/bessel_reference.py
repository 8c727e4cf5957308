"""High-precision reference values for J0 and J1.

The ascending series is summed in ``decimal`` arithmetic with a working
precision sized to the cancellation (terms grow to about e^x / (pi x) before
they start to decay), so the result is correct to full double precision at
any argument, including arbitrarily close to a zero. This is slow by design
and is only used as a test oracle and to generate the zero table.
"""
from __future__ import annotations

import math
from decimal import Decimal, localcontext

from .errors import DomainError


def _precision_for(x: float, extra: int = 30) -> int:
    return extra + int(math.ceil(0.4343 * abs(x))) + 10


def series_decimal(nu: int, x: Decimal, prec: int) -> Decimal:
    """J_nu(x) for nu in {0, 1, 2} by the ascending series at ``prec`` digits."""
    if nu not in (0, 1, 2):
        raise DomainError("only orders 0, 1, 2 are supported")
    with localcontext() as ctx:
        ctx.prec = prec
        half = x / 2
        y = half * half
        term = Decimal(1)
        for j in range(1, nu + 1):
            term = term * half / j
        total = term
        tiny = Decimal(10) ** (-prec - 5)
        k = 0
        while True:
            k += 1
            term = -term * y / (k * (k + nu))
            total += term
            if abs(term) < tiny and k * k > y:
                break
        return +total


def j_reference(nu: int, x: float) -> float:
    """J_nu at the exact binary value of ``x``, correctly rounded to a double."""
    if not math.isfinite(x):
        raise DomainError("argument must be finite")
    sign = 1
    if x < 0:
        x = -x
        sign = -1 if nu % 2 else 1
    value = series_decimal(nu, Decimal(x), _precision_for(x))
    return sign * float(value)


def j0_reference(x: float) -> float:
    return j_reference(0, x)


def j1_reference(x: float) -> float:
    return j_reference(1, x)


def zero_decimal(nu: int, guess: float, digits: int = 40) -> Decimal:
    """Refine a zero of J_nu (nu in {0, 1}) by Newton iteration in Decimal."""
    prec = _precision_for(guess, extra=digits + 10)
    with localcontext() as ctx:
        ctx.prec = prec
        z = Decimal(guess)
        tol = Decimal(10) ** (-digits - 2)
        for _ in range(100):
            f = series_decimal(nu, z, prec)
            if nu == 0:
                df = -series_decimal(1, z, prec)
            else:
                df = series_decimal(0, z, prec) - f / z
            step = f / df
            z -= step
            if abs(step) < tol:
                return +z
    raise ArithmeticError("Newton iteration for Bessel zero did not converge")
