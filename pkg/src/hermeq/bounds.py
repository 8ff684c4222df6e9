# Effective finiteness bounds: how large a polynomial sharing an
# equivalence class can be in coefficient height and in degree for a
# given discriminant, and how far one Hermite class can split into
# GL2(Z)- or Z-equivalence classes.

from decimal import Decimal, ROUND_CEILING, localcontext

from .intpoly import DomainError

_MONIC_LOG_PRECISION = 40


def coeff_bound_log(n, d, monic=False):
    """Natural log of the coefficient-height bound at discriminant d.

    General polynomials: the exact integer (4^2 n^3)^(25 n^2) |d|^(5n-3).
    Monic polynomials: n^20 8^(n^2+19) (|d| (log* |d|)^n)^(n-1), where
    log* means max(1, ln|d|); that convention is this library's reading,
    documented here because the source formula leaves it implicit.  The
    monic value involves a transcendental, so it is returned as a Decimal
    computed with every operation rounded toward +infinity at 40 digits,
    which keeps it a certified upper bound.
    """
    if not isinstance(n, int) or n < 2:
        raise DomainError("degree must be an integer >= 2")
    if d == 0:
        raise DomainError("discriminant must be nonzero")
    ad = abs(d)
    if not monic:
        return (16 * n ** 3) ** (25 * n * n) * ad ** (5 * n - 3)
    with localcontext() as ctx:
        ctx.prec = _MONIC_LOG_PRECISION
        ctx.rounding = ROUND_CEILING
        if ad == 1:
            logstar = Decimal(1)
        else:
            # ln() ignores the context rounding mode (always half-even),
            # so take it at surplus precision and bump by one ulp to stay
            # on the safe side of an upper bound
            with localcontext() as lctx:
                lctx.prec = _MONIC_LOG_PRECISION + 10
                lnv = Decimal(ad).ln()
                lnv += Decimal(1).scaleb(lnv.adjusted() - lctx.prec + 1)
            logstar = +lnv
            if logstar < 1:
                logstar = Decimal(1)
        inner = Decimal(ad) * logstar ** n
        return Decimal(n) ** 20 * Decimal(8) ** (n * n + 19) * inner ** (n - 1)


def max_degree(d, monic=False):
    """The degree cap 3 + 2 log_3 |d| (monic: 2 + the same), floored.

    Elementary but easy to get wrong in floating point when |d| is a
    power of 3, so the floor is taken by exact integer comparison:
    floor(2 log_3 |d|) is the largest k with 3^k <= d^2.
    """
    if d == 0:
        raise DomainError("discriminant must be nonzero")
    dd = d * d
    k = 0
    p = 3
    while p <= dd:
        k += 1
        p *= 3
    return (2 if monic else 3) + k


def split_counts(n, monic=False):
    """Upper bound on GL2(Z)-equivalence classes (monic: Z-equivalence
    classes of monic polynomials) inside one Hermite class of separable
    degree-n polynomials.  Unconditional values; the quartic cases sharpen
    for large discriminants, see split_refinement."""
    if not isinstance(n, int) or n < 2:
        raise DomainError("degree must be an integer >= 2")
    if monic:
        if n == 2:
            return 1
        if n == 3:
            return 10
        if n == 4:
            return 2760
    else:
        if n in (2, 3):
            return 1
        if n == 4:
            return 10
    return 2 ** (5 * n * n)


def split_refinement(n, monic=False):
    """The sharper split bound valid once the discriminant is large
    enough (quartics only); None where no refinement is stated."""
    if not isinstance(n, int) or n < 2:
        raise DomainError("degree must be an integer >= 2")
    if n == 4:
        return 182 if monic else 7
    return None


def bound_report(n, d, monic=False):
    """All bounds for one (degree, discriminant) pair in a single record."""
    return {
        "n": n,
        "D": d,
        "monic": bool(monic),
        "log_height_bound": coeff_bound_log(n, d, monic),
        "degree_cap": max_degree(d, monic),
        "split_counts": {
            "gl2": split_counts(n, False),
            "z_monic": split_counts(n, True),
            "large_disc_gl2": split_refinement(n, False),
            "large_disc_z_monic": split_refinement(n, True),
        },
    }
