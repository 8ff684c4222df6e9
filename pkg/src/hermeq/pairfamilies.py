# Two parametric families of Hermite-equivalent pairs (f, g), quartic and
# quintic, tied together by the substitution beta = alpha + 2 alpha^2 and
# an explicit change matrix U between the power bases of beta and alpha.
# The congruence conditions on the parameters force irreducibility (by
# reduction at two small primes) and full symmetric Galois group, which
# is what rules out any GL2(Z) relation between f and g even though the
# top invariant lattices coincide.

from .intpoly import DomainError

# beta = alpha + 2 alpha^2, as ascending coefficients
PAIR_EXPR = [0, 1, 2]


def quartic_params_ok(s, t):
    return (s - t) % 15 == 0 and (t - 21) % 30 == 0


def quartic_samples(k):
    """First k parameter pairs (s, t) meeting the quartic congruences,
    deterministically."""
    return [(6 + 15 * i, 21 + 30 * i) for i in range(k)]


def quartic_pair(s, t):
    """The degree-4 pair at (s, t): ascending f and g, descending-basis U.

    U is written against the descending power bases: row a of U holds the
    coordinates of beta^(3-a) on alpha^3, alpha^2, alpha, 1.
    """
    if not quartic_params_ok(s, t):
        raise DomainError("parameters must satisfy s = t (mod 15), "
                          "t = 21 (mod 30)")
    f = [-2 * s ** 2 + 8 * t ** 2 + t, 2 * s, 8 * t, 0, 2]
    g = [(2 * s ** 2 - 8 * t ** 2 - t)
         * (16 * s ** 2 - 64 * t ** 2 + 8 * s - 24 * t - 1),
         -128 * s ** 2 * t + 512 * t ** 3 - 32 * s ** 2 + 32 * s * t
         + 128 * t ** 2 + 2 * s + 8 * t,
         -16 * s ** 2 + 192 * t ** 2 + 12 * s + 16 * t,
         32 * t,
         2]
    u = [[1 - 8 * s - 48 * t,
          8 * s ** 2 + 96 * t ** 2 - 12 * s - 28 * t,
          12 * s ** 2 + 32 * s * t - 48 * t ** 2 - 6 * s - 6 * t,
          -32 * s ** 2 * t + 128 * t ** 3 + 6 * s ** 2 - 8 * t ** 2 - 3 * t],
         [4, -16 * t + 1, -4 * s, 4 * s ** 2 - 16 * t ** 2 - 2 * t],
         [0, 2, 1, 0],
         [0, 0, 0, 1]]
    return {"s": s, "t": t, "f": f, "g": g, "u": u, "expr": PAIR_EXPR}


def quintic_params_ok(s):
    return (s - 71) % 110 == 0


def quintic_samples(k):
    return [71 + 110 * i for i in range(k)]


def quintic_pair(s):
    """The degree-5 pair at s: ascending f and g, descending-basis U."""
    if not quintic_params_ok(s):
        raise DomainError("parameter must satisfy s = 71 (mod 110)")
    f = [800 * s ** 2 + 253 * s + 20,
         -800 * s ** 2 - 278 * s - 24,
         0, 0, 0, 2]
    # g is twice the minimal polynomial of beta; the low two coefficients
    # were recomputed symbolically from f (resultant route) and confirmed
    # by evaluating g at beta exactly
    g = [-(25 * s + 4) * (32 * s + 5) * (19200 * s ** 2 + 6272 * s + 511),
         4 * (25 * s + 4) * (51200 * s ** 3 + 27392 * s ** 2
                             + 4944 * s + 299),
         4 * (25 * s + 4) * (96 * s + 13),
         -16 * (16 * s + 3) * (25 * s + 4),
         0,
         2]
    u = [[6400 * s ** 2 + 2224 * s + 193,
          6400 * s ** 2 + 2424 * s + 224,
          -3200 * s ** 2 - 712 * s - 32,
          -6400 * s ** 2 - 1924 * s - 144,
          -3200 * s ** 2 - 1012 * s - 80],
         [6, 1,
          3200 * s ** 2 + 1112 * s + 96,
          1600 * s ** 2 + 656 * s + 64,
          -4800 * s ** 2 - 1518 * s - 120],
         [4, 4, 1, 0, 0],
         [0, 0, 2, 1, 0],
         [0, 0, 0, 0, 1]]
    return {"s": s, "f": f, "g": g, "u": u, "expr": PAIR_EXPR}
