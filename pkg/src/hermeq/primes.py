# Deterministic primality and small modular helpers.

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic Miller-Rabin.

    The fixed witness set is exact for every n < 3.3 * 10^24, far beyond any
    parameter searched here; larger inputs are rejected outright rather than
    answered probabilistically.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n >= 3_317_044_064_679_887_385_961_981:
        raise ValueError("input too large for the deterministic witness set")
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n):
    """Smallest prime strictly greater than n."""
    k = n + 1
    if k <= 2:
        return 2
    if k % 2 == 0:
        k += 1
    while not is_prime(k):
        k += 2
    return k


def primes_in_progression(residue, modulus, start=2):
    """Yield primes p >= start with p = residue (mod modulus), ascending."""
    p = start - 1
    while True:
        p = next_prime(p)
        if p % modulus == residue % modulus:
            yield p


def mod_inverse(a, m):
    return pow(a, -1, m)


def _pollard_rho(n):
    """A nontrivial factor of composite odd n (Brent's cycle variant)."""
    from math import gcd
    from random import Random

    rng = Random(n)
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n):
    """Prime factorization of |n| as a sorted dict prime -> exponent.

    Trial division by the small primes, then Pollard rho on what is left.
    n = 0 is rejected; the unit sign is dropped.
    """
    n = abs(n)
    if n == 0:
        raise ValueError("zero has no factorization")
    out = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return dict(sorted(out.items()))


def is_squarefree(n):
    """True when no prime square divides n; rejects 0."""
    return all(e == 1 for e in factorize(n).values())
