# Dense univariate polynomials with exact coefficients.
#
# A polynomial is a list of coefficients in ascending order: p[i] is the
# coefficient of X^i.  The zero polynomial is the empty list.  Trailing
# (high-order) zeros are never stored; normalize() strips them.  Coefficients
# are ints unless stated otherwise (a few helpers accept Fractions).

from fractions import Fraction
from math import gcd

from .intmat import det_bareiss, det_cofactor


class DomainError(ValueError):
    pass


def normalize(p):
    n = len(p)
    while n and p[n - 1] == 0:
        n -= 1
    return list(p[:n])


def degree(p):
    # degree of the zero polynomial is -1 by convention
    return len(p) - 1


def leading(p):
    if not p:
        raise DomainError("zero polynomial has no leading coefficient")
    return p[-1]


def constant_term(p):
    return p[0] if p else 0


def poly_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return normalize(out)


def poly_neg(a):
    return [-c for c in a]


def poly_sub(a, b):
    return poly_add(a, poly_neg(b))


def poly_scale(a, c):
    if c == 0:
        return []
    return [c * x for x in a]


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return normalize(out)


def poly_pow(a, k):
    out = [1]
    base = list(a)
    while k:
        if k & 1:
            out = poly_mul(out, base)
        k >>= 1
        if k:
            base = poly_mul(base, base)
    return out


def poly_shift(a, k):
    # multiply by X^k
    if not a:
        return []
    return [0] * k + list(a)


def poly_eval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_compose(p, q):
    # p(q(X)), exact
    acc = []
    for c in reversed(p):
        acc = poly_add(poly_mul(acc, q), [c] if c else [])
    return acc


def derivative(p):
    return normalize([i * p[i] for i in range(1, len(p))])


def content(p):
    """Positive gcd of the coefficients of a nonzero polynomial."""
    if not normalize(p):
        raise DomainError("content of the zero polynomial is undefined")
    g = 0
    for c in p:
        g = gcd(g, c)
    return g


def primitive_part(p):
    c = content(p)
    return [x // c for x in p]


def poly_divmod_exact(a, b):
    """Euclidean division a = q*b + r over the integers.

    Requires the leading coefficient of b to be a unit (+-1) so that the
    division stays integral; raises DomainError otherwise.
    """
    b = normalize(b)
    if not b:
        raise DomainError("division by zero polynomial")
    lb = b[-1]
    if lb not in (1, -1):
        raise DomainError("divisor leading coefficient must be a unit")
    r = list(normalize(a))
    q = [0] * max(0, len(r) - len(b) + 1)
    while len(r) >= len(b):
        c = r[-1] * lb  # r[-1] / lb since lb in {1,-1}
        k = len(r) - len(b)
        q[k] = c
        for i, bc in enumerate(b):
            r[i + k] -= c * bc
        r = normalize(r)
        if not r:
            break
    return normalize(q), normalize(r)


def divides_exactly(b, a):
    q, r = poly_divmod_exact(a, b)
    return (not r), q


def reverse(p, n=None):
    """X^n * p(1/X) for n >= deg p (defaults to deg p)."""
    p = normalize(p)
    if n is None:
        n = degree(p)
    if n < degree(p):
        raise DomainError("reversal degree below polynomial degree")
    out = [0] * (n + 1)
    for i, c in enumerate(p):
        out[n - i] = c
    return normalize(out)


def sylvester_matrix(p, q):
    """Sylvester matrix of p and q, deg q rows of p first, then deg p rows of q.

    Rows hold descending coefficients, each shifted one column to the right of
    the previous row, matching the classical resultant determinant layout.
    """
    p = normalize(p)
    q = normalize(q)
    if not p or not q:
        raise DomainError("resultant of the zero polynomial is undefined")
    m, n = degree(p), degree(q)
    size = m + n
    pd = list(reversed(p))  # descending
    qd = list(reversed(q))
    rows = []
    for i in range(n):
        row = [0] * size
        for j, c in enumerate(pd):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [0] * size
        for j, c in enumerate(qd):
            row[i + j] = c
        rows.append(row)
    return rows


def resultant(p, q):
    """Res(p, q) as the Sylvester determinant (deg q rows of p on top).

    Coefficients may be integers or elements of any commutative ring
    (symbolic form coefficients, say); the symbolic case falls back to
    division-free cofactor expansion.
    """
    p = normalize(p)
    q = normalize(q)
    if not p or not q:
        raise DomainError("resultant of the zero polynomial is undefined")
    if degree(p) == 0:
        return p[0] ** degree(q)
    if degree(q) == 0:
        return q[0] ** degree(p)
    s = sylvester_matrix(p, q)
    if all(isinstance(x, int) for row in s for x in row):
        return det_bareiss(s)
    return det_cofactor(s)


def discriminant(f):
    """D(f) = (-1)^(n(n-1)/2) Res(f, f') / f0 with f0 the leading coefficient."""
    f = normalize(f)
    n = degree(f)
    if n < 1:
        raise DomainError("discriminant needs degree >= 1")
    r = resultant(f, derivative(f))
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    num = sign * r
    f0 = f[-1]
    if num % f0:
        raise AssertionError("discriminant division was not exact")
    return num // f0


def power_sums(f, m):
    """Sums of k-th powers of the roots of f, k = 0..m, as Fractions.

    Newton's identities in terms of the coefficients; no root extraction.
    These are the traces of alpha^k in Q[X]/(f) when f is squarefree.
    """
    f = normalize(f)
    n = degree(f)
    if n < 1:
        raise DomainError("power sums need degree >= 1")
    f0 = Fraction(f[-1])
    # e[j] = coefficient of X^(n-j), the paper-style descending index
    e = [Fraction(f[n - j]) for j in range(n + 1)]
    ps = [Fraction(n)]
    for k in range(1, m + 1):
        if k <= n:
            acc = k * e[k]
            for i in range(1, k):
                acc += e[i] * ps[k - i]
        else:
            acc = Fraction(0)
            for i in range(1, n + 1):
                acc += e[i] * ps[k - i]
        ps.append(-acc / f0)
    return ps


def roots_mod_p(f, p):
    """All x in {0,...,p-1} with f(x) = 0 mod p, by direct evaluation."""
    red = [c % p for c in f]
    if not any(red):
        raise DomainError("polynomial vanishes identically mod p")
    out = set()
    for x in range(p):
        acc = 0
        for c in reversed(red):
            acc = (acc * x + c) % p
        if acc == 0:
            out.add(x)
    return out


def poly_eval_fraction(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc
