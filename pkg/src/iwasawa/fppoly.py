"""Dense polynomials over F_p and Z/p^M, coefficient lists low degree first."""
import random


def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def add(a, b, m):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % m for i in range(n)]
    return trim(out)


def sub(a, b, m):
    return add(a, [(-x) % m for x in b], m)


def mul(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim([x % m for x in out])


def scale(a, c, m):
    return trim([x * c % m for x in a])


def divmod_monic(a, b, m):
    """Division by a polynomial whose leading coefficient is a unit mod m."""
    a = [x % m for x in a]
    db = len(b) - 1
    inv = pow(b[-1], -1, m)
    q = [0] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv % m
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % m
    return trim(q), trim(a[:db])


def rem(a, b, m):
    return divmod_monic(a, b, m)[1]


def monic(a, p):
    a = trim(a)
    inv = pow(a[-1], -1, p)
    return [x * inv % p for x in a]


def gcd(a, b, p):
    a, b = trim(a), trim(b)
    while b:
        a, b = b, rem(a, b, p)
    return monic(a, p) if a else []


def xgcd(a, b, p):
    """(g, s, t) with s*a + t*b = g monic, over F_p."""
    r0, r1 = trim(a), trim(b)
    s0, s1, t0, t1 = [1], [], [], [1]
    while r1:
        q, r = divmod_monic(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    inv = pow(r0[-1], -1, p)
    return scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)


def powmod(a, e, f, m):
    result, base = [1], rem(a, f, m)
    while e:
        if e & 1:
            result = rem(mul(result, base, m), f, m)
        base = rem(mul(base, base, m), f, m)
        e >>= 1
    return result


def equal_degree_factor(f, d, p, rng=None):
    """Split a squarefree monic f whose irreducible factors all have degree d.

    Cantor-Zassenhaus for odd p.
    """
    f = monic(f, p)
    if len(f) - 1 == d:
        return [f]
    rng = rng or random.Random(len(f) * 1000003 + p)
    n = len(f) - 1
    while True:
        a = trim([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        g = gcd(a, f, p)
        if len(g) > 1 and len(g) < len(f):
            break
        e = (p ** d - 1) // 2
        b = sub(powmod(a, e, f, p), [1], p)
        g = gcd(b, f, p)
        if len(g) > 1 and len(g) < len(f):
            break
    h = divmod_monic(f, g, p)[0]
    return equal_degree_factor(g, d, p, rng) + equal_degree_factor(h, d, p, rng)


def hensel_lift(F, g0, h0, p, M):
    """Lift F = g0*h0 mod p (g0 monic, coprime to h0) to F = g*h mod p^M; return g."""
    _, s, t = xgcd(g0, h0, p)
    g, h = list(g0), list(h0)
    for k in range(1, M):
        pk = p ** k
        mod = pk * p
        err = sub(F, mul(g, h, mod), mod)
        e = [(x // pk) % p for x in err]
        # t*h0 = 1 mod g0
        G = rem(mul(e, t, p), g0, p)
        H = divmod_monic(sub(e, mul(h0, G, p), p), g0, p)[0]
        g = add(g, [x * pk for x in G], mod)
        h = add(h, [x * pk for x in H], mod)
    if len(g) < len(g0):
        g = g + [0] * (len(g0) - len(g))
    return g
