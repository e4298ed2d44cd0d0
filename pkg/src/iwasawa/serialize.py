"""Canonical JSON forms for p-adic numbers, measures and q-expansions.

A p-adic number is {"v": int, "digits": str, "M": int} with the base-p
digits of the unit part least significant first.  Digits above 9 use the
letters a-z, so primes up to 36 are supported.
"""
import json
from fractions import Fraction

from .cyclotomic import base_ring, build_ramified, build_unramified
from .errors import BadParameter
from .padic_core import PadicNumber

SCHEMA_MEASURE = "iwasawa.measure/1"
SCHEMA_QEXP = "iwasawa.qexpansion/1"
SCHEMA_REPORT = "iwasawa.report/1"

_ALPHABET = "0123456789abcdefghijklmnopqrstuvwxyz"


def _digits_str(u, p, M):
    if p > len(_ALPHABET):
        raise BadParameter("digit strings support p <= 36")
    out = []
    for _ in range(M):
        out.append(_ALPHABET[u % p])
        u //= p
    return "".join(out)


def _digits_int(s, p):
    u = 0
    for ch in reversed(s):
        d = _ALPHABET.index(ch)
        if d >= p:
            raise BadParameter("digit %r out of range for p=%d" % (ch, p))
        u = u * p + d
    return u


def padic_to_json(x):
    if x.is_zero:
        return {"v": x.v, "digits": "", "M": 0}
    return {"v": x.v, "digits": _digits_str(x.u, x.p, x.M), "M": x.M}


def padic_from_json(d, p):
    M = d["M"]
    if M == 0:
        return PadicNumber.zero(p, d["v"])
    if len(d["digits"]) != M:
        raise BadParameter("digit string length must equal M")
    return PadicNumber(p, d["v"], _digits_int(d["digits"], p), M)


def ring_from_descriptor(desc, p, M):
    kind = desc["kind"]
    if kind == "base":
        return base_ring(p, M)
    if kind == "ramified":
        return build_ramified(p, desc["level"], M)
    if kind == "unramified":
        return build_unramified(p, desc["D"], M)
    raise BadParameter("unknown ring kind %r" % kind)


def measure_to_json(mu):
    p, P = mu.p, mu.prec
    return {
        "schema": SCHEMA_MEASURE,
        "prime": p,
        "precision": P,
        "ring_precision": mu.ring.M,
        "degree": mu.N,
        "ring": mu.ring.descriptor(),
        "unit_supported": mu.unit_supported,
        "polynomial": mu.polynomial,
        "coefficients": [[_digits_str(x, p, P) for x in comp] for comp in mu.comps],
    }


def measure_from_json(d):
    from .measures import Measure
    if d.get("schema") != SCHEMA_MEASURE:
        raise BadParameter("not a measure document")
    p = d["prime"]
    ring = ring_from_descriptor(d["ring"], p, d.get("ring_precision", d["precision"]))
    comps = [[_digits_int(s, p) for s in comp] for comp in d["coefficients"]]
    return Measure(ring, comps, d["degree"], d["precision"], d["unit_supported"], d["polynomial"])


def _value_to_json(c):
    if isinstance(c, PadicNumber):
        return padic_to_json(c)
    return str(Fraction(c))


def _value_from_json(c, p):
    if isinstance(c, dict):
        return padic_from_json(c, p)
    return Fraction(c)


def qexp_to_json(q):
    return {"schema": SCHEMA_QEXP, "weight": q.weight, "level": q.level, "prime": q.p,
            "coefficients": [_value_to_json(c) for c in q.coeffs]}


def qexp_from_json(d):
    from .eisenstein import QExpansion
    if d.get("schema") != SCHEMA_QEXP:
        raise BadParameter("not a q-expansion document")
    p = d.get("prime")
    return QExpansion(d["weight"], d["level"], [_value_from_json(c, p) for c in d["coefficients"]], p)


def dumps(obj):
    """Deterministic JSON text."""
    return json.dumps(obj, sort_keys=True, separators=(",", ": "), indent=1)


def measures_equal(a, b):
    return (a.p == b.p and a.N == b.N and a.prec == b.prec and a.comps == b.comps
            and a.ring.descriptor() == b.ring.descriptor()
            and a.unit_supported == b.unit_supported and a.polynomial == b.polynomial)


__all__ = ["padic_to_json", "padic_from_json", "measure_to_json", "measure_from_json",
           "qexp_to_json", "qexp_from_json", "dumps", "measures_equal",
           "SCHEMA_MEASURE", "SCHEMA_QEXP", "SCHEMA_REPORT"]
