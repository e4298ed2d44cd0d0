"""Command-line interface: ``iwasawa <command> [options]``.

Global options may also come from IWASAWA_PRIME, IWASAWA_PRECISION,
IWASAWA_DEGREE, IWASAWA_SMOOTHING, IWASAWA_FORMAT and IWASAWA_SEED; an
explicit flag wins over the environment.  Exit codes: 0 pass, 1 a check
failed, 2 usage error.
"""
import argparse
import json
import os
import random
import re
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction

from .errors import IwasawaError, PoleAtTrivialCharacter
from .padic_core import PadicNumber
from .serialize import (SCHEMA_REPORT, dumps, measure_from_json, measure_to_json, measures_equal,
                        padic_to_json, qexp_from_json, qexp_to_json)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class JobConfig:
    prime: int = 5
    precision: int = 20
    degree: int = 256
    smoothing: int = None
    format: str = "json"
    seed: int = 0

    def validate(self, max_moment=0):
        p = self.prime
        if p < 3 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise UsageError("--prime must be an odd prime, got %d" % p)
        if self.precision < 4:
            raise UsageError("--precision must be at least 4")
        if self.degree < p * (max_moment + 1):
            raise UsageError("--degree must be at least p*(max moment + 1) = %d"
                             % (p * (max_moment + 1)))
        if self.format not in ("json", "table"):
            raise UsageError("--format must be json or table")
        if self.smoothing is not None:
            from .kubota_leopoldt import primitive_root_ok
            a = self.smoothing
            if a % p == 0 or not primitive_root_ok(a % p, p) or pow(a, p - 1, p * p) == 1:
                raise UsageError("--smoothing %d is not a topological generator of Z_%d^x" % (a, p))
        return self


_ENV = {"prime": int, "precision": int, "degree": int, "smoothing": int, "format": str, "seed": int}


def _config(args):
    cfg = JobConfig()
    for name, typ in _ENV.items():
        env = os.environ.get("IWASAWA_" + name.upper())
        if env is not None:
            try:
                setattr(cfg, name, typ(env))
            except ValueError:
                raise UsageError("bad value for IWASAWA_%s: %r" % (name.upper(), env))
        val = getattr(args, name, None)
        if val is not None:
            setattr(cfg, name, val)
    return cfg


def _pval(x):
    if isinstance(x, PadicNumber):
        return padic_to_json(x)
    if hasattr(x, "to_padic") and x.descends():
        return padic_to_json(x.to_padic())
    return {"ring_element": [str(c) for c in x.c], "prec": x.prec}


def _oracle_agreement(v, L, p, M):
    """v_p(v - L) for a computed value and a CycloRational oracle."""
    if isinstance(v, PadicNumber):
        return v.agreement(L.to_padic(p, M + 4))
    el, k = L.realize(v.ring)
    d = v * v.ring.from_int(p ** k) - el
    nz = [c for c in d.c if c % p ** d.prec]
    if not nz:
        return d.prec - k
    from .padic_core import vp
    return min(vp(c, p) for c in nz) - k


# --- characters ----------------------------------------------------------------

def parse_character(text, p):
    """'trivial', 'omega^i', 'kronecker:d', 'gen:N:order:g=e,...' joined by '*'."""
    from .cyclotomic import (character_from_generators, kronecker_character,
                             teichmuller_character, trivial_character)
    chi = trivial_character()
    for term in text.split("*"):
        term = term.strip()
        try:
            if term == "trivial":
                c = trivial_character()
            elif term.startswith("omega^"):
                c = teichmuller_character(p, int(term[6:]) % (p - 1))
            elif term.startswith("kronecker:"):
                c = kronecker_character(int(term[10:]))
            elif term.startswith("gen:"):
                _, N, order, imgs = term.split(":")
                images = {}
                for piece in imgs.split(","):
                    g, e = piece.split("=")
                    images[int(g)] = int(e)
                c = character_from_generators(int(N), int(order), images)
            else:
                raise ValueError(term)
        except ValueError:
            raise UsageError("cannot parse character term %r" % term)
        chi = chi * c
    return chi.primitive()


# --- commands --------------------------------------------------------------------

def cmd_zeta_moments(cfg, args):
    from .cyclotomic import trivial_character
    from .kubota_leopoldt import build_zeta_p
    from .lvalues import euler_factor_zeta
    cfg.validate(args.kmax)
    p, M = cfg.prime, cfg.precision
    z = build_zeta_p(p, M, cfg.degree, cfg.smoothing)
    rows, ok = [], True
    for k in range(0, args.kmax + 1):
        if k == 0:
            try:
                z.eval(trivial_character(), 0)
            except PoleAtTrivialCharacter:
                rows.append({"k": 0, "value": "pole", "oracle": "pole", "agreement": None})
            continue
        v = z.eval(trivial_character(), k)
        o = euler_factor_zeta(p, k)
        a = v.agreement(o)
        ok = ok and a >= M - 3
        rows.append({"k": k, "value": _pval(v), "oracle": str(o), "agreement": a})
    return {"rows": rows}, ok


def cmd_kummer(cfg, args):
    from .kubota_leopoldt import build_zeta_p, kummer_check, sample_kummer_triples
    cfg.validate()
    p = cfg.prime
    z = build_zeta_p(p, cfg.precision, cfg.degree, cfg.smoothing)
    triples = []
    for t in args.triple or []:
        try:
            k, l, m = (int(x) for x in t.split(","))
        except ValueError:
            raise UsageError("--triple expects k,l,m")
        triples.append((k, l, m))
    if args.random:
        triples += sample_kummer_triples(p, args.random, random.Random(cfg.seed), z.numerator.N)
    if not triples:
        raise UsageError("give --triple k,l,m or --random COUNT")
    rows, ok = [], True
    for k, l, m in triples:
        if max(k, l) > z.numerator.N:
            raise UsageError("weight %d is beyond the window; raise --degree" % max(k, l))
        r = kummer_check(z, k, l, m)
        status = "not-applicable" if r is None else ("pass" if r else "fail")
        ok = ok and r is not False
        rows.append({"k": k, "l": l, "m": m, "status": status})
    return {"rows": rows}, ok


def cmd_coleman(cfg, args):
    from .coleman import (coleman_closed_form, coleman_map, coleman_reconstruct,
                          cyclotomic_tower, norm_operator)
    from .cyclotomic import trivial_character
    from .lvalues import euler_factor_zeta
    cfg.validate()
    p, M = cfg.prime, cfg.precision
    a = args.a
    f = coleman_closed_form(a, p, M)
    tower = cyclotomic_tower(a, args.depth, p, M)
    g = coleman_reconstruct(tower)
    ok_rec, _, digits = g.agreement(f.with_prec(g.M))
    match = ok_rec and digits >= args.depth
    fixed = norm_operator(f).agreement(f)[0]
    col = coleman_map(f, cfg.degree)
    rows = []
    ok = match and fixed
    for k in range(1, args.kmax + 1):
        v = col.eval(trivial_character(), k)
        o = -(a ** k - 1) * euler_factor_zeta(p, k)
        ag = v.agreement(o)
        ok = ok and ag >= M - 2
        rows.append({"k": k, "value": _pval(v), "oracle": str(o), "agreement": ag})
    num = col.numerator.with_window(min(16, col.numerator.N))
    mdoc = measure_to_json(num)
    assert measures_equal(measure_from_json(json.loads(json.dumps(mdoc))), num)
    return {"closed_form": [str(c) for c in f.coeffs], "col_numerator": mdoc,
            "reconstruction": [str(c) for c in g.coeffs[:max(len(f.coeffs), 4)]],
            "reconstruction_digits": digits, "reconstruction_match": match,
            "norm_fixed": fixed, "rows": rows}, ok


_TERM = re.compile(r"\s*([+-]?)\s*([0-9/]*)\s*\*?\s*(T(?:\^(\d+))?)?\s*")


def parse_polynomial(text):
    """'5 + 5T - T^3' -> [5, 5, 0, -1] (rational coefficients)."""
    text = text.strip()
    if not text:
        raise UsageError("empty polynomial")
    out = {}
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or not (m.group(2) or m.group(3)):
            raise UsageError("cannot parse polynomial near %r" % text[pos:pos + 10])
        sign, num, tpart, exp = m.groups()
        c = Fraction(num) if num else Fraction(1)
        if sign == "-":
            c = -c
        e = (int(exp) if exp else 1) if tpart else 0
        out[e] = out.get(e, 0) + c
        pos = m.end()
    return [out.get(i, Fraction(0)) for i in range(max(out) + 1)]


def _read_series(path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as e:
        raise UsageError("cannot read %s: %s" % (path, e))
    try:
        doc = json.loads(text)
        coeffs = doc["coefficients"] if isinstance(doc, dict) else doc
    except (ValueError, KeyError, TypeError):
        if "T" in text:
            return parse_polynomial(text)
        coeffs = text.replace(",", " ").split()
    try:
        return [Fraction(c) for c in coeffs]
    except (ValueError, TypeError):
        raise UsageError("series file must list rational coefficients")


def cmd_weierstrass(cfg, args):
    from .lambda_modules import weierstrass_prepare
    cfg.validate()
    f = _read_series(args.file)
    N = args.window or max(len(f) + 1, 16)
    w = weierstrass_prepare(f, cfg.prime, N, cfg.precision)
    return {"mu": w.mu, "lambda": w.lam, "P": [str(c) for c in w.P],
            "u": [str(c) for c in w.u[:8]], "window": w.N, "digits": w.M}, True


def cmd_eisenstein(cfg, args):
    from .eisenstein import agreement, family_specialize, stabilized_eisenstein
    from .kubota_leopoldt import build_zeta_p
    cfg.validate(args.k)
    p, M = cfg.prime, cfg.precision
    E = stabilized_eisenstein(args.k, args.nmax, p)
    z = build_zeta_p(p, M, cfg.degree, cfg.smoothing)
    F = family_specialize(args.k, args.nmax, z)
    a = agreement(F, E)
    ok = a is None or a >= M - 3
    doc = qexp_to_json(E)
    assert qexp_from_json(json.loads(json.dumps(doc))).coeffs == E.coeffs
    return {"expansion": doc, "specialization_agreement": a}, ok


def cmd_lp(cfg, args):
    from .kubota_leopoldt import Lp_theta, lp_at_one
    from .lvalues import euler_factor_L
    from .cyclotomic import teichmuller_character
    cfg.validate()
    p, M, N = cfg.prime, cfg.precision, cfg.degree
    theta = parse_character(args.character, p)
    rows, ok = [], True
    for k in args.k or []:
        v = Lp_theta(theta, 1 - k, p, M, N, cfg.smoothing)
        tw = (theta * teichmuller_character(p, (-k) % (p - 1))).primitive()
        L = euler_factor_L(tw, p, k)
        ag = _oracle_agreement(v, L, p, M)
        ok = ok and ag >= M - 4
        rows.append({"s": str(1 - k), "value": _pval(v),
                     "oracle": str(L.as_fraction()) if L.is_rational() else repr(L),
                     "agreement": ag})
    for s in args.s or []:
        try:
            sv = Fraction(s)
        except ValueError:
            raise UsageError("bad s value %r" % s)
        if sv == 1:
            A, B, d = lp_at_one(theta, p, M, N, cfg.smoothing)
            ok = ok and d is not None and d >= M - 4
            rows.append({"s": "1", "value": _pval(A), "log_sum": _pval(B), "agreement": d})
        else:
            v = Lp_theta(theta, sv, p, M, N, cfg.smoothing)
            rows.append({"s": str(sv), "value": _pval(v)})
    if not rows:
        raise UsageError("give --k or --s values")
    return {"character": args.character, "conductor": theta.conductor, "rows": rows}, ok


def cmd_growth(cfg, args):
    from .lambda_modules import LambdaModuleDesc, growth_law, growth_table, p_rank
    cfg.validate()
    p = cfg.prime
    try:
        m = tuple(int(x) for x in args.m.split(",")) if args.m else ()
        gs = tuple(tuple(int(x) for x in g.split(",")) for g in (args.g or []))
    except ValueError:
        raise UsageError("--m and --g take comma-separated integers")
    desc = LambdaModuleDesc(p, m, gs)
    ns = range(0, args.nmax + 1)
    table = growth_table(desc, ns)
    mu, lam, nu, n0 = growth_law(desc, ns)
    ok = all(r["match"] for r in table if r["n"] >= n0)
    nmin = next((n for n in ns if all(len(g) - 1 <= p ** n for g in gs)), None)
    ranks = [{"n": n, "p_rank": p_rank(desc, n)} for n in ns if nmin is not None and n >= nmin]
    return {"mu": mu, "lambda": lam, "nu": nu, "n0": n0, "rows": table, "p_ranks": ranks}, ok


COMMANDS = {
    "zeta-moments": cmd_zeta_moments,
    "kummer": cmd_kummer,
    "coleman": cmd_coleman,
    "weierstrass": cmd_weierstrass,
    "eisenstein": cmd_eisenstein,
    "lp": cmd_lp,
    "growth": cmd_growth,
}


def _common(default):
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument("--prime", type=int, default=default)
    common.add_argument("--precision", type=int, default=default)
    common.add_argument("--degree", type=int, default=default)
    common.add_argument("--smoothing", type=int, default=default)
    common.add_argument("--format", choices=["json", "table"], default=default)
    common.add_argument("--seed", type=int, default=default)
    return common


def build_parser():
    # subcommands must not reset options given before the subcommand name
    common = _common(argparse.SUPPRESS)
    parser = argparse.ArgumentParser(prog="iwasawa", parents=[_common(None)], allow_abbrev=False,
                                     description="Exact p-adic L-function computations.")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("zeta-moments", parents=[common], allow_abbrev=False, help="interpolation table for zeta_p")
    p.add_argument("--kmax", type=int, default=6)
    p = sub.add_parser("kummer", parents=[common], allow_abbrev=False, help="Kummer congruences")
    p.add_argument("--triple", action="append", help="k,l,m (repeatable)")
    p.add_argument("--random", type=int, default=0, help="number of random valid triples")
    p = sub.add_parser("coleman", parents=[common], allow_abbrev=False, help="Coleman series and the Coleman map")
    p.add_argument("--a", type=int, default=2)
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--kmax", type=int, default=8)
    p = sub.add_parser("weierstrass", parents=[common], allow_abbrev=False, help="Weierstrass preparation of a series")
    p.add_argument("file")
    p.add_argument("--window", type=int)
    p = sub.add_parser("eisenstein", parents=[common], allow_abbrev=False, help="stabilised Eisenstein series")
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--nmax", type=int, default=10)
    p = sub.add_parser("lp", parents=[common], allow_abbrev=False, help="L_p(theta, s)")
    p.add_argument("--character", required=True,
                   help="e.g. omega^2, kronecker:-3, omega^1*kronecker:-4")
    p.add_argument("--k", type=int, action="append", help="evaluate at s = 1 - k")
    p.add_argument("--s", action="append", help="evaluate at a rational s (s = 1 uses both paths)")
    p = sub.add_parser("growth", parents=[common], allow_abbrev=False, help="Lambda-module growth law")
    p.add_argument("--m", default="", help="p-power exponents, e.g. 1,2")
    p.add_argument("--g", action="append", help="distinguished polynomial, low degree first")
    p.add_argument("--nmax", type=int, default=5)
    return parser


def _table(report):
    lines = []
    for key, val in report.items():
        if key == "rows" and isinstance(val, list) and val:
            cols = []
            for r in val:
                cols += [c for c in r if c not in cols]
            lines.append("  ".join(cols))
            for r in val:
                lines.append("  ".join(_cell(r.get(c)) for c in cols))
        elif not isinstance(val, (list, dict)):
            lines.append("%s: %s" % (key, val))
    return "\n".join(lines)


def _cell(x):
    if isinstance(x, dict) and "digits" in x:
        return "p^%d*[%s] (M=%d)" % (x["v"], x["digits"], x["M"])
    return str(x)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        cfg = _config(args)
        body, ok = COMMANDS[args.command](cfg, args)
    except UsageError as e:
        print("usage error: %s" % e, file=sys.stderr)
        return EXIT_USAGE
    except IwasawaError as e:
        print("error: %s: %s" % (type(e).__name__, e), file=sys.stderr)
        return EXIT_USAGE
    report = {"schema": SCHEMA_REPORT, "command": args.command, "config": asdict(cfg),
              "ok": ok}
    report.update(body)
    if cfg.format == "json":
        print(dumps(report))
    else:
        print(_table(report))
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
