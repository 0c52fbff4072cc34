"""Command-line front end: config ingestion, batch computation, JSON reports.

Subcommands: coeff, family, kl, hecke, pullback, enumerate, selftest.
Output is deterministic: stable key ordering, canonical rational encoding,
and a content hash of the canonicalized config in every report.
"""

import argparse
import hashlib
import json
import os
import sys
from fractions import Fraction

from .errors import ConfigError, EisklingError
from .exact_arith import CycNumber, HermitianMatrix, enumerate_hermitian
from .characters import DirichletChar, SplitPCharPair, chi_K, gauss_sum
from .values import ExactValue
from .bernoulli_kl import kl_specialization, L_at_nonpositive, bernoulli_number
from .hecke import WeightTuple, kappa_set, up_eigenvalues, klingen_eigenvalues
from .pullback import (SatakeParams, p_constant_klingen, p_constant_lfun,
                       klingen_ratio_unramified)
from .padic import congruent_mod
from .siegel_fourier import SiegelDatum, assemble_global
from .interpolation import (ArithmeticPoint, CharFamilySpec,
                            coefficient_family, check_congruences)

SCHEMA = 1

_KEYS = {
    # key: (parser name, default or None when required by the command)
    "D": ("int", 1),
    "p": ("int", None),
    "r": ("int", 1),
    "ell": ("int", None),
    "a": ("int_list", ()),
    "kappa": ("int_list", None),
    "tau1": ("char", None),
    "tau2": ("char", None),
    "chi": ("char", "trivial"),
    "at_p1": ("cyc", CycNumber.one()),
    "at_p2": ("cyc", CycNumber.one()),
    "trace_bound": ("int", 2),
    "dual_scale": ("int", 1),
    "prec": ("int", 12),
    "embedding_choice": ("int", 0),
    "sigma": ("int_list", ()),
    "variant": ("str", "klingen"),
    "y_norm": ("fraction", Fraction(1)),
    "vol_Y": ("fraction", Fraction(1)),
    "points": ("points", ()),
    "pairs": ("pairs", ()),
    "k_min": ("int", 1),
    "k_max": ("int", 10),
    "q": ("int", None),
    "satake": ("cyc_list", ()),
    "s": ("fraction", None),
}


def parse_char(text):
    """Character specs: 'trivial', 'trivial:m', 'quadratic:q',
    'teichmuller:p:k', 'exp:m:k'."""
    parts = text.strip().split(":")
    try:
        if parts[0] == "trivial":
            return DirichletChar.trivial(int(parts[1]) if len(parts) > 1 else 1)
        if parts[0] == "quadratic":
            return DirichletChar.quadratic(int(parts[1]))
        if parts[0] == "teichmuller":
            return DirichletChar.teichmuller_char(int(parts[1]), int(parts[2]))
        if parts[0] == "exp":
            return DirichletChar.from_exponent(int(parts[1]), int(parts[2]))
    except (IndexError, ValueError) as exc:
        raise ConfigError("bad character spec %r: %s" % (text, exc))
    raise ConfigError("unknown character spec %r" % text)


def parse_cyc(text):
    """Cyclotomic specs: a rational, or 'zeta:m:k' for zeta_m^k."""
    text = text.strip()
    if text.startswith("zeta:"):
        parts = text.split(":")
        if len(parts) != 3:
            raise ConfigError("bad root-of-unity spec %r" % text)
        return CycNumber.root_of_unity(int(parts[1]), int(parts[2]))
    try:
        return CycNumber.from_rational(Fraction(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError("bad cyclotomic spec %r: %s" % (text, exc))


def parse_point(text):
    """Point specs: 'kappa:m', 'kappa:m:flag', optionally
    ':zeta:m1:k1:zeta:m2:k2' appended for the two roots of unity."""
    parts = text.strip().split(":")
    try:
        kappa = int(parts[0])
        m = int(parts[1])
        rest = parts[2:]
        flag = "X"
        if rest and rest[0] in ("X", "Xpb"):
            flag = rest[0]
            rest = rest[1:]
        zetas = []
        while rest:
            if rest[0] != "zeta" or len(rest) < 3:
                raise ValueError("expected zeta:m:k")
            zetas.append(CycNumber.root_of_unity(int(rest[1]), int(rest[2])))
            rest = rest[3:]
        if len(zetas) > 2:
            raise ValueError("at most two roots of unity")
        zetas += [CycNumber.one()] * (2 - len(zetas))
        return ArithmeticPoint(kappa, m, zetas[0], zetas[1], flag)
    except (IndexError, ValueError) as exc:
        raise ConfigError("bad point spec %r: %s" % (text, exc))


def _parse_value(kind, text):
    text = text.strip()
    if kind == "int":
        return int(text)
    if kind == "str":
        return text
    if kind == "fraction":
        return Fraction(text)
    if kind == "int_list":
        return tuple(int(x) for x in text.split(",") if x.strip())
    if kind == "char":
        return parse_char(text)
    if kind == "cyc":
        return parse_cyc(text)
    if kind == "cyc_list":
        return tuple(parse_cyc(x) for x in text.split(",") if x.strip())
    if kind == "points":
        return tuple(parse_point(x) for x in text.split(";") if x.strip())
    if kind == "pairs":
        out = []
        for item in text.split(";"):
            if not item.strip():
                continue
            nums = [int(x) for x in item.split(",")]
            if len(nums) != 3:
                raise ConfigError("pair spec needs i,j,k: %r" % item)
            out.append(tuple(nums))
        return tuple(out)
    raise ConfigError("unhandled kind %r" % kind)


def load_config(path):
    """Flat 'key = value' config file; unknown keys are errors."""
    raw = {}
    try:
        with open(path) as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise ConfigError("line %d: expected 'key = value'" % lineno)
                key, _, value = line.partition("=")
                key = key.strip()
                if key not in _KEYS:
                    raise ConfigError("line %d: unknown key %r" % (lineno, key))
                if key in raw:
                    raise ConfigError("line %d: duplicate key %r" % (lineno, key))
                raw[key] = value.strip()
    except OSError as exc:
        raise ConfigError("cannot read config %s: %s" % (path, exc))
    cfg = {}
    for key, (kind, default) in _KEYS.items():
        if key in raw:
            try:
                cfg[key] = _parse_value(kind, raw[key])
            except ConfigError:
                raise
            except (ValueError, ZeroDivisionError) as exc:
                raise ConfigError("key %r: %s" % (key, exc))
        else:
            cfg[key] = default
    cfg["_raw"] = raw
    return cfg


def config_hash(cfg):
    canon = "\n".join("%s=%s" % (k, v) for k, v in sorted(cfg["_raw"].items()))
    return hashlib.sha256(canon.encode()).hexdigest()


def _require(cfg, *keys):
    for k in keys:
        if cfg.get(k) is None:
            raise ConfigError("missing required key %r" % k)


def _is_prime(n):
    if n < 2:
        return False
    q = 2
    while q * q <= n:
        if n % q == 0:
            return False
        q += 1
    return True


def _validate_common(cfg):
    _require(cfg, "p")
    p = cfg["p"]
    if p == 2 or not _is_prime(p):
        raise ConfigError("key 'p': must be an odd prime, got %d" % p)
    if cfg["D"] <= 0:
        raise ConfigError("key 'D': must be a positive integer")
    if chi_K(cfg["D"], p) != 1:
        raise ConfigError("key 'p': %d does not split for D=%d" % (p, cfg["D"]))


def _encode(obj):
    if isinstance(obj, Fraction):
        return "%d/%d" % (obj.numerator, obj.denominator)
    if isinstance(obj, CycNumber):
        return obj.to_json()
    if isinstance(obj, ExactValue):
        return obj.to_json()
    if isinstance(obj, dict):
        return {str(k): _encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_encode(v) for v in obj]
    return obj


def _emit(report, out_path):
    text = json.dumps(_encode(report), sort_keys=True, indent=2) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _build_pair(cfg, kappa):
    _require(cfg, "tau1", "tau2")
    return SplitPCharPair(cfg["tau1"], cfg["tau2"], wt=kappa,
                          at_p1=cfg["at_p1"], at_p2=cfg["at_p2"])


def _build_datum(cfg, kappa):
    _require(cfg, "ell")
    n = cfg["r"] + 1 if cfg["variant"] == "klingen" else cfg["r"]
    return SiegelDatum(n=n, kappa=kappa, pair=_build_pair(cfg, kappa),
                       p=cfg["p"], D=cfg["D"], sigma=tuple(cfg["sigma"]),
                       ell=cfg["ell"], y_norm=cfg["y_norm"],
                       vol_Y=cfg["vol_Y"],
                       embedding_choice=cfg["embedding_choice"],
                       prec=cfg["prec"], variant=cfg["variant"])


def _betas(cfg, n):
    return [b for b in enumerate_hermitian(n, cfg["D"], cfg["trace_bound"],
                                           cfg["dual_scale"])]


def cmd_coeff(cfg, args):
    _validate_common(cfg)
    _require(cfg, "kappa")
    kappa = cfg["kappa"][0]
    datum = _build_datum(cfg, kappa)
    reports = []
    for beta in _betas(cfg, datum.n):
        try:
            reports.append(assemble_global(beta, datum).to_json())
        except EisklingError as exc:
            reports.append({"beta": beta.to_json(),
                            "error": "%s: %s" % (type(exc).__name__, exc)})
    return {"command": "coeff", "reports": reports}


def cmd_family(cfg, args):
    _validate_common(cfg)
    _require(cfg, "kappa", "tau1", "tau2")
    if not cfg["points"]:
        raise ConfigError("key 'points': at least one arithmetic point needed")
    fam = CharFamilySpec(p=cfg["p"], r=cfg["r"], tau1=cfg["tau1"],
                         tau2=cfg["tau2"], at_p1=cfg["at_p1"],
                         at_p2=cfg["at_p2"],
                         a=cfg["a"] or (0,) * cfg["r"])
    kappa = cfg["kappa"][0]
    datum = _build_datum(cfg, kappa)
    betas = [b for b in _betas(cfg, datum.n) if b.det() != 0]
    table = coefficient_family(fam, list(cfg["points"]), betas, datum,
                               jobs=args.jobs)
    report = {"command": "family", "table": table.to_json()}
    if cfg["pairs"]:
        report["congruences"] = check_congruences(
            table, list(cfg["pairs"]), prec=cfg["prec"],
            choice=cfg["embedding_choice"])
    return report


def cmd_kl(cfg, args):
    _validate_common(cfg)
    p = cfg["p"]
    chi = cfg["chi"]
    ks = list(range(cfg["k_min"], cfg["k_max"] + 1))
    values = {}
    for k in ks:
        try:
            values[k] = kl_specialization(chi, k, p, sigma=cfg["sigma"],
                                          prec=cfg["prec"],
                                          choice=cfg["embedding_choice"])
        except EisklingError as exc:
            values[k] = None
    matrix = {}
    for k in ks:
        for k2 in ks:
            if k2 <= k or values[k] is None or values[k2] is None:
                continue
            if (k - k2) % (p - 1) != 0:
                continue
            try:
                matrix["%d,%d" % (k, k2)] = congruent_mod(values[k], values[k2], 1)
            except EisklingError as exc:
                matrix["%d,%d" % (k, k2)] = "insufficient: %s" % exc
    out_values = {}
    for k, v in values.items():
        if v is None:
            out_values[str(k)] = None
        elif v.is_zero():
            out_values[str(k)] = {"zero_to_precision": v.prec}
        else:
            out_values[str(k)] = {"valuation": v.val,
                                  "unit_mod_p6": v.unit % p ** 6,
                                  "prec": v.prec}
    return {"command": "kl", "p": p, "values": out_values,
            "kummer_congruences_mod_p": matrix}


def cmd_hecke(cfg, args):
    _validate_common(cfg)
    _require(cfg, "kappa", "tau1", "tau2")
    r = cfg["r"]
    w = WeightTuple(a=cfg["a"] or (0,) * r)
    kappa = cfg["kappa"][0]
    chis = cfg["satake"] or tuple(CycNumber.one() for _ in range(r))
    if len(chis) != r:
        raise ConfigError("key 'satake': need %d values" % r)
    pair = _build_pair(cfg, kappa)
    kappas = kappa_set(w, r, 0)
    ups = up_eigenvalues(chis, w)
    kls = klingen_eigenvalues(chis, pair, kappa, w, cfg["p"])
    fmt = lambda lst: [{"unit": u.to_json(), "p_exponent": str(e)}
                       for u, e in lst]
    return {"command": "hecke",
            "kappa_set": [str(k) for k in kappas],
            "up_eigenvalues": fmt(ups),
            "klingen_eigenvalues": fmt(kls)}


def cmd_pullback(cfg, args):
    _validate_common(cfg)
    _require(cfg, "kappa", "tau1", "tau2")
    r = cfg["r"]
    kappa = cfg["kappa"][0]
    pair = _build_pair(cfg, kappa)
    alphas = cfg["satake"] or tuple(CycNumber.one() for _ in range(r))
    params = SatakeParams(alphas)
    ckl = p_constant_klingen(params, pair, kappa, r, cfg["p"])
    clf = p_constant_lfun(params, pair, kappa, r, cfg["p"])
    out = {"command": "pullback",
           "p_constant_klingen": ckl.to_json(),
           "p_constant_lfun": clf.to_json(),
           "ratio": (ckl * clf.inverse()).to_json()}
    if cfg["q"] is not None and cfg["s"] is not None:
        tv = pair.at_p1
        tvbar = pair.at_p2
        out["unramified_ratio"] = klingen_ratio_unramified(
            params, (tv, tvbar), cfg["q"], cfg["s"],
            variant=cfg["variant"]).to_json()
    return out


def cmd_enumerate(cfg, args):
    _validate_common(cfg)
    n = cfg["r"] + 1 if cfg["variant"] == "klingen" else cfg["r"]
    betas = _betas(cfg, n)
    return {"command": "enumerate", "count": len(betas),
            "betas": [b.to_json() for b in betas]}


def cmd_selftest(cfg, args):
    checks = []
    chi = DirichletChar.from_exponent(5, 1)
    g = gauss_sum(chi)
    checks.append(("gauss_norm_5",
                   g * gauss_sum(chi.conj()) == chi(-1) * CycNumber.from_rational(5)))
    checks.append(("bernoulli_12", bernoulli_number(12) == Fraction(-691, 2730)))
    v = kl_specialization(DirichletChar.trivial(), 4, 5, prec=10)
    expect = Fraction(-31, 30)
    from .padic import PadicElem
    checks.append(("kl_trivial_k4_p5",
                   v == PadicElem.from_fraction(expect, 5, 10)))
    ok = all(flag for _, flag in checks)
    return {"command": "selftest", "ok": ok,
            "checks": [{"name": n, "pass": bool(f)} for n, f in checks]}


_COMMANDS = {
    "coeff": cmd_coeff,
    "family": cmd_family,
    "kl": cmd_kl,
    "hecke": cmd_hecke,
    "pullback": cmd_pullback,
    "enumerate": cmd_enumerate,
    "selftest": cmd_selftest,
}


def build_parser():
    ap = argparse.ArgumentParser(prog="eiskling")
    ap.add_argument("command", choices=sorted(_COMMANDS))
    ap.add_argument("--config", default=None)
    ap.add_argument("--out", default=None)
    ap.add_argument("--jobs", type=int,
                    default=int(os.environ.get("EK_JOBS", "1")))
    ap.add_argument("--prec", type=int,
                    default=int(os.environ.get("EK_PREC", "0")) or None)
    ap.add_argument("--seed", type=int, default=0)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.config:
            cfg = load_config(args.config)
        elif args.command == "selftest":
            cfg = {k: d for k, (kind, d) in _KEYS.items()}
            cfg["_raw"] = {}
        else:
            raise ConfigError("--config is required for %r" % args.command)
        if args.prec:
            cfg["prec"] = args.prec
        report = _COMMANDS[args.command](cfg, args)
    except ConfigError as exc:
        sys.stderr.write("config error: %s\n" % exc)
        return 2
    report["schema"] = SCHEMA
    report["config_hash"] = config_hash(cfg)
    report["seed"] = args.seed
    _emit(report, args.out)
    if args.command == "selftest" and not report.get("ok"):
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
