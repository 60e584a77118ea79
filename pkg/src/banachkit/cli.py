"""Command-line front end.

Exit status: 0 success / found, 1 not found or failed check, 2 usage or runtime error.
"""

from __future__ import annotations

import argparse
from fractions import Fraction
import json
import math
import re
import sys

from . import bohr as bohr_mod
from .bohrset import BohrSpec
from .density import banach_density_est, best_shift, rational_str
from .errors import MaterializationError, OutOfWindowError, SpecError, WindowError
from .folner import check_disjoint, greedy_disjoint_shifts, verify_cc_cover
from .jin import jin_experiment
from .lattice import (Box, LatticeCertificate, LatticeSet, banach_density_est_d,
                      check_lattice_certificate, diff_set_d, pws_certificate_d)
from .setmodel import (Window, WindowedSet, contains_random, diff_set, eventual_form,
                       format_spec, materialize, parse)
from .structure import PwsCertificate, check_pws_certificate, min_gap_bound, pws_certificate

OK, FAILED, ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad rational {text!r}") from None


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad integer list {text!r}") from None


class Request:
    """Parsed command line plus the specs it names."""

    def __init__(self, args):
        self.args = args
        self.specs = {}
        for name in ("spec", "specA", "specB"):
            value = getattr(args, name, None)
            if value is None:
                continue
            if isinstance(value, list):
                self.specs[name] = [parse(v) for v in value]
            else:
                self.specs[name] = parse(value)
        flat = []
        for v in self.specs.values():
            flat.extend(v if isinstance(v, list) else [v])
        if any(contains_random(s) for s in flat) and getattr(args, "seed", None) is None:
            raise UsageError("Random sets require an explicit --seed")

    def spec(self, name="spec"):
        if name not in self.specs:
            raise UsageError(f"--{name} is required")
        return self.specs[name]


def _bohr_spec(args) -> BohrSpec:
    if args.freqs is None or args.eps is None:
        raise UsageError("--freqs and --eps are required")
    freqs = tuple(_rational(x) for x in args.freqs.split(","))
    return BohrSpec(freqs, _rational(args.eps), args.shift)


# subcommands: each returns (exit status, text)

def cmd_parse(req):
    return OK, _dump({"canonical": format_spec(req.spec())})


def cmd_materialize(req):
    s = materialize(req.spec(), req.args.window, req.args.witness_radius)
    return OK, _dump({"window": s.window.as_list(), "members": s.members().tolist(),
                      "approximate": s.approximate})


def cmd_density(req):
    s = materialize(req.spec(), req.args.window, req.args.witness_radius)
    return OK, _dump(banach_density_est(s, req.args.L).to_dict())


def cmd_bestshift(req):
    n, value = best_shift(req.spec("specA"), req.spec("specB"), req.args.range, req.args.eval)
    return OK, _dump({"n": n, "value": rational_str(value)})


def cmd_syndetic(req):
    s = materialize(req.spec(), req.args.window, req.args.witness_radius)
    return OK, _dump({"k": min_gap_bound(s), "window": s.window.as_list()})


def cmd_pws(req):
    s = materialize(req.spec(), req.args.window, req.args.witness_radius)
    cert = pws_certificate(s, req.args.kmax, req.args.lmin)
    if cert is None:
        return FAILED, _dump({"result": "NotFound"})
    return OK, cert.to_json()


def cmd_folner(req):
    report = greedy_disjoint_shifts(req.spec(), req.args.range)
    return (OK if report.cover_verified else FAILED), report.to_json()


def cmd_cover(req):
    covered = verify_cc_cover(req.spec(), _ints(req.args.shifts), req.args.window)
    return (OK if covered else FAILED), _dump({"covered": covered})


def cmd_jin(req):
    a = req.args
    if a.probes and a.seed is None:
        raise UsageError("translate probes require an explicit --seed")
    report = jin_experiment(req.spec("specA"), req.spec("specB"), a.window, a.kmax, a.lmin,
                            probes=a.probes, seed=a.seed or 0, shift_radius=a.shift_radius,
                            witness_radius=a.witness_radius)
    return (OK if report.success else FAILED), report.to_json()


def cmd_bohr(req):
    spec = _bohr_spec(req.args)
    if req.args.k is not None:
        return OK, _dump({"member": bohr_mod.bohr_member(req.args.k, spec)})
    if req.args.window is None:
        raise UsageError("give --k for membership or --spec/--window for the C-C check")
    ok, est = bohr_mod.folner_bohr_check(req.spec(), spec, req.args.window,
                                         _rational(req.args.tol), req.args.witness_radius)
    return (OK if ok else FAILED), _dump({"pass": ok, "exceptional_density": rational_str(est)})


def cmd_pwbohr(req):
    p = materialize(req.spec(), req.args.window, req.args.witness_radius)
    intervals = [Window.parse(t) for t in (req.args.interval or [req.args.window.__str__()])]
    ok = bohr_mod.piecewise_bohr_check(p, _bohr_spec(req.args), intervals)
    return (OK if ok else FAILED), _dump({"contained": ok})


def cmd_spectrum(req):
    s = materialize(req.spec(), req.args.window, req.args.witness_radius)
    return OK, bohr_mod.spectral_csv(bohr_mod.spectral_hints(s, req.args.grid, req.args.top)).rstrip("\n")


def _lattice(req, name, box):
    return LatticeSet.from_specs(req.spec(name), box)


def cmd_lattice_density(req):
    s = _lattice(req, "spec", req.args.box)
    return OK, _dump({"value": rational_str(banach_density_est_d(s, req.args.L))})


def cmd_lattice_diff(req):
    a = _lattice(req, "specA", req.args.box_a or req.args.box)
    b = _lattice(req, "specB", req.args.box_b or req.args.box)
    d = diff_set_d(a, b)
    return OK, _dump({"box": d.box.as_list(), "points": [list(p) for p in d.points()]})


def cmd_lattice_pws(req):
    s = _lattice(req, "spec", req.args.box)
    cert = pws_certificate_d(s, req.args.kmax, req.args.lmin)
    if cert is None:
        return FAILED, _dump({"result": "NotFound"})
    return OK, cert.to_json()


def check_document(doc: dict, spec=None, spec_a=None, spec_b=None, factors=None,
                   witness_radius=None) -> bool:
    """Re-validate an emitted certificate or report against the set it describes."""
    if "cubes" in doc:
        if factors is None:
            raise UsageError("lattice certificates need one --spec per axis")
        cert = LatticeCertificate.from_dict(doc)
        return check_lattice_certificate(LatticeSet.from_specs(factors, cert.box), cert)
    if "probes" in doc:
        if spec_a is None or spec_b is None:
            raise UsageError("Jin reports need --specA and --specB")
        if doc["certificate"] is None or any(p["t"] is None for p in doc["probes"]):
            return False
        cert = PwsCertificate.from_dict(doc["certificate"])
        diff = diff_set(materialize(spec_a, Window(*doc["windows"]["A"]), witness_radius),
                        materialize(spec_b, Window(*doc["windows"]["B"]), witness_radius))
        if diff.window != Window(*doc["diff_window"]) or not check_pws_certificate(diff, cert):
            return False
        return all(_translate_ok(diff, p) for p in doc["probes"])
    if "shifts" in doc:
        if spec is None:
            raise UsageError("Folner reports need --spec")
        return _check_folner(doc, spec)
    if "intervals" in doc:
        if spec is None:
            raise UsageError("certificates need --spec")
        cert = PwsCertificate.from_dict(doc)
        return check_pws_certificate(materialize(spec, cert.checked_set_window, witness_radius), cert)
    raise UsageError("unrecognized document")


def _translate_ok(diff: WindowedSet, probe) -> bool:
    t, f = probe["t"], probe["F"]
    return all(t + x in diff.window and (t + x) in diff for x in f)


def _check_folner(doc, spec) -> bool:
    form = eventual_form(spec)
    if form is None:
        raise UsageError("Folner reports can only be re-checked for periodic-class sets")
    shifts = doc["shifts"]
    if not shifts or shifts != sorted(set(shifts)) or doc["m"] != len(shifts):
        return False
    d = form.density()
    bound = None if d == 0 else math.floor(1 / d)
    if (None if doc["bound"] is None else Fraction(doc["bound"])) != bound:
        return False
    if bound is not None and doc["m"] > bound:
        return False
    if not check_disjoint(spec, shifts):
        return False
    if doc["cover_verified"]:
        # beyond this window the union of translates of C - C is periodic
        p = form.period
        r = abs(form.hi - form.lo) + 4 * p + max(abs(s) for s in shifts)
        return verify_cc_cover(spec, shifts, Window(-r, r))
    return True


def cmd_check(req):
    a = req.args
    try:
        text = sys.stdin.read() if a.cert == "-" else open(a.cert, encoding="utf-8").read()
    except OSError as exc:
        raise UsageError(str(exc)) from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"certificate is not JSON: {exc}") from None
    specs = req.specs.get("spec")
    single = specs[0] if specs and len(specs) == 1 else None
    ok = check_document(doc, spec=single, spec_a=req.specs.get("specA"),
                        spec_b=req.specs.get("specB"), factors=specs,
                        witness_radius=a.witness_radius)
    return (OK if ok else FAILED), _dump({"valid": ok})


def _window(text):
    try:
        return Window.parse(text)
    except WindowError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _box(text):
    try:
        return Box.parse(text)
    except WindowError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="banachkit", description=__doc__)
    parser.add_argument("--out", help="write output to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, *, spec=False, pair=False, window=False, multi=False):
        p = sub.add_parser(name)
        p.set_defaults(func=func)
        if spec:
            p.add_argument("--spec", required=False, action="append" if multi else None)
        if pair:
            p.add_argument("--specA", action="append" if multi else None)
            p.add_argument("--specB", action="append" if multi else None)
        if window:
            p.add_argument("--window", type=_window, required=window == "required")
        p.add_argument("--seed", type=int)
        p.add_argument("--witness-radius", type=int, dest="witness_radius")
        p.add_argument("--out", default=argparse.SUPPRESS, help="write output to this file")
        return p

    add("parse", cmd_parse, spec=True)
    add("materialize", cmd_materialize, spec=True, window="required")
    p = add("density", cmd_density, spec=True, window="required")
    p.add_argument("--L", type=int, required=True)
    p = add("bestshift", cmd_bestshift, pair=True)
    p.add_argument("--range", type=_window, required=True)
    p.add_argument("--eval", type=_window, required=True)
    add("syndetic", cmd_syndetic, spec=True, window="required")
    p = add("pws", cmd_pws, spec=True, window="required")
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--lmin", type=int, required=True)
    p = add("folner", cmd_folner, spec=True)
    p.add_argument("--range", type=_window, required=True)
    p = add("cover", cmd_cover, spec=True, window="required")
    p.add_argument("--shifts", required=True)
    p = add("jin", cmd_jin, pair=True, window="required")
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--lmin", type=int, required=True)
    p.add_argument("--probes", type=int, default=0)
    p.add_argument("--shift-radius", type=int, dest="shift_radius")
    for name, func in (("bohr", cmd_bohr), ("pwbohr", cmd_pwbohr)):
        p = add(name, func, spec=True, window=True)
        p.add_argument("--freqs")
        p.add_argument("--eps")
        p.add_argument("--shift", type=int, default=0)
    sub.choices["bohr"].add_argument("--k", type=int)
    sub.choices["bohr"].add_argument("--tol", default="0")
    sub.choices["pwbohr"].add_argument("--interval", action="append")
    p = add("spectrum", cmd_spectrum, spec=True, window="required")
    p.add_argument("--grid", type=int, required=True)
    p.add_argument("--top", type=int, default=10)
    p = add("lattice-density", cmd_lattice_density, spec=True, multi=True)
    p.add_argument("--box", type=_box, required=True)
    p.add_argument("--L", type=int, required=True)
    p = add("lattice-diff", cmd_lattice_diff, pair=True, multi=True)
    p.add_argument("--box", type=_box)
    p.add_argument("--box-a", type=_box, dest="box_a")
    p.add_argument("--box-b", type=_box, dest="box_b")
    p = add("lattice-pws", cmd_lattice_pws, spec=True, multi=True)
    p.add_argument("--box", type=_box, required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--lmin", type=int, required=True)
    p = add("check", cmd_check, spec=True, pair=True, multi=True)
    p.add_argument("--cert", required=True, help="certificate JSON file, or - for stdin")
    return parser


_RANGE_OPTIONS = {"--window", "--range", "--eval", "--box", "--box-a", "--box-b", "--interval"}
_RANGE_VALUE = re.compile(r"-\d+:-?\d+(,-?\d+:-?\d+)*")


def _join_negative_ranges(argv):
    """Let ``--window -5:5`` through; argparse would read ``-5:5`` as an option."""
    out = []
    for tok in argv:
        if out and out[-1] in _RANGE_OPTIONS and _RANGE_VALUE.fullmatch(tok):
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = _join_negative_ranges(sys.argv[1:] if argv is None else list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return ERROR if exc.code else OK
    try:
        req = Request(args)
        if args.command == "check":
            # --specA/--specB are single specs for Jin reports
            for name in ("specA", "specB"):
                if name in req.specs:
                    req.specs[name] = req.specs[name][0]
        status, text = args.func(req)
    except (UsageError, SpecError, WindowError, OutOfWindowError, MaterializationError) as exc:
        print(f"banachkit: error: {exc}", file=sys.stderr)
        return ERROR
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
