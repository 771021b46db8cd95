"""Command-line front end: invariant reports, state listings, corpus tables,
and tau from explicit filtered complexes.

Exit codes: 0 success, 1 expectation mismatch, 2 input error.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .alexander import LaurentPoly, determinant, state_sum_polynomial
from .diagram import decorate, parse_pd
from .filtered import FilteredComplex
from .signature import signature
from .states import (enumerate_states, essential_states,
                     maximal_essential_interval, multi_filtration)
from .tau import tau_alternating, tau_unique_state, tau_unknot

CSV_COLUMNS = ["name", "crossings", "sigma", "determinant", "alexander",
               "tau", "status"]


class InputError(Exception):
    pass


def _load_entry(args):
    """Resolve the knot input to (entry dict, diagram)."""
    if getattr(args, "pd", None):
        entry = {"name": None, "pd": args.pd, "decoration": 1}
    elif getattr(args, "input", None):
        try:
            with open(args.input) as f:
                text = f.read()
        except OSError as e:
            raise InputError("cannot read %s: %s" % (args.input, e.strerror))
        stripped = text.lstrip()
        if stripped.startswith("{"):
            try:
                entry = json.loads(text)
            except ValueError as e:
                raise InputError("%s is not valid JSON: %s" % (args.input, e))
            if not isinstance(entry, dict) or "pd" not in entry:
                raise InputError("%s is not a corpus entry: expected an "
                                 "object with a \"pd\" field (arrays go to "
                                 "the table subcommand)" % args.input)
        else:
            entry = {"name": None, "pd": text, "decoration": 1}
    else:
        raise InputError("no knot given: pass --pd or an input file")
    try:
        d = parse_pd(entry["pd"])
    except Exception as e:
        raise InputError(str(e))
    if entry.get("name"):
        d.name = entry["name"]
    mark = getattr(args, "mark", None)
    if mark is not None:
        entry["decoration"] = mark
    entry.setdefault("decoration", 1)
    return entry, d


def _tau_certificate(d, mark=None):
    """Certificate cascade: unknot, alternating rule, unique-state rule."""
    if d.n == 0:
        return tau_unknot(d.name or "unknot")
    if d.is_alternating() and d.is_reduced():
        return tau_alternating(d)
    marks = [mark] if mark else range(1, 2 * d.n + 1)
    for e in marks:
        cert = tau_unique_state(decorate(d, e))
        if cert is not None:
            return cert
    return None


def _report(entry, d):
    out = {"name": d.name or "unnamed"}
    out["crossings"] = d.n
    out["writhe"] = d.writhe
    out["alternating"] = d.is_alternating()
    out["reduced"] = d.is_reduced()
    dec = decorate(d, entry["decoration"])
    poly = state_sum_polynomial(dec)
    out["alexander"] = str(poly)
    det, _ = determinant(d)
    out["determinant"] = det
    out["sigma"] = signature(d)
    cert = _tau_certificate(d, entry.get("decoration"))
    if cert is None:
        reason = ("undetermined: no certificate rule applies "
                  "(diagram is not alternating and no decoration has a "
                  "unique essential M=0 state)")
        out["tau"] = reason
        out["g4_lower"] = "undetermined: requires a tau certificate"
        out["u_lower"] = "undetermined: requires a tau certificate"
    else:
        cj = cert.to_json()
        out["tau"] = cj
        out["g4_lower"] = cj["g4_lower"]
        out["u_lower"] = cj["u_lower"]
    return out


def cmd_invariants(args):
    entry, d = _load_entry(args)
    rep = _report(entry, d)
    if args.format == "json":
        print(json.dumps(rep, indent=2, sort_keys=True))
        return 0
    for key in ("name", "crossings", "writhe", "alternating", "reduced",
                "alexander", "determinant", "sigma"):
        print("%s: %s" % (key, _plain(rep[key])))
    tau = rep["tau"]
    if isinstance(tau, dict):
        if tau["tau_lower"] == tau["tau_upper"]:
            shown = str(tau["tau_lower"])
        else:
            shown = "[%d, %d]" % (tau["tau_lower"], tau["tau_upper"])
        print("tau: %s (method %s)" % (shown, tau["method"]))
    else:
        print("tau: %s" % tau)
    print("g4_lower: %s" % _plain(rep["g4_lower"]))
    print("u_lower: %s" % _plain(rep["u_lower"]))
    return 0


def _plain(v):
    if v is True:
        return "true"
    if v is False:
        return "false"
    return str(v)


def cmd_states(args):
    entry, d = _load_entry(args)
    dec = decorate(d, entry["decoration"])
    if args.essential:
        states = essential_states(dec)
        interval = maximal_essential_interval(dec)
    else:
        states = enumerate_states(dec)
        interval = None
    rows = []
    for s in states:
        row = {"M": s.M, "A": s.A,
               "assignment": {str(v): r for v, r in sorted(s.assignment().items())}}
        if args.multifiltration:
            row["multifiltration"] = [list(p) for p in multi_filtration(dec, s)]
        rows.append(row)
    rows.sort(key=lambda r: (r["M"], r["A"], json.dumps(r["assignment"],
                                                        sort_keys=True)))
    if args.format == "json":
        out = {"name": d.name or "unnamed", "marked_edge": dec.eps[0],
               "count": len(rows), "states": rows}
        if interval is not None:
            out["essential_interval"] = sorted(interval.index_set)
        print(json.dumps(out, indent=2, sort_keys=True))
        return 0
    print("name: %s" % (d.name or "unnamed"))
    print("marked_edge: %d" % dec.eps[0])
    if interval is not None:
        print("essential_interval_indices: %s" % sorted(interval.index_set))
    print("count: %d" % len(rows))
    for r in rows:
        line = "M=%d A=%d %s" % (r["M"], r["A"],
                                 json.dumps(r["assignment"], sort_keys=True))
        if args.multifiltration:
            line += " %s" % r["multifiltration"]
        print(line)
    return 0


def _check_entry(entry):
    d = parse_pd(entry["pd"])
    if entry.get("name"):
        d.name = entry["name"]
    rep = _report(entry, d)
    known = entry.get("known", {})
    diffs = []
    for key in ("determinant", "sigma"):
        if key in known and known[key] != rep[key]:
            diffs.append((key, known[key], rep[key]))
    if "alexander" in known:
        expected = LaurentPoly.from_json(known["alexander"])
        got = state_sum_polynomial(decorate(d, entry.get("decoration", 1)))
        if expected != got:
            diffs.append(("alexander", str(expected), str(got)))
    cert = rep["tau"] if isinstance(rep["tau"], dict) else None
    for key in ("tau", "g4_lower", "u_lower"):
        if key in known:
            computed = None
            if cert is not None:
                computed = (cert["tau_lower"] if key == "tau"
                            and cert["tau_lower"] == cert["tau_upper"]
                            else cert.get(key))
            if computed != known[key]:
                diffs.append((key, known[key], computed))
    if "unknotting" in known and cert is not None \
            and cert["tau_lower"] == cert["tau_upper"]:
        if abs(cert["tau_lower"]) > len(known["unknotting"]):
            diffs.append(("unknotting",
                          ">= |tau| = %d changes" % abs(cert["tau_lower"]),
                          "%d changes" % len(known["unknotting"])))
    row = {col: rep.get(col) for col in
           ("name", "crossings", "sigma", "determinant", "alexander")}
    if cert is not None and cert["tau_lower"] == cert["tau_upper"]:
        row["tau"] = cert["tau_lower"]
    else:
        row["tau"] = ""
    row["status"] = "pass" if not diffs else "fail"
    return row, diffs


def _thread_count():
    raw = os.environ.get("TAUKNOT_THREADS")
    if raw is None:
        return os.cpu_count() or 1
    try:
        n = int(raw)
        assert n >= 1
    except (ValueError, AssertionError):
        raise InputError("TAUKNOT_THREADS must be a positive integer, got %r"
                         % raw)
    return n


def cmd_table(args):
    try:
        with open(args.corpus) as f:
            data = json.load(f)
    except OSError as e:
        raise InputError("cannot read %s: %s" % (args.corpus, e.strerror))
    except ValueError as e:
        raise InputError("corpus file %s is not valid JSON: %s"
                         % (args.corpus, e))
    if isinstance(data, dict):
        data = [data]
    if not isinstance(data, list):
        raise InputError("corpus file must be a JSON array of entries")
    with ThreadPoolExecutor(max_workers=_thread_count()) as pool:
        results = list(pool.map(_check_entry, data))
    rows = [row for row, _ in results]
    all_diffs = [(row["name"], diffs) for row, diffs in results if diffs]
    fmt = args.out or args.format
    if fmt == "json":
        print(json.dumps(rows, indent=2, sort_keys=True))
    elif fmt == "csv":
        print(",".join(CSV_COLUMNS))
        for row in rows:
            print(",".join('"%s"' % row[c] if "," in str(row[c]) else
                           str(row[c] if row[c] is not None else "")
                           for c in CSV_COLUMNS))
    else:
        for row in rows:
            print("%-10s crossings=%-3s sigma=%-4s det=%-4s tau=%-4s %s"
                  % (row["name"], row["crossings"], row["sigma"],
                     row["determinant"], row["tau"], row["status"]))
    if all_diffs:
        for name, diffs in all_diffs:
            for key, expected, got in diffs:
                print("mismatch %s.%s: expected %s, computed %s"
                      % (name, key, expected, got), file=sys.stderr)
        return 1
    return 0


def cmd_tau_complex(args):
    try:
        with open(args.complex) as f:
            data = json.load(f)
    except OSError as e:
        raise InputError("cannot read %s: %s" % (args.complex, e.strerror))
    except ValueError as e:
        raise InputError("complex file %s is not valid JSON: %s"
                         % (args.complex, e))
    try:
        c = FilteredComplex.from_json(data)
    except KeyError as e:
        raise InputError("%s is not a filtered complex file (missing %s)"
                         % (args.complex, e))
    except ValueError as e:
        raise InputError(str(e))
    try:
        t = c.tau()
    except ValueError as e:
        raise InputError(str(e))
    if args.format == "json":
        print(json.dumps({"tau": t}, sort_keys=True))
    else:
        print("tau: %d" % t)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tauknot",
        description="Combinatorial knot invariants: Alexander polynomial, "
                    "signature, Kauffman states, and tau certificates.",
        epilog="CSV columns for `table --out csv`: " + ",".join(CSV_COLUMNS)
               + ".  TAUKNOT_THREADS caps corpus parallelism.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="invariant report for one knot")
    p.add_argument("input", nargs="?", help="PD text file or corpus JSON entry")
    p.add_argument("--pd", help="inline PD code")
    p.add_argument("--mark", type=int, help="marked edge for the decoration")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("states", help="list Kauffman states with gradings")
    p.add_argument("input", nargs="?", help="PD text file or corpus JSON entry")
    p.add_argument("--pd", help="inline PD code")
    p.add_argument("--mark", type=int, help="marked edge for the decoration")
    p.add_argument("--essential", action="store_true",
                   help="restrict to essential states of the maximal interval")
    p.add_argument("--multifiltration", action="store_true",
                   help="include the edge-indexed filtration pairs")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_states)

    p = sub.add_parser("table", help="evaluate a corpus file, checking "
                                     "expected values")
    p.add_argument("corpus", help="JSON array of corpus entries")
    p.add_argument("--out", choices=("csv", "json"),
                   help="machine output format")
    p.add_argument("--format", choices=("text", "json", "csv"),
                   default="text")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("tau-complex", help="tau of an explicit filtered "
                                           "complex JSON file")
    p.add_argument("complex", help="filtered complex JSON file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_tau_complex)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except BrokenPipeError:
        os.close(sys.stdout.fileno())
        return 0
    except Exception as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
