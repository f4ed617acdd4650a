r"""
Command line: verification suites, single computations and sweeps.

Exit codes: ``0`` success, ``1`` a check failed, ``2`` usage or parse error.

EXAMPLES::

    >>> main(["geodesic", "--slope", "0/1", "--shear", "0,0,0"])
    {"length": 1.9248473002384139, "proper_length": 0.9624236501192069, "trace": 3.0}
    0
"""
import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import __version__, classical, dilog, fatgraph, report, thurston


class UsageError(Exception):
    pass


# parsing

def parse_floats(text, what="value"):
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError("cannot parse %s list %r" % (what, text))


def parse_cf(text):
    try:
        cf = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError("cannot parse partial quotients %r" % text)
    if not cf or any(a < 1 for a in cf):
        raise UsageError("partial quotients must be positive integers")
    return cf


def parse_slope(text):
    r"""
    ``"p/q"`` to a coprime pair of nonnegative integers.

    EXAMPLES::

        >>> parse_slope("3/5")
        (3, 5)
        >>> parse_slope("2/4")
        Traceback (most recent call last):
        ...
        teichlab.cli.UsageError: slope 2/4 is not reduced
    """
    try:
        p, q = (int(t) for t in text.split("/"))
    except ValueError:
        raise UsageError("cannot parse slope %r; expected p/q" % text)
    if p < 0 or q < 0 or (p, q) == (0, 0):
        raise UsageError("slope %s must have nonnegative entries, not both zero" % text)
    if Fraction(p, q if q else 1).denominator != (q if q else 1) or (q == 0 and p != 1) or (p == 0 and q != 1):
        raise UsageError("slope %s is not reduced" % text)
    return p, q


def parse_shear(text, g):
    r"""
    Either ``label=value`` pairs or values in the order of ``g.edge_labels()``.

    EXAMPLES::

        >>> parse_shear("Z=1,X=0.5,Y=-2", fatgraph.torus_spine())
        {'X': 0.5, 'Y': -2.0, 'Z': 1.0}
    """
    labels = list(g.edge_labels())
    if text is None:
        return {l: 0.0 for l in labels}
    if "=" in text:
        out = {}
        for item in text.split(","):
            if not item.strip():
                continue
            k, _, v = item.partition("=")
            try:
                out[k.strip()] = float(v)
            except ValueError:
                raise UsageError("cannot parse shear entry %r" % item)
        if set(out) != set(labels):
            raise UsageError("shear labels %s do not match edges %s" % (sorted(out), labels))
        return {l: out[l] for l in labels}
    vals = parse_floats(text, "shear")
    if len(vals) != len(labels):
        raise UsageError("expected %d shear values, got %d" % (len(labels), len(vals)))
    return dict(zip(labels, vals))


def load_graph(path):
    if path is None:
        return fatgraph.torus_spine()
    try:
        with open(path) as f:
            text = f.read()
    except OSError as e:
        raise UsageError("cannot read graph file: %s" % e)
    try:
        return fatgraph.FatGraph.from_text(text)
    except fatgraph.FatGraphError as e:
        raise UsageError("%s: %s" % (path, e))


# output

def emit(data, fmt, out):
    if fmt in (None, "json"):
        text = json.dumps(data, sort_keys=True, default=_json_default)
    else:
        rows = data if isinstance(data, list) else [data]
        buf = io.StringIO()
        keys = list(rows[0]) if rows else []
        w = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n", extrasaction="ignore")
        w.writeheader()
        for r in rows:
            w.writerow({k: (json.dumps(v, default=_json_default) if isinstance(v, (dict, list)) else v)
                        for k, v in r.items()})
        text = buf.getvalue().rstrip("\n")
    if out:
        with open(out, "w") as f:
            f.write(text + "\n")
    else:
        print(text)


def _json_default(x):
    if isinstance(x, complex):
        return [x.real, x.imag]
    if isinstance(x, Fraction):
        return str(x)
    if hasattr(x, "item"):
        return x.item()
    raise TypeError("not serializable: %r" % (x,))


# commands

def cmd_verify(args):
    rep = report.run_suite(args.suite, seed=args.seed)
    if args.format == "csv":
        emit([dict(r, params=r["params"]) for r in rep["records"]], "csv", args.out)
    else:
        emit(rep, "json", args.out)
    if args.strict:
        return 0 if all(r["status"] != "fail" for r in rep["records"]) else 1
    return 0 if rep["ok"] else 1


def geodesic_record(g, shear, path):
    tr = classical.geodesic_trace(g, path, shear)
    pl = classical.proper_length_classical(tr)
    return {"trace": abs(tr), "length": 2 * pl, "proper_length": pl}


def cmd_geodesic(args):
    g = load_graph(args.graph)
    shear = parse_shear(args.shear, g)
    if (args.path is None) == (args.slope is None):
        raise UsageError("give exactly one of --path or --slope")
    if args.slope is not None:
        if args.graph is not None:
            raise UsageError("--slope is defined on the torus spine only")
        path = fatgraph.slope_path(*parse_slope(args.slope))
    else:
        hs = tuple(t.strip() for t in args.path.split(",") if t.strip())
        path = fatgraph.EdgePath(hs)
        try:
            fatgraph.path_turns(g, path)
        except (ValueError, KeyError) as e:
            raise UsageError("invalid path: %s" % e)
    try:
        rec = geodesic_record(g, shear, path)
    except classical.EllipticError as e:
        raise UsageError(str(e))
    emit(rec, args.format, args.out)
    return 0


def converge_rows(shear, cf, depth, weights=None):
    rows = thurston.converge_ratio(shear, cf, depth, weights)
    out = []
    prev = None
    for k, m1, m2, lt, pl, gl, ratio in rows:
        out.append({"depth": k, "m1": m1, "m2": m2, "log_trace": lt, "proper_length": pl,
                    "graph_length": gl, "ratio": ratio,
                    "gap": "" if prev is None else abs(ratio - prev)})
        prev = ratio
    return out


def cmd_converge(args):
    shear = parse_floats(args.shear or "0,0,0", "shear")
    if len(shear) != 3:
        raise UsageError("torus shear needs 3 values")
    cf = parse_cf(args.cf) if args.cf else [1] * (args.depth or 15)
    depth = args.depth or len(cf)
    weights = None
    if args.weights:
        w = parse_floats(args.weights, "weight")
        if len(w) != 3:
            raise UsageError("weights need 3 values for X, Y, Z")
        weights = dict(zip("XYZ", w))
    try:
        rows = converge_rows(shear, cf, depth, weights)
    except classical.EllipticError as e:
        print("elliptic-degenerate shear: %s" % e, file=sys.stderr)
        return 1
    except ValueError as e:
        raise UsageError(str(e))
    emit(rows, args.format or "csv", args.out)
    return 0


def cmd_dilog_eval(args):
    if args.hbar is None or args.z is None:
        raise UsageError("dilog eval needs --z and --hbar")
    p = dilog.DilogParams(args.hbar)
    val = dilog.phi_hbar(args.z, p)
    rec = {"z": args.z, "hbar": args.hbar, "phi": val,
           "reflection_residual": abs(val - dilog.phi_hbar(-args.z, p) - args.z)}
    emit(rec, args.format, args.out)
    return 0


def cmd_dilog_pentagon(args):
    try:
        rep = dilog.CyclicRep(args.m, args.n)
    except ValueError as e:
        raise UsageError(str(e))
    if not (args.u > 0 and args.v > 0):
        raise UsageError("u and v must be positive")
    r = dilog.pentagon_report(args.u, args.v, rep, shift=args.shift)
    emit(r, args.format, args.out)
    return 0 if r["deviation"] < 1e-8 else 1


def cmd_split(args):
    if not (args.A > 0 and args.B > 0):
        raise UsageError("branch weights must be positive")
    word, hit = thurston.splitting_sequence(args.A, args.B, args.max_steps)
    emit({"word": word, "runs": [len(r) for r in thurston.runs(word)], "collided": hit},
         args.format, args.out)
    return 0


def cmd_unzip(args):
    m1, m2 = parse_slope(args.slope)
    word = thurston.unzip_sequence((m1, m2, m1 + m2))
    emit({"triple": [m1, m2, m1 + m2], "unzip": [list(w) for w in word],
          "zip": list(thurston.zip_word(thurston.invert_word(word)))}, args.format, args.out)
    return 0


def build_parser():
    P = argparse.ArgumentParser(prog="teichlab", description=__doc__.split("\n\n")[1].strip())
    P.add_argument("--version", action="version", version="teichlab " + __version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write output to a file instead of stdout")
    common.add_argument("--format", choices=("json", "csv"),
                        help="json (default) or csv; sweeps default to csv")
    common.add_argument("--seed", type=int, default=0)
    sub = P.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run identity suites")
    v.add_argument("--suite", choices=report.SUITES + ("all",), default="all")
    v.add_argument("--strict", action="store_true",
                   help="also fail on records marked as expected failures")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("geodesic", parents=[common], help="trace and lengths of a closed path")
    g.add_argument("--graph", help="graph file in the 'fatgraph v1' format (default: torus)")
    g.add_argument("--shear", help="a,b,c in edge order or label=value pairs")
    g.add_argument("--path", help="comma-separated outgoing half-edges")
    g.add_argument("--slope", help="torus curve m1/m2")
    g.set_defaults(func=cmd_geodesic)

    def add_converge(parser):
        parser.add_argument("--shear", help="torus shear X,Y,Z")
        parser.add_argument("--cf", help="partial quotients a1,a2,...")
        parser.add_argument("--depth", type=int)
        parser.add_argument("--weights", help="graph-length weights for X,Y,Z")
        parser.set_defaults(func=cmd_converge)

    c = sub.add_parser("converge", parents=[common], help="p.l./g.l. along convergents (CSV)")
    add_converge(c)

    d = sub.add_parser("dilog", help="quantum dilogarithm")
    dsub = d.add_subparsers(dest="dilog_command", required=True)
    e = dsub.add_parser("eval", parents=[common])
    e.add_argument("--z", type=float)
    e.add_argument("--hbar", type=float)
    e.set_defaults(func=cmd_dilog_eval)
    pe = dsub.add_parser("pentagon", parents=[common])
    pe.add_argument("--m", type=int, default=1)
    pe.add_argument("--n", type=int, default=3)
    pe.add_argument("--u", type=float, default=1.0)
    pe.add_argument("--v", type=float, default=1.0)
    pe.add_argument("--shift", type=int, default=2, help="q-exponent offset in F(j, u)")
    pe.set_defaults(func=cmd_dilog_pentagon)

    t = sub.add_parser("thurston", help="torus foliation dynamics")
    tsub = t.add_subparsers(dest="thurston_command", required=True)
    tc = tsub.add_parser("converge", parents=[common])
    add_converge(tc)
    ts = tsub.add_parser("split", parents=[common])
    ts.add_argument("--A", type=float, required=True)
    ts.add_argument("--B", type=float, required=True)
    ts.add_argument("--max-steps", type=int, default=10 ** 4)
    ts.set_defaults(func=cmd_split)
    tu = tsub.add_parser("unzip", parents=[common])
    tu.add_argument("--slope", required=True, help="m1/m2")
    tu.set_defaults(func=cmd_unzip)
    return P


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except UsageError as e:
        print("teichlab: error: %s" % e, file=sys.stderr)
        return 2
