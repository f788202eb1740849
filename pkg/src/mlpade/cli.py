"""Command-line client for the approximant service.

The CLI is a thin HTTP client: every subcommand builds one request,
sends it to the service, and renders the JSON reply as CSV or JSON on
stdout.  By default the service application is driven in-process (no
socket, fully offline); --url points the same client at a running
server instead.

Exit codes: 0 success; 2 usage or domain error; 3 conditioning failure
under --strict; 4 internal numerical failure.  All numbers print with 17
significant digits so output is byte-stable and round-trippable.
"""

import argparse
import sys

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CONDITIONING = 3
EXIT_NUMERIC = 4

_DOMAIN_KINDS = {
    "InvalidSpec",
    "InverseDomainError",
    "NegativeDiscriminant",
    "NoPositiveRoot",
    "MultiplePositiveRoots",
    "ValueError",
    "RequestValidationError",
}


def fmt(v) -> str:
    if isinstance(v, float):
        return f"{v:.17g}"
    return str(v)


def fmt_json(obj, indent=0) -> str:
    """JSON with floats at 17 significant digits (stable golden output)."""
    pad = " " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [
            f'{pad}  "{k}": {fmt_json(v, indent + 2)}' for k, v in obj.items()
        ]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, list):
        if not obj:
            return "[]"
        items = [f"{pad}  {fmt_json(v, indent + 2)}" for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, float):
        return fmt(obj)
    if isinstance(obj, str):
        import json as _json

        return _json.dumps(obj)
    return str(obj)


class ServiceClient:
    """In-process ASGI client by default, remote HTTP when a URL is given."""

    def __init__(self, url=None):
        if url:
            import httpx

            self._client = httpx.Client(base_url=url, timeout=600.0)
        else:
            import warnings

            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient

            from .service.app import app

            self._client = TestClient(app, raise_server_exceptions=False)

    def post(self, path, payload):
        return self._client.post(path, json=payload)

    def close(self):
        self._client.close()


def _spec_args(p):
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--m", type=int, default=7)
    p.add_argument("--n", type=int, default=2)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="mlpade",
        description="Global rational approximation of the two-parametric "
        "Mittag-Leffler function (client for the mlpade service)",
    )
    parser.add_argument("--url", help="service base URL (default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="construct and print approximant coefficients")
    _spec_args(p)
    p.add_argument("--strict", action="store_true",
                   help="fail (exit 3) on an ill-conditioned coefficient system")
    fmtgrp = p.add_mutually_exclusive_group()
    fmtgrp.add_argument("--json", action="store_true", default=True)
    fmtgrp.add_argument("--csv", action="store_true", default=False)

    p = sub.add_parser("eval", help="evaluate the approximant at a point")
    _spec_args(p)
    p.add_argument("--x", type=float, required=True)

    p = sub.add_parser("invert", help="approximate the inverse function at y")
    _spec_args(p)
    p.add_argument("--y", type=float, required=True)

    p = sub.add_parser("pfd", help="partial fraction decomposition (poles/weights)")
    _spec_args(p)
    p.add_argument("--json", action="store_true", default=True)

    p = sub.add_parser("matrix", help="matrix-argument evaluation via shifted solves")
    _spec_args(p)
    p.add_argument("--matrix", required=True, metavar="FILE",
                   help="CSV file, one matrix row per line")
    rhs = p.add_mutually_exclusive_group()
    rhs.add_argument("--rhs", metavar="FILE", help="right-hand side vector file")
    rhs.add_argument("--e", type=int, metavar="K",
                     help="use the K-th unit vector as right-hand side (1-based)")

    p = sub.add_parser("oracle", help="reference value of E_(alpha,beta)(-x)")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--x", type=float, required=True)

    p = sub.add_parser("table", help="reproduce an error/application table as CSV")
    p.add_argument("--which", required=True,
                   choices=["error", "rde", "vie", "bt", "basset"])
    p.add_argument("--grid-step", type=float, default=0.01)
    p.add_argument("--no-timing", action="store_true",
                   help="omit runtime columns (stable golden output)")

    p = sub.add_parser("bench", help="run one application benchmark")
    p.add_argument("--case", required=True,
                   choices=["rde", "vie", "ultraslow", "bt", "basset"])
    for name in ("alpha", "beta", "x-loc", "k-alpha", "delta", "a1", "a2",
                 "t-max", "dt"):
        p.add_argument(f"--{name}", type=float)
    p.add_argument("--m", type=int, default=7)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--csv", action="store_true",
                   help="emit the per-point CSV instead of the JSON summary")
    p.add_argument("--no-timing", action="store_true")

    return parser


def _read_matrix(path):
    rows = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            rows.append([float(v) for v in line.replace(";", ",").split(",") if v])
    return rows


def _read_vector(path):
    out = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            for tok in line.replace(",", " ").split():
                out.append(float(tok))
    return out


def _exit_code_for(resp) -> int:
    if resp.status_code == 422:
        return EXIT_USAGE
    try:
        kind = resp.json().get("error", {}).get("kind", "")
    except Exception:
        kind = ""
    if kind == "IllConditioned":
        return EXIT_CONDITIONING
    if kind in _DOMAIN_KINDS or resp.status_code == 400:
        return EXIT_USAGE
    return EXIT_NUMERIC


def _fail(resp) -> int:
    try:
        err = resp.json().get("error", {})
        msg = err.get("message") or resp.text
        kind = err.get("kind", "error")
        print(f"{kind}: {msg}", file=sys.stderr)
    except Exception:
        print(resp.text, file=sys.stderr)
    return _exit_code_for(resp)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    client = ServiceClient(args.url)
    try:
        return _dispatch(args, client)
    finally:
        client.close()


def _dispatch(args, client) -> int:
    cmd = args.command

    if cmd == "coeffs":
        resp = client.post("/v1/coeffs", {
            "alpha": args.alpha, "beta": args.beta, "m": args.m, "n": args.n,
            "strict": args.strict,
        })
        if resp.status_code != 200:
            return _fail(resp)
        doc = resp.json()
        for w in doc.get("warnings", []):
            print(f"warning: {w}", file=sys.stderr)
        if args.csv:
            print("degree,p,q")
            for k, (pv, qv) in enumerate(zip(doc["p"], doc["q"])):
                print(f"{k},{fmt(float(pv))},{fmt(float(qv))}")
        else:
            print(fmt_json(doc))
        return EXIT_OK

    if cmd == "eval":
        resp = client.post("/v1/eval", {
            "alpha": args.alpha, "beta": args.beta, "m": args.m, "n": args.n,
            "x": args.x,
        })
        if resp.status_code != 200:
            return _fail(resp)
        print(fmt(float(resp.json()["value"])))
        return EXIT_OK

    if cmd == "invert":
        resp = client.post("/v1/invert", {
            "alpha": args.alpha, "beta": args.beta, "m": args.m, "n": args.n,
            "y": args.y,
        })
        if resp.status_code != 200:
            return _fail(resp)
        print(fmt(float(resp.json()["value"])))
        return EXIT_OK

    if cmd == "pfd":
        resp = client.post("/v1/pfd", {
            "alpha": args.alpha, "beta": args.beta, "m": args.m, "n": args.n,
        })
        if resp.status_code != 200:
            return _fail(resp)
        print(fmt_json(resp.json()))
        return EXIT_OK

    if cmd == "matrix":
        try:
            matrix = _read_matrix(args.matrix)
            rhs = _read_vector(args.rhs) if args.rhs else None
        except (OSError, ValueError) as exc:
            print(f"matrix input: {exc}", file=sys.stderr)
            return EXIT_USAGE
        payload = {
            "alpha": args.alpha, "beta": args.beta, "m": args.m, "n": args.n,
            "matrix": matrix,
        }
        if rhs is not None:
            payload["rhs"] = rhs
        if args.e is not None:
            payload["unit_rhs_index"] = args.e
        resp = client.post("/v1/matrix", payload)
        if resp.status_code != 200:
            return _fail(resp)
        doc = resp.json()
        if doc["mode"] == "full":
            for row in doc["result"]:
                print(",".join(fmt(float(v)) for v in row))
        else:
            for v in doc["result_vector"]:
                print(fmt(float(v)))
        return EXIT_OK

    if cmd == "oracle":
        resp = client.post("/v1/oracle", {
            "alpha": args.alpha, "beta": args.beta, "x": args.x,
        })
        if resp.status_code != 200:
            return _fail(resp)
        print(fmt(float(resp.json()["value"])))
        return EXIT_OK

    if cmd == "table":
        resp = client.post("/v1/table", {
            "which": args.which, "grid_step": args.grid_step,
            "timing": not args.no_timing,
        })
        if resp.status_code != 200:
            return _fail(resp)
        _print_table(resp.json(), args.which, not args.no_timing)
        return EXIT_OK

    if cmd == "bench":
        payload = {
            "case": args.case, "m": args.m, "n": args.n,
            "include_points": args.csv, "timing": not args.no_timing,
        }
        for key, attr in (("alpha", "alpha"), ("beta", "beta"),
                          ("x_loc", "x_loc"), ("k_alpha", "k_alpha"),
                          ("delta", "delta"), ("a1", "a1"), ("a2", "a2"),
                          ("t_max", "t_max"), ("dt", "dt")):
            v = getattr(args, attr)
            if v is not None:
                payload[key] = v
        resp = client.post("/v1/bench", payload)
        if resp.status_code != 200:
            return _fail(resp)
        doc = resp.json()
        if args.csv:
            pts = doc["points"]
            print("t,approx,exact,abs_err,rel_err")
            for i in range(len(pts["t"])):
                print(",".join(fmt(float(pts[c][i]))
                               for c in ("t", "approx", "exact", "abs_err",
                                         "rel_err")))
        else:
            doc.pop("points", None)
            print(fmt_json(doc))
        return EXIT_OK

    return EXIT_USAGE


def _print_table(doc, which, timing):
    if which == "error":
        head = ["type"]
        for cell in doc["rows"][0]["cells"]:
            tag = f"a{cell['alpha']:g}_b{cell['beta']:g}"
            head += [f"ae_{tag}", f"re_{tag}"]
        print(",".join(head))
        for row in doc["rows"]:
            out = [row["type"]]
            for cell in row["cells"]:
                out += [fmt(float(cell["ae"])), fmt(float(cell["re"]))]
            print(",".join(out))
        return
    rows = doc["rows"]
    param_cols = [k for k in rows[0] if k not in
                  ("max_ae", "max_re", "runtime_seconds")]
    cols = param_cols + ["max_ae", "max_re"]
    if timing:
        cols.append("runtime_seconds")
    print(",".join(cols))
    for row in rows:
        print(",".join(fmt(float(row[c])) for c in cols))


if __name__ == "__main__":
    sys.exit(main())
