"""Command-line front end: a thin client of the bundled service.

Every subcommand serializes its arguments into a service request, calls
the FastAPI app (in process by default, or a remote instance via
``--server``) and renders the response.  Exit codes: 0 success, 1
numerical disagreement, 2 input or schema error, 3 conditioning-guard
escalation.
"""

from __future__ import annotations

import argparse
import json
import sys

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_INPUT = 2
EXIT_CONDITIONING = 3


def canonical_dumps(obj) -> str:
    """Deterministic JSON: sorted keys, floats at 17 significant digits."""
    parts: list[str] = []
    _canonical(obj, parts)
    return "".join(parts)


def _canonical(obj, parts: list[str]):
    if obj is None or isinstance(obj, (bool, int, str)):
        parts.append(json.dumps(obj))
    elif isinstance(obj, float):
        if obj == 0.0:
            parts.append("0.0")  # normalize negative zero
        elif obj == int(obj) and abs(obj) < 1e16:
            parts.append(f"{obj:.1f}")
        else:
            parts.append(f"{obj:.17g}")
    elif isinstance(obj, dict):
        parts.append("{")
        for i, key in enumerate(sorted(obj)):
            if i:
                parts.append(",")
            parts.append(json.dumps(str(key)))
            parts.append(":")
            _canonical(obj[key], parts)
        parts.append("}")
    elif isinstance(obj, (list, tuple)):
        parts.append("[")
        for i, item in enumerate(obj):
            if i:
                parts.append(",")
            _canonical(item, parts)
        parts.append("]")
    else:
        raise TypeError(f"cannot serialize {type(obj)!r}")


def parse_alpha(text: str) -> list[float]:
    """Accept '0.5', '0.3+0.4j', or 're,im'."""
    if "," in text:
        re_, im_ = text.split(",", 1)
        return [float(re_), float(im_)]
    z = complex(text)
    return [z.real, z.imag]


class ServiceClient:
    """Calls the app in process; with a base URL, talks to a live server."""

    def __init__(self, server: str | None = None):
        if server:
            import httpx

            self._client = httpx.Client(base_url=server, timeout=600.0)
        else:
            import warnings

            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient

            from .service.app import app

            self._client = TestClient(app)

    def post(self, path: str, payload: dict):
        resp = self._client.post(path, json=payload)
        return resp.status_code, resp.json()


def emit(args, payload: dict, human_lines: list[str]):
    text = canonical_dumps(payload) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        for line in human_lines:
            print(line)
    elif args.json:
        sys.stdout.write(text)
    else:
        for line in human_lines:
            print(line)


def fail_input(detail) -> int:
    print(f"error: {detail}", file=sys.stderr)
    return EXIT_INPUT


def cmd_factor(args, client: ServiceClient) -> int:
    status, body = client.post("/factor", {"alpha": parse_alpha(args.alpha), "cap": args.cap})
    if status != 200:
        return fail_input(body.get("detail", body))
    coeffs = [complex(p[0], p[1]) for p in body["coefficients"]]
    emit(args, body, [
        f"factor at alpha={args.alpha}, cap={args.cap}",
        "coefficients: " + ", ".join(f"{c:.6g}" for c in coeffs),
        f"lost mass above cap: {body['lost_mass']:.3e}",
    ])
    return EXIT_OK


def _theta2_arg(args):
    if not args.theta2:
        return []
    out = []
    for chunk in args.theta2.split(";"):
        if ":" in chunk:
            a, m = chunk.split(":", 1)
            out.append({"alpha": parse_alpha(a), "mult": int(m)})
        else:
            out.append({"alpha": parse_alpha(chunk), "mult": 1})
    return out


def cmd_matrix(args, client: ServiceClient) -> int:
    payload = {"alpha": parse_alpha(args.alpha), "m": args.m, "theta2": _theta2_arg(args)}
    if args.cap is not None:
        payload["cap"] = args.cap
    status, body = client.post("/matrix", payload)
    if status != 200:
        return fail_input(body.get("detail", body))
    emit(args, body, [
        f"compressed adjoint-shift matrix, alpha={args.alpha}, m={args.m}, cap={body['cap']}",
        f"max |analytic - numeric| = {body['max_diff']:.3e}",
    ])
    return EXIT_OK


def cmd_model_basis(args, client: ServiceClient) -> int:
    payload = {"alpha": parse_alpha(args.alpha), "m": args.m, "theta2": _theta2_arg(args)}
    if args.cap is not None:
        payload["cap"] = args.cap
    status, body = client.post("/model-basis", payload)
    if status != 200:
        return fail_input(body.get("detail", body))
    emit(args, body, [
        f"model basis, alpha={args.alpha}, m={args.m}, cap={body['cap']}",
        f"common vector norm: {body['vector_norm']:.12g}",
        f"max pairwise overlap: {body['max_pairwise_overlap']:.3e}",
    ])
    return EXIT_OK


def cmd_wandering(args, client: ServiceClient) -> int:
    try:
        with open(args.config) as fh:
            cfg = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        return fail_input(exc)
    status, body = client.post("/wandering", cfg)
    if status != 200:
        return fail_input(body.get("detail", body))
    ok = body["agreement_ok"] and body["stabilization_ok"]
    emit(args, body, [
        f"wandering dimensions: formula={body['formula_dim']} "
        f"blocks={body['block_dim']} brute-force={body['bruteforce_dim']}",
        f"agreement: {body['agreement_ok']}, stabilization: {body['stabilization_ok']}",
    ])
    return EXIT_OK if ok else EXIT_DISAGREE


def cmd_verify(args, client: ServiceClient) -> int:
    payload = {
        "samples": args.samples, "seed": args.seed,
        "deg1": args.deg1, "deg2": args.deg2,
        "tol": args.tol, "margin": args.margin, "cap_step": args.cap_step,
    }
    status, body = client.post("/verify", payload)
    if status != 200:
        return fail_input(body.get("detail", body))
    emit(args, body, [
        f"verify: {body['n_ok']}/{body['samples']} random sequences agree "
        f"(seed {body['seed']}, caps {body['caps']})",
    ])
    return EXIT_OK if body["all_ok"] else EXIT_DISAGREE


def cmd_corollary_rudin(args, client: ServiceClient) -> int:
    payload = {"n_points": args.n_points}
    if args.deg1 is not None:
        payload["deg1"] = args.deg1
    if args.deg2 is not None:
        payload["deg2"] = args.deg2
    status, body = client.post("/corollary-rudin", payload)
    if status != 200:
        return fail_input(body.get("detail", body))
    if body.get("escalated"):
        emit(args, body, ["conditioning guard escalated:"] + body["warnings"])
        return EXIT_CONDITIONING
    emit(args, body, [
        f"wandering dimension (formula/blocks): {body['formula_dim']}/{body['block_dim']}",
        "basis: " + ", ".join(body["basis_tags"]),
        "expected-basis projection residuals: "
        + ", ".join(f"{r:.3e}" for r in body["expected_projection_residuals"]),
    ])
    ok = body["formula_dim"] == body["block_dim"]
    return EXIT_OK if ok else EXIT_DISAGREE


def cmd_serve(args, _client=None) -> int:
    import uvicorn

    uvicorn.run("hardymod.service.app:app", host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hardymod",
        description="Wandering subspaces of Rudin-type submodules, computed numerically.")
    parser.add_argument("--server", default=None,
                        help="base URL of a running service (default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="print the JSON report to stdout")
        p.add_argument("--out", default=None, help="write the JSON report to this path")

    p = sub.add_parser("factor", help="Taylor coefficients of a single factor")
    p.add_argument("--alpha", required=True)
    p.add_argument("--cap", type=int, default=50)
    common(p)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("matrix", help="analytic vs numeric compressed-shift matrix")
    p.add_argument("--alpha", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--theta2", default=None,
                   help="inner multiplier as 'alpha:mult;alpha:mult;...'")
    common(p)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("model-basis", help="explicit orthogonal basis of a model-space block")
    p.add_argument("--alpha", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--theta2", default=None)
    common(p)
    p.set_defaults(func=cmd_model_basis)

    p = sub.add_parser("wandering", help="three-way wandering-dimension report from a config file")
    p.add_argument("config", help="path to a JSON config")
    common(p)
    p.set_defaults(func=cmd_wandering)

    p = sub.add_parser("verify", help="randomized three-way agreement harness")
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--deg1", type=int, default=10)
    p.add_argument("--deg2", type=int, default=80)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--margin", type=int, default=2)
    p.add_argument("--cap-step", type=int, default=8, dest="cap_step")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("corollary-rudin",
                       help="finite prefix of the classical boundary-zero example")
    p.add_argument("--n-points", type=int, required=True, dest="n_points")
    p.add_argument("--deg1", type=int, default=None)
    p.add_argument("--deg2", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_corollary_rudin)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.func is cmd_serve:
        return cmd_serve(args)
    try:
        client = ServiceClient(args.server)
    except Exception as exc:
        return fail_input(exc)
    try:
        return args.func(args, client)
    except ValueError as exc:
        return fail_input(exc)


if __name__ == "__main__":
    sys.exit(main())
