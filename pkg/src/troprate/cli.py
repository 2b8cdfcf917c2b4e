"""Command-line client for the rating engine.

Builds the same request models the HTTP service accepts and, by default,
calls the service handlers in-process; --server routes the request to a
running instance instead.  Reports go to stdout as JSON (or CSV), a short
human summary goes to stderr.

Exit codes: 0 success, 2 invalid input, 3 solver precondition violated.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from pydantic import ValidationError

from .semifield import DEFAULT_TOL
from .service import handlers, schemas
from .solver import UnsolvableError

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INVALID = 2
EXIT_UNSOLVABLE = 3

_COMMANDS = {
    "rate": (schemas.RateRequest, handlers.rate),
    "ahp": (schemas.AhpRequest, handlers.ahp),
    "check": (schemas.MatrixRequest, handlers.check),
    "spectral": (schemas.MatrixRequest, handlers.spectral),
    "star": (schemas.MatrixRequest, handlers.star),
}


class RemoteError(Exception):
    def __init__(self, message: str, exit_code: int):
        super().__init__(message)
        self.exit_code = exit_code


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="troprate",
        description="Scores and rankings from pairwise comparison matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, normalize=False):
        p.add_argument("file", help="input document (JSON, or CSV for one matrix); '-' reads stdin")
        p.add_argument("--scale", choices=["multiplicative", "additive"], default=None,
                       help="comparison scale; overrides the document's scale field")
        p.add_argument("--tolerance", type=float, default=DEFAULT_TOL,
                       help="equality tolerance (default 1e-9)")
        p.add_argument("--quiet", action="store_true", help="suppress the stderr summary")
        p.add_argument("--format", choices=["json", "csv"], default="json",
                       help="stdout format (default json)")
        p.add_argument("--server", default=None, metavar="URL",
                       help="send the request to a running service instead of solving in-process")
        if normalize:
            p.add_argument("--normalize", choices=["none", "max", "sum"], default="max",
                           help="score normalization (default max)")

    add_common(sub.add_parser("rate", help="rate alternatives from one or more matrices"),
               normalize=True)
    add_common(sub.add_parser("ahp", help="two-level run driven by a criteria matrix"),
               normalize=True)
    add_common(sub.add_parser("check", help="reciprocity / consistency diagnostics"))
    add_common(sub.add_parser("spectral", help="spectral radius and witness cycle"))
    add_common(sub.add_parser("star", help="star of the normalized matrix"))

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    return parser


def _read_csv_matrix(text: str) -> list:
    rows = []
    for row in csv.reader(io.StringIO(text)):
        cells = [c for c in (cell.strip() for cell in row) if c != ""]
        if cells:
            rows.append(cells)
    if not rows:
        raise ValueError("CSV file contains no data")
    return rows


def _load_document(args) -> dict:
    if args.file == "-":
        text = sys.stdin.read()
        is_csv = False
    else:
        path = Path(args.file)
        text = path.read_text()
        is_csv = path.suffix.lower() == ".csv"
    if is_csv:
        doc = {
            "scale": args.scale or "multiplicative",
            "matrices": [{"name": Path(args.file).stem, "data": _read_csv_matrix(text)}],
        }
    else:
        doc = json.loads(text)
        if not isinstance(doc, dict):
            raise ValueError("document must be a JSON object")
        if args.scale is not None:
            doc["scale"] = args.scale
    return doc


def _build_request(args, doc: dict):
    model, _ = _COMMANDS[args.command]
    payload = dict(doc)
    payload["tolerance"] = args.tolerance
    if hasattr(args, "normalize"):
        payload["normalize"] = args.normalize
    return model.model_validate(payload)


def _dispatch(args, request):
    _, handler = _COMMANDS[args.command]
    if args.server is None:
        return handler(request)
    return _remote(args, request)


def _remote(args, request):
    import httpx

    url = args.server.rstrip("/") + "/" + args.command
    try:
        reply = httpx.post(url, json=request.model_dump(mode="json"), timeout=30.0)
    except httpx.HTTPError as exc:
        raise RemoteError(f"cannot reach server: {exc}", EXIT_FAILURE) from exc
    if reply.status_code == 200:
        model = {
            "rate": schemas.RatingResponse,
            "ahp": schemas.RatingResponse,
            "check": schemas.CheckResponse,
            "spectral": schemas.SpectralResponse,
            "star": schemas.StarResponse,
        }[args.command]
        return model.model_validate(reply.json())
    detail = reply.json().get("detail") if reply.headers.get("content-type", "").startswith("application/json") else None
    if isinstance(detail, dict) and detail.get("code") == "unsolvable":
        raise RemoteError(detail.get("message", "unsolvable"), EXIT_UNSOLVABLE)
    raise RemoteError(f"server rejected the request ({reply.status_code}): {detail}", EXIT_INVALID)


def _format_ranking(ranking) -> str:
    return " > ".join(" = ".join(str(i) for i in group) for group in ranking)


def _summary(args, response) -> str:
    if isinstance(response, schemas.RatingResponse):
        lines = [f"mu = {response.mu:g} "
                 + ("(input is consistent)" if response.lambda_consistent else "(approximation error)")]
        if response.weights is not None:
            lines.append("weights: " + ", ".join(f"{w:g}" for w in response.weights))
        lines.append("scores (" + response.normalization + "): "
                     + ", ".join(f"{s:g}" for s in response.scores))
        lines.append("ranking: " + _format_ranking(response.ranking))
        if not response.ranking_stable:
            lines.append("warning: generators disagree on the ranking:")
            for g, r in zip(response.generators, response.generator_rankings):
                lines.append("  " + ", ".join(f"{x:g}" for x in g) + " -> " + _format_ranking(r))
        return "\n".join(lines)
    if isinstance(response, schemas.CheckResponse):
        return (f"reciprocal: {response.is_reciprocal}, consistent: {response.is_consistent}, "
                f"max transitivity violation: {response.max_transitivity_violation:g}, "
                f"lambda: {response.radius:g}")
    if isinstance(response, schemas.SpectralResponse):
        cycle = " -> ".join(str(i) for i in response.witness_cycle) or "none"
        return f"lambda = {response.radius:g}, witness cycle: {cycle}"
    if isinstance(response, schemas.StarResponse):
        return f"lambda = {response.radius:g}, star is {len(response.star)}x{len(response.star)}"
    return ""


def _emit_csv(response) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    if isinstance(response, schemas.RatingResponse):
        ranks = {}
        for pos, group in enumerate(response.ranking, start=1):
            for alt in group:
                ranks[alt] = pos
        writer.writerow(["alternative", "score", "rank"])
        for idx, score in enumerate(response.scores, start=1):
            writer.writerow([idx, repr(score), ranks[idx]])
    elif isinstance(response, schemas.CheckResponse):
        writer.writerow(["is_reciprocal", "is_consistent", "max_transitivity_violation", "lambda"])
        writer.writerow([response.is_reciprocal, response.is_consistent,
                         repr(response.max_transitivity_violation), repr(response.radius)])
    elif isinstance(response, schemas.SpectralResponse):
        writer.writerow(["lambda", "witness_cycle"])
        writer.writerow([repr(response.radius), " ".join(str(i) for i in response.witness_cycle)])
    elif isinstance(response, schemas.StarResponse):
        for row in response.star:
            writer.writerow([repr(x) for x in row])
    return out.getvalue()


def _emit(args, response) -> None:
    if args.format == "json":
        print(json.dumps(response.model_dump(by_alias=True), indent=2))
    else:
        sys.stdout.write(_emit_csv(response))
    if not args.quiet:
        print(_summary(args, response), file=sys.stderr)


def _serve(args) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "serve":
        return _serve(args)
    try:
        doc = _load_document(args)
        request = _build_request(args, doc)
    except (OSError, json.JSONDecodeError, ValidationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    try:
        response = _dispatch(args, request)
    except UnsolvableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSOLVABLE
    except RemoteError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    _emit(args, response)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
