"""Command-line front end.

Every subcommand builds the same request model the HTTP service accepts and
dispatches it in-process by default, or to a running service when --server
is given.  Exit codes: 0 ok, 1 verification failure, 2 usage/parse error,
3 domain error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import GeometryError, SceneFormatError
from .service import handlers
from .service import schemas as S
from .verify import SUITES

_FLOAT = "{:.12g}".format


def _point_arg(text: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected 'u,v', got {text!r}")
    try:
        return S.PointModel(u=float(parts[0]), v=float(parts[1]))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad number in {text!r}") from exc


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ephgeo",
        description="Invariant distances, geodesics and figures for the "
        "elliptic/parabolic/hyperbolic upper half-plane.",
    )
    parser.add_argument(
        "--server",
        default="",
        help="base URL of a running service; default runs in-process",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("distance", help="invariant distance between two points")
    p.add_argument("--geometry", default="elliptic")
    p.add_argument("--flavor", default="pp")
    p.add_argument("--label", default="identity")
    p.add_argument("--z", type=_point_arg, required=True)
    p.add_argument("--w", type=_point_arg, required=True)

    p = sub.add_parser("geodesic", help="geodesic cycles through i or through a pair")
    p.add_argument("--geometry", default="parabolic")
    p.add_argument("--flavor", default="pp")
    p.add_argument("--t", type=float, default=None)
    p.add_argument("--w1", type=_point_arg, default=None)
    p.add_argument("--w2", type=_point_arg, default=None)
    p.add_argument("--branch", default="both", choices=["spacelike", "timelike", "both"])

    p = sub.add_parser("orbit", help="equidistant orbit of a point, as CSV")
    p.add_argument("--geometry", default="elliptic")
    p.add_argument("--subgroup", default="")
    p.add_argument("--center", type=_point_arg, required=True)
    p.add_argument("--start", type=float, required=True)
    p.add_argument("--stop", type=float, required=True)
    p.add_argument("--count", type=int, default=129)

    p = sub.add_parser("classify", help="triangle-inequality side of z against a pair")
    p.add_argument("--flavor", default="pp")
    p.add_argument("--label", default="identity")
    p.add_argument("--w1", type=_point_arg, required=True)
    p.add_argument("--w2", type=_point_arg, required=True)
    p.add_argument("--z", type=_point_arg, required=True)
    p.add_argument("--branch", type=int, default=0)

    p = sub.add_parser("render", help="render a scene file to SVG (and CSV)")
    p.add_argument("scene", help="scene file path")
    p.add_argument("--out", default="", help="output SVG path (default: scene stem .svg)")
    p.add_argument("--csv", default="", help="also write curve samples to this CSV path")

    p = sub.add_parser("cayley", help="map a dual-plane point to the flavored disk")
    p.add_argument("--flavor", default="pp")
    p.add_argument("--point", type=_point_arg, required=True)
    p.add_argument("--inverse", action="store_true")

    p = sub.add_parser("length", help="invariant length of a sampled curve from CSV")
    p.add_argument("--geometry", default="elliptic")
    p.add_argument("--timelike", action="store_true")
    p.add_argument("--csv", required=True, help="CSV with T,u,v or curve_id,T,u,v rows")
    p.add_argument("--curve-id", default="", help="curve to select when the CSV has several")

    p = sub.add_parser("verify", help="run a seeded numerical self-check suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES) + ["all"])
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


_ROUTES = {
    "distance": ("/distance", handlers.handle_distance, S.DistanceResponse),
    "geodesic": ("/geodesic", handlers.handle_geodesic, S.GeodesicResponse),
    "orbit": ("/orbit", handlers.handle_orbit, S.OrbitResponse),
    "classify": ("/classify", handlers.handle_classify, S.ClassifyResponse),
    "cayley": ("/cayley", handlers.handle_cayley, S.CayleyResponse),
    "length": ("/length", handlers.handle_length, S.LengthResponse),
    "render": ("/render", handlers.handle_render, S.RenderResponse),
}


class RemoteError(Exception):
    def __init__(self, exit_code: int, message: str):
        super().__init__(message)
        self.exit_code = exit_code


def _call(server: str, command: str, request):
    path, handler, model = _ROUTES[command]
    if not server:
        return handler(request)
    import httpx

    resp = httpx.post(server.rstrip("/") + path, json=request.model_dump(), timeout=120.0)
    if resp.status_code == 200:
        return model.model_validate(resp.json())
    _raise_remote(resp)


def _call_verify(server: str, request: S.VerifyRequest) -> list:
    if not server:
        return handlers.handle_verify(request)
    import httpx

    resp = httpx.post(server.rstrip("/") + "/verify", json=request.model_dump(), timeout=600.0)
    if resp.status_code == 200:
        return [S.VerifyResponse.model_validate(item) for item in resp.json()]
    _raise_remote(resp)


def _raise_remote(resp) -> None:
    try:
        payload = resp.json()
        message = f"{payload.get('error', 'error')}: {payload.get('detail', '')}"
    except ValueError:
        message = f"HTTP {resp.status_code}"
    raise RemoteError(2 if resp.status_code == 400 else 3, message)


def _cmd_distance(args) -> int:
    resp = _call(
        args.server,
        "distance",
        S.DistanceRequest(
            geometry=args.geometry, flavor=args.flavor, label=args.label, z=args.z, w=args.w
        ),
    )
    print(f"value={_FLOAT(resp.value)}")
    print(f"core={_FLOAT(resp.core)}")
    print(f"interval_type={resp.interval_type}")
    if resp.degenerate:
        print(f"degenerate={resp.degenerate}")
    return 0


def _cmd_geodesic(args) -> int:
    resp = _call(
        args.server,
        "geodesic",
        S.GeodesicRequest(
            geometry=args.geometry,
            flavor=args.flavor,
            t=args.t,
            w1=args.w1,
            w2=args.w2,
            branch=args.branch,
        ),
    )
    print(f"count={len(resp.cycles)}")
    for idx, c in enumerate(resp.cycles, start=1):
        print(f"cycle{idx}={c.tag}")
        print(f"cycle{idx}.coefficients={_FLOAT(c.k)},{_FLOAT(c.l)},{_FLOAT(c.n)},{_FLOAT(c.m)}")
        print(f"cycle{idx}.mode={c.mode}")
        if c.degenerate:
            print(f"cycle{idx}.degenerate=true")
    for f in resp.foci:
        print(f"focus.{f.notion}={_FLOAT(f.u)},{_FLOAT(f.v)}")
        print(f"focus.{f.notion}.on_axis={'true' if f.on_axis else 'false'}")
    return 0


def _cmd_orbit(args) -> int:
    resp = _call(
        args.server,
        "orbit",
        S.OrbitRequest(
            geometry=args.geometry,
            subgroup=args.subgroup,
            center=args.center,
            start=args.start,
            stop=args.stop,
            count=args.count,
        ),
    )
    print(f"# subgroup={resp.subgroup}")
    print("T,u,v")
    for t, u, v in zip(resp.ts, resp.us, resp.vs):
        print(f"{_FLOAT(t)},{_FLOAT(u)},{_FLOAT(v)}")
    return 0


def _cmd_classify(args) -> int:
    resp = _call(
        args.server,
        "classify",
        S.ClassifyRequest(
            flavor=args.flavor,
            label=args.label,
            w1=args.w1,
            w2=args.w2,
            z=args.z,
            branch=args.branch,
        ),
    )
    print(f"class={resp.triangle_class}")
    if resp.diff is not None:
        print(f"diff={_FLOAT(resp.diff)}")
    return 0


def _cmd_render(args) -> int:
    scene_path = Path(args.scene)
    try:
        text = scene_path.read_text()
    except OSError as exc:
        raise SceneFormatError(f"cannot read scene file: {exc}") from exc
    resp = _call(
        args.server,
        "render",
        S.RenderRequest(
            scene_text=text, include_curves_csv=bool(args.csv), include_raster_csv=bool(args.csv)
        ),
    )
    out = Path(args.out) if args.out else scene_path.with_suffix(".svg")
    stem = out.with_suffix("")
    multi = len(resp.panels) > 1
    for panel in resp.panels:
        svg_path = Path(f"{stem}-{panel.name}.svg") if multi else out
        svg_path.write_text(panel.svg)
        print(f"wrote={svg_path}")
        if args.csv:
            csv_base = Path(args.csv).with_suffix("")
            csv_path = Path(f"{csv_base}-{panel.name}.csv") if multi else Path(args.csv)
            if panel.curves_csv is not None:
                csv_path.write_text(panel.curves_csv)
                print(f"wrote={csv_path}")
            if panel.raster_csv is not None:
                raster_path = csv_path.with_name(csv_path.stem + "-raster.csv")
                raster_path.write_text(panel.raster_csv)
                print(f"wrote={raster_path}")
    return 0


def _cmd_cayley(args) -> int:
    resp = _call(
        args.server,
        "cayley",
        S.CayleyRequest(flavor=args.flavor, point=args.point, inverse=args.inverse),
    )
    print(f"u={_FLOAT(resp.u)}")
    print(f"v={_FLOAT(resp.v)}")
    print(f"in_disk={'true' if resp.in_disk else 'false'}")
    return 0


def _read_length_csv(path: str, curve_id: str) -> list:
    try:
        lines = [
            ln.strip()
            for ln in Path(path).read_text().splitlines()
            if ln.strip() and not ln.lstrip().startswith("#")
        ]
    except OSError as exc:
        raise ValueError(f"cannot read CSV: {exc}") from exc
    if not lines:
        raise ValueError("empty CSV")
    header = [h.strip().lower() for h in lines[0].split(",")]
    if header == ["curve_id", "t", "u", "v"]:
        rows = [ln.split(",") for ln in lines[1:]]
        ids = sorted({r[0] for r in rows})
        chosen = curve_id or (ids[0] if len(ids) == 1 else "")
        if not chosen:
            raise ValueError(f"CSV holds several curves {ids}; pick one with --curve-id")
        if chosen not in ids:
            raise ValueError(f"curve id {chosen!r} not in CSV (has {ids})")
        return [(float(r[1]), float(r[2]), float(r[3])) for r in rows if r[0] == chosen]
    start = 1 if header == ["t", "u", "v"] else 0
    return [tuple(float(x) for x in ln.split(",")) for ln in lines[start:]]


def _cmd_length(args) -> int:
    samples = _read_length_csv(args.csv, args.curve_id)
    resp = _call(
        args.server,
        "length",
        S.LengthRequest(geometry=args.geometry, timelike=args.timelike, samples=samples),
    )
    print(f"value={_FLOAT(resp.value)}")
    print(f"samples={resp.samples}")
    return 0


def _cmd_verify(args) -> int:
    reports = _call_verify(args.server, S.VerifyRequest(suite=args.suite, seed=args.seed))
    all_ok = True
    for rep in reports:
        for check in rep.checks:
            mark = "PASS" if check.passed else "FAIL"
            print(f"[{mark}] {rep.suite}.{check.name}: {check.detail}")
        all_ok = all_ok and rep.passed
    print(f"result={'pass' if all_ok else 'fail'}")
    return 0 if all_ok else 1


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


_COMMANDS = {
    "distance": _cmd_distance,
    "geodesic": _cmd_geodesic,
    "orbit": _cmd_orbit,
    "classify": _cmd_classify,
    "render": _cmd_render,
    "cayley": _cmd_cayley,
    "length": _cmd_length,
    "verify": _cmd_verify,
    "serve": _cmd_serve,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except SceneFormatError as exc:
        print(f"scene error: {exc}", file=sys.stderr)
        return 2
    except GeometryError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except RemoteError as exc:
        print(str(exc), file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"invalid request: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
