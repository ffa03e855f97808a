"""Command line: serve the HTTP interface, seed a store file, and run
the reporting paths without a browser.

Local commands act through a system session that skips role lookup;
everything they touch still flows through the same services the HTTP
interface uses.
"""
from __future__ import annotations

import argparse
import os
import sys
from datetime import date

from . import api, report
from .app import build_app
from .errors import UuisError


def _add_store_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--backend", choices=("memory", "file"),
                        default="memory")
    parser.add_argument("--data", help="store file for the file backend")
    parser.add_argument("--fixture",
                        help="JSON fixture to seed an empty store")


def _build(args):
    return build_app(args.backend, data_path=args.data,
                     fixture_path=args.fixture,
                     search_config_path=getattr(args, "config", None),
                     outbox_path=getattr(args, "outbox", None))


def cmd_serve(args) -> int:
    app = _build(args)
    server = api.serve(app, host=args.host, port=args.port)
    host, port = server.server_address[:2]
    print(f"listening on http://{host}:{port}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
        app.close()
    return 0


def cmd_load(args) -> int:
    if args.backend != "file":
        print("load only makes sense with --backend file",
              file=sys.stderr)
        return 2
    app = _build(args)
    try:
        tables = app.store.dump()["entities"]
        counts = {kind: len(rows) for kind, rows in tables.items() if rows}
        total = sum(counts.values())
        print(f"{args.data}: {total} rows across {len(counts)} kinds")
    finally:
        app.close()
    return 0


def cmd_report_assets(args) -> int:
    app = _build(args)
    try:
        session = app.auth.open_system_session()
        rows = app.assets.asset_report(session, args.group_by)
        out = args.out or f"asset-report-{args.group_by.lower()}.csv"
        figure = args.figure or os.path.splitext(out)[0] + ".png"
        delimiter = "\t" if args.delimiter == "tab" else args.delimiter
        report.write_delimited(rows, out, delimiter=delimiter)
        report.render_figure(rows, figure,
                             f"Assets by {args.group_by}")
        print(out)
        print(figure)
    finally:
        app.close()
    return 0


def cmd_licenses_expiring(args) -> int:
    app = _build(args)
    try:
        session = app.auth.open_system_session()
        as_of = args.as_of or date.today().isoformat()
        watch = app.software.licenses_near_expiry(session, args.days,
                                                  as_of=as_of)
        for line in report.expiry_lines(watch):
            print(line)
    finally:
        app.close()
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uuis", description="university inventory service")
    sub = parser.add_subparsers(dest="command", required=True)

    serve = sub.add_parser("serve", help="run the HTTP interface")
    _add_store_args(serve)
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8750)
    serve.add_argument("--config",
                       help="location search field configuration file")
    serve.add_argument("--outbox",
                       help="JSONL file collecting outgoing reset mail")
    serve.set_defaults(func=cmd_serve)

    load = sub.add_parser("load", help="seed a store file from a fixture")
    _add_store_args(load)
    load.set_defaults(func=cmd_load)

    rep = sub.add_parser("report", help="render reports to files")
    rep_sub = rep.add_subparsers(dest="report_kind", required=True)
    assets = rep_sub.add_parser("assets",
                                help="asset counts along one dimension")
    _add_store_args(assets)
    assets.add_argument("--group-by", required=True,
                        help="Category, Status, Owner or LocationID")
    assets.add_argument("--out",
                        help="delimited output path (default "
                             "asset-report-<dimension>.csv)")
    assets.add_argument("--figure",
                        help="chart path (default: output stem + .png)")
    assets.add_argument("--delimiter", default=",",
                        help="field delimiter, or the word 'tab'")
    assets.set_defaults(func=cmd_report_assets)

    lic = sub.add_parser("licenses", help="license upkeep views")
    lic_sub = lic.add_subparsers(dest="license_kind", required=True)
    expiring = lic_sub.add_parser(
        "expiring", help="licenses expiring within a window, plus the "
                         "already expired, as tab-separated text")
    _add_store_args(expiring)
    expiring.add_argument("--days", type=int, required=True)
    expiring.add_argument("--as-of", dest="as_of",
                          help="reference day, YYYY-MM-DD (default today)")
    expiring.set_defaults(func=cmd_licenses_expiring)

    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except UuisError as err:
        print(f"error: {err.code}: {err}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
