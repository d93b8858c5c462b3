"""Command-line entry points for the mining pipeline and the read API.

Precedence for the store path: --store flag, then REVIEWFORGE_STORE, then
the config file value.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import fields

from . import api, pipeline, summary
from .pipeline import PipelineConfig, PipelineError

_FLOAT_FIELDS = {"subjectivity_alpha", "subjectivity_threshold",
                 "hits_epsilon", "prune_threshold"}
_INT_FIELDS = {"anaphora_window", "hits_max_iter", "bags", "seed"}
_BOOL_FIELDS = {"include_llr"}


def _add_config_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="JSON config file; flags override it")
    for f in fields(PipelineConfig):
        flag = "--" + f.name.replace("_", "-")
        if f.name in _BOOL_FIELDS:
            parser.add_argument(flag, action="store_const", const=True, default=None)
        elif f.name in _FLOAT_FIELDS:
            parser.add_argument(flag, type=float, default=None)
        elif f.name in _INT_FIELDS:
            parser.add_argument(flag, type=int, default=None)
        else:
            parser.add_argument(flag, default=None)


def _config_from_args(args: argparse.Namespace) -> PipelineConfig:
    config = PipelineConfig.load(args.config) if args.config else PipelineConfig()
    env_store = os.environ.get("REVIEWFORGE_STORE")
    if env_store:
        config.store_path = env_store
    for f in fields(PipelineConfig):
        value = getattr(args, f.name, None)
        if value is not None:
            setattr(config, f.name, value)
    config.validate()
    return config


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reviewforge",
        description="Feature-level review mining pipeline and browse API")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
        ("ingest", "read the review corpus into the store"),
        ("train-subjectivity", "fit the subjective/objective sentence model"),
        ("extract", "extract feature/modifier/opinion components"),
        ("score", "reliability ranking and word polarity scoring"),
        ("summarize", "assemble and persist the results snapshot"),
        ("export", "write the component export file"),
        ("serve", "serve the read-only HTTP API over the snapshot"),
    ]:
        p = sub.add_parser(name, help=help_text)
        _add_config_flags(p)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = _config_from_args(args)
        if args.command == "ingest":
            n = pipeline.cmd_ingest(config)
            print(f"ingested {n} review(s) into {config.store_path}")
        elif args.command == "train-subjectivity":
            pipeline.cmd_train_subjectivity(config)
            print(f"subjectivity model written to {config.store_path}")
        elif args.command == "extract":
            components = pipeline.cmd_extract(config)
            print(f"extracted {len(components)} component(s)")
        elif args.command == "score":
            payload = pipeline.cmd_score(config)
            print(f"retained {len(payload['pairs'])} pair(s), "
                  f"{len(payload['retained_indices'])} component(s)")
        elif args.command == "summarize":
            store = pipeline.cmd_summarize(config)
            print(f"snapshot {store.snapshot_id} written to {config.store_path}")
        elif args.command == "export":
            out = pipeline.cmd_export(config)
            print(f"export written to {out}")
        elif args.command == "serve":
            return _serve(config)
    except (PipelineError, ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def _serve(config: PipelineConfig) -> int:
    import uvicorn

    store = summary.load_store(config.store_path)
    app = api.create_app(store)
    host, _, port = config.listen.partition(":")
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port or 8647))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
