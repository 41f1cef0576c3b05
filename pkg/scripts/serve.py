#!/usr/bin/env python3
"""Run the conversion service with uvicorn.

    python scripts/serve.py [--host 0.0.0.0] [--port 8000] [--ui-dir frontend/dist]

Environment overrides (RDFSHIFT_*) are honored; flags win over both.
Enable the live prefix lookup with RDFSHIFT_LOOKUP_ENABLED=1.
"""

from __future__ import annotations

import argparse

import uvicorn

from rdfshift.config import ServiceConfig
from rdfshift.service import create_app


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--host")
    parser.add_argument("--port", type=int)
    parser.add_argument("--ui-dir", help="directory with the built browser UI")
    parser.add_argument("--allow-local-fetch", action="store_true",
                        help="permit fetching from loopback addresses (test rigs)")
    args = parser.parse_args()

    config = ServiceConfig.from_env()
    if args.host:
        config.host = args.host
    if args.port:
        config.port = args.port
    if args.ui_dir:
        config.ui_dir = args.ui_dir
    if args.allow_local_fetch:
        config.fetch.allow_local = True

    uvicorn.run(create_app(config), host=config.host, port=config.port)


if __name__ == "__main__":
    main()
