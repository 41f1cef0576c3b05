"""Runtime configuration, overridable from the environment (RDFSHIFT_*)."""

from __future__ import annotations

import os
from dataclasses import dataclass, field

__version__ = "0.1.0"

DEFAULT_BASE_IRI = "http://example.org/"


@dataclass
class FetchConfig:
    timeout: float = 10.0
    max_redirects: int = 5
    max_bytes: int = 5 * 1024 * 1024
    allow_local: bool = False  # refuse loopback/link-local targets unless enabled
    user_agent: str = f"rdfshift/{__version__}"


@dataclass
class LookupConfig:
    enabled: bool = False
    base_url: str = "http://prefix.cc"
    timeout: float = 2.0
    ttl: float = 86400.0
    negative_ttl: float = 3600.0
    fixture_path: str | None = None


@dataclass
class ServiceConfig:
    host: str = "127.0.0.1"
    port: int = 8000
    default_base: str = DEFAULT_BASE_IRI
    ui_dir: str | None = None
    fetch: FetchConfig = field(default_factory=FetchConfig)
    lookup: LookupConfig = field(default_factory=LookupConfig)

    @classmethod
    def from_env(cls, env=os.environ) -> "ServiceConfig":
        cfg = cls()
        cfg.host = env.get("RDFSHIFT_HOST", cfg.host)
        cfg.port = int(env.get("RDFSHIFT_PORT", cfg.port))
        cfg.default_base = env.get("RDFSHIFT_BASE", cfg.default_base)
        cfg.ui_dir = env.get("RDFSHIFT_UI_DIR", cfg.ui_dir)
        cfg.fetch.timeout = float(env.get("RDFSHIFT_FETCH_TIMEOUT", cfg.fetch.timeout))
        cfg.fetch.max_redirects = int(env.get("RDFSHIFT_FETCH_REDIRECTS", cfg.fetch.max_redirects))
        cfg.fetch.max_bytes = int(env.get("RDFSHIFT_FETCH_MAX_BYTES", cfg.fetch.max_bytes))
        cfg.fetch.allow_local = env.get("RDFSHIFT_FETCH_ALLOW_LOCAL", "") == "1"
        cfg.lookup.enabled = env.get("RDFSHIFT_LOOKUP_ENABLED", "") == "1"
        cfg.lookup.base_url = env.get("RDFSHIFT_LOOKUP_URL", cfg.lookup.base_url)
        cfg.lookup.timeout = float(env.get("RDFSHIFT_LOOKUP_TIMEOUT", cfg.lookup.timeout))
        cfg.lookup.fixture_path = env.get("RDFSHIFT_LOOKUP_FIXTURE", cfg.lookup.fixture_path)
        return cfg
