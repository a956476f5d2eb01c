"""Build/serve configuration with flag parsing and config-file overlay.

Flags come first; when the SED_CONFIG environment variable points at a JSON
file, values found there override the flags (the file is the deployment's
source of truth).
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, replace
from pathlib import Path

ENV_CONFIG = "SED_CONFIG"


@dataclass(frozen=True)
class BuildConfig:
    input_dir: str = "data/seed"
    out_dir: str = "out"
    admit_pre_registered: bool = True
    max_chain_depth: int = 4
    false_similarity_threshold: float = 0.25
    hits_per_page: int = 10
    port: int = 8000

    def check(self) -> None:
        if not (0 < self.false_similarity_threshold <= 1):
            raise ValueError("false similarity threshold must be in (0, 1]")
        if self.max_chain_depth < 1:
            raise ValueError("max chain depth must be >= 1")
        if self.hits_per_page < 1:
            raise ValueError("hits per page must be >= 1")


_FILE_KEYS = {
    "input": "input_dir",
    "out": "out_dir",
    "admit_pre_registered": "admit_pre_registered",
    "max_chain_depth": "max_chain_depth",
    "false_threshold": "false_similarity_threshold",
    "hits_per_page": "hits_per_page",
    "port": "port",
}


def apply_config_file(config: BuildConfig, path: str | None = None) -> BuildConfig:
    """Overlay values from SED_CONFIG (or an explicit path) onto the config."""
    path = path or os.environ.get(ENV_CONFIG)
    if not path:
        return config
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    overrides = {}
    for key, attr in _FILE_KEYS.items():
        if key in data:
            overrides[attr] = data[key]
    config = replace(config, **overrides)
    config.check()
    return config
