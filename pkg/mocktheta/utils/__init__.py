"""Utilities: rendering, report I/O, configuration."""

from mocktheta.utils.config import Config, get_data_dir, load_config
from mocktheta.utils.render import format_cyc, format_series

__all__ = [
    "Config",
    "get_data_dir",
    "load_config",
    "format_cyc",
    "format_series",
]
