from .cli import main, run
from .config import ExperimentConfig, make_config, parse_range, read_config_file

__all__ = ["ExperimentConfig", "main", "make_config", "parse_range", "read_config_file", "run"]
