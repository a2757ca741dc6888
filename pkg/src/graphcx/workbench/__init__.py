from .config import RunConfig, parse_loop_range
from .suite import IDENTITIES, replay, run_suite

__all__ = ["IDENTITIES", "RunConfig", "parse_loop_range", "replay", "run_suite"]
