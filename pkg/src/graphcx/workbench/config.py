import argparse
from dataclasses import dataclass, field
from typing import Optional

from graphcx.chainspace import DEFAULT_CAPS, Caps
from graphcx.errors import PreconditionError
from graphcx.homology import DEFAULT_PRIMES

FORMATS = ("text", "csv", "json")


def parse_loop_range(value: str) -> tuple[int, ...]:
    """`3` or `2-4` as a tuple of loop degrees."""
    low, sep, high = value.partition("-")
    try:
        start = int(low)
        stop = int(high) if sep else start
    except ValueError:
        raise PreconditionError(f"bad loop range {value!r}") from None
    if start < 0 or stop < start:
        raise PreconditionError(f"bad loop range {value!r}")
    return tuple(range(start, stop + 1))


@dataclass(frozen=True)
class RunConfig:
    """Everything a command depends on. Equal configs give equal output."""

    command: str
    loops: tuple[int, ...] = (2, 3, 4)
    vertices: Optional[int] = None
    connected: bool = False
    one_pi: bool = False
    op: str = "E"
    from_vertices: Optional[int] = None
    seed: int = 0
    samples: int = 200
    exhaustive_limit: int = 64
    exhaustive_loops: int = 3
    fmt: str = "text"
    out: Optional[str] = None
    only: tuple[str, ...] = ()
    replay: Optional[str] = None
    jobs: Optional[int] = None
    cache: Optional[str] = None
    primes: tuple[int, ...] = DEFAULT_PRIMES
    caps: Caps = field(default=DEFAULT_CAPS)

    def __post_init__(self):
        if self.fmt not in FORMATS:
            raise PreconditionError(f"unknown format {self.fmt!r}")
        if self.samples < 1:
            raise PreconditionError("samples must be positive")

    @property
    def max_loops(self) -> int:
        return max(self.loops)

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        caps = Caps(
            max_loop_degree=args.max_loops,
            max_vertices=args.max_vertices,
            max_classes=args.max_classes,
        )
        return cls(
            command=args.command,
            loops=parse_loop_range(args.loop),
            vertices=getattr(args, "vertices", None),
            connected=getattr(args, "connected", False),
            one_pi=getattr(args, "one_pi", False),
            op=getattr(args, "op", "E"),
            from_vertices=getattr(args, "from_vertices", None),
            seed=getattr(args, "seed", 0),
            samples=getattr(args, "samples", 200),
            exhaustive_limit=getattr(args, "exhaustive_limit", 64),
            exhaustive_loops=getattr(args, "exhaustive_loops", 3),
            fmt=args.format,
            out=args.out,
            only=tuple(getattr(args, "only", None) or ()),
            replay=getattr(args, "replay", None),
            jobs=args.jobs,
            cache=args.cache,
            primes=tuple(args.primes or DEFAULT_PRIMES),
            caps=caps,
        )
