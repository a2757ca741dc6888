"""The identity suite behind `graphcx verify`."""

import json
import logging
import random
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import islice, product as cartesian
from typing import Any, Callable, Optional

from fsspec.callbacks import DEFAULT_CALLBACK, Callback

from graphcx.chainspace import Caps, Chain, enumerate_basis, monomial, trivalent_bound
from graphcx.errors import PreconditionError
from graphcx.executors import map_ordered
from graphcx.graphcore import GraphClass, canonicalize, parse_graph_text
from graphcx.homology import (
    check_cycle_triviality,
    check_triviality,
    cycle_basis,
    cycle_pairs,
)
from graphcx.operators import identities
from graphcx.operators.identities import residual_terms

from .config import RunConfig

logger = logging.getLogger(__name__)

SCHEMA = 1
SEARCH_CAPS = Caps(max_loop_degree=5, max_vertices=5)


def chain_text(c: Chain) -> str:
    """A monomial with coefficient 1 is its compact code; anything else is
    `coeff*code` terms joined by `;`."""
    items = c.items_sorted()
    if len(items) == 1 and items[0][1] == 1:
        return items[0][0].compact_code
    return ";".join(f"{coeff}*{cls.compact_code}" for cls, coeff in items)


def parse_chain_text(text: str) -> Chain:
    terms = []
    for token in text.split(";"):
        coeff, sep, code = token.rpartition("*")
        graph_class, sign = canonicalize(parse_graph_text(code))
        if not sign:
            raise PreconditionError(f"{code!r} is zero in the complex")
        terms.append((graph_class, Fraction(coeff if sep else 1) * sign))
    return Chain(terms)


def _relabelling(config: RunConfig, x: Chain):
    (graph_class,) = x
    rng = random.Random(f"{config.seed}:{graph_class.compact_code}")
    permutation = list(range(graph_class.vertex_count))
    rng.shuffle(permutation)
    half_edges = graph_class.representative().structure.half_edges
    flips = [h for h in half_edges[::2] if rng.random() < 0.5]
    return identities.check_relabelling(graph_class, permutation, flips)


def _aut_powers(config: RunConfig, x: Chain) -> int:
    (graph_class,) = x
    return sum(
        1 for n in (1, 2, 3) if identities.check_aut_powers(graph_class, n)
    )


def _unseeded(check: Callable[..., Any]) -> Callable[..., Any]:
    def run(config: RunConfig, *inputs: Chain):
        return check(*inputs)

    return run


def _triviality(config: RunConfig, x: Chain, y: Chain) -> Chain:
    return check_triviality(x, y, caps=config.caps)


def _cycle_triviality(config: RunConfig, z: Chain):
    return check_cycle_triviality(z, caps=config.caps)


def _raises_edge_count(x: Chain, y: Chain) -> bool:
    ((a,), (b,)) = (tuple(x), tuple(y))
    return b.vertex_count == a.vertex_count + 1 and b.edge_count == a.edge_count + 1


@dataclass(frozen=True)
class Identity:
    name: str
    arity: int
    run: Callable[..., Any]
    pool: str = "connected"
    related: Optional[Callable[..., bool]] = None


def _identity(name, arity, pool="connected", related=None, run=None):
    run = run or _unseeded(getattr(identities, f"check_{name}"))
    return Identity(name, arity, run, pool, related)


IDENTITIES: tuple[Identity, ...] = (
    _identity("d_squared", 1, pool="any"),
    _identity("anticommutation", 1, pool="any"),
    _identity("orientation_lemma", 1),
    _identity("relabelling", 1, pool="any", run=_relabelling),
    _identity("aut_powers", 1, run=_aut_powers),
    _identity("expansion", 2),
    _identity("derivation", 2),
    _identity("coderivation", 1, pool="any"),
    _identity("bracket_defect", 2),
    _identity("bracket_symmetry", 2),
    _identity("jacobi", 3),
    _identity("gerstenhaber", 3),
    _identity("bv", 3),
    _identity("cobracket_forms", 1, pool="any"),
    _identity("cobracket_product", 2),
    _identity("mu_theta", 1),
    _identity("delta_forms", 1, pool="any"),
    _identity("delta_squared", 1, pool="any"),
    _identity("duality", 2, pool="any", related=_raises_edge_count),
    _identity("product_duality", 2, pool="any"),
    _identity("compatibility", 2, pool="one_pi"),
    _identity("closure", 2, pool="one_pi"),
    _identity("incompatible_pair", 0, run=_unseeded(identities.check_compatibility)),
    _identity("mu1_homotopy", 2),
    _identity("alpha_homotopy", 1, pool="any"),
    _identity("delta1_homotopy", 1),
    _identity("bracket_descent", 2),
    _identity("cobracket_descent", 1),
    _identity("triviality", 2, pool="cycles", run=_triviality),
    _identity("cycle_triviality", 1, pool="cycle", run=_cycle_triviality),
)
BY_NAME = {identity.name: identity for identity in IDENTITIES}


def select(only: Sequence[str]) -> list[Identity]:
    unknown = sorted(set(only) - BY_NAME.keys())
    if unknown:
        raise PreconditionError(f"unknown identities: {', '.join(unknown)}")
    return [identity for identity in IDENTITIES if not only or identity.name in only]


def pool(kind: str, config: RunConfig) -> list[Chain]:
    """Inputs drawn from slices with loop degree up to the configured one."""
    if kind in ("cycle", "cycles"):
        raise PreconditionError("cycle inputs come from kernel bases")
    caps = config.caps
    classes: list[GraphClass] = []
    for b in range(2, config.max_loops + 1):
        top = min(trivalent_bound(b), config.vertices or caps.max_vertices)
        for v in range(1, top + 1):
            classes.extend(enumerate_basis(v, b, connected=kind != "any", caps=caps))
    if kind == "one_pi":
        classes = [cls for cls in classes if cls.is_1PI]
    elif config.one_pi:
        classes = [cls for cls in classes if not cls.has_bridge]
    return [monomial(cls) for cls in sorted(classes)]


def _loop_degree(inputs: tuple[Chain, ...]) -> int:
    return max((cls.loop_degree for c in inputs for cls in c), default=0)


def _sample(
    indices: list[int], count: int, config: RunConfig, identity: Identity, stage: str
) -> list[int]:
    if len(indices) <= count:
        return indices
    rng = random.Random(f"{config.seed}:{identity.name}:{stage}")
    return sorted(rng.sample(indices, count))


def input_tuples(identity: Identity, config: RunConfig) -> list[tuple[Chain, ...]]:
    """Tuples within `exhaustive_loops` are all kept unless there are more
    than `exhaustive_limit`; the rest contribute `samples` seeded draws.
    The result stays in enumeration order."""
    tuples: list[tuple[Chain, ...]]
    if identity.pool == "cycles":
        tuples = list(cycle_pairs(config.caps))
    elif identity.pool == "cycle":
        tuples = [(z,) for z in cycle_basis(config.caps, config.max_loops)]
    else:
        inputs = pool(identity.pool, config)
        tuples = list(cartesian(inputs, repeat=identity.arity))
        if identity.related is not None:
            tuples = [t for t in tuples if identity.related(*t)]
    small = [i for i, t in enumerate(tuples) if _loop_degree(t) <= config.exhaustive_loops]
    large = [i for i, t in enumerate(tuples) if _loop_degree(t) > config.exhaustive_loops]
    if len(small) > config.exhaustive_limit:
        small = _sample(small, config.samples, config, identity, "small")
    chosen = small + _sample(large, config.samples, config, identity, "large")
    return [tuples[i] for i in sorted(chosen)]


def _entry(name: str, inputs: Sequence[Chain], residual) -> dict:
    terms = residual_terms(residual)
    return {
        "identity": name,
        "inputs": [chain_text(c) for c in inputs],
        "residual_terms": terms,
        "passed": not terms,
    }


def run_search(config: RunConfig) -> dict:
    """Bridged pairs need not satisfy compatibility; the entry passes when a
    violating pair turns up."""
    candidates = [
        cls
        for b in range(2, SEARCH_CAPS.max_loop_degree + 1)
        for v in range(1, min(trivalent_bound(b), SEARCH_CAPS.max_vertices) + 1)
        for cls in enumerate_basis(v, b, caps=SEARCH_CAPS)
    ]
    found = identities.find_incompatible_pair(candidates)
    if found is None:
        return {
            "identity": "incompatible_pair",
            "inputs": [],
            "residual_terms": 0,
            "passed": False,
        }
    x, y, residual = found
    return {
        "identity": "incompatible_pair",
        "inputs": [x.compact_code, y.compact_code],
        "residual_terms": len(residual),
        "passed": True,
    }


def _replay_search(config: RunConfig, inputs: Sequence[Chain]) -> dict:
    identity = BY_NAME["incompatible_pair"]
    entry = _entry(identity.name, inputs, identity.run(config, *inputs))
    entry["passed"] = not entry["passed"]
    return entry


def _report(config: RunConfig, entries: list[dict]) -> dict:
    return {
        "schema": SCHEMA,
        "seed": config.seed,
        "samples": config.samples,
        "loops": list(config.loops),
        "passed": all(entry["passed"] for entry in entries),
        "entries": entries,
    }


def _check(config: RunConfig) -> Callable[[tuple], dict]:
    def run(task: tuple[Identity, tuple[Chain, ...]]) -> dict:
        identity, inputs = task
        return _entry(identity.name, inputs, identity.run(config, *inputs))

    return run


def run_suite(config: RunConfig, callback: Callback = DEFAULT_CALLBACK) -> dict:
    selected = select(config.only)
    tasks = []
    for identity in selected:
        if identity.arity:
            tuples = input_tuples(identity, config)
            logger.info("%s: %d input tuples", identity.name, len(tuples))
            tasks.extend((identity, inputs) for inputs in tuples)
    results = iter(map_ordered(_check(config), tasks, jobs=config.jobs, callback=callback))
    entries = []
    counts = Counter(identity.name for identity, _ in tasks)
    for identity in selected:
        if identity.arity:
            entries.extend(islice(results, counts[identity.name]))
        else:
            entries.append(run_search(config))
    return _report(config, entries)


def replay(config: RunConfig, text: str) -> dict:
    """Re-run the entries of an earlier report with its seed."""
    previous = json.loads(text)
    if previous.get("schema") != SCHEMA:
        raise PreconditionError(f"unsupported report schema {previous.get('schema')!r}")
    config = replace(config, seed=previous.get("seed", config.seed))
    entries = []
    for entry in previous["entries"]:
        (identity,) = select([entry["identity"]])
        inputs = [parse_chain_text(code) for code in entry["inputs"]]
        if identity.arity:
            entries.append(_entry(identity.name, inputs, identity.run(config, *inputs)))
        elif inputs:
            entries.append(_replay_search(config, inputs))
        else:
            entries.append(run_search(config))
    return _report(config, entries)
