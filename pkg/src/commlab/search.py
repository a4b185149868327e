"""Optimization-driven sharpness and counterexample search over the catalog.

Hill climbing with hypothesis-preserving moves: eigenvalue parts are jittered
inside their declared bands (endpoints re-pinned) and conjugating bases drift
along random unitary steps, so every visited instance still satisfies the
entry's hypotheses. Restarts draw fresh instances; the global best is merged
deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from commlab.core import HypothesisError, InputError
from commlab.catalog import (
    DEFAULT_TOL,
    CatalogEntry,
    InequalityReport,
    evaluate,
    get_entry,
)
from commlab.instances import (
    Fingerprint,
    Instance,
    derive_seed,
    instance_to_json,
    make_instance,
    reassemble,
)

__all__ = ["perturb", "SearchState", "maximize_ratio", "search_state_to_json"]

_STAGNATION_LIMIT = 50
_STEP_FLOOR = 1e-6
_RATIO_DENOM_FLOOR = 1e-9


def perturb(inst: Instance, scale: float, seed: int) -> Instance:
    """Hypothesis-preserving random move of one instance.

    Spectra move by uniform noise of width ``scale`` clamped to their bands
    with endpoints re-pinned; bases multiply by exp(K) for random
    skew-Hermitian K with |K| <= scale. Deterministic in (inst, scale, seed).
    """
    if scale <= 0:
        raise HypothesisError("perturb requires scale > 0")
    if inst.internals is None:
        raise HypothesisError("instance carries no generator internals; regenerate it via a recipe")
    rng = np.random.default_rng(derive_seed(seed, 0x9E27))
    old = inst.internals["factors"]
    factors = {}
    for name, factor in sorted(old.items()):
        if name == "T" and old.get("S") is factor:
            factors["T"] = factors["S"]  # keep a tied pair tied
            continue
        factors[name] = factor.perturbed(scale, rng)
    return reassemble(inst, factors, seed)


def _objective(entry: CatalogEntry, report: InequalityReport) -> tuple[str, float]:
    """Scalar to maximize: closeness to (or excess over) the bound.

    Ratio of the bounded side to the bounding side when the denominator is
    healthy; the raw signed violation otherwise (and for equality claims).
    """
    if entry.direction == "eq":
        return "margin", -report.margin
    if entry.direction == "ge":
        if report.lhs >= _RATIO_DENOM_FLOOR:
            return "ratio", report.rhs / report.lhs
        return "margin", report.rhs - report.lhs
    if report.rhs >= _RATIO_DENOM_FLOOR:
        return "ratio", report.lhs / report.rhs
    return "margin", report.lhs - report.rhs


@dataclass(frozen=True)
class SearchState:
    """Best instance found for one entry, with enough context to replay."""

    entry: str
    dim: int
    iterations: int
    restarts: int
    master_seed: int
    objective_kind: str
    best_objective: float
    best_instance: Instance
    best_report: InequalityReport
    trace: tuple[tuple[int, float], ...]
    step: float


def maximize_ratio(
    entry: CatalogEntry | str,
    dim: int,
    iterations: int,
    restarts: int,
    master_seed: int = 0,
    recipe: str | None = None,
    tol: float = DEFAULT_TOL,
) -> SearchState:
    """Hill-climb the entry's tightness objective over hypothesis-satisfying
    instances.

    Each restart draws a fresh instance, then proposes ``iterations``
    perturbed candidates, halving the step after 50 non-improving proposals
    (floor 1e-6). Deterministic in all arguments; ties across restarts break
    by fingerprint order.
    """
    if isinstance(entry, str):
        entry = get_entry(entry)
    if iterations < 1:
        raise InputError("iterations must be >= 1")
    if restarts < 1:
        raise InputError("restarts must be >= 1")

    best_global: tuple[float, tuple, Instance, InequalityReport, str, float] | None = None
    best_trace: tuple[tuple[int, float], ...] = ()
    for restart in range(restarts):
        recipe_obj = entry.recipe_for(recipe, dim)
        inst = make_instance(recipe_obj, derive_seed(master_seed, restart))
        report = evaluate(entry, inst, tol=tol)
        kind, obj = _objective(entry, report)
        step = 0.2
        stagnation = 0
        trace = [(0, obj)]
        for it in range(1, iterations + 1):
            cand = perturb(inst, step, derive_seed(master_seed, restart, it))
            cand_report = evaluate(entry, cand, tol=tol)
            if cand_report.hypothesis_violations:
                accept = False  # moves should preserve hypotheses; stay put if not
            else:
                cand_kind, cand_obj = _objective(entry, cand_report)
                accept = cand_kind == kind and cand_obj > obj
            if accept:
                inst, report, obj = cand, cand_report, cand_obj
                stagnation = 0
            else:
                stagnation += 1
                if stagnation >= _STAGNATION_LIMIT:
                    step = max(step / 2.0, _STEP_FLOOR)
                    stagnation = 0
            if it % 50 == 0:
                trace.append((it, obj))
        key = inst.fingerprint().sort_key()
        candidate = (obj, key, inst, report, kind, step)
        if (
            best_global is None
            or obj > best_global[0]
            or (obj == best_global[0] and key < best_global[1])
        ):
            best_global = candidate
            best_trace = tuple(trace)

    assert best_global is not None
    obj, _, inst, report, kind, step = best_global
    return SearchState(
        entry=entry.id,
        dim=dim,
        iterations=iterations,
        restarts=restarts,
        master_seed=master_seed,
        objective_kind=kind,
        best_objective=obj,
        best_instance=inst,
        best_report=report,
        trace=best_trace,
        step=step,
    )


def search_state_to_json(state: SearchState) -> dict:
    return {
        "entry": state.entry,
        "dim": state.dim,
        "iterations": state.iterations,
        "restarts": state.restarts,
        "master_seed": state.master_seed,
        "objective_kind": state.objective_kind,
        "best_objective": state.best_objective,
        "best_fingerprint": state.best_instance.fingerprint().to_json(),
        "best_report": state.best_report.to_json(),
        "best_instance": instance_to_json(state.best_instance),
        "trace": [list(p) for p in state.trace],
    }
