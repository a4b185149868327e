"""The inequality catalog: named, hypothesis-gated, evaluable checks.

Each entry evaluates one printed bound to an LHS/RHS pair with a signed
margin, normalized so that "satisfied" always means
``margin >= -tol * max(1, |rhs|)``. Entries whose recorded derivation has a
questionable step carry status "suspect-step"; sweeps treat their verdicts
as findings, never as errors. FALSE_TEST is a deliberately false control
entry that exercises the violation-reporting path.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from commlab.core import (
    HypothesisError,
    InputError,
    cartesian_decomposition,
    classify,
    commutator,
    direct_sum,
    hermitian_eig,
    hs_norm,
    matrix_abs_sqrt,
    numerical_radius,
    op_norm,
    self_commutator,
)
from commlab.instances import Fingerprint, Instance, Recipe, derive_seed, make_instance

__all__ = [
    "CatalogEntry",
    "CATALOG",
    "EXPLORATORY",
    "get_entry",
    "entry_ids",
    "validate_hypotheses",
    "InequalityReport",
    "evaluate",
    "SweepConfig",
    "SweepReport",
    "sweep",
    "REPORT_CSV_FIELDS",
    "SWEEP_CSV_FIELDS",
]

DEFAULT_TOL = 1e-9
_BAND_SLACK = 1e-8
_SJ_CUTOFF = 1e-12


@dataclass(frozen=True)
class CatalogEntry:
    """Metadata for one evaluable inequality."""

    id: str
    description: str
    status: str  # "proven" | "suspect-step" | "synthetic-false"
    direction: str  # "le" (lhs <= rhs), "ge" (lhs >= rhs), "eq" (lhs == rhs)
    hypotheses: tuple[str, ...] = ()
    requires: frozenset = frozenset()
    default_family: str = "normal"
    with_x: bool = False
    with_y: bool = False
    x_kind: str = "ginibre"
    with_vector: bool = False
    tie_t_to_s: bool = False
    exploratory: bool = False

    def default_recipe(self, dim: int) -> Recipe:
        return self.recipe_for(None, dim)

    def recipe_for(self, family: str | None, dim: int) -> Recipe:
        return Recipe(
            family=family or self.default_family,
            dim=dim,
            with_x=self.with_x,
            with_y=self.with_y,
            x_kind=self.x_kind,
            with_vector=self.with_vector,
            tie_t_to_s=self.tie_t_to_s,
        )


def _entries() -> tuple[CatalogEntry, ...]:
    return (
        CatalogEntry(
            id="THM_MAIN",
            description=(
                "|ST-TS| <= 1/2 sqrt((a2-a1)^2+(c2-c1)^2) sqrt((b2-b1)^2+(d2-d1)^2) "
                "for normal S, T with banded cartesian parts"
            ),
            status="proven",
            direction="le",
            hypotheses=("normal:S", "normal:T", "band:S", "band:T"),
            default_family="positive-normal",
        ),
        CatalogEntry(
            id="STEP_CENTERED",
            description="|ST-TS| <= 2 |S-z| |T-w| with z, w the declared band centers",
            status="proven",
            direction="le",
            default_family="positive-normal",
        ),
        CatalogEntry(
            id="STEP_CARTESIAN",
            description="|S-z|^2 <= |A-a|^2 + |C-c|^2 for normal S = A + iC",
            status="proven",
            direction="le",
            hypotheses=("normal:S",),
            default_family="positive-normal",
        ),
        CatalogEntry(
            id="STEP_HALF_BAND",
            description="|S-z| <= 1/2 sqrt((a2-a1)^2+(c2-c1)^2) for normal banded S",
            status="proven",
            direction="le",
            hypotheses=("normal:S", "band:S"),
            default_family="positive-normal",
        ),
        CatalogEntry(
            id="COR_NORMBOUND",
            description=(
                "|ST-TS| <= 1/2 sqrt(4|A|^2+|C|^2) sqrt(4|B|^2+|D|^2) "
                "for normal S, T with positive imaginary parts C, D"
            ),
            status="proven",
            direction="le",
            hypotheses=("normal:S", "normal:T", "psd-part:C", "psd-part:D"),
            default_family="normal-psd-imag",
        ),
        CatalogEntry(
            id="REMARK_POSITIVE",
            description="|ST-TS| <= 1/2 sqrt(|A|^2+4|C|^2) sqrt(|B|^2+4|D|^2) for positive S, T",
            status="proven",
            direction="le",
            hypotheses=("psd:S", "psd:T"),
            default_family="hermitian-psd",
        ),
        CatalogEntry(
            id="COR_SELF_COMMUTATOR",
            description="|S*S-SS*| <= 1/2 (|A|^2+|C|^2) when both cartesian parts are positive",
            status="proven",
            direction="le",
            hypotheses=("psd-part:A", "psd-part:C"),
            default_family="cartesian-psd",
        ),
        CatalogEntry(
            id="SJ_GENERAL",
            description=(
                "s_j(SX-YT) <= (max(b2-a1, a2-b1) + max(d2-c1, c2-d1)) s_j(X (+) Y) for all j"
            ),
            status="suspect-step",
            direction="le",
            hypotheses=("normal:S", "normal:T", "band:S", "band:T"),
            requires=frozenset({"X", "Y"}),
            default_family="normal",
            with_x=True,
            with_y=True,
        ),
        CatalogEntry(
            id="SJ_MAX",
            description="s_j(SX-YT) <= max(|A|, |B|) s_j(X (+) Y) for all j",
            status="suspect-step",
            direction="le",
            hypotheses=("normal:S", "normal:T"),
            requires=frozenset({"X", "Y"}),
            default_family="normal",
            with_x=True,
            with_y=True,
        ),
        CatalogEntry(
            id="SJ_SINGLE",
            description="s_j(SX-YS) <= sqrt((a2-a1)^2+(c2-c1)^2) s_j(X (+) Y) for all j",
            status="proven",
            direction="le",
            hypotheses=("normal:S", "band:S"),
            requires=frozenset({"X", "Y"}),
            default_family="normal",
            with_x=True,
            with_y=True,
            tie_t_to_s=True,
        ),
        CatalogEntry(
            id="HS_PRODUCT",
            description="|ST|_2 <= |TS|_2 for normal S, T with normal product ST",
            status="proven",
            direction="le",
            hypotheses=("normal:S", "normal:T", "normal:ST"),
            default_family="unitary",
        ),
        CatalogEntry(
            id="SQRT_PRODUCT",
            description="| |ST|^(1/2) | <= | |TS|^(1/2) | for normal S, T with normal ST",
            status="suspect-step",
            direction="le",
            hypotheses=("normal:S", "normal:T", "normal:ST"),
            default_family="unitary",
        ),
        CatalogEntry(
            id="NUMRAD_CLAIM",
            description="w(ST) = |TS| for normal S, T (equality claim, checked both ways)",
            status="suspect-step",
            direction="eq",
            hypotheses=("normal:S", "normal:T"),
            default_family="normal",
        ),
        CatalogEntry(
            id="THREE_TERM",
            description=(
                "|S-T|_2^2 <= |SX-XT|_2 |X^-1 S - T X^-1|_2 "
                "for self-adjoint S, T and positive definite X"
            ),
            status="proven",
            direction="le",
            hypotheses=("hermitian:S", "hermitian:T", "pd:X"),
            requires=frozenset({"X"}),
            default_family="hermitian",
            with_x=True,
            x_kind="pd",
        ),
        CatalogEntry(
            id="COMMUTATOR_HS",
            description="|SX-XT|_2 <= |X|_2 sqrt(|S|_2^2 + |T|_2^2) for positive S, T",
            status="suspect-step",
            direction="le",
            hypotheses=("psd:S", "psd:T"),
            requires=frozenset({"X"}),
            default_family="hermitian-psd",
            with_x=True,
        ),
        CatalogEntry(
            id="SCHWARZ_REVERSE",
            description=(
                "|STx|^2 >= (1/n^2)(|STx|^4 - |<(ST)^2 x, x>|^2) "
                "for self-adjoint S, T, unit x, and n >= |ST-TS|"
            ),
            status="proven",
            direction="ge",
            hypotheses=("hermitian:S", "hermitian:T", "unit:x", "n-bound"),
            requires=frozenset({"x", "n"}),
            default_family="hermitian",
            with_vector=True,
        ),
        CatalogEntry(
            id="FALSE_TEST",
            description="|ST-TS| <= 0: deliberately false control for the violation path",
            status="synthetic-false",
            direction="le",
            default_family="normal",
        ),
    )


CATALOG: dict[str, CatalogEntry] = {e.id: e for e in _entries()}

# Variant of THREE_TERM with both right-hand factors squared and the looser
# normality hypothesis; evaluable for empirical comparison, not listed.
EXPLORATORY: dict[str, CatalogEntry] = {
    "THREE_TERM_STATED": CatalogEntry(
        id="THREE_TERM_STATED",
        description=(
            "|S-T|_2^2 <= |SX-XT|_2^2 |X^-1 S - T X^-1|_2^2 "
            "for normal S, T and positive definite X"
        ),
        status="suspect-step",
        direction="le",
        hypotheses=("normal:S", "normal:T", "pd:X"),
        requires=frozenset({"X"}),
        default_family="normal",
        with_x=True,
        x_kind="pd",
        exploratory=True,
    )
}


def entry_ids(include_exploratory: bool = False) -> tuple[str, ...]:
    ids = tuple(CATALOG)
    if include_exploratory:
        ids += tuple(EXPLORATORY)
    return ids


def get_entry(entry_id: str) -> CatalogEntry:
    if entry_id in CATALOG:
        return CATALOG[entry_id]
    if entry_id in EXPLORATORY:
        return EXPLORATORY[entry_id]
    raise InputError(f"unknown entry {entry_id!r}; known: {', '.join(entry_ids(True))}")


# ---------------------------------------------------------------------------
# hypothesis validation


def _band_violations(part: np.ndarray, band: tuple[float, float], label: str) -> list[str]:
    eigs = hermitian_eig(part).eigenvalues
    lo, hi = band
    if eigs.size and (eigs.min() < lo - _BAND_SLACK or eigs.max() > hi + _BAND_SLACK):
        return [f"{label} spectrum outside [{lo:g}, {hi:g}]"]
    return []


def validate_hypotheses(entry: CatalogEntry | str, inst: Instance) -> list[str]:
    """List of hypothesis violations; empty means the entry applies."""
    if isinstance(entry, str):
        entry = get_entry(entry)
    out: list[str] = []
    parts: dict[str, np.ndarray] = {}

    def part(name: str) -> np.ndarray:
        if name not in parts:
            a, c = cartesian_decomposition(inst.S)
            b, d = cartesian_decomposition(inst.T)
            parts.update({"A": a, "C": c, "B": b, "D": d})
        return parts[name]

    for code in entry.hypotheses:
        if code == "normal:S":
            if not classify(inst.S).normal:
                out.append("S not normal")
        elif code == "normal:T":
            if not classify(inst.T).normal:
                out.append("T not normal")
        elif code == "normal:ST":
            if not classify(inst.S @ inst.T).normal:
                out.append("ST not normal")
        elif code == "hermitian:S":
            if not classify(inst.S).hermitian:
                out.append("S not hermitian")
        elif code == "hermitian:T":
            if not classify(inst.T).hermitian:
                out.append("T not hermitian")
        elif code == "psd:S":
            if not classify(inst.S).positive_semidefinite:
                out.append("S not PSD")
        elif code == "psd:T":
            if not classify(inst.T).positive_semidefinite:
                out.append("T not PSD")
        elif code.startswith("psd-part:"):
            name = code.split(":", 1)[1]
            if not classify(part(name)).positive_semidefinite:
                out.append(f"{name} not PSD")
        elif code == "band:S":
            out += _band_violations(part("A"), inst.bounds.band("a"), "A")
            out += _band_violations(part("C"), inst.bounds.band("c"), "C")
        elif code == "band:T":
            out += _band_violations(part("B"), inst.bounds.band("b"), "B")
            out += _band_violations(part("D"), inst.bounds.band("d"), "D")
        elif code == "pd:X":
            if inst.X is None:
                out.append("X missing")
            else:
                flags = classify(inst.X)
                eigs = (
                    hermitian_eig((inst.X + inst.X.conj().T) / 2.0).eigenvalues
                    if flags.hermitian
                    else None
                )
                if not flags.hermitian or eigs is None or eigs.min() <= 0:
                    out.append("X not positive definite")
        elif code == "unit:x":
            if inst.x is None or abs(np.linalg.norm(inst.x) - 1.0) > 1e-12:
                out.append("x not unit")
        elif code == "n-bound":
            if inst.n is None or inst.n < op_norm(commutator(inst.S, inst.T)) - 1e-9:
                out.append("n below commutator norm")
        else:  # pragma: no cover - catalog construction guards this
            raise InputError(f"unknown hypothesis code {code!r}")
    return out


# ---------------------------------------------------------------------------
# entry formulas


def _sj_eval(d: np.ndarray, x: np.ndarray, y: np.ndarray, factor: float, tol: float):
    """Per-index bound s_j(d) <= factor * s_j(x (+) y), worst j reported."""
    lhs_vals = np.linalg.svd(d, compute_uv=False)
    base = np.linalg.svd(direct_sum(x, y), compute_uv=False)
    per_j = []
    worst = None
    for j, bj in enumerate(base, start=1):
        if bj <= _SJ_CUTOFF:
            continue
        lhs_j = float(lhs_vals[j - 1]) if j <= lhs_vals.size else 0.0
        rhs_j = float(factor * bj)
        margin_j = rhs_j - lhs_j
        per_j.append({"j": j, "lhs": lhs_j, "rhs": rhs_j, "margin": margin_j})
        score = margin_j / max(1.0, abs(rhs_j))
        if worst is None or score < worst[0]:
            worst = (score, lhs_j, rhs_j)
    if worst is None:
        return 0.0, 0.0, {"per_j": per_j}
    return worst[1], worst[2], {"per_j": per_j}


def _shifted(m: np.ndarray, z: complex) -> np.ndarray:
    return m - z * np.eye(m.shape[0])


def _x_inverse(x: np.ndarray) -> np.ndarray:
    svals = np.linalg.svd(x, compute_uv=False)
    if svals[-1] <= 0 or svals[0] / svals[-1] > 1e12:
        raise HypothesisError("X is numerically singular (condition number > 1e12)")
    return np.linalg.inv(x)


def _formula(entry_id: str, inst: Instance, tol: float):
    b = inst.bounds
    s, t = inst.S, inst.T
    if entry_id == "THM_MAIN":
        lhs = op_norm(commutator(s, t))
        rhs = 0.5 * math.hypot(b.a2 - b.a1, b.c2 - b.c1) * math.hypot(b.b2 - b.b1, b.d2 - b.d1)
        return lhs, rhs, None
    if entry_id == "STEP_CENTERED":
        lhs = op_norm(commutator(s, t))
        rhs = 2.0 * op_norm(_shifted(s, b.z)) * op_norm(_shifted(t, b.w))
        return lhs, rhs, None
    if entry_id == "STEP_CARTESIAN":
        a, c = cartesian_decomposition(s)
        lhs = op_norm(_shifted(s, b.z)) ** 2
        rhs = op_norm(_shifted(a, b.a)) ** 2 + op_norm(_shifted(c, b.c)) ** 2
        return lhs, rhs, None
    if entry_id == "STEP_HALF_BAND":
        lhs = op_norm(_shifted(s, b.z))
        rhs = 0.5 * math.hypot(b.a2 - b.a1, b.c2 - b.c1)
        return lhs, rhs, None
    if entry_id == "COR_NORMBOUND":
        a, c = cartesian_decomposition(s)
        bb, d = cartesian_decomposition(t)
        lhs = op_norm(commutator(s, t))
        rhs = 0.5 * math.sqrt(4 * op_norm(a) ** 2 + op_norm(c) ** 2) * math.sqrt(
            4 * op_norm(bb) ** 2 + op_norm(d) ** 2
        )
        return lhs, rhs, None
    if entry_id == "REMARK_POSITIVE":
        a, c = cartesian_decomposition(s)
        bb, d = cartesian_decomposition(t)
        lhs = op_norm(commutator(s, t))
        rhs = 0.5 * math.sqrt(op_norm(a) ** 2 + 4 * op_norm(c) ** 2) * math.sqrt(
            op_norm(bb) ** 2 + 4 * op_norm(d) ** 2
        )
        return lhs, rhs, None
    if entry_id == "COR_SELF_COMMUTATOR":
        a, c = cartesian_decomposition(s)
        lhs = op_norm(self_commutator(s))
        rhs = 0.5 * (op_norm(a) ** 2 + op_norm(c) ** 2)
        return lhs, rhs, None
    if entry_id == "SJ_GENERAL":
        factor = max(b.b2 - b.a1, b.a2 - b.b1) + max(b.d2 - b.c1, b.c2 - b.d1)
        return _sj_eval(s @ inst.X - inst.Y @ t, inst.X, inst.Y, factor, tol)
    if entry_id == "SJ_MAX":
        a, _ = cartesian_decomposition(s)
        bb, _ = cartesian_decomposition(t)
        factor = max(op_norm(a), op_norm(bb))
        return _sj_eval(s @ inst.X - inst.Y @ t, inst.X, inst.Y, factor, tol)
    if entry_id == "SJ_SINGLE":
        factor = math.hypot(b.a2 - b.a1, b.c2 - b.c1)
        return _sj_eval(s @ inst.X - inst.Y @ s, inst.X, inst.Y, factor, tol)
    if entry_id == "HS_PRODUCT":
        lhs, rhs = hs_norm(s @ t), hs_norm(t @ s)
        return lhs, rhs, {"hs_gap": abs(lhs - rhs)}
    if entry_id == "SQRT_PRODUCT":
        lhs = op_norm(matrix_abs_sqrt(s @ t))
        rhs = op_norm(matrix_abs_sqrt(t @ s))
        return lhs, rhs, None
    if entry_id == "NUMRAD_CLAIM":
        return numerical_radius(s @ t), op_norm(t @ s), None
    if entry_id in ("THREE_TERM", "THREE_TERM_STATED"):
        xinv = _x_inverse(inst.X)
        lhs = hs_norm(s - t) ** 2
        f1 = hs_norm(s @ inst.X - inst.X @ t)
        f2 = hs_norm(xinv @ s - t @ xinv)
        rhs = f1 * f2 if entry_id == "THREE_TERM" else (f1 * f2) ** 2
        return lhs, rhs, {"factor_left": f1, "factor_right": f2}
    if entry_id == "COMMUTATOR_HS":
        lhs = hs_norm(s @ inst.X - inst.X @ t)
        rhs = hs_norm(inst.X) * math.sqrt(hs_norm(s) ** 2 + hs_norm(t) ** 2)
        return lhs, rhs, None
    if entry_id == "SCHWARZ_REVERSE":
        g = s @ t
        gx = g @ inst.x
        lhs = float(np.linalg.norm(gx) ** 2)
        inner = complex(inst.x.conj() @ (g @ gx))
        rhs = (lhs**2 - abs(inner) ** 2) / (inst.n**2)
        return lhs, rhs, {"inner_abs": abs(inner), "n": inst.n}
    if entry_id == "FALSE_TEST":
        return op_norm(commutator(s, t)), 0.0, None
    raise InputError(f"no formula for entry {entry_id!r}")  # pragma: no cover


# ---------------------------------------------------------------------------
# reports

REPORT_CSV_FIELDS = (
    "entry",
    "verdict",
    "satisfied",
    "lhs",
    "rhs",
    "margin",
    "tol",
    "seed",
    "dim",
    "recipe",
    "recipe_hash",
    "hypothesis_violations",
)

SWEEP_CSV_FIELDS = (
    "entry",
    "trials",
    "passes",
    "failures",
    "not_applicable",
    "worst_margin",
    "worst_seed",
    "worst_dim",
    "worst_recipe",
    "worst_recipe_hash",
    "dims",
    "trials_per_dim",
    "master_seed",
    "recipe",
    "tol",
)


def _jsonable_float(v: float | None):
    if v is None or (isinstance(v, float) and not math.isfinite(v)):
        return None
    return float(v)


@dataclass(frozen=True)
class InequalityReport:
    """One evaluation of one entry on one instance."""

    entry: str
    lhs: float
    rhs: float
    margin: float
    verdict: str  # "satisfied" | "violated" | "not-applicable"
    satisfied: bool | None
    tol: float
    hypothesis_violations: tuple[str, ...]
    fingerprint: Fingerprint
    detail: dict | None = None

    def to_json(self) -> dict:
        return {
            "entry": self.entry,
            "lhs": _jsonable_float(self.lhs),
            "rhs": _jsonable_float(self.rhs),
            "margin": _jsonable_float(self.margin),
            "verdict": self.verdict,
            "satisfied": self.satisfied,
            "tol": self.tol,
            "hypothesis_violations": list(self.hypothesis_violations),
            "fingerprint": self.fingerprint.to_json(),
            "detail": self.detail,
        }

    def to_csv_row(self) -> list:
        fp = self.fingerprint
        return [
            self.entry,
            self.verdict,
            "" if self.satisfied is None else str(self.satisfied).lower(),
            _jsonable_float(self.lhs),
            _jsonable_float(self.rhs),
            _jsonable_float(self.margin),
            self.tol,
            fp.seed,
            fp.dim,
            fp.recipe,
            fp.recipe_hash,
            "; ".join(self.hypothesis_violations),
        ]


def evaluate(entry: CatalogEntry | str, inst: Instance, tol: float = DEFAULT_TOL) -> InequalityReport:
    """Evaluate one entry on one instance.

    Hypothesis violations detected by validation produce a "not-applicable"
    verdict. A missing required matrix raises InputError; an input the
    formula cannot evaluate safely (e.g. a numerically singular X) raises
    HypothesisError.
    """
    if isinstance(entry, str):
        entry = get_entry(entry)
    for req in sorted(entry.requires):
        if getattr(inst, req) is None:
            raise InputError(f"entry {entry.id} requires instance field {req!r}")
    violations = tuple(validate_hypotheses(entry, inst))
    lhs, rhs, detail = _formula(entry.id, inst, tol)
    if entry.direction == "le":
        margin = rhs - lhs
    elif entry.direction == "ge":
        margin = lhs - rhs
    else:  # equality claim
        margin = -abs(lhs - rhs)
    ok = margin >= -tol * max(1.0, abs(rhs))
    if violations:
        verdict, satisfied = "not-applicable", None
    else:
        verdict, satisfied = ("satisfied", True) if ok else ("violated", False)
    return InequalityReport(
        entry.id, lhs, rhs, margin, verdict, satisfied, tol, violations,
        inst.fingerprint(), detail,
    )


@dataclass(frozen=True)
class SweepConfig:
    """Randomized verification plan: trials per dim, all seeds derived."""

    dims: tuple[int, ...]
    trials: int
    master_seed: int = 0
    recipe: str | None = None  # family override; None uses the entry default
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        if self.trials < 0:
            raise InputError("trials must be >= 0")
        if not self.dims:
            raise InputError("at least one dim is required")


@dataclass(frozen=True)
class SweepReport:
    entry: str
    trials: int
    passes: int
    failures: int
    not_applicable: int
    worst_margin: float | None
    worst_fingerprint: Fingerprint | None
    dims: tuple[int, ...]
    trials_per_dim: int
    master_seed: int
    recipe: str
    tol: float
    wall_time_s: float

    def to_json(self, include_wall_time: bool = False) -> dict:
        # wall time is excluded from the artifact by default so that equal
        # configurations serialize byte-identically
        out = {
            "entry": self.entry,
            "trials": self.trials,
            "passes": self.passes,
            "failures": self.failures,
            "not_applicable": self.not_applicable,
            "worst_margin": _jsonable_float(self.worst_margin),
            "worst_fingerprint": self.worst_fingerprint.to_json() if self.worst_fingerprint else None,
            "dims": list(self.dims),
            "trials_per_dim": self.trials_per_dim,
            "master_seed": self.master_seed,
            "recipe": self.recipe,
            "tol": self.tol,
        }
        if include_wall_time:
            out["wall_time_s"] = self.wall_time_s
        return out

    def to_csv_row(self) -> list:
        fp = self.worst_fingerprint
        return [
            self.entry,
            self.trials,
            self.passes,
            self.failures,
            self.not_applicable,
            _jsonable_float(self.worst_margin),
            fp.seed if fp else "",
            fp.dim if fp else "",
            fp.recipe if fp else "",
            fp.recipe_hash if fp else "",
            " ".join(str(d) for d in self.dims),
            self.trials_per_dim,
            self.master_seed,
            self.recipe,
            self.tol,
        ]


def sweep(entry: CatalogEntry | str, config: SweepConfig) -> SweepReport:
    """Run seeded random trials of one entry; violations are recorded, not raised.

    Determinism: the trial at (dim, index) always sees the seed
    ``derive_seed(master_seed, dim, index)``, so results do not depend on
    execution order and any failure can be replayed from its fingerprint.
    """
    if isinstance(entry, str):
        entry = get_entry(entry)
    start = time.perf_counter()
    passes = failures = not_applicable = 0
    worst: tuple[float, Fingerprint] | None = None
    for dim in config.dims:
        recipe = entry.recipe_for(config.recipe, dim)
        for trial in range(config.trials):
            seed = derive_seed(config.master_seed, dim, trial)
            inst = make_instance(recipe, seed)
            try:
                report = evaluate(entry, inst, tol=config.tol)
            except HypothesisError:
                not_applicable += 1
                continue
            if report.verdict == "not-applicable":
                not_applicable += 1
                continue
            if report.verdict == "satisfied":
                passes += 1
            else:
                failures += 1
            if worst is None or report.margin < worst[0]:
                worst = (report.margin, report.fingerprint)
    total = len(config.dims) * config.trials
    return SweepReport(
        entry=entry.id,
        trials=total,
        passes=passes,
        failures=failures,
        not_applicable=not_applicable,
        worst_margin=worst[0] if worst else None,
        worst_fingerprint=worst[1] if worst else None,
        dims=tuple(config.dims),
        trials_per_dim=config.trials,
        master_seed=config.master_seed,
        recipe=config.recipe or entry.default_family,
        tol=config.tol,
        wall_time_s=time.perf_counter() - start,
    )
