"""Structured verdicts for the existence and uniqueness theorems."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import ParametricError, UndecidableSignError
from ..scalars import AssumptionSet, ConditionDisjunction
from .conditions import (
    SubspacePair,
    condition_closure_minors,
    condition_closure_sign_vectors,
    condition_faces,
    condition_uniqueness_minors,
    condition_uniqueness_sign_vectors,
)
from .degeneracy import condition_nondegenerate
from .network import Network, deficiency, is_weakly_reversible


@dataclass(frozen=True)
class ConditionResult:
    name: str
    holds: bool | None
    region: ConditionDisjunction | None = None
    note: str = ""

    def to_json(self) -> dict:
        out = {"name": self.name, "holds": self.holds}
        if self.region is not None:
            out["region"] = self.region.to_json()
        if self.note:
            out["note"] = self.note
        return out


@dataclass(frozen=True)
class ExistenceReport:
    theorem: str
    conditions: tuple
    deficiency: int | None = None
    kinetic_deficiency: int | None = None
    weakly_reversible: bool | None = None
    notes: tuple = field(default=())

    @property
    def holds(self) -> bool | None:
        """Conjunction of all parts; ``None`` when a part depends on parameters."""
        parts = [c.holds for c in self.conditions]
        if self.deficiency is not None:
            parts.append(self.deficiency == 0)
        if self.kinetic_deficiency is not None:
            parts.append(self.kinetic_deficiency == 0)
        if self.weakly_reversible is not None:
            parts.append(self.weakly_reversible)
        if any(p is False for p in parts):
            return False
        if any(p is None for p in parts):
            return None
        return True

    @property
    def region(self) -> ConditionDisjunction | None:
        """Parameter region when the verdict hinges on a single symbolic condition."""
        if self.holds is not None:
            return None
        open_parts = [c for c in self.conditions if c.holds is None]
        if len(open_parts) == 1 and open_parts[0].region is not None:
            return open_parts[0].region
        return None

    def summary(self) -> str:
        verdict = {True: "holds", False: "fails"}.get(self.holds)
        if verdict is not None:
            return f"{self.theorem}: {verdict}"
        if self.region is not None:
            return f"{self.theorem}: holds iff {self.region}"
        return f"{self.theorem}: undetermined (specialize the parameters)"

    def to_json(self) -> dict:
        out = {
            "theorem": self.theorem,
            "holds": self.holds,
            "deficiency": self.deficiency,
            "kinetic_deficiency": self.kinetic_deficiency,
            "weakly_reversible": self.weakly_reversible,
            "conditions": [c.to_json() for c in self.conditions],
        }
        if self.region is not None:
            out["region"] = self.region.to_json()
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _region_result(name: str, region: ConditionDisjunction) -> ConditionResult:
    if not region.satisfiable:
        return ConditionResult(name, False, region)
    if region.always:
        return ConditionResult(name, True, region)
    return ConditionResult(name, None, region)


def _structure(subject, assumptions):
    if isinstance(subject, SubspacePair):
        return subject, None, None, None, ()
    if not isinstance(subject, Network):
        raise TypeError("expected a Network or a SubspacePair")
    notes = []
    try:
        defs = deficiency(subject, assumptions)
        delta, delta_t = defs.stoichiometric, defs.kinetic
    except ParametricError as exc:
        delta = delta_t = None
        notes.append(str(exc))
    pair = SubspacePair.from_network(subject, assumptions)
    return pair, delta, delta_t, is_weakly_reversible(subject), tuple(notes)


def check_robust_existence(subject, assumptions: AssumptionSet | None = None) -> ExistenceReport:
    """Unique positive CBE for all rates and small kinetic-order perturbations.

    Requires zero deficiencies, weak reversibility and the closure condition;
    the closure condition is tested on sign vectors for rational input and
    on maximal minors otherwise.
    """
    pair, delta, delta_t, wr, notes = _structure(subject, assumptions)
    if pair.is_rational:
        closure = ConditionResult("closure", condition_closure_sign_vectors(pair))
    else:
        closure = _region_result("closure", condition_closure_minors(pair, assumptions))
    return ExistenceReport("robust unique existence", (closure,), delta, delta_t, wr, notes)


def _try(name, fn, *args):
    try:
        return ConditionResult(name, fn(*args))
    except (ParametricError, UndecidableSignError) as exc:
        return ConditionResult(name, None, note=str(exc))


def check_unique_existence(subject, assumptions: AssumptionSet | None = None) -> ExistenceReport:
    """Unique positive CBE in every class, for all rate constants."""
    pair, delta, delta_t, wr, notes = _structure(subject, assumptions)
    if pair.is_rational:
        uniqueness = ConditionResult("uniqueness", condition_uniqueness_sign_vectors(pair))
    else:
        uniqueness = _try("uniqueness", condition_uniqueness_sign_vectors, pair, assumptions)
        if uniqueness.holds is None:
            uniqueness = _region_result("uniqueness", condition_uniqueness_minors(pair, assumptions))
    faces = _try("faces", condition_faces, pair)
    nondegenerate = _try("nondegenerate", condition_nondegenerate, pair)
    return ExistenceReport(
        "unique existence", (uniqueness, faces, nondegenerate), delta, delta_t, wr, notes
    )
