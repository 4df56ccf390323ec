# Copyright 2023 The Trilogic Team. All rights reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Re-derivation of every published count and uniqueness result about the family, side by side with the published
figures. Disagreements are recorded as errata with their computed value and the reason.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from trilogic.analysis.counting import STAGE_ORDER, count_satisfying, count_violating, stage_analysis
from trilogic.analysis.properties import FAMILY_PROPERTIES, check_paraconsistency
from trilogic.analysis.tautologies import tautology_coincidence_scan
from trilogic.configs.base_config import WorkerConfig
from trilogic.family.enumeration import FAMILY_SIZE, candidate_tables, decode, encode
from trilogic.family.logic_spec import lp_logic
from trilogic.family.tables import BOTH_INDEX, LogicTables
from trilogic.laws.axioms import check_axiom_schemas, check_collapse_schema
from trilogic.laws.checking import check_law_classically, counterexample, family_law_profiles, law_profile
from trilogic.laws.schemas import builtin_law
from trilogic.semantics.truth_values import format_valuation
from trilogic.utils.profiler import time_function

LP_ID = 7418

STAGE_LAWS = {"and": (1, 3, 5, 7), "or": (2, 4, 6, 8), "neg": (9,), "imp": (10, 11, 12)}
STAGE_CANDIDATES = {"and": 8, "or": 32, "neg": 2, "imp": 16}
LATTICE_LAWS = tuple(range(1, 9)) + (13, 14, 15, 16)
SEPARATION_BASE = tuple(range(1, 10)) + tuple(range(13, 19))
SEPARATED_LAWS = (10, 11, 12, 19, 20)


@dataclass(frozen=True)
class ReplicationClaim:
    """One published statement and its recomputation.

    A claim *matches* when the computed value equals the published one and *holds* when it matches or
    equals the recorded correction.
    """

    key: str
    label: str
    source: str
    expected: Any
    computed: Any
    witnesses: Tuple[str, ...] = ()
    corrected: Optional[Any] = None
    note: str = ""

    @property
    def matches(self) -> bool:
        """Whether the computed value equals the published one."""
        return self.expected == self.computed

    @property
    def holds(self) -> bool:
        """Whether the computed value equals the published one or its correction."""
        return self.matches or (self.corrected is not None and self.computed == self.corrected)

    @property
    def status(self) -> str:
        """``match``, ``erratum`` (disagrees as recorded) or ``MISMATCH``."""
        if self.matches:
            return "match"
        return "erratum" if self.holds else "MISMATCH"

    def to_dict(self) -> Dict[str, Any]:
        """JSON-friendly form."""
        return {
            "key": self.key,
            "label": self.label,
            "source": self.source,
            "expected": self.expected,
            "computed": self.computed,
            "matches": self.matches,
            "holds": self.holds,
            "corrected": self.corrected,
            "note": self.note,
            "witnesses": list(self.witnesses),
        }


@dataclass(frozen=True)
class ReplicationReport:
    """Ordered claims of a replication run."""

    claims: Tuple[ReplicationClaim, ...] = field(default_factory=tuple)

    @property
    def all_match(self) -> bool:
        """Every claim agrees with its published figure."""
        return all(claim.matches for claim in self.claims)

    @property
    def all_hold(self) -> bool:
        """Every claim agrees with its published figure or its recorded correction."""
        return all(claim.holds for claim in self.claims)

    def errata(self) -> List[ReplicationClaim]:
        """Claims that hold only through their correction."""
        return [claim for claim in self.claims if claim.holds and not claim.matches]

    def claim(self, key: str) -> ReplicationClaim:
        """Claim by key."""
        for claim in self.claims:
            if claim.key == key:
                return claim
        raise KeyError(key)

    def to_dict(self) -> Dict[str, Any]:
        """JSON-friendly form."""
        return {
            "all_match": self.all_match,
            "all_hold": self.all_hold,
            "claims": [claim.to_dict() for claim in self.claims],
        }


def _ids(ids) -> Tuple[str, ...]:
    return tuple(str(i) for i in ids)


def _law_claims(claims: List[ReplicationClaim]) -> None:
    lp = lp_logic()
    profile = law_profile(lp)
    counterexamples = {number: counterexample(builtin_law(number), lp) for number in profile.failed()}
    witnesses = {number: f"law ({number}) at {example}" for number, example in counterexamples.items()}

    claims.append(
        ReplicationClaim(
            key="lp-id",
            label="LP(->,F) has logic id 7418",
            source="family encoding",
            expected=LP_ID,
            computed=encode(lp),
        )
    )
    claims.append(
        ReplicationClaim(
            key="lp-laws-1-12",
            label="LP(->,F) satisfies laws (1)-(12)",
            source="LP law check",
            expected=True,
            computed=all(profile.holds(number) for number in range(1, 13)),
        )
    )
    law_19 = counterexamples.get(19)
    claims.append(
        ReplicationClaim(
            key="lp-laws-1-20",
            label="laws of LP(->,F) among (1)-(20) that fail",
            source="distinguishing and additional laws",
            expected=[],
            computed=[number for number in profile.failed() if number <= 20],
            witnesses=tuple(text for number, text in witnesses.items() if number <= 20),
            corrected=[19],
            note=(
                "~(A -> B) == A & ~B fails: "
                + (f"at {law_19}" if law_19 is not None else "no counterexample found")
                + "; the bi-implication axiom ~(A -> B) <-> A & ~B stays valid"
            ),
        )
    )
    claims.append(
        ReplicationClaim(
            key="laws-21-23",
            label="laws of LP(->,F) among (21)-(23) that fail",
            source="non-laws of LP",
            expected=[21, 22, 23],
            computed=[number for number in profile.failed() if number >= 21],
            witnesses=tuple(text for number, text in witnesses.items() if number >= 21),
        )
    )
    boolean_laws = [1, 2, 3, 4, 5, 6, 7, 8, 13, 14, 15, 16, 17, 18, 21, 22, 23]
    claims.append(
        ReplicationClaim(
            key="classical-laws",
            label="Boolean algebra laws hold under two-valued evaluation",
            source="laws (1)-(8), (13)-(18), (21)-(23)",
            expected=True,
            computed=all(check_law_classically(builtin_law(number)) for number in boolean_laws),
        )
    )


def _count_claims(claims: List[ReplicationClaim], profiles: np.ndarray) -> None:
    lp = lp_logic()
    family = LogicTables.family()
    lp_tables = LogicTables.from_specs([lp])

    unique = count_satisfying(range(1, 13), profiles)
    satisfying_1_9 = count_satisfying(range(1, 10), profiles)
    satisfying_1_8 = count_satisfying(range(1, 9), profiles)
    without_9 = count_satisfying([1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 12], profiles)
    complement = count_violating(range(1, 9), profiles)

    claims.append(
        ReplicationClaim(
            key="family-size",
            label="three-valued paraconsistent logics meeting the family constraints",
            source="family enumeration",
            expected=FAMILY_SIZE,
            computed=int(np.prod([len(candidate_tables(connective)) for connective in STAGE_ORDER])),
            note="product of the tables each connective may take",
        )
    )
    claims.append(
        ReplicationClaim(
            key="satisfying-1-12",
            label="logics satisfying laws (1)-(12)",
            source="uniqueness of LP",
            expected=1,
            computed=unique.count,
            witnesses=_ids(unique.ids),
        )
    )
    claims.append(
        ReplicationClaim(
            key="unique-is-lp",
            label="the unique logic satisfying laws (1)-(12) is LP(->,F)",
            source="uniqueness of LP",
            expected=True,
            computed=unique.count == 1 and decode(unique.ids[0]) == lp,
        )
    )
    claims.append(
        ReplicationClaim(
            key="satisfying-1-9",
            label="logics satisfying laws (1)-(9)",
            source="law counts",
            expected=16,
            computed=satisfying_1_9.count,
            witnesses=_ids(satisfying_1_9.ids),
        )
    )
    claims.append(
        ReplicationClaim(
            key="satisfying-1-8",
            label="logics satisfying laws (1)-(8)",
            source="law counts",
            expected=32,
            computed=satisfying_1_8.count,
            witnesses=_ids(satisfying_1_8.ids),
        )
    )
    claims.append(
        ReplicationClaim(
            key="violating-1-8",
            label="logics failing some law among (1)-(8)",
            source="law counts",
            expected=8160,
            computed=complement.count,
        )
    )
    claims.append(
        ReplicationClaim(
            key="satisfying-without-9",
            label="logics satisfying laws (1)-(8) and (10)-(12)",
            source="closing remarks",
            expected=4,
            computed=without_9.count,
            witnesses=_ids(without_9.ids),
            corrected=3,
            note="exhaustive enumeration finds 3 logics: " + ", ".join(_ids(without_9.ids)),
        )
    )
    claims.append(
        ReplicationClaim(
            key="without-9-lp",
            label="LP(->,F) satisfies laws (1)-(8) and (10)-(12)",
            source="closing remarks",
            expected=True,
            computed=LP_ID in without_9.ids,
        )
    )

    def same_tables(ids: Tuple[int, ...], connectives: Tuple[str, ...]) -> bool:
        batch = LogicTables.from_ids(np.array(ids, dtype=np.int64))
        return all(np.all(getattr(batch, name) == getattr(lp_tables, name)) for name in connectives)

    claims.append(
        ReplicationClaim(
            key="shared-tables-1-8",
            label="the logics satisfying laws (1)-(8) share the conjunction and disjunction of LP(->,F)",
            source="staged uniqueness argument",
            expected=True,
            computed=same_tables(satisfying_1_8.ids, ("and_", "or_")),
        )
    )
    claims.append(
        ReplicationClaim(
            key="shared-tables-1-9",
            label="the logics satisfying laws (1)-(9) share the conjunction, disjunction and negation of LP(->,F)",
            source="staged uniqueness argument",
            expected=True,
            computed=same_tables(satisfying_1_9.ids, ("and_", "or_", "neg")),
        )
    )
    claims.append(
        ReplicationClaim(
            key="inclusions",
            label="satisfiers of (1)-(12) within those of (1)-(9) within those of (1)-(8)",
            source="law counts",
            expected=True,
            computed=set(unique.ids) <= set(satisfying_1_9.ids) <= set(satisfying_1_8.ids),
        )
    )
    lattice_laws = count_satisfying(LATTICE_LAWS, profiles)
    claims.append(
        ReplicationClaim(
            key="satisfying-1-8-13-16",
            label="logics satisfying laws (1)-(8) and (13)-(16)",
            source="closing remarks",
            expected=32,
            computed=lattice_laws.count,
            witnesses=_ids(lattice_laws.ids),
        )
    )
    rows = np.isin(family.ids, np.array(without_9.ids, dtype=np.int64)) & (family.neg[:, BOTH_INDEX] == BOTH_INDEX)
    claims.append(
        ReplicationClaim(
            key="without-9-negation",
            label="among the logics satisfying (1)-(8) and (10)-(12), only LP(->,F) has ~b = b",
            source="closing remarks",
            expected=[LP_ID],
            computed=[int(i) for i in family.ids[rows]],
        )
    )


def separating_logics(law_number: int, profiles: np.ndarray) -> Tuple[int, ...]:
    """Members satisfying every base law, laws (1)-(9) and (13)-(18), that fail the given law."""
    base = count_satisfying(SEPARATION_BASE, profiles)
    return tuple(logic_id for logic_id in base.ids if not profiles[logic_id, law_number - 1])


def _separation_claims(claims: List[ReplicationClaim], profiles: np.ndarray) -> None:
    for number in SEPARATED_LAWS:
        ids = separating_logics(number, profiles)
        claims.append(
            ReplicationClaim(
                key=f"independent-{number}",
                label=f"law ({number}) does not follow from laws (1)-(9) and (13)-(18)",
                source="independence of the additional laws",
                expected=True,
                computed=bool(ids),
                witnesses=_ids(ids),
                note=f"{len(ids)} logics satisfy the base laws and fail law ({number})",
            )
        )


def _stage_claims(claims: List[ReplicationClaim]) -> None:
    for connective in STAGE_ORDER:
        result = stage_analysis(connective, STAGE_LAWS[connective])
        claims.append(
            ReplicationClaim(
                key=f"stage-{connective}",
                label=f"{connective} tables permitted, and compatible with laws {STAGE_LAWS[connective]}",
                source="staged uniqueness argument",
                expected=[STAGE_CANDIDATES[connective], 1],
                computed=list(result.as_pair()),
                witnesses=tuple("".join(str(value) for value in table) for table in result.compatible_tables),
            )
        )


def _property_claims(claims: List[ReplicationClaim]) -> None:
    family = LogicTables.family()
    for name, mask_fn in FAMILY_PROPERTIES.items():
        mask = mask_fn(family)
        claims.append(
            ReplicationClaim(
                key=f"family-{name.replace(' ', '-')}",
                label=f"family members with {name}",
                source="properties of the family",
                expected=FAMILY_SIZE,
                computed=int(np.count_nonzero(mask)),
                witnesses=_ids(family.ids[~mask][:5]),
            )
        )

    lp = lp_logic()
    explosion = check_paraconsistency(lp)
    claims.append(
        ReplicationClaim(
            key="paraconsistency-lp",
            label="{p, ~p} |= q is refuted in LP(->,F)",
            source="paraconsistency",
            expected=True,
            computed=not explosion.holds,
            witnesses=(format_valuation(explosion.witness),) if explosion.witness is not None else (),
        )
    )
    verdicts = check_axiom_schemas(lp)
    claims.append(
        ReplicationClaim(
            key="axioms-lp",
            label="axiom schemas valid in LP(->,F)",
            source="axiom system",
            expected=len(verdicts),
            computed=sum(verdict.valid for verdict in verdicts),
            witnesses=tuple(str(verdict) for verdict in verdicts if not verdict.valid),
        )
    )
    collapse = check_collapse_schema(lp)
    claims.append(
        ReplicationClaim(
            key="collapse-lp",
            label="~A -> (A -> B) is valid in LP(->,F)",
            source="axiom system",
            expected=False,
            computed=collapse.valid,
            witnesses=(str(collapse),),
        )
    )


def _tautology_claims(claims: List[ReplicationClaim]) -> None:
    full = tautology_coincidence_scan(max_depth=2, num_atoms=1)
    fragment = tautology_coincidence_scan(max_depth=3, num_atoms=2, implication_free=True)
    claims.append(
        ReplicationClaim(
            key="coincidence-full",
            label="LP(->,F) and classical tautologies coincide (depth 2, 1 atom)",
            source="tautology coincidence",
            expected=True,
            computed=full.coincide,
            witnesses=tuple(
                f"{mismatch.formula.to_text()} at {format_valuation(mismatch.witness)}" for mismatch in full.mismatches
            ),
            corrected=False,
            note="~p -> (p -> F) is a classical tautology but takes f at p=b",
        )
    )
    claims.append(
        ReplicationClaim(
            key="coincidence-implication-free",
            label="tautologies coincide on the ->-free fragment (depth 3, 2 atoms)",
            source="tautology coincidence",
            expected=True,
            computed=fragment.coincide,
            witnesses=tuple(mismatch.formula.to_text() for mismatch in fragment.mismatches),
        )
    )


@time_function
def replicate_report(config: Optional[WorkerConfig] = None) -> ReplicationReport:
    """Recompute every published figure about the family.

    Args:
        config: worker settings for the family-wide law profiles.
    """
    profiles = family_law_profiles(config)
    claims: List[ReplicationClaim] = []
    _law_claims(claims)
    _count_claims(claims, profiles)
    _separation_claims(claims, profiles)
    _stage_claims(claims)
    _property_claims(claims)
    _tautology_claims(claims)
    return ReplicationReport(claims=tuple(claims))
