"""Verdicts, witnesses and per-axiom reports.

Every checker in the library returns a Verdict rather than raising on a
counterexample: a failed law is a result, not an error.  Witnesses are
plain tuples of the values involved, ordered the way the law reads, so a
caller can re-evaluate them.
"""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Verdict:
    holds: bool
    law: str
    witness: tuple | None = None
    note: str = ""

    @classmethod
    def passed(cls, law: str, note: str = "") -> "Verdict":
        return cls(True, law, None, note)

    @classmethod
    def failed(cls, law: str, witness: tuple, note: str = "") -> "Verdict":
        return cls(False, law, witness, note)

    def __bool__(self) -> bool:
        return self.holds


def fmt_witness(witness: tuple | None) -> str:
    """Compact single-line rendering used by the machine report format."""
    if witness is None:
        return "-"
    return "(" + ",".join(_fmt_item(w) for w in witness) + ")"


def _fmt_item(item) -> str:
    if isinstance(item, tuple):
        return fmt_witness(item)
    if isinstance(item, frozenset) or isinstance(item, set):
        return "{" + ",".join(sorted(str(x) for x in item)) + "}"
    return str(item)


@dataclass
class AxiomReport:
    """Per-axiom verdicts for one functional (or one structure).

    `sampled` is set when any grid was cut off by a budget; a sampled
    report is never silently treated as a full pass.
    """

    verdicts: dict[str, Verdict] = field(default_factory=dict)
    sampled: bool = False

    def add(self, verdict: Verdict) -> None:
        self.verdicts[verdict.law] = verdict

    def merge(self, other: "AxiomReport") -> "AxiomReport":
        merged = AxiomReport(dict(self.verdicts), self.sampled or other.sampled)
        merged.verdicts.update(other.verdicts)
        return merged

    def __getitem__(self, law: str) -> Verdict:
        return self.verdicts[law]

    def __contains__(self, law: str) -> bool:
        return law in self.verdicts

    @property
    def all_hold(self) -> bool:
        return all(v.holds for v in self.verdicts.values())

    def failures(self) -> list[Verdict]:
        return [v for v in self.verdicts.values() if not v.holds]
