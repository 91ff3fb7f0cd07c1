"""Certified claims and the reduction report."""

import json
from dataclasses import asdict, dataclass, field

from ..errors import CertificationFailure


@dataclass
class Claim:
    claim: str
    method: str
    result: object


class Transcript(list):
    """A list of Claims; ``certify`` refuses to record a false claim."""

    def certify(self, claim, method, ok):
        if not ok:
            raise CertificationFailure(f"{claim} [{method}] failed")
        self.append(Claim(claim, method, True))

    def note(self, claim, method, result):
        self.append(Claim(claim, method, result))


@dataclass
class ChainStep:
    label: str
    order: int
    index: int
    subgroup: object = field(default=None, compare=False, repr=False)


@dataclass
class ReductionReport:
    input: dict
    chain: list
    final: dict
    constants: dict
    eigenspaces: dict
    transcript: list
    subgroup: object = field(default=None, compare=False, repr=False)
    decomposition: object = field(default=None, compare=False, repr=False)

    def to_dict(self):
        return {
            "input": dict(self.input),
            "chain": [
                {"label": s.label, "order": s.order, "index": s.index} for s in self.chain
            ],
            "final": dict(self.final),
            "constants": dict(self.constants),
            "eigenspaces": dict(self.eigenspaces),
            "transcript": [asdict(c) for c in self.transcript],
        }

    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data):
        return cls(
            input=dict(data["input"]),
            chain=[ChainStep(s["label"], s["order"], s["index"]) for s in data["chain"]],
            final=dict(data["final"]),
            constants=dict(data["constants"]),
            eigenspaces={k: v for k, v in data["eigenspaces"].items()},
            transcript=[Claim(**c) for c in data["transcript"]],
        )

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))
