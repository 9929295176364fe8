"""Chained reduction steps and their text/JSON serialization."""
from __future__ import annotations

from dataclasses import dataclass

from .digitcore import DigitString, from_value, parse_digits, residue, to_value
from .partition import Partition, ReductionStep, make_step


@dataclass(frozen=True)
class ReductionTrace:
    base: int
    steps: tuple[ReductionStep, ...]
    final: DigitString
    start: DigitString

    def __len__(self):
        return len(self.steps)

    @classmethod
    def chain(cls, start: DigitString, steps) -> ReductionTrace:
        steps = tuple(steps)
        final = steps[-1].output if steps else start
        return cls(start.base, steps, final, start)

    def problems(self) -> list[str]:
        """Everything wrong with this trace; empty when valid."""
        out = []
        b = self.base
        cur = self.start
        for i, step in enumerate(self.steps):
            if step.input != cur:
                out.append(f"step {i} input {step.input} does not continue from {cur}")
            if not step.is_valid():
                out.append(f"step {i} is not a valid partition-and-sum step")
            if b >= 3 and step.sum % (b - 1) != residue(self.start):
                out.append(f"step {i} sum {step.sum} broke the mod {b - 1} residue")
            cur = from_value(step.sum, b)
        if self.final != cur:
            out.append(f"final {self.final} is not the last output {cur}")
        if not self.final.is_single_digit:
            out.append(f"final {self.final} has more than one digit")
        return out

    def is_valid(self) -> bool:
        return not self.problems()

    def to_dict(self) -> dict:
        return {
            "base": self.base,
            "start": str(self.start),
            "steps": [
                {"input": str(s.input), "cuts": list(s.partition.cuts), "sum": str(s.output)}
                for s in self.steps
            ],
            "final": str(self.final),
        }

    @classmethod
    def from_dict(cls, data: dict) -> ReductionTrace:
        """Rebuild a trace, recomputing each sum from its input and cuts.

        Raises ``ValueError`` if a recorded sum disagrees with the recomputed one.
        """
        b = data["base"]
        steps = []
        for raw in data["steps"]:
            step = make_step(parse_digits(raw["input"], b), Partition(tuple(raw["cuts"])))
            if step.sum != to_value(parse_digits(raw["sum"], b)):
                raise ValueError(f"recorded sum {raw['sum']} does not match {raw['input']} cut at {raw['cuts']}")
            steps.append(step)
        if "start" in data:
            start = parse_digits(data["start"], b)
        elif steps:
            start = steps[0].input
        else:
            start = parse_digits(data["final"], b)
        trace = cls(b, tuple(steps), parse_digits(data["final"], b), start)
        return trace

    def render(self) -> str:
        lines = []
        for s in self.steps:
            lines.append(f"{s.input} = {'+'.join(map(str, s.terms))} = {s.output}")
        lines.append(str(self.final))
        return "\n".join(lines)
