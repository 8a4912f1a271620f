"""Integer partitions and the conjugate (transpose) duality.

A partition stores its parts in non-increasing order; the exponent form
groups equal parts as [d1^t1, ..., ds^ts] with d1 > ... > ds.  Conjugation
is computed two independent ways — by column counting and by the closed
form on the exponent representation — and the two are asserted equal on
every call.  The conjugate partition is also the Weyr structure of a
nilpotent map whose Jordan block sizes are the original parts.
"""
from __future__ import annotations

import re as _re
from dataclasses import dataclass

from .errors import SpecError


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise SpecError("partition must be nonempty")
        if any(not isinstance(p, int) or p < 1 for p in self.parts):
            raise SpecError("parts must be positive integers")
        if any(self.parts[i] < self.parts[i + 1]
               for i in range(len(self.parts) - 1)):
            raise SpecError("parts must be non-increasing")

    @classmethod
    def of(cls, parts) -> "Partition":
        return cls(tuple(sorted(parts, reverse=True)))

    @classmethod
    def from_exponents(cls, pairs) -> "Partition":
        """Build from [(part, multiplicity), ...]."""
        parts = []
        for d, t in pairs:
            if t < 1:
                raise SpecError("multiplicities must be positive")
            parts.extend([d] * t)
        return cls.of(parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def exponent_form(self) -> tuple[tuple[int, int], ...]:
        """Distinct parts with multiplicities, largest part first."""
        out = []
        for p in self.parts:
            if out and out[-1][0] == p:
                out[-1][1] += 1
            else:
                out.append([p, 1])
        return tuple((d, t) for d, t in out)

    def conjugate(self) -> "Partition":
        by_count = conjugate_by_counting(self)
        by_form = conjugate_closed_form(self)
        assert by_count == by_form, "conjugate computations disagree"
        return by_count

    def __str__(self) -> str:
        return "[" + ",".join(f"{d}^{t}" for d, t in self.exponent_form) + "]"


def conjugate_by_counting(p: Partition) -> Partition:
    """Column counting: part j of the conjugate is #{i : parts[i] >= j}."""
    return Partition(tuple(sum(1 for part in p.parts if part >= j)
                           for j in range(1, p.parts[0] + 1)))


def conjugate_closed_form(p: Partition) -> Partition:
    """Closed form on the exponent representation.

    With p = [d1^t1, ..., ds^ts] (d1 > ... > ds), the conjugate is
    [(t1+...+ts)^(ds), (t1+...+t_{s-1})^(d_{s-1}-d_s), ..., (t1)^(d1-d2)].
    """
    form = p.exponent_form
    s = len(form)
    prefix = []
    acc = 0
    for _, t in form:
        acc += t
        prefix.append(acc)
    pairs = []
    for idx in range(s - 1, -1, -1):
        d = form[idx][0]
        d_next = form[idx + 1][0] if idx + 1 < s else 0
        pairs.append((prefix[idx], d - d_next))
    return Partition.from_exponents(pairs)


@dataclass(frozen=True)
class WeyrStructure:
    """Non-increasing level sizes of a nilpotent structure."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        Partition(self.sizes)  # same validity conditions

    @property
    def total(self) -> int:
        return sum(self.sizes)

    def to_partition(self) -> Partition:
        return Partition(self.sizes)

    def __str__(self) -> str:
        return "(" + ",".join(str(s) for s in self.sizes) + ")"


def weyr_structure_of(p: Partition) -> WeyrStructure:
    """Weyr structure dual to Jordan block sizes: the conjugate partition."""
    return WeyrStructure(p.conjugate().parts)


_EXP_ITEM = _re.compile(r"^(\d+)\^(\d+)$")


def parse_partition(text: str) -> Partition:
    """Parse "3,2,2" or the exponent form "[3^2,1^1]"."""
    s = text.strip().replace(" ", "")
    if not s:
        raise SpecError("empty partition")
    if s.startswith("[") and s.endswith("]"):
        pairs = []
        for item in s[1:-1].split(","):
            m = _EXP_ITEM.match(item)
            if not m:
                raise SpecError(f"bad exponent item: {item!r}")
            pairs.append((int(m.group(1)), int(m.group(2))))
        return Partition.from_exponents(pairs)
    try:
        parts = [int(x) for x in s.split(",")]
    except ValueError as exc:
        raise SpecError(f"bad partition literal: {text!r}") from exc
    return Partition.of(parts)
