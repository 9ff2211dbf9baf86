"""Exponent-vector monomials and the colon/gcd arithmetic used everywhere.

A monomial lives in a fixed polynomial ring with ``nvars`` variables and is
stored as a dense tuple of nonnegative integer exponents.  All arithmetic is
componentwise; there are no coefficients.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence


class Monomial:
    """Immutable monomial given by its exponent vector."""

    __slots__ = ("exps",)

    def __init__(self, exps: Iterable[int]):
        exps = tuple(int(e) for e in exps)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        object.__setattr__(self, "exps", exps)

    def __setattr__(self, name, value):
        raise AttributeError("Monomial is immutable")

    @property
    def nvars(self) -> int:
        return len(self.exps)

    def degree(self) -> int:
        return sum(self.exps)

    def deg_var(self, v: int) -> int:
        """Exponent of variable ``v`` (the largest i with v^i dividing self)."""
        return self.exps[v]

    def support(self) -> tuple[int, ...]:
        """Indices of variables appearing with positive exponent."""
        return tuple(i for i, e in enumerate(self.exps) if e > 0)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    def is_one(self) -> bool:
        return all(e == 0 for e in self.exps)

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check_ring(other)
        return Monomial(a + b for a, b in zip(self.exps, other.exps))

    def gcd(self, other: "Monomial") -> "Monomial":
        self._check_ring(other)
        return Monomial(min(a, b) for a, b in zip(self.exps, other.exps))

    def colon(self, other: "Monomial") -> "Monomial":
        """self : other = self / gcd(self, other), componentwise max(a-b, 0)."""
        self._check_ring(other)
        return Monomial(max(a - b, 0) for a, b in zip(self.exps, other.exps))

    def divides(self, other: "Monomial") -> bool:
        """True iff self divides other (componentwise <=)."""
        self._check_ring(other)
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def divide(self, other: "Monomial") -> "Monomial":
        """Exact division; other must divide self."""
        self._check_ring(other)
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(a - b for a, b in zip(self.exps, other.exps))

    def localize(self, keep: Iterable[int]) -> "Monomial":
        """Zero out every exponent outside ``keep``."""
        keep = set(keep)
        if any(v < 0 or v >= self.nvars for v in keep):
            raise ValueError("localization set outside variable range")
        return Monomial(e if i in keep else 0 for i, e in enumerate(self.exps))

    def extend(self, nvars: int) -> "Monomial":
        """Reinterpret in a larger ring by appending zero exponents."""
        if nvars < self.nvars:
            raise ValueError("cannot shrink variable count")
        return Monomial(self.exps + (0,) * (nvars - self.nvars))

    def _check_ring(self, other: "Monomial") -> None:
        if self.nvars != other.nvars:
            raise ValueError(
                f"variable count mismatch: {self.nvars} vs {other.nvars}"
            )

    # Lexicographic order on exponent vectors under the fixed variable order;
    # used only for deterministic canonical output.
    def __lt__(self, other: "Monomial") -> bool:
        self._check_ring(other)
        return self.exps < other.exps

    def __le__(self, other: "Monomial") -> bool:
        self._check_ring(other)
        return self.exps <= other.exps

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self) -> int:
        return hash(self.exps)

    def __repr__(self) -> str:
        return f"Monomial({list(self.exps)})"

    def format(self, names: Sequence[str] | None = None) -> str:
        """Render as e.g. ``a^2*b^2`` using ``names`` (default x0, x1, ...)."""
        if names is None:
            names = [f"x{i}" for i in range(self.nvars)]
        parts = []
        for i, e in enumerate(self.exps):
            if e == 1:
                parts.append(names[i])
            elif e > 1:
                parts.append(f"{names[i]}^{e}")
        return "*".join(parts) if parts else "1"


def one(nvars: int) -> Monomial:
    return Monomial((0,) * nvars)


def from_vars(nvars: int, vs: Iterable[int]) -> Monomial:
    """Product of the given variables (with multiplicity)."""
    exps = [0] * nvars
    for v in vs:
        exps[v] += 1
    return Monomial(exps)


def product(ms: Iterable[Monomial], nvars: int | None = None) -> Monomial:
    result = None
    for m in ms:
        result = m if result is None else result * m
    if result is None:
        if nvars is None:
            raise ValueError("empty product needs an explicit variable count")
        return one(nvars)
    return result


_POWER_RE = re.compile(r"^([^\s^*]+)(?:\^(\d+))?$")


def parse(text: str, nvars: int, names: Sequence[str] | None = None) -> Monomial:
    """Parse either rendering: ``a^2*b^2`` or ``[2,2,0,0,0]``.

    Name resolution uses ``names`` when given, otherwise the generic x<i>
    scheme.  The bare string ``1`` is the unit monomial.
    """
    text = text.strip()
    if text.startswith("["):
        if not text.endswith("]"):
            raise ValueError(f"unterminated exponent vector: {text!r}")
        body = text[1:-1].strip()
        exps = [int(t) for t in body.split(",")] if body else []
        if len(exps) != nvars:
            raise ValueError(f"expected {nvars} exponents, got {len(exps)}")
        return Monomial(exps)
    if text == "1":
        return one(nvars)
    if names is None:
        names = [f"x{i}" for i in range(nvars)]
    index = {name: i for i, name in enumerate(names)}
    exps = [0] * nvars
    for factor in text.split("*"):
        m = _POWER_RE.match(factor.strip())
        if m is None:
            raise ValueError(f"bad monomial factor: {factor!r}")
        name, power = m.group(1), int(m.group(2) or 1)
        if name not in index:
            raise ValueError(f"unknown variable {name!r}")
        exps[index[name]] += power
    return Monomial(exps)
