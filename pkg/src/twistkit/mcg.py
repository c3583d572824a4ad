"""Mapping class group of the torus: slopes, Dehn twist words, SL(2, Z).

Conventions
-----------
A slope is a primitive column vector ``(x, y)`` with value ``y/x``; ``(1, 0)``
is slope 0 and ``(0, 1)`` is slope infinity.  The right-handed Dehn twist
along ``c`` is ``v -> v + <c, v> c`` with ``<u, v> = u_x v_y - u_y v_x``, so
the twist along slope 0 is ``[[1, 1], [0, 1]]`` and its inverse sends
``(n, -1)`` to ``(n + 1, -1)``.

Words are read as compositions: the leftmost factor is applied last, so a
word evaluates to the left-to-right product of its factor matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .linalg import ContractError

INFINITE = None  # order of an element of infinite order


@dataclass(frozen=True, order=True)
class Slope:
    x: int
    y: int

    def __post_init__(self):
        if self.x == 0 and self.y == 0:
            raise ContractError("(0, 0) is not a slope")
        if gcd(self.x, self.y) != 1:
            raise ContractError(f"({self.x}, {self.y}) is not primitive")
        # canonical representative: x > 0, or (0, 1)
        if self.x < 0 or (self.x == 0 and self.y < 0):
            object.__setattr__(self, "x", -self.x)
            object.__setattr__(self, "y", -self.y)

    @classmethod
    def of(cls, value) -> "Slope":
        """Build a slope from ``"inf"``, an integer, a Fraction, ``"p/q"`` or a pair."""
        if isinstance(value, Slope):
            return value
        if isinstance(value, str):
            v = value.strip().lower()
            if v in ("inf", "infinity", "oo", "∞"):
                return cls(0, 1)
            value = Fraction(v)
        if isinstance(value, (list, tuple)):
            x, y = value
            return cls(int(x), int(y))
        if isinstance(value, bool):
            raise ContractError(f"cannot read a slope from {value!r}")
        if isinstance(value, int):
            return cls(1, value)
        if isinstance(value, Fraction):
            return cls(value.denominator, value.numerator)
        raise ContractError(f"cannot read a slope from {value!r}")

    @property
    def is_infinite(self) -> bool:
        return self.x == 0

    @property
    def value(self) -> Fraction | None:
        return None if self.x == 0 else Fraction(self.y, self.x)

    def vector(self) -> tuple[int, int]:
        return (self.x, self.y)

    def to_json(self):
        if self.x == 0:
            return "inf"
        if self.x == 1:
            return str(self.y)
        return f"{self.y}/{self.x}"

    def __str__(self) -> str:
        return "∞" if self.x == 0 else str(self.value)


ZERO = Slope(1, 0)
INF = Slope(0, 1)


def omega(u, v) -> int:
    """Algebraic intersection <u, v> = u_x v_y - u_y v_x of two curve classes."""
    ux, uy = u.vector() if isinstance(u, Slope) else u
    vx, vy = v.vector() if isinstance(v, Slope) else v
    return ux * vy - uy * vx


@dataclass(frozen=True)
class SL2:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ContractError(f"determinant of {self.rows()} is not 1")

    @classmethod
    def identity(cls) -> "SL2":
        return cls(1, 0, 0, 1)

    @classmethod
    def from_rows(cls, rows) -> "SL2":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    @property
    def trace(self) -> int:
        return self.a + self.d

    def __matmul__(self, other: "SL2") -> "SL2":
        return SL2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "SL2":
        return SL2(self.d, -self.b, -self.c, self.a)

    def __pow__(self, k: int) -> "SL2":
        base = self if k >= 0 else self.inverse()
        out = SL2.identity()
        k = abs(k)
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def apply(self, v: tuple[int, int]) -> tuple[int, int]:
        x, y = v
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    def is_identity(self) -> bool:
        return self == SL2.identity()

    def __str__(self) -> str:
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


@dataclass(frozen=True)
class Factor:
    slope: Slope
    exp: int

    def __post_init__(self):
        if self.exp == 0:
            raise ContractError("twist exponents must be nonzero")


@dataclass(frozen=True)
class TwistWord:
    factors: tuple[Factor, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    @classmethod
    def of(cls, pairs: Iterable) -> "TwistWord":
        """Build from ``(slope, exp)`` pairs; slopes go through :meth:`Slope.of`."""
        return cls(tuple(f if isinstance(f, Factor) else Factor(Slope.of(f[0]), int(f[1])) for f in pairs))

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __mul__(self, other: "TwistWord") -> "TwistWord":
        return TwistWord(self.factors + other.factors)

    def __pow__(self, k: int) -> "TwistWord":
        if k < 0:
            return self.inverse() ** (-k)
        return TwistWord(self.factors * k)

    def inverse(self) -> "TwistWord":
        return TwistWord(tuple(Factor(f.slope, -f.exp) for f in reversed(self.factors)))

    def normalized(self) -> "TwistWord":
        """Merge adjacent equal-slope factors and drop zero exponents."""
        out: list[list] = []
        for f in self.factors:
            if out and out[-1][0] == f.slope:
                out[-1][1] += f.exp
                if out[-1][1] == 0:
                    out.pop()
            else:
                out.append([f.slope, f.exp])
        return TwistWord(tuple(Factor(s, e) for s, e in out))

    def curves(self) -> list[Slope]:
        """One entry per individual twist, in word order (requires positive exponents)."""
        if any(f.exp < 0 for f in self.factors):
            raise ContractError("curve expansion needs positive exponents")
        return [f.slope for f in self.factors for _ in range(f.exp)]

    def to_json(self) -> list[dict]:
        return [{"slope": f.slope.to_json(), "exp": f.exp} for f in self.factors]

    @classmethod
    def from_json(cls, data: Sequence[dict]) -> "TwistWord":
        return cls.of((d["slope"], d["exp"]) for d in data)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        parts = []
        for f in self.factors:
            name = {ZERO: "a", INF: "b"}.get(f.slope, f"T[{f.slope}]")
            parts.append(name if f.exp == 1 else f"{name}^{f.exp}")
        return " ".join(parts)


A_WORD = TwistWord((Factor(ZERO, 1),))
B_WORD = TwistWord((Factor(INF, 1),))


@dataclass(frozen=True)
class MonodromyClass:
    kind: str
    trace: int
    order: int | None


def twist_matrix(c) -> SL2:
    """Right-handed Dehn twist along the slope ``c``."""
    if not isinstance(c, Slope):
        x, y = c
        if gcd(x, y) != 1:
            raise ContractError(f"({x}, {y}) is not primitive")
        c = Slope(x, y)
    x, y = c.x, c.y
    return SL2(1 - x * y, x * x, -y * y, 1 + x * y)


def eval_word(w: TwistWord) -> SL2:
    out = SL2.identity()
    for f in w.factors:
        out = out @ twist_matrix(f.slope) ** f.exp
    return out


def act_on_slope(M: SL2, s) -> Slope:
    return Slope(*M.apply(Slope.of(s).vector()))


def classify_monodromy(M: SL2, max_order: int = 12) -> MonodromyClass:
    """Elliptic/parabolic/hyperbolic by |trace|; order searched up to ``max_order``."""
    tr = abs(M.trace)
    kind = "elliptic" if tr < 2 else "parabolic" if tr == 2 else "hyperbolic"
    power = M
    order = INFINITE
    for k in range(1, max_order + 1):
        if power.is_identity():
            order = k
            break
        power = power @ M
    return MonodromyClass(kind, M.trace, order)


def conjugate_word(w: TwistWord, g: TwistWord) -> TwistWord:
    """The word g w g^-1, rewritten factor by factor as twists along moved slopes."""
    G = eval_word(g)
    return TwistWord(tuple(Factor(act_on_slope(G, f.slope), f.exp) for f in w.factors)).normalized()


def layer_slopes(w: TwistWord) -> list[Slope]:
    return [f.slope for f in w.factors]


def is_identity_word(w: TwistWord) -> bool:
    return eval_word(w).is_identity()
