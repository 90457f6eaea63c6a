"""Sign vectors in {-, 0, +}^n with bitset storage.

Positions are 0-based internally; the printed form follows the usual
notation ``(+0-+)``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import ShapeError, UndecidableSignError
from .scalars import AssumptionSet, format_scalar, scalar_sign

_CHARS = {1: "+", -1: "-", 0: "0"}
_PARSE = {"+": 1, "-": -1, "0": 0, "−": -1}


class SignVector:
    """Immutable sign vector; ``plus`` and ``minus`` are bitmasks over positions."""

    __slots__ = ("length", "plus", "minus")

    def __init__(self, length: int, plus: int = 0, minus: int = 0):
        if plus & minus:
            raise ValueError("a position cannot be both + and -")
        if (plus | minus) >> length:
            raise ValueError("sign positions exceed vector length")
        self.length = length
        self.plus = plus
        self.minus = minus

    @classmethod
    def from_signs(cls, signs: Iterable[int]) -> "SignVector":
        plus = minus = 0
        n = 0
        for i, s in enumerate(signs):
            n = i + 1
            if s > 0:
                plus |= 1 << i
            elif s < 0:
                minus |= 1 << i
        return cls(n, plus, minus)

    @classmethod
    def parse(cls, text: str) -> "SignVector":
        body = text.strip()
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        try:
            return cls.from_signs(_PARSE[ch] for ch in body)
        except KeyError as exc:
            raise ValueError(f"invalid sign character {exc.args[0]!r} in {text!r}") from None

    @classmethod
    def zero(cls, length: int) -> "SignVector":
        return cls(length)

    @property
    def support_mask(self) -> int:
        return self.plus | self.minus

    def support(self) -> frozenset:
        mask = self.support_mask
        return frozenset(i for i in range(self.length) if mask >> i & 1)

    def __getitem__(self, i: int) -> int:
        if i < 0:
            i += self.length
        if not 0 <= i < self.length:
            raise IndexError(i)
        return 1 if self.plus >> i & 1 else (-1 if self.minus >> i & 1 else 0)

    def __iter__(self):
        return (self[i] for i in range(self.length))

    def __len__(self):
        return self.length

    def __neg__(self):
        return SignVector(self.length, self.minus, self.plus)

    def __eq__(self, other):
        if not isinstance(other, SignVector):
            return NotImplemented
        return (self.length, self.plus, self.minus) == (other.length, other.plus, other.minus)

    def __hash__(self):
        return hash((self.length, self.plus, self.minus))

    def __str__(self):
        return "(" + self.compact() + ")"

    def __repr__(self):
        return f"SignVector('{self}')"

    def compact(self) -> str:
        return "".join(_CHARS[s] for s in self)

    def is_zero(self) -> bool:
        return not self.support_mask

    def sort_key(self) -> tuple:
        # 0 < - < +
        return tuple({0: 0, -1: 1, 1: 2}[s] for s in self)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()


def _check_lengths(a: SignVector, b: SignVector):
    if a.length != b.length:
        raise ShapeError(f"sign vectors of lengths {a.length} and {b.length}")


def sign_vector_of(v: Sequence, assumptions: AssumptionSet | None = None) -> SignVector:
    signs = []
    for i, x in enumerate(v):
        s = scalar_sign(x, assumptions)
        if s is None:
            raise UndecidableSignError(
                f"sign of entry {i + 1} ({format_scalar(x)}) is undecidable under the given assumptions",
                x,
            )
        signs.append(s)
    return SignVector.from_signs(signs)


def compose(sigma: SignVector, tau: SignVector) -> SignVector:
    _check_lengths(sigma, tau)
    free = ~sigma.support_mask
    return SignVector(sigma.length, sigma.plus | (tau.plus & free), sigma.minus | (tau.minus & free))


def leq(sigma: SignVector, tau: SignVector) -> bool:
    """Conformal order: every nonzero entry of ``sigma`` agrees with ``tau``."""
    _check_lengths(sigma, tau)
    return sigma.plus & ~tau.plus == 0 and sigma.minus & ~tau.minus == 0


def lower_closure(signs: Iterable[SignVector]) -> set:
    out: set = set()
    for tau in signs:
        positions = sorted(tau.support())
        for k in range(1 << len(positions)):
            mask = 0
            for bit, pos in enumerate(positions):
                if k >> bit & 1:
                    mask |= 1 << pos
            out.add(SignVector(tau.length, tau.plus & mask, tau.minus & mask))
    return out


def is_nonnegative(sigma: SignVector) -> bool:
    return sigma.minus == 0


def sorted_signs(signs: Iterable[SignVector]) -> list:
    return sorted(signs, key=SignVector.sort_key)


def format_set(signs: Iterable[SignVector]) -> str:
    return "{" + ", ".join(str(s) for s in sorted_signs(signs)) + "}"
