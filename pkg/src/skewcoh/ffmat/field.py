from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

MAX_MODULUS = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """The prime field F_p for an odd prime ``p`` below 2**16."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ValueError(f"modulus must be prime, got {self.p!r}")
        if self.p == 2:
            raise ValueError("characteristic 2 is not supported (1/2 is needed)")
        if self.p >= MAX_MODULUS:
            raise ValueError(f"modulus {self.p} exceeds {MAX_MODULUS}")

    def __call__(self, x) -> int:
        """Reduce an int or a Fraction into [0, p)."""
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in F_{self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def inv(self, x: int) -> int:
        x %= self.p
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(x, -1, self.p)

    @property
    def half(self) -> int:
        return self.inv(2)

    def signed(self, x: int) -> int:
        """Representative of ``x`` in (-p/2, p/2]."""
        x %= self.p
        return x - self.p if x > self.p // 2 else x
