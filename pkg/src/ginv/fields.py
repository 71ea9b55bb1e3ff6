"""Exact scalar arithmetic over the rationals and prime fields GF(p).

Scalars are stored as plain Python values: ``fractions.Fraction`` for the
rationals (always reduced, positive denominator -- Fraction guarantees both)
and canonical residues ``int`` in ``[0, p)`` for GF(p).  The field object
supplies normalization and inversion; ordinary ``+``/``*`` on the raw values
followed by ``normalize`` is exact in both cases.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError

MAX_PRIME = 2 ** 31


def is_prime(n: int) -> bool:
    """Trial-division primality test; adequate for p < 2^31."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Rationals:
    """The field of rational numbers; elements are ``Fraction``."""

    name = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def normalize(self, v):
        return v if isinstance(v, Fraction) else Fraction(v)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def inv(self, v):
        if v == 0:
            raise ZeroDivisionError("division by zero in Q")
        return 1 / Fraction(v)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Rationals()"


class PrimeField:
    """GF(p) for a prime p < 2^31; elements are canonical residues."""

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise InputError(f"{p} is not prime")
        if p >= MAX_PRIME:
            raise InputError(f"prime {p} exceeds the 2^31 cap")
        self.p = p
        self.name = f"GF({p})"
        self.zero = 0
        self.one = 1 % p

    def normalize(self, v: int) -> int:
        return v % self.p

    def from_int(self, n: int) -> int:
        return n % self.p

    def inv(self, v: int) -> int:
        v %= self.p
        if v == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return pow(v, self.p - 2, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


def parse_scalar(field, value, where: str):
    """Parse one JSON entry into a field element.

    Rationals accept strings ``"n"`` or ``"n/d"`` (d positive, nonzero);
    GF(p) accepts integers, reduced mod p on ingest.
    """
    if isinstance(field, Rationals):
        if not isinstance(value, str):
            raise InputError(f"rational entry must be a string at {where}")
        parts = value.split("/")
        try:
            if len(parts) == 1:
                return Fraction(int(parts[0]))
            if len(parts) == 2:
                num, den = int(parts[0]), int(parts[1])
                if den == 0:
                    raise InputError(f"zero denominator at {where}")
                return Fraction(num, den)
        except ValueError:
            pass
        raise InputError(f"bad fraction syntax {value!r} at {where}")
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"GF entry must be an integer at {where}")
    return field.normalize(value)


def scalar_to_json(field, value):
    """Serialize a field element canonically (rationals always as strings)."""
    if isinstance(field, Rationals):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    return int(value)
