"""Table-driven arithmetic in F_q for prime powers q up to 256.

Field elements are plain integers ``0..q-1`` giving their position in the
canonical enumeration ``gamma_0 = 0, gamma_i = alpha**(i-1)`` where ``alpha``
is the primitive root of the field's modulus. In this representation
multiplication is addition of exponents; addition goes through tables built
from the additive (polynomial / residue) representation. ``0`` and ``1`` keep
their usual meaning: ``gamma_0 = 0`` and ``gamma_1 = alpha**0 = 1``.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np
import numpy.typing as npt

from src.codes.exceptions import DomainError, ParameterError

logger = logging.getLogger(__name__)

MAX_ORDER = 256

FieldElement = int
IntArray = npt.NDArray[np.int64]

# Irreducible, primitive moduli, coefficients lowest degree first, leading 1 included.
# Orders missing here get the first primitive monic polynomial in ascending
# coefficient order (see ``_search_modulus``).
CANONICAL_MODULI: dict[int, tuple[int, ...]] = {
    4: (1, 1, 1),  # x^2 + x + 1
    8: (1, 1, 0, 1),  # x^3 + x + 1
    9: (2, 1, 1),  # x^2 + x + 2 over F_3
    16: (1, 1, 0, 0, 1),  # x^4 + x + 1
}


def factor_prime_power(q: int) -> tuple[int, int]:
    """Split a prime power into ``(p, e)`` with ``q = p**e``.

    Raises:
        ParameterError: If ``q`` is not a prime power.
    """
    if q < 2:
        raise ParameterError(f"Field order must be at least 2, got {q}", context={"q": q})
    p = next(d for d in range(2, q + 1) if q % d == 0)
    e, rest = 0, q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise ParameterError(f"Field order {q} is not a prime power", context={"q": q})
    return p, e


def _proper_divisors(n: int) -> list[int]:
    return [d for d in range(1, n) if n % d == 0]


def _to_digits(value: int, p: int, e: int) -> list[int]:
    digits = []
    for _ in range(e):
        value, digit = divmod(value, p)
        digits.append(digit)
    return digits


def _from_digits(digits: Sequence[int], p: int) -> int:
    return sum(d * p**i for i, d in enumerate(digits))


def _power_sequence(q: int, p: int, e: int, generator: int, modulus: tuple[int, ...] | None) -> list[int]:
    """Additive representations of ``generator**0 .. generator**(q-1)``."""
    powers = [1]
    for _ in range(q - 1):
        current = powers[-1]
        if modulus is None:
            powers.append(current * generator % p)
            continue
        # multiply by x, then reduce x^e = -(c_0 + c_1 x + ... + c_{e-1} x^{e-1})
        digits = _to_digits(current, p, e)
        top = digits[-1]
        shifted = [0, *digits[:-1]]
        reduced = [(s - top * c) % p for s, c in zip(shifted, modulus[:-1], strict=True)]
        powers.append(_from_digits(reduced, p))
    return powers


def _is_primitive(powers: list[int], q: int) -> bool:
    """Check ``alpha^(q-1) = 1`` and ``alpha^d != 1`` for every proper divisor d of q-1."""
    if powers[q - 1] != 1:
        return False
    return all(powers[d] != 1 for d in _proper_divisors(q - 1))


def _search_modulus(q: int, p: int, e: int) -> tuple[int, ...]:
    for low in range(1, p**e):
        digits = _to_digits(low, p, e)
        if digits[0] == 0:
            continue
        modulus = (*digits, 1)
        if _is_primitive(_power_sequence(q, p, e, p, modulus), q):
            return modulus
    raise ParameterError(f"No primitive modulus found for q={q}", context={"q": q})  # pragma: no cover


def _smallest_primitive_root(p: int) -> int:
    for g in range(1, p):
        if _is_primitive(_power_sequence(p, p, 1, g, None), p):
            return g
    raise ParameterError(f"No primitive root modulo {p}", context={"p": p})  # pragma: no cover


def _frozen(values: npt.ArrayLike) -> IntArray:
    array = np.array(values, dtype=np.int64)
    array.flags.writeable = False
    return array


@dataclass(frozen=True, eq=False)
class FieldSpec:
    """The finite field F_q with fixed modulus and element enumeration.

    Attributes:
        q: Field order.
        p: Characteristic.
        e: Extension degree (``q = p**e``).
        modulus: Modulus coefficients lowest degree first (``None`` when e = 1).
        alpha: Additive representation of the primitive element (``x`` when
            e > 1, the smallest primitive root modulo p when e = 1).
        exp_table: ``exp_table[i]`` is the additive representation of alpha**i.
        log_table: Inverse of ``exp_table`` (entry 0 is unused).
        to_repr / from_repr: Element index <-> additive representation.
    """

    q: int
    p: int
    e: int
    modulus: tuple[int, ...] | None
    alpha: int
    exp_table: IntArray = field(repr=False)
    log_table: IntArray = field(repr=False)
    to_repr: IntArray = field(repr=False)
    from_repr: IntArray = field(repr=False)
    digits: IntArray = field(repr=False)
    add_table: IntArray = field(repr=False)
    sub_table: IntArray = field(repr=False)
    mul_table: IntArray = field(repr=False)
    neg_table: IntArray = field(repr=False)
    inv_table: IntArray = field(repr=False)

    # ── Python lookup tables for scalar hot loops ──

    @cached_property
    def add_lut(self) -> list[list[int]]:
        return self.add_table.tolist()  # type: ignore[no-any-return]

    @cached_property
    def sub_lut(self) -> list[list[int]]:
        return self.sub_table.tolist()  # type: ignore[no-any-return]

    @cached_property
    def mul_lut(self) -> list[list[int]]:
        return self.mul_table.tolist()  # type: ignore[no-any-return]

    @cached_property
    def neg_lut(self) -> list[int]:
        return self.neg_table.tolist()  # type: ignore[no-any-return]

    @cached_property
    def inv_lut(self) -> list[int]:
        return self.inv_table.tolist()  # type: ignore[no-any-return]

    @property
    def elements(self) -> range:
        return range(self.q)

    # ── Scalar operations ──

    def check(self, a: FieldElement) -> FieldElement:
        """Validate that ``a`` is an element index of this field."""
        if not 0 <= a < self.q:
            raise ParameterError(f"{a} is not an element of F_{self.q}", context={"q": self.q, "value": a})
        return a

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return self.add_lut[self.check(a)][self.check(b)]

    def sub(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return self.sub_lut[self.check(a)][self.check(b)]

    def neg(self, a: FieldElement) -> FieldElement:
        return self.neg_lut[self.check(a)]

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return self.mul_lut[self.check(a)][self.check(b)]

    def inv(self, a: FieldElement) -> FieldElement:
        if self.check(a) == 0:
            raise DomainError("Zero has no multiplicative inverse", context={"q": self.q})
        return self.inv_lut[a]

    def pow(self, a: FieldElement, exponent: int) -> FieldElement:
        """Raise ``a`` to a non-negative integer power (``0**0 = 1``)."""
        if exponent < 0:
            return self.pow(self.inv(a), -exponent)
        if exponent == 0:
            return 1
        if self.check(a) == 0:
            return 0
        return (a - 1) * exponent % (self.q - 1) + 1

    def poly_eval_uni(self, coeffs: Sequence[FieldElement], x: FieldElement) -> FieldElement:
        """Horner evaluation of ``sum(coeffs[i] * x**i)``."""
        add, mul = self.add_lut, self.mul_lut
        mul_x = mul[self.check(x)]
        acc = 0
        for c in reversed(coeffs):
            acc = add[mul_x[acc]][self.check(c)]
        return acc

    # ── Vectorized helpers ──

    def power_table(self, max_exponent: int) -> IntArray:
        """``table[a, j] = a**j`` for every element a and ``0 <= j <= max_exponent``."""
        a = np.arange(self.q)[:, None]
        j = np.arange(max_exponent + 1)[None, :]
        table = (a - 1) * j % (self.q - 1) + 1
        table = np.where(a == 0, np.where(j == 0, 1, 0), table)
        return _frozen(table)

    def reduce_sum(self, values: npt.ArrayLike, axis: int) -> IntArray:
        """Field sum of ``values`` along ``axis`` (characteristic-p digit addition)."""
        array = np.asarray(values, dtype=np.int64)
        axis = axis % array.ndim
        summed = self.digits[array].sum(axis=axis) % self.p
        place = self.p ** np.arange(self.e, dtype=np.int64)
        return self.from_repr[summed @ place]  # type: ignore[no-any-return]


@lru_cache(maxsize=None)
def field_new(q: int) -> FieldSpec:
    """Build the canonical field of order ``q``.

    Args:
        q: Prime power, ``2 <= q <= 256``.

    Returns:
        An immutable ``FieldSpec``; the same instance for repeated calls.

    Raises:
        ParameterError: If ``q`` is not a supported prime power.
    """
    if q > MAX_ORDER:
        raise ParameterError(f"Field order {q} exceeds {MAX_ORDER}", context={"q": q})
    p, e = factor_prime_power(q)

    if e == 1:
        modulus = None
        alpha = _smallest_primitive_root(p)
    else:
        modulus = CANONICAL_MODULI.get(q) or _search_modulus(q, p, e)
        alpha = p  # the polynomial x
    powers = _power_sequence(q, p, e, alpha, modulus)
    if not _is_primitive(powers, q):
        raise ParameterError(f"Modulus {modulus} does not define a primitive root for q={q}", context={"q": q})

    exp_table = np.array(powers[: q - 1], dtype=np.int64)
    log_table = np.zeros(q, dtype=np.int64)
    log_table[exp_table] = np.arange(q - 1)

    to_repr = np.zeros(q, dtype=np.int64)
    to_repr[1:] = exp_table
    from_repr = np.zeros(q, dtype=np.int64)
    from_repr[to_repr] = np.arange(q)

    digits = np.array([_to_digits(int(v), p, e) for v in to_repr], dtype=np.int64).reshape(q, e)
    place = p ** np.arange(e, dtype=np.int64)
    add_table = from_repr[((digits[:, None, :] + digits[None, :, :]) % p) @ place]
    neg_table = from_repr[((p - digits) % p) @ place]
    sub_table = add_table[:, neg_table]

    idx = np.arange(q)
    mul_table = ((idx[:, None] - 1) + (idx[None, :] - 1)) % (q - 1) + 1
    mul_table[0, :] = 0
    mul_table[:, 0] = 0
    inv_table = (-(idx - 1)) % (q - 1) + 1
    inv_table[0] = 0

    spec = FieldSpec(
        q=q,
        p=p,
        e=e,
        modulus=modulus,
        alpha=alpha,
        exp_table=_frozen(exp_table),
        log_table=_frozen(log_table),
        to_repr=_frozen(to_repr),
        from_repr=_frozen(from_repr),
        digits=_frozen(digits),
        add_table=_frozen(add_table),
        sub_table=_frozen(sub_table),
        mul_table=_frozen(mul_table),
        neg_table=_frozen(neg_table),
        inv_table=_frozen(inv_table),
    )
    logger.debug("Built F_%d (p=%d, e=%d, modulus=%s, alpha=%d)", q, p, e, modulus, alpha)
    return spec
