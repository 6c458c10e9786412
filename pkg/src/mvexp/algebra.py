"""Multivectors of the four real Clifford algebras with three generators.

Coefficients are stored in the fixed order

    1, e1, e2, e3, e12, e13, e23, e123

and every bivector label uses ascending indices (``e13``, never ``e31``).
The product table for each signature is generated once, at import time, by
reducing strings of basis-vector indices.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

BLADES: tuple[tuple[int, ...], ...] = (
    (), (1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3),
)
BLADE_NAMES: tuple[str, ...] = ("1", "e1", "e2", "e3", "e12", "e13", "e23", "e123")
GRADES: tuple[int, ...] = tuple(len(b) for b in BLADES)
_BLADE_INDEX = {b: i for i, b in enumerate(BLADES)}

# relative to the fourth power of the max-abs coefficient
DET_EPS = 1e-12


class SignatureMismatchError(ValueError):
    """Operands live in different algebras."""


class SingularMultivectorError(ArithmeticError):
    """The multivector has (numerically) vanishing determinant."""


@dataclass(frozen=True)
class Signature:
    """Metric signature (p, q) with p + q = 3.

    The first ``p`` basis vectors square to +1, the remaining ``q`` to -1.
    """

    p: int
    q: int

    def __post_init__(self):
        if (self.p, self.q) not in ((0, 3), (3, 0), (1, 2), (2, 1)):
            raise ValueError(f"unsupported signature ({self.p},{self.q}); p+q must be 3")

    def basis_square(self, i: int) -> int:
        if not 1 <= i <= 3:
            raise ValueError(f"basis index {i} out of range 1..3")
        return 1 if i <= self.p else -1

    @property
    def pseudoscalar_square(self) -> int:
        return -((-1) ** self.q)

    @classmethod
    def parse(cls, text: str) -> "Signature":
        """Parse ``"p,q"`` (``"Cl(p,q)"`` is accepted too)."""
        t = text.strip()
        if t.lower().startswith("cl(") and t.endswith(")"):
            t = t[3:-1]
        parts = t.split(",")
        if len(parts) != 2:
            raise ValueError(f"expected 'p,q', got {text!r}")
        return cls(int(parts[0]), int(parts[1]))

    def __str__(self):
        return f"Cl({self.p},{self.q})"


CL03 = Signature(0, 3)
CL30 = Signature(3, 0)
CL12 = Signature(1, 2)
CL21 = Signature(2, 1)
SIGNATURES = (CL03, CL30, CL12, CL21)


def reduce_blade_string(indices: Sequence[int], sig: Signature) -> tuple[int, tuple[int, ...]]:
    """Reduce a product of basis vectors ``e_i e_j ...`` to ``sign * blade``.

    Adjacent distinct vectors are swapped (anticommutation, sign flip) until
    the string is sorted; equal neighbours then contract to their square.
    """
    s = list(indices)
    sign = 1
    # bubble sort, counting transpositions of distinct generators
    for end in range(len(s) - 1, 0, -1):
        for k in range(end):
            if s[k] > s[k + 1]:
                s[k], s[k + 1] = s[k + 1], s[k]
                sign = -sign
    out: list[int] = []
    for i in s:
        if out and out[-1] == i:
            out.pop()
            sign *= sig.basis_square(i)
        else:
            out.append(i)
    return sign, tuple(out)


def _build_tables(sig: Signature):
    sign = np.zeros((8, 8), dtype=np.int8)
    index = np.zeros((8, 8), dtype=np.intp)
    for i, bi in enumerate(BLADES):
        for j, bj in enumerate(BLADES):
            s, blade = reduce_blade_string(bi + bj, sig)
            sign[i, j] = s
            index[i, j] = _BLADE_INDEX[blade]
    # structure tensor: (A B)_k = sum_ij A_i B_j G[i, j, k]
    g = np.zeros((8, 8, 8))
    for i in range(8):
        for j in range(8):
            g[i, j, index[i, j]] = sign[i, j]
    sign.setflags(write=False)
    index.setflags(write=False)
    g.setflags(write=False)
    flat = g.reshape(8, 64)
    return sign, index, g, flat


# Precomputed eagerly so no lazy initialisation races exist.
_TABLES = {sig: _build_tables(sig) for sig in SIGNATURES}


def cayley_table(sig: Signature) -> tuple[np.ndarray, np.ndarray]:
    """Return ``(sign, index)`` arrays: ``blade_i * blade_j = sign[i,j] * blade_{index[i,j]}``."""
    sign, index = _TABLES[sig][:2]
    return sign, index


class InvolutionKind(enum.Enum):
    REVERSE = (1, 1, -1, -1)
    GRADE_INVOLUTION = (1, -1, 1, -1)
    CLIFFORD_CONJUGATE = (1, -1, -1, 1)

    @property
    def signs(self) -> np.ndarray:
        return np.array([self.value[g] for g in GRADES], dtype=float)


class Multivector:
    """Immutable 8-component multivector tied to a signature."""

    __slots__ = ("sig", "_c")

    def __init__(self, sig: Signature, coeffs: Iterable[float] = ()):
        c = np.array(list(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs,
                     dtype=float)
        if c.size == 0:
            c = np.zeros(8)
        if c.shape != (8,):
            raise ValueError(f"expected 8 coefficients, got shape {c.shape}")
        if not np.all(np.isfinite(c)):
            raise ValueError(f"non-finite coefficient in {c!r}")
        c.setflags(write=False)
        self.sig = sig
        self._c = c

    # -- constructors --------------------------------------------------

    @classmethod
    def scalar(cls, sig: Signature, value: float) -> "Multivector":
        c = np.zeros(8)
        c[0] = value
        return cls(sig, c)

    @classmethod
    def blade(cls, sig: Signature, name: str, value: float = 1.0) -> "Multivector":
        c = np.zeros(8)
        c[BLADE_NAMES.index(name)] = value
        return cls(sig, c)

    @classmethod
    def pseudoscalar(cls, sig: Signature) -> "Multivector":
        return cls.blade(sig, "e123")

    @classmethod
    def from_parts(cls, sig: Signature, a0: float = 0.0, vector=(0.0, 0.0, 0.0),
                   bivector=(0.0, 0.0, 0.0), a123: float = 0.0) -> "Multivector":
        """Build from scalar, (a1, a2, a3), (a12, a13, a23) and pseudoscalar parts."""
        return cls(sig, [a0, *vector, *bivector, a123])

    @classmethod
    def _raw(cls, sig: Signature, c: np.ndarray) -> "Multivector":
        if not np.all(np.isfinite(c)):
            raise OverflowError("multivector arithmetic produced a non-finite coefficient")
        obj = cls.__new__(cls)
        c.setflags(write=False)
        obj.sig = sig
        obj._c = c
        return obj

    # -- accessors -----------------------------------------------------

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    def __getitem__(self, blade: Union[int, str]) -> float:
        if isinstance(blade, str):
            blade = BLADE_NAMES.index(blade)
        return float(self._c[blade])

    def max_abs(self) -> float:
        return float(np.max(np.abs(self._c)))

    def is_zero(self) -> bool:
        return not np.any(self._c)

    def grade(self, k: int) -> "Multivector":
        return grade_project(self, k)

    @property
    def vector_bivector(self) -> "Multivector":
        """The ``a + A`` part (grades 1 and 2)."""
        c = self._c.copy()
        c[0] = 0.0
        c[7] = 0.0
        return Multivector._raw(self.sig, c)

    def reverse(self) -> "Multivector":
        return involution(self, InvolutionKind.REVERSE)

    def grade_involution(self) -> "Multivector":
        return involution(self, InvolutionKind.GRADE_INVOLUTION)

    def clifford_conjugate(self) -> "Multivector":
        return involution(self, InvolutionKind.CLIFFORD_CONJUGATE)

    def inverse(self) -> "Multivector":
        return inverse(self)

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other) -> np.ndarray | None:
        if isinstance(other, Multivector):
            if other.sig != self.sig:
                raise SignatureMismatchError(f"{self.sig} vs {other.sig}")
            return other._c
        if isinstance(other, (int, float, np.floating, np.integer)):
            c = np.zeros(8)
            c[0] = other
            return c
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Multivector._raw(self.sig, self._c + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Multivector._raw(self.sig, self._c - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Multivector._raw(self.sig, o - self._c)

    def __neg__(self):
        return Multivector._raw(self.sig, -self._c)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        if isinstance(other, (int, float, np.floating, np.integer)):
            return Multivector._raw(self.sig, self._c * float(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return Multivector._raw(self.sig, self._c * float(other))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return Multivector._raw(self.sig, self._c / float(other))
        if isinstance(other, Multivector):
            return geometric_product(self, inverse(other))
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, (int, np.integer)) or n < 0:
            return NotImplemented
        result = Multivector.scalar(self.sig, 1.0)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Multivector):
            return self.sig == other.sig and bool(np.array_equal(self._c, other._c))
        return NotImplemented

    def __hash__(self):
        return hash((self.sig, self._c.tobytes()))

    def __repr__(self):
        return f"Multivector({self.sig}, {self._c.tolist()!r})"

    def __str__(self):
        from .textio import format_multivector
        return format_multivector(self)


def _check_same(a: Multivector, b: Multivector) -> None:
    if a.sig != b.sig:
        raise SignatureMismatchError(f"signature mismatch: {a.sig} vs {b.sig}")


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    _check_same(a, b)
    g = _TABLES[a.sig][3]
    return Multivector._raw(a.sig, b._c @ (a._c @ g).reshape(8, 8))


def grade_project(a: Multivector, k: int) -> Multivector:
    if k not in (0, 1, 2, 3):
        raise ValueError(f"grade must be in 0..3, got {k!r}")
    mask = np.array([g == k for g in GRADES])
    return Multivector._raw(a.sig, np.where(mask, a._c, 0.0))


def involution(a: Multivector, kind: InvolutionKind) -> Multivector:
    return Multivector._raw(a.sig, a._c * kind.signs)


def quadratic_scalar(a: Multivector, k: int) -> float:
    """Scalar part of the square of the grade-``k`` projection (``a.a`` or ``A.A``)."""
    if k not in (1, 2):
        raise ValueError(f"quadratic_scalar is defined for grades 1 and 2, got {k!r}")
    part = grade_project(a, k)
    return float((part * part)._c[0])


def wedge_scalar(a: Multivector) -> float:
    """e123 coefficient of ``a ^ A``: ``a1 a23 - a2 a13 + a3 a12``."""
    c = a._c
    return float(c[1] * c[6] - c[2] * c[5] + c[3] * c[4])


def wedge_mix_scalar(a: Multivector) -> float:
    """The scalar ``I (a ^ A)`` that mixes vector and bivector parts."""
    return wedge_scalar(a) * a.sig.pseudoscalar_square


def _adjugate(a: Multivector) -> Multivector:
    return a.clifford_conjugate() * a.grade_involution() * a.reverse()


def determinant_mv(a: Multivector) -> Multivector:
    """Full quadruple product; only its scalar part should be nonzero."""
    return a * _adjugate(a)


def determinant(a: Multivector) -> float:
    return float(determinant_mv(a)._c[0])


def inverse(a: Multivector) -> Multivector:
    adj = _adjugate(a)
    det = float((a * adj)._c[0])
    scale = a.max_abs()
    if scale == 0.0 or abs(det) <= DET_EPS * scale ** 4:
        raise SingularMultivectorError(
            f"determinant {det:.3g} vanishes relative to coefficient scale {scale:.3g}")
    return adj / det


def commutator(a: Multivector, b: Multivector) -> Multivector:
    return a * b - b * a


def max_abs_diff(a: Multivector, b: Multivector) -> float:
    _check_same(a, b)
    return float(np.max(np.abs(a._c - b._c)))


def isclose(a: Multivector, b: Multivector, atol: float = 1e-12, rtol: float = 0.0) -> bool:
    """Coefficientwise closeness, ``rtol`` scaled by the max-abs coefficient of ``b``."""
    return max_abs_diff(a, b) <= atol + rtol * b.max_abs()

