"""Exact integer polynomials in x (dense) and in x, y (sparse).

Both classes are immutable and hashable, use Python ints for coefficients,
and support ``+``, ``-``, ``*`` (with each other and with ints) and ``**``.
A :class:`UniPoly` mixed with a :class:`BiPoly` is promoted to a BiPoly.
"""
from __future__ import annotations

import re
from typing import Iterable, Mapping

from .errors import InvariantViolation

__all__ = [
    "UniPoly",
    "BiPoly",
    "divide_by_power",
    "evaluate",
    "set_y_to_one",
]


def _term(coeff: int, powers: str, first: bool) -> str:
    if powers and abs(coeff) == 1:
        body = powers
    else:
        body = f"{abs(coeff)}{powers}"
    if coeff < 0:
        return "-" + body
    return body if first else "+" + body


def _power(var: str, k: int) -> str:
    if k == 0:
        return ""
    return var if k == 1 else f"{var}^{k}"


class UniPoly:
    """Dense polynomial in ``x``; ``coeffs[i]`` is the coefficient of ``x**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    def __reduce__(self):
        return (UniPoly, (self.coeffs,))

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> "UniPoly":
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [coeff])

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def one(cls) -> "UniPoly":
        return cls((1,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def low_degree(self) -> int:
        """Smallest power with a nonzero coefficient; -1 for zero."""
        for i, a in enumerate(self.coeffs):
            if a:
                return i
        return -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, BiPoly):
            return BiPoly.from_uni(self) == other
        if isinstance(other, int):
            return self.coeffs == UniPoly((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("UniPoly", self.coeffs))

    def __add__(self, other):
        if isinstance(other, BiPoly):
            return BiPoly.from_uni(self) + other
        if isinstance(other, int):
            other = UniPoly((other,))
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-a for a in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, (int, UniPoly, BiPoly)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, BiPoly):
            return BiPoly.from_uni(self) * other
        if isinstance(other, int):
            return UniPoly(a * other for a in self.coeffs)
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u:
                for j, v in enumerate(b):
                    out[i + j] += u * v
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result, base = UniPoly.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divide_by_power(self, k: int) -> "UniPoly":
        """Exact division by ``x**k``; raises if some term has a smaller power."""
        if any(self.coeffs[:k]):
            raise InvariantViolation(f"{self} is not divisible by x^{k}")
        return UniPoly(self.coeffs[k:])

    def evaluate(self, x: int, y: int | None = None) -> int:
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    __call__ = evaluate

    def set_y_to_one(self) -> "UniPoly":
        return self

    def to_json(self) -> list:
        return [[i, str(a)] for i, a in enumerate(self.coeffs) if a]

    @classmethod
    def from_json(cls, data) -> "UniPoly":
        out: dict[int, int] = {}
        for i, a in data:
            out[int(i)] = out.get(int(i), 0) + int(a)
        size = max(out, default=-1) + 1
        return cls(out.get(i, 0) for i in range(size))

    def __str__(self):
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[i]
            if a:
                parts.append(_term(a, _power("x", i), not parts))
        return "".join(parts) or "0"

    def __repr__(self):
        return f"UniPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "UniPoly":
        bi = BiPoly.parse(text)
        if any(j for _, j in bi.terms):
            raise ValueError(f"{text!r} mentions y")
        return bi.set_y_to_one()


_TERM_RE = re.compile(
    r"\s*([+-]?)\s*(\d*)\s*\*?\s*(?:x(?:\^(\d+))?)?\s*\*?\s*(?:y(?:\^(\d+))?)?\s*"
)


class BiPoly:
    """Sparse polynomial in ``x`` and ``y``; ``terms[(i, j)]`` multiplies ``x**i * y**j``."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        d: dict[tuple[int, int], int] = {}
        for (i, j), c in items:
            key = (int(i), int(j))
            d[key] = d.get(key, 0) + int(c)
        object.__setattr__(self, "terms", {k: v for k, v in sorted(d.items()) if v})
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    def __reduce__(self):
        return (BiPoly, (self.terms,))

    @classmethod
    def from_uni(cls, p: UniPoly) -> "BiPoly":
        return cls({(i, 0): a for i, a in enumerate(p.coeffs)})

    @classmethod
    def monomial(cls, i: int, j: int, coeff: int = 1) -> "BiPoly":
        return cls({(i, j): coeff})

    @classmethod
    def x(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    @classmethod
    def one(cls) -> "BiPoly":
        return cls({(0, 0): 1})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def x_degree(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    @property
    def y_degree(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    @property
    def low_x_degree(self) -> int:
        return min((i for i, _ in self.terms), default=-1)

    def coefficient(self, i: int, j: int) -> int:
        return self.terms.get((i, j), 0)

    def y_powers(self, i: int) -> list[int]:
        """Sorted y-exponents occurring alongside ``x**i``."""
        return sorted(j for a, j in self.terms if a == i)

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self.terms == other.terms
        if isinstance(other, UniPoly):
            return self.terms == BiPoly.from_uni(other).terms
        if isinstance(other, int):
            return self.terms == BiPoly({(0, 0): other}).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(("BiPoly", tuple(self.terms.items()))))
        return self._hash

    @staticmethod
    def _coerce(other):
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, UniPoly):
            return BiPoly.from_uni(other)
        if isinstance(other, int):
            return BiPoly({(0, 0): other})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        d = dict(self.terms)
        for k, v in other.terms.items():
            d[k] = d.get(k, 0) + v
        return BiPoly(d)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return BiPoly({k: v * other for k, v in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        d: dict[tuple[int, int], int] = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                k = (i1 + i2, j1 + j2)
                d[k] = d.get(k, 0) + a * b
        return BiPoly(d)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result, base = BiPoly.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divide_by_power(self, k: int) -> "BiPoly":
        """Exact division by ``x**k``."""
        if any(i < k for i, _ in self.terms):
            raise InvariantViolation(f"{self} is not divisible by x^{k}")
        return BiPoly({(i - k, j): v for (i, j), v in self.terms.items()})

    def evaluate(self, x: int, y: int = 1) -> int:
        return sum(c * x**i * y**j for (i, j), c in self.terms.items())

    __call__ = evaluate

    def set_y_to_one(self) -> UniPoly:
        out: dict[int, int] = {}
        for (i, _), c in self.terms.items():
            out[i] = out.get(i, 0) + c
        return UniPoly(out.get(i, 0) for i in range(max(out, default=-1) + 1))

    def to_json(self) -> list:
        return [[i, j, str(c)] for (i, j), c in self.terms.items()]

    @classmethod
    def from_json(cls, data) -> "BiPoly":
        return cls(((i, j), int(c)) for i, j, c in data)

    def __str__(self):
        parts = []
        for (i, j), c in sorted(self.terms.items(), key=lambda t: (-t[0][0], -t[0][1])):
            parts.append(_term(c, _power("x", i) + _power("y", j), not parts))
        return "".join(parts) or "0"

    def __repr__(self):
        return f"BiPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "BiPoly":
        """Parse the text rendering, e.g. ``"x^3+3x^2y+xy^3"`` or ``"x^2-1"``."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial")
        d: dict[tuple[int, int], int] = {}
        pos = 0
        while pos < len(s):
            m = _TERM_RE.match(s, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse polynomial {text!r} at {pos}")
            sign, digits, xp, yp = m.groups()
            body = m.group(0)
            has_x = "x" in body
            has_y = "y" in body
            if not digits and not has_x and not has_y:
                raise ValueError(f"cannot parse polynomial {text!r} at {pos}")
            if pos > 0 and not sign:
                raise ValueError(f"missing operator in {text!r} at {pos}")
            c = int(digits) if digits else 1
            if sign == "-":
                c = -c
            i = (int(xp) if xp else 1) if has_x else 0
            j = (int(yp) if yp else 1) if has_y else 0
            d[(i, j)] = d.get((i, j), 0) + c
            pos = m.end()
        return cls(d)


def divide_by_power(p, k: int):
    """Divide ``p`` by ``x**k``; every term must have x-power at least ``k``."""
    return p.divide_by_power(k)


def evaluate(p, x: int, y: int = 1) -> int:
    return p.evaluate(x, y)


def set_y_to_one(p) -> UniPoly:
    return p.set_y_to_one()
