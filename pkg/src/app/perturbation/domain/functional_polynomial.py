from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Tuple

import numpy as np

from src.app.utils.errors import DegreeOverflowError

# (hbar power, sorted node indices of the field factors q(t_i))
TermKey = Tuple[int, Tuple[int, ...]]


def _key(hbar_power: int, insertions: Iterable[int]) -> TermKey:
    return int(hbar_power), tuple(sorted(int(i) for i in insertions))


@dataclass
class FunctionalPolynomial:
    """
    Polynomial functional of a free solution q(t) with insertions on quadrature nodes.

    Each term is coefficient * hbar^power * prod q(t_i); the numerical value of
    hbar only enters on evaluation. Terms with the same key are merged.

    Attributes:
        max_degree (int): D, bound on the number of field factors per term
        terms (Dict[TermKey, complex]): coefficient per (hbar power, insertion multiset)
    """
    max_degree: int
    terms: Dict[TermKey, complex] = field(default_factory=dict)

    def __post_init__(self):
        merged: Dict[TermKey, complex] = {}
        for (power, insertions), coefficient in self.terms.items():
            key = _key(power, insertions)
            merged[key] = merged.get(key, 0.0) + complex(coefficient)
        self.terms = {}
        for key, coefficient in merged.items():
            self._accumulate(key, coefficient)

    @classmethod
    def constant(cls, value: complex, max_degree: int) -> "FunctionalPolynomial":
        return cls(max_degree, {(0, ()): value})

    @classmethod
    def zero(cls, max_degree: int) -> "FunctionalPolynomial":
        return cls(max_degree)

    @classmethod
    def field_at(cls, node: int, max_degree: int, coefficient: complex = 1.0) -> "FunctionalPolynomial":
        """coefficient * q(t_node)."""
        return cls(max_degree, {(0, (node,)): coefficient})

    def _accumulate(self, key: TermKey, coefficient: complex) -> None:
        if coefficient == 0:
            return
        if not np.isfinite(coefficient):
            raise DegreeOverflowError(f"non-finite coefficient for term {key}")
        if len(key[1]) > self.max_degree:
            raise DegreeOverflowError(f"term of degree {len(key[1])} exceeds the bound D={self.max_degree}")
        total = self.terms.get(key, 0.0) + coefficient
        if total == 0:
            self.terms.pop(key, None)
        else:
            self.terms[key] = total

    def add_term(self, hbar_power: int, insertions: Iterable[int], coefficient: complex) -> None:
        self._accumulate(_key(hbar_power, insertions), complex(coefficient))

    def __iter__(self) -> Iterator[Tuple[TermKey, complex]]:
        return iter(sorted(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def degree(self) -> int:
        return max((len(insertions) for _, insertions in self.terms), default=0)

    def coefficient(self, hbar_power: int, insertions: Iterable[int] = ()) -> complex:
        return self.terms.get(_key(hbar_power, insertions), 0.0)

    def copy(self) -> "FunctionalPolynomial":
        return FunctionalPolynomial(self.max_degree, dict(self.terms))

    def __add__(self, other: "FunctionalPolynomial") -> "FunctionalPolynomial":
        result = FunctionalPolynomial(max(self.max_degree, other.max_degree), dict(self.terms))
        for key, coefficient in other.terms.items():
            result._accumulate(key, coefficient)
        return result

    def __sub__(self, other: "FunctionalPolynomial") -> "FunctionalPolynomial":
        return self + other.scale(-1.0)

    def scale(self, factor: complex, hbar_shift: int = 0) -> "FunctionalPolynomial":
        """factor * hbar^hbar_shift * self."""
        return FunctionalPolynomial(
            self.max_degree,
            {(power + hbar_shift, insertions): factor * c for (power, insertions), c in self.terms.items()},
        )

    def product(self, other: "FunctionalPolynomial") -> "FunctionalPolynomial":
        """Commutative (pointwise) product."""
        bound = max(self.max_degree, other.max_degree)
        result = FunctionalPolynomial(bound)
        for (p1, i1), c1 in self.terms.items():
            for (p2, i2), c2 in other.terms.items():
                result._accumulate(_key(p1 + p2, i1 + i2), c1 * c2)
        return result

    def max_difference(self, other: "FunctionalPolynomial") -> float:
        """Largest coefficient-wise difference."""
        keys = set(self.terms) | set(other.terms)
        return max((abs(self.coefficient(*k) - other.coefficient(*k)) for k in keys), default=0.0)

    def hbar_powers(self) -> List[int]:
        return sorted({power for power, _ in self.terms})

    def to_rows(self) -> List[dict]:
        return [
            {"hbar_power": power, "insertions": list(insertions), "re": c.real, "im": c.imag}
            for (power, insertions), c in self
        ]

