# -*- coding: utf-8 -*-
# Copyright 2021 The singshadow developers
#
# This file is part of singshadow.
#
# singshadow is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# singshadow is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with singshadow. If not, see <http://www.gnu.org/licenses/>.

"""Canonical multivariate polynomials in the variables s1, t1, s2, t2,
s3, t3 and t.
"""

import re
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

__all__ = [
    "Monomial",
    "MultiPoly",
    "VARIABLES",
    "canonical_form",
    "parse_polynomial",
    "render",
]


# Fixed variable order, first variable most significant
VARIABLES = ("s1", "t1", "s2", "t2", "s3", "t3", "t")

_COEFFICIENT = re.compile(r"^-?\d+$")
_FACTOR = re.compile(r"^(s1|t1|s2|t2|s3|t3|t)(?:\^(\d+))?$")


class Monomial:
    """A product of the fixed variables with nonnegative exponents.

    Parameters
    ----------
    exponents
        Mapping of variable name to exponent. Variables not present
        have exponent 0.
    **kwargs
        Exponents given as keyword arguments, e.g. ``Monomial(t=2)``.

    Examples
    --------
    >>> from singshadow.polynomial import Monomial
    >>> Monomial(s1=2, t1=2).exponents
    {'s1': 2, 't1': 2}
    >>> Monomial().degree
    0
    """

    __slots__ = ("_vector",)

    def __init__(self, exponents: Optional[Mapping[str, int]] = None, **kwargs):
        given = dict(exponents or {})
        given.update(kwargs)
        vector = [0] * len(VARIABLES)
        for name, exponent in given.items():
            if name not in VARIABLES:
                raise ValueError(
                    f"Unknown variable '{name}', must be one of {VARIABLES}"
                )
            exponent = int(exponent)
            if exponent < 0:
                raise ValueError(f"Exponent of '{name}' must be nonnegative")
            vector[VARIABLES.index(name)] = exponent
        self._vector = tuple(vector)

    @classmethod
    def from_vector(cls, vector: Iterable[int]) -> "Monomial":
        """Create a monomial from an exponent vector in variable order."""
        vector = tuple(int(e) for e in vector)
        if len(vector) != len(VARIABLES):
            raise ValueError(
                f"Exponent vector must have length {len(VARIABLES)}, not "
                f"{len(vector)}"
            )
        return cls(dict(zip(VARIABLES, vector)))

    @property
    def vector(self) -> Tuple[int, ...]:
        return self._vector

    @property
    def exponents(self) -> Dict[str, int]:
        """Nonzero exponents by variable name."""
        return {v: e for v, e in zip(VARIABLES, self._vector) if e}

    @property
    def degree(self) -> int:
        return sum(self._vector)

    @property
    def sort_key(self) -> tuple:
        """Key sorting monomials by total degree descending, then by
        exponent vector descending.
        """
        return (-self.degree,) + tuple(-e for e in self._vector)

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self._vector == other._vector

    def __hash__(self) -> int:
        return hash(self._vector)

    def __repr__(self) -> str:
        args = ", ".join(f"{v}={e}" for v, e in self.exponents.items())
        return f"{self.__class__.__name__}({args})"

    def __str__(self) -> str:
        factors = []
        for name, exponent in zip(VARIABLES, self._vector):
            if exponent == 1:
                factors.append(name)
            elif exponent > 1:
                factors.append(f"{name}^{exponent}")
        return "*".join(factors)


class MultiPoly:
    """Polynomial with integer coefficients in canonical form.

    Like terms are merged, zero coefficients are dropped, and terms are
    kept in canonical order: total degree descending, then exponent
    vector descending in the order of :data:`VARIABLES`.

    Parameters
    ----------
    terms
        Mapping of :class:`Monomial` to coefficient, or an iterable of
        (monomial, coefficient) pairs. Repeated monomials are summed.
    """

    __slots__ = ("_terms",)

    def __init__(
        self,
        terms: Union[
            Mapping[Monomial, int], Iterable[Tuple[Monomial, int]], None
        ] = None,
    ):
        if terms is None:
            terms = ()
        elif isinstance(terms, Mapping):
            terms = terms.items()
        merged: Dict[Monomial, int] = {}
        for monomial, coefficient in terms:
            if not isinstance(monomial, Monomial):
                raise TypeError(f"Expected a Monomial, not {type(monomial)}")
            merged[monomial] = merged.get(monomial, 0) + int(coefficient)
        self._terms = tuple(
            sorted(
                ((m, c) for m, c in merged.items() if c != 0),
                key=lambda term: term[0].sort_key,
            )
        )

    @classmethod
    def monomial(cls, coefficient: int = 1, **exponents) -> "MultiPoly":
        """Polynomial with a single term, e.g.
        ``MultiPoly.monomial(2, t=8)`` is 2*t^8.
        """
        return cls([(Monomial(exponents), coefficient)])

    @property
    def terms(self) -> Dict[Monomial, int]:
        """Terms in canonical order."""
        return dict(self._terms)

    @property
    def degree(self) -> int:
        """Total degree, -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return self._terms[0][0].degree

    @property
    def sort_key(self) -> tuple:
        """Key ordering polynomials by their leading terms, with smaller
        coefficients first on equal monomials.
        """
        return tuple(m.sort_key + (c,) for m, c in self._terms)

    def __iter__(self) -> Iterator[Tuple[Monomial, int]]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other) -> "MultiPoly":
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return MultiPoly(self._terms + other._terms)

    __radd__ = __add__

    def __eq__(self, other) -> bool:
        return isinstance(other, MultiPoly) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}('{render(self)}')"

    def __str__(self) -> str:
        return render(self)


def canonical_form(raw: Iterable[Tuple[Monomial, int]]) -> MultiPoly:
    """Merge like terms, drop zero coefficients and sort the terms.

    Parameters
    ----------
    raw
        Iterable of (monomial, coefficient) pairs.

    Returns
    -------
    MultiPoly

    Examples
    --------
    >>> from singshadow.polynomial import Monomial, canonical_form
    >>> str(canonical_form([(Monomial(t=8), 1), (Monomial(), 1)] * 2))
    '2*t^8 + 2'
    """
    return MultiPoly(list(raw))


def render(p: MultiPoly) -> str:
    """Deterministic text form of a polynomial.

    Factors are joined by "*" and terms by " + ". Exponents and
    coefficients equal to 1 are left out, and the zero polynomial is
    "0".
    """
    if not p:
        return "0"
    rendered = []
    for monomial, coefficient in p:
        factors = str(monomial)
        if not factors:
            rendered.append(str(coefficient))
        elif coefficient == 1:
            rendered.append(factors)
        elif coefficient == -1:
            rendered.append(f"-{factors}")
        else:
            rendered.append(f"{coefficient}*{factors}")
    return " + ".join(rendered)


def parse_polynomial(text: str) -> MultiPoly:
    """Parse the grammar emitted by :func:`render`.

    Parameters
    ----------
    text
        Rendered polynomial, e.g. "s1^2*t1^2*s2*t2*s3^4*t3^4" or
        "2*t^8 + 2".

    Returns
    -------
    MultiPoly
    """
    text = text.strip()
    if text == "0":
        return MultiPoly()
    terms = []
    for term in text.split(" + "):
        factors = term.strip().split("*")
        coefficient = 1
        if _COEFFICIENT.match(factors[0]):
            coefficient = int(factors.pop(0))
        elif factors[0].startswith("-"):
            coefficient = -1
            factors[0] = factors[0][1:]
        exponents: Dict[str, int] = {}
        for factor in factors:
            match = _FACTOR.match(factor)
            if match is None:
                raise ValueError(f"Cannot parse factor '{factor}' in '{text}'")
            name, exponent = match.group(1), match.group(2)
            exponents[name] = exponents.get(name, 0) + int(exponent or 1)
        terms.append((Monomial(exponents), coefficient))
    return MultiPoly(terms)
