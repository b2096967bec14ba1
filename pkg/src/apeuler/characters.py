"""Dirichlet characters mod q with exact root-of-unity values.

A character value is stored as a rational angle r/N in [0, 1) meaning
exp(2*pi*i*r/N), or None on residues not coprime to q.  Keeping the angles
exact makes orthogonality, conjugation and powers drift-free; conversion to
floating complex happens only at evaluation time.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from .arith import euler_phi, factorize
from .errors import InvalidArgumentError

Angle = Fraction  # reduced rational in [0, 1), angle as a fraction of a full turn


@dataclass(frozen=True)
class DirichletCharacter:
    """A Dirichlet character mod q, tabulated on all residues 0..q-1."""

    modulus: int
    angles: tuple[Angle | None, ...]  # angles[n] for residue n; None where gcd(n, q) > 1

    def angle(self, n: int) -> Angle | None:
        return self.angles[n % self.modulus]

    def __call__(self, n: int) -> complex:
        a = self.angles[n % self.modulus]
        if a is None:
            return 0j
        if a == 0:
            return 1 + 0j  # exact, the common case
        return cmath.exp(2j * cmath.pi * float(a))

    @cached_property
    def order(self) -> int:
        """Smallest k >= 1 with chi^k principal."""
        return math.lcm(*(a.denominator for a in self.angles if a is not None))

    @property
    def is_principal(self) -> bool:
        return all(a == 0 for a in self.angles if a is not None)

    def __pow__(self, d: int) -> "DirichletCharacter":
        if d < 0:
            raise InvalidArgumentError("character power must be >= 0")
        return DirichletCharacter(
            self.modulus,
            tuple(None if a is None else (a * d) % 1 for a in self.angles),
        )

    def conj(self) -> "DirichletCharacter":
        return DirichletCharacter(
            self.modulus,
            tuple(None if a is None else (-a) % 1 for a in self.angles),
        )


@dataclass(frozen=True)
class CharacterGroup:
    """The full group of the phi(q) Dirichlet characters mod q."""

    modulus: int
    characters: tuple[DirichletCharacter, ...]
    principal_index: int = 0

    @property
    def principal(self) -> DirichletCharacter:
        return self.characters[self.principal_index]

    def __len__(self) -> int:
        return len(self.characters)


def _primitive_root(p: int, e: int) -> int:
    """A generator of (Z/p^e Z)* for odd prime p."""
    prime_factors = [f for f, _ in factorize(p - 1)]
    g = 2
    while any(pow(g, (p - 1) // f, p) == 1 for f in prime_factors):
        g += 1
    if e > 1 and pow(g, p - 1, p * p) == 1:
        g += p  # g generates mod p but not mod p^2; g + p always does
    return g


def _component_generators(p: int, e: int) -> list[tuple[int, int]]:
    """Generators (with orders) of (Z/p^e Z)*."""
    q = p**e
    if p == 2:
        if e == 1:
            return []
        if e == 2:
            return [(3, 2)]
        return [(q - 1, 2), (5, 2 ** (e - 2))]  # -1 and 5
    return [(_primitive_root(p, e), euler_phi(q))]


def _component_dlog(q: int, gens: list[tuple[int, int]]) -> dict[int, tuple[int, ...]]:
    """Discrete logs of every unit mod q with respect to ``gens`` (direct table walk)."""
    table: dict[int, tuple[int, ...]] = {}
    for exps in itertools.product(*(range(o) for _, o in gens)):
        v = 1
        for (g, _), t in zip(gens, exps):
            v = v * pow(g, t, q) % q
        table[v] = exps
    if 1 % q not in table:
        table[1 % q] = ()
    return table


@lru_cache(maxsize=None)
def character_group(q: int) -> CharacterGroup:
    """Build the character group mod q through the structure of (Z/qZ)*."""
    if q < 1:
        raise InvalidArgumentError("modulus must be >= 1")
    components = []  # (q_i, orders, dlog table)
    for p, e in factorize(q):
        qi = p**e
        gens = _component_generators(p, e)
        components.append((qi, [o for _, o in gens], _component_dlog(qi, gens)))

    slot_orders = [o for _, orders, _ in components for o in orders]

    # Precompute, per residue n, the concatenated discrete logs (or None).
    dlogs: list[tuple[int, ...] | None] = []
    for n in range(q):
        if math.gcd(n, q) != 1:
            dlogs.append(None)
            continue
        exps: list[int] = []
        for qi, orders, table in components:
            exps.extend(table[n % qi])
        dlogs.append(tuple(exps))

    characters = []
    for ts in itertools.product(*(range(o) for o in slot_orders)):
        angles: list[Angle | None] = []
        for d in dlogs:
            if d is None:
                angles.append(None)
            else:
                a = sum(
                    (Fraction(t * x, o) for t, x, o in zip(ts, d, slot_orders)),
                    Fraction(0),
                )
                angles.append(a % 1)
        characters.append(DirichletCharacter(q, tuple(angles)))

    grp = CharacterGroup(modulus=q, characters=tuple(characters))
    assert len(grp) == euler_phi(q)
    assert grp.principal.is_principal
    return grp
