"""
pi-partial characters and the irreducible set I_pi(G).

A pi-partial character is the restriction of a character to the
pi-elements, stored class-wise on the pi-classes. ``ipi`` builds I_pi(G)
by ascending degree: a restriction is irreducible exactly when it is not a
non-negative integer combination of irreducibles of smaller degree.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.char_table.operations import fusion
from src.char_table.table import CharTable, Character, ClassFunction, character_table
from src.cyclotomic.arrays import pack
from src.cyclotomic.cyc import Cyc
from src.group_core.group import Group
from src.group_core.permutation import to_cycles
from src.group_core.primes import PiSet
from src.group_core.structure import conjugacy_classes, is_pi_separable, require_normal
from src.pi_theory.rational import RationalBasis, as_fractions
from src.utils.errors import EngineAnomaly, GroupMismatchError, NotACharacterError, NotPiSeparableError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class PiClassSet:
    """Classes whose representatives are pi-elements, identity class first."""
    group: Group
    pi: PiSet
    classes: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.classes)

    @property
    def index_array(self) -> np.ndarray:
        return np.array(self.classes, dtype=np.int64)


def pi_classes(G: Group, pi: PiSet) -> PiClassSet:
    def compute() -> PiClassSet:
        orders = conjugacy_classes(G).rep_orders
        keep = tuple(k for k, o in enumerate(orders) if pi.is_number(int(o)))
        return PiClassSet(G, pi, keep)

    return G.memo(("pi_classes", pi), compute)


@dataclass(frozen=True, eq=False)
class PartialCharacter:
    """
    A class function on the pi-classes of a group.

    ``origin`` is a character whose restriction this is, when known.
    """
    classes: PiClassSet
    values: Tuple[Cyc, ...]
    origin: Optional[Character] = field(default=None)

    @property
    def group(self) -> Group:
        return self.classes.group

    @property
    def pi(self) -> PiSet:
        return self.classes.pi

    @property
    def degree(self) -> int:
        d = self.values[0].to_int()
        if d is None:
            raise NotACharacterError("partial character degree is not an integer")
        return d

    def _check(self, other: "PartialCharacter") -> None:
        if other.group is not self.group or other.pi != self.pi:
            raise GroupMismatchError("partial characters of different groups or prime sets")

    def __add__(self, other: "PartialCharacter") -> "PartialCharacter":
        self._check(other)
        return PartialCharacter(self.classes, tuple(a + b for a, b in zip(self.values, other.values)))

    def __mul__(self, k: int) -> "PartialCharacter":
        if not isinstance(k, int):
            return NotImplemented
        return PartialCharacter(self.classes, tuple(v * k for v in self.values))

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartialCharacter):
            return NotImplemented
        return self.group is other.group and self.pi == other.pi and self.values == other.values

    def __hash__(self) -> int:
        return hash((id(self.group), self.values))

    def vector(self, conductor: int) -> np.ndarray:
        """Rational coefficient vector of all values in Q(zeta_conductor)."""
        arr, den = pack(self.values, conductor)
        return as_fractions(arr.ravel(), den)

    def describe(self) -> Dict[str, Any]:
        return {
            "degree": self.degree,
            "values": [str(v) for v in self.values],
            "origin": None if self.origin is None else self.origin.index,
        }

    def __repr__(self) -> str:
        return f"PartialCharacter({self.group.name}, pi={self.pi}: " + ", ".join(str(v) for v in self.values) + ")"


def restrict_to_pi(f: ClassFunction, pi: PiSet) -> PartialCharacter:
    """chi^0: the values of chi on the pi-classes."""
    classes = pi_classes(f.group, pi)
    origin = f if isinstance(f, Character) else None
    return PartialCharacter(classes, tuple(f.values[k] for k in classes.classes), origin)


def restrict_partial(psi: PartialCharacter, N: Group) -> PartialCharacter:
    """Restriction of a partial character of G to a normal subgroup N."""
    G = psi.group
    require_normal(N, G)
    target = pi_classes(N, psi.pi)
    fus = fusion(N, G)
    position = {k: i for i, k in enumerate(psi.classes.classes)}
    return PartialCharacter(target, tuple(psi.values[position[int(fus[d])]] for d in target.classes))


@dataclass(frozen=True, eq=False)
class PartialTable:
    """
    I_pi(G) with the decomposition of every chi^0.

    - ``members``: irreducible pi-partial characters in construction order
    - ``decomposition[i, j]``: multiplicity of member j in (chi_i)^0
    """
    table: CharTable
    classes: PiClassSet
    members: Tuple[PartialCharacter, ...]
    decomposition: np.ndarray
    basis: RationalBasis

    @property
    def group(self) -> Group:
        return self.table.group

    @property
    def pi(self) -> PiSet:
        return self.classes.pi

    def __len__(self) -> int:
        return len(self.members)

    def index_of(self, psi: PartialCharacter) -> Optional[int]:
        for j, member in enumerate(self.members):
            if member == psi:
                return j
        return None

    def member_of_row(self, row: int) -> Optional[int]:
        """The member equal to (chi_row)^0, if that restriction is irreducible."""
        nonzero = np.flatnonzero(self.decomposition[row])
        if nonzero.size == 1 and self.decomposition[row, nonzero[0]] == 1:
            return int(nonzero[0])
        return None

    def lift_rows(self, member: int) -> Tuple[int, ...]:
        """Rows chi of Irr(G) with chi^0 equal to the given member."""
        column = self.decomposition[:, member]
        hits = (column == 1) & (self.decomposition.sum(axis=1) == 1)
        return tuple(int(i) for i in np.flatnonzero(hits))

    def to_json(self) -> Dict[str, Any]:
        G = self.group
        reps = conjugacy_classes(G).representatives
        return {
            "group": G.name,
            "pi": sorted(self.pi.primes),
            "pi_classes": [
                {"index": k, "representative": to_cycles(G.perm(int(reps[k])))} for k in self.classes.classes
            ],
            "members": [
                {"index": j, "degree": m.degree, "values": [v.to_json() for v in m.values]}
                for j, m in enumerate(self.members)
            ],
            "decomposition": self.decomposition.tolist(),
        }


def _integral_coordinates(coords: Dict[int, Fraction], size: int) -> Optional[List[int]]:
    out = [0] * size
    for j, w in coords.items():
        if w.denominator != 1 or w < 0:
            return None
        out[j] = int(w)
    return out


def ipi(G: Group, pi: PiSet) -> PartialTable:
    """The irreducible pi-partial characters of a pi-separable group."""
    if not is_pi_separable(G, pi).holds:
        raise NotPiSeparableError(f"{G.name} is not {pi}-separable")
    return G.memo(("ipi", pi), lambda: _build_ipi(G, pi))


def _build_ipi(G: Group, pi: PiSet) -> PartialTable:
    table = character_table(G)
    classes = pi_classes(G, pi)
    e = table.exponent
    restricted = table.values_array[:, classes.index_array, :]

    distinct: Dict[bytes, int] = {}
    for i in range(len(table)):
        distinct.setdefault(np.ascontiguousarray(restricted[i]).tobytes(), i)
    order = sorted(distinct.values(), key=lambda i: (table.degrees[i], i))

    basis = RationalBasis(len(classes) * e)
    members: List[PartialCharacter] = []
    for i in order:
        vector = as_fractions(restricted[i].ravel())
        coords = basis.coordinates(vector)
        if coords is not None and _integral_coordinates(coords, basis.size) is not None:
            continue
        if basis.add(vector) is None:
            raise EngineAnomaly(
                "ipi",
                f"restriction of row {i} is irreducible but linearly dependent",
                {"group": G.name, "pi": str(pi), "row": i},
            )
        members.append(restrict_to_pi(table.rows[i], pi))

    if len(members) != len(classes):
        raise EngineAnomaly(
            "ipi",
            f"{len(members)} irreducible partial characters for {len(classes)} pi-classes",
            {"group": G.name, "pi": str(pi)},
        )

    decomposition = np.zeros((len(table), len(members)), dtype=np.int64)
    for i in range(len(table)):
        coords = basis.coordinates(as_fractions(restricted[i].ravel()))
        mults = None if coords is None else _integral_coordinates(coords, len(members))
        if mults is None:
            raise EngineAnomaly(
                "ipi",
                f"restriction of row {i} is not a non-negative integer combination",
                {"group": G.name, "pi": str(pi), "row": i},
            )
        decomposition[i] = mults
    logger.debug(f"I_pi({G.name}), pi={pi}: {len(members)} members")
    return PartialTable(table, classes, tuple(members), decomposition, basis)


def decompose_partial(psi: PartialCharacter, ptable: PartialTable) -> Tuple[Tuple[PartialCharacter, int], ...]:
    """Coordinates of psi in I_pi(G); they must be non-negative integers."""
    if psi.group is not ptable.group or psi.pi != ptable.pi:
        raise GroupMismatchError("partial character and table differ in group or prime set")
    coords = ptable.basis.coordinates(psi.vector(ptable.table.exponent))
    mults = None if coords is None else _integral_coordinates(coords, len(ptable))
    if mults is None:
        raise NotACharacterError(f"{psi!r} is not a pi-partial character")
    return tuple((ptable.members[j], m) for j, m in enumerate(mults) if m)


def lifts_of(phi: PartialCharacter, ptable: Optional[PartialTable] = None) -> Tuple[Character, ...]:
    """All chi in Irr(G) with chi^0 = phi, in row order."""
    ptable = ptable or ipi(phi.group, phi.pi)
    j = ptable.index_of(phi)
    if j is None:
        raise NotACharacterError(f"{phi!r} is not an irreducible pi-partial character")
    return tuple(ptable.table.rows[i] for i in ptable.lift_rows(j))


def partial_from_values(G: Group, pi: PiSet, values: Sequence[Any]) -> PartialCharacter:
    classes = pi_classes(G, pi)
    if len(values) != len(classes):
        raise GroupMismatchError(f"expected {len(classes)} values, got {len(values)}")
    return PartialCharacter(classes, tuple(v if isinstance(v, Cyc) else Cyc.rational(v) for v in values))
