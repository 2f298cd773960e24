"""
Character tables, class functions and characters.

``character_table(G)`` runs the Dixon-Schneider engine once per group and
memoises the result on the group. Rows are sorted by degree, then by the
class-by-class canonical coefficient vectors in descending order, which puts
the trivial character first.
"""

import logging
import math
from fractions import Fraction
from functools import cached_property
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from src.char_table.dixon import dixon_schneider, power_classes
from src.config import get_settings
from src.cyclotomic.arrays import hermitian_products, lift_array, multiply, pack, reduce_rows
from src.cyclotomic.cyc import Cyc
from src.group_core.group import Group
from src.group_core.structure import ConjClassSet, conjugacy_classes
from src.utils.errors import CharacterTableError, GroupMismatchError, NotACharacterError

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction, Cyc]


class ClassFunction:
    """
    A class function of a group with cyclotomic values, one per class.

    Values may be virtual or reducible; irreducible characters are the
    ``Character`` subclass.
    """

    def __init__(self, table: "CharTable", values: Sequence[Scalar]):
        if len(values) != len(table.classes):
            raise GroupMismatchError(
                f"expected {len(table.classes)} values for {table.group.name}, got {len(values)}"
            )
        self.table = table
        self.values: Tuple[Cyc, ...] = tuple(v if isinstance(v, Cyc) else Cyc.rational(v) for v in values)

    @property
    def group(self) -> Group:
        return self.table.group

    @cached_property
    def conductor(self) -> int:
        return math.lcm(self.table.exponent, *(v.conductor for v in self.values))

    @cached_property
    def packed(self) -> Tuple[np.ndarray, int]:
        """(classes, conductor) numerators and their common denominator."""
        return pack(self.values, self.conductor)

    def packed_at(self, m: int) -> Tuple[np.ndarray, int]:
        arr, den = self.packed
        return lift_array(arr, self.conductor, m), den

    @property
    def degree(self) -> Cyc:
        return self.values[0]

    @property
    def degree_int(self) -> int:
        d = self.values[0].to_int()
        if d is None:
            raise NotACharacterError("degree is not an integer")
        return d

    def _check(self, other: "ClassFunction") -> None:
        if other.table is not self.table:
            raise GroupMismatchError(f"class functions live on {self.group.name} and {other.group.name}")

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.table, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.table, [a - b for a, b in zip(self.values, other.values)])

    def __neg__(self) -> "ClassFunction":
        return ClassFunction(self.table, [-a for a in self.values])

    def __mul__(self, other: Any) -> "ClassFunction":
        if isinstance(other, ClassFunction):
            return pointwise(self, other)
        if isinstance(other, (int, Fraction, Cyc)):
            return ClassFunction(self.table, [a * other for a in self.values])
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.table is other.table and self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def inner(self, other: "ClassFunction") -> Cyc:
        """<self, other> = |G|^-1 sum over classes of size * self * conj(other)."""
        self._check(other)
        m = math.lcm(self.conductor, other.conductor)
        a, da = self.packed_at(m)
        b, db = other.packed_at(m)
        reduced = hermitian_products(a[None], b[None], self.table.sizes, m)[0, 0]
        return Cyc.from_reduced(m, [int(x) for x in reduced], self.group.order * da * db)

    def norm(self) -> Cyc:
        return self.inner(self)

    def decompose(self, allow_virtual: bool = False) -> Tuple[int, ...]:
        """Multiplicities of the irreducible characters, in row order."""
        return self.table.decompose(self, allow_virtual=allow_virtual)

    def is_character(self) -> bool:
        try:
            return any(self.decompose())
        except NotACharacterError:
            return False

    def as_character(self) -> Optional["Character"]:
        return self.table.match(self)

    def is_irreducible(self) -> bool:
        return self.as_character() is not None

    @property
    def is_linear(self) -> bool:
        return self.values[0] == 1

    def kernel(self) -> Group:
        """Elements where the value equals the degree."""
        d = self.values[0]
        keep = [k for k, v in enumerate(self.values) if v == d]
        classes = self.table.classes
        members = np.concatenate([classes[k].members for k in keep])
        return self.group.subgroup_from_local(members)

    def __repr__(self) -> str:
        return f"ClassFunction({self.group.name}: " + ", ".join(str(v) for v in self.values) + ")"


class Character(ClassFunction):
    """An irreducible character: row ``index`` of its table."""

    def __init__(self, table: "CharTable", index: int, values: Sequence[Cyc], packed: np.ndarray):
        super().__init__(table, values)
        self.index = index
        self.__dict__["conductor"] = table.exponent
        self.__dict__["packed"] = (packed, 1)

    irreducible = True

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Character):
            return self.table is other.table and self.index == other.index
        return super().__eq__(other)

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return f"Character({self.group.name}#{self.index}, degree {self.values[0]})"


class CharTable:
    """
    Exact irreducible characters of a group.

    - ``classes``: conjugacy classes in canonical order
    - ``exponent``: all values lie in Q(zeta_exponent)
    - ``rows``: characters in canonical row order
    - ``det_exponents[i, k]``: det(chi_i)(g_k) = zeta_exponent^det_exponents[i, k]
    """

    def __init__(
        self,
        group: Group,
        classes: ConjClassSet,
        exponent: int,
        values: np.ndarray,
        det_exponents: np.ndarray,
        powers: List[np.ndarray],
        prime: int,
    ):
        self.group = group
        self.classes = classes
        self.exponent = exponent
        self.prime = prime
        self.values_array = values
        self.det_exponents = det_exponents
        self._powers = powers
        self.sizes = classes.sizes
        self.rows: Tuple[Character, ...] = tuple(
            Character(self, i, [Cyc.from_reduced(exponent, [int(x) for x in values[i, k]]) for k in range(values.shape[1])],
                      values[i])
            for i in range(values.shape[0])
        )
        self._lifted: Dict[int, np.ndarray] = {exponent: values}
        self._lookup: Dict[int, Dict[bytes, int]] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def __getitem__(self, i: int) -> Character:
        return self.rows[i]

    def __iter__(self):
        return iter(self.rows)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(int(self.values_array[i, 0, 0]) for i in range(len(self.rows)))

    @property
    def trivial(self) -> Character:
        return self.rows[0]

    @property
    def centralizer_orders(self) -> np.ndarray:
        return self.group.order // self.sizes

    def memo(self, key: Any, factory: Callable[[], Any]) -> Any:
        return self.group.memo(("table", key), factory)

    def power_map(self, k: int) -> Tuple[int, ...]:
        """Class of g^k for each class representative g."""
        return tuple(int(p[k % p.size]) for p in self._powers)

    def power_classes(self, c: int) -> np.ndarray:
        return self._powers[c]

    def rows_at(self, m: int) -> np.ndarray:
        """All rows as packed numerators of conductor m (a multiple of the exponent)."""
        if m not in self._lifted:
            self._lifted[m] = lift_array(self.values_array, self.exponent, m)
        return self._lifted[m]

    def _row_lookup(self, m: int) -> Dict[bytes, int]:
        if m not in self._lookup:
            rows = np.ascontiguousarray(self.rows_at(m), dtype=np.int64)
            self._lookup[m] = {rows[i].tobytes(): i for i in range(rows.shape[0])}
        return self._lookup[m]

    def match(self, f: ClassFunction) -> Optional[Character]:
        """The irreducible character equal to f, if any."""
        if isinstance(f, Character) and f.table is self:
            return f
        if f.table is not self:
            raise GroupMismatchError("class function belongs to another table")
        arr, den = f.packed
        if den != 1 or arr.dtype == object:
            return None
        key = np.ascontiguousarray(arr, dtype=np.int64).tobytes()
        index = self._row_lookup(f.conductor).get(key)
        return None if index is None else self.rows[index]

    def row_index_of_values(self, arr: np.ndarray) -> Optional[int]:
        """Row with exactly these packed numerators at the table's exponent."""
        return self._row_lookup(self.exponent).get(np.ascontiguousarray(arr, dtype=np.int64).tobytes())

    def inner_products(self, f: ClassFunction) -> Tuple[Cyc, ...]:
        """<f, chi_i> for every row."""
        if f.table is not self:
            raise GroupMismatchError("class function belongs to another table")
        m = f.conductor
        arr, den = f.packed
        reduced = hermitian_products(arr[None], self.rows_at(m), self.sizes, m)[0]
        scale = self.group.order * den
        return tuple(Cyc.from_reduced(m, [int(x) for x in row], scale) for row in reduced)

    def decompose(self, f: ClassFunction, allow_virtual: bool = False) -> Tuple[int, ...]:
        mults: List[int] = []
        for i, value in enumerate(self.inner_products(f)):
            n = value.to_int()
            if n is None or (n < 0 and not allow_virtual):
                raise NotACharacterError(f"multiplicity of row {i} is {value}")
            mults.append(n)
        return tuple(mults)

    def combination(self, mults: Sequence[int]) -> ClassFunction:
        total = np.tensordot(np.array(mults, dtype=np.int64), self.values_array, axes=1)
        return ClassFunction(self, [Cyc.from_reduced(self.exponent, [int(x) for x in row]) for row in total])

    def class_function(self, values: Sequence[Scalar]) -> ClassFunction:
        return ClassFunction(self, values)

    def regular_character(self) -> ClassFunction:
        return ClassFunction(self, [self.group.order] + [0] * (len(self.classes) - 1))

    def __repr__(self) -> str:
        return f"CharTable({self.group.name}, {len(self.rows)} rows)"


def pointwise(a: ClassFunction, b: ClassFunction) -> ClassFunction:
    a._check(b)
    m = math.lcm(a.conductor, b.conductor)
    x, dx = a.packed_at(m)
    y, dy = b.packed_at(m)
    prod = multiply(x, y, m)
    den = dx * dy
    return ClassFunction(a.table, [Cyc.from_reduced(m, [int(v) for v in row], den) for row in prod])


def _row_sort_key(degree: int, values: np.ndarray) -> Tuple[Any, ...]:
    return (degree, tuple(tuple(-int(x) for x in cls) for cls in values))


def orthogonality_checks(table: CharTable) -> Dict[str, bool]:
    """Sum of squared degrees, row orthogonality and column orthogonality, each checked exactly."""
    order = table.group.order
    e = table.exponent
    r = len(table.rows)
    gram = hermitian_products(table.values_array, table.values_array, table.sizes, e)
    expected = np.zeros_like(gram)
    expected[np.arange(r), np.arange(r), 0] = order
    rows_ok = bool(np.array_equal(gram, expected))
    columns = np.ascontiguousarray(np.transpose(table.values_array, (1, 0, 2)))
    col = hermitian_products(columns, columns, np.ones(r, dtype=np.int64), e)
    expected = np.zeros_like(col)
    expected[np.arange(r), np.arange(r), 0] = table.centralizer_orders
    return {
        "sum_of_squares": sum(d * d for d in table.degrees) == order,
        "row_orthogonality": rows_ok,
        "column_orthogonality": bool(np.array_equal(col, expected)),
    }


def _verify(table: CharTable) -> None:
    failed = [name for name, ok in orthogonality_checks(table).items() if not ok]
    if failed:
        raise CharacterTableError(f"{table.group.name}: {', '.join(failed)} fails")


def _build(G: Group) -> CharTable:
    settings = get_settings()
    classes = conjugacy_classes(G)
    e = G.exponent
    raw = dixon_schneider(
        G,
        classes,
        e,
        max_attempts=settings.char_table.max_prime_attempts,
        krylov_attempts=settings.char_table.krylov_attempts,
    )
    r = len(classes)
    orders = classes.rep_orders
    rows: List[Tuple[Tuple[Any, ...], np.ndarray, np.ndarray]] = []
    for i in range(r):
        raw_values = np.zeros((r, e), dtype=np.int64)
        dets = np.zeros(r, dtype=np.int64)
        for k in range(r):
            o = int(orders[k])
            step = e // o
            mu = raw.multiplicities[i][k]
            raw_values[k, (np.arange(o) * step) % e] += mu
            dets[k] = int(np.dot(np.arange(o), mu)) * step % e
        values = reduce_rows(raw_values, e)
        rows.append((_row_sort_key(raw.degrees[i], values), values, dets))
    rows.sort(key=lambda t: t[0])
    values_array = np.stack([v for _, v, _ in rows]).astype(np.int64)
    dets_array = np.stack([d for _, _, d in rows])
    table = CharTable(G, classes, e, values_array, dets_array, power_classes(G, classes), raw.prime)
    if settings.char_table.verify_tables:
        _verify(table)
    logger.info(f"character table of {G.name} (order {G.order}): {r} classes, p={raw.prime}")
    return table


def character_table(G: Group) -> CharTable:
    """The exact character table of G, computed once and cached on G."""
    return G.memo("char_table", lambda: _build(G))


def inner_product(f: ClassFunction, g: ClassFunction) -> Cyc:
    return f.inner(g)

