"""
Restriction, induction, conjugation and determinants of characters.

Subgroups share the root numbering, so fusion maps and restriction
matrices are cached on the smaller group keyed by the larger one.
"""

import logging
import math
from typing import List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from src.char_table.table import CharTable, Character, ClassFunction, character_table, pointwise
from src.cyclotomic.arrays import hermitian_products, rational_entries
from src.cyclotomic.cyc import Cyc
from src.group_core.group import Group
from src.group_core.structure import conjugacy_classes, conjugate_subgroup, require_normal
from src.utils.errors import EngineAnomaly, NotSubgroupError

logger = logging.getLogger(__name__)


class Restriction(NamedTuple):
    """
    Irreducible constituents of a restriction.

    - ``constituents``: (character of H, multiplicity) in row order
    - ``homogeneous``: (a, eta) when the restriction equals a * eta
    """
    constituents: Tuple[Tuple[Character, int], ...]
    homogeneous: Optional[Tuple[int, Character]]

    @property
    def characters(self) -> Tuple[Character, ...]:
        return tuple(c for c, _ in self.constituents)


def _require_subgroup(H: Group, G: Group) -> None:
    if not H.is_subgroup_of(G):
        raise NotSubgroupError(f"{H.name} is not a subgroup of {G.name}")


def fusion(H: Group, G: Group) -> np.ndarray:
    """fusion[d] is the class of G containing class d of H."""
    _require_subgroup(H, G)

    def compute() -> np.ndarray:
        reps = H.to_root(conjugacy_classes(H).representatives)
        return conjugacy_classes(G).class_of[G.to_local(reps)]

    return H.memo(("fusion", G.key), compute)


def restrict(f: ClassFunction, H: Group) -> ClassFunction:
    G = f.group
    fus = fusion(H, G)
    return ClassFunction(character_table(H), [f.values[int(k)] for k in fus])


def restriction_matrix(table: CharTable, H: Group) -> np.ndarray:
    """
    m[i, j] = <(chi_i)_H, psi_j> for chi_i in Irr(G), psi_j in Irr(H).
    """
    G = table.group

    def compute() -> np.ndarray:
        fus = fusion(H, G)
        sub = character_table(H)
        e = table.exponent
        restricted = np.ascontiguousarray(table.values_array[:, fus, :])
        reduced = hermitian_products(restricted, sub.rows_at(e), sub.sizes, e)
        try:
            entries = rational_entries(reduced, H.order)
        except ValueError:
            raise EngineAnomaly("restriction", f"irrational multiplicity restricting {G.name} to {H.name}") from None
        if any(q.denominator != 1 or q < 0 for q in entries.ravel()):
            raise EngineAnomaly("restriction", f"non-integral multiplicity restricting {G.name} to {H.name}")
        return np.array([[int(q) for q in row] for row in entries], dtype=np.int64)

    return H.memo(("restriction_matrix", G.key), compute)


def restrict_constituents(f: ClassFunction, H: Group) -> Restriction:
    """Clifford decomposition of f restricted to H."""
    sub = character_table(H)
    if isinstance(f, Character):
        mults = restriction_matrix(f.table, H)[f.index]
    else:
        mults = np.array(restrict(f, H).decompose(), dtype=np.int64)
    constituents = tuple((sub.rows[j], int(m)) for j, m in enumerate(mults) if m)
    homogeneous = None
    if len(constituents) == 1:
        eta, a = constituents[0]
        homogeneous = (a, eta)
    return Restriction(constituents, homogeneous)


def induce(theta: ClassFunction, G: Group) -> ClassFunction:
    """theta^G(g_k) = |C_G(g_k)| / |H| * sum over H-classes D fusing into k of |D| theta(D)."""
    H = theta.group
    _require_subgroup(H, G)
    big = character_table(G)
    fus = fusion(H, G)
    m = math.lcm(theta.conductor, big.exponent)
    arr, den = theta.packed_at(m)
    sizes = theta.table.sizes
    acc = np.zeros((len(big.classes), m), dtype=object)
    for d in range(arr.shape[0]):
        acc[int(fus[d])] += arr[d].astype(object) * int(sizes[d])
    scale = H.order * den
    values = [
        Cyc.from_reduced(m, [int(x) * int(c) for x in acc[k]], scale)
        for k, c in enumerate(big.centralizer_orders)
    ]
    return ClassFunction(big, values)


def frobenius_reciprocity_holds(theta: ClassFunction, chi: ClassFunction) -> bool:
    """<theta^G, chi> == <theta, chi_H> for theta on H <= G and chi on G."""
    return induce(theta, chi.group).inner(chi) == theta.inner(restrict(chi, theta.group))


def induction_is_transitive(theta: ClassFunction, K: Group, G: Group) -> bool:
    """(theta^K)^G == theta^G for H <= K <= G."""
    return tuple(induce(induce(theta, K), G).values) == tuple(induce(theta, G).values)


def eigenvalue_multiplicities(f: ClassFunction, k: int) -> Tuple[int, ...]:
    """
    Multiplicities of zeta_o^m (m = 0..o-1) as eigenvalues at class k,
    o the order of the class representative, by Fourier inversion over <g>.
    """
    table = f.table
    powers = table.power_classes(k)
    o = int(powers.size)
    out = []
    for m in range(o):
        total = Cyc.zero()
        for l in range(o):
            total = total + f.values[int(powers[l])] * Cyc.root(o, -m * l)
        mu = (total / o).to_int()
        if mu is None or mu < 0:
            raise EngineAnomaly(
                "determinant",
                f"eigenvalue multiplicity {total / o} at class {k} of {f.group.name}",
                {"group": f.group.name, "class": k, "power": m},
            )
        out.append(mu)
    return tuple(out)


def determinant_exponents(f: ClassFunction) -> np.ndarray:
    """d[k] with det(f)(g_k) = zeta_e^d[k], e the group exponent."""
    table = f.table
    if isinstance(f, Character):
        return table.det_exponents[f.index]
    e = table.exponent
    out = np.zeros(len(table.classes), dtype=np.int64)
    for k in range(len(table.classes)):
        mu = eigenvalue_multiplicities(f, k)
        o = len(mu)
        out[k] = sum(m * c for m, c in enumerate(mu)) * (e // o) % e
    return out


def determinant_order(f: ClassFunction) -> int:
    """Multiplicative order of the linear character det(f)."""
    e = f.table.exponent
    return math.lcm(1, *(e // math.gcd(int(d), e) for d in determinant_exponents(f)))


def pointwise_product(a: ClassFunction, b: ClassFunction) -> ClassFunction:
    return pointwise(a, b)


def class_action(N: Group, G: Group) -> np.ndarray:
    """
    a[g, k] is the class of N containing g x_k g^-1, for g local to G and
    x_k the representative of class k.
    """
    require_normal(N, G)

    def compute() -> np.ndarray:
        R = G.root.mul
        inv = G.root.inv
        g = G.members
        reps = N.to_root(conjugacy_classes(N).representatives)
        conj = R[R[g[:, None], reps[None, :]], inv[g][:, None]]
        return conjugacy_classes(N).class_of[N.to_local(conj)]

    return N.memo(("class_action", G.key), compute)


def character_action(N: Group, G: Group) -> Tuple[np.ndarray, np.ndarray]:
    """
    Row permutations of Irr(N) induced by conjugation with elements of G.

    Returns (perms, which): ``perms[u, i]`` is the row of chi_i^g for any g
    with ``which[g] == u``.
    """
    def compute() -> Tuple[np.ndarray, np.ndarray]:
        table = character_table(N)
        actions, which = np.unique(class_action(N, G), axis=0, return_inverse=True)
        perms = np.empty((actions.shape[0], len(table)), dtype=np.int64)
        for u, sigma in enumerate(actions):
            moved = table.values_array[:, sigma, :]
            for i in range(len(table)):
                j = table.row_index_of_values(moved[i])
                if j is None:
                    raise EngineAnomaly("conjugation", f"conjugate of row {i} of {N.name} is not a row")
                perms[u, i] = j
        return perms, np.asarray(which).reshape(-1)

    return N.memo(("character_action", G.key), compute)


def conjugate_character(chi: Character, G: Group, g: int) -> Character:
    """chi^g(x) = chi(g x g^-1) for chi in Irr(N), N normal in G, g local to G."""
    perms, which = character_action(chi.group, G)
    return chi.table.rows[int(perms[which[g], chi.index])]


def stabilizer(chi: Character, G: Group) -> Group:
    """{g in G : chi^g = chi}."""
    perms, which = character_action(chi.group, G)
    fixed = perms[:, chi.index] == chi.index
    return G.subgroup_from_local(np.flatnonzero(fixed[which]), name=f"{G.name}_chi{chi.index}")


def stabilizer_of_rows(N: Group, G: Group, rows: Sequence[int]) -> np.ndarray:
    """Mask over G's elements fixing every listed row of Irr(N)."""
    perms, which = character_action(N, G)
    idx = np.asarray(list(rows), dtype=np.int64)
    fixed = np.all(perms[:, idx] == idx[None, :], axis=1)
    return fixed[which]


def conjugation_orbits(N: Group, G: Group) -> List[Tuple[int, ...]]:
    """Orbits of G on Irr(N), each sorted, listed by smallest row."""
    perms, _ = character_action(N, G)
    seen = np.zeros(perms.shape[1], dtype=bool)
    orbits = []
    for i in range(perms.shape[1]):
        if seen[i]:
            continue
        orbit = np.unique(perms[:, i])
        seen[orbit] = True
        orbits.append(tuple(int(x) for x in orbit))
    return orbits


def transport_character(chi: Character, g: int) -> Tuple[Group, Character]:
    """
    (H^g, chi^g) for chi in Irr(H) and a root element g, where
    chi^g(y) = chi(g y g^-1) on H^g = g^-1 H g.
    """
    H = chi.group
    K = conjugate_subgroup(H, g)
    if K == H and H.is_root:
        return H, chi
    root = H.root
    R = root.mul
    reps = K.to_root(conjugacy_classes(K).representatives)
    back = R[R[g, reps], root.inv[g]]
    classes = conjugacy_classes(H).class_of[H.to_local(back)]
    target = character_table(K)
    values = [chi.values[int(c)] for c in classes]
    match = target.match(ClassFunction(target, values))
    if match is None:
        raise EngineAnomaly("conjugation", f"transported row {chi.index} of {H.name} is not irreducible")
    return K, match
