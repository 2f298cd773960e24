"""
Incremental exact row echelon form over Q.

Each stored row remembers how it was formed from the inserted vectors, so
coordinates of a vector in the span come out as a combination of the
original members.
"""

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np


def as_fractions(values: Sequence[int], denominator: int = 1) -> np.ndarray:
    return np.array([Fraction(int(v), denominator) for v in values], dtype=object)


class RationalBasis:
    """
    Linearly independent vectors over Q, inserted one at a time.

    - ``rows[i]``: echelon row with pivot ``pivots[i]`` equal to 1
    - ``combos[i]``: member index -> coefficient with rows[i] = sum coefficient * member
    """

    def __init__(self, length: int):
        self.length = length
        self.rows: List[np.ndarray] = []
        self.pivots: List[int] = []
        self.combos: List[Dict[int, Fraction]] = []
        self.size = 0

    def reduce(self, vector: np.ndarray) -> Tuple[np.ndarray, Dict[int, Fraction]]:
        """(residual, coords) with vector = residual + sum coords[j] * member_j."""
        residual = np.array(vector, dtype=object)
        coords: Dict[int, Fraction] = {}
        for row, pivot, combo in zip(self.rows, self.pivots, self.combos):
            c = residual[pivot]
            if c:
                residual = residual - c * row
                for j, w in combo.items():
                    coords[j] = coords.get(j, Fraction(0)) + c * w
        return residual, {j: w for j, w in coords.items() if w}

    def coordinates(self, vector: np.ndarray) -> Optional[Dict[int, Fraction]]:
        """Coordinates in terms of the members, or None outside the span."""
        residual, coords = self.reduce(vector)
        if any(residual):
            return None
        return coords

    def add(self, vector: np.ndarray) -> Optional[int]:
        """Insert a vector; returns its member index, or None if it is dependent."""
        residual, coords = self.reduce(vector)
        nonzero = [i for i, x in enumerate(residual) if x]
        if not nonzero:
            return None
        index = self.size
        pivot = nonzero[0]
        scale = 1 / Fraction(residual[pivot])
        combo = {j: -w * scale for j, w in coords.items()}
        combo[index] = scale
        self.rows.append(residual * scale)
        self.pivots.append(pivot)
        self.combos.append(combo)
        self.size += 1
        return index
