"""
Reading and writing ``.perm`` group files.

Format: the first meaningful line is ``degree N``; every further non-empty
line is one generator written as disjoint cycles. ``#`` starts a comment.
"""

from pathlib import Path
from typing import List, Optional, Tuple, Union

from src.group_core.group import Group
from src.group_core.permutation import parse_cycles, to_cycles
from src.utils.errors import InputError, PermutationSyntaxError


def parse_perm_text(text: str) -> Tuple[int, List[str]]:
    degree: Optional[int] = None
    generators: List[str] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            parts = line.split()
            if len(parts) != 2 or parts[0].lower() != "degree" or not parts[1].isdigit():
                raise PermutationSyntaxError(f"line {number}: expected 'degree N', got {line!r}")
            degree = int(parts[1])
            if degree < 1:
                raise PermutationSyntaxError(f"line {number}: degree must be positive")
            continue
        parse_cycles(line, degree)
        generators.append(line)
    if degree is None:
        raise PermutationSyntaxError("missing 'degree N' line")
    return degree, generators


def read_perm_file(path: Union[str, Path], order_cap: Optional[int] = None) -> Group:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {p}: {e}") from e
    degree, generators = parse_perm_text(text)
    return Group.from_cycles(degree, generators, name=p.stem, order_cap=order_cap)


def write_perm_file(G: Group, path: Union[str, Path]) -> None:
    lines = [f"# {G.name}, order {G.order}", f"degree {G.degree}"]
    lines.extend(to_cycles(g) for g in G.generators)
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
