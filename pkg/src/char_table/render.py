"""
Text and JSON renderings of character tables.
"""

from typing import Any, Dict, List

from rich.table import Table

from src.char_table.table import CharTable
from src.cyclotomic.cyc import Cyc
from src.group_core.permutation import to_cycles


def table_to_json(table: CharTable) -> Dict[str, Any]:
    G = table.group
    return {
        "group": G.name,
        "order": G.order,
        "exponent": table.exponent,
        "classes": [
            {
                "index": c.index,
                "representative": to_cycles(G.perm(c.representative)),
                "size": c.size,
                "element_order": int(G.element_orders[c.representative]),
            }
            for c in table.classes
        ],
        "rows": [
            {
                "index": chi.index,
                "degree": chi.degree_int,
                "values": [v.to_json() for v in chi.values],
            }
            for chi in table.rows
        ],
    }


def table_from_json(data: Dict[str, Any]) -> List[List[Cyc]]:
    """Row values from ``table_to_json`` output, in row order."""
    rows = sorted(data["rows"], key=lambda r: r["index"])
    return [[Cyc.from_json(v) for v in row["values"]] for row in rows]


def render_table(table: CharTable) -> Table:
    G = table.group
    out = Table(title=f"Character table of {G.name} (order {G.order})")
    out.add_column("", justify="right")
    for c in table.classes:
        order = int(G.element_orders[c.representative])
        out.add_column(f"{c.index}\n{order}:{c.size}", justify="right")
    for chi in table.rows:
        out.add_row(f"X.{chi.index}", *(str(v) for v in chi.values))
    return out
