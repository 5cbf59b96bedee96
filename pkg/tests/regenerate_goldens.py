"""Regenerate the checked-in .tex golden tables from the hand-transcribed
reference data in golden_tables.py.

Run from the repository root:

    python3 tests/regenerate_goldens.py

The layout mirrors the CLI's tex table format; values come only from the
transcription, never from the library's multiplicity pipeline.
"""

import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

from golden_tables import GENERIC_SPLIT, UNIPOTENT_SPLIT, UNIPOTENT_TWISTED

from ennola.partitions import partition_to_text

TABLES = [
    ("V", "V", GENERIC_SPLIT),
    ("U", "U", UNIPOTENT_SPLIT),
    ("Uprime", "U'", UNIPOTENT_TWISTED),
]


def render(rows: dict, sym: str, k: int = 3) -> str:
    lines = ["\\begin{tabular}{" + "c" * k + "|l}"]
    lines.append(" & ".join(f"$\\mu^{i + 1}$" for i in range(k)) + f" & ${sym}$\\\\")
    lines.append("\\hline")
    for mu in sorted(rows):
        cells = " & ".join(f"$({partition_to_text(c)})$" for c in mu)
        lines.append(f"{cells} & ${rows[mu].replace('*', '')}$\\\\")
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"


def render_all():
    """Yield (which, n, rendered text) for every reference table."""
    for which, sym, table in TABLES:
        for n, rows in sorted(table.items()):
            yield which, n, render(rows, sym)


def main() -> None:
    data_dir = os.path.join(os.path.dirname(__file__), "data")
    os.makedirs(data_dir, exist_ok=True)
    for which, n, text in render_all():
        path = os.path.join(data_dir, f"{which}_n{n}.tex")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
