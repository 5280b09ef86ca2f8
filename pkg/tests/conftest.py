import csv
from fractions import Fraction
from pathlib import Path

import pytest

DATA_DIR = Path(__file__).parent / "data"


def load_golden(name: str) -> dict[tuple[int, int], Fraction]:
    """Golden table cells keyed by (n, d)."""
    cells = {}
    with open(DATA_DIR / f"golden_{name}.csv", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        ns = [int(x) for x in header[1:]]
        for row in reader:
            d = int(row[0])
            for n, val in zip(ns, row[1:]):
                cells[(n, d)] = Fraction(val)
    return cells


@pytest.fixture(scope="session")
def golden_tables():
    return {
        name: load_golden(name)
        for name in ("werner", "brauer", "isotropic_prime", "isotropic")
    }
