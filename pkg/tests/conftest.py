from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # make oracles importable


def steiner_21_5_2_blocks() -> list[tuple[int, ...]]:
    """A (21,5,2) design from the perfect difference set {0,1,6,8,18} mod 21.

    Every nonzero residue mod 21 arises exactly once as a difference of two
    base elements, so translating the base through all 21 shifts covers
    every pair of points exactly once.
    """
    base = (0, 1, 6, 8, 18)
    return [tuple(sorted((d + i) % 21 + 1 for d in base)) for i in range(21)]


@pytest.fixture(scope="session")
def steiner_21_5_2_file(tmp_path_factory) -> Path:
    path = tmp_path_factory.mktemp("designs") / "s_21_5_2.blocks"
    lines = ["n=21 k=5 t=2"] + [" ".join(map(str, b)) for b in steiner_21_5_2_blocks()]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path
