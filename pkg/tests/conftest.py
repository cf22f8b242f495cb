from __future__ import annotations

import pytest

from transcube.cube import CubeMap


@pytest.fixture(scope="session")
def cube3_collapse() -> CubeMap:
    """Endo of the 3-cube sending all three height-1 vertices to (0,0,1) and
    both upper squares through (0,1,1), while (1,0,1) stays put.  Small, not
    injective, and rich enough to exercise every code path."""
    return CubeMap.from_literal("3>3:0,4,4,6,4,5,6,7")
