import json
import random
from fractions import Fraction

import pytest

from app.spark import CircleSpark0


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture
def mixed_spark():
    return CircleSpark0(
        winding=2,
        constant=Fraction(1, 3),
        harmonics={1: (Fraction(1, 2), -1), 3: (0, Fraction(2, 5))},
    )


@pytest.fixture
def write_json(tmp_path):
    def write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)

    return write
