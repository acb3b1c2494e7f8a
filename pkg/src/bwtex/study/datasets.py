"""Chart-reading study datasets.

Each dataset holds seven values on a 0-100 scale, drawn uniformly from
[5, 95] and rounded to one decimal, plus a target pair whose values are at
least 5 points apart. Sampling is rejection-based and deterministic per seed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

VEGETABLES = ("carrots", "celery", "corn", "eggplant", "mushrooms", "olives", "tomatoes")

VALUE_LO = 5.0
VALUE_HI = 95.0
MIN_TARGET_GAP = 5.0
DATASET_COUNT = 10


@dataclass(frozen=True)
class StudyDataset:
    id: int
    values: tuple[float, ...]
    target_pair: tuple[str, str]

    def value_of(self, category: str) -> float:
        return self.values[VEGETABLES.index(category)]

    def as_dict(self) -> dict[str, float]:
        return dict(zip(VEGETABLES, self.values))

    def larger_target(self) -> str:
        a, b = self.target_pair
        return a if self.value_of(a) > self.value_of(b) else b

    def smaller_target(self) -> str:
        a, b = self.target_pair
        return a if self.value_of(a) < self.value_of(b) else b


def generate_datasets(seed: int, count: int = DATASET_COUNT) -> list[StudyDataset]:
    rng = np.random.Generator(np.random.PCG64(seed))
    out = []
    for ds_id in range(1, count + 1):
        out.append(_sample_one(rng, ds_id))
    return out


def _sample_one(rng: np.random.Generator, ds_id: int) -> StudyDataset:
    while True:
        values = np.round(rng.uniform(VALUE_LO, VALUE_HI, size=len(VEGETABLES)), 1)
        i, j = rng.choice(len(VEGETABLES), size=2, replace=False)
        if abs(values[i] - values[j]) >= MIN_TARGET_GAP:
            return StudyDataset(
                id=ds_id,
                values=tuple(float(v) for v in values),
                target_pair=(VEGETABLES[i], VEGETABLES[j]),
            )
