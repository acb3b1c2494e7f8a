"""Trial schedule construction.

Sixty trials per participant: 2 question types x 3 fill types x 10 datasets,
grouped by question type with fill sub-blocks. Question order, fill order
within each question block, and dataset order within each sub-block are all
shuffled per seed. The category order on the chart belongs to the stimulus
image, one per (fill, dataset), so the image is reused by both question
blocks unchanged. Of the two targets, the one drawn further left is always
answered with the left key.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from bwtex.study.datasets import VEGETABLES, StudyDataset, generate_datasets

QUESTIONS = ("more", "fewer")
FILLS = ("geometric", "iconic", "unicolor")
CHART_KINDS = ("bar", "pie")
TRIALS_PER_BLOCK = 10


@dataclass(frozen=True)
class Trial:
    index: int
    question: str
    fill: str
    dataset_id: int
    left_target: str
    right_target: str
    category_order: tuple[str, ...]


def _schedule_rng(seed: int, chart_kind: str) -> np.random.Generator:
    if chart_kind not in CHART_KINDS:
        raise ValueError(f"chart kind must be one of {CHART_KINDS}, got {chart_kind!r}")
    ss = np.random.SeedSequence([int(seed), CHART_KINDS.index(chart_kind)])
    return np.random.Generator(np.random.PCG64(ss))


def stimulus_orders(seed: int, chart_kind: str) -> dict[tuple[str, int], tuple[str, ...]]:
    """Category order of every stimulus image, keyed by (fill, dataset id)."""
    rng = _schedule_rng(seed, chart_kind)
    orders = {}
    for fill in FILLS:
        for ds_id in range(1, TRIALS_PER_BLOCK + 1):
            perm = rng.permutation(len(VEGETABLES))
            orders[(fill, ds_id)] = tuple(VEGETABLES[i] for i in perm)
    return orders


def build_trial_schedule(seed: int, chart_kind: str) -> list[Trial]:
    rng = _schedule_rng(seed, chart_kind)
    orders = {}
    for fill in FILLS:
        for ds_id in range(1, TRIALS_PER_BLOCK + 1):
            perm = rng.permutation(len(VEGETABLES))
            orders[(fill, ds_id)] = tuple(VEGETABLES[i] for i in perm)
    datasets = {d.id: d for d in generate_datasets(seed)}

    trials: list[Trial] = []
    question_order = [QUESTIONS[i] for i in rng.permutation(len(QUESTIONS))]
    index = 0
    for question in question_order:
        fill_order = [FILLS[i] for i in rng.permutation(len(FILLS))]
        for fill in fill_order:
            dataset_order = [int(i) + 1 for i in rng.permutation(TRIALS_PER_BLOCK)]
            for ds_id in dataset_order:
                trials.append(_make_trial(index, question, fill, datasets[ds_id], orders[(fill, ds_id)]))
                index += 1
    return trials


def _make_trial(index: int, question: str, fill: str, dataset: StudyDataset,
                order: tuple[str, ...]) -> Trial:
    a, b = dataset.target_pair
    left, right = (a, b) if order.index(a) < order.index(b) else (b, a)
    return Trial(
        index=index,
        question=question,
        fill=fill,
        dataset_id=dataset.id,
        left_target=left,
        right_target=right,
        category_order=order,
    )


def correct_answer(trial: Trial, dataset: StudyDataset) -> str:
    """'left' or 'right', per the trial's question."""
    want = dataset.larger_target() if trial.question == "more" else dataset.smaller_target()
    return "left" if want == trial.left_target else "right"
