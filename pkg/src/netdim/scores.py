from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

import numpy as np


def rank_order(scores) -> np.ndarray:
    """Node ids by descending score, ties by ascending id."""
    s = np.asarray(scores, dtype=np.float64)
    # lexsort uses the last key as primary
    return np.lexsort((np.arange(len(s)), -s))


@dataclass(frozen=True)
class CentralityScores:
    """Per-node scores from one centrality method.

    ``ranking[0]`` is the most important node. ``rank`` maps node id to its
    1-based position in ``ranking``.
    """

    method: str
    scores: np.ndarray
    labels: tuple[str, ...] | None = None
    ranking: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        s = np.asarray(self.scores, dtype=np.float64)
        if not np.all(np.isfinite(s)):
            raise ValueError(f"{self.method}: scores must be finite")
        s.setflags(write=False)
        order = rank_order(s)
        order.setflags(write=False)
        object.__setattr__(self, "scores", s)
        object.__setattr__(self, "ranking", order)

    def __len__(self):
        return len(self.scores)

    @property
    def rank(self) -> np.ndarray:
        r = np.empty(len(self.ranking), dtype=np.int64)
        r[self.ranking] = np.arange(1, len(self.ranking) + 1)
        return r

    def top(self, k: int) -> np.ndarray:
        return self.ranking[:k].copy()

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["node", "label", "score", "rank"])
        for rec in self.to_records():
            w.writerow([rec["node"], rec["label"], repr(rec["score"]), rec["rank"]])
        return buf.getvalue()

    def to_records(self) -> list[dict]:
        return [
            {"node": int(node),
             "label": self.labels[node] if self.labels is not None else str(node),
             "score": float(self.scores[node]),
             "rank": pos}
            for pos, node in enumerate(self.ranking, start=1)
        ]
