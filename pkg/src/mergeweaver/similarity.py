"""Character trigram similarity.

Dice coefficient over the multisets of character 3-grams of the two inputs.
Strings shorter than three characters contribute themselves as a single
gram so the metric stays defined (and equal strings always score 1.0).
"""

from __future__ import annotations

from collections import Counter


def trigrams(text: str) -> Counter:
    if len(text) < 3:
        return Counter({text: 1})
    return Counter(text[i:i + 3] for i in range(len(text) - 2))


def trigram_similarity(a: str, b: str) -> float:
    if a == b:
        return 1.0
    ga = trigrams(a)
    gb = trigrams(b)
    total = sum(ga.values()) + sum(gb.values())
    if total == 0:
        return 1.0
    overlap = sum((ga & gb).values())
    return 2.0 * overlap / total
