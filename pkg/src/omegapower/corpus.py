"""Lasso corpora for the verification suites.

Exhaustive enumeration yields each ultimately periodic word exactly once:
a candidate (u, v) is kept only when it is its own canonical form, so the
words come out deduplicated without bookkeeping.  Random generation is
seeded and deduplicates on the canonical form.
"""

import itertools
import random

from .words import LassoWord, canonical_parts


def corpus_lassos(size: int, max_spoke: int, max_cycle: int, keep=None):
    """All distinct lassos over 0..size-1 with canonical |u| <= max_spoke
    and |v| <= max_cycle, in (|u| + |v|, lex) order."""
    letters = range(size)
    for lu in range(max_spoke + 1):
        for lv in range(1, max_cycle + 1):
            for u in itertools.product(letters, repeat=lu):
                for v in itertools.product(letters, repeat=lv):
                    if canonical_parts(u, v) != (u, v):
                        continue
                    w = LassoWord(u, v, size=size)
                    if keep is None or keep(w):
                        yield w


def random_lassos(
    size: int,
    count: int,
    max_spoke: int,
    max_cycle: int,
    seed: int,
    keep=None,
):
    """Up to count distinct random lassos; deterministic in the seed."""
    rng = random.Random(seed)
    out = []
    seen = set()
    for _ in range(count * 200):
        if len(out) >= count:
            break
        u = [rng.randrange(size) for _ in range(rng.randint(0, max_spoke))]
        v = [rng.randrange(size) for _ in range(rng.randint(1, max_cycle))]
        w = LassoWord(u, v, size=size)
        if w in seen:
            continue
        seen.add(w)
        if keep is None or keep(w):
            out.append(w)
    return out
