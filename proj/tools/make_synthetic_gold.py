#!/usr/bin/env python3
# Copyright 2026 The morphlab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes data/synthetic_gold.tsv: 200 labelled words built from a small
morph inventory with rank-biased reuse. Deterministic for a fixed seed."""

import argparse
import random

MORPHS = [
    "wai", "kai", "whare", "roa", "nui", "iti", "rangi", "papa", "moana",
    "whenua", "ara", "hau", "tai", "kura", "manu", "ao", "mata", "puke",
    "awa", "ika", "maunga", "tangata", "kōrero", "pō", "rā", "tū", "waka",
    "toa", "mauri", "rongo", "ngaru", "hine", "tama", "kākā", "rere",
    "ahi", "one", "uru", "pae", "kete", "hoe", "tapu", "wairua", "taki",
    "pūtea", "āhua", "ngahere", "toka", "umu", "kiwi",
]
# Morphs of four syllables; words using them are dropped by the
# three-syllable filter.
LONG = ["tamariki", "whakapapa"]


def weighted_choice(rng, items):
    weights = [1.0 / (rank + 2) for rank in range(len(items))]
    return rng.choices(items, weights=weights, k=1)[0]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--seed", type=int, default=2026)
    parser.add_argument("--words", type=int, default=200)
    parser.add_argument("--out", default="data/synthetic_gold.tsv")
    args = parser.parse_args()

    rng = random.Random(args.seed)
    seen = set()
    rows = []
    for m in MORPHS[:20]:
        seen.add(m)
        rows.append((m, m, "monomorphemic"))
    for m in LONG:
        other = weighted_choice(rng, MORPHS)
        seen.add(m + other)
        rows.append((m + other, m + "+" + other, "compounding"))
    while len(rows) < args.words:
        parts = [weighted_choice(rng, MORPHS)
                 for _ in range(rng.choice([2, 2, 2, 3]))]
        surface = "".join(parts)
        if surface in seen:
            continue
        seen.add(surface)
        rows.append((surface, "+".join(parts), "compounding"))
    rng.shuffle(rows)
    with open(args.out, "w", encoding="utf-8", newline="\n") as f:
        f.write("# surface\tmorphs\tcategory\n")
        for surface, morphs, category in rows:
            f.write(f"{surface}\t{morphs}\t{category}\n")


if __name__ == "__main__":
    main()
