#!/usr/bin/env python3
# Copyright 2026 The jobstd Authors.
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
"""Reference table of smoothed PMI and acceptance-rate values.

Writes one JSON line per random count tuple with the values computed here,
independently of the C++ code:

  pmi        = log((c_xy + a)(N + a V) / ((c_x + a sqrt V)(c_y + a sqrt V)))
  acceptance = (accepted + 1) / (shown + 2)
"""

import argparse
import json
import math
import random


def pmi(pair, x, y, total, v, alpha):
    root_v = math.sqrt(v)
    return math.log((pair + alpha) * (total + alpha * v) /
                    ((x + alpha * root_v) * (y + alpha * root_v)))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", required=True)
    parser.add_argument("--n", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=20260701)
    args = parser.parse_args()
    rng = random.Random(args.seed)
    with open(args.out, "w") as f:
        for i in range(args.n):
            total = rng.randint(1, 100000)
            x = rng.randint(0, total)
            y = rng.randint(0, total)
            pair = rng.randint(0, min(x, y))
            v = rng.randint(1, 5000)
            alpha = 0.5 if i % 2 == 0 else rng.uniform(0.01, 2.0)
            shown = rng.randint(0, 10000)
            accepted = rng.randint(0, shown)
            row = {
                "pair": pair, "x": x, "y": y, "total": total,
                "distinct_pairs": v, "alpha": alpha,
                "accepted": accepted, "shown": shown,
                "pmi": pmi(pair, x, y, total, v, alpha),
                "acceptance": (accepted + 1) / (shown + 2),
            }
            f.write(json.dumps(row) + "\n")


if __name__ == "__main__":
    main()
