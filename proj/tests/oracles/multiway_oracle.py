# Copyright 2026 The fewshot Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Brute-force oracle for the 227-way variable-shot fixture.

Fixture: gen_synthetic(454 classes, D=64, 20 records/class, class_spread=1,
within_spread=2, offset_norm=50, seed=7). Base = first 227 classes, novel =
last 227. For the k-th novel class (ascending id), the first 1 + k % 10
records (file order) are support, the rest are test.
"""
import numpy as np
from rng_contract import gen_synthetic

FIXTURE = dict(num_classes=454, dim=64, records_per_class=20, class_spread=1.0,
               within_spread=2.0, offset_norm=50.0, seed=7)


def main():
    base, novel = gen_synthetic(**FIXTURE)
    mean = np.array([v for _, v in base], dtype=np.float32).astype(np.float64).mean(0)
    by_class = {}
    for y, v in novel:
        by_class.setdefault(y, []).append(np.array(v, dtype=np.float32).astype(np.float64))
    classes = sorted(by_class)
    for kind in ("un", "l2n", "cl2n"):
        def tf(v):
            if kind == "un":
                return v
            if kind == "cl2n":
                v = v - mean
            return v / np.linalg.norm(v)
        cents, tests = [], []
        for k, c in enumerate(classes):
            shots = 1 + k % 10
            recs = by_class[c]
            cents.append(np.mean([tf(v) for v in recs[:shots]], axis=0))
            tests += [(k, tf(v)) for v in recs[shots:]]
        cents = np.array(cents)
        correct = np.zeros(len(classes))
        total = np.zeros(len(classes))
        for k, v in tests:
            d = np.sqrt(((cents - v) ** 2).sum(1))
            pred = int(np.argmin(d))  # first index == smallest class id
            total[k] += 1
            correct[k] += pred == k
        print(f"{kind}: per_class={np.mean(correct / total)!r} mean={correct.sum() / total.sum()!r} "
              f"correct={int(correct.sum())} total={int(total.sum())}")


if __name__ == "__main__":
    main()
