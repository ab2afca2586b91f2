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

"""Oracles for base-mean computation.

1. 100 records from N(4, 0.1^2) in D=16 drawn with Rng(derive_seed(99, 0)),
   each value rounded to float32; mean computed by independent float64 summation.
2. mu0 = 0 scale check: across many seeds, the norm of the empirical base mean
   divided by sqrt(D * (sc^2 / Cb + sw^2 / (Cb * R))) stays well below 3.
"""
import math
import numpy as np
from rng_contract import Rng, derive_seed, gen_synthetic, f32

rng = Rng(derive_seed(99, 0))
rows = [[f32(4.0 + 0.1 * rng.normal()) for _ in range(16)] for _ in range(100)]
m = np.array(rows, dtype=np.float64).mean(0)
print("mean golden:", [repr(float(v)) for v in m])
print("max |m - 4| =", float(np.max(np.abs(m - 4.0))))

spec = dict(num_classes=20, dim=16, records_per_class=50, class_spread=1.0,
            within_spread=0.5, offset_norm=0.0)
scale = math.sqrt(16 * (1.0 / 10 + 0.25 / (10 * 50)))
ratios = []
for seed in range(60):
    base, _ = gen_synthetic(seed=seed, **spec)
    mean = np.array([v for _, v in base], dtype=np.float64).mean(0)
    ratios.append(np.linalg.norm(mean) / scale)
print(f"norm ratio over 60 seeds: min={min(ratios):.3f} max={max(ratios):.3f} seed1={ratios[1]!r}")
