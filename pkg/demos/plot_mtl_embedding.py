"""
Bounded MTL through freeze variables
====================================

Every interval operator becomes a fresh freeze binder whose constraints
guard the right operand. The translation is checked against a direct MTL
evaluator on a few random traces.
"""

import random

from tptlmon import check_encapsulated, monitor, parse_mtl, translate_mtl
from tptlmon.generate import random_trace
from tptlmon.oracle import eval_mtl

specs = ["a U[1,2] b", "F[0,5] a", "G[1,3] (a -> F[0,1] b)", "a R[0.5,inf] b", "a U b"]
for text in specs:
    m = parse_mtl(text)
    f = translate_mtl(m)
    print(f"{text:<24} => {f}   encapsulated={bool(check_encapsulated(f))}")

rng = random.Random(1)
m = parse_mtl("G[1,3] (a -> F[0,1] b)")
f = translate_mtl(m)
agree = 0
for _ in range(200):
    tr = random_trace(rng, props=("a", "b"))
    agree += monitor(f, tr).satisfied == eval_mtl(m, tr)
print(f"agreement on 200 random traces: {agree}/200")
