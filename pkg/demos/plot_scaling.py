"""
Runtime against trace length and variable count
===============================================

The response pattern ``G (a1 -> psi)`` is timed on random traces. Doubling
the trace length should roughly quadruple the runtime. Splitting the
pattern over more freeze variables adds one pass over the trace per
variable, but each pass only covers its own block of rows.
"""

import sys

from tptlmon.bench import PatternSpec, gen_pattern, run_benchmark

specs = [PatternSpec("EA", 2, 1), PatternSpec("EA", 2, 2), PatternSpec("UR", 2, 1), PatternSpec("UR", 2, 2)]
for s in specs:
    print(s, gen_pattern(s))

lengths = [int(n) for n in sys.argv[1:]] or [500, 1000, 2000]
report = run_benchmark(specs, lengths, runs=5, seed=0)
print(report.to_csv())
print(report.summary())
