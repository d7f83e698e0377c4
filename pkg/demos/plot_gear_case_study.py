"""
Up-shift timing requirements on gear traces
===========================================

Gear k is the proposition ``gk``; the up-shift event ``ek`` is
``gk /\\ X g(k+1)``. Two requirements bound the time from the first to the
third up-shift: at least 8 s, and at most 12 s. Each trace below realizes
the event times that break one of them.
"""

from tptlmon import TimedStateSequence, eval_semantics, monitor

AT_LEAST_8 = "G z.((g1 /\\ X g2) -> G ((g2 /\\ X g3) -> G ((g3 /\\ X g4) -> z >= 8)))"
AT_MOST_12 = "G z.((g1 /\\ X g2) -> F ((g2 /\\ X g3) /\\ F ((g3 /\\ X g4) /\\ z <= 12)))"


def gear_trace(samples):
    return TimedStateSequence(
        tuple(t for t, _ in samples), tuple({g} for _, g in samples), ("g1", "g2", "g3", "g4")
    )


# e1 at 1.72 s, e2 at 5.0 s, e3 at 8.4 s: only 6.68 s from e1 to e3
fast = gear_trace([(0, "g1"), (1.72, "g1"), (2.0, "g2"), (5.0, "g2"), (5.5, "g3"), (8.4, "g3"), (8.6, "g4")])
# e1 at 1.32 s, e2 at 6.0 s, e3 at 19.2 s: 17.88 s from e1 to e3
slow = gear_trace([(0, "g1"), (1.32, "g1"), (1.5, "g2"), (6.0, "g2"), (6.2, "g3"), (19.2, "g3"), (19.4, "g4")])

monitor("true", fast)  # load the compiled kernel before timing
for label, spec, trace in (("at least 8 s", AT_LEAST_8, fast), ("at most 12 s", AT_MOST_12, slow)):
    v = monitor(spec, trace)
    print(f"{label}: monitor={v.satisfied} oracle={eval_semantics(v.formula.formula, trace)} "
          f"time={v.stats.wall_time * 1e3:.3f} ms")

# swapping the traces satisfies both requirements
print("swapped:", monitor(AT_LEAST_8, slow).satisfied, monitor(AT_MOST_12, fast).satisfied)
