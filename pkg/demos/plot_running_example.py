"""
Monitoring a freeze formula, cell by cell
=========================================

A formula with two nested freeze binders is checked against a seven-sample
trace. The whole monitoring table is printed, one row per subformula.
"""

import io

from tptlmon import explain, load_trace, monitor, prepare
from tptlmon.oracle import eval_semantics

trace = load_trace(io.StringIO("time,a,b\n0,0,0\n0.3,0,0\n0.7,1,1\n1.0,1,0\n1.1,1,1\n1.5,0,1\n1.9,0,1\n"))

# "always: within 1 s of freezing x, a holds, and later some y-window
# has b false within 1 s of its own start"
ix = prepare("G x.(F ((x <= 1 -> a) /\\ y.(F (y <= 1 -> !b))))")

# blocks are solved innermost first; the last one is the outer block
for block in ix.blocks:
    name = block.variable or "outer"
    print(f"{name:>5}: rows {block.min}..{block.max}, parent={block.parent}, root={block.root}")

verdict = monitor(ix, trace, keep_table=True)
dump = explain(verdict)
print("t     ", " ".join(f"{t:>4}" for t in dump["timestamps"]))
for row in dump["rows"]:
    cells = " ".join(f"{'T' if c else 'F':>4}" for c in row["cells"])
    print(f"{row['index']:>2}    {cells}   {row['label']}")

print("verdict:", verdict.satisfied, "| oracle:", eval_semantics(ix.formula, trace))
print("cell writes:", verdict.stats.cell_writes)
