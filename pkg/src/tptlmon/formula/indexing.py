"""Topological numbering of subformulas and the partition into frozen blocks.

Numbering works block by block. A *block* is every node reachable from a
root without descending below a freeze node (the freeze node itself belongs
to the enclosing block, its body starts a new one). Each block is numbered
breadth-first; afterwards the bodies of its freeze nodes are numbered as new
blocks, in the order their freeze nodes were numbered, recursively. The
outermost block starts at 1. Parents therefore always get lower indices
than their children, and each block occupies a contiguous index range.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from . import ast
from .checks import (
    ValidationError,
    alpha_rename,
    check_encapsulated,
    describe_path,
    has_unique_binders,
    validate_closed,
)
from .parser import parse


@dataclass(frozen=True)
class IndexedNode:
    index: int
    formula: ast.Formula
    children: tuple[int, ...]

    @property
    def kind(self) -> str:
        return type(self.formula).__name__

    @property
    def is_leaf(self) -> bool:
        return isinstance(self.formula, (ast.TrueConst, ast.Prop, ast.Constraint))


@dataclass(frozen=True)
class FrozenSubtree:
    """One block of the partition.

    For a freeze block, ``parent`` is the row of the freeze node and
    ``root`` the row of its body. The outermost block has ``variable`` and
    ``parent`` set to ``None`` and ``root == 1``.
    """

    variable: str | None
    parent: int | None
    root: int
    min: int
    max: int
    constraints: tuple[int, ...] = ()

    @property
    def rows(self) -> range:
        return range(self.min, self.max + 1)

    @property
    def is_outer(self) -> bool:
        return self.parent is None


@dataclass(frozen=True)
class IndexedFormula:
    formula: ast.Formula
    nodes: tuple[IndexedNode, ...]

    def __getitem__(self, index: int) -> IndexedNode:
        if index < 1:
            raise IndexError(index)
        return self.nodes[index - 1]

    def __len__(self):
        return len(self.nodes)

    @property
    def size(self) -> int:
        return len(self.nodes)

    @cached_property
    def blocks(self) -> tuple[FrozenSubtree, ...]:
        return partition_subtrees(self)

    @property
    def subtrees(self) -> tuple[FrozenSubtree, ...]:
        """Freeze blocks in processing order (innermost first)."""
        return self.blocks[:-1]

    @property
    def outer(self) -> FrozenSubtree:
        return self.blocks[-1]

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(b.variable for b in self.subtrees)

    def label(self, index: int) -> str:
        return str(self[index].formula)


def index_subformulas(f: ast.Formula) -> IndexedFormula:
    formulas = []
    children = []

    def number_block(root, parent):
        pending = []
        queue = deque([(root, parent)])
        while queue:
            node, slot = queue.popleft()
            formulas.append(node)
            children.append([None] * len(node.children))
            idx = len(formulas)
            if slot is not None:
                children[slot[0] - 1][slot[1]] = idx
            if isinstance(node, ast.Freeze):
                pending.append((node.child, (idx, 0)))
            else:
                queue.extend((c, (idx, i)) for i, c in enumerate(node.children))
        for body, slot in pending:
            number_block(body, slot)

    number_block(f, None)
    nodes = tuple(
        IndexedNode(i + 1, node, tuple(kids)) for i, (node, kids) in enumerate(zip(formulas, children))
    )
    return IndexedFormula(f, nodes)


def _block_rows(ix: IndexedFormula, root: int) -> list[int]:
    rows = []
    queue = deque([root])
    while queue:
        j = queue.popleft()
        rows.append(j)
        node = ix[j]
        if not isinstance(node.formula, ast.Freeze):
            queue.extend(node.children)
    return rows


def _describe_block(ix, variable, parent, root):
    rows = _block_rows(ix, root)
    lo, hi = min(rows), max(rows)
    if len(rows) != hi - lo + 1:
        raise AssertionError(f"block rooted at {root} is not contiguous")
    constraints = tuple(j for j in rows if isinstance(ix[j].formula, ast.Constraint))
    return FrozenSubtree(variable, parent, root, lo, hi, constraints)


def partition_subtrees(ix: IndexedFormula) -> tuple[FrozenSubtree, ...]:
    """Split the indexed tree into freeze blocks plus the outermost block.

    Freeze blocks come first, sorted by decreasing root index, so every
    nested block is processed before the block that encloses it. The last
    element is the outermost block.
    """
    freezes = [n for n in ix.nodes if isinstance(n.formula, ast.Freeze)]
    blocks = [_describe_block(ix, n.formula.var, n.index, n.children[0]) for n in freezes]
    blocks.sort(key=lambda b: b.root, reverse=True)
    blocks.append(_describe_block(ix, None, None, 1))
    return tuple(blocks)


def prepare(f) -> IndexedFormula:
    """Validate (closed, encapsulated), rename if needed, and index a formula.

    Accepts formula text or an AST. Binders are alpha-renamed only when some
    name is bound more than once, so row labels keep the user's names.
    """
    if isinstance(f, IndexedFormula):
        return f
    if isinstance(f, str):
        f = parse(f)
    unbound = validate_closed(f)
    if unbound:
        raise ValidationError("; ".join(f"{v} (at {describe_path(f, v.path)})" for v in unbound))
    enc = check_encapsulated(f)
    if not enc:
        raise NotEncapsulatedError(enc.reason, enc.witness, enc.node, describe_path(f, enc.witness))
    if not has_unique_binders(f):
        f = alpha_rename(f)
    return index_subformulas(f)


class NotEncapsulatedError(ValidationError):
    def __init__(self, reason, witness, node, where):
        self.witness = witness
        self.node = node
        super().__init__(f"formula is not encapsulated: {reason} (at {where})")
