"""
Multipartitions and standard multitableaux with divided-power entries.

Conventions used throughout the package:

- An n-multipartition is an n-tuple of partitions. Component 1 is the RIGHTMOST
  one; text output lists components left to right, i.e. from index n down to 1.
- A node (component s, row r, column c) has residue c - r + l, where l is the
  number of leading full columns of the ladder. Rows never exceed l.
- A node N1 precedes N2 (N1 <= N2) when it lies in a component further left, or in
  the same component at a row not below it. "After N" always means strictly after.
- A multitableau is a sequence of entry groups. Group k holds the nodes labelled k;
  they share one residue and lie in pairwise distinct components.
"""

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

from .exceptions import InvalidTableau, NodeNotAddable, ShapeMismatch
from .logging import get_logger

logger = get_logger(__name__.split('.')[-1])


class NodeRef(NamedTuple):
    component: int
    row: int
    col: int


def residue(node: NodeRef, ell: int) -> int:
    """Residue col - row + l of a node."""
    return node.col - node.row + ell


def _order_key(node: NodeRef) -> tuple[int, int]:
    return (-node.component, node.row)


def is_after(node: NodeRef, other: NodeRef) -> bool:
    """True when `other` lies strictly after `node`."""
    return _order_key(other) > _order_key(node)


@dataclass(frozen=True)
class MultiPartition:
    """
    An n-multipartition with at most l rows per component.

    Attributes:
        n: Number of components
        ell: Row bound (number of leading full ladder columns)
        components: components[s - 1] holds the row lengths of component s
    """

    n: int
    ell: int
    components: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.components) != self.n:
            raise ShapeMismatch(f"Expected {self.n} components, got {len(self.components)}")
        for s, rows in enumerate(self.components, start=1):
            if len(rows) > self.ell:
                raise ShapeMismatch(f"Component {s} has {len(rows)} rows, bound is {self.ell}")
            if any(r <= 0 for r in rows) or any(a < b for a, b in zip(rows, rows[1:])):
                raise ShapeMismatch(f"Component {s} is not a partition: {list(rows)}")

    @classmethod
    def empty(cls, n: int, ell: int) -> 'MultiPartition':
        return cls(n, ell, ((),) * n)

    @classmethod
    def from_rows(cls, ell: int, rows_left_to_right: Sequence[Sequence[int]]) -> 'MultiPartition':
        """Build from row lists written left to right (component n first)."""
        comps = [tuple(r for r in rows if r > 0) for rows in reversed(rows_left_to_right)]
        return cls(len(comps), ell, tuple(comps))

    def component(self, s: int) -> tuple[int, ...]:
        return self.components[s - 1]

    def row_length(self, s: int, row: int) -> int:
        rows = self.components[s - 1]
        return rows[row - 1] if row <= len(rows) else 0

    @property
    def size(self) -> int:
        return sum(sum(rows) for rows in self.components)

    def with_node(self, s: int, row: int) -> 'MultiPartition':
        """Return the shape with one more node at the end of row `row` of component s."""
        rows = list(self.components[s - 1])
        if row == len(rows) + 1:
            rows.append(1)
        else:
            rows[row - 1] += 1
        comps = list(self.components)
        comps[s - 1] = tuple(rows)
        return MultiPartition(self.n, self.ell, tuple(comps))

    def left_to_right(self) -> tuple[tuple[int, ...], ...]:
        return tuple(reversed(self.components))

    def text(self) -> str:
        """Render as e.g. '[3,2,1][0][4][3,1]'."""
        return "".join(
            "[" + (",".join(str(r) for r in rows) if rows else "0") + "]"
            for rows in self.left_to_right()
        )

    def __str__(self):
        return self.text()


def parse_multipartition(text: str, ell: int) -> MultiPartition:
    """Inverse of MultiPartition.text()."""
    body = text.strip()
    if not body.startswith("[") or not body.endswith("]"):
        raise ShapeMismatch(f"Malformed multipartition text: {text!r}")
    rows = []
    for chunk in body[1:-1].split("]["):
        chunk = chunk.strip()
        rows.append([int(x) for x in chunk.split(",")] if chunk else [])
    return MultiPartition.from_rows(ell, rows)


def addable_node(mp: MultiPartition, s: int, res: int) -> NodeRef | None:
    """The addable node of residue `res` in component s, if any (there is at most one)."""
    rows = mp.component(s)
    for r in range(1, min(len(rows) + 1, mp.ell) + 1):
        length = rows[r - 1] if r <= len(rows) else 0
        if r > 1 and rows[r - 2] <= length:
            continue
        node = NodeRef(s, r, length + 1)
        if residue(node, mp.ell) == res:
            return node
    return None


def removable_node(mp: MultiPartition, s: int, res: int) -> NodeRef | None:
    """The removable node of residue `res` in component s, if any."""
    rows = mp.component(s)
    for r, length in enumerate(rows, start=1):
        below = rows[r] if r < len(rows) else 0
        if length > below:
            node = NodeRef(s, r, length)
            if residue(node, mp.ell) == res:
                return node
    return None


def addable_nodes(mp: MultiPartition, res: int) -> list[NodeRef]:
    """All addable nodes of residue `res`, sorted by the node order (leftmost first)."""
    nodes = [addable_node(mp, s, res) for s in range(mp.n, 0, -1)]
    return [node for node in nodes if node is not None]


def removable_nodes(mp: MultiPartition, res: int) -> list[NodeRef]:
    """All removable nodes of residue `res`, sorted by the node order (leftmost first)."""
    nodes = [removable_node(mp, s, res) for s in range(mp.n, 0, -1)]
    return [node for node in nodes if node is not None]


def _signed_count_after(mp: MultiPartition, node: NodeRef, res: int) -> int:
    addable = sum(1 for other in addable_nodes(mp, res) if is_after(node, other))
    removable = sum(1 for other in removable_nodes(mp, res) if is_after(node, other))
    return addable - removable


def degree_increment(shape: MultiPartition, res: int,
                     comps: Iterable[int]) -> tuple[int, MultiPartition]:
    """
    Degree contributed by placing one node of residue `res` in each listed component.

    Components are filled leftmost first. After each placement the addable minus
    removable nodes of the same residue strictly after the new node are counted on
    the enlarged shape; the group as a whole is shifted by -j(j-1)/2.

    Returns:
        (increment, new shape)

    Raises:
        NodeNotAddable: a listed component has no addable node of that residue
    """
    ordered = sorted(set(comps), reverse=True)
    total = 0
    for s in ordered:
        node = addable_node(shape, s, res)
        if node is None:
            raise NodeNotAddable(f"Component {s} of {shape} has no addable node of residue {res}")
        shape = shape.with_node(s, node.row)
        total += _signed_count_after(shape, node, res)
    j = len(ordered)
    return total - j * (j - 1) // 2, shape


class EntryGroup(NamedTuple):
    residue: int
    nodes: tuple[NodeRef, ...]


@dataclass(frozen=True)
class MultiTableau:
    """
    A standard n-multitableau whose k-th entry group was placed at step k.

    Use MultiTableau.build or MultiTableau.from_fillings; both validate standardness.
    """

    shape: MultiPartition
    groups: tuple[EntryGroup, ...]

    @property
    def n(self) -> int:
        return self.shape.n

    @property
    def ell(self) -> int:
        return self.shape.ell

    @classmethod
    def build(cls, n: int, ell: int, groups: Iterable[Iterable[NodeRef]]) -> 'MultiTableau':
        """
        Place the groups one after another, checking every node is addable when placed.

        Raises:
            InvalidTableau: empty group, repeated component, mixed residues or a node
                that is not addable at its step
        """
        shape = MultiPartition.empty(n, ell)
        built = []
        for k, group in enumerate(groups, start=1):
            nodes = sorted(group, key=_order_key)
            if not nodes:
                raise InvalidTableau(f"Entry {k} has no nodes")
            if len({node.component for node in nodes}) != len(nodes):
                raise InvalidTableau(f"Entry {k} repeats a component")
            res = residue(nodes[0], ell)
            for node in nodes:
                if residue(node, ell) != res:
                    raise InvalidTableau(f"Entry {k} mixes residues")
                if not 1 <= node.component <= n or addable_node(shape, node.component, res) != node:
                    raise InvalidTableau(f"Entry {k}: node {tuple(node)} is not addable")
            for node in nodes:
                shape = shape.with_node(node.component, node.row)
            built.append(EntryGroup(res, tuple(nodes)))
        return cls(shape, tuple(built))

    @classmethod
    def from_fillings(cls, n: int, ell: int,
                      fillings: Sequence[Sequence[Sequence[int]]]) -> 'MultiTableau':
        """
        Build from per-component fillings written left to right (component n first).

        Equal entries in different components form one group.

        Example:
            >>> MultiTableau.from_fillings(2, 1, [[[2]], [[1]]]).text()
            '[2][1]'
        """
        if len(fillings) != n:
            raise InvalidTableau(f"Expected {n} components, got {len(fillings)}")
        by_entry: dict[int, list[NodeRef]] = {}
        for idx, rows in enumerate(fillings):
            s = n - idx
            for r, row in enumerate(rows, start=1):
                for c, entry in enumerate(row, start=1):
                    by_entry.setdefault(entry, []).append(NodeRef(s, r, c))
        return cls.build(n, ell, (by_entry[e] for e in sorted(by_entry)))

    def entries(self) -> dict[NodeRef, int]:
        return {node: k for k, group in enumerate(self.groups, start=1) for node in group.nodes}

    def filling(self, s: int) -> list[list[int]]:
        """Rows of entries of component s."""
        labels = self.entries()
        return [
            [labels[NodeRef(s, r, c)] for c in range(1, length + 1)]
            for r, length in enumerate(self.shape.component(s), start=1)
        ]

    def text(self) -> str:
        """Render as e.g. '[1,2,3,4/5,14][1,2,3,4/5,12,13/17]' (components left to right)."""
        out = []
        for s in range(self.n, 0, -1):
            rows = self.filling(s)
            out.append("[" + "/".join(",".join(str(e) for e in row) for row in rows) + "]")
        return "".join(out)

    def renumbered(self) -> 'MultiTableau':
        """Split every group into singletons, numbered left to right."""
        groups = [
            EntryGroup(group.residue, (node,))
            for group in self.groups
            for node in group.nodes
        ]
        return MultiTableau(self.shape, tuple(groups))

    def shapes(self) -> list[MultiPartition]:
        """Shapes after each group, starting with the empty shape."""
        shape = MultiPartition.empty(self.n, self.ell)
        out = [shape]
        for group in self.groups:
            for node in group.nodes:
                shape = shape.with_node(node.component, node.row)
            out.append(shape)
        return out

    def __str__(self):
        return self.text()


def bkw_degree(tableau: MultiTableau) -> int:
    """Sum of the group degree increments along the tableau."""
    shape = MultiPartition.empty(tableau.n, tableau.ell)
    total = 0
    for group in tableau.groups:
        inc, shape = degree_increment(shape, group.residue, (nd.component for nd in group.nodes))
        total += inc
    return total


def residue_sequence(tableau: MultiTableau) -> tuple[tuple[int, int], ...]:
    """Per-group (residue, multiplicity) in entry order."""
    return tuple((group.residue, len(group.nodes)) for group in tableau.groups)


class Dominance(str, Enum):
    LT = "LT"
    EQ = "EQ"
    GT = "GT"
    INCOMPARABLE = "INCOMPARABLE"


def _cumulative(mp: MultiPartition, depth: int) -> list[int]:
    total = 0
    out = []
    for rows in mp.left_to_right():
        for r in range(depth):
            total += rows[r] if r < len(rows) else 0
            out.append(total)
    return out


def dominance_mp(a: MultiPartition, b: MultiPartition) -> Dominance:
    """
    Compare two multipartitions in dominance order.

    Partial sums run over the components from left to right and, inside a
    component, over its rows from top to bottom.
    """
    if a.n != b.n or a.size != b.size:
        raise ShapeMismatch(f"Cannot compare {a} with {b}")
    depth = max([len(rows) for rows in a.components + b.components] + [1])
    sa, sb = _cumulative(a, depth), _cumulative(b, depth)
    le = all(x <= y for x, y in zip(sa, sb))
    ge = all(x >= y for x, y in zip(sa, sb))
    if le and ge:
        return Dominance.EQ
    if le:
        return Dominance.LT
    if ge:
        return Dominance.GT
    return Dominance.INCOMPARABLE


def dominance_mt(a: MultiTableau, b: MultiTableau) -> Dominance:
    """Compare two multitableaux by the dominance of all their truncated shapes."""
    ra, rb = a.renumbered(), b.renumbered()
    if ra.n != rb.n or len(ra.groups) != len(rb.groups):
        raise ShapeMismatch("Multitableaux differ in n or size")
    verdicts = {dominance_mp(x, y) for x, y in zip(ra.shapes()[1:], rb.shapes()[1:])}
    verdicts.discard(Dominance.EQ)
    if not verdicts:
        return Dominance.EQ
    if len(verdicts) == 1:
        return verdicts.pop()
    return Dominance.INCOMPARABLE


def enumerate_standard(shape: MultiPartition,
                       rseq: Sequence[tuple[int, int]]) -> list[MultiTableau]:
    """
    All standard fillings of `shape` with the given residue sequence.

    Brute force; intended as an oracle for small shapes.
    """
    if sum(mult for _, mult in rseq) != shape.size:
        return []
    results: list[MultiTableau] = []

    def extend(current: MultiPartition, k: int, groups: list[EntryGroup]):
        if k == len(rseq):
            if current == shape:
                results.append(MultiTableau(shape, tuple(groups)))
            return
        res, mult = rseq[k]
        candidates = []
        for s in range(shape.n, 0, -1):
            node = addable_node(current, s, res)
            if node is not None and node.col <= shape.row_length(s, node.row):
                candidates.append(node)
        for combo in combinations(candidates, mult):
            nxt = current
            for node in combo:
                nxt = nxt.with_node(node.component, node.row)
            extend(nxt, k + 1, groups + [EntryGroup(res, combo)])

    extend(MultiPartition.empty(shape.n, shape.ell), 0, [])
    logger.debug(f"enumerate_standard {shape} with {len(rseq)} groups: {len(results)} fillings")
    return results


def enumerate_all_standard(shape: MultiPartition) -> list[MultiTableau]:
    """Every standard filling of `shape` with one node per entry."""
    results: list[MultiTableau] = []

    def extend(current: MultiPartition, groups: list[EntryGroup]):
        if current == shape:
            results.append(MultiTableau(shape, tuple(groups)))
            return
        for s in range(shape.n, 0, -1):
            rows = current.component(s)
            for r in range(1, len(rows) + 2):
                length = current.row_length(s, r)
                if r > shape.ell or length >= shape.row_length(s, r):
                    continue
                if r > 1 and current.row_length(s, r - 1) <= length:
                    continue
                node = NodeRef(s, r, length + 1)
                extend(current.with_node(s, r), groups + [EntryGroup(residue(node, shape.ell), (node,))])

    extend(MultiPartition.empty(shape.n, shape.ell), [])
    return results


def row_reading_tableau(shape: MultiPartition) -> MultiTableau:
    """T_lambda: components left to right, each filled row by row."""
    groups = []
    for s in range(shape.n, 0, -1):
        for r, length in enumerate(shape.component(s), start=1):
            for c in range(1, length + 1):
                node = NodeRef(s, r, c)
                groups.append(EntryGroup(residue(node, shape.ell), (node,)))
    return MultiTableau(shape, tuple(groups))


def column_reading_tableau(shape: MultiPartition) -> MultiTableau:
    """T*_lambda: components right to left, each filled column by column."""
    groups = []
    for s in range(1, shape.n + 1):
        rows = shape.component(s)
        for c in range(1, (rows[0] if rows else 0) + 1):
            for r, length in enumerate(rows, start=1):
                if length < c:
                    break
                node = NodeRef(s, r, c)
                groups.append(EntryGroup(residue(node, shape.ell), (node,)))
    return MultiTableau(shape, tuple(groups))
