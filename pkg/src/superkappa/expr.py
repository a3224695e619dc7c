"""Text grammar for graph-family expressions.

Leaves: cycle(n), complete(n), kbip(m,n), file(path). The infix operator
`x` is the direct product, left-associative:

    cycle(3) x cycle(5) x complete(2)
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import construct
from .errors import InputError
from .formats import load_graph_file

_TOKEN = re.compile(
    r"\s*(?:(?P<name>[A-Za-z_][A-Za-z_0-9]*)\s*\((?P<args>[^()]*)\)|(?P<op>x)\b)",
)


@dataclass(frozen=True)
class FamilyLeaf:
    kind: str  # "cycle" | "complete" | "kbip" | "file"
    args: tuple

    def describe(self):
        return f"{self.kind}({','.join(str(a) for a in self.args)})"


@dataclass(frozen=True)
class ProductSpec:
    """Left-associative direct-product expression over family leaves."""

    leaves: tuple  # of FamilyLeaf

    def describe(self):
        return " x ".join(leaf.describe() for leaf in self.leaves)

    def odd_cycle_lengths(self):
        """Cycle lengths when every leaf is an odd cycle, else None."""
        lengths = []
        for leaf in self.leaves:
            if leaf.kind != "cycle" or leaf.args[0] % 2 == 0:
                return None
            lengths.append(leaf.args[0])
        return lengths


def parse_spec(text):
    pos = 0
    leaves = []
    expect_leaf = True
    while pos < len(text.rstrip()):
        m = _TOKEN.match(text, pos)
        if not m:
            raise InputError(f"cannot parse expression at: {text[pos:]!r}")
        pos = m.end()
        if m.group("op"):
            if expect_leaf:
                raise InputError("misplaced 'x' in expression")
            expect_leaf = True
            continue
        if not expect_leaf:
            raise InputError(f"missing 'x' before {m.group('name')!r}")
        name = m.group("name")
        raw_args = [a.strip() for a in m.group("args").split(",")] if m.group("args").strip() else []
        if name in ("cycle", "complete"):
            if len(raw_args) != 1 or not raw_args[0].isdigit():
                raise InputError(f"{name} takes one integer argument")
            leaves.append(FamilyLeaf(name, (int(raw_args[0]),)))
        elif name == "kbip":
            if len(raw_args) != 2 or not all(a.isdigit() for a in raw_args):
                raise InputError("kbip takes two integer arguments")
            leaves.append(FamilyLeaf(name, tuple(int(a) for a in raw_args)))
        elif name == "file":
            if len(raw_args) != 1:
                raise InputError("file takes one path argument")
            leaves.append(FamilyLeaf(name, (raw_args[0],)))
        else:
            raise InputError(f"unknown family {name!r}")
        expect_leaf = False
    if expect_leaf:
        raise InputError("expression ends with a dangling 'x'" if leaves else "empty expression")
    return ProductSpec(leaves=tuple(leaves))


def build_leaf(leaf):
    if leaf.kind == "cycle":
        return construct.cycle(*leaf.args)
    if leaf.kind == "complete":
        return construct.complete(*leaf.args)
    if leaf.kind == "kbip":
        return construct.complete_bipartite(*leaf.args)
    if leaf.kind == "file":
        return load_graph_file(leaf.args[0])
    raise InputError(f"unknown leaf kind {leaf.kind!r}")


def build_spec(spec):
    graph = build_leaf(spec.leaves[0])
    for leaf in spec.leaves[1:]:
        graph = construct.direct_product(graph, build_leaf(leaf))
    return graph


def build_expression(text):
    """Parse and evaluate; returns (graph, spec)."""
    spec = parse_spec(text)
    return build_spec(spec), spec
