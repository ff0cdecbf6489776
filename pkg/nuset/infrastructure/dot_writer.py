"""ファイバー形式の面関係を Graphviz DOT で出力する

1セル = 1ノード（"n:cell"）、1面写像 = 1本のラベル付き辺（"∂q,ε"）。
次元ごとに rank=same でまとめる。
"""

from typing import List

from ..fibred.domain.fibred_set import FibredSet


def _node(n: int, cell: str) -> str:
    return f'"{n}:{cell}"'


def fibred_to_dot(X: FibredSet, ascii: bool = False) -> str:
    """X を DOT 文字列にする

    Examples:
        >>> X = FibredSet(1, (("v",), ("e",)), ({}, {("e", 0, 0): "v"}))
        >>> print(fibred_to_dot(X, ascii=True), end="")
        digraph fibred {
          rankdir=BT;
          node [shape=box];
          { rank=same; "0:v" [label="v"]; }
          { rank=same; "1:e" [label="e"]; }
          "1:e" -> "0:v" [label="d0,0"];
        }
    """
    face = "d" if ascii else "∂"
    lines: List[str] = [f"digraph fibred {{", "  rankdir=BT;", "  node [shape=box];"]
    for n, cells in enumerate(X.cells):
        nodes = " ".join(f'{_node(n, cell)} [label="{cell}"];' for cell in cells)
        lines.append(f"  {{ rank=same; {nodes} }}")
    for n in range(1, X.depth):
        for (cell, q, eps), target in sorted(X.faces[n].items()):
            lines.append(f'  {_node(n, cell)} -> {_node(n - 1, target)} [label="{face}{q},{eps}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
