"""面の恒等式の検査

    ∂_{q,ε} ∘ ∂_{r,ω} = ∂_{r,ω} ∘ ∂_{q+1,ε}    (x ∈ X_n, r ≤ q ≤ n−2)

ランク0に特殊化した整合性法則。面写像が全域でかつ値域に収まっていることも調べる。
"""

import logging

from ..domain.fibred_set import FibredSet, IdentityReport

logger = logging.getLogger(__name__)


def check_identities(X: FibredSet) -> IdentityReport:
    """X の面写像を検査する（例外は送出しない）

    Examples:
        >>> X = FibredSet(1, (("v",), ("e",)), ({}, {("e", 0, 0): "v"}))
        >>> check_identities(X).holds
        True
    """
    report = IdentityReport(nu=X.nu, depth=X.depth)
    _check_totality(X, report)
    if report.holds:
        _check_commutation(X, report)
    logger.info(
        "face identities: %d checks, %d violations over %d dimensions",
        report.checks, len(report.violations), X.depth,
    )
    return report


def _check_totality(X: FibredSet, report: IdentityReport) -> None:
    for n, cells in enumerate(X.cells):
        seen = set()
        for cell in cells:
            if cell in seen:
                report.add(n, cell, "duplicate_cell", "cell listed twice")
            seen.add(cell)
        if n == 0:
            for (cell, q, eps) in X.faces[0]:
                report.add(0, cell, "extra_face", f"0-cells have no faces (q={q}, eps={eps})")
            continue

        targets = set(X.cells[n - 1])
        expected = {(cell, q, eps) for cell in cells for q in range(n) for eps in range(X.nu)}
        for key in sorted(expected):
            report.checks += 1
            target = X.faces[n].get(key)
            cell, q, eps = key
            if target is None:
                report.add(n, cell, "missing_face", f"no face q={q} eps={eps}")
            elif target not in targets:
                report.add(n, cell, "dangling_face", f"face q={q} eps={eps} is {target}, not a {n - 1}-cell")
        for key in sorted(set(X.faces[n]) - expected):
            cell, q, eps = key
            report.add(n, cell, "extra_face", f"face q={q} eps={eps} is out of range")


def _check_commutation(X: FibredSet, report: IdentityReport) -> None:
    for n in range(2, X.depth):
        inner = X.faces[n]
        outer = X.faces[n - 1]
        for x in X.cells[n]:
            for q in range(n - 1):
                for r in range(q + 1):
                    for eps in range(X.nu):
                        for omega in range(X.nu):
                            report.checks += 1
                            lhs = outer[(inner[(x, r, omega)], q, eps)]
                            rhs = outer[(inner[(x, q + 1, eps)], r, omega)]
                            if lhs != rhs:
                                report.add(
                                    n, x, "identity",
                                    f"d[{q},{eps}] d[{r},{omega}] = {lhs} but d[{r},{omega}] d[{q + 1},{eps}] = {rhs}",
                                )
