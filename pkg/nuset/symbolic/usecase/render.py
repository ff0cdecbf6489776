"""型・項・シグネチャのテキスト表示

責務: 記号式を人が読める文字列にする。

【シグネチャの表示規約】
- 後続の E_k(…) の引数に現れる葉（依存する葉）は Π で束縛し、a, b, c, … と名付ける
- E_0 の束縛は名前だけ、それ以外は "(e : E_1(a,b))" の形
- 依存されない葉は × で結ぶ
- E_k の引数は入れ子の組ではなく葉の名前の平坦な列として書く

    E_2 : Π a b c d. E_1(a,b) × E_1(c,d) × E_1(a,c) × E_1(b,d) → HSet

ascii=True では Π / × / → / Σ / ⋆ を forall / * / -> / sigma / * に置き換える。
"""

from dataclasses import dataclass
from typing import Dict, List

from ..domain.expr import (
    ArrowTy,
    FamApp,
    FinProdTy,
    PairTm,
    ProjTm,
    RestrTm,
    SigmaTy,
    SortTy,
    StarTm,
    TermExpr,
    TupleTm,
    TypeExpr,
    UnitTy,
    VarTm,
)
from .normalize import telescope
from .terms import iter_vars
from .unfold import signature


@dataclass(frozen=True)
class Glyphs:
    """表示に使う記号"""
    pi: str
    sigma: str
    times: str
    arrow: str
    star: str


UNICODE_GLYPHS = Glyphs(pi="Π", sigma="Σ", times=" × ", arrow=" → ", star="⋆")
ASCII_GLYPHS = Glyphs(pi="forall", sigma="sigma", times=" * ", arrow=" -> ", star="*")


def glyphs_for(ascii: bool) -> Glyphs:
    return ASCII_GLYPHS if ascii else UNICODE_GLYPHS


def letter_name(k: int) -> str:
    """0 始まりの番号を a, b, …, z, aa, ab, … に変換する

    Examples:
        >>> [letter_name(k) for k in (0, 1, 25, 26, 27)]
        ['a', 'b', 'z', 'aa', 'ab']
    """
    name = ""
    k += 1
    while k > 0:
        k, rem = divmod(k - 1, 26)
        name = chr(ord("a") + rem) + name
    return name


# ============================================================================
# シグネチャ
# ============================================================================


def render_signature(nu: int, n: int, ascii: bool = False) -> str:
    """E_n のシグネチャを表示用の1行にする

    Args:
        nu: アリティ
        n: レベル
        ascii: ASCII 記号で出力するか

    Returns:
        "E_n : … → HSet" 形式の文字列

    Examples:
        >>> render_signature(2, 0)
        'E_0 : HSet'
        >>> render_signature(2, 1)
        'E_1 : E_0 × E_0 → HSet'
        >>> render_signature(2, 1, ascii=True)
        'E_1 : E_0 * E_0 -> HSet'
    """
    g = glyphs_for(ascii)
    sig = signature(nu, n)
    entries = telescope(sig.domain)
    if not entries:
        return f"E_{n} : HSet"

    referenced = set()
    for _, leaf in entries:
        if isinstance(leaf, FamApp):
            referenced.update(iter_vars(leaf.arg))

    letters: Dict[str, str] = {}
    binders: List[str] = []
    factors: List[str] = []
    for name, leaf in entries:
        shown = _render_leaf(leaf, letters, g)
        if name is not None and name in referenced:
            letters[name] = letter_name(len(letters))
            if isinstance(leaf, FamApp) and leaf.level == 0:
                binders.append(letters[name])
            else:
                binders.append(f"({letters[name]} : {shown})")
        else:
            factors.append(shown)

    body = g.times.join(factors) + g.arrow + "HSet" if factors else "HSet"
    if binders:
        body = f"{g.pi} {' '.join(binders)}. {body}"
    return f"E_{n} : {body}"


def render_signatures(nu: int, max_level: int, ascii: bool = False) -> List[str]:
    """E_0 … E_{max_level} のシグネチャを順に返す"""
    return [render_signature(nu, n, ascii) for n in range(max_level + 1)]


def _render_leaf(leaf: TypeExpr, letters: Dict[str, str], g: Glyphs) -> str:
    if isinstance(leaf, FamApp):
        args = [letters.get(v, v) for v in iter_vars(leaf.arg)]
        return f"E_{leaf.level}({','.join(args)})" if args else f"E_{leaf.level}"
    return render_type(leaf, ascii=g is ASCII_GLYPHS)


# ============================================================================
# 一般の型・項
# ============================================================================


def render_term(t: TermExpr, ascii: bool = False) -> str:
    """項を表示する

    Examples:
        >>> render_term(PairTm(StarTm(), TupleTm((VarTm("a"), VarTm("b")))))
        '(⋆, [a | b])'
    """
    g = glyphs_for(ascii)
    if isinstance(t, StarTm):
        return g.star
    if isinstance(t, VarTm):
        return t.name
    if isinstance(t, PairTm):
        return f"({render_term(t.fst, ascii)}, {render_term(t.snd, ascii)})"
    if isinstance(t, TupleTm):
        return "[" + " | ".join(render_term(c, ascii) for c in t.components) + "]"
    if isinstance(t, ProjTm):
        return f"{render_term(t.arg, ascii)}.{t.eps}"
    if isinstance(t, RestrTm):
        return f"restr^{t.n},{t.p}_{t.kind},{t.q},{t.eps}({render_term(t.arg, ascii)})"
    raise TypeError(f"not a term: {t!r}")


def render_type(t: TypeExpr, ascii: bool = False) -> str:
    """型を表示する

    Examples:
        >>> render_type(SigmaTy("l", FinProdTy((FamApp(0, StarTm()),)), FamApp(1, VarTm("l"))))
        'Σ l : (E_0(⋆)). E_1(l)'
    """
    g = glyphs_for(ascii)
    if isinstance(t, UnitTy):
        return "unit"
    if isinstance(t, SortTy):
        return "HSet"
    if isinstance(t, FamApp):
        return f"E_{t.level}({render_term(t.arg, ascii)})"
    if isinstance(t, SigmaTy):
        return f"{g.sigma} {t.binder} : {render_type(t.domain, ascii)}. {render_type(t.body, ascii)}"
    if isinstance(t, FinProdTy):
        return "(" + g.times.join(render_type(c, ascii) for c in t.components) + ")"
    if isinstance(t, ArrowTy):
        return f"{render_type(t.domain, ascii)}{g.arrow}{render_type(t.codomain, ascii)}"
    raise TypeError(f"not a type: {t!r}")
