"""正準キーの文法（CanonicalFrameKey）

責務: 値の木 ⇔ 正準キー文字列 の相互変換。

【文法】
    frame    := "*" | "(" frame ";" layer ")"
    layer    := "[" painting ("|" painting)* "]"
    painting := "#" label | "{" layer ";" painting "}"
    label    := [A-Za-z0-9_]+

木→文字列は各値の key プロパティが担う。このモジュールは文字列→木の
再帰下降パーサーを提供する。
"""

import re
from typing import List

from ..domain.errors import KeyGrammarError
from ..domain.values import (
    STAR,
    Extend,
    FrameValue,
    Layered,
    LayerValue,
    PaintingValue,
    Top,
)

LABEL_PATTERN = re.compile(r"[A-Za-z0-9_]+")


def is_valid_label(label: str) -> bool:
    """ラベルが [A-Za-z0-9_]+ に一致するか

    Examples:
        >>> is_valid_label("e1_0003")
        True
        >>> is_valid_label("a b")
        False
    """
    return LABEL_PATTERN.fullmatch(label) is not None


class _KeyParser:
    """再帰下降パーサー（1文字先読み）"""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, message: str) -> KeyGrammarError:
        return KeyGrammarError(message, self.text, self.pos)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, token: str) -> None:
        if self.peek() != token:
            found = self.peek() or "end of input"
            raise self.fail(f"expected {token!r}, found {found!r}")
        self.pos += 1

    def finish(self) -> None:
        if self.pos != len(self.text):
            raise self.fail("trailing characters")

    # ------------------------------------------------------------------------

    def frame(self) -> FrameValue:
        if self.peek() == "*":
            self.pos += 1
            return STAR
        self.expect("(")
        prefix = self.frame()
        self.expect(";")
        layer = self.layer()
        self.expect(")")
        return Extend(prefix, layer)

    def layer(self) -> LayerValue:
        self.expect("[")
        components: List[PaintingValue] = [self.painting()]
        while self.peek() == "|":
            self.pos += 1
            components.append(self.painting())
        self.expect("]")
        return tuple(components)

    def painting(self) -> PaintingValue:
        if self.peek() == "#":
            self.pos += 1
            match = LABEL_PATTERN.match(self.text, self.pos)
            if match is None:
                raise self.fail("expected a label")
            self.pos = match.end()
            return Top(match.group(0))
        self.expect("{")
        layer = self.layer()
        self.expect(";")
        rest = self.painting()
        self.expect("}")
        return Layered(layer, rest)


def parse_frame_key(text: str) -> FrameValue:
    """フレームの正準キーをパースする

    Raises:
        KeyGrammarError: 文法に合わない場合（位置付き）

    Examples:
        >>> parse_frame_key("(*;[#a|#b])").key
        '(*;[#a|#b])'
        >>> parse_frame_key("*").rank
        0
    """
    parser = _KeyParser(text)
    value = parser.frame()
    parser.finish()
    return value


def parse_painting_key(text: str) -> PaintingValue:
    """ペインティングの正準キーをパースする

    Examples:
        >>> parse_painting_key("{[#a|#b];#e}").rest
        Top(label='e')
    """
    parser = _KeyParser(text)
    value = parser.painting()
    parser.finish()
    return value
