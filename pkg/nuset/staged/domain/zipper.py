"""ランク再帰用のジッパー

完了したランクの表と、これから処理するランクを2本の列で持つ。完了側は末尾に
積み、未処理側は先頭から取り出すので、2本は逆向きに伸び縮みする。
"""

from dataclasses import dataclass
from typing import Generic, Tuple, TypeVar

T = TypeVar("T")


@dataclass(frozen=True)
class RankZipper(Generic[T]):
    """(完了したランクの表, 未処理のランク)

    Attributes:
        done: 完了したランクとその表の列（処理順）
        pending: 未処理のランク（次に処理するものが先頭）

    Examples:
        >>> z = RankZipper.upward(0, 2)
        >>> z.focus
        0
        >>> z = z.advance("t0").advance("t1")
        >>> z.focus, z.done_ranks
        (2, (0, 1))
    """
    done: Tuple[Tuple[int, T], ...] = ()
    pending: Tuple[int, ...] = ()

    @classmethod
    def upward(cls, lo: int, hi: int) -> "RankZipper[T]":
        """ランク lo, lo+1, …, hi の順に処理する"""
        return cls((), tuple(range(lo, hi + 1)))

    @classmethod
    def downward(cls, hi: int, lo: int) -> "RankZipper[T]":
        """ランク hi, hi−1, …, lo の順に処理する"""
        return cls((), tuple(range(hi, lo - 1, -1)))

    @property
    def focus(self) -> int:
        """次に処理するランク"""
        return self.pending[0]

    @property
    def is_complete(self) -> bool:
        return not self.pending

    @property
    def done_ranks(self) -> Tuple[int, ...]:
        return tuple(rank for rank, _ in self.done)

    def last(self) -> T:
        """直前に完了したランクの表"""
        return self.done[-1][1]

    def advance(self, table: T) -> "RankZipper[T]":
        """フォーカス中のランクを table で完了させる"""
        return RankZipper(self.done + ((self.focus, table),), self.pending[1:])

    def tables(self) -> dict:
        """ランク → 表"""
        return dict(self.done)
