"""
乘法引擎 - 由乘法表推导半群中任意两个元素的乘积

单字母步 z^p · y 按 z^{p-1} · table(z, y) 约化，用显式栈迭代展开。
结果按 (底, 指数, 右生成元) 缓存，缓存项同时记录约化树的高度，
命中时按记录的高度检查深度上限，因此是否抛出 DepthExceeded 与缓存状态无关。
引擎在规格构造后只有缓存是可变状态，约定单线程使用；并行场景请为每个工作线程 clone()。
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .exceptions import DepthExceeded
from .semigroup import Element, GeneratorId, SemigroupSpec, checked_add

DEFAULT_DEPTH_BOUND = 10000

MemoKey = Tuple[int, int, int]


@dataclass
class _Frame:
    """正在展开的单字母步：current 依次右乘 remaining 个 letter"""
    key: MemoKey
    level: int
    current: Element
    letter: GeneratorId
    remaining: int
    height: int = 1


class MultiplicationEngine:
    """基于乘法表的乘法引擎"""

    def __init__(self, spec: SemigroupSpec, depth_bound: int = DEFAULT_DEPTH_BOUND):
        """
        初始化乘法引擎

        Args:
            spec: 半群规格
            depth_bound: 每个顶层单字母步允许的最大约化深度
        """
        if depth_bound < 1:
            raise ValueError(f"深度上限必须为正整数: {depth_bound}")
        self.spec = spec
        self.depth_bound = depth_bound
        self.logger = logging.getLogger(__name__)

        # (底下标, 指数, 右生成元下标) -> (乘积, 约化树高度)
        self._memo: Dict[MemoKey, Tuple[Element, int]] = {}

    def clone(self) -> 'MultiplicationEngine':
        """返回共享规格、缓存独立的新引擎"""
        return MultiplicationEngine(self.spec, self.depth_bound)

    @property
    def cache_size(self) -> int:
        return len(self._memo)

    def clear_cache(self):
        self._memo.clear()

    def mul(self, e1: Element, e2: Element) -> Element:
        """
        计算 e1 · e2

        同底时指数相加；否则把 e1 从左到右逐个乘上 e2 的生成元。

        Raises:
            DepthExceeded: 约化深度超过上限
            ExponentOverflow: 指数溢出
        """
        if e1.gen == e2.gen:
            return Element(e1.gen, checked_add(e1.exp, e2.exp))
        result = e1
        for _ in range(e2.exp):
            result = self._step(result, e2.gen)
        return result

    def right_mul_gen(self, e: Element, y: GeneratorId) -> Element:
        """计算单字母步 e · y"""
        return self._step(e, y)

    def reduce_word(self, word: Sequence[GeneratorId]) -> Element:
        """
        把自由半群中的字按从左到右的顺序约化为元素，作为 mul 的独立对照

        Args:
            word: 非空生成元序列

        Returns:
            字对应的元素
        """
        if not word:
            raise ValueError("字不能为空")
        result = Element(word[0], 1)
        for letter in word[1:]:
            result = self._step(result, letter)
        return result

    def power_trajectory(self, x: Element, y: GeneratorId, length: int) -> Iterator[Element]:
        """依次产生 x·y, x·y², ..., x·y^length，每一步只做一次单字母乘法"""
        current = x
        for _ in range(length):
            current = self.right_mul_gen(current, y)
            yield current

    def _step(self, e: Element, y: GeneratorId) -> Element:
        stack: List[_Frame] = []
        value = self._open(e, y, 1, stack)
        while stack:
            frame = stack[-1]
            if value is not None:
                child, child_height = value
                frame.current = child
                frame.height = max(frame.height, child_height + 1)
                frame.remaining -= 1
                value = None
            if frame.remaining == 0:
                stack.pop()
                value = (frame.current, frame.height)
                self._memo[frame.key] = value
                continue
            value = self._open(frame.current, frame.letter, frame.level + 1, stack)

        assert value is not None
        return value[0]

    def _open(self, e: Element, y: GeneratorId, level: int,
              stack: List[_Frame]) -> Optional[Tuple[Element, int]]:
        """
        在深度 level 处开始单字母步 e·y

        Returns:
            能立即得到结果时返回 (乘积, 高度)；否则压入新帧并返回 None
        """
        if e.gen == y:
            return Element(y, checked_add(e.exp, 1)), 0

        key = (e.gen.index, e.exp, y.index)
        cached = self._memo.get(key)
        height = cached[1] if cached is not None else 1
        if level + height - 1 > self.depth_bound:
            raise DepthExceeded(
                f"约化深度超过上限 {self.depth_bound}: {e} · {y}",
                details={'element': str(e), 'generator': y.name, 'depth_bound': self.depth_bound}
            )
        if cached is not None:
            return cached

        product = self.spec.lookup(e.gen, y)
        if e.exp == 1:
            self._memo[key] = (product, 1)
            return product, 1

        stack.append(_Frame(key, level, Element(e.gen, e.exp - 1), product.gen, product.exp))
        return None
