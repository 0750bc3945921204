"""
半群数据模型 - 生成元、元素与乘法表规格

半群 S 是有限个自由单生成半群 ⟨a⟩ 的不交并，每个元素都唯一地写成某个生成元的正整数次幂。
整个半群由生成元两两乘积 x·y = z^k 给出。
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple

from .exceptions import ExponentOverflow, SpecFormatError

# 有符号64位整数上限
MAX_EXPONENT = 2 ** 63 - 1


def checked_add(a: int, b: int) -> int:
    """带溢出检查的指数加法"""
    total = a + b
    if total > MAX_EXPONENT:
        raise ExponentOverflow(f"指数溢出: {a} + {b}", details={'a': a, 'b': b})
    return total


def checked_mul(a: int, b: int) -> int:
    """带溢出检查的乘法（权重延拓使用）"""
    product = a * b
    if product > MAX_EXPONENT:
        raise ExponentOverflow(f"乘积溢出: {a} * {b}", details={'a': a, 'b': b})
    return product


@dataclass(frozen=True, order=True)
class GeneratorId:
    """生成元标识：字母表中的下标和显示名"""
    index: int
    name: str = field(compare=False)

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, order=True)
class Element:
    """元素 gen^exp，exp ≥ 1（自由单生成半群没有单位元）"""
    gen: GeneratorId
    exp: int

    def __post_init__(self):
        if self.exp < 1:
            raise ValueError(f"元素指数必须为正整数: {self.gen}^{self.exp}")
        if self.exp > MAX_EXPONENT:
            raise ExponentOverflow(f"元素指数溢出: {self.gen}^{self.exp}")

    def __str__(self) -> str:
        return f"{self.gen.name}^{self.exp}"

    def as_pair(self) -> Tuple[str, int]:
        return self.gen.name, self.exp


@dataclass(frozen=True)
class SemigroupSpec:
    """
    半群规格：有序字母表 + 不同生成元之间的乘法表

    同一生成元的乘积隐含为 x^m · x^n = x^{m+n}，不在表中出现。
    """
    alphabet: Tuple[GeneratorId, ...]
    table: Mapping[Tuple[GeneratorId, GeneratorId], Element]

    def __post_init__(self):
        self._validate_alphabet()
        self._validate_table()

    def _validate_alphabet(self):
        if not self.alphabet:
            raise SpecFormatError("字母表不能为空")
        names = set()
        for position, gen in enumerate(self.alphabet):
            if gen.index != position:
                raise SpecFormatError(f"生成元下标必须连续: {gen.name} 的下标为 {gen.index}，期望 {position}")
            if not gen.name or any(ch.isspace() for ch in gen.name):
                raise SpecFormatError(f"生成元名称为空或包含空白: {gen.name!r}")
            if gen.name in names:
                raise SpecFormatError(f"生成元名称重复: {gen.name}")
            names.add(gen.name)

    def _validate_table(self):
        members = set(self.alphabet)
        for (left, right), result in self.table.items():
            if left == right:
                raise SpecFormatError(f"乘法表不应包含同一生成元的乘积: {left}{right}")
            if left not in members or right not in members or result.gen not in members:
                raise SpecFormatError(f"乘法表引用了字母表外的生成元: {left}{right} = {result}")
        for left in self.alphabet:
            for right in self.alphabet:
                if left != right and (left, right) not in self.table:
                    raise SpecFormatError(f"乘法表缺少乘积: {left}{right}")

    @classmethod
    def from_products(cls, names: Sequence[str],
                      products: Iterable[Tuple[str, str, str, int]]) -> 'SemigroupSpec':
        """
        由名称列表和 (left, right, result_gen, result_exp) 记录构造规格

        Args:
            names: 有序生成元名称
            products: 乘积记录

        Returns:
            半群规格
        """
        alphabet = tuple(GeneratorId(i, name) for i, name in enumerate(names))
        by_name = {gen.name: gen for gen in alphabet}
        if len(by_name) != len(alphabet):
            raise SpecFormatError(f"生成元名称重复: {list(names)}")

        table: Dict[Tuple[GeneratorId, GeneratorId], Element] = {}
        for left, right, result_gen, result_exp in products:
            try:
                key = (by_name[left], by_name[right])
                target = by_name[result_gen]
            except KeyError as e:
                raise SpecFormatError(f"乘积记录引用了未知生成元: {e.args[0]}") from e
            except TypeError as e:
                raise SpecFormatError(f"乘积记录的生成元名称不合法: {left!r}, {right!r}, {result_gen!r}") from e
            if key in table:
                raise SpecFormatError(f"乘积记录重复: {left}{right}")
            if not isinstance(result_exp, int) or isinstance(result_exp, bool) or result_exp < 1:
                raise SpecFormatError(f"乘积指数必须为正整数: {left}{right} = {result_gen}^{result_exp}")
            table[key] = Element(target, result_exp)
        return cls(alphabet, table)

    def generator(self, name: str) -> GeneratorId:
        """按名称查找生成元"""
        for gen in self.alphabet:
            if gen.name == name:
                return gen
        raise KeyError(name)

    def element(self, name: str, exp: int = 1) -> Element:
        """按名称构造元素"""
        return Element(self.generator(name), exp)

    def generators_as_elements(self) -> List[Element]:
        return [Element(gen, 1) for gen in self.alphabet]

    def lookup(self, left: GeneratorId, right: GeneratorId) -> Element:
        return self.table[(left, right)]

    def ordered_pairs(self) -> Iterator[Tuple[GeneratorId, GeneratorId]]:
        """按字母表顺序遍历所有有序生成元对（含对角线）"""
        for left in self.alphabet:
            for right in self.alphabet:
                yield left, right

    def product_records(self) -> List[Tuple[str, str, str, int]]:
        """按字母表顺序导出乘积记录"""
        records = []
        for left, right in self.ordered_pairs():
            if left == right:
                continue
            result = self.table[(left, right)]
            records.append((left.name, right.name, result.gen.name, result.exp))
        return records

    def encoding(self) -> Tuple[Tuple[int, int], ...]:
        """乘法表的字典序编码 (result 下标, result 指数)，用于排序和去重"""
        return tuple(
            (self.table[(left, right)].gen.index, self.table[(left, right)].exp)
            for left, right in self.ordered_pairs() if left != right
        )

    def __hash__(self) -> int:
        return hash((tuple(g.name for g in self.alphabet), self.encoding()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SemigroupSpec):
            return NotImplemented
        return (tuple(g.name for g in self.alphabet) == tuple(g.name for g in other.alphabet)
                and self.encoding() == other.encoding())
