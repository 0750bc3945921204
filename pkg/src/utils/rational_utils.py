"""
有理数工具模块
证书中的所有有理数都是精确的 Fraction，序列化为 (分子, 分母) 整数对
"""

import math
from fractions import Fraction
from typing import Iterable, Tuple, Union

Rational = Union[int, Fraction]


class RationalUtils:
    """精确有理数工具类"""

    @staticmethod
    def to_pair(value: Rational) -> Tuple[int, int]:
        """返回最简分数的 (分子, 分母)"""
        value = Fraction(value)
        return value.numerator, value.denominator

    @staticmethod
    def from_pair(numerator: int, denominator: int) -> Fraction:
        if denominator == 0:
            raise ZeroDivisionError("分母不能为0")
        return Fraction(numerator, denominator)

    @staticmethod
    def format(value: Rational, digits: int = 6) -> str:
        """
        人类可读格式：分数加十进制近似

        Args:
            value: 有理数
            digits: 近似值有效位数

        Returns:
            形如 "3/2 (≈1.5)" 的字符串
        """
        value = Fraction(value)
        return f"{value.numerator}/{value.denominator} (≈{float(value):.{digits}g})"

    @staticmethod
    def lcm_of_denominators(values: Iterable[Rational]) -> int:
        """所有分母的最小公倍数，空序列返回1"""
        result = 1
        for value in values:
            result = math.lcm(result, Fraction(value).denominator)
        return result

    @staticmethod
    def ceil(value: Rational) -> int:
        """精确上取整"""
        return math.ceil(Fraction(value))
