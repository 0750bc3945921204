"""
规格验证器 - 检查乘法表是否定义了单生成自由半群的不交并

有限窗口内的结合律检查只是必要条件，不能证明全局结合律。
"""

import logging
from dataclasses import dataclass, field
from itertools import product
from typing import List, Tuple

from .engine import MultiplicationEngine
from .exceptions import DepthExceeded, ExponentOverflow
from .semigroup import Element, GeneratorId

DEFAULT_WINDOW = 8


@dataclass(frozen=True)
class AssociativityViolation:
    """(u·v)·w ≠ u·(v·w) 的反例"""
    u: Element
    v: Element
    w: Element
    left: Element
    right: Element


@dataclass(frozen=True)
class MonotonicityViolation:
    """x^i · y^j = x^k 且 i > k 的反例"""
    x: GeneratorId
    y: GeneratorId
    i: int
    j: int
    k: int


@dataclass(frozen=True)
class DepthFailure:
    """约化失败的输入"""
    check: str
    operands: Tuple[Element, ...]
    reason: str


@dataclass
class ValidationReport:
    """验证报告；三个列表都为空时规格被接受"""
    window: int
    depth_bound: int
    associativity_violations: List[AssociativityViolation] = field(default_factory=list)
    monotonicity_violations: List[MonotonicityViolation] = field(default_factory=list)
    depth_failures: List[DepthFailure] = field(default_factory=list)

    @property
    def accepted(self) -> bool:
        return not (self.associativity_violations
                    or self.monotonicity_violations
                    or self.depth_failures)

    def merge(self, other: 'ValidationReport') -> 'ValidationReport':
        self.associativity_violations.extend(other.associativity_violations)
        self.monotonicity_violations.extend(other.monotonicity_violations)
        self.depth_failures.extend(other.depth_failures)
        return self

    def first_witness(self):
        """第一个反例（按扫描顺序）"""
        for violations in (self.associativity_violations,
                           self.monotonicity_violations,
                           self.depth_failures):
            if violations:
                return violations[0]
        return None


class SpecValidator:
    """规格验证器"""

    def __init__(self, engine: MultiplicationEngine):
        """
        初始化规格验证器

        Args:
            engine: 乘法引擎
        """
        self.engine = engine
        self.spec = engine.spec
        self.logger = logging.getLogger(__name__)

    def _new_report(self, window: int) -> ValidationReport:
        return ValidationReport(window=window, depth_bound=self.engine.depth_bound)

    def check_associativity(self, window: int = DEFAULT_WINDOW, fail_fast: bool = False) -> ValidationReport:
        """
        在指数不超过 window 的所有三元组上检查结合律

        扫描顺序：指数三元组在外层（(1,1,1) 最先），生成元三元组在内层，均按字母表顺序。

        Args:
            window: 指数窗口，至少为2
            fail_fast: 遇到第一个反例即返回（表搜索使用）

        Returns:
            只含结合律部分的验证报告
        """
        if window < 2:
            raise ValueError(f"结合律窗口至少为2: {window}")

        report = self._new_report(window)
        exponents = range(1, window + 1)
        for exps in product(exponents, repeat=3):
            for gens in product(self.spec.alphabet, repeat=3):
                u, v, w = (Element(g, e) for g, e in zip(gens, exps))
                try:
                    left = self.engine.mul(self.engine.mul(u, v), w)
                    right = self.engine.mul(u, self.engine.mul(v, w))
                except (DepthExceeded, ExponentOverflow) as e:
                    report.depth_failures.append(DepthFailure('associativity', (u, v, w), e.message))
                    if fail_fast:
                        return report
                    continue
                if left != right:
                    self.logger.debug(f"结合律反例: ({u}, {v}, {w}) 左 {left} 右 {right}")
                    report.associativity_violations.append(
                        AssociativityViolation(u, v, w, left, right))
                    if fail_fast:
                        return report

        if report.associativity_violations and not fail_fast:
            self.logger.warning(f"结合律检查发现 {len(report.associativity_violations)} 个反例")
        return report

    def check_exponent_monotonicity(self, window: int = DEFAULT_WINDOW) -> ValidationReport:
        """
        检查 x^i · y^j = x^k 蕴含 i ≤ k

        Args:
            window: 指数窗口，至少为1

        Returns:
            只含单调性部分的验证报告
        """
        if window < 1:
            raise ValueError(f"单调性窗口至少为1: {window}")

        report = self._new_report(window)
        for x, y in self.spec.ordered_pairs():
            for i in range(1, window + 1):
                for j in range(1, window + 1):
                    left, right = Element(x, i), Element(y, j)
                    try:
                        result = self.engine.mul(left, right)
                    except (DepthExceeded, ExponentOverflow) as e:
                        report.depth_failures.append(DepthFailure('monotonicity', (left, right), e.message))
                        continue
                    if result.gen == x and i > result.exp:
                        report.monotonicity_violations.append(
                            MonotonicityViolation(x, y, i, j, result.exp))

        if report.monotonicity_violations:
            self.logger.warning(f"指数单调性检查发现 {len(report.monotonicity_violations)} 个反例")
        return report

    def validate(self, window: int = DEFAULT_WINDOW, fail_fast: bool = False) -> ValidationReport:
        """运行全部检查并合并报告；fail_fast 时结合律失败就不再检查单调性"""
        self.logger.info(f"验证规格: {len(self.spec.alphabet)} 个生成元，窗口 {window}")
        report = self.check_associativity(window, fail_fast=fail_fast)
        if fail_fast and not report.accepted:
            return report
        report.merge(self.check_exponent_monotonicity(window))
        self.logger.info(f"验证完成: {'接受' if report.accepted else '拒绝'}")
        return report
