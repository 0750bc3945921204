"""
增长服务 - 权重延拓、常数 K 与 L、词球 J(m) 枚举与线性增长证书

证书链：J(m) ⊆ I(K·m)，|I(r)| ≤ L·r，因此 |J(m)| ≤ L·K·m。
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from ..core.engine import MultiplicationEngine
from ..core.exceptions import CertificateViolation, ResourceLimitExceeded
from ..core.semigroup import Element, GeneratorId, checked_mul
from ..utils.rational_utils import RationalUtils
from .persistence_service import PersistenceGraph, PersistenceService, StructureIssue
from .weight_service import Condensation, WeightAssignment

DEFAULT_M_MAX = 12
DEFAULT_FRONTIER_CAP = 10_000_000
VERDICT_CERTIFIED = "linear-growth-certified"

# 每个线程至少分到的前沿元素数，过小的层不值得拆分
MIN_CHUNK = 256


@dataclass(frozen=True)
class KDetails:
    """K 的构成：每个 (x, y) 扫描到的最大亏量，以及每个 (y, z) 的界 d(z)·n0 − d(y)·i0"""
    defects: Dict[Tuple[GeneratorId, GeneratorId], int]
    target_bounds: Dict[Tuple[GeneratorId, GeneratorId], int]
    max_generator_weight: int


@dataclass(frozen=True)
class BallRow:
    """证书中的一行：m, |J(m)|, ⌈L·K·m⌉"""
    m: int
    count: int
    bound: int


@dataclass(frozen=True)
class BallEnumeration:
    """广度优先枚举结果；levels[l-1] 是长度恰为 l 的字所表示的元素集合"""
    levels: Tuple[FrozenSet[Element], ...]
    counts: Tuple[int, ...]

    def ball(self, m: int) -> Set[Element]:
        result: Set[Element] = set()
        for level in self.levels[:m]:
            result.update(level)
        return result


@dataclass
class GrowthCertificate:
    """线性增长证书"""
    graph: PersistenceGraph
    condensation: Condensation
    d: WeightAssignment
    K: int
    K_details: KDetails
    L: Fraction
    bound_coefficient: Fraction
    ball_counts: List[BallRow]
    horizon_used: int
    verdict: str = VERDICT_CERTIFIED
    notes: List[str] = field(default_factory=list)


class GrowthService:
    """增长服务"""

    def __init__(self, engine: MultiplicationEngine, persistence_service: PersistenceService,
                 threads: int = 1, frontier_cap: int = DEFAULT_FRONTIER_CAP):
        """
        初始化增长服务

        Args:
            engine: 乘法引擎
            persistence_service: 持久性分析服务（计算 K 时需要轨迹）
            threads: 广度优先枚举的工作线程数
            frontier_cap: 单层前沿和整个词球的元素数上限
        """
        self.engine = engine
        self.spec = engine.spec
        self.persistence_service = persistence_service
        self.threads = max(1, threads)
        self.frontier_cap = frontier_cap
        self.logger = logging.getLogger(__name__)

    # ------------------------------------------------------------------
    # 权重与常数
    # ------------------------------------------------------------------

    @staticmethod
    def extend_d(weights: WeightAssignment, e: Element) -> int:
        """d(x^i) = d(x)·i"""
        return checked_mul(weights[e.gen], e.exp)

    def defect(self, weights: WeightAssignment, y: GeneratorId, i: int, value: Element) -> int:
        """δ(x, y, i) = d(x·y^i) − d(y)·i"""
        return self.extend_d(weights, value) - weights[y] * i

    def compute_K(self, weights: WeightAssignment, horizon: Optional[int] = None) -> Tuple[int, KDetails]:
        """
        计算常数 K：生成元权重的最大值与视界内所有亏量 δ(x, y, i) 的最大值中的较大者

        Args:
            weights: 已验证的权重
            horizon: 轨迹视界

        Returns:
            (K, K 的构成明细)

        Raises:
            HorizonExhausted: 某条轨迹在视界内没有确认的周期段
        """
        defects: Dict[Tuple[GeneratorId, GeneratorId], int] = {}
        target_bounds: Dict[Tuple[GeneratorId, GeneratorId], int] = {}

        for x, y in self.spec.ordered_pairs():
            record = self.persistence_service.require_period(
                self.persistence_service.trajectory(Element(x, 1), y, horizon))
            defects[(x, y)] = max(self.defect(weights, y, i, value)
                                  for i, value in enumerate(record.steps, start=1))
            for z, summary in record.summaries.items():
                bound = weights[z] * summary.n0 - weights[y] * summary.i0
                target_bounds[(y, z)] = max(bound, target_bounds.get((y, z), bound))

        max_weight = max(weights.d.values())
        K = max(1, max_weight, max(defects.values()))
        details = KDetails(dict(sorted(defects.items())), dict(sorted(target_bounds.items())), max_weight)
        self.logger.info(f"K = {K}（最大生成元权重 {max_weight}，最大亏量 {max(defects.values())}）")
        return K, details

    def verify_K_window(self, weights: WeightAssignment, K: int, horizon: int) -> List[StructureIssue]:
        """在 (horizon, 2·horizon] 上复核 δ(x, y, i) ≤ K"""
        issues = []
        for x, y in self.spec.ordered_pairs():
            trajectory = self.engine.power_trajectory(Element(x, 1), y, 2 * horizon)
            for i, value in enumerate(trajectory, start=1):
                if i <= horizon:
                    continue
                delta = self.defect(weights, y, i, value)
                if delta > K:
                    issues.append(StructureIssue(
                        'K_window', f"δ({x},{y},{i}) = {delta} > K = {K}",
                        {'x': x.name, 'y': y.name, 'i': i, 'delta': delta}))
                    break
        return issues

    @staticmethod
    def compute_L(weights: WeightAssignment) -> Fraction:
        """L = Σ 1/d(a)"""
        return sum((Fraction(1, w) for w in weights.d.values()), Fraction(0))

    @staticmethod
    def count_I(weights: WeightAssignment, r: int) -> int:
        """|I(r)| = Σ ⌊r / d(a)⌋"""
        return sum(r // w for w in weights.d.values())

    @staticmethod
    def enumerate_I(weights: WeightAssignment, r: int) -> Set[Element]:
        """I(r) = {a^k : d(a)·k ≤ r} 的显式枚举"""
        result = set()
        for gen, w in weights.d.items():
            k = 1
            while w * k <= r:
                result.add(Element(gen, k))
                k += 1
        return result

    @staticmethod
    def growth_increments(counts: Sequence[int]) -> List[int]:
        """|J(m+1)| − |J(m)|"""
        return [b - a for a, b in zip(counts, counts[1:])]

    # ------------------------------------------------------------------
    # 词球枚举
    # ------------------------------------------------------------------

    def enumerate_levels(self, m: int) -> BallEnumeration:
        """
        广度优先枚举长度 1..m 的字所表示的元素

        Raises:
            ResourceLimitExceeded: 前沿或词球超过上限
        """
        if m < 1:
            raise ValueError(f"字长上限必须为正整数: {m}")

        level: FrozenSet[Element] = frozenset(self.spec.generators_as_elements())
        levels = [level]
        seen: Set[Element] = set(level)
        counts = [len(seen)]

        engines = [self.engine] + [self.engine.clone() for _ in range(self.threads - 1)]
        with ThreadPoolExecutor(max_workers=self.threads) as pool:
            for depth in range(2, m + 1):
                level = self._expand(sorted(level), engines, pool)
                seen.update(level)
                if len(level) > self.frontier_cap or len(seen) > self.frontier_cap:
                    raise ResourceLimitExceeded(
                        f"第 {depth} 层枚举超过上限 {self.frontier_cap}",
                        details={'depth': depth, 'level_size': len(level), 'ball_size': len(seen)})
                levels.append(level)
                counts.append(len(seen))
                self.logger.debug(f"第 {depth} 层: {len(level)} 个元素，|J({depth})| = {len(seen)}")

        return BallEnumeration(tuple(levels), tuple(counts))

    def _expand(self, frontier: List[Element], engines: List[MultiplicationEngine],
                pool: ThreadPoolExecutor) -> FrozenSet[Element]:
        workers = min(len(engines), max(1, len(frontier) // MIN_CHUNK))
        if workers == 1:
            return frozenset(self._expand_chunk(self.engine, frontier))

        size = -(-len(frontier) // workers)
        chunks = [frontier[k * size:(k + 1) * size] for k in range(workers)]
        futures = [pool.submit(self._expand_chunk, engine, chunk) for engine, chunk in zip(engines, chunks)]
        merged: Set[Element] = set()
        for future in futures:
            merged.update(future.result())
        return frozenset(merged)

    def _expand_chunk(self, engine: MultiplicationEngine, chunk: Sequence[Element]) -> Set[Element]:
        return {engine.right_mul_gen(e, y) for e in chunk for y in self.spec.alphabet}

    def enumerate_ball(self, m: int) -> Set[Element]:
        """J(m)：长度不超过 m 的字所表示的元素集合"""
        return self.enumerate_levels(m).ball(m)

    def ball_counts(self, m: int) -> List[int]:
        """|J(1)|, ..., |J(m)|"""
        return list(self.enumerate_levels(m).counts)

    # ------------------------------------------------------------------
    # 证书
    # ------------------------------------------------------------------

    def certify(self, graph: PersistenceGraph, condensation: Condensation, weights: WeightAssignment,
                K: int, K_details: KDetails, L: Fraction, m_max: int = DEFAULT_M_MAX,
                horizon: Optional[int] = None) -> GrowthCertificate:
        """
        组装并验证线性增长证书

        对每个 m ≤ m_max：长度为 m 的字满足 d ≤ K·m，|J(m)| ≤ |I(K·m)|，|J(m)| ≤ L·K·m；
        另外复核 K 的扩展窗口、次可加性 d(x·u) ≤ K + d(u) 和计数一致性。

        Raises:
            CertificateViolation: 第一个失败的 (m, 见证)
        """
        horizon = horizon or self.persistence_service.horizon
        coefficient = L * K
        enumeration = self.enumerate_levels(m_max)

        rows = []
        for m in range(1, m_max + 1):
            for w in sorted(enumeration.levels[m - 1]):
                if self.extend_d(weights, w) > K * m:
                    raise CertificateViolation(
                        f"长度 {m} 的字表示 {w}，d = {self.extend_d(weights, w)} > K·m = {K * m}", m=m, witness=w)
            count = enumeration.counts[m - 1]
            if count > self.count_I(weights, K * m):
                raise CertificateViolation(
                    f"|J({m})| = {count} > |I({K * m})| = {self.count_I(weights, K * m)}", m=m, witness=count)
            if count > coefficient * m:
                raise CertificateViolation(
                    f"|J({m})| = {count} > L·K·m = {coefficient * m}", m=m, witness=count)
            rows.append(BallRow(m, count, RationalUtils.ceil(coefficient * m)))

        issues = self.verify_K_window(weights, K, horizon)
        if issues:
            raise CertificateViolation(f"K 窗口复核失败: {issues[0].message}", witness=issues[0].data)

        ball = enumeration.ball(m_max)
        self._check_subadditivity(weights, K, ball, m_max)
        self._check_counting(weights, L, K, ball, m_max)

        self.logger.info(f"证书完成: L·K = {coefficient}，m ≤ {m_max} 全部通过")
        return GrowthCertificate(
            graph=graph, condensation=condensation, d=weights, K=K, K_details=K_details, L=L,
            bound_coefficient=coefficient, ball_counts=rows, horizon_used=horizon)

    def _check_subadditivity(self, weights: WeightAssignment, K: int, ball: Set[Element], m_max: int):
        for x in self.spec.alphabet:
            for u in sorted(ball):
                product = self.engine.mul(Element(x, 1), u)
                if self.extend_d(weights, product) > K + self.extend_d(weights, u):
                    raise CertificateViolation(
                        f"d({x}·{u}) = {self.extend_d(weights, product)} > K + d({u})", m=m_max, witness=(x, u))

    def _check_counting(self, weights: WeightAssignment, L: Fraction, K: int, ball: Set[Element], m_max: int):
        values = sorted(self.extend_d(weights, w) for w in ball)
        inside = 0
        for r in range(1, K * m_max + 1):
            while inside < len(values) and values[inside] <= r:
                inside += 1
            total = self.count_I(weights, r)
            if not inside <= total <= L * r:
                raise CertificateViolation(
                    f"计数不一致: r = {r}，|J ∩ I(r)| = {inside}，|I(r)| = {total}，L·r = {L * r}",
                    m=m_max, witness=r)
