"""
持久性分析服务 - 轨迹 x·y^i、回归方程、乘子 M(y,z) 与持久性关系图

若 z^t · y^q = z^s 成立，则对所有 x，只要 x·y^i 落入 ⟨z⟩ 两次，它就无限次落入 ⟨z⟩；
因此单个回归方程即可证明 z 是 y-持久的，轨迹只用于交叉验证。
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from ..core.engine import MultiplicationEngine
from ..core.exceptions import HorizonExhausted, NegativeMultiplier
from ..core.semigroup import Element, GeneratorId

DEFAULT_HORIZON = 64
DEFAULT_RETURN_BOUND = 16


@dataclass(frozen=True)
class StructureIssue:
    """结构验证中发现的问题"""
    check: str
    message: str
    data: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class TargetSummary:
    """轨迹中出现至少两次的目标生成元 z 的摘要"""
    z: GeneratorId
    i0: int
    n0: int
    r: int
    M: Fraction
    hits: Tuple[int, ...]

    def offsets(self) -> Tuple[int, ...]:
        """命中下标减去 i0"""
        return tuple(i - self.i0 for i in self.hits)


@dataclass(frozen=True)
class TrajectoryRecord:
    """轨迹 x·y^i (i = 1..horizon) 及其摘要"""
    x: Element
    y: GeneratorId
    horizon: int
    steps: Tuple[Element, ...]
    summaries: Dict[GeneratorId, TargetSummary]
    period: Optional[int]
    periodic_from: Optional[int]

    def step(self, i: int) -> Element:
        """x·y^i，i 从1开始"""
        return self.steps[i - 1]

    def bases(self) -> List[GeneratorId]:
        return [e.gen for e in self.steps]


@dataclass(frozen=True)
class Return:
    """回归方程 z^t · y^q = z^s"""
    y: GeneratorId
    z: GeneratorId
    t: int
    q: int
    s: int


@dataclass(frozen=True)
class PersistenceEdge:
    """持久性边 (y, z)：z 是 y-持久的"""
    y: GeneratorId
    z: GeneratorId
    M: Fraction
    witness: Return


@dataclass
class PersistenceGraph:
    """持久性关系 P 及乘子；总是包含 M = 1 的自反边"""
    alphabet: Tuple[GeneratorId, ...]
    edges: Dict[Tuple[GeneratorId, GeneratorId], PersistenceEdge] = field(default_factory=dict)

    def has_edge(self, y: GeneratorId, z: GeneratorId) -> bool:
        return (y, z) in self.edges

    def multiplier(self, y: GeneratorId, z: GeneratorId) -> Fraction:
        return self.edges[(y, z)].M

    def successors(self, y: GeneratorId) -> List[GeneratorId]:
        return [z for z in self.alphabet if (y, z) in self.edges]

    def edge_list(self) -> List[PersistenceEdge]:
        """按字母表顺序排列的边"""
        return [self.edges[key] for key in sorted(self.edges)]

    def edge_set(self) -> Dict[Tuple[str, str], Fraction]:
        """{(y名, z名): M}，便于比较"""
        return {(e.y.name, e.z.name): e.M for e in self.edge_list()}


@dataclass
class PersistenceAnalysis:
    """持久性分析的完整结果"""
    graph: PersistenceGraph
    samples: List[Element]
    records: List[TrajectoryRecord]
    issues: Dict[str, List[StructureIssue]]

    @property
    def ok(self) -> bool:
        return not any(self.issues.values())

    def all_issues(self) -> List[StructureIssue]:
        return [issue for issues in self.issues.values() for issue in issues]


class PersistenceService:
    """持久性分析服务"""

    def __init__(self, engine: MultiplicationEngine, horizon: int = DEFAULT_HORIZON,
                 t_max: int = DEFAULT_RETURN_BOUND, q_max: int = DEFAULT_RETURN_BOUND):
        """
        初始化持久性分析服务

        Args:
            engine: 乘法引擎
            horizon: 轨迹视界 H
            t_max: 回归搜索中 t 的上限
            q_max: 回归搜索中 q 的上限
        """
        self.engine = engine
        self.spec = engine.spec
        self.horizon = horizon
        self.t_max = t_max
        self.q_max = q_max
        self.logger = logging.getLogger(__name__)

    # ------------------------------------------------------------------
    # 轨迹
    # ------------------------------------------------------------------

    def trajectory(self, x: Element, y: GeneratorId, horizon: Optional[int] = None) -> TrajectoryRecord:
        """
        计算轨迹 x·y^i，汇总重复出现的目标并检测最终周期

        Args:
            x: 起点元素
            y: 右乘的生成元
            horizon: 视界 H，至少为2

        Returns:
            轨迹记录；视界内无法确认周期时 period 为 None

        Raises:
            HorizonExhausted: 视界内没有任何目标重复
        """
        horizon = self.horizon if horizon is None else horizon
        if horizon < 2:
            raise ValueError(f"视界至少为2: {horizon}")

        steps = tuple(self.engine.power_trajectory(x, y, horizon))
        summaries = self._summarize(steps)
        period, periodic_from = self._detect_period([e.gen for e in steps])

        if not summaries:
            raise HorizonExhausted(
                f"轨迹 {x}·{y}^i 在视界 {horizon} 内没有重复的目标，请增大 --horizon",
                details={'x': str(x), 'y': y.name, 'horizon': horizon}
            )

        return TrajectoryRecord(x, y, horizon, steps, summaries, period, periodic_from)

    def require_period(self, record: TrajectoryRecord) -> TrajectoryRecord:
        """
        要求轨迹已确认最终周期

        Raises:
            HorizonExhausted: 视界内无法确认周期
        """
        if record.period is None:
            raise HorizonExhausted(
                f"轨迹 {record.x}·{record.y}^i 在视界 {record.horizon} 内未确认周期，请增大 --horizon",
                details={'x': str(record.x), 'y': record.y.name, 'horizon': record.horizon}
            )
        return record

    def _summarize(self, steps: Sequence[Element]) -> Dict[GeneratorId, TargetSummary]:
        hits: Dict[GeneratorId, List[int]] = {}
        for i, element in enumerate(steps, start=1):
            hits.setdefault(element.gen, []).append(i)

        summaries = {}
        for z in self.spec.alphabet:
            indices = hits.get(z, [])
            if len(indices) < 2:
                continue
            i0, second = indices[0], indices[1]
            n0 = steps[i0 - 1].exp
            r = second - i0
            M = Fraction(steps[second - 1].exp - n0, r)
            summaries[z] = TargetSummary(z, i0, n0, r, M, tuple(indices))
        return summaries

    @staticmethod
    def _detect_period(bases: Sequence[GeneratorId]) -> Tuple[Optional[int], Optional[int]]:
        """
        通过后缀比较检测最终周期

        候选周期 T 需要在序列后半段（至少两项）至少比较 T 次；返回 (T, 周期段起点下标)，均从1开始。
        """
        horizon = len(bases)
        tail_start = min(horizon // 2, horizon - 2)
        if tail_start < 0:
            return None, None
        for T in range(1, (horizon - tail_start) // 2 + 1):
            if all(bases[k] == bases[k + T] for k in range(tail_start, horizon - T)):
                start = tail_start
                while start > 0 and bases[start - 1] == bases[start - 1 + T]:
                    start -= 1
                return T, start + 1
        return None, None

    # ------------------------------------------------------------------
    # 回归与乘子
    # ------------------------------------------------------------------

    def enumerate_returns(self, y: GeneratorId, z: GeneratorId,
                          t_max: Optional[int] = None, q_max: Optional[int] = None) -> Iterator[Return]:
        """按 (t, q) 字典序产生边界内所有回归方程 z^t·y^q = z^s"""
        t_max = self.t_max if t_max is None else t_max
        q_max = self.q_max if q_max is None else q_max
        for t in range(1, t_max + 1):
            current = Element(z, t)
            for q in range(1, q_max + 1):
                current = self.engine.right_mul_gen(current, y)
                if current.gen == z:
                    yield Return(y, z, t, q, current.exp)

    def find_return(self, y: GeneratorId, z: GeneratorId,
                    t_max: Optional[int] = None, q_max: Optional[int] = None) -> Optional[Return]:
        """
        搜索第一个回归方程 z^t·y^q = z^s

        Returns:
            找到的回归方程，边界内不存在时返回 None（表示"在边界内未检测到"，不是否定结论）
        """
        return next(self.enumerate_returns(y, z, t_max, q_max), None)

    @staticmethod
    def compute_M(ret: Return) -> Fraction:
        """
        由回归方程计算乘子 M = (s - t) / q

        Raises:
            NegativeMultiplier: s < t
        """
        if ret.s < ret.t:
            raise NegativeMultiplier(
                f"回归方程 {ret.z}^{ret.t}·{ret.y}^{ret.q} = {ret.z}^{ret.s} 给出负乘子",
                details={'y': ret.y.name, 'z': ret.z.name, 't': ret.t, 'q': ret.q, 's': ret.s}
            )
        return Fraction(ret.s - ret.t, ret.q)

    def build_persistence_graph(self, t_max: Optional[int] = None,
                                q_max: Optional[int] = None) -> PersistenceGraph:
        """
        对每个有序对 (y, z) 搜索回归方程，构造持久性关系图

        Returns:
            持久性关系图（含自反边）
        """
        graph = PersistenceGraph(self.spec.alphabet)
        for y, z in self.spec.ordered_pairs():
            ret = self.find_return(y, z, t_max, q_max)
            if ret is None:
                if y == z:
                    # y·y = y² 总是回归方程，走到这里说明引擎有误
                    raise AssertionError(f"自反回归方程缺失: {y}")
                self.logger.debug(f"{z} 在边界内未检测到 {y}-持久性")
                continue
            graph.edges[(y, z)] = PersistenceEdge(y, z, self.compute_M(ret), ret)

        self.logger.info(f"持久性关系图构造完成: {len(graph.edges)} 条边（含 {len(self.spec.alphabet)} 条自反边）")
        return graph

    # ------------------------------------------------------------------
    # 验证
    # ------------------------------------------------------------------

    def sample_elements(self) -> List[Element]:
        """x 无关性检查的样本：全部生成元及生成元两两乘积，去重后排序"""
        samples = set(self.spec.generators_as_elements())
        for left, right in self.spec.ordered_pairs():
            samples.add(self.engine.mul(Element(left, 1), Element(right, 1)))
        return sorted(samples)

    def verify_witnesses(self, graph: PersistenceGraph) -> List[StructureIssue]:
        """重新计算每条边的回归方程"""
        issues = []
        for edge in graph.edge_list():
            w = edge.witness
            value = self.engine.mul(Element(w.z, w.t), Element(w.y, w.q))
            if value != Element(w.z, w.s):
                issues.append(StructureIssue(
                    'witness', f"回归方程不成立: {w.z}^{w.t}·{w.y}^{w.q} = {value}，期望 {w.z}^{w.s}",
                    {'y': w.y.name, 'z': w.z.name}))
        return issues

    def verify_multiplier_consistency(self, graph: PersistenceGraph,
                                      t_max: Optional[int] = None,
                                      q_max: Optional[int] = None) -> List[StructureIssue]:
        """边界内每个回归方程给出的乘子都必须等于边上的 M"""
        issues = []
        for edge in graph.edge_list():
            for ret in self.enumerate_returns(edge.y, edge.z, t_max, q_max):
                M = Fraction(ret.s - ret.t, ret.q)
                if M != edge.M:
                    issues.append(StructureIssue(
                        'multiplier', f"({edge.y},{edge.z}) 的回归方程 t={ret.t}, q={ret.q} 给出 M={M}，边上为 {edge.M}",
                        {'y': edge.y.name, 'z': edge.z.name, 't': ret.t, 'q': ret.q, 'M': str(M)}))
        return issues

    def verify_x_independence(self, graph: PersistenceGraph, sample_elements: Sequence[Element],
                              horizon: Optional[int] = None) -> List[StructureIssue]:
        """
        对每个样本 x 和生成元 y，轨迹给出的乘子必须等于关系图中的 M(y, z)

        轨迹中出现两次的目标必须在图中有对应的边。
        """
        records = [self.trajectory(x, y, horizon)
                   for x in sample_elements for y in self.spec.alphabet]
        return self._check_records_against_graph(records, graph)

    def _check_records_against_graph(self, records: Sequence[TrajectoryRecord],
                                     graph: PersistenceGraph) -> List[StructureIssue]:
        issues = []
        for record in records:
            for z, summary in record.summaries.items():
                data = {'x': str(record.x), 'y': record.y.name, 'z': z.name}
                if not graph.has_edge(record.y, z):
                    issues.append(StructureIssue(
                        'x_independence', f"轨迹 {record.x}·{record.y}^i 两次命中 {z}，但图中没有边 ({record.y},{z})", data))
                elif graph.multiplier(record.y, z) != summary.M:
                    issues.append(StructureIssue(
                        'x_independence',
                        f"轨迹 {record.x}·{record.y}^i 给出 M={summary.M}，图中 M({record.y},{z})={graph.multiplier(record.y, z)}",
                        data))
        return issues

    def verify_double_hits(self, graph: PersistenceGraph,
                           horizon: Optional[int] = None) -> List[StructureIssue]:
        """
        每条非自反边 (y, z) 都要在轨迹中体现：从见证的 z^t 出发，z^t·y^i 在视界内至少两次命中 z

        由 z^t·y^q = z^s 可得 i = q 与 i = 2q 都落入 ⟨z⟩；2q 超出视界的边不作判断。
        """
        horizon = self.horizon if horizon is None else horizon
        issues = []
        for edge in graph.edge_list():
            if edge.y == edge.z:
                continue
            w = edge.witness
            if 2 * w.q > horizon:
                self.logger.debug(f"边 ({edge.y},{edge.z}) 的 2q = {2 * w.q} 超出视界 {horizon}，跳过")
                continue
            record = self.trajectory(Element(w.z, w.t), w.y, horizon)
            if edge.z not in record.summaries:
                issues.append(StructureIssue(
                    'double_hit', f"轨迹 {w.z}^{w.t}·{w.y}^i 在视界 {horizon} 内没有两次命中 {w.z}",
                    {'y': w.y.name, 'z': w.z.name, 't': w.t}))
        return issues

    def verify_transitivity(self, graph: PersistenceGraph) -> List[StructureIssue]:
        """可复合的边 (x,y),(y,z) 必须有边 (x,z) 且 M(x,z) = M(x,y)·M(y,z)"""
        issues = []
        for first in graph.edge_list():
            for z in graph.successors(first.z):
                x, y = first.y, first.z
                expected = first.M * graph.multiplier(y, z)
                data = {'x': x.name, 'y': y.name, 'z': z.name}
                if not graph.has_edge(x, z):
                    issues.append(StructureIssue('transitivity', f"缺少传递边 ({x},{z})", data))
                elif graph.multiplier(x, z) != expected:
                    issues.append(StructureIssue(
                        'transitivity', f"M({x},{z})={graph.multiplier(x, z)} ≠ M({x},{y})·M({y},{z})={expected}", data))
        return issues

    def verify_trajectory_structure(self, record: TrajectoryRecord) -> List[StructureIssue]:
        """
        检查轨迹的结构性质

        (a) 命中偏移集合在视界内对加法封闭；
        (b) 命中处 n_i = n0 + M(i - i0) 精确成立且 M ≥ 0；
        (c) 第二次命中后，i0 + k·r 都是命中（算术级数）；
        (d) 底序列从 periodic_from 起以 T 为周期，且 T 的某个倍数是所有偏移集合的公共正元素。
        """
        issues = []
        horizon = record.horizon
        base = {'x': str(record.x), 'y': record.y.name}

        for z, summary in record.summaries.items():
            data = dict(base, z=z.name)
            hit_set = set(summary.hits)
            offsets = set(summary.offsets())

            for a in offsets:
                for b in offsets:
                    if summary.i0 + a + b <= horizon and (a + b) not in offsets:
                        issues.append(StructureIssue('closure', f"偏移 {a}+{b} 不在 {z} 的命中偏移集合中", data))

            if summary.M < 0:
                issues.append(StructureIssue('nonnegativity', f"{z} 的乘子为负: {summary.M}", data))
            for i in summary.hits:
                expected = summary.n0 + summary.M * (i - summary.i0)
                if record.step(i).exp != expected:
                    issues.append(StructureIssue(
                        'linearity', f"i={i}: 指数 {record.step(i).exp} ≠ {expected}", dict(data, i=i)))

            for i in range(summary.i0, horizon + 1, summary.r):
                if i not in hit_set:
                    issues.append(StructureIssue('progression', f"i={i} 应命中 {z}", dict(data, i=i)))

        issues.extend(self._check_period(record))
        return issues

    def _check_period(self, record: TrajectoryRecord) -> List[StructureIssue]:
        T, start = record.period, record.periodic_from
        if T is None:
            return []
        issues = []
        data = {'x': str(record.x), 'y': record.y.name, 'period': T}
        bases = record.bases()
        for k in range(start - 1, record.horizon - T):
            if bases[k] != bases[k + T]:
                issues.append(StructureIssue('periodicity', f"i={k + 1} 处周期 {T} 不成立", data))
                return issues

        offset_sets = [set(s.offsets()) for s in record.summaries.values()]
        reach = record.horizon - max(s.i0 for s in record.summaries.values())
        if not any(all(k in offsets for offsets in offset_sets) for k in range(T, reach + 1, T)):
            issues.append(StructureIssue('periodicity', f"周期 {T} 的倍数都不是偏移集合的公共元素", data))
        return issues

    def analyze(self, graph: Optional[PersistenceGraph] = None,
                horizon: Optional[int] = None) -> PersistenceAnalysis:
        """
        完整持久性分析：构图、见证复核、乘子一致性、x 无关性、双向命中、传递性与轨迹结构

        Returns:
            分析结果，issues 按检查类别分组

        Raises:
            HorizonExhausted: 某条样本轨迹在视界内没有重复目标或无法确认周期
        """
        graph = graph or self.build_persistence_graph()
        samples = self.sample_elements()
        records = [self.require_period(self.trajectory(x, y, horizon))
                   for x in samples for y in self.spec.alphabet]

        structure = []
        for record in records:
            structure.extend(self.verify_trajectory_structure(record))

        issues = {
            'witness': self.verify_witnesses(graph),
            'multiplier': self.verify_multiplier_consistency(graph),
            'x_independence': self._check_records_against_graph(records, graph),
            'double_hit': self.verify_double_hits(graph, horizon),
            'transitivity': self.verify_transitivity(graph),
            'trajectory_structure': structure,
        }
        for check, found in issues.items():
            if found:
                self.logger.warning(f"持久性检查 {check} 发现 {len(found)} 个问题")
        return PersistenceAnalysis(graph, samples, records, issues)
