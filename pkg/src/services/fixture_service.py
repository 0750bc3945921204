"""
示例半群服务 - 已知分析结果的示例规格，以及小乘法表的穷举搜索

示例规格以规格文件的形式存放在 data/fixtures/ 下，可选的 expected 字段记录期望结果。
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import partial
from itertools import permutations, product
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from ..core.config_manager import RunConfig
from ..core.engine import MultiplicationEngine
from ..core.exceptions import ResourceLimitExceeded, SemigroupError, SpecFormatError, UnknownFixture
from ..core.semigroup import SemigroupSpec
from ..core.spec_validator import SpecValidator
from ..utils.file_utils import FileUtils
from ..utils.rational_utils import RationalUtils
from .certification_service import CertificationService
from .service_factory import ServiceFactory

FIXTURE_NAMES = ('fold', 'shift2', 'swap', 'cascade3', 'nonassoc')
DEFAULT_FIXTURES_DIR = Path(__file__).resolve().parents[2] / 'data' / 'fixtures'

SEARCH_NAMES = ('a', 'b', 'c')
SEARCH_ALPHABET_SIZES = range(2, 4)
SEARCH_EXPONENTS = range(1, 4)
DEFAULT_SEARCH_WINDOW = 6
DEFAULT_SEARCH_M_MAX = 8

TableKey = Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class FixtureExpectation:
    """示例半群的期望分析结果"""
    accepted: bool
    witness: Optional[Tuple[str, str, str]] = None
    witness_left: Optional[Tuple[str, int]] = None
    witness_right: Optional[Tuple[str, int]] = None
    edges: Dict[Tuple[str, str], Fraction] = field(default_factory=dict)
    d: Dict[str, int] = field(default_factory=dict)
    K: Optional[int] = None
    L: Optional[Fraction] = None
    ball_counts: Tuple[int, ...] = ()


@dataclass(frozen=True)
class Fixture:
    """示例半群"""
    name: str
    description: str
    spec: SemigroupSpec
    expected: Optional[FixtureExpectation]
    path: Path
    digest: str


@dataclass
class SearchSurvivor:
    """通过过滤的乘法表及其分析摘要"""
    spec: SemigroupSpec
    canonical_key: Tuple[int, TableKey]
    summary: Dict[str, Any] = field(default_factory=dict)
    error: Optional[str] = None

    @property
    def certified(self) -> bool:
        return self.error is None


class FixtureService:
    """示例半群服务"""

    def __init__(self, fixtures_dir: Union[str, Path, None] = None, config: Optional[RunConfig] = None):
        """
        初始化示例半群服务

        Args:
            fixtures_dir: 示例规格目录，默认为仓库的 data/fixtures
            config: 运行配置（搜索时使用其深度上限和枚举上限）
        """
        self.fixtures_dir = Path(fixtures_dir) if fixtures_dir else DEFAULT_FIXTURES_DIR
        self.config = config or RunConfig()
        self.logger = logging.getLogger(__name__)
        self._fixture_cache: Dict[str, Fixture] = {}

    # ------------------------------------------------------------------
    # 示例
    # ------------------------------------------------------------------

    def fixture_path(self, name: str) -> Path:
        return self.fixtures_dir / f"{name}.yaml"

    def list_fixtures(self) -> List[Fixture]:
        return [self.get_fixture(name) for name in FIXTURE_NAMES]

    def get_fixture(self, name: str) -> Fixture:
        """
        按名称加载示例半群

        Args:
            name: fold, shift2, swap, cascade3 或 nonassoc

        Returns:
            示例半群

        Raises:
            UnknownFixture: 名称不存在
        """
        if name not in FIXTURE_NAMES:
            raise UnknownFixture(f"未知的示例半群: {name}", details={'available': list(FIXTURE_NAMES)})

        if name not in self._fixture_cache:
            path = self.fixture_path(name)
            spec, digest, document = FileUtils.load_spec(path)
            expected = self._parse_expectation(document.get('expected'), path)
            self._fixture_cache[name] = Fixture(
                name, document.get('description', ''), spec, expected, path, digest)
            self.logger.debug(f"示例半群加载成功: {name}")
        return self._fixture_cache[name]

    def resolve_spec_path(self, argument: str) -> Path:
        """
        命令行的规格参数：已存在的文件优先，否则按示例名称解析（允许 fixtures/ 前缀和 .yaml 后缀）
        """
        path = Path(argument)
        if path.is_file():
            return path
        name = argument
        if name.startswith('fixtures/'):
            name = name[len('fixtures/'):]
        if name.endswith('.yaml'):
            name = name[:-len('.yaml')]
        if name in FIXTURE_NAMES:
            return self.fixture_path(name)
        return path

    @staticmethod
    def _parse_expectation(data: Any, path: Path) -> Optional[FixtureExpectation]:
        if data is None:
            return None
        try:
            if not data['accepted']:
                return FixtureExpectation(
                    accepted=False,
                    witness=tuple(data['witness']),
                    witness_left=tuple(data['left']),
                    witness_right=tuple(data['right']),
                )
            edges = {(e['y'], e['z']): RationalUtils.from_pair(e['m_num'], e['m_den']) for e in data['edges']}
            return FixtureExpectation(
                accepted=True,
                edges=edges,
                d=dict(data['weights']),
                K=data['K'],
                L=RationalUtils.from_pair(data['L_num'], data['L_den']),
                ball_counts=tuple(data['balls']),
            )
        except (KeyError, TypeError) as e:
            raise SpecFormatError(f"示例期望结果格式错误: {path}: {e}") from e

    # ------------------------------------------------------------------
    # 搜索
    # ------------------------------------------------------------------

    @staticmethod
    def canonical_key(spec: SemigroupSpec) -> Tuple[int, TableKey]:
        """
        在生成元重命名和乘法表反转（反同构）下的规范编码：所有变换后编码的最小值
        """
        n = len(spec.alphabet)
        table = {(left.index, right.index): (value.gen.index, value.exp)
                 for (left, right), value in spec.table.items()}
        pairs = [(i, j) for i in range(n) for j in range(n) if i != j]

        keys = []
        for perm in permutations(range(n)):
            for reverse in (False, True):
                image = {}
                for (i, j), (k, exp) in table.items():
                    left, right = (j, i) if reverse else (i, j)
                    image[(perm[left], perm[right])] = (perm[k], exp)
                keys.append(tuple(image[p] for p in pairs))
        return n, min(keys)

    def candidate_count(self, alphabet_size: int, max_result_exp: int) -> int:
        return (alphabet_size * max_result_exp) ** (alphabet_size * (alphabet_size - 1))

    def search_fixtures(self, alphabet_size: int, max_result_exp: int,
                        window: int = DEFAULT_SEARCH_WINDOW, threads: int = 1,
                        m_max: int = DEFAULT_SEARCH_M_MAX) -> List[SearchSurvivor]:
        """
        穷举指数不超过 max_result_exp 的全部乘法表，保留通过结合律窗口和单调性检查的表

        结果按重命名与反转去重，每个等价类保留枚举顺序（字典序）中的第一个，并附带证书摘要。

        Args:
            alphabet_size: 生成元个数，2 或 3
            max_result_exp: 乘积指数上限，1 到 3
            window: 结合律窗口
            threads: 并行检查候选表的线程数
            m_max: 证书摘要的最大字长

        Returns:
            幸存者列表

        Raises:
            ResourceLimitExceeded: 候选表数量超过 search_cap
        """
        if alphabet_size not in SEARCH_ALPHABET_SIZES:
            raise ValueError(f"生成元个数必须在 2..3 之间: {alphabet_size}")
        if max_result_exp not in SEARCH_EXPONENTS:
            raise ValueError(f"乘积指数上限必须在 1..3 之间: {max_result_exp}")

        total = self.candidate_count(alphabet_size, max_result_exp)
        if total > self.config.search_cap:
            raise ResourceLimitExceeded(
                f"候选表数量 {total} 超过上限 {self.config.search_cap}",
                details={'candidates': total, 'search_cap': self.config.search_cap})

        names = SEARCH_NAMES[:alphabet_size]
        pairs = [(left, right) for left in names for right in names if left != right]
        options = [(name, exp) for name in names for exp in range(1, max_result_exp + 1)]
        candidates = [
            SemigroupSpec.from_products(names, [(l, r, g, e) for (l, r), (g, e) in zip(pairs, choice)])
            for choice in product(options, repeat=len(pairs))
        ]
        self.logger.info(f"搜索 {len(candidates)} 个候选乘法表（{alphabet_size} 个生成元，指数 ≤ {max_result_exp}）")

        check = partial(self._passes_filters, window=window)
        with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
            verdicts = list(pool.map(check, candidates))

        survivors = []
        seen = set()
        for spec, accepted in zip(candidates, verdicts):
            if not accepted:
                continue
            key = self.canonical_key(spec)
            if key in seen:
                continue
            seen.add(key)
            survivors.append(self._summarize(spec, key, window, m_max))

        self.logger.info(f"搜索完成: {sum(verdicts)} 个表通过过滤，去重后 {len(survivors)} 个")
        return survivors

    def _passes_filters(self, spec: SemigroupSpec, window: int) -> bool:
        engine = MultiplicationEngine(spec, self.config.depth_bound)
        return SpecValidator(engine).validate(window, fail_fast=True).accepted

    def _summarize(self, spec: SemigroupSpec, key, window: int, m_max: int) -> SearchSurvivor:
        config = replace(self.config, window=window, m_max=m_max, threads=1)
        service = CertificationService(ServiceFactory(config))
        try:
            certificate = service.certify(spec, m_max)
        except SemigroupError as e:
            self.logger.warning(f"幸存者未能完成证书: {spec.product_records()}: {e.message}")
            return SearchSurvivor(spec, key, error=f"{e.error_code}: {e.message}")

        summary = {
            'edges': {f"{y}->{z}": str(M) for (y, z), M in certificate.graph.edge_set().items()},
            'weights': certificate.d.by_name(),
            'K': certificate.K,
            'L': str(certificate.L),
            'balls': [row.count for row in certificate.ball_counts],
            'verdict': certificate.verdict,
        }
        return SearchSurvivor(spec, key, summary)
