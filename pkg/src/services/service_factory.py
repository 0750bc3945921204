"""
服务工厂模块 - 按运行配置统一创建乘法引擎和各分析服务
"""

import logging
from typing import Any, Dict, Optional

from ..core.config_manager import RunConfig
from ..core.engine import MultiplicationEngine
from ..core.semigroup import SemigroupSpec
from ..core.spec_validator import SpecValidator
from .growth_service import GrowthService
from .persistence_service import PersistenceService
from .weight_service import WeightService


class ServiceFactory:
    """服务工厂类，统一管理各种服务的创建"""

    def __init__(self, config: Optional[RunConfig] = None):
        """
        初始化服务工厂

        Args:
            config: 运行配置，为None时使用默认值
        """
        self.config = config or RunConfig()
        self.logger = logging.getLogger(__name__)

        # 同一规格共享引擎缓存
        self._engine_cache: Dict[SemigroupSpec, MultiplicationEngine] = {}

    def create_engine(self, spec: SemigroupSpec) -> MultiplicationEngine:
        """
        创建（或复用）规格对应的乘法引擎

        Args:
            spec: 半群规格

        Returns:
            乘法引擎实例
        """
        engine = self._engine_cache.get(spec)
        if engine is None:
            engine = MultiplicationEngine(spec, self.config.depth_bound)
            self._engine_cache[spec] = engine
            self.logger.debug(f"乘法引擎创建成功: {[g.name for g in spec.alphabet]}")
        return engine

    def create_spec_validator(self, engine: MultiplicationEngine) -> SpecValidator:
        return SpecValidator(engine)

    def create_persistence_service(self, engine: MultiplicationEngine) -> PersistenceService:
        return PersistenceService(engine, self.config.horizon, self.config.t_max, self.config.q_max)

    def create_weight_service(self) -> WeightService:
        return WeightService()

    def create_growth_service(self, engine: MultiplicationEngine,
                              persistence_service: PersistenceService) -> GrowthService:
        return GrowthService(engine, persistence_service, self.config.threads, self.config.frontier_cap)

    def create_services_for_spec(self, spec: SemigroupSpec) -> Dict[str, Any]:
        """
        为规格创建整条分析流水线所需的服务实例

        Args:
            spec: 半群规格

        Returns:
            包含所有服务实例的字典
        """
        services: Dict[str, Any] = {}
        services['engine'] = self.create_engine(spec)
        services['spec_validator'] = self.create_spec_validator(services['engine'])
        services['persistence_service'] = self.create_persistence_service(services['engine'])
        services['weight_service'] = self.create_weight_service()
        services['growth_service'] = self.create_growth_service(
            services['engine'], services['persistence_service'])
        return services

    def clear_cache(self):
        """清除引擎缓存"""
        self._engine_cache.clear()
        self.logger.info("引擎缓存已清除")
