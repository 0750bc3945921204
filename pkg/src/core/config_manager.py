"""
配置管理器 - 管理分析参数（窗口、深度上限、视界等）
"""

import os
import yaml
import logging
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path
from typing import Any, Dict, Optional

from .config_validator import ConfigValidator
from .exceptions import ConfigError


@dataclass(frozen=True)
class RunConfig:
    """一次运行使用的全部参数"""
    window: int = 8
    depth_bound: int = 10000
    horizon: int = 64
    t_max: int = 16
    q_max: int = 16
    m_max: int = 12
    threads: int = 1
    frontier_cap: int = 10_000_000
    search_cap: int = 200_000
    log_level: str = 'WARNING'

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


RUN_CONFIG_FIELDS = tuple(f.name for f in fields(RunConfig))


class ConfigManager:
    """配置管理器，加载 global_config.yaml 并与命令行参数合并"""

    CONFIG_FILE = "global_config.yaml"

    def __init__(self, config_dir: str = "./config"):
        """
        初始化配置管理器

        Args:
            config_dir: 配置文件目录路径
        """
        self.config_dir = Path(config_dir)
        self.global_config: Dict[str, Any] = {}
        self.logger = logging.getLogger(__name__)

        # 创建配置验证器
        self.validator = ConfigValidator()

        self._load_global_config()

    def _load_global_config(self):
        """加载全局配置文件"""
        global_config_path = self.config_dir / self.CONFIG_FILE

        if not global_config_path.exists():
            self.logger.debug(f"全局配置文件不存在，使用默认配置: {global_config_path}")
            self.global_config = self._get_default_global_config()
            return

        try:
            with open(global_config_path, 'r', encoding='utf-8') as f:
                self.global_config = yaml.safe_load(f) or {}
        except (OSError, yaml.YAMLError) as e:
            raise ConfigError(f"全局配置加载失败: {global_config_path}: {e}") from e

        # 处理环境变量
        self.global_config = self._process_environment_variables(self.global_config)
        self.logger.debug("全局配置加载成功")

    def _process_environment_variables(self, config):
        """处理 ${VAR} 形式的环境变量替换"""
        def replace_env_vars(obj):
            if isinstance(obj, dict):
                for key, value in obj.items():
                    obj[key] = replace_env_vars(value)
            elif isinstance(obj, list):
                for i, value in enumerate(obj):
                    obj[i] = replace_env_vars(value)
            elif isinstance(obj, str) and obj.startswith("${") and obj.endswith("}"):
                env_var = obj[2:-1]
                value = os.getenv(env_var, obj)
                # 数值型参数从环境变量读入时是字符串
                return int(value) if value.isdigit() else value
            return obj

        return replace_env_vars(config)

    def _get_default_global_config(self) -> Dict[str, Any]:
        """获取默认全局配置"""
        defaults = RunConfig()
        return {
            'analysis': {name: getattr(defaults, name) for name in RUN_CONFIG_FIELDS if name != 'log_level'},
            'logging': {'level': defaults.log_level},
        }

    def get_analysis_config(self) -> Dict[str, Any]:
        """获取分析参数配置"""
        return self.global_config.get('analysis', {}) or {}

    def get_logging_config(self) -> Dict[str, Any]:
        """获取日志配置"""
        return self.global_config.get('logging', {}) or {}

    def build_run_config(self, **overrides: Optional[Any]) -> RunConfig:
        """
        合并默认值、配置文件和命令行参数

        Args:
            overrides: 命令行参数，值为 None 表示未指定

        Returns:
            验证通过的运行配置
        """
        values: Dict[str, Any] = {}
        analysis = self.get_analysis_config()
        for name in RUN_CONFIG_FIELDS:
            if name in analysis:
                values[name] = analysis[name]
        level = self.get_logging_config().get('level')
        if level:
            values['log_level'] = level

        unknown = set(overrides) - set(RUN_CONFIG_FIELDS)
        if unknown:
            raise ConfigError(f"未知的配置项: {sorted(unknown)}")
        values.update({k: v for k, v in overrides.items() if v is not None})

        config = replace(RunConfig(), **values)
        if not self.validator.validate_run_config(config):
            raise ConfigError(f"运行配置无效: {self.validator.get_errors()}",
                              details={'errors': self.validator.get_errors()})
        for warning in self.validator.get_warnings():
            self.logger.warning(f"配置警告: {warning}")
        return config

    def get_config_summary(self) -> Dict[str, Any]:
        """获取配置摘要信息"""
        return {
            'config_dir': str(self.config_dir),
            'global_config_loaded': bool(self.global_config),
            'analysis': self.get_analysis_config(),
        }
