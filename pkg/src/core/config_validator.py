"""
配置验证器 - 验证运行参数的完整性和有效性
"""

import logging
from typing import List


class ConfigValidator:
    """配置验证器，验证运行参数的有效性"""

    # 参数名 -> 最小允许值
    MINIMUMS = {
        'window': 2,
        'depth_bound': 1,
        'horizon': 2,
        't_max': 1,
        'q_max': 1,
        'm_max': 1,
        'threads': 1,
        'frontier_cap': 1,
        'search_cap': 1,
    }

    LOG_LEVELS = {'DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'}

    def __init__(self):
        self.logger = logging.getLogger(__name__)
        self.errors: List[str] = []
        self.warnings: List[str] = []

    def validate_run_config(self, config) -> bool:
        """
        验证运行配置

        Args:
            config: RunConfig 实例

        Returns:
            是否验证通过
        """
        self.errors.clear()
        self.warnings.clear()

        for name, minimum in self.MINIMUMS.items():
            value = getattr(config, name)
            if not isinstance(value, int) or isinstance(value, bool):
                self.errors.append(f"参数 {name} 必须是整数，当前值: {value!r}")
            elif value < minimum:
                self.errors.append(f"参数 {name} 不能小于 {minimum}，当前值: {value}")

        if str(config.log_level).upper() not in self.LOG_LEVELS:
            self.errors.append(f"不支持的日志级别: {config.log_level}")

        if not self.errors:
            self._validate_relations(config)

        return len(self.errors) == 0

    def _validate_relations(self, config):
        """参数之间的关系只产生警告"""
        if config.window > 32:
            self.warnings.append(f"结合律窗口 {config.window} 较大，检查耗时与窗口的三次方成正比")
        if config.horizon < 8:
            self.warnings.append(f"视界 {config.horizon} 较小，可能无法确认轨迹周期")
        if config.threads > 64:
            self.warnings.append(f"线程数 {config.threads} 过多")

    def get_errors(self) -> List[str]:
        """获取验证错误"""
        return self.errors.copy()

    def get_warnings(self) -> List[str]:
        """获取验证警告"""
        return self.warnings.copy()
