"""
配置管理测试
"""

import os
import tempfile
import unittest
from pathlib import Path
from unittest.mock import patch

from src.core.config_manager import ConfigManager, RunConfig
from src.core.config_validator import ConfigValidator
from src.core.exceptions import ConfigError


class TestConfigManager(unittest.TestCase):
    """配置管理器测试"""

    def setUp(self):
        """测试前准备"""
        self.temp_dir = tempfile.TemporaryDirectory()
        self.config_dir = Path(self.temp_dir.name)

    def tearDown(self):
        self.temp_dir.cleanup()

    def _write_config(self, content: str):
        (self.config_dir / ConfigManager.CONFIG_FILE).write_text(content, encoding='utf-8')

    def test_defaults_when_file_missing(self):
        """配置文件不存在时使用默认值"""
        manager = ConfigManager(str(self.config_dir))
        config = manager.build_run_config()

        self.assertEqual(config, RunConfig())
        self.assertEqual(config.window, 8)
        self.assertEqual(config.horizon, 64)
        self.assertEqual(config.log_level, 'WARNING')

    def test_file_values_and_overrides(self):
        """命令行参数优先于配置文件，None 表示未指定"""
        self._write_config("analysis:\n  window: 5\n  horizon: 32\nlogging:\n  level: INFO\n")
        manager = ConfigManager(str(self.config_dir))
        config = manager.build_run_config(horizon=None, threads=4)

        self.assertEqual(config.window, 5)
        self.assertEqual(config.horizon, 32)
        self.assertEqual(config.threads, 4)
        self.assertEqual(config.log_level, 'INFO')

    def test_environment_substitution(self):
        """${VAR} 替换为环境变量，数字字符串转为整数"""
        self._write_config("analysis:\n  m_max: \"${SEMIGROUP_M_MAX}\"\n")
        with patch.dict(os.environ, {'SEMIGROUP_M_MAX': '6'}):
            manager = ConfigManager(str(self.config_dir))
        self.assertEqual(manager.build_run_config().m_max, 6)

    def test_unknown_override_rejected(self):
        manager = ConfigManager(str(self.config_dir))
        with self.assertRaises(ConfigError):
            manager.build_run_config(colour='red')

    def test_invalid_value_rejected(self):
        """窗口小于 2 不合法"""
        manager = ConfigManager(str(self.config_dir))
        with self.assertRaises(ConfigError) as context:
            manager.build_run_config(window=1)
        self.assertTrue(context.exception.details['errors'])

    def test_malformed_yaml_rejected(self):
        self._write_config("analysis: [window: 3\n")
        with self.assertRaises(ConfigError):
            ConfigManager(str(self.config_dir))

    def test_repository_config_loads(self):
        """仓库自带的配置文件与默认值一致"""
        repo_config = Path(__file__).resolve().parent.parent / 'config'
        manager = ConfigManager(str(repo_config))
        self.assertEqual(manager.build_run_config(), RunConfig())

    def test_config_summary(self):
        summary = ConfigManager(str(self.config_dir)).get_config_summary()
        self.assertEqual(summary['config_dir'], str(self.config_dir))
        self.assertEqual(summary['analysis']['window'], 8)


class TestConfigValidator(unittest.TestCase):
    """配置验证器测试"""

    def setUp(self):
        self.validator = ConfigValidator()

    def test_valid_config(self):
        self.assertTrue(self.validator.validate_run_config(RunConfig()))
        self.assertEqual(self.validator.get_errors(), [])

    def test_type_and_minimum_errors(self):
        config = RunConfig(depth_bound=0, t_max=True, log_level='LOUD')
        self.assertFalse(self.validator.validate_run_config(config))
        self.assertEqual(len(self.validator.get_errors()), 3)

    def test_warnings(self):
        """过小的视界只产生警告"""
        self.assertTrue(self.validator.validate_run_config(RunConfig(horizon=4)))
        self.assertEqual(len(self.validator.get_warnings()), 1)


if __name__ == '__main__':
    unittest.main()
