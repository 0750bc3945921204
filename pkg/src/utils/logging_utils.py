"""
日志工具模块
提供统一的日志配置；控制台日志写到 stderr，stdout 留给报告输出
"""

import logging
import sys
from typing import Optional

import colorlog

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'


class LoggingUtils:
    """日志工具类"""

    # 日志级别映射
    LEVEL_MAPPING = {
        'DEBUG': logging.DEBUG,
        'INFO': logging.INFO,
        'WARNING': logging.WARNING,
        'ERROR': logging.ERROR,
        'CRITICAL': logging.CRITICAL
    }

    @staticmethod
    def resolve_level(log_level: str) -> int:
        return LoggingUtils.LEVEL_MAPPING.get(str(log_level).upper(), logging.WARNING)

    @staticmethod
    def setup_logging(log_level: str = 'WARNING',
                      log_file: Optional[str] = None,
                      use_colors: bool = True) -> None:
        """
        设置日志配置

        Args:
            log_level: 日志级别
            log_file: 日志文件路径
            use_colors: 是否使用颜色
        """
        # 清除现有的处理器
        root_logger = logging.getLogger()
        for handler in root_logger.handlers[:]:
            root_logger.removeHandler(handler)

        level = LoggingUtils.resolve_level(log_level)
        root_logger.setLevel(level)

        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(level)
        if use_colors:
            console_handler.setFormatter(colorlog.ColoredFormatter(
                '%(log_color)s' + LOG_FORMAT,
                datefmt=DATE_FORMAT,
                log_colors={
                    'DEBUG': 'cyan',
                    'INFO': 'green',
                    'WARNING': 'yellow',
                    'ERROR': 'red',
                    'CRITICAL': 'red,bg_white',
                }
            ))
        else:
            console_handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT))
        root_logger.addHandler(console_handler)

        if log_file:
            file_handler = logging.FileHandler(log_file, encoding='utf-8')
            file_handler.setLevel(level)
            file_handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT))
            root_logger.addHandler(file_handler)

    @staticmethod
    def log_execution_time(name: str, execution_time: float,
                           logger: Optional[logging.Logger] = None) -> None:
        """
        记录执行时间

        Args:
            name: 阶段名称
            execution_time: 执行时间（秒）
            logger: 日志器，如果为None则使用默认日志器
        """
        if logger is None:
            logger = logging.getLogger(__name__)
        logger.info(f"{name} 执行时间: {execution_time:.3f}秒")
