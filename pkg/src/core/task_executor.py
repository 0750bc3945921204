"""
任务执行器基类 - 定义分析流水线的标准执行流程（准备、执行、收尾）
"""

import logging
import time
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, Optional, Union

from .config_manager import RunConfig
from .exceptions import SemigroupError
from ..services.certification_service import CertificationService
from ..services.service_factory import ServiceFactory
from ..utils.file_utils import FileUtils
from ..utils.logging_utils import LoggingUtils

# 表示写到标准输出的路径
STDOUT_PATH = '-'


class TaskExecutor(ABC):
    """任务执行器抽象基类"""

    task_name = 'task'

    def __init__(self, config: Optional[RunConfig] = None, factory: Optional[ServiceFactory] = None):
        """
        初始化任务执行器

        Args:
            config: 运行配置
            factory: 服务工厂，为None时按配置创建
        """
        self.config = config or RunConfig()
        self.service_factory = factory or ServiceFactory(self.config)
        self.certification_service = CertificationService(self.service_factory)
        self.logger = logging.getLogger(f"{__name__}.{self.task_name}")

        # 任务执行状态
        self.start_time: Optional[float] = None
        self.end_time: Optional[float] = None
        self.execution_result: Dict[str, Any] = {}

    def execute(self) -> Dict[str, Any]:
        """
        执行任务的主方法

        Returns:
            执行结果字典，至少包含 success 和 exit_code
        """
        try:
            self._pre_execute()
            result = self._execute_task()
            self._post_execute(result)
            return result
        except SemigroupError as e:
            self._handle_execution_error(e)
            raise

    def _pre_execute(self):
        """任务执行前的准备工作"""
        self.start_time = time.perf_counter()
        self.logger.info(f"任务开始执行: {self.task_name}")

    @abstractmethod
    def _execute_task(self) -> Dict[str, Any]:
        """
        执行具体任务的抽象方法

        Returns:
            任务执行结果
        """
        pass

    def _post_execute(self, result: Dict[str, Any]):
        """任务执行后的处理工作；耗时只写日志，不进入报告文档"""
        self.end_time = time.perf_counter()
        self.execution_result = result
        LoggingUtils.log_execution_time(self.task_name, self.end_time - self.start_time, self.logger)
        self.logger.info(f"任务执行完成: {self.task_name}，退出码 {result.get('exit_code', 0)}")

    def _handle_execution_error(self, error: SemigroupError):
        """记录任务执行异常"""
        self.end_time = time.perf_counter()
        self.logger.debug(f"任务执行异常: {self.task_name}, {error.error_code}: {error.message}, 详情: {error.details}")

    def _save_output(self, content: str, output_path: Union[str, Path, None]) -> Optional[str]:
        """
        保存输出内容到文件；路径为空或为 "-" 时不写文件，由命令行打印

        Returns:
            保存的文件路径
        """
        if not output_path or str(output_path) == STDOUT_PATH:
            return None
        FileUtils.safe_write_file(output_path, content)
        self.logger.info(f"输出文件保存成功: {output_path}")
        return str(output_path)

    def get_execution_summary(self) -> Dict[str, Any]:
        """获取任务执行摘要"""
        elapsed = (self.end_time - self.start_time) if self.start_time and self.end_time else 0
        return {
            'task': self.task_name,
            'execution_time': elapsed,
            'success': self.execution_result.get('success', False),
            'exit_code': self.execution_result.get('exit_code'),
        }
