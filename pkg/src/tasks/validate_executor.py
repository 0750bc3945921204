"""
规格验证任务执行器 - 乘法表完整性、结合律窗口与指数单调性
"""

from pathlib import Path
from typing import Any, Dict, Optional, Union

from ..core.config_manager import RunConfig
from ..core.exceptions import SpecRejected
from ..core.task_executor import TaskExecutor
from ..services.service_factory import ServiceFactory
from ..utils.file_utils import FileUtils
from ..utils.report_utils import ReportUtils


class ValidateExecutor(TaskExecutor):
    """规格验证任务执行器"""

    task_name = 'validate'

    def __init__(self, spec_path: Union[str, Path], config: Optional[RunConfig] = None,
                 output: Optional[str] = None, factory: Optional[ServiceFactory] = None):
        super().__init__(config, factory)
        self.spec_path = Path(spec_path)
        self.output = output

    def _execute_task(self) -> Dict[str, Any]:
        """
        执行规格验证

        Returns:
            执行结果字典；被拒绝的规格返回退出码 2 而不是抛出异常，报告照常输出
        """
        spec, digest, _ = FileUtils.load_spec(self.spec_path)
        report = self.certification_service.validate(spec)

        document = ReportUtils.validation_report_to_document(report, digest)
        text = ReportUtils.dump_yaml(document)
        output_file = self._save_output(text, self.output)

        if not report.accepted:
            self.logger.warning(f"规格被拒绝: {report.first_witness()}")

        return {
            'success': report.accepted,
            'exit_code': 0 if report.accepted else SpecRejected.exit_code,
            'spec': spec,
            'spec_digest': digest,
            'report': report,
            'document': document,
            'text': text,
            'output_file': output_file,
        }
