"""
持久性分析任务执行器 - 持久性边、凝聚结构与权重
"""

from pathlib import Path
from typing import Any, Dict, Optional, Union

from ..core.config_manager import RunConfig
from ..core.task_executor import TaskExecutor
from ..services.service_factory import ServiceFactory
from ..utils.file_utils import FileUtils
from ..utils.report_utils import ReportUtils


class AnalyzeExecutor(TaskExecutor):
    """持久性分析任务执行器"""

    task_name = 'analyze'

    def __init__(self, spec_path: Union[str, Path], config: Optional[RunConfig] = None,
                 output: Optional[str] = None, factory: Optional[ServiceFactory] = None):
        super().__init__(config, factory)
        self.spec_path = Path(spec_path)
        self.output = output

    def _execute_task(self) -> Dict[str, Any]:
        spec, digest, _ = FileUtils.load_spec(self.spec_path)
        result = self.certification_service.analyze(spec)

        document = ReportUtils.analysis_to_document(result, digest)
        text = ReportUtils.dump_yaml(document)
        output_file = self._save_output(text, self.output)

        return {
            'success': True,
            'exit_code': 0,
            'spec': spec,
            'spec_digest': digest,
            'analysis': result,
            'document': document,
            'text': text,
            'output_file': output_file,
        }
