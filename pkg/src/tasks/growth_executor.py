"""
词球计数任务执行器 - 只做广度优先枚举，不依赖证书流水线（视界不足时也可用）
"""

from pathlib import Path
from typing import Any, Dict, Optional, Union

from ..core.config_manager import RunConfig
from ..core.task_executor import TaskExecutor
from ..services.service_factory import ServiceFactory
from ..utils.file_utils import FileUtils
from ..utils.report_utils import ReportUtils


class GrowthExecutor(TaskExecutor):
    """词球计数任务执行器"""

    task_name = 'growth'

    def __init__(self, spec_path: Union[str, Path], config: Optional[RunConfig] = None,
                 max_len: Optional[int] = None, csv_path: Optional[str] = None,
                 factory: Optional[ServiceFactory] = None):
        super().__init__(config, factory)
        self.spec_path = Path(spec_path)
        self.max_len = max_len or self.config.m_max
        self.csv_path = csv_path

    def _execute_task(self) -> Dict[str, Any]:
        spec, digest, _ = FileUtils.load_spec(self.spec_path)
        self.certification_service.require_accepted(spec)

        services = self.service_factory.create_services_for_spec(spec)
        growth_service = services['growth_service']
        counts = growth_service.ball_counts(self.max_len)
        increments = growth_service.growth_increments(counts)

        csv_text = ReportUtils.table_to_csv(ReportUtils.growth_table(counts, increments))
        csv_file = self._save_output(csv_text, self.csv_path)

        return {
            'success': True,
            'exit_code': 0,
            'spec': spec,
            'spec_digest': digest,
            'counts': counts,
            'increments': increments,
            'csv_text': csv_text,
            'csv_file': csv_file,
        }
