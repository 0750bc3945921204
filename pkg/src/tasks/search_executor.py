"""
乘法表搜索任务执行器 - 穷举小乘法表并输出去重后的幸存者
"""

from typing import Any, Dict, Optional

from ..core.config_manager import RunConfig
from ..core.task_executor import TaskExecutor
from ..services.fixture_service import DEFAULT_SEARCH_M_MAX, DEFAULT_SEARCH_WINDOW, FixtureService
from ..services.service_factory import ServiceFactory
from ..utils.report_utils import FORMAT_VERSION, ReportUtils


class SearchExecutor(TaskExecutor):
    """乘法表搜索任务执行器"""

    task_name = 'search'

    def __init__(self, alphabet_size: int, max_result_exp: int, config: Optional[RunConfig] = None,
                 window: int = DEFAULT_SEARCH_WINDOW, m_max: int = DEFAULT_SEARCH_M_MAX,
                 output: Optional[str] = None, factory: Optional[ServiceFactory] = None):
        """
        初始化搜索任务执行器

        Args:
            alphabet_size: 生成元个数
            max_result_exp: 乘积指数上限
            config: 运行配置（线程数、深度上限、搜索上限）
            window: 结合律窗口
            m_max: 幸存者证书的最大字长
            output: 结果输出路径
            factory: 服务工厂
        """
        super().__init__(config, factory)
        self.alphabet_size = alphabet_size
        self.max_result_exp = max_result_exp
        self.window = window
        self.m_max = m_max
        self.output = output
        self.fixture_service = FixtureService(config=self.config)

    def _execute_task(self) -> Dict[str, Any]:
        survivors = self.fixture_service.search_fixtures(
            self.alphabet_size, self.max_result_exp, self.window, self.config.threads, self.m_max)

        entries = []
        for survivor in survivors:
            entry: Dict[str, Any] = {'spec': ReportUtils.spec_to_document(survivor.spec)}
            if survivor.certified:
                entry['summary'] = survivor.summary
            else:
                entry['error'] = survivor.error
            entries.append(entry)

        document = {
            'format': FORMAT_VERSION,
            'alphabet_size': self.alphabet_size,
            'max_result_exp': self.max_result_exp,
            'window': self.window,
            'candidates': self.fixture_service.candidate_count(self.alphabet_size, self.max_result_exp),
            'survivors': entries,
        }
        text = ReportUtils.dump_yaml(document)
        output_file = self._save_output(text, self.output)

        return {
            'success': True,
            'exit_code': 0,
            'survivors': survivors,
            'document': document,
            'text': text,
            'output_file': output_file,
        }
