"""
命令行接口测试
"""

import logging
import tempfile
import unittest
from pathlib import Path

import pytest
from click.testing import CliRunner

from src.cli.main import cli
from src.core.exceptions import CertificateViolation

CONFIG_DIR = str(Path(__file__).resolve().parent.parent / 'config')


def run(*args):
    return CliRunner().invoke(cli, ['--config', CONFIG_DIR, *args])


class CliTestCase(unittest.TestCase):
    """每个用例使用独立的临时目录"""

    def setUp(self):
        self.temp_dir = tempfile.TemporaryDirectory()
        self.work_dir = Path(self.temp_dir.name)

    def tearDown(self):
        # 命令行把日志处理器绑定到 CliRunner 的 stderr，用例结束后移除
        root_logger = logging.getLogger()
        for handler in root_logger.handlers[:]:
            if isinstance(handler, logging.StreamHandler) and not isinstance(handler, logging.FileHandler):
                root_logger.removeHandler(handler)
        self.temp_dir.cleanup()


class TestValidateCommand(CliTestCase):
    """validate 命令测试"""

    def test_accepted(self):
        result = run('validate', 'fold')
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn('规格通过验证', result.output)

    def test_rejected(self):
        """nonassoc 退出码为 2，并列出 (ab)a = a⁵、a(ba) = a⁴"""
        result = run('validate', 'fixtures/nonassoc.yaml')
        self.assertEqual(result.exit_code, 2)
        self.assertIn('(a^1, b^1, a^1) 左 a^5，右 a^4', result.output)

    def test_report_to_stdout(self):
        result = run('validate', 'nonassoc', '-o', '-')
        self.assertEqual(result.exit_code, 2)
        self.assertIn('accepted: false', result.output)

    def test_truncated_file(self):
        spec_file = self.work_dir / 'broken.yaml'
        spec_file.write_text("format: 1\ngenerators: [a, b\n", encoding='utf-8')
        result = run('validate', str(spec_file))
        self.assertEqual(result.exit_code, 1)

    def test_non_string_generator_name(self):
        """乘积记录中的名称是列表时退出码为 1"""
        spec_file = self.work_dir / 'listname.yaml'
        spec_file.write_text(
            "format: 1\ngenerators: [a, b]\nproducts:\n"
            "  - {left: [a], right: b, result_gen: a, result_exp: 2}\n"
            "  - {left: b, right: a, result_gen: a, result_exp: 2}\n", encoding='utf-8')
        result = run('validate', str(spec_file))
        self.assertEqual(result.exit_code, 1)

    def test_missing_file(self):
        result = run('validate', str(self.work_dir / 'absent.yaml'))
        self.assertEqual(result.exit_code, 1)

    def test_invalid_window(self):
        result = run('validate', 'fold', '--window', '1')
        self.assertEqual(result.exit_code, 1)


class TestAnalyzeCommand(CliTestCase):
    """analyze 命令测试"""

    def test_shift2_multiplier(self):
        result = run('analyze', 'shift2')
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn('b → a: M = 2/1', result.output)
        self.assertIn("{'a': 1, 'b': 2}", result.output)

    def test_minimum_horizon(self):
        """视界 2 已足够确认 fold 的周期"""
        result = run('analyze', 'fold', '--horizon', '2')
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn('b → a: M = 1/1', result.output)

    def test_rejected_spec(self):
        result = run('analyze', 'nonassoc')
        self.assertEqual(result.exit_code, 2)

    def test_single_generator(self):
        """单生成元：只有自反边，d = {a: 1}"""
        spec_file = self.work_dir / 'single.yaml'
        spec_file.write_text("format: 1\ngenerators: [a]\nproducts: []\n", encoding='utf-8')
        result = run('analyze', str(spec_file))

        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn('a → a: M = 1/1', result.output)
        self.assertIn("{'a': 1}", result.output)


class TestCertifyCommand(CliTestCase):
    """certify 命令测试"""

    def test_writes_certificate_and_table(self):
        output = self.work_dir / 'fold.cert.yaml'
        table = self.work_dir / 'fold.csv'
        result = run('certify', 'fold', '-o', str(output), '--csv', str(table))

        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn('linear-growth-certified', result.output)
        document = output.read_text(encoding='utf-8')
        self.assertIn('verdict: linear-growth-certified', document)
        self.assertIn('spec_digest: sha256:', document)
        lines = table.read_text(encoding='utf-8').splitlines()
        self.assertEqual(lines[0], 'm,count,bound')
        self.assertEqual(lines[1:4], ['1,2,2', '2,4,4', '3,6,6'])

    def test_table_to_stdout(self):
        """--csv - 把计数表写到标准输出"""
        result = run('certify', 'fold', '--csv', '-')
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(result.output.splitlines()[:4], ['m,count,bound', '1,2,2', '2,4,4', '3,6,6'])

    def test_output_independent_of_threads(self):
        """线程数不影响证书和计数表的字节内容"""
        outputs = []
        for threads in ('1', '4'):
            output = self.work_dir / f'cert-{threads}.yaml'
            table = self.work_dir / f'table-{threads}.csv'
            result = run('certify', 'cascade3', '--threads', threads, '-o', str(output), '--csv', str(table))
            self.assertEqual(result.exit_code, 0, result.output)
            outputs.append((output.read_bytes(), table.read_bytes()))
        self.assertEqual(outputs[0], outputs[1])


class TestGrowthCommand(CliTestCase):
    """growth 命令测试"""

    def test_counts(self):
        result = run('growth', 'fold', '--max-len', '5')
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(result.output.splitlines()[0], '2,4,6,8,10')

        result = run('growth', 'shift2', '--max-len', '4')
        self.assertEqual(result.output.splitlines()[0], '2,5,8,11')

        result = run('growth', 'cascade3', '--max-len', '1')
        self.assertEqual(result.output.splitlines(), ['3'])

    def test_csv_to_stdout(self):
        result = run('growth', 'shift2', '--max-len', '3', '--csv', '-')
        self.assertEqual(result.output.splitlines(), ['m,count,increment', '1,2,3', '2,5,3', '3,8,'])

    def test_frontier_cap(self):
        result = run('growth', 'fold', '--max-len', '5', '--frontier-cap', '3')
        self.assertEqual(result.exit_code, 5)

    def test_invalid_length(self):
        result = run('growth', 'fold', '--max-len', '0')
        self.assertEqual(result.exit_code, 1)


class TestFixturesCommand(CliTestCase):
    """fixtures 命令测试"""

    def test_list(self):
        result = run('fixtures', 'list')
        self.assertEqual(result.exit_code, 0)
        for name in ('fold', 'shift2', 'swap', 'cascade3', 'nonassoc'):
            self.assertIn(name, result.output)

    def test_show(self):
        result = run('fixtures', 'show', 'shift2')
        self.assertEqual(result.exit_code, 0)
        self.assertIn('result_exp: 3', result.output)

    def test_show_unknown(self):
        result = run('fixtures', 'show', 'missing')
        self.assertNotEqual(result.exit_code, 0)


class TestSearchCommand(CliTestCase):
    """search 命令测试"""

    def test_unit_exponents(self):
        result = run('search', '--size', '2', '--max-exp', '1')
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn('1 个幸存者', result.output)
        self.assertIn('ab=a^1, ba=a^1', result.output)


def test_certificate_violation_exit_code(mocker):
    """证书断言失败时退出码为 4，并输出失败的 m"""
    mocker.patch('src.cli.main.CertifyExecutor.execute',
                 side_effect=CertificateViolation("|J(3)| 超过界", m=3, witness=7))
    result = run('certify', 'fold')

    assert result.exit_code == 4
    assert 'm = 3' in result.output


@pytest.mark.parametrize('name', ['fold', 'swap', 'cascade3'])
def test_certify_to_stdout(name):
    result = run('certify', name, '-o', '-')
    assert result.exit_code == 0
    assert result.output.startswith('format: 1\n')


def test_horizon_exhausted_exit_code(mocker):
    """轨迹无法确认周期时退出码为 3，并提示增大视界"""
    mocker.patch('src.services.persistence_service.PersistenceService._detect_period',
                 return_value=(None, None))
    result = run('analyze', 'fold')

    assert result.exit_code == 3
    assert '--horizon' in result.output
