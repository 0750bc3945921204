"""
报告序列化与有理数工具测试
"""

import unittest
from fractions import Fraction

import yaml

from src.core.exceptions import SpecFormatError
from src.services.certification_service import CertificationService
from src.services.fixture_service import FixtureService
from src.utils.file_utils import FileUtils
from src.utils.rational_utils import RationalUtils
from src.utils.report_utils import BALL_COLUMNS, ReportUtils

FOLD_DOCUMENT = {
    'format': 1,
    'generators': ['a', 'b'],
    'products': [
        {'left': 'a', 'right': 'b', 'result_gen': 'a', 'result_exp': 2},
        {'left': 'b', 'right': 'a', 'result_gen': 'a', 'result_exp': 2},
    ],
}


class TestRationalUtils(unittest.TestCase):
    """有理数工具测试"""

    def test_pairs(self):
        self.assertEqual(RationalUtils.to_pair(Fraction(6, 4)), (3, 2))
        self.assertEqual(RationalUtils.to_pair(2), (2, 1))
        self.assertEqual(RationalUtils.from_pair(3, 2), Fraction(3, 2))
        with self.assertRaises(ZeroDivisionError):
            RationalUtils.from_pair(1, 0)

    def test_format(self):
        self.assertEqual(RationalUtils.format(Fraction(3, 2)), "3/2 (≈1.5)")
        self.assertEqual(RationalUtils.format(2), "2/1 (≈2)")

    def test_lcm_and_ceil(self):
        self.assertEqual(RationalUtils.lcm_of_denominators([Fraction(1, 2), Fraction(2, 3), 5]), 6)
        self.assertEqual(RationalUtils.lcm_of_denominators([]), 1)
        self.assertEqual(RationalUtils.ceil(Fraction(3, 2)), 2)
        self.assertEqual(RationalUtils.ceil(Fraction(4, 2)), 2)


class TestSpecDocuments(unittest.TestCase):
    """规格文档解析测试"""

    def test_parse_and_export(self):
        spec = ReportUtils.parse_spec_document(FOLD_DOCUMENT)
        self.assertEqual(ReportUtils.spec_to_document(spec), FOLD_DOCUMENT)

    def test_fixture_file_matches_document(self):
        """示例文件去掉 description 与 expected 后就是导出的规格文档"""
        fixture = FixtureService().get_fixture('fold')
        _, _, document = FileUtils.load_spec(fixture.path)
        exported = ReportUtils.spec_to_document(fixture.spec)
        self.assertEqual(exported, {k: v for k, v in document.items() if k not in ('description', 'expected')})

    def test_rejects_malformed_documents(self):
        cases = [
            ['not', 'a', 'mapping'],
            dict(FOLD_DOCUMENT, extra=1),
            {k: v for k, v in FOLD_DOCUMENT.items() if k != 'products'},
            dict(FOLD_DOCUMENT, format=2),
            dict(FOLD_DOCUMENT, generators=[]),
            dict(FOLD_DOCUMENT, generators=['a', 2]),
            dict(FOLD_DOCUMENT, products={'left': 'a'}),
            dict(FOLD_DOCUMENT, products=[{'left': 'a', 'right': 'b', 'result_gen': 'a'}]),
            dict(FOLD_DOCUMENT, products=[{'left': ['a'], 'right': 'b', 'result_gen': 'a', 'result_exp': 2},
                                          {'left': 'b', 'right': 'a', 'result_gen': 'a', 'result_exp': 2}]),
            dict(FOLD_DOCUMENT, products=[{'left': 'a', 'right': 'b', 'result_gen': {'a': 1}, 'result_exp': 2},
                                          {'left': 'b', 'right': 'a', 'result_gen': 'a', 'result_exp': 2}]),
        ]
        for document in cases:
            with self.assertRaises(SpecFormatError, msg=str(document)):
                ReportUtils.parse_spec_document(document)

    def test_invalid_yaml(self):
        with self.assertRaises(SpecFormatError):
            FileUtils.load_yaml_document(b"generators: [a, b\n")
        with self.assertRaises(SpecFormatError):
            FileUtils.load_yaml_document(b"\xff\xfe")

    def test_digest_depends_on_bytes(self):
        self.assertNotEqual(FileUtils.digest(b"format: 1\n"), FileUtils.digest(b"format: 1 \n"))
        self.assertTrue(FileUtils.digest(b"").startswith("sha256:"))


class TestCertificateDocument(unittest.TestCase):
    """证书文档与计数表测试"""

    @classmethod
    def setUpClass(cls):
        fixture = FixtureService().get_fixture('shift2')
        cls.digest = fixture.digest
        cls.certificate = CertificationService().certify(fixture.spec, 4)

    def test_document_fields(self):
        document = ReportUtils.certificate_to_document(self.certificate, self.digest)

        self.assertEqual(list(document)[:2], ['format', 'spec_digest'])
        self.assertEqual((document['L_num'], document['L_den']), (3, 2))
        self.assertEqual((document['bound_num'], document['bound_den']), (3, 1))
        self.assertEqual(document['weights'], {'a': 1, 'b': 2})
        self.assertEqual(document['sinks'], [['a']])
        self.assertEqual(document['order'], [['a'], ['b']])
        self.assertIn({'y': 'b', 'z': 'a', 'm_num': 2, 'm_den': 1,
                       'witness': {'t': 1, 'q': 1, 's': 3}}, document['edges'])

    def test_yaml_round_trip_is_stable(self):
        text = ReportUtils.dump_yaml(ReportUtils.certificate_to_document(self.certificate, self.digest))
        self.assertEqual(ReportUtils.dump_yaml(yaml.safe_load(text)), text)

    def test_ball_table(self):
        frame = ReportUtils.ball_table(self.certificate)
        self.assertEqual(list(frame.columns), BALL_COLUMNS)
        self.assertEqual(ReportUtils.table_to_csv(frame), "m,count,bound\n1,2,3\n2,5,6\n3,8,9\n4,11,12\n")


if __name__ == '__main__':
    unittest.main()
