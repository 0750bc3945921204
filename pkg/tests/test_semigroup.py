"""
半群数据模型测试
"""

import unittest

from src.core.exceptions import ExponentOverflow, SpecFormatError
from src.core.semigroup import MAX_EXPONENT, Element, GeneratorId, SemigroupSpec, checked_add, checked_mul


FOLD_PRODUCTS = [('a', 'b', 'a', 2), ('b', 'a', 'a', 2)]


class TestElement(unittest.TestCase):
    """元素测试"""

    def setUp(self):
        self.a = GeneratorId(0, 'a')
        self.b = GeneratorId(1, 'b')

    def test_exponent_must_be_positive(self):
        """测试指数必须为正"""
        with self.assertRaises(ValueError):
            Element(self.a, 0)

    def test_exponent_overflow(self):
        """测试指数溢出"""
        Element(self.a, MAX_EXPONENT)
        with self.assertRaises(ExponentOverflow):
            Element(self.a, MAX_EXPONENT + 1)
        with self.assertRaises(ExponentOverflow):
            checked_add(MAX_EXPONENT, 1)
        with self.assertRaises(ExponentOverflow):
            checked_mul(2 ** 62, 2)

    def test_ordering_follows_alphabet_then_exponent(self):
        """测试排序：先按生成元下标，再按指数"""
        elements = [Element(self.b, 1), Element(self.a, 3), Element(self.a, 1)]
        self.assertEqual(sorted(elements), [Element(self.a, 1), Element(self.a, 3), Element(self.b, 1)])

    def test_generator_identity_ignores_name(self):
        """生成元相等只看下标"""
        self.assertEqual(GeneratorId(0, 'a'), GeneratorId(0, 'x'))
        self.assertEqual(hash(GeneratorId(0, 'a')), hash(GeneratorId(0, 'x')))

    def test_str(self):
        self.assertEqual(str(Element(self.b, 7)), "b^7")
        self.assertEqual(Element(self.b, 7).as_pair(), ('b', 7))


class TestSemigroupSpec(unittest.TestCase):
    """半群规格测试"""

    def test_from_products(self):
        """测试由乘积记录构造规格"""
        spec = SemigroupSpec.from_products(['a', 'b'], FOLD_PRODUCTS)

        self.assertEqual([g.name for g in spec.alphabet], ['a', 'b'])
        self.assertEqual(spec.lookup(spec.generator('a'), spec.generator('b')), spec.element('a', 2))
        self.assertEqual(spec.product_records(), FOLD_PRODUCTS)
        self.assertEqual(spec.encoding(), ((0, 2), (0, 2)))

    def test_ordered_pairs_include_diagonal(self):
        spec = SemigroupSpec.from_products(['a', 'b'], FOLD_PRODUCTS)
        pairs = [(x.name, y.name) for x, y in spec.ordered_pairs()]
        self.assertEqual(pairs, [('a', 'a'), ('a', 'b'), ('b', 'a'), ('b', 'b')])

    def test_single_generator(self):
        """单个生成元的规格没有乘法表条目"""
        spec = SemigroupSpec.from_products(['a'], [])
        self.assertEqual(len(spec.table), 0)
        self.assertEqual(spec.generators_as_elements(), [spec.element('a')])

    def test_missing_pair_rejected(self):
        """测试乘法表缺项"""
        with self.assertRaises(SpecFormatError):
            SemigroupSpec.from_products(['a', 'b'], FOLD_PRODUCTS[:1])

    def test_duplicate_pair_rejected(self):
        with self.assertRaises(SpecFormatError):
            SemigroupSpec.from_products(['a', 'b'], FOLD_PRODUCTS + [('a', 'b', 'b', 1)])

    def test_same_generator_pair_rejected(self):
        with self.assertRaises(SpecFormatError):
            SemigroupSpec.from_products(['a', 'b'], FOLD_PRODUCTS + [('a', 'a', 'a', 2)])

    def test_unknown_generator_rejected(self):
        with self.assertRaises(SpecFormatError):
            SemigroupSpec.from_products(['a', 'b'], [('a', 'b', 'c', 1), ('b', 'a', 'a', 1)])

    def test_unhashable_name_rejected(self):
        """名称字段是列表时报告格式错误而不是 TypeError"""
        with self.assertRaises(SpecFormatError):
            SemigroupSpec.from_products(['a', 'b'], [(['a'], 'b', 'a', 1), ('b', 'a', 'a', 1)])

    def test_duplicate_and_blank_names_rejected(self):
        with self.assertRaises(SpecFormatError):
            SemigroupSpec.from_products(['a', 'a'], [])
        with self.assertRaises(SpecFormatError):
            SemigroupSpec.from_products(['a b'], [])
        with self.assertRaises(SpecFormatError):
            SemigroupSpec.from_products([], [])

    def test_non_positive_exponent_rejected(self):
        with self.assertRaises(SpecFormatError):
            SemigroupSpec.from_products(['a', 'b'], [('a', 'b', 'a', 0), ('b', 'a', 'a', 1)])
        with self.assertRaises(SpecFormatError):
            SemigroupSpec.from_products(['a', 'b'], [('a', 'b', 'a', True), ('b', 'a', 'a', 1)])

    def test_equality_and_hash(self):
        """规格相等只看名称和乘法表"""
        first = SemigroupSpec.from_products(['a', 'b'], FOLD_PRODUCTS)
        second = SemigroupSpec.from_products(['a', 'b'], list(reversed(FOLD_PRODUCTS)))
        other = SemigroupSpec.from_products(['a', 'b'], [('a', 'b', 'a', 3), ('b', 'a', 'a', 3)])

        self.assertEqual(first, second)
        self.assertEqual(hash(first), hash(second))
        self.assertNotEqual(first, other)


if __name__ == '__main__':
    unittest.main()
