import pytest

from raneyseq import exactmath, threshold, trees
from raneyseq.errors import (
    BudgetExceededError,
    EmptyTupleError,
    InvalidParameterError,
    UnreachableLabelError,
)
from raneyseq.threshold import ThresholdParams
from raneyseq.trees import KaryTree, TreeTuple


def seq(values, k, l):
    return threshold.validate(values, ThresholdParams(k, l, len(values)))


class TestKaryTree:
    def test_leaf(self):
        leaf = trees.trivial(3)
        assert leaf.is_leaf
        assert leaf.internal_count == 0
        assert leaf.node_count == 1

    def test_node_count(self):
        tree = trees.build_from_internal_labels(4, 16, [16, 14, 12, 7])
        assert tree.internal_count == 4
        assert tree.node_count == 4 * 4 + 1

    def test_wrong_child_count(self):
        with pytest.raises(InvalidParameterError):
            KaryTree(3, (trees.trivial(3), trees.trivial(3)))

    def test_json_round_trip(self):
        tree = trees.build_from_internal_labels(4, 16, [16, 14, 12, 7])
        assert KaryTree.from_json(4, tree.to_json()) == tree


class TestBuildFromInternalLabels:
    def test_figure_2a(self):
        tree = trees.build_from_internal_labels(4, 16, [16, 14, 12, 7])
        first, second, third, fourth = tree.children
        assert first.is_leaf and third.is_leaf
        # label 14: second child, four leaf children
        assert not second.is_leaf
        assert all(c.is_leaf for c in second.children)
        # label 12: fourth child; its first child (label 7) is internal
        assert not fourth.is_leaf
        assert not fourth.children[0].is_leaf
        assert all(c.is_leaf for c in fourth.children[0].children)
        assert all(c.is_leaf for c in fourth.children[1:])

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_single_internal_node(self, k):
        tree = trees.build_from_internal_labels(k, 10, [10])
        assert not tree.is_leaf
        assert all(c.is_leaf for c in tree.children)

    def test_second_child_internal(self):
        tree = trees.build_from_internal_labels(4, 9, [9, 7])
        assert tree.children[0].is_leaf
        assert not tree.children[1].is_leaf
        assert tree.children[2].is_leaf and tree.children[3].is_leaf

    def test_unreachable_label(self):
        with pytest.raises(UnreachableLabelError):
            trees.build_from_internal_labels(4, 16, [16, 3])

    def test_root_label_mismatch(self):
        with pytest.raises(InvalidParameterError):
            trees.build_from_internal_labels(4, 16, [15, 14])

    @pytest.mark.parametrize("n", range(4))
    def test_label_extraction_round_trip(self, n):
        # rebuilding from the extracted w-labeling is the identity
        w = 3 * n + 2
        for tree in trees.enumerate_trees(3, n):
            labels = trees.internal_labels(tree, w)
            if not labels:
                continue
            assert trees.build_from_internal_labels(3, w, labels) == tree
            rebuilt = trees.build_from_internal_labels(3, w, labels)
            assert trees.internal_labels(rebuilt, w) == labels


class TestForestAndTuple:
    def test_example4_forest(self):
        forest = trees.forest_of(seq((7, 12, 14, 16), 4, 0))
        assert len(forest) == 1
        assert forest[0].internal_count == 4

    def test_example5_forest(self):
        forest = trees.forest_of(seq((7, 9, 17, 18), 4, 2))
        assert len(forest) == 2
        assert [t.internal_count for t in forest] == [2, 2]

    @pytest.mark.parametrize("k,n", [(2, 5), (3, 5), (4, 4)])
    def test_l0_single_tree(self, k, n):
        for s in threshold.enumerate_sequences(ThresholdParams(k, 0, n)):
            forest = trees.forest_of(s)
            assert len(forest) == 1
            assert forest[0].internal_count == n

    def test_example5_tuple(self):
        t = trees.tuple_of(seq((7, 9, 17, 18), 4, 2))
        assert t.trees[0].is_leaf
        assert t.trees[1] == trees.build_from_internal_labels(4, 9, [9, 7])
        assert t.trees[2] == trees.build_from_internal_labels(4, 18, [18, 17])

    def test_example4_as_42_tuple(self):
        t = trees.tuple_of(seq((7, 12, 14, 16), 4, 2))
        assert not t.trees[0].is_leaf
        assert t.trees[1].is_leaf and t.trees[2].is_leaf

    def test_smallest_cell(self):
        t = trees.tuple_of(seq((3,), 3, 0))
        assert t.r == 1
        assert t.trees[0].internal_count == 1


class TestSequenceOfTuple:
    def test_example5_reversed(self):
        t = TreeTuple(4, (trees.trivial(4),
                          trees.build_from_internal_labels(4, 9, [9, 7]),
                          trees.build_from_internal_labels(4, 18, [18, 17])))
        assert trees.sequence_of_tuple(t, 4).values == (7, 9, 17, 18)

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_single_internal_node(self, k):
        t = TreeTuple(k, (trees.build_from_internal_labels(k, k, [k]),))
        assert trees.sequence_of_tuple(t).values == (k,)

    def test_round_trip_over_tuples(self):
        for t in trees.enumerate_tuples(3, 2, 3):
            if t.internal_total == 0:
                continue
            s = trees.sequence_of_tuple(t)
            assert trees.tuple_of(s) == t

    def test_empty_tuple_rejected(self):
        t = TreeTuple(3, (trees.trivial(3), trees.trivial(3)))
        with pytest.raises(EmptyTupleError):
            trees.sequence_of_tuple(t)

    def test_wrong_n_rejected(self):
        t = TreeTuple(3, (trees.build_from_internal_labels(3, 3, [3]),))
        with pytest.raises(InvalidParameterError):
            trees.sequence_of_tuple(t, 2)


class TestEnumeration:
    def test_ternary_two_nodes(self):
        assert len(list(trees.enumerate_trees(3, 2))) == 3

    @pytest.mark.parametrize("k", [2, 3, 5])
    def test_only_trivial(self, k):
        assert list(trees.enumerate_trees(k, 0)) == [trees.trivial(k)]

    def test_binary_catalan(self):
        assert len(list(trees.enumerate_trees(2, 4))) == 14

    def test_counts_match_fuss_catalan(self):
        for k in (2, 3, 4):
            for n in range(6):
                found = list(trees.enumerate_trees(k, n))
                assert len(found) == exactmath.fuss_catalan(k, n)
                assert len(set(found)) == len(found)

    def test_tuple_counts(self):
        assert len(list(trees.enumerate_tuples(3, 2, 2))) == 7
        assert len(list(trees.enumerate_tuples(4, 3, 0))) == 1
        assert len(list(trees.enumerate_tuples(3, 4, 2))) == \
            exactmath.raney(3, 4, 2)

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            list(trees.enumerate_trees(2, 5, budget=10))


class TestBijectionGrid:
    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_injective_surjective_roundtrip(self, k):
        for l in range(k - 1):
            for n in range(1, 5):
                params = ThresholdParams(k, l, n)
                images = set()
                for s in threshold.enumerate_sequences(params):
                    t = trees.tuple_of(s)
                    assert t.internal_total == n
                    assert trees.sequence_of_tuple(t, n) == s
                    images.add(t)
                codomain = set(trees.enumerate_tuples(k, l + 1, n))
                assert images == codomain


class TestDot:
    def test_contains_edges(self):
        tree = trees.build_from_internal_labels(3, 6, [6, 4])
        dot = trees.to_dot(tree, w=6)
        assert dot.startswith("digraph")
        assert '"6"' in dot and '"4"' in dot
        assert dot.count("->") == 6
