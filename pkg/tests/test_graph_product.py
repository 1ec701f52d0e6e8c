"""
Graph product çekirdek testleri.

Kapsam:
    - Kanonik normal form: shuffle/merge hamleleriyle karıştırılmış kelimeler aynı forma iner
    - multiply / inverse / power ve uzunluk özellikleri
    - link ve complement bileşenleri
    - cyclically_reduce ve cyclically_normalize (B(3) üzerinde kapsamlı)
    - Kelime sözdizimi ve hazır gruplar
"""

import random

import pytest

from src.enumeration import enumerate_ball
from src.graph_product import (
    GraphProduct,
    GraphProductError,
    commutes,
    complement_components,
    complete_bipartite_raag,
    create_presentation_graph,
    cycle_racg,
    cyclically_normalize,
    cyclically_reduce,
    format_element,
    inverse,
    is_cyclically_normal,
    link,
    multiply,
    normalize,
    parse_word,
    power,
)
from src.vertex_groups import infinite_cyclic

FIXTURES = ["f2", "z2", "p3", "infinite_dihedral", "pentagon", "mixed", "k22", "s3"]


# -- Helpers -----------------------------------------------------------------

def _random_letter(gp, vertex, rng):
    vg = gp.group(vertex)
    if vg.is_finite:
        return rng.choice([g for g in vg.elements() if not vg.is_identity(g)])
    return rng.choice([-2, -1, 1, 2])


def _random_word(gp, rng, length):
    return [
        (v, _random_letter(gp, v, rng))
        for v in (rng.choice(gp.vertices) for _ in range(length))
    ]


def _scramble(gp, word, rng, moves=30):
    """Grup elemanını değiştirmeyen hamleler: komşu köşe takası, hece bölme, y·y^-1 ekleme."""
    word = list(word)
    for _ in range(moves):
        move = rng.randrange(3)
        if move == 0 and len(word) >= 2:
            i = rng.randrange(len(word) - 1)
            if gp.graph.adjacent(word[i][0], word[i + 1][0]):
                word[i], word[i + 1] = word[i + 1], word[i]
        elif move == 1 and word:
            i = rng.randrange(len(word))
            v, x = word[i]
            vg = gp.group(v)
            y = _random_letter(gp, v, rng)
            word[i:i + 1] = [(v, y), (v, vg.mul(vg.inverse(y), x))]
        else:
            v = rng.choice(gp.vertices)
            y = _random_letter(gp, v, rng)
            i = rng.randrange(len(word) + 1)
            word[i:i] = [(v, y), (v, gp.group(v).inverse(y))]
    return word


# == 1. Normal form =========================================================

class TestNormalize:
    def test_free_cancellation(self, f2):
        assert normalize(f2, [("a", 1), ("a", -1), ("b", 1)]) == parse_word(f2, "b")

    def test_commuting_letters_sort(self, z2):
        assert format_element(parse_word(z2, "b a")) == "a b"

    def test_non_adjacent_order_is_kept(self, p3):
        assert format_element(parse_word(p3, "c a")) == "c a"
        assert format_element(parse_word(p3, "b a c")) == "a b c"

    def test_merge_through_commuting_syllable(self, p3):
        assert format_element(parse_word(p3, "a b a")) == "a^2 b"

    def test_finite_vertex_merge(self, mixed):
        assert format_element(parse_word(mixed, "x:1 x:1")) == "x:2"
        assert parse_word(mixed, "x^3").is_identity

    def test_identity_letters_dropped(self, mixed):
        assert normalize(mixed, [("x", 0), ("a", 0)]).is_identity

    def test_unknown_vertex(self, f2):
        with pytest.raises(GraphProductError):
            normalize(f2, [("q", 1)])

    def test_bad_letter(self, mixed):
        with pytest.raises(GraphProductError):
            normalize(mixed, [("x", 5)])

    @pytest.mark.parametrize("name", FIXTURES)
    def test_scrambled_words_share_normal_form(self, name, request):
        gp = request.getfixturevalue(name)
        rng = random.Random(7)
        for _ in range(25):
            word = _random_word(gp, rng, rng.randrange(1, 7))
            assert normalize(gp, _scramble(gp, word, rng)) == normalize(gp, word)


# == 2. Grup işlemleri ======================================================

class TestGroupOperations:
    @pytest.mark.parametrize("name", FIXTURES)
    def test_inverse_properties(self, name, request):
        gp = request.getfixturevalue(name)
        rng = random.Random(11)
        for _ in range(25):
            g = normalize(gp, _random_word(gp, rng, 5))
            assert inverse(inverse(g)) == g
            assert multiply(g, inverse(g)).is_identity
            assert inverse(g).word_length == g.word_length

    @pytest.mark.parametrize("name", FIXTURES)
    def test_length_is_subadditive_and_associative(self, name, request):
        gp = request.getfixturevalue(name)
        rng = random.Random(13)
        for _ in range(25):
            g, h, k = (normalize(gp, _random_word(gp, rng, 4)) for _ in range(3))
            assert (g * h).word_length <= g.word_length + h.word_length
            assert (g * h) * k == g * (h * k)

    def test_power(self, f2):
        g = parse_word(f2, "a b")
        assert power(g, 0).is_identity
        assert power(g, 2) == g * g
        assert power(g, -2) == inverse(g) * inverse(g)
        assert g ** 3 == g * g * g

    def test_lengths_and_support(self, mixed):
        g = parse_word(mixed, "x:1 a^-2 b")
        assert g.word_length == 4
        assert g.syllable_length == 3
        assert g.support == frozenset({"x", "a", "b"})

    def test_mixed_groups_rejected(self, f2, z2):
        with pytest.raises(GraphProductError):
            multiply(f2.identity, z2.identity)
        with pytest.raises(GraphProductError):
            commutes(f2.identity, z2.identity)

    def test_commutes(self, z2, f2, p3):
        assert commutes(parse_word(z2, "a"), parse_word(z2, "b^3"))
        assert not commutes(parse_word(f2, "a"), parse_word(f2, "b"))
        assert not commutes(parse_word(p3, "a"), parse_word(p3, "c"))
        assert commutes(parse_word(f2, "a b"), parse_word(f2, "a b a b"))


# == 3. Link ve complement bileşenleri ======================================

class TestLinkAndComponents:
    def test_link(self, p3):
        assert link(p3, {"a"}) == frozenset({"b"})
        assert link(p3, {"a", "c"}) == frozenset({"b"})
        assert link(p3, set()) == frozenset({"a", "b", "c"})

    def test_complement_components(self, p3):
        assert complement_components(p3, {"a", "b", "c"}) == [("a", "c"), ("b",)]

    def test_complete_bipartite_components(self, k22):
        assert complement_components(k22, k22.vertices) == [("u1", "u2"), ("v1", "v2")]

    def test_empty_set_rejected(self, p3):
        with pytest.raises(GraphProductError):
            complement_components(p3, set())

    def test_unknown_vertex(self, p3):
        with pytest.raises(GraphProductError):
            link(p3, {"z"})


# == 4. Cyclic reduction ve normalization ===================================

class TestCyclicReduction:
    def test_conjugate_reduces(self, f2):
        p, g_tilde = cyclically_reduce(parse_word(f2, "a^-1 b a"))
        assert format_element(p) == "a"
        assert format_element(g_tilde) == "b"

    def test_reduced_element_unchanged(self, f2):
        p, g_tilde = cyclically_reduce(parse_word(f2, "a b"))
        assert p.is_identity
        assert format_element(g_tilde) == "a b"

    def test_normalize_moves_tail_to_front(self, p3):
        g = parse_word(p3, "a c a")
        p, g_tilde = cyclically_reduce(g)
        assert p.is_identity
        p_norm, g_hat = cyclically_normalize(g_tilde)
        assert format_element(p_norm) == "a"
        assert format_element(g_hat) == "a^2 c"

    def test_normalize_rejects_unreduced(self, f2):
        with pytest.raises(GraphProductError):
            cyclically_normalize(parse_word(f2, "a^-1 b a"))

    def test_is_cyclically_normal(self, f2, z2):
        assert is_cyclically_normal(parse_word(z2, "a b"))
        assert is_cyclically_normal(parse_word(f2, "a b"))
        assert not is_cyclically_normal(parse_word(f2, "a b a"))

    @pytest.mark.parametrize("name", ["f2", "z2", "p3", "infinite_dihedral", "pentagon", "mixed"])
    def test_over_ball(self, name, request):
        gp = request.getfixturevalue(name)
        for g in enumerate_ball(gp, 3).elements():
            p, g_tilde = cyclically_reduce(g)
            assert inverse(p) * g_tilde * p == g
            assert g.word_length == 2 * p.word_length + g_tilde.word_length
            p_norm, g_hat = cyclically_normalize(g_tilde)
            assert is_cyclically_normal(g_hat)
            assert g_hat.support == g_tilde.support
            assert p_norm * g_tilde * inverse(p_norm) == g_hat

    @pytest.mark.parametrize("name", ["f2", "z2", "p3", "infinite_dihedral", "pentagon", "mixed"])
    def test_reduction_is_minimal(self, name, request):
        gp = request.getfixturevalue(name)
        index = enumerate_ball(gp, 3)
        conjugators = list(index.elements(2))
        for g in index.elements():
            _, g_tilde = cyclically_reduce(g)
            conjugates = [(c, c * g * inverse(c)) for c in conjugators]
            shortest = min(
                h.word_length for c, h in conjugates
                if g.word_length == 2 * c.word_length + h.word_length
            )
            assert shortest == g_tilde.word_length, format_element(g)

    @pytest.mark.parametrize("name", ["f2", "z2", "p3", "infinite_dihedral", "pentagon", "mixed"])
    def test_powers_of_normal_form(self, name, request):
        gp = request.getfixturevalue(name)
        for g in enumerate_ball(gp, 3).elements():
            _, g_tilde = cyclically_reduce(g)
            support = g_tilde.support
            if len(support) < 2 or len(complement_components(gp, support)) != 1:
                continue
            _, g_hat = cyclically_normalize(g_tilde)
            for gamma in range(-4, 5):
                assert power(g_hat, gamma).syllable_length == abs(gamma) * g_hat.syllable_length


# == 5. Kelime sözdizimi ve hazır gruplar ===================================

class TestWordsAndConstructors:
    def test_identity_spellings(self, f2):
        assert parse_word(f2, "").is_identity
        assert parse_word(f2, "1").is_identity
        assert format_element(f2.identity) == "1"

    def test_exponents(self, f2):
        assert format_element(parse_word(f2, "a^1 b^-1")) == "a b^-1"

    def test_finite_tokens(self, infinite_dihedral):
        assert format_element(parse_word(infinite_dihedral, "u v")) == "u:1 v:1"

    @pytest.mark.parametrize("text", ["a^", "q", "a:1", "a^x"])
    def test_parse_errors(self, f2, text):
        with pytest.raises(GraphProductError):
            parse_word(f2, text)

    def test_round_trip_on_ball(self, mixed):
        for g in enumerate_ball(mixed, 2).elements():
            assert parse_word(mixed, format_element(g)) == g

    def test_complete_bipartite(self):
        gp = complete_bipartite_raag(2)
        assert gp.vertices == ("u1", "u2", "v1", "v2")
        assert len(gp.graph.edges) == 4

    def test_pentagon(self):
        gp = cycle_racg(5)
        assert len(gp.graph.edges) == 5
        assert all(len(gp.graph.neighbours[v]) == 2 for v in gp.vertices)

    def test_duplicate_edge(self):
        with pytest.raises(GraphProductError):
            create_presentation_graph(["a", "b"], [("a", "b"), ("b", "a")])

    def test_self_loop(self):
        with pytest.raises(GraphProductError):
            create_presentation_graph(["a"], [("a", "a")])

    def test_missing_assignment(self):
        graph = create_presentation_graph(["a", "b"], [])
        with pytest.raises(GraphProductError):
            GraphProduct(graph, {"a": infinite_cyclic()})
